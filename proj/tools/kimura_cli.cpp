// kimura: exact calculator for symmetric group idempotents, Schur functor
// super-dimensions, formal motives, orbit category morphisms, and the
// Kimura dimensions of quadric fibrations over curves.
//
// Every subcommand prints one JSON document to stdout.  Exit codes:
// 0 ok, 2 usage or resource-limit error, 3 missing standing hypothesis,
// 4 internal cross-check failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kimura/characters.hpp"
#include "kimura/errors.hpp"
#include "kimura/fibration.hpp"
#include "kimura/group_algebra.hpp"
#include "kimura/littlewood_richardson.hpp"
#include "kimura/motive.hpp"
#include "kimura/orbit.hpp"
#include "kimura/schur.hpp"
#include "kimura/serialize.hpp"

namespace {

using kimura::Json;

struct CommandOutput {
    std::string command;
    Json payload;
    std::vector<std::string> citations;
};

// Error carrying its machine-readable code, exit status, and (for report
// commands) the payload computed before the failure was detected.
struct CommandFailure {
    int exit_code;
    std::string code;
    std::string message;
    Json payload = nullptr;
};

int max_degree_from_env() {
    const char* env = std::getenv("KIMURA_MAX_N");
    if (env == nullptr) return kimura::kDefaultMaxDegree;
    try {
        const int v = std::stoi(env);
        if (v < 1) throw std::invalid_argument("");
        return v;
    } catch (const std::logic_error&) {
        throw kimura::UsageError("KIMURA_MAX_N must be a positive integer");
    }
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw kimura::UsageError("malformed JSON for " + what + ": " + e.what());
    }
}

struct FibrationFlags {
    int d = 0;
    std::optional<int> genus;
    std::string custom_sdim;
    std::int64_t crit = 0;
    std::optional<int> cover_genus;
    bool cover_genus_from_rh = false;
    bool alg_closed = false;
    bool char_not_2 = false;
    bool projective = false;

    kimura::FibrationSpec to_spec() const {
        kimura::FibrationSpec spec;
        spec.d = d;
        if (!custom_sdim.empty()) {
            if (genus) throw kimura::UsageError("--genus and --custom-sdim are exclusive");
            spec.base_is_projective_curve = false;
            spec.base_sdim = kimura::SuperDim::parse(custom_sdim);
        } else if (genus) {
            spec.genus = *genus;
        } else {
            throw kimura::UsageError("fibration needs --genus or --custom-sdim");
        }
        spec.crit_count = crit;
        spec.cover_genus = cover_genus;
        if (cover_genus_from_rh) {
            if (!genus)
                throw kimura::UsageError("--cover-genus-from-rh needs a --genus base");
            spec.cover_genus = kimura::riemann_hurwitz_cover_genus(*genus, crit);
        }
        spec.algebraically_closed = alg_closed;
        spec.char_not_2 = char_not_2;
        spec.projective = projective;
        return spec;
    }
};

Json run_fibration_record(const kimura::FibrationSpec& spec, std::vector<std::string>* citations) {
    Json record;
    record["spec"] = kimura::fibration_spec_to_json(spec);
    const auto formula = kimura::kim_fibration(spec);
    record["kim"] = formula.kim;
    record["formula"] = formula.formula;
    const auto nc = kimura::nc_decompose(spec);
    record["nc_decomposition"] = kimura::decomposition_to_json(nc);
    if (citations) {
        citations->push_back(formula.formula);
        citations->push_back(nc.provenance);
    }
    try {
        const auto motivic = kimura::motivic_decomposition(spec);
        record["motivic_decomposition"] = kimura::decomposition_to_json(motivic);
        if (citations) citations->push_back(motivic.provenance);
    } catch (const kimura::HypothesisError& e) {
        record["motivic_decomposition"] = nullptr;
        record["motivic_note"] = e.what();
    }
    return record;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Kimura-dimension calculus for quadric fibrations over curves"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");

    CommandOutput out;

    // partitions
    {
        auto* cmd = app.add_subcommand("partitions", "enumerate partitions of n");
        auto n = std::make_shared<int>(0);
        auto count_only = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "weight")->required();
        cmd->add_flag("--count-only", *count_only, "omit the partition list");
        cmd->callback([&out, n, count_only] {
            if (*n < 0) throw kimura::UsageError("partitions: n must be nonnegative");
            const auto all = kimura::enumerate_partitions(*n);
            out.command = "partitions";
            out.payload["n"] = *n;
            out.payload["count"] = all.size();
            if (!*count_only) {
                Json list = Json::array();
                for (const auto& p : all) list.push_back(p.str());
                out.payload["partitions"] = std::move(list);
            }
        });
    }

    // character
    {
        auto* cmd = app.add_subcommand("character", "chi_lambda on the class mu");
        auto lambda = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        cmd->add_option("--lambda", *lambda, "highest weight, e.g. \"[2,1]\"")->required();
        cmd->add_option("--mu", *mu, "cycle type, e.g. \"[3]\"")->required();
        cmd->callback([&out, lambda, mu] {
            const auto l = kimura::Partition::parse(*lambda);
            const auto m = kimura::Partition::parse(*mu);
            out.command = "character";
            out.payload["lambda"] = l.str();
            out.payload["mu"] = m.str();
            out.payload["value"] = kimura::character(l, m);
            out.payload["class_size"] = kimura::class_size(m);
        });
    }

    // idempotents
    {
        auto* cmd = app.add_subcommand("idempotents", "central Young idempotents of Q[S_n]");
        auto n = std::make_shared<int>(0);
        auto verify = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "symmetric group degree")->required();
        cmd->add_flag("--verify", *verify, "certify the full orthogonal system");
        cmd->callback([&out, n, verify] {
            out.command = "idempotents";
            const int max_n = max_degree_from_env();
            if (*n < 1) throw kimura::UsageError("idempotents: n must be at least 1");
            if (*verify) {
                const auto report = kimura::verify_idempotent_system(*n, max_n);
                out.payload = kimura::idempotent_report_to_json(report);
                if (!report.all_pass())
                    throw CommandFailure{4, "cross-check",
                                         "idempotent system verification failed", out.payload};
            } else {
                if (*n > max_n)
                    throw kimura::LimitError("idempotents: n exceeds the configured maximum " +
                                             std::to_string(max_n));
                out.payload["n"] = *n;
                Json list = Json::array();
                for (const auto& lambda : kimura::enumerate_partitions(*n)) {
                    const std::int64_t d = kimura::irrep_dimension(lambda);
                    list.push_back(Json{
                        {"lambda", lambda.str()},
                        {"dimension", d},
                        {"identity_coefficient", kimura::rational_to_json(kimura::Rational(
                                                     d * d, kimura::factorial(*n)))}});
                }
                out.payload["idempotents"] = std::move(list);
            }
        });
    }

    // lr
    {
        auto* cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
        auto lambda = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        auto nu = std::make_shared<std::string>();
        cmd->add_option("--lambda", *lambda)->required();
        cmd->add_option("--mu", *mu)->required();
        cmd->add_option("--nu", *nu)->required();
        cmd->callback([&out, lambda, mu, nu] {
            const auto l = kimura::Partition::parse(*lambda);
            const auto m = kimura::Partition::parse(*mu);
            const auto v = kimura::Partition::parse(*nu);
            out.command = "lr";
            out.payload["lambda"] = l.str();
            out.payload["mu"] = m.str();
            out.payload["nu"] = v.str();
            out.payload["coefficient"] = kimura::lr_coefficient(l, m, v);
        });
    }

    // schur
    {
        auto* cmd = app.add_subcommand("schur", "Schur functor dimensions on a super-object");
        auto shape = std::make_shared<std::string>();
        auto sdim = std::make_shared<std::vector<std::int64_t>>();
        auto weight_limit = std::make_shared<int>(kimura::kDefaultWeightLimit);
        cmd->add_option("--shape", *shape, "partition, e.g. \"[2,2]\"")->required();
        cmd->add_option("--sdim", *sdim, "even and odd dimensions p q")
            ->expected(2)
            ->required();
        cmd->add_option("--weight-limit", *weight_limit, "enumeration budget (default 12)");
        cmd->callback([&out, shape, sdim, weight_limit] {
            const auto lambda = kimura::Partition::parse(*shape);
            if ((*sdim)[0] < 0 || (*sdim)[1] < 0)
                throw kimura::UsageError("schur: dimensions must be nonnegative");
            const kimura::SuperDim a{(*sdim)[0], (*sdim)[1]};
            const kimura::SchurResult result = kimura::schur_apply(lambda, a, *weight_limit);
            out.command = "schur";
            out.payload["shape"] = result.shape.str();
            out.payload["input"] = result.input.str();
            out.payload["output"] = result.output.str();
            out.payload["vanishes"] = result.output.is_zero();
            if (lambda.weight() >= 1) {
                const std::int64_t cross = kimura::schur_sdim_character(lambda, a);
                out.payload["cross_check"] = cross;
                if (cross != result.output.euler())
                    throw CommandFailure{4, "cross-check",
                                         "tableau parity count disagrees with the supertrace",
                                         out.payload};
            } else {
                out.payload["cross_check"] = result.output.euler();
            }
        });
    }

    // kim
    {
        auto* cmd = app.add_subcommand("kim", "Kimura statistics of a super-dimension or motive");
        auto sdim = std::make_shared<std::vector<std::int64_t>>();
        auto motive = std::make_shared<std::string>();
        cmd->add_option("--sdim", *sdim, "even and odd dimensions p q")->expected(2);
        cmd->add_option("--motive", *motive, "motive as a JSON array of atoms");
        cmd->callback([&out, sdim, motive] {
            kimura::SuperDim a;
            if (!motive->empty()) {
                if (!sdim->empty())
                    throw kimura::UsageError("kim: --sdim and --motive are exclusive");
                a = kimura::sdim_of_motive(
                    kimura::motive_from_json(parse_json(*motive, "--motive")));
            } else if (sdim->size() == 2) {
                if ((*sdim)[0] < 0 || (*sdim)[1] < 0)
                    throw kimura::UsageError("kim: dimensions must be nonnegative");
                a = {(*sdim)[0], (*sdim)[1]};
            } else {
                throw kimura::UsageError("kim: pass --sdim P Q or --motive JSON");
            }
            out.command = "kim";
            out.payload = kimura::kim_stats_to_json(kimura::kim_stats(a));
            out.payload["sdim"] = a.str();
        });
    }

    // motive
    {
        auto* cmd = app.add_subcommand("motive", "evaluate a formal motive");
        auto text = std::make_shared<std::string>();
        auto twist = std::make_shared<int>(0);
        cmd->add_option("--json", *text, "JSON array of {kind, params, twist, mult}")->required();
        cmd->add_option("--twist", *twist, "apply a Tate twist before evaluating");
        cmd->callback([&out, text, twist] {
            auto m = kimura::motive_from_json(parse_json(*text, "--json"));
            if (*twist != 0) m = kimura::tate_twist(m, *twist);
            out.command = "motive";
            out.payload["atoms"] = kimura::motive_to_json(m);
            out.payload["sdim"] = kimura::sdim_of_motive(m).str();
            out.payload["kim"] = kimura::kim_stats_to_json(kimura::kim(m));
            out.payload["euler"] = kimura::euler_char(m);
        });
    }

    // orbit-compose
    {
        auto* cmd = app.add_subcommand("orbit-compose", "convolution composite g o f");
        auto f_text = std::make_shared<std::string>();
        auto g_text = std::make_shared<std::string>();
        cmd->add_option("--f", *f_text, "first morphism as {n: matrix} JSON")->required();
        cmd->add_option("--g", *g_text, "second morphism as {n: matrix} JSON")->required();
        cmd->callback([&out, f_text, g_text] {
            const auto f = kimura::orbit_morphism_from_json(parse_json(*f_text, "--f"));
            auto g_raw = kimura::orbit_morphism_from_json(parse_json(*g_text, "--g"));
            if (g_raw.domain().size() != f.codomain().size())
                throw kimura::UsageError("orbit-compose: g columns must match f rows");
            // rebuild g over f's codomain so the objects line up
            kimura::OrbitMorphism g(f.codomain(), g_raw.codomain());
            for (const auto& [n, mat] : g_raw.parts()) g.set_part(n, mat);
            out.command = "orbit-compose";
            out.payload["composition"] = kimura::orbit_morphism_to_json(kimura::compose(g, f));
        });
    }

    // unfold
    {
        auto* cmd = app.add_subcommand("unfold", "summand witness from an orbit isomorphism");
        auto f_text = std::make_shared<std::string>();
        auto g_text = std::make_shared<std::string>();
        auto window = std::make_shared<int>(1);
        cmd->add_option("--f", *f_text, "morphism a -> b as {n: matrix} JSON")->required();
        cmd->add_option("--g", *g_text, "morphism b -> a as {n: matrix} JSON")->required();
        cmd->add_option("--N", *window, "twist window, at least the support radius")->required();
        cmd->callback([&out, f_text, g_text, window] {
            const auto f = kimura::orbit_morphism_from_json(parse_json(*f_text, "--f"));
            auto g_raw = kimura::orbit_morphism_from_json(parse_json(*g_text, "--g"));
            if (g_raw.domain().size() != f.codomain().size() ||
                g_raw.codomain().size() != f.domain().size())
                throw kimura::UsageError("unfold: g must map the codomain of f back to its domain");
            kimura::OrbitMorphism g(f.codomain(), f.domain());
            for (const auto& [n, mat] : g_raw.parts()) g.set_part(n, mat);
            const auto r = kimura::unfold_summand(f, g, *window);
            out.command = "unfold";
            out.payload["N"] = *window;
            out.payload["is_summand"] = r.is_summand;
            out.payload["alpha"] = kimura::matrix_to_json(r.alpha);
            out.payload["beta"] = kimura::matrix_to_json(r.beta);
        });
    }

    // fibration
    {
        auto* cmd = app.add_subcommand("fibration", "quadric fibration Kimura dimension");
        auto flags = std::make_shared<FibrationFlags>();
        cmd->add_option("--d", flags->d, "bundle rank (relative dimension d-2)")->required();
        auto* genus_opt = cmd->add_option("--genus", "base curve genus");
        cmd->add_option("--custom-sdim", flags->custom_sdim,
                        "base super-dimension \"(p|q)\" for a non-projective base");
        cmd->add_option("--crit", flags->crit, "number of critical values #D");
        auto* cover_opt = cmd->add_option("--cover-genus", "discriminant double cover genus");
        cmd->add_flag("--cover-genus-from-rh", flags->cover_genus_from_rh,
                      "derive the cover genus by Riemann-Hurwitz (simple ramification)");
        cmd->add_flag("--alg-closed", flags->alg_closed, "base field algebraically closed");
        cmd->add_flag("--char-not-2", flags->char_not_2, "2 invertible in the base field");
        cmd->add_flag("--projective", flags->projective, "total space projective");
        genus_opt->each([flags](const std::string& v) { flags->genus = std::stoi(v); });
        cover_opt->each([flags](const std::string& v) { flags->cover_genus = std::stoi(v); });
        cmd->callback([&out, flags] {
            const auto spec = flags->to_spec();
            out.command = "fibration";
            out.payload = run_fibration_record(spec, &out.citations);
        });
    }

    // root-stack
    {
        auto* cmd = app.add_subcommand("root-stack", "root stack motive decomposition");
        auto r = std::make_shared<int>(0);
        auto ambient = std::make_shared<std::string>();
        auto divisor = std::make_shared<std::string>();
        auto level = std::make_shared<std::string>("noncommutative");
        auto unverified = std::make_shared<bool>(false);
        cmd->add_option("--r", *r, "root index")->required();
        cmd->add_option("--x", *ambient, "ambient motive JSON")->required();
        cmd->add_option("--divisor", *divisor, "divisor motive JSON")->required();
        cmd->add_option("--level", *level, "commutative|noncommutative");
        cmd->add_flag("--smoothness-unverified", *unverified,
                      "record that smoothness was not asserted");
        cmd->callback([&out, r, ambient, divisor, level, unverified] {
            kimura::Level lvl;
            if (*level == "commutative")
                lvl = kimura::Level::Commutative;
            else if (*level == "noncommutative")
                lvl = kimura::Level::Noncommutative;
            else
                throw kimura::UsageError("root-stack: level must be commutative|noncommutative");
            const auto dec = kimura::root_stack_decompose(
                *r, kimura::motive_from_json(parse_json(*ambient, "--x")),
                kimura::motive_from_json(parse_json(*divisor, "--divisor")), lvl, !*unverified);
            out.command = "root-stack";
            out.payload["r"] = *r;
            out.payload["decomposition"] = kimura::decomposition_to_json(dec);
            out.citations.push_back("Prop2.1");
        });
    }

    // batch
    {
        auto* cmd = app.add_subcommand("batch", "evaluate a JSON file of fibration specs");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "JSON array of fibration spec records")->required();
        cmd->callback([&out, path] {
            std::ifstream in(*path);
            if (!in) throw kimura::UsageError("batch: cannot open '" + *path + "'");
            const std::string text((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
            const Json specs = parse_json(text, "batch file");
            if (!specs.is_array())
                throw kimura::UsageError("batch: expected a JSON array of spec records");
            out.command = "batch";
            Json results = Json::array();
            bool all_ok = true;
            bool any_hypothesis = false;
            for (const Json& entry : specs) {
                Json record;
                try {
                    record = run_fibration_record(kimura::fibration_spec_from_json(entry),
                                                  nullptr);
                    record["status"] = "ok";
                } catch (const kimura::HypothesisError& e) {
                    record = Json{{"spec", entry},
                                  {"status", "error"},
                                  {"error", Json{{"code", "unsupported-hypothesis"},
                                                 {"message", e.what()}}}};
                    all_ok = false;
                    any_hypothesis = true;
                } catch (const std::exception& e) {
                    record = Json{{"spec", entry},
                                  {"status", "error"},
                                  {"error", Json{{"code", "usage"}, {"message", e.what()}}}};
                    all_ok = false;
                }
                results.push_back(std::move(record));
            }
            out.payload["results"] = std::move(results);
            out.payload["all_ok"] = all_ok;
            if (!all_ok)
                throw CommandFailure{any_hypothesis ? 3 : 2,
                                     any_hypothesis ? "unsupported-hypothesis" : "usage",
                                     "batch contained failing records", out.payload};
        });
    }

    auto print = [&pretty](const Json& doc) {
        std::cout << (pretty ? doc.dump(2) : doc.dump()) << '\n';
    };
    auto print_error = [&print](const std::string& command, const std::string& code,
                                const std::string& message, const Json& payload) {
        Json doc{{"status", "error"},
                 {"error", Json{{"code", code}, {"message", message}}}};
        if (!command.empty()) doc["command"] = command;
        if (!payload.is_null()) doc["payload"] = payload;
        print(doc);
        std::cerr << "error: " << message << '\n';
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error(out.command, "usage", e.what(), nullptr);
        return 2;
    } catch (const CommandFailure& f) {
        print_error(out.command, f.code, f.message, f.payload);
        return f.exit_code;
    } catch (const kimura::HypothesisError& e) {
        print_error(out.command, "unsupported-hypothesis", e.what(), nullptr);
        return 3;
    } catch (const kimura::LimitError& e) {
        print_error(out.command, "limit", e.what(), nullptr);
        return 2;
    } catch (const kimura::CrossCheckError& e) {
        print_error(out.command, "cross-check", e.what(), nullptr);
        return 4;
    } catch (const kimura::UsageError& e) {
        print_error(out.command, "usage", e.what(), nullptr);
        return 2;
    } catch (const std::overflow_error& e) {
        print_error(out.command, "overflow", e.what(), nullptr);
        return 2;
    } catch (const std::exception& e) {
        print_error(out.command, "internal", e.what(), nullptr);
        return 4;
    }

    Json doc{{"status", "ok"},
             {"command", out.command},
             {"payload", out.payload},
             {"citations", out.citations}};
    print(doc);
    return 0;
}
