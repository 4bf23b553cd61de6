#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kimura/characters.hpp"
#include "kimura/errors.hpp"
#include "kimura/fibration.hpp"
#include "kimura/group_algebra.hpp"
#include "kimura/littlewood_richardson.hpp"
#include "kimura/motive.hpp"
#include "kimura/orbit.hpp"
#include "kimura/schur.hpp"
#include "kimura/serialize.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const kimura::Json& j) {
    switch (j.type()) {
        case kimura::Json::value_t::null: return py::none();
        case kimura::Json::value_t::boolean: return py::bool_(j.get<bool>());
        case kimura::Json::value_t::number_integer:
        case kimura::Json::value_t::number_unsigned:
            return py::int_(j.get<std::int64_t>());
        case kimura::Json::value_t::number_float: return py::float_(j.get<double>());
        case kimura::Json::value_t::string: return py::str(j.get<std::string>());
        case kimura::Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case kimura::Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

kimura::Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        kimura::Json out = kimura::Json::object();
        for (const auto& item : obj.cast<py::dict>())
            out[py::str(item.first).cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        kimura::Json out = kimura::Json::array();
        for (const auto& item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw kimura::UsageError("cannot convert python object to JSON");
}

kimura::Partition parts(const std::vector<int>& p) { return kimura::Partition(p); }

kimura::SuperDim sdim(const std::pair<std::int64_t, std::int64_t>& a) {
    if (a.first < 0 || a.second < 0)
        throw kimura::UsageError("super-dimensions must be nonnegative");
    return {a.first, a.second};
}

kimura::FormalMotive motive_arg(const py::object& atoms) {
    return kimura::motive_from_json(py_to_json(atoms));
}

kimura::OrbitMorphism morphism_arg(const py::object& parts_map) {
    return kimura::orbit_morphism_from_json(py_to_json(parts_map));
}

kimura::FibrationSpec spec_arg(int d, const py::object& genus, const py::object& custom_sdim,
                               std::int64_t crit, const py::object& cover_genus,
                               bool algebraically_closed, bool char_not_2, bool projective) {
    kimura::FibrationSpec spec;
    spec.d = d;
    if (!custom_sdim.is_none()) {
        spec.base_is_projective_curve = false;
        spec.base_sdim = sdim(custom_sdim.cast<std::pair<std::int64_t, std::int64_t>>());
    } else if (!genus.is_none()) {
        spec.genus = genus.cast<int>();
    } else {
        throw kimura::UsageError("fibration needs genus= or custom_sdim=");
    }
    spec.crit_count = crit;
    if (!cover_genus.is_none()) spec.cover_genus = cover_genus.cast<int>();
    spec.algebraically_closed = algebraically_closed;
    spec.char_not_2 = char_not_2;
    spec.projective = projective;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_kimura, m) {
    m.doc() = "Exact Kimura-dimension calculus: symmetric group idempotents, Schur "
              "functor super-dimensions, formal motives, orbit categories, and "
              "quadric fibration decompositions.";

    py::register_exception<kimura::UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<kimura::LimitError>(m, "LimitError", PyExc_RuntimeError);
    py::register_exception<kimura::HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);
    py::register_exception<kimura::CrossCheckError>(m, "CrossCheckError", PyExc_AssertionError);

    // partitions
    m.def("partitions", [](int n) {
        py::list out;
        for (const auto& p : kimura::enumerate_partitions(n)) out.append(p.parts());
        return out;
    }, py::arg("n"), "All partitions of n in lexicographically decreasing order.");
    m.def("conjugate", [](const std::vector<int>& p) { return parts(p).conjugate().parts(); },
          py::arg("partition"));
    m.def("irrep_dimension",
          [](const std::vector<int>& p) { return kimura::irrep_dimension(parts(p)); },
          py::arg("partition"));
    m.def("fits_hook",
          [](const std::vector<int>& p, std::int64_t rows, std::int64_t cols) {
              return kimura::fits_hook(parts(p), rows, cols);
          },
          py::arg("partition"), py::arg("p"), py::arg("q"));
    m.def("ssyt_count",
          [](const std::vector<int>& p, std::int64_t letters) {
              return kimura::ssyt_count(parts(p), letters);
          },
          py::arg("shape"), py::arg("letters"));

    // symmetric group
    m.def("character",
          [](const std::vector<int>& l, const std::vector<int>& mu) {
              return kimura::character(parts(l), parts(mu));
          },
          py::arg("lam"), py::arg("mu"), "Irreducible character on a cycle type.");
    m.def("class_size",
          [](const std::vector<int>& mu) { return kimura::class_size(parts(mu)); },
          py::arg("mu"));
    m.def("lr_coefficient",
          [](const std::vector<int>& l, const std::vector<int>& mu, const std::vector<int>& nu) {
              return kimura::lr_coefficient(parts(l), parts(mu), parts(nu));
          },
          py::arg("lam"), py::arg("mu"), py::arg("nu"));
    m.def("young_idempotent",
          [](const std::vector<int>& l, int max_degree) {
              py::list out;
              const auto e = kimura::young_idempotent(parts(l), max_degree);
              for (const auto& [rank, coeff] : e.terms()) {
                  const auto sigma = kimura::Permutation::unrank(e.degree(), rank);
                  std::vector<int> images;
                  for (int i = 1; i <= e.degree(); ++i) images.push_back(sigma.image(i));
                  out.append(py::make_tuple(images, coeff.str()));
              }
              return out;
          },
          py::arg("lam"), py::arg("max_degree") = kimura::kDefaultMaxDegree,
          "Terms of e_lambda as (one-line images, rational string) pairs.");
    m.def("verify_idempotents",
          [](int n, int max_degree) {
              return json_to_py(
                  kimura::idempotent_report_to_json(kimura::verify_idempotent_system(n, max_degree)));
          },
          py::arg("n"), py::arg("max_degree") = kimura::kDefaultMaxDegree,
          "Exact certification of the central idempotent system of Q[S_n].");

    // schur calculus
    m.def("schur_dims",
          [](const std::vector<int>& shape, std::pair<std::int64_t, std::int64_t> a,
             int weight_limit) {
              const auto d = kimura::schur_dims(parts(shape), sdim(a), weight_limit);
              return std::make_pair(d.even, d.odd);
          },
          py::arg("shape"), py::arg("sdim"), py::arg("weight_limit") = kimura::kDefaultWeightLimit,
          "Even/odd dimensions of S_shape on a split super-object (p|q).");
    m.def("schur_sdim",
          [](const std::vector<int>& shape, std::pair<std::int64_t, std::int64_t> a) {
              return kimura::schur_sdim_character(parts(shape), sdim(a));
          },
          py::arg("shape"), py::arg("sdim"),
          "Super-dimension of S_shape by the supertrace character formula.");
    m.def("power_dims",
          [](const std::string& kind, std::int64_t n, std::pair<std::int64_t, std::int64_t> a,
             int weight_limit) {
              kimura::PowerKind k;
              if (kind == "wedge")
                  k = kimura::PowerKind::Wedge;
              else if (kind == "sym")
                  k = kimura::PowerKind::Sym;
              else
                  throw kimura::UsageError("power kind must be 'wedge' or 'sym'");
              const auto d = kimura::power_dims(k, n, sdim(a), weight_limit);
              return std::make_pair(d.even, d.odd);
          },
          py::arg("kind"), py::arg("n"), py::arg("sdim"),
          py::arg("weight_limit") = kimura::kDefaultWeightLimit);
    m.def("kim_stats",
          [](std::pair<std::int64_t, std::int64_t> a) {
              return json_to_py(kimura::kim_stats_to_json(kimura::kim_stats(sdim(a))));
          },
          py::arg("sdim"));
    m.def("tensor",
          [](std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b) {
              const auto t = kimura::tensor(sdim(a), sdim(b));
              return std::make_pair(t.even, t.odd);
          },
          py::arg("a"), py::arg("b"));
    m.def("direct_sum",
          [](std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b) {
              const auto s = kimura::direct_sum(sdim(a), sdim(b));
              return std::make_pair(s.even, s.odd);
          },
          py::arg("a"), py::arg("b"));

    // motives (atoms travel as lists of dicts, the JSON wire format)
    m.def("motive_sdim",
          [](const py::object& atoms) {
              const auto s = kimura::sdim_of_motive(motive_arg(atoms));
              return std::make_pair(s.even, s.odd);
          },
          py::arg("atoms"));
    m.def("motive_kim",
          [](const py::object& atoms) {
              return json_to_py(kimura::kim_stats_to_json(kimura::kim(motive_arg(atoms))));
          },
          py::arg("atoms"));
    m.def("euler_char",
          [](const py::object& atoms) { return kimura::euler_char(motive_arg(atoms)); },
          py::arg("atoms"));
    m.def("tate_twist",
          [](const py::object& atoms, int t) {
              return json_to_py(kimura::motive_to_json(kimura::tate_twist(motive_arg(atoms), t)));
          },
          py::arg("atoms"), py::arg("t"));
    m.def("normalize_motive",
          [](const py::object& atoms) {
              return json_to_py(kimura::motive_to_json(motive_arg(atoms)));
          },
          py::arg("atoms"), "Multiset normal form of a motive given as atom dicts.");

    // orbit category
    m.def("orbit_compose",
          [](const py::object& g, const py::object& f) {
              const auto fm = morphism_arg(f);
              auto g_raw = morphism_arg(g);
              if (g_raw.domain().size() != fm.codomain().size())
                  throw kimura::UsageError("orbit_compose: g columns must match f rows");
              kimura::OrbitMorphism gm(fm.codomain(), g_raw.codomain());
              for (const auto& [n, mat] : g_raw.parts()) gm.set_part(n, mat);
              return json_to_py(kimura::orbit_morphism_to_json(kimura::compose(gm, fm)));
          },
          py::arg("g"), py::arg("f"), "Convolution composite g o f of {n: matrix} maps.");
    m.def("unfold_summand",
          [](const py::object& f, const py::object& g, int n_window) {
              const auto fm = morphism_arg(f);
              auto g_raw = morphism_arg(g);
              if (g_raw.domain().size() != fm.codomain().size() ||
                  g_raw.codomain().size() != fm.domain().size())
                  throw kimura::UsageError(
                      "unfold_summand: g must map the codomain of f back to its domain");
              kimura::OrbitMorphism gm(fm.codomain(), fm.domain());
              for (const auto& [n, mat] : g_raw.parts()) gm.set_part(n, mat);
              const auto r = kimura::unfold_summand(fm, gm, n_window);
              py::dict out;
              out["is_summand"] = r.is_summand;
              out["alpha"] = json_to_py(kimura::matrix_to_json(r.alpha));
              out["beta"] = json_to_py(kimura::matrix_to_json(r.beta));
              return out;
          },
          py::arg("f"), py::arg("g"), py::arg("N"));

    // fibration calculator
    const auto spec_args = [](auto&& fn) { return fn; };
    m.def("kim_fibration",
          spec_args([](int d, const py::object& genus, const py::object& custom_sdim,
                       std::int64_t crit, const py::object& cover_genus, bool algebraically_closed,
                       bool char_not_2, bool projective) {
              const auto r = kimura::kim_fibration(spec_arg(d, genus, custom_sdim, crit,
                                                            cover_genus, algebraically_closed,
                                                            char_not_2, projective));
              py::dict out;
              out["kim"] = r.kim;
              out["formula"] = r.formula;
              return out;
          }),
          py::arg("d"), py::arg("genus") = py::none(), py::arg("custom_sdim") = py::none(),
          py::arg("crit") = 0, py::arg("cover_genus") = py::none(),
          py::arg("algebraically_closed") = false, py::arg("char_not_2") = false,
          py::arg("projective") = false);
    m.def("nc_decompose",
          spec_args([](int d, const py::object& genus, const py::object& custom_sdim,
                       std::int64_t crit, const py::object& cover_genus, bool algebraically_closed,
                       bool char_not_2, bool projective) {
              return json_to_py(kimura::decomposition_to_json(
                  kimura::nc_decompose(spec_arg(d, genus, custom_sdim, crit, cover_genus,
                                                algebraically_closed, char_not_2, projective))));
          }),
          py::arg("d"), py::arg("genus") = py::none(), py::arg("custom_sdim") = py::none(),
          py::arg("crit") = 0, py::arg("cover_genus") = py::none(),
          py::arg("algebraically_closed") = false, py::arg("char_not_2") = false,
          py::arg("projective") = false);
    m.def("motivic_decomposition",
          spec_args([](int d, const py::object& genus, const py::object& custom_sdim,
                       std::int64_t crit, const py::object& cover_genus, bool algebraically_closed,
                       bool char_not_2, bool projective) {
              return json_to_py(kimura::decomposition_to_json(kimura::motivic_decomposition(
                  spec_arg(d, genus, custom_sdim, crit, cover_genus, algebraically_closed,
                           char_not_2, projective))));
          }),
          py::arg("d"), py::arg("genus") = py::none(), py::arg("custom_sdim") = py::none(),
          py::arg("crit") = 0, py::arg("cover_genus") = py::none(),
          py::arg("algebraically_closed") = false, py::arg("char_not_2") = false,
          py::arg("projective") = false);
    m.def("root_stack",
          [](int r, const py::object& ambient, const py::object& divisor,
             const std::string& level, bool smooth_asserted) {
              kimura::Level lvl;
              if (level == "commutative")
                  lvl = kimura::Level::Commutative;
              else if (level == "noncommutative")
                  lvl = kimura::Level::Noncommutative;
              else
                  throw kimura::UsageError("level must be 'commutative' or 'noncommutative'");
              return json_to_py(kimura::decomposition_to_json(kimura::root_stack_decompose(
                  r, motive_arg(ambient), motive_arg(divisor), lvl, smooth_asserted)));
          },
          py::arg("r"), py::arg("ambient"), py::arg("divisor"),
          py::arg("level") = "noncommutative", py::arg("smooth_asserted") = true);
    m.def("riemann_hurwitz_cover_genus", &kimura::riemann_hurwitz_cover_genus, py::arg("genus"),
          py::arg("crit_count"));

    m.attr("DEFAULT_MAX_DEGREE") = kimura::kDefaultMaxDegree;
    m.attr("DEFAULT_WEIGHT_LIMIT") = kimura::kDefaultWeightLimit;
#ifdef KIMURA_VERSION
    m.attr("__version__") = KIMURA_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
