#include "kimura/serialize.hpp"

#include "kimura/errors.hpp"

namespace kimura {

Json rational_to_json(const Rational& r) {
    if (r.is_integer()) return r.num();
    return r.str();
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw UsageError("expected an integer or \"a/b\" string for a rational");
}

Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw UsageError("expected a matrix as an array of arrays");
    const std::size_t rows = j.size(), cols = j[0].size();
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) throw UsageError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

Json kim_stats_to_json(const KimStats& s) {
    return Json{{"kim_plus", s.kim_plus}, {"kim_minus", s.kim_minus}, {"kim", s.kim},
                {"euler", s.euler},       {"is_even", s.is_even},     {"is_odd", s.is_odd}};
}

Json motive_to_json(const FormalMotive& m) {
    Json out = Json::array();
    for (const auto& [atom, mult] : m.atoms()) {
        Json params = Json::object();
        switch (atom.kind) {
            case MotiveAtom::Kind::Unit: break;
            case MotiveAtom::Kind::ProjCurve: params["genus"] = atom.genus; break;
            case MotiveAtom::Kind::PointSet: params["points"] = atom.points; break;
            case MotiveAtom::Kind::Custom: params["sdim"] = atom.custom.str(); break;
        }
        out.push_back(Json{{"kind", atom.kind_name()},
                           {"params", std::move(params)},
                           {"twist", atom.twist},
                           {"mult", mult}});
    }
    return out;
}

FormalMotive motive_from_json(const Json& j) {
    if (!j.is_array()) throw UsageError("expected a motive as an array of atoms");
    FormalMotive m;
    for (const Json& entry : j) {
        const std::string kind = entry.at("kind").get<std::string>();
        const int twist = entry.value("twist", 0);
        const std::int64_t mult = entry.value("mult", std::int64_t{1});
        const Json params = entry.value("params", Json::object());
        auto param = [&](const char* name) -> Json {
            if (params.contains(name)) return params.at(name);
            if (entry.contains(name)) return entry.at(name);  // flat form accepted
            throw UsageError(std::string("motive atom '") + kind + "' needs parameter '" +
                             name + "'");
        };
        MotiveAtom atom;
        if (kind == "Unit")
            atom = MotiveAtom::unit(twist);
        else if (kind == "Tate")
            atom = MotiveAtom::tate(twist);
        else if (kind == "ProjCurve")
            atom = MotiveAtom::proj_curve(param("genus").get<int>(), twist);
        else if (kind == "PointSet")
            atom = MotiveAtom::point_set(param("points").get<std::int64_t>(), twist);
        else if (kind == "Custom")
            atom = MotiveAtom::custom_object(SuperDim::parse(param("sdim").get<std::string>()),
                                             twist);
        else
            throw UsageError("unknown motive atom kind: '" + kind + "'");
        m.add(atom, mult);
    }
    return m;
}

Json decomposition_to_json(const Decomposition& d) {
    Json out{{"level", level_name(d.level)},
             {"summands", motive_to_json(d.summands)},
             {"provenance", d.provenance},
             {"coefficients", d.coefficients}};
    if (d.level == Level::Commutative) out["kim"] = kim_stats_to_json(d.kim());
    return out;
}

Json idempotent_report_to_json(const IdempotentReport& report) {
    Json checks = Json::array();
    for (const IdempotentCheck& c : report.checks) {
        Json entry = Json::object();
        switch (c.kind) {
            case IdempotentCheck::Kind::Idem:
                entry["lambda"] = c.lambda.str();
                entry["kind"] = "idem";
                break;
            case IdempotentCheck::Kind::Orth:
                entry["lambda"] = c.lambda.str();
                entry["mu"] = c.mu->str();
                entry["kind"] = "orth";
                break;
            case IdempotentCheck::Kind::Complete:
                entry["kind"] = "complete";
                break;
        }
        entry["pass"] = c.pass;
        checks.push_back(std::move(entry));
    }
    return Json{{"n", report.n}, {"checks", std::move(checks)}, {"all_pass", report.all_pass()}};
}

Json orbit_morphism_to_json(const OrbitMorphism& f) {
    Json parts = Json::object();
    for (const auto& [n, mat] : f.parts()) parts[std::to_string(n)] = matrix_to_json(mat);
    return Json{{"rows", f.codomain().size()}, {"cols", f.domain().size()},
                {"parts", std::move(parts)}};
}

OrbitMorphism orbit_morphism_from_json(const Json& j) {
    const Json& parts = j.is_object() && j.contains("parts") ? j.at("parts") : j;
    if (!parts.is_object() || parts.empty())
        throw UsageError("expected an orbit morphism as a {n: matrix} map");
    std::map<int, RatMatrix> mats;
    std::size_t rows = 0, cols = 0;
    for (const auto& [key, value] : parts.items()) {
        int n = 0;
        try {
            n = std::stoi(key);
        } catch (const std::logic_error&) {
            throw UsageError("orbit morphism keys must be integers, got '" + key + "'");
        }
        RatMatrix m = matrix_from_json(value);
        if (rows == 0 && cols == 0) {
            rows = m.rows();
            cols = m.cols();
        } else if (m.rows() != rows || m.cols() != cols) {
            throw UsageError("orbit morphism parts must share one matrix shape");
        }
        mats.emplace(n, std::move(m));
    }
    OrbitMorphism out(GradedObject::make(cols, "a"), GradedObject::make(rows, "b"));
    for (auto& [n, m] : mats) out.set_part(n, std::move(m));
    return out;
}

FibrationSpec fibration_spec_from_json(const Json& j) {
    FibrationSpec spec;
    spec.d = j.at("d").get<int>();
    if (j.contains("custom_sdim")) {
        spec.base_is_projective_curve = false;
        spec.base_sdim = SuperDim::parse(j.at("custom_sdim").get<std::string>());
    } else if (j.contains("genus")) {
        spec.genus = j.at("genus").get<int>();
    } else {
        throw UsageError("fibration spec needs 'genus' or 'custom_sdim'");
    }
    spec.crit_count = j.value("crit", std::int64_t{0});
    if (j.contains("cover_genus")) spec.cover_genus = j.at("cover_genus").get<int>();
    spec.algebraically_closed = j.value("algebraically_closed", false);
    spec.char_not_2 = j.value("char_not_2", false);
    spec.projective = j.value("projective", false);
    return spec;
}

Json fibration_spec_to_json(const FibrationSpec& spec) {
    Json out{{"d", spec.d},
             {"crit", spec.crit_count},
             {"algebraically_closed", spec.algebraically_closed},
             {"char_not_2", spec.char_not_2},
             {"projective", spec.projective}};
    if (spec.base_is_projective_curve)
        out["genus"] = spec.genus;
    else
        out["custom_sdim"] = spec.base_sdim.str();
    if (spec.cover_genus) out["cover_genus"] = *spec.cover_genus;
    return out;
}

}  // namespace kimura
