#include "kimura/motive.hpp"

#include <algorithm>
#include <tuple>

#include "kimura/errors.hpp"

namespace kimura {

MotiveAtom MotiveAtom::unit(int twist) {
    MotiveAtom a;
    a.kind = Kind::Unit;
    a.twist = twist;
    return a;
}

MotiveAtom MotiveAtom::tate(int twist) { return unit(twist + 1); }

MotiveAtom MotiveAtom::proj_curve(int genus, int twist) {
    if (genus < 0) throw UsageError("proj_curve: genus must be nonnegative");
    MotiveAtom a;
    a.kind = Kind::ProjCurve;
    a.genus = genus;
    a.twist = twist;
    return a;
}

MotiveAtom MotiveAtom::point_set(std::int64_t points, int twist) {
    if (points < 1) throw UsageError("point_set: needs at least one point");
    MotiveAtom a;
    a.kind = Kind::PointSet;
    a.points = points;
    a.twist = twist;
    return a;
}

MotiveAtom MotiveAtom::custom_object(SuperDim sdim, int twist) {
    if (sdim.even < 0 || sdim.odd < 0)
        throw UsageError("custom_object: dimensions must be nonnegative");
    MotiveAtom a;
    a.kind = Kind::Custom;
    a.custom = sdim;
    a.twist = twist;
    return a;
}

SuperDim MotiveAtom::sdim() const {
    switch (kind) {
        case Kind::Unit: return {1, 0};
        case Kind::ProjCurve: return {2, 2 * static_cast<std::int64_t>(genus)};
        case Kind::PointSet: return {points, 0};
        case Kind::Custom: return custom;
    }
    throw std::logic_error("unreachable");
}

std::string MotiveAtom::kind_name() const {
    switch (kind) {
        case Kind::Unit: return "Unit";
        case Kind::ProjCurve: return "ProjCurve";
        case Kind::PointSet: return "PointSet";
        case Kind::Custom: return "Custom";
    }
    throw std::logic_error("unreachable");
}

namespace {
auto atom_key(const MotiveAtom& a) {
    return std::make_tuple(static_cast<int>(a.kind), a.genus, a.points, a.custom.even,
                           a.custom.odd, a.twist);
}
}  // namespace

bool operator==(const MotiveAtom& a, const MotiveAtom& b) { return atom_key(a) == atom_key(b); }
bool operator<(const MotiveAtom& a, const MotiveAtom& b) { return atom_key(a) < atom_key(b); }

void FormalMotive::add(const MotiveAtom& atom, std::int64_t multiplicity) {
    if (multiplicity < 1) throw UsageError("motive multiplicities must be positive");
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom,
                               [](const auto& entry, const MotiveAtom& a) { return entry.first < a; });
    if (it != atoms_.end() && it->first == atom)
        it->second += multiplicity;
    else
        atoms_.insert(it, {atom, multiplicity});
}

std::int64_t FormalMotive::atom_count() const {
    std::int64_t total = 0;
    for (const auto& [atom, mult] : atoms_) total += mult;
    return total;
}

FormalMotive operator+(const FormalMotive& a, const FormalMotive& b) {
    FormalMotive out = a;
    for (const auto& [atom, mult] : b.atoms_) out.add(atom, mult);
    return out;
}

SuperDim sdim_of_motive(const FormalMotive& m) {
    SuperDim total;
    for (const auto& [atom, mult] : m.atoms()) {
        const SuperDim s = atom.sdim();
        total.even += s.even * mult;
        total.odd += s.odd * mult;
    }
    return total;
}

KimStats kim(const FormalMotive& m) { return kim_stats(sdim_of_motive(m)); }

std::int64_t euler_char(const FormalMotive& m) { return sdim_of_motive(m).euler(); }

FormalMotive tate_twist(const FormalMotive& m, int t) {
    FormalMotive out;
    for (const auto& [atom, mult] : m.atoms()) {
        MotiveAtom twisted = atom;
        twisted.twist += t;
        out.add(twisted, mult);
    }
    return out;
}

SodSum sod_to_direct_sum(const std::vector<FormalMotive>& components,
                         const std::vector<std::string>& labels) {
    if (!labels.empty() && labels.size() != components.size())
        throw UsageError("sod_to_direct_sum: label count must match component count");
    SodSum out;
    out.provenance = "sod<";
    for (std::size_t i = 0; i < components.size(); ++i) {
        out.sum = out.sum + components[i];
        if (i) out.provenance += ',';
        out.provenance += labels.empty() ? "component" + std::to_string(i + 1) : labels[i];
    }
    out.provenance += ">";
    return out;
}

}  // namespace kimura
