#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kimura/schur.hpp"

namespace kimura {

// Twisted atom of a formal direct-sum decomposition.  Twist t means
// tensoring by the Tate object Q(1)[2] t times; twisting never changes the
// super-dimension.  A "Tate" input atom with twist t normalizes to
// Unit with twist t+1, so equal objects always compare equal.
struct MotiveAtom {
    enum class Kind { Unit, ProjCurve, PointSet, Custom };

    Kind kind = Kind::Unit;
    int genus = 0;        // ProjCurve
    std::int64_t points = 0;  // PointSet
    SuperDim custom;      // Custom
    int twist = 0;

    static MotiveAtom unit(int twist = 0);
    static MotiveAtom tate(int twist = 0);  // returns unit(twist + 1)
    static MotiveAtom proj_curve(int genus, int twist = 0);
    static MotiveAtom point_set(std::int64_t points, int twist = 0);
    static MotiveAtom custom_object(SuperDim sdim, int twist = 0);

    SuperDim sdim() const;
    std::string kind_name() const;

    friend bool operator==(const MotiveAtom& a, const MotiveAtom& b);
    friend bool operator<(const MotiveAtom& a, const MotiveAtom& b);
};

// Multiset of atoms in normal form: sorted, equal atoms merged,
// multiplicities positive.
class FormalMotive {
public:
    FormalMotive() = default;

    void add(const MotiveAtom& atom, std::int64_t multiplicity = 1);
    const std::vector<std::pair<MotiveAtom, std::int64_t>>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    std::int64_t atom_count() const;  // total multiplicity

    friend FormalMotive operator+(const FormalMotive& a, const FormalMotive& b);
    friend bool operator==(const FormalMotive& a, const FormalMotive& b) {
        return a.atoms_ == b.atoms_;
    }

private:
    std::vector<std::pair<MotiveAtom, std::int64_t>> atoms_;
};

// Multiplicity-weighted direct sum of the atom super-dimensions.
SuperDim sdim_of_motive(const FormalMotive& m);

// Kimura statistics of the motive; additive over direct sums.
KimStats kim(const FormalMotive& m);

// Euler characteristic p - q; kim = chi(even part) - chi(odd part).
std::int64_t euler_char(const FormalMotive& m);

// Adds t to every atom twist; kim and euler are unchanged.
FormalMotive tate_twist(const FormalMotive& m, int t);

struct SodSum {
    FormalMotive sum;
    std::string provenance;  // records the component order of the decomposition
};

// A semi-orthogonal decomposition becomes a direct sum; the ordering is kept
// only as provenance.
SodSum sod_to_direct_sum(const std::vector<FormalMotive>& components,
                         const std::vector<std::string>& labels = {});

}  // namespace kimura
