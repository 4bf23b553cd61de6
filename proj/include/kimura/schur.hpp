#pragma once

#include <cstdint>
#include <string>

#include "kimura/partition.hpp"

namespace kimura {

// Even/odd dimensions (p|q) of a split super-object.  Serializes as "(p|q)".
struct SuperDim {
    std::int64_t even = 0;
    std::int64_t odd = 0;

    std::int64_t kim() const { return even + odd; }
    std::int64_t euler() const { return even - odd; }
    bool is_even_dimensional() const { return odd == 0; }
    bool is_odd_dimensional() const { return even == 0; }
    bool is_zero() const { return even == 0 && odd == 0; }

    std::string str() const {
        return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
    }
    static SuperDim parse(std::string_view s);

    friend bool operator==(const SuperDim& a, const SuperDim& b) {
        return a.even == b.even && a.odd == b.odd;
    }
    friend bool operator!=(const SuperDim& a, const SuperDim& b) { return !(a == b); }
};

SuperDim direct_sum(const SuperDim& a, const SuperDim& b);
SuperDim tensor(const SuperDim& a, const SuperDim& b);

struct SchurResult {
    Partition shape;
    SuperDim input;
    SuperDim output;
};

// Default enumeration budget; callers with larger shapes pass their own.
inline constexpr int kDefaultWeightLimit = 12;

// Dimensions of S_lambda(a) in the universal split model, by enumeration of
// (p,q)-hook semistandard tableaux: unprimed letters 1..p weakly increase in
// rows and strictly in columns, primed letters strictly increase in rows and
// weakly in columns, all unprimed precede all primed.  A tableau lands in the
// even part iff its primed-cell count is even.  Vanishes iff the cell
// (p+1, q+1) lies in lambda.
SuperDim schur_dims(const Partition& shape, const SuperDim& a,
                    int weight_limit = kDefaultWeightLimit);

// schur_dims together with its inputs, for reporting surfaces.
SchurResult schur_apply(const Partition& shape, const SuperDim& a,
                        int weight_limit = kDefaultWeightLimit);

// Super-dimension of S_lambda(a) by the supertrace character formula
//   sum_{mu |- n} chi_lambda(mu) (p-q)^{#parts(mu)} / z_mu,
// asserted integral; must equal schur_dims(...).euler().
std::int64_t schur_sdim_character(const Partition& shape, const SuperDim& a);

enum class PowerKind { Wedge, Sym };

// wedge^n = S_{(1,...,1)}, Sym^n = S_{(n)}; n = 0 gives the unit (1|0).
SuperDim power_dims(PowerKind kind, std::int64_t n, const SuperDim& a,
                    int weight_limit = kDefaultWeightLimit);

struct KimStats {
    std::int64_t kim_plus = 0;
    std::int64_t kim_minus = 0;
    std::int64_t kim = 0;
    std::int64_t euler = 0;
    bool is_even = false;
    bool is_odd = false;
};

// kim_plus/kim_minus are verified, not assumed: the wedge power of the even
// part and the symmetric power of the odd part are enumerated at the claimed
// maximum and at one past it.
KimStats kim_stats(const SuperDim& a);

}  // namespace kimura
