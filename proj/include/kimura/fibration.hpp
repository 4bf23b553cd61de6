#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kimura/motive.hpp"

namespace kimura {

// Abstract numeric data of a flat quadric fibration q: Q -> C of relative
// dimension d-2 with simple degenerations: the base curve, the number of
// critical values, and (for even d) the genus of the discriminant double
// cover.
struct FibrationSpec {
    int d = 0;                        // rank of the bundle; must be >= 3
    bool base_is_projective_curve = true;
    int genus = 0;                    // base genus when projective
    SuperDim base_sdim;               // base super-dimension otherwise
    std::int64_t crit_count = 0;      // #D
    std::optional<int> cover_genus;   // genus of the double cover, d even
    bool algebraically_closed = false;
    bool char_not_2 = false;
    bool projective = false;

    static FibrationSpec projective_curve(int d, int genus, std::int64_t crit_count);

    MotiveAtom base_atom(int twist = 0) const;
    std::int64_t base_kim() const;
};

enum class Level { Commutative, Noncommutative };

std::string level_name(Level level);

struct Decomposition {
    Level level = Level::Noncommutative;
    FormalMotive summands;
    std::string provenance;    // citation token for the source formula
    std::string coefficients;  // "Q", "Z", "Z[1/2]"

    // Kimura statistics; only meaningful at the commutative level.
    KimStats kim() const;
};

struct KimFormulaResult {
    std::int64_t kim = 0;
    std::string formula;  // "Thm1.1(i)" or "Thm1.1(ii)"
};

// Noncommutative-level decomposition of the fibration total space:
// d even: cover + (d-2) base copies over Z[1/2];
// d odd (needs algebraically closed, 2 invertible): critical points +
// (d-1) base copies.
Decomposition nc_decompose(const FibrationSpec& spec);

// Kimura dimension of the total-space motive:
// d even: kim(cover) + (d-2) kim(base); d odd: #D + (d-1) kim(base).
KimFormulaResult kim_fibration(const FibrationSpec& spec);

// Commutative-level decomposition.  d odd (needs projective and
// algebraically closed): the explicit expansion
// Q(-(d-1)/2)^{#D} + sum_{i=0..d-2} base(-i); its kim is cross-checked
// against the formula.  d even: the cover + (d-2) base copies, recorded as a
// direct-summand witness up to Tate twists.
Decomposition motivic_decomposition(const FibrationSpec& spec);

// Root stack of index r along a divisor: (r-1) copies of the divisor motive
// plus the ambient motive.
Decomposition root_stack_decompose(int r, const FormalMotive& ambient,
                                   const FormalMotive& divisor,
                                   Level level = Level::Noncommutative,
                                   bool smooth_asserted = true);

// Genus of a double cover with simple ramification over crit_count points:
// 2g - 1 + crit_count/2.  A standard fact the caller opts into; errors on odd
// counts and on the negative (disconnected) case.
int riemann_hurwitz_cover_genus(int genus, std::int64_t crit_count);

}  // namespace kimura
