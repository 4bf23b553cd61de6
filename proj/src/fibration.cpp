#include "kimura/fibration.hpp"

#include "kimura/errors.hpp"

namespace kimura {

namespace {

void validate(const FibrationSpec& spec) {
    if (spec.d < 3) throw UsageError("fibration: d must be at least 3");
    if (spec.crit_count < 0) throw UsageError("fibration: crit_count must be nonnegative");
    if (spec.base_is_projective_curve && spec.genus < 0)
        throw UsageError("fibration: genus must be nonnegative");
}

void require_even_cover(const FibrationSpec& spec) {
    if (!spec.cover_genus)
        throw UsageError("fibration: even d requires the discriminant double cover genus");
    if (*spec.cover_genus < 0)
        throw UsageError("fibration: cover genus must be nonnegative");
}

void require_odd_hypotheses(const FibrationSpec& spec) {
    if (!spec.algebraically_closed)
        throw HypothesisError(
            "odd-d decomposition requires an algebraically closed base field");
    if (!spec.char_not_2)
        throw HypothesisError("odd-d decomposition requires 2 to be invertible in the base field");
}

// Theorem value without re-running the hypothesis gates; callers gate first.
std::int64_t kim_value(const FibrationSpec& spec) {
    if (spec.d % 2 == 0)
        return 2 + 2 * static_cast<std::int64_t>(*spec.cover_genus) +
               (spec.d - 2) * spec.base_kim();
    return spec.crit_count + (spec.d - 1) * spec.base_kim();
}

}  // namespace

FibrationSpec FibrationSpec::projective_curve(int d, int genus, std::int64_t crit_count) {
    FibrationSpec spec;
    spec.d = d;
    spec.genus = genus;
    spec.crit_count = crit_count;
    return spec;
}

MotiveAtom FibrationSpec::base_atom(int twist) const {
    if (base_is_projective_curve) return MotiveAtom::proj_curve(genus, twist);
    return MotiveAtom::custom_object(base_sdim, twist);
}

std::int64_t FibrationSpec::base_kim() const {
    if (base_is_projective_curve) return 2 + 2 * static_cast<std::int64_t>(genus);
    return base_sdim.kim();
}

std::string level_name(Level level) {
    return level == Level::Commutative ? "commutative" : "noncommutative";
}

KimStats Decomposition::kim() const {
    if (level != Level::Commutative)
        throw UsageError("kim is only defined for commutative-level decompositions");
    return kimura::kim(summands);
}

Decomposition nc_decompose(const FibrationSpec& spec) {
    validate(spec);
    Decomposition out;
    out.level = Level::Noncommutative;
    if (spec.d % 2 == 0) {
        require_even_cover(spec);
        out.summands.add(MotiveAtom::proj_curve(*spec.cover_genus));
        out.summands.add(spec.base_atom(), spec.d - 2);
        out.coefficients = "Z[1/2]";
        out.provenance = "Prop3.1(i)";
    } else {
        require_odd_hypotheses(spec);
        if (spec.crit_count > 0) out.summands.add(MotiveAtom::point_set(spec.crit_count));
        out.summands.add(spec.base_atom(), spec.d - 1);
        out.coefficients = "Z";
        out.provenance = "Prop3.1(ii)";
    }
    return out;
}

KimFormulaResult kim_fibration(const FibrationSpec& spec) {
    validate(spec);
    KimFormulaResult out;
    if (spec.d % 2 == 0) {
        require_even_cover(spec);
        out.formula = "Thm1.1(i)";
    } else {
        require_odd_hypotheses(spec);
        out.formula = "Thm1.1(ii)";
    }
    out.kim = kim_value(spec);
    return out;
}

Decomposition motivic_decomposition(const FibrationSpec& spec) {
    validate(spec);
    Decomposition out;
    out.level = Level::Commutative;
    out.coefficients = "Q";
    if (spec.d % 2 == 1) {
        if (!spec.projective)
            throw HypothesisError("odd-d motivic expansion requires a projective fibration");
        if (!spec.algebraically_closed)
            throw HypothesisError(
                "odd-d motivic expansion requires an algebraically closed base field");
        const int tate = -(spec.d - 1) / 2;
        if (spec.crit_count > 0)
            out.summands.add(MotiveAtom::unit(tate), spec.crit_count);
        for (int i = 0; i <= spec.d - 2; ++i) out.summands.add(spec.base_atom(-i));
        out.provenance = "Rk1.2";
    } else {
        require_even_cover(spec);
        out.summands.add(MotiveAtom::proj_curve(*spec.cover_genus));
        out.summands.add(spec.base_atom(), spec.d - 2);
        out.provenance = "eq3.1:direct-summand witness up to Tate twists";
    }
    if (out.kim().kim != kim_value(spec))
        throw CrossCheckError("motivic decomposition disagrees with the kim formula");
    return out;
}

Decomposition root_stack_decompose(int r, const FormalMotive& ambient,
                                   const FormalMotive& divisor, Level level,
                                   bool smooth_asserted) {
    if (r < 1) throw UsageError("root_stack_decompose: r must be at least 1");
    Decomposition out;
    out.level = level;
    out.coefficients = "Z";
    for (int i = 1; i < r; ++i) out.summands = out.summands + divisor;
    out.summands = out.summands + ambient;
    out.provenance = std::string("Prop2.1") + (smooth_asserted ? ";smooth-asserted" : ";smoothness-unverified");
    return out;
}

int riemann_hurwitz_cover_genus(int genus, std::int64_t crit_count) {
    if (genus < 0) throw UsageError("riemann_hurwitz_cover_genus: genus must be nonnegative");
    if (crit_count < 0 || crit_count % 2 != 0)
        throw UsageError("riemann_hurwitz_cover_genus: crit_count must be even and nonnegative");
    const std::int64_t result = 2 * static_cast<std::int64_t>(genus) - 1 + crit_count / 2;
    if (result < 0)
        throw UsageError(
            "riemann_hurwitz_cover_genus: inconsistent input (no connected unramified double "
            "cover of genus 0)");
    return static_cast<int>(result);
}

}  // namespace kimura
