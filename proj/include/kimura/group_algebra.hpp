#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kimura/partition.hpp"
#include "kimura/permutation.hpp"
#include "kimura/rational.hpp"

namespace kimura {

// Default ceiling on the symmetric group degree for group algebra work.
// The CLI lets KIMURA_MAX_N override it.
inline constexpr int kDefaultMaxDegree = 7;

// Element of Q[S_n]: finite map from Lehmer ranks to nonzero exact rationals.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int degree);

    int degree() const { return degree_; }
    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Permutation& sigma) const;
    Rational coefficient_of_rank(std::uint64_t rank) const;
    void add_term(const Permutation& sigma, const Rational& c);
    void add_term_by_rank(std::uint64_t rank, const Rational& c);

    static GroupAlgebraElement identity(int degree);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator*=(const Rational& c);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a += b;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a -= b;
    }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int degree_;
    std::map<std::uint64_t, Rational> terms_;
};

// Convolution product (x*y)(tau) = sum_sigma x(sigma) y(sigma^-1 tau).
// Large full-support operands of degree <= 7 run through a dense
// integer-scaled kernel backed by a cached multiplication table.
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

// Central Young idempotent e_lambda = (dim V_lambda / n!) sum_sigma
// chi_lambda(sigma) sigma.
GroupAlgebraElement young_idempotent(const Partition& lambda, int max_degree = kDefaultMaxDegree);

struct IdempotentCheck {
    enum class Kind { Idem, Orth, Complete };
    Kind kind;
    Partition lambda;                // unset for Complete
    std::optional<Partition> mu;     // set for Orth only
    bool pass;
};

struct IdempotentReport {
    int n = 0;
    std::vector<IdempotentCheck> checks;
    bool all_pass() const;
};

// Exact certification that the e_lambda form a complete orthogonal system:
// e_lambda^2 = e_lambda, e_lambda e_mu = 0 for lambda != mu, sum = identity.
// Every product is a genuine group algebra convolution.  The dense engine
// holds a left-multiplication table of n!^2 entries, so degrees above 7 are
// refused regardless of max_degree.
IdempotentReport verify_idempotent_system(int n, int max_degree = kDefaultMaxDegree);

}  // namespace kimura
