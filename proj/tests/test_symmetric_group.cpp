#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "kimura/characters.hpp"
#include "kimura/errors.hpp"
#include "kimura/group_algebra.hpp"
#include "kimura/littlewood_richardson.hpp"
#include "kimura/permutation.hpp"

using namespace kimura;

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(factorial(n)); ++r)
        out.push_back(Permutation::unrank(n, r));
    return out;
}

int fixed_points(const Permutation& sigma) {
    int fix = 0;
    for (int i = 1; i <= sigma.degree(); ++i)
        if (sigma.image(i) == i) ++fix;
    return fix;
}

// Naive convolution over Permutation keys, independent of the rank-keyed path.
std::map<std::vector<int>, Rational> naive_product(const GroupAlgebraElement& x,
                                                   const GroupAlgebraElement& y) {
    std::map<std::vector<int>, Rational> out;
    for (const auto& [rx, cx] : x.terms())
        for (const auto& [ry, cy] : y.terms()) {
            const Permutation sigma = Permutation::unrank(x.degree(), rx);
            const Permutation tau = Permutation::unrank(y.degree(), ry);
            out[sigma.compose(tau).images0()] += cx * cy;
        }
    return out;
}

GroupAlgebraElement random_sparse(int degree, int terms, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> rank_dist(0, factorial(degree) - 1);
    std::uniform_int_distribution<int> num_dist(-4, 4);
    std::uniform_int_distribution<int> den_dist(1, 3);
    GroupAlgebraElement out(degree);
    for (int i = 0; i < terms; ++i)
        out.add_term_by_rank(static_cast<std::uint64_t>(rank_dist(rng)),
                             Rational(num_dist(rng), den_dist(rng)));
    return out;
}

// Character inner product oracle for LR coefficients:
// c^lambda_{mu nu} = sum_{alpha, beta} chi_mu(alpha) chi_nu(beta)
//                    chi_lambda(alpha u beta) / (z_alpha z_beta).
std::int64_t lr_by_characters(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.empty()) return lambda == nu ? 1 : 0;
    if (nu.empty()) return lambda == mu ? 1 : 0;
    Rational total(0);
    for (const Partition& alpha : enumerate_partitions(mu.weight()))
        for (const Partition& beta : enumerate_partitions(nu.weight())) {
            std::vector<int> merged = alpha.parts();
            merged.insert(merged.end(), beta.parts().begin(), beta.parts().end());
            std::sort(merged.rbegin(), merged.rend());
            total += Rational(character(mu, alpha) * character(nu, beta) *
                              character(lambda, Partition(merged))) /
                     Rational(centralizer_order(alpha) * centralizer_order(beta));
        }
    return total.to_integer();
}

}  // namespace

TEST_CASE("permutation rank round trip and composition") {
    for (int n = 1; n <= 6; ++n) {
        const auto perms = all_permutations(n);
        CHECK(perms[0].is_identity());
        for (const Permutation& sigma : perms) {
            CHECK(Permutation::unrank(n, sigma.rank()) == sigma);
            CHECK(sigma.compose(sigma.inverse()).is_identity());
            CHECK(sigma.inverse().compose(sigma).is_identity());
            CHECK(sigma.cycle_type().weight() == n);
        }
    }
    const Permutation a({2, 3, 1});
    const Permutation b({2, 1, 3});
    CHECK(a.compose(b) == Permutation({3, 2, 1}));  // apply b first
    CHECK(Permutation({2, 3, 4, 5, 1}).cycle_type() == Partition({5}));
    CHECK(Permutation({2, 1, 4, 3, 5}).cycle_type() == Partition({2, 2, 1}));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), UsageError);
}

TEST_CASE("class sizes partition the group") {
    for (int n = 1; n <= 6; ++n) {
        std::map<Partition, std::int64_t> counted;
        for (const Permutation& sigma : all_permutations(n)) counted[sigma.cycle_type()] += 1;
        std::int64_t total = 0;
        for (const Partition& mu : enumerate_partitions(n)) {
            CHECK(class_size(mu) == counted[mu]);
            total += class_size(mu);
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("trivial and sign characters") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> column(static_cast<std::size_t>(n), 1);
        const Partition sign_shape(column);
        const Partition triv_shape({n});
        for (const Partition& mu : enumerate_partitions(n)) {
            CHECK(character(triv_shape, mu) == 1);
            const int sign = ((n - static_cast<int>(mu.rows())) % 2 == 0) ? 1 : -1;
            CHECK(character(sign_shape, mu) == sign);
        }
    }
}

TEST_CASE("character at the identity equals the dimension") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const Partition id_class(ones);
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(character(lambda, id_class) == irrep_dimension(lambda));
    }
}

TEST_CASE("standard representation trace oracle") {
    // chi_{(n-1,1)}(sigma) = #fixed points - 1, read off permutation matrices.
    CHECK(character(Partition({2, 1}), Partition({3})) == -1);
    for (int n = 3; n <= 6; ++n) {
        std::map<Partition, int> trace;
        for (const Permutation& sigma : all_permutations(n))
            trace[sigma.cycle_type()] = fixed_points(sigma) - 1;
        for (const Partition& mu : enumerate_partitions(n))
            CHECK(character(Partition({n - 1, 1}), mu) == trace[mu]);
    }
}

TEST_CASE("orthogonality relations") {
    for (int n = 1; n <= 7; ++n) {
        const auto lambdas = enumerate_partitions(n);
        // column: sum_lambda chi(mu)^2 = z_mu
        for (const Partition& mu : lambdas) {
            std::int64_t total = 0;
            for (const Partition& lambda : lambdas) {
                const std::int64_t v = character(lambda, mu);
                total += v * v;
            }
            CHECK(total == centralizer_order(mu));
        }
        // row: sum_mu |C_mu| chi_a(mu) chi_b(mu) = n! delta
        for (const Partition& a : lambdas)
            for (const Partition& b : lambdas) {
                std::int64_t total = 0;
                for (const Partition& mu : lambdas)
                    total += class_size(mu) * character(a, mu) * character(b, mu);
                CHECK(total == (a == b ? factorial(n) : 0));
            }
    }
}

TEST_CASE("character weight mismatch is an error") {
    CHECK_THROWS_AS(character(Partition({2, 1}), Partition({2})), UsageError);
}

TEST_CASE("ga_multiply identities") {
    const auto id = GroupAlgebraElement::identity(4);
    GroupAlgebraElement x(4);
    x.add_term(Permutation({2, 1, 3, 4}), Rational(3, 2));
    x.add_term(Permutation({1, 3, 2, 4}), Rational(-1, 5));
    CHECK(ga_multiply(id, x) == x);
    CHECK(ga_multiply(x, id) == x);

    // (id - tau)(id + tau) = 0 for a transposition
    GroupAlgebraElement lhs(4), rhs(4);
    lhs += id;
    lhs.add_term(Permutation({2, 1, 3, 4}), Rational(-1));
    rhs += id;
    rhs.add_term(Permutation({2, 1, 3, 4}), Rational(1));
    CHECK(ga_multiply(lhs, rhs).is_zero());

    GroupAlgebraElement other_degree(3);
    other_degree += GroupAlgebraElement::identity(3);
    CHECK_THROWS_AS(ga_multiply(x, other_degree), UsageError);
}

TEST_CASE("ga_multiply matches the naive convolution oracle") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = random_sparse(4, 6, rng);
        const auto y = random_sparse(4, 6, rng);
        const auto got = ga_multiply(x, y);
        auto want = naive_product(x, y);
        for (const auto& [rank, coeff] : got.terms()) {
            const auto images = Permutation::unrank(4, rank).images0();
            CHECK(want[images] == coeff);
            want.erase(images);
        }
        for (const auto& [images, coeff] : want) CHECK(coeff.is_zero());
    }
}

TEST_CASE("young idempotent closed forms in degree 2") {
    const auto sym = young_idempotent(Partition({2}));
    CHECK(sym.coefficient(Permutation(2)) == Rational(1, 2));
    CHECK(sym.coefficient(Permutation({2, 1})) == Rational(1, 2));
    const auto alt = young_idempotent(Partition({1, 1}));
    CHECK(alt.coefficient(Permutation(2)) == Rational(1, 2));
    CHECK(alt.coefficient(Permutation({2, 1})) == Rational(-1, 2));
    CHECK_THROWS_AS(young_idempotent(Partition{}), UsageError);
}

TEST_CASE("identity coefficient of e_lambda is dim^2/n!") {
    CHECK(young_idempotent(Partition({2, 1})).coefficient(Permutation(3)) == Rational(2, 3));
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lambda : enumerate_partitions(n)) {
            const std::int64_t d = irrep_dimension(lambda);
            CHECK(young_idempotent(lambda).coefficient(Permutation(n)) ==
                  Rational(d * d, factorial(n)));
        }
}

TEST_CASE("young idempotents are central") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 6; ++n) {
        std::uniform_int_distribution<std::int64_t> rank_dist(0, factorial(n) - 1);
        for (const Partition& lambda : enumerate_partitions(n)) {
            const auto e = young_idempotent(lambda);
            for (int trial = 0; trial < 3; ++trial) {
                GroupAlgebraElement sigma(n);
                sigma.add_term_by_rank(static_cast<std::uint64_t>(rank_dist(rng)), Rational(1));
                CHECK(ga_multiply(e, sigma) == ga_multiply(sigma, e));
            }
        }
    }
}

TEST_CASE("idempotent system verification") {
    const auto r1 = verify_idempotent_system(1);
    CHECK(r1.checks.size() == 2);  // single idem + completeness
    CHECK(r1.all_pass());

    const auto r2 = verify_idempotent_system(2);
    CHECK(r2.all_pass());

    const auto r5 = verify_idempotent_system(5);
    CHECK(r5.all_pass());
    std::size_t idem = 0, orth = 0, complete = 0;
    for (const auto& check : r5.checks) {
        if (check.kind == IdempotentCheck::Kind::Idem) ++idem;
        if (check.kind == IdempotentCheck::Kind::Orth) ++orth;
        if (check.kind == IdempotentCheck::Kind::Complete) ++complete;
    }
    CHECK(idem == 7);
    CHECK(orth == 42);  // 7*7 pairwise products, 7 of them diagonal
    CHECK(complete == 1);

    CHECK_THROWS_AS(verify_idempotent_system(0), UsageError);
    CHECK_THROWS_AS(verify_idempotent_system(8), LimitError);
    CHECK_THROWS_AS(verify_idempotent_system(5, 4), LimitError);
}

TEST_CASE("lr coefficient frozen examples") {
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition{}) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition{}, Partition({2, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2}), Partition({1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({1, 1}), Partition({1})) == 1);
    CHECK(lr_coefficient(Partition({4, 2}), Partition({2, 1}), Partition({2, 1})) == 1);
    // first multiplicity-2 case
    CHECK(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
    CHECK_THROWS_AS(lr_coefficient(Partition({3}), Partition({2}), Partition({2})), UsageError);
}

TEST_CASE("lr coefficients match the character inner product oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (int m = 0; m <= n; ++m)
                for (const Partition& mu : enumerate_partitions(m))
                    for (const Partition& nu : enumerate_partitions(n - m)) {
                        const std::int64_t got = lr_coefficient(lambda, mu, nu);
                        CHECK(got == lr_by_characters(lambda, mu, nu));
                        CHECK(got == lr_coefficient(lambda, nu, mu));  // symmetry
                    }
}
