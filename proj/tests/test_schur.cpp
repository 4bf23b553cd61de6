#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kimura/errors.hpp"
#include "kimura/littlewood_richardson.hpp"
#include "kimura/schur.hpp"

using namespace kimura;

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Total dimension through the Littlewood-Richardson factorization:
// sum_{mu,nu} c^lambda_{mu nu} N_mu(p) N_{nu'}(q).
std::int64_t total_dim_by_lr(const Partition& lambda, const SuperDim& a) {
    std::int64_t total = 0;
    const int n = lambda.weight();
    for (int m = 0; m <= n; ++m)
        for (const Partition& mu : enumerate_partitions(m))
            for (const Partition& nu : enumerate_partitions(n - m)) {
                const std::int64_t c = lr_coefficient(lambda, mu, nu);
                if (c == 0) continue;
                total += c * ssyt_count(mu, a.even) * ssyt_count(nu.conjugate(), a.odd);
            }
    return total;
}

SuperDim scaled(const SuperDim& s, std::int64_t c) { return {s.even * c, s.odd * c}; }

}  // namespace

TEST_CASE("superdim arithmetic and serialization") {
    const SuperDim a{2, 3};
    CHECK(a.kim() == 5);
    CHECK(a.euler() == -1);
    CHECK(a.str() == "(2|3)");
    CHECK(SuperDim::parse("(2|3)") == a);
    CHECK_THROWS_AS(SuperDim::parse("(2,3)"), UsageError);
    CHECK_THROWS_AS(SuperDim::parse("2|3"), UsageError);

    CHECK(direct_sum({2, 0}, {0, 4}) == SuperDim{2, 4});
    CHECK(tensor({1, 0}, a) == a);
    CHECK(tensor({0, 1}, {0, 1}) == SuperDim{1, 0});
    CHECK(tensor({2, 1}, {1, 3}) == SuperDim{2 * 1 + 1 * 3, 2 * 3 + 1 * 1});
}

TEST_CASE("schur_dims frozen examples") {
    CHECK(schur_dims(Partition{}, {5, 7}) == SuperDim{1, 0});
    CHECK(schur_dims(Partition({1}), {2, 3}) == SuperDim{2, 3});
    CHECK(schur_dims(Partition({2}), {1, 1}) == SuperDim{1, 1});
    CHECK(schur_dims(Partition({2, 2}), {1, 1}) == SuperDim{0, 0});
    // Sym^2(V0 + V1) = Sym^2 V0 + V0 x V1 + wedge^2 V1 pattern at (2|1)
    CHECK(schur_dims(Partition({2}), {2, 1}) == SuperDim{3, 2});
}

TEST_CASE("vanishing criterion matches the hook condition") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; q <= 3; ++q)
                    CHECK(schur_dims(lambda, {p, q}).is_zero() == !fits_hook(lambda, p, q));
}

TEST_CASE("supertrace character formula agrees with tableau parity counts") {
    CHECK(schur_sdim_character(Partition({2}), {1, 1}) == 0);
    CHECK(schur_sdim_character(Partition({1}), {5, 3}) == 2);
    CHECK(schur_sdim_character(Partition({1, 1, 1}), {2, 0}) == 0);

    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; q <= 3; ++q) {
                    const SuperDim dims = schur_dims(lambda, {p, q});
                    CHECK(schur_sdim_character(lambda, {p, q}) == dims.euler());
                }
}

TEST_CASE("total dimension factors through LR coefficients") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; q <= 3; ++q) {
                    const SuperDim dims = schur_dims(lambda, {p, q});
                    CHECK(dims.kim() == total_dim_by_lr(lambda, {p, q}));
                }
}

TEST_CASE("direct sum expansion through LR coefficients") {
    const std::vector<SuperDim> samples{{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}};
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (const SuperDim& a : samples)
                for (const SuperDim& b : samples) {
                    SuperDim expansion{0, 0};
                    for (int m = 0; m <= n; ++m)
                        for (const Partition& mu : enumerate_partitions(m))
                            for (const Partition& nu : enumerate_partitions(n - m)) {
                                const std::int64_t c = lr_coefficient(lambda, mu, nu);
                                if (c == 0) continue;
                                expansion = direct_sum(
                                    expansion,
                                    scaled(tensor(schur_dims(mu, a), schur_dims(nu, b)), c));
                            }
                    CHECK(schur_dims(lambda, direct_sum(a, b)) == expansion);
                }
}

TEST_CASE("power dims") {
    CHECK(power_dims(PowerKind::Wedge, 0, {3, 1}) == SuperDim{1, 0});
    CHECK(power_dims(PowerKind::Wedge, 3, {2, 0}) == SuperDim{0, 0});
    CHECK(power_dims(PowerKind::Wedge, 2, {2, 0}) == SuperDim{1, 0});
    CHECK(power_dims(PowerKind::Sym, 2, {0, 1}) == SuperDim{0, 0});

    for (int p = 0; p <= 6; ++p)
        for (int n = 0; n <= p + 1; ++n) {
            const SuperDim w = power_dims(PowerKind::Wedge, n, {p, 0}, p + 1);
            CHECK(w.even == binomial(p, n));
            CHECK(w.odd == 0);
        }
}

TEST_CASE("kim stats") {
    const KimStats zero = kim_stats({0, 0});
    CHECK(zero.kim == 0);
    CHECK(zero.is_even);
    CHECK(zero.is_odd);

    const KimStats even2 = kim_stats({2, 0});
    CHECK(even2.kim_plus == 2);
    CHECK(even2.kim == 2);
    CHECK(even2.euler == 2);
    CHECK(even2.is_even);
    CHECK_FALSE(even2.is_odd);

    const KimStats mixed = kim_stats({2, 4});
    CHECK(mixed.kim == 6);
    CHECK(mixed.euler == -2);
    CHECK_FALSE(mixed.is_even);
    CHECK_FALSE(mixed.is_odd);
}

TEST_CASE("kim additivity over direct sums") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::int64_t> dim(0, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const SuperDim a{dim(rng), dim(rng)};
        const SuperDim b{dim(rng), dim(rng)};
        CHECK(kim_stats(direct_sum(a, b)).kim == kim_stats(a).kim + kim_stats(b).kim);
    }
}

TEST_CASE("enumeration budget is an argument") {
    std::vector<int> big(13, 1);
    CHECK_THROWS_AS(schur_dims(Partition(big), {1, 1}), LimitError);
    CHECK(schur_dims(Partition(big), {13, 0}, 13).even == 1);
    CHECK_THROWS_AS(power_dims(PowerKind::Sym, 13, {1, 1}), LimitError);
}
