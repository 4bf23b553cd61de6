#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kimura/errors.hpp"
#include "kimura/orbit.hpp"

using namespace kimura;

namespace {

RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(num(rng), den(rng));
    return m;
}

OrbitMorphism random_morphism(const GradedObject& dom, const GradedObject& cod,
                              std::mt19937& rng) {
    OrbitMorphism f(dom, cod);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int n = -2; n <= 2; ++n)
        if (coin(rng)) f.set_part(n, random_matrix(cod.size(), dom.size(), rng));
    return f;
}

}  // namespace

TEST_CASE("exact linear solver") {
    // 2x + y = 5, x - y = 1 -> x = 2, y = 1
    RatMatrix a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 1;
    a.at(1, 0) = 1; a.at(1, 1) = -1;
    std::vector<Rational> x;
    REQUIRE(solve_linear_system(a, {Rational(5), Rational(1)}, x));
    CHECK(x[0] == Rational(2));
    CHECK(x[1] == Rational(1));

    // inconsistent system
    RatMatrix b(2, 1);
    b.at(0, 0) = 1;
    b.at(1, 0) = 1;
    CHECK_FALSE(solve_linear_system(b, {Rational(0), Rational(1)}, x));
}

TEST_CASE("graded objects twist by relabeling") {
    const GradedObject a = GradedObject::make(3);
    CHECK(a.size() == 3);
    const GradedObject b = a.twisted(2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(b.components[i].twist == 2);
        CHECK(b.components[i].label == a.components[i].label);
    }
    CHECK(a.twisted(1).twisted(-1) == a);
}

TEST_CASE("composition at single supports") {
    std::mt19937 rng(5);
    const GradedObject a = GradedObject::make(2, "a");
    const GradedObject b = GradedObject::make(3, "b");
    const GradedObject c = GradedObject::make(2, "c");

    // both supported at 0: plain matrix product there
    const RatMatrix fm = random_matrix(3, 2, rng);
    const RatMatrix gm = random_matrix(2, 3, rng);
    OrbitMorphism f(a, b), g(b, c);
    f.set_part(0, fm);
    g.set_part(0, gm);
    const OrbitMorphism gf = compose(g, f);
    REQUIRE(gf.parts().size() == 1);
    CHECK(gf.part(0) == gm * fm);

    // f at {1}, g at {-1}: single convolution term lands at 0
    OrbitMorphism f1(a, b), g1(b, c);
    f1.set_part(1, fm);
    g1.set_part(-1, gm);
    const OrbitMorphism gf1 = compose(g1, f1);
    REQUIRE(gf1.parts().size() == 1);
    CHECK(gf1.part(0) == gm * fm);

    OrbitMorphism wrong(c, a);
    CHECK_THROWS_AS(compose(wrong, f), UsageError);
}

TEST_CASE("composition matches the brute force convolution") {
    std::mt19937 rng(17);
    const GradedObject a = GradedObject::make(2, "a");
    const GradedObject b = GradedObject::make(3, "b");
    const GradedObject c = GradedObject::make(2, "c");
    for (int trial = 0; trial < 50; ++trial) {
        const OrbitMorphism f = random_morphism(a, b, rng);
        const OrbitMorphism g = random_morphism(b, c, rng);
        const OrbitMorphism gf = compose(g, f);
        for (int i = -4; i <= 4; ++i) {
            RatMatrix want(c.size(), a.size());
            for (int n = -2; n <= 2; ++n) want += g.part(i - n) * f.part(n);
            CHECK(gf.part(i) == want);
        }
    }
}

TEST_CASE("composition is associative") {
    std::mt19937 rng(23);
    const GradedObject a = GradedObject::make(2, "a");
    const GradedObject b = GradedObject::make(3, "b");
    const GradedObject c = GradedObject::make(3, "c");
    const GradedObject d = GradedObject::make(2, "d");
    for (int trial = 0; trial < 100; ++trial) {
        const OrbitMorphism f = random_morphism(a, b, rng);
        const OrbitMorphism g = random_morphism(b, c, rng);
        const OrbitMorphism h = random_morphism(c, d, rng);
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    }
}

TEST_CASE("identity laws") {
    std::mt19937 rng(29);
    const GradedObject a = GradedObject::make(2, "a");
    const GradedObject b = GradedObject::make(3, "b");
    for (int trial = 0; trial < 20; ++trial) {
        const OrbitMorphism f = random_morphism(a, b, rng);
        CHECK(compose(OrbitMorphism::identity(b), f) == f);
        CHECK(compose(f, OrbitMorphism::identity(a)) == f);
    }
}

TEST_CASE("projection functor") {
    std::mt19937 rng(41);
    const GradedObject a = GradedObject::make(2, "a");
    const GradedObject b = GradedObject::make(3, "b");
    const GradedObject c = GradedObject::make(2, "c");

    CHECK(project(RatMatrix::identity(2), a, a) == OrbitMorphism::identity(a));
    OrbitMorphism zero = project(RatMatrix(3, 2), a, b);
    CHECK(zero.parts().empty());

    for (int trial = 0; trial < 30; ++trial) {
        const RatMatrix fm = random_matrix(3, 2, rng);
        const RatMatrix gm = random_matrix(2, 3, rng);
        CHECK(project(gm * fm, a, c) == compose(project(gm, b, c), project(fm, a, b)));
    }

    // additivity: project(f + g) = project(f) + project(g) blockwise
    const RatMatrix f1 = random_matrix(2, 2, rng);
    const RatMatrix f2 = random_matrix(3, 3, rng);
    RatMatrix block(5, 5);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t col = 0; col < 2; ++col) block.at(r, col) = f1.at(r, col);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t col = 0; col < 3; ++col) block.at(2 + r, 2 + col) = f2.at(r, col);
    const GradedObject ab = oplus(a, GradedObject::make(3, "b"));
    CHECK(project(block, ab, ab) ==
          oplus(project(f1, a, a), project(f2, GradedObject::make(3, "b"),
                                           GradedObject::make(3, "b"))));
}

TEST_CASE("unfold on the trivial instance") {
    const GradedObject a = GradedObject::make(2, "a");
    const OrbitMorphism id = OrbitMorphism::identity(a);
    const UnfoldResult r = unfold_summand(id, id, 1);
    CHECK(r.is_summand);
    CHECK(r.stacked.size() == 6);  // three twists of a
    // alpha is the inclusion into the n = 0 block
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t row = 0; row < 6; ++row)
            CHECK(r.alpha.at(row, c) == Rational(row == 2 + c ? 1 : 0));
}

TEST_CASE("unfold on an instance built by linear solve") {
    // a is one-dimensional, b two-dimensional; f supported at {0,1},
    // g solved from the three convolution equations of g o f = id.
    const GradedObject a = GradedObject::make(1, "a");
    const GradedObject b = GradedObject::make(2, "b");
    OrbitMorphism f(a, b);
    RatMatrix f0(2, 1), f1(2, 1);
    f0.at(0, 0) = Rational(1);
    f0.at(1, 0) = Rational(2);
    f1.at(0, 0) = Rational(3);
    f1.at(1, 0) = Rational(5);
    f.set_part(0, f0);
    f.set_part(1, f1);

    // unknowns (g_{-1} | g_0) as a row vector of length 4
    RatMatrix system(4, 4);
    std::vector<Rational> rhs(4);
    // i = -1: g_{-1} f_0 = 0
    system.at(0, 0) = f0.at(0, 0);
    system.at(0, 1) = f0.at(1, 0);
    rhs[0] = Rational(0);
    // i = 0: g_{-1} f_1 + g_0 f_0 = 1
    system.at(1, 0) = f1.at(0, 0);
    system.at(1, 1) = f1.at(1, 0);
    system.at(1, 2) = f0.at(0, 0);
    system.at(1, 3) = f0.at(1, 0);
    rhs[1] = Rational(1);
    // i = 1: g_0 f_1 = 0
    system.at(2, 2) = f1.at(0, 0);
    system.at(2, 3) = f1.at(1, 0);
    rhs[2] = Rational(0);
    // pin the free variable away from zero so g keeps both parts
    system.at(3, 3) = Rational(1);
    rhs[3] = Rational(1);

    std::vector<Rational> sol;
    REQUIRE(solve_linear_system(system, rhs, sol));

    OrbitMorphism g(b, a);
    RatMatrix gm1(1, 2), g0(1, 2);
    gm1.at(0, 0) = sol[0];
    gm1.at(0, 1) = sol[1];
    g0.at(0, 0) = sol[2];
    g0.at(0, 1) = sol[3];
    g.set_part(-1, gm1);
    g.set_part(0, g0);

    REQUIRE(compose(g, f).is_identity());
    CHECK(f.parts().size() == 2);
    CHECK(g.parts().size() == 2);

    const UnfoldResult r = unfold_summand(f, g, 1);
    CHECK(r.is_summand);
    CHECK((r.beta * r.alpha).is_identity());

    CHECK_THROWS_AS(unfold_summand(f, g, 0), UsageError);  // window below support
}

TEST_CASE("unfold rejects non-inverses") {
    const GradedObject a = GradedObject::make(2, "a");
    OrbitMorphism f = OrbitMorphism::identity(a);
    OrbitMorphism g(a, a);
    RatMatrix twice = RatMatrix::identity(2);
    twice.at(0, 0) = Rational(2);
    g.set_part(0, twice);
    CHECK_THROWS_AS(unfold_summand(f, g, 1), HypothesisError);
}
