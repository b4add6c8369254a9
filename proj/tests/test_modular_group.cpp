#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "rsym/contfrac.hpp"
#include "rsym/modular_group.hpp"
#include "rsym/qforms.hpp"
#include "test_helpers.hpp"

using namespace rsym;
using rsym::testing::qi;

TEST_CASE("classify") {
    CHECK(classify(Mat2::T()) == MatClass::Parabolic);
    CHECK(classify(Mat2::S()) == MatClass::Elliptic);
    CHECK(classify(Mat2{2, 1, 1, 1}) == MatClass::Hyperbolic);
    CHECK(classify(Mat2::identity()) == MatClass::Scalar);
    CHECK(classify(-Mat2::identity()) == MatClass::Scalar);
    CHECK(classify(Mat2::U()) == MatClass::Elliptic);
    CHECK_THROWS_AS(classify(Mat2{2, 0, 0, 2}), InvalidMatrixError);
}

TEST_CASE("assoc_form examples") {
    CHECK(assoc_form(Mat2{2, 1, 1, 1}) == BQF{1, -1, -1});
    CHECK(assoc_form(Mat2{3, 2, 1, 1}) == BQF{1, -2, -2});
    CHECK(assoc_form(Mat2{3, 1, 2, 1}) == BQF{2, -2, -1});
    CHECK_THROWS_AS(assoc_form(Mat2::identity()), ScalarInputError);
}

TEST_CASE("fixed_points examples") {
    auto [w, wp] = fixed_points(Mat2{2, 1, 1, 1});
    CHECK(w == qi(1, 1, 5, 2));
    CHECK(wp == qi(1, -1, 5, 2));

    // Roots of X^2 - 2X - 2 by the quadratic formula: 1 +- sqrt(3).
    auto [w2, wp2] = fixed_points(Mat2{3, 2, 1, 1});
    CHECK(w2 == qi(1, 1, 3, 1));
    CHECK(wp2 == qi(1, -1, 3, 1));
    CHECK_THROWS_AS(fixed_points(Mat2::T()), NotHyperbolicError);
}

TEST_CASE("fixed_points equivariance under conjugation") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        Mat2 m = rsym::testing::random_hyperbolic(rng);
        Mat2 g = rsym::testing::random_gamma_element(rng);
        Mat2 conj = g.inverse() * m * g;
        auto [w, wp] = fixed_points(m);
        auto [cw, cwp] = fixed_points(conj);
        QuadIrr iw = std::get<QuadIrr>(mobius_apply(g.inverse(), ProjPoint{w}));
        QuadIrr iwp = std::get<QuadIrr>(mobius_apply(g.inverse(), ProjPoint{wp}));
        bool same = (cw == iw && cwp == iwp) || (cw == iwp && cwp == iw);
        CHECK(same);
    }
}

TEST_CASE("normalize_hyperbolic") {
    Mat2 m{2, 1, 1, 1};
    auto [n1, t1] = normalize_hyperbolic(m);
    CHECK(n1 == m);
    CHECK(t1 == NormalizeTag::Same);

    auto [n2, t2] = normalize_hyperbolic(Mat2{1, -1, -1, 2});
    CHECK(n2 == m);
    CHECK(t2 == NormalizeTag::Inverse);

    auto [n3, t3] = normalize_hyperbolic(Mat2{-2, -1, -1, -1});
    CHECK(n3 == m);
    CHECK(t3 == NormalizeTag::Negated);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        Mat2 h = rsym::testing::random_hyperbolic(rng);
        auto [n, tag] = normalize_hyperbolic(h);
        CHECK(sgn(n.c) > 0);
        CHECK(n.trace() > 2);
        auto [nn, tag2] = normalize_hyperbolic(n);
        CHECK(nn == n);
        CHECK(tag2 == NormalizeTag::Same);
        // Normalized: the attracting fixed point is the larger one.
        CHECK(attracting_fixed_point(n) == fixed_points(n).first);
    }
}

TEST_CASE("attracting_fixed_point") {
    Mat2 m{2, 1, 1, 1};
    CHECK(attracting_fixed_point(m) == qi(1, 1, 5, 2));
    CHECK(attracting_fixed_point(m.inverse()) == qi(1, -1, 5, 2));

    // Float iteration oracle: 50 Moebius steps from z = i.
    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
        Mat2 h = rsym::testing::random_hyperbolic(rng, 3, 4);
        std::complex<double> z(0.0, 1.0);
        auto ad = [](const Int& v) { return v.get_d(); };
        for (int k = 0; k < 50; ++k)
            z = (ad(h.a) * z + ad(h.b)) / (ad(h.c) * z + ad(h.d));
        double claimed = attracting_fixed_point(h).to_double();
        CHECK(std::abs(z.real() - claimed) < 1e-8);
        CHECK(std::abs(z.imag()) < 1e-8);
    }
}

TEST_CASE("is_primitive") {
    Mat2 m{2, 1, 1, 1};
    CHECK(is_primitive(m));
    CHECK_FALSE(is_primitive(m * m));
    CHECK((m * m) == Mat2{5, 3, 3, 2});
    CHECK(is_primitive(Mat2{3, 2, 1, 1}));
    CHECK_THROWS_AS(is_primitive(Mat2::S()), NotHyperbolicError);
    CHECK_THROWS_AS(is_primitive(Mat2{1, -1, -1, 2}), NotNormalizedError);
}

TEST_CASE("assoc_form transformation rules") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        Mat2 m = rsym::testing::random_hyperbolic(rng);
        Mat2 g = rsym::testing::random_gamma_element(rng);
        CHECK(assoc_form(g.inverse() * m * g) == form_action(assoc_form(m), g));
        CHECK(assoc_form(-m) == -assoc_form(m));
        CHECK(assoc_form(m.inverse()) == -assoc_form(m));
    }
}

TEST_CASE("normalized: sigma^-1 infinity lies left of w'") {
    // w' - m^-1(inf) = (tr - sqrt(D)) / (2c) > 0 for normalized m.
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        Mat2 m = rsym::testing::random_hyperbolic(rng);
        auto [w, wp] = fixed_points(m);
        ProjPoint p = mobius_apply(m.inverse(), ProjPoint{Infinity{}});
        CHECK(compare(RealAlg{std::get<Rat>(p)}, RealAlg{wp}) == Ordering::LT);
    }
}

TEST_CASE("matrix literal parsing") {
    CHECK(parse_mat2("2,1,1,1") == Mat2{2, 1, 1, 1});
    CHECK_THROWS_AS(parse_mat2("2,1,1"), Error);
    CHECK_THROWS_AS(parse_mat2("2,1,1,2"), InvalidMatrixError);
}
