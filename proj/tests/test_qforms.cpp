#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rsym/contfrac.hpp"
#include "rsym/qforms.hpp"
#include "test_helpers.hpp"

using namespace rsym;
using rsym::testing::qi;

namespace {

std::vector<BQF> sorted(std::vector<BQF> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Independent straddle-set oracle: for every A in [1, c^2 D / 4] walk the
// full integer interval of admissible B and keep integral C. Only feasible
// for small c^2 D.
std::vector<BQF> brute_force_straddling(const Int& D, const Rat& x) {
    std::vector<BQF> out;
    Int c = x.get_den(), dnum = x.get_num();
    Int Amax = c * c * D / 4;
    for (Int A = 1; A <= Amax; ++A) {
        // w' < x < w  <=>  (2Ax + B)^2 < D; B in an interval of length 2 sqrt(D).
        // 2Ax = 2A*dnum/c; bound B using integer sqrt with slack.
        Int twoAx_num = 2 * A * dnum;
        Int s = isqrt(D) + 1;
        Int lo = fdiv(-twoAx_num, c) - s - 2;
        Int hi = fdiv(-twoAx_num, c) + s + 2;
        for (Int B = lo; B <= hi; ++B) {
            Int t_num = twoAx_num + B * c;  // c * (2Ax + B)
            if (t_num * t_num >= c * c * D) continue;
            Int num = B * B - D;
            if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * A).get_mpz_t())) continue;
            out.push_back({A, B, num / (4 * A)});
            out.push_back({-A, -B, -num / (4 * A)});
        }
    }
    return sorted(out);
}

}  // namespace

TEST_CASE("form_action: examples and substitution oracle") {
    BQF q{1, -1, -1};
    CHECK(form_action(q, Mat2::identity()) == q);
    CHECK(form_action(q, Mat2::T()) == BQF{1, 1, -1});

    std::mt19937_64 rng(83);
    auto eval = [](const BQF& f, const Int& X, const Int& Y) {
        return f.A * X * X + f.B * X * Y + f.C * Y * Y;
    };
    std::uniform_int_distribution<long> cd(-9, 9);
    for (int i = 0; i < 200; ++i) {
        BQF f{cd(rng), cd(rng), cd(rng)};
        Mat2 g = rsym::testing::random_gamma_element(rng);
        Mat2 h = rsym::testing::random_gamma_element(rng);
        Int X = cd(rng), Y = cd(rng);
        // (Q o g)(v) = Q(g v): polynomial substitution oracle.
        CHECK(eval(form_action(f, g), X, Y) == eval(f, g.a * X + g.b * Y, g.c * X + g.d * Y));
        CHECK(form_action(form_action(f, g), h) == form_action(f, g * h));
        CHECK(form_action(f, g).disc() == f.disc());
    }
}

TEST_CASE("roots") {
    auto [w1, wp1] = roots(BQF{1, -1, -1});
    CHECK(w1 == qi(1, 1, 5, 2));
    CHECK(wp1 == qi(1, -1, 5, 2));

    auto [w2, wp2] = roots(BQF{1, 0, -3});
    CHECK(w2 == qi(0, 1, 3, 1));
    CHECK(wp2 == qi(0, -1, 3, 1));

    auto [w3, wp3] = roots(BQF{-1, 0, 3});
    CHECK(w3 == qi(0, 1, 3, 1));
    CHECK(wp3 == qi(0, -1, 3, 1));

    CHECK_THROWS_AS(roots(BQF{0, 1, -1}), DegenerateLeadingCoefficientError);
}

TEST_CASE("reduce_cycle") {
    FormClass c5 = reduce_cycle(BQF{1, -1, -1});
    CHECK(std::count(c5.cycle.begin(), c5.cycle.end(), BQF{1, 1, -1}) == 1);
    CHECK(c5.cycle.size() == 2);

    FormClass a = reduce_cycle(BQF{1, -2, -2});
    FormClass b = reduce_cycle(BQF{2, -2, -1});
    CHECK(a.cycle != b.cycle);

    FormClass a2 = reduce_cycle(BQF{-2, -6, -3});
    CHECK(a.cycle == a2.cycle);
}

TEST_CASE("cycle structure: even length, alternating leading signs") {
    std::mt19937_64 rng(89);
    for (int i = 0; i < 100; ++i) {
        Mat2 m = rsym::testing::random_hyperbolic(rng);
        FormClass cls = reduce_cycle(assoc_form(m));
        CHECK(cls.cycle.size() % 2 == 0);
        for (std::size_t k = 0; k < cls.cycle.size(); ++k) {
            const BQF& f = cls.cycle[k];
            const BQF& g = cls.cycle[(k + 1) % cls.cycle.size()];
            CHECK(is_reduced_form(f));
            CHECK(sgn(f.A) * sgn(g.A) == -1);
            CHECK(reduce_once(f) == g);
        }
    }
}

TEST_CASE("gamma_equivalent") {
    CHECK(gamma_equivalent(BQF{1, -1, -1}, BQF{1, 3, 1}));
    CHECK_FALSE(gamma_equivalent(BQF{1, -2, -2}, BQF{2, -2, -1}));

    std::mt19937_64 rng(97);
    for (int i = 0; i < 60; ++i) {
        Mat2 m = rsym::testing::random_hyperbolic(rng);
        BQF q = assoc_form(m);
        Mat2 g = rsym::testing::random_gamma_element(rng);
        CHECK(gamma_equivalent(q, form_action(q, g)));
    }
}

TEST_CASE("enumerate_straddling: Example 4.5 witness list") {
    FormClass cls = reduce_cycle(BQF{1, -1, -1});
    auto got = enumerate_straddling(cls, Rat(-1));
    std::vector<BQF> want = sorted({{1, 1, -1}, {1, 3, 1}, {-1, -1, 1}, {-1, -3, -1}});
    CHECK(got == want);
}

TEST_CASE("enumerate_straddling: Example 4.6 witness lists") {
    FormClass c1 = reduce_cycle(BQF{1, -2, -2});
    auto got1 = enumerate_straddling(c1, Rat(-1));
    std::vector<BQF> want1 = sorted(
        {{-3, -6, -2}, {-2, -6, -3}, {-2, -2, 1}, {1, 0, -3}, {1, 2, -2}, {1, 4, 1}});
    CHECK(got1 == want1);

    FormClass c2 = reduce_cycle(BQF{2, -2, -1});
    auto got2 = enumerate_straddling(c2, Rat(-1));
    std::vector<BQF> want2 = sorted(
        {{3, 6, 2}, {2, 6, 3}, {2, 2, -1}, {-1, 0, 3}, {-1, -2, 2}, {-1, -4, -1}});
    CHECK(got2 == want2);
}

TEST_CASE("straddling completeness against brute force") {
    std::mt19937_64 rng(101);
    std::vector<Int> discs{5, 8, 12, 13, 17, 21, 24, 28, 32, 40, 60, 61, 92, 97};
    std::uniform_int_distribution<long> xd(-3, 3), cd(1, 3);
    for (const Int& D : discs) {
        if (mod(D, 4) > 1) continue;
        for (int i = 0; i < 4; ++i) {
            Rat x(xd(rng), cd(rng));
            x.canonicalize();
            CHECK(straddling_forms_all(D, x) == brute_force_straddling(D, x));
        }
    }
}

TEST_CASE("straddle output invariants") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 30; ++i) {
        Mat2 m = rsym::testing::random_hyperbolic(rng, 3, 4);
        FormClass cls = reduce_cycle(assoc_form(m));
        std::uniform_int_distribution<long> xd(-5, 5), cd(1, 4);
        Rat x(xd(rng), cd(rng));
        x.canonicalize();
        RealAlg xr{x};
        for (const BQF& q : enumerate_straddling(cls, x)) {
            auto [w, wp] = roots(q);
            CHECK(compare(RealAlg{wp}, xr) == Ordering::LT);
            CHECK(compare(xr, RealAlg{w}) == Ordering::LT);
            CHECK(gamma_equivalent(q, cls.representative));
        }
    }
}

TEST_CASE("filter_straddle_point: Example 4.6 and 4.5") {
    FormClass c1 = reduce_cycle(BQF{1, -2, -2});
    FormClass c2 = reduce_cycle(BQF{2, -2, -1});
    auto twelve = enumerate_straddling(c1, Rat(-1));
    auto second = enumerate_straddling(c2, Rat(-1));
    twelve.insert(twelve.end(), second.begin(), second.end());
    RealAlg phi{qi(1, 1, 5, 2)};
    auto kept = sorted(filter_straddle_point(twelve, phi));
    CHECK(kept == sorted({{1, 0, -3}, {-1, 0, 3}}));

    FormClass c5 = reduce_cycle(BQF{1, -1, -1});
    CHECK(filter_straddle_point(enumerate_straddling(c5, Rat(-1)), phi).empty());

    // Filtering at a point below every root interval keeps nothing.
    CHECK(filter_straddle_point(twelve, RealAlg{Rat(-1000)}).empty());
}

TEST_CASE("sign flip criterion under conjugation") {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 150; ++i) {
        Mat2 h = rsym::testing::random_hyperbolic(rng);
        Mat2 s = rsym::testing::random_gamma_element(rng);
        if (s.c == 0) continue;
        BQF qh = assoc_form(h);
        BQF qc = form_action(qh, s.inverse());  // Q_{s h s^-1}
        auto [w, wp] = roots(qh);
        Rat p(-s.d, s.c);
        p.canonicalize();
        RealAlg pr{p};
        bool straddles = compare(RealAlg{wp}, pr) == Ordering::LT &&
                         compare(pr, RealAlg{w}) == Ordering::LT;
        CHECK(form_sign(qc) * form_sign(qh) == (straddles ? -1 : 1));
    }
}

TEST_CASE("form literal parsing") {
    CHECK(parse_bqf("1,-2,-2") == BQF{1, -2, -2});
    CHECK_THROWS_AS(parse_bqf("1,2"), Error);
}
