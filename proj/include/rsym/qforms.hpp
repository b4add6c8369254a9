#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rsym/modular_group.hpp"
#include "rsym/quadirr.hpp"

namespace rsym {

struct DegenerateLeadingCoefficientError : Error {
    explicit DegenerateLeadingCoefficientError(const std::string& w) : Error(w) {}
};

/// Integer binary quadratic form A X^2 + B XY + C Y^2, written [A,B,C].
struct BQF {
    Int A, B, C;

    Int disc() const { return B * B - 4 * A * C; }
    Int content() const { return gcd(gcd(A, B), C); }
    BQF operator-() const { return {-A, -B, -C}; }

    bool operator==(const BQF& o) const { return A == o.A && B == o.B && C == o.C; }
    bool operator<(const BQF& o) const {
        if (A != o.A) return A < o.A;
        if (B != o.B) return B < o.B;
        return C < o.C;
    }

    std::string str() const {
        return A.get_str() + "," + B.get_str() + "," + C.get_str();
    }
};

BQF parse_bqf(const std::string& s);

/// Q_gamma = [c, d-a, -b]. Throws ScalarInputError for +-I.
BQF assoc_form(const Mat2& m);

/// sgn([A,B,C]) = sgn(A), or sgn(C) when A = 0.
int form_sign(const BQF& q);

/// (Q o g)(X, Y) = Q(aX+bY, cX+dY).
BQF form_action(const BQF& q, const Mat2& g);

/// Root pair (w, w') of Q(z,1) with w > w'. Requires A != 0 and D > 0
/// non-square.
std::pair<QuadIrr, QuadIrr> roots(const BQF& q);

/// 0 < B < sqrt(D) and sqrt(D) - B < 2|A| < sqrt(D) + B.
bool is_reduced_form(const BQF& q);

/// One step of the standard reduction operator rho.
BQF reduce_once(const BQF& q);

/// First reduced form reachable from q by iterating rho.
BQF first_reduced(const BQF& q);

/// Proper equivalence class: a representative and its full cycle of reduced
/// forms, rotated so the lexicographically smallest triple comes first.
struct FormClass {
    BQF representative;
    std::vector<BQF> cycle;
};

FormClass reduce_cycle(const BQF& q);

bool gamma_equivalent(const BQF& q1, const BQF& q2);

/// All forms of discriminant D (both leading signs) whose roots straddle the
/// rational x, i.e. w' < x < w; the finite-step search of the straddle set.
std::vector<BQF> straddling_forms_all(const Int& D, const Rat& x);

/// The members of cls among straddling_forms_all(disc, x), sorted by (A,B,C).
std::vector<BQF> enumerate_straddling(const FormClass& cls, const Rat& x);

/// Sublist whose root pairs strictly straddle p.
std::vector<BQF> filter_straddle_point(const std::vector<BQF>& forms, const RealAlg& p);

}  // namespace rsym
