#pragma once

#include <string>
#include <utility>

#include "rsym/quadirr.hpp"

namespace rsym {

struct InvalidMatrixError : Error {
    explicit InvalidMatrixError(const std::string& w) : Error(w) {}
};
struct ScalarInputError : Error {
    explicit ScalarInputError(const std::string& w) : Error(w) {}
};
struct NotHyperbolicError : Error {
    explicit NotHyperbolicError(const std::string& w) : Error(w) {}
};
struct NotNormalizedError : Error {
    explicit NotNormalizedError(const std::string& w) : Error(w) {}
};
struct NotPrimitiveError : Error {
    explicit NotPrimitiveError(const std::string& w) : Error(w) {}
};

/// Element of SL2(Z). Immutable value; determinant is the caller's contract
/// and is validated by entry points that require it.
struct Mat2 {
    Int a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 T() { return {1, 1, 0, 1}; }
    static Mat2 S() { return {0, -1, 1, 0}; }
    static Mat2 U() { return {1, -1, 1, 0}; }

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    /// Inverse for det = 1.
    Mat2 inverse() const { return {d, -b, -c, a}; }

    Mat2 pow(unsigned long k) const {
        Mat2 r = identity(), base = *this;
        for (; k; k >>= 1) {
            if (k & 1) r = r * base;
            if (k > 1) base = base * base;
        }
        return r;
    }

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    std::string str() const {
        return a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str();
    }
};

enum class MatClass { Scalar, Parabolic, Elliptic, Hyperbolic };

/// Trace classification; requires det = 1.
MatClass classify(const Mat2& m);

/// The two real fixed points (w, w') with w > w'. Requires m hyperbolic.
std::pair<QuadIrr, QuadIrr> fixed_points(const Mat2& m);

enum class NormalizeTag { Same, Negated, Inverse, NegatedInverse };

/// The unique element of {m, -m, m^-1, -m^-1} with c > 0 and trace > 2.
std::pair<Mat2, NormalizeTag> normalize_hyperbolic(const Mat2& m);

/// lim_{n->inf} m^n z for any z; w if sgn(c(a+d)) > 0, else w'.
QuadIrr attracting_fixed_point(const Mat2& m);

/// True iff m generates the stabilizer of its fixed point up to sign.
/// Requires m hyperbolic and normalized. Defined in contfrac.cpp.
bool is_primitive(const Mat2& m);

/// Exact Moebius action on P^1(R); accepts det = +-1.
ProjPoint mobius_apply(const Mat2& g, const ProjPoint& x);

/// Row-major "a,b,c,d" literal; validates det = 1.
Mat2 parse_mat2(const std::string& s);

}  // namespace rsym
