#pragma once

#include <string>
#include <variant>

#include "rsym/numeric.hpp"

namespace rsym {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// Exact real quadratic irrational (p + q*sqrt(d))/r.
///
/// Canonical form: d squarefree and > 1, q != 0, r > 0, gcd(p, q, r) = 1.
/// Square factors of the input radicand are absorbed into q, so equality is
/// field-wise comparison of the four components.
class QuadIrr {
public:
    /// Builds (p + q*sqrt(d))/r and canonicalizes. Throws Error if r = 0,
    /// d <= 0, or the value is rational (q = 0 or d a perfect square).
    QuadIrr(Int p, Int q, Int d, Int r);

    /// Same, but d is already known squarefree; skips the factorization.
    static QuadIrr with_known_squarefree(Int p, Int q, Int d, Int r);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }
    const Int& r() const { return r_; }

    QuadIrr conjugate() const;       // (p - q*sqrt(d))/r
    int sign() const;                // sign of the real value, never 0
    Int floor() const;
    QuadIrr negate() const;

    double to_double() const;
    mpf_class to_mpf(unsigned prec_bits = 256) const;

    /// Textual form "(p+q*sqrt(d))/r".
    std::string str() const;
    static QuadIrr parse(const std::string& s);

    bool operator==(const QuadIrr& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_;
    }

private:
    QuadIrr() = default;

    Int p_, q_, d_, r_;
};

Ordering compare(const QuadIrr& x, const QuadIrr& y);
Ordering compare(const QuadIrr& x, const Rat& y);
Ordering compare(const Rat& x, const QuadIrr& y);
Ordering compare(const Rat& x, const Rat& y);

/// Finite exact real number of degree <= 2 over Q.
using RealAlg = std::variant<Rat, QuadIrr>;

Ordering compare(const RealAlg& x, const RealAlg& y);

double to_double(const RealAlg& x);
std::string str(const RealAlg& x);

/// Point of P^1(R) with exact coordinates; Infinity is its own case, never a
/// degenerate rational.
struct Infinity {
    bool operator==(const Infinity&) const { return true; }
};
using ProjPoint = std::variant<Infinity, Rat, QuadIrr>;

inline bool is_infinity(const ProjPoint& x) {
    return std::holds_alternative<Infinity>(x);
}

}  // namespace rsym
