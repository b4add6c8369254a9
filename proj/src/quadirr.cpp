#include "rsym/quadirr.hpp"

#include <cmath>

namespace rsym {

namespace {

// Sign of a + b*sqrt(d) for squarefree d > 1. Returns 0 only when a = b = 0.
int sign_two_term(const Int& a, const Int& b, const Int& d) {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: decide |a| vs |b|*sqrt(d) by squaring. Equality is
    // impossible since d is not a perfect square.
    Int a2 = a * a, b2d = b * b * d;
    int cmp = a2 > b2d ? 1 : -1;
    return cmp > 0 ? sa : sb;
}

// Sign of a + b*sqrt(d1) + c*sqrt(d2) for distinct squarefree d1, d2 > 1 and
// b, c != 0. Never 0: 1, sqrt(d1), sqrt(d2) are linearly independent over Q.
int sign_three_term(const Int& a, const Int& b, const Int& d1, const Int& c,
                    const Int& d2) {
    // Compare L := a + b*sqrt(d1) against R := -c*sqrt(d2).
    int sl = sign_two_term(a, b, d1);
    int sr = -sgn(c);
    if (sl != sr) {
        if (sl == 0) return -sr;
        return sl;
    }
    // Same nonzero sign: compare L^2 vs R^2 via one more two-term sign.
    Int t0 = a * a + b * b * d1 - c * c * d2;
    Int t1 = 2 * a * b;
    int st = sign_two_term(t0, t1, d1);
    if (st == 0) throw Error("sign_three_term: impossible equality");
    return sl > 0 ? st : -st;
}

}  // namespace

QuadIrr::QuadIrr(Int p, Int q, Int d, Int r) {
    if (r == 0) throw Error("QuadIrr: zero denominator");
    if (q == 0) throw Error("QuadIrr: rational value (q = 0)");
    if (sgn(d) <= 0) throw Error("QuadIrr: radicand must be positive");
    auto [sf, sq] = squarefree_decompose(d);
    if (sf == 1) throw Error("QuadIrr: radicand is a perfect square");
    q *= sq;
    d = sf;
    if (sgn(r) < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int g = gcd(gcd(p, q), r);
    p_ = p / g;
    q_ = q / g;
    d_ = d;
    r_ = r / g;
}

QuadIrr QuadIrr::with_known_squarefree(Int p, Int q, Int d, Int r) {
    if (r == 0) throw Error("QuadIrr: zero denominator");
    if (q == 0) throw Error("QuadIrr: rational value (q = 0)");
    if (sgn(r) < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int g = gcd(gcd(p, q), r);
    QuadIrr out;
    out.p_ = p / g;
    out.q_ = q / g;
    out.d_ = std::move(d);
    out.r_ = r / g;
    return out;
}

QuadIrr QuadIrr::conjugate() const { return with_known_squarefree(p_, -q_, d_, r_); }

QuadIrr QuadIrr::negate() const { return with_known_squarefree(-p_, -q_, d_, r_); }

int QuadIrr::sign() const { return sign_two_term(p_, q_, d_); }

Int QuadIrr::floor() const {
    // r > 0 and sqrt(q^2 d) is irrational, so the fractional offset never
    // crosses an integer boundary.
    Int s = isqrt(q_ * q_ * d_);
    if (sgn(q_) > 0) return fdiv(p_ + s, r_);
    Int m = p_ - s;  // value numerator lies in (m - 1, m)
    if (mpz_divisible_p(m.get_mpz_t(), r_.get_mpz_t())) return m / r_ - 1;
    return fdiv(m, r_);
}

double QuadIrr::to_double() const {
    return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / r_.get_d();
}

mpf_class QuadIrr::to_mpf(unsigned prec_bits) const {
    mpf_class root(d_, prec_bits);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    mpf_class v(p_, prec_bits);
    v += mpf_class(q_, prec_bits) * root;
    v /= mpf_class(r_, prec_bits);
    return v;
}

std::string QuadIrr::str() const {
    std::string qs = q_ == 1 ? "+" : (q_ == -1 ? "-" : (sgn(q_) > 0 ? "+" + q_.get_str() + "*" : q_.get_str() + "*"));
    return "(" + p_.get_str() + qs + "sqrt(" + d_.get_str() + "))/" + r_.get_str();
}

QuadIrr QuadIrr::parse(const std::string& s) {
    // Accepted shape: (p+q*sqrt(d))/r with optional q and r parts.
    auto fail = [&]() -> QuadIrr { throw Error("parse error: bad quadratic irrational '" + s + "'"); };
    auto lp = s.find('(');
    auto sq = s.find("sqrt(");
    if (lp == std::string::npos || sq == std::string::npos || sq < lp) return fail();
    auto sq_close = s.find(')', sq);
    auto outer_close = s.find(')', sq_close + 1);
    if (sq_close == std::string::npos || outer_close == std::string::npos) return fail();

    std::string head = s.substr(lp + 1, sq - lp - 1);  // "p+q*" or "p+" or "+"...
    if (!head.empty() && head.back() == '*') head.pop_back();
    // Split head into p and q at the last sign that starts the q term.
    Int p = 0, q = 1;
    if (head.empty()) return fail();
    auto split = head.find_last_of("+-");
    if (split == std::string::npos || split == 0) {
        // No explicit p part ("(sqrt(5))" style is not produced but accept q-only).
        std::string qs = head;
        p = 0;
        q = qs.empty() || qs == "+" ? Int(1) : (qs == "-" ? Int(-1) : parse_int(qs));
    } else {
        p = parse_int(head.substr(0, split));
        std::string qs = head.substr(split);
        q = qs == "+" ? Int(1) : (qs == "-" ? Int(-1) : parse_int(qs));
    }
    Int d = parse_int(s.substr(sq + 5, sq_close - sq - 5));
    Int r = 1;
    auto slash = s.find('/', outer_close);
    if (slash != std::string::npos) r = parse_int(s.substr(slash + 1));
    return QuadIrr(p, q, d, r);
}

Ordering compare(const QuadIrr& x, const QuadIrr& y) {
    if (x == y) return Ordering::EQ;
    // x - y = (a + b*sqrt(dx) + c*sqrt(dy)) / (rx*ry) with rx*ry > 0.
    Int a = x.p() * y.r() - y.p() * x.r();
    Int b = x.q() * y.r();
    Int c = -y.q() * x.r();
    int s;
    if (x.d() == y.d()) {
        s = sign_two_term(a, b + c, x.d());
    } else {
        s = sign_three_term(a, b, x.d(), c, y.d());
    }
    if (s == 0) return Ordering::EQ;  // same field, same value, non-canonical never happens
    return s > 0 ? Ordering::GT : Ordering::LT;
}

Ordering compare(const QuadIrr& x, const Rat& y) {
    // x - y = ((p*yden - ynum*r) + q*yden*sqrt(d)) / (r*yden)
    Int a = x.p() * y.get_den() - y.get_num() * x.r();
    Int b = x.q() * y.get_den();
    int s = sign_two_term(a, b, x.d());
    return s > 0 ? Ordering::GT : Ordering::LT;  // never EQ: x irrational
}

Ordering compare(const Rat& x, const QuadIrr& y) {
    Ordering o = compare(y, x);
    return o == Ordering::GT ? Ordering::LT : (o == Ordering::LT ? Ordering::GT : Ordering::EQ);
}

Ordering compare(const Rat& x, const Rat& y) {
    int c = cmp(x, y);
    return c > 0 ? Ordering::GT : (c < 0 ? Ordering::LT : Ordering::EQ);
}

Ordering compare(const RealAlg& x, const RealAlg& y) {
    return std::visit([](const auto& a, const auto& b) { return compare(a, b); }, x, y);
}

double to_double(const RealAlg& x) {
    if (auto* r = std::get_if<Rat>(&x)) return r->get_d();
    return std::get<QuadIrr>(x).to_double();
}

std::string str(const RealAlg& x) {
    if (auto* r = std::get_if<Rat>(&x)) return r->get_str();
    return std::get<QuadIrr>(x).str();
}

}  // namespace rsym
