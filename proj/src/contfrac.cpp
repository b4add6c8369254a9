#include "rsym/contfrac.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rsym {

namespace {

std::vector<Int> rotate_left(std::vector<Int> v, std::size_t k) {
    if (v.empty()) return v;
    k %= v.size();
    std::rotate(v.begin(), v.begin() + static_cast<long>(k), v.end());
    return v;
}

std::vector<Int> rotate_right(std::vector<Int> v, std::size_t k) {
    if (v.empty()) return v;
    k %= v.size();
    std::rotate(v.begin(), v.end() - static_cast<long>(k), v.end());
    return v;
}

void check_word(const CFWord& w, const char* who) {
    if (w.empty() || w.size() % 2 != 0)
        throw Error(std::string(who) + ": word must be nonempty of even length");
    for (const Int& e : w)
        if (sgn(e) <= 0) throw Error(std::string(who) + ": word entries must be positive");
}

// floor((P + sqrt(D)) / Q) for non-square D > 0, Q != 0.
Int floor_state(const Int& P, const Int& Q, const Int& sqrtD) {
    if (sgn(Q) > 0) return fdiv(P + sqrtD, Q);
    // (P + sqrt(D))/Q = (M - f)/|Q| with M = -P - sqrtD_floor, f in (0,1).
    Int M = -P - sqrtD, q = -Q;
    if (mpz_divisible_p(M.get_mpz_t(), q.get_mpz_t())) return M / q - 1;
    return fdiv(M, q);
}

// Canonical shape: even preperiod of minimal length, given a minimal period.
void canonicalize_shape(std::vector<Int>& pre, std::vector<Int>& per) {
    if (per.empty()) return;
    if (per.size() % 2 != 0) {
        per.insert(per.end(), per.begin(), per.end());
    }
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        per = rotate_right(per, 1);
    }
    if (pre.size() % 2 != 0) {
        pre.push_back(per.front());
        per = rotate_left(per, 1);
    }
}

}  // namespace

std::string CFExpansion::str() const {
    auto join = [](const std::vector<Int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += v[i].get_str();
        }
        return s;
    };
    return join(preperiod) + ";" + join(period);
}

CFExpansion CFExpansion::parse(const std::string& s) {
    auto split = [](const std::string& part) {
        std::vector<Int> v;
        if (part.empty()) return v;
        std::stringstream ss(part);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(parse_int(tok));
        return v;
    };
    auto semi = s.find(';');
    CFExpansion e;
    if (semi == std::string::npos) {
        e.preperiod = split(s);
    } else {
        e.preperiod = split(s.substr(0, semi));
        e.period = split(s.substr(semi + 1));
    }
    if (!e.period.empty() && e.period.size() % 2 != 0)
        throw Error("parse error: period length must be even");
    return e;
}

CFExpansion cf_of_rational(const Rat& x) {
    CFExpansion out;
    Int p = x.get_num(), q = x.get_den();
    while (true) {
        Int a = fdiv(p, q);
        out.preperiod.push_back(a);
        Int rem = p - a * q;
        if (rem == 0) break;
        p = q;
        q = rem;
    }
    return out;
}

CFExpansion cf_of_quadirr(const QuadIrr& x) {
    // State w_i = (P + sqrt(D)) / Q with Q | D - P^2; states repeat exactly
    // when the value repeats, which gives the minimal preperiod and period.
    Int P, Q, D;
    if (sgn(x.q()) > 0) {
        P = x.p();
        Q = x.r();
    } else {
        P = -x.p();
        Q = -x.r();
    }
    D = x.q() * x.q() * x.d();
    if ((D - P * P) % Q != 0) {
        Int t = rsym::abs(Q);
        P *= t;
        D *= t * t;
        Q *= t;
    }
    Int sqrtD = isqrt(D);

    std::vector<Int> entries;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::size_t start, len;
    while (true) {
        auto it = seen.find({P, Q});
        if (it != seen.end()) {
            start = it->second;
            len = entries.size() - start;
            break;
        }
        seen.emplace(std::make_pair(P, Q), entries.size());
        Int a = floor_state(P, Q, sqrtD);
        entries.push_back(a);
        Int Pn = a * Q - P;
        Q = (D - Pn * Pn) / Q;
        P = Pn;
    }

    CFExpansion out;
    out.preperiod.assign(entries.begin(), entries.begin() + static_cast<long>(start));
    out.period.assign(entries.begin() + static_cast<long>(start), entries.end());
    canonicalize_shape(out.preperiod, out.period);
    return out;
}

Mat2 word_to_matrix(const std::vector<Int>& word) {
    Mat2 m = Mat2::identity();
    for (const Int& a : word) m = m * Mat2{a, 1, 1, 0};
    return m;
}

QuadIrr periodic_value(const CFWord& word) {
    check_word(word, "periodic_value");
    Mat2 w = word_to_matrix(word);
    return fixed_points(w).first;  // c > 0, tr > 2: attracting = larger root
}

Rat finite_cf_value(const std::vector<Int>& entries) {
    if (entries.empty()) throw Error("finite_cf_value: empty expansion");
    Rat v(entries.back());
    for (std::size_t i = entries.size() - 1; i-- > 0;) {
        if (v == 0) throw Error("finite_cf_value: zero tail");
        v = Rat(entries[i]) + 1 / v;
    }
    return v;
}

RealAlg evaluate_cf(const CFExpansion& x) {
    if (x.period.empty()) return finite_cf_value(x.preperiod);
    QuadIrr tail = periodic_value(x.period);
    ProjPoint v = mobius_apply(word_to_matrix(x.preperiod), ProjPoint{tail});
    return std::get<QuadIrr>(v);
}

bool is_reduced(const QuadIrr& x) {
    if (compare(x, Rat(1)) != Ordering::GT) return false;
    QuadIrr c = x.conjugate();
    return compare(c, Rat(-1)) == Ordering::GT && compare(c, Rat(0)) == Ordering::LT;
}

WordDecomposition hyperbolic_to_word(const Mat2& m) {
    if (classify(m) != MatClass::Hyperbolic)
        throw NotHyperbolicError("hyperbolic_to_word: matrix is not hyperbolic");
    if (!(sgn(m.c) > 0 && m.trace() > 2))
        throw NotNormalizedError("hyperbolic_to_word: need c > 0 and trace > 2");
    CFExpansion exp = cf_of_quadirr(attracting_fixed_point(m));
    Mat2 delta = word_to_matrix(exp.preperiod);
    Mat2 target = delta.inverse() * m * delta;
    Mat2 w = word_to_matrix(exp.period);
    Mat2 p = w;
    unsigned e = 1;
    while (!(p == target)) {
        if (p.trace() > target.trace())
            throw Error("hyperbolic_to_word: stabilizer mismatch");
        p = p * w;
        ++e;
    }
    return {delta, exp.period, e};
}

bool is_primitive(const Mat2& m) { return hyperbolic_to_word(m).exponent == 1; }

CFExpansion conjugate_expansion(const CFExpansion& x) {
    if (x.period.empty())
        throw Error("conjugate_expansion: needs a periodic expansion");
    std::vector<Int> pre = x.preperiod, per = x.period;

    // The four-case formula requires the last preperiod entry to differ from
    // the last period entry. Extending the preperiod can never achieve that,
    // so shrink toward the minimal preperiod instead.
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        per = rotate_right(per, 1);
    }

    std::size_t r = pre.size();
    const Int aL = per.back();                    // a_{2n-1}
    const Int a2 = per[per.size() >= 2 ? per.size() - 2 : 0];  // a_{2n-2}
    std::vector<Int> rev(per.rbegin(), per.rend());

    std::vector<Int> npre, nper;
    if (r == 0) {
        npre = {Int(-1), Int(1), aL - 1};
        nper = rotate_left(rev, 1);
    } else if (r == 1) {
        npre = {pre[0] - aL - 1, Int(1), a2 - 1};
        nper = rotate_left(rev, 2);
    } else if (pre.back() > aL) {
        npre.assign(pre.begin(), pre.end() - 1);
        npre.push_back(pre.back() - aL - 1);
        npre.push_back(1);
        npre.push_back(a2 - 1);
        nper = rotate_left(rev, 2);
    } else {  // 0 < k_{r-1} < a_{2n-1}
        if (sgn(pre.back()) <= 0)
            throw Error("conjugate_expansion: preperiod entry out of range");
        npre.assign(pre.begin(), pre.end() - 2);
        npre.push_back(pre[r - 2] - 1);
        npre.push_back(1);
        npre.push_back(aL - pre.back() - 1);
        nper = rotate_left(rev, 1);
    }

    // Zero absorption [..., a, 0, b, ...] = [..., a+b, ...]; zeros only occur
    // in the constructed prefix, possibly consuming the first period entry.
    for (std::size_t i = 1; i < npre.size();) {
        if (npre[i] != 0) {
            ++i;
            continue;
        }
        if (i + 1 < npre.size()) {
            npre[i - 1] += npre[i + 1];
            npre.erase(npre.begin() + static_cast<long>(i),
                       npre.begin() + static_cast<long>(i) + 2);
        } else {
            npre[i - 1] += nper.front();
            npre.pop_back();
            nper = rotate_left(nper, 1);
        }
        if (i > 1) --i;
    }

    canonicalize_shape(npre, nper);
    CFExpansion out;
    out.preperiod = std::move(npre);
    out.period = std::move(nper);
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> orbit_shift_membership(
    const QuadIrr& w_target, const CFWord& word) {
    check_word(word, "orbit_shift_membership");
    // Normalize the source word to the minimal even period of its value.
    CFExpansion src = cf_of_quadirr(periodic_value(word));
    const std::vector<Int>& base = src.period;
    CFExpansion tgt = cf_of_quadirr(w_target);
    if (tgt.period.size() != base.size()) return std::nullopt;
    std::size_t r = tgt.preperiod.size();
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (i % 2 != r % 2) continue;
        if (tgt.period == rotate_left(base, i)) return std::make_pair(r, i);
    }
    return std::nullopt;
}

Ordering compare_periodic_values(const CFWord& a, const CFWord& b) {
    return compare(periodic_value(a), periodic_value(b));
}

}  // namespace rsym
