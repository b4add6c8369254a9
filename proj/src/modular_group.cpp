#include "rsym/modular_group.hpp"

#include <sstream>
#include <vector>

namespace rsym {

MatClass classify(const Mat2& m) {
    if (m.det() != 1) throw InvalidMatrixError("classify: determinant must be 1");
    if (m.b == 0 && m.c == 0 && (m.a == 1 || m.a == -1)) return MatClass::Scalar;
    Int t = rsym::abs(m.trace());
    if (t == 2) return MatClass::Parabolic;
    if (t < 2) return MatClass::Elliptic;
    return MatClass::Hyperbolic;
}

std::pair<QuadIrr, QuadIrr> fixed_points(const Mat2& m) {
    if (classify(m) != MatClass::Hyperbolic)
        throw NotHyperbolicError("fixed_points: matrix is not hyperbolic");
    // Roots of c X^2 + (d-a) X - b, discriminant tr^2 - 4 = (tr-2)(tr+2).
    // The two trace factors are decomposed separately so that large traces
    // (powers of hyperbolic elements) stay cheap to handle.
    Int u = m.trace() - 2, v = m.trace() + 2;
    if (sgn(u) < 0) {
        u = -u;
        v = -v;
    }
    auto [d1, s1] = squarefree_decompose(u);
    auto [d2, s2] = squarefree_decompose(v);
    Int g = gcd(d1, d2);
    Int d = (d1 / g) * (d2 / g);
    Int s = g * s1 * s2;
    Int p = m.a - m.d, r = 2 * m.c;
    QuadIrr plus = QuadIrr::with_known_squarefree(p, s, d, r);
    QuadIrr minus = QuadIrr::with_known_squarefree(p, -s, d, r);
    if (sgn(m.c) > 0) return {plus, minus};
    return {minus, plus};
}

std::pair<Mat2, NormalizeTag> normalize_hyperbolic(const Mat2& m) {
    if (classify(m) != MatClass::Hyperbolic)
        throw NotHyperbolicError("normalize_hyperbolic: matrix is not hyperbolic");
    const std::pair<Mat2, NormalizeTag> candidates[] = {
        {m, NormalizeTag::Same},
        {-m, NormalizeTag::Negated},
        {m.inverse(), NormalizeTag::Inverse},
        {-m.inverse(), NormalizeTag::NegatedInverse},
    };
    for (const auto& [n, tag] : candidates)
        if (sgn(n.c) > 0 && n.trace() > 2) return {n, tag};
    throw NotHyperbolicError("normalize_hyperbolic: no normalized representative");
}

QuadIrr attracting_fixed_point(const Mat2& m) {
    auto [w, wp] = fixed_points(m);
    return sgn(m.c * m.trace()) > 0 ? w : wp;
}

ProjPoint mobius_apply(const Mat2& g, const ProjPoint& x) {
    Int det = g.det();
    if (det != 1 && det != -1)
        throw InvalidMatrixError("mobius_apply: matrix must be unimodular");
    if (is_infinity(x)) {
        if (g.c == 0) return Infinity{};
        Rat r(g.a, g.c);
        r.canonicalize();
        return r;
    }
    if (const Rat* rx = std::get_if<Rat>(&x)) {
        Int num = g.a * rx->get_num() + g.b * rx->get_den();
        Int den = g.c * rx->get_num() + g.d * rx->get_den();
        if (den == 0) return Infinity{};
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    const QuadIrr& q = std::get<QuadIrr>(x);
    // (alpha + beta sqrt(d)) / (gamma + delta sqrt(d)); rationalize.
    Int alpha = g.a * q.p() + g.b * q.r();
    Int beta = g.a * q.q();
    Int gamma = g.c * q.p() + g.d * q.r();
    Int delta = g.c * q.q();
    Int den = gamma * gamma - delta * delta * q.d();
    return QuadIrr::with_known_squarefree(alpha * gamma - beta * delta * q.d(),
                                          beta * gamma - alpha * delta, q.d(), den);
}

Mat2 parse_mat2(const std::string& s) {
    std::vector<Int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(parse_int(tok));
    if (v.size() != 4) throw Error("parse error: matrix literal must be 'a,b,c,d'");
    Mat2 m{v[0], v[1], v[2], v[3]};
    if (m.det() != 1)
        throw InvalidMatrixError("invalid matrix: determinant is " + m.det().get_str() +
                                 ", expected 1");
    return m;
}

}  // namespace rsym
