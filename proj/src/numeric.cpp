#include "rsym/numeric.hpp"

#include <algorithm>
#include <map>

namespace rsym {

namespace {

// Brent's variant of Pollard rho. n must be odd composite, not a prime power
// of a small prime; returns a nontrivial factor.
Int pollard_brent(const Int& n, unsigned long seed) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x = y, q = 1, g = 1, ys = y;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * rsym::abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % n;
                g = gcd(rsym::abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
        ++seed;
    }
}

void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    if (is_perfect_square(n)) {
        Int r = isqrt(n);
        std::map<Int, int> sub;
        factor_rec(r, sub);
        for (auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    Int f = pollard_brent(n, 0xD1CE5EEDUL);
    factor_rec(f, out);
    factor_rec(n / f, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor(Int n) {
    if (sgn(n) <= 0) throw Error("factor: argument must be positive");
    std::map<Int, int> acc;
    static const int kSmall[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                 83, 89, 97, 101, 103, 107, 109, 113};
    for (int p : kSmall) {
        if (n == 1) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            acc[p] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factor(n);
    std::vector<Int> out{1};
    for (auto& [p, e] : fac) {
        size_t sz = out.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (sgn(n) <= 0) throw Error("squarefree_decompose: argument must be positive");
    Int d = 1, s = 1;
    for (auto& [p, e] : factor(n)) {
        for (int k = 0; k < e / 2; ++k) s *= p;
        if (e % 2) d *= p;
    }
    return {d, s};
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 65536;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p) {
    Int a0 = mod(a, p);
    if (a0 == 0) return Int(0);
    if (p == 2) return a0;
    if (mpz_legendre(a0.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
    // Tonelli-Shanks.
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    auto powmod = [&p](Int base, Int e) {
        Int r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    if (s == 1) return powmod(a0, (p + 1) / 4);
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int m(static_cast<unsigned long>(s)), c = powmod(z, q), t = powmod(a0, q);
    Int r = powmod(a0, (q + 1) / 2);
    while (t != 1) {
        Int i = 0, tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
            if (i == m) return std::nullopt;  // a not a residue (defensive)
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

namespace {
int g_num_threads = 1;
}

void set_num_threads(int n) { g_num_threads = n < 1 ? 1 : n; }
int num_threads() { return g_num_threads; }

Int parse_int(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    Int v;
    if (t.empty() || mpz_set_str(v.get_mpz_t(), t.c_str(), 10) != 0)
        throw Error("parse error: expected integer, got '" + s + "'");
    return v;
}

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    Int num = parse_int(s.substr(0, slash));
    Int den = slash == std::string::npos ? Int(1) : parse_int(s.substr(slash + 1));
    if (den == 0) throw Error("parse error: zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace rsym
