#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsym {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(long x) { return (x > 0) - (x < 0); }

inline Int abs(const Int& x) { return ::abs(x); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Floor of a/b for b != 0.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    if (sgn(b) > 0) {
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    } else {
        Int na = -a, nb = -b;
        mpz_fdiv_q(q.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    }
    return q;
}

/// Floor of sqrt(n); requires n >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

/// a^-1 mod m; requires gcd(a, m) = 1, m > 1.
inline Int modinv(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("modinv: not invertible");
    return r;
}

/// Non-negative residue a mod m for m > 0.
inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Prime factorization of n >= 1 as (prime, exponent) pairs sorted by prime.
std::vector<std::pair<Int, int>> factor(Int n);

/// All positive divisors of n >= 1, sorted ascending.
std::vector<Int> divisors(const Int& n);

/// n = d * s^2 with d squarefree. Requires n >= 1.
std::pair<Int, Int> squarefree_decompose(const Int& n);

/// Parse helpers shared by the CLI and tests. Throw Error on malformed input.
Int parse_int(const std::string& s);
Rat parse_rational(const std::string& s);

/// Primes up to 65536, computed once.
const std::vector<unsigned long>& small_primes();

/// Square root of a mod odd prime p, if a is a quadratic residue.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

/// Worker count for data-parallel enumeration (default 1; results do not
/// depend on it).
void set_num_threads(int n);
int num_threads();

}  // namespace rsym
