#include "rsym/qforms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

namespace rsym {

BQF parse_bqf(const std::string& s) {
    std::vector<Int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(parse_int(tok));
    if (v.size() != 3) throw Error("parse error: form literal must be 'A,B,C'");
    return {v[0], v[1], v[2]};
}

BQF assoc_form(const Mat2& m) {
    if (classify(m) == MatClass::Scalar)
        throw ScalarInputError("assoc_form: scalar matrix has no associated form");
    return {m.c, m.d - m.a, -m.b};
}

int form_sign(const BQF& q) { return q.A != 0 ? sgn(q.A) : sgn(q.C); }

BQF form_action(const BQF& q, const Mat2& g) {
    return {q.A * g.a * g.a + q.B * g.a * g.c + q.C * g.c * g.c,
            2 * q.A * g.a * g.b + q.B * (g.a * g.d + g.b * g.c) + 2 * q.C * g.c * g.d,
            q.A * g.b * g.b + q.B * g.b * g.d + q.C * g.d * g.d};
}

std::pair<QuadIrr, QuadIrr> roots(const BQF& q) {
    if (q.A == 0)
        throw DegenerateLeadingCoefficientError("roots: leading coefficient is 0");
    Int D = q.disc();
    if (sgn(D) <= 0 || is_perfect_square(D))
        throw Error("roots: discriminant must be positive non-square");
    auto [d, s] = squarefree_decompose(D);
    QuadIrr plus = QuadIrr::with_known_squarefree(-q.B, s, d, 2 * q.A);
    QuadIrr minus = QuadIrr::with_known_squarefree(-q.B, -s, d, 2 * q.A);
    if (sgn(q.A) > 0) return {plus, minus};
    return {minus, plus};
}

bool is_reduced_form(const BQF& q) {
    Int D = q.disc();
    if (sgn(q.B) <= 0 || q.B * q.B >= D) return false;
    Int twoA = 2 * rsym::abs(q.A);
    // sqrt(D) - B < 2|A|  <=>  D < (2|A| + B)^2
    if (D >= (twoA + q.B) * (twoA + q.B)) return false;
    // 2|A| < sqrt(D) + B  <=>  2|A| - B < sqrt(D)
    Int lhs = twoA - q.B;
    if (sgn(lhs) > 0 && lhs * lhs >= D) return false;
    return true;
}

BQF reduce_once(const BQF& q) {
    if (q.C == 0) throw Error("reduce_once: degenerate form");
    Int D = q.disc();
    Int m = 2 * rsym::abs(q.C);
    Int base = mod(-q.B, m);
    Int r;
    if (q.C * q.C > D) {
        // r in (-|C|, |C|]
        r = base <= m / 2 ? base : base - m;
    } else {
        // unique r in (sqrt(D) - 2|C|, sqrt(D))
        Int s = isqrt(D);
        r = s - mod(s - base, m);
    }
    return {q.C, r, (r * r - D) / (4 * q.C)};
}

BQF first_reduced(const BQF& q) {
    BQF f = q;
    for (int i = 0; i < 40000; ++i) {
        if (is_reduced_form(f)) return f;
        f = reduce_once(f);
    }
    throw Error("first_reduced: reduction did not terminate");
}

FormClass reduce_cycle(const BQF& q) {
    Int D = q.disc();
    if (sgn(D) <= 0 || is_perfect_square(D))
        throw Error("reduce_cycle: discriminant must be positive non-square");
    BQF f0 = first_reduced(q);
    std::vector<BQF> cycle{f0};
    BQF f = reduce_once(f0);
    while (!(f == f0)) {
        cycle.push_back(f);
        f = reduce_once(f);
        if (cycle.size() > 1000000) throw Error("reduce_cycle: cycle overflow");
    }
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    return {q, cycle};
}

bool gamma_equivalent(const BQF& q1, const BQF& q2) {
    if (q1.disc() != q2.disc() || q1.content() != q2.content()) return false;
    FormClass cls = reduce_cycle(q1);
    BQF r2 = first_reduced(q2);
    return std::find(cls.cycle.begin(), cls.cycle.end(), r2) != cls.cycle.end();
}

namespace {

// Candidate search over one n-subrange of the straddle algorithm: n = cB-2dA
// runs over |n| < c sqrt(D) with fixed parity; for each n, A runs over the
// divisors of (c^2 D - n^2)/4 compatible with the congruence c | n + 2dA.
struct StraddleJob {
    Int D, c, d, c2D;
    Int n_begin, n_end;  // progression [n_begin, n_end) step 2
    Int inv2d, c2;       // inverse of (2d/g) mod c2; A == -n/g * inv2d (mod c2)
    Int g;               // gcd(2d, c); n must be divisible by g
};

void run_straddle_job(const StraddleJob& job, std::vector<BQF>& out) {
    const auto& primes = small_primes();
    // Residue setup: for odd p, p | M_n <=> n^2 == c2D (mod p).
    struct PrimeRoots {
        unsigned long p;
        Int r1, r2;  // roots of n^2 == c2D mod p (may coincide)
    };
    std::vector<PrimeRoots> roots_mod_p;
    roots_mod_p.reserve(primes.size());
    for (unsigned long p : primes) {
        if (p == 2) continue;
        Int pz(p);
        auto r = sqrt_mod_prime(job.c2D, pz);
        if (!r) continue;
        roots_mod_p.push_back({p, *r, mod(-*r, pz)});
    }

    const long block = 1 << 14;
    std::vector<Int> cofactor(block);
    std::vector<std::vector<std::pair<Int, int>>> partial(block);

    for (Int lo = job.n_begin; lo < job.n_end; lo += 2 * block) {
        Int hi = lo + 2 * block;
        if (hi > job.n_end) hi = job.n_end;
        long count = mpz_get_si(Int((hi - lo) / 2).get_mpz_t());
        for (long j = 0; j < count; ++j) {
            Int n = lo + 2 * j;
            cofactor[j] = (job.c2D - n * n) / 4;
            partial[j].clear();
        }
        // Sieve odd small primes across the block.
        for (const auto& pr : roots_mod_p) {
            Int pz(pr.p);
            for (const Int& root : {pr.r1, pr.r2}) {
                // smallest index j >= 0 with lo + 2j == root (mod p)
                Int diff = mod(root - lo, pz);
                if (mpz_odd_p(diff.get_mpz_t())) diff += pz;  // make even; 2 | p+... p odd
                Int j0 = diff / 2;
                for (Int j = j0; j < count; j += pz) {
                    long idx = mpz_get_si(j.get_mpz_t());
                    int e = 0;
                    while (mpz_divisible_ui_p(cofactor[idx].get_mpz_t(), pr.p)) {
                        mpz_divexact_ui(cofactor[idx].get_mpz_t(), cofactor[idx].get_mpz_t(), pr.p);
                        ++e;
                    }
                    if (e) partial[idx].push_back({pz, e});
                }
                if (pr.r1 == pr.r2) break;
            }
        }
        for (long j = 0; j < count; ++j) {
            Int n = lo + 2 * j;
            if (job.g > 1 && mod(n, job.g) != 0) continue;
            Int M = (job.c2D - n * n) / 4;
            if (sgn(M) <= 0) continue;
            Int A0 = job.c2 > 1 ? mod(-(n / job.g) * job.inv2d, job.c2) : Int(0);
            // Finish the factorization of the sieved cofactor.
            auto fac = partial[j];
            Int rem = cofactor[j];
            int e2 = 0;
            while (mpz_even_p(rem.get_mpz_t())) {
                rem /= 2;
                ++e2;
            }
            if (e2) fac.push_back({Int(2), e2});
            if (rem > 1) {
                if (rem < Int(65536) * 65536 || is_probable_prime(rem)) {
                    fac.push_back({rem, 1});
                } else if (is_perfect_square(rem)) {
                    fac.push_back({isqrt(rem), 2});
                } else {
                    for (auto& pe : factor(rem)) fac.push_back(pe);
                }
            }
            // Divisors of M in the admissible congruence class.
            std::vector<Int> divs{1};
            for (auto& [p, e] : fac) {
                size_t sz = divs.size();
                Int pk = 1;
                for (int k = 1; k <= e; ++k) {
                    pk *= p;
                    for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
                }
            }
            for (const Int& A : divs) {
                if (job.c2 > 1 && mod(A, job.c2) != A0) continue;
                Int B = (n + 2 * job.d * A) / job.c;
                Int num = B * B - job.D;
                if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * A).get_mpz_t())) continue;
                Int C = num / (4 * A);
                out.push_back({A, B, C});
                out.push_back({-A, -B, -C});
            }
        }
    }
}

}  // namespace

std::vector<BQF> straddling_forms_all(const Int& D, const Rat& x) {
    if (sgn(D) <= 0 || is_perfect_square(D))
        throw Error("straddling_forms_all: discriminant must be positive non-square");
    Int c = x.get_den();
    Int d = -x.get_num();
    Int c2D = c * c * D;
    Int N = isqrt(c2D);  // c2D non-square, so n ranges over [-N, N]

    // Parity of n fixed by 4 | c^2 D - n^2 (c^2 D is 0 or 1 mod 4).
    int par = mpz_get_si(mod(c2D, 2).get_mpz_t());
    Int n_begin = -N;
    if (mod(n_begin, 2) != par) n_begin += 1;
    Int n_last = mod(N, 2) == par ? N : N - 1;
    Int n_end = n_last + 2;  // exclusive end on the progression

    StraddleJob base;
    base.D = D;
    base.c = c;
    base.d = d;
    base.c2D = c2D;
    base.n_begin = n_begin;
    base.n_end = n_end;
    base.g = d == 0 ? Int(1) : gcd(2 * d, c);
    base.c2 = c / base.g;
    if (base.c2 > 1) base.inv2d = modinv(mod(2 * d / base.g, base.c2), base.c2);

    int workers = num_threads();
    Int total = (n_end - n_begin) / 2;
    std::vector<std::vector<BQF>> results(static_cast<size_t>(workers));
    if (workers <= 1 || total < 4096) {
        run_straddle_job(base, results[0]);
    } else {
        std::vector<std::thread> threads;
        Int chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            StraddleJob job = base;
            job.n_begin = n_begin + 2 * chunk * w;
            job.n_end = job.n_begin + 2 * chunk;
            if (job.n_end > n_end) job.n_end = n_end;
            if (job.n_begin >= n_end) break;
            threads.emplace_back([job, &results, w] { run_straddle_job(job, results[static_cast<size_t>(w)]); });
        }
        for (auto& t : threads) t.join();
    }

    std::vector<BQF> out;
    for (auto& part : results) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BQF> enumerate_straddling(const FormClass& cls, const Rat& x) {
    Int D = cls.representative.disc();
    Int content = cls.representative.content();
    std::set<BQF> cycle_set(cls.cycle.begin(), cls.cycle.end());
    std::vector<BQF> out;
    for (const BQF& q : straddling_forms_all(D, x)) {
        if (q.content() != content) continue;
        if (cycle_set.count(first_reduced(q))) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BQF> filter_straddle_point(const std::vector<BQF>& forms, const RealAlg& p) {
    std::vector<BQF> out;
    for (const BQF& q : forms) {
        auto [w, wp] = roots(q);
        RealAlg w_alg{w}, wp_alg{wp};
        if (compare(wp_alg, p) == Ordering::LT && compare(p, w_alg) == Ordering::LT)
            out.push_back(q);
    }
    return out;
}

}  // namespace rsym
