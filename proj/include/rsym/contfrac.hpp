#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsym/modular_group.hpp"
#include "rsym/quadirr.hpp"

namespace rsym {

/// Even-length word of positive integers; the period of a purely periodic
/// expansion and the letter sequence of Lemma-A.1 word matrices.
using CFWord = std::vector<Int>;

/// Continued fraction expansion with the canonical shape of Appendix-A
/// arithmetic: even-length preperiod, minimal even-length period (empty for
/// rationals). Entries after the first are >= 1.
struct CFExpansion {
    std::vector<Int> preperiod;
    std::vector<Int> period;

    bool purely_periodic() const { return preperiod.empty() && !period.empty(); }
    bool operator==(const CFExpansion& o) const {
        return preperiod == o.preperiod && period == o.period;
    }

    /// Literal "k0,k1;a0,a1,..." (';' separates preperiod from period).
    std::string str() const;
    static CFExpansion parse(const std::string& s);
};

/// Euclidean expansion; unique form with last entry >= 2 for non-integers.
CFExpansion cf_of_rational(const Rat& x);

/// Eventually periodic expansion with minimal even period and minimal even
/// preperiod; purely periodic exactly for reduced x.
CFExpansion cf_of_quadirr(const QuadIrr& x);

/// Product of (a_i 1; 1 0) over the word; identity for the empty word.
Mat2 word_to_matrix(const std::vector<Int>& word);

/// Exact value of an expansion: Rat when the period is empty, else QuadIrr.
RealAlg evaluate_cf(const CFExpansion& x);

/// Value of a nonempty purely periodic positive even word.
QuadIrr periodic_value(const CFWord& word);

/// Value of a finite CF [e0, e1, ..., en-1] (entries after the first >= 1).
Rat finite_cf_value(const std::vector<Int>& entries);

/// w > 1 and -1 < w' < 0.
bool is_reduced(const QuadIrr& x);

struct WordDecomposition {
    Mat2 delta;
    CFWord word;
    unsigned exponent;
};

/// m = delta * word_to_matrix(word)^exponent * delta^-1 with word the minimal
/// even period of the attracting fixed point. Requires m hyperbolic with
/// c > 0, tr > 2.
WordDecomposition hyperbolic_to_word(const Mat2& m);

/// Expansion of the Galois conjugate (four-case formula with zero
/// absorption), returned in canonical shape. Requires a nonempty period.
CFExpansion conjugate_expansion(const CFExpansion& x);

/// If w_target lies in the Gamma-orbit of the purely periodic value of word,
/// returns (preperiod length r, period shift i) with i == r (mod 2).
std::optional<std::pair<std::size_t, std::size_t>> orbit_shift_membership(
    const QuadIrr& w_target, const CFWord& word);

/// Exact order of two purely periodic values given as positive even words.
Ordering compare_periodic_values(const CFWord& a, const CFWord& b);

}  // namespace rsym
