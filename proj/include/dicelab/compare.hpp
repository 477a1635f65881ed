#pragma once

#include <cstdint>
#include <vector>

#include "dicelab/die.hpp"
#include "dicelab/rational.hpp"

namespace dicelab {

/// Exact outcome counts over all n_A*n_B ordered face pairs.
struct ComparisonSummary {
    std::int64_t gamma_ab = 0;  ///< pairs where A rolls strictly higher
    std::int64_t gamma_ba = 0;  ///< pairs where B rolls strictly higher
    std::int64_t eta = 0;       ///< equal pairs

    std::int64_t pairs() const { return checked_add(checked_add(gamma_ab, gamma_ba), eta); }
    std::int64_t delta() const { return gamma_ab - gamma_ba; }
    Relation relation() const noexcept { return relation_from_delta(gamma_ab - gamma_ba); }

    bool operator==(const ComparisonSummary&) const = default;
};

/// Counts wins/losses/ties for a vs b with one monotone sweep per
/// direction over the sorted faces, O(n_A + n_B). Dice of different
/// lengths are fine; there are n_A*n_B outcomes either way.
ComparisonSummary compare(const Die& a, const Die& b);

/// The differential gamma(a,b) - gamma(b,a). Antisymmetric.
std::int64_t delta(const Die& a, const Die& b);

Relation relation(const Die& a, const Die& b);

struct WinOdds {
    Rational win;
    Rational lose;
    Rational tie;

    bool operator==(const WinOdds&) const = default;
};

/// Exact probabilities gamma/(n_A*n_B) etc., in lowest terms; the three
/// always sum to one.
WinOdds win_odds(const Die& a, const Die& b);

/// Closed form for gamma(d, base_die(n)) with n = d.size():
/// the sum of min(f_i, n) over all faces.
std::int64_t gamma_vs_base(const Die& d);

/// Split of a die's faces relative to its own size n: k zeros, l faces
/// in [1, n], r faces >= n+1.
struct StandardDecomposition {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t l = 0;
    std::int64_t r = 0;
    std::vector<Face> mids;   ///< the l faces in [1, n], weakly increasing
    std::vector<Face> highs;  ///< the r faces >= n+1, weakly increasing

    bool operator==(const StandardDecomposition&) const = default;
};

StandardDecomposition decompose_standard(const Die& d);

/// Closed form for delta(d, standard_die(n)), valid on the class with
/// face sum n(n+1)/2; computed entirely in integers as
/// (2r(n+1) - 2*sum(highs)) + (k - r). Throws SumMismatchError otherwise.
std::int64_t delta_vs_standard_closed_form(const Die& d);

/// Relation against the standard die from the sign of the closed form.
/// Same precondition on the face sum.
Relation classify_vs_standard(const Die& d);

}  // namespace dicelab
