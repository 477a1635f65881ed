#include "dicelab/compare.hpp"

#include <algorithm>

namespace dicelab {

namespace {

struct SweepCounts {
    std::int64_t wins = 0;
    std::int64_t ties = 0;
};

// #{(x,y) in a x b : x > y} and #{x == y}, assuming both vectors sorted.
// Both cursors only move forward, so the sweep is O(|a| + |b|).
SweepCounts sweep(const std::vector<Face>& a, const std::vector<Face>& b) {
    SweepCounts counts;
    std::size_t below = 0;  // first index with b[below] >= x
    std::size_t upto = 0;   // first index with b[upto] > x
    for (Face x : a) {
        while (below < b.size() && b[below] < x) ++below;
        while (upto < b.size() && b[upto] <= x) ++upto;
        counts.wins += static_cast<std::int64_t>(below);
        counts.ties += static_cast<std::int64_t>(upto - below);
    }
    return counts;
}

}  // namespace

ComparisonSummary compare(const Die& a, const Die& b) {
    checked_mul(a.size(), b.size());  // counts must fit
    SweepCounts ab = sweep(a.faces(), b.faces());
    SweepCounts ba = sweep(b.faces(), a.faces());
    return ComparisonSummary{ab.wins, ba.wins, ab.ties};
}

std::int64_t delta(const Die& a, const Die& b) {
    return compare(a, b).delta();
}

Relation relation(const Die& a, const Die& b) {
    return compare(a, b).relation();
}

WinOdds win_odds(const Die& a, const Die& b) {
    ComparisonSummary s = compare(a, b);
    std::int64_t total = checked_mul(a.size(), b.size());
    return WinOdds{Rational(s.gamma_ab, total), Rational(s.gamma_ba, total),
                   Rational(s.eta, total)};
}

std::int64_t gamma_vs_base(const Die& d) {
    std::int64_t n = d.size();
    std::int64_t total = 0;
    for (Face f : d.faces()) total = checked_add(total, std::min<Face>(f, n));
    return total;
}

StandardDecomposition decompose_standard(const Die& d) {
    StandardDecomposition out;
    out.n = d.size();
    for (Face f : d.faces()) {
        if (f == 0) {
            ++out.k;
        } else if (f <= out.n) {
            ++out.l;
            out.mids.push_back(f);
        } else {
            ++out.r;
            out.highs.push_back(f);
        }
    }
    return out;
}

namespace {

void require_standard_sum(const Die& d) {
    std::int64_t n = d.size();
    std::int64_t want = checked_mul(n, n + 1) / 2;
    if (d.face_sum() != want)
        throw SumMismatchError("die " + to_string(d) + " has face sum " +
                               std::to_string(d.face_sum()) + ", the standard-die class needs " +
                               std::to_string(want));
}

}  // namespace

std::int64_t delta_vs_standard_closed_form(const Die& d) {
    require_standard_sum(d);
    StandardDecomposition parts = decompose_standard(d);
    std::int64_t high_sum = 0;
    for (Face g : parts.highs) high_sum = checked_add(high_sum, g);
    // Twice the half-integer bracket plus (k - r); the halves always
    // combine to an integer on this class.
    return 2 * (parts.r * (parts.n + 1) - high_sum) + (parts.k - parts.r);
}

Relation classify_vs_standard(const Die& d) {
    return relation_from_delta(delta_vs_standard_closed_form(d));
}

}  // namespace dicelab
