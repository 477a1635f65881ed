#include "dicelab/enumerate.hpp"

#include <algorithm>

namespace dicelab {

ClassEnumerator::ClassEnumerator(ClassSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    lo_ = spec_.effective_min();
    hi_ = spec_.effective_max();
    faces_.assign(static_cast<std::size_t>(spec_.n), 0);
    if (hi_ < lo_ || !fill_suffix(0, lo_, spec_.sigma)) done_ = true;
}

bool ClassEnumerator::fill_suffix(std::size_t from, Face prev, Face remaining) {
    std::size_t n = faces_.size();
    for (std::size_t j = from; j < n; ++j) {
        Face left = static_cast<Face>(n - j);  // faces still to place, this one included
        // Smallest value keeping the tail reachable: the rest can carry at
        // most (left-1)*hi_ pips.
        Face v = std::max(prev, remaining - (left - 1) * hi_);
        if (v > hi_ || v * left > remaining) return false;
        faces_[j] = v;
        remaining -= v;
        prev = v;
    }
    return remaining == 0;
}

void ClassEnumerator::advance() {
    if (done_) return;
    std::size_t n = faces_.size();
    // Pip budget from position i to the end, maintained right to left.
    Face tail = faces_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        tail += faces_[i];
        Face candidate = faces_[i] + 1;
        Face width = static_cast<Face>(n - i);
        // Raising position i is feasible iff the suffix can still absorb
        // the budget: candidate*width <= tail guards the floor, and the
        // ceiling follows from the current suffix being feasible.
        if (candidate <= hi_ && candidate * width <= tail) {
            faces_[i] = candidate;
            if (fill_suffix(i + 1, candidate, tail - candidate)) return;
        }
    }
    done_ = true;
}

std::vector<Die> collect_class(const ClassSpec& spec, std::optional<std::int64_t> limit) {
    std::vector<Die> dice;
    for (ClassEnumerator e(spec); !e.done(); e.advance()) {
        if (limit && static_cast<std::int64_t>(dice.size()) >= *limit) break;
        dice.push_back(e.die());
    }
    return dice;
}

std::int64_t count_class(const ClassSpec& spec) {
    spec.validate();
    if (spec.empty()) return 0;
    Face lo = spec.effective_min();
    Face hi = spec.effective_max();
    // Shift every face down by lo: count partitions of `total` into at
    // most n parts, each part at most `bound`.
    std::int64_t total = spec.sigma - checked_mul(spec.n, lo);
    std::int64_t bound = hi - lo;
    std::int64_t parts = spec.n;
    if (total == 0) return 1;

    // dp[j][s]: partitions of s into at most j parts, each <= v, where v
    // sweeps 1..bound. Either no part equals v (the value before this
    // round) or one does (dp[j-1][s-v], already updated this round).
    std::vector<std::vector<std::int64_t>> dp(
        static_cast<std::size_t>(parts) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(total) + 1, 0));
    for (auto& row : dp) row[0] = 1;
    for (std::int64_t v = 1; v <= bound; ++v) {
        for (std::int64_t j = 1; j <= parts; ++j) {
            auto& row = dp[static_cast<std::size_t>(j)];
            const auto& prev = dp[static_cast<std::size_t>(j - 1)];
            for (std::int64_t s = v; s <= total; ++s) {
                row[static_cast<std::size_t>(s)] =
                    checked_add(row[static_cast<std::size_t>(s)],
                                prev[static_cast<std::size_t>(s - v)]);
            }
        }
    }
    return dp[static_cast<std::size_t>(parts)][static_cast<std::size_t>(total)];
}

ClassSpec family_X(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("family X_n needs n >= 1");
    return ClassSpec{n, checked_mul(n, n - 1) / 2, Face{0}, Face{n - 1}};
}

}  // namespace dicelab
