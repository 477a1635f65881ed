#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dicelab/compare.hpp"
#include "dicelab/die.hpp"
#include "dicelab/enumerate.hpp"

namespace dicelab {

struct TournamentOptions {
    /// Refuse classes with more dice than this (ClassTooLargeError).
    std::int64_t class_cap = 200'000;
    /// Stop collecting 3-cycles after this many; the report is flagged
    /// truncated. Cycle counts explode combinatorially in large classes.
    std::int64_t cycle_limit = 10'000;
    /// Worker threads for the pairwise matrix; 0 picks hardware_concurrency.
    unsigned threads = 0;
};

/// Antisymmetric matrix of differentials delta(D_i, D_j), zero diagonal.
class DeltaMatrix {
public:
    DeltaMatrix() = default;
    explicit DeltaMatrix(std::size_t size) : size_(size), cells_(size * size, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::int32_t at(std::size_t i, std::size_t j) const { return cells_[i * size_ + j]; }
    void set(std::size_t i, std::size_t j, std::int32_t v) { cells_[i * size_ + j] = v; }

private:
    std::size_t size_ = 0;
    std::vector<std::int32_t> cells_;
};

/// A non-transitive triple: dice[a] beats dice[b] beats dice[c] beats
/// dice[a], stored with a as the smallest index of the three.
struct Cycle {
    std::size_t a = 0, b = 0, c = 0;
    bool operator==(const Cycle&) const = default;
};

struct TournamentReport {
    ClassSpec spec;
    std::vector<Die> dice;  ///< all class members, enumeration order
    DeltaMatrix delta;
    std::vector<std::size_t> undominated;     ///< beaten by no other die
    std::vector<std::size_t> universal_ties;  ///< delta 0 against every other die
    std::vector<std::size_t> worst;           ///< beaten by every other die
    std::vector<Cycle> cycles;                ///< 3-cycles in lex index order
    bool cycles_truncated = false;
};

/// Full pairwise analysis of a class: delta matrix (built in parallel over
/// rows), dominance sets, and 3-cycles up to the configured limit.
TournamentReport tournament(const ClassSpec& spec, const TournamentOptions& opts = {});

/// Dominance digraph in DOT: one node per die labeled with its literal,
/// an edge i -> j with weight delta whenever D_i beats D_j; ties get no edge.
void write_dot(std::ostream& os, const TournamentReport& report);

/// All dice of the class that tie with every other member.
std::vector<Die> universal_tie_dice(const ClassSpec& spec, const TournamentOptions& opts = {});

/// One +1/-1 transfer between two faces, staying inside X_n.
struct SwapStep {
    Die from_die;
    Die to_die;
    std::size_t raised_index = 0;   ///< index into from_die.faces() that gained 1
    std::size_t lowered_index = 0;  ///< index into from_die.faces() that lost 1
};

/// Applies the transfer d[i0]+1, d[j0]-1 and checks the differential
/// against the base die is unchanged. Requires d in X_n, f[i0] <= n-2 and
/// f[j0] >= 1 (equivalently, the result stays in X_n).
SwapStep swap_invariance_check(const Die& d, std::size_t i0, std::size_t j0);

/// A sequence of such transfers from base_die(n) to d, every intermediate
/// die in X_n. Deterministic choice: each step raises the highest face
/// still below its target and lowers the first face of the highest run
/// still above its target, so the vector stays sorted in place.
std::vector<SwapStep> swap_path(const Die& d);

struct BaseUnbeatableReport {
    std::int64_t n = 0;
    std::int64_t class_size = 0;
    std::int64_t tie_count = 0;
    std::int64_t loss_count = 0;
    /// Dice beating D_0, or tying with a face above n-1, or losing with
    /// all faces below n: all expected to stay empty.
    std::vector<Die> counterexamples;

    bool pass() const noexcept { return counterexamples.empty(); }
};

/// Exhaustively checks Prop-style unbeatability of D_0 = (0,...,n-1) over
/// D_n(n(n-1)/2): no die beats it, ties exactly when max face <= n-1.
BaseUnbeatableReport verify_base_unbeatable(std::int64_t n, const TournamentOptions& opts = {});

struct ShiftedUnbeatableReport {
    std::int64_t n = 0;
    Face p = 0;
    Face q = 0;
    std::int64_t sigma = 0;
    std::int64_t class_size = 0;
    std::int64_t tie_count = 0;
    std::int64_t loss_count = 0;
    std::vector<Die> counterexamples;
    /// Shift-by-(-p) maps each result exactly onto the p = 0 case.
    bool bijection_ok = false;

    bool pass() const noexcept { return counterexamples.empty() && bijection_ok; }
};

/// Same claim for the run die D_pq = (p, p+1, ..., p+n-1) over the class
/// with min face p, cross-checked through the shift bijection onto p = 0.
ShiftedUnbeatableReport verify_shifted_unbeatable(std::int64_t n, Face p,
                                                  const TournamentOptions& opts = {});

struct WorstDieReport {
    std::int64_t n = 0;
    std::int64_t sigma = 0;
    std::int64_t class_size = 0;
    std::int64_t bound = 0;      ///< n - 2
    std::int64_t min_delta = 0;  ///< smallest delta(D, D_w) seen over D != D_w
    std::vector<Die> counterexamples;

    bool pass() const noexcept { return counterexamples.empty(); }
};

/// Exhaustively checks every D != D_w = (0,...,0,sigma) in D_n(sigma)
/// satisfies delta(D, D_w) >= n-2 > 0. Needs n >= 3, sigma >= 2.
WorstDieReport verify_worst(std::int64_t n, std::int64_t sigma,
                            const TournamentOptions& opts = {});

struct MaxDeltaReport {
    std::int64_t n = 0;
    std::int64_t sigma = 0;
    std::int64_t class_size = 0;
    std::int64_t max_delta = 0;
    std::int64_t expected = 0;    ///< floor((n-1)/2)
    std::vector<Die> maximizers;  ///< lexicographic order
    std::optional<Die> construction;  ///< the explicit extremal die for this parity
    bool construction_attains = false;
    /// Odd n: the construction is the unique maximizer. Even n: every
    /// maximizer has exactly n/2 - 1 zeros and no face above n.
    bool shape_ok = false;

    bool pass() const noexcept {
        return max_delta == expected && construction_attains && shape_ok;
    }
};

/// Exhaustive maximum of delta(., standard_die(n)) over D_n(n(n+1)/2),
/// checked against floor((n-1)/2) and the parity-specific extremal shapes.
MaxDeltaReport max_delta_vs_standard(std::int64_t n, const TournamentOptions& opts = {});

struct StandardFormReport {
    std::int64_t n = 0;
    std::int64_t class_size = 0;
    std::vector<Die> mismatches;

    bool pass() const noexcept { return mismatches.empty(); }
};

/// Closed-form delta against the standard die vs direct comparison, for
/// every die of D_n(n(n+1)/2).
StandardFormReport verify_standard_closed_form(std::int64_t n,
                                               const TournamentOptions& opts = {});

struct SwapFamilyReport {
    std::int64_t n = 0;
    std::int64_t family_size = 0;
    std::int64_t total_steps = 0;  ///< summed swap-path lengths
    bool all_tie_with_base = false;
    bool paths_ok = false;  ///< every path valid, in X_n, delta 0 throughout
    std::vector<Die> counterexamples;

    bool pass() const noexcept {
        return all_tie_with_base && paths_ok && counterexamples.empty();
    }
};

/// Checks every member of X_n ties with D_0 and that swap_path reaches
/// each one from D_0 through X_n with the differential pinned at zero.
/// Members need not tie with each other: already in X_4, (0,0,3,3) beats
/// (0,2,2,2) although both tie with the base die.
SwapFamilyReport verify_swap_family(std::int64_t n, const TournamentOptions& opts = {});

}  // namespace dicelab
