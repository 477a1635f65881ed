#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dicelab/die.hpp"

namespace dicelab {

/// Streams every die of a class in lexicographic order of the face
/// vector, one at a time with constant memory. Single consumer; copy the
/// enumerator if you need an independent cursor.
///
///     for (ClassEnumerator e(spec); !e.done(); e.advance()) use(e.faces());
class ClassEnumerator {
public:
    explicit ClassEnumerator(ClassSpec spec);

    bool done() const noexcept { return done_; }

    /// Current face vector; valid until advance(). Weakly increasing,
    /// within bounds, summing to sigma.
    const std::vector<Face>& faces() const noexcept { return faces_; }

    Die die() const { return Die(faces_); }

    /// Steps to the lexicographic successor, or into the done state.
    void advance();

    const ClassSpec& spec() const noexcept { return spec_; }

private:
    // Lex-min completion of positions [from, n) given the face before
    // them and the pip budget left.  False if no completion exists.
    bool fill_suffix(std::size_t from, Face prev, Face remaining);

    ClassSpec spec_;
    Face lo_ = 0;
    Face hi_ = 0;
    std::vector<Face> faces_;
    bool done_ = false;
};

inline ClassEnumerator iter_class(ClassSpec spec) { return ClassEnumerator(std::move(spec)); }

template <typename Fn>
void for_each_die(const ClassSpec& spec, Fn&& fn) {
    for (ClassEnumerator e(spec); !e.done(); e.advance()) fn(e.faces());
}

/// Materializes the class, in enumeration order, stopping after `limit`
/// dice when given.
std::vector<Die> collect_class(const ClassSpec& spec,
                               std::optional<std::int64_t> limit = std::nullopt);

/// Class size by a bounded-parts partition-count recurrence; no
/// enumeration. Throws std::overflow_error if the count exceeds 64 bits.
std::int64_t count_class(const ClassSpec& spec);

/// The family X_n: dice of D_n(n(n-1)/2) with every face in [0, n-1].
ClassSpec family_X(std::int64_t n);

}  // namespace dicelab
