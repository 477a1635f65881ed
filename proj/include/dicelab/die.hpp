#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dicelab {

/// Face value in pips. Faces are bounded by the class sum and counts by
/// n_A*n_B, so checked 64-bit arithmetic covers everything at desk scale.
using Face = std::int64_t;

/// Thrown when a class-wide operation would enumerate more dice than the
/// configured cap allows.
class ClassTooLargeError : public std::runtime_error {
public:
    ClassTooLargeError(std::int64_t class_size, std::int64_t cap);
    std::int64_t class_size() const noexcept { return class_size_; }
    std::int64_t cap() const noexcept { return cap_; }

private:
    std::int64_t class_size_;
    std::int64_t cap_;
};

/// Thrown by the standard-die classifier when the face sum is not n(n+1)/2.
class SumMismatchError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r{};
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r{};
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

/// An n-sided die: a weakly increasing sequence of non-negative faces.
/// Construction canonicalizes (sorts), so equality is structural equality
/// and comparison (<=>) is lexicographic on the sorted face vector.
class Die {
public:
    explicit Die(std::vector<Face> faces);

    const std::vector<Face>& faces() const noexcept { return faces_; }
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(faces_.size()); }
    Face face_sum() const;
    Face min_face() const noexcept { return faces_.front(); }
    Face max_face() const noexcept { return faces_.back(); }

    bool operator==(const Die&) const = default;
    auto operator<=>(const Die&) const = default;

private:
    std::vector<Face> faces_;
};

Die make_die(std::span<const Face> faces);
Die make_die(std::initializer_list<Face> faces);

/// Adds c to every face; rejects shifts that would create a negative face.
Die shift(const Die& d, Face c);

/// The standard n-die (1,2,...,n), face sum n(n+1)/2.
Die standard_die(std::int64_t n);

/// The base n-die (0,1,...,n-1), face sum n(n-1)/2.
Die base_die(std::int64_t n);

/// Parses the textual die literal used everywhere (CLI, JSON):
/// comma-separated decimal faces, e.g. "0,0,3,6,6,6". Whitespace around
/// faces is tolerated; empty items (leading/trailing commas) are not.
Die parse_die(std::string_view literal);

/// Canonical literal: faces joined by commas, no spaces.
std::string to_string(const Die& d);

enum class Relation { Beats, Ties, Loses };

Relation relation_from_delta(std::int64_t delta) noexcept;
Relation mirror(Relation r) noexcept;
std::string_view to_string(Relation r) noexcept;

/// Names a dice class D_n(sigma): all n-face dice with face sum sigma,
/// optionally restricted to faces in [min_face, max_face].
struct ClassSpec {
    std::int64_t n = 0;
    std::int64_t sigma = 0;
    std::optional<Face> min_face;
    std::optional<Face> max_face;

    /// Throws std::invalid_argument unless n >= 1, sigma >= 0 and the
    /// bounds are ordered. Faces are non-negative, so a negative lower
    /// bound is treated as 0.
    void validate() const;

    Face effective_min() const noexcept;
    /// Largest value any face can take: the explicit bound if tighter,
    /// otherwise sigma minus the least the other n-1 faces can carry.
    Face effective_max() const noexcept;

    /// Nonempty iff n*min <= sigma <= n*max.
    bool empty() const;

    bool operator==(const ClassSpec&) const = default;
};

}  // namespace dicelab
