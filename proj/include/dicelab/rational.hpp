#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dicelab/die.hpp"

namespace dicelab {

/// Exact rational, always stored in lowest terms with a positive
/// denominator. Big enough for win probabilities gamma/(n_A*n_B).
class Rational {
public:
    constexpr Rational() noexcept = default;

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }

    Rational operator-(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), -checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }

    bool operator==(const Rational&) const = default;

    std::strong_ordering operator<=>(const Rational& o) const {
        return checked_mul(num_, o.den_) <=> checked_mul(o.num_, den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::string to_string(const Rational& r) {
    if (r.den() == 1) return std::to_string(r.num());
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

}  // namespace dicelab
