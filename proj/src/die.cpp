#include "dicelab/die.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace dicelab {

ClassTooLargeError::ClassTooLargeError(std::int64_t class_size, std::int64_t cap)
    : std::runtime_error("class has " + std::to_string(class_size) +
                         " dice, exceeding the cap of " + std::to_string(cap)),
      class_size_(class_size),
      cap_(cap) {}

Die::Die(std::vector<Face> faces) : faces_(std::move(faces)) {
    if (faces_.empty())
        throw std::invalid_argument("a die needs at least one face");
    for (Face f : faces_) {
        if (f < 0)
            throw std::invalid_argument("negative face " + std::to_string(f));
    }
    std::sort(faces_.begin(), faces_.end());
}

Face Die::face_sum() const {
    Face total = 0;
    for (Face f : faces_) total = checked_add(total, f);
    return total;
}

Die make_die(std::span<const Face> faces) {
    return Die(std::vector<Face>(faces.begin(), faces.end()));
}

Die make_die(std::initializer_list<Face> faces) {
    return Die(std::vector<Face>(faces));
}

Die shift(const Die& d, Face c) {
    std::vector<Face> shifted;
    shifted.reserve(d.faces().size());
    for (Face f : d.faces()) {
        Face g = checked_add(f, c);
        if (g < 0)
            throw std::invalid_argument("shift by " + std::to_string(c) +
                                        " makes face " + std::to_string(f) + " negative");
        shifted.push_back(g);
    }
    return Die(std::move(shifted));
}

Die standard_die(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("standard die needs n >= 1");
    std::vector<Face> faces(static_cast<std::size_t>(n));
    std::iota(faces.begin(), faces.end(), Face{1});
    return Die(std::move(faces));
}

Die base_die(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("base die needs n >= 1");
    std::vector<Face> faces(static_cast<std::size_t>(n));
    std::iota(faces.begin(), faces.end(), Face{0});
    return Die(std::move(faces));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Die parse_die(std::string_view literal) {
    std::vector<Face> faces;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = literal.find(',', start);
        std::string_view item = trim(literal.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (item.empty())
            throw std::invalid_argument("bad die literal \"" + std::string(literal) + "\"");
        Face value{};
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument("bad face \"" + std::string(item) + "\" in die literal");
        faces.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Die(std::move(faces));
}

std::string to_string(const Die& d) {
    std::string out;
    for (std::size_t i = 0; i < d.faces().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d.faces()[i]);
    }
    return out;
}

Relation relation_from_delta(std::int64_t delta) noexcept {
    if (delta > 0) return Relation::Beats;
    if (delta < 0) return Relation::Loses;
    return Relation::Ties;
}

Relation mirror(Relation r) noexcept {
    switch (r) {
        case Relation::Beats: return Relation::Loses;
        case Relation::Loses: return Relation::Beats;
        case Relation::Ties: return Relation::Ties;
    }
    return Relation::Ties;
}

std::string_view to_string(Relation r) noexcept {
    switch (r) {
        case Relation::Beats: return "beats";
        case Relation::Loses: return "loses";
        case Relation::Ties: return "ties";
    }
    return "ties";
}

void ClassSpec::validate() const {
    if (n < 1) throw std::invalid_argument("class needs n >= 1 faces");
    if (sigma < 0) throw std::invalid_argument("class needs sigma >= 0");
    if (min_face && max_face && *min_face > *max_face)
        throw std::invalid_argument("min_face exceeds max_face");
    // Guard n*sigma-scale arithmetic used by enumeration and counting.
    checked_mul(n, checked_add(sigma, 1));
}

Face ClassSpec::effective_min() const noexcept {
    return min_face ? std::max<Face>(*min_face, 0) : 0;
}

Face ClassSpec::effective_max() const noexcept {
    Face lo = effective_min();
    // What one face can take with the other n-1 at lo; wide arithmetic so a
    // silly lower bound cannot overflow, clamped back into Face range.
    __int128 budget = static_cast<__int128>(sigma) - static_cast<__int128>(n - 1) * lo;
    if (budget < 0) return -1;
    Face capped = budget > std::numeric_limits<Face>::max()
                      ? std::numeric_limits<Face>::max()
                      : static_cast<Face>(budget);
    return max_face ? std::min(*max_face, capped) : capped;
}

bool ClassSpec::empty() const {
    validate();
    Face lo = effective_min();
    Face hi = effective_max();
    if (hi < lo) return true;
    // lo <= hi <= sigma here, and validate() guarded n*(sigma+1).
    return checked_mul(n, lo) > sigma || checked_mul(n, hi) < sigma;
}

}  // namespace dicelab
