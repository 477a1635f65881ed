#include <doctest.h>

#include <algorithm>

#include "dicelab/compare.hpp"
#include "dicelab/enumerate.hpp"

using namespace dicelab;

namespace {

ClassSpec spec_of(std::int64_t n, std::int64_t sigma, std::optional<Face> lo = std::nullopt,
                  std::optional<Face> hi = std::nullopt) {
    return ClassSpec{n, sigma, lo, hi};
}

}  // namespace

TEST_CASE("iter_class yields the whole class in lexicographic order") {
    std::vector<Die> dice = collect_class(spec_of(3, 3));
    REQUIRE(dice.size() == 3);
    CHECK(dice[0] == make_die({0, 0, 3}));
    CHECK(dice[1] == make_die({0, 1, 2}));
    CHECK(dice[2] == make_die({1, 1, 1}));

    CHECK(collect_class(spec_of(3, 0)) == std::vector<Die>{make_die({0, 0, 0})});
    CHECK(collect_class(spec_of(3, 3, Face{1})) == std::vector<Die>{make_die({1, 1, 1})});
    CHECK(collect_class(spec_of(3, 2, Face{1})).empty());
}

TEST_CASE("every yielded die satisfies the spec, strictly increasing in lex order") {
    for (ClassSpec spec : {spec_of(5, 11), spec_of(4, 9, Face{1}), spec_of(6, 15, Face{0}, Face{5}),
                           spec_of(1, 4), spec_of(7, 3)}) {
        std::vector<Face> previous;
        std::int64_t seen = 0;
        for (ClassEnumerator e(spec); !e.done(); e.advance()) {
            const std::vector<Face>& faces = e.faces();
            REQUIRE(faces.size() == static_cast<std::size_t>(spec.n));
            CHECK(std::is_sorted(faces.begin(), faces.end()));
            Face total = 0;
            for (Face f : faces) {
                total += f;
                CHECK(f >= spec.effective_min());
                if (spec.max_face) CHECK(f <= *spec.max_face);
            }
            CHECK(total == spec.sigma);
            if (!previous.empty()) CHECK(previous < faces);
            previous = faces;
            ++seen;
        }
        CHECK(seen == count_class(spec));
    }
}

TEST_CASE("count_class uses the partition recurrence, no enumeration") {
    CHECK(count_class(spec_of(3, 3)) == 3);
    CHECK(count_class(spec_of(3, 6)) == 7);
    for (std::int64_t k = 1; k <= 9; ++k) CHECK(count_class(spec_of(k, 0)) == 1);
    CHECK(count_class(spec_of(3, 2, Face{1})) == 0);
    CHECK(count_class(spec_of(2, 100, Face{0}, Face{49})) == 0);
    CHECK(count_class(spec_of(2, 98, Face{0}, Face{49})) == 1);
}

TEST_CASE("collect_class honors its cap") {
    std::vector<Die> capped = collect_class(spec_of(3, 3), 2);
    REQUIRE(capped.size() == 2);
    CHECK(capped[1] == make_die({0, 1, 2}));
}

TEST_CASE("family X_n restricts faces to [0, n-1]") {
    CHECK(family_X(3) == ClassSpec{3, 3, Face{0}, Face{2}});
    CHECK(collect_class(family_X(3)) ==
          std::vector<Die>{make_die({0, 1, 2}), make_die({1, 1, 1})});
    CHECK(collect_class(family_X(2)) == std::vector<Die>{make_die({0, 1})});

    for (std::int64_t n = 2; n <= 6; ++n) {
        Die base = base_die(n);
        for_each_die(family_X(n), [&](const std::vector<Face>& faces) {
            CHECK(delta(Die(faces), base) == 0);
        });
    }
}

TEST_CASE("shifting by the lower bound is a bijection onto the min-face-0 class") {
    for (Face p : {Face{1}, Face{2}, Face{3}}) {
        std::int64_t n = 4, sigma = 10;
        std::vector<Die> bounded = collect_class(spec_of(n, sigma + n * p, p));
        std::vector<Die> ground = collect_class(spec_of(n, sigma));
        REQUIRE(bounded.size() == ground.size());
        for (std::size_t i = 0; i < bounded.size(); ++i)
            CHECK(shift(bounded[i], -p) == ground[i]);
    }
}
