#include <doctest.h>

#include "acyl/words.hpp"

using namespace acyl;

TEST_CASE("free reduction") {
    CHECK(reduced({1, -1}) == Word{});
    CHECK(reduced({1, 2, -2, -1}) == Word{});
    CHECK(reduced({1, 2, -2, 1}) == Word{1, 1});
    CHECK(is_reduced({1, 2, -1}));
    CHECK(!is_reduced({1, -1}));
    CHECK(concat({1, 2}, {-2, 3}) == Word{1, 3});
    CHECK(inverse({1, 2}) == Word{-2, -1});
}

TEST_CASE("powers and roots") {
    Word w{1, 2}; // ab
    CHECK(power(w, 3) == Word{1, 2, 1, 2, 1, 2});
    CHECK(power(w, -1) == Word{-2, -1});
    CHECK(power_of({1, 2, 1, 2}, w) == 2);
    CHECK(power_of({-2, -1, -2, -1}, w) == -2);
    CHECK(!power_of({1}, w));
    CHECK(!power_of({1, 2, 1}, w));
    CHECK(power_of({}, w) == 0);

    CHECK(primitive_root({1, 2, 1, 2}).second == 2);
    CHECK(primitive_root({1, 2}).second == 1);
    CHECK(primitive_root({1, 2, 1, 2}).first == Word{1, 2});
}

TEST_CASE("shortlex") {
    CHECK(shortlex_less({1}, {1, 2}));
    CHECK(shortlex_less({1}, {-1}));
    CHECK(shortlex_less({-1}, {2}));
    CHECK(!shortlex_less({1}, {1}));
    CHECK(is_cyclically_reduced({1, 2}));
    CHECK(!is_cyclically_reduced({1, 2, -1}));
}
