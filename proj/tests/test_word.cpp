#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braid/word.hpp"

using namespace braid;

TEST_CASE("parse_word accepts both notations") {
  BraidWord w = parse_word("1 -2 1", 3);
  CHECK(w.n == 3);
  CHECK(w.letters == std::vector<int>{1, -2, 1});

  CHECK(parse_word("s1 s2^-1 s1", 3) == w);
  CHECK(parse_word("s1 s2^-1 s1") == w);  // n inferred as 3

  CHECK(parse_word("  1   -2\t1 ", 3) == w);
  CHECK(parse_word("", 5) == identity_word(5));
  CHECK(parse_word("3", std::nullopt).n == 4);
}

TEST_CASE("parse_word rejects bad input") {
  CHECK_THROWS_AS(parse_word("1 3", 3), std::invalid_argument);  // index 3 needs n >= 4
  CHECK_THROWS_AS(parse_word("0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("x", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s1^1", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1.5", 3), ParseError);
  CHECK_THROWS_AS(parse_word("--2", 3), ParseError);
  CHECK_THROWS_AS(parse_word("", std::nullopt), ParseError);
  CHECK_THROWS_AS(make_word(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_word(2, {2}), std::invalid_argument);
}

TEST_CASE("format_word emits both notations") {
  BraidWord w = make_word(3, {1, -2, 1});
  CHECK(format_word(w) == "1 -2 1");
  CHECK(format_word(w, WordStyle::letter) == "s1 s2^-1 s1");
  CHECK(format_word(identity_word(4)) == "");
}

TEST_CASE("format/parse round-trip on random words") {
  std::mt19937_64 rng(20240815);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    int len = static_cast<int>(rng() % 65);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) {
      int idx = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      letters.push_back(rng() % 2 ? idx : -idx);
    }
    BraidWord w = make_word(n, letters);
    CHECK(parse_word(format_word(w), n) == w);
    CHECK(parse_word(format_word(w, WordStyle::letter), n) == w);
  }
}

TEST_CASE("concat and inverse") {
  BraidWord a = make_word(3, {1, 2});
  BraidWord b = make_word(3, {-1});
  CHECK(concat(a, b) == make_word(3, {1, 2, -1}));
  CHECK(inverse(a) == make_word(3, {-2, -1}));
  CHECK(inverse(identity_word(3)) == identity_word(3));
  CHECK_THROWS_AS(concat(a, identity_word(4)), std::invalid_argument);
}

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  CHECK(free_reduce(make_word(3, {1, -1})) == identity_word(3));
  CHECK(free_reduce(make_word(3, {2, 1, -1, -2, 2})) == make_word(3, {2}));
  CHECK(free_reduce(make_word(3, {1, 2, -2, -1})) == identity_word(3));
  CHECK(free_reduce(make_word(3, {1, 2, 1})) == make_word(3, {1, 2, 1}));
}

TEST_CASE("free_reduce of w w^{-1} is empty") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> letters;
    int len = static_cast<int>(rng() % 30);
    for (int i = 0; i < len; ++i) {
      int idx = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      letters.push_back(rng() % 2 ? idx : -idx);
    }
    BraidWord w = make_word(n, letters);
    CHECK(free_reduce(concat(w, inverse(w))) == identity_word(n));
  }
}

TEST_CASE("exponent_sum") {
  CHECK(exponent_sum(make_word(3, {1, -2, 1})) == 1);
  CHECK(exponent_sum(identity_word(2)) == 0);
  BraidWord a = make_word(4, {1, 2, 3});
  BraidWord b = make_word(4, {-3, -1});
  CHECK(exponent_sum(concat(a, b)) == exponent_sum(a) + exponent_sum(b));
  CHECK(exponent_sum(inverse(a)) == -exponent_sum(a));
  CHECK(exponent_sum(free_reduce(concat(a, b))) == exponent_sum(concat(a, b)));
}

TEST_CASE("embed_shift") {
  BraidWord w = make_word(3, {1, -2});
  CHECK(embed_shift(w, 0, 5) == make_word(5, {1, -2}));
  CHECK(embed_shift(w, 2, 5) == make_word(5, {3, -4}));
  CHECK_THROWS_AS(embed_shift(w, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(embed_shift(w, -1, 5), std::invalid_argument);
}

TEST_CASE("word_power") {
  BraidWord w = make_word(3, {1, 2});
  CHECK(word_power(w, 0) == identity_word(3));
  CHECK(word_power(w, 2) == make_word(3, {1, 2, 1, 2}));
  CHECK(word_power(w, -2) == make_word(3, {-2, -1, -2, -1}));
}
