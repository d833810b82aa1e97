#include "doctest.h"

#include "pathvar/freealg.hpp"
#include "pathvar/series.hpp"
#include "support/oracles.hpp"

using namespace pathvar;

namespace {

FreeTensor w2(const std::string& s, Rational c = 1) { return FreeTensor::word(2, Word::parse(s, 2), c); }

}  // namespace

TEST_CASE("words order graded-lex and round-trip through text") {
  CHECK(Word{2} < Word{1, 1});
  CHECK(Word{1, 2} < Word{2, 1});
  CHECK(Word{} < Word{1});
  CHECK(Word::parse("121", 2) == Word{1, 2, 1});
  CHECK(Word::parse("10,2", 12) == Word{10, 2});
  CHECK(Word{10, 2}.to_string(12) == "10,2");
  CHECK(Word{1, 2}.to_string(12) == "1,2");
  CHECK_THROWS_AS(Word::parse("13", 2), ValidationError);
  CHECK_THROWS_AS(Word::parse("1a", 2), ValidationError);
  CHECK(words_of_degree(2, 3).size() == 8);
  CHECK(words_up_to(3, 2).size() == 13);
}

TEST_CASE("free tensors stay normalized") {
  FreeTensor t = w2("12") + w2("12", -1);
  CHECK(t.is_zero());
  CHECK((w2("1") * Rational(0)).is_zero());
  CHECK_THROWS_AS(FreeTensor::word(2, Word{3}), ValidationError);
  CHECK_THROWS_AS(concat_product(w2("1"), FreeTensor::letter(3, 1)), ValidationError);
}

TEST_CASE("concatenation") {
  CHECK(concat_product(w2("1"), w2("2")) == w2("12"));
  CHECK(concat_product(FreeTensor::unit(2), w2("21")) == w2("21"));
  CHECK(concat_product(w2("1") + w2("2"), w2("1")) == w2("11") + w2("21"));
}

TEST_CASE("deconcatenation lists every prefix/suffix split") {
  auto splits = deconcat(w2("12"));
  REQUIRE(splits.size() == 3);
  CHECK(splits[0].first == FreeTensor::unit(2));
  CHECK(splits[0].second == w2("12"));
  CHECK(splits[1].first == w2("1"));
  CHECK(splits[1].second == w2("2"));
  CHECK(splits[2].first == w2("12"));
  CHECK(splits[2].second == FreeTensor::unit(2));
  CHECK(deconcat(FreeTensor::unit(2)).size() == 1);
  CHECK(deconcat(w2("1")).size() == 2);
}

TEST_CASE("shuffle examples") {
  CHECK(shuffle(w2("1"), w2("2")) == w2("12") + w2("21"));
  CHECK(shuffle(w2("12"), w2("1")) == w2("112", 2) + w2("121"));
  CHECK(shuffle(FreeTensor::unit(2), w2("122")) == w2("122"));
}

TEST_CASE("halfshuffle examples and errors") {
  CHECK(half_shuffle_right(w2("1"), w2("2")) == w2("12"));
  CHECK(half_shuffle_right(w2("1"), w2("22")) == w2("122") + w2("212"));
  CHECK(half_shuffle_left(w2("1"), w2("2")) == w2("12"));
  CHECK_THROWS_AS(half_shuffle_right(FreeTensor::unit(2), w2("1")), ValidationError);
  CHECK_THROWS_AS(half_shuffle_left(w2("1"), w2("1") + FreeTensor::unit(2)), ValidationError);
}

TEST_CASE("antipode examples") {
  CHECK(antipode(w2("1")) == w2("1", -1));
  CHECK(antipode(w2("12")) == w2("21"));
  CHECK(antipode(FreeTensor::unit(2)) == FreeTensor::unit(2));
}

TEST_CASE("shuffle and halfshuffles agree with interleaving enumeration (deg sum <= 7)") {
  for (int dim : {1, 2, 3}) {
    const auto words = words_up_to(dim, dim == 3 ? 4 : 6);
    for (const auto& u : words)
      for (const auto& v : words) {
        if (u.degree() + v.degree() > 7) continue;
        const auto x = FreeTensor::word(dim, u), y = FreeTensor::word(dim, v);
        REQUIRE(shuffle(x, y) == oracle::shuffle(x, y));
        if (!u.empty() && !v.empty()) {
          REQUIRE(half_shuffle_right(x, y) == oracle::half_right(x, y));
          REQUIRE(half_shuffle_left(x, y) == oracle::half_left(x, y));
        }
      }
  }
}

TEST_CASE("Hopf algebra laws on random tensors up to degree 6") {
  gen::Random rnd(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = rnd.uniform(1, 3);
    const auto x = rnd.tensor(dim, 1, 3), y = rnd.tensor(dim, 1, 3), z = rnd.tensor(dim, 0, 2);
    CHECK(shuffle(x, y) == shuffle(y, x));
    CHECK(shuffle(shuffle(x, y), z) == shuffle(x, shuffle(y, z)));
    CHECK(half_shuffle_right(x, y) + half_shuffle_right(y, x) == shuffle(x, y));
    CHECK(half_shuffle_left(x, y) + half_shuffle_left(y, x) == shuffle(x, y));
    CHECK(antipode(half_shuffle_right(x, y)) == half_shuffle_left(antipode(y), antipode(x)));
    CHECK(antipode(half_shuffle_left(x, y)) == half_shuffle_right(antipode(y), antipode(x)));
    CHECK(antipode(antipode(x + z)) == x + z);
    CHECK(antipode(shuffle(x, z)) == shuffle(antipode(x), antipode(z)));
  }
}

TEST_CASE("antipode property and coproduct duality on words up to degree 6") {
  for (const auto& w : words_up_to(2, 6)) {
    const auto x = FreeTensor::word(2, w);
    FreeTensor acc(2);
    for (const auto& [left, right] : deconcat(x)) acc += shuffle(antipode(left), right);
    REQUIRE(acc == (w.empty() ? FreeTensor::unit(2) : FreeTensor(2)));
  }
  // <x•y, z> = Σ <x, z1><y, z2> with word coefficients read as delta functions
  const auto words = words_up_to(2, 3);
  for (const auto& a : words)
    for (const auto& b : words)
      for (const auto& c : words_up_to(2, 6)) {
        if (c.degree() != a.degree() + b.degree()) continue;
        const Rational lhs = concat_product(FreeTensor::word(2, a), FreeTensor::word(2, b)).coeff(c);
        Rational rhs = 0;
        for (const auto& [left, right] : deconcat(FreeTensor::word(2, c))) rhs += left.coeff(a) * right.coeff(b);
        REQUIRE(lhs == rhs);
      }
}

TEST_CASE("letter maps") {
  const auto x = w2("1") + w2("12", 3) + w2("221", Rational(-1, 2));
  CHECK(letter_map_extend(LetterMap::identity(2), x, LetterMapMode::multiplicative) == x);
  CHECK(letter_map_extend(LetterMap::identity(2), x, LetterMapMode::lambda) == x);

  const auto b1 = w2("1") + w2("12"), b2 = w2("22", 2);
  const LetterMap b(2, {b1, b2});
  CHECK(letter_map_extend(b, w2("1"), LetterMapMode::lambda) == b1);
  CHECK(letter_map_extend(b, w2("12"), LetterMapMode::lambda) == oracle::half_right(b1, b2));
  CHECK(letter_map_extend(b, w2("121"), LetterMapMode::lambda) == oracle::half_right(oracle::half_right(b1, b2), b1));
  CHECK(letter_map_extend(b, w2("12"), LetterMapMode::multiplicative) == concat_product(b1, b2));
  CHECK(letter_map_extend(b, FreeTensor::unit(2), LetterMapMode::lambda) == FreeTensor::unit(2));

  const LetterMap bad(2, {w2("1") + FreeTensor::unit(2), b2});
  CHECK_THROWS_AS(letter_map_extend(bad, w2("1"), LetterMapMode::lambda), ValidationError);
  CHECK_NOTHROW(letter_map_extend(bad, w2("1"), LetterMapMode::multiplicative));
  CHECK_THROWS_AS(LetterMap(2, {w2("1"), FreeTensor::letter(3, 1)}), ValidationError);
}

TEST_CASE("pairing") {
  auto g = TruncatedSeries::from_tensor(w2("") + w2("1", 3) + w2("12", Rational(1, 2)), 2);
  CHECK(pair(g, FreeTensor::unit(2)) == 1);
  CHECK(pair(g, w2("12", 4) + w2("2")) == 2);
  CHECK(pair(TruncatedSeries(2, 3), w2("121")) == 0);
  CHECK_THROWS_AS(pair(g, w2("121")), ValidationError);
}
