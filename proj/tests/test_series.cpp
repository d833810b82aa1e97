#include "doctest.h"

#include "pathvar/paths.hpp"
#include "pathvar/series.hpp"
#include "support/lie.hpp"

using namespace pathvar;

namespace {

TruncatedSeries letters(int dim, int level, std::vector<Rational> coeffs) {
  TruncatedSeries s(dim, level);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.add(Word{static_cast<Letter>(i + 1)}, coeffs[i]);
  return s;
}

TruncatedSeries from(int dim, int level, std::vector<std::pair<std::string, Rational>> terms) {
  TruncatedSeries s(dim, level);
  for (const auto& [w, c] : terms) s.add(Word::parse(w, dim), c);
  return s;
}

}  // namespace

TEST_CASE("series_mul examples") {
  gen::Random rnd(1);
  const auto h = exp_conc(gen::random_lie(rnd, 2, 3));
  CHECK(series_mul(TruncatedSeries::unit(2, 3), h) == h);

  const auto a = letters(2, 2, {Rational(2, 3), -1});
  const auto sa = signature(PiecewisePolyPath::piecewise_linear(2, {{Rational(2, 3), -1}}), 2);
  const auto sb = signature(PiecewisePolyPath::piecewise_linear(2, {{Rational(-2, 3), 1}}), 2);
  CHECK(series_mul(sa, sb) == TruncatedSeries::unit(2, 2));
  CHECK(sa == exp_conc(a));

  const auto prod = series_mul(exp_conc(letters(2, 3, {1, 0})), exp_conc(letters(2, 3, {0, 1})));
  CHECK(prod.coeff(Word{1, 2}) == 1);
  CHECK(prod.coeff(Word{2, 1}) == 0);

  CHECK_THROWS_AS(series_mul(TruncatedSeries::unit(2, 2), TruncatedSeries::unit(2, 3)), ValidationError);
  CHECK_THROWS_AS(series_mul(TruncatedSeries::unit(2, 2), TruncatedSeries::unit(3, 2)), ValidationError);
}

TEST_CASE("series_mul matches the explicit split sum") {
  gen::Random rnd(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = exp_conc(gen::random_lie(rnd, 3, 4)), h = exp_conc(gen::random_lie(rnd, 3, 4));
    const auto gh = series_mul(g, h);
    for (const auto& w : words_up_to(3, 4)) REQUIRE(gh.coeff(w) == oracle::chen_coefficient(g, h, w));
  }
}

TEST_CASE("exp and log") {
  CHECK(exp_conc(TruncatedSeries(2, 3)) == TruncatedSeries::unit(2, 3));
  CHECK(exp_conc(letters(2, 3, {1, 0})).coeff(Word{1, 1, 1}) == Rational(1, 6));
  CHECK_THROWS_AS(exp_conc(TruncatedSeries::unit(2, 3)), ValidationError);
  CHECK_THROWS_AS(log_conc(TruncatedSeries(2, 3)), ValidationError);

  gen::Random rnd(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = rnd.uniform(1, 3), level = rnd.uniform(1, 5);
    const auto l = gen::random_lie(rnd, dim, level);
    REQUIRE(log_conc(exp_conc(l)) == l);
  }
}

TEST_CASE("inverse") {
  CHECK(series_inverse(TruncatedSeries::unit(2, 4)) == TruncatedSeries::unit(2, 4));
  CHECK_THROWS_AS(series_inverse(TruncatedSeries(2, 4)), ValidationError);

  gen::Random rnd(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto l = gen::random_lie(rnd, 2, 4);
    const auto g = exp_conc(l);
    const auto inv = series_inverse(g);
    CHECK(inv == exp_conc(Rational(-1) * l));
    CHECK(series_mul(g, inv) == TruncatedSeries::unit(2, 4));
    CHECK(series_inverse(inv) == g);
    for (const auto& [w, c] : g.terms()) CHECK(inv.coeff(w.reversed()) == (w.degree() % 2 ? Rational(-c) : c));
    CHECK(inv == series_antipode(g));
  }
  // not grouplike, e-coefficient != 1
  const auto s = from(2, 3, {{"", 2}, {"1", 1}, {"12", 5}});
  CHECK(series_mul(s, series_inverse(s)) == TruncatedSeries::unit(2, 3));
}

TEST_CASE("grouplike and Lie predicates") {
  CHECK(is_grouplike(TruncatedSeries::unit(2, 4)));
  CHECK(is_grouplike(exp_conc(from(2, 4, {{"1", 1}, {"12", 1}, {"21", -1}}))));
  CHECK_FALSE(is_grouplike(from(2, 2, {{"", 1}, {"12", 1}})));
  CHECK_FALSE(is_grouplike(TruncatedSeries(2, 2)));

  CHECK(is_lie(letters(2, 3, {1, 0})));
  CHECK(is_lie(from(2, 2, {{"12", 1}, {"21", -1}})));
  CHECK_FALSE(is_lie(from(2, 2, {{"12", 1}, {"21", 1}})));
  CHECK_FALSE(is_lie(TruncatedSeries::unit(2, 2)));
  CHECK_THROWS_AS(LiePoly::from_series(from(2, 2, {{"11", 1}})), ValidationError);
}

TEST_CASE("grouplike iff log is Lie; group closure") {
  gen::Random rnd(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = rnd.uniform(1, 3), level = rnd.uniform(1, 4);
    const auto g = exp_conc(gen::random_lie(rnd, dim, level));
    CHECK(is_grouplike(g));
    CHECK(is_lie(log_conc(g)));
    // perturbing a single coordinate breaks both sides together
    auto bad = g;
    bad.add(words_of_degree(dim, static_cast<std::size_t>(level)).front(), 1);
    CHECK(is_grouplike(bad) == is_lie(log_conc(bad)));
    const auto h = exp_conc(gen::random_lie(rnd, dim, level));
    CHECK(is_grouplike(series_mul(g, h)));
  }
}

TEST_CASE("coordinates of the first kind") {
  CHECK(first_kind_coordinate(FreeTensor::letter(2, 1), exp_conc(letters(2, 3, {3, 0}))) == 3);
  // log(exp(e1) exp(e2)) = e1 + e2 + [e1,e2]/2 + ..., and <[e1,e2]/2, 12 - 21> = 1
  const auto g = signature(PiecewisePolyPath::piecewise_linear(2, {{1, 0}, {0, 1}}), 3);
  const auto x = FreeTensor::word(2, Word{1, 2}) - FreeTensor::word(2, Word{2, 1});
  CHECK(first_kind_coordinate(x, g) == 1);
  CHECK(first_kind_coordinate(FreeTensor::word(2, Word{1, 2, 2}), TruncatedSeries::unit(2, 3)) == 0);
  CHECK_THROWS_AS(first_kind_coordinate(x, from(2, 2, {{"", 1}, {"12", 1}})), ValidationError);
}
