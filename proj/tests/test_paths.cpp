#include "doctest.h"

#include "pathvar/ideals.hpp"
#include "pathvar/paths.hpp"
#include "support/oracles.hpp"

using namespace pathvar;

namespace {

PolySegment seg(std::vector<UniPoly> comps) { return PolySegment{std::move(comps)}; }

// (t + t^2, 3t^2 - t, t^3) followed by (2t - t^2, t^2, 1 - t)
PiecewisePolyPath cubic_example() {
  return PiecewisePolyPath(3, {seg({UniPoly({0, 1, 1}), UniPoly({0, -1, 3}), UniPoly({0, 0, 0, 1})}),
                               seg({UniPoly({0, 2, -1}), UniPoly({0, 0, 1}), UniPoly({1, -1})})});
}

PiecewisePolyPath parabola() { return PiecewisePolyPath(2, {seg({UniPoly({0, 1}), UniPoly({0, 0, 1})})}); }

}  // namespace

TEST_CASE("signature examples") {
  CHECK(signature(PiecewisePolyPath(3), 4) == TruncatedSeries::unit(3, 4));
  CHECK(signature(PiecewisePolyPath::piecewise_linear(2, {{1, 0}}), 2).coeff(Word{1, 1}) == Rational(1, 2));
  const auto s = signature(parabola(), 2);
  CHECK(s.coeff(Word{1, 2}) == Rational(2, 3));
  CHECK(s.coeff(Word{2, 1}) == Rational(1, 3));
}

TEST_CASE("signature agrees with symbolic integration (frozen values)") {
  const auto x = cubic_example();
  const auto one = signature(PiecewisePolyPath(3, {x.segments()[0]}), 3);
  CHECK(one.coeff(Word{1, 2}) == Rational(8, 3));
  CHECK(one.coeff(Word{2, 1}) == Rational(4, 3));
  CHECK(one.coeff(Word{1, 2, 3}) == Rational(247, 210));
  CHECK(one.coeff(Word{3, 2, 1}) == Rational(43, 105));
  CHECK(one.coeff(Word{2, 2, 1}) == Rational(13, 15));
  CHECK(one.coeff(Word{1, 3}) == Rational(27, 20));

  const auto two = signature(x, 3);
  CHECK(two.coeff(Word{1, 2}) == Rational(11, 2));
  CHECK(two.coeff(Word{2, 1}) == Rational(7, 2));
  CHECK(two.coeff(Word{1, 2, 3}) == Rational(-251, 105));
  CHECK(two.coeff(Word{3, 2, 1}) == Rational(613, 420));
  CHECK(two.coeff(Word{2, 2, 1}) == Rational(97, 30));
  CHECK(two.coeff(Word{3, 3, 1}) == Rational(25, 56));

  const auto stopped = stopped_signature_poly(x, Word{1, 2});
  REQUIRE(stopped.size() == 2);
  CHECK(stopped[1] == UniPoly({Rational(8, 3), 0, 2, Rational(4, 3), Rational(-1, 2)}));
}

TEST_CASE("piecewise-linear signatures match the exponential product") {
  gen::Random rnd(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = rnd.uniform(1, 3), segs = rnd.uniform(1, 4);
    const auto incs = rnd.increments(dim, segs);
    const auto sig = signature(PiecewisePolyPath::piecewise_linear(dim, incs), 4);
    for (const auto& w : words_up_to(dim, 4)) REQUIRE(sig.coeff(w) == oracle::linear_path_coefficient(incs, w));
  }
}

TEST_CASE("stopped signature polynomials") {
  const auto line = PiecewisePolyPath::piecewise_linear(2, {{1, 0}});
  CHECK(stopped_signature_poly(line, Word{}) == std::vector<UniPoly>{UniPoly::constant(1)});
  CHECK(stopped_signature_poly(line, Word{1}) == std::vector<UniPoly>{UniPoly::linear(1)});
  CHECK(stopped_signature_poly(parabola(), Word{1, 2}) == std::vector<UniPoly>{UniPoly::monomial(3, Rational(2, 3))});

  gen::Random rnd(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = rnd.poly_path(2, 3, 2);
    const auto sig = signature(x, 3);
    for (const auto& w : words_up_to(2, 3)) REQUIRE(stopped_signature_poly(x, w).back().at_one() == sig.coeff(w));
  }
}

TEST_CASE("halfshuffle identity holds as an exact polynomial integral") {
  gen::Random rnd(13);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = rnd.poly_path(2, 2, 2);
    const StoppedSignature table(x, 4);
    const auto sig = signature(x, 4);
    for (const auto& u : words_up_to(2, 3))
      for (const auto& v : words_up_to(2, 3)) {
        if (u.empty() || v.empty() || u.degree() + v.degree() > 4) continue;
        Rational integral = 0;
        for (std::size_t s = 0; s < x.segment_count(); ++s)
          integral += (table.at(s, u) * table.at(s, v).derivative()).integral().at_one();
        REQUIRE(pair(sig, half_shuffle_right(FreeTensor::word(2, u), FreeTensor::word(2, v))) == integral);
      }
  }
}

TEST_CASE("concat, reverse, subpaths") {
  gen::Random rnd(14);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = rnd.poly_path(2, 2, 2), y = rnd.linear_path(2, 3);
    CHECK(signature(concat(x, y), 4) == series_mul(signature(x, 4), signature(y, 4)));
    CHECK(signature(reverse(x), 4) == series_inverse(signature(x, 4)));
    CHECK(left_subpath(x, 1, 1) == x);
    const auto half = left_subpath(x, 1, Rational(1, 2));
    const auto stopped = stopped_signature_poly(x, Word{1, 2});
    CHECK(signature(half, 2).coeff(Word{1, 2}) == stopped[1](Rational(1, 2)));
  }
  CHECK_THROWS_AS(concat(PiecewisePolyPath(2), PiecewisePolyPath(3)), ValidationError);
  CHECK_THROWS_AS(left_subpath(parabola(), 1, 1), ValidationError);
  CHECK_THROWS_AS(left_subpath(parabola(), 0, 2), ValidationError);
  CHECK_THROWS_AS(PiecewisePolyPath(2, {seg({UniPoly({0, 1})})}), ValidationError);
}

TEST_CASE("polynomial image of a path") {
  const auto x = MultiPoly::variable(2, 1), y = MultiPoly::variable(2, 2);
  const auto line = PiecewisePolyPath::piecewise_linear(2, {{1, 1}});
  const auto img = apply_polynomial_map(PolynomialMap(2, {x * x, y}), line);
  REQUIRE(img.segment_count() == 1);
  CHECK(img.segments()[0].components[0] == UniPoly::monomial(2));
  CHECK(img.segments()[0].components[1] == UniPoly::monomial(1));

  gen::Random rnd(15);
  const auto path = rnd.poly_path(2, 2, 2);
  CHECK(signature(apply_polynomial_map(PolynomialMap::identity(2), path), 4) == signature(path, 4));
  CHECK_THROWS_AS(apply_polynomial_map(PolynomialMap(2, {x + MultiPoly::constant(2, 1)}), path), ValidationError);

  // <σ(p(X - X0)), w> = <σ(X), M_p w>
  const PolynomialMap p(2, {x * y + x, y * y * Rational(2) - x, x * x});
  const auto image = apply_polynomial_map(p, path);
  const auto lhs = signature(image, 3), rhs = signature(path, 6);
  for (const auto& w : words_up_to(3, 3)) REQUIRE(lhs.coeff(w) == pair(rhs, m_p(p, FreeTensor::word(3, w))));
}

TEST_CASE("lambda_star and delta_shift") {
  gen::Random rnd(16);
  const auto path = rnd.poly_path(2, 2, 1);
  CHECK(signature(lambda_star(LetterMap::identity(2), path), 4) == signature(path, 4));

  const auto diag = PiecewisePolyPath::piecewise_linear(2, {{1, 1}});
  const LetterMap b12(2, {FreeTensor::word(2, Word{1, 2})});
  const auto comp = lambda_star(b12, diag);
  CHECK(comp.segments()[0].components[0] == UniPoly::monomial(2, Rational(1, 2)));
  CHECK_THROWS_AS(lambda_star(LetterMap(2, {FreeTensor::unit(2)}), diag), ValidationError);

  // degree-one images and the unit series leave B unchanged
  const LetterMap lin(2, {FreeTensor::letter(2, 2, 3), FreeTensor::letter(2, 1) + FreeTensor::letter(2, 2)});
  const auto g = signature(path, 3);
  CHECK(delta_shift(lin, g).images == lin.images);
  const LetterMap mixed(2, {FreeTensor::word(2, Word{1, 2}) + FreeTensor::word(2, Word{2, 2, 1}, -2)});
  CHECK(delta_shift(mixed, TruncatedSeries::unit(2, 3)).images == mixed.images);

  const auto shifted = delta_shift(b12, signature(PiecewisePolyPath::piecewise_linear(2, {{1, 0}}), 2));
  CHECK(shifted.images[0] == FreeTensor::word(2, Word{1, 2}) + FreeTensor::letter(2, 2));
  CHECK_THROWS_AS(delta_shift(mixed, signature(path, 2)), ValidationError);

  // split law
  const auto y = rnd.linear_path(2, 2);
  const auto lhs = lambda_star(mixed, concat(path, y));
  const auto rhs = concat(lambda_star(mixed, path), lambda_star(delta_shift(mixed, signature(path, 3)), y));
  CHECK(signature(lhs, 4) == signature(rhs, 4));
}
