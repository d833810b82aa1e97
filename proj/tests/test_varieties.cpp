#include "doctest.h"

#include "pathvar/varieties.hpp"
#include "support/lie.hpp"

using namespace pathvar;

namespace {

FreeTensor w(int dim, const std::string& s, Rational c = 1) { return FreeTensor::word(dim, Word::parse(s, dim), c); }

PiecewisePolyPath parabola() { return PiecewisePolyPath(2, {PolySegment{{UniPoly({0, 1}), UniPoly({0, 0, 1})}}}); }

PiecewisePolyPath unit_square() { return PiecewisePolyPath::piecewise_linear(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

}  // namespace

TEST_CASE("variety membership") {
  const VarietySpec parabola_spec{2, {w(2, "2") - w(2, "11", 2)}, ClosureType::right_half, 6};
  CHECK(in_variety(PiecewisePolyPath(2), parabola_spec).member);
  const auto on = in_variety(parabola(), parabola_spec);
  CHECK(on.member);
  CHECK(on.certified_level == 6);
  const auto chord = in_variety(PiecewisePolyPath::piecewise_linear(2, {{1, 1}}), parabola_spec);
  CHECK_FALSE(chord.member);
  REQUIRE(chord.first_failing_row.has_value());
  // the generator itself vanishes on the chord
  CHECK(*chord.first_failing_row > 0);
  CHECK_THROWS_AS(in_variety(PiecewisePolyPath(3), parabola_spec), ValidationError);
}

TEST_CASE("loop varieties") {
  CHECK(in_variety(unit_square(), loops_variety(2, 1)).member);
  CHECK_FALSE(in_variety(PiecewisePolyPath::piecewise_linear(2, {{1, 0}}), loops_variety(2, 1)).member);
  CHECK_FALSE(in_variety(unit_square(), loops_variety(2, 2)).member);
  // area of the square: <σ, 12 - 21> = 2
  const auto sig = signature(unit_square(), 2);
  CHECK(pair(sig, w(2, "12") - w(2, "21")) == 2);
  CHECK_THROWS_AS(loops_variety(2, 0), ValidationError);
}

TEST_CASE("increment varieties") {
  const auto x = MultiPoly::variable(2, 1), y = MultiPoly::variable(2, 2);
  const auto first_zero = increments_variety(PolynomialMap(2, {x}));
  CHECK(in_variety(PiecewisePolyPath::piecewise_linear(2, {{0, 1}}), first_zero).member);
  CHECK(in_variety(PiecewisePolyPath::piecewise_linear(2, {{1, 1}, {-1, 2}}), first_zero).member);

  const auto circle = increments_variety(PolynomialMap(2, {x * x + y * y - MultiPoly::constant(2, 1)}));
  CHECK(circle.generators.front() == w(2, "11", 2) + w(2, "22", 2) - FreeTensor::unit(2));
  CHECK(in_variety(PiecewisePolyPath::piecewise_linear(2, {{1, 0}}), circle).member);
  CHECK(in_variety(PiecewisePolyPath::piecewise_linear(2, {{Rational(3, 5), 0}, {0, Rational(4, 5)}}), circle).member);
  CHECK_FALSE(in_variety(PiecewisePolyPath::piecewise_linear(2, {{1, 1}}), circle).member);
}

TEST_CASE("Lyndon words and brackets") {
  const std::vector<std::size_t> binary{2, 1, 2, 3, 6, 9}, ternary{3, 3, 8, 18};
  for (std::size_t n = 1; n <= binary.size(); ++n) CHECK(lyndon_words(2, n).size() == binary[n - 1]);
  for (std::size_t n = 1; n <= ternary.size(); ++n) CHECK(lyndon_words(3, n).size() == ternary[n - 1]);
  CHECK(lyndon_words(2, 3) == std::vector<Word>{Word{1, 1, 2}, Word{1, 2, 2}});
  CHECK(is_lyndon(Word{1, 1, 2}));
  CHECK_FALSE(is_lyndon(Word{1, 2, 1}));
  CHECK_FALSE(is_lyndon(Word{1, 1}));

  CHECK(expand(*standard_bracketing(Word{1, 2}), 2) == w(2, "12") - w(2, "21"));
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& lw : lyndon_words(2, n)) {
      const auto p = expand(*standard_bracketing(lw), 2);
      CHECK(p.coeff(lw) == 1);
      for (const auto& [word, c] : p.terms()) {
        const auto a = word.letters(), b = lw.letters();
        CHECK_FALSE(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
      }
      CHECK(is_lie(TruncatedSeries::from_tensor(p, static_cast<int>(n))));
    }

  gen::Random rnd(31);
  const auto l = gen::random_lie(rnd, 3, 4).as_tensor().homogeneous_part(4);
  FreeTensor rebuilt(3);
  for (const auto& [lw, c] : lyndon_coordinates(l, 4)) rebuilt.add_scaled(expand(*standard_bracketing(lw), 3), c);
  CHECK(rebuilt == l);
  CHECK_THROWS_AS(lyndon_coordinates(w(2, "12"), 2), ValidationError);
}

TEST_CASE("realization of log-signatures") {
  auto level1 = TruncatedSeries(2, 1);
  level1.add(Word{1}, 3);
  const auto line = realize_log_signature(LiePoly::from_series(level1));
  CHECK(line == PiecewisePolyPath::piecewise_linear(2, {{3, 0}}));

  const auto area = TruncatedSeries::from_tensor(w(2, "12") - w(2, "21"), 2);
  const auto loop = realize_log_signature(LiePoly::from_series(area));
  CHECK(loop.segment_count() == 4);
  CHECK(log_conc(signature(loop, 2)) == area);

  gen::Random rnd(32);
  for (int trial = 0; trial < 10; ++trial) {
    const auto l = gen::random_lie(rnd, 2, 3);
    CHECK(log_conc(signature(realize_log_signature(LiePoly::from_series(l)), 3)) == l);
  }
  // gadgets vanish below their degree
  const auto g = bracket_gadget(*standard_bracketing(Word{1, 1, 2}), Rational(-2, 3), 2);
  const auto lg = log_conc(signature(g, 3));
  CHECK(lg.as_tensor().truncated(2).is_zero());
  CHECK(lg.as_tensor() == Rational(-2, 3) * expand(*standard_bracketing(Word{1, 1, 2}), 2));
}

TEST_CASE("linear signature polynomial") {
  CHECK(linear_signature_polynomial(w(2, "1")) == MultiPoly::variable(2, 1));
  CHECK(linear_signature_polynomial(w(2, "12")) == MultiPoly::variable(2, 1) * MultiPoly::variable(2, 2) * Rational(1, 2));
  CHECK(linear_signature_polynomial(w(2, "11")) == MultiPoly::variable(2, 1) * MultiPoly::variable(2, 1) * Rational(1, 2));

  gen::Random rnd(33);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inc = rnd.increments(3, 1)[0];
    const auto x = rnd.tensor(3, 0, 4, 4);
    CHECK(linear_signature_polynomial(x)(inc) == pair(signature(PiecewisePolyPath::piecewise_linear(3, {inc}), 4), x));
  }
}

TEST_CASE("operator contexts") {
  const auto ctx = enumerate_contexts(2, RankSide::left, 2, 1000);
  // hole; 2 ops x 2 letters; (2 ops x 2 letters)^2 plus 2 ops x 4 words
  CHECK(ctx.size() == 1 + 4 + 16 + 8);
  CHECK(ctx.front().empty());
  const auto capped = enumerate_contexts(2, RankSide::left, 2, 10);
  CHECK(capped.size() == 10);
  for (std::size_t i = 0; i < capped.size(); ++i) {
    CHECK(capped[i].size() == ctx[i].size());
    for (std::size_t k = 0; k < capped[i].size(); ++k) CHECK(capped[i][k].word == ctx[i][k].word);
  }
  CHECK(enumerate_contexts(2, RankSide::two_sided, 1, 100).size() == 1 + 8);

  const Context c{{ContextStep::word_succ_hole, Word{2}}, {ContextStep::hole_prec_word, Word{1}}};
  CHECK(apply_context(c, w(2, "1")) == half_shuffle_left(half_shuffle_right(w(2, "2"), w(2, "1")), w(2, "1")));
}

TEST_CASE("rank tests") {
  const auto plane = PiecewisePolyPath::piecewise_linear(3, {{1, 0, -1}, {0, 1, -1}});
  const auto generic = PiecewisePolyPath::piecewise_linear(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(subspace_test(plane, 2, 4).passed);
  const auto g = subspace_test(generic, 2, 4);
  CHECK_FALSE(g.passed);
  CHECK(g.rank == 3);
  CHECK(subspace_test(generic, 3, 4).passed);
  CHECK(subspace_test(PiecewisePolyPath::piecewise_linear(3, {{1, 2, 3}}), 1, 4).passed);

  CHECK(hypersurface_test(parabola(), 2, 6).passed);
  CHECK_FALSE(hypersurface_test(PiecewisePolyPath(2, {PolySegment{{UniPoly({0, 1}), UniPoly({0, 0, 0, 1})}}}), 2, 6).passed);
  CHECK(sphere_or_hyperplane_test(PiecewisePolyPath::piecewise_linear(2, {{1, 2}}), 4).passed);
  CHECK_FALSE(sphere_or_hyperplane_test(PiecewisePolyPath::piecewise_linear(2, {{1, 0}, {0, 1}, {1, 1}}), 4).passed);
  // cocircular vertices are not enough: the chords leave the circle
  CHECK_FALSE(sphere_or_hyperplane_test(PiecewisePolyPath::piecewise_linear(2, {{1, 1}, {1, -1}}), 4).passed);

  RankSpec bad;
  CHECK_THROWS_AS(rank_test(plane, bad), ValidationError);
  bad.tensors = {w(3, "1"), w(3, "2")};
  bad.bound = 3;
  CHECK_THROWS_AS(rank_test(plane, bad), ValidationError);
  bad.bound = 2;
  CHECK(rank_test(plane, bad).passed);  // k = n
  bad.tensors.push_back(FreeTensor::unit(3));
  CHECK_THROWS_AS(rank_test(plane, bad), ValidationError);
}
