#pragma once

#include <vector>

#include "pathvar/freealg.hpp"
#include "pathvar/poly.hpp"
#include "pathvar/series.hpp"

namespace pathvar {

/// One polynomial piece t -> (X^1(t), ..., X^d(t)), t in [0,1].
struct PolySegment {
  std::vector<UniPoly> components;

  Rational increment(std::size_t j) const { return components[j].at_one() - components[j].coeff(0); }
  friend bool operator==(const PolySegment&, const PolySegment&) = default;
};

/// A continuous path glued from polynomial segments.
///
/// Only increments matter: each segment is translated so that it starts where
/// the previous one ended, and the path carries no start point of its own.
class PiecewisePolyPath {
 public:
  explicit PiecewisePolyPath(int dim, std::vector<PolySegment> segments = {});

  /// Linear pieces with the given increments.
  static PiecewisePolyPath piecewise_linear(int dim, const std::vector<std::vector<Rational>>& increments);

  int dim() const { return dim_; }
  const std::vector<PolySegment>& segments() const { return segments_; }
  std::size_t segment_count() const { return segments_.size(); }
  /// Total increment X_T - X_0.
  std::vector<Rational> increment() const;

  friend bool operator==(const PiecewisePolyPath&, const PiecewisePolyPath&) = default;

 private:
  int dim_;
  std::vector<PolySegment> segments_;
};

/// Exact stopped signatures t -> <σ(X)_t, w> for every word up to a level,
/// as one polynomial per segment in that segment's local time.
class StoppedSignature {
 public:
  StoppedSignature(const PiecewisePolyPath& path, int level);

  int level() const { return level_; }
  std::size_t segment_count() const { return local_.size(); }

  /// <σ(X)_{(s,t)}, w> on segment s.
  UniPoly at(std::size_t segment, const Word& w) const;
  /// Linear extension of `at` to a tensor.
  UniPoly at(std::size_t segment, const FreeTensor& x) const;
  /// σ of the segments before `segment`.
  const TruncatedSeries& signature_before(std::size_t segment) const { return prefix_[segment]; }
  const TruncatedSeries& signature() const { return prefix_.back(); }

 private:
  const UniPoly& local(std::size_t segment, const Word& w) const;

  int dim_;
  int level_;
  // local_[s][k][i]: polynomial of the i-th word of degree k on segment s (signature from segment start)
  std::vector<std::vector<std::vector<UniPoly>>> local_;
  std::vector<TruncatedSeries> prefix_;
};

TruncatedSeries signature(const PiecewisePolyPath& path, int level);

/// One polynomial per segment: t -> <σ(X)_{(s,t)}, w>.
std::vector<UniPoly> stopped_signature_poly(const PiecewisePolyPath& path, const Word& w);

PiecewisePolyPath concat(const PiecewisePolyPath& x, const PiecewisePolyPath& y);
PiecewisePolyPath reverse(const PiecewisePolyPath& x);
/// Segments before `segment`, then that segment restricted to [0, stop] and rescaled to [0,1].
PiecewisePolyPath left_subpath(const PiecewisePolyPath& x, std::size_t segment, const Rational& stop);

/// t -> p(X_t - X_0). Requires p(0) = 0.
PiecewisePolyPath apply_polynomial_map(const PolynomialMap& p, const PiecewisePolyPath& x);

/// t -> (<σ(X)_t, B(1)>, ..., <σ(X)_t, B(m)>). Images of B must lie in T^{>=1}.
PiecewisePolyPath lambda_star(const LetterMap& b, const PiecewisePolyPath& x);

/// B(i) + Σ over proper splits w = w'w'' of <g, w'> w''.
LetterMap delta_shift(const LetterMap& b, const TruncatedSeries& g);

}  // namespace pathvar
