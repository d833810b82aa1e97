#include "pathvar/paths.hpp"

#include <algorithm>

namespace pathvar {

namespace {

using Levels = std::vector<std::vector<Rational>>;

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

std::size_t dense_index(const Word& w, int dim) {
  std::size_t idx = 0;
  for (Letter a : w.letters()) idx = idx * static_cast<std::size_t>(dim) + (a - 1u);
  return idx;
}

Word word_at(std::size_t degree, std::size_t idx, int dim) {
  std::vector<Letter> letters(degree);
  for (std::size_t k = degree; k-- > 0;) {
    letters[k] = static_cast<Letter>(idx % static_cast<std::size_t>(dim) + 1);
    idx /= static_cast<std::size_t>(dim);
  }
  return Word(std::move(letters));
}

// F_e = 1, F_{wi} = ∫_0^t F_w dX^i, for every word up to `level`.
std::vector<std::vector<UniPoly>> local_table(const PolySegment& seg, int dim, int level) {
  std::vector<UniPoly> dx;
  for (const auto& c : seg.components) dx.push_back(c.derivative());
  std::vector<std::vector<UniPoly>> table{{UniPoly::constant(1)}};
  const auto d = static_cast<std::size_t>(dim);
  for (int k = 0; k < level; ++k) {
    const auto& prev = table.back();
    std::vector<UniPoly> next(prev.size() * d);
    for (std::size_t idx = 0; idx < prev.size(); ++idx)
      for (std::size_t i = 0; i < d; ++i) next[idx * d + i] = (prev[idx] * dx[i]).integral();
    table.push_back(std::move(next));
  }
  return table;
}

Levels evaluate_at_one(const std::vector<std::vector<UniPoly>>& table) {
  Levels out;
  for (const auto& level : table) {
    std::vector<Rational> vals;
    vals.reserve(level.size());
    for (const auto& p : level) vals.push_back(p.at_one());
    out.push_back(std::move(vals));
  }
  return out;
}

Levels dense_chen(const Levels& a, const Levels& b, int dim) {
  const auto d = static_cast<std::size_t>(dim);
  Levels out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    out[n].assign(a[n].size(), Rational(0));
    for (std::size_t w = 0; w < out[n].size(); ++w)
      for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t split = ipow(d, n - k);
        const Rational& left = a[k][w / split];
        if (left == 0) continue;
        out[n][w] += left * b[n - k][w % split];
      }
  }
  return out;
}

Levels dense_unit(int dim, int level) {
  Levels out;
  for (int k = 0; k <= level; ++k) out.emplace_back(ipow(static_cast<std::size_t>(dim), static_cast<std::size_t>(k)));
  out[0][0] = 1;
  return out;
}

TruncatedSeries to_series(const Levels& lv, int dim, int level) {
  FreeTensor t(dim);
  for (std::size_t k = 0; k < lv.size(); ++k)
    for (std::size_t idx = 0; idx < lv[k].size(); ++idx)
      if (lv[k][idx] != 0) t.add(word_at(k, idx, dim), lv[k][idx]);
  return TruncatedSeries::from_tensor(t, level);
}

}  // namespace

PiecewisePolyPath::PiecewisePolyPath(int dim, std::vector<PolySegment> segments)
    : dim_(dim), segments_(std::move(segments)) {
  if (dim < 1) throw ValidationError("path dimension must be positive");
  for (const auto& s : segments_)
    if (static_cast<int>(s.components.size()) != dim_)
      throw ValidationError("segment has " + std::to_string(s.components.size()) + " components, expected " +
                            std::to_string(dim_));
}

PiecewisePolyPath PiecewisePolyPath::piecewise_linear(int dim, const std::vector<std::vector<Rational>>& increments) {
  std::vector<PolySegment> segs;
  for (const auto& inc : increments) {
    if (static_cast<int>(inc.size()) != dim) throw ValidationError("increment has wrong dimension");
    PolySegment s;
    for (const auto& v : inc) s.components.push_back(UniPoly::linear(v));
    segs.push_back(std::move(s));
  }
  return PiecewisePolyPath(dim, std::move(segs));
}

std::vector<Rational> PiecewisePolyPath::increment() const {
  std::vector<Rational> out(static_cast<std::size_t>(dim_));
  for (const auto& s : segments_)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += s.increment(j);
  return out;
}

// ---------------------------------------------------------------------------

StoppedSignature::StoppedSignature(const PiecewisePolyPath& path, int level) : dim_(path.dim()), level_(level) {
  if (level < 0) throw ValidationError("level must be non-negative");
  prefix_.push_back(TruncatedSeries::unit(dim_, level));
  for (const auto& seg : path.segments()) {
    local_.push_back(local_table(seg, dim_, level));
    prefix_.push_back(series_mul(prefix_.back(), to_series(evaluate_at_one(local_.back()), dim_, level)));
  }
}

const UniPoly& StoppedSignature::local(std::size_t segment, const Word& w) const {
  return local_.at(segment).at(w.degree()).at(dense_index(w, dim_));
}

UniPoly StoppedSignature::at(std::size_t segment, const Word& w) const {
  if (w.degree() > static_cast<std::size_t>(level_)) throw ValidationError("word above stopped-signature level");
  // Chen: <σ(before)•σ(local)_t, w> = Σ_{w = w1 w2} <σ(before), w1> F_{w2}(t)
  const auto& before = prefix_.at(segment);
  UniPoly out;
  for (std::size_t k = 0; k <= w.degree(); ++k) {
    const Rational c = before.coeff(w.prefix(k));
    if (c != 0) out += c * local(segment, w.suffix_from(k));
  }
  return out;
}

UniPoly StoppedSignature::at(std::size_t segment, const FreeTensor& x) const {
  UniPoly out;
  for (const auto& [w, c] : x.terms()) out += c * at(segment, w);
  return out;
}

TruncatedSeries signature(const PiecewisePolyPath& path, int level) {
  if (level < 0) throw ValidationError("signature level must be non-negative");
  Levels acc = dense_unit(path.dim(), level);
  for (const auto& seg : path.segments())
    acc = dense_chen(acc, evaluate_at_one(local_table(seg, path.dim(), level)), path.dim());
  return to_series(acc, path.dim(), level);
}

std::vector<UniPoly> stopped_signature_poly(const PiecewisePolyPath& path, const Word& w) {
  FreeTensor::word(path.dim(), w);  // range check
  StoppedSignature table(path, static_cast<int>(w.degree()));
  std::vector<UniPoly> out;
  for (std::size_t s = 0; s < path.segment_count(); ++s) out.push_back(table.at(s, w));
  return out;
}

PiecewisePolyPath concat(const PiecewisePolyPath& x, const PiecewisePolyPath& y) {
  if (x.dim() != y.dim()) throw ValidationError("concat: dimension mismatch");
  auto segs = x.segments();
  segs.insert(segs.end(), y.segments().begin(), y.segments().end());
  return PiecewisePolyPath(x.dim(), std::move(segs));
}

PiecewisePolyPath reverse(const PiecewisePolyPath& x) {
  const UniPoly flip({Rational(1), Rational(-1)});
  std::vector<PolySegment> segs;
  for (auto it = x.segments().rbegin(); it != x.segments().rend(); ++it) {
    PolySegment s;
    for (const auto& c : it->components) s.components.push_back(c.compose(flip));
    segs.push_back(std::move(s));
  }
  return PiecewisePolyPath(x.dim(), std::move(segs));
}

PiecewisePolyPath left_subpath(const PiecewisePolyPath& x, std::size_t segment, const Rational& stop) {
  if (segment >= x.segment_count()) throw ValidationError("left_subpath: segment index out of range");
  if (stop < 0 || stop > 1) throw ValidationError("left_subpath: stop time must lie in [0,1]");
  std::vector<PolySegment> segs(x.segments().begin(), x.segments().begin() + static_cast<std::ptrdiff_t>(segment));
  PolySegment last;
  for (const auto& c : x.segments()[segment].components) last.components.push_back(c.compose(UniPoly::linear(stop)));
  segs.push_back(std::move(last));
  return PiecewisePolyPath(x.dim(), std::move(segs));
}

PiecewisePolyPath apply_polynomial_map(const PolynomialMap& p, const PiecewisePolyPath& x) {
  if (!p.vanishes_at_origin()) throw ValidationError("apply_polynomial_map: p(0) must be 0");
  if (p.source_dim != x.dim()) throw ValidationError("apply_polynomial_map: p expects a different path dimension");
  std::vector<Rational> offset(static_cast<std::size_t>(x.dim()));
  std::vector<PolySegment> segs;
  for (const auto& seg : x.segments()) {
    std::vector<UniPoly> centered;
    for (std::size_t j = 0; j < offset.size(); ++j)
      centered.push_back(seg.components[j] + UniPoly::constant(offset[j] - seg.components[j].coeff(0)));
    PolySegment out;
    for (const auto& comp : p.components) out.components.push_back(comp.compose(centered));
    segs.push_back(std::move(out));
    for (std::size_t j = 0; j < offset.size(); ++j) offset[j] += seg.increment(j);
  }
  return PiecewisePolyPath(p.target_dim(), std::move(segs));
}

PiecewisePolyPath lambda_star(const LetterMap& b, const PiecewisePolyPath& x) {
  if (b.target_dim != x.dim()) throw ValidationError("lambda_star: letter map targets a different alphabet");
  if (!b.images_in_positive_degree()) throw ValidationError("lambda_star: letter images must lie in T^{>=1}");
  std::size_t level = 0;
  for (const auto& img : b.images) level = std::max(level, img.degree());
  StoppedSignature table(x, static_cast<int>(level));
  std::vector<PolySegment> segs;
  for (std::size_t s = 0; s < x.segment_count(); ++s) {
    PolySegment out;
    for (const auto& img : b.images) out.components.push_back(table.at(s, img));
    segs.push_back(std::move(out));
  }
  return PiecewisePolyPath(b.source_dim, std::move(segs));
}

LetterMap delta_shift(const LetterMap& b, const TruncatedSeries& g) {
  if (g.dim() != b.target_dim) throw ValidationError("delta_shift: alphabet mismatch");
  std::size_t level = 0;
  for (const auto& img : b.images) level = std::max(level, img.degree());
  if (static_cast<std::size_t>(g.level()) < level)
    throw ValidationError("delta_shift: series level below the letter images' degree");
  if (!is_grouplike(g)) throw ValidationError("delta_shift: series is not grouplike");
  std::vector<FreeTensor> images;
  for (const auto& img : b.images) {
    FreeTensor out = img;
    for (const auto& [w, c] : img.terms())
      for (std::size_t k = 1; k < w.degree(); ++k) {
        const Rational weight = g.coeff(w.prefix(k));
        if (weight != 0) out.add(w.suffix_from(k), c * weight);
      }
    images.push_back(std::move(out));
  }
  return LetterMap(b.target_dim, std::move(images));
}

}  // namespace pathvar
