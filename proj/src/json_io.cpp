#include "pathvar/json_io.hpp"

#include <algorithm>

namespace pathvar::json_io {

namespace {

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& field, const char* key) { return field + "." + key; }

// Re-raises library validation errors with the location of the offending value.
template <class F>
auto located(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FieldError&) {
    throw;
  } catch (const ValidationError& e) {
    throw FieldError(field, e.what());
  }
}

const Json& require_array(const Json& j, const std::string& field) {
  if (!j.is_array()) throw FieldError(field, "expected an array");
  return j;
}

const Json& require_key(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw FieldError(field, "expected an object");
  if (!j.contains(key)) throw FieldError(at(field, key), "missing field");
  return j.at(key);
}

const std::string& require_string(const Json& j, const std::string& field) {
  if (!j.is_string()) throw FieldError(field, "expected a string");
  return j.get_ref<const std::string&>();
}

std::optional<int> declared_dim(const Json& j, const std::string& field) {
  if (j.is_object() && j.contains("dimension")) return int_from_json(j.at("dimension"), at(field, "dimension"), 1);
  return std::nullopt;
}

const Json& term_array(const Json& j, const std::string& field, std::string& where) {
  if (j.is_array()) {
    where = field;
    return j;
  }
  where = at(field, "terms");
  return require_array(require_key(j, "terms", field), where);
}

}  // namespace

Json parse_text(const std::string& text, const std::string& field) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FieldError(field, std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw FieldError(field, "expected a rational string like \"-3/2\"");
  return located(field, [&] { return parse_rational(j.get_ref<const std::string&>()); });
}

int int_from_json(const Json& j, const std::string& field, int min_value) {
  if (!j.is_number_integer()) throw FieldError(field, "expected an integer");
  const long v = j.get<long>();
  if (v < min_value || v > 1000000) throw FieldError(field, "value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

int tensor_dim_hint(const Json& j, const std::string& field) {
  if (auto d = declared_dim(j, field)) return *d;
  std::string where;
  const Json& terms = term_array(j, field, where);
  int dim = 1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string wf = at(at(where, i), "word");
    const std::string& text = require_string(require_key(terms[i], "word", at(where, i)), wf);
    const bool commas = text.find(',') != std::string::npos;
    const Word w = located(wf, [&] { return Word::parse(text, commas ? 65535 : 9); });
    if (!w.empty()) dim = std::max(dim, static_cast<int>(w.max_letter()));
  }
  return dim;
}

Json tensor_to_json(const FreeTensor& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) out.push_back(Json{{"word", w.to_string(x.dim())}, {"coeff", to_string(c)}});
  return out;
}

FreeTensor tensor_from_json(const Json& j, int dim, const std::string& field) {
  if (auto d = declared_dim(j, field); d && *d != dim)
    throw FieldError(at(field, "dimension"), "expected alphabet size " + std::to_string(dim));
  std::string where;
  const Json& terms = term_array(j, field, where);
  FreeTensor out(dim);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tf = at(where, i);
    const std::string wf = at(tf, "word");
    const Word w = located(wf, [&] { return Word::parse(require_string(require_key(terms[i], "word", tf), wf), dim); });
    out.add(w, rational_from_json(require_key(terms[i], "coeff", tf), at(tf, "coeff")));
  }
  return out;
}

Json series_to_json(const TruncatedSeries& g) {
  return Json{{"dimension", g.dim()}, {"level", g.level()}, {"terms", tensor_to_json(g.as_tensor())}};
}

TruncatedSeries series_from_json(const Json& j, std::optional<int> dim, std::optional<int> level,
                                 const std::string& field) {
  const int d = dim ? *dim : tensor_dim_hint(j, field);
  int n = 0;
  if (j.is_object() && j.contains("level"))
    n = int_from_json(j.at("level"), at(field, "level"), 0);
  else if (level)
    n = *level;
  else
    throw FieldError(at(field, "level"), "missing field");
  const FreeTensor body = tensor_from_json(j, d, field);
  return located(field, [&] { return TruncatedSeries::from_tensor(body, n); });
}

Json unipoly_to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

UniPoly unipoly_from_json(const Json& j, const std::string& field) {
  require_array(j, field);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], at(field, i)));
  return UniPoly(std::move(c));
}

Json path_to_json(const PiecewisePolyPath& x) {
  Json segs = Json::array();
  for (const auto& s : x.segments()) {
    Json comps = Json::array();
    for (const auto& p : s.components) comps.push_back(unipoly_to_json(p));
    segs.push_back(std::move(comps));
  }
  return Json{{"dimension", x.dim()}, {"segments", std::move(segs)}};
}

PiecewisePolyPath path_from_json(const Json& j, const std::string& field) {
  const int dim = int_from_json(require_key(j, "dimension", field), at(field, "dimension"), 1);
  if (j.contains("increments")) {
    const std::string f = at(field, "increments");
    const Json& incs = require_array(j.at("increments"), f);
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < incs.size(); ++i) {
      require_array(incs[i], at(f, i));
      if (static_cast<int>(incs[i].size()) != dim) throw FieldError(at(f, i), "expected " + std::to_string(dim) + " entries");
      std::vector<Rational> v;
      for (std::size_t k = 0; k < incs[i].size(); ++k) v.push_back(rational_from_json(incs[i][k], at(at(f, i), k)));
      out.push_back(std::move(v));
    }
    return PiecewisePolyPath::piecewise_linear(dim, out);
  }
  const std::string f = at(field, "segments");
  const Json& segs = require_array(require_key(j, "segments", field), f);
  std::vector<PolySegment> out;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    require_array(segs[s], at(f, s));
    if (static_cast<int>(segs[s].size()) != dim)
      throw FieldError(at(f, s), "expected " + std::to_string(dim) + " components");
    PolySegment seg;
    for (std::size_t k = 0; k < segs[s].size(); ++k) seg.components.push_back(unipoly_from_json(segs[s][k], at(at(f, s), k)));
    out.push_back(std::move(seg));
  }
  return PiecewisePolyPath(dim, std::move(out));
}

Json basis_to_json(const GradedBasis& b) {
  Json rows = Json::array();
  for (const auto& r : b.rows()) rows.push_back(tensor_to_json(r));
  return Json{{"dimension", b.dim()}, {"level", b.level()}, {"closure", to_string(b.closure())}, {"rows", std::move(rows)}};
}

GradedBasis basis_from_json(const Json& j, const std::string& field) {
  const int dim = int_from_json(require_key(j, "dimension", field), at(field, "dimension"), 1);
  const int level = int_from_json(require_key(j, "level", field), at(field, "level"), 0);
  const std::string cf = at(field, "closure");
  const ClosureType closure = located(cf, [&] { return parse_closure(require_string(require_key(j, "closure", field), cf)); });
  const std::string rf = at(field, "rows");
  const Json& rows = require_array(require_key(j, "rows", field), rf);
  GradedBasis out(dim, level, closure);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const FreeTensor r = tensor_from_json(rows[i], dim, at(rf, i));
    if (r.degree() > static_cast<std::size_t>(level)) throw FieldError(at(rf, i), "row exceeds the level");
    out.insert(r);
  }
  return out;
}

Json multipoly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponents", e}, {"coeff", to_string(c)}});
  return Json{{"dimension", p.nvars()}, {"terms", std::move(terms)}};
}

MultiPoly multipoly_from_json(const Json& j, std::optional<int> nvars, const std::string& field) {
  std::optional<int> n = declared_dim(j, field);
  if (n && nvars && *n != *nvars) throw FieldError(at(field, "dimension"), "expected " + std::to_string(*nvars) + " variables");
  if (!n) n = nvars;
  std::string where;
  const Json& terms = term_array(j, field, where);
  if (!n) {
    if (terms.empty()) throw FieldError(at(field, "dimension"), "missing field");
    const std::string ef = at(at(where, std::size_t{0}), "exponents");
    n = static_cast<int>(require_array(require_key(terms[0], "exponents", at(where, std::size_t{0})), ef).size());
    if (*n < 1) throw FieldError(ef, "expected at least one exponent");
  }
  MultiPoly out(*n);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tf = at(where, i), ef = at(tf, "exponents");
    const Json& ej = require_array(require_key(terms[i], "exponents", tf), ef);
    if (static_cast<int>(ej.size()) != *n) throw FieldError(ef, "expected " + std::to_string(*n) + " exponents");
    Exponents e;
    for (std::size_t k = 0; k < ej.size(); ++k) e.push_back(int_from_json(ej[k], at(ef, k), 0));
    out.add(e, rational_from_json(require_key(terms[i], "coeff", tf), at(tf, "coeff")));
  }
  return out;
}

PolynomialMap polymap_from_json(const Json& j, const std::string& field) {
  const int dim = int_from_json(require_key(j, "dimension", field), at(field, "dimension"), 1);
  const std::string cf = at(field, "components");
  const Json& comps = require_array(require_key(j, "components", field), cf);
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < comps.size(); ++i) out.push_back(multipoly_from_json(comps[i], dim, at(cf, i)));
  return located(cf, [&] { return PolynomialMap(dim, std::move(out)); });
}

Json lettermap_to_json(const LetterMap& m) {
  Json images = Json::array();
  for (const auto& img : m.images) images.push_back(tensor_to_json(img));
  return Json{{"dimension", m.target_dim}, {"images", std::move(images)}};
}

LetterMap lettermap_from_json(const Json& j, const std::string& field) {
  const int dim = int_from_json(require_key(j, "dimension", field), at(field, "dimension"), 1);
  const std::string imf = at(field, "images");
  const Json& imgs = require_array(require_key(j, "images", field), imf);
  std::vector<FreeTensor> out;
  for (std::size_t i = 0; i < imgs.size(); ++i) out.push_back(tensor_from_json(imgs[i], dim, at(imf, i)));
  return located(imf, [&] { return LetterMap(dim, std::move(out)); });
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& field) {
  require_array(j, field);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    require_array(j[i], at(field, i));
    if (!rows.empty() && j[i].size() != rows.front().size()) throw FieldError(at(field, i), "ragged matrix row");
    std::vector<Rational> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(rational_from_json(j[i][k], at(at(field, i), k)));
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) throw FieldError(field, "empty matrix");
  return RationalMatrix::from_rows(rows);
}

std::vector<RationalMatrix> group_from_json(const Json& j, const std::string& field) {
  std::string where = field;
  const Json* mats = &j;
  if (j.is_object()) {
    where = at(field, "matrices");
    mats = &require_key(j, "matrices", field);
  }
  require_array(*mats, where);
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < mats->size(); ++i) out.push_back(matrix_from_json((*mats)[i], at(where, i)));
  if (out.empty()) throw FieldError(where, "expected at least one matrix");
  const int dim = declared_dim(j, field).value_or(static_cast<int>(out.front().rows()));
  located(where, [&] { require_finite_group(out, dim); });
  return out;
}

VarietySpec variety_from_json(const Json& j, const std::string& field) {
  VarietySpec v;
  v.dim = int_from_json(require_key(j, "dimension", field), at(field, "dimension"), 1);
  v.level = int_from_json(require_key(j, "level", field), at(field, "level"), 0);
  const std::string cf = at(field, "closure");
  v.closure = located(cf, [&] { return parse_closure(require_string(require_key(j, "closure", field), cf)); });
  const std::string gf = at(field, "generators");
  const Json& gens = require_array(require_key(j, "generators", field), gf);
  for (std::size_t i = 0; i < gens.size(); ++i) v.generators.push_back(tensor_from_json(gens[i], v.dim, at(gf, i)));
  return v;
}

Json variety_to_json(const VarietySpec& v) {
  Json gens = Json::array();
  for (const auto& g : v.generators) gens.push_back(tensor_to_json(g));
  return Json{{"dimension", v.dim}, {"closure", to_string(v.closure)}, {"level", v.level}, {"generators", std::move(gens)}};
}

RankSpec rankspec_from_json(const Json& j, const std::string& field) {
  RankSpec r;
  const std::string tf = at(field, "tensors");
  const Json& ts = require_array(require_key(j, "tensors", field), tf);
  int dim = declared_dim(j, field).value_or(1);
  if (!j.contains("dimension"))
    for (std::size_t i = 0; i < ts.size(); ++i) dim = std::max(dim, tensor_dim_hint(ts[i], at(tf, i)));
  for (std::size_t i = 0; i < ts.size(); ++i) r.tensors.push_back(tensor_from_json(ts[i], dim, at(tf, i)));
  r.bound = static_cast<std::size_t>(int_from_json(require_key(j, "bound", field), at(field, "bound"), 0));
  r.level = int_from_json(require_key(j, "level", field), at(field, "level"), 1);
  if (j.contains("side")) {
    const std::string sf = at(field, "side");
    r.side = located(sf, [&] { return parse_rank_side(require_string(j.at("side"), sf)); });
  }
  if (j.contains("columns")) r.columns = static_cast<std::size_t>(int_from_json(j.at("columns"), at(field, "columns"), 1));
  located(field, [&] { r.validate(); });
  return r;
}

Json membership_to_json(const MembershipResult& r) {
  Json out{{"member", r.member}, {"certified_level", r.certified_level}};
  if (r.first_failing_row) out["first_failing_row"] = *r.first_failing_row;
  return out;
}

Json rank_result_to_json(const RankResult& r) {
  return Json{{"passed", r.passed},
              {"rank", r.rank},
              {"columns_used", r.columns_used},
              {"certified_level", r.certified_level}};
}

}  // namespace pathvar::json_io
