#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathvar/ideals.hpp"
#include "pathvar/paths.hpp"
#include "pathvar/varieties.hpp"

namespace pathvar::json_io {

using Json = nlohmann::ordered_json;  // fields keep their construction order

/// A validation failure tied to a location in the input, e.g. "a.json:segments[0][1]".
class FieldError : public ValidationError {
 public:
  FieldError(std::string field, const std::string& message)
      : ValidationError(field + ": " + message), field_(std::move(field)), message_(message) {}
  const std::string& field() const { return field_; }
  const std::string& message() const { return message_; }

 private:
  std::string field_;
  std::string message_;
};

Json parse_text(const std::string& text, const std::string& field);
/// Compact, or indented with `pretty`; always newline-terminated.
std::string dump(const Json& j, bool pretty);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& field);
int int_from_json(const Json& j, const std::string& field, int min_value);

/// Declared "dimension" of an object, or the largest letter found in any word.
int tensor_dim_hint(const Json& j, const std::string& field);

Json tensor_to_json(const FreeTensor& x);
/// Accepts the term array or an object {"dimension", "terms"}.
FreeTensor tensor_from_json(const Json& j, int dim, const std::string& field);

Json series_to_json(const TruncatedSeries& g);
/// {"dimension"?, "level", "terms"}; `level` overrides a missing level.
TruncatedSeries series_from_json(const Json& j, std::optional<int> dim, std::optional<int> level,
                                 const std::string& field);

Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j, const std::string& field);

Json path_to_json(const PiecewisePolyPath& x);
/// {"dimension", "segments"} or {"dimension", "increments"} for a piecewise-linear path.
PiecewisePolyPath path_from_json(const Json& j, const std::string& field);

Json basis_to_json(const GradedBasis& b);
GradedBasis basis_from_json(const Json& j, const std::string& field);

Json multipoly_to_json(const MultiPoly& p);
/// Terms [{"exponents": [..], "coeff"}]; a bare array or {"dimension", "terms"}.
MultiPoly multipoly_from_json(const Json& j, std::optional<int> nvars, const std::string& field);
/// {"dimension", "components": [poly, ...]}.
PolynomialMap polymap_from_json(const Json& j, const std::string& field);

Json lettermap_to_json(const LetterMap& m);
/// {"dimension": target alphabet, "images": [tensor, ...]}.
LetterMap lettermap_from_json(const Json& j, const std::string& field);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j, const std::string& field);
/// {"dimension", "matrices": [...]} or a bare array of matrices.
std::vector<RationalMatrix> group_from_json(const Json& j, const std::string& field);

VarietySpec variety_from_json(const Json& j, const std::string& field);
Json variety_to_json(const VarietySpec& v);
RankSpec rankspec_from_json(const Json& j, const std::string& field);

Json membership_to_json(const MembershipResult& r);
Json rank_result_to_json(const RankResult& r);

}  // namespace pathvar::json_io
