#include "pathvar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "pathvar/json_io.hpp"

namespace pathvar::cli {

namespace {

using json_io::FieldError;
using json_io::Json;

struct Options {
  int level = -1;
  int n = -1;
  int dim = -1;
  std::string closure = "shuffle";
  std::string side = "left";
  std::size_t columns = 50;
  std::size_t segment = 0;
  std::string stop = "1";
  std::string word;
  std::uint64_t seed = 0;
  bool pretty = false;
  std::string output;
};

struct Context {
  std::vector<Json> inputs;
  std::vector<std::string> labels;
  Options opt;

  const Json& in(std::size_t i) const { return inputs.at(i); }
  const std::string& label(std::size_t i) const { return labels.at(i); }

  int level(const char* what) const {
    if (opt.level < 0) throw FieldError("--level", std::string("required for ") + what);
    return opt.level;
  }
  int n(const char* what) const {
    if (opt.n < 1) throw FieldError("--n", std::string("a positive value is required for ") + what);
    return opt.n;
  }

  // Alphabet shared by the given tensor inputs: --dim, else the largest declared or inferred size.
  int tensor_dim(std::initializer_list<std::size_t> idx) const {
    if (opt.dim > 0) return opt.dim;
    int d = 1;
    for (auto i : idx) d = std::max(d, json_io::tensor_dim_hint(in(i), label(i)));
    return d;
  }
  FreeTensor tensor(std::size_t i, int dim) const { return json_io::tensor_from_json(in(i), dim, label(i)); }
  TruncatedSeries series(std::size_t i, std::optional<int> dim = std::nullopt) const {
    if (!dim && opt.dim > 0) dim = opt.dim;
    return json_io::series_from_json(in(i), dim, opt.level >= 0 ? std::optional<int>(opt.level) : std::nullopt,
                                     label(i));
  }
  PiecewisePolyPath path(std::size_t i) const { return json_io::path_from_json(in(i), label(i)); }
};

using Handler = std::function<Json(const Context&)>;

struct Command {
  CommandInfo info;
  Handler run;
};

Json value_json(const Rational& q) { return Json{{"value", to_string(q)}}; }

Json tensor_binary(const Context& c, FreeTensor (*op)(const FreeTensor&, const FreeTensor&)) {
  const int d = c.tensor_dim({0, 1});
  return json_io::tensor_to_json(op(c.tensor(0, d), c.tensor(1, d)));
}

std::vector<FreeTensor> generators_from_json(const Context& c, std::size_t i, int& dim) {
  const Json& j = c.in(i);
  std::string where = c.label(i);
  Json list = Json::array();
  if (j.is_object()) {
    if (!j.contains("generators")) throw FieldError(where + ".generators", "missing field");
    if (j.contains("dimension") && c.opt.dim < 0)
      dim = json_io::int_from_json(j.at("dimension"), where + ".dimension", 1);
    list = j.at("generators");
    where += ".generators";
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    list.push_back(j);  // a single tensor
  } else {
    list = j;
  }
  if (!list.is_array()) throw FieldError(where, "expected an array of tensors");
  if (dim < 1) {
    dim = c.opt.dim > 0 ? c.opt.dim : 1;
    if (c.opt.dim < 1)
      for (std::size_t k = 0; k < list.size(); ++k)
        dim = std::max(dim, json_io::tensor_dim_hint(list[k], where + "[" + std::to_string(k) + "]"));
  }
  std::vector<FreeTensor> out;
  for (std::size_t k = 0; k < list.size(); ++k)
    out.push_back(json_io::tensor_from_json(list[k], dim, where + "[" + std::to_string(k) + "]"));
  return out;
}

ShiftSide shift_side(const std::string& s) {
  if (s == "left") return ShiftSide::left;
  if (s == "right") return ShiftSide::right;
  throw FieldError("--side", "expected left or right, got '" + s + "'");
}

Json basis_with_certificate(const GradedBasis& b) {
  return Json{{"certified_level", b.level()}, {"basis", json_io::basis_to_json(b)}};
}

// Portable draws: raw engine output only, no std distributions.
struct Draw {
  std::mt19937_64 eng;
  explicit Draw(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t k) { return eng() % k; }
  Rational rational() {
    const long num = static_cast<long>(below(7)) - 3;
    return Rational(num) / static_cast<long>(below(3) + 1);
  }
};

int require_dim(const Context& c) {
  if (c.opt.dim < 1) throw FieldError("--dim", "a positive alphabet size is required");
  return c.opt.dim;
}

std::vector<Command> build_commands() {
  std::vector<Command> t;
  auto add = [&](std::string group, std::string name, std::string summary, std::vector<std::string> inputs,
                 std::vector<std::string> flags, std::vector<std::string> ops, Handler h) {
    t.push_back({{std::move(group), std::move(name), std::move(summary), std::move(inputs), std::move(flags),
                  std::move(ops)},
                 std::move(h)});
  };

  // tensor
  add("tensor", "concat", "concatenation product x•y", {"x", "y"}, {"dim"}, {"concat_product"},
      [](const Context& c) { return tensor_binary(c, concat_product); });
  add("tensor", "shuffle", "shuffle product x⧢y", {"x", "y"}, {"dim"}, {"shuffle"},
      [](const Context& c) { return tensor_binary(c, shuffle); });
  add("tensor", "hsr", "right halfshuffle x≻y", {"x", "y"}, {"dim"}, {"half_shuffle_right"},
      [](const Context& c) { return tensor_binary(c, half_shuffle_right); });
  add("tensor", "hsl", "left halfshuffle x≺y", {"x", "y"}, {"dim"}, {"half_shuffle_left"},
      [](const Context& c) { return tensor_binary(c, half_shuffle_left); });
  add("tensor", "antipode", "signed word reversal", {"x"}, {"dim"}, {"antipode"}, [](const Context& c) {
    return json_io::tensor_to_json(antipode(c.tensor(0, c.tensor_dim({0}))));
  });
  add("tensor", "deconcat", "deconcatenation coproduct as (left, right) pairs", {"x"}, {"dim"}, {"deconcat"},
      [](const Context& c) {
        Json out = Json::array();
        for (const auto& [l, r] : deconcat(c.tensor(0, c.tensor_dim({0}))))
          out.push_back(Json{{"left", json_io::tensor_to_json(l)}, {"right", json_io::tensor_to_json(r)}});
        return out;
      });
  add("tensor", "phi", "polynomial to shuffle algebra", {"poly"}, {"dim"}, {"phi"}, [](const Context& c) {
    const auto p = json_io::multipoly_from_json(c.in(0), c.opt.dim > 0 ? std::optional<int>(c.opt.dim) : std::nullopt,
                                                c.label(0));
    return json_io::tensor_to_json(phi(p));
  });
  add("tensor", "mp", "M_p pullback of a polynomial map", {"map", "x"}, {}, {"m_p"}, [](const Context& c) {
    const auto p = json_io::polymap_from_json(c.in(0), c.label(0));
    return json_io::tensor_to_json(m_p(p, c.tensor(1, p.target_dim())));
  });
  add("tensor", "lambda", "Λ_B extension of a letter map", {"map", "x"}, {}, {"letter_map_extend"},
      [](const Context& c) {
        const auto b = json_io::lettermap_from_json(c.in(0), c.label(0));
        return json_io::tensor_to_json(letter_map_extend(b, c.tensor(1, b.source_dim), LetterMapMode::lambda));
      });
  add("tensor", "substitute", "multiplicative extension of a letter map", {"map", "x"}, {}, {"letter_map_extend"},
      [](const Context& c) {
        const auto b = json_io::lettermap_from_json(c.in(0), c.label(0));
        return json_io::tensor_to_json(
            letter_map_extend(b, c.tensor(1, b.source_dim), LetterMapMode::multiplicative));
      });

  // series
  add("series", "mul", "truncated concatenation product", {"g1", "g2"}, {"dim"}, {"series_mul"}, [](const Context& c) {
    const int d = c.tensor_dim({0, 1});
    return json_io::series_to_json(series_mul(c.series(0, d), c.series(1, d)));
  });
  add("series", "inv", "inverse of a series with invertible constant term", {"g"}, {"dim"}, {"series_inverse"},
      [](const Context& c) { return json_io::series_to_json(series_inverse(c.series(0))); });
  add("series", "antipode", "antipode applied termwise", {"g"}, {"dim"}, {"series_antipode"},
      [](const Context& c) { return json_io::series_to_json(series_antipode(c.series(0))); });
  add("series", "exp", "concatenation exponential", {"l"}, {"dim", "level"}, {"exp_conc"},
      [](const Context& c) { return json_io::series_to_json(exp_conc(c.series(0))); });
  add("series", "log", "concatenation logarithm", {"g"}, {"dim", "level"}, {"log_conc"},
      [](const Context& c) { return json_io::series_to_json(log_conc(c.series(0))); });
  add("series", "grouplike", "shuffle-multiplicativity check", {"g"}, {"dim", "level"}, {"is_grouplike"},
      [](const Context& c) { return Json{{"grouplike", is_grouplike(c.series(0))}}; });
  add("series", "lie", "primitive (Lie) check", {"l"}, {"dim", "level"}, {"is_lie"},
      [](const Context& c) { return Json{{"lie", is_lie(c.series(0))}}; });
  add("series", "pair", "<g, x>", {"g", "x"}, {"dim", "level"}, {"pair"}, [](const Context& c) {
    const int d = c.tensor_dim({0, 1});
    return value_json(pair(c.series(0, d), c.tensor(1, d)));
  });
  add("series", "coordinate", "coordinate of the first kind <log g, x>", {"g", "x"}, {"dim", "level"},
      {"first_kind_coordinate"}, [](const Context& c) {
        const int d = c.tensor_dim({0, 1});
        return value_json(first_kind_coordinate(c.tensor(1, d), c.series(0, d)));
      });
  add("series", "lyndon", "Lyndon-basis coordinates of a homogeneous Lie element", {"x"}, {"dim"},
      {"lyndon_coordinates"}, [](const Context& c) {
        const auto x = c.tensor(0, c.tensor_dim({0}));
        Json out = Json::array();
        for (const auto& [w, q] : lyndon_coordinates(x, x.degree()))
          out.push_back(Json{{"word", w.to_string(x.dim())}, {"coeff", to_string(q)}});
        return out;
      });

  // path
  add("path", "sig", "signature truncated at --level", {"path"}, {"level"}, {"signature"},
      [](const Context& c) { return json_io::series_to_json(signature(c.path(0), c.level("path sig"))); });
  add("path", "stopped", "stopped signature polynomial of --word on each segment", {"path"}, {"word"},
      {"stopped_signature_poly"}, [](const Context& c) {
        const auto x = c.path(0);
        const Word w = [&] {
          try {
            return Word::parse(c.opt.word, x.dim());
          } catch (const ValidationError& e) {
            throw FieldError("--word", e.what());
          }
        }();
        Json segs = Json::array();
        for (const auto& p : stopped_signature_poly(x, w)) segs.push_back(json_io::unipoly_to_json(p));
        return Json{{"word", w.to_string(x.dim())}, {"segments", std::move(segs)}};
      });
  add("path", "concat", "X then Y", {"x", "y"}, {}, {"concat"},
      [](const Context& c) { return json_io::path_to_json(concat(c.path(0), c.path(1))); });
  add("path", "reverse", "time reversal", {"path"}, {}, {"reverse"},
      [](const Context& c) { return json_io::path_to_json(reverse(c.path(0))); });
  add("path", "subpath", "path up to local time --stop of --segment", {"path"}, {"segment", "stop"},
      {"left_subpath"}, [](const Context& c) {
        const Rational stop = [&] {
          try {
            return parse_rational(c.opt.stop);
          } catch (const ValidationError& e) {
            throw FieldError("--stop", e.what());
          }
        }();
        return json_io::path_to_json(left_subpath(c.path(0), c.opt.segment, stop));
      });
  add("path", "apply-poly", "p(X - X_0) for a polynomial map p", {"map", "path"}, {}, {"apply_polynomial_map"},
      [](const Context& c) {
        return json_io::path_to_json(
            apply_polynomial_map(json_io::polymap_from_json(c.in(0), c.label(0)), c.path(1)));
      });
  add("path", "lambda-star", "path of stopped-signature coordinates Λ_B^*X", {"map", "path"}, {}, {"lambda_star"},
      [](const Context& c) {
        return json_io::path_to_json(lambda_star(json_io::lettermap_from_json(c.in(0), c.label(0)), c.path(1)));
      });
  add("path", "delta-shift", "letter map δ_g B", {"map", "g"}, {"level"}, {"delta_shift"}, [](const Context& c) {
    const auto b = json_io::lettermap_from_json(c.in(0), c.label(0));
    return json_io::lettermap_to_json(delta_shift(b, c.series(1, b.target_dim)));
  });

  // ideal
  add("ideal", "basis", "graded basis of the closure of the generators", {"generators"},
      {"closure", "level", "dim"}, {"ideal_basis"}, [](const Context& c) {
        int dim = -1;
        const auto gens = generators_from_json(c, 0, dim);
        ClosureType closure;
        try {
          closure = parse_closure(c.opt.closure);
        } catch (const ValidationError& e) {
          throw FieldError("--closure", e.what());
        }
        return json_io::basis_to_json(ideal_basis(gens, closure, c.level("ideal basis"), dim));
      });
  add("ideal", "member", "membership with coordinates on the basis rows", {"basis", "x"}, {}, {"member"},
      [](const Context& c) {
        const auto b = json_io::basis_from_json(c.in(0), c.label(0));
        const auto r = member(c.tensor(1, b.dim()), b);
        Json coords = Json::array();
        for (const auto& q : r.coords) coords.push_back(to_string(q));
        return Json{{"member", r.member}, {"coords", std::move(coords)}};
      });
  add("ideal", "saturated", "whether one more closure round adds nothing", {"basis"}, {}, {"is_saturated"},
      [](const Context& c) {
        return Json{{"saturated", is_saturated(json_io::basis_from_json(c.in(0), c.label(0)))}};
      });
  add("ideal", "shift", "basis shifted by a grouplike series", {"basis", "g"}, {"side"}, {"shift_ideal"},
      [](const Context& c) {
        const auto b = json_io::basis_from_json(c.in(0), c.label(0));
        return json_io::basis_to_json(shift_ideal(b, c.series(1, b.dim()), shift_side(c.opt.side)));
      });
  add("ideal", "power", "n-fold power transform of a tensor", {"x"}, {"n", "dim"}, {"power_ideal"},
      [](const Context& c) {
        return json_io::tensor_to_json(power_ideal(c.tensor(0, c.tensor_dim({0})), c.n("ideal power")));
      });
  add("ideal", "multi", "n-path transform over the alphabet n·d", {"x"}, {"n", "dim"}, {"multi_path_ideal"},
      [](const Context& c) {
        return json_io::tensor_to_json(multi_path_ideal(c.tensor(0, c.tensor_dim({0})), c.n("ideal multi")));
      });
  add("ideal", "power-basis", "basis rows mapped through the power transform", {"basis"}, {"n"}, {"power_basis"},
      [](const Context& c) {
        return json_io::basis_to_json(power_basis(json_io::basis_from_json(c.in(0), c.label(0)), c.n("ideal power-basis")));
      });
  add("ideal", "invariant", "average of A^T x over a finite matrix group", {"group", "x"}, {},
      {"invariant_projector"}, [](const Context& c) {
        const auto g = json_io::group_from_json(c.in(0), c.label(0));
        return json_io::tensor_to_json(invariant_projector(g, c.tensor(1, static_cast<int>(g.front().rows()))));
      });

  // variety
  add("variety", "member", "exact membership up to the certified level", {"path", "spec"}, {}, {"in_variety"},
      [](const Context& c) {
        return json_io::membership_to_json(in_variety(c.path(0), json_io::variety_from_json(c.in(1), c.label(1))));
      });
  add("variety", "rank", "rank test of a rank spec", {"path", "spec"}, {}, {"rank_test"}, [](const Context& c) {
    return json_io::rank_result_to_json(rank_test(c.path(0), json_io::rankspec_from_json(c.in(1), c.label(1))));
  });
  add("variety", "subspace", "trace in an --n dimensional subspace", {"path"}, {"n", "level", "columns"},
      {"subspace_test"}, [](const Context& c) {
        return json_io::rank_result_to_json(subspace_test(c.path(0), static_cast<std::size_t>(c.n("variety subspace")),
                                                          c.level("variety subspace"), c.opt.columns));
      });
  add("variety", "hypersurface", "trace in a hypersurface of degree --n", {"path"}, {"n", "level", "columns"},
      {"hypersurface_test", "shuffle_monomials"}, [](const Context& c) {
        return json_io::rank_result_to_json(
            hypersurface_test(c.path(0), c.n("variety hypersurface"), c.level("variety hypersurface"), c.opt.columns));
      });
  add("variety", "sphere", "trace in a sphere or hyperplane", {"path"}, {"level", "columns"},
      {"sphere_or_hyperplane_test"}, [](const Context& c) {
        return json_io::rank_result_to_json(
            sphere_or_hyperplane_test(c.path(0), c.level("variety sphere"), c.opt.columns));
      });
  add("variety", "realize", "piecewise-linear path with the given log-signature", {"lie"}, {"level", "dim"},
      {"realize_log_signature", "bracket_gadget"}, [](const Context& c) {
        auto s = c.series(0);
        if (c.opt.level >= 0 && c.opt.level != s.level())
          s = TruncatedSeries::from_tensor(s.as_tensor().truncated(static_cast<std::size_t>(c.opt.level)), c.opt.level);
        const auto l = LiePoly::from_series(s);
        return Json{{"certified_level", l.level()}, {"path", json_io::path_to_json(realize_log_signature(l))}};
      });
  add("variety", "shift", "variety basis shifted by a grouplike series", {"spec", "g"}, {"side"},
      {"shift_ideal", "VarietySpec::basis"}, [](const Context& c) {
        const auto v = json_io::variety_from_json(c.in(0), c.label(0));
        return basis_with_certificate(shift_ideal(v.basis(), c.series(1, v.dim), shift_side(c.opt.side)));
      });
  add("variety", "power", "basis whose zero set is {X : X^n in V}", {"spec"}, {"n"}, {"power_basis"},
      [](const Context& c) {
        const auto v = json_io::variety_from_json(c.in(0), c.label(0));
        return basis_with_certificate(power_basis(v.basis(), c.n("variety power")));
      });
  add("variety", "loops", "loops of order --n over --dim letters", {}, {"dim", "n"}, {"loops_variety"},
      [](const Context& c) { return json_io::variety_to_json(loops_variety(require_dim(c), c.n("variety loops"))); });
  add("variety", "increments", "paths with increment in {p = 0}", {"map"}, {"level"}, {"increments_variety"},
      [](const Context& c) {
        const auto p = json_io::polymap_from_json(c.in(0), c.label(0));
        return json_io::variety_to_json(
            increments_variety(p, c.opt.level >= 0 ? std::optional<int>(c.opt.level) : std::nullopt));
      });
  add("variety", "linear-poly", "signature coordinate of a linear path as a polynomial", {"x"}, {"dim"},
      {"linear_signature_polynomial"}, [](const Context& c) {
        return json_io::multipoly_to_json(linear_signature_polynomial(c.tensor(0, c.tensor_dim({0}))));
      });

  // random test data
  add("random", "tensor", "random tensor of degree 1..--level", {}, {"dim", "level", "seed"}, {}, [](const Context& c) {
    Draw r(c.opt.seed);
    const int d = require_dim(c), n = std::max(1, c.level("random tensor"));
    FreeTensor x(d);
    for (int k = 0; k < 4; ++k) {
      std::vector<Letter> letters(r.below(static_cast<std::uint64_t>(n)) + 1);
      for (auto& a : letters) a = static_cast<Letter>(r.below(static_cast<std::uint64_t>(d)) + 1);
      x.add(Word(std::move(letters)), r.rational());
    }
    return json_io::tensor_to_json(x);
  });
  add("random", "path", "random piecewise-linear path with --n segments", {}, {"dim", "n", "seed"}, {},
      [](const Context& c) {
        Draw r(c.opt.seed);
        const int d = require_dim(c);
        std::vector<std::vector<Rational>> incs(static_cast<std::size_t>(c.n("random path")));
        for (auto& v : incs)
          for (int i = 0; i < d; ++i) v.push_back(r.rational());
        return json_io::path_to_json(PiecewisePolyPath::piecewise_linear(d, incs));
      });
  add("random", "lie", "random Lie series up to --level", {}, {"dim", "level", "seed"}, {}, [](const Context& c) {
    Draw r(c.opt.seed);
    const int d = require_dim(c), n = c.level("random lie");
    TruncatedSeries out(d, n);
    for (int k = 1; k <= n; ++k) {
      const auto words = lyndon_words(d, static_cast<std::size_t>(k));
      if (words.empty()) continue;
      for (int j = 0; j < 2; ++j) {
        const auto& w = words[r.below(words.size())];
        out += TruncatedSeries::from_tensor(r.rational() * expand(*standard_bracketing(w), d), n);
      }
    }
    return json_io::series_to_json(out);
  });
  return t;
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table = build_commands();
  return table;
}

std::string read_input(const std::string& name, std::istream& in) {
  std::ostringstream buf;
  if (name == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(name, std::ios::binary);
    if (!f) throw FieldError(name, "cannot read file");
    buf << f.rdbuf();
  }
  return buf.str();
}

Json error_json(const std::string& type, const std::string& message, const std::string* field) {
  Json e{{"type", type}};
  if (field) e["field"] = *field;
  e["message"] = message;
  return Json{{"error", std::move(e)}};
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = [] {
    std::vector<CommandInfo> out;
    for (const auto& c : commands()) out.push_back(c.info);
    return out;
  }();
  return table;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact path signatures, shuffle ideals and path varieties.", "pathvar"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--pretty", opt.pretty, "indent the JSON output");
  app.add_option("--output,-o", opt.output, "write the result to a file instead of stdout");

  std::vector<std::string> slots(3);
  const Command* chosen = nullptr;
  std::vector<CLI::App*> groups;
  for (const auto& cmd : commands()) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](CLI::App* g) { return g->get_name() == cmd.info.group; });
    CLI::App* g = it != groups.end() ? *it : nullptr;
    if (!g) {
      g = app.add_subcommand(cmd.info.group, cmd.info.group + " operations");
      g->require_subcommand(1);
      g->fallthrough();
      groups.push_back(g);
    }
    CLI::App* leaf = g->add_subcommand(cmd.info.name, cmd.info.summary);
    leaf->fallthrough();
    for (std::size_t i = 0; i < cmd.info.inputs.size(); ++i)
      leaf->add_option(cmd.info.inputs[i], slots[i], "JSON file, - for stdin")->required();
    for (const auto& f : cmd.info.flags) {
      if (f == "level") leaf->add_option("--level", opt.level, "truncation level N")->check(CLI::NonNegativeNumber);
      if (f == "n") leaf->add_option("--n", opt.n, "order, degree or power")->check(CLI::PositiveNumber);
      if (f == "dim") leaf->add_option("--dim", opt.dim, "alphabet size d")->check(CLI::PositiveNumber);
      if (f == "closure") leaf->add_option("--closure", opt.closure, "shuffle, right-half, left-half, both-half, linear");
      if (f == "side") leaf->add_option("--side", opt.side, "left or right");
      if (f == "columns") leaf->add_option("--columns", opt.columns, "column budget L")->check(CLI::PositiveNumber);
      if (f == "segment") leaf->add_option("--segment", opt.segment, "segment index, from 0");
      if (f == "stop") leaf->add_option("--stop", opt.stop, "local stopping time in [0,1]");
      if (f == "word") leaf->add_option("--word", opt.word, "word, e.g. 12")->required();
      if (f == "seed") leaf->add_option("--seed", opt.seed, "generator seed");
    }
    leaf->callback([&chosen, &cmd] { chosen = &cmd; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    std::string usage = app.help();
    for (CLI::App* sub = &app; sub;) {
      const auto selected = sub->get_subcommands();
      if (selected.empty()) break;
      sub = selected.front();
      usage = sub->help();
    }
    err << usage;
    return 2;
  }

  try {
    Context ctx;
    ctx.opt = opt;
    for (std::size_t i = 0; i < chosen->info.inputs.size(); ++i) {
      ctx.labels.push_back(slots[i] == "-" ? std::string("stdin") : slots[i]);
      ctx.inputs.push_back(json_io::parse_text(read_input(slots[i], in), ctx.labels.back()));
    }
    const std::string text = json_io::dump(chosen->run(ctx), opt.pretty);
    if (opt.output.empty()) {
      out << text;
    } else {
      std::ofstream f(opt.output, std::ios::binary);
      if (!f) throw FieldError("--output", "cannot write '" + opt.output + "'");
      f << text;
    }
    return 0;
  } catch (const FieldError& e) {
    out << json_io::dump(error_json("validation", e.message(), &e.field()), opt.pretty);
    return 2;
  } catch (const ValidationError& e) {
    out << json_io::dump(error_json("validation", e.what(), nullptr), opt.pretty);
    return 2;
  } catch (const std::exception& e) {
    out << json_io::dump(error_json("internal", e.what(), nullptr), opt.pretty);
    return 1;
  }
}

}  // namespace pathvar::cli
