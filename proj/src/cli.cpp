#include "naf/cli.hpp"

#include "naf/error.hpp"
#include "naf/expansion.hpp"
#include "naf/nads.hpp"
#include "naf/number_field.hpp"
#include "naf/optimality.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace naf::cli {

namespace {

using Json = nlohmann::ordered_json;

Integer parse_integer(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    static const std::regex digits("[+-]?[0-9]+");
    const std::string s = v.get<std::string>();
    if (std::regex_match(s, digits)) return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  if (v.is_number_float()) throw InputError(where + ": expected an integer (write integers beyond 64 bits as strings)");
  throw InputError(where + ": expected an integer");
}

unsigned parse_positive(const Json& v, const std::string& where) {
  const Integer x = parse_integer(v, where);
  if (x < 1 || x > 1'000'000) throw InputError(where + ": expected a positive integer, got " + x.str());
  return x.convert_to<unsigned>();
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Report: ordered entries, each a JSON value; `lines` entries print one raw
// line per array element in text mode.
struct Report {
  Json body = Json::object();
  std::vector<std::string> raw_keys;

  void set(const std::string& key, Json value) { body[key] = std::move(value); }
  void lines(const std::string& key, const std::vector<std::string>& values) {
    body[key] = values;
    raw_keys.push_back(key);
  }
};

std::string text_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ' ';
      out += text_value(e);
    }
    return out;
  }
  return v.dump();
}

void emit(const Report& r, bool json, std::ostream& out) {
  if (json) {
    out << r.body.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : r.body.items()) {
    if (std::find(r.raw_keys.begin(), r.raw_keys.end(), key) != r.raw_keys.end()) {
      for (const auto& line : value) out << line.get<std::string>() << '\n';
    } else {
      const std::string v = text_value(value);
      out << key << (v.empty() ? " =" : " = ") << v << '\n';
    }
  }
}

std::vector<std::string> point_strings(const std::vector<LatticePoint>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(p.str());
  return out;
}

std::string fmt(const Interval& v) { return format(v, 20); }

PrecisionConfig precision_for(const InstanceSpec& instance) {
  PrecisionConfig p;
  p.cap_bits = instance.precision_cap;
  if (const char* env = std::getenv("NAF_PRECISION_CAP_BITS")) {
    const std::string s(env);
    if (!std::regex_match(s, std::regex("[0-9]+")) || s.size() > 7 || std::stoul(s) < 1)
      throw InputError("NAF_PRECISION_CAP_BITS must be a positive integer");
    p.cap_bits = static_cast<unsigned>(std::stoul(s));
  }
  p.initial_bits = std::min(p.initial_bits, p.cap_bits);
  return p;
}

LatticeInstance lattice_of(const InstanceSpec& instance) {
  if (instance.min_poly) {
    if (!instance.min_poly->is_monic() || instance.min_poly->degree() < 1)
      throw InputError("minpoly must be monic of degree >= 1");
    return LatticeInstance::companion(*instance.min_poly);
  }
  return LatticeInstance(*instance.matrix);
}

NumberFieldInstance field_of(const InstanceSpec& instance) {
  const LatticeInstance lattice = lattice_of(instance);
  if (!is_expanding(lattice)) throw NotExpanding("base " + to_string(lattice.char_poly()) + " is not expanding");
  if (instance.min_poly) return NumberFieldInstance::build(*instance.min_poly, precision_for(instance));
  return NumberFieldInstance::from_lattice(lattice, precision_for(instance));
}

DigitSet digits_of(const InstanceSpec& instance, const NumberFieldInstance& nf) {
  if (instance.digitset == DigitFamily::rational_interval) return build_rational_interval(nf.lattice(), instance.w);
  return build_minimal_norm(nf, instance.w);
}

int cmd_info(const InstanceSpec& instance, Report& r) {
  const LatticeInstance lattice = lattice_of(instance);
  r.set("base", instance.min_poly ? "minpoly" : "matrix");
  r.set("n", lattice.n());
  r.set("char_poly", to_string(lattice.char_poly()));
  r.set("det", lattice.det().str());
  const bool expanding = is_expanding(lattice);
  r.set("expanding", expanding);
  if (!expanding) return 0;
  const NumberFieldInstance nf = field_of(instance);
  r.set("real_embeddings", nf.s());
  r.set("complex_pairs", nf.t());
  Json moduli = Json::array();
  for (const auto& e : nf.embeddings()) moduli.push_back(fmt(sqrt(e.modulus_sq, nf.bits())));
  r.set("sigma_abs", moduli);
  const NormContext ctx = norm_context(nf);
  r.set("inv_norm_sq", fmt(ctx.inv_norm_sq));
  r.set("w0", w0_bound(nf));
  r.set("tiling_w", tiling_w_bound(nf));
  r.set("r_sq", to_string(ctx.r_sq));
  r.set("R_sq", to_string(ctx.R_sq));
  r.set("R_sq_exact", ctx.R_exact);
  r.set("precision_bits", nf.bits());
  if (!nf.warnings().empty()) r.set("warnings", nf.warnings());
  return 0;
}

int cmd_digit_set(const InstanceSpec& instance, Report& r) {
  const NumberFieldInstance nf = field_of(instance);
  const DigitSet ds = digits_of(instance, nf);
  r.set("count", ds.size());
  r.lines("digits", point_strings(ds.digits()));
  return 0;
}

int cmd_expand(const InstanceSpec& instance, const std::string& point, std::optional<std::size_t> max_steps, Report& r) {
  const NumberFieldInstance nf = field_of(instance);
  const DigitSet ds = digits_of(instance, nf);
  const LatticePoint p = parse_point(point);
  if (p.size() != nf.n()) throw InputError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(nf.n()));
  r.set("point", p.str());
  const ExpandResult res = max_steps ? expand(ds, p, *max_steps) : expand(ds, p);
  if (const auto* cycle = std::get_if<CycleReport>(&res)) {
    r.set("status", cycle->step_limit ? "step_limit" : "cycle");
    r.set("steps", cycle->steps);
    if (!cycle->step_limit) r.set("cycle", point_strings(cycle->cycle));
    return 1;
  }
  const Expansion& e = std::get<Expansion>(res);
  std::vector<std::string> lsd = point_strings(e.digits);
  r.set("msd", std::vector<std::string>(lsd.rbegin(), lsd.rend()));
  r.set("lsd", lsd);
  r.set("length", e.digits.size());
  r.set("weight", weight(e));
  const bool ok = value(nf.lattice(), e) == p && is_wnaf(e);
  r.set("value_check", ok ? "ok" : "failed");
  return ok ? 0 : 1;
}

int report_nads(const DigitSet& ds, const NumberFieldInstance& nf, Report& r, const std::string& key) {
  if (auto cert = certify(ds, norm_context(nf), nf)) {
    r.set(key, to_string(cert->status));
    r.set("bound", to_string(*cert->bound_used));
    r.set("threshold_w", *cert->threshold_w);
    return 0;
  }
  const NadsVerdict v = search(ds, nf);
  r.set(key, to_string(v.status));
  r.set("M", decimal(*v.M, 20, true));
  r.set("ball_size", v.ball_size);
  if (v.status == NadsStatus::counterexample) {
    r.set("witness", point_strings(v.witness));
    return 1;
  }
  return 0;
}

int cmd_check_nads(const InstanceSpec& instance, Report& r) {
  const NumberFieldInstance nf = field_of(instance);
  return report_nads(digits_of(instance, nf), nf, r, "status");
}

int cmd_check_optimality(const InstanceSpec& instance, long radius, std::uint64_t seed, Report& r) {
  if (radius < 0) throw InputError("--radius must be >= 0");
  const NumberFieldInstance nf = field_of(instance);
  const DigitSet ds = digits_of(instance, nf);
  const OptimalityCertificate c = check_hypotheses(nf, ds);
  r.set("verdict", c.certified() ? "certified" : "not_certified");
  r.set("v_symmetric", c.v_symmetric);
  r.set("v_in_phi_v", c.v_in_phi_v);
  r.set("inv_norm_below_ratio", c.inv_norm_below_ratio);
  r.set("w_large_enough", c.w_large_enough);
  r.set("lhs", fmt(c.lhs));
  r.set("rhs", fmt(c.rhs));
  if (report_nads(ds, nf, r, "nads") != 0) return 1;
  const EmpiricalReport e = verify_empirically(ds, nf, Rational(radius), seed);
  r.set("radius", radius);
  r.set("seed", seed);
  r.set("points", e.points);
  r.set("sampled", e.sampled);
  r.set("violations", e.violations.size());
  r.set("expand_failures", e.expand_failures.size());
  r.set("oracle_cross_checks", e.cross_checked);
  r.set("oracle_mismatches", e.cross_mismatches);
  if (!e.violations.empty()) {
    const auto& v = e.violations.front();
    r.set("first_violation", v.point.str() + " wnaf_weight=" + std::to_string(v.wnaf_weight) +
                                 " min_weight=" + std::to_string(v.min_weight));
  }
  const bool clean = e.violations.empty() && e.expand_failures.empty() && e.cross_mismatches == 0;
  r.set("empirical", clean ? "consistent" : "violated");
  return clean ? 0 : 1;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read instance file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError("instance JSON, " + line_column(text, e.byte) + ": " + what);
  }
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "base" && key != "w" && key != "digitset" && key != "precision_cap")
      throw InputError("unknown field \"" + key + "\"");

  InstanceSpec instance;
  if (!doc.contains("base") || !doc["base"].is_object()) throw InputError("field base: expected an object");
  const Json& base = doc["base"];
  const bool has_poly = base.contains("minpoly"), has_matrix = base.contains("matrix");
  if (has_poly == has_matrix || base.size() != 1)
    throw InputError("field base: give exactly one of \"minpoly\" or \"matrix\"");
  if (has_poly) {
    const Json& c = base["minpoly"];
    if (!c.is_array() || c.size() < 2) throw InputError("field base.minpoly: expected at least two coefficients");
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) coeffs.push_back(parse_integer(c[i], "base.minpoly[" + std::to_string(i) + "]"));
    instance.min_poly = IntPoly::from_descending(coeffs);
    if (coeffs.front() != 1) throw InputError("field base.minpoly: leading coefficient must be 1");
  } else {
    const Json& rows = base["matrix"];
    if (!rows.is_array() || rows.empty()) throw InputError("field base.matrix: expected a non-empty list of rows");
    const std::size_t n = rows.size();
    std::vector<Integer> entries;
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n)
        throw InputError("field base.matrix: row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j)
        entries.push_back(parse_integer(rows[i][j], "base.matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    instance.matrix = IntMatrix(n, n, std::move(entries));
  }
  if (!doc.contains("w")) throw InputError("field w: missing");
  instance.w = parse_positive(doc["w"], "field w");
  if (doc.contains("digitset")) {
    const Json& d = doc["digitset"];
    const std::string name = d.is_string() ? d.get<std::string>() : "";
    if (name == "minimal-norm") instance.digitset = DigitFamily::minimal_norm;
    else if (name == "rational-interval") instance.digitset = DigitFamily::rational_interval;
    else throw InputError("field digitset: expected \"minimal-norm\" or \"rational-interval\"");
  }
  if (doc.contains("precision_cap")) instance.precision_cap = parse_positive(doc["precision_cap"], "field precision_cap");
  return instance;
}

LatticePoint parse_point(const std::string& text) {
  static const std::regex re("\\s*[+-]?[0-9]+\\s*(,\\s*[+-]?[0-9]+\\s*)*");
  if (!std::regex_match(text, re)) throw InputError("--point: expected comma-separated integers, got \"" + text + "\"");
  IntVector coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char ch) { return std::isspace(ch); }), part.end());
    if (part[0] == '+') part.erase(0, 1);
    coords.emplace_back(part);
  }
  return LatticePoint(std::move(coords));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"w-NAF digit systems over lattices with an expanding base"};
  app.require_subcommand(1);
  std::string instance_path, point, format = "text";
  long radius = 100;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_steps;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--instance", instance_path, "instance JSON file")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* info = app.add_subcommand("info", "base, embeddings and thresholds");
  CLI::App* digit_set = app.add_subcommand("digit-set", "list the digit set");
  CLI::App* expand_cmd = app.add_subcommand("expand", "w-NAF expansion of a point");
  CLI::App* nads = app.add_subcommand("check-nads", "decide whether every point has a w-NAF");
  CLI::App* opt = app.add_subcommand("check-optimality", "minimal-weight certificate and empirical check");
  for (CLI::App* sub : {info, digit_set, expand_cmd, nads, opt}) common(sub);
  expand_cmd->add_option("--point", point, "comma-separated coordinates")->required();
  expand_cmd->add_option("--max-steps", max_steps, "iteration limit");
  opt->add_option("--radius", radius, "norm radius of the sweep");
  opt->add_option("--seed", seed, "seed for sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool json = format == "json";
  Report r;
  auto fail = [&](const std::string& kind, const std::string& msg, int code) {
    if (json) {
      Json j = Json::object();
      j["error"] = kind;
      j["message"] = msg;
      out << j.dump(2) << '\n';
    } else {
      err << "error: " << kind << ": " << msg << '\n';
    }
    return code;
  };
  try {
    const InstanceSpec instance = load_instance(instance_path);
    int code = 0;
    if (*info) code = cmd_info(instance, r);
    else if (*digit_set) code = cmd_digit_set(instance, r);
    else if (*expand_cmd) code = cmd_expand(instance, point, max_steps, r);
    else if (*nads) code = cmd_check_nads(instance, r);
    else code = cmd_check_optimality(instance, radius, seed, r);
    emit(r, json, out);
    return code;
  } catch (const NotExpanding& e) {
    return fail("not_expanding", e.what(), 2);
  } catch (const MalformedDigitSet& e) {
    return fail("malformed_digit_set", e.what(), 2);
  } catch (const InputError& e) {
    return fail("input", e.what(), 2);
  } catch (const PrecisionCapExceeded& e) {
    return fail("precision_cap", e.what(), 3);
  } catch (const SizeCapExceeded& e) {
    return fail("size_cap", e.what(), 3);
  } catch (const Error& e) {
    return fail("failure", e.what(), 3);
  }
}

}  // namespace naf::cli
