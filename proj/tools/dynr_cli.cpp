// SPDX-License-Identifier: Apache-2.0
// dynr: batch front-end for the verification routines.
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "dynr/errors.hpp"
#include "dynr_io.hpp"

using namespace dynr;
using io::Json;
using io::SchemaError;

namespace {

enum Exit { kPass = 0, kFail = 1, kSchema = 2 };

class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  Json& input() { return doc_["input"]; }
  Json& data() { return doc_["data"]; }

  void check(const std::string& name, bool ok, Json detail = Json::object()) {
    detail["name"] = name;
    detail["status"] = ok ? "pass" : "fail";
    // keep name/status first
    Json ordered{{"name", name}, {"status", detail["status"]}};
    for (auto& [k, v] : detail.items())
      if (k != "name" && k != "status") ordered[k] = v;
    checks_.push_back(ordered);
    all_ &= ok;
  }

  int finish(const std::string& out_path) {
    doc_["checks"] = checks_;
    doc_["status"] = all_ ? "pass" : "fail";
    for (const auto& c : checks_)
      std::cout << c["name"].get<std::string>() << ": " << (c["status"] == "pass" ? "PASS" : "FAIL") << "\n";
    std::cout << doc_["command"].get<std::string>() << ": " << (all_ ? "PASS" : "FAIL") << "\n";
    if (out_path == "-") {
      std::cout << doc_.dump(2) << "\n";
    } else if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot write " + out_path);
      f << doc_.dump(2) << "\n";
    }
    return all_ ? kPass : kFail;
  }

 private:
  Json doc_ = Json::object();
  Json checks_ = Json::array();
  bool all_ = true;
};

struct Common {
  std::string json_out;
  std::string job_path;
  std::size_t order = 4;
};

Json load_job(const std::string& path) {
  if (path.empty()) return Json::object();
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot open job file " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("job file is not valid JSON: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

int simple_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'a') throw SchemaError("expected a simple root name like a1, got '" + name + "'");
  try {
    return std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw SchemaError("bad simple root name '" + name + "'");
  }
}

Json simple_root_json(int rank, int k) {
  if (k < 1 || k > rank) throw SchemaError("simple root a" + std::to_string(k) + " out of range");
  std::vector<int> r(static_cast<std::size_t>(rank), 0);
  r[static_cast<std::size_t>(k - 1)] = 1;
  return r;
}

struct SpecFlags {
  std::string type = "A";
  int rank = 2;
  std::string delta;
  std::string u = "none";
  std::vector<std::string> t;
};

void add_spec_flags(CLI::App* app, SpecFlags& f) {
  app->add_option("--type", f.type, "Root system type (A, B, C, D)");
  app->add_option("--rank", f.rank, "Rank");
  app->add_option("--delta", f.delta, "Comma-separated simple roots in Delta, e.g. a1,a3");
  app->add_option("--u", f.u, "U: none, all, or pm-a<k> entries separated by commas");
  app->add_option("--t", f.t, "Binding a<k>=expression in t1..t_rank (repeatable)");
}

// Flags are folded into the job form so both paths share one parser.
Json spec_job(const SpecFlags& f, const Json& job) {
  if (job.contains("type")) return job;
  Json j{{"type", f.type}, {"rank", f.rank}};
  Json delta = Json::array();
  for (const auto& name : split(f.delta, ',')) delta.push_back(simple_root_json(f.rank, simple_index(name)));
  j["Delta"] = delta;
  Json U = Json::array();
  if (f.u == "all") {
    j["U_all"] = true;
  } else if (f.u != "none") {
    for (const auto& item : split(f.u, ',')) {
      if (item.rfind("pm-", 0) != 0) throw SchemaError("U entries must look like pm-a1");
      Json r = simple_root_json(f.rank, simple_index(item.substr(3)));
      U.push_back(r);
      for (auto& c : r) c = -c.get<int>();
      U.push_back(r);
    }
  }
  j["U"] = U;
  Json t = Json::object();
  for (const auto& b : f.t) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw SchemaError("t binding must look like a1=expr");
    t[b.substr(0, eq)] = b.substr(eq + 1);
  }
  j["t"] = t;
  return j;
}

DynrSpec build_spec(Json j) {
  if (j.value("U_all", false)) {
    // U = N(Delta) with t = 1 throughout
    const DynrSpec base = io::spec(Json{{"type", j["type"]}, {"rank", j["rank"]}, {"Delta", j["Delta"]}});
    j["U"] = io::roots(levi_set(base).roots);
    j.erase("U_all");
  }
  DynrSpec s = io::spec(j);
  validate_spec(s);
  return s;
}

Json spec_echo(const DynrSpec& s) {
  Json t = Json::object();
  for (const auto& [r, v] : s.t) t[Json(r).dump()] = io::field(v);
  return {{"type", std::string(1, s.rs.type())}, {"rank", s.rs.rank()}, {"Pi", io::roots(s.pi)},
          {"Delta", io::roots(s.delta)}, {"U", io::roots(s.U)}, {"t", t}};
}

std::map<int, FieldElement> parse_scale(const std::vector<std::string>& items) {
  std::map<int, FieldElement> out;
  for (const auto& s : items) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw SchemaError("scale must look like n=factor");
    try {
      out[std::stoi(s.substr(0, eq))] = FieldElement::parse(twist_context(), s.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("bad scale entry: ") + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------- commands

int run_classify(const Common& c, const SpecFlags& f) {
  const DynrSpec s = build_spec(spec_job(f, load_job(c.job_path)));
  Report rep("classify");
  rep.input() = spec_echo(s);
  const CoefficientFamily fam = build_coefficients(s);
  rep.data()["x"] = io::coefficients(s.rs, fam);
  const ConditionReport cond = check_coefficient_conditions(s.rs, fam, s.U);
  const Json cj = io::conditions(cond);
  for (const auto& [name, r] : cj.items()) rep.check(std::string("mOmega_") + name, r["status"] == "pass", r);

  const LieAlgebra g = realize_lie_algebra(s.rs, s.U);
  const MembershipReport mem = check_in_M_Omega(g, coefficients_to_tensor(g, fam));
  rep.check("tensor_oracle", mem.member(),
            {{"antisymmetric", mem.antisymmetric}, {"m_supported", mem.m_supported},
             {"u_invariant", mem.u_invariant}, {"reduced_cyb", io::tensor(g, mem.reduced_cyb)}});

  const auto witnesses = recover_classification(s.rs, fam, s.U, t_context(s.rs.rank()));
  Json w = Json::array();
  bool round_trip = false;
  for (const auto& wit : witnesses) {
    Json t = Json::object();
    for (const auto& [r, v] : wit.t) t[Json(r).dump()] = io::field(v);
    w.push_back({{"Pi", io::roots(wit.pi)}, {"Delta", io::roots(wit.delta)}, {"t", t}, {"round_trip", wit.round_trip}});
    round_trip |= wit.round_trip;
  }
  rep.check("round_trip", round_trip, {{"witnesses", w}});
  return rep.finish(c.json_out);
}

int run_verify_rmatrix(const Common& c, const SpecFlags& f) {
  const Json job = load_job(c.job_path);
  const DynrSpec s = build_spec(spec_job(f, job));
  const LieAlgebra g = realize_lie_algebra(s.rs, s.U);
  Report rep("verify-rmatrix");
  rep.input() = spec_echo(s);
  Tensor2 b;
  if (job.contains("tensor")) {
    b = io::tensor2(g, t_context(s.rs.rank()), job.at("tensor"));
    rep.input()["tensor"] = job.at("tensor");
  } else {
    b = coefficients_to_tensor(g, build_coefficients(s));
  }
  rep.data()["b"] = io::tensor(g, b);
  try {
    const MembershipReport mem = check_in_M_Omega(g, b);
    rep.check("quasi_unitarity", true);
    rep.check("antisymmetric", mem.antisymmetric);
    rep.check("m_supported", mem.m_supported);
    rep.check("u_invariant", mem.u_invariant);
    rep.check("cyb_mod_u", mem.cyb_vanishes, {{"residual", io::tensor(g, mem.reduced_cyb)}});
  } catch (const QuasiUnitarityError& e) {
    rep.check("quasi_unitarity", false, {{"message", e.what()}});
  }
  return rep.finish(c.json_out);
}

int run_lagrangian(const Common& c, const SpecFlags& f) {
  const DynrSpec s = build_spec(spec_job(f, load_job(c.job_path)));
  const LieAlgebra g = realize_lie_algebra(s.rs, s.U);
  Report rep("lagrangian");
  rep.input() = spec_echo(s);
  const LagrangianReport r = check_lagrangian(g, build_lagrangian(s, g));
  rep.check("dimension", r.dim == r.dim_g, {{"dim", r.dim}, {"dim_g", r.dim_g}});
  rep.check("isotropic", r.isotropic);
  rep.check("bracket_closed", r.bracket_closed);
  rep.check("diagonal_intersection", r.intersection_dim == r.u_dim && r.contains_u_diag,
            {{"intersection_dim", r.intersection_dim}, {"u_dim", r.u_dim}});
  return rep.finish(c.json_out);
}

void twist_report(Report& rep, const TwistReport& r) {
  for (std::size_t k = 0; k < r.residuals.size(); ++k) {
    Json d{{"order", k}};
    if (!r.residuals[k].is_zero()) d["residual"] = io::uea(r.residuals[k]);
    rep.check("order_" + std::to_string(k), r.residuals[k].is_zero(), d);
  }
  for (std::size_t k = 0; k < r.counit_left.size(); ++k)
    rep.check("counit_" + std::to_string(k), r.counit_left[k] && r.counit_right[k]);
}

int run_abrr(const Common& c, const std::vector<std::string>& scale, bool emit) {
  Report rep("abrr-check");
  const auto sc = parse_scale(scale);
  rep.input() = {{"order", c.order}, {"scale", scale}};
  const TwistSeries J = abrr_twist(c.order, sc);
  if (emit) rep.data()["twist"] = io::twist(J);
  twist_report(rep, check_dynamical_twist(J, c.order));
  rep.check("h_invariant", check_weight_zero(J, "h"));
  return rep.finish(c.json_out);
}

int run_cdybe(const Common& c) {
  const Json job = load_job(c.job_path);
  const LieAlgebra& g = sl2_uea()->lie();
  Report rep("cdybe-check");
  Tensor2 r;
  if (job.contains("r")) {
    r = io::tensor2(g, twist_context(), job.at("r"));
    rep.input() = {{"r", job.at("r")}};
  } else {
    const std::size_t N = std::max<std::size_t>(c.order, 1);
    rep.input() = {{"order", N}};
    r = classical_limit_r(abrr_twist(N));
    const FieldElement inv = FieldElement::variable(twist_context(), "lambda").inverse();
    const std::size_t x = g.index("x"), y = g.index("y");
    Tensor2 u;
    u.add_term({x, y}, inv);
    u.add_term({y, x}, -inv);
    rep.check("classical_limit", (r - u).is_zero(), {{"r", io::tensor(g, r)}});
  }
  const Tensor3 res = check_cdybe(g, r);
  rep.check("cdybe", res.is_zero(), {{"residual", io::tensor(g, res)}});
  return rep.finish(c.json_out);
}

OrbitFunction parse_orbit(const std::string& text) {
  OrbitFunction f(FieldElement(1));
  if (text == "1") return f;
  for (const auto& factor : split(text, '*')) {
    if (factor.size() != 2 || factor[0] != 'f' || std::string("xyh").find(factor[1]) == std::string::npos)
      throw SchemaError("orbit function factors must be fx, fy or fh, got '" + factor + "'");
    f = f * orbit_function(std::string(1, factor[1]));
  }
  return f;
}

Json residual_list(const std::vector<std::pair<std::string, OrbitFunction>>& list, bool& ok) {
  Json out = Json::object();
  ok = true;
  for (const auto& [n, r] : list) {
    ok &= r.is_zero();
    if (!r.is_zero()) out[n] = io::orbit(r);
  }
  return out;
}

int run_star(const Common& c, const std::string& identity, const std::string& left, const std::string& right,
             bool hbar_one) {
  Report rep("star");
  if (!left.empty() || !right.empty()) {
    const OrbitFunction a = parse_orbit(left.empty() ? "1" : left), b = parse_orbit(right.empty() ? "1" : right);
    rep.input() = {{"left", left}, {"right", right}, {"hbar_one", hbar_one}, {"order", c.order}};
    if (hbar_one) {
      rep.data()["product"] = io::orbit(star_product(a, b));
    } else {
      Json s = Json::array();
      for (const auto& o : star_product_series(a, b, c.order)) s.push_back(io::orbit(o));
      rep.data()["series"] = s;
    }
    // product against the twist applied without the h shortcut
    const auto direct = apply_twist(abrr_twist(c.order), a, b);
    const auto series = star_product_series(a, b, c.order);
    bool agree = true;
    for (std::size_t k = 0; k <= c.order; ++k) agree &= (direct[k] - series[k]).is_zero();
    rep.check("twist_agreement", agree);
    return rep.finish(c.json_out);
  }
  static const std::set<std::string> known{"all", "fafb", "commutator", "casimir", "associativity",
                                           "quasiclassical", "equivariance", "graded"};
  if (!known.count(identity)) throw SchemaError("unknown identity '" + identity + "'");
  rep.input() = {{"identity", identity}};
  const OrbitIdentityReport r = verify_orbit_identities();
  auto want = [&](const char* n) { return identity == "all" || identity == n; };
  bool ok = true;
  if (want("fafb")) {
    const Json d = residual_list(r.fafb_residuals, ok);
    rep.check("fafb", ok, {{"pairs", r.fafb_residuals.size()}, {"residuals", d}});
  }
  if (want("commutator")) {
    const Json d = residual_list(r.commutator_residuals, ok);
    rep.check("commutator", ok, {{"residuals", d}});
  }
  if (want("casimir")) {
    Json v = r.casimir_value.is_zero() || r.casimir_value.degree() > 0
                 ? io::orbit(r.casimir_value)
                 : Json(io::field(r.casimir_value.terms().begin()->second));
    rep.check("casimir", r.casimir_residual.is_zero(), {{"value", v}});
  }
  if (want("associativity"))
    rep.check("associativity", r.associativity_failures.empty(),
              {{"triples", r.associativity_triples}, {"failures", r.associativity_failures}});
  if (want("quasiclassical")) {
    const Json d = residual_list(r.quasiclassical_residuals, ok);
    rep.check("quasiclassical", ok, {{"residuals", d}});
  }
  if (want("equivariance")) {
    const Json d = residual_list(r.equivariance_residuals, ok);
    rep.check("equivariance", ok, {{"residuals", d}});
    const Json t = residual_list(r.twist_agreement_residuals, ok);
    rep.check("twist_agreement", ok, {{"residuals", t}});
  }
  if (want("graded"))
    rep.check("graded_dimensions", r.graded_dims_orbit == r.graded_dims_quotient,
              {{"orbit", r.graded_dims_orbit}, {"quotient", r.graded_dims_quotient}});
  return rep.finish(c.json_out);
}

int run_verma(const Common& c, int v, int w, std::size_t depth, const std::vector<std::string>& scale) {
  const Json job = load_job(c.job_path);
  if (job.contains("V")) v = job.at("V").get<int>();
  if (job.contains("W")) w = job.at("W").get<int>();
  if (job.contains("depth")) depth = job.at("depth").get<std::size_t>();
  if (v < 0 || w < 0 || v % 2 || w % 2) throw SchemaError("V and W must have even non-negative highest weight");
  Report rep("verma-oracle");
  rep.input() = {{"V", v}, {"W", w}, {"depth", depth}, {"scale", scale}};
  const FiniteModule V(v), W(w);
  const OracleReport r =
      compose_and_extract(V, W, zero_weight_vector(V), zero_weight_vector(W), depth, parse_scale(scale));
  Json d = io::oracle(r);
  rep.data()["oracle"] = d;
  rep.check("oracle", r.passed(), {{"difference_terms", d["difference_terms"]}});
  return rep.finish(c.json_out);
}

int run_project(const Common& c, const std::string& s_text, bool emit) {
  Rational s;
  try {
    s = Rational(s_text);
    s.canonicalize();
  } catch (const std::exception&) {
    throw SchemaError("splitting parameter must be a rational number");
  }
  const SplittingData sp = split_basis_sl2(s);
  Report rep("project-twist");
  rep.input() = {{"order", c.order}, {"split", s.get_str()}};
  const TwistSeries J = abrr_twist(c.order);
  const TwistSeries Jv = project_twist(J, sp);
  if (emit) rep.data()["projected"] = io::twist(Jv);
  if (s == 1) {
    const TwistSeries closed = closed_form_jv(c.order, sp);
    bool eq = true;
    for (std::size_t k = 0; k <= c.order; ++k) eq &= Jv.orders[k] == closed.orders[k];
    rep.check("closed_form", eq);
  }
  const TwistReport tr = check_nondynamical_twist(Jv, c.order);
  twist_report(rep, tr);
  if (s == 1) {
    bool rf = true, cb = true;
    for (int n = 0; n <= 6; ++n) {
      rf &= rising_factorial_projection(n, sp).equal;
      cb &= cb_identity_residual(n, sp).is_zero();
    }
    rep.check("rising_factorial", rf, {{"max_n", 6}});
    rep.check("cb_identity", cb, {{"max_n", 6}});
  }
  bool pr = true;
  for (const auto& [l, r] : projection_residuals(J, sp, std::min<std::size_t>(c.order, 4)))
    pr &= l.is_zero() && r.is_zero();
  rep.check("projection_commutes", pr);
  return rep.finish(c.json_out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynr: dynamical r-matrices, twists and star products"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json-out", common.json_out, "Write the JSON report here ('-' for stdout)");
    sub->add_option("--job", common.job_path, "JSON job file");
    sub->add_option("--order", common.order, "hbar truncation order")->check(CLI::Range(0, 12));
  };

  SpecFlags spec_flags;
  auto* classify = app.add_subcommand("classify", "Build x_alpha from (Pi, Delta, U, t) and check it");
  auto* verify = app.add_subcommand("verify-rmatrix", "Check membership of b in M_Omega");
  auto* lagr = app.add_subcommand("lagrangian", "Check the Lagrangian subalgebra of g x g");
  for (auto* s : {classify, verify, lagr}) {
    add_common(s);
    add_spec_flags(s, spec_flags);
  }

  std::vector<std::string> scale;
  bool emit = false;
  auto* abrr = app.add_subcommand("abrr-check", "Check the ABRR twist against the dynamical twist equation");
  add_common(abrr);
  abrr->add_option("--scale", scale, "Multiply the n-th ABRR summand: n=factor (repeatable)");
  abrr->add_flag("--emit-twist", emit, "Include the twist series in the report");

  auto* cdybe = app.add_subcommand("cdybe-check", "Classical limit of ABRR and the CDYBE");
  add_common(cdybe);

  std::string identity = "all", left, right;
  bool hbar_one = false;
  auto* star = app.add_subcommand("star", "Star product on the orbit of SL(2)");
  add_common(star);
  star->add_option("--identity", identity, "all|fafb|commutator|casimir|associativity|quasiclassical|equivariance|graded");
  star->add_option("--left", left, "Left factor, e.g. fx*fy");
  star->add_option("--right", right, "Right factor");
  star->add_flag("--hbar-one", hbar_one, "Exact product at hbar = 1");

  int vw = 2, ww = 2;
  std::size_t depth = 0;
  auto* verma = app.add_subcommand("verma-oracle", "Compose Verma intertwiners and compare with ABRR");
  add_common(verma);
  verma->add_option("--V", vw, "Highest weight of V");
  verma->add_option("--W", ww, "Highest weight of W");
  verma->add_option("--depth", depth, "Verma truncation depth (default dim V + dim W)");
  verma->add_option("--scale", scale, "Multiply the n-th ABRR summand: n=factor (repeatable)");

  std::string split_param = "1";
  auto* proj = app.add_subcommand("project-twist", "Project ABRR onto Uv ⊗ Uv and check the twist equation");
  add_common(proj);
  proj->add_option("--split", split_param, "Splitting parameter s (1 is the standard example)");
  proj->add_flag("--emit-twist", emit, "Include the projected series in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kSchema;
  }

  try {
    if (classify->parsed()) return run_classify(common, spec_flags);
    if (verify->parsed()) return run_verify_rmatrix(common, spec_flags);
    if (lagr->parsed()) return run_lagrangian(common, spec_flags);
    if (abrr->parsed()) return run_abrr(common, scale, emit);
    if (cdybe->parsed()) return run_cdybe(common);
    if (star->parsed()) return run_star(common, identity, left, right, hbar_one);
    if (verma->parsed()) return run_verma(common, vw, ww, depth, scale);
    if (proj->parsed()) return run_project(common, split_param, emit);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const UnknownParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kSchema;
}
