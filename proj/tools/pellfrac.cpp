// pellfrac: command-line front end for the continued fraction, curve and
// family machinery. Exit codes: 0 periodic / success, 2 period not detected,
// 1 error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pellfrac/acceptance.hpp"
#include "pellfrac/cfrac.hpp"
#include "pellfrac/ecurve.hpp"
#include "pellfrac/families.hpp"
#include "pellfrac/json_io.hpp"
#include "pellfrac/modcurve.hpp"

namespace {

using namespace pellfrac;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_not_detected = 2;

struct RunConfig {
  std::int64_t d = 1;
  int max_steps = default_max_steps;
  int order_bound = default_order_bound;
  unsigned height = 4;
  std::string format = "json";
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct Report {
  json body;
  int code = exit_ok;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

/// Field implied by any sqrt(m) in the inputs, else the configured default.
FieldTag infer_field(const std::vector<std::string>& inputs, std::int64_t configured) {
  FieldTag field = FieldTag::of(configured);
  for (const auto& text : inputs) {
    for (std::size_t pos = text.find("sqrt("); pos != std::string::npos; pos = text.find("sqrt(", pos + 1)) {
      std::size_t close = text.find(')', pos);
      if (close == std::string::npos) throw error(errc::parse_error, "unterminated sqrt( in '" + text + "'");
      std::string radicand = text.substr(pos + 5, close - pos - 5);
      FieldTag here;
      try {
        here = canonical_field(std::stoll(radicand)).field;
      } catch (const std::logic_error&) {
        throw error(errc::parse_error, "bad radicand '" + radicand + "'");
      }
      field = join(field, here);
    }
  }
  return field;
}

QuadElem parse_value(const std::string& text, FieldTag field) { return parse_quad(text, field); }

Poly parse_quartic(const std::string& coeffs, FieldTag field) {
  auto parts = split_commas(coeffs);
  if (parts.empty()) throw error(errc::parse_error, "no coefficients given");
  std::vector<QuadElem> c;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) c.push_back(parse_value(*it, field));
  return Poly(std::move(c), field);
}

json expansion_summary(const CFExpansion& e, bool trace) {
  json j = to_json(e, trace);
  return j;
}

// ---- commands -------------------------------------------------------------

struct ExpandArgs {
  std::string f;
  std::string mu;
  bool trace = false;
};

Report cmd_expand(const ExpandArgs& a, const RunConfig& cfg) {
  std::vector<std::string> inputs = split_commas(a.f);
  if (!a.mu.empty()) inputs.push_back(a.mu);
  FieldTag field = infer_field(inputs, cfg.d);
  Poly f = parse_quartic(a.f, field);
  CFExpansion e = a.mu.empty() ? expand_sqrt(f, cfg.max_steps) : scaled_expand(f, parse_value(a.mu, field), cfg.max_steps);
  Report r;
  r.body = {{"command", "expand"}, {"status", e.period ? "periodic" : "not_detected"}, {"field", field.d()}};
  if (!a.mu.empty()) r.body["mu"] = to_json(parse_value(a.mu, field));
  r.body["expansion"] = expansion_summary(e, a.trace);
  r.code = e.period ? exit_ok : exit_not_detected;
  return r;
}

struct FamilyArgs {
  std::string tag;
  std::string t;
  std::string s;
};

FamilySpec make_spec(const FamilyArgs& a, const RunConfig& cfg) {
  FamilySpec spec;
  spec.tag = parse_family_tag(a.tag);
  const bool symbolic_s = a.s.empty() || a.s == "sqrt" || a.s == "+sqrt" || a.s == "-sqrt";
  std::vector<std::string> inputs{a.t};
  if (!symbolic_s) inputs.push_back(a.s);
  FieldTag field = infer_field(inputs, cfg.d);
  spec.t = parse_value(a.t, field);
  const auto curve = info(spec.tag).curve;
  if (!curve) {
    if (!a.s.empty()) throw error(errc::parse_error, "family " + a.tag + " takes no s parameter");
    return spec;
  }
  if (!symbolic_s) {
    spec.s = parse_value(a.s, field);
    return spec;
  }
  auto roots = s_roots(*curve, spec.t, field);
  auto principal = principal_s(*curve, spec.t, field);
  if (!principal) throw error(errc::not_on_curve, "no s in " + field.name() + " with (t, s) on " + std::string(name(*curve)) + " at t = " + spec.t.to_string());
  spec.s = *principal;
  if (a.s == "-sqrt") {
    for (const auto& r : roots)
      if (r != *principal) spec.s = r;
  }
  return spec;
}

Report cmd_family(const FamilyArgs& a, const RunConfig& cfg) {
  FamilySpec spec = make_spec(a, cfg);
  FamilyModel fm = family_quartic(spec, cfg.order_bound);
  auto order = infinity_order(fm.model, cfg.order_bound);
  CFExpansion e = expand_sqrt(fm.model.f(), cfg.max_steps);
  Report r;
  r.body = {{"command", "family"},
            {"status", e.period ? "periodic" : "not_detected"},
            {"tag", std::string(name(spec.tag))},
            {"field", spec.field().d()},
            {"t", to_json(spec.t)},
            {"s", info(spec.tag).curve ? to_json(spec.s) : json(nullptr)},
            {"tate", to_json(fm.tate)},
            {"model", to_json(fm.model)},
            {"printed_model", to_json(fm.printed)},
            {"printed_relation", std::string(to_string(fm.printed_relation))},
            {"printed_order", optional_json(fm.printed_order)},
            {"expected_order", fm.torsion_order},
            {"order", optional_json(order)},
            {"period", optional_json(e.period)},
            {"r", optional_json(e.quasi_period)},
            {"k", optional_json(e.k)}};
  r.code = e.period ? exit_ok : exit_not_detected;
  return r;
}

struct CertifyArgs {
  int n = 13;
  std::string t;
  std::string s;
  bool inject_fault = false;
};

Report cmd_certify(const CertifyArgs& a, const RunConfig& cfg) {
  const FamilyTag tag = tag_for_odd_period(a.n);
  const ModCurveId curve = *info(tag).curve;
  std::optional<detail::CompiledFormula> faulty;
  CertificateOptions opts;
  opts.max_steps = cfg.max_steps;
  if (a.inject_fault) {
    faulty = corrupted_alpha(a.n);
    opts.alpha_table = &*faulty;
  }
  std::vector<ModCurvePoint> points;
  FieldTag field = FieldTag::of(cfg.d);
  if (!a.t.empty()) {
    FamilySpec spec = make_spec({std::string(name(tag)), a.t, a.s}, cfg);
    field = spec.field();
    points.push_back(make_point(curve, spec.t, spec.s));
  } else {
    for (const auto& p : solve_points(curve, field, cfg.height, thread_cap(cfg.threads)))
      if (p.admissible && !p.cusp) points.push_back(p);
  }
  json certs = json::array();
  for (const auto& p : points) certs.push_back(to_json(odd_period_certificate(a.n, p, opts)));
  Report r;
  r.body = {{"command", "certify"}, {"status", "ok"},        {"n", a.n},
            {"field", field.d()},   {"curve", name(curve)}, {"height", a.t.empty() ? json(cfg.height) : json(nullptr)},
            {"certificates", certs}};
  return r;
}

struct PointsArgs {
  std::string curve;
  bool only_admissible = false;
};

Report cmd_points(const PointsArgs& a, const RunConfig& cfg) {
  ModCurveId id = parse_curve_id(a.curve);
  FieldTag field = FieldTag::of(cfg.d);
  json pts = json::array();
  for (const auto& p : solve_points(id, field, cfg.height, thread_cap(cfg.threads)))
    if (!a.only_admissible || (p.admissible && !p.cusp)) pts.push_back(to_json(p));
  Report r;
  r.body = {{"command", "points"}, {"status", "ok"}, {"curve", name(id)}, {"field", field.d()}, {"height", cfg.height}, {"points", pts}};
  return r;
}

struct OrderArgs {
  std::string u, v, w;
  std::string b, c;
};

Report cmd_order(const OrderArgs& a, const RunConfig& cfg) {
  const bool quartic = !a.u.empty() || !a.v.empty() || !a.w.empty();
  const bool tate = !a.b.empty() || !a.c.empty();
  if (quartic == tate) throw error(errc::parse_error, "give either --u/--v/--w or --b/--c");
  Report r;
  r.body = {{"command", "order"}};
  ShortWeierstrass E;
  ECPoint P;
  if (quartic) {
    if (a.u.empty() || a.v.empty() || a.w.empty()) throw error(errc::parse_error, "--u, --v and --w are all required");
    FieldTag field = infer_field({a.u, a.v, a.w}, cfg.d);
    QuarticModel M{parse_value(a.u, field), parse_value(a.v, field), parse_value(a.w, field)};
    Jacobian J = jacobian_of_quartic(M);
    E = J.E;
    P = J.P;
    r.body["model"] = to_json(M);
  } else {
    if (a.b.empty() || a.c.empty()) throw error(errc::parse_error, "--b and --c are both required");
    FieldTag field = infer_field({a.b, a.c}, cfg.d);
    TateCurve T{parse_value(a.b, field), parse_value(a.c, field)};
    TateImage img = tate_to_short(T);
    E = img.E;
    P = img.P;
    r.body["tate"] = to_json(T);
  }
  auto n = point_order(E, P, cfg.order_bound);
  r.body["status"] = n ? "finite" : "not_detected";
  r.body["curve"] = to_json(E);
  r.body["point"] = to_json(P);
  r.body["order"] = optional_json(n);
  r.body["order_bound"] = cfg.order_bound;
  r.code = n ? exit_ok : exit_not_detected;
  return r;
}

struct SelftestArgs {
  bool inject_fault = false;
  bool timings = false;
};

Report cmd_selftest(const SelftestArgs& a, const RunConfig& cfg) {
  acceptance::Options opts{cfg.seed, a.inject_fault, cfg.threads};
  json results = json::array();
  bool all = true;
  std::vector<std::string> lines;
  for (const auto& res : acceptance::run(opts)) {
    json j{{"id", res.id}, {"title", res.title}, {"passed", res.passed}, {"detail", res.detail}};
    if (a.timings) j["seconds"] = res.seconds;
    results.push_back(std::move(j));
    lines.push_back(acceptance::format(res, a.timings));
    all = all && res.passed;
  }
  Report r;
  r.body = {{"command", "selftest"}, {"status", all ? "ok" : "failed"}, {"seed", cfg.seed}, {"criteria", results}};
  r.body["lines"] = lines;
  r.code = all ? exit_ok : exit_error;
  return r;
}

// ---- output ---------------------------------------------------------------

std::string render_value(const json& v) {
  if (v.is_object() && v.contains("a") && v.contains("d")) return quad_from_json(v).to_string();
  if (v.is_array() && !v.empty() && v.front().is_object() && v.front().contains("d")) return poly_from_json(v).to_string();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_table(const Report& r) {
  const json& b = r.body;
  if (b.contains("lines")) {
    for (const auto& line : b["lines"]) std::cout << line.get<std::string>() << '\n';
    return;
  }
  for (const auto& [key, value] : b.items()) {
    if (key == "expansion") {
      for (const auto& [k2, v2] : value.items()) {
        if (k2 == "steps") {
          for (const auto& st : v2)
            std::cout << "  h=" << st["h"].dump() << "  P=" << render_value(st["P"]) << "  Q=" << render_value(st["Q"]) << "  a=" << render_value(st["a"]) << '\n';
        } else if (k2 != "f") {
          std::cout << k2 << ": " << render_value(v2) << '\n';
        }
      }
    } else if (value.is_array() && (key == "points" || key == "certificates")) {
      std::cout << key << ": " << value.size() << '\n';
      for (const auto& item : value) {
        std::cout << " ";
        for (const auto& [k2, v2] : item.items())
          if (k2 == "point") {
            std::cout << " t=" << render_value(v2["t"]) << " s=" << render_value(v2["s"]);
          } else if (k2 != "model") {
            std::cout << " " << k2 << "=" << render_value(v2);
          }
        std::cout << '\n';
      }
    } else if (value.is_object() && !value.contains("d")) {
      for (const auto& [k2, v2] : value.items())
        if (k2 != "f") std::cout << key << "." << k2 << ": " << render_value(v2) << '\n';
    } else {
      std::cout << key << ": " << render_value(value) << '\n';
    }
  }
}

int emit(const Report& r, const RunConfig& cfg) {
  if (cfg.format == "table") {
    print_table(r);
  } else {
    std::cout << r.body.dump(2) << '\n';
  }
  return r.code;
}

int emit_error(const std::string& command, const error& e, const RunConfig& cfg) {
  std::cerr << "pellfrac " << command << ": " << e.what() << '\n';
  if (cfg.format == "json") {
    json j{{"command", command}, {"status", "error"}, {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    std::cout << j.dump(2) << '\n';
  }
  return exit_error;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic continued fractions of square roots of quartics over quadratic fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read settings from a key=value file");

  RunConfig cfg;
  app.add_option("--d", cfg.d, "Square-free d of the base field Q(sqrt d); 1 means Q");
  app.add_option("--max-steps,--max_steps", cfg.max_steps, "Step limit for expansions")->check(CLI::PositiveNumber);
  app.add_option("--order-bound,--order_bound", cfg.order_bound, "Bound for point-order searches")->check(CLI::PositiveNumber);
  app.add_option("--height,--search-height,--search_height", cfg.height, "Height bound for point searches")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");
  app.add_option("--threads", cfg.threads, "Worker threads (capped by PELLFRAC_THREADS)");

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Expand sqrt(f) or mu*sqrt(f)");
  expand->add_option("--f", ex.f, "Coefficients, highest degree first, e.g. \"1,0,0,0,4\"")->required();
  expand->add_option("--mu", ex.mu, "Scaling factor mu");
  expand->add_flag("--trace", ex.trace, "Include every step (P, Q, a)");

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "Build a family quartic and report its order and period");
  family->add_option("--tag", fa.tag, "Family tag")->required();
  family->add_option("--t", fa.t, "Parameter t")->required();
  family->add_option("--s", fa.s, "Parameter s, or sqrt / -sqrt to solve the curve for s");

  CertifyArgs ca;
  auto* certify = app.add_subcommand("certify", "Odd-period square certificates");
  certify->add_option("--n", ca.n, "Odd period: 13, 15 or 17")->required()->check(CLI::IsMember({13, 15, 17}));
  certify->add_option("--t", ca.t, "Single point: t (otherwise search by --height)");
  certify->add_option("--s", ca.s, "Single point: s, or sqrt / -sqrt");
  certify->add_flag("--inject-alpha-fault", ca.inject_fault, "Use a corrupted alpha table");

  PointsArgs pa;
  auto* points = app.add_subcommand("points", "Bounded-height points on X1(N)");
  points->add_option("--curve", pa.curve, "11, 13, 14, 15, 16, 18, 2,10 or 2,12")->required();
  points->add_flag("--admissible-only", pa.only_admissible, "Drop cusps and inadmissible points");

  OrderArgs oa;
  auto* order = app.add_subcommand("order", "Order of infinity+ - infinity- (quartic) or of (0,0) (Tate curve)");
  order->add_option("--u", oa.u, "Quartic (x^2+u)^2 - 4v(x+w): parameter u");
  order->add_option("--v", oa.v, "Quartic parameter v");
  order->add_option("--w", oa.w, "Quartic parameter w");
  order->add_option("--b", oa.b, "Tate normal form parameter b");
  order->add_option("--c", oa.c, "Tate normal form parameter c");

  SelftestArgs sa;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_flag("--inject-alpha-fault", sa.inject_fault, "Run the certificate check against a corrupted alpha table");
  selftest->add_flag("--timings", sa.timings, "Report elapsed time per criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.d == 0) throw error(errc::invalid_field, "d must be nonzero");
    cfg.d = FieldTag::of(cfg.d).d();
    if (*expand) return emit(cmd_expand(ex, cfg), cfg);
    if (*family) return emit(cmd_family(fa, cfg), cfg);
    if (*certify) return emit(cmd_certify(ca, cfg), cfg);
    if (*points) return emit(cmd_points(pa, cfg), cfg);
    if (*order) return emit(cmd_order(oa, cfg), cfg);
    if (*selftest) return emit(cmd_selftest(sa, cfg), cfg);
  } catch (const error& e) {
    return emit_error(command, e, cfg);
  } catch (const std::exception& e) {
    return emit_error(command, error(errc::structural_violation, e.what()), cfg);
  }
  return exit_error;
}
