#include "qm/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qm/classical.hpp"
#include "qm/coevent.hpp"
#include "qm/errors.hpp"
#include "qm/extremal.hpp"
#include "qm/golden_checks.hpp"
#include "qm/json_io.hpp"
#include "qm/lebesgue2.hpp"
#include "qm/qintegral.hpp"
#include "qm/transfer.hpp"

namespace qm::cli {
namespace {

using json_io::json;

struct Options {
  std::uint64_t seed = 0;
  bool json_only = false;
  int grid = 2048;
  double tolerance = 1e-6;

  std::string measure_path;
  std::string coevent_path;
  std::string event_text;
  std::string f_text;
  std::string logic = "pure";
  std::string method;
  std::string kind = "power";
  int power_n = 1;
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  std::string coeffs;
  int n = 0;
  bool count_only = false;
};

std::string fmt(const Rational& r) { return format_rational(r); }

json event_values(const SignedQMeasure& m) {
  json values = json::object();
  for (const Event e : enumerate_events(m.space(), true)) values[format_event(e)] = fmt(m.evaluate(e));
  return values;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto m = json_io::measure_from_json(json_io::load_file(o.measure_path));
  const auto flag = is_q_measure(m);
  json doc{{"n", m.space().size()}, {"is_q_measure", flag.is_q_measure}};
  doc["witness"] = flag.witness ? json(format_event(*flag.witness)) : json(nullptr);
  if (flag.witness) doc["witness_value"] = fmt(flag.witness_value);
  json interference = json::object();
  for (int i = 0; i < m.space().size(); ++i) {
    for (int j = i + 1; j < m.space().size(); ++j) interference[format_event(Event::pair(i, j))] = fmt(m.interference(i, j));
  }
  doc["interference"] = interference;
  if (!o.event_text.empty()) {
    const Event e = parse_event(o.event_text, m.space());
    doc["event"] = format_event(e);
    doc["value"] = fmt(m.evaluate(e));
  } else if (m.space().size() <= 12) {
    doc["values"] = event_values(m);
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_integrate(const Options& o, std::ostream& out) {
  const auto m = json_io::measure_from_json(json_io::load_file(o.measure_path));
  const auto f = parse_outcome_function(o.f_text, m.space());
  json doc = json::object();
  if (!o.event_text.empty()) {
    const Event e = parse_event(o.event_text, m.space());
    doc["event"] = format_event(e);
    doc["value"] = fmt(q_integral_over_event(f, m, e));
  } else if (std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return sgn(v) >= 0; })) {
    const Rational layer = q_integral(f, m);
    const Rational min_form = q_integral_min_form(f, m);
    doc["layer_cake"] = fmt(layer);
    doc["min_form"] = fmt(min_form);
    doc["value"] = fmt(layer);
  } else {
    doc["value"] = fmt(q_integral_signed(f, m));
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("not a number: '" + item + "'");
    }
  }
  return out;
}

int cmd_leb2(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<leb2::ClosedFormKind> closed_kind;
  leb2::Integrand f;
  if (o.kind == "power") {
    closed_kind = leb2::ClosedFormKind::power;
    f = leb2::power(o.power_n);
  } else if (o.kind == "exp") {
    closed_kind = leb2::ClosedFormKind::exp;
    f = leb2::exponential();
  } else if (o.kind == "inverse_power") {
    closed_kind = leb2::ClosedFormKind::inverse_power;
    f = leb2::inverse_power(o.power_n);
  } else if (o.kind == "constant") {
    f = leb2::constant(o.c);
  } else if (o.kind == "abs") {
    f = leb2::abs_shift(o.c);
  } else if (o.kind == "poly") {
    f = leb2::polynomial(parse_doubles(o.coeffs));
  } else {
    throw InputError("unknown integrand kind '" + o.kind + "'");
  }
  const std::string method = o.method.empty() ? "general" : o.method;
  const leb2::QuadratureConfig cfg{o.grid};
  json doc{{"kind", o.kind}, {"method", method}, {"a", o.a}, {"b", o.b}};
  double value = 0.0;
  if (method == "closed") {
    if (!closed_kind) throw InputError("no closed form for kind '" + o.kind + "'");
    value = leb2::closed_form(*closed_kind, o.power_n, o.a, o.b);
  } else if (method == "monotone") {
    const auto r = leb2::integrate_monotone(f, leb2::Interval::unit(o.a, o.b), cfg);
    value = r.value;
    doc["tag_violated"] = r.tag_violated;
    if (r.tag_violated && !o.json_only) err << "warning: integrand is not monotone as tagged on this interval\n";
    doc["grid"] = o.grid;
  } else if (method == "general") {
    value = leb2::integrate_general(f, leb2::Interval::unit(o.a, o.b), cfg);
    doc["grid"] = o.grid;
  } else {
    throw InputError("unknown method '" + method + "' (closed, monotone, general)");
  }
  doc["value"] = value;
  if (closed_kind && method != "closed") {
    const double reference = leb2::closed_form(*closed_kind, o.power_n, o.a, o.b);
    doc["reference"] = reference;
    doc["within_tolerance"] = std::abs(value - reference) <= o.tolerance * std::max(1.0, std::abs(reference));
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

json class_json(const CoeventClass& k) {
  return {{"zero", k.zero},         {"unital", k.unital},       {"additive", k.additive},
          {"multiplicative", k.multiplicative}, {"quadratic", k.quadratic}, {"homomorphism", k.homomorphism}};
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto phi = json_io::coevent_from_json(json_io::load_file(o.coevent_path));
  const auto k = classify(phi);
  json doc{{"n", phi.space().size()}, {"monomials", json_io::monomials_to_json(phi)}, {"degree", phi.degree()},
           {"class", class_json(k)}};
  if (phi.space().size() <= 8) doc["definition_agrees"] = classify_by_definition(phi) == k;
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_center(const Options& o, std::ostream& out) {
  const auto phi = json_io::coevent_from_json(json_io::load_file(o.coevent_path));
  const auto center = phi_center(phi);
  json subs = json::array();
  if (!phi.is_zero()) {
    for (const auto& s : center_subdomains(phi)) subs.push_back(json_io::subalgebra_to_json(s));
  }
  json doc{{"center", json_io::subalgebra_to_json(center)},
           {"atoms", json_io::events_to_json(center.atoms())},
           {"subdomains", subs}};
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_domains(const Options& o, std::ostream& out) {
  const auto phi = json_io::coevent_from_json(json_io::load_file(o.coevent_path));
  json list = json::array();
  for (const auto& s : classical_domains(phi)) list.push_back(json_io::subalgebra_to_json(s));
  out << json{{"domains", list}}.dump(2) << '\n';
  return kOk;
}

int cmd_pure(const Options& o, std::ostream& out) {
  const auto pure = enumerate_pure(OutcomeSpace(o.n));
  if (o.count_only) {
    out << pure.size() << '\n';
    return kOk;
  }
  json list = json::array();
  for (const auto& p : pure) {
    list.push_back({{"measure", json_io::measure_to_json(p.measure)}, {"monomials", json_io::monomials_to_json(p.coevent)}});
  }
  out << json{{"count", pure.size()}, {"pure", list}}.dump(2) << '\n';
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto m = json_io::measure_from_json(json_io::load_file(o.measure_path));
  out << json_io::decomposition_to_json(decompose(m)).dump(2) << '\n';
  return kOk;
}

int cmd_transfer(const Options& o, std::ostream& out) {
  const auto m = json_io::measure_from_json(json_io::load_file(o.measure_path));
  std::vector<Coevent> logic;
  if (!o.logic.empty() && o.logic.front() == '@') {
    logic = json_io::logic_from_json(json_io::load_file(o.logic.substr(1)), m.space());
  } else {
    logic = LogicSelection::named(parse_logic_selection_kind(o.logic)).materialize(m.space());
  }
  const std::string method = o.method.empty() ? "lp" : o.method;
  TransferResult r;
  if (method == "lp") {
    r = transfer_feasible(m, logic);
  } else if (method == "constructive") {
    r.feasible = true;
    r.nu = transfer_constructive(m, logic);
  } else {
    throw InputError("unknown method '" + method + "' (lp, constructive)");
  }
  out << json_io::transfer_to_json(r).dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = run_golden_checks(o.seed);
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (o.json_only) {
      list.push_back({{"check", r.label}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      out << (r.pass ? "PASS  " : "FAIL  ") << r.label;
      if (!r.pass && !r.detail.empty()) out << "  (" << r.detail << ")";
      out << '\n';
    }
  }
  if (o.json_only) out << list.dump(2) << '\n';
  return all ? kOk : kDefect;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quantum measures, q-integrals, coevents and transfers"};
  app.name("qm");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for randomized checks")->default_val(0);
  app.add_flag("--json", o.json_only, "Machine output only");
  app.add_option("--grid", o.grid, "Quadrature panels per axis")->default_val(2048);
  app.add_option("--tolerance", o.tolerance, "Relative tolerance for leb2 reference checks")->default_val(1e-6);

  auto* eval = app.add_subcommand("eval", "Evaluate a measure and test nonnegativity");
  eval->add_option("--measure", o.measure_path, "Measure JSON file")->required();
  eval->add_option("--event", o.event_text, "Event such as 1,3");

  auto* integrate = app.add_subcommand("integrate", "q-integral of a function on outcomes");
  integrate->add_option("--measure", o.measure_path, "Measure JSON file")->required();
  integrate->add_option("--f", o.f_text, "Comma-separated rational values")->required();
  integrate->add_option("--event", o.event_text, "Integrate over this event");

  auto* leb = app.add_subcommand("leb2", "Squared-length q-integral on an interval");
  leb->add_option("--kind", o.kind, "power, exp, inverse_power, constant, abs, poly")->default_val("power");
  leb->add_option("--power-n", o.power_n, "Exponent for power and inverse_power")->default_val(1);
  leb->add_option("--a", o.a, "Left endpoint")->default_val(0.0);
  leb->add_option("--b", o.b, "Right endpoint")->default_val(1.0);
  leb->add_option("--c", o.c, "Constant, or shift for abs")->default_val(0.0);
  leb->add_option("--coeffs", o.coeffs, "Polynomial coefficients from degree 0 up");
  leb->add_option("--method", o.method, "closed, monotone or general");

  auto* cls = app.add_subcommand("coevent-classify", "Classify a coevent");
  cls->add_option("--coevent", o.coevent_path, "Coevent JSON file")->required();

  auto* center = app.add_subcommand("center", "Center of a coevent and its generated subdomains");
  center->add_option("--coevent", o.coevent_path, "Coevent JSON file")->required();

  auto* domains = app.add_subcommand("domains", "Classical domains of a coevent");
  domains->add_option("--coevent", o.coevent_path, "Coevent JSON file")->required();

  auto* pure = app.add_subcommand("pure", "Enumerate pure q-measures");
  pure->add_option("--n", o.n, "Number of outcomes")->required();
  pure->add_flag("--count", o.count_only, "Print only the count");

  auto* dec = app.add_subcommand("decompose", "Decomposition into pure measures");
  dec->add_option("--measure", o.measure_path, "Measure JSON file")->required();

  auto* tr = app.add_subcommand("transfer", "Transfer a q-measure onto a logic");
  tr->add_option("--measure", o.measure_path, "Measure JSON file")->required();
  tr->add_option("--logic", o.logic, "pure, additive, multiplicative, quadratic, full or @file.json")->default_val("pure");
  tr->add_option("--method", o.method, "lp or constructive");

  auto* verify = app.add_subcommand("verify-paper", "Rerun the reference checks");

  std::vector<const char*> argv{"qm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*integrate) return cmd_integrate(o, out);
    if (*leb) return cmd_leb2(o, out, err);
    if (*cls) return cmd_classify(o, out);
    if (*center) return cmd_center(o, out);
    if (*domains) return cmd_domains(o, out);
    if (*pure) return cmd_pure(o, out);
    if (*dec) return cmd_decompose(o, out);
    if (*tr) return cmd_transfer(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DefectError& e) {
    err << "internal error: " << e.what() << '\n';
    return kDefect;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kDefect;
  }
  err << "error: no subcommand\n" << app.help();
  return kInputError;
}

}  // namespace qm::cli
