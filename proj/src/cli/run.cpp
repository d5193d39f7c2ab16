#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "normlab/cli.hpp"
#include "normlab/errors.hpp"
#include "normlab/graded_linear.hpp"
#include "normlab/hilbert_sally.hpp"
#include "normlab/indices.hpp"
#include "normlab/oracle.hpp"

namespace normlab::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "normlab 1.0.0";

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"closure", Command::Closure}, {"normal", Command::Normal},   {"indices", Command::Indices},
      {"hilbert", Command::Hilbert}, {"sally", Command::Sally},     {"clutter", Command::Clutter},
      {"colon-verify", Command::ColonVerify}};
  return table;
}

ordered_json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

ordered_json big_list(const std::vector<BigInt>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

ordered_json vec(const ExponentVector& a) { return ordered_json(a.entries()); }

ordered_json monomial_list(const RingDescriptor& ring, const std::vector<ExponentVector>& gens) {
  ordered_json g = ordered_json::array(), m = ordered_json::array();
  for (const auto& a : gens) {
    g.push_back(vec(a));
    m.push_back(format_monomial(ring, a));
  }
  return {{"generators", g}, {"monomials", m}};
}

ordered_json ideal_json(const MonomialIdeal& I) { return monomial_list(I.ring(), I.generators()); }

ordered_json check_json(const Check& c) {
  return {{"name", c.name},        {"kind", to_string(c.kind)}, {"holds", c.holds}, {"lhs", c.lhs},
          {"relation", c.relation}, {"rhs", c.rhs},              {"note", c.note}};
}

ordered_json checks_json(const std::vector<Check>& checks) {
  ordered_json out = ordered_json::array();
  for (const auto& c : checks) out.push_back(check_json(c));
  return out;
}

void collect_alerts(const std::vector<Check>& checks, ordered_json& alerts) {
  for (const auto& c : checks)
    if (!c.holds && c.kind != Check::Kind::Informational)
      alerts.push_back(c.name + " failed (" + c.lhs + " vs " + c.rhs + ")");
}

ordered_json reduction_json(const RingDescriptor& ring, const GeneralReduction& J) {
  ordered_json forms = ordered_json::array();
  for (const auto& f : J.forms) forms.push_back(format_form(ring, f));
  ordered_json out{{"seed", J.seed},
                   {"seeds_tried", J.seeds_tried},
                   {"uses_ideal_generators", J.uses_ideal_generators},
                   {"forms", forms},
                   {"reduction_number", J.reduction_number}};
  out["colength"] = J.colength ? big(*J.colength) : ordered_json(nullptr);
  out["validation"] = J.validation;
  return out;
}

ordered_json filtration_json(const FiltrationReport& r) {
  ordered_json b = ordered_json::array();
  for (std::size_t i = 1; i < std::max<std::size_t>(r.g.size(), 2); ++i) b.push_back(big(r.b(i)));
  return {{"dimension", r.dimension},
          {"table_length", r.length_table.size() - 1},
          {"length_table", big_list(r.length_table)},
          {"f", big_list(r.f)},
          {"f_text", format_polynomial(r.f)},
          {"e", big_list(r.e)},
          {"g", big_list(r.g)},
          {"g_text", format_polynomial(r.g)},
          {"b", b},
          {"lambda_closure_over_reduction", big(r.lambda_closure_over_reduction)},
          {"checks", checks_json(r.checks)},
          {"e1_inequality", check_json(e1_inequality_report(r))}};
}

void oracle_closures(const MonomialIdeal& I, std::int64_t top, std::int64_t definition_top,
                     ordered_json& report, ordered_json& alerts) {
  const NewtonPolyhedron P = newton_polyhedron(I);
  oracle::DefinitionClosure def(I);
  ordered_json rows = ordered_json::array();
  for (std::int64_t n = 1; n <= top; ++n) {
    const MonomialIdeal fast = closure_of_power(I, P, n);
    const bool scan = oracle::closure_by_facet_scan(I, n) == fast;
    ordered_json row{{"power", n}, {"facet_scan_agrees", scan}};
    if (!scan) alerts.push_back("facet scan disagrees with closure of power " + std::to_string(n));
    if (n <= definition_top) {
      const bool agree = def.closure_of_power(n) == fast;
      row["definition_agrees"] = agree;
      if (!agree) alerts.push_back("definition oracle disagrees with closure of power " + std::to_string(n));
    }
    rows.push_back(row);
  }
  report["oracle"]["closures"] = rows;
}

void oracle_lengths(const MonomialIdeal& I, const FiltrationReport& r, ordered_json& report,
                    ordered_json& alerts) {
  const NewtonPolyhedron P = newton_polyhedron(I);
  bool agree = true;
  for (std::size_t n = 1; n < r.length_table.size(); ++n)
    if (oracle::colength_by_count(closure_of_power(I, P, static_cast<std::int64_t>(n))) != r.length_table[n])
      agree = false;
  report["oracle"]["length_table_by_slices_agrees"] = agree;
  if (!agree) alerts.push_back("slice-count oracle disagrees with the length table");
}

ordered_json run_job(const JobSpec& job, const ParsedInput& in, ordered_json& alerts) {
  const MonomialIdeal& I = in.ideal;
  const RingDescriptor& ring = I.ring();
  ordered_json report;
  report["command"] = to_string(job.command);
  report["ring"] = {{"variables", ring.names()}, {"weights", ring.weights()}};
  report["ideal"] = ideal_json(I);
  report["warnings"] = in.warnings;

  switch (job.command) {
    case Command::Closure: {
      if (!I.is_proper_nonzero()) throw DegenerateIdeal("closure needs a nonzero proper ideal");
      const std::int64_t n = job.power.value_or(1);
      const NewtonPolyhedron P = newton_polyhedron(I);
      ordered_json facets = ordered_json::array();
      for (const auto& f : P.facets())
        facets.push_back({{"normal", big_list(f.normal)}, {"offset", big(f.offset)}});
      const MonomialIdeal closure = closure_of_power(I, P, n);
      report["power"] = n;
      report["newton_polyhedron"] = {{"facets", facets}};
      report["closure"] = ideal_json(closure);
      report["equals_power"] = closure == power(I, n);
      if (job.oracle) oracle_closures(I, n, n, report, alerts);
      break;
    }
    case Command::Normal: {
      if (!I.is_proper_nonzero()) throw DegenerateIdeal("normality needs a nonzero proper ideal");
      const NormalityCertificate cert = is_normal(I);
      report["ell"] = analytic_spread(I);
      report["normal"] = cert.normal;
      report["checked_up_to"] = cert.checked_up_to;
      report["failing_power"] = cert.failing_power ? ordered_json(*cert.failing_power) : ordered_json(nullptr);
      report["witness"] = cert.witness ? vec(*cert.witness) : ordered_json(nullptr);
      report["witness_monomial"] =
          cert.witness ? ordered_json(format_monomial(ring, *cert.witness)) : ordered_json(nullptr);
      if (job.oracle)
        oracle_closures(I, std::max<std::int64_t>(cert.checked_up_to + (cert.normal ? 0 : 1), 1), 2, report,
                        alerts);
      break;
    }
    case Command::Indices: {
      const IndicesReport r = indices_report(I);
      report["s"] = r.s;
      report["s0"] = r.s0;
      report["ell"] = r.ell;
      report["normal"] = r.normal;
      ordered_json fresh = ordered_json::object();
      for (const auto& [level, gens] : r.fresh_generators) fresh[std::to_string(level)] = monomial_list(ring, gens);
      report["fresh_generators"] = fresh;
      report["bound_checks"] = checks_json(r.bound_checks);
      report["notices"] = r.notices;
      if (job.oracle) oracle_closures(I, std::max<std::int64_t>(static_cast<std::int64_t>(r.ell) - 1, 1), 2, report, alerts);
      break;
    }
    case Command::Hilbert: {
      FiltrationOptions opts;
      opts.table_length = job.table_length;
      opts.max_table_length = kMaxTableLength;
      const FiltrationReport r = filtration_report(I, opts);
      report["filtration"] = filtration_json(r);
      collect_alerts(r.checks, alerts);
      if (job.oracle) {
        oracle_lengths(I, r, report, alerts);
        oracle_closures(I, 2, 2, report, alerts);
      }
      break;
    }
    case Command::Sally: {
      FiltrationOptions opts;
      opts.table_length = job.table_length;
      opts.max_table_length = kMaxTableLength;
      const FiltrationReport r = filtration_report(I, opts);
      const GeneratorBoundReport gb = generator_bound_check(I, job.seed, r);
      const std::int64_t nmax = job.power.value_or(3);
      const SallyCrossCheck sc = sally_cross_check(I, r, gb.reduction, nmax);
      report["seed"] = job.seed;
      report["filtration"] = filtration_json(r);
      report["reduction"] = reduction_json(ring, gb.reduction);
      report["sally_module"] = {{"n_max", nmax},
                                {"direct", big_list(sc.direct)},
                                {"predicted", big_list(sc.predicted)},
                                {"agree", sc.agree}};
      report["generator_bound"] = {{"lambda_F1_over_J", big(gb.lambda_F1_over_J)},
                                   {"quotient_lengths", big_list(gb.quotient_lengths)},
                                   {"generator_count", big(gb.generator_count)},
                                   {"checks", checks_json(gb.checks)}};
      collect_alerts(r.checks, alerts);
      collect_alerts(gb.checks, alerts);
      if (!sc.agree) alerts.push_back("Sally module lengths disagree with the h-vector prediction");
      if (job.oracle) oracle_lengths(I, r, report, alerts);
      break;
    }
    case Command::Clutter: {
      if (!in.clutter) throw InputError("the clutter command needs {\"vertices\", \"edges\"} input");
      const Clutter& C = *in.clutter;
      const std::int64_t ell = static_cast<std::int64_t>(analytic_spread(I));
      const std::int64_t nmax = job.power.value_or(std::min<std::int64_t>(ell, 3));
      report["vertices"] = C.vertices();
      report["edges"] = C.edges();
      report["ell"] = ell;
      report["minimal_vertex_covers"] = minimal_vertex_covers(C);
      const SymbolicClosureTable t = compare_symbolic_closure(C, nmax);
      report["q_polyhedron_integral"] = t.q_integral;
      ordered_json rows = ordered_json::array();
      for (const auto& row : t.rows)
        rows.push_back({{"power", row.power},
                        {"equal", row.equal},
                        {"only_symbolic", monomial_list(ring, row.only_symbolic)},
                        {"only_closure", monomial_list(ring, row.only_closure)}});
      report["symbolic_vs_closure"] = rows;
      if (job.oracle) oracle_closures(I, nmax, std::min<std::int64_t>(nmax, 2), report, alerts);
      break;
    }
    case Command::ColonVerify: {
      const std::int64_t n = job.power.value_or(1);
      ColonOptions opts;
      if (is_m_primary(I) && I.is_proper_nonzero()) opts.multiplicity = filtration_report(I).multiplicity();
      const ColonVerdict v = verify_colon_formula(I, n, job.seed, opts);
      report["seed"] = job.seed;
      report["power"] = n;
      report["height"] = v.height;
      report["delta"] = v.delta;
      report["sigma"] = v.sigma;
      report["k"] = v.k;
      report["hypotheses"] = to_string(v.hypotheses);
      report["hypothesis_note"] = v.hypothesis_note;
      report["reduction"] = reduction_json(ring, v.reduction);
      report["reduction_spans_ideal"] = v.reduction_spans_ideal;
      report["max_closure_degree"] = v.max_closure_degree;
      report["degrees_checked_up_to"] = v.degrees_checked_up_to;
      ordered_json dims = ordered_json::array();
      for (const auto& [a, b] : v.slice_dimensions) dims.push_back({a, b});
      report["slice_dimensions"] = dims;
      report["equal"] = v.equal;
      report["mismatch_degree"] = v.mismatch_degree ? ordered_json(*v.mismatch_degree) : ordered_json(nullptr);
      if (!v.equal && v.hypotheses != HypothesisStatus::Unverifiable)
        alerts.push_back("J^n : m^k differs from closure(I^n) in degree " + std::to_string(*v.mismatch_degree));
      if (job.oracle) oracle_closures(I, n, std::min<std::int64_t>(n, 2), report, alerts);
      break;
    }
  }
  return report;
}

// Text rendering ------------------------------------------------------------

std::string scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string joined(const ordered_json& arr, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? sep : "") + scalar(arr[i]);
  return out;
}

std::string ideal_text(const ordered_json& ideal) { return "(" + joined(ideal["monomials"]) + ")"; }

void render_checks(std::ostream& os, const ordered_json& checks) {
  for (const auto& c : checks) {
    os << "  [" << (c["holds"].get<bool>() ? "ok" : "FAILED") << "] " << scalar(c["name"]) << ": "
       << scalar(c["lhs"]) << ' ' << scalar(c["relation"]) << ' ' << scalar(c["rhs"]) << "  ("
       << scalar(c["kind"]);
    if (!c["note"].get<std::string>().empty()) os << "; " << scalar(c["note"]);
    os << ")\n";
  }
}

void render_filtration(std::ostream& os, const ordered_json& f) {
  os << "length table λ(R/closure(I^n)), n = 0.." << scalar(f["table_length"]) << ": "
     << joined(f["length_table"]) << '\n';
  os << "h-polynomial f(t) = " << scalar(f["f_text"]) << '\n';
  os << "Hilbert coefficients e = " << joined(f["e"]) << '\n';
  os << "Sally h-polynomial g(t) = " << scalar(f["g_text"]) << "   (b_1.. = " << joined(f["b"]) << ")\n";
  os << "λ(closure(I)/J) = e_0 - λ(R/closure(I)) = " << scalar(f["lambda_closure_over_reduction"]) << '\n';
  os << "checks:\n";
  render_checks(os, f["checks"]);
  render_checks(os, ordered_json::array({f["e1_inequality"]}));
}

void render_reduction(std::ostream& os, const ordered_json& r) {
  if (r["uses_ideal_generators"].get<bool>())
    os << "reduction J = I (d generators, no draw):\n";
  else
    os << "reduction J (seed " << scalar(r["seed"]) << ", seeds tried " << joined(r["seeds_tried"]) << "):\n";
  for (const auto& f : r["forms"]) os << "  " << scalar(f) << '\n';
  for (const auto& v : r["validation"]) os << "  validated " << scalar(v) << '\n';
}

void render_text(std::ostream& os, const ordered_json& r) {
  const std::string cmd = r["command"];
  os << "ring: " << joined(r["ring"]["variables"]);
  bool weighted = false;
  for (const auto& w : r["ring"]["weights"]) weighted = weighted || w.get<std::int64_t>() != 1;
  if (weighted) os << "  weights " << joined(r["ring"]["weights"]);
  os << "\nideal: " << ideal_text(r["ideal"]) << '\n';
  if (r.contains("seed")) os << "seed: " << scalar(r["seed"]) << '\n';

  if (cmd == "closure") {
    os << "Newton polyhedron facets <normal, a> >= offset:\n";
    for (const auto& f : r["newton_polyhedron"]["facets"])
      os << "  (" << joined(f["normal"]) << ") >= " << scalar(f["offset"]) << '\n';
    os << "closure of I^" << scalar(r["power"]) << ": " << ideal_text(r["closure"]) << '\n';
    os << "equals I^" << scalar(r["power"]) << ": " << (r["equals_power"].get<bool>() ? "yes" : "no") << '\n';
  } else if (cmd == "normal") {
    os << "ℓ(I) = " << scalar(r["ell"]) << '\n';
    os << "normal: " << (r["normal"].get<bool>() ? "true" : "false") << '\n';
    if (!r["witness"].is_null())
      os << "witness: " << scalar(r["witness_monomial"]) << " in closure(I^" << scalar(r["failing_power"])
         << ") but not in I^" << scalar(r["failing_power"]) << '\n';
    else
      os << "closure(I^n) = I^n checked for n <= " << scalar(r["checked_up_to"]) << '\n';
  } else if (cmd == "indices") {
    os << "s = " << scalar(r["s"]) << "\ns0 = " << scalar(r["s0"]) << "\nℓ = " << scalar(r["ell"])
       << "\nnormal: " << (r["normal"].get<bool>() ? "true" : "false") << '\n';
    os << "fresh generators of the normalization:\n";
    for (const auto& [level, gens] : r["fresh_generators"].items())
      os << "  level " << level << ": " << joined(gens["monomials"]) << '\n';
    os << "bounds:\n";
    render_checks(os, r["bound_checks"]);
    for (const auto& n : r["notices"]) os << "note: " << scalar(n) << '\n';
  } else if (cmd == "hilbert") {
    render_filtration(os, r["filtration"]);
  } else if (cmd == "sally") {
    render_filtration(os, r["filtration"]);
    render_reduction(os, r["reduction"]);
    const auto& s = r["sally_module"];
    os << "λ(closure(I^{n+1}) / J^n closure(I)), n = 1.." << scalar(s["n_max"]) << ": direct "
       << joined(s["direct"]) << "; from g: " << joined(s["predicted"]) << " -> "
       << (s["agree"].get<bool>() ? "agree" : "DISAGREE") << '\n';
    const auto& g = r["generator_bound"];
    os << "generator count G = " << scalar(g["generator_count"]) << " (λ(F_1/J) = " << scalar(g["lambda_F1_over_J"])
       << ", λ(F_{k+1}/J F_k) = " << joined(g["quotient_lengths"]) << ")\n";
    render_checks(os, g["checks"]);
  } else if (cmd == "clutter") {
    os << "vertices: " << scalar(r["vertices"]) << "\nedges:";
    for (const auto& e : r["edges"]) os << " {" << joined(e, ",") << '}';
    os << "\nℓ = " << scalar(r["ell"]) << "\nminimal vertex covers:";
    for (const auto& c : r["minimal_vertex_covers"]) os << " {" << joined(c, ",") << '}';
    os << "\nQ(A) integral: " << (r["q_polyhedron_integral"].get<bool>() ? "true" : "false") << '\n';
    for (const auto& row : r["symbolic_vs_closure"]) {
      os << "n = " << scalar(row["power"]) << ": symbolic power "
         << (row["equal"].get<bool>() ? "equals" : "differs from") << " closure(I^n)";
      if (!row["only_symbolic"]["monomials"].empty())
        os << "; only symbolic: " << joined(row["only_symbolic"]["monomials"]);
      if (!row["only_closure"]["monomials"].empty())
        os << "; only closure: " << joined(row["only_closure"]["monomials"]);
      os << '\n';
    }
  } else if (cmd == "colon-verify") {
    os << "n = " << scalar(r["power"]) << ", height g = " << scalar(r["height"]) << ", δ = " << scalar(r["delta"])
       << ", σ = " << scalar(r["sigma"]) << ", k = gδ - δ - σ + 1 = " << scalar(r["k"]) << '\n';
    os << scalar(r["hypotheses"]) << ": " << scalar(r["hypothesis_note"]) << '\n';
    render_reduction(os, r["reduction"]);
    if (r["reduction_spans_ideal"].get<bool>()) os << "J spans I in degree δ, so J^n = I^n\n";
    os << "slice dimensions (J^n : m^k, closure), e = 0.." << scalar(r["degrees_checked_up_to"]) << ":";
    for (const auto& p : r["slice_dimensions"]) os << " (" << joined(p, ",") << ')';
    os << "\nverdict: " << (r["equal"].get<bool>() ? "equal" : "NOT equal");
    if (!r["mismatch_degree"].is_null()) os << " (first mismatch in degree " << scalar(r["mismatch_degree"]) << ')';
    os << ", degrees checked <= " << scalar(r["degrees_checked_up_to"]) << '\n';
  }
  if (r.contains("oracle")) os << "oracle: " << r["oracle"].dump() << '\n';
  if (r.contains("alerts") && !r["alerts"].empty()) {
    os << "FALSIFICATION ALERTS:\n";
    for (const auto& a : r["alerts"]) os << "  " << scalar(a) << '\n';
  }
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [name, cmd] : command_table())
    if (cmd == c) return name;
  return "?";
}

Command parse_command(const std::string& name) {
  auto it = command_table().find(name);
  if (it == command_table().end()) throw InputError("unknown command '" + name + "'");
  return it->second;
}

void validate(const JobSpec& job) {
  if (job.input.empty()) throw InputError("an input file is required (-i)");
  if (job.power && (*job.power < 1 || *job.power > kMaxPower))
    throw InputError("power must lie in 1.." + std::to_string(kMaxPower));
  if (job.table_length && (*job.table_length < 2 || *job.table_length > kMaxTableLength))
    throw InputError("table length must lie in 2.." + std::to_string(kMaxTableLength));
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    validate(job);
    const ParsedInput in = parse_input_file(job.input);
    for (const auto& w : in.warnings) err << "warning: " << w << '\n';
    ordered_json alerts = ordered_json::array();
    ordered_json report = run_job(job, in, alerts);
    report["alerts"] = alerts;
    if (job.json) {
      out << report.dump(2) << '\n';
    } else {
      if (job.banner) out << kVersion << '\n';
      render_text(out, report);
    }
    if (!alerts.empty()) {
      err << "falsification alert: " << alerts.size() << " guaranteed propert"
          << (alerts.size() == 1 ? "y" : "ies") << " failed\n";
      return 2;
    }
    return 0;
  } catch (const FalsificationAlert& e) {
    err << "falsification alert: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral closures, normalization indices and Hilbert invariants of monomial ideals", "normlab"};
  JobSpec job;
  std::string command;
  std::int64_t power = 0, table_length = 0;
  app.add_option("command", command, "closure | normal | indices | hilbert | sally | clutter | colon-verify")
      ->required();
  app.add_option("-i,--input", job.input, "JSON file describing an ideal or a clutter")->required();
  auto* n_opt = app.add_option("-n,--power", power, "power n (1..10)");
  auto* N_opt = app.add_option("-N,--table-length", table_length, "length table size N (2..25)");
  app.add_option("--seed", job.seed, "seed for general reductions")->default_val(kDefaultSeed);
  app.add_flag("--json", job.json, "emit a JSON report");
  app.add_flag("--oracle", job.oracle, "cross-check against brute-force oracles");
  bool no_banner = false;
  app.add_flag("--no-banner", no_banner, "omit the version line");
  app.add_flag_callback("--version", [&] { throw CLI::CallForVersion(kVersion, 0); }, "print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  try {
    job.command = parse_command(command);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (*n_opt) job.power = power;
  if (*N_opt) job.table_length = table_length;
  job.banner = !no_banner;
  return run(job, out, err);
}

}  // namespace normlab::cli
