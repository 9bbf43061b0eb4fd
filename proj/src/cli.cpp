#include "ptc/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptc/bounds.hpp"
#include "ptc/errors.hpp"
#include "ptc/expr.hpp"
#include "ptc/genfun.hpp"
#include "ptc/modelfile.hpp"

namespace ptc {

namespace {

using nlohmann::json;

struct Options {
  std::string model_path;
  int r = 2;
  int k = 1;
  int rmax = 6;
  std::optional<int> max_degree;
  std::vector<std::string> assert_flags;
  std::optional<std::string> keep_list;
  std::string json_path;
};

AssertionSet parse_asserts(const std::vector<std::string>& flags) {
  AssertionSet s;
  for (const std::string& raw : flags) {
    std::size_t eq = raw.find('=');
    if (eq == std::string::npos) {
      s.add(raw, "asserted on the command line");
    } else {
      std::string flag = raw.substr(0, eq);
      if (flag.empty()) throw ParseError("empty assertion flag in '--assert " + raw + "'");
      s.add(flag, raw.substr(eq + 1));
    }
  }
  s.vanishing_degree();  // reject malformed vanishing flags early
  return s;
}

std::vector<std::string> parse_keep(const std::string& list) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : list + ",") {
    if (c == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return names;
}

// Default window: twice the degree sum of the model the command actually
// computes on (fiber generators counted once per copy), capped at 64.
int effective_cutoff(const Options& opt, const FibrationPresentation& f, int copies,
                     std::ostream& err) {
  if (opt.max_degree) return *opt.max_degree;
  long long sum = 0;
  for (int i : f.base_indices()) sum += f.total().generator(i).degree;
  for (int i : f.fiber_indices()) {
    sum += static_cast<long long>(f.total().generator(i).degree) * copies;
  }
  long long v = 2 * sum;
  if (v > 64) {
    err << "note: default degree window capped at 64 (the degree sum suggests " << v
        << "); pass --max-degree to widen\n";
    v = 64;
  }
  if (v < 1) v = 1;
  return static_cast<int>(v);
}

std::shared_ptr<const CdgaPresentation> load_validated(const std::string& path) {
  CdgaPresentation p = load_model_file(path);
  if (p.meta().name.empty()) {
    std::size_t slash = path.find_last_of('/');
    std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = stem.find_last_of('.');
    p.meta().name = dot == std::string::npos ? stem : stem.substr(0, dot);
  }
  p.validate();
  return std::make_shared<const CdgaPresentation>(std::move(p));
}

std::string window_text(const Window& w) {
  std::string s = "through degree " + std::to_string(w.cutoff);
  if (w.complete) {
    s += w.by_declaration ? " (complete by declared vanishing)" : " (complete: structural top)";
  } else {
    s += " (partial window)";
  }
  if (w.truncated) {
    s += "; presentation truncated above " + std::to_string(w.truncation_from - 1);
  }
  return s;
}

json window_json(const Window& w) {
  json j;
  j["cutoff"] = w.cutoff;
  j["complete"] = w.complete;
  j["by_declaration"] = w.by_declaration;
  j["truncated"] = w.truncated;
  if (w.truncated) j["truncation_from"] = w.truncation_from;
  return j;
}

json tcvalue_json(const TcValue& v) {
  json j;
  j["value"] = v.value;
  j["status"] = report_status_str(v.status);
  j["modulo_truncation"] = v.modulo_truncation;
  j["assertions_used"] = v.assertions_used;
  json prov = json::array();
  for (const auto& p : v.provenance) prov.push_back({{"route", p.route}, {"detail", p.detail}});
  j["provenance"] = prov;
  return j;
}

void print_tcvalue(std::ostream& out, const std::string& label, const TcValue& v) {
  out << label << ": " << v.value << " [" << report_status_str(v.status) << "]"
      << (v.modulo_truncation ? " (modulo truncation)" : "") << "\n";
  for (const auto& p : v.provenance) {
    out << "  - " << p.route << ": " << p.detail << "\n";
  }
}

void emit(const Options& opt, const json& j, std::ostream& err) {
  (void)err;
  if (opt.json_path.empty()) return;
  std::ofstream f(opt.json_path);
  if (!f) throw IoError("cannot write '" + opt.json_path + "'");
  f << j.dump(2) << "\n";
}

void cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  auto p = load_validated(opt.model_path);
  FibrationPresentation f(p);
  OddnessProfile prof = oddness_profile(f);
  PureReport pure = pure_check(f);

  json j;
  j["command"] = "validate";
  j["model"] = p->meta().name;
  json gens = json::array();
  for (int i = 0; i < p->generator_count(); ++i) {
    const Generator& g = p->generator(i);
    gens.push_back({{"name", g.name},
                    {"degree", g.degree},
                    {"block", g.block == Block::base ? "base" : "fiber"},
                    {"parity", g.odd() ? "odd" : "even"}});
  }
  j["generators"] = gens;
  json diffs;
  for (int i = 0; i < p->generator_count(); ++i) {
    if (p->differential(i).is_zero()) continue;
    diffs[p->generator(i).name] = print_poly(p->differential(i), p->generators());
  }
  j["differentials"] = diffs.is_null() ? json::object() : diffs;
  json meta;
  if (p->meta().declared_top) meta["declared_top"] = *p->meta().declared_top;
  if (p->meta().truncated_above) meta["truncated_above"] = *p->meta().truncated_above;
  if (p->meta().fiber_dim) meta["fiber_dim"] = *p->meta().fiber_dim;
  if (p->meta().base_dim) meta["base_dim"] = *p->meta().base_dim;
  meta["assertions"] = p->meta().assertions;
  j["meta"] = meta;
  json fib;
  json base_names = json::array();
  for (int i : f.base_indices()) base_names.push_back(p->generator(i).name);
  json fiber_names = json::array();
  for (int i : f.fiber_indices()) fiber_names.push_back(p->generator(i).name);
  json order_names = json::array();
  for (int i : f.nilpotence_order()) order_names.push_back(p->generator(i).name);
  fib["base"] = base_names;
  fib["fiber"] = fiber_names;
  fib["nilpotence_order"] = order_names;
  fib["all_fiber_odd"] = prof.all_fiber_odd;
  fib["pure"] = pure.pure;
  if (!pure.pure) fib["pure_violation"] = pure.detail;
  fib["finite_dimensional"] = p->finite_dimensional();
  if (std::optional<int> top = p->algebra_top()) fib["algebra_top"] = *top;
  j["fibration"] = fib;
  emit(opt, j, err);

  out << "model " << p->meta().name << ": " << p->generator_count()
      << " generators, differential is well-defined (d^2 = 0)\n";
  for (int i = 0; i < p->generator_count(); ++i) {
    const Generator& g = p->generator(i);
    out << "  " << g.name << ": degree " << g.degree << ", "
        << (g.block == Block::base ? "base" : "fiber") << ", " << (g.odd() ? "odd" : "even")
        << "\n";
  }
  for (int i = 0; i < p->generator_count(); ++i) {
    if (p->differential(i).is_zero()) continue;
    out << "  d(" << p->generator(i).name
        << ") = " << print_poly(p->differential(i), p->generators()) << "\n";
  }
  auto names = [&](const std::vector<int>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) s += ", ";
      s += p->generator(idx[static_cast<std::size_t>(i)]).name;
    }
    return s.empty() ? std::string("(none)") : s;
  };
  out << "base: " << names(f.base_indices()) << "\n";
  out << "fiber: " << names(f.fiber_indices()) << "\n";
  out << "nilpotence order: " << names(f.nilpotence_order()) << "\n";
  out << "fiber generators all odd: " << (prof.all_fiber_odd ? "yes" : "no") << "\n";
  out << "pure: " << (pure.pure ? "yes" : "no; " + pure.detail) << "\n";
  if (p->finite_dimensional()) {
    out << "algebra: finite-dimensional, top degree " << *p->algebra_top() << "\n";
  } else {
    out << "algebra: not finite-dimensional at the algebra level\n";
  }
  for (const auto& [flag, justification] : p->meta().assertions) {
    out << "assertion " << flag << ": " << justification << "\n";
  }
}

void cmd_cohomology(const Options& opt, std::ostream& out, std::ostream& err) {
  auto p = load_validated(opt.model_path);
  FibrationPresentation f(p);
  AssertionSet asserts = parse_asserts(opt.assert_flags);
  int cutoff = effective_cutoff(opt, f, 1, err);
  Window w = resolve_window(*p, cutoff, asserts);
  CohomologyCache cache(p);

  json j;
  j["command"] = "cohomology";
  j["model"] = p->meta().name;
  j["window"] = window_json(w);
  json slices = json::array();
  out << "H^*(" << p->meta().name << ") " << window_text(w) << "\n";
  for (int n = 0; n <= w.cutoff; ++n) {
    const CohomologySlice& s = cache.slice(n);
    if (s.dim() == 0) continue;
    json basis = json::array();
    out << "  H^" << n << ": dim " << s.dim() << "  ";
    for (int i = 0; i < s.dim(); ++i) {
      std::string rep = print_poly(s.representative_poly(i), p->generators());
      basis.push_back(rep);
      out << (i ? ", " : "") << "[" << rep << "]";
    }
    out << (w.truncated && n >= w.truncation_from ? "  (modulo truncation)" : "") << "\n";
    slices.push_back({{"degree", n},
                      {"dim", s.dim()},
                      {"basis", basis},
                      {"modulo_truncation", w.truncated && n >= w.truncation_from}});
  }
  j["slices"] = slices;
  emit(opt, j, err);
}

void cmd_zcl(const Options& opt, std::ostream& out, std::ostream& err) {
  auto p = load_validated(opt.model_path);
  FibrationPresentation f(p);
  AssertionSet asserts = parse_asserts(opt.assert_flags);
  int cutoff = effective_cutoff(opt, f, opt.r, err);
  ZclResult z = zcl(f, opt.r, cutoff, asserts);

  json j;
  j["command"] = "zcl";
  j["model"] = p->meta().name;
  j["r"] = opt.r;
  j["window"] = window_json(z.window);
  j["value"] = z.value;
  j["status"] = report_status_str(z.status());
  j["modulo_truncation"] = z.modulo_truncation();
  if (z.witness_degree) j["witness_degree"] = *z.witness_degree;
  emit(opt, j, err);

  out << "zcl_" << opt.r << "(" << p->meta().name << ") = " << z.value << " ["
      << report_status_str(z.status()) << "]"
      << (z.modulo_truncation() ? " (modulo truncation)" : "") << "\n";
  out << "window: " << window_text(z.window) << "\n";
  if (z.witness_degree) {
    out << "top nonzero kernel power first appears in degree " << *z.witness_degree << "\n";
  }
  if (z.status() == ReportStatus::window_limited) {
    out << "the value is a lower bound; widen --max-degree or declare a vanishing degree for "
           "an exact verdict\n";
  }
}

void cmd_kernel_table(const Options& opt, std::ostream& out, std::ostream& err) {
  auto p = load_validated(opt.model_path);
  FibrationPresentation f(p);
  AssertionSet asserts = parse_asserts(opt.assert_flags);
  int cutoff = effective_cutoff(opt, f, opt.r, err);
  KernelTable t = zcl_kernel_table(f, opt.r, cutoff, asserts);

  json j;
  j["command"] = "kernel-table";
  j["model"] = p->meta().name;
  j["r"] = opt.r;
  j["window"] = window_json(t.window);
  json rows = json::array();
  out << "kernel of the diagonal in cohomology for " << p->meta().name << ", r = " << opt.r
      << ", " << window_text(t.window) << "\n";
  for (const KernelTableRow& row : t.rows) {
    json basis = json::array();
    out << "  degree " << row.degree << ": dim " << row.dim
        << (row.modulo_truncation ? " (modulo truncation)" : "") << "\n";
    for (const GradedPoly& b : row.basis) {
      std::string rep = print_poly(b, t.generators);
      basis.push_back(rep);
      out << "    [" << rep << "]\n";
    }
    rows.push_back({{"degree", row.degree},
                    {"dim", row.dim},
                    {"basis", basis},
                    {"modulo_truncation", row.modulo_truncation}});
  }
  j["rows"] = rows;
  emit(opt, j, err);
}

void cmd_htc(const Options& opt, std::ostream& out, std::ostream& err) {
  auto p = load_validated(opt.model_path);
  FibrationPresentation f(p);
  AssertionSet asserts = parse_asserts(opt.assert_flags);
  int cutoff = effective_cutoff(opt, f, opt.r, err);
  HtcResult h = htc(f, opt.r, cutoff, asserts);

  json j;
  j["command"] = "htc";
  j["model"] = p->meta().name;
  j["r"] = opt.r;
  j["window"] = window_json(h.window);
  j["value"] = h.value;
  j["status"] = report_status_str(h.status());
  j["modulo_truncation"] = h.modulo_truncation();
  emit(opt, j, err);

  out << "htc_" << opt.r << "(" << p->meta().name << ") = " << h.value << " ["
      << report_status_str(h.status()) << "]"
      << (h.modulo_truncation() ? " (modulo truncation)" : "") << "\n";
  out << "window: " << window_text(h.window) << "\n";
  if (h.status() == ReportStatus::window_limited) {
    out << "injectivity was only tested inside the window; the value is a lower bound\n";
  }
}

void cmd_htc_witness(const Options& opt, std::ostream& out, std::ostream& err) {
  auto p = load_validated(opt.model_path);
  FibrationPresentation f(p);
  int cutoff = effective_cutoff(opt, f, opt.r, err);
  HtcWitnessResult wres = htc_witness(f, opt.r, opt.k, cutoff);

  json j;
  j["command"] = "htc-witness";
  j["model"] = p->meta().name;
  j["r"] = opt.r;
  j["k"] = opt.k;
  j["window"] = window_json(wres.window);
  j["found"] = wres.found;
  if (wres.found) {
    j["degree"] = wres.degree;
    j["witness"] = print_poly(wres.witness, wres.generators);
    j["certificate"] = wres.certificate;
    j["modulo_truncation"] = wres.modulo_truncation;
    j["implies_tc_at_least"] = opt.k + 1;
  }
  emit(opt, j, err);

  if (!wres.found) {
    out << "no witness for k = " << opt.k << " " << window_text(wres.window)
        << "; this proves nothing either way\n";
    return;
  }
  out << "witness for k = " << opt.k << " at degree " << wres.degree
      << (wres.modulo_truncation ? " (modulo truncation)" : "") << ":\n";
  out << "  [" << print_poly(wres.witness, wres.generators) << "]\n";
  out << "certificate:\n";
  for (const std::string& line : wres.certificate) out << "  - " << line << "\n";
  out << "hence TC_" << opt.r << " >= " << opt.k + 1
      << (wres.modulo_truncation ? " modulo truncation" : "") << "\n";
}

void cmd_tc(const Options& opt, std::ostream& out, std::ostream& err) {
  auto p = load_validated(opt.model_path);
  FibrationPresentation f(p);
  AssertionSet asserts = parse_asserts(opt.assert_flags);
  int cutoff = effective_cutoff(opt, f, opt.r, err);
  std::optional<std::vector<std::string>> keep;
  if (opt.keep_list) keep = parse_keep(*opt.keep_list);
  BoundReport rep = tc_sandwich(f, opt.r, cutoff, asserts, keep);

  json j;
  j["command"] = "tc";
  j["model"] = p->meta().name;
  j["r"] = opt.r;
  j["cutoff"] = rep.cutoff;
  if (rep.lower) j["lower"] = tcvalue_json(*rep.lower);
  if (rep.upper) j["upper"] = tcvalue_json(*rep.upper);
  if (rep.exact) j["exact"] = *rep.exact;
  j["status"] = report_status_str(rep.status);
  j["assertions_used"] = rep.assertions_used;
  j["notes"] = rep.notes;
  if (rep.zcl_detail) {
    json zj;
    zj["value"] = rep.zcl_detail->value;
    zj["status"] = report_status_str(rep.zcl_detail->status());
    if (rep.zcl_detail->witness_degree) zj["witness_degree"] = *rep.zcl_detail->witness_degree;
    j["zcl"] = zj;
  }
  emit(opt, j, err);

  if (rep.exact) {
    out << "TC_" << opt.r << "(" << p->meta().name << ") = " << *rep.exact << " ["
        << report_status_str(rep.status) << "]\n";
  } else if (rep.lower && rep.upper) {
    out << "TC_" << opt.r << "(" << p->meta().name << ") in [" << rep.lower->value << ", "
        << rep.upper->value << "] [" << report_status_str(rep.status) << "]\n";
  } else if (rep.lower) {
    out << "TC_" << opt.r << "(" << p->meta().name << ") >= " << rep.lower->value << " ["
        << report_status_str(rep.status) << "]\n";
  }
  if (rep.lower) print_tcvalue(out, "lower", *rep.lower);
  if (rep.upper) print_tcvalue(out, "upper", *rep.upper);
  if (rep.zcl_detail) {
    out << "zcl_" << opt.r << " = " << rep.zcl_detail->value << " ["
        << report_status_str(rep.zcl_detail->status()) << "]\n";
  }
  if (!rep.assertions_used.empty()) {
    out << "assertions used:";
    for (const auto& a : rep.assertions_used) out << " " << a << ";";
    out << "\n";
  }
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
}

void cmd_genfun(const Options& opt, std::ostream& out, std::ostream& err) {
  auto p = load_validated(opt.model_path);
  FibrationPresentation f(p);
  AssertionSet asserts = parse_asserts(opt.assert_flags);
  int cutoff = effective_cutoff(opt, f, opt.rmax + 1, err);
  std::optional<std::vector<std::string>> keep;
  if (opt.keep_list) keep = parse_keep(*opt.keep_list);
  SeriesReport rep = series(f, opt.rmax, cutoff, asserts, keep);

  json j;
  j["command"] = "genfun";
  j["model"] = p->meta().name;
  j["rmax"] = rep.rmax;
  json coeffs = json::array();
  for (const SeriesCoefficient& c : rep.coefficients) {
    coeffs.push_back({{"index", c.index},
                      {"tc_of", c.tc_of},
                      {"value", c.value},
                      {"status", report_status_str(c.status)},
                      {"route", c.route},
                      {"modulo_truncation", c.modulo_truncation}});
  }
  j["coefficients"] = coeffs;
  json fit;
  fit["found"] = rep.fit.found;
  if (rep.fit.found) {
    fit["numerator"] = rep.fit.numerator;
    fit["p_at_one"] = rep.fit.p_at_one;
    fit["polynomial"] = rep.fit.polynomial;
  } else if (!rep.fit.reason.empty()) {
    fit["reason"] = rep.fit.reason;
  }
  j["fit"] = fit;
  if (rep.cat_fiber) {
    j["cat_fiber"] = *rep.cat_fiber;
    j["cat_status"] = report_status_str(rep.cat_status);
  }
  j["notes"] = rep.notes;
  emit(opt, j, err);

  out << "TC series of " << p->meta().name << " (coefficient of z^r is TC_{r+1})\n";
  for (const SeriesCoefficient& c : rep.coefficients) {
    out << "  z^" << c.index << ": TC_" << c.tc_of << " = " << c.value << " ["
        << report_status_str(c.status) << "] via " << c.route
        << (c.modulo_truncation ? " (modulo truncation)" : "") << "\n";
  }
  if (rep.fit.found) {
    out << "F(z) = P(z)/(1-z)^2 with P(z) = " << rep.fit.polynomial << "\n";
    out << "P(1) = " << rep.fit.p_at_one;
    if (rep.cat_fiber) {
      out << "; fiber cup-length = " << *rep.cat_fiber << " ["
          << report_status_str(rep.cat_status) << "]";
    }
    out << "\n";
  }
  for (const auto& n : rep.notes) {
    // The closed form already has its own line above.
    if (n.rfind("F(z) = ", 0) == 0) continue;
    out << "note: " << n << "\n";
  }
}

void cmd_diffnil(const Options& opt, std::ostream& out, std::ostream& err) {
  auto p = load_validated(opt.model_path);
  FibrationPresentation f(p);
  AssertionSet asserts = parse_asserts(opt.assert_flags);
  int cutoff = effective_cutoff(opt, f, opt.rmax + 1, err);
  DiffNilReport rep = diff_nil_check(f, opt.rmax, cutoff, asserts);

  json j;
  j["command"] = "diffnil";
  j["model"] = p->meta().name;
  j["rmax"] = opt.rmax;
  j["cupl_fiber"] = rep.cupl_fiber;
  j["cupl_status"] = report_status_str(rep.cupl_status);
  json rows = json::array();
  for (const DiffNilRow& row : rep.rows) {
    rows.push_back({{"r", row.r},
                    {"zcl_low", row.zcl_low},
                    {"zcl_high", row.zcl_high},
                    {"holds", row.holds},
                    {"certified", row.certified}});
  }
  j["rows"] = rows;
  j["all_hold"] = rep.all_hold;
  emit(opt, j, err);

  out << "fiber cup-length = " << rep.cupl_fiber << " [" << report_status_str(rep.cupl_status)
      << "]\n";
  for (const DiffNilRow& row : rep.rows) {
    out << "  r = " << row.r << ": zcl_" << row.r + 1 << " - zcl_" << row.r << " = "
        << row.zcl_high << " - " << row.zcl_low << " = " << row.zcl_high - row.zcl_low
        << (row.holds ? " >= " : " < ") << rep.cupl_fiber
        << (row.holds ? "  ok" : "  VIOLATION")
        << (row.certified ? "" : " (window not certified complete)") << "\n";
  }
  out << (rep.all_hold
              ? "the consecutive-difference bound holds on every tested row\n"
              : "violations found; the expected growth pattern fails for this model\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "exact rational models of fibrations and their sequential parametrized invariants"};
  app.require_subcommand(1);
  Options opt;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("model", opt.model_path, "model file")->required();
    sub->add_option("--json", opt.json_path, "also write a JSON report to this path");
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--max-degree", opt.max_degree,
                    "degree window (default: twice the degree sum, capped at 64)");
  };
  auto add_asserts = [&](CLI::App* sub) {
    sub->add_option("--assert", opt.assert_flags,
                    "assert a flag, e.g. fiber_formal=reason or "
                    "cohomology_vanishes_above(14)=reason");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a model file and report its shape");
  add_model(validate);

  CLI::App* cohomology =
      app.add_subcommand("cohomology", "degreewise cohomology of the total algebra");
  add_model(cohomology);
  add_window(cohomology);
  add_asserts(cohomology);

  CLI::App* zclc = app.add_subcommand("zcl", "zero-divisor cup-length of the diagonal kernel");
  add_model(zclc);
  add_window(zclc);
  add_asserts(zclc);
  zclc->add_option("--r", opt.r, "number of fiberwise copies")->check(CLI::PositiveNumber);

  CLI::App* table = app.add_subcommand("kernel-table", "degreewise kernel of the diagonal");
  add_model(table);
  add_window(table);
  add_asserts(table);
  table->add_option("--r", opt.r, "number of fiberwise copies")->check(CLI::PositiveNumber);

  CLI::App* htcc = app.add_subcommand("htc", "least k with injective quotient by the (k+1)-st "
                                             "kernel power");
  add_model(htcc);
  add_window(htcc);
  add_asserts(htcc);
  htcc->add_option("--r", opt.r, "number of fiberwise copies")->check(CLI::PositiveNumber);

  CLI::App* witness = app.add_subcommand("htc-witness", "search a non-coboundary cocycle in the "
                                                        "(k+1)-st kernel power");
  add_model(witness);
  add_window(witness);
  witness->add_option("--r", opt.r, "number of fiberwise copies")->check(CLI::PositiveNumber);
  witness->add_option("--k", opt.k, "kernel power minus one")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* tcc = app.add_subcommand("tc", "sandwich TC_r between lower and upper bounds");
  add_model(tcc);
  add_window(tcc);
  add_asserts(tcc);
  tcc->add_option("--r", opt.r, "number of fiberwise copies")->check(CLI::PositiveNumber);
  tcc->add_option("--keep", opt.keep_list,
                  "comma-separated fiber generators kept by the odd-extension route");

  CLI::App* genfunc = app.add_subcommand("genfun", "TC generating function");
  add_model(genfunc);
  add_window(genfunc);
  add_asserts(genfunc);
  genfunc->add_option("--rmax", opt.rmax, "number of series coefficients")
      ->check(CLI::PositiveNumber);
  genfunc->add_option("--keep", opt.keep_list,
                      "comma-separated fiber generators kept by the odd-extension route");

  CLI::App* diffnil =
      app.add_subcommand("diffnil", "consecutive zcl differences against the fiber cup-length");
  add_model(diffnil);
  add_window(diffnil);
  add_asserts(diffnil);
  diffnil->add_option("--rmax", opt.rmax, "largest r tested")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("ptcalc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (validate->parsed()) cmd_validate(opt, out, err);
    if (cohomology->parsed()) cmd_cohomology(opt, out, err);
    if (zclc->parsed()) cmd_zcl(opt, out, err);
    if (table->parsed()) cmd_kernel_table(opt, out, err);
    if (htcc->parsed()) cmd_htc(opt, out, err);
    if (witness->parsed()) cmd_htc_witness(opt, out, err);
    if (tcc->parsed()) cmd_tc(opt, out, err);
    if (genfunc->parsed()) cmd_genfun(opt, out, err);
    if (diffnil->parsed()) cmd_diffnil(opt, out, err);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ptc
