#include "stern/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "stern/analysis.hpp"
#include "stern/error.hpp"
#include "stern/parallel.hpp"
#include "stern/serialize.hpp"
#include "stern/speyer.hpp"
#include "stern/sternarrays.hpp"
#include "stern/transfer.hpp"
#include "stern/verify.hpp"

namespace stern {

namespace {

// Exit codes: 0 success, 1 verification found a failing check, 2 error.
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct SpecArgs {
  std::string spec = "stern";
  std::string p;
  std::string q = "1";
  std::string b = "2";
};

void add_spec_options(CLI::App* cmd, SpecArgs& a, bool with_diatomic) {
  cmd->add_option("--spec", a.spec, with_diatomic ? "stern | diatomic | custom" : "stern | custom");
  cmd->add_option("--p", a.p, "kernel p, e.g. \"1,1,1\" or \"(1+x1+x2)^2\"");
  cmd->add_option("--q", a.q, "prefactor q");
  cmd->add_option("--b", a.b, "contraction base(s), e.g. 2 or 2,3");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "expected a comma-separated integer list, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty integer list");
  return out;
}

ProductSpec make_spec(const SpecArgs& a) {
  if (a.spec == "stern" || a.spec == "diatomic") {
    if (!a.p.empty()) throw Error(ErrorKind::InvalidArgument, "--p requires --spec custom");
    return ProductSpec::stern();
  }
  if (a.spec != "custom") throw Error(ErrorKind::InvalidArgument, "unknown spec \"" + a.spec + "\"");
  if (a.p.empty()) throw Error(ErrorKind::InvalidArgument, "--spec custom requires --p");
  MPoly p = parse_poly(a.p);
  MPoly q = parse_poly(a.q, p.vars());
  if (q.vars() > p.vars()) p = parse_poly(a.p, q.vars());
  return ProductSpec(p, q, parse_int_list(a.b));
}

Json pattern_json(const WindowPattern& p) {
  if (p.dims() == 1) return Json(p.cells());
  Json cells = Json::array();
  for (const auto& [offset, e] : p.support()) cells.push_back(Json::array({Json(offset), e}));
  return cells;
}

Json strings(const std::vector<Integer>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

Json strings(const std::vector<Rational>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

Json spec_json(const ProductSpec& spec) {
  return {{"p", to_json(spec.kernel())}, {"q", to_json(spec.prefactor())}, {"b", spec.bases()}};
}

// A single document, either JSON or a CSV table.
struct Output {
  Json doc;
  std::string csv;
};

Output cmd_row(int n, const std::string& kind, const std::string& method) {
  RowKind k;
  if (kind == "triangle") k = RowKind::Triangle;
  else if (kind == "diatomic") k = RowKind::Diatomic;
  else throw Error(ErrorKind::InvalidArgument, "unknown kind \"" + kind + "\"");
  RowMethod m;
  if (method == "recursive") m = RowMethod::Recursive;
  else if (method == "product") m = RowMethod::Product;
  else throw Error(ErrorKind::InvalidArgument, "unknown method \"" + method + "\"");
  const ArrayRow row = stern_row(n, k, m);
  Output o;
  o.doc = {{"schema", 1}, {"n", n}, {"kind", kind}, {"entries", strings(row.entries)}};
  std::ostringstream csv;
  csv << "k,entry\n";
  for (std::size_t i = 0; i < row.entries.size(); ++i) csv << i << "," << to_string(row.entries[i]) << "\n";
  o.csv = csv.str();
  return o;
}

Output cmd_usum(const SpecArgs& a, const std::string& alpha_text, int n_max, const std::string& method) {
  const ProductSpec spec = make_spec(a);
  const WindowPattern alpha = parse_pattern(alpha_text, spec.dims());
  std::vector<Rational> values;
  if (method == "brute") {
    values = a.spec == "diatomic" ? v_brute(alpha, n_max) : u_brute(spec, alpha, n_max);
  } else if (method == "transfer") {
    const bool sym = spec.palindromic() && alpha.dims() == 1;
    const TransferSystem system = build_system(spec, alpha, sym);
    values = a.spec == "diatomic" ? diatomic_sums(system, n_max) : iterate(system, n_max);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown method \"" + method + "\"");
  }
  Output o;
  o.doc = {{"schema", 1}, {"spec", a.spec}, {"alpha", pattern_json(alpha)}, {"values", strings(values)}};
  std::ostringstream csv;
  csv << "n,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) csv << i << "," << to_string(values[i]) << "\n";
  o.csv = csv.str();
  return o;
}

Output cmd_transfer(const SpecArgs& a, const std::string& alpha_text, bool no_symmetry, std::size_t budget) {
  const ProductSpec spec = make_spec(a);
  const WindowPattern alpha = parse_pattern(alpha_text, spec.dims());
  TransferOptions opts;
  opts.closure_budget = budget;
  const bool diatomic = a.spec == "diatomic";
  if (diatomic) opts.initial = CoeffArray::from_row(stern_row(0, RowKind::Diatomic));
  const bool sym = !no_symmetry && alpha.dims() == 1;
  const TransferSystem sys = build_system(spec, alpha, sym, opts);
  if (diatomic)
    for (const auto& p : sys.closure)
      if (p.length() > 2) throw Error(ErrorKind::InvalidArgument, "diatomic transfer needs closure patterns of length <= 2");
  Json closure = Json::array();
  for (const auto& p : sys.closure) closure.push_back(pattern_json(p.display(sym)));
  Json front = Json::object();
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (sys.front_end[i] != 0) front[sys.closure[i].display(sym).to_string()] = to_string(sys.front_end[i]);
  Output o;
  o.doc = {{"schema", 1},       {"spec", spec_json(spec)},          {"alpha", pattern_json(alpha)},
           {"symmetry", sym},   {"closure", closure},               {"matrix", to_json(sys.matrix)},
           {"front_end", front}, {"v0", strings(sys.initial_vector)}};
  // Diatomic rows gain a 1 at each end under the recursion, which the state
  // update has to remove: v(n+1) = A v(n) - 2.
  if (diatomic) o.doc["affine_shift"] = "-2";
  return o;
}

Output cmd_analyze(const SpecArgs& a, const std::string& alpha_text, bool no_symmetry) {
  const ProductSpec spec = make_spec(a);
  const WindowPattern alpha = parse_pattern(alpha_text, spec.dims());
  ReportOptions opts;
  if (no_symmetry) opts.use_symmetry = false;
  if (a.spec == "diatomic" && no_symmetry) throw Error(ErrorKind::InvalidArgument, "diatomic analysis always uses symmetry");
  const RecurrenceReport rep = a.spec == "diatomic" ? diatomic_report(alpha) : recurrence_report(spec, alpha, opts);
  Output o;
  o.doc = {{"schema", 1},
           {"spec", spec_json(spec)},
           {"alpha", pattern_json(alpha)},
           {"symmetry", rep.use_symmetry},
           {"closure_size", rep.closure_size},
           {"mmp", to_json(rep.mmp)},
           {"rmp", to_json(rep.rmp)},
           {"mmp_text", rep.mmp.to_string()},
           {"rmp_text", rep.rmp.to_string()},
           {"n0", rep.n0},
           {"divisibility_ok", rep.divisibility_ok}};
  if (a.spec == "stern" && alpha.dims() == 1) {
    const MmpDecomposition t = decompose_mmp(alpha);
    o.doc["decomposition"] = {{"w", t.w}, {"z", t.z}, {"ok", t.ok}};
  }
  return o;
}

Output cmd_conjectures(int r_max) {
  const ConjectureReport rep = conjecture_check(r_max, thread_count());
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "r,closure_size,deg_rmp,mo_expected,e0,e1,eneg1,counts_ok,semisimple_ok,no_other_multiples,mo_ok,"
         "superfluous_one_ok,pass\n";
  for (const ConjectureRow& r : rep.rows) {
    rows.push_back({{"r", r.r},
                    {"closure_size", r.closure_size},
                    {"rmp", to_json(r.rmp)},
                    {"deg_rmp", r.deg_rmp},
                    {"mo_expected", r.mo_expected},
                    {"e0", r.e0},
                    {"e1", r.e1},
                    {"eneg1", r.eneg1},
                    {"e0_expected", r.r % 2 ? Json(to_string(r.e0_expected)) : Json(nullptr)},
                    {"e1_expected", to_string(r.e1_expected)},
                    {"eneg1_expected", r.r % 2 ? Json(nullptr) : Json(to_string(r.eneg1_expected))},
                    {"counts_ok", r.counts_ok},
                    {"semisimple_ok", r.semisimple_ok},
                    {"no_other_multiples", r.no_other_multiples},
                    {"mo_ok", r.mo_ok},
                    {"superfluous_one_ok", r.superfluous_one_ok},
                    {"pass", r.pass()}});
    csv << r.r << "," << r.closure_size << "," << r.deg_rmp << "," << r.mo_expected << "," << r.e0 << "," << r.e1
        << "," << r.eneg1 << "," << r.counts_ok << "," << r.semisimple_ok << "," << r.no_other_multiples << ","
        << r.mo_ok << "," << r.superfluous_one_ok << "," << r.pass() << "\n";
  }
  Output o;
  o.doc = {{"schema", 1}, {"r_max", r_max}, {"all_pass", rep.all_pass()}, {"mismatches", rep.mismatches}, {"rows", rows}};
  o.csv = csv.str();
  return o;
}

Output cmd_fit(int d, int b, const std::string& alpha_text, const std::string& q) {
  const ExpFit f = exp_fit(d, b, parse_pattern(alpha_text), parse_poly(q).to_univariate());
  Output o;
  o.doc = {{"schema", 1},
           {"d", d},
           {"b", b},
           {"alpha", pattern_json(f.alpha)},
           {"q", to_json(f.prefactor)},
           {"coeffs", strings(f.coeffs)},
           {"exponent", "b^(i*n)"},
           {"values", strings(f.values)},
           {"held_out", kHeldOutValues},
           {"even_indices_vanish", f.even_indices_vanish},
           {"odd_indices_vanish", f.odd_indices_vanish},
           {"predicted_vanishing", f.predicted ? Json(*f.predicted == 'e' ? "even" : "odd") : Json(nullptr)},
           {"matches_prediction", f.matches_prediction}};
  return o;
}

Output cmd_vrur(int r, int order) {
  const VrurResult v = vrur_check(r, order);
  Output o;
  o.doc = {{"schema", 1},
           {"r", r},
           {"order", order},
           {"series_ok", v.series_ok},
           {"prefix_matches_brute", v.prefix_matches_brute},
           {"brute_terms", v.brute_terms},
           {"v_recurrence", to_json(v.v_recurrence)},
           {"expected", to_json(v.expected)},
           {"recurrence_ok", v.recurrence_ok},
           {"u", strings(v.u)},
           {"v", strings(v.v)}};
  return o;
}

Output cmd_speyer(int r) {
  const Matrix b = speyer_matrix(r);
  const Poly m = minpoly(b);
  Output o;
  o.doc = {{"schema", 1}, {"r", r}, {"matrix", to_json(b)}, {"minpoly", to_json(m)},
           {"squarefree", gcd(m, m.derivative()).degree() == 0}};
  o.doc["symmetrizer"] = strings(diagonal_symmetrize(b));
  return o;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json({{"error", {{"kind", kind}, {"message", message}}}}).dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power sums over Stern's triangle and generalized product arrays", "stern"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_file;
  bool csv = false;
  app.add_option("--out", out_file, "write the document to FILE")->expected(1);
  app.add_flag("--csv", csv, "flat CSV table instead of JSON (row, usum, conjectures)");

  int n = 0, n_max = 12, r = 1, r_max = 40, order = 30, d = 1, b = 2;
  std::string kind = "triangle", method = "recursive", alpha = "1", usum_method = "brute", q = "1", profile = "quick";
  bool no_symmetry = false, timings = false;
  std::size_t budget = TransferOptions{}.closure_budget;
  SpecArgs spec_args;

  auto* row = app.add_subcommand("row", "one row of the triangle or diatomic array");
  row->add_option("--n", n)->required();
  row->add_option("--kind", kind, "triangle | diatomic");
  row->add_option("--method", method, "recursive | product");

  auto* usum = app.add_subcommand("usum", "window power sums u_alpha(0..n_max)");
  usum->add_option("--alpha", alpha, "pattern, e.g. 2,1 or 0,0=2;1,0=1")->required();
  usum->add_option("--n-max", n_max);
  usum->add_option("--method", usum_method, "brute | transfer");
  add_spec_options(usum, spec_args, true);

  auto* transfer = app.add_subcommand("transfer", "closure, transfer matrix and initial vector");
  transfer->add_option("--alpha", alpha)->required();
  transfer->add_flag("--no-symmetry", no_symmetry);
  transfer->add_option("--budget", budget, "closure size limit");
  add_spec_options(transfer, spec_args, true);

  auto* analyze = app.add_subcommand("analyze", "matrix and recurrence minimal polynomials");
  analyze->add_option("--alpha", alpha)->required();
  analyze->add_flag("--no-symmetry", no_symmetry);
  add_spec_options(analyze, spec_args, true);

  auto* conj = app.add_subcommand("conjectures", "eigenvalue census of A_r for r <= r_max");
  conj->add_option("--r-max", r_max);

  auto* fit = app.add_subcommand("fit", "exponential-sum fit for p = (1+x+...+x^{b-1})^d");
  fit->add_option("--d", d)->required();
  fit->add_option("--b", b)->required();
  auto* fit_r = fit->add_option("--r", r, "single-site pattern (r)");
  auto* fit_alpha = fit->add_option("--alpha", alpha, "general 1-D pattern");
  fit_r->excludes(fit_alpha);
  fit->add_option("--q", q, "prefactor");

  auto* vrur = app.add_subcommand("vrur", "series identity linking the triangle and the diatomic array");
  vrur->add_option("--r", r)->required();
  vrur->add_option("--order", order);

  auto* speyer = app.add_subcommand("speyer", "the matrix of f -> f(x+y,y) + f(x,x+y) on degree-r forms");
  speyer->add_option("--r", r)->required();

  auto* verify = app.add_subcommand("verify-paper", "run every acceptance check");
  verify->add_option("--profile", profile, "quick | full");
  verify->add_flag("--timings", timings, "include per-check runtimes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "ParseError", e.what());
    return kExitError;
  }

  int status = 0;
  Output o;
  try {
    if (*row) o = cmd_row(n, kind, method);
    else if (*usum) o = cmd_usum(spec_args, alpha, n_max, usum_method);
    else if (*transfer) o = cmd_transfer(spec_args, alpha, no_symmetry, budget);
    else if (*analyze) o = cmd_analyze(spec_args, alpha, no_symmetry);
    else if (*conj) o = cmd_conjectures(r_max);
    else if (*fit) o = cmd_fit(d, b, fit_r->count() ? std::to_string(r) : alpha, q);
    else if (*vrur) o = cmd_vrur(r, order);
    else if (*speyer) o = cmd_speyer(r);
    else if (*verify) {
      if (profile != "quick" && profile != "full") throw Error(ErrorKind::InvalidArgument, "unknown profile \"" + profile + "\"");
      const VerificationReport rep = verify_paper(profile == "full" ? Profile::Full : Profile::Quick, thread_count());
      o.doc = rep.to_json(timings);
      std::ostringstream table;
      table << "id,criterion,status\n";
      for (const Check& c : rep.checks) table << c.id << "," << c.criterion << "," << status_name(c.status) << "\n";
      o.csv = table.str();
      status = rep.ok() ? 0 : kExitFail;
    }
    if (csv && o.csv.empty()) throw Error(ErrorKind::InvalidArgument, "--csv is not available for this command");
  } catch (const Error& e) {
    emit_error(err, kind_name(e.kind()), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what());
    return kExitError;
  }

  const std::string text = csv ? o.csv : o.doc.dump(2) + "\n";
  if (out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!(f << text)) {
      emit_error(err, "IOError", "cannot write " + out_file);
      return kExitError;
    }
  }
  return status;
}

}  // namespace stern
