#include "hypal/cli.hpp"

#include "hypal/sampling.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <ostream>
#include <sstream>

namespace hypal::cli {

namespace {

// --- report builders -----------------------------------------------------------

Json witness_json(const ConvolutionTable& t, const Witness& w) {
  Json j = Json::object();
  Json idx = Json::array();
  for (Index i : w.indices) idx.push_back(t.symbol(i));
  j["indices"] = std::move(idx);
  j["lhs"] = to_string(w.lhs);
  j["rhs"] = to_string(w.rhs);
  j["relation"] = w.relation;
  j["detail"] = w.detail;
  return j;
}

Json validation_json(const ConvolutionTable& t, const ValidationReport& r) {
  Json j = Json::object();
  j["command"] = "validate";
  j["name"] = t.name();
  j["valid"] = r.valid();
  Json axioms = Json::array();
  for (const auto& c : r.checks) {
    Json a = Json::object();
    a["id"] = axiom_id(c.axiom);
    a["name"] = axiom_name(c.axiom);
    a["status"] = c.automatic ? "automatic (finite discrete)" : c.passed ? "pass" : "fail";
    if (c.witness) a["witness"] = witness_json(t, *c.witness);
    axioms.push_back(std::move(a));
  }
  j["axioms"] = std::move(axioms);
  return j;
}

void render_validation(std::ostream& out, const ConvolutionTable& t, const ValidationReport& r) {
  out << t.name() << ": " << (r.valid() ? "valid hypergroup" : "NOT a hypergroup") << "\n";
  for (const auto& c : r.checks) {
    out << "  (" << axiom_id(c.axiom) << ") " << axiom_name(c.axiom) << ": "
        << (c.automatic ? "automatic (finite discrete)" : c.passed ? "pass" : "FAIL") << "\n";
    if (c.witness) {
      out << "      at (";
      for (std::size_t i = 0; i < c.witness->indices.size(); ++i)
        out << (i ? ", " : "") << t.symbol(c.witness->indices[i]);
      out << "): " << c.witness->detail << "; lhs = " << to_string(c.witness->lhs)
          << ", required " << c.witness->relation << " " << to_string(c.witness->rhs) << "\n";
    }
  }
}

Json haar_json(const ConvolutionTable& t, const HaarResult& h) {
  Json j = Json::object();
  j["method"] = to_string(h.method);
  j["normalization"] = to_string(h.normalization);
  if (h.weights) j["weights"] = dense_json(t, h.weights->weights);
  Json numeric = Json::object();
  for (Index i = 0; i < h.numeric.size(); ++i) numeric[t.symbol(i)] = decimal_string(h.numeric(i));
  j["numeric"] = std::move(numeric);
  if (h.functional_scale) j["functional_scale"] = to_string(*h.functional_scale);
  j["iterations"] = h.iterations;
  j["residual"] = decimal_string(h.residual);
  j["fell_back"] = h.fell_back;
  return j;
}

void render_weights(std::ostream& out, const ConvolutionTable& t, const HaarResult& h) {
  for (Index i = 0; i < t.size(); ++i) {
    out << "  " << t.symbol(i) << ": ";
    if (h.weights)
      out << to_string((*h.weights)[i]);
    else
      out << decimal_string(h.numeric(i));
    out << "\n";
  }
}

Json ppt_json(const ConvolutionTable& t, const FunctionOnH& f, const PptVerdict& v) {
  Json j = Json::object();
  j["f"] = dense_json(t, f.values);
  j["holds"] = v.holds;
  j["optimum"] = to_string(v.optimum);
  if (v.certificate) {
    Json c = Json::object();
    c["mu"] = sparse_json(t, v.certificate->mu.weights);
    c["nu"] = sparse_json(t, v.certificate->nu.weights);
    c["mu_norm"] = to_string(v.certificate->mu.total_variation());
    c["nu_norm"] = to_string(v.certificate->nu.total_variation());
    j["certificate"] = std::move(c);
  }
  return j;
}

std::string sparse_text(const ConvolutionTable& t, const RVector& v) {
  std::ostringstream s;
  bool first = true;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) {
      s << (first ? "" : ", ") << t.symbol(i) << ": " << to_string(v(i));
      first = false;
    }
  return first ? "0" : s.str();
}

Json mean_json(const ConvolutionTable& t, const MeanResult& m, const MeanCheck* check) {
  Json j = Json::object();
  j["exists"] = m.mean.has_value();
  if (m.mean) j["weights"] = dense_json(t, m.mean->weights.weights);
  if (m.farkas) {
    Json y = Json::array();
    for (Index i = 0; i < m.farkas->size(); ++i) y.push_back(to_string((*m.farkas)(i)));
    j["farkas"] = std::move(y);
  }
  if (check) {
    j["verified"] = check->invariant;
    j["worst_residual"] = to_string(check->worst_exact);
  }
  return j;
}

Json report_json(const ConvolutionTable& t, const EquivalenceReport& r, const MeanCheck* mean_check) {
  Json j = Json::object();
  j["command"] = "report";
  j["name"] = t.name();
  j["mean"] = mean_json(t, r.mean, mean_check);
  if (r.haar)
    j["haar"] = haar_json(t, *r.haar);
  else
    j["haar_error"] = r.haar_error;
  Json tested = Json::array();
  for (const auto& f : r.tested) {
    Json e = ppt_json(t, f.f, f.verdict);
    e["label"] = f.label;
    tested.push_back(std::move(e));
  }
  j["tested"] = std::move(tested);
  Json cond = Json::object();
  cond["haar_exists"] = r.haar_exists();
  cond["ppt_all_tested"] = r.ppt_for_all();
  cond["ppt_some"] = r.ppt_for_some();
  j["conditions"] = std::move(cond);
  j["invariant_mean_exists"] = r.mean_exists();
  j["consistent"] = r.consistent();
  return j;
}

// --- command plumbing ------------------------------------------------------------

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

// Validates unless relaxed; on failure prints the validation report and
// returns false.
bool require_valid(const Context& ctx, const ConvolutionTable& t) {
  Validation v = validate_table(t);
  if (v.report.valid()) return true;
  if (ctx.json)
    ctx.emit(validation_json(t, v.report));
  else
    render_validation(ctx.out, t, v.report);
  ctx.err << t.name() << ": table is not a hypergroup (use --relaxed where supported)\n";
  return false;
}

FunctionOnH indicator_of(const ConvolutionTable& t, const std::string& symbol) {
  return FunctionOnH::indicator(t.size(), t.index_of(symbol));
}

int cmd_validate(const Context& ctx, const std::string& file) {
  ConvolutionTable t = read_document(file);
  Validation v = validate_table(t);
  if (ctx.json)
    ctx.emit(validation_json(t, v.report));
  else
    render_validation(ctx.out, t, v.report);
  return v.report.valid() ? kSuccess : kPropertyFails;
}

int cmd_haar(const Context& ctx, const std::string& file, const std::string& method_name, double tol, long max_iter,
             const std::string& f_symbol) {
  ConvolutionTable t = read_document(file);
  HaarMethod method = parse_haar_method(method_name);
  if (!require_valid(ctx, t)) return kPropertyFails;
  FunctionOnH f = f_symbol.empty() ? FunctionOnH::constant(t.size(), Rational(1)) : indicator_of(t, f_symbol);
  HaarOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  HaarResult h;
  try {
    h = fixed_point_haar(t, f, method, opts);
  } catch (const ComputationError& e) {
    ctx.err << t.name() << ": " << e.what() << "\n";
    return kPropertyFails;
  }
  if (ctx.json) {
    Json j = haar_json(t, h);
    j["command"] = "haar";
    j["name"] = t.name();
    ctx.emit(j);
  } else {
    ctx.out << t.name() << ": left Haar measure (" << to_string(h.method) << ", " << to_string(h.normalization)
            << ")\n";
    render_weights(ctx.out, t, h);
    if (h.method == HaarMethod::Cesaro)
      ctx.out << "  iterations: " << h.iterations << ", residual: " << decimal_string(h.residual)
              << (h.fell_back ? " (did not converge; exact nullspace solution shown)" : "") << "\n";
  }
  return kSuccess;
}

int cmd_ppt(const Context& ctx, const std::string& file, const std::string& f_symbol, const std::string& f_file,
            bool relaxed) {
  ConvolutionTable t = read_document(file);
  if (!relaxed && !require_valid(ctx, t)) return kPropertyFails;
  FunctionOnH f = f_file.empty() ? indicator_of(t, f_symbol) : read_function(t, f_file);
  PptVerdict v = ppt_check(t, f);
  if (ctx.json) {
    Json full = Json::object();
    full["command"] = "ppt";
    full["name"] = t.name();
    full["relaxed"] = relaxed;
    const Json body = ppt_json(t, f, v);
    for (const auto& [k, val] : body.items()) full[k] = val;
    ctx.emit(full);
  } else {
    ctx.out << t.name() << ": positivity of translations of f = (" << sparse_text(t, f.values) << ") "
            << (v.holds ? "holds" : "FAILS") << "\n";
    if (v.certificate)
      ctx.out << "  certificate: mu = (" << sparse_text(t, v.certificate->mu.weights) << "), nu = ("
              << sparse_text(t, v.certificate->nu.weights) << ")\n"
              << "  mu*f <= nu*f pointwise, ||mu|| = " << to_string(v.certificate->mu.total_variation())
              << " > ||nu|| = " << to_string(v.certificate->nu.total_variation()) << "\n";
  }
  return v.holds ? kSuccess : kPropertyFails;
}

int cmd_gamma(const Context& ctx, const std::string& file, const std::string& f_symbol, bool relaxed) {
  ConvolutionTable t = read_document(file);
  if (!relaxed && !require_valid(ctx, t)) return kPropertyFails;
  FunctionOnH f = indicator_of(t, f_symbol);
  GammaReport g = gamma_well_defined(t, f);
  KFeasibility k = k_feasible(build_K(t, f));
  if (ctx.json) {
    Json j = Json::object();
    j["command"] = "gamma";
    j["name"] = t.name();
    j["f"] = dense_json(t, f.values);
    j["translate_rank"] = g.translate_rank;
    Json kernel = Json::array();
    for (std::size_t i = 0; i < g.kernel_basis.size(); ++i)
      kernel.push_back(Json{{"rho", dense_json(t, g.kernel_basis[i].weights)},
                            {"mass", to_string(g.kernel_masses[i])}});
    j["kernel"] = std::move(kernel);
    j["well_defined"] = g.well_defined;
    if (k.point) {
      j["extension"] = dense_json(t, k.point->weights);
      j["gamma_f"] = to_string(integrate(*k.point, f));
    } else {
      j["extension"] = nullptr;
    }
    ctx.emit(j);
  } else {
    ctx.out << t.name() << ": Gamma_f for f = (" << sparse_text(t, f.values) << ")\n"
            << "  rank of translates: " << g.translate_rank << ", kernel dimension: " << g.kernel_basis.size()
            << "\n  well defined: " << (g.well_defined ? "yes" : "NO") << "\n";
    for (std::size_t i = 0; i < g.kernel_basis.size(); ++i)
      ctx.out << "    kernel vector (" << sparse_text(t, g.kernel_basis[i].weights)
              << ") has mass " << to_string(g.kernel_masses[i]) << "\n";
    if (k.point)
      ctx.out << "  positive extension (point of K): " << sparse_text(t, k.point->weights) << "\n";
    else
      ctx.out << "  K is empty: no positive extension\n";
  }
  return g.well_defined && k.point ? kSuccess : kPropertyFails;
}

int cmd_mean(const Context& ctx, const std::string& file, bool relaxed) {
  ConvolutionTable t = read_document(file);
  if (!relaxed && !require_valid(ctx, t)) return kPropertyFails;
  MeanResult m = invariant_mean(t);
  std::optional<MeanCheck> check;
  if (m.mean) check = verify_mean(t, *m.mean, 20, sample_seed_from_env());
  if (ctx.json) {
    Json j = mean_json(t, m, check ? &*check : nullptr);
    Json full = Json::object();
    full["command"] = "mean";
    full["name"] = t.name();
    for (auto& [k, v] : j.items()) full[k] = v;
    ctx.emit(full);
  } else {
    if (m.mean) {
      ctx.out << t.name() << ": left invariant mean\n";
      for (Index i = 0; i < t.size(); ++i)
        ctx.out << "  " << t.symbol(i) << ": " << to_string(m.mean->weights[i]) << "\n";
      ctx.out << "  verified on indicators and 20 random functions: " << (check->invariant ? "yes" : "NO") << "\n";
    } else {
      ctx.out << t.name() << ": no left invariant mean exists\n";
    }
  }
  return m.mean && check->invariant ? kSuccess : kPropertyFails;
}

// Equivalence report for one file; returns (exit code, json or empty on input error).
std::pair<int, Json> report_one(const std::string& file, std::string& diagnostics) {
  ConvolutionTable t = read_document(file);
  Validation v = validate_table(t);
  if (!v.report.valid()) {
    diagnostics = t.name() + ": table is not a hypergroup";
    return {kPropertyFails, validation_json(t, v.report)};
  }
  EquivalenceReport r = equivalence_report(t, sample_seed_from_env());
  std::optional<MeanCheck> check;
  if (r.mean.mean) check = verify_mean(t, *r.mean.mean, 20, sample_seed_from_env());
  Json j = report_json(t, r, check ? &*check : nullptr);
  bool ok = r.consistent() && r.haar_exists() && r.ppt_for_all() && r.mean_exists() && check && check->invariant;
  return {ok ? kSuccess : kPropertyFails, std::move(j)};
}

void render_report(std::ostream& out, const Json& j) {
  out << j["name"].get<std::string>() << ": Haar existence vs positivity of translations\n";
  if (!j.contains("conditions")) {
    out << "  not a hypergroup\n";
    return;
  }
  const Json& c = j["conditions"];
  auto yn = [](const Json& b) { return b.get<bool>() ? "true" : "false"; };
  out << "  invariant mean exists:             " << yn(j["invariant_mean_exists"]) << "\n"
      << "  (1) left Haar measure exists:      " << yn(c["haar_exists"]) << "\n"
      << "  (2) ppt holds for every tested f:  " << yn(c["ppt_all_tested"]) << " (" << j["tested"].size()
      << " functions)\n"
      << "  (3) ppt holds for some f:          " << yn(c["ppt_some"]) << "\n"
      << "  conditions agree:                  " << yn(j["consistent"]) << "\n";
  if (j.contains("haar")) {
    out << "  Haar weights:";
    for (auto& [k, v] : j["haar"]["weights"].items()) out << " " << k << "=" << v.get<std::string>();
    out << "\n";
  }
}

int cmd_report(const Context& ctx, const std::string& file, const std::string& dir, const std::string& out_dir) {
  if (dir.empty()) {
    std::string diag;
    auto [code, j] = report_one(file, diag);
    if (!diag.empty()) ctx.err << diag << "\n";
    if (ctx.json)
      ctx.emit(j);
    else if (j.contains("axioms"))
      render_validation(ctx.out, read_document(file), validate_table(read_document(file)).report);
    else
      render_report(ctx.out, j);
    return code;
  }

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

  struct Done {
    int code;
    Json json;
    std::string diag;
  };
  std::vector<std::future<Done>> jobs;
  for (const auto& path : files)
    jobs.push_back(std::async(std::launch::async, [path, out_dir]() {
      Done d{kInputError, Json(), ""};
      try {
        auto [code, j] = report_one(path.string(), d.diag);
        d.code = code;
        d.json = std::move(j);
        if (!out_dir.empty())
          write_file_atomically(std::filesystem::path(out_dir) / (path.stem().string() + ".report.json"),
                                d.json.dump(2) + "\n");
      } catch (const std::exception& e) {
        d.code = kInputError;
        d.diag = path.filename().string() + ": " + e.what();
      }
      return d;
    }));
  int worst = kSuccess;
  Json summary = Json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Done d = jobs[i].get();
    worst = std::max(worst, d.code);
    if (!d.diag.empty()) ctx.err << d.diag << "\n";
    summary.push_back(Json{{"file", files[i].filename().string()}, {"exit", d.code}});
    if (!ctx.json) ctx.out << files[i].filename().string() << ": exit " << d.code << "\n";
  }
  if (ctx.json) ctx.emit(Json{{"command", "report"}, {"files", summary}});
  return worst;
}

int cmd_gen(const Context& ctx, const std::string& family, const std::string& alpha_text, const std::string& group_file,
            const std::string& output, bool relaxed) {
  ConvolutionTable t = [&]() -> ConvolutionTable {
    if (family == "order2") {
      if (alpha_text.empty()) throw InputError("gen --family order2 needs --alpha");
      Rational alpha;
      try {
        alpha = parse_rational(alpha_text);
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--alpha: ") + e.what());
      }
      if (relaxed) return order2_table(alpha);
      return gen_order2(alpha).table();
    }
    if (family == "group" || family == "conjugacy") {
      if (group_file.empty()) throw InputError("gen --family " + family + " needs --group <file>");
      GroupTable g = read_group(group_file);
      return family == "group" ? gen_group(g).table() : gen_conjugacy(g).table();
    }
    throw InputError("unknown family \"" + family + "\" (expected group, conjugacy or order2)");
  }();
  const std::string text = serialize_document(t);
  if (output.empty() || output == "-")
    ctx.out << text;
  else {
    write_file_atomically(output, text);
    if (!ctx.json) ctx.out << "wrote " << t.name() << " to " << output << "\n";
  }
  return kSuccess;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite hypergroups: axioms, positivity of translations, Haar measures and invariant means", "hypal"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Print the machine-readable report");

  std::string file, f_symbol, f_file, method = "nullspace", family, alpha, group_file, output, dir, out_dir;
  double tol = 1e-12;
  long max_iter = 100000;
  bool relaxed = false;

  auto* validate = app.add_subcommand("validate", "Check the hypergroup axioms");
  validate->add_option("file", file, "Hypergroup document")->required();

  auto* haar = app.add_subcommand("haar", "Compute the left Haar measure");
  haar->add_option("file", file, "Hypergroup document")->required();
  haar->add_option("--method", method, "direct | nullspace | cesaro")->default_val("nullspace");
  haar->add_option("--tol", tol, "Cesaro residual tolerance (infinity norm)")->default_val(1e-12);
  haar->add_option("--max-iter", max_iter, "Cesaro iteration budget")->default_val(100000);
  haar->add_option("--f-indicator", f_symbol, "Test function defining K (default: constant 1)");

  auto* ppt = app.add_subcommand("ppt", "Decide positivity of translations of f");
  ppt->add_option("file", file, "Hypergroup document")->required();
  auto* f_ind = ppt->add_option("--f-indicator", f_symbol, "f = indicator of this element");
  auto* f_fil = ppt->add_option("--f-file", f_file, "f from a function file");
  f_ind->excludes(f_fil);
  f_fil->excludes(f_ind);
  ppt->add_flag("--relaxed", relaxed, "Accept tables that fail the axioms");

  auto* gamma = app.add_subcommand("gamma", "Check that Gamma_f is well defined and extend it");
  gamma->add_option("file", file, "Hypergroup document")->required();
  gamma->add_option("--f-indicator", f_symbol, "f = indicator of this element")->required();
  gamma->add_flag("--relaxed", relaxed, "Accept tables that fail the axioms");

  auto* mean = app.add_subcommand("mean", "Compute and verify a left invariant mean");
  mean->add_option("file", file, "Hypergroup document")->required();
  mean->add_flag("--relaxed", relaxed, "Accept tables that fail the axioms");

  auto* report = app.add_subcommand("report", "Haar existence vs positivity of translations");
  auto* report_file = report->add_option("file", file, "Hypergroup document");
  auto* report_all = report->add_option("--all", dir, "Process every .json file in a directory");
  report->add_option("-o,--output-dir", out_dir, "With --all: write <stem>.report.json files here");
  report_file->excludes(report_all);

  auto* gen = app.add_subcommand("gen", "Generate a hypergroup document");
  gen->add_option("--family", family, "group | conjugacy | order2")->required();
  gen->add_option("--alpha", alpha, "order2 parameter p/q in (0,1]");
  gen->add_option("--group", group_file, "Group Cayley-table file");
  gen->add_option("-o,--output", output, "Output file (default: stdout)");
  gen->add_flag("--relaxed", relaxed, "order2: allow alpha = 0");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(ctx, file);
    if (*haar) return cmd_haar(ctx, file, method, tol, max_iter, f_symbol);
    if (*ppt) {
      if (f_symbol.empty() && f_file.empty()) {
        err << "error: ppt needs --f-indicator or --f-file\n" << ppt->help();
        return kInputError;
      }
      return cmd_ppt(ctx, file, f_symbol, f_file, relaxed);
    }
    if (*gamma) return cmd_gamma(ctx, file, f_symbol, relaxed);
    if (*mean) return cmd_mean(ctx, file, relaxed);
    if (*report) {
      if (file.empty() && dir.empty()) {
        err << "error: report needs a file or --all <dir>\n" << report->help();
        return kInputError;
      }
      return cmd_report(ctx, file, dir, out_dir);
    }
    if (*gen) return cmd_gen(ctx, family, alpha, group_file, output, relaxed);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

// --- re-verification ------------------------------------------------------------

namespace {

bool fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return false;
}

bool reverify_ppt(const Json& entry, const ConvolutionTable& t, std::string* why) {
  FunctionOnH f(vector_from_json(t, entry.at("f"), "f"));
  PptVerdict fresh = ppt_check(t, f);
  if (fresh.holds != entry.at("holds").get<bool>()) return fail(why, "ppt verdict does not reproduce");
  if (entry.contains("certificate")) {
    const Json& c = entry["certificate"];
    PptCertificate cert{Measure(vector_from_json(t, c.at("mu"), "mu")), Measure(vector_from_json(t, c.at("nu"), "nu"))};
    if (!verify_ppt_certificate(t, f, cert)) return fail(why, "ppt certificate does not verify");
  } else if (!entry.at("holds").get<bool>()) {
    return fail(why, "failing ppt verdict without certificate");
  }
  return true;
}

bool reverify_haar(const Json& h, const ConvolutionTable& t, std::string* why) {
  if (h.contains("weights")) {
    Measure lambda(vector_from_json(t, h["weights"], "weights"));
    if (!lambda.is_positive() || lambda.mass() == 0) return fail(why, "Haar weights are not a positive measure");
    if (!check_left_invariance(t, lambda).invariant) return fail(why, "Haar weights are not left invariant");
    return true;
  }
  Vector<double> numeric(t.size());
  for (Index i = 0; i < t.size(); ++i) numeric(i) = std::stod(h.at("numeric").at(t.symbol(i)).get<std::string>());
  if (!check_left_invariance(t, numeric, std::stod(h.at("residual").get<std::string>()) * 2 + 1e-15).invariant)
    return fail(why, "numeric Haar weights exceed their reported residual");
  return true;
}

}  // namespace

bool reverify_report(const Json& report, const ConvolutionTable& t, std::string* why) {
  try {
    const std::string command = report.value("command", "");
    if (command == "validate") {
      Validation v = validate_table(t);
      if (v.report.valid() != report.at("valid").get<bool>()) return fail(why, "validity verdict does not reproduce");
      return true;
    }
    if (command == "ppt") return reverify_ppt(report, t, why);
    if (command == "haar") return reverify_haar(report, t, why);
    if (command == "mean" || command == "report") {
      const Json& m = command == "mean" ? report : report.at("mean");
      if (m.at("exists").get<bool>()) {
        Mean mean{Measure(vector_from_json(t, m.at("weights"), "mean"))};
        if (!verify_mean(t, mean, 20, sample_seed_from_env()).invariant) return fail(why, "mean is not invariant");
      }
      if (command == "mean") return true;
    }
    if (command == "gamma") {
      FunctionOnH f(vector_from_json(t, report.at("f"), "f"));
      for (const Json& k : report.at("kernel")) {
        RVector rho = vector_from_json(t, k.at("rho"), "kernel");
        if (translation_matrix(t, f) * rho != RVector::Zero(t.size())) return fail(why, "kernel vector is not in the kernel");
        if (Measure(rho).mass() != parse_rational(k.at("mass").get<std::string>())) return fail(why, "kernel mass mismatch");
      }
      if (!report.at("extension").is_null() &&
          !build_K(t, f).contains(Measure(vector_from_json(t, report["extension"], "extension"))))
        return fail(why, "extension is not a point of K");
      return true;
    }
    if (command == "report") {
      if (report.contains("haar") && !reverify_haar(report["haar"], t, why)) return false;
      for (const Json& entry : report.at("tested"))
        if (!reverify_ppt(entry, t, why)) return false;
      const Json& c = report.at("conditions");
      bool all = c.at("ppt_all_tested").get<bool>(), some = c.at("ppt_some").get<bool>();
      bool haar = c.at("haar_exists").get<bool>();
      if (report.at("consistent").get<bool>() != (haar == all && all == some))
        return fail(why, "consistency flag does not match the conditions");
      return true;
    }
    return fail(why, "unknown report command \"" + command + "\"");
  } catch (const std::exception& e) {
    return fail(why, std::string("malformed report: ") + e.what());
  }
}

}  // namespace hypal::cli
