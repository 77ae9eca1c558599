// hgfm: evaluate matrix-argument Gauss hypergeometric series and verify the
// identities implemented by the library (reflection, summation at the
// identity matrix, determinantal reductions, the 2x2 quadratic
// transformation, the hypergeometric PDE system, and scalar specializations).
//
// Exit codes: 0 success / verification passed, 1 verification ran but failed,
// 2 domain or pole error, 3 identity hypothesis violated, 64 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hgfm/determinantal.hpp"
#include "hgfm/identities.hpp"
#include "hgfm/jack.hpp"
#include "hgfm/matrix_hgf.hpp"
#include "hgfm/probes.hpp"
#include "hgfm/report.hpp"
#include "hgfm/scalar_hgf.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace {

using hgfm::Rational;
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_flag(const std::string& s, const char* name) {
  if (auto v = hgfm::parse_rational(s)) return *v;
  throw UsageError(std::string("invalid rational value for ") + name + ": '" + s + "'");
}

// ---------------------------------------------------------------------------
// cache persistence

std::optional<std::filesystem::path> cache_file() {
  if (const char* dir = std::getenv("HGFM_CACHE_DIR"); dir && *dir)
    return std::filesystem::path(dir) / "hgfm_jack_cache.txt";
  return std::nullopt;
}

void load_cache() {
  const auto path = cache_file();
  if (!path) return;
  std::ifstream in(*path);
  if (!in) return;  // absent cache is not an error
  try {
    load_jack_cache(hgfm::global_jack_table<Rational>(), in);
  } catch (const hgfm::Error& e) {
    std::cerr << "warning: ignoring malformed cache file " << *path << ": " << e.what() << "\n";
  }
}

void save_cache() {
  const auto path = cache_file();
  if (!path) return;
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  std::ofstream out(*path, std::ios::trunc);
  if (!out) {
    std::cerr << "warning: cannot write cache file " << *path << "\n";
    return;
  }
  dump_jack_cache(hgfm::global_jack_table<Rational>(), out);
}

// ---------------------------------------------------------------------------
// shared option plumbing

struct CommonOpts {
  std::string a, b, c;
  std::string d = "1/2";
  int m = 0;
  std::string backend = "exact";
  std::string output = "text";
  int max_weight = 40;
  double rel_tol = 1e-12;
  unsigned seed = 1;
};

hgfm::HgfParams<Rational> rational_params(const CommonOpts& o) {
  return {parse_flag(o.a, "--a"), parse_flag(o.b, "--b"), parse_flag(o.c, "--c"),
          hgfm::ConeParameter(parse_flag(o.d, "--d"))};
}

hgfm::HgfParams<double> double_params(const CommonOpts& o) {
  const auto p = rational_params(o);
  return {hgfm::to_double(p.a), hgfm::to_double(p.b), hgfm::to_double(p.c), p.d};
}

std::vector<Rational> parse_eigs(const std::vector<std::string>& raw) {
  std::vector<Rational> out;
  out.reserve(raw.size());
  for (const auto& s : raw) out.push_back(parse_flag(s, "--eig"));
  return out;
}

void print_report(const hgfm::VerificationReport& rep, const std::string& output) {
  if (output == "json")
    std::cout << rep.to_json_string() << "\n";
  else if (output == "csv")
    std::cout << rep.to_csv();
  else
    std::cout << rep.to_text();
}

// ---------------------------------------------------------------------------
// eval

struct EvalOpts {
  CommonOpts common;
  std::vector<std::string> eig, eig2;
};

int cmd_eval(const EvalOpts& o) {
  const auto eig = parse_eigs(o.eig);
  const auto eig2 = parse_eigs(o.eig2);
  if (!eig2.empty() && eig2.size() != eig.size()) {
    std::cerr << "usage error: --eig and --eig2 must have the same length\n";
    return 64;
  }
  const hgfm::Truncation tr{o.common.max_weight, o.common.rel_tol, 8};
  const bool exact = o.common.backend == "exact";

  std::string value_str;
  double value_double = 0.0;
  hgfm::SeriesResult<double> meta{};  // shared diagnostic fields

  if (exact) {
    const auto p = rational_params(o.common);
    hgfm::EigenSpectrum<Rational> X(eig);
    hgfm::SeriesResult<Rational> r;
    if (eig2.empty())
      r = hgfm::evaluate(p, X, tr);
    else
      r = hgfm::evaluate_two(p, X, hgfm::EigenSpectrum<Rational>(eig2), tr);
    value_str = hgfm::to_fraction_string(r.value);
    value_double = hgfm::to_double(r.value);
    meta.max_weight_used = r.max_weight_used;
    meta.terminated = r.terminated;
    meta.boundary_warning = r.boundary_warning;
    meta.last_shell_magnitude = r.last_shell_magnitude;
  } else {
    const auto p = double_params(o.common);
    std::vector<double> xs, ys;
    for (const auto& v : eig) xs.push_back(hgfm::to_double(v));
    for (const auto& v : eig2) ys.push_back(hgfm::to_double(v));
    hgfm::SeriesResult<double> r;
    if (ys.empty())
      r = hgfm::evaluate(p, hgfm::EigenSpectrum<double>(xs), tr);
    else
      r = hgfm::evaluate_two(p, hgfm::EigenSpectrum<double>(xs), hgfm::EigenSpectrum<double>(ys),
                             tr);
    value_str = hgfm::format_double(r.value);
    value_double = r.value;
    meta.max_weight_used = r.max_weight_used;
    meta.terminated = r.terminated;
    meta.boundary_warning = r.boundary_warning;
    meta.last_shell_magnitude = r.last_shell_magnitude;
  }

  const std::string backend = exact ? "exact" : "floating";
  if (o.common.output == "json") {
    json j;
    j["schema"] = 1;
    j["op"] = "eval";
    j["backend"] = backend;
    j["params"] = {{"a", o.common.a}, {"b", o.common.b}, {"c", o.common.c}, {"d", o.common.d}};
    j["eig"] = o.eig;
    if (!o.eig2.empty()) j["eig2"] = o.eig2;
    j["value"] = value_str;
    j["value_double"] = value_double;
    j["max_weight_used"] = meta.max_weight_used;
    j["terminated"] = meta.terminated;
    j["boundary_warning"] = meta.boundary_warning;
    j["last_shell_magnitude"] = meta.last_shell_magnitude;
    std::cout << j.dump(2) << "\n";
  } else if (o.common.output == "csv") {
    std::cout << "op,backend,value,value_double,max_weight_used,terminated,boundary_warning\n"
              << "eval," << backend << ",\"" << value_str << "\","
              << hgfm::format_double(value_double) << "," << meta.max_weight_used << ","
              << (meta.terminated ? "true" : "false") << ","
              << (meta.boundary_warning ? "true" : "false") << "\n";
  } else {
    std::cout << "value = " << value_str;
    if (exact) std::cout << "  (" << hgfm::format_double(value_double) << ")";
    std::cout << "\nbackend = " << backend << "\nmax_weight_used = " << meta.max_weight_used
              << "\nterminated = " << (meta.terminated ? "true" : "false")
              << "\nlast_shell_magnitude = " << hgfm::format_double(meta.last_shell_magnitude)
              << "\nboundary_warning = " << (meta.boundary_warning ? "true" : "false") << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  CommonOpts common;
  std::string identity;
  std::string alpha = "0.7", beta = "0.9";
  int probes = 0;  // 0: per-identity default
  double tol = -1;  // <0: per-identity default
  double h = 1e-3;
  bool two_argument = false;
};

std::vector<hgfm::EigenSpectrum<double>> separated_probes(int count, int m, double lo, double hi,
                                                          double min_sep, unsigned seed) {
  std::vector<hgfm::EigenSpectrum<double>> out;
  for (unsigned attempt = 0; static_cast<int>(out.size()) < count && attempt < 4000; ++attempt) {
    auto cand = hgfm::probe_spectra(1, m, lo, hi, seed + attempt);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j)
        if (std::fabs(cand[0].values[static_cast<std::size_t>(i)] -
                      cand[0].values[static_cast<std::size_t>(j)]) < min_sep)
          ok = false;
    if (ok) out.push_back(std::move(cand[0]));
  }
  if (static_cast<int>(out.size()) < count)
    throw hgfm::DomainError("could not assemble well-separated probe spectra");
  return out;
}

hgfm::VerificationReport verify_det_vs_series(const VerifyOpts& o) {
  const CommonOpts& c = o.common;
  hgfm::HgfParams<double> p = double_params(c);
  p.d = hgfm::ConeParameter::hermitian();
  const int m = c.m > 0 ? c.m : 2;
  const int count = o.probes > 0 ? o.probes : 10;
  const double tol = o.tol > 0 ? o.tol : 1e-9;
  const hgfm::Truncation series_tr{60, 1e-15, 8};

  hgfm::VerificationReport rep;
  rep.identity = "det-vs-series";
  rep.backend = "floating";
  rep.tolerance = tol;
  rep.parameters = {{"a", c.a}, {"b", c.b}, {"c", c.c}, {"d", "1"}, {"m", std::to_string(m)},
                    {"kernel", o.two_argument ? "two-argument" : "one-argument"}};

  auto xs = hgfm::probe_spectra(count, m, 0.10, 0.45, c.seed);
  if (m >= 2) {  // one confluent probe exercises the divided-difference path
    std::vector<double> v(static_cast<std::size_t>(m), 0.2);
    v[0] = 0.35;
    xs.back() = hgfm::EigenSpectrum<double>(std::move(v));
  }

  if (!o.two_argument) {
    for (const auto& X : xs) {
      const double series = hgfm::evaluate(p, X, series_tr).value;
      const double det = hgfm::eval_one_det(p, X);
      hgfm::ProbeRecord rec;
      rec.desc = "X=" + X.to_string();
      rec.lhs = hgfm::format_double(series);
      rec.rhs = hgfm::format_double(det);
      rec.abs_residual = std::fabs(series - det);
      rec.rel_residual = rec.abs_residual / std::max(std::fabs(series), std::fabs(det));
      rec.pass = rec.rel_residual <= tol;
      rep.probes.push_back(std::move(rec));
    }
  } else {
    const auto c21 = hgfm::calibrate_c21(p, m, hgfm::SamplingPlan{5, c.seed + 7});
    rep.parameters.push_back({"c21", hgfm::format_double(c21.value)});
    rep.parameters.push_back({"c21_spread", hgfm::format_double(c21.probe_spread)});
    const auto ys = hgfm::probe_spectra(count, m, 0.08, 0.40, c.seed + 101);
    for (int i = 0; i < count; ++i) {
      const auto& X = xs[static_cast<std::size_t>(i)];
      const auto& Y = ys[static_cast<std::size_t>(i)];
      const double series = hgfm::evaluate_two(p, X, Y, series_tr).value;
      const double det = hgfm::eval_two_det(p, X, Y, c21);
      hgfm::ProbeRecord rec;
      rec.desc = "X=" + X.to_string() + " Y=" + Y.to_string();
      rec.lhs = hgfm::format_double(series);
      rec.rhs = hgfm::format_double(det);
      rec.abs_residual = std::fabs(series - det);
      rec.rel_residual = rec.abs_residual / std::max(std::fabs(series), std::fabs(det));
      rec.pass = rec.rel_residual <= tol;
      rep.probes.push_back(std::move(rec));
    }
  }
  rep.finalize();
  return rep;
}

int cmd_verify(const VerifyOpts& o) {
  const CommonOpts& c = o.common;
  const auto backend = c.backend == "exact" ? hgfm::Backend::exact : hgfm::Backend::floating;
  hgfm::VerificationReport rep;

  const bool needs_params = o.identity == "reflection" || o.identity == "gauss" ||
                            o.identity == "pde" || o.identity == "det-vs-series";
  if (needs_params && (c.a.empty() || c.b.empty() || c.c.empty())) {
    std::cerr << "usage error: verify " << o.identity << " requires --a, --b, --c\n";
    return 64;
  }

  if (o.identity == "reflection") {
    const auto p = rational_params(c);
    const int m = c.m > 0 ? c.m : 2;
    const int count = o.probes > 0 ? o.probes : 5;
    const double tol = o.tol > 0 ? o.tol : 1e-8;
    const auto probes =
        hgfm::rational_probe_spectra(count, m, Rational(1, 20), Rational(19, 20), c.seed);
    rep = hgfm::verify_reflection(p, m, probes, backend,
                                  hgfm::Truncation{c.max_weight, c.rel_tol, 8}, tol);
  } else if (o.identity == "gauss") {
    const auto p = rational_params(c);
    const int m = c.m > 0 ? c.m : 2;
    const double tol = o.tol > 0 ? o.tol : 1e-8;
    rep = hgfm::verify_gauss_at_identity(p, m, backend, tol);
  } else if (o.identity == "quadratic2x2") {
    const double alpha = hgfm::to_double(parse_flag(o.alpha, "--alpha"));
    const double beta = hgfm::to_double(parse_flag(o.beta, "--beta"));
    const int count = o.probes > 0 ? o.probes : 10;
    const double tol = o.tol > 0 ? o.tol : 1e-8;
    std::vector<std::array<double, 2>> probes;
    for (int i = 0; i < count; ++i) {
      const std::uint64_t idx = c.seed + static_cast<unsigned>(i) + 1;
      probes.push_back({-0.15 + 0.55 * hgfm::halton(idx, 2), -0.15 + 0.55 * hgfm::halton(idx, 3)});
    }
    rep = hgfm::verify_quadratic_2x2(alpha, beta, probes, hgfm::kDetEntryTruncation, tol);
  } else if (o.identity == "pde") {
    const auto p = double_params(c);
    const int m = c.m > 0 ? c.m : 2;
    const int count = o.probes > 0 ? o.probes : 5;
    const double tol = o.tol > 0 ? o.tol : 1e-5;
    const auto probes =
        separated_probes(count, m, 0.08, 0.62, std::max(15 * o.h, 0.02), c.seed);
    rep = hgfm::verify_muirhead(p, probes, o.h, tol);
  } else if (o.identity == "scalar-reflection" || o.identity == "scalar-quadratic" ||
             o.identity == "hannah") {
    const int count = o.probes > 0 ? o.probes : 20;
    const double tol = o.tol > 0 ? o.tol : 1e-11;
    const hgfm::SamplingPlan plan{count, c.seed};
    const auto which = o.identity == "scalar-reflection" ? hgfm::ScalarIdentity::reflection
                       : o.identity == "scalar-quadratic" ? hgfm::ScalarIdentity::quadratic
                                                          : hgfm::ScalarIdentity::hannah;
    rep = hgfm::verify_scalar_identity(which, plan, tol);
  } else if (o.identity == "det-vs-series") {
    rep = verify_det_vs_series(o);
  } else {
    std::cerr << "usage error: unknown identity '" << o.identity << "'\n";
    return 64;
  }

  print_report(rep, c.output);
  return rep.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// calibrate

int cmd_calibrate(const VerifyOpts& o) {
  const CommonOpts& c = o.common;
  hgfm::HgfParams<double> p = double_params(c);
  p.d = hgfm::ConeParameter::hermitian();
  const int m = c.m > 0 ? c.m : 2;
  const hgfm::SamplingPlan plan{o.probes > 0 ? o.probes : 5, c.seed};

  const auto fit = hgfm::calibrate_c21(p, m, plan);
  const double candidate = hgfm::c21_printed_candidate(p, m);
  const double ratio = candidate / fit.value;

  if (c.output == "json") {
    json j;
    j["schema"] = 1;
    j["op"] = "calibrate";
    j["params"] = {{"a", c.a}, {"b", c.b}, {"c", c.c}, {"m", m}};
    j["c21"] = fit.value;
    j["probe_spread"] = fit.probe_spread;
    j["probes"] = plan.count;
    j["closed_form_candidate"] = candidate;
    j["candidate_over_fit"] = ratio;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "c21 = " << hgfm::format_double(fit.value)
              << "\nprobe_spread = " << hgfm::format_double(fit.probe_spread)
              << "\nclosed_form_candidate = " << hgfm::format_double(candidate)
              << "\ncandidate_over_fit = " << hgfm::format_double(ratio) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOpts {
  CommonOpts common;
  std::vector<std::string> eig;
};

int cmd_bench(const BenchOpts& o) {
  const CommonOpts& c = o.common;
  const int m = c.m > 0 ? c.m : (o.eig.empty() ? 2 : static_cast<int>(o.eig.size()));
  const int weight = std::min(c.max_weight, 40);

  std::vector<double> x;
  if (o.eig.empty()) {
    for (int i = 0; i < m; ++i) x.push_back(0.1 + 0.4 * hgfm::halton(c.seed + 1, 2 + i));
  } else {
    for (const auto& s : o.eig) x.push_back(hgfm::to_double(parse_flag(s, "--eig")));
  }
  const auto cone = hgfm::ConeParameter(parse_flag(c.d, "--d"));
  auto& table = hgfm::global_jack_table<double>();
  const auto before = table.stats();

  using clock = std::chrono::steady_clock;
  struct Row {
    int shell;
    std::size_t partitions;
    double cold_us, warm_us;
  };
  std::vector<Row> rows;
  for (int k = 0; k <= weight; ++k) {
    const auto t0 = clock::now();
    auto shell = hgfm::jack_c_shell(k, std::span<const double>(x), cone, &table);
    const auto t1 = clock::now();
    auto again = hgfm::jack_c_shell(k, std::span<const double>(x), cone, &table);
    const auto t2 = clock::now();
    rows.push_back({k, shell.size(),
                    std::chrono::duration<double, std::micro>(t1 - t0).count(),
                    std::chrono::duration<double, std::micro>(t2 - t1).count()});
    (void)again;
  }
  const auto after = table.stats();

  // exact vs floating wall-time on a terminating evaluation of the same size
  const hgfm::HgfParams<Rational> pr{Rational(-3), Rational(1, 3), Rational(3), cone};
  std::vector<Rational> xr;
  for (int i = 0; i < m; ++i) xr.push_back(Rational(i + 1) / (4 * m));
  const auto te0 = clock::now();
  (void)hgfm::evaluate(pr, hgfm::EigenSpectrum<Rational>(xr), hgfm::Truncation{});
  const auto te1 = clock::now();
  hgfm::HgfParams<double> pd{-3.0, 1.0 / 3, 3.0, cone};
  std::vector<double> xd;
  for (const auto& v : xr) xd.push_back(hgfm::to_double(v));
  const auto tf0 = clock::now();
  (void)hgfm::evaluate(pd, hgfm::EigenSpectrum<double>(xd), hgfm::Truncation{});
  const auto tf1 = clock::now();
  const double exact_us = std::chrono::duration<double, std::micro>(te1 - te0).count();
  const double float_us = std::chrono::duration<double, std::micro>(tf1 - tf0).count();

  if (c.output == "json") {
    json j;
    j["schema"] = 1;
    j["op"] = "bench";
    j["m"] = m;
    j["d"] = c.d;
    j["max_weight"] = weight;
    json shells = json::array();
    for (const auto& r : rows)
      shells.push_back({{"shell", r.shell},
                        {"partitions", r.partitions},
                        {"cold_us", r.cold_us},
                        {"warm_us", r.warm_us}});
    j["shells"] = shells;
    j["cache"] = {{"hits", after.hits - before.hits}, {"misses", after.misses - before.misses}};
    j["exact_us"] = exact_us;
    j["float_us"] = float_us;
    j["exact_over_float"] = float_us > 0 ? exact_us / float_us : 0.0;
    std::cout << j.dump(2) << "\n";
  } else if (c.output == "csv") {
    std::cout << "shell,partitions,cold_us,warm_us\n";
    for (const auto& r : rows)
      std::cout << r.shell << "," << r.partitions << "," << hgfm::format_double(r.cold_us) << ","
                << hgfm::format_double(r.warm_us) << "\n";
  } else {
    std::cout << "m = " << m << ", d = " << c.d << ", weights 0.." << weight << "\n";
    for (const auto& r : rows)
      std::cout << "shell " << r.shell << ": " << r.partitions << " partitions, cold "
                << hgfm::format_double(r.cold_us) << " us, warm "
                << hgfm::format_double(r.warm_us) << " us\n";
    std::cout << "jack cache: +" << (after.hits - before.hits) << " hits, +"
              << (after.misses - before.misses) << " misses (" << table.entries()
              << " entries)\n"
              << "terminating evaluation: exact " << hgfm::format_double(exact_us)
              << " us, floating " << hgfm::format_double(float_us) << " us, ratio "
              << hgfm::format_double(float_us > 0 ? exact_us / float_us : 0.0) << "\n";
  }
  return 0;
}

template <class F>
int run_guarded(F&& f) {
  try {
    return f();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const hgfm::HypothesisError& e) {
    std::cerr << "hypothesis violated [" << e.condition << "]: " << e.what() << "\n";
    return 3;
  } catch (const hgfm::PoleError& e) {
    std::cerr << "pole error";
    if (e.position > 0) std::cerr << " (factor j=" << e.position << ")";
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const hgfm::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const hgfm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix-argument Gauss hypergeometric evaluation and identity verification"};
  app.require_subcommand(1);

  auto add_common = [](CLI::App* cmd, CommonOpts& o, bool need_params) {
    auto* a = cmd->add_option("--a", o.a, "parameter a (rational: 1/3, -2, 0.25)");
    auto* b = cmd->add_option("--b", o.b, "parameter b");
    auto* cc = cmd->add_option("--c", o.c, "parameter c");
    if (need_params) {
      a->required();
      b->required();
      cc->required();
    }
    cmd->add_option("--d", o.d, "cone parameter d (1/2 real symmetric, 1 Hermitian)");
    cmd->add_option("--m", o.m, "spectrum size");
    cmd->add_option("--backend", o.backend, "arithmetic backend")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--output", o.output, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--max-weight", o.max_weight, "truncation weight cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rel-tol", o.rel_tol, "relative truncation tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "probe sequence seed");
  };

  EvalOpts eval_opts;
  auto* eval = app.add_subcommand("eval", "evaluate the series at a spectrum");
  add_common(eval, eval_opts.common, true);
  eval->add_option("--eig", eval_opts.eig, "eigenvalues x1,x2,...")->required()->delimiter(',');
  eval->add_option("--eig2", eval_opts.eig2, "second spectrum y1,y2,... (two-argument kernel)")
      ->delimiter(',');

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "machine-verify an identity");
  verify
      ->add_option("identity", verify_opts.identity,
                   "one of: reflection, gauss, quadratic2x2, pde, scalar-reflection, "
                   "scalar-quadratic, hannah, det-vs-series")
      ->required()
      ->check(CLI::IsMember({"reflection", "gauss", "quadratic2x2", "pde", "scalar-reflection",
                             "scalar-quadratic", "hannah", "det-vs-series"}));
  add_common(verify, verify_opts.common, false);
  verify->add_option("--alpha", verify_opts.alpha, "quadratic2x2 parameter alpha");
  verify->add_option("--beta", verify_opts.beta, "quadratic2x2 parameter beta");
  verify->add_option("--probes", verify_opts.probes, "number of probe points");
  verify->add_option("--tol", verify_opts.tol, "acceptance tolerance (identity default if unset)");
  verify->add_option("--step", verify_opts.h, "finite-difference step (pde)");
  verify->add_flag("--two", verify_opts.two_argument, "two-argument kernel (det-vs-series)");

  VerifyOpts cal_opts;
  auto* calibrate = app.add_subcommand("calibrate", "fit the determinantal constant c21");
  add_common(calibrate, cal_opts.common, true);
  calibrate->add_option("--probes", cal_opts.probes, "number of calibration probes");

  BenchOpts bench_opts;
  auto* bench = app.add_subcommand("bench", "time Jack shells and backends");
  add_common(bench, bench_opts.common, false);
  bench->add_option("--eig", bench_opts.eig, "eigenvalues (default: seeded probe)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 64;
  }

  load_cache();
  int rc = 0;
  if (eval->parsed())
    rc = run_guarded([&] { return cmd_eval(eval_opts); });
  else if (verify->parsed())
    rc = run_guarded([&] { return cmd_verify(verify_opts); });
  else if (calibrate->parsed())
    rc = run_guarded([&] { return cmd_calibrate(cal_opts); });
  else if (bench->parsed())
    rc = run_guarded([&] { return cmd_bench(bench_opts); });
  save_cache();
  return rc;
}
