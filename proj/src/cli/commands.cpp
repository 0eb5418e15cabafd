#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "hardimer/cli.hpp"
#include "hardimer/clt.hpp"
#include "hardimer/closedform.hpp"
#include "hardimer/enumerate.hpp"
#include "hardimer/moments.hpp"
#include "hardimer/pmf_grid.hpp"
#include "hardimer/sampler.hpp"

namespace hardimer::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string decimal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Writes `body` to `path` (creating parent directories) plus its manifest.
void write_output(const fs::path& path, const std::string& body, RunManifest manifest) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    f << body;
  }
  manifest.outputs = {path.filename().string()};
  manifest.timestamp = utc_timestamp();
  write_manifest(manifest_path(path), manifest);
}

void emit(const std::string& out_path, const std::string& body, const RunManifest& manifest,
          std::ostream& out) {
  if (out_path.empty()) {
    out << body;
    return;
  }
  write_output(out_path, body, manifest);
  out << "wrote " << out_path << '\n';
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  int max_n = 0;
  int cap = 14;
  int joint_max_n = 12;
  unsigned threads = 0;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.max_n < 1) throw UsageError("--max-n must be at least 1");
  if (a.max_n > a.cap) {
    throw CapExceeded("--max-n " + std::to_string(a.max_n) + " exceeds the enumeration cap " +
                      std::to_string(a.cap));
  }
  std::ostringstream report;
  bool all_pass = true;
  for (int n = 1; n <= a.max_n; ++n) {
    const EnumerationSummary summary = exact_joint_bruteforce(n, {a.cap, a.threads});
    const BigInt expected_pairs = 2 * big_pow(3, static_cast<unsigned long>(n - 1));
    const bool pairs_ok = summary.total_pairs == expected_pairs;

    std::string joint = "skipped";
    bool joint_ok = true;
    if (n <= a.joint_max_n) {
      const JointPmfTable table = joint_pmf_st(n);
      const Rational scale = Rational(big_pow(2, static_cast<unsigned long>(n))) * normalizing_constant(n);
      std::size_t matched = 0;
      for (const auto& [cell, count] : summary.by_st) {
        Rational freq = Rational(count) / scale;
        if (freq == table.at(cell.first, cell.second)) ++matched;
      }
      joint_ok = matched == summary.by_st.size() && matched == table.entries().size();
      joint = joint_ok ? "match" : "MISMATCH";
    }
    const bool ok = pairs_ok && joint_ok;
    all_pass = all_pass && ok;
    report << "N=" << n << " pairs=" << summary.total_pairs.get_str()
           << " expected=" << expected_pairs.get_str() << " joint=" << joint << ' '
           << (ok ? "PASS" : "FAIL") << '\n';
  }
  report << (all_pass ? "verify: all pass\n" : "verify: FAILURES\n");

  RunManifest m;
  m.command = "verify";
  m.parameters = {{"max_n", a.max_n}, {"cap", a.cap}, {"joint_max_n", a.joint_max_n}};
  emit(a.out, report.str(), m, out);
  return all_pass ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct PmfArgs {
  int n = 0;
  std::string coords = "st";
  std::string format = "csv";
  bool floating = false;
  std::string out;
};

struct PmfRow {
  int first;
  int second;
  std::optional<Rational> exact;
  double value;
};

struct MarginalRow {
  int index;
  std::optional<Rational> exact;
  double value;
};

std::string render_pmf_csv(const PmfArgs& a, const std::vector<PmfRow>& joint,
                           const std::vector<MarginalRow>& first,
                           const std::vector<MarginalRow>& second, const std::string& total_exact,
                           double total_value) {
  const std::string second_name = a.coords == "st" ? "t" : "k";
  std::ostringstream os;
  os << "section,i,j,probability,decimal\n";
  const auto exact_str = [](const std::optional<Rational>& q) {
    return q ? to_fraction_string(*q) : std::string();
  };
  for (const PmfRow& r : joint) {
    os << "joint," << r.first << ',' << r.second << ',' << exact_str(r.exact) << ','
       << decimal(r.value) << '\n';
  }
  for (const MarginalRow& r : first) {
    os << "marginal_s," << r.index << ",," << exact_str(r.exact) << ',' << decimal(r.value) << '\n';
  }
  for (const MarginalRow& r : second) {
    os << "marginal_" << second_name << ',' << r.index << ",," << exact_str(r.exact) << ','
       << decimal(r.value) << '\n';
  }
  os << "total,,," << total_exact << ',' << decimal(total_value) << '\n';
  return os.str();
}

std::string render_pmf_json(const PmfArgs& a, const std::vector<PmfRow>& joint,
                            const std::vector<MarginalRow>& first,
                            const std::vector<MarginalRow>& second, const std::string& total_exact,
                            double total_value) {
  const std::string second_name = a.coords == "st" ? "t" : "k";
  const auto put = [](json& j, const std::optional<Rational>& q, double v) {
    j["probability"] = q ? json(to_fraction_string(*q)) : json(nullptr);
    j["decimal"] = v;
  };
  json doc;
  doc["n"] = a.n;
  doc["coords"] = a.coords;
  doc["exact"] = !a.floating;
  json rows = json::array();
  for (const PmfRow& r : joint) {
    json j{{"s", r.first}, {second_name, r.second}};
    put(j, r.exact, r.value);
    rows.push_back(j);
  }
  doc["joint"] = rows;
  const auto marginal = [&](const std::vector<MarginalRow>& m, const std::string& name) {
    json arr = json::array();
    for (const MarginalRow& r : m) {
      json j{{name, r.index}};
      put(j, r.exact, r.value);
      arr.push_back(j);
    }
    return arr;
  };
  doc["marginals"] = {{"s", marginal(first, "s")}, {second_name, marginal(second, second_name)}};
  doc["total"] = total_exact.empty() ? json(nullptr) : json(total_exact);
  doc["total_decimal"] = total_value;
  return doc.dump(2) + "\n";
}

int cmd_pmf(const PmfArgs& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  std::vector<PmfRow> joint;
  std::vector<MarginalRow> first, second;
  std::string total_exact;
  double total_value = 0.0;

  if (!a.floating) {
    JointPmfTable table = joint_pmf_st(a.n);
    if (a.coords == "sk") table = table.reindexed();
    for (const auto& e : table.entries()) {
      const Rational p = table.probability(e);
      joint.push_back({e.first, e.second, p, p.get_d()});
    }
    for (const auto& [i, p] : table.marginal_first()) first.push_back({i, p, p.get_d()});
    for (const auto& [i, p] : table.marginal_second()) second.push_back({i, p, p.get_d()});
    const Rational total = table.total();
    total_exact = to_fraction_string(total);
    total_value = total.get_d();
  } else {
    const JointPmfGrid grid = pmf_grid_log_space(a.n);
    const bool st = a.coords == "st";
    for (int s = 0; s <= grid.s_max(); ++s) {
      for (int k = grid.k_min(s); k <= grid.k_max(s); ++k) {
        joint.push_back({s, st ? a.n - k + s : k, std::nullopt, grid(s, k)});
      }
    }
    std::sort(joint.begin(), joint.end(), [](const PmfRow& x, const PmfRow& y) {
      return std::pair(x.first, x.second) < std::pair(y.first, y.second);
    });
    const std::vector<double> ms = grid.marginal_s();
    for (std::size_t s = 0; s < ms.size(); ++s) first.push_back({static_cast<int>(s), std::nullopt, ms[s]});
    std::map<int, CompensatedSum> by_second;
    for (const PmfRow& r : joint) by_second[r.second] += r.value;
    for (const auto& [i, acc] : by_second) second.push_back({i, std::nullopt, acc.value()});
    total_value = grid.total();
  }

  const std::string body = a.format == "csv"
                               ? render_pmf_csv(a, joint, first, second, total_exact, total_value)
                               : render_pmf_json(a, joint, first, second, total_exact, total_value);
  RunManifest m;
  m.command = "pmf";
  m.parameters = {{"n", a.n}, {"coords", a.coords}, {"format", a.format}, {"float", a.floating}};
  emit(a.out, body, m, out);
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct MomentsArgs {
  int from = 0;
  int to = 0;
  std::string out;
};

int cmd_moments(const MomentsArgs& a, std::ostream& out) {
  if (a.from < 1 || a.to < a.from) throw UsageError("moment range must satisfy 1 <= --from <= --to");
  if (a.to > kExactPathLimit) {
    throw UsageError("--to is limited to " + std::to_string(kExactPathLimit) + " (exact moments)");
  }
  std::ostringstream os;
  os << "N,E_s_exact,E_s_asymptotic,Var_s_exact,Var_s_asymptotic,E_h_exact,E_h_binomial,"
        "E_gamma_exact,E_gamma_asymptotic,residual_mean_s,residual_var_s,"
        "recursion_residual_mean,recursion_residual_second\n";
  for (int n = a.from; n <= a.to; ++n) {
    const MomentReport<Rational> r = exact_moments(n);
    const Rational mean_asym = asymptotic_mean_s(n);
    const Rational var_asym = asymptotic_var_s(n);
    os << n << ',' << to_fraction_string(r.mean_s) << ',' << to_fraction_string(mean_asym) << ','
       << to_fraction_string(r.var_s) << ',' << to_fraction_string(var_asym) << ','
       << to_fraction_string(r.mean_h) << ',' << to_fraction_string(binomial_mean_h(n)) << ','
       << to_fraction_string(r.mean_gamma) << ',' << to_fraction_string(asymptotic_mean_gamma(n))
       << ',' << to_fraction_string(Rational(r.mean_s - mean_asym)) << ','
       << to_fraction_string(Rational(r.var_s - var_asym)) << ','
       << (n >= 2 ? to_fraction_string(recursion_residual_mean(n, r)) : std::string()) << ','
       << (n >= 3 ? to_fraction_string(recursion_residual_second(n, r)) : std::string()) << '\n';
  }
  RunManifest m;
  m.command = "moments";
  m.parameters = {{"from", a.from}, {"to", a.to}};
  emit(a.out, os.str(), m, out);
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct SampleArgs {
  int n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  bool aggregate = false;
  unsigned threads = 0;
  std::string out;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  if (a.m < 1) throw UsageError("--m must be at least 1");
  std::ostringstream os;
  if (a.aggregate) {
    const EmpiricalHistogram hist = empirical_joint(a.n, a.m, a.seed, a.threads);
    os << "s,k,count,frequency_decimal\n";
    for (const auto& [cell, count] : hist.counts) {
      os << cell.first << ',' << cell.second << ',' << count << ','
         << decimal(static_cast<double>(count) / static_cast<double>(a.m)) << '\n';
    }
  } else {
    const SampleBatch batch = sample_batch(a.n, a.m, a.seed, false, a.threads);
    os << "n_b,n_r,n_br,gamma_b,gamma_r\n";
    for (const ConfigStats& st : batch.stats) {
      os << st.n_b << ',' << st.n_r << ',' << st.n_br << ',' << st.gamma_b << ',' << st.gamma_r << '\n';
    }
  }
  const fs::path path = a.out.empty()
                            ? default_output_dir() / ("sample_n" + std::to_string(a.n) + "_m" +
                                                      std::to_string(a.m) + "_seed" +
                                                      std::to_string(a.seed) +
                                                      (a.aggregate ? "_hist" : "") + ".csv")
                            : fs::path(a.out);
  RunManifest m;
  m.command = "sample";
  m.parameters = {{"n", a.n}, {"m", a.m}, {"aggregate", a.aggregate}};
  m.seed = a.seed;
  m.rng_algorithm = std::string(kRngAlgorithm);
  write_output(path, os.str(), m);
  out << "wrote " << path.string() << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct CltArgs {
  std::vector<int> ns;
  double window = 2.0;
  double window_x = 0.0;
  double window_y = 0.0;
  std::string path = "auto";
  std::string out_dir;
};

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

int cmd_clt(const CltArgs& a, std::ostream& out) {
  if (a.ns.empty()) throw UsageError("--n needs at least one value");
  for (int n : a.ns) {
    if (n < 2) throw UsageError("every N must be at least 2");
  }
  const Window window{a.window_x > 0 ? a.window_x : a.window, a.window_y > 0 ? a.window_y : a.window};
  try {
    window.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  PmfPath path = PmfPath::Auto;
  if (a.path == "exact") path = PmfPath::Exact;
  if (a.path == "log") path = PmfPath::LogSpace;

  const fs::path dir = a.out_dir.empty() ? default_output_dir() : fs::path(a.out_dir);
  fs::create_directories(dir);

  RunManifest manifest;
  manifest.command = "clt";
  manifest.parameters = {{"n", a.ns}, {"window_x", window.x_bound}, {"window_y", window.y_bound},
                         {"path", a.path}};

  json runs = json::array();
  std::vector<double> joint_sup, s_sup, k_sup, h_sup, gaps;
  for (int n : a.ns) {
    const JointPmfGrid grid = pmf_grid(n, path);
    CltReport report = joint_error_field(grid, window);
    if (grid.exact_source()) report.correlation = exact_moments(n).corr_sk;
    const MarginalCltReport s_report = marginal_s_clt_error(grid, window.x_bound);
    const MarginalCltReport k_report = binomial_clt_error(n, BinomialMarginal::K, window.y_bound);
    const MarginalCltReport h_report = binomial_clt_error(n, BinomialMarginal::H, window.y_bound);

    std::ostringstream os;
    os << "s,k,x,y,exact_pmf,gauss_mass,rel_err\n";
    for (const CltPoint& p : report.grid) {
      os << p.s << ',' << p.k << ',' << decimal(p.x) << ',' << decimal(p.y) << ',' << decimal(p.exact)
         << ',' << decimal(p.gauss) << ',' << decimal(p.rel_err) << '\n';
    }
    const fs::path csv = dir / ("clt_n" + std::to_string(n) + ".csv");
    write_output(csv, os.str(), manifest);

    const double gap = std::abs(report.correlation - limit_correlation());
    joint_sup.push_back(report.sup_error);
    s_sup.push_back(s_report.sup_error);
    k_sup.push_back(k_report.sup_error);
    h_sup.push_back(h_report.sup_error);
    gaps.push_back(gap);
    runs.push_back({{"n", n},
                    {"exact_source", report.exact_source},
                    {"grid_points", report.grid.size()},
                    {"sup_error", report.sup_error},
                    {"marginal_s_sup_error", s_report.sup_error},
                    {"marginal_k_sup_error", k_report.sup_error},
                    {"marginal_h_sup_error", h_report.sup_error},
                    {"correlation", report.correlation},
                    {"correlation_gap", gap},
                    {"grid_file", csv.filename().string()}});
    out << "N=" << n << " sup_error=" << decimal(report.sup_error)
        << " correlation=" << decimal(report.correlation) << '\n';
  }

  json summary;
  summary["window"] = {{"x_bound", window.x_bound}, {"y_bound", window.y_bound}};
  summary["limit_correlation"] = limit_correlation();
  summary["runs"] = runs;
  summary["monotone"] = {{"sup_error", strictly_decreasing(joint_sup)},
                         {"marginal_s_sup_error", strictly_decreasing(s_sup)},
                         {"marginal_k_sup_error", strictly_decreasing(k_sup)},
                         {"marginal_h_sup_error", strictly_decreasing(h_sup)},
                         {"correlation_gap", strictly_decreasing(gaps)}};
  const fs::path summary_path = dir / "clt_summary.json";
  write_output(summary_path, summary.dump(2) + "\n", manifest);
  out << "wrote " << summary_path.string() << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distributions, moments, samples and CLT checks for coloured hard-dimers",
               "hardimer"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Brute force vs closed form for N = 1..max-n");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest N to check")->required();
  verify_cmd->add_option("--cap", verify.cap, "Enumeration cap")->capture_default_str();
  verify_cmd->add_option("--joint-max-n", verify.joint_max_n, "Largest N for the entrywise joint check")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Report file (stdout when omitted)");

  PmfArgs pmf;
  auto* pmf_cmd = app.add_subcommand("pmf", "Joint pmf table with marginals");
  pmf_cmd->add_option("--n", pmf.n, "Sequence length")->required();
  pmf_cmd->add_option("--coords", pmf.coords, "st or sk")
      ->check(CLI::IsMember({"st", "sk"}))
      ->capture_default_str();
  pmf_cmd->add_option("--format", pmf.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  pmf_cmd->add_flag("--float", pmf.floating, "Log-space floating path instead of exact rationals");
  pmf_cmd->add_option("--out", pmf.out, "Output file (stdout when omitted)");

  MomentsArgs moments;
  auto* moments_cmd = app.add_subcommand("moments", "Exact and asymptotic moments per N");
  moments_cmd->add_option("--from", moments.from, "First N")->required();
  moments_cmd->add_option("--to", moments.to, "Last N")->required();
  moments_cmd->add_option("--out", moments.out, "Output file (stdout when omitted)");

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Uniform samples from all configuration pairs");
  sample_cmd->add_option("--n", sample.n, "Sequence length")->required();
  sample_cmd->add_option("--m", sample.m, "Number of draws")->required();
  sample_cmd->add_option("--seed", sample.seed, "RNG seed")->required();
  sample_cmd->add_flag("--aggregate", sample.aggregate, "Write an (s, k) histogram instead of draws");
  sample_cmd->add_option("--out", sample.out, "Output file");

  CltArgs clt;
  auto* clt_cmd = app.add_subcommand("clt", "Local CLT error fields and summary");
  clt_cmd->add_option("--n", clt.ns, "Comma-separated N values")->required()->delimiter(',');
  clt_cmd->add_option("--window", clt.window, "Half-width for both axes")->capture_default_str();
  clt_cmd->add_option("--window-x", clt.window_x, "Half-width in x (overrides --window)");
  clt_cmd->add_option("--window-y", clt.window_y, "Half-width in y (overrides --window)");
  clt_cmd->add_option("--path", clt.path, "auto, exact or log")
      ->check(CLI::IsMember({"auto", "exact", "log"}))
      ->capture_default_str();
  clt_cmd->add_option("--out-dir", clt.out_dir, "Output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  verify.threads = threads;
  sample.threads = threads;
  try {
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*pmf_cmd) return cmd_pmf(pmf, out);
    if (*moments_cmd) return cmd_moments(moments, out);
    if (*sample_cmd) return cmd_sample(sample, out);
    if (*clt_cmd) return cmd_clt(clt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const EmptyWindow& e) {
    err << "EmptyWindow: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapExceeded& e) {
    err << "CapExceeded: " << e.what() << '\n';
    return kResourceError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kResourceError;
  }
  return kUsageError;
}

}  // namespace hardimer::cli
