// Command-line surface for the gap-distribution library: Hecke eigenangle
// spectra, gap families with histogram and Weyl tables, effective
// discrepancy reports, three-gap diagnostics and density sampling.
//
// Exit codes: 0 ok, 2 usage error, 3 numerical/precision failure,
// 4 theorem violation (a bound report with satisfied=false).

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gapdist/common.hpp"
#include "gapdist/discrepancy.hpp"
#include "gapdist/hecke.hpp"
#include "gapdist/io.hpp"
#include "gapdist/measures.hpp"
#include "gapdist/sequences.hpp"
#include "gapdist/weyl.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace gapdist;

std::string resolve_out(const std::string& out_dir, const std::string& name) {
  if (out_dir.empty()) return name;
  std::filesystem::create_directories(out_dir);
  return (std::filesystem::path(out_dir) / name).string();
}

/// Canonical config line for hashing: subcommand plus sorted key=value pairs.
std::string canonical_config(const std::string& cmd,
                             const std::map<std::string, std::string>& kv) {
  std::string s = cmd;
  for (const auto& [k, v] : kv) s += " " + k + "=" + v;
  return s;
}

io::FileMeta make_meta(const std::string& cmd, const std::map<std::string, std::string>& kv,
                       std::uint64_t seed) {
  return io::FileMeta{kVersion, io::config_hash(canonical_config(cmd, kv)), seed};
}

FourierDensity parse_density(const std::string& spec, int m_max) {
  if (spec == "uniform") return measures::uniform_density(m_max);
  if (spec == "st" || spec == "sato-tate") return measures::sato_tate_density(m_max);
  if (spec.rfind("vst:", 0) == 0) {
    return measures::vertical_sato_tate_density(std::stod(spec.substr(4)), m_max);
  }
  throw std::invalid_argument("expected uniform | st | vst:<q>, got '" + spec + "'");
}

double parse_alpha(const std::string& s) {
  if (s == "golden") return (std::sqrt(5.0) - 1.0) / 2.0;
  if (s == "sqrt2") return std::sqrt(2.0);
  if (s == "sqrt3") return std::sqrt(3.0);
  if (s == "pi") return 3.14159265358979323846;
  if (s == "e") return 2.71828182845904523536;
  return std::stod(s);
}

std::vector<int> parse_k_list(const std::string& s) {
  std::vector<int> ks;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) ks.push_back(std::stoi(tok));
  if (ks.empty()) throw std::invalid_argument("empty weight list");
  return ks;
}

void write_csv_table(const std::string& path, const io::FileMeta& meta,
                     const std::string& header, const std::vector<std::string>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "# gapdist " << meta.version << "\n";
  out << "# config=" << meta.config_hash << " seed=" << meta.seed << "\n";
  out << header << "\n";
  for (const auto& r : rows) out << r << "\n";
}

// ---------------------------------------------------------------------------

int cmd_hecke(const std::string& out_dir, const std::string& k_spec, int p,
              const std::string& out_prefix) {
  const auto ks = parse_k_list(k_spec);
  const std::map<std::string, std::string> kv{{"k", k_spec}, {"p", std::to_string(p)}};
  const auto meta = make_meta("hecke", kv, 0);

  nlohmann::json spectra = nlohmann::json::array();
  std::vector<double> all;
  for (int k : ks) {
    if (k % 2 != 0) throw std::invalid_argument("hecke: weights must be even");
    if (hecke::dim_cusp_forms(k) == 0) continue;
    const auto sp = hecke::eigenangles(k, p);
    spectra.push_back(io::to_json(sp));
    all.insert(all.end(), sp.fractional.begin(), sp.fractional.end());
  }
  nlohmann::json j{{"meta", meta.to_json()}, {"spectra", spectra}};
  io::write_json_file(resolve_out(out_dir, out_prefix + ".json"), j);

  AngleMultiset angles;
  angles.values =
      Eigen::Map<const Eigen::ArrayXd>(all.data(), static_cast<Eigen::Index>(all.size()));
  angles.source = canonical_config("hecke", kv);
  io::write_angles_csv(resolve_out(out_dir, out_prefix + "_angles.csv"), angles, meta);
  std::cout << "wrote " << out_prefix << ".json and " << out_prefix << "_angles.csv ("
            << all.size() << " angles)\n";
  return 0;
}

struct FamilyInputs {
  std::vector<AngleMultiset> factors;
  std::vector<FourierDensity> targets;
};

FamilyInputs load_family(const std::vector<std::string>& in_files, int replicate,
                         const std::vector<std::string>& target_specs, bool symmetrize_in,
                         int m_max) {
  std::vector<std::string> files = in_files;
  if (replicate > 1) {
    if (files.size() != 1) {
      throw std::invalid_argument("--r replication requires exactly one --in file");
    }
    files.assign(static_cast<std::size_t>(replicate), files[0]);
  }
  if (files.empty()) throw std::invalid_argument("no input files");
  std::vector<std::string> targets = target_specs;
  if (targets.size() == 1 && files.size() > 1) {
    targets.assign(files.size(), targets[0]);
  }
  if (targets.size() != files.size()) {
    throw std::invalid_argument("need one --target per input factor (or a single shared one)");
  }
  FamilyInputs fi;
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto a = io::read_angles_csv(files[i]);
    if (symmetrize_in) a = weyl::symmetrize(a);
    fi.factors.push_back(std::move(a));
    fi.targets.push_back(parse_density(targets[i], m_max));
  }
  return fi;
}

int cmd_gaps(const std::string& out_dir, const std::vector<std::string>& in_files, int replicate,
             const std::string& signs_spec, const std::vector<std::string>& target_specs,
             bool symmetrize_in, std::int64_t cap, std::uint64_t seed, int bins, int m_table,
             int m_max, const std::string& out_prefix) {
  auto fi = load_family(in_files, replicate, target_specs, symmetrize_in, m_max);
  const auto signs = SignPattern::parse(signs_spec);
  if (signs.size() != static_cast<int>(fi.factors.size())) {
    throw std::invalid_argument("--signs length must match the number of factors");
  }

  std::map<std::string, std::string> kv{{"signs", signs_spec},
                                        {"cap", std::to_string(cap)},
                                        {"seed", std::to_string(seed)},
                                        {"bins", std::to_string(bins)},
                                        {"symmetrize", symmetrize_in ? "1" : "0"}};
  for (std::size_t i = 0; i < in_files.size(); ++i) kv["in" + std::to_string(i)] = in_files[i];
  for (std::size_t i = 0; i < target_specs.size(); ++i) {
    kv["target" + std::to_string(i)] = target_specs[i];
  }
  if (replicate > 1) kv["r"] = std::to_string(replicate);
  const auto meta = make_meta("gaps", kv, seed);

  const auto gaps = weyl::gap_family(fi.factors, signs, cap, seed);
  io::write_angles_csv(resolve_out(out_dir, out_prefix + "_gaps.csv"), gaps, meta);

  // Histogram with the convolution target density at the bin centers.
  const auto target = measures::convolve(fi.targets);
  Eigen::ArrayXd counts = Eigen::ArrayXd::Zero(bins);
  for (Eigen::Index i = 0; i < gaps.size(); ++i) {
    auto b = static_cast<Eigen::Index>(gaps.values[i] * bins);
    if (b >= bins) b = bins - 1;
    counts[b] += 1.0;
  }
  counts /= static_cast<double>(gaps.size());
  std::vector<std::string> rows;
  for (int b = 0; b < bins; ++b) {
    const double center = (b + 0.5) / bins;
    rows.push_back(io::format_double(center) + "," + io::format_double(counts[b]) + "," +
                   io::format_double(measures::eval_density(target, center)));
  }
  write_csv_table(resolve_out(out_dir, out_prefix + "_hist.csv"), meta,
                  "bin_center,empirical_fraction,target_density", rows);

  // Empirical vs target Weyl coefficients; the targets are real and even,
  // so sign choices do not change the product.
  rows.clear();
  for (int m = 0; m <= m_table; ++m) {
    const auto emp = weyl::empirical_weyl_limit(gaps, m);
    double tgt = 1.0;
    for (const auto& t : fi.targets) tgt *= t.coeff(m);
    rows.push_back(std::to_string(m) + "," + io::format_double(emp.real()) + "," +
                   io::format_double(emp.imag()) + "," + io::format_double(tgt) + "," +
                   io::format_double(std::abs(emp - std::complex<double>(tgt, 0.0))));
  }
  write_csv_table(resolve_out(out_dir, out_prefix + "_weyl.csv"), meta,
                  "m,empirical_re,empirical_im,target,abs_diff", rows);
  std::cout << "wrote " << out_prefix << "_gaps.csv, _hist.csv, _weyl.csv (" << gaps.size()
            << " gaps)\n";
  return 0;
}

int cmd_bound(const std::string& out_dir, const std::vector<std::string>& in_files, int replicate,
              const std::string& signs_spec, const std::vector<std::string>& target_specs,
              bool symmetrize_in, const std::string& interval_spec, int m_order, double auto_c,
              double kn_proxy, int p_for_m, std::int64_t cap, int m_max,
              const std::string& out_prefix) {
  auto fi = load_family(in_files, replicate, target_specs, symmetrize_in, m_max);
  const auto signs = SignPattern::parse(signs_spec);
  if (signs.size() != static_cast<int>(fi.factors.size())) {
    throw std::invalid_argument("--signs length must match the number of factors");
  }

  // The bound is stated for the all-plus family; minus signs negate the
  // corresponding multiset, which conjugates its Weyl sums exactly.
  for (std::size_t j = 0; j < fi.factors.size(); ++j) {
    if (signs.signs[j] == -1) {
      Eigen::ArrayXd neg(fi.factors[j].size());
      for (Eigen::Index i = 0; i < neg.size(); ++i) {
        const double v = 1.0 - fi.factors[j].values[i];
        neg[i] = v >= 1.0 ? 0.0 : v;
      }
      fi.factors[j].values = std::move(neg);
    }
  }

  double a = 0.0, b = 0.0;
  {
    std::stringstream ss(interval_spec);
    std::string tok;
    if (!std::getline(ss, tok, ',')) throw std::invalid_argument("bad --interval");
    a = std::stod(tok);
    if (!std::getline(ss, tok, ',')) throw std::invalid_argument("bad --interval");
    b = std::stod(tok);
  }

  if (m_order <= 0) {
    double proxy = kn_proxy;
    if (proxy <= 0.0) {
      proxy = 1.0;
      for (const auto& f : fi.factors) proxy *= static_cast<double>(f.size());
    }
    m_order =
        discrepancy::choose_m(std::log(proxy), std::log(static_cast<double>(p_for_m)), auto_c);
  }

  std::map<std::string, std::string> kv{{"signs", signs_spec},
                                        {"interval", interval_spec},
                                        {"M", std::to_string(m_order)},
                                        {"cap", std::to_string(cap)},
                                        {"symmetrize", symmetrize_in ? "1" : "0"}};
  for (std::size_t i = 0; i < in_files.size(); ++i) kv["in" + std::to_string(i)] = in_files[i];
  for (std::size_t i = 0; i < target_specs.size(); ++i) {
    kv["target" + std::to_string(i)] = target_specs[i];
  }
  const auto meta = make_meta("bound", kv, 0);

  const auto rep =
      discrepancy::erdos_turan_bound(fi.factors, fi.targets, Interval(a, b), m_order, cap);
  nlohmann::json j{{"meta", meta.to_json()}, {"report", io::to_json(rep)}};
  io::write_json_file(resolve_out(out_dir, out_prefix + ".json"), j);

  std::vector<std::string> rows;
  for (std::size_t i = 0; i < rep.bound_terms.size(); ++i) {
    rows.push_back(std::to_string(i + 1) + "," + io::format_double(rep.bound_terms[i]));
  }
  write_csv_table(resolve_out(out_dir, out_prefix + "_terms.csv"), meta, "m,term", rows);

  std::cout << "lhs=" << io::format_double(rep.lhs) << " rhs=" << io::format_double(rep.rhs)
            << " M=" << rep.m_order << " satisfied=" << (rep.satisfied ? "true" : "false")
            << "\n";
  return rep.satisfied ? 0 : 4;
}

int cmd_threegap(const std::string& out_dir, const std::string& alpha_spec, std::int64_t n,
                 int subset_trials, std::uint64_t subset_seed, const std::string& out_prefix) {
  const double alpha = parse_alpha(alpha_spec);
  const std::map<std::string, std::string> kv{{"alpha", alpha_spec},
                                              {"N", std::to_string(n)},
                                              {"subset_trials", std::to_string(subset_trials)},
                                              {"subset_seed", std::to_string(subset_seed)}};
  const auto meta = make_meta("threegap", kv, subset_seed);

  const auto a = seq::kronecker_multiset(alpha, n);
  const auto g = seq::gap_spectrum(a);
  nlohmann::json j{{"meta", meta.to_json()},
                   {"alpha", alpha},
                   {"N", n},
                   {"alpha_looks_rational", seq::looks_rational(alpha, n)},
                   {"spectrum", io::to_json(g)}};
  if (subset_trials > 0 && n >= 2) {
    const auto rep = seq::subset_gap_bound_check(a, subset_seed, subset_trials);
    j["subset_check"] = {{"trials", rep.trials},
                         {"effective_trials", rep.effective_trials},
                         {"max_ratio", rep.max_ratio},
                         {"worst_subset_size", rep.worst_subset_size},
                         {"worst_count", rep.worst_count},
                         {"all_within", rep.all_within}};
  }
  io::write_json_file(resolve_out(out_dir, out_prefix + ".json"), j);

  std::vector<std::string> rows;
  for (std::size_t i = 0; i < g.gaps.size(); ++i) {
    rows.push_back(std::to_string(i) + "," + io::format_double(g.gaps[i]));
  }
  write_csv_table(resolve_out(out_dir, out_prefix + "_gaps.csv"), meta, "index,gap", rows);
  io::write_angles_csv(resolve_out(out_dir, out_prefix + "_angles.csv"), a, meta);
  std::cout << "distinct gaps: " << g.count << "\n";
  return 0;
}

int cmd_sample(const std::string& out_dir, const std::string& density_spec, std::int64_t n,
               std::uint64_t seed, int m_max, const std::string& out_prefix) {
  const auto d = parse_density(density_spec, m_max);
  const std::map<std::string, std::string> kv{{"density", density_spec},
                                              {"n", std::to_string(n)},
                                              {"seed", std::to_string(seed)},
                                              {"m_max", std::to_string(m_max)}};
  const auto meta = make_meta("sample", kv, seed);
  const auto a = measures::sample(d, n, seed);
  io::write_angles_csv(resolve_out(out_dir, out_prefix + ".csv"), a, meta);
  nlohmann::json j{{"meta", meta.to_json()},
                   {"density", io::to_json(d)},
                   {"n", n},
                   {"source", a.source}};
  io::write_json_file(resolve_out(out_dir, out_prefix + ".json"), j);
  std::cout << "wrote " << a.size() << " samples\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effective equidistribution of gaps between equidistributed families"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string out_dir;
  if (const char* env = std::getenv("GAPDIST_OUT_DIR")) out_dir = env;
  app.add_option("--out-dir", out_dir, "directory for output files (env GAPDIST_OUT_DIR)");

  // hecke
  auto* hk = app.add_subcommand("hecke", "eigenangles of Hecke operators on level-1 cusp forms");
  std::string k_spec;
  int p = 2;
  std::string hk_out = "hecke";
  hk->add_option("--k", k_spec, "comma-separated even weights")->required();
  hk->add_option("--p", p, "prime")->required();
  hk->add_option("--out", hk_out, "output prefix");

  // gaps
  auto* gp = app.add_subcommand("gaps", "gap family, histogram and Weyl coefficient table");
  std::vector<std::string> in_files, target_specs;
  std::string signs_spec = "+";
  std::int64_t cap = 1 << 20;
  std::uint64_t seed = 0;
  int bins = 64, m_table = 16, m_max = 64, replicate = 1;
  bool symmetrize_in = false;
  std::string gp_out = "gaps";
  gp->add_option("--in", in_files, "angle CSV files (one per factor)")->required();
  gp->add_option("--r", replicate, "replicate a single input r times");
  gp->add_option("--signs", signs_spec, "sign pattern, e.g. +-");
  gp->add_option("--target", target_specs, "per-factor target: uniform | st | vst:<q>")
      ->required();
  gp->add_flag("--symmetrize", symmetrize_in, "symmetrize inputs (t -> {t, -t mod 1})");
  gp->add_option("--cap", cap, "full-product cap before Monte-Carlo subsampling");
  gp->add_option("--seed", seed, "subsampling seed");
  gp->add_option("--bins", bins, "histogram bins");
  gp->add_option("--m-table", m_table, "Weyl table extent");
  gp->add_option("--m-max", m_max, "target density truncation");
  gp->add_option("--out", gp_out, "output prefix");

  // bound
  auto* bd = app.add_subcommand("bound", "effective discrepancy bound report");
  std::string interval_spec = "0,1";
  int m_order = 0;
  double auto_c = 0.0, kn_proxy = 0.0;
  int p_for_m = 2;
  std::string bd_out = "bound";
  std::vector<std::string> bd_in, bd_targets;
  std::string bd_signs = "+";
  bool bd_symmetrize = false;
  int bd_replicate = 1;
  std::int64_t bd_cap = 1 << 20;
  int bd_m_max = 64;
  bd->add_option("--in", bd_in, "angle CSV files (one per factor)")->required();
  bd->add_option("--r", bd_replicate, "replicate a single input r times");
  bd->add_option("--signs", bd_signs, "sign pattern");
  bd->add_option("--target", bd_targets, "per-factor target: uniform | st | vst:<q>")
      ->required();
  bd->add_flag("--symmetrize", bd_symmetrize, "symmetrize inputs");
  bd->add_option("--interval", interval_spec, "alpha,beta in [0,1]")->required();
  auto* m_opt = bd->add_option("--M", m_order, "polynomial order");
  auto* c_opt = bd->add_option("--auto-c", auto_c, "choose M = c log(kN) / log p");
  bd->add_option("--kn-proxy", kn_proxy, "family-size proxy for --auto-c (default: product)");
  bd->add_option("--p", p_for_m, "prime for --auto-c");
  bd->add_option("--cap", bd_cap, "full-product cap");
  bd->add_option("--m-max", bd_m_max, "target density truncation");
  bd->add_option("--out", bd_out, "output prefix");
  m_opt->excludes(c_opt);

  // threegap
  auto* tg = app.add_subcommand("threegap", "Kronecker sequence gap diagnostics");
  std::string alpha_spec = "golden";
  std::int64_t big_n = 1000;
  int subset_trials = 100;
  std::uint64_t subset_seed = 1;
  std::string tg_out = "threegap";
  tg->add_option("--alpha", alpha_spec, "number or golden|sqrt2|sqrt3|pi|e")->required();
  tg->add_option("--N", big_n, "sequence length")->required();
  tg->add_option("--subset-trials", subset_trials, "random-subset trials (0 disables)");
  tg->add_option("--subset-seed", subset_seed, "subset RNG seed");
  tg->add_option("--out", tg_out, "output prefix");

  // sample
  auto* sm = app.add_subcommand("sample", "inverse-transform samples of a density");
  std::string density_spec = "uniform";
  std::int64_t sample_n = 1000;
  std::uint64_t sample_seed = 0;
  int sample_m_max = 32;
  std::string sm_out = "sample";
  sm->add_option("--density", density_spec, "uniform | st | vst:<q>")->required();
  sm->add_option("--n", sample_n, "sample count")->required();
  sm->add_option("--seed", sample_seed, "stream seed")->required();
  sm->add_option("--m-max", sample_m_max, "series truncation");
  sm->add_option("--out", sm_out, "output prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(hk)) return cmd_hecke(out_dir, k_spec, p, hk_out);
    if (app.got_subcommand(gp)) {
      return cmd_gaps(out_dir, in_files, replicate, signs_spec, target_specs, symmetrize_in,
                      cap, seed, bins, m_table, m_max, gp_out);
    }
    if (app.got_subcommand(bd)) {
      if (m_order <= 0 && auto_c <= 0.0) {
        throw std::invalid_argument("bound: need --M or --auto-c");
      }
      return cmd_bound(out_dir, bd_in, bd_replicate, bd_signs, bd_targets, bd_symmetrize,
                       interval_spec, m_order, auto_c, kn_proxy, p_for_m, bd_cap, bd_m_max,
                       bd_out);
    }
    if (app.got_subcommand(tg)) {
      return cmd_threegap(out_dir, alpha_spec, big_n, subset_trials, subset_seed, tg_out);
    }
    if (app.got_subcommand(sm)) {
      return cmd_sample(out_dir, density_spec, sample_n, sample_seed, sample_m_max, sm_out);
    }
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return 3;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const NotAProbabilityDensity& e) {
    std::cerr << "not a probability density: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
