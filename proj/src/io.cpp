#include "gapdist/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gapdist::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string config_hash(const std::string& canonical) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json FileMeta::to_json() const {
  return {{"version", version}, {"config_hash", config_hash}, {"seed", seed}};
}

nlohmann::json to_json(const FourierDensity& d) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int m = -d.m_max(); m <= d.m_max(); ++m) {
    coeffs.push_back({m, d.coeff(m)});
  }
  nlohmann::json j{{"m_max", d.m_max()}, {"coeffs", coeffs}, {"mass", d.mass()}};
  if (d.closed_form) {
    j["closed_form"] = {{"kind", d.closed_form->kind_name()},
                        {"params", {{"q", d.closed_form->q}, {"scale", d.closed_form->scale}}}};
  } else {
    j["closed_form"] = nullptr;
  }
  return j;
}

FourierDensity density_from_json(const nlohmann::json& j) {
  FourierDensity d;
  const int m_max = j.at("m_max").get<int>();
  d.coeffs = Eigen::ArrayXd::Zero(m_max + 1);
  std::vector<bool> seen(static_cast<std::size_t>(m_max) + 1, false);
  for (const auto& pair : j.at("coeffs")) {
    const int m = pair.at(0).get<int>();
    const double c = pair.at(1).get<double>();
    if (std::abs(m) > m_max) throw std::invalid_argument("density_from_json: index out of band");
    const auto a = static_cast<std::size_t>(std::abs(m));
    if (seen[a] && d.coeffs[std::abs(m)] != c) {
      throw std::invalid_argument("density_from_json: asymmetric coefficients");
    }
    seen[a] = true;
    d.coeffs[std::abs(m)] = c;
  }
  if (!j.at("closed_form").is_null()) {
    const auto& cf = j.at("closed_form");
    if (cf.at("kind").get<std::string>() != "vertical_sato_tate") {
      throw std::invalid_argument("density_from_json: unknown closed form kind");
    }
    ClosedForm c;
    c.kind = ClosedForm::Kind::VerticalSatoTate;
    c.q = cf.at("params").at("q").get<double>();
    c.scale = cf.at("params").at("scale").get<double>();
    d.closed_form = c;
  }
  return d;
}

nlohmann::json to_json(const AngleMultiset& a) {
  nlohmann::json values = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.size(); ++i) values.push_back(a.values[i]);
  return {{"values", values}, {"symmetrized", a.symmetrized}, {"source", a.source}};
}

AngleMultiset multiset_from_json(const nlohmann::json& j) {
  const auto& values = j.at("values");
  Eigen::ArrayXd vals(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) vals[static_cast<Eigen::Index>(i)] = values[i];
  return AngleMultiset::validated(std::move(vals), j.at("symmetrized").get<bool>(),
                                  j.at("source").get<std::string>());
}

nlohmann::json to_json(const TrigPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int m = -p.degree; m <= p.degree; ++m) {
    coeffs.push_back({m, p.coeff(m).real(), p.coeff(m).imag()});
  }
  return {{"M", p.degree}, {"coeffs", coeffs}};
}

TrigPolynomial trig_polynomial_from_json(const nlohmann::json& j) {
  TrigPolynomial p;
  p.degree = j.at("M").get<int>();
  p.coeffs = Eigen::ArrayXcd::Zero(2 * p.degree + 1);
  for (const auto& triple : j.at("coeffs")) {
    const int m = triple.at(0).get<int>();
    if (std::abs(m) > p.degree) {
      throw std::invalid_argument("trig_polynomial_from_json: index beyond degree");
    }
    p.coeffs[m + p.degree] = {triple.at(1).get<double>(), triple.at(2).get<double>()};
  }
  return p;
}

nlohmann::json to_json(const DiscrepancyReport& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < r.bound_terms.size(); ++i) {
    terms.push_back({static_cast<int>(i) + 1, r.bound_terms[i]});
  }
  return {{"interval", {{"alpha", r.interval.alpha}, {"beta", r.interval.beta}}},
          {"empirical", r.empirical},
          {"target", r.target},
          {"lhs", r.lhs},
          {"M", r.m_order},
          {"bound_terms", terms},
          {"rhs", r.rhs},
          {"satisfied", r.satisfied}};
}

nlohmann::json to_json(const HeckeSpectrum& s) {
  nlohmann::json eig = nlohmann::json::array();
  char buf[48];
  for (double v : s.eigenvalues) {
    std::snprintf(buf, sizeof buf, "%.20g", v);
    eig.push_back(std::string(buf));
  }
  return {{"weight", s.weight},
          {"level", HeckeSpectrum::level},
          {"prime", s.prime},
          {"dim", s.dim},
          {"eigenvalues", eig},
          {"normalized", s.normalized},
          {"angles", s.angles},
          {"fractional", s.fractional}};
}

nlohmann::json to_json(const GapSpectrum& g) {
  return {{"sorted_points", g.sorted_points},
          {"gaps", g.gaps},
          {"distinct_gaps", g.distinct_gaps},
          {"count", g.count}};
}

namespace {

void write_meta_comments(std::ofstream& out, const std::optional<FileMeta>& meta) {
  if (!meta) return;
  out << "# gapdist " << meta->version << "\n";
  out << "# config=" << meta->config_hash << " seed=" << meta->seed << "\n";
}

}  // namespace

void write_angles_csv(const std::string& path, const AngleMultiset& a,
                      const std::optional<FileMeta>& meta) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_angles_csv: cannot open " + path);
  write_meta_comments(out, meta);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out << format_double(a.values[i]) << "\n";
  }
}

AngleMultiset read_angles_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_angles_csv: cannot open " + path);
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    vals.push_back(std::stod(line));
  }
  Eigen::ArrayXd arr =
      Eigen::Map<const Eigen::ArrayXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
  return AngleMultiset::validated(std::move(arr), false, "file:" + path);
}

void write_qexpansion_csv(const std::string& path, const QExpansion& q,
                          const std::optional<FileMeta>& meta) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_qexpansion_csv: cannot open " + path);
  write_meta_comments(out, meta);
  out << "n,a_n\n";
  for (int n = 0; n <= q.n_max; ++n) {
    out << n << "," << q.a(n).to_string() << "\n";
  }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_json_file: cannot open " + path);
  out << j.dump(2) << "\n";
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_json_file: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace gapdist::io
