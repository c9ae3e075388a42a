#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "gapdist/angle_multiset.hpp"
#include "gapdist/discrepancy.hpp"
#include "gapdist/fourier_density.hpp"
#include "gapdist/hecke.hpp"
#include "gapdist/selberg.hpp"
#include "gapdist/sequences.hpp"

namespace gapdist::io {

/// Provenance header carried by every emitted file.
struct FileMeta {
  std::string version;
  std::string config_hash;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

/// Doubles formatted with 17 significant digits (round-trip exact).
std::string format_double(double v);

/// FNV-1a of a canonical config string, as 16 hex characters.
std::string config_hash(const std::string& canonical);

nlohmann::json to_json(const FourierDensity& d);
FourierDensity density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AngleMultiset& a);
AngleMultiset multiset_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TrigPolynomial& p);
TrigPolynomial trig_polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DiscrepancyReport& r);

nlohmann::json to_json(const HeckeSpectrum& s);

nlohmann::json to_json(const GapSpectrum& g);

/// One value per line, 17 significant digits; `meta` becomes '#' comment
/// lines at the top.
void write_angles_csv(const std::string& path, const AngleMultiset& a,
                      const std::optional<FileMeta>& meta = std::nullopt);
AngleMultiset read_angles_csv(const std::string& path);

void write_qexpansion_csv(const std::string& path, const QExpansion& q,
                          const std::optional<FileMeta>& meta = std::nullopt);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

}  // namespace gapdist::io
