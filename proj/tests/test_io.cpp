#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gapdist/discrepancy.hpp"
#include "gapdist/io.hpp"
#include "gapdist/measures.hpp"
#include "gapdist/selberg.hpp"
#include "gapdist/sequences.hpp"

using namespace gapdist;

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("density json round trip") {
  const auto d = measures::vertical_sato_tate_density(3.0, 12);
  const auto j = io::to_json(d);
  CHECK(j.at("m_max") == 12);
  CHECK(j.at("mass") == 1.0);
  CHECK(j.at("closed_form").at("kind") == "vertical_sato_tate");

  const auto back = io::density_from_json(j);
  CHECK(back.m_max() == d.m_max());
  for (int m = -12; m <= 12; ++m) CHECK(back.coeff(m) == d.coeff(m));
  REQUIRE(back.closed_form.has_value());
  CHECK(back.closed_form->q == 3.0);
  CHECK(back.closed_form->scale == d.closed_form->scale);

  // Symmetry enforcement on parse.
  auto bad = j;
  bad["coeffs"][0][1] = 123.0;  // only breaks one side of the pair
  CHECK_THROWS_AS(io::density_from_json(bad), std::invalid_argument);

  // Null closed form round-trips too.
  const auto st = measures::sato_tate_density(6);
  const auto st_back = io::density_from_json(io::to_json(st));
  CHECK_FALSE(st_back.closed_form.has_value());
  for (int m = 0; m <= 6; ++m) CHECK(st_back.coeff(m) == st.coeff(m));

  auto unknown = io::to_json(st);
  unknown["closed_form"] = {{"kind", "mystery"}, {"params", {{"q", 2.0}, {"scale", 1.0}}}};
  CHECK_THROWS_AS(io::density_from_json(unknown), std::invalid_argument);
}

TEST_CASE("multiset json and csv round trip") {
  const auto a = seq::kronecker_multiset(std::sqrt(2.0), 37);
  const auto j = io::to_json(a);
  const auto back = io::multiset_from_json(j);
  REQUIRE(back.size() == a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) CHECK(back.values[i] == a.values[i]);
  CHECK(back.source == a.source);

  const auto path = temp_path("gapdist_test_angles.csv");
  io::FileMeta meta{"0.0-test", io::config_hash("test"), 7};
  io::write_angles_csv(path, a, meta);
  const auto csv = io::read_angles_csv(path);
  REQUIRE(csv.size() == a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    CHECK(csv.values[i] == a.values[i]);  // 17 significant digits round trip
  }
  std::remove(path.c_str());
}

TEST_CASE("trig polynomial json round trip") {
  const auto p = selberg::selberg_poly(4, 0.2, 0.7, -1);
  const auto back = io::trig_polynomial_from_json(io::to_json(p));
  CHECK(back.degree == p.degree);
  for (int m = -p.degree; m <= p.degree; ++m) {
    CHECK(back.coeff(m).real() == p.coeff(m).real());
    CHECK(back.coeff(m).imag() == p.coeff(m).imag());
  }
}

TEST_CASE("report and spectrum json") {
  std::vector<AngleMultiset> as{seq::kronecker_multiset(std::sqrt(2.0), 100)};
  std::vector<FourierDensity> ts{measures::uniform_density(8)};
  const auto rep = discrepancy::erdos_turan_bound(as, ts, Interval(0.25, 0.5), 6);
  const auto j = io::to_json(rep);
  CHECK(j.at("M") == 6);
  CHECK(j.at("interval").at("alpha") == 0.25);
  CHECK(j.at("bound_terms").size() == 6);
  CHECK(j.at("bound_terms")[2][0] == 3);
  CHECK(j.at("satisfied") == true);

  const auto sp = hecke::eigenangles(12, 3);
  const auto js = io::to_json(sp);
  CHECK(js.at("level") == 1);
  CHECK(js.at("dim") == 1);
  // 20-digit decimal strings round-trip the stored doubles exactly.
  CHECK(std::stod(js.at("eigenvalues")[0].get<std::string>()) == sp.eigenvalues[0]);
  CHECK(std::stod(js.at("eigenvalues")[0].get<std::string>()) ==
        doctest::Approx(252.0).epsilon(1e-12));

  const auto g = seq::gap_spectrum(as[0]);
  const auto jg = io::to_json(g);
  CHECK(jg.at("count").get<int>() <= 3);
  CHECK(jg.at("gaps").size() == 100);
}

TEST_CASE("q-expansion csv export") {
  const auto path = temp_path("gapdist_test_qexp.csv");
  io::write_qexpansion_csv(path, qexp::delta(8));
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,a_n");
  std::getline(in, line);
  CHECK(line == "0,0");
  std::getline(in, line);
  CHECK(line == "1,1");
  std::getline(in, line);
  CHECK(line == "2,-24");
  std::remove(path.c_str());
}

TEST_CASE("config hash and float formatting") {
  CHECK(io::config_hash("a") != io::config_hash("b"));
  CHECK(io::config_hash("same") == io::config_hash("same"));
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(1.0) == "1");
}
