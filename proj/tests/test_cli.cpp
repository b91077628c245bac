#include <cmath>
#include <iterator>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

const char* kCli = VORTEX_CLI_PATH;

std::string small_config_path() {
  static std::string path = [] {
    const std::string p = "/tmp/vortex_cli_test_config.json";
    std::ofstream out(p);
    out << R"({
      "electron": {"energy_ev": 1.0e5, "oam": 1, "waist_m": 5.0e-8},
      "tube": {"radius_m": 1.0e-5, "thickness_m": 1.0e-6, "length_m": 2.0e-5,
               "conductivity_s_per_m": 9.43e6, "rel_permeability": 1.0},
      "sampling": {"z_min_m": -4.0e-5, "z_max_m": 4.0e-5, "n_samples": 201},
      "circuit": {"inductance_h": 0.0},
      "quadrature": {"abs_tol": 1.0e-15, "rel_tol": 1.0e-10, "max_depth": 40}
    })";
    return p;
  }();
  return path;
}

int run(const std::string& args) {
  const std::string command = std::string(kCli) + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<double>> parse_csv(const std::string& path, std::string* header) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  if (header != nullptr) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("cli: exit codes") {
  CHECK(run("current --config /no/such/file.json") == 2);
  CHECK(run("current --config " + small_config_path() + " --frobnicate") == 64);
  CHECK(run("definitely-not-a-subcommand") == 64);
  CHECK(run("--help") == 0);
  CHECK(run("current --config " + small_config_path() + " --output /tmp/vortex_ok.csv") == 0);

  std::ofstream bad("/tmp/vortex_bad_config.json");
  bad << "{\"electron\": {\"energy_ev\": -5}}";
  bad.close();
  CHECK(run("current --config /tmp/vortex_bad_config.json") == 2);

  // A one-level depth budget cannot meet the quadrature tolerance.
  std::ifstream in(small_config_path());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto pos = text.find("\"max_depth\": 40");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 15, "\"max_depth\": 1");
  std::ofstream shallow("/tmp/vortex_shallow_config.json");
  shallow << text;
  shallow.close();
  CHECK(run("current --config /tmp/vortex_shallow_config.json") == 3);
}

TEST_CASE("cli current: per-OAM columns in fixed ratio") {
  const std::string out = "/tmp/vortex_current.csv";
  REQUIRE(run("current --config " + small_config_path() + " --oam-list 1,5,10 --output " + out) ==
          0);
  std::string header;
  const auto rows = parse_csv(out, &header);
  CHECK(header == "z_m,current_A_l1,current_A_l5,current_A_l10");
  REQUIRE(rows.size() == 201);

  double peak1 = 0.0, peak5 = 0.0, peak10 = 0.0;
  for (const auto& row : rows) {
    peak1 = std::max(peak1, std::abs(row[1]));
    peak5 = std::max(peak5, std::abs(row[2]));
    peak10 = std::max(peak10, std::abs(row[3]));
  }
  CHECK(peak1 > 5e-12);
  CHECK(peak1 < 50e-12);
  CHECK(peak5 == doctest::Approx(5.0 * peak1).epsilon(1e-12));
  CHECK(peak10 == doctest::Approx(10.0 * peak1).epsilon(1e-12));

  // oam = 0 gives an all-zero column.
  const std::string zero_out = "/tmp/vortex_current0.csv";
  REQUIRE(run("current --config " + small_config_path() + " --oam-list 0 --output " + zero_out) ==
          0);
  for (const auto& row : parse_csv(zero_out, nullptr)) CHECK(row[1] == 0.0);
}

TEST_CASE("cli: byte-identical output across runs and thread settings") {
  const std::string first = "/tmp/vortex_det_a.csv";
  const std::string second = "/tmp/vortex_det_b.csv";
  REQUIRE(run("current --config " + small_config_path() + " --oam-list 3 --output " + first) == 0);
  REQUIRE(run("current --config " + small_config_path() + " --oam-list 3 --output " + second) ==
          0);
  CHECK(slurp(first) == slurp(second));

  const std::string map_args = "field-map --config " + small_config_path() +
                               " --electron-z -1e-5 --grid-nr 24 --grid-nz 24 --output ";
  setenv("VORTEX_INDUCT_THREADS", "1", 1);
  REQUIRE(run(map_args + first) == 0);
  setenv("VORTEX_INDUCT_THREADS", "5", 1);
  REQUIRE(run(map_args + second) == 0);
  unsetenv("VORTEX_INDUCT_THREADS");
  CHECK(slurp(first) == slurp(second));
  CHECK_FALSE(slurp(first).empty());
}

TEST_CASE("cli autocorr: normalized to the unit-OAM zero-delay value") {
  const std::string out = "/tmp/vortex_autocorr.csv";
  REQUIRE(run("autocorr --config " + small_config_path() + " --oam-list 1,5,10 --output " + out) ==
          0);
  std::string header;
  const auto rows = parse_csv(out, &header);
  CHECK(header == "tau_s,c_norm_l1,c_norm_l5,c_norm_l10");
  const auto& centre = rows[rows.size() / 2];
  CHECK(centre[0] == 0.0);
  CHECK(centre[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(centre[2] == doctest::Approx(25.0).epsilon(1e-9));
  CHECK(centre[3] == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("cli circuit: inductance list columns") {
  const std::string out = "/tmp/vortex_circuit.csv";
  REQUIRE(run("circuit --config " + small_config_path() +
              " --inductance-list 0,0.1 --output " + out) == 0);
  std::string header;
  const auto rows = parse_csv(out, &header);
  CHECK(header == "t_s,emf_v,current_A_0pH,current_A_0.1pH");
  double peak_bare = 0.0, peak_loaded = 0.0;
  for (const auto& row : rows) {
    peak_bare = std::max(peak_bare, std::abs(row[2]));
    peak_loaded = std::max(peak_loaded, std::abs(row[3]));
  }
  CHECK(peak_loaded < peak_bare);
}

TEST_CASE("cli visibility: duality columns") {
  const std::string out = "/tmp/vortex_visibility.csv";
  REQUIRE(run("visibility --lambda-list 0,0.5,1.0 --output " + out) == 0);
  std::string header;
  const auto rows = parse_csv(out, &header);
  CHECK(header == "alpha_re,alpha_im,visibility,purity");
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    const double alpha_mod = std::hypot(row[0], row[1]);
    CHECK(row[2] == doctest::Approx(alpha_mod).epsilon(1e-12));
    CHECK(row[3] == doctest::Approx(0.5 * (1.0 + alpha_mod * alpha_mod)).epsilon(1e-12));
  }
  CHECK(rows[0][2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cli offset: ratio column against unit OAM") {
  const std::string out = "/tmp/vortex_offset.csv";
  REQUIRE(run("offset --config " + small_config_path() +
              " --oam-list 5 --offset-max 5e-6 --output " + out) == 0);
  std::string header;
  const auto rows = parse_csv(out, &header);
  CHECK(header == "offset_m,oam,peak_current_A,ratio_to_l1");
  for (const auto& row : rows) {
    CHECK(row[1] == 5.0);
    CHECK(row[3] == doctest::Approx(5.0).epsilon(1e-12));
  }
  CHECK(rows.front()[2] > rows.back()[2]);
}

TEST_CASE("cli --human: convenience columns appended") {
  const std::string out = "/tmp/vortex_human.csv";
  REQUIRE(run("current --config " + small_config_path() + " --human --output " + out) == 0);
  std::string header;
  const auto rows = parse_csv(out, &header);
  CHECK(header == "z_m,current_A,z_um,current_pA");
  for (const auto& row : rows) {
    CHECK(row[2] == doctest::Approx(row[0] * 1e6).epsilon(1e-12));
    CHECK(row[3] == doctest::Approx(row[1] * 1e12).epsilon(1e-12));
  }
}
