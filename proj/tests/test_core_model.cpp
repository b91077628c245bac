#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vortex/core_model.hpp"

using namespace vortex;

namespace {
const PhysicalConstants& kConst = PhysicalConstants::codata2018();
}

TEST_CASE("constants: CODATA self consistency") {
  CHECK(kConst.self_consistent());
  CHECK(kConst.electron_rest_energy_ev() == doctest::Approx(510998.95).epsilon(1e-7));
  CHECK(kConst.bohr_magneton ==
        doctest::Approx(kConst.elementary_charge * kConst.hbar / (2.0 * kConst.electron_mass))
            .epsilon(1e-9));
}

TEST_CASE("kinematics: 100 keV electron") {
  const ElectronState electron{1.0e5, 1, 5e-8};
  const Kinematics kin = kinematics_from_energy(electron, kConst);
  CHECK(kin.gamma == doctest::Approx(1.0 + 1.0e5 / 510998.95).epsilon(1e-9));
  CHECK(kin.gamma == doctest::Approx(1.19569).epsilon(1e-5));
  CHECK(kin.beta == doctest::Approx(0.5482).epsilon(1e-3));
  CHECK(kin.gamma == doctest::Approx(1.0 / std::sqrt(1.0 - kin.beta * kin.beta)).epsilon(1e-12));
  CHECK(kin.speed == kin.beta * kConst.light_speed);
  CHECK(kin.momentum ==
        doctest::Approx(kin.gamma * kConst.electron_mass * kin.beta * kConst.light_speed));
}

TEST_CASE("kinematics: rest limit and round trip") {
  const Kinematics slow = kinematics_from_energy({1e-6, 0, 1e-8}, kConst);
  CHECK(slow.gamma == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(slow.beta < 1e-5);

  for (double energy : {300.0, 1e3, 1e5, 3e6}) {
    const Kinematics kin = kinematics_from_energy({energy, 0, 1e-8}, kConst);
    CHECK(kinetic_energy_from_gamma(kin.gamma, kConst) ==
          doctest::Approx(energy).epsilon(1e-12));
  }
  // At eV scale the whole kinetic energy lives in the last ~2e-16 of gamma,
  // so the round trip can only be good to ~1e-10.
  const Kinematics ev_scale = kinematics_from_energy({1.0, 0, 1e-8}, kConst);
  CHECK(kinetic_energy_from_gamma(ev_scale.gamma, kConst) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(kinematics_from_energy({-1.0, 0, 1e-8}, kConst), std::invalid_argument);
}

TEST_CASE("lg_radial_density: vortex ring shape") {
  const double w0 = 62e-9;
  CHECK(lg_radial_density(0.0, {1e5, 3, w0}) == 0.0);
  CHECK(lg_radial_density(0.0, {1e5, 0, w0}) == 1.0);
  CHECK(lg_radial_density(0.5 * w0, {1e5, 0, w0}) < 1.0);
  CHECK_THROWS_AS(lg_radial_density(-1e-9, {1e5, 1, w0}), std::domain_error);
  CHECK_THROWS_AS(lg_radial_density(1e-9, {1e5, 1, w0, 1, 0}), std::invalid_argument);
}

TEST_CASE("lg_radial_density: argmax sits at w0 sqrt(l/2)") {
  const double w0 = 47e-9;
  for (int l = 1; l <= 10; ++l) {
    const ElectronState electron{1e5, l, w0};
    const double found = oracle::argmax(
        [&](double r) { return lg_radial_density(r, electron); }, 1e-3 * w0, 6.0 * w0);
    const double expected = w0 * std::sqrt(l / 2.0);
    CHECK(std::abs(found - expected) / expected <= 1e-9);
  }
}

TEST_CASE("loop_model: dipole moment and defining relation") {
  const double w0 = 5e-8;
  const double current_expected =
      kConst.elementary_charge * kConst.hbar /
      (oracle::kPi * kConst.electron_mass * w0 * w0);
  for (int l = -10; l <= 10; ++l) {
    if (l == 0) continue;
    const LoopModel loop = loop_model({1e5, l, w0}, kConst);
    CHECK(loop.dipole_moment == l * kConst.bohr_magneton);
    CHECK(std::signbit(loop.dipole_moment) == (l < 0));
    CHECK(loop.loop_radius == doctest::Approx(w0 * std::sqrt(std::abs(l) / 2.0)));
    // The loop current has no OAM dependence; l only enters via the radius.
    CHECK(loop.loop_current == doctest::Approx(current_expected).epsilon(1e-14));
    CHECK(loop.loop_current * oracle::kPi * loop.loop_radius * loop.loop_radius ==
          doctest::Approx(std::abs(loop.dipole_moment)).epsilon(1e-13));
  }
}

TEST_CASE("tube: validation and loop clearance") {
  const Tube tube{1e-5, 1e-6, 2e-5, 9.43e6, 1.0};
  CHECK_NOTHROW(validate(tube));
  Tube bad = tube;
  bad.conductivity = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = tube;
  bad.radius = -1e-5;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  CHECK(tube_radius_adequate(tube, loop_model({1e5, 100, 5e-8}, kConst)));
  // 5x the ring radius just above the wall radius.
  CHECK_FALSE(tube_radius_adequate(tube, loop_model({1e5, 2, 2.1e-6}, kConst)));
}

TEST_CASE("boost_four_current: identity at beta = 0") {
  const FourCurrent rest{-3.0, 0.0, 1.7, 0.0};
  const Kinematics still{1.0, 0.0, 0.0, 0.0};
  const FourCurrent lab = boost_four_current(rest, still);
  CHECK(lab.charge_component == rest.charge_component);
  CHECK(lab.azimuthal == rest.azimuthal);
  CHECK(lab.longitudinal == rest.longitudinal);
}

TEST_CASE("boost_four_current: lab frame pattern") {
  // Rest frame (-c e P, 0, J_phi, 0) must boost to
  // (-c e P gamma, 0, J_phi, -gamma beta c e P).
  const double charge = -4.2;  // stands in for -c e P
  const double azimuthal = 0.9;
  const ElectronState electron{1e5, 1, 5e-8};
  const Kinematics kin = kinematics_from_energy(electron, kConst);
  const FourCurrent lab = boost_four_current({charge, 0.0, azimuthal, 0.0}, kin);
  CHECK(lab.charge_component == doctest::Approx(kin.gamma * charge).epsilon(1e-14));
  CHECK(lab.azimuthal == azimuthal);
  CHECK(lab.radial == 0.0);
  CHECK(lab.longitudinal == doctest::Approx(kin.gamma * kin.beta * charge).epsilon(1e-14));
}

TEST_CASE("boost_four_current: Minkowski norm preserved") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> amplitude(-5.0, 5.0);
  std::uniform_real_distribution<double> energy(10.0, 5e5);
  for (int trial = 0; trial < 50; ++trial) {
    const FourCurrent rest{amplitude(rng), 0.0, amplitude(rng), 0.0};
    const Kinematics kin = kinematics_from_energy({energy(rng), 1, 5e-8}, kConst);
    const FourCurrent lab = boost_four_current(rest, kin);
    const double norm_rest = rest.charge_component * rest.charge_component -
                             rest.longitudinal * rest.longitudinal;
    const double norm_lab =
        lab.charge_component * lab.charge_component - lab.longitudinal * lab.longitudinal;
    CHECK(norm_lab == doctest::Approx(norm_rest).epsilon(1e-12));
    CHECK(lab.azimuthal == rest.azimuthal);
  }
}
