#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qdot/constants.hpp"
#include "qdot/errors.hpp"
#include "qdot/units.hpp"

using namespace qdot;
using units::MaterialParams;

TEST_CASE("vacuum scales reduce to the bare atomic units") {
  auto s = units::derive_scales({1.0, 1.0, 0.0});
  CHECK(s.hartree_mev == doctest::Approx(27211.386245988).epsilon(1e-12));
  CHECK(s.bohr_nm == doctest::Approx(0.0529177210903).epsilon(1e-12));
  CHECK(s.omega0_ha == 0.0);
}

TEST_CASE("GaAs scales match the hand-multiplied CODATA products") {
  // Oracle: direct evaluation of Ha* = (m*/m0)/eps^2 * 27211.386... meV and
  // a* = eps/(m*/m0) * 0.0529177... nm with the GaAs parameters.
  auto s = units::derive_scales({0.067, 12.4, 4.0});
  const double hartree_expected = 27211.386245988 * 0.067 / (12.4 * 12.4);
  const double bohr_expected = 0.0529177210903 * 12.4 / 0.067;
  CHECK(s.hartree_mev == doctest::Approx(hartree_expected).epsilon(1e-14));
  CHECK(s.bohr_nm == doctest::Approx(bohr_expected).epsilon(1e-14));
  CHECK(s.hartree_mev == doctest::Approx(11.857).epsilon(1e-3));
  CHECK(s.bohr_nm == doctest::Approx(9.794).epsilon(1e-3));
  CHECK(s.omega0_ha == doctest::Approx(0.33735).epsilon(1e-4));
}

TEST_CASE("zero confinement gives omega0_ha = 0 exactly") {
  auto s = units::derive_scales({0.067, 12.4, 0.0});
  CHECK(s.omega0_ha == 0.0);
}

TEST_CASE("hartree * bohr^2 * mass is material independent") {
  // This product equals hbar^2/m0 in (meV, nm) units; it must not depend on
  // the material at all.
  auto ref = units::derive_scales({1.0, 1.0, 0.0});
  const double invariant = ref.hartree_mev * ref.bohr_nm * ref.bohr_nm;
  for (MaterialParams p : {MaterialParams{0.067, 12.4, 4.0},
                           MaterialParams{0.19, 11.7, 1.0},
                           MaterialParams{1.4, 7.3, 0.0},
                           MaterialParams{0.023, 15.15, 2.5}}) {
    auto s = units::derive_scales(p);
    const double product =
        s.hartree_mev * s.bohr_nm * s.bohr_nm * p.effective_mass_ratio;
    CHECK(product == doctest::Approx(invariant).epsilon(1e-12));
  }
}

TEST_CASE("scale covariance in the dielectric constant") {
  auto a = units::derive_scales({0.1, 5.0, 0.0});
  auto b = units::derive_scales({0.1, 10.0, 0.0});
  CHECK(b.hartree_mev == doctest::Approx(a.hartree_mev / 4.0).epsilon(1e-14));
  CHECK(b.bohr_nm == doctest::Approx(a.bohr_nm * 2.0).epsilon(1e-14));
}

TEST_CASE("cyclotron energy of 1 tesla at the bare electron mass") {
  // Oracle: hbar e / m0 expressed in meV per tesla from the raw CODATA
  // values, assembled independently of the implementation's factoring.
  const MaterialParams bare{1.0, 1.0, 0.0};
  const double mev_per_tesla = constants::hbar_si *
                               constants::elementary_charge_si /
                               (constants::electron_mass_si * constants::mev_si);
  CHECK(units::cyclotron_to_tesla(0.0, bare) == 0.0);
  CHECK(units::cyclotron_to_tesla(0.11577, bare) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(units::cyclotron_to_tesla(mev_per_tesla, bare) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("GaAs cyclotron chain hits the published spot value") {
  const MaterialParams gaas{0.067, 12.4, 4.0};
  CHECK(units::cyclotron_to_tesla(8.751, gaas) ==
        doctest::Approx(5.065).epsilon(2e-3));
}

TEST_CASE("cyclotron conversion is linear and invertible") {
  const MaterialParams gaas{0.067, 12.4, 4.0};
  const double a = 1.37, b = 4.25;
  CHECK(units::cyclotron_to_tesla(a + b, gaas) ==
        doctest::Approx(units::cyclotron_to_tesla(a, gaas) +
                        units::cyclotron_to_tesla(b, gaas))
            .epsilon(1e-14));
  CHECK(units::tesla_to_cyclotron_mev(units::cyclotron_to_tesla(a, gaas),
                                      gaas) == doctest::Approx(a).epsilon(1e-14));
}

TEST_CASE("invalid material parameters are rejected") {
  CHECK_THROWS_AS(units::derive_scales({0.0, 12.4, 4.0}), InvalidInput);
  CHECK_THROWS_AS(units::derive_scales({-0.1, 12.4, 4.0}), InvalidInput);
  CHECK_THROWS_AS(units::derive_scales({0.067, 0.5, 4.0}), InvalidInput);
  CHECK_THROWS_AS(units::derive_scales({0.067, 12.4, -1.0}), InvalidInput);
  CHECK_THROWS_AS(
      units::cyclotron_to_tesla(-1.0, MaterialParams{1.0, 1.0, 0.0}),
      InvalidInput);
}

TEST_CASE("material presets") {
  auto gaas = units::material_preset("gaas", 4.0);
  REQUIRE(gaas.has_value());
  CHECK(gaas->effective_mass_ratio == 0.067);
  CHECK(gaas->dielectric_constant == 12.4);
  CHECK(gaas->confinement_energy_mev == 4.0);

  auto vac = units::material_preset("vacuum", 0.0);
  REQUIRE(vac.has_value());
  CHECK(vac->effective_mass_ratio == 1.0);
  CHECK(vac->dielectric_constant == 1.0);

  CHECK(!units::material_preset("unobtainium", 1.0).has_value());
}
