#include <doctest.h>

#include "bisa/core.hpp"
#include "bisa/errors.hpp"

using namespace bisa;

TEST_CASE("material derives shear modulus from E and nu") {
  Material m(2.7e9, 0.35);
  // 2 * 1.35 rounds, so allow one ulp around the exact quotient
  CHECK(m.shear_modulus() == doctest::Approx(1.0e9).epsilon(1e-15));
  CHECK(m.young_modulus() == 2.7e9);
  CHECK(m.poisson_ratio() == 0.35);
  CHECK(shear_modulus(m) == m.shear_modulus());
}

TEST_CASE("material rejects out-of-range inputs") {
  CHECK_THROWS_AS(Material(0.0, 0.3), DomainError);
  CHECK_THROWS_AS(Material(-1.0, 0.3), DomainError);
  CHECK_THROWS_AS(Material(1e9, -0.1), DomainError);
  CHECK_THROWS_AS(Material(1e9, 0.5), DomainError);  // incompressible limit excluded
  CHECK_NOTHROW(Material(1e9, 0.0));
  CHECK_NOTHROW(Material(1e9, 0.499));
}

TEST_CASE("rectangular section inertias") {
  RectSection s(0.004, 1.0);
  CHECK(s.height() == 0.004);
  CHECK(s.bending_inertia() == doctest::Approx(2.1333333333333334e-11).epsilon(1e-14));
  // polar form: I_p / I = 1 + lambda^2 exactly
  CHECK(s.torsion_inertia() == 2.0 * s.bending_inertia());

  RectSection tall(0.004, 2.0);
  CHECK(tall.height() == 0.008);
  CHECK(tall.bending_inertia() == doctest::Approx(2.0 * 2.1333333333333334e-11).epsilon(1e-14));
  CHECK(tall.torsion_inertia() == doctest::Approx(5.0 * tall.bending_inertia()).epsilon(1e-15));

  CHECK_THROWS_AS(RectSection(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(RectSection(0.004, 0.0), DomainError);
  CHECK_THROWS_AS(RectSection(0.004, -1.0), DomainError);
}

TEST_CASE("bls model validates geometry") {
  Material m(2.7e9, 0.35);
  RectSection s(0.004, 1.0);
  BlsModel model(m, s, 0.08, 0.01, 0.01, 8, 10.0);
  CHECK(model.arc_length() == 0.08);
  CHECK(model.segment_count() == 8);

  CHECK_THROWS_AS(BlsModel(m, s, 0.0, 0.01, 0.01, 8, 10.0), DomainError);
  CHECK_THROWS_AS(BlsModel(m, s, 0.08, 0.0, 0.01, 8, 10.0), DomainError);
  CHECK_THROWS_AS(BlsModel(m, s, 0.08, 0.01, 0.0, 8, 10.0), DomainError);
  CHECK_THROWS_AS(BlsModel(m, s, 0.08, 0.01, 0.01, 1, 10.0), DomainError);
  CHECK_THROWS_AS(BlsModel(m, s, 0.08, 0.01, 0.01, 8, -1.0), DomainError);
  CHECK_NOTHROW(BlsModel(m, s, 0.08, 0.01, 0.01, 2, 0.0));
}

TEST_CASE("chamber stack validates geometry") {
  CHECK_NOTHROW(ChamberStack(9, 0.01, 0.005, 5e-7, 0.08, 0.1));
  CHECK_THROWS_AS(ChamberStack(1, 0.01, 0.005, 5e-7, 0.08, 0.1), DomainError);
  CHECK_THROWS_AS(ChamberStack(9, 0.0, 0.005, 5e-7, 0.08, 0.1), DomainError);
  CHECK_THROWS_AS(ChamberStack(9, 0.01, 0.0, 5e-7, 0.08, 0.1), DomainError);
  CHECK_THROWS_AS(ChamberStack(9, 0.01, 0.005, -1e-9, 0.08, 0.1), DomainError);
  CHECK_THROWS_AS(ChamberStack(9, 0.01, 0.005, 5e-7, -0.1, 0.1), DomainError);
  CHECK_THROWS_AS(ChamberStack(9, 0.01, 0.005, 5e-7, 0.08, -0.1), DomainError);

  ChamberStack raw(9, 0.01, 0.005, 5e-7, 0.08, 0.1);
  CHECK_FALSE(raw.calibrated());
  ChamberStack fit(9, 0.01, 0.005, 5e-7, 0.08, 0.1, true);
  CHECK(fit.calibrated());
}

TEST_CASE("arc state radius keeps the arc length") {
  ArcState arc = ArcState::from_angle(1.5707963267948966, 0.08);
  CHECK(arc.radius() == doctest::Approx(0.050929581789406514).epsilon(1e-14));
  CHECK_FALSE(arc.is_straight());

  ArcState straight = ArcState::from_angle(0.0, 0.08);
  CHECK(straight.is_straight());
  CHECK_THROWS_AS(straight.radius(), DomainError);

  CHECK_THROWS_AS(ArcState::from_angle(0.5, 0.0), DomainError);
}

TEST_CASE("load case validates") {
  LoadCase load(1.0, 45e3);
  CHECK(load.external_force() == 1.0);
  CHECK(load.pressure() == 45e3);
  CHECK_THROWS_AS(LoadCase(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(LoadCase(0.0, -1.0), DomainError);
  CHECK_NOTHROW(LoadCase(0.0, 0.0));
}
