#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include "bisa/errors.hpp"
#include "bisa/lateral.hpp"

using namespace bisa;

namespace {

constexpr double kPi = 3.141592653589793;

BlsModel default_model() {
  return BlsModel(Material(2.7e9, 0.35), RectSection(0.004, 1.0), 0.08, 0.01, 0.01, 8,
                  10.0);
}

BlsModel unit_model(double poisson_ratio = 0.35, double aspect_ratio = 1.0) {
  // E * I = 1 exactly: E = 12/lambda makes I = lambda/12 cancel.
  return BlsModel(Material(12.0 / aspect_ratio, poisson_ratio),
                  RectSection(1.0, aspect_ratio), 1.0, 1.0, 1.0, 2, 0.0);
}

}  // namespace

TEST_CASE("influence functions match high-precision reference values") {
  // reference values computed with 50-digit decimal arithmetic
  struct Ref {
    double alpha, bending, torsion;
  };
  const Ref refs[] = {
      {0.3, 1.309538022406098, 0.01780815201180579},
      {0.5, 1.268232121536828, 0.048533407794180035},
      {0.9, 1.1332679960518584, 0.14709513560813178},
      {kPi / 2, 0.8105694691387022, 0.36761020369133923},
      {kPi, 0.20264236728467555, 0.6079271018540267},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.alpha);
    CHECK(influence_bending(r.alpha) == doctest::Approx(r.bending).epsilon(5e-15));
    CHECK(influence_torsion(r.alpha) == doctest::Approx(r.torsion).epsilon(5e-15));
  }
}

TEST_CASE("influence functions approach their zero-angle limits smoothly") {
  // series branch: A_bending -> 4/3, A_torsion -> alpha^2/5
  CHECK(influence_bending(1e-6) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(influence_torsion(1e-6) == doctest::Approx(1e-12 / 5.0).epsilon(1e-6));
  CHECK(influence_bending(1e-3) == doctest::Approx(4.0 / 3.0).epsilon(1e-5));

  // no jump across the series/direct switchover regions
  for (double alpha : {0.4999, 0.5001, 0.8999, 0.9001}) {
    const double h = 1e-7;
    const double lo = influence_bending(alpha - h) + influence_torsion(alpha - h);
    const double hi = influence_bending(alpha + h) + influence_torsion(alpha + h);
    CHECK(std::abs(hi - lo) < 1e-6);
  }
}

TEST_CASE("influence functions reject angles outside (0, pi]") {
  CHECK_THROWS_AS(influence_bending(0.0), DomainError);
  CHECK_THROWS_AS(influence_bending(-0.1), DomainError);
  CHECK_THROWS_AS(influence_bending(kPi + 0.01), DomainError);
  CHECK_THROWS_AS(influence_torsion(0.0), DomainError);
  CHECK_NOTHROW(influence_bending(kPi));
}

TEST_CASE("torsion share grows with the bending angle") {
  double previous = 0.0;
  for (int deg = 1; deg <= 180; ++deg) {
    const double alpha = deg * kPi / 180.0;
    const double ratio = influence_torsion(alpha) / influence_bending(alpha);
    CHECK(ratio > previous);
    previous = ratio;
  }
  CHECK(previous == doctest::Approx(3.0).epsilon(1e-12));  // A_t/A_b at pi
}

TEST_CASE("evaluation function reference values") {
  CHECK(evaluation_function(kPi / 2, 0.35, 1.0) ==
        doctest::Approx(0.7652027161619068).epsilon(5e-15));
  CHECK(evaluation_function(kPi, 0.35, 1.0) ==
        doctest::Approx(0.9771885545633028).epsilon(5e-15));
  // torsion term vanishes for tall sections
  CHECK(evaluation_function(kPi / 2, 0.35, 1e8) ==
        doctest::Approx(1.2337005501361697).epsilon(1e-9));
  // straight limit F -> 3/4
  CHECK(evaluation_function(1e-6, 0.35, 1.0) == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("lateral stiffness of the reference finger at 90 degrees") {
  const LateralResult r = lateral_stiffness(default_model(), kPi / 2);
  CHECK(r.stiffness_n_per_m == doctest::Approx(344.3412222728581).epsilon(1e-13));
  CHECK(r.evaluation == doctest::Approx(0.7652027161619068).epsilon(5e-15));
  CHECK(r.a_bending == doctest::Approx(0.8105694691387022).epsilon(5e-15));
  CHECK(r.a_torsion == doctest::Approx(0.36761020369133923).epsilon(5e-15));
}

TEST_CASE("lateral stiffness recovers the straight-cantilever limit") {
  const BlsModel model = default_model();
  const double ei = model.material().young_modulus() * model.section().bending_inertia();
  const double c = model.arc_length();
  const double textbook = 3.0 * ei / (c * c * c);
  const double k = lateral_stiffness(model, 1e-5).stiffness_n_per_m;
  CHECK(std::abs(k - textbook) / textbook < 1e-6);
}

TEST_CASE("lateral stiffness unit-parameter spot value") {
  // E*I = 1, C = 1: k = 4*F(pi/2) ~ 3.0608 N/m
  const double k = lateral_stiffness(unit_model(), kPi / 2).stiffness_n_per_m;
  CHECK(k == doctest::Approx(3.0608108646476274).epsilon(1e-12));
}

TEST_CASE("lateral stiffness scale laws") {
  const double alpha = 1.1;
  const BlsModel base = default_model();
  const double k0 = lateral_stiffness(base, alpha).stiffness_n_per_m;

  // doubling the arc length divides the stiffness by 8
  BlsModel longer(base.material(), base.section(), 2.0 * base.arc_length(),
                  base.structure_height(), base.segment_length(), base.segment_count(),
                  base.pretension());
  CHECK(lateral_stiffness(longer, alpha).stiffness_n_per_m ==
        doctest::Approx(k0 / 8.0).epsilon(1e-12));

  // stiffness is linear in E
  BlsModel stiffer(Material(2.0 * base.material().young_modulus(),
                            base.material().poisson_ratio()),
                   base.section(), base.arc_length(), base.structure_height(),
                   base.segment_length(), base.segment_count(), base.pretension());
  CHECK(lateral_stiffness(stiffer, alpha).stiffness_n_per_m ==
        doctest::Approx(2.0 * k0).epsilon(1e-12));

  // F(alpha) is dimensionless: joint scaling of b and C leaves it unchanged
  BlsModel scaled(base.material(), RectSection(3.0 * 0.004, 1.0), 3.0 * base.arc_length(),
                  base.structure_height(), base.segment_length(), base.segment_count(),
                  base.pretension());
  CHECK(lateral_stiffness(scaled, alpha).evaluation ==
        doctest::Approx(lateral_stiffness(base, alpha).evaluation).epsilon(1e-14));
}

TEST_CASE("quadrature agrees with the closed form across random draws") {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> alpha_dist(0.05, kPi);
  std::uniform_real_distribution<double> nu_dist(0.0, 0.49);
  std::uniform_real_distribution<double> lambda_dist(0.2, 5.0);
  for (int i = 0; i < 25; ++i) {
    const double alpha = alpha_dist(rng);
    const double nu = nu_dist(rng);
    const double lambda = lambda_dist(rng);
    BlsModel model(Material(1e9, nu), RectSection(0.004, lambda), 0.08, 0.01, 0.01, 8,
                   10.0);
    const double closed = lateral_stiffness(model, alpha).stiffness_n_per_m;
    const double quad = lateral_stiffness_by_quadrature(model, alpha, 4096);
    CAPTURE(alpha);
    CAPTURE(nu);
    CAPTURE(lambda);
    CHECK(std::abs(quad - closed) / closed < 1e-9);
  }
}

TEST_CASE("quadrature converges: panel halving is stable past 1024 panels") {
  const BlsModel model = default_model();
  const double at_1024 = lateral_stiffness_by_quadrature(model, kPi / 2, 1024);
  const double at_2048 = lateral_stiffness_by_quadrature(model, kPi / 2, 2048);
  CHECK(std::abs(at_2048 - at_1024) / at_1024 < 1e-9);
}

TEST_CASE("quadrature validates the panel count") {
  const BlsModel model = default_model();
  CHECK_THROWS_AS(lateral_stiffness_by_quadrature(model, 1.0, 8), DomainError);
  CHECK_THROWS_AS(lateral_stiffness_by_quadrature(model, 1.0, 17), DomainError);
  CHECK_NOTHROW(lateral_stiffness_by_quadrature(model, 1.0, 16));
}

TEST_CASE("working condition compares tendon moment against load moment") {
  Material m(2.7e9, 0.35);
  RectSection s(0.004, 1.0);

  // boundary: F_t*h == F_ext*L
  BlsModel boundary(m, s, 0.08, 0.01, 0.1, 8, 10.0);
  WorkingCondition wc = working_condition(boundary, LoadCase(1.0, 0.0));
  CHECK(wc.satisfied);
  CHECK(wc.margin_nm == doctest::Approx(0.0).epsilon(1e-15));

  // slack tendon fails under any load
  BlsModel slack(m, s, 0.08, 0.01, 0.1, 8, 0.0);
  CHECK_FALSE(working_condition(slack, LoadCase(0.5, 0.0)).satisfied);

  // margin 0.1 N*m at doubled pretension
  BlsModel firm(m, s, 0.08, 0.01, 0.1, 8, 20.0);
  WorkingCondition firm_wc = working_condition(firm, LoadCase(1.0, 0.0));
  CHECK(firm_wc.satisfied);
  CHECK(firm_wc.margin_nm == doctest::Approx(0.1).epsilon(1e-12));

  // margin is linear with opposite signs in F_t and F_ext
  const double m0 = working_condition(firm, LoadCase(0.0, 0.0)).margin_nm;
  const double m1 = working_condition(firm, LoadCase(1.0, 0.0)).margin_nm;
  const double m2 = working_condition(firm, LoadCase(2.0, 0.0)).margin_nm;
  CHECK(m1 - m2 == doctest::Approx(m0 - m1).epsilon(1e-12));
  CHECK(m0 > m1);
}

TEST_CASE("evaluation sweep is row-major and thread-count invariant") {
  std::vector<double> alphas;
  for (int deg = 5; deg <= 180; deg += 5) alphas.push_back(deg * kPi / 180.0);
  const std::vector<double> lambdas{0.25, 0.5, 1.0, 2.0};

  const SweepGrid serial = sweep_evaluation(alphas, lambdas, 0.35, 1);
  const SweepGrid parallel = sweep_evaluation(alphas, lambdas, 0.35, 4);

  REQUIRE(serial.values().size() == alphas.size() * lambdas.size());
  CHECK(serial.values() == parallel.values());  // bitwise equal

  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      CHECK(serial.value(i, j) == evaluation_function(alphas[i], 0.35, lambdas[j]));
    }
  }
}

TEST_CASE("sweep validates its grid") {
  const std::vector<double> empty;
  const std::vector<double> lambdas{1.0};
  CHECK_THROWS_AS(sweep_evaluation(empty, lambdas, 0.35), DomainError);

  const std::vector<double> decreasing{1.0, 0.5};
  CHECK_THROWS_AS(sweep_evaluation(decreasing, lambdas, 0.35), DomainError);

  const std::vector<double> alphas{0.5, 1.0};
  CHECK_THROWS_AS(sweep_evaluation(alphas, empty, 0.35), DomainError);
}

TEST_CASE("thread count resolution respects the environment cap") {
  ::setenv("BISA_MECH_THREADS", "2", 1);
  CHECK(resolve_thread_count(0, 1000) == 2);
  ::unsetenv("BISA_MECH_THREADS");
  CHECK(resolve_thread_count(3, 1000) == 3);
  CHECK(resolve_thread_count(8, 4) == 4);  // never more threads than work
  CHECK(resolve_thread_count(1, 0) == 1);
}

TEST_CASE("aspect ratio recommendation picks the smallest monotone candidate") {
  const std::vector<double> candidates{0.25, 0.5, 1.0, 2.0};
  const AspectRatioRecommendation rec =
      recommend_aspect_ratio(candidates, 0.35, 0.004, 0.008, 0.0, 180.0);
  REQUIRE(rec.aspect_ratio.has_value());
  CHECK(*rec.aspect_ratio == 1.0);
  REQUIRE(rec.candidates.size() == 4);
  CHECK(rec.candidates[0].aspect_ratio == 0.25);
  CHECK_FALSE(rec.candidates[0].monotone);
  CHECK_FALSE(rec.candidates[1].monotone);
  CHECK(rec.candidates[2].monotone);
  CHECK(rec.candidates[0].reason != "");
  CHECK(rec.candidates[2].reason == "");
}

TEST_CASE("aspect ratio recommendation reports infeasible sections") {
  // lambda = 2 gives height 8 mm > 6 mm limit; no other candidate
  const std::vector<double> only_tall{2.0};
  const AspectRatioRecommendation rec =
      recommend_aspect_ratio(only_tall, 0.35, 0.004, 0.006, 0.0, 180.0);
  CHECK_FALSE(rec.aspect_ratio.has_value());
  REQUIRE(rec.candidates.size() == 1);
  CHECK_FALSE(rec.candidates[0].feasible);

  // lambda = 0.25 fits but is not monotone
  const std::vector<double> only_flat{0.25};
  const AspectRatioRecommendation flat =
      recommend_aspect_ratio(only_flat, 0.35, 0.004, 0.008, 0.0, 180.0);
  CHECK_FALSE(flat.aspect_ratio.has_value());
  CHECK(flat.candidates[0].feasible);
  CHECK_FALSE(flat.candidates[0].monotone);
}

TEST_CASE("aspect ratio recommendation validates input") {
  const std::vector<double> empty;
  CHECK_THROWS_AS(recommend_aspect_ratio(empty, 0.35, 0.004, 0.008, 0.0, 180.0),
                  DomainError);
  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(recommend_aspect_ratio(one, 0.35, 0.0, 0.008, 0.0, 180.0), DomainError);
}
