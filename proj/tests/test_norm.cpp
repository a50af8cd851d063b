#include <doctest.h>

#include <cmath>

#include "goa2/catalog.hpp"
#include "goa2/norm.hpp"
#include "goa2/rng.hpp"

using namespace goa2;

namespace {

Vector generic_m_vector(const DecomposedSpace& space, TrialRng& rng) {
  while (true) {
    Vector v = rng.unit_sphere(space.m());
    if (std::min(space.m1().project(v).norm(), space.m2().project(v).norm()) >= 1e-3)
      return v;
  }
}

}  // namespace

TEST_CASE("constant profile reduces to the bi-invariant norm") {
  DecomposedSpace space = build_space("T1.5");
  NormContext ctx(space, PhiFunction::parse("1"));
  TrialRng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector v = generic_m_vector(space, rng);
    CHECK(ctx.norm_value(v) == doctest::Approx(v.norm()).epsilon(1e-13));
    const Vector w = ctx.descent_vector(v);
    CHECK((w - v).norm() < 1e-12);
    const Vector z = rng.gaussian(space.algebra()->dim());
    const Vector zm = space.m().project(z);
    CHECK(ctx.fundamental_tensor(v, zm) == doctest::Approx(v.dot(zm)).epsilon(1e-11));
  }
}

TEST_CASE("riemannian profile: squared norm and constant bilinear form") {
  DecomposedSpace space = build_space("T1.8");
  const double a = 0.8, b = 2.3;
  NormContext ctx(space, PhiFunction::riemannian(a, b));
  TrialRng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Vector v = generic_m_vector(space, rng);
    const double n1 = space.m1().project(v).squaredNorm();
    const double n2 = space.m2().project(v).squaredNorm();
    CHECK(ctx.norm_value(v) * ctx.norm_value(v) ==
          doctest::Approx(a * n1 + b * n2).epsilon(1e-12));

    // The slice g_U(U, .) is the U-independent form a<U1,V1> + b<U2,V2>.
    const Vector z = space.m().project(rng.gaussian(space.algebra()->dim()));
    const double expected = a * space.m1().project(v).dot(space.m1().project(z)) +
                            b * space.m2().project(v).dot(space.m2().project(z));
    CHECK(std::abs(ctx.fundamental_tensor(v, z) - expected) < 1e-10);

    // Closed-form descent vector: w = (a U1 + b U2) / phi(theta).
    const auto [phi, dphi] = ctx.phi().eval(ctx.theta(v));
    const Vector expected_w =
        (a * space.m1().project(v) + b * space.m2().project(v)) / phi;
    CHECK((ctx.descent_vector(v) - expected_w).norm() < 1e-12);
  }
}

TEST_CASE("norm is positively 1-homogeneous") {
  DecomposedSpace space = build_space("T1.5");
  NormContext ctx(space, PhiFunction::parse("1 + s^2/4"));
  TrialRng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Vector v = generic_m_vector(space, rng);
    const double base = ctx.norm_value(v);
    for (double lambda : {0.5, 2.0, 10.0}) {
      const double scaled = ctx.norm_value(lambda * v);
      CHECK(std::abs(scaled - lambda * base) / (lambda * base) < 1e-12);
    }
  }
}

TEST_CASE("Euler identity: g_U(U,U) equals the squared norm") {
  DecomposedSpace space = build_space("T1.9");
  for (const char* src : {"sqrt(1 + s^2)", "1 + s^2/4"}) {
    NormContext ctx(space, PhiFunction::parse(src));
    TrialRng rng(24);
    for (int trial = 0; trial < 50; ++trial) {
      const Vector v = generic_m_vector(space, rng);
      const double f = ctx.norm_value(v);
      CHECK(ctx.fundamental_tensor(v, v) == doctest::Approx(f * f).epsilon(1e-12));
    }
  }
}

TEST_CASE("fundamental tensor matches the finite-difference oracle") {
  // Central difference of (1/2) F^2(U + tV) at step 1e-5.
  const double step = 1e-5;
  for (const char* key : {"T1.5", "W6"}) {
    DecomposedSpace space = (key == std::string("W6"))
                                ? build_wallach("W6").metric_split(3)
                                : build_space(key);
    for (const char* src : {"sqrt(1+s^2)", "1+s^2/4", "1"}) {
      NormContext ctx(space, PhiFunction::parse(src));
      TrialRng rng(25);
      double worst = 0.0;
      for (int trial = 0; trial < 100; ++trial) {
        const Vector u = generic_m_vector(space, rng);
        const Vector v = space.m().project(rng.gaussian(space.algebra()->dim()));
        const double fp = ctx.norm_value(u + step * v);
        const double fm = ctx.norm_value(u - step * v);
        const double fd = 0.5 * (fp * fp - fm * fm) / (2.0 * step);
        const double formula = ctx.fundamental_tensor(u, v);
        worst = std::max(worst,
                         std::abs(formula - fd) / std::max(1.0, std::abs(formula)));
      }
      INFO(key << " with " << src);
      CHECK(worst < 1e-6);
    }
  }
}

TEST_CASE("fundamental tensor is linear in V") {
  DecomposedSpace space = build_space("T1.5");
  NormContext ctx(space, PhiFunction::parse("1 + s^2/4"));
  TrialRng rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector u = generic_m_vector(space, rng);
    const Vector x = space.m().project(rng.gaussian(space.algebra()->dim()));
    const Vector y = space.m().project(rng.gaussian(space.algebra()->dim()));
    const double lhs = ctx.fundamental_tensor(u, x + 3.0 * y);
    const double rhs = ctx.fundamental_tensor(u, x) + 3.0 * ctx.fundamental_tensor(u, y);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("descent coefficients stay positive for shipped profiles") {
  for (const char* src : {"sqrt(1+s^2)", "1+s^2/4", "1", "cos(s/2)+2"}) {
    const PhiFunction phi = PhiFunction::parse(src);
    for (int i = 1; i < 1000; ++i) {
      const double s = i / 1000.0;
      const auto [p, dp] = phi.eval(s);
      CHECK(p - s * dp > 0.0);
      CHECK(p - (s - 1.0 / s) * dp > 0.0);
    }
  }
}

TEST_CASE("domain violations throw") {
  DecomposedSpace space = build_space("T1.5");
  NormContext ctx(space, PhiFunction::parse("1 + s^2/4"));
  const int n = space.algebra()->dim();
  CHECK_THROWS_AS(ctx.norm_value(Vector::Zero(n)), ContractError);
  // A vector with an h-component is rejected.
  CHECK_THROWS_AS(ctx.norm_value(space.h().basis_vector(0)), ContractError);
  // Component boundary: pure m1 vectors have theta = 0.
  CHECK_THROWS_AS(ctx.descent_vector(space.m1().basis_vector(0)), ContractError);
  CHECK_THROWS_AS(ctx.fundamental_tensor(space.m2().basis_vector(0),
                                         space.m2().basis_vector(0)),
                  ContractError);
}
