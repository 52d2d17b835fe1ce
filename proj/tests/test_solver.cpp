#include <doctest.h>

#include <cstdlib>

#include "esfv/errors.hpp"
#include "esfv/scenarios.hpp"
#include "esfv/solver.hpp"
#include "support.hpp"

using namespace esfv;

namespace {

struct Setup {
  GasModel gas;
  DualMesh mesh;
  ScenarioConfig sc;
  BoundaryProviders providers;
  Field u;
};

Setup make(ScenarioKind kind, int n, double mu) {
  Setup s{test::air(mu), build_mesh(n, n, 1.0, 1.0), {}, {}, {}};
  s.sc.kind = kind;
  s.providers = provider_for(s.sc, s.gas);
  s.u.resize(s.mesh.num_nodes());
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    const Vec2 p = s.mesh.position(i);
    s.u[i] = conserved_from_primitive(initial_state(s.sc, p.x, p.y, s.gas), s.gas);
  }
  return s;
}

}  // namespace

TEST_CASE("freestream is a fixed point of the residual") {
  auto s = make(ScenarioKind::Freestream, 12, 0.001);
  const Field r = rhs(s.u, 0.0, s.mesh, s.gas, s.providers);
  for (const auto& v : r) CHECK(max_abs(v) < 1e-12);
}

TEST_CASE("residual stencil is local") {
  for (double mu : {0.0, 0.01}) {
    auto s = make(ScenarioKind::Freestream, 10, mu);
    const std::size_t p = s.mesh.node_index(5, 4);
    s.u[p][0] *= 1.01;
    s.u[p][3] *= 1.02;
    const Field r = rhs(s.u, 0.0, s.mesh, s.gas, s.providers);
    const int reach = mu == 0.0 ? 1 : 2;
    bool touched_far = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const int d = std::abs(s.mesh.k_of(i) - 5) + std::abs(s.mesh.l_of(i) - 4);
      if (d > reach && max_abs(r[i]) > 1e-12) touched_far = true;
    }
    CHECK_FALSE(touched_far);
    CHECK(max_abs(r[p]) > 1e-6);
  }
}

TEST_CASE("zero viscosity bit-matches the pure Euler assembly") {
  auto s = make(ScenarioKind::VortexExit, 16, 0.0);
  s.gas.kappa = 0.0;
  ResidualAssembler ns(s.mesh, s.gas, s.providers, true);
  ResidualAssembler euler(s.mesh, s.gas, s.providers, false);
  Field a, b;
  ns.rhs(s.u, 0.3, a);
  euler.rhs(s.u, 0.3, b);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("stable dt") {
  const GasModel inviscid = test::air(0.0);
  const DualMesh m = build_mesh(100, 100, 1.0, 1.0);
  const double a = 0.1 / std::sqrt(2.0);
  Field fs(m.num_nodes(), conserved_from_primitive(1.0, a, a, 1.0 / 1.4, inviscid));
  CHECK(stable_dt(fs, m, inviscid, 0.5) ==
        doctest::Approx(0.5 / (2.0 * (a + 1.0) / 0.01)).epsilon(1e-14));
  CHECK(stable_dt(fs, m, inviscid, 0.5) == doctest::Approx(0.002335).epsilon(1e-3));

  Field rest(m.num_nodes(), conserved_from_primitive(1.0, 0.0, 0.0, 1.0 / 1.4, inviscid));
  CHECK(stable_dt(rest, m, inviscid, 0.5) == doctest::Approx(0.5 * 0.01 / 2).epsilon(1e-14));

  const GasModel viscous = test::air(50.0);
  const DualMesh m2 = build_mesh(200, 200, 1.0, 1.0);
  Field rest2(m2.num_nodes(), rest[0]);
  const double r = stable_dt(rest, m, viscous, 0.5) / stable_dt(rest2, m2, viscous, 0.5);
  CHECK(r == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("paper1d dt reproduces the reported steps") {
  const GasModel gas = test::air();
  ScenarioConfig sc;
  sc.kind = ScenarioKind::VortexExit;
  const double c = reference_speed(sc, gas);
  CHECK(std::abs(paper1d_dt(build_mesh(100, 100, 1, 1), 0.5, c) - 0.0045454) < 1e-7);
  CHECK(std::abs(paper1d_dt(build_mesh(200, 200, 1, 1), 0.5, c) - 0.002272) < 1e-6);
  CHECK(std::abs(paper1d_dt(build_mesh(400, 400, 1, 1), 0.5, c) - 0.001136) < 1e-6);
}

TEST_CASE("dt rule names") {
  CHECK(dt_rule_from_string("sum2d") == DtRule::Sum2D);
  CHECK(dt_rule_from_string("paper1d") == DtRule::Paper1D);
  CHECK_THROWS_AS(dt_rule_from_string("cfl"), DomainError);
}

TEST_CASE("SSPRK3 is third order on du/dt = lambda u") {
  const double lambda = -1.3, T = 1.0;
  auto err = [&](int steps) {
    std::vector<double> u{1.0};
    const double dt = T / steps;
    for (int n = 0; n < steps; ++n)
      esfv::ssprk3(u, n * dt, dt, [&](const std::vector<double>& x, double, std::vector<double>& k) {
        k.assign(1, lambda * x[0]);
      });
    return std::abs(u[0] - std::exp(lambda * T));
  };
  const double e1 = err(20), e2 = err(40), e3 = err(80);
  CHECK(std::log2(e1 / e2) == doctest::Approx(3.0).epsilon(0.05));
  CHECK(std::log2(e2 / e3) == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("SSPRK3 uses the stage times t, t + dt, t + dt/2") {
  std::vector<double> seen;
  std::vector<double> u{0.0};
  esfv::ssprk3(u, 2.0, 0.4, [&](const std::vector<double>&, double t, std::vector<double>& k) {
    seen.push_back(t);
    k.assign(1, 0.0);
  });
  REQUIRE(seen.size() == 3);
  CHECK(seen[0] == 2.0);
  CHECK(seen[1] == doctest::Approx(2.4));
  CHECK(seen[2] == doctest::Approx(2.2));
  CHECK(u[0] == 0.0);
}

TEST_CASE("freestream preserved over 100 steps") {
  auto s = make(ScenarioKind::Freestream, 20, 0.001);
  ResidualAssembler a(s.mesh, s.gas, s.providers);
  FieldState st{s.u, 0.0};
  const Field u0 = s.u;
  for (int n = 0; n < 100; ++n) step_ssprk3(st, stable_dt(st.u, s.mesh, s.gas, 0.5), a);
  double dev = 0.0;
  for (std::size_t i = 0; i < u0.size(); ++i) dev = std::max(dev, max_abs(st.u[i] - u0[i]));
  CHECK(dev < 1e-11);
}

TEST_CASE("non-admissible state is reported, never clipped") {
  auto s = make(ScenarioKind::Freestream, 6, 0.0);
  s.u[7][3] = 0.0;
  CHECK_THROWS_AS(check_admissible(s.u, s.gas), NonAdmissible);
  ResidualAssembler a(s.mesh, s.gas, s.providers);
  Field k;
  CHECK_THROWS_AS(a.rhs(s.u, 0.0, k), NonAdmissible);
}

TEST_CASE("residual is deterministic") {
  auto s = make(ScenarioKind::Blast, 24, 1e-4);
  const Field a = rhs(s.u, 0.0, s.mesh, s.gas, s.providers);
  const Field b = rhs(s.u, 0.0, s.mesh, s.gas, s.providers);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
