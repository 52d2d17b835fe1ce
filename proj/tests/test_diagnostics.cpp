#include <doctest.h>

#include <numbers>

#include "esfv/diagnostics.hpp"
#include "esfv/scenarios.hpp"
#include "support.hpp"

using namespace esfv;

namespace {

struct Case {
  GasModel gas;
  DualMesh mesh;
  BoundaryProviders providers;
  FieldState state;
};

Case make(ScenarioKind kind, int n, double mu, double x0 = 0.5) {
  ScenarioConfig sc;
  sc.kind = kind;
  sc.vortex.x0 = sc.vortex.y0 = x0;
  Case c{test::air(mu), build_mesh(n, n, 1.0, 1.0), {}, {}};
  c.providers = provider_for(sc, c.gas);
  c.state.u.resize(c.mesh.num_nodes());
  for (std::size_t i = 0; i < c.state.u.size(); ++i) {
    const Vec2 p = c.mesh.position(i);
    c.state.u[i] = conserved_from_primitive(initial_state(sc, p.x, p.y, c.gas), c.gas);
  }
  return c;
}

}  // namespace

TEST_CASE("freestream record") {
  auto c = make(ScenarioKind::Freestream, 10, 0.001);
  ResidualAssembler a(c.mesh, c.gas, c.providers);
  AssemblyTrace tr;
  Field dudt;
  a.rhs(c.state.u, 0.0, dudt, &tr);
  CHECK(mass_balance(dudt, c.mesh, tr) < 1e-14);
  CHECK(energy_balance(dudt, c.mesh, tr) < 1e-14);
  const auto eb = entropy_balance(dudt, c.mesh, tr);
  CHECK(std::abs(eb.dU_total) < 1e-13);
  CHECK(std::abs(eb.boundary_terms) < 1e-13);
  CHECK(eb.diff == 0.0);
  const auto sums = boundary_flux_sums(c.mesh, tr, c.gas);
  const double a45 = 0.1 / std::sqrt(2.0);
  // Outflow through the right and top sides: rho v_n over unit length each.
  CHECK(sums.outflow_mass == doctest::Approx(2 * a45).epsilon(1e-12));
}

TEST_CASE("balances hold on a rough field") {
  auto c = make(ScenarioKind::VortexExit, 20, 0.01, 0.9);
  ResidualAssembler a(c.mesh, c.gas, c.providers);
  AssemblyTrace tr;
  Field dudt;
  a.rhs(c.state.u, 0.0, dudt, &tr);
  CHECK(mass_balance(dudt, c.mesh, tr) < 1e-13);
  CHECK(energy_balance(dudt, c.mesh, tr) < 1e-13);
  const auto eb = entropy_balance(dudt, c.mesh, tr);
  CHECK(eb.diff < 0.0);
  CHECK(eb.slack >= -1e-12);
}

TEST_CASE("DIFF is negative for a shear layer and zero without viscosity") {
  for (double mu : {0.0, 0.05}) {
    const GasModel gas = test::air(mu);
    const DualMesh m = build_mesh(12, 12, 1.0, 1.0);
    Field u(m.num_nodes());
    for (std::size_t i = 0; i < u.size(); ++i)
      u[i] = conserved_from_primitive(1.0, 0.3 * std::sin(3 * m.position(i).y), 0.0, 1.0 / 1.4, gas);
    ScenarioConfig sc;
    ResidualAssembler a(m, gas, provider_for(sc, gas), mu > 0.0);
    AssemblyTrace tr;
    Field dudt;
    a.rhs(u, 0.0, dudt, &tr);
    const double d = viscous_entropy_production(m, tr);
    if (mu == 0.0)
      CHECK(d == 0.0);
    else
      CHECK(d < 0.0);
  }
}

TEST_CASE("DIFF is non-positive for random admissible fields") {
  const GasModel gas = test::air(0.3);
  const DualMesh m = build_mesh(7, 9, 1.0, 1.3);
  ScenarioConfig sc;
  ResidualAssembler a(m, gas, provider_for(sc, gas));
  std::mt19937_64 rng(21);
  for (int n = 0; n < 50; ++n) {
    Field u(m.num_nodes());
    for (auto& q : u) q = test::random_state(rng, gas, 0.5);
    AssemblyTrace tr;
    Field dudt;
    a.rhs(u, 0.0, dudt, &tr);
    const auto eb = entropy_balance(dudt, m, tr);
    CHECK(eb.diff <= 1e-12);
    CHECK(mass_balance(dudt, m, tr) < 1e-12);
    CHECK(energy_balance(dudt, m, tr) < 1e-12);
  }
}

TEST_CASE("blast initial mass") {
  auto c = make(ScenarioKind::Blast, 200, 1e-4);
  ResidualAssembler a(c.mesh, c.gas, c.providers);
  DiagnosticsMonitor mon;
  const auto r = mon.record(c.state, a, 0, 0.0);
  const double area = std::numbers::pi * 0.25 * 0.25;
  CHECK(r.total_mass == doctest::Approx(0.125 + area * (1 - 0.125)).epsilon(5e-3));
  CHECK(r.total_mass > 0.0);
  CHECK(r.min_p == doctest::Approx(0.1));
  CHECK(r.min_rho == doctest::Approx(0.125));
}

TEST_CASE("blast boundary sums before the shock arrives") {
  auto c = make(ScenarioKind::Blast, 40, 1e-4);
  ResidualAssembler a(c.mesh, c.gas, c.providers);
  AssemblyTrace tr;
  Field dudt;
  a.rhs(c.state.u, 0.0, dudt, &tr);
  const auto sums = boundary_flux_sums(c.mesh, tr, c.gas);
  CHECK(sums.outflow_mass == 0.0);
  CHECK(sums.outflow_energy == 0.0);
  // Momentum leaves through the pressure p_out on every side and cancels in total.
  Vec4 total{};
  for (std::size_t f = 0; f < tr.faces.size(); ++f)
    total = total + tr.faces[f].flux * c.mesh.boundary_faces()[f].length;
  CHECK(std::abs(total[1]) < 1e-15);
  CHECK(std::abs(total[2]) < 1e-15);
}

TEST_CASE("freestream accumulators grow linearly") {
  auto c = make(ScenarioKind::Freestream, 8, 0.0);
  ResidualAssembler a(c.mesh, c.gas, c.providers);
  DiagnosticsMonitor mon;
  for (int n = 0; n < 4; ++n) {
    c.state.t = 0.25 * n;
    mon.record(c.state, a, n, 0.25);
  }
  const auto& s = mon.series();
  const double rate = s[1].outflow_mass_integral / 0.25;
  CHECK(rate > 0.0);
  for (int n = 1; n < 4; ++n)
    CHECK(s[n].outflow_mass_integral == doctest::Approx(rate * 0.25 * n).epsilon(1e-13));
}

TEST_CASE("csv header matches the record layout") {
  const std::string h = diagnostics_csv_header();
  CHECK(h.rfind("t,total_mass,total_energy,total_entropy,mass_balance_residual", 0) == 0);
  const std::string row = diagnostics_csv_row(DiagnosticsRecord{});
  CHECK(std::count(h.begin(), h.end(), ',') == std::count(row.begin(), row.end(), ','));
}
