#include "esfv/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "esfv/errors.hpp"

namespace esfv {

GasModel GasConfig::resolve() const {
  try {
    return GasModel::make(gamma, R ? *R : 1.0 / gamma, mu, kappa, prandtl);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, int line, const std::string& key) {
  const std::string s = trim(v);
  if (s == "pi") return std::numbers::pi;
  if (s == "pi/4") return std::numbers::pi / 4.0;
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(x))
    throw ConfigError("expected a finite number, got '" + s + "'", line, key);
  return x;
}

long to_long(const std::string& v, int line, const std::string& key) {
  const std::string s = trim(v);
  errno = 0;
  char* end = nullptr;
  const long x = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
    throw ConfigError("expected an integer, got '" + s + "'", line, key);
  return x;
}

bool to_bool(const std::string& v, int line, const std::string& key) {
  const std::string s = trim(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("expected true or false, got '" + s + "'", line, key);
}

std::vector<double> to_list(const std::string& v, int line, const std::string& key) {
  std::vector<double> out;
  if (trim(v).empty()) return out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(item, line, key));
  return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, int)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    auto num = [&t](const std::string& k, auto member) {
      t[k] = [k, member](RunConfig& c, const std::string& v, int line) {
        member(c) = to_double(v, line, k);
      };
    };
    num("mesh.lx", [](RunConfig& c) -> double& { return c.mesh.lx; });
    num("mesh.ly", [](RunConfig& c) -> double& { return c.mesh.ly; });
    t["mesh.nx"] = [](RunConfig& c, const std::string& v, int l) {
      c.mesh.nx = static_cast<int>(to_long(v, l, "mesh.nx"));
    };
    t["mesh.ny"] = [](RunConfig& c, const std::string& v, int l) {
      c.mesh.ny = static_cast<int>(to_long(v, l, "mesh.ny"));
    };
    t["mesh.n"] = [](RunConfig& c, const std::string& v, int l) {
      c.mesh.nx = c.mesh.ny = static_cast<int>(to_long(v, l, "mesh.n"));
    };

    num("gas.gamma", [](RunConfig& c) -> double& { return c.gas.gamma; });
    num("gas.mu", [](RunConfig& c) -> double& { return c.gas.mu; });
    num("gas.prandtl", [](RunConfig& c) -> double& { return c.gas.prandtl; });
    t["gas.R"] = [](RunConfig& c, const std::string& v, int l) { c.gas.R = to_double(v, l, "gas.R"); };
    t["gas.kappa"] = [](RunConfig& c, const std::string& v, int l) {
      c.gas.kappa = to_double(v, l, "gas.kappa");
    };

    num("solver.cfl", [](RunConfig& c) -> double& { return c.solver.cfl; });
    num("solver.t_end", [](RunConfig& c) -> double& { return c.solver.t_end; });
    t["solver.dt_rule"] = [](RunConfig& c, const std::string& v, int l) {
      try {
        c.solver.dt_rule = dt_rule_from_string(trim(v));
      } catch (const DomainError& e) {
        throw ConfigError(e.what(), l, "solver.dt_rule");
      }
    };
    t["solver.repro"] = [](RunConfig& c, const std::string& v, int l) {
      c.solver.repro = to_bool(v, l, "solver.repro");
    };

    t["output.dir"] = [](RunConfig& c, const std::string& v, int) { c.output.dir = trim(v); };
    t["output.diag_every"] = [](RunConfig& c, const std::string& v, int l) {
      c.output.diag_every = to_long(v, l, "output.diag_every");
    };
    t["output.snap_at"] = [](RunConfig& c, const std::string& v, int l) {
      c.output.snap_at = to_list(v, l, "output.snap_at");
    };
    t["output.vtk"] = [](RunConfig& c, const std::string& v, int l) {
      c.output.vtk = to_bool(v, l, "output.vtk");
    };
    t["output.csv"] = [](RunConfig& c, const std::string& v, int l) {
      c.output.csv = to_bool(v, l, "output.csv");
    };

    t["scenario.name"] = [](RunConfig& c, const std::string& v, int l) {
      try {
        c.scenario.kind = scenario_from_string(trim(v));
      } catch (const ConfigError& e) {
        throw ConfigError(e.what(), l, "scenario.name");
      }
    };

    num("freestream.mach", [](RunConfig& c) -> double& { return c.scenario.freestream.mach; });
    num("freestream.alpha", [](RunConfig& c) -> double& { return c.scenario.freestream.alpha; });
    num("freestream.rho_inf", [](RunConfig& c) -> double& { return c.scenario.freestream.rho_inf; });
    num("freestream.T_inf", [](RunConfig& c) -> double& { return c.scenario.freestream.T_inf; });

    num("vortex.radius", [](RunConfig& c) -> double& { return c.scenario.vortex.radius; });
    num("vortex.beta", [](RunConfig& c) -> double& { return c.scenario.vortex.beta; });
    num("vortex.x0", [](RunConfig& c) -> double& { return c.scenario.vortex.x0; });
    num("vortex.y0", [](RunConfig& c) -> double& { return c.scenario.vortex.y0; });
    num("vortex.mach", [](RunConfig& c) -> double& { return c.scenario.vortex.mach; });
    num("vortex.alpha", [](RunConfig& c) -> double& { return c.scenario.vortex.alpha; });
    num("vortex.rho_inf", [](RunConfig& c) -> double& { return c.scenario.vortex.rho_inf; });
    num("vortex.T_inf", [](RunConfig& c) -> double& { return c.scenario.vortex.T_inf; });

    num("blast.cx", [](RunConfig& c) -> double& { return c.scenario.blast.cx; });
    num("blast.cy", [](RunConfig& c) -> double& { return c.scenario.blast.cy; });
    num("blast.radius", [](RunConfig& c) -> double& { return c.scenario.blast.radius; });
    num("blast.rho_in", [](RunConfig& c) -> double& { return c.scenario.blast.rho_in; });
    num("blast.p_in", [](RunConfig& c) -> double& { return c.scenario.blast.p_in; });
    num("blast.rho_out", [](RunConfig& c) -> double& { return c.scenario.blast.rho_out; });
    num("blast.p_out", [](RunConfig& c) -> double& { return c.scenario.blast.p_out; });

    num("boundary.epsilon", [](RunConfig& c) -> double& { return c.datum_epsilon; });
    return t;
  }();
  return table;
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value, int line) {
  const auto& t = setters();
  const auto it = t.find(key);
  if (it == t.end()) throw ConfigError("unknown key", line, key);
  it->second(cfg, value, line);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  if (mesh.nx < 2 || mesh.ny < 2) throw ConfigError("mesh needs nx, ny >= 2", 0, "mesh.nx");
  if (!(mesh.lx > 0.0) || !(mesh.ly > 0.0)) throw ConfigError("mesh extents must be positive", 0, "mesh.lx");
  (void)gas.resolve();
  if (!(solver.cfl > 0.0) || solver.cfl > 1.0) throw ConfigError("cfl must lie in (0, 1]", 0, "solver.cfl");
  if (!(solver.t_end >= 0.0)) throw ConfigError("t_end must be non-negative", 0, "solver.t_end");
  if (output.diag_every < 1) throw ConfigError("diag_every must be >= 1", 0, "output.diag_every");
  for (double s : output.snap_at)
    if (!(s >= 0.0) || s > solver.t_end)
      throw ConfigError("snapshot time outside [0, t_end]", 0, "output.snap_at");
  if (!(datum_epsilon > 0.0)) throw ConfigError("epsilon must be positive", 0, "boundary.epsilon");
  const auto& v = scenario.vortex;
  if (!(v.radius > 0.0)) throw ConfigError("vortex radius must be positive", 0, "vortex.radius");
  if (!(v.mach >= 0.0)) throw ConfigError("vortex mach must be non-negative", 0, "vortex.mach");
  if (!(v.rho_inf > 0.0) || !(v.T_inf > 0.0)) throw ConfigError("vortex far field must be positive", 0, "vortex.rho_inf");
  const auto& f = scenario.freestream;
  if (!(f.mach >= 0.0)) throw ConfigError("freestream mach must be non-negative", 0, "freestream.mach");
  if (!(f.rho_inf > 0.0) || !(f.T_inf > 0.0)) throw ConfigError("freestream state must be positive", 0, "freestream.rho_inf");
  const auto& b = scenario.blast;
  if (!(b.rho_in > 0.0) || !(b.p_in > 0.0) || !(b.rho_out > 0.0) || !(b.p_out > 0.0))
    throw ConfigError("blast states must be positive", 0, "blast.rho_in");
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw, section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    if (const auto c = s.find_first_of("#;"); c != std::string::npos) s.erase(c);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("unterminated section header", line);
      section = trim(s.substr(1, s.size() - 2));
      static const std::set<std::string> sections = {"mesh",   "gas",        "solver", "output",
                                                     "scenario", "freestream", "vortex", "blast",
                                                     "boundary"};
      if (!sections.count(section)) throw ConfigError("unknown section", line, section);
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line);
    if (section.empty()) throw ConfigError("key outside of a section", line, trim(s.substr(0, eq)));
    const std::string key = section + "." + trim(s.substr(0, eq));
    if (!seen.insert(key).second) throw ConfigError("duplicate key", line, key);
    set_key(cfg, key, s.substr(eq + 1), line);
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("override must look like section.key=value");
  set_key(cfg, trim(assignment.substr(0, eq)), assignment.substr(eq + 1), 0);
}

std::string resolved_config_text(const RunConfig& c) {
  const GasModel gas = c.gas.resolve();
  std::ostringstream os;
  os << "[mesh]\nnx = " << c.mesh.nx << "\nny = " << c.mesh.ny << "\nlx = " << fmt(c.mesh.lx)
     << "\nly = " << fmt(c.mesh.ly) << "\n\n";
  os << "[gas]\ngamma = " << fmt(gas.gamma) << "\nR = " << fmt(gas.R) << "\nmu = " << fmt(gas.mu)
     << "\nkappa = " << fmt(gas.kappa) << "\nprandtl = " << fmt(gas.prandtl) << "\n\n";
  os << "[solver]\ncfl = " << fmt(c.solver.cfl) << "\nt_end = " << fmt(c.solver.t_end)
     << "\ndt_rule = " << to_string(c.solver.dt_rule)
     << "\nrepro = " << (c.solver.repro ? "true" : "false") << "\n\n";
  os << "[output]\ndir = " << c.output.dir << "\ndiag_every = " << c.output.diag_every
     << "\nsnap_at = ";
  for (std::size_t i = 0; i < c.output.snap_at.size(); ++i)
    os << (i ? ", " : "") << fmt(c.output.snap_at[i]);
  os << "\nvtk = " << (c.output.vtk ? "true" : "false")
     << "\ncsv = " << (c.output.csv ? "true" : "false") << "\n\n";
  os << "[boundary]\nepsilon = " << fmt(c.datum_epsilon) << "\n\n";
  os << "[scenario]\nname = " << to_string(c.scenario.kind) << "\n\n";
  const auto& f = c.scenario.freestream;
  os << "[freestream]\nmach = " << fmt(f.mach) << "\nalpha = " << fmt(f.alpha)
     << "\nrho_inf = " << fmt(f.rho_inf) << "\nT_inf = " << fmt(f.T_inf) << "\n\n";
  const auto& v = c.scenario.vortex;
  os << "[vortex]\nradius = " << fmt(v.radius) << "\nbeta = " << fmt(v.beta) << "\nx0 = " << fmt(v.x0)
     << "\ny0 = " << fmt(v.y0) << "\nmach = " << fmt(v.mach) << "\nalpha = " << fmt(v.alpha)
     << "\nrho_inf = " << fmt(v.rho_inf) << "\nT_inf = " << fmt(v.T_inf) << "\n\n";
  const auto& b = c.scenario.blast;
  os << "[blast]\ncx = " << fmt(b.cx) << "\ncy = " << fmt(b.cy) << "\nradius = " << fmt(b.radius)
     << "\nrho_in = " << fmt(b.rho_in) << "\np_in = " << fmt(b.p_in) << "\nrho_out = " << fmt(b.rho_out)
     << "\np_out = " << fmt(b.p_out) << "\n";
  return os.str();
}

std::string config_hash(const RunConfig& cfg) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : resolved_config_text(cfg)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunConfig preset(const std::string& name) {
  RunConfig c;
  c.gas.gamma = 1.4;
  c.solver.cfl = 0.5;
  c.output.diag_every = 10;
  c.output.dir = "out/" + name;
  c.scenario.kind = scenario_from_string(name);
  switch (c.scenario.kind) {
    case ScenarioKind::Freestream:
      c.mesh.nx = c.mesh.ny = 50;
      c.gas.mu = 0.001;
      c.solver.t_end = 1.0;
      break;
    case ScenarioKind::VortexExit:
      c.mesh.nx = c.mesh.ny = 100;
      c.gas.mu = 0.001;
      c.solver.t_end = 15.0;
      c.output.diag_every = 50;
      c.output.snap_at = {0.0, 15.0};
      break;
    case ScenarioKind::VortexEntry:
      c.mesh.nx = c.mesh.ny = 200;
      c.gas.mu = 0.001;
      c.scenario.vortex.x0 = -0.5;
      c.scenario.vortex.y0 = -0.5;
      c.solver.t_end = 14.2;
      c.output.diag_every = 50;
      c.output.snap_at = {7.1, 14.2};
      break;
    case ScenarioKind::Blast:
      c.mesh.nx = c.mesh.ny = 400;
      c.gas.mu = 1e-4;
      c.solver.t_end = 0.2;
      c.output.snap_at = {0.1, 0.2};
      break;
  }
  c.validate();
  return c;
}

}  // namespace esfv
