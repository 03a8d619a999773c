// canon: batch front end over the library. JSON to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 verification or computation failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "canon/error.hpp"
#include "canon/fock_bargmann.hpp"
#include "canon/gelfand_ladders.hpp"
#include "canon/json_io.hpp"
#include "canon/kinematics.hpp"
#include "canon/lie_algebra.hpp"
#include "canon/mackey_reps.hpp"
#include "canon/verify.hpp"

using namespace canon;

namespace {

constexpr int kUsage = 2;

struct Settings {
  PhysicalConstants constants;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  int degree_cap = 6;
  int casimir_degree_cap = 8;
  std::string format = "json";
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw Error(ErrorKind::Parse, "config key '" + key + "': not a number: " + v);
  return x;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(lineno) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_config(Settings& s, const std::map<std::string, std::string>& cfg) {
  for (const auto& [key, v] : cfg) {
    if (key == "c") s.constants.c = to_double(key, v);
    else if (key == "b") s.constants.b = to_double(key, v);
    else if (key == "hbar") s.constants.hbar = to_double(key, v);
    else if (key == "seed") s.seed = static_cast<std::uint64_t>(to_double(key, v));
    else if (key == "tol") s.tol = to_double(key, v);
    else if (key == "degree_cap") s.degree_cap = static_cast<int>(to_double(key, v));
    else if (key == "casimir_degree_cap") s.casimir_degree_cap = static_cast<int>(to_double(key, v));
    else if (key == "format") s.format = v;
    else throw Error(ErrorKind::Parse, "unknown config key '" + key + "'");
  }
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

std::vector<double> reals(const std::string& s, std::size_t n, const std::string& what) {
  std::vector<double> out;
  for (const auto& p : split(s)) out.push_back(to_double(what, p));
  if (out.size() != n) throw Error(ErrorKind::Parse, what + ": expected " + std::to_string(n) + " comma-separated values");
  return out;
}

std::vector<long> integers(const std::string& s, std::size_t n, const std::string& what) {
  std::vector<long> out;
  for (const auto& p : split(s)) {
    const double x = to_double(what, p);
    if (x != std::floor(x)) throw Error(ErrorKind::Parse, what + ": expected integers");
    out.push_back(static_cast<long>(x));
  }
  if (out.size() != n) throw Error(ErrorKind::Parse, what + ": expected " + std::to_string(n) + " comma-separated integers");
  return out;
}

// Components are "re" or "re:im".
C4 complex4(const std::string& s, const std::string& what) {
  const auto parts = split(s);
  if (parts.size() != 4) throw Error(ErrorKind::Parse, what + ": expected 4 comma-separated values");
  C4 v;
  for (int a = 0; a < 4; ++a) {
    const auto colon = parts[a].find(':');
    if (colon == std::string::npos) v[a] = to_double(what, parts[a]);
    else v[a] = cd(to_double(what, parts[a].substr(0, colon)), to_double(what, parts[a].substr(colon + 1)));
  }
  return v;
}

// An argument is inline JSON, "-" for stdin, or a file path.
Json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return parse_json(arg);
  if (arg == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_json(text);
  }
  std::ifstream in(arg);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + arg);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json(text);
}

std::string csv_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Settings& s, const Json& j) {
  if (s.format == "csv") {
    std::cout << "key,value\n";
    const Json flat = j.flatten();
    for (const auto& [k, v] : flat.items()) std::cout << k << ',' << csv_value(v) << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

void emit_table(const Settings& s, const std::vector<std::string>& header, const std::vector<std::vector<Json>>& rows) {
  if (s.format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_value(r[i]);
      std::cout << '\n';
    }
    return;
  }
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json o = Json::object();
    for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
    arr.push_back(o);
  }
  std::cout << arr.dump(2) << '\n';
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidElement:
    case ErrorKind::InsufficientTruncation:
    case ErrorKind::OffShell:
    case ErrorKind::NotTimelike:
      return kUsage;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical group toolkit: composition, Casimirs, ladders, orbits, boosts, transforms."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  int degree_cap = 6;
  auto* o_config = app.add_option("--config", config_path, "key=value configuration file");
  auto* o_seed = app.add_option("--seed", seed, "random seed (default 42)");
  auto* o_tol = app.add_option("--tol", tol, "numeric tolerance (default 1e-9)");
  auto* o_cap = app.add_option("--degree-cap", degree_cap, "Fock degree truncation N (default 6)");
  auto* o_format = app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  (void)o_config;

  std::string left, right, inv_arg;
  auto* compose = app.add_subcommand("compose", "compose two elements given as JSON (inline, file, or -)");
  compose->add_option("left", left)->required();
  compose->add_option("right", right)->required();
  auto* inverse_cmd = app.add_subcommand("inverse", "invert an element given as JSON");
  inverse_cmd->add_option("element", inv_arg)->required();

  int order = 2;
  std::string frame = "full", kappa0 = "1";
  auto* casimir = app.add_subcommand("casimir", "exact Casimir operator on the truncated Fock space");
  casimir->add_option("--order", order, "1, 2, 4, 6, 8 (rest frame: 2 or 4)");
  casimir->add_option("--frame", frame)->check(CLI::IsMember({"full", "rest", "null"}));
  casimir->add_option("--kappa0", kappa0, "central charge as an integer or rational p/q");

  std::string weight;
  auto* patterns = app.add_subcommand("patterns", "Gelfand-Tsetlin patterns of a U(3) weight");
  patterns->add_option("--weight", weight, "m1,m2,m3 with m1 >= m2 >= m3")->required();

  std::string kappa;
  long rungs = 10;
  auto* ladder = app.add_subcommand("ladder", "U(3) ladder of a U(1,3) discrete representation");
  ladder->add_option("--kappa", kappa, "k1,k2,k3,k4")->required();
  ladder->add_option("--rungs", rungs);

  std::string group = "canonical", w, kappa_h = "0";
  auto* classify_cmd = app.add_subcommand("classify", "orbit and little group of a dual point");
  classify_cmd->add_option("--group", group)->check(CLI::IsMember({"poincare", "heisenberg", "canonical"}));
  classify_cmd->add_option("--w", w, "four components; canonical accepts re:im")->required();
  classify_cmd->add_option("--kappa", kappa_h, "Heisenberg central value");

  std::string beta = "0,0,0", gamma = "0,0,0", state;
  auto* boost = app.add_subcommand("boost", "apply a pure non-inertial boost to a phase-space state");
  boost->add_option("--beta", beta, "rate of change of position, 3 values");
  boost->add_option("--gamma", gamma, "rate of change of momentum, 3 values");
  boost->add_option("--state", state, "t,e,q1,q2,q3,p1,p2,p3")->required();

  std::string mode, diagonal = "QT", point;
  auto* transform = app.add_subcommand("transform", "Segal-Bargmann transform of a basis function, evaluated at x");
  transform->add_option("--m", mode, "multi-index m0,m1,m2,m3")->required();
  transform->add_option("--diagonal", diagonal)->check(CLI::IsMember({"QT", "PT", "PE", "QE"}));
  transform->add_option("--x", point, "x0,x1,x2,x3")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Settings s;
    if (!config_path.empty()) apply_config(s, read_config(config_path));
    if (o_seed->count()) s.seed = seed;
    if (o_tol->count()) s.tol = tol;
    if (o_cap->count()) s.degree_cap = degree_cap;
    if (o_format->count()) s.format = format;
    if (!(s.tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (s.degree_cap < 2) throw Error(ErrorKind::InvalidArgument, "degree cap must be at least 2");
    if (s.format != "json" && s.format != "csv") throw Error(ErrorKind::InvalidArgument, "format must be json or csv");
    s.constants.validate();

    if (*compose) {
      const auto a = element_from_json(read_json_arg(left));
      const auto b = element_from_json(read_json_arg(right));
      emit(s, element_to_json(canon::compose(a, b)));
    } else if (*inverse_cmd) {
      emit(s, element_to_json(canon::inverse(element_from_json(read_json_arg(inv_arg)))));
    } else if (*casimir) {
      mpq_class k0(kappa0);
      k0.canonicalize();
      FockOperator op;
      if (frame == "full") op = casimir_operator(order, s.degree_cap, k0);
      else if (frame == "rest") op = rest_casimir(order, s.degree_cap, k0);
      else op = null_casimir(s.degree_cap, k0);
      emit(s, operator_to_json(op));
    } else if (*patterns) {
      const auto m = integers(weight, 3, "--weight");
      std::vector<std::vector<Json>> rows;
      for (const auto& p : enumerate_patterns(Weight(m.begin(), m.end()))) {
        std::vector<Json> r;
        for (const auto& row : p.rows)
          for (long x : row) r.push_back(x);
        rows.push_back(r);
      }
      emit_table(s, {"m13", "m23", "m33", "m12", "m22", "m11"}, rows);
    } else if (*ladder) {
      const auto k = integers(kappa, 4, "--kappa");
      std::vector<std::vector<Json>> rows;
      for (const auto& t : ladder_decomposition({k[0], k[1], k[2], k[3]}, rungs))
        rows.push_back({t.rung, t.sigma.n, t.sigma.a, t.sigma.b});
      emit_table(s, {"rung", "n", "a", "b"}, rows);
    } else if (*classify_cmd) {
      const C4 v = complex4(w, "--w");
      DualPoint p;
      if (group == "canonical") p = DualPoint::canonical(v);
      else if (group == "poincare") p = DualPoint::poincare(v.real());
      else p = DualPoint::heisenberg(v.real(), to_double("--kappa", kappa_h));
      if (group != "canonical" && v.imag().cwiseAbs().maxCoeff() != 0.0)
        throw Error(ErrorKind::InvalidArgument, "--w must be real for the " + group + " dual");
      const OrbitClass c = classify(p, s.tol);
      emit(s, Json{{"group", group},
                   {"orbit", to_string(c.label)},
                   {"little_group", to_string(c.little_group)},
                   {"invariant", c.invariant}});
    } else if (*boost) {
      const auto sv = reals(state, 8, "--state");
      const auto bv = reals(beta, 3, "--beta");
      const auto gv = reals(gamma, 3, "--gamma");
      const PhaseState out = pure_boost(Eigen::Map<const PhaseState>(sv.data()), Vec3(bv[0], bv[1], bv[2]),
                                        Vec3(gv[0], gv[1], gv[2]), s.constants);
      emit(s, Json{{"state", std::vector<double>(out.data(), out.data() + 8)}});
    } else if (*transform) {
      const auto m = integers(mode, 4, "--m");
      const auto x = reals(point, 4, "--x");
      for (long mi : m)
        if (mi < 0) throw Error(ErrorKind::InvalidArgument, "--m entries must be non-negative");
      const MultiIndex mi{int(m[0]), int(m[1]), int(m[2]), int(m[3])};
      const PositionFunction psi = to_position(BargmannFunction::basis(mi), parse_diagonal_set(diagonal));
      emit(s, Json{{"m", m}, {"diagonal", diagonal}, {"x", x},
                   {"psi", complex_to_json(psi(R4(x[0], x[1], x[2], x[3])))}});
    } else if (*verify) {
      VerifyConfig cfg;
      cfg.seed = s.seed;
      cfg.algebra_degree_cap = s.degree_cap;
      cfg.casimir_degree_cap = s.casimir_degree_cap;
      cfg.constants = s.constants;
      const auto results = run_suite(suite, cfg);
      if (s.format == "csv") std::cout << report_to_csv(results);
      else std::cout << report_to_json(results).dump(2) << '\n';
      for (const auto& r : results)
        if (!r.passed) {
          std::cerr << "FAILED " << r.suite << ": " << r.name << " (max residual " << r.max_residual << ")\n";
        }
      for (const auto& r : results)
        if (!r.passed) return 1;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "canon: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::invalid_argument& e) {
    std::cerr << "canon: invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "canon: " << e.what() << '\n';
    return 1;
  }
}
