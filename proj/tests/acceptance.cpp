// Prints one PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <sys/wait.h>

#include "canon/fock_bargmann.hpp"
#include "canon/gelfand_ladders.hpp"
#include "canon/group_core.hpp"
#include "canon/kinematics.hpp"
#include "canon/enveloping.hpp"
#include "canon/lie_algebra.hpp"
#include "canon/mackey_reps.hpp"
#include "oracles.hpp"

using namespace canon;

namespace {

constexpr cd kI(0, 1);
constexpr std::uint64_t kSeed = 42;

struct Verdict {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0 || dt < budget_s;
  const bool pass = v.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s | %s | %.2f s", pass ? "PASS" : "FAIL", id, title.c_str(), v.detail.c_str(), dt);
  if (budget_s > 0) std::printf(" (budget %.0f s)", budget_s);
  std::printf("\n");
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double rel(cd a, cd b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

BargmannFunction sample_function(Rng& rng) {
  std::normal_distribution<double> nd;
  return BargmannFunction::combination({{{1, 0, 2, 0}, cd(nd(rng), nd(rng))},
                                        {{0, 1, 0, 1}, cd(nd(rng), nd(rng))},
                                        {{0, 0, 0, 0}, cd(nd(rng), nd(rng))},
                                        {{2, 0, 0, 1}, cd(nd(rng), nd(rng))}});
}

}  // namespace

int main() {
  criterion(1, "group axioms, 500 elements, residual < 1e-11", 10, [] {
    Rng rng(kSeed);
    double worst = 0;
    const auto e = CanonicalElement::identity();
    for (int i = 0; i < 500; ++i) {
      const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
      worst = std::max({worst, distance(compose(compose(a, b), c), compose(a, compose(b, c))),
                        distance(compose(e, a), a), distance(compose(a, e), a), distance(compose(a, inverse(a)), e),
                        distance(compose(inverse(a), a), e)});
    }
    return Verdict{worst < 1e-11, fmt("max residual %.3g", worst)};
  });

  criterion(2, "bracket table exact at N = 6 and Jacobi exact", 60, [] {
    const int n = 6;
    std::vector<FockOperator> g;
    for (int k = 0; k < kAlgebraDim; ++k) g.push_back(realize_basis(k, n));
    long bad = 0, jac = 0;
    for (int i = 0; i < kAlgebraDim; ++i)
      for (int j = 0; j < kAlgebraDim; ++j) {
        const auto rhs = realize_fock(bracket(ExactVector::basis(i), ExactVector::basis(j)), n);
        if (!commutator(g[i], g[j]).equal_on(rhs, n - 2)) ++bad;
      }
    for (int i = 0; i < kAlgebraDim; ++i)
      for (int j = 0; j < kAlgebraDim; ++j)
        for (int k = 0; k < kAlgebraDim; ++k) {
          const auto x = ExactVector::basis(i), y = ExactVector::basis(j), z = ExactVector::basis(k);
          if (!is_zero(bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)))) ++jac;
        }
    return Verdict{bad == 0 && jac == 0,
                   std::to_string(bad) + "/625 bracket mismatches, " + std::to_string(jac) + "/15625 Jacobi failures"};
  });

  criterion(3, "c1, c2, c4 central at N = 8; dimensioned c2 identity exact", 0, [] {
    const int n = 8;
    long bad = 0;
    for (int order : {1, 2, 4}) {
      const FockOperator c = casimir_operator(order, n);
      for (int k = 0; k < kAlgebraDim; ++k)
        if (!commutator(c, realize_basis(k, n)).zero_on(casimir_safe_degree(order, n))) ++bad;
    }
    const bool dim_ok = casimir_operator(2, n).equal_on(casimir2_dimensioned(n), n - 2);
    EnvelopingAlgebra u;
    long ubad = 0;
    for (int order : {1, 2, 4}) {
      const UElement c = u.casimir(order);
      if (c.is_zero()) ++ubad;
      for (int k = 0; k < kAlgebraDim; ++k)
        if (!u.commutator(c, UElement::generator(k)).is_zero()) ++ubad;
    }
    const bool udim_ok = u.casimir(2) == u.casimir2_dimensioned();
    return Verdict{bad == 0 && dim_ok && ubad == 0 && udim_ok,
                   std::to_string(bad) + "/75 non-commuting pairs in Fock, " + std::to_string(ubad) +
                       "/75 in the enveloping algebra, dimensioned identity " +
                       (dim_ok && udim_ok ? "holds" : "fails")};
  });

  criterion(4, "representation homomorphisms, 50 pairs each, residual < 1e-10", 0, [] {
    Rng rng(kSeed);
    std::normal_distribution<double> nd;
    const int pairs = 50;
    double r_pos = 0, r_wh = 0, r_chr = 0, r_osc = 0, r_can = 0;
    PositionRule psi = [](const R4& x) { return std::exp(-x.squaredNorm() / 3) * cd(1 + x[0], x[2] - x[1] * x[3]); };
    const BargmannFunction f = sample_function(rng);
    for (int i = 0; i < pairs; ++i) {
      const auto h1 = CanonicalElement::heisenberg(0.5 * random_c4(rng), nd(rng));
      const auto h2 = CanonicalElement::heisenberg(0.5 * random_c4(rng), nd(rng));
      const auto h12 = compose(h1, h2);
      const R4 x(nd(rng), nd(rng), nd(rng), nd(rng));
      const C4 z = random_c4(rng);
      // Position-space Weyl-Heisenberg action.
      r_pos = std::max(r_pos, rel(induced_rep_heisenberg(0.8, h1, induced_rep_heisenberg(0.8, h2, psi))(x),
                                  induced_rep_heisenberg(0.8, h12, psi)(x)));
      // Bargmann-space Weyl-Heisenberg action.
      r_wh = std::max(r_wh, rel(rep_weyl_heisenberg(1.3, h1)(rep_weyl_heisenberg(1.3, h2)(f))(z),
                                rep_weyl_heisenberg(1.3, h12)(f)(z)));
      // Characters of the kappa = 0 sector.
      const R4 u(nd(rng), nd(rng), nd(rng), nd(rng)), v(nd(rng), nd(rng), nd(rng), nd(rng));
      r_chr = std::max(r_chr, std::abs(character_heisenberg(u, v, h1) * character_heisenberg(u, v, h2) -
                                       character_heisenberg(u, v, h12)));
      // Oscillator group.
      const double t1 = nd(rng), t2 = nd(rng);
      const auto o1 = oscillator_element(t1, h1.omega, h1.iota), o2 = oscillator_element(t2, h2.omega, h2.iota);
      const auto o12 = compose(o1, o2);
      r_osc = std::max(r_osc, rel(rep_oscillator(1.0, 2, t1, o1.omega, o1.iota)(rep_oscillator(1.0, 2, t2, o2.omega, o2.iota)(f))(z),
                                  rep_oscillator(1.0, 2, t1 + t2, o12.omega, o12.iota)(f)(z)));
      // Full canonical group.
      auto g1 = random_element(rng), g2 = random_element(rng);
      g1.omega *= 0.5;
      g2.omega *= 0.5;
      r_can = std::max(r_can, rel(rep_canonical(1.0, g1)(rep_canonical(1.0, g2)(f))(z),
                                  rep_canonical(1.0, compose(g1, g2))(f)(z)));
    }
    const double worst = std::max({r_pos, r_wh, r_chr, r_osc, r_can});
    char buf[256];
    std::snprintf(buf, sizeof buf, "position %.2g, bargmann %.2g, character %.2g, oscillator %.2g, canonical %.2g", r_pos,
                  r_wh, r_chr, r_osc, r_can);
    return Verdict{worst < 1e-10, buf};
  });

  criterion(5, "Segal-Bargmann Gram within 1e-6, round trip < 1e-6 at 20 points", 30, [] {
    const FockBasis& basis = FockBasis::get(3);
    std::vector<PositionFunction> psi;
    for (int i = 0; i < basis.size(); ++i) psi.push_back(to_position(BargmannFunction::basis(basis.multi_index(i))));
    double gram = 0;
    for (int i = 0; i < basis.size(); ++i)
      for (int j = 0; j < basis.size(); ++j)
        gram = std::max(gram, std::abs(position_inner(psi[i], psi[j]) - (i == j ? 1.0 : 0.0)));
    Rng rng(kSeed);
    std::normal_distribution<double> nd;
    std::vector<std::pair<MultiIndex, cd>> coeffs;
    for (int i = 0; i < basis.size(); ++i) coeffs.push_back({basis.multi_index(i), cd(nd(rng), nd(rng))});
    const BargmannFunction f = BargmannFunction::combination(coeffs);
    const BargmannFunction back = to_bargmann(to_position(f));
    double trip = 0;
    for (int k = 0; k < 20; ++k) {
      const C4 z = 0.7 * random_c4(rng);
      trip = std::max(trip, std::abs(back(z) - f(z)) / std::max(1.0, std::abs(f(z))));
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "gram %.3g, round trip %.3g", gram, trip);
    return Verdict{gram < 1e-6 && trip < 1e-6, buf};
  });

  criterion(6, "Gelfand suite exact", 0, [] {
    long bad_count = 0, bad_cas = 0, bad_ladder = 0, bad_series = 0;
    for (long a = 0; a <= 6; ++a)
      for (long b = 0; b <= a; ++b)
        for (long c = 0; c <= b; ++c)
          if (static_cast<long>(enumerate_patterns({a, b, c}).size()) != dimension_u3({a, b, c})) ++bad_count;
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= a; ++b)
        for (long c = -4; c <= b; ++c) {
          const CartanLabel l = to_cartan({a, b, c});
          if (casimir2({a, b, c}) != oracle::casimir2_nab(l.n, l.a, l.b)) ++bad_cas;
        }
    for (const Kappa& k : {Kappa{0, 0, 0, 0}, Kappa{1, 0, 0, 0}, Kappa{1, 1, 0, 0}, Kappa{1, 1, 1, 0}, Kappa{2, 0, 0, 0}}) {
      std::vector<oracle::Rung> got;
      for (const auto& t : ladder_decomposition(k, 10)) got.emplace_back(t.sigma.n, t.sigma.a, t.sigma.b);
      if (got != oracle::printed_ladder(k, 10)) ++bad_ladder;
    }
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int i = 0; i < 10000; ++i) {
      const long k1 = d(rng), k2 = d(rng), k3 = d(rng), k4 = d(rng), m1 = d(rng), m2 = d(rng), m3 = d(rng);
      for (Series s : kAllSeries)
        if (oracle::series(s, k1, k2, k3, k4, m1, m2, m3) != in_series(s, {k1, k2, k3, k4}, {m1, m2, m3})) ++bad_series;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "mismatches: counts %ld, casimir %ld, ladders %ld/5, series %ld/80000", bad_count,
                  bad_cas, bad_ladder, bad_series);
    return Verdict{bad_count + bad_cas + bad_ladder + bad_series == 0, buf};
  });

  criterion(7, "kinematics: closed form vs expm < 1e-12, forms < 1e-10, Newtonian ratio within 2x of 100", 0, [] {
    Rng rng(kSeed);
    std::normal_distribution<double> nd;
    double expm_err = 0, form_err = 0, ratio_err = 0;
    for (int i = 0; i < 500; ++i) {
      const PhysicalConstants k{0.5 + std::abs(nd(rng)), 0.5 + std::abs(nd(rng)), 1.0};
      BoostParams p;
      p.beta = 0.7 * k.c * Vec3(nd(rng), nd(rng), nd(rng));
      p.gamma = 0.7 * k.b * Vec3(nd(rng), nd(rng), nd(rng));
      const PhaseMatrix m = pure_boost_matrix(p.beta, p.gamma, k);
      const PhaseMatrix e = oracle::expm(generator(p, k));
      expm_err = std::max(expm_err, (m - e).cwiseAbs().maxCoeff() / std::max(1.0, e.cwiseAbs().maxCoeff()));
      form_err = std::max({form_err, symplectic_residual(m), quadratic_residual(m, k)});
    }
    for (int i = 0; i < 20; ++i) {
      PhaseState s;
      for (int j = 0; j < 8; ++j) s[j] = nd(rng);
      const Vec3 beta(nd(rng), nd(rng), nd(rng)), gamma(nd(rng), nd(rng), nd(rng));
      const double ratio = newtonian_deviation(s, beta, gamma, 1e3) / newtonian_deviation(s, beta, gamma, 1e4);
      ratio_err = std::max(ratio_err, std::abs(std::log2(ratio / 100.0)));
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "expm %.3g, forms %.3g, max |log2(ratio/100)| %.3g", expm_err, form_err, ratio_err);
    return Verdict{expm_err < 1e-12 && form_err < 1e-10 && ratio_err < 1.0, buf};
  });

  criterion(8, "Mackey: orbit invariance, polar split 1e-11, Wigner off-block < 1e-10", 0, [] {
    Rng rng(kSeed);
    std::normal_distribution<double> nd;
    long moved = 0;
    for (const R4& k : {R4(1, 0, 0, 0), R4(-1, 0.2, 0, 0), R4(1, 1, 0, 0), R4(0.1, 2, 0, 0)})
      for (int i = 0; i < 200; ++i)
        if (classify(DualPoint::poincare(k)).label != classify(act(random_lorentz(rng), DualPoint::poincare(k))).label) ++moved;
    for (double kappa : {1.0, 0.0})
      for (int i = 0; i < 200; ++i) {
        const auto p = DualPoint::heisenberg(R4(nd(rng), nd(rng), nd(rng), nd(rng)), kappa);
        if (classify(p).label != classify(act_heisenberg(R4(nd(rng), nd(rng), nd(rng), nd(rng)), p)).label) ++moved;
      }
    for (const C4& w : {C4(1, 0, 0, 0), C4(0, 1, 0, 0), C4(1, 0, 0, 1), C4(kI, 0.3, 0, 0)})
      for (int i = 0; i < 200; ++i)
        if (classify(DualPoint::canonical(w)).label != classify(act(random_u13(rng), DualPoint::canonical(w))).label) ++moved;
    double polar = 0, resplit = 0, wigner = 0;
    for (int i = 0; i < 200; ++i) {
      const auto u = random_u13(rng, 0.6);
      const auto s = polar_split(u);
      const M4 qr = s.boost.matrix() * s.compact.matrix();
      polar = std::max(polar, (qr - u.matrix()).cwiseAbs().maxCoeff());
      const auto again = polar_split(PseudoUnitaryMatrix::trusted(qr));
      resplit = std::max({resplit, (again.boost.matrix() - s.boost.matrix()).cwiseAbs().maxCoeff(),
                          (again.compact.matrix() - s.compact.matrix()).cwiseAbs().maxCoeff()});
      C4 w = random_c4(rng);
      w[0] = std::polar(std::sqrt(1 + w.tail<3>().squaredNorm()), std::arg(w[0]));
      wigner = std::max(wigner, off_block_norm(wigner_rotation(random_u13(rng).matrix(), DualPoint::canonical(w))));
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "orbit changes %ld/2000, QR %.3g, re-split %.3g, Wigner off-block %.3g", moved, polar,
                  resplit, wigner);
    return Verdict{moved == 0 && polar < 1e-11 && resplit < 1e-11 && wigner < 1e-10, buf};
  });

  criterion(9, "canon verify --suite all under 5 minutes", 300, [] {
    const std::string cmd = std::string(CANON_CLI) + " verify --suite all --format csv > /dev/null";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return Verdict{code == 0, "exit code " + std::to_string(code)};
  });

  return failures;
}
