#include "canon/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "canon/enveloping.hpp"
#include "canon/error.hpp"
#include "canon/fock_bargmann.hpp"
#include "canon/gelfand_ladders.hpp"
#include "canon/group_core.hpp"
#include "canon/kinematics.hpp"
#include "canon/lie_algebra.hpp"
#include "canon/mackey_reps.hpp"
#include "canon/simd/kernels.hpp"

namespace canon {

namespace {

constexpr cd kI(0.0, 1.0);

struct Outcome {
  long samples = 0;
  double residual = 0.0;
};

class Recorder {
 public:
  Recorder(std::string suite, std::vector<InvariantResult>& out) : suite_(std::move(suite)), out_(out) {}

  void check(const std::string& name, double tol, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    InvariantResult r;
    r.suite = suite_;
    r.name = name;
    r.tolerance = tol;
    try {
      const Outcome o = body();
      r.samples = o.samples;
      r.max_residual = o.residual;
      r.passed = std::isfinite(o.residual) && (tol == 0.0 ? o.residual == 0.0 : o.residual < tol);
    } catch (const std::exception&) {
      r.max_residual = std::numeric_limits<double>::infinity();
      r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(r);
  }

 private:
  std::string suite_;
  std::vector<InvariantResult>& out_;
};

double rel(cd a, cd b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// ---------------------------------------------------------------- group

void suite_group(const VerifyConfig& cfg, std::vector<InvariantResult>& out) {
  Recorder rec("group", out);
  const int n = 500;
  rec.check("associativity", 1e-11, [&] {
    Rng rng(cfg.seed);
    Outcome o;
    for (int i = 0; i < n; ++i) {
      const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
      o.residual = std::max(o.residual, distance(compose(compose(a, b), c), compose(a, compose(b, c))));
      ++o.samples;
    }
    return o;
  });
  rec.check("identity", 1e-11, [&] {
    Rng rng(cfg.seed + 1);
    Outcome o;
    const auto e = CanonicalElement::identity();
    for (int i = 0; i < n; ++i) {
      const auto g = random_element(rng);
      o.residual = std::max({o.residual, distance(compose(e, g), g), distance(compose(g, e), g)});
      ++o.samples;
    }
    return o;
  });
  rec.check("inverse", 1e-11, [&] {
    Rng rng(cfg.seed + 2);
    Outcome o;
    const auto e = CanonicalElement::identity();
    for (int i = 0; i < n; ++i) {
      const auto g = random_element(rng);
      const auto gi = inverse(g);
      o.residual = std::max({o.residual, distance(compose(g, gi), e), distance(compose(gi, g), e),
                             distance(inverse(gi), g)});
      ++o.samples;
    }
    return o;
  });
  rec.check("pseudo-unitarity of products", 1e-11, [&] {
    Rng rng(cfg.seed + 3);
    Outcome o;
    for (int i = 0; i < n; ++i) {
      const auto g = compose(random_element(rng), random_element(rng));
      o.residual = std::max(o.residual, g.u.residual());
      ++o.samples;
    }
    return o;
  });
  rec.check("heisenberg restriction (real form)", 1e-12, [&] {
    Rng rng(cfg.seed + 4);
    std::normal_distribution<double> nd;
    Outcome o;
    for (int i = 0; i < n; ++i) {
      const C4 w1 = random_c4(rng), w2 = random_c4(rng);
      const double i1 = nd(rng), i2 = nd(rng);
      const auto g = compose(CanonicalElement::heisenberg(w1, i1), CanonicalElement::heisenberg(w2, i2));
      // iota'' = iota' + iota + alpha'.beta - beta'.alpha with Lorentz dots.
      const R4 a1 = w1.real(), b1 = w1.imag(), a2 = w2.real(), b2 = w2.imag();
      const double iota = i1 + i2 + lorentz_dot(a1, b2) - lorentz_dot(b1, a2);
      o.residual = std::max({o.residual, std::abs(g.iota - iota), (g.omega - (w1 + w2)).cwiseAbs().maxCoeff(),
                             (g.u.matrix() - M4::Identity()).cwiseAbs().maxCoeff()});
      ++o.samples;
    }
    return o;
  });
  rec.check("normal subgroup closure", 1e-11, [&] {
    Rng rng(cfg.seed + 5);
    std::normal_distribution<double> nd;
    Outcome o;
    for (int i = 0; i < n; ++i) {
      const auto g = random_element(rng);
      const auto h = CanonicalElement::heisenberg(random_c4(rng), nd(rng));
      const auto c = compose(compose(g, h), inverse(g));
      o.residual = std::max(o.residual, (c.u.matrix() - M4::Identity()).cwiseAbs().maxCoeff());
      const auto gu = CanonicalElement::homogeneous(g.u);
      const auto direct = compose(compose(inverse(gu), h), gu);
      o.residual = std::max(o.residual, distance(direct, conjugate_normal(gu, h)));
      ++o.samples;
    }
    return o;
  });
  rec.check("SU(1,3) x Os(1,3) form consistency", 1e-11, [&] {
    Rng rng(cfg.seed + 6);
    Outcome o;
    for (int i = 0; i < n; ++i) {
      const auto a = random_element(rng), b = random_element(rng);
      const auto via_os = from_su_os_form(compose_su_os(to_su_os_form(a), to_su_os_form(b)));
      o.residual = std::max(o.residual, distance(via_os, compose(a, b)));
      const SuOsForm f = to_su_os_form(a);
      o.residual = std::max(o.residual, std::abs(f.su.determinant() - 1.0));
      ++o.samples;
    }
    return o;
  });
}

// ---------------------------------------------------------------- algebra

void suite_algebra(const VerifyConfig& cfg, std::vector<InvariantResult>& out) {
  Recorder rec("algebra", out);
  const int cap = cfg.algebra_degree_cap;
  rec.check("realization homomorphism (exact)", 0.0, [&] {
    std::vector<FockOperator> g;
    for (int k = 0; k < kAlgebraDim; ++k) g.push_back(realize_basis(k, cap));
    Outcome o;
    for (int i = 0; i < kAlgebraDim; ++i)
      for (int j = 0; j < kAlgebraDim; ++j) {
        const auto lhs = commutator(g[i], g[j]);
        const auto rhs = realize_fock(bracket(ExactVector::basis(i), ExactVector::basis(j)), cap);
        if (!lhs.equal_on(rhs, cap - 2)) o.residual += 1;
        ++o.samples;
      }
    return o;
  });
  rec.check("antisymmetry (exact)", 0.0, [&] {
    Outcome o;
    for (int i = 0; i < kAlgebraDim; ++i)
      for (int j = 0; j < kAlgebraDim; ++j) {
        const auto x = ExactVector::basis(i), y = ExactVector::basis(j);
        if (!is_zero(bracket(x, y) + bracket(y, x))) o.residual += 1;
        ++o.samples;
      }
    return o;
  });
  rec.check("Jacobi identity on basis triples (exact)", 0.0, [&] {
    // Integer structure constants: sum over cyclic (i,j,k) of c_jk^l c_il^m.
    Outcome o;
    std::array<long, kAlgebraDim> acc{};
    for (int i = 0; i < kAlgebraDim; ++i)
      for (int j = 0; j < kAlgebraDim; ++j)
        for (int k = 0; k < kAlgebraDim; ++k) {
          acc.fill(0);
          const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
          for (const auto& t : cyc)
            for (const auto& [l, c1] : structure(t[1], t[2]))
              for (const auto& [m, c2] : structure(t[0], l)) acc[m] += static_cast<long>(c1) * c2;
          for (long v : acc)
            if (v != 0) {
              o.residual += 1;
              break;
            }
          ++o.samples;
        }
    return o;
  });
  rec.check("hatted generators obey the Z relations (exact)", 0.0, [&] {
    Outcome o;
    auto eta = [](int a, int b) { return a == b ? (a == 0 ? -1 : 1) : 0; };
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            ExactVector rhs = QComplex(eta(b, c)) * hat_z(a, d);
            rhs -= QComplex(eta(a, d)) * hat_z(c, b);
            if (!(bracket(hat_z(a, b), hat_z(c, d)) == rhs)) o.residual += 1;
            ++o.samples;
          }
    return o;
  });
  rec.check("rest and null frame subalgebras close (exact)", 0.0, [&] {
    Outcome o;
    for (FrameKind k : {FrameKind::Rest, FrameKind::Null}) {
      if (!frame_subalgebra(k).closed) o.residual += 1;
      ++o.samples;
    }
    return o;
  });
  rec.check("null frame relations (exact)", 0.0, [&] {
    Outcome o;
    const FrameSubalgebra f = frame_subalgebra(FrameKind::Null);
    auto gen = [&](const std::string& name) {
      for (std::size_t i = 0; i < f.names.size(); ++i)
        if (f.names[i] == name) return f.generators[i];
      throw Error(ErrorKind::InvalidArgument, "no generator " + name);
    };
    auto expect = [&](const ExactVector& lhs, const ExactVector& rhs) {
      if (!(lhs == rhs)) o.residual += 1;
      ++o.samples;
    };
    const ExactVector zero;
    expect(bracket(gen("Ao+"), gen("Ao-")), zero);
    expect(bracket(gen("Ao+"), gen("Y")), gen("Ao+"));
    expect(bracket(gen("Ao-"), gen("Y")), QComplex(-1) * gen("Ao-"));
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        const std::string si = std::to_string(i), sj = std::to_string(j);
        expect(bracket(gen("C+" + si), gen("C-" + sj)), i == j ? gen("Io") : zero);
        for (int k = 1; k <= 2; ++k) {
          const std::string sk = std::to_string(k);
          const ExactVector z = gen("Z" + si + sj);
          expect(bracket(z, gen("C+" + sk)), j == k ? gen("C+" + si) : zero);
          expect(bracket(z, gen("C-" + sk)), i == k ? QComplex(-1) * gen("C-" + sj) : zero);
        }
      }
    return o;
  });
  rec.check("dimensioned subalgebras close", 1e-12, [&] {
    const auto d = dimensioned_basis(cfg.constants);
    const std::vector<std::vector<std::string>> sets = {
        {"J", "K"}, {"J", "N"}, {"K", "J", "P", "E"}, {"K", "J", "Q", "T"}, {"N", "J", "Q", "E"}, {"N", "J", "P", "T"}};
    Outcome o;
    for (const auto& s : sets) {
      std::vector<NumericVector> span;
      for (const auto& name : s) {
        if (name == "E" || name == "T") span.push_back(d.at(name));
        else
          for (int i = 1; i <= 3; ++i) span.push_back(d.at(name + std::to_string(i)));
      }
      for (const auto& x : span)
        for (const auto& y : span) {
          o.residual = std::max(o.residual, span_residual(span, bracket(x, y)));
          ++o.samples;
        }
    }
    return o;
  });
  rec.check("natural scales", 1e-12, [&] {
    const PhysicalConstants& k = cfg.constants;
    Outcome o;
    o.samples = 4;
    o.residual = std::max({std::abs(k.lambda_t() * k.lambda_e() / k.hbar - 1.0),
                           std::abs(k.lambda_q() * k.lambda_p() / k.hbar - 1.0),
                           std::abs(k.lambda_q() / k.lambda_t() / k.c - 1.0),
                           std::abs(k.lambda_p() / k.lambda_t() / k.b - 1.0)});
    return o;
  });
}

// ---------------------------------------------------------------- casimir

void suite_casimir(const VerifyConfig& cfg, std::vector<InvariantResult>& out) {
  Recorder rec("casimir", out);
  const int cap = cfg.casimir_degree_cap;
  std::vector<FockOperator> g;
  for (int k = 0; k < kAlgebraDim; ++k) g.push_back(realize_basis(k, cap));
  for (int order : {1, 2, 4}) {
    rec.check("c" + std::to_string(order) + " commutes with all generators (exact)", 0.0, [&] {
      const FockOperator c = casimir_operator(order, cap);
      Outcome o;
      for (const auto& x : g) {
        if (!commutator(c, x).zero_on(casimir_safe_degree(order, cap))) o.residual += 1;
        ++o.samples;
      }
      return o;
    });
  }
  rec.check("c2 equals the dimensioned quadratic form (exact)", 0.0, [&] {
    Outcome o;
    o.samples = 1;
    if (!casimir_operator(2, cap).equal_on(casimir2_dimensioned(cap), cap - 2)) o.residual = 1;
    return o;
  });
  rec.check("c1, c2, c4, c6 central in the enveloping algebra (exact)", 0.0, [&] {
    EnvelopingAlgebra u;
    Outcome o;
    for (int order : {1, 2, 4, 6}) {
      const UElement c = u.casimir(order);
      if (c.is_zero()) o.residual += 1;
      for (int k = 0; k < kAlgebraDim; ++k) {
        if (!u.commutator(c, UElement::generator(k)).is_zero()) o.residual += 1;
        ++o.samples;
      }
    }
    return o;
  });
  rec.check("c2 equals the dimensioned quadratic form in the enveloping algebra (exact)", 0.0, [&] {
    EnvelopingAlgebra u;
    Outcome o;
    o.samples = 1;
    if (!(u.casimir(2) == u.casimir2_dimensioned())) o.residual = 1;
    return o;
  });
  rec.check("rest frame Casimirs are central (exact)", 0.0, [&] {
    const FrameSubalgebra f = frame_subalgebra(FrameKind::Rest);
    Outcome o;
    for (int order : {2, 4}) {
      const FockOperator c = rest_casimir(order, cap);
      for (const auto& x : f.generators) {
        if (!commutator(c, realize_fock(x, cap)).zero_on(cap - order - 1)) o.residual += 1;
        ++o.samples;
      }
    }
    return o;
  });
  rec.check("null frame Casimir is central (exact)", 0.0, [&] {
    const FrameSubalgebra f = frame_subalgebra(FrameKind::Null);
    const FockOperator c = null_casimir(cap);
    Outcome o;
    for (const auto& x : f.generators) {
      if (!commutator(c, realize_fock(x, cap)).zero_on(cap - 3)) o.residual += 1;
      ++o.samples;
    }
    return o;
  });
  rec.check("c6, c8 smoke centrality (exact, sampled generators)", 0.0, [&] {
    const int big = cfg.casimir_smoke_degree_cap;
    const int subset[] = {raise_index(0), lower_index(1), z_index(0, 1), z_index(2, 3), z_index(3, 3)};
    Outcome o;
    for (int order : {6, 8}) {
      const int safe = casimir_safe_degree(order, big);
      const FockOperator c = casimir_operator(order, big, 1, safe + 1);
      for (int k : subset) {
        if (!commutator(c, realize_basis(k, big)).zero_on(safe)) o.residual += 1;
        ++o.samples;
      }
    }
    return o;
  });
}

// ---------------------------------------------------------------- bargmann

BargmannFunction random_combination(Rng& rng, int max_total) {
  std::normal_distribution<double> nd;
  std::vector<std::pair<MultiIndex, cd>> coeffs;
  const FockBasis& basis = FockBasis::get(max_total);
  std::uniform_int_distribution<int> pick(0, basis.size() - 1);
  for (int t = 0; t < 3; ++t) coeffs.push_back({basis.multi_index(pick(rng)), cd(nd(rng), nd(rng))});
  return BargmannFunction::combination(coeffs);
}

void suite_bargmann(const VerifyConfig& cfg, std::vector<InvariantResult>& out) {
  Recorder rec("bargmann", out);
  rec.check("orthonormality of xi_m, |m| <= 4", 1e-12, [&] {
    const FockBasis& basis = FockBasis::get(4);
    Outcome o;
    for (int i = 0; i < basis.size(); ++i)
      for (int j = 0; j < basis.size(); ++j) {
        const cd v = bargmann_inner(BargmannFunction::basis(basis.multi_index(i)),
                                    BargmannFunction::basis(basis.multi_index(j)));
        o.residual = std::max(o.residual, std::abs(v - (i == j ? 1.0 : 0.0)));
        ++o.samples;
      }
    return o;
  });
  rec.check("transform Gram matrix, |m| <= 3", 1e-6, [&] {
    const FockBasis& basis = FockBasis::get(3);
    std::vector<PositionFunction> psi;
    for (int i = 0; i < basis.size(); ++i) psi.push_back(to_position(BargmannFunction::basis(basis.multi_index(i))));
    Outcome o;
    for (int i = 0; i < basis.size(); ++i)
      for (int j = 0; j < basis.size(); ++j) {
        o.residual = std::max(o.residual, std::abs(position_inner(psi[i], psi[j]) - (i == j ? 1.0 : 0.0)));
        ++o.samples;
      }
    return o;
  });
  for (DiagonalSet set : {DiagonalSet::QT, DiagonalSet::PT, DiagonalSet::PE, DiagonalSet::QE}) {
    rec.check(std::string("transform round trip (") + to_string(set) + ")", 1e-6, [&] {
      Rng rng(cfg.seed + 10);
      const BargmannFunction f = random_combination(rng, 3);
      const BargmannFunction back = to_bargmann(to_position(f, set), set);
      Outcome o;
      for (int k = 0; k < 20; ++k) {
        const C4 z = 0.7 * random_c4(rng);
        o.residual = std::max(o.residual, rel(back(z), f(z)));
        ++o.samples;
      }
      return o;
    });
  }
  rec.check("Weyl-Heisenberg homomorphism", 1e-10, [&] {
    Rng rng(cfg.seed + 11);
    std::normal_distribution<double> nd;
    const BargmannFunction f = random_combination(rng, 3);
    Outcome o;
    for (int k = 0; k < 50; ++k) {
      const auto g1 = CanonicalElement::heisenberg(0.5 * random_c4(rng), nd(rng));
      const auto g2 = CanonicalElement::heisenberg(0.5 * random_c4(rng), nd(rng));
      const double kappa = 0.5 + std::abs(nd(rng));
      const C4 z = random_c4(rng);
      const cd lhs = rep_weyl_heisenberg(kappa, g1)(rep_weyl_heisenberg(kappa, g2)(f))(z);
      const cd rhs = rep_weyl_heisenberg(kappa, compose(g1, g2))(f)(z);
      o.residual = std::max(o.residual, rel(lhs, rhs));
      ++o.samples;
    }
    return o;
  });
  rec.check("oscillator homomorphism", 1e-10, [&] {
    Rng rng(cfg.seed + 12);
    std::normal_distribution<double> nd;
    const BargmannFunction f = random_combination(rng, 3);
    Outcome o;
    for (int k = 0; k < 50; ++k) {
      const double t1 = nd(rng), t2 = nd(rng), i1 = nd(rng), i2 = nd(rng);
      const C4 w1 = 0.5 * random_c4(rng), w2 = 0.5 * random_c4(rng);
      const auto g = compose(oscillator_element(t1, w1, i1), oscillator_element(t2, w2, i2));
      const double theta = std::arg(g.u.matrix()(0, 0));
      const C4 z = random_c4(rng);
      const cd lhs = rep_oscillator(1.0, 3, t1, w1, i1)(rep_oscillator(1.0, 3, t2, w2, i2)(f))(z);
      const cd rhs = rep_oscillator(1.0, 3, theta, g.omega, g.iota)(f)(z);
      o.residual = std::max(o.residual, rel(lhs, rhs));
      ++o.samples;
    }
    return o;
  });
  rec.check("canonical homomorphism", 1e-10, [&] {
    Rng rng(cfg.seed + 13);
    const BargmannFunction f = random_combination(rng, 3);
    Outcome o;
    for (int k = 0; k < 50; ++k) {
      auto g1 = random_element(rng);
      auto g2 = random_element(rng);
      g1.omega *= 0.5;
      g2.omega *= 0.5;
      const C4 z = random_c4(rng);
      const cd lhs = rep_canonical(1.0, g1)(rep_canonical(1.0, g2)(f))(z);
      const cd rhs = rep_canonical(1.0, compose(g1, g2))(f)(z);
      o.residual = std::max(o.residual, rel(lhs, rhs));
      ++o.samples;
    }
    return o;
  });
  rec.check("eta-twisted unitarity of the Weyl-Heisenberg action", 1e-8, [&] {
    Rng rng(cfg.seed + 14);
    std::normal_distribution<double> nd;
    Outcome o;
    for (int k = 0; k < 5; ++k) {
      const BargmannFunction f = random_combination(rng, 2);
      const BargmannFunction h = random_combination(rng, 2);
      const auto rho = rep_weyl_heisenberg(1.0, CanonicalElement::heisenberg(0.3 * random_c4(rng), nd(rng)));
      const cd before = bargmann_eta_inner(f, h);
      const cd after = bargmann_eta_inner(rho(f), rho(h), {64});
      o.residual = std::max(o.residual, rel(after, before));
      ++o.samples;
    }
    return o;
  });
  rec.check("transform intertwines position and Bargmann actions", 1e-6, [&] {
    Rng rng(cfg.seed + 15);
    std::normal_distribution<double> nd;
    const BargmannFunction f = random_combination(rng, 3);
    const PositionFunction psi = to_position(f);
    Outcome o;
    for (int k = 0; k < 5; ++k) {
      C4 w = 0.4 * random_c4(rng);
      w[0] = 0.0;  // only modes with kappa0 eta_aa > 0
      const auto g = CanonicalElement::heisenberg(w, nd(rng));
      const BargmannFunction image = to_bargmann(rep_position_heisenberg(1.0, position_parameters(g), psi));
      const BargmannFunction direct = rep_weyl_heisenberg(1.0, g)(f);
      for (int s = 0; s < 4; ++s) {
        const C4 z = 0.6 * random_c4(rng);
        o.residual = std::max(o.residual, rel(image(z), direct(z)));
        ++o.samples;
      }
    }
    return o;
  });
  rec.check("SIMD kernels match scalar reference", 1e-12, [&] {
    Rng rng(cfg.seed + 16);
    std::normal_distribution<double> nd;
    Outcome o;
    for (int len : {0, 1, 3, 4, 5, 17, 64, 1001}) {
      std::vector<double> w(len), a(len), b(len), c(len), d(len);
      for (int i = 0; i < len; ++i) {
        w[i] = std::abs(nd(rng));
        a[i] = nd(rng);
        b[i] = nd(rng);
        c[i] = nd(rng);
        d[i] = nd(rng);
      }
      const double scale = std::max(1.0, static_cast<double>(len));
      o.residual = std::max({o.residual,
                             std::abs(simd::weighted_sum(w, a, b) - simd::scalar::weighted_sum(w, a, b)) / scale,
                             std::abs(simd::complex_dot(a, b, c, d) - simd::scalar::complex_dot(a, b, c, d)) / scale,
                             std::abs(simd::weighted_conj_dot(w, a, b, c, d) -
                                      simd::scalar::weighted_conj_dot(w, a, b, c, d)) / scale});
      ++o.samples;
    }
    return o;
  });
}

// ---------------------------------------------------------------- mackey

R4 on_shell(Rng& rng, double mu) {
  std::normal_distribution<double> nd;
  R4 k;
  k[1] = nd(rng);
  k[2] = nd(rng);
  k[3] = nd(rng);
  k[0] = std::sqrt(mu * mu + k.tail<3>().squaredNorm());
  return k;
}

C4 canonical_on_shell(Rng& rng, double mu) {
  C4 w = random_c4(rng);
  const double spatial = w.tail<3>().squaredNorm();
  w[0] = std::polar(std::sqrt(mu * mu + spatial), std::arg(w[0]));
  return w;
}

void suite_mackey(const VerifyConfig& cfg, std::vector<InvariantResult>& out) {
  Recorder rec("mackey", out);
  const double tol = 1e-9;
  rec.check("Poincare classification invariance", 0.0, [&] {
    Rng rng(cfg.seed + 20);
    std::normal_distribution<double> nd;
    Outcome o;
    const R4 reps[] = {R4(1, 0, 0, 0), R4(0, 1, 0, 0), R4(1, 1, 0, 0), R4(-2, 0.5, 0.3, 0.1)};
    for (const R4& k0 : reps)
      for (int i = 0; i < 200; ++i) {
        const auto p = DualPoint::poincare(k0);
        const auto q = act(random_lorentz(rng), p);
        if (classify(p, tol).label != classify(q, tol).label) o.residual += 1;
        ++o.samples;
      }
    return o;
  });
  rec.check("canonical classification invariance", 0.0, [&] {
    Rng rng(cfg.seed + 21);
    Outcome o;
    const C4 reps[] = {C4(1, 0, 0, 0), C4(0, 1, 0, 0), C4(1, 0, 0, 1), C4(cd(0.3, 1), cd(0.2, 0.1), 0, 0)};
    for (const C4& w : reps)
      for (int i = 0; i < 200; ++i) {
        const auto p = DualPoint::canonical(w);
        const auto q = act(random_u13(rng), p);
        if (classify(p, tol).label != classify(q, tol).label) o.residual += 1;
        ++o.samples;
      }
    return o;
  });
  rec.check("Heisenberg classification invariance", 0.0, [&] {
    Rng rng(cfg.seed + 22);
    std::normal_distribution<double> nd;
    Outcome o;
    for (double kappa : {1.0, -0.5, 0.0})
      for (int i = 0; i < 200; ++i) {
        const auto p = DualPoint::heisenberg(R4(nd(rng), nd(rng), nd(rng), nd(rng)), kappa);
        const auto q = act_heisenberg(R4(nd(rng), nd(rng), nd(rng), nd(rng)), p);
        if (classify(p, tol).label != classify(q, tol).label) o.residual += 1;
        ++o.samples;
      }
    return o;
  });
  rec.check("polar split Q R = U", 1e-11, [&] {
    Rng rng(cfg.seed + 23);
    Outcome o;
    for (int i = 0; i < 200; ++i) {
      const auto u = random_u13(rng, 0.6);
      const PolarSplit s = polar_split(u);
      o.residual = std::max(o.residual, (s.boost.matrix() * s.compact.matrix() - u.matrix()).cwiseAbs().maxCoeff());
      ++o.samples;
    }
    return o;
  });
  rec.check("polar split re-split and factor structure", 1e-11, [&] {
    Rng rng(cfg.seed + 24);
    Outcome o;
    const M4& eta = Metric::matrix();
    for (int i = 0; i < 200; ++i) {
      const PolarSplit s = polar_split(random_u13(rng, 0.6));
      const PolarSplit again = polar_split(PseudoUnitaryMatrix::trusted(s.boost.matrix() * s.compact.matrix()));
      const M4& q = s.boost.matrix();
      const M4& r = s.compact.matrix();
      Eigen::SelfAdjointEigenSolver<M4> es(q);
      o.residual = std::max({o.residual, (again.boost.matrix() - q).cwiseAbs().maxCoeff(),
                             (again.compact.matrix() - r).cwiseAbs().maxCoeff(),
                             (q - q.adjoint()).cwiseAbs().maxCoeff(),
                             (eta * q * eta * q - M4::Identity()).cwiseAbs().maxCoeff(),
                             (r.adjoint() * r - M4::Identity()).cwiseAbs().maxCoeff(), off_block_norm(r),
                             es.eigenvalues().minCoeff() > 0 ? 0.0 : 1.0});
      ++o.samples;
    }
    return o;
  });
  rec.check("boost_to maps the reference point", 1e-12, [&] {
    Rng rng(cfg.seed + 25);
    Outcome o;
    for (int i = 0; i < 200; ++i) {
      const C4 w = canonical_on_shell(rng, 1.3);
      const M4 q = boost_to(DualPoint::canonical(w)).matrix();
      const C4 ref = C4(1.3 * w[0] / std::abs(w[0]), 0, 0, 0);
      o.residual = std::max(o.residual, (q * ref - w).cwiseAbs().maxCoeff() / std::max(1.0, w.norm()));
      ++o.samples;
    }
    return o;
  });
  rec.check("Wigner factor lies in the little group", 1e-10, [&] {
    Rng rng(cfg.seed + 26);
    Outcome o;
    for (int i = 0; i < 200; ++i) {
      const M4 r = wigner_rotation(random_u13(rng).matrix(), DualPoint::canonical(canonical_on_shell(rng, 0.8)));
      o.residual = std::max(o.residual, off_block_norm(r));
      const Lorentz l = random_lorentz(rng);
      const M4 rl = wigner_rotation(l.cast<cd>(), DualPoint::poincare(on_shell(rng, 0.8)));
      o.residual = std::max({o.residual, off_block_norm(rl), std::abs(rl(0, 0) - 1.0), rl.imag().cwiseAbs().maxCoeff()});
      o.samples += 2;
    }
    return o;
  });
  rec.check("Poincare induced representation homomorphism (s = 0, 1)", 1e-10, [&] {
    Rng rng(cfg.seed + 27);
    std::normal_distribution<double> nd;
    const double mu = 1.1;
    MassShellField scalar = [](const R4& k) {
      Eigen::VectorXcd v(1);
      v[0] = std::exp(-k[0] * k[0] / 8.0) * cd(1.0 + k[1], k[2] - k[3]);
      return v;
    };
    MassShellField vector = [](const R4& k) {
      Eigen::VectorXcd v(3);
      v << cd(k[1], 0.5), cd(k[2] * k[0], -k[3]), cd(1.0, k[1] * k[2]);
      return v;
    };
    SpinRep spin1 = [](const Lorentz& r) { return Eigen::MatrixXcd(r.block<3, 3>(1, 1).cast<cd>()); };
    Outcome o;
    for (int i = 0; i < 30; ++i) {
      const PoincareElement g1{random_lorentz(rng), R4(nd(rng), nd(rng), nd(rng), nd(rng))};
      const PoincareElement g2{random_lorentz(rng), R4(nd(rng), nd(rng), nd(rng), nd(rng))};
      const R4 k = on_shell(rng, mu);
      for (int s = 0; s < 2; ++s) {
        const MassShellField& f = s == 0 ? scalar : vector;
        const SpinRep sigma = s == 0 ? SpinRep() : spin1;
        const auto lhs = induced_rep_poincare(mu, g1, induced_rep_poincare(mu, g2, f, sigma), sigma)(k);
        const auto rhs = induced_rep_poincare(mu, compose(g1, g2), f, sigma)(k);
        o.residual = std::max(o.residual, (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, rhs.cwiseAbs().maxCoeff()));
        ++o.samples;
      }
    }
    return o;
  });
  rec.check("Weyl-Heisenberg position representation homomorphism", 1e-10, [&] {
    Rng rng(cfg.seed + 28);
    std::normal_distribution<double> nd;
    PositionRule f = [](const R4& x) { return std::exp(-x.squaredNorm() / 2.0) * cd(x[0] + 0.5, x[1] - x[3]); };
    Outcome o;
    for (int i = 0; i < 50; ++i) {
      const auto g1 = CanonicalElement::heisenberg(random_c4(rng), nd(rng));
      const auto g2 = CanonicalElement::heisenberg(random_c4(rng), nd(rng));
      const R4 x(nd(rng), nd(rng), nd(rng), nd(rng));
      const cd lhs = induced_rep_heisenberg(0.7, g1, induced_rep_heisenberg(0.7, g2, f))(x);
      const cd rhs = induced_rep_heisenberg(0.7, compose(g1, g2), f)(x);
      o.residual = std::max(o.residual, rel(lhs, rhs));
      ++o.samples;
    }
    return o;
  });
  rec.check("Heisenberg characters are multiplicative", 1e-10, [&] {
    Rng rng(cfg.seed + 29);
    std::normal_distribution<double> nd;
    Outcome o;
    for (int i = 0; i < 50; ++i) {
      const R4 u(nd(rng), nd(rng), nd(rng), nd(rng)), v(nd(rng), nd(rng), nd(rng), nd(rng));
      const auto g1 = CanonicalElement::heisenberg(random_c4(rng), nd(rng));
      const auto g2 = CanonicalElement::heisenberg(random_c4(rng), nd(rng));
      const cd lhs = character_heisenberg(u, v, g1) * character_heisenberg(u, v, g2);
      o.residual = std::max(o.residual, std::abs(lhs - character_heisenberg(u, v, compose(g1, g2))));
      ++o.samples;
    }
    return o;
  });
  rec.check("oscillator character evaluator homomorphism", 1e-10, [&] {
    Rng rng(cfg.seed + 30);
    std::normal_distribution<double> nd;
    CircleRule f = [](double phi) { return std::exp(cd(0, 2 * phi)) + std::cos(3 * phi); };
    Outcome o;
    for (int i = 0; i < 50; ++i) {
      const C4 w = random_c4(rng);
      const double t1 = nd(rng), t2 = nd(rng);
      const C4 w1 = random_c4(rng), w2 = random_c4(rng);
      const auto g = compose(oscillator_element(t1, w1, nd(rng)), oscillator_element(t2, w2, nd(rng)));
      const double phi = nd(rng);
      const cd lhs = character_oscillator(w, t1, w1, character_oscillator(w, t2, w2, f))(phi);
      const cd rhs = character_oscillator(w, t1 + t2, g.omega, f)(phi);
      o.residual = std::max(o.residual, rel(lhs, rhs));
      ++o.samples;
    }
    return o;
  });
  rec.check("hbar = 0 canonical induced representation homomorphism", 1e-10, [&] {
    Rng rng(cfg.seed + 31);
    const double mu = 0.9;
    CanonicalField f = [](const C4& w) {
      Eigen::VectorXcd v(3);
      v << std::exp(-w.squaredNorm() / 10.0), w[1], w[2] * std::conj(w[3]);
      return v;
    };
    CompactRep sigma = [](const M4& r) { return Eigen::MatrixXcd(r.block<3, 3>(1, 1)); };
    Outcome o;
    for (int i = 0; i < 50; ++i) {
      const auto g1 = random_element(rng), g2 = random_element(rng);
      const C4 w = canonical_on_shell(rng, mu);
      const auto lhs = induced_rep_canonical(mu, g1, induced_rep_canonical(mu, g2, f, sigma), sigma)(w);
      const auto rhs = induced_rep_canonical(mu, compose(g1, g2), f, sigma)(w);
      o.residual = std::max(o.residual, (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, rhs.cwiseAbs().maxCoeff()));
      ++o.samples;
    }
    return o;
  });
}

// ---------------------------------------------------------------- gelfand

void suite_gelfand(const VerifyConfig& cfg, std::vector<InvariantResult>& out) {
  Recorder rec("gelfand", out);
  rec.check("pattern count equals dimension, U(3) weights in [0,6]", 0.0, [&] {
    Outcome o;
    for (long a = 0; a <= 6; ++a)
      for (long b = 0; b <= a; ++b)
        for (long c = 0; c <= b; ++c) {
          const Weight m{a, b, c};
          const auto ps = enumerate_patterns(m);
          std::set<std::vector<Weight>> distinct;
          bool ok = true;
          for (const auto& p : ps) {
            distinct.insert(p.rows);
            ok = ok && satisfies_betweenness(p);
          }
          if (!ok || distinct.size() != ps.size() || static_cast<long>(ps.size()) != dimension_u3(m) ||
              dimension_u3(m) != weyl_dimension(m))
            o.residual += 1;
          ++o.samples;
        }
    return o;
  });
  rec.check("casimir2 closed form equals Cartan form, entries in [-4,4]", 0.0, [&] {
    Outcome o;
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= a; ++b)
        for (long c = -4; c <= b; ++c) {
          const Weight m{a, b, c};
          if (casimir2(m) != casimir2_cartan(to_cartan(m))) o.residual += 1;
          ++o.samples;
        }
    return o;
  });
  rec.check("Cartan relabeling round trip, entries in [-3,3]", 0.0, [&] {
    Outcome o;
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= a; ++b)
        for (long c = -3; c <= b; ++c) {
          const Weight m{a, b, c};
          const CartanLabel l = to_cartan(m);
          if (from_cartan(l) != m || l.a < 0 || l.b < l.a) o.residual += 1;
          ++o.samples;
        }
    return o;
  });
  rec.check("ladder rungs are valid, distinct and branch consistently", 0.0, [&] {
    Outcome o;
    const Kappa labels[] = {{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {2, 0, 0, 0}};
    for (const Kappa& k : labels) {
      const auto terms = ladder_decomposition(k, 10);
      std::set<std::tuple<long, long, long>> seen;
      for (const auto& t : terms) {
        ++o.samples;
        const auto key = std::make_tuple(t.sigma.n, t.sigma.a, t.sigma.b);
        bool ok = seen.insert(key).second && t.sigma.a >= 0 && t.sigma.b >= t.sigma.a;
        if (ok) {
          const Weight m = from_cartan(t.sigma);
          ok = to_cartan(m) == t.sigma && is_dominant(m);
          for (const auto& p : enumerate_patterns(m)) ok = ok && satisfies_betweenness(p);
        }
        if (!ok) o.residual += 1;
      }
    }
    return o;
  });
  rec.check("U(1,3) casimir2 matches the four-label form", 0.0, [&] {
    Rng rng(cfg.seed + 40);
    std::uniform_int_distribution<long> d(-5, 5);
    Outcome o;
    for (int i = 0; i < 1000; ++i) {
      const long k1 = d(rng), k2 = d(rng), k3 = d(rng), k4 = d(rng);
      const long expected = k1 * (3 + k1) + k2 * (1 + k2) + k3 * (-1 + k3) + k4 * (-3 + k4);
      if (casimir2({k1, k2, k3, k4}) != expected) o.residual += 1;
      ++o.samples;
    }
    return o;
  });
  rec.check("D0_3 membership of ladder rungs for kappa = 0", 0.0, [&] {
    Outcome o;
    for (const auto& t : ladder_decomposition({0, 0, 0, 0}, 10)) {
      const Weight m = from_cartan(t.sigma);
      if (!in_series(Series::D03, {0, 0, 0, 0}, {m[0], m[1], m[2]})) o.residual += 1;
      ++o.samples;
    }
    return o;
  });
}

// ---------------------------------------------------------------- kinematics

Vec3 random_vec3(Rng& rng, double scale) {
  std::normal_distribution<double> nd(0.0, scale);
  return Vec3(nd(rng), nd(rng), nd(rng));
}

PhaseMatrix taylor_exp(const PhaseMatrix& g) {
  // Scaling and squaring with a fixed-length Taylor series.
  int squarings = 0;
  double norm = g.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const PhaseMatrix a = g / std::pow(2.0, squarings);
  PhaseMatrix term = PhaseMatrix::Identity();
  PhaseMatrix sum = PhaseMatrix::Identity();
  for (int k = 1; k <= 20; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

void suite_kinematics(const VerifyConfig& cfg, std::vector<InvariantResult>& out) {
  Recorder rec("kinematics", out);
  const PhysicalConstants& k = cfg.constants;
  rec.check("closed-form boost equals exp(generator)", 1e-12, [&] {
    Rng rng(cfg.seed + 50);
    Outcome o;
    for (int i = 0; i < 500; ++i) {
      BoostParams p;
      p.beta = random_vec3(rng, 0.5 * k.c);
      p.gamma = random_vec3(rng, 0.5 * k.b);
      const PhaseMatrix m = pure_boost_matrix(p.beta, p.gamma, k);
      const PhaseMatrix e = taylor_exp(generator(p, k));
      o.residual = std::max(o.residual, (m - e).cwiseAbs().maxCoeff() / std::max(1.0, e.cwiseAbs().maxCoeff()));
      ++o.samples;
    }
    return o;
  });
  rec.check("quadratic form preserved", 1e-10, [&] {
    Rng rng(cfg.seed + 51);
    std::normal_distribution<double> nd;
    Outcome o;
    for (int i = 0; i < 500; ++i) {
      PhaseState s;
      for (int j = 0; j < 8; ++j) s[j] = nd(rng);
      const Vec3 beta = random_vec3(rng, 0.5 * k.c), gamma = random_vec3(rng, 0.5 * k.b);
      const double g0 = quadratic_form(s, k);
      const double g1 = quadratic_form(pure_boost(s, beta, gamma, k), k);
      o.residual = std::max(o.residual, std::abs(g1 - g0) / (1.0 + std::abs(g0)));
      ++o.samples;
    }
    return o;
  });
  rec.check("symplectic form preserved", 1e-10, [&] {
    Rng rng(cfg.seed + 52);
    Outcome o;
    for (int i = 0; i < 500; ++i) {
      const PhaseMatrix m = pure_boost_matrix(random_vec3(rng, 0.5 * k.c), random_vec3(rng, 0.5 * k.b), k);
      o.residual = std::max(o.residual, symplectic_residual(m));
      ++o.samples;
    }
    return o;
  });
  rec.check("full generator preserves both forms", 1e-10, [&] {
    Rng rng(cfg.seed + 53);
    std::normal_distribution<double> nd(0.0, 0.4);
    Outcome o;
    for (int i = 0; i < 200; ++i) {
      BoostParams p;
      p.beta = random_vec3(rng, 0.4 * k.c);
      p.gamma = random_vec3(rng, 0.4 * k.b);
      p.alpha = random_vec3(rng, 0.4);
      Eigen::Matrix3d t;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b <= a; ++b) t(a, b) = t(b, a) = nd(rng) * k.b * k.c;
      p.theta = t;
      p.vartheta = nd(rng) * k.b * k.c;
      const PhaseMatrix m = taylor_exp(generator(p, k));
      o.residual = std::max({o.residual, symplectic_residual(m), quadratic_residual(m, k)});
      ++o.samples;
    }
    return o;
  });
  rec.check("Newtonian limit deviation ratio between scales 1e3 and 1e4", 1.0, [&] {
    Rng rng(cfg.seed + 54);
    std::normal_distribution<double> nd;
    Outcome o;
    for (int i = 0; i < 20; ++i) {
      PhaseState s;
      for (int j = 0; j < 8; ++j) s[j] = nd(rng);
      const Vec3 beta = random_vec3(rng, 1.0), gamma = random_vec3(rng, 1.0);
      const double ratio = newtonian_deviation(s, beta, gamma, 1e3) / newtonian_deviation(s, beta, gamma, 1e4);
      // Within a factor 2 of 100 means |log2(ratio / 100)| < 1.
      o.residual = std::max(o.residual, std::abs(std::log2(ratio / 100.0)));
      ++o.samples;
    }
    return o;
  });
  rec.check("collinear boosts compose additively", 1e-12, [&] {
    Rng rng(cfg.seed + 55);
    std::normal_distribution<double> nd;
    Outcome o;
    for (int i = 0; i < 100; ++i) {
      const Vec3 dir = random_vec3(rng, 1.0).normalized();
      const double z1 = 0.7 * nd(rng), z2 = 0.7 * nd(rng);
      const PhaseMatrix m = pure_boost_matrix(z1 * k.c * dir, Vec3::Zero(), k) *
                            pure_boost_matrix(z2 * k.c * dir, Vec3::Zero(), k);
      const PhaseMatrix sum = pure_boost_matrix((z1 + z2) * k.c * dir, Vec3::Zero(), k);
      o.residual = std::max(o.residual, (m - sum).cwiseAbs().maxCoeff() / std::max(1.0, sum.cwiseAbs().maxCoeff()));
      ++o.samples;
    }
    return o;
  });
  rec.check("component form agrees for parallel beta, gamma", 1e-12, [&] {
    Rng rng(cfg.seed + 56);
    std::normal_distribution<double> nd;
    Outcome o;
    for (int i = 0; i < 100; ++i) {
      const Vec3 dir = random_vec3(rng, 1.0).normalized();
      const Vec3 beta = nd(rng) * k.c * dir, gamma = nd(rng) * k.b * dir;
      const PhaseMatrix a = pure_boost_matrix(beta, gamma, k);
      const PhaseMatrix b = pure_boost_matrix_componentwise(beta, gamma, k);
      o.residual = std::max(o.residual, (a - b).cwiseAbs().maxCoeff() / std::max(1.0, a.cwiseAbs().maxCoeff()));
      ++o.samples;
    }
    return o;
  });
  rec.check("small-rapidity series continuity", 1e-13, [&] {
    Outcome o;
    for (double z : {0.5e-4, 0.99e-4, 1.01e-4, 2e-4}) {
      const Vec3 beta(z * k.c, 0, 0);
      const PhaseMatrix a = pure_boost_matrix(beta, Vec3::Zero(), k);
      BoostParams p;
      p.beta = beta;
      const PhaseMatrix e = taylor_exp(generator(p, k));
      o.residual = std::max(o.residual, (a - e).cwiseAbs().maxCoeff());
      ++o.samples;
    }
    return o;
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"group",  "algebra", "casimir",   "bargmann",
                                                 "mackey", "gelfand", "kinematics"};
  return names;
}

std::vector<InvariantResult> run_suite(const std::string& name, const VerifyConfig& config) {
  config.constants.validate();
  if (config.algebra_degree_cap < 2 || config.casimir_degree_cap < 4 || config.casimir_smoke_degree_cap < 9)
    throw Error(ErrorKind::InvalidArgument,
                "degree caps too small (algebra >= 2, casimir >= 4, smoke >= 9)");
  std::vector<InvariantResult> out;
  if (name == "all") {
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, config);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  if (name == "group") suite_group(config, out);
  else if (name == "algebra") suite_algebra(config, out);
  else if (name == "casimir") suite_casimir(config, out);
  else if (name == "bargmann") suite_bargmann(config, out);
  else if (name == "mackey") suite_mackey(config, out);
  else if (name == "gelfand") suite_gelfand(config, out);
  else if (name == "kinematics") suite_kinematics(config, out);
  else throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  return out;
}

}  // namespace canon
