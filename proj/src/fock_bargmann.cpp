#include "canon/fock_bargmann.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "canon/error.hpp"
#include "canon/quadrature.hpp"
#include "canon/simd/kernels.hpp"

namespace canon {

namespace {

constexpr cd kI(0.0, 1.0);
const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

double eta(int a) { return Metric::diag(a); }

ModeFactor make_factor(std::function<cd(cd)> fn, int degree) {
  return std::make_shared<const ModeFunction>(ModeFunction{std::move(fn), degree});
}

int term_mode_degree(const ProductTerm& t, int a) { return t.factors[a]->degree; }

int resolve_order(const QuadratureGrid& grid, int deg_f, int deg_h) {
  if (grid.order > 0) {
    if (deg_f >= 0 && deg_h >= 0 && 2 * grid.order - 1 < deg_f + deg_h)
      throw Error(ErrorKind::QuadratureOrder,
                  "quadrature order too low for the requested polynomial degrees");
    return grid.order;
  }
  if (deg_f < 0 || deg_h < 0) return 48;
  return 2 * std::max(deg_f, deg_h) + 8;
}

// (1/pi) int e^{-|z|^2} conj(f(s z)) h(z) d^2z with s = +-1.
cd mode_inner(const ModeFunction& f, const ModeFunction& h, int order, double flip) {
  const GaussHermite& gh = gauss_hermite(order);
  const std::size_t n2 = static_cast<std::size_t>(order) * order;
  std::vector<double> w(n2), fr(n2), fi(n2), hr(n2), hi(n2);
  std::size_t k = 0;
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j, ++k) {
      const cd z(gh.nodes[i], gh.nodes[j]);
      const cd fv = f.fn(flip * z);
      const cd hv = h.fn(z);
      w[k] = gh.weights[i] * gh.weights[j];
      fr[k] = fv.real();
      fi[k] = fv.imag();
      hr[k] = hv.real();
      hi[k] = hv.imag();
    }
  return simd::weighted_conj_dot(w, fr, fi, hr, hi) / std::numbers::pi;
}

cd inner_impl(const BargmannFunction& f, const BargmannFunction& h, QuadratureGrid grid,
              bool twisted) {
  if (!f.product_form() || !h.product_form())
    throw Error(ErrorKind::UnsupportedFunction,
                "inner products need product-form functions (apply U-mixing operators pointwise only)");
  std::map<std::tuple<const ModeFunction*, const ModeFunction*, bool>, cd> cache;
  cd total = 0.0;
  for (const ProductTerm& tf : f.terms())
    for (const ProductTerm& th : h.terms()) {
      cd prod = std::conj(tf.coeff) * th.coeff;
      for (int a = 0; a < 4 && prod != 0.0; ++a) {
        const bool flip = twisted && a == 0;
        const auto key = std::make_tuple(tf.factors[a].get(), th.factors[a].get(), flip);
        auto it = cache.find(key);
        if (it == cache.end()) {
          const int order = resolve_order(grid, term_mode_degree(tf, a), term_mode_degree(th, a));
          it = cache.emplace(key, mode_inner(*tf.factors[a], *th.factors[a], order, flip ? -1.0 : 1.0))
                   .first;
        }
        const cd v = it->second;
        prod *= v;
      }
      total += prod;
    }
  return total;
}

bool momentum_mode(DiagonalSet set, int a) {
  switch (set) {
    case DiagonalSet::QT: return false;
    case DiagonalSet::PT: return a != 0;
    case DiagonalSet::PE: return true;
    case DiagonalSet::QE: return a == 0;
  }
  return false;
}

// psi(x) = int conj(A(z,x)) g(z) dmu(z), after completing the square in Re z.
cd position_mode_value(const ModeFunction& f, bool momentum, double x, int order) {
  const GaussHermite& gh = gauss_hermite(order);
  const double r2 = std::sqrt(2.0);
  const double r15 = std::sqrt(1.5);
  const std::size_t n2 = static_cast<std::size_t>(order) * order;
  std::vector<double> w(n2), re(n2), im(n2);
  std::size_t k = 0;
  for (int i = 0; i < order; ++i) {
    const double u = r2 * x / 3.0 + gh.nodes[i] / r15;
    for (int j = 0; j < order; ++j, ++k) {
      const double v = r2 * gh.nodes[j];
      const cd z(u, v);
      // Momentum-diagonal modes use A(-i z, p), i.e. the position transform of f(i w).
      const cd val = std::exp(kI * (v * (u - r2 * x))) * f.fn(momentum ? kI * z : z);
      w[k] = gh.weights[i] * gh.weights[j];
      re[k] = val.real();
      im[k] = val.imag();
    }
  }
  const double pref = std::pow(std::numbers::pi, -1.25) * std::exp(-x * x / 6.0) * r2 / r15;
  return pref * simd::weighted_sum(w, re, im);
}

}  // namespace

ModeFactor normalized_power(int k) {
  if (k < 0 || k > 60) throw Error(ErrorKind::InvalidArgument, "mode degree out of range");
  static std::mutex mu;
  static std::map<int, ModeFactor> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (!slot) {
    const double norm = 1.0 / std::sqrt(std::tgamma(k + 1.0));
    slot = make_factor([k, norm](cd z) { return norm * std::pow(z, k); }, k);
  }
  return slot;
}

BargmannFunction BargmannFunction::basis(const MultiIndex& m) {
  return combination({{m, 1.0}});
}

BargmannFunction BargmannFunction::combination(const std::vector<std::pair<MultiIndex, cd>>& coeffs) {
  std::vector<ProductTerm> terms;
  for (const auto& [m, c] : coeffs) {
    ProductTerm t;
    t.coeff = c;
    for (int a = 0; a < 4; ++a) {
      if (m[a] < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial exponent");
      t.factors[a] = normalized_power(m[a]);
    }
    terms.push_back(std::move(t));
  }
  return from_terms(std::move(terms));
}

BargmannFunction BargmannFunction::from_terms(std::vector<ProductTerm> terms) {
  BargmannFunction f;
  f.terms_ = std::move(terms);
  return f;
}

BargmannFunction BargmannFunction::generic(std::function<cd(const C4&)> rule) {
  BargmannFunction f;
  f.generic_ = std::move(rule);
  return f;
}

cd BargmannFunction::operator()(const C4& z) const {
  if (generic_) return generic_(z);
  cd s = 0.0;
  for (const ProductTerm& t : terms_) {
    cd p = t.coeff;
    for (int a = 0; a < 4; ++a) p *= t.factors[a]->fn(z[a]);
    s += p;
  }
  return s;
}

int BargmannFunction::max_degree() const {
  if (generic_) return -1;
  int d = 0;
  for (const ProductTerm& t : terms_)
    for (const auto& f : t.factors) {
      if (f->degree < 0) return -1;
      d = std::max(d, f->degree);
    }
  return d;
}

BargmannFunction& BargmannFunction::operator+=(const BargmannFunction& o) {
  if (generic_ || o.generic_) {
    const BargmannFunction a = *this;
    *this = generic([a, o](const C4& z) { return a(z) + o(z); });
    return *this;
  }
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

BargmannFunction& BargmannFunction::operator*=(cd s) {
  if (generic_) {
    auto g = generic_;
    generic_ = [g, s](const C4& z) { return s * g(z); };
  } else {
    for (auto& t : terms_) t.coeff *= s;
  }
  return *this;
}

double hermite_function(int k, double x) {
  double h0 = kPiQuarter * std::exp(-x * x / 2.0);
  if (k == 0) return h0;
  double h1 = std::sqrt(2.0) * x * h0;
  for (int j = 2; j <= k; ++j) {
    const double h2 = std::sqrt(2.0 / j) * x * h1 - std::sqrt((j - 1.0) / j) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

PositionFunction PositionFunction::hermite(const MultiIndex& m) {
  PositionTerm t;
  for (int a = 0; a < 4; ++a) {
    const int k = m[a];
    t.factors[a] = std::make_shared<const PositionMode>(
        PositionMode{[k](double x) { return cd(hermite_function(k, x)); }});
  }
  return PositionFunction({t});
}

cd PositionFunction::operator()(const R4& x) const {
  cd s = 0.0;
  for (const PositionTerm& t : terms_) {
    cd p = t.coeff;
    for (int a = 0; a < 4; ++a) p *= t.factors[a]->fn(x[a]);
    s += p;
  }
  return s;
}

cd bargmann_inner(const BargmannFunction& f, const BargmannFunction& h, QuadratureGrid grid) {
  return inner_impl(f, h, grid, false);
}

cd bargmann_eta_inner(const BargmannFunction& f, const BargmannFunction& h, QuadratureGrid grid) {
  return inner_impl(f, h, grid, true);
}

DiagonalSet parse_diagonal_set(const std::string& s) {
  if (s == "QT") return DiagonalSet::QT;
  if (s == "PT") return DiagonalSet::PT;
  if (s == "PE") return DiagonalSet::PE;
  if (s == "QE") return DiagonalSet::QE;
  throw Error(ErrorKind::Parse, "diagonal set must be one of QT, PT, PE, QE (got '" + s + "')");
}

const char* to_string(DiagonalSet d) {
  switch (d) {
    case DiagonalSet::QT: return "QT";
    case DiagonalSet::PT: return "PT";
    case DiagonalSet::PE: return "PE";
    case DiagonalSet::QE: return "QE";
  }
  return "?";
}

PositionFunction to_position(const BargmannFunction& f, DiagonalSet set, TransformGrid grid) {
  if (!f.product_form())
    throw Error(ErrorKind::UnsupportedFunction, "to_position needs a product-form function");
  const int order = grid.bargmann_order;
  gauss_hermite(order);
  std::map<std::pair<const ModeFunction*, bool>, PositionFactor> done;
  std::vector<PositionTerm> out;
  for (const ProductTerm& t : f.terms()) {
    PositionTerm p;
    p.coeff = t.coeff;
    for (int a = 0; a < 4; ++a) {
      const bool mom = momentum_mode(set, a);
      auto& slot = done[{t.factors[a].get(), mom}];
      if (!slot) {
        ModeFactor src = t.factors[a];
        // Each value costs a full 2D quadrature; inner products revisit the same nodes.
        auto memo = std::make_shared<std::pair<std::mutex, std::map<double, cd>>>();
        slot = std::make_shared<const PositionMode>(PositionMode{[src, mom, order, memo](double x) {
          {
            std::lock_guard<std::mutex> lock(memo->first);
            const auto it = memo->second.find(x);
            if (it != memo->second.end()) return it->second;
          }
          const cd v = position_mode_value(*src, mom, x, order);
          std::lock_guard<std::mutex> lock(memo->first);
          if (memo->second.size() < 4096) memo->second.emplace(x, v);
          return v;
        }});
      }
      p.factors[a] = slot;
    }
    out.push_back(std::move(p));
  }
  return PositionFunction(std::move(out));
}

BargmannFunction to_bargmann(const PositionFunction& psi, DiagonalSet set, TransformGrid grid) {
  const GaussHermite& gh = gauss_hermite(grid.position_order);
  std::map<std::pair<const PositionMode*, bool>, ModeFactor> done;
  std::vector<ProductTerm> out;
  for (const PositionTerm& t : psi.terms()) {
    ProductTerm p;
    p.coeff = t.coeff;
    for (int a = 0; a < 4; ++a) {
      const bool mom = momentum_mode(set, a);
      auto& slot = done[{t.factors[a].get(), mom}];
      if (!slot) {
        // a_i = w_i e^{x_i^2/2} psi(x_i); f(z) = pi^{-1/4} sum a_i e^{-z^2/2 + sqrt2 z x_i}.
        const std::size_t n = gh.nodes.size();
        auto are = std::make_shared<std::vector<double>>(n);
        auto aim = std::make_shared<std::vector<double>>(n);
        for (std::size_t i = 0; i < n; ++i) {
          const double x = gh.nodes[i];
          const cd v = gh.weights[i] * std::exp(x * x / 2.0) * t.factors[a]->fn(x);
          (*are)[i] = v.real();
          (*aim)[i] = v.imag();
        }
        const std::vector<double>* nodes = &gh.nodes;
        slot = make_factor(
            [are, aim, nodes, mom](cd z0) {
              const cd z = mom ? -kI * z0 : z0;
              const std::size_t n = nodes->size();
              std::vector<double> kr(n), ki(n);
              const double r2 = std::sqrt(2.0);
              for (std::size_t i = 0; i < n; ++i) {
                const cd k = std::exp(-z * z / 2.0 + r2 * z * (*nodes)[i]);
                kr[i] = k.real();
                ki[i] = k.imag();
              }
              return kPiQuarter * simd::complex_dot(*are, *aim, kr, ki);
            },
            -1);
      }
      p.factors[a] = slot;
    }
    out.push_back(std::move(p));
  }
  return BargmannFunction::from_terms(std::move(out));
}

cd position_inner(const PositionFunction& psi, const PositionFunction& phi, int order) {
  const GaussHermite& gh = gauss_hermite(order);
  std::map<std::pair<const PositionMode*, const PositionMode*>, cd> cache;
  std::vector<double> w(gh.nodes.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = gh.weights[i] * std::exp(gh.nodes[i] * gh.nodes[i]);
  cd total = 0.0;
  for (const PositionTerm& a : psi.terms())
    for (const PositionTerm& b : phi.terms()) {
      cd prod = std::conj(a.coeff) * b.coeff;
      for (int m = 0; m < 4; ++m) {
        const auto key = std::make_pair(a.factors[m].get(), b.factors[m].get());
        auto it = cache.find(key);
        if (it == cache.end()) {
          const std::size_t n = w.size();
          std::vector<double> ar(n), ai(n), br(n), bi(n);
          for (std::size_t i = 0; i < n; ++i) {
            const cd va = a.factors[m]->fn(gh.nodes[i]);
            const cd vb = b.factors[m]->fn(gh.nodes[i]);
            ar[i] = va.real();
            ai[i] = va.imag();
            br[i] = vb.real();
            bi[i] = vb.imag();
          }
          it = cache.emplace(key, simd::weighted_conj_dot(w, ar, ai, br, bi)).first;
        }
        prod *= it->second;
      }
      total += prod;
    }
  return total;
}

namespace {

void require_kappa(double kappa0) {
  if (kappa0 == 0.0 || !std::isfinite(kappa0))
    throw Error(ErrorKind::InvalidArgument,
                "kappa0 must be nonzero (kappa0 = 0 belongs to the character family)");
}

// e^{kappa0 (i iota - (omega, omega)/2) - i kappa1 theta} times, per mode,
// e^{kappa0 eta_a conj(omega_a) z} f_a(scale_a (z - omega_a)).
BargmannFunction translate_rotate(double kappa0, const C4& omega, double iota, const C4& scale,
                                  cd extra_phase, const BargmannFunction& f) {
  const cd prefactor =
      std::exp(kappa0 * (kI * iota - hermitian_pairing(omega, omega) / 2.0)) * extra_phase;
  if (!f.product_form()) {
    return BargmannFunction::generic([=](const C4& z) {
      C4 y;
      for (int a = 0; a < 4; ++a) y[a] = scale[a] * (z[a] - omega[a]);
      return prefactor * std::exp(kappa0 * hermitian_pairing(omega, z)) * f(y);
    });
  }
  std::map<std::pair<const ModeFunction*, int>, ModeFactor> done;
  std::vector<ProductTerm> terms;
  for (const ProductTerm& t : f.terms()) {
    ProductTerm p;
    p.coeff = prefactor * t.coeff;
    for (int a = 0; a < 4; ++a) {
      auto& slot = done[{t.factors[a].get(), a}];
      if (!slot) {
        const ModeFactor src = t.factors[a];
        const cd w = omega[a];
        const cd s = scale[a];
        if (w == 0.0 && s == 1.0) {
          slot = src;
        } else if (w == 0.0) {
          slot = make_factor([src, s](cd z) { return src->fn(s * z); }, src->degree);
        } else {
          const cd lin = kappa0 * eta(a) * std::conj(w);
          slot = make_factor([src, s, w, lin](cd z) { return std::exp(lin * z) * src->fn(s * (z - w)); },
                             -1);
        }
      }
      p.factors[a] = slot;
    }
    terms.push_back(std::move(p));
  }
  return BargmannFunction::from_terms(std::move(terms));
}

}  // namespace

BargmannOperator rep_weyl_heisenberg(double kappa0, const CanonicalElement& g) {
  require_kappa(kappa0);
  if ((g.u.matrix() - M4::Identity()).cwiseAbs().maxCoeff() > kElementTolerance)
    throw Error(ErrorKind::InvalidArgument, "Weyl-Heisenberg element must have U = I");
  const C4 omega = g.omega;
  const double iota = g.iota;
  return [=](const BargmannFunction& f) {
    return translate_rotate(kappa0, omega, iota, C4::Ones(), 1.0, f);
  };
}

CanonicalElement oscillator_element(double theta, const C4& omega, double iota) {
  const M4 u = std::exp(kI * theta) * M4::Identity();
  return {PseudoUnitaryMatrix::trusted(u), omega, iota};
}

BargmannOperator rep_oscillator(double kappa0, int kappa1, double theta, const C4& omega, double iota) {
  require_kappa(kappa0);
  const C4 scale = C4::Constant(std::exp(-kI * theta));
  const cd phase = std::exp(-kI * (kappa1 * theta));
  return [=](const BargmannFunction& f) {
    return translate_rotate(kappa0, omega, iota, scale, phase, f);
  };
}

BargmannOperator rep_canonical(double kappa0, const CanonicalElement& g) {
  require_kappa(kappa0);
  const M4 uinv = g.u.inverse().matrix();
  const C4 omega = g.omega;
  const double iota = g.iota;
  const bool diagonal = (uinv - M4(uinv.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0;
  if (diagonal) {
    const C4 scale = uinv.diagonal();
    return [=](const BargmannFunction& f) {
      return translate_rotate(kappa0, omega, iota, scale, 1.0, f);
    };
  }
  const cd prefactor = std::exp(kappa0 * (kI * iota - hermitian_pairing(omega, omega) / 2.0));
  return [=](const BargmannFunction& f) {
    return BargmannFunction::generic([=](const C4& z) {
      const C4 y = uinv * (z - omega);
      return prefactor * std::exp(kappa0 * hermitian_pairing(omega, z)) * f(y);
    });
  };
}

PositionFunction rep_position_heisenberg(double kappa0, const CanonicalElement& g,
                                         const PositionFunction& psi) {
  require_kappa(kappa0);
  if ((g.u.matrix() - M4::Identity()).cwiseAbs().maxCoeff() > kElementTolerance)
    throw Error(ErrorKind::InvalidArgument, "Weyl-Heisenberg element must have U = I");
  const R4 alpha = g.omega.real();
  const R4 beta = g.omega.imag();
  const cd prefactor = std::exp(kI * (kappa0 * (g.iota + lorentz_dot(alpha, beta))));
  std::map<std::pair<const PositionMode*, int>, PositionFactor> done;
  std::vector<PositionTerm> terms;
  for (const PositionTerm& t : psi.terms()) {
    PositionTerm p;
    p.coeff = prefactor * t.coeff;
    for (int a = 0; a < 4; ++a) {
      auto& slot = done[{t.factors[a].get(), a}];
      if (!slot) {
        const PositionFactor src = t.factors[a];
        const double shift = alpha[a];
        const double freq = -2.0 * kappa0 * eta(a) * beta[a];
        slot = std::make_shared<const PositionMode>(
            PositionMode{[src, shift, freq](double x) { return std::exp(kI * (freq * x)) * src->fn(x - shift); }});
      }
      p.factors[a] = slot;
    }
    terms.push_back(std::move(p));
  }
  return PositionFunction(std::move(terms));
}

CanonicalElement position_parameters(const CanonicalElement& g) {
  const double r2 = std::sqrt(2.0);
  C4 w;
  for (int a = 0; a < 4; ++a) w[a] = cd(r2 * g.omega[a].real(), g.omega[a].imag() / r2);
  return {g.u, w, g.iota};
}

Eigen::MatrixXcd rep_matrix(const BargmannOperator& rho, int degree_cap, QuadratureGrid grid) {
  const FockBasis& basis = FockBasis::get(degree_cap);
  std::vector<BargmannFunction> xi;
  std::vector<BargmannFunction> images;
  for (int i = 0; i < basis.size(); ++i) {
    xi.push_back(BargmannFunction::basis(basis.multi_index(i)));
    images.push_back(rho(xi.back()));
  }
  Eigen::MatrixXcd m(basis.size(), basis.size());
  for (int i = 0; i < basis.size(); ++i)
    for (int j = 0; j < basis.size(); ++j) m(i, j) = bargmann_inner(xi[i], images[j], grid);
  return m;
}

}  // namespace canon
