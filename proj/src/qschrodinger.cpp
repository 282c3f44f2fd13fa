#include "qcalc/qschrodinger.hpp"

#include <algorithm>
#include <sstream>

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qhermite.hpp"

namespace qcalc {
namespace {

constexpr unsigned kGuardBits = 64;
constexpr double kCalibrationThreshold = 1e-15;

BigRational factorial(unsigned n) {
  BigRational r(1);
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

Complex from_wave_number(const Real& p, const QuantumParams& params) {
  // k = i p / hbar
  return {Real::zero(p.precision()), p / Real(params.hbar, p.precision())};
}

}  // namespace

void QuantumParams::validate() const {
  if (hbar <= 0) throw DomainError("hbar must be positive");
  if (m <= 0) throw DomainError("mass must be positive");
}

GaussianRational QuantumParams::nu_exact() const { return {BigRational(0), BigRational(hbar / (2 * m))}; }

Complex QuantumParams::nu(unsigned bits) const { return to_complex(nu_exact(), bits); }

HeatSolution<Complex> schrodinger_plane_wave(const Real& p, const QuantumParams& params) {
  params.validate();
  return HeatSolution<Complex>::plane_wave(from_wave_number(p, params), params.q, params.nu(p.precision()));
}

HeatSolution<Complex> schrodinger_superposition(const Complex& offset,
                                                const std::vector<std::pair<Complex, Real>>& terms,
                                                const QuantumParams& params) {
  params.validate();
  std::vector<WaveTerm<Complex>> waves;
  unsigned bits = offset.precision();
  for (const auto& [a, p] : terms) {
    waves.push_back({a, from_wave_number(p, params)});
    bits = std::max(bits, p.precision());
  }
  return HeatSolution<Complex>::superposition(offset, std::move(waves), params.q, params.nu(bits));
}

std::optional<BiGaussPoly> kdf_complex(unsigned n, const QuantumParams& params, SchrodingerKdfReading reading) {
  params.validate();
  const GaussianRational nu = params.nu_exact();
  const BigRational nf = q_factorial(n, params.q);
  BiGaussPoly p;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const unsigned r = n - 2 * k;
    const BigRational d = reading == SchrodingerKdfReading::kFactorial ? q_factorial(r, params.q)
                                                                        : q_number(r, params.q);
    if (d == 0) return std::nullopt;
    p += BiGaussPoly::monomial(pow(nu, k) * GaussianRational(BigRational(nf / (factorial(k) * d))), r, k);
  }
  return p;
}

BiGaussPoly schrodinger_residual_poly(const BiGaussPoly& p, const QuantumParams& params) {
  return p.derivative_s() - q_derivative_poly(p, params.q, 2) * params.nu_exact();
}

std::vector<BiGaussPoly> schrodinger_generating_coefficients(unsigned n_max, const QuantumParams& params) {
  params.validate();
  const GaussianRational i = GaussianRational::i();
  const GaussianRational ik = i / GaussianRational(params.hbar);                          // i / hbar
  const GaussianRational time_rate = -i / GaussianRational(BigRational(2 * params.m * params.hbar));
  std::vector<BiGaussPoly> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    BiGaussPoly c;
    for (unsigned j = 0; 2 * j <= n; ++j) {
      const unsigned r = n - 2 * j;
      const GaussianRational coeff =
          pow(time_rate, j) * pow(ik, r) / GaussianRational(BigRational(factorial(j) * q_factorial(r, params.q)));
      c += BiGaussPoly::monomial(coeff, r, j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

ComplexVelocity complex_cole_hopf(const HeatSolution<Complex>& psi, const QuantumParams& params) {
  params.validate();
  const unsigned bits = psi.nu().precision();
  if (!(abs(psi.nu() - params.nu(bits)) <= ldexp(Real(1L, bits), -static_cast<long>(bits) + 8))) {
    throw DomainError("complex_cole_hopf: psi must carry nu = i hbar / (2m)");
  }
  return cole_hopf(psi);
}

ResidualReport<Complex> madelung_residual(const ComplexVelocity& u, const Grid& grid, const QuantumParams& params,
                                          unsigned bits, std::optional<BurgersVariant> variant) {
  params.validate();
  const BurgersVariant v = variant ? *variant : madelung_canonical_variant();
  const unsigned work = bits + kGuardBits;
  const Complex nu = params.nu(work);
  const Complex i_hbar = nu * Real(2 * params.m, work);  // i hbar
  std::vector<Complex> res;
  res.reserve(grid.size());
  for (const auto& p : grid) {
    // i hbar times the q-Burgers residual with nu = i hbar/(2m) reproduces
    // every term of the Madelung form.
    res.push_back((i_hbar * burgers_terms(u, p, params.q, nu, bits).residual(v)).rounded(bits));
  }
  return make_report(grid, std::move(res), v);
}

BurgersVariant madelung_calibrate(const QuantumParams& params, unsigned bits) {
  params.validate();
  const Real one(1L, bits);
  const Real two(2L, bits);
  const Complex c_one(one);
  const Complex c_half(Real::parse("1/2", bits));
  std::vector<std::pair<std::string, HeatSolution<Complex>>> fields;
  fields.emplace_back("plane wave p=1", schrodinger_plane_wave(one, params));
  fields.emplace_back("waves p=+-1", schrodinger_superposition(Complex::zero(bits), {{c_one, one}, {c_one, -one}}, params));
  fields.emplace_back("waves p=1,2", schrodinger_superposition(Complex::zero(bits), {{c_one, one}, {c_half, two}}, params));
  fields.emplace_back("offset waves p=+-1",
                      schrodinger_superposition(Complex(Real(10L, bits)), {{c_one, one}, {c_one, -one}}, params));
  fields.emplace_back("H_2 polynomial", HeatSolution<Complex>::polynomial(kdf_explicit(2, params.q), params.q,
                                                                          params.nu(bits)));

  const Grid grid = make_grid({Real::parse("0.25", bits), Real::parse("0.8", bits), Real::parse("1.7", bits)},
                              {Real::parse("0.3", bits), Real::parse("0.9", bits)});
  using G = BurgersVariant::Grouping;
  using Tm = BurgersVariant::TimeArg;
  const std::vector<BurgersVariant> variants{{G::kOpOnProduct, Tm::kPlainTime},
                                             {G::kOpOnProduct, Tm::kDilatedTime},
                                             {G::kUTimesOpOnDu, Tm::kPlainTime},
                                             {G::kUTimesOpOnDu, Tm::kDilatedTime}};
  std::vector<Real> worst(variants.size(), Real::zero(bits));
  std::vector<std::vector<Real>> table(variants.size());
  const Complex nu = params.nu(bits);
  for (const auto& [name, psi] : fields) {
    const ComplexVelocity u = cole_hopf(psi);
    std::vector<Real> field_worst(variants.size(), Real::zero(bits));
    for (const auto& p : grid) {
      const BurgersTerms<Complex> terms = burgers_terms(u, p, params.q, nu, bits);
      for (std::size_t i = 0; i < variants.size(); ++i) {
        field_worst[i] = max(field_worst[i], abs(terms.residual(variants[i])));
      }
    }
    for (std::size_t i = 0; i < variants.size(); ++i) {
      table[i].push_back(field_worst[i].rounded(64));
      worst[i] = max(worst[i], field_worst[i]);
    }
  }
  const Real threshold(kCalibrationThreshold, bits);
  std::vector<std::size_t> passing;
  for (std::size_t i = 0; i < variants.size(); ++i) {
    if (worst[i] < threshold) passing.push_back(i);
  }
  if (passing.size() != 1) {
    std::ostringstream os;
    os << "Madelung variant calibration found " << passing.size() << " passing readings\n";
    for (std::size_t i = 0; i < variants.size(); ++i) {
      os << "  " << variants[i].to_string() << ":";
      for (const auto& r : table[i]) os << " " << r.to_string(6);
      os << "\n";
    }
    throw CalibrationError(os.str());
  }
  return variants[passing.front()];
}

const BurgersVariant& madelung_canonical_variant() {
  static const BurgersVariant v = madelung_calibrate(QuantumParams{});
  return v;
}

TwoFluidCheck two_fluid_split_check(const ComplexVelocity& u, const Grid& grid, const QuantumParams& params,
                                    unsigned bits) {
  params.validate();
  const unsigned work = bits + kGuardBits;
  const Real hbar(params.hbar, work);
  const Real m(params.m, work);
  const Real qv = params.q.value(work);
  const Real half_hbar = ldexp(hbar, -1);
  const Real half_m = ldexp(m, -1);
  const Real disp = hbar * hbar / (m * 2L);  // hbar^2 / 2m
  // The printed complex equation: u (1 - M) D u and u(x, t) in the cubic term.
  const BurgersVariant printed{BurgersVariant::Grouping::kUTimesOpOnDu, BurgersVariant::TimeArg::kPlainTime};

  std::vector<Real> re_eq, im_eq;
  std::vector<Complex> complex_res;
  Real discrepancy = Real::zero(bits);
  for (const auto& p : grid) {
    if (p.x.is_zero()) throw GridError("two_fluid_split_check is undefined at x = 0");
    const Real x = p.x.rounded(work);
    const Real t = p.t.rounded(work);
    const Real h = (qv - 1L) * x;
    const Complex c0 = u(x, t), c1 = u(x * qv, t), c2 = u(x * qv * qv, t);
    const std::function<Complex(const Real&)> along_t = [&](const Real& tt) { return u(x, tt); };
    const Complex ut = time_derivative_fd(along_t, t, work);

    const Real a0 = c0.real(), a1 = c1.real(), a2 = c2.real();  // u1
    const Real b0 = c0.imag(), b1 = c1.imag(), b2 = c2.imag();  // u2
    const Real da0 = (a1 - a0) / h, da1 = (a2 - a1) / (h * qv);
    const Real db0 = (b1 - b0) / h, db1 = (b2 - b1) / (h * qv);
    const Real d2a = (da1 - da0) / h, d2b = (db1 - db0) / h;
    const Real omd_a = da0 - da1, omd_b = db0 - db1;  // (1 - M) D u_j

    // Real part.
    const Real cross_x = b1 * a0 + a1 * b0;   // u2(qx) u1 + u1(qx) u2
    const Real cross_qx = b2 * a1 + a2 * b1;
    const Real lhs_re = -(hbar * ut.imag()) + disp * d2a;
    const Real rhs_re = half_m * ((a2 - a0) * (a0 * a1 - b0 * b1) - (b2 - b0) * (a0 * b1 + b0 * a1)) -
                        half_hbar * (a0 * omd_b + b0 * omd_a) + half_hbar * (cross_qx - cross_x) / h;
    // Imaginary part.
    const Real diag_x = a1 * a0 - b1 * b0;    // u1(qx) u1 - u2(qx) u2
    const Real diag_qx = a2 * a1 - b2 * b1;
    const Real lhs_im = hbar * ut.real() + disp * d2b;
    const Real rhs_im = half_m * ((a2 - a0) * (a0 * b1 + b0 * a1) + (b2 - b0) * (a0 * a1 - b0 * b1)) +
                        half_hbar * (a0 * omd_a - b0 * omd_b) - half_hbar * (diag_qx - diag_x) / h;

    // Complex residual from the same samples.
    const Complex nu = params.nu(work);
    const Complex i_hbar(Real::zero(work), hbar);
    const Complex hc = Complex(h);
    const Complex du0 = (c1 - c0) / hc, du1 = (c2 - c1) / (hc * Complex(qv));
    BurgersTerms<Complex> terms;
    terms.u_t = ut;
    terms.d2u = nu * (du1 - du0) / hc;
    terms.g_op_on_product = c0 * du0 - c1 * du1;
    terms.g_u_times_op = c0 * (du0 - du1);
    terms.d_product = (c2 * c1 - c1 * c0) / hc;
    terms.cubic_plain = (c2 - c0) * c1 * c0 / (nu * 4L);
    terms.cubic_dilated = terms.cubic_plain;
    const Complex r = i_hbar * terms.residual(printed);

    const Real e_re = lhs_re - rhs_re;
    const Real e_im = lhs_im - rhs_im;
    discrepancy = max(discrepancy, max(abs(e_re - r.real()), abs(e_im - r.imag())).rounded(bits));
    re_eq.push_back(e_re.rounded(bits));
    im_eq.push_back(e_im.rounded(bits));
    complex_res.push_back(r.rounded(bits));
  }
  return {make_report(grid, std::move(re_eq)), make_report(grid, std::move(im_eq)),
          make_report(grid, std::move(complex_res), printed), discrepancy};
}

MadelungLimitReport classical_madelung_limit(const HeatSolution<Complex>& psi, const QuantumParams& params,
                                             const Grid& grid, unsigned bits) {
  params.validate();
  const unsigned work = bits + kGuardBits;
  const Real hbar(params.hbar, work);
  const Real m(params.m, work);
  const Real k = hbar / (m * 2L);  // hbar / 2m
  const ComplexVelocity u = complex_cole_hopf(psi, params);
  auto rho = [&](const Real& x, const Real& t) {
    const Complex v = psi.value(x, t);
    const Real r = v.real() * v.real() + v.imag() * v.imag();
    if (r.is_zero()) throw DomainError("classical_madelung_limit: rho vanishes at x = " + x.to_string(20));
    return r;
  };

  MadelungLimitReport out{Real::zero(bits), Real::zero(bits), Real::zero(bits), Real::zero(bits)};
  for (const auto& p : grid) {
    const Real x = p.x.rounded(work);
    const Real t = p.t.rounded(work);
    const std::function<Complex(const Real&)> ux = [&](const Real& xx) { return u(xx, t); };
    const std::function<Complex(const Real&)> ut = [&](const Real& tt) { return u(x, tt); };
    const Complex u0 = u(x, t);
    const Complex d_t = time_derivative_fd(ut, t, work);
    const Complex d_x = time_derivative_fd(ux, x, work);
    const Complex d_xx = second_derivative_fd(ux, x, work);
    const Real& u1 = u0.real();
    const Real& u2 = u0.imag();

    const Real cont_red = -d_t.imag() + k * d_xx.real() - (d_x.real() * u2 + u1 * d_x.imag());
    const Real hj = d_t.real() + k * d_xx.imag() + (u1 * d_x.real() - u2 * d_x.imag());

    const std::function<Real(const Real&)> rho_t = [&](const Real& tt) { return rho(x, tt); };
    const std::function<Real(const Real&)> flux = [&](const Real& xx) { return rho(xx, t) * u(xx, t).real(); };
    const Real cont = time_derivative_fd(rho_t, t, work) + time_derivative_fd(flux, x, work);

    const std::function<Real(const Real&)> quantum = [&](const Real& xx) {
      const std::function<Real(const Real&)> root = [&](const Real& y) { return sqrt(rho(y, t)); };
      return second_derivative_fd(root, xx, work) / root(xx);
    };
    const Real euler = d_t.real() + u1 * d_x.real() - k * k * time_derivative_fd(quantum, x, work) * 2L;

    out.continuity_reduced = max(out.continuity_reduced, abs(cont_red).rounded(bits));
    out.hamilton_jacobi = max(out.hamilton_jacobi, abs(hj).rounded(bits));
    out.continuity = max(out.continuity, abs(cont).rounded(bits));
    out.euler = max(out.euler, abs(euler).rounded(bits));
  }
  return out;
}

HeatSolution<Complex> two_wave_test_state(const QuantumParams& params, unsigned bits) {
  const Real one(1L, bits);
  return schrodinger_superposition(Complex::zero(bits),
                                   {{Complex(one), one}, {Complex(Real::parse("1/2", bits)), Real(2L, bits)}},
                                   params);
}

}  // namespace qcalc
