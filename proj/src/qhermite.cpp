#include "qcalc/qhermite.hpp"

#include <algorithm>

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"

namespace qcalc {
namespace {

BigRational factorial(unsigned n) {
  BigRational r(1);
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

// [N+1]/(N+1), the prefactor shared by every one-step formula.
BigRational step_factor(unsigned n, const QBase& q) {
  return q_number(n + 1, q) / BigRational(static_cast<long>(n + 1));
}

BiQPoly times_x(const BiQPoly& p, std::size_t k) {
  return p.map_x([k](const QPoly& slice) { return slice.shifted(k); });
}

}  // namespace

const char* to_string(HermiteRoute route) {
  switch (route) {
    case HermiteRoute::kExplicitSum: return "explicit-sum";
    case HermiteRoute::kNTermRecurrence: return "n-term-recurrence";
    case HermiteRoute::kOperatorProduct: return "operator-product";
    case HermiteRoute::kHeatOperator: return "heat-operator";
    case HermiteRoute::kGenerating: return "generating-function";
  }
  return "?";
}

QPoly hermite_explicit(unsigned n, const QBase& q) {
  const BigRational two = q_number(2, q);
  const BigRational nf = q_factorial(n, q);
  std::vector<BigRational> c(n + 1, BigRational(0));
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const unsigned m = n - 2 * k;
    BigRational v = pow(two, m) * nf / (factorial(k) * q_factorial(m, q));
    c[m] = k % 2 ? BigRational(-v) : v;
  }
  return QPoly(std::move(c));
}

HermiteFamily hermite_explicit_family(unsigned n_max, const QBase& q) {
  HermiteFamily f{q, HermiteRoute::kExplicitSum, {}};
  for (unsigned n = 0; n <= n_max; ++n) f.polys.push_back(hermite_explicit(n, q));
  return f;
}

HermiteFamily hermite_nterm_recurrence(unsigned n_max, const QBase& q) {
  const BigRational qv = q.exact_value();
  const BigRational two = q_number(2, q);
  const BigRational one_minus_q2 = 1 - qv * qv;
  HermiteFamily f{q, HermiteRoute::kNTermRecurrence, {QPoly::constant(BigRational(1))}};
  for (unsigned n = 0; n < n_max; ++n) {
    const auto& h = f.polys;
    const BigRational bn = q_number(n, q);
    QPoly next = h[n].shifted(1) * BigRational(two);
    if (n >= 1) {
      next -= h[n - 1] * BigRational(2 * bn);
      next -= h[n - 1].shifted(2) * BigRational((qv - 1) * two * bn);
    }
    if (n >= 2) {
      QPoly sum;
      for (unsigned k = 0; k + 2 <= n; ++k) {
        const BigRational c =
            pow(one_minus_q2, n - k) / (q_factorial(k, q) * q_number(n - k + 1, q));
        sum += h[k].shifted(n - k + 1) * c;
      }
      next += sum * BigRational(two * q_factorial(n, q));
    }
    f.polys.push_back(next * step_factor(n, q));
  }
  return f;
}

QPoly hermite_operator_rep(unsigned n, const QBase& q) {
  const BigRational two = q_number(2, q);
  const BigRational a = BigRational(-1) / (two * two);
  return exp_q_laplacian(QPoly::monomial(BigRational(1), n), a, q) * BigRational(pow(two, n));
}

HermiteFamily hermite_heat_operator_family(unsigned n_max, const QBase& q) {
  HermiteFamily f{q, HermiteRoute::kHeatOperator, {}};
  for (unsigned n = 0; n <= n_max; ++n) f.polys.push_back(hermite_operator_rep(n, q));
  return f;
}

HermiteFamily hermite_operator_product(unsigned n_max, const QBase& q) {
  const BigRational qv = q.exact_value();
  const BigRational two = q_number(2, q);
  const BigRational one_minus_q2 = 1 - qv * qv;
  HermiteFamily f{q, HermiteRoute::kOperatorProduct, {QPoly::constant(BigRational(1))}};
  for (unsigned n = 0; n < n_max; ++n) {
    const QPoly& h = f.polys[n];
    const QPoly dh = q_derivative_poly(h, q);
    QPoly next = h.shifted(1) * BigRational(two);
    next -= dh * BigRational(2 / two);
    next -= dh.shifted(2) * BigRational(qv - 1);
    QPoly dl = dh;
    for (unsigned l = 2; l <= n; ++l) {
      dl = q_derivative_poly(dl, q);
      const BigRational c = pow(one_minus_q2, l) / (pow(two, l - 1) * q_number(l + 1, q));
      next += dl.shifted(l + 1) * c;
    }
    f.polys.push_back(next * step_factor(n, q));
  }
  return f;
}

HermiteFamily hermite_from_generating(unsigned m, const QBase& q) {
  const BigRational two = q_number(2, q);
  // t-series coefficients: e_q([2]tx) -> ([2]x)^j/[j]!, e^(-t^2) -> (-1)^j/j! at t^(2j).
  std::vector<QPoly> eq_part;
  for (unsigned j = 0; j <= m; ++j) {
    eq_part.push_back(QPoly::monomial(pow(two, j) / q_factorial(j, q), j));
  }
  HermiteFamily f{q, HermiteRoute::kGenerating, {}};
  for (unsigned n = 0; n <= m; ++n) {
    QPoly coeff;
    for (unsigned j = 0; 2 * j <= n; ++j) {
      const BigRational g = (j % 2 ? BigRational(-1) : BigRational(1)) / factorial(j);
      coeff += eq_part[n - 2 * j] * g;
    }
    f.polys.push_back(coeff * q_factorial(n, q));
  }
  return f;
}

QPoly classical_hermite(unsigned n) {
  QPoly prev;
  QPoly cur = QPoly::constant(BigRational(1));
  for (unsigned k = 0; k < n; ++k) {
    QPoly next = cur.shifted(1) * BigRational(2) - prev * BigRational(2L * k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool hermite_rec2_check(unsigned n, const QBase& q) {
  if (n < 1) throw DomainError("rec2 needs N >= 1");
  return q_derivative_poly(hermite_explicit(n, q), q) ==
         hermite_explicit(n - 1, q) * BigRational(q_number(2, q) * q_number(n, q));
}

bool hermite_rec3_check(unsigned n, const QBase& q) {
  if (n < 2) throw DomainError("rec3 needs N >= 2");
  const QPoly h = hermite_explicit(n, q);
  const QPoly lhs = h.derivative().shifted(1) - h * BigRational(static_cast<long>(n));
  return lhs == hermite_explicit(n - 2, q) * BigRational(2 * q_number(n, q) * q_number(n - 1, q));
}

QPoly qdiff_equation_check(unsigned n, const QBase& q) {
  const BigRational two2 = pow(q_number(2, q), 2);
  const QPoly h = hermite_explicit(n, q);
  return q_derivative_poly(h, q, 2) * BigRational(2) - h.derivative().shifted(1) * two2 +
         h * BigRational(two2 * n);
}

BiQPoly kdf_explicit(unsigned n, const QBase& q) {
  const BigRational nf = q_factorial(n, q);
  BiQPoly p;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const unsigned m = n - 2 * k;
    p += BiQPoly::monomial(nf / (factorial(k) * q_factorial(m, q)), m, k);
  }
  return p;
}

KdfFamily kdf_explicit_family(unsigned n_max, const QBase& q) {
  KdfFamily f{q, HermiteRoute::kExplicitSum, {}};
  for (unsigned n = 0; n <= n_max; ++n) f.polys.push_back(kdf_explicit(n, q));
  return f;
}

KdfFamily kdf_nterm_recurrence(unsigned n_max, const QBase& q) {
  const BigRational qv = q.exact_value();
  const BigRational two = q_number(2, q);
  const BigRational one_minus_q2 = 1 - qv * qv;
  KdfFamily f{q, HermiteRoute::kNTermRecurrence, {BiQPoly::monomial(BigRational(1), 0, 0)}};
  for (unsigned n = 0; n < n_max; ++n) {
    const auto& h = f.polys;
    const BigRational bn = q_number(n, q);
    BiQPoly next = times_x(h[n], 1);
    if (n >= 1) {
      next += h[n - 1].shifted_s(1) * BigRational(2 * bn);
      next -= times_x(h[n - 1], 2) * BigRational((qv - 1) * bn / two);
    }
    if (n >= 2) {
      BiQPoly sum;
      for (unsigned k = 0; k + 2 <= n; ++k) {
        const BigRational c = pow(one_minus_q2, n - k) /
                              (q_factorial(k, q) * q_number(n - k + 1, q) * pow(two, n - k));
        sum += times_x(h[k], n - k + 1) * c;
      }
      next += sum * q_factorial(n, q);
    }
    f.polys.push_back(next * step_factor(n, q));
  }
  return f;
}

KdfFamily kdf_operator_product(unsigned n_max, const QBase& q, KdfOperatorReading reading) {
  const BigRational qv = q.exact_value();
  const BigRational two = q_number(2, q);
  const BigRational one_minus_q2 = 1 - qv * qv;
  KdfFamily f{q, HermiteRoute::kOperatorProduct, {BiQPoly::monomial(BigRational(1), 0, 0)}};
  for (unsigned n = 0; n < n_max; ++n) {
    const BiQPoly& h = f.polys[n];
    const BiQPoly dh = q_derivative_poly(h, q);
    BiQPoly next = times_x(h, 1);
    next += dh.shifted_s(1) * BigRational(2);
    next += times_x(dh, 2) * BigRational((1 - qv) / two);
    BiQPoly dl = dh;
    for (unsigned l = 2; l <= n; ++l) {
      dl = q_derivative_poly(dl, q);
      const BigRational d = q_number(reading == KdfOperatorReading::kAsPrinted ? l : l + 1, q);
      next += times_x(dl, l + 1) * BigRational(pow(one_minus_q2, l) / (pow(two, l) * d));
    }
    f.polys.push_back(next * step_factor(n, q));
  }
  return f;
}

ScalingCheck kdf_scaling_check(unsigned n, const QBase& q, const std::vector<ScalingSample>& samples) {
  const QPoly h = hermite_explicit(n, q);
  const BiQPoly kdf = kdf_explicit(n, q);
  unsigned bits = kMinPrecisionBits;
  for (const auto& s : samples) bits = std::max({bits, s.x.precision(), s.nu.precision(), s.t.precision()});

  ScalingCheck out{true, Real::zero(bits)};
  for (const auto& sample : samples) {
    const Real s = (sample.nu * sample.t).rounded(bits);
    if (!(s < 0)) throw DomainError("kdf_scaling_check: needs nu*t < 0, got " + s.to_string(20));
    const Real root = sqrt(-s);
    const Real lhs = kdf.eval_at(sample.x.rounded(bits), s);
    const Real rhs = pow(root, static_cast<long>(n)) * h.eval_at(sample.x / (Real(q_number(2, q), bits) * root));
    const Real err = abs(lhs - rhs) / max(Real(1L, bits), abs(lhs));
    if (err > out.max_rel_error) out.max_rel_error = err;
  }
  out.pass = out.max_rel_error <= ldexp(Real(1L, bits), -static_cast<long>(bits) + 32);
  return out;
}

std::optional<std::string> first_mismatch(const QPoly& a, const QPoly& b) {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeff(i) != b.coeff(i)) {
      return "x^" + std::to_string(i) + ": " + to_string(a.coeff(i)) + " vs " + to_string(b.coeff(i));
    }
  }
  return std::nullopt;
}

std::optional<std::string> first_mismatch(const BiQPoly& a, const BiQPoly& b) {
  const std::size_t len = std::max(a.slices().size(), b.slices().size());
  for (std::size_t j = 0; j < len; ++j) {
    if (auto m = first_mismatch(a.slice(j), b.slice(j))) return "s^" + std::to_string(j) + " " + *m;
  }
  return std::nullopt;
}

namespace {

template <class F>
std::optional<std::string> family_mismatch(const F& a, const F& b) {
  if (a.size() != b.size()) {
    return std::string("family sizes differ: ") + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  }
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (auto m = first_mismatch(a[n], b[n])) {
      return "N=" + std::to_string(n) + " (" + to_string(a.route) + " vs " + to_string(b.route) + ") " + *m;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> first_mismatch(const HermiteFamily& a, const HermiteFamily& b) {
  return family_mismatch(a, b);
}
std::optional<std::string> first_mismatch(const KdfFamily& a, const KdfFamily& b) {
  return family_mismatch(a, b);
}

}  // namespace qcalc
