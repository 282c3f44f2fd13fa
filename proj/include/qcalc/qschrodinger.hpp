// The q-Schrodinger equation  (d/dt - i hbar/(2m) D_x^2) psi = 0, read as the
// q-heat equation with nu = i hbar/(2m), and the complex q-Burgers-Madelung
// equation obtained from it by u = -(i hbar/m) D_x psi / psi.

#ifndef QCALC_QSCHRODINGER_HPP_
#define QCALC_QSCHRODINGER_HPP_

#include <optional>
#include <vector>

#include "qcalc/poly.hpp"
#include "qcalc/qbase.hpp"
#include "qcalc/qburgers.hpp"
#include "qcalc/qheat.hpp"
#include "qcalc/rational.hpp"
#include "qcalc/real.hpp"
#include "qcalc/residual.hpp"

namespace qcalc {

struct QuantumParams {
  BigRational hbar{1};
  BigRational m{1};
  QBase q = QBase::exact(2);

  // Throws DomainError unless hbar > 0 and m > 0.
  void validate() const;
  // i hbar / (2m), exact and lifted.
  GaussianRational nu_exact() const;
  Complex nu(unsigned bits) const;
};

using ComplexVelocity = VelocityField<Complex>;

// e^(-i p^2 t / (2 m hbar)) e_q(i p x / hbar): the plane wave with k = i p / hbar.
HeatSolution<Complex> schrodinger_plane_wave(const Real& p, const QuantumParams& params);
// sum_n a_n psi_(p_n), with `offset` added.
HeatSolution<Complex> schrodinger_superposition(const Complex& offset, const std::vector<std::pair<Complex, Real>>& terms,
                                                const QuantumParams& params);

// H^(s)_N(x, it) as a polynomial in (x, t):
//   sum_k (i hbar t / 2m)^k [N]! x^(N-2k) / (k! d_k)
// with d_k = [N-2k]_q! (kFactorial) or d_k = [N-2k]_q as printed
// (kAsPrinted; undefined for even N because [0]_q = 0, returns nullopt).
enum class SchrodingerKdfReading { kFactorial, kAsPrinted };
std::optional<BiGaussPoly> kdf_complex(unsigned n, const QuantumParams& params,
                                       SchrodingerKdfReading reading = SchrodingerKdfReading::kFactorial);

// (d/dt - i hbar/(2m) D_x^2) P for P(x, t); zero for exact solutions.
BiGaussPoly schrodinger_residual_poly(const BiGaussPoly& p, const QuantumParams& params);

// Coefficients of p^N, N = 0..n_max, in e^(-i p^2 t/(2 m hbar)) e_q(i p x / hbar),
// as polynomials in (x, t).
std::vector<BiGaussPoly> schrodinger_generating_coefficients(unsigned n_max, const QuantumParams& params);

// u = -(i hbar / m) D_x psi / psi; psi must carry nu = i hbar / (2m).
ComplexVelocity complex_cole_hopf(const HeatSolution<Complex>& psi, const QuantumParams& params);

// i hbar u_t + hbar^2/(2m) D^2 u
//   - [ (i hbar/2) G - (i hbar/2) D_x(u(qx) u) + (m/2)(u(q^2 x) - u(x, T)) u(qx) u ]
// with G and T read per `variant` (omitted: the Madelung calibration).
ResidualReport<Complex> madelung_residual(const ComplexVelocity& u, const Grid& grid, const QuantumParams& params,
                                          unsigned bits, std::optional<BurgersVariant> variant = std::nullopt);

// Same sweep as variant_calibrate, on complex Cole-Hopf images of
// q-Schrodinger solutions. Throws CalibrationError unless exactly one
// reading passes.
BurgersVariant madelung_calibrate(const QuantumParams& params, unsigned bits = kDefaultPrecisionBits);
const BurgersVariant& madelung_canonical_variant();

// The printed real-part and imaginary-part equations evaluated from
// u1 = Re u, u2 = Im u, next to the components of the complex residual.
struct TwoFluidCheck {
  ResidualReport<Real> real_equation;
  ResidualReport<Real> imag_equation;
  ResidualReport<Complex> complex_residual;
  Real max_discrepancy;  // max |printed - component| over both equations
};
TwoFluidCheck two_fluid_split_check(const ComplexVelocity& u, const Grid& grid, const QuantumParams& params,
                                    unsigned bits);

// Classical q -> 1 reductions, all derivatives by finite differences, with
// u1 = Re u and u2 = Im u from the q-Cole-Hopf image of psi:
//   continuity (reduced)  -(u2)_t + hbar/(2m) (u1)_xx - (u1 u2)_x
//   Hamilton-Jacobi       (u1)_t + hbar/(2m) (u2)_xx + 1/2 (u1^2 - u2^2)_x
//   continuity            rho_t + (rho v)_x,  rho = |psi|^2, v = u1
//   Euler                 v_t + v v_x - (hbar^2/(2m^2) (sqrt rho)_xx / sqrt rho)_x
// Each entry is the max |residual| over the grid. DomainError if rho = 0.
struct MadelungLimitReport {
  Real continuity_reduced;
  Real hamilton_jacobi;
  Real continuity;
  Real euler;
};
MadelungLimitReport classical_madelung_limit(const HeatSolution<Complex>& psi, const QuantumParams& params,
                                             const Grid& grid, unsigned bits);

// psi_(p=1) + psi_(p=2) / 2 at q = 1 + eps, the smooth two-wave test state.
HeatSolution<Complex> two_wave_test_state(const QuantumParams& params, unsigned bits);

}  // namespace qcalc

#endif  // QCALC_QSCHRODINGER_HPP_
