// Copyright 2026 The geogate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEOGATE_DYNAMICS_H_
#define GEOGATE_DYNAMICS_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "geogate/bloch_path.h"
#include "geogate/linalg.h"
#include "geogate/pulse_synth.h"

namespace geogate {

/// Unit-trace Hermitian positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12), trace (1e-10) and positivity (-1e-9);
  /// throws DomainError otherwise.
  explicit DensityMatrix(Matrix rho);

  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix basis_state(std::size_t dim, std::size_t k);

  const Matrix& matrix() const { return rho_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  double trace_error() const;
  double min_eigenvalue() const;
  std::vector<double> populations() const;

 private:
  Matrix rho_;
};

/// Auxiliary basis and accumulated phases gamma_+/- of a cyclic evolution.
struct EvolutionFrame {
  double alpha0 = 0.0;
  double beta0 = 0.0;
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;

  Vector phi_plus() const { return auxiliary_states(alpha0, beta0).first; }
  Vector phi_minus() const { return auxiliary_states(alpha0, beta0).second; }
};

struct ErrorFractions {
  double epsilon = 0.0;  // Rabi amplitude
  double delta = 0.0;    // detuning, in units of Omega0

  bool within_scan_range() const { return std::abs(epsilon) <= 0.1 && std::abs(delta) <= 0.1; }
};

struct DecoherenceRates {
  double gamma_decay = 0.0;    // Gamma, rad/ns
  double kappa_dephase = 0.0;  // kappa, rad/ns

  static DecoherenceRates transmon_default() { return {mhz_to_rad_per_ns(3e-3), mhz_to_rad_per_ns(3e-3)}; }
  static DecoherenceRates none() { return {}; }
};

/// Transmon parameters, all rad/ns.
struct TransmonParams {
  double anharmonicity = mhz_to_rad_per_ns(220.0);  // single-qubit model
  double g = mhz_to_rad_per_ns(10.0);
  double delta = mhz_to_rad_per_ns(500.0);  // omega_a - omega_b
  double anh_a = mhz_to_rad_per_ns(220.0);
  double anh_b = mhz_to_rad_per_ns(200.0);
};

/// Time-dependent Hamiltonian H(t) of fixed dimension. Immutable and shareable.
class HamiltonianSampler {
 public:
  using Fill = std::function<void(double t, Matrix& out)>;

  HamiltonianSampler(std::size_t dim, Fill fill) : dim_(dim), fill_(std::move(fill)) {}

  std::size_t dim() const { return dim_; }
  /// Writes H(t) into `out`, which must be dim x dim.
  void fill(double t, Matrix& out) const { fill_(t, out); }
  Matrix at(double t) const;

 private:
  std::size_t dim_;
  Fill fill_;
};

/// Detuning and |1><0| amplitude as functions of time.
using DriveFn = std::function<DrivePulse::Sample(double)>;

DriveFn drive_of(DrivePulse pulse);

/// One dissipator term (rate / 2) * L(op), L(c) = 2 c rho c^dag - c^dag c rho - rho c^dag c.
struct CollapseOp {
  Matrix op;
  double rate;
};
using CollapseSet = std::vector<CollapseOp>;

/// sigma_- = |0><1| and sigma_z = |1><1| - |0><0| embedded in `dim` levels. Zero rates are omitted.
CollapseSet transmon_collapse(std::size_t dim, const DecoherenceRates& rates);

/// The same pair of operators per qubit in the 3 x 3 product space |ab> -> 3a + b.
CollapseSet pair_collapse(const DecoherenceRates& rates);

struct EvolutionOptions {
  double dt = 1e-3;               // ns; the effective step is t_span / ceil(t_span / dt)
  std::size_t record_every = 0;   // store every k-th step (0: final state only)
  bool convergence_guard = false; // rerun at dt / 2 and compare
  double guard_tolerance = 1e-6;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix> states;
};

/// Fixed-step RK4 integration of the master equation. Hermiticity is restored each step.
/// With the guard on, throws ConvergenceError when halving dt moves any entry of the
/// final state by more than guard_tolerance.
Trajectory evolve_lindblad(const HamiltonianSampler& h, const DensityMatrix& rho0, const CollapseSet& collapse,
                           double t0, double t1, const EvolutionOptions& options = {});

/// Propagates arbitrary operators (e.g. matrix units) under the same linear master equation.
std::vector<Matrix> propagate_operators(const HamiltonianSampler& h, std::vector<Matrix> ops,
                                        const CollapseSet& collapse, double t0, double t1, double dt);

/// Schrodinger propagator U(t1, t0) by RK4.
Matrix propagate_unitary(const HamiltonianSampler& h, double t0, double t1, double dt);

/// Closed-system state evolution, recording every step.
Trajectory evolve_state(const HamiltonianSampler& h, const Vector& psi0, double t0, double t1, double dt);

/// H = Delta/2 (|1><1| - |0><0|) + [Omega/2 |1><0| + h.c.].
HamiltonianSampler two_level_hamiltonian(DriveFn drive);

/// Transmon truncated to |0>, |1>, |2> in the frame rotating with the drive:
/// diag(-Delta/2, Delta/2, 3 Delta/2 - anh) plus Omega/2 (|1><0| + sqrt2 |2><1|) + h.c.
HamiltonianSampler three_level_hamiltonian(DriveFn drive, double anharmonicity);

/// H + (eps/2)(Omega |1><0| + h.c.) + (delta/2) Omega0 (|1><1| - |0><0|), acting on the
/// qubit levels of whatever dimension `base` has.
HamiltonianSampler error_inject(const HamiltonianSampler& base, const ErrorFractions& err, DriveFn drive,
                                double omega0);

/// Two-qubit modulation waveforms on the half-step grid of the integrator.
struct TwoQubitDrive {
  double tau = 0.0;
  std::vector<double> t;
  std::vector<double> g_prime;      // 2 sqrt2 g J1(eta)
  std::vector<double> delta_prime;  // Delta'(t)
  std::vector<double> varphi;       // modulation phase
  std::vector<double> eta;          // modulation amplitude
  std::vector<double> nu;           // modulation frequency = Delta' + anh_b + Delta
  std::vector<double> theta;        // integral of nu + varphi
  double frame_phase = 0.0;         // integral of Delta' over [0, tau]

  double spacing() const { return tau / static_cast<double>(t.size() - 1); }
};

/// eta(t) = J1^{-1}[g'(t) / (2 sqrt2 g)] sample by sample.
std::vector<double> eta_waveform(const std::vector<double>& g_prime, double g);

/// Reuses the pole-start synthesis for gamma' in the {|11>, |02>} subspace with
/// amplitude budget g'_max; the result satisfies the frequency-matching condition exactly.
TwoQubitDrive make_two_qubit_drive(const TransmonParams& params, double gamma_prime, double g_prime_max, double dt,
                                   const std::vector<double>& coeffs = {});

/// Largest |nu - (Delta' + anh_b + Delta)| over the grid.
double frequency_matching_error(const TwoQubitDrive& drive, const TransmonParams& params);

inline constexpr std::size_t pair_index(std::size_t a, std::size_t b) { return 3 * a + b; }

/// Interaction-picture Hamiltonian of two coupled transmons (9 x 9, |ab> -> 3a + b).
HamiltonianSampler two_qubit_full_hamiltonian(const TransmonParams& params, std::shared_ptr<const TwoQubitDrive> drive);

/// 1/2 [[-Delta', g' e^{-i varphi}], [g' e^{i varphi}, Delta']] in {|11>, |02>}.
HamiltonianSampler effective_two_qubit_hamiltonian(std::shared_ptr<const TwoQubitDrive> drive);

/// Places a sampler on the listed basis states of a larger space (zero elsewhere).
HamiltonianSampler embed(const HamiltonianSampler& h, std::vector<std::size_t> indices, std::size_t dim);

/// Undoes the transformation exp[-i Theta(t) (|11><11| - |02><02|) / 2] at the final time.
Matrix two_qubit_frame_correction(const TwoQubitDrive& drive);

struct ParallelTransportReport {
  double max_violation = 0.0;  // max over grid of |<psi_+/-|H|psi_+/->|
  double cyclic_plus = 0.0;    // |<phi_+(0)|psi_+(tau)>|
  double cyclic_minus = 0.0;
  EvolutionFrame frame;        // accumulated phases gamma_+/-
};

/// Evolves |psi_+/->(0) = |phi_+/->(0)> under `h` on the pulse's half-step grid.
ParallelTransportReport parallel_transport_check(const PathSpec& spec, const DrivePulse& pulse,
                                                 const HamiltonianSampler& h);
ParallelTransportReport parallel_transport_check(const PathSpec& spec, const DrivePulse& pulse);

/// t_ns, one population column per label, and an optional fidelity column.
void write_trace_csv(const std::filesystem::path& path, const Trajectory& traj, const std::vector<std::string>& labels,
                     const std::vector<double>* fidelity = nullptr);

}  // namespace geogate

#endif  // GEOGATE_DYNAMICS_H_
