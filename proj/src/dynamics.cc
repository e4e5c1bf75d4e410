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

#include "geogate/dynamics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "geogate/bessel.h"
#include "geogate/csv.h"
#include "geogate/parallel.h"

namespace geogate {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// Value of uniformly sampled data at time t; exact at nodes, linear in between.
double sample_at(const std::vector<double>& values, double spacing, double t) {
  const double x = std::clamp(t / spacing, 0.0, static_cast<double>(values.size() - 1));
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-9) return values[static_cast<std::size_t>(nearest)];
  const auto i = static_cast<std::size_t>(std::floor(x));
  const double w = x - static_cast<double>(i);
  return (1.0 - w) * values[i] + w * values[i + 1];
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& values, double spacing) {
  std::vector<double> out(values.size(), 0.0);
  for (std::size_t i = 1; i < values.size(); ++i) out[i] = out[i - 1] + 0.5 * spacing * (values[i] + values[i - 1]);
  return out;
}

// Right-hand side of the master equation, written as
//   G rho + rho G^dag + sum_k r_k c_k rho c_k^dag,  G = -iH - sum_k (r_k / 2) c_k^dag c_k.
// Diagonal collapse operators reduce to an elementwise product.
class LindbladRhs {
 public:
  LindbladRhs(const HamiltonianSampler& h, const CollapseSet& collapse)
      : h_(h), dim_(static_cast<Eigen::Index>(h.dim())) {
    anticomm_ = Matrix::Zero(dim_, dim_);
    diagonal_jump_ = Matrix::Zero(dim_, dim_);
    for (const auto& c : collapse) {
      if (c.rate == 0.0) continue;
      if (c.rate < 0.0) throw DomainError("collapse rates must be non-negative");
      anticomm_ += 0.5 * c.rate * c.op.adjoint() * c.op;
      const bool diagonal = (c.op - Matrix(c.op.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0;
      if (diagonal) {
        const Vector d = c.op.diagonal();
        diagonal_jump_ += c.rate * d * d.adjoint();
        has_diagonal_ = true;
      } else {
        jumps_.push_back(c.op);
        rates_.push_back(c.rate);
      }
    }
    ham_ = Matrix::Zero(dim_, dim_);
    tmp_ = Matrix::Zero(dim_, dim_);
  }

  // Prepares G for time t; reused for every evaluation until the next call.
  void set_time(double t) {
    h_.fill(t, ham_);
    g_ = -kI * ham_ - anticomm_;
    g_adj_ = g_.adjoint();
  }

  void apply(const Matrix& rho, Matrix& out) {
    out.noalias() = g_ * rho;
    out.noalias() += rho * g_adj_;
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
      tmp_.noalias() = jumps_[k] * rho;
      out.noalias() += rates_[k] * tmp_ * jumps_[k].adjoint();
    }
    if (has_diagonal_) out += diagonal_jump_.cwiseProduct(rho);
  }

 private:
  const HamiltonianSampler& h_;
  Eigen::Index dim_;
  Matrix anticomm_, diagonal_jump_, ham_, g_, g_adj_, tmp_;
  std::vector<Matrix> jumps_;
  std::vector<double> rates_;
  bool has_diagonal_ = false;
};

// Classic RK4 for a linear time-dependent generator. `rhs` exposes set_time/apply.
template <typename Rhs, typename Observer>
Matrix rk4(Rhs& rhs, Matrix state, double t0, double t1, double dt, bool hermitize, Observer&& observe) {
  if (t1 == t0) return state;
  const std::size_t steps = step_count(t1 - t0, dt);
  const double h = (t1 - t0) / static_cast<double>(steps);
  const auto rows = state.rows(), cols = state.cols();
  Matrix k1(rows, cols), k2(rows, cols), k3(rows, cols), k4(rows, cols), probe(rows, cols);
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = t0 + static_cast<double>(n) * h;
    rhs.set_time(t);
    rhs.apply(state, k1);
    rhs.set_time(t + 0.5 * h);
    probe = state + 0.5 * h * k1;
    rhs.apply(probe, k2);
    probe = state + 0.5 * h * k2;
    rhs.apply(probe, k3);
    rhs.set_time(t + h);
    probe = state + h * k3;
    rhs.apply(probe, k4);
    state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (hermitize) state = 0.5 * (state + state.adjoint()).eval();
    observe(n + 1, t0 + static_cast<double>(n + 1) * h, state);
  }
  return state;
}

class SchrodingerRhs {
 public:
  explicit SchrodingerRhs(const HamiltonianSampler& h) : h_(h), ham_(Matrix::Zero(h.dim(), h.dim())) {}
  void set_time(double t) { h_.fill(t, ham_); }
  void apply(const Matrix& u, Matrix& out) {
    out.noalias() = ham_ * u;
    out *= -kI;
  }
  const Matrix& hamiltonian() const { return ham_; }

 private:
  const HamiltonianSampler& h_;
  Matrix ham_;
};

}  // namespace

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) throw DomainError("density matrix must be square");
  if (hermiticity_error(rho_) > 1e-12) throw DomainError("density matrix is not Hermitian");
  if (trace_error() > 1e-10) throw DomainError("density matrix trace differs from 1");
  if (min_eigenvalue() < -1e-9) throw DomainError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const Vector unit = psi / psi.norm();
  Matrix rho = unit * unit.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t k) {
  Matrix rho = Matrix::Zero(dim, dim);
  rho(k, k) = 1.0;
  return DensityMatrix(std::move(rho));
}

double DensityMatrix::trace_error() const { return std::abs(rho_.trace() - Complex{1.0, 0.0}); }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::vector<double> DensityMatrix::populations() const {
  std::vector<double> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = rho_(i, i).real();
  return out;
}

Matrix HamiltonianSampler::at(double t) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  fill_(t, out);
  return out;
}

DriveFn drive_of(DrivePulse pulse) {
  auto shared = std::make_shared<const DrivePulse>(std::move(pulse));
  return [shared](double t) { return shared->at(t); };
}

CollapseSet transmon_collapse(std::size_t dim, const DecoherenceRates& rates) {
  Matrix lower = Matrix::Zero(dim, dim);
  lower(0, 1) = 1.0;
  Matrix z = Matrix::Zero(dim, dim);
  z(0, 0) = -1.0;
  z(1, 1) = 1.0;
  CollapseSet out;
  if (rates.gamma_decay != 0.0) out.push_back({lower, rates.gamma_decay});
  if (rates.kappa_dephase != 0.0) out.push_back({z, rates.kappa_dephase});
  return out;
}

CollapseSet pair_collapse(const DecoherenceRates& rates) {
  const auto single = transmon_collapse(3, rates);
  const Matrix id = Matrix::Identity(3, 3);
  CollapseSet out;
  for (const auto& c : single) {
    out.push_back({Eigen::kroneckerProduct(c.op, id).eval(), c.rate});
    out.push_back({Eigen::kroneckerProduct(id, c.op).eval(), c.rate});
  }
  return out;
}

Trajectory evolve_lindblad(const HamiltonianSampler& h, const DensityMatrix& rho0, const CollapseSet& collapse,
                           double t0, double t1, const EvolutionOptions& options) {
  if (rho0.dim() != h.dim()) throw DomainError("evolve_lindblad: state and Hamiltonian dimensions differ");
  LindbladRhs rhs(h, collapse);
  Trajectory traj;
  traj.times.push_back(t0);
  traj.states.push_back(rho0.matrix());
  const std::size_t steps = t1 == t0 ? 0 : step_count(t1 - t0, options.dt);
  Matrix final_state = rk4(rhs, rho0.matrix(), t0, t1, options.dt, true,
                           [&](std::size_t n, double t, const Matrix& state) {
                             if (options.record_every && (n % options.record_every == 0 || n == steps)) {
                               traj.times.push_back(n == steps ? t1 : t);
                               traj.states.push_back(state);
                             }
                           });
  if (!options.record_every && steps > 0) {
    traj.times.push_back(t1);
    traj.states.push_back(final_state);
  }
  if (options.convergence_guard && t1 != t0) {
    LindbladRhs fine_rhs(h, collapse);
    const Matrix fine = rk4(fine_rhs, rho0.matrix(), t0, t1, 0.5 * options.dt, true, [](auto, auto, const auto&) {});
    const double change = (fine - final_state).cwiseAbs().maxCoeff();
    if (change > options.guard_tolerance)
      throw ConvergenceError("evolve_lindblad: halving dt changed the final state by " + std::to_string(change));
  }
  return traj;
}

std::vector<Matrix> propagate_operators(const HamiltonianSampler& h, std::vector<Matrix> ops,
                                        const CollapseSet& collapse, double t0, double t1, double dt) {
  parallel_for(ops.size(), [&](std::size_t k) {
    LindbladRhs rhs(h, collapse);
    ops[k] = rk4(rhs, std::move(ops[k]), t0, t1, dt, false, [](auto, auto, const auto&) {});
  });
  return ops;
}

Matrix propagate_unitary(const HamiltonianSampler& h, double t0, double t1, double dt) {
  SchrodingerRhs rhs(h);
  return rk4(rhs, Matrix::Identity(h.dim(), h.dim()), t0, t1, dt, false, [](auto, auto, const auto&) {});
}

Trajectory evolve_state(const HamiltonianSampler& h, const Vector& psi0, double t0, double t1, double dt) {
  SchrodingerRhs rhs(h);
  Trajectory traj{{t0}, {Matrix(psi0)}};
  rk4(rhs, Matrix(psi0), t0, t1, dt, false, [&](std::size_t, double t, const Matrix& psi) {
    traj.times.push_back(t);
    traj.states.push_back(psi);
  });
  return traj;
}

HamiltonianSampler two_level_hamiltonian(DriveFn drive) {
  return HamiltonianSampler(2, [drive = std::move(drive)](double t, Matrix& out) {
    const auto s = drive(t);
    out(0, 0) = -0.5 * s.detuning;
    out(1, 1) = 0.5 * s.detuning;
    out(1, 0) = 0.5 * s.omega;
    out(0, 1) = 0.5 * std::conj(s.omega);
  });
}

HamiltonianSampler three_level_hamiltonian(DriveFn drive, double anharmonicity) {
  return HamiltonianSampler(3, [drive = std::move(drive), anharmonicity](double t, Matrix& out) {
    const auto s = drive(t);
    out.setZero();
    out(0, 0) = -0.5 * s.detuning;
    out(1, 1) = 0.5 * s.detuning;
    out(2, 2) = 1.5 * s.detuning - anharmonicity;
    out(1, 0) = 0.5 * s.omega;
    out(0, 1) = 0.5 * std::conj(s.omega);
    out(2, 1) = 0.5 * kSqrt2 * s.omega;
    out(1, 2) = 0.5 * kSqrt2 * std::conj(s.omega);
  });
}

HamiltonianSampler error_inject(const HamiltonianSampler& base, const ErrorFractions& err, DriveFn drive,
                                double omega0) {
  if (err.epsilon == 0.0 && err.delta == 0.0) return base;
  return HamiltonianSampler(base.dim(), [base, err, drive = std::move(drive), omega0](double t, Matrix& out) {
    base.fill(t, out);
    const Complex omega = drive(t).omega;
    out(1, 0) += 0.5 * err.epsilon * omega;
    out(0, 1) += 0.5 * err.epsilon * std::conj(omega);
    out(1, 1) += 0.5 * err.delta * omega0;
    out(0, 0) -= 0.5 * err.delta * omega0;
  });
}

std::vector<double> eta_waveform(const std::vector<double>& g_prime, double g) {
  if (!(g > 0.0)) throw DomainError("eta_waveform: coupling must be positive");
  std::vector<double> eta(g_prime.size());
  for (std::size_t i = 0; i < g_prime.size(); ++i) eta[i] = invert_bessel_j1(g_prime[i] / (2.0 * kSqrt2 * g));
  return eta;
}

TwoQubitDrive make_two_qubit_drive(const TransmonParams& params, double gamma_prime, double g_prime_max, double dt,
                                   const std::vector<double>& coeffs) {
  TwoQubitDrive drive;
  if (gamma_prime == 0.0) {
    // Identity gate: no modulation and no time.
    drive.t = {0.0};
    drive.g_prime = drive.delta_prime = drive.varphi = drive.eta = drive.theta = {0.0};
    drive.nu = {params.anh_b + params.delta};
    return drive;
  }
  const auto pulse = synthesize_pulse(PathSpec::pole_start(gamma_prime), coeffs, AmplitudeBudget(g_prime_max), dt);
  drive.tau = pulse.tau;
  drive.t = pulse.t;
  drive.g_prime = pulse.envelope;
  drive.delta_prime = pulse.detuning;
  drive.varphi = pulse.phase;
  drive.eta = eta_waveform(drive.g_prime, params.g);
  const double carrier = params.anh_b + params.delta;
  drive.nu.resize(drive.t.size());
  for (std::size_t i = 0; i < drive.t.size(); ++i) drive.nu[i] = drive.delta_prime[i] + carrier;
  const auto swept = cumulative_trapezoid(drive.delta_prime, drive.spacing());
  drive.theta.resize(drive.t.size());
  for (std::size_t i = 0; i < drive.t.size(); ++i) drive.theta[i] = carrier * drive.t[i] + swept[i] + drive.varphi[i];
  drive.frame_phase = swept.back();
  return drive;
}

double frequency_matching_error(const TwoQubitDrive& drive, const TransmonParams& params) {
  double worst = 0.0;
  for (std::size_t i = 0; i < drive.nu.size(); ++i)
    worst = std::max(worst, std::abs(drive.nu[i] - (drive.delta_prime[i] + params.anh_b + params.delta)));
  return worst;
}

HamiltonianSampler two_qubit_full_hamiltonian(const TransmonParams& params,
                                              std::shared_ptr<const TwoQubitDrive> drive) {
  return HamiltonianSampler(9, [params, drive = std::move(drive)](double t, Matrix& out) {
    out.setZero();
    if (params.g == 0.0) return;
    double eta = 0.0, theta = 0.0;
    if (drive->t.size() > 1) {
      eta = sample_at(drive->eta, drive->spacing(), t);
      theta = sample_at(drive->theta, drive->spacing(), t);
    }
    const Complex modulation = std::polar(1.0, -eta * std::sin(theta));
    const double g = params.g;
    const Complex a = g * std::polar(1.0, params.delta * t) * modulation;
    const Complex b = g * kSqrt2 * std::polar(1.0, (params.delta + params.anh_b) * t) * modulation;
    const Complex c = g * kSqrt2 * std::polar(1.0, (params.delta - params.anh_a) * t) * modulation;
    out(pair_index(1, 0), pair_index(0, 1)) = a;
    out(pair_index(0, 1), pair_index(1, 0)) = std::conj(a);
    out(pair_index(1, 1), pair_index(0, 2)) = b;
    out(pair_index(0, 2), pair_index(1, 1)) = std::conj(b);
    out(pair_index(2, 0), pair_index(1, 1)) = c;
    out(pair_index(1, 1), pair_index(2, 0)) = std::conj(c);
  });
}

HamiltonianSampler effective_two_qubit_hamiltonian(std::shared_ptr<const TwoQubitDrive> drive) {
  return HamiltonianSampler(2, [drive = std::move(drive)](double t, Matrix& out) {
    if (drive->t.size() < 2) {
      out.setZero();
      return;
    }
    const double h = drive->spacing();
    const double dp = sample_at(drive->delta_prime, h, t);
    const double gp = sample_at(drive->g_prime, h, t);
    const double vp = sample_at(drive->varphi, h, t);
    out(0, 0) = -0.5 * dp;
    out(1, 1) = 0.5 * dp;
    out(0, 1) = 0.5 * gp * std::polar(1.0, -vp);
    out(1, 0) = 0.5 * gp * std::polar(1.0, vp);
  });
}

HamiltonianSampler embed(const HamiltonianSampler& h, std::vector<std::size_t> indices, std::size_t dim) {
  if (indices.size() != h.dim()) throw DomainError("embed: index count must equal the sampler dimension");
  return HamiltonianSampler(dim, [h, indices = std::move(indices)](double t, Matrix& out) {
    Matrix small = Matrix::Zero(h.dim(), h.dim());
    h.fill(t, small);
    out.setZero();
    for (std::size_t i = 0; i < indices.size(); ++i)
      for (std::size_t j = 0; j < indices.size(); ++j) out(indices[i], indices[j]) = small(i, j);
  });
}

Matrix two_qubit_frame_correction(const TwoQubitDrive& drive) {
  Matrix f = Matrix::Identity(9, 9);
  f(pair_index(1, 1), pair_index(1, 1)) = std::polar(1.0, 0.5 * drive.frame_phase);
  f(pair_index(0, 2), pair_index(0, 2)) = std::polar(1.0, -0.5 * drive.frame_phase);
  return f;
}

ParallelTransportReport parallel_transport_check(const PathSpec& spec, const DrivePulse& pulse,
                                                 const HamiltonianSampler& h) {
  if (pulse.size() < 3 || pulse.size() % 2 == 0)
    throw DomainError("parallel_transport_check: pulse must be sampled on 2N + 1 half-step nodes");
  const double dt = 2.0 * pulse.spacing();
  ParallelTransportReport report;
  report.frame = {spec.alpha0, spec.beta0, 0.0, 0.0};
  const auto [plus, minus] = auxiliary_states(spec.alpha0, spec.beta0);
  Matrix ham(2, 2);
  for (int branch = 0; branch < 2; ++branch) {
    const Vector& start = branch == 0 ? plus : minus;
    const auto traj = evolve_state(h, start, 0.0, pulse.tau, dt);
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
      h.fill(traj.times[k], ham);
      const Vector psi = traj.states[k].col(0);
      report.max_violation = std::max(report.max_violation, std::abs(psi.dot(ham * psi)));
    }
    const Complex overlap = start.dot(traj.states.back().col(0));
    (branch == 0 ? report.cyclic_plus : report.cyclic_minus) = std::abs(overlap);
    (branch == 0 ? report.frame.gamma_plus : report.frame.gamma_minus) = std::arg(overlap);
  }
  return report;
}

ParallelTransportReport parallel_transport_check(const PathSpec& spec, const DrivePulse& pulse) {
  return parallel_transport_check(spec, pulse, two_level_hamiltonian(drive_of(pulse)));
}

void write_trace_csv(const std::filesystem::path& path, const Trajectory& traj, const std::vector<std::string>& labels,
                     const std::vector<double>* fidelity) {
  std::vector<std::string> header{"t_ns"};
  for (const auto& l : labels) header.push_back("pop_" + l);
  if (fidelity) header.push_back("fidelity");
  CsvWriter csv(path, header);
  std::vector<double> row;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    row.assign({traj.times[k]});
    for (std::size_t i = 0; i < labels.size(); ++i) row.push_back(traj.states[k](i, i).real());
    if (fidelity) row.push_back((*fidelity)[k]);
    csv.row(row);
  }
}

}  // namespace geogate
