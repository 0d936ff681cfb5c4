// Copyright 2026 The qfd Authors
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

#include "qfd/jw_oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "qfd/errors.h"

namespace qfd {

namespace {

using Triplet = Eigen::Triplet<std::complex<double>>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Site j (0-based) lives at bit d - 1 - j.
std::uint32_t site_bit(int d, int j) { return 1u << (d - 1 - j); }

// Jordan-Wigner sign of site j on basis state x: parity of the occupied sites before it.
double jw_sign(int d, int j, std::uint32_t x) {
  const std::uint32_t before = ~((site_bit(d, j) << 1) - 1) & ((1u << d) - 1);
  return std::popcount(x & before) % 2 == 0 ? 1.0 : -1.0;
}

// Basis states grouped by particle number; every factor of the density conserves it.
struct NumberBlocks {
  std::vector<std::vector<std::uint32_t>> states;  // states[k], ascending
  std::vector<int> position;  // index of x inside its block

  explicit NumberBlocks(int d) : states(d + 1), position(std::size_t{1} << d) {
    for (std::uint32_t x = 0; x < (1u << d); ++x) {
      auto& block = states[std::popcount(x)];
      position[x] = static_cast<int>(block.size());
      block.push_back(x);
    }
  }
};

// a(e) restricted to the k-particle block, mapping into the (k - 1)-particle block.
Eigen::SparseMatrix<std::complex<double>> annihilation_block(int d, const Eigen::VectorXcd& e,
                                                              const NumberBlocks& nb, int k) {
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  const auto& cols = nb.states[k];
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    const std::uint32_t x = cols[c];
    for (int i = 0; i < d; ++i) {
      const std::uint32_t bit = site_bit(d, i);
      if (!(x & bit) || e(i) == 0.0) continue;
      entries.emplace_back(nb.position[x ^ bit], c, jw_sign(d, i, x ^ bit) * std::conj(e(i)));
    }
  }
  Eigen::SparseMatrix<std::complex<double>> a(static_cast<int>(nb.states[k - 1].size()), static_cast<int>(cols.size()));
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

}  // namespace

Eigen::MatrixXcd DenseFermionOps::creation_dense(int j) const { return Eigen::MatrixXcd(creation.at(j)); }

Eigen::MatrixXcd DenseFermionOps::annihilation_dense(int j) const {
  return Eigen::MatrixXcd(creation.at(j)).adjoint();
}

SparseOp DenseFermionOps::creation_of(const Eigen::VectorXcd& phi) const {
  if (phi.size() != d) throw ValidationError("one-particle vector has the wrong dimension");
  SparseOp out(dim(), dim());
  for (int i = 0; i < d; ++i) {
    if (phi(i) != 0.0) out += phi(i) * creation[i];
  }
  return out;
}

SparseOp DenseFermionOps::annihilation_of(const Eigen::VectorXcd& phi) const {
  return SparseOp(creation_of(phi).adjoint());
}

Eigen::VectorXd DenseFermionOps::threshold_test_diagonal() const {
  Eigen::VectorXd s(dim());
  const int threshold = d / 2;
  for (int x = 0; x < dim(); ++x) s(x) = std::lround(number_diagonal(x)) <= threshold ? 1.0 : 0.0;
  return s;
}

DenseFermionOps build_ops(int d) {
  if (d < 1 || d > 12) throw ValidationError("dense oracle supports 1 <= d <= 12");
  DenseFermionOps ops;
  ops.d = d;
  const int dim = 1 << d;
  for (int j = 0; j < d; ++j) {
    const std::uint32_t bit = site_bit(d, j);
    std::vector<Triplet> entries;
    for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(dim); ++x) {
      if (x & bit) continue;
      entries.emplace_back(static_cast<int>(x | bit), static_cast<int>(x), jw_sign(d, j, x));
    }
    SparseOp a(dim, dim);
    a.setFromTriplets(entries.begin(), entries.end());
    ops.creation.push_back(std::move(a));
  }

  SparseOp number(dim, dim);
  for (int j = 0; j < d; ++j) number += SparseOp(ops.creation[j] * SparseOp(ops.creation[j].adjoint()));
  ops.number_diagonal = Eigen::VectorXd::Zero(dim);
  double off_diagonal = 0.0;
  for (int r = 0; r < number.outerSize(); ++r) {
    for (SparseOp::InnerIterator it(number, r); it; ++it) {
      if (it.row() == it.col()) {
        ops.number_diagonal(it.row()) = it.value().real();
      } else {
        off_diagonal = std::max(off_diagonal, std::abs(it.value()));
      }
    }
  }
  if (off_diagonal > 1e-12) throw NumericalError("number operator is not diagonal in the occupation basis");
  return ops;
}

DenseQuasifreeState::Check DenseQuasifreeState::validate() const {
  Check c;
  c.trace_error = std::abs(density.trace() - 1.0);
  c.hermiticity_error = (density - density.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(density, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = solver.eigenvalues()(0);
  const double psd_slack = static_cast<double>(density.rows()) * kEps;
  c.ok = c.trace_error <= 1e-12 && c.hermiticity_error <= 1e-12 && c.min_eigenvalue >= -psd_slack;
  return c;
}

DenseQuasifreeState dense_state(const Eigen::MatrixXcd& q_small, const DenseFermionOps& ops) {
  const int d = static_cast<int>(q_small.rows());
  if (q_small.cols() != d || d != ops.d) throw ValidationError("symbol matrix does not match the oracle size");
  const double asym = (q_small - q_small.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, q_small.cwiseAbs().maxCoeff())) {
    throw ValidationError("symbol matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(q_small);
  const Eigen::VectorXd ev = solver.eigenvalues();
  // Same relative tolerance as the Hermiticity check; construction noise is a few eps.
  const double floor = 1e-12 * std::max({1.0, std::abs(ev(0)), std::abs(ev(d - 1))});
  if (ev(0) < -floor || ev(d - 1) > 1.0 + floor) {
    std::ostringstream msg;
    msg << "symbol spectrum [" << ev(0) << ", " << ev(d - 1) << "] leaves [0, 1]";
    throw ValidationError(msg.str());
  }

  DenseQuasifreeState state;
  state.d = d;
  state.q_small = q_small;
  const NumberBlocks nb(d);
  std::vector<Eigen::MatrixXcd> blocks;
  for (const auto& states : nb.states) {
    blocks.push_back(Eigen::MatrixXcd::Identity(states.size(), states.size()));
  }
  for (int j = 0; j < d; ++j) {
    const double q = std::clamp(ev(j), 0.0, 1.0);
    state.occupations.push_back(q);
    const Eigen::VectorXcd e = solver.eigenvectors().col(j);
    // The factors commute, so they can be applied one at a time from the left. With
    // b b^* = I - b^* b for a unit vector, q b^*b + (1 - q) b b^* = (1 - q) I + (2q - 1) b^*b.
    blocks[0] *= 1.0 - q;
    for (int k = 1; k <= d; ++k) {
      const auto a = annihilation_block(d, e, nb, k);
      const Eigen::MatrixXcd lowered = a * blocks[k];
      blocks[k] = (1.0 - q) * blocks[k] + (2.0 * q - 1.0) * (a.adjoint() * lowered);
    }
  }
  const int dim = ops.dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k <= d; ++k) {
    const auto& states = nb.states[k];
    for (size_t c = 0; c < states.size(); ++c) {
      for (size_t r = 0; r < states.size(); ++r) rho(states[r], states[c]) = blocks[k](r, c);
    }
  }
  state.density = std::move(rho);
  return state;
}

DenseQuasifreeState dense_state(const Eigen::MatrixXcd& q_small) {
  return dense_state(q_small, build_ops(static_cast<int>(q_small.rows())));
}

double functional_check(const DenseQuasifreeState& state, const DenseFermionOps& ops,
                        const std::vector<std::vector<Eigen::VectorXcd>>& phis,
                        const std::vector<std::vector<Eigen::VectorXcd>>& psis) {
  if (phis.size() != psis.size()) throw ValidationError("phi and psi tuple lists differ in length");
  double worst = 0.0;
  for (size_t t = 0; t < phis.size(); ++t) {
    const auto& phi = phis[t];
    const auto& psi = psis[t];
    if (static_cast<int>(phi.size()) > state.d || static_cast<int>(psi.size()) > state.d) {
      throw ValidationError("tuple longer than the mode count");
    }
    // X rho with X = a(phi_1)^* .. a(phi_n)^* a(psi_m) .. a(psi_1), applied right to left.
    Eigen::MatrixXcd y = state.density;
    for (const auto& v : psi) y = ops.annihilation_of(v) * y;
    for (auto it = phi.rbegin(); it != phi.rend(); ++it) y = ops.creation_of(*it) * y;
    const std::complex<double> dense_side = y.trace();

    std::complex<double> quasifree_side = 0.0;
    if (phi.size() == psi.size()) {
      const int k = static_cast<int>(phi.size());
      Eigen::MatrixXcd gram(k, k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) gram(i, j) = psi[i].dot(state.q_small * phi[j]);
      }
      quasifree_side = k == 0 ? std::complex<double>(1.0) : gram.determinant();
    }
    worst = std::max(worst, std::abs(dense_side - quasifree_side));
  }
  return worst;
}

DenseErrors dense_error_probs(const DenseQuasifreeState& q_state, const DenseQuasifreeState& r_state,
                              const DenseFermionOps& ops) {
  if (q_state.d != r_state.d || q_state.d != ops.d) throw ValidationError("states live on different mode counts");
  const Eigen::VectorXd s = ops.threshold_test_diagonal();
  DenseErrors e;
  for (int x = 0; x < ops.dim(); ++x) {
    e.alpha += (1.0 - s(x)) * q_state.density(x, x).real();
    e.beta += s(x) * r_state.density(x, x).real();
  }
  return e;
}

}  // namespace qfd
