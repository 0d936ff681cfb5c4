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

#ifndef QFD_JW_ORACLE_H
#define QFD_JW_ORACLE_H

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace qfd {

using SparseOp = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;

/// Jordan-Wigner ladder operators on d qubits. Site 1 is the most significant bit; the
/// creation operator of site j is sigma_z on sites 1..j-1, [[0,0],[1,0]] on site j and the
/// identity after it.
struct DenseFermionOps {
  int d = 0;
  std::vector<SparseOp> creation;
  Eigen::VectorXd number_diagonal;  // diagonal of N = sum_j a_j^* a_j

  int dim() const { return 1 << d; }
  Eigen::MatrixXcd creation_dense(int j) const;
  Eigen::MatrixXcd annihilation_dense(int j) const;
  /// a(phi)^* = sum_i phi_i a_i^*.
  SparseOp creation_of(const Eigen::VectorXcd& phi) const;
  /// a(phi) = sum_i conj(phi_i) a_i; anti-linear in phi.
  SparseOp annihilation_of(const Eigen::VectorXcd& phi) const;
  /// Projection onto particle numbers 0 .. floor(d/2), built from N's spectral projections.
  Eigen::VectorXd threshold_test_diagonal() const;
};

/// Throws ValidationError unless 1 <= d <= 12.
DenseFermionOps build_ops(int d);

struct DenseQuasifreeState {
  int d = 0;
  Eigen::MatrixXcd density;
  Eigen::MatrixXcd q_small;
  std::vector<double> occupations;

  struct Check {
    double trace_error = 0.0;
    double hermiticity_error = 0.0;
    double min_eigenvalue = 0.0;
    bool ok = false;
  };
  /// Trace 1 to 1e-12, Hermitian, PSD within 2^d eps.
  Check validate() const;
};

/// prod_j (q_j b_j^* b_j + (1 - q_j) b_j b_j^*) with b_j = a(e_j) for the eigenvectors e_j of Q.
DenseQuasifreeState dense_state(const Eigen::MatrixXcd& q_small, const DenseFermionOps& ops);
DenseQuasifreeState dense_state(const Eigen::MatrixXcd& q_small);

/// Largest |Tr(rho a(phi_1)^* .. a(phi_n)^* a(psi_m) .. a(psi_1)) - delta_nm det<psi_i|Q phi_j>|
/// over the supplied tuples (phis[t], psis[t]).
double functional_check(const DenseQuasifreeState& state, const DenseFermionOps& ops,
                        const std::vector<std::vector<Eigen::VectorXcd>>& phis,
                        const std::vector<std::vector<Eigen::VectorXcd>>& psis);

struct DenseErrors {
  double alpha = 0.0;
  double beta = 0.0;
};

/// alpha = Tr rho_Q (I - S), beta = Tr rho_R S.
DenseErrors dense_error_probs(const DenseQuasifreeState& q_state, const DenseQuasifreeState& r_state,
                              const DenseFermionOps& ops);

}  // namespace qfd

#endif  // QFD_JW_ORACLE_H
