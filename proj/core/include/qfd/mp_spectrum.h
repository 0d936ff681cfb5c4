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

#ifndef QFD_MP_SPECTRUM_H
#define QFD_MP_SPECTRUM_H

#include <vector>

#include <Eigen/Dense>

#include "qfd/symbol.h"

namespace qfd {

/// Spectrum of a compressed symbol computed in MPFR arithmetic. Eigenvalues are returned
/// through their logarithms because the interesting ones lie far below double range.
struct MpSpectrum {
  int bits = 0;
  int d = 0;
  bool split = false;  // solved as two reflection blocks
  std::vector<double> log_values;  // ascending; -inf for eigenvalues <= 0
  std::vector<double> log_one_minus;  // log(1 - lambda); -inf for lambda >= 1
  std::vector<bool> below_floor;
  std::vector<bool> above_ceiling;
  double log_floor = 0.0;  // natural log of n d 2^(1 - bits) max(||M||, 1)
  double norm = 0.0;
  double trace = 0.0;
  double min_value = 0.0;  // smallest eigenvalue rounded to double (sign information)
  bool excursion = false;  // some eigenvalue left [-floor, 1 + floor]

  int floored_count() const;
};

/// Compression of the Toeplitz restriction of s onto the DFT modes `modes`, written in the
/// phase-centered basis e^{i theta_k (n-1)/2} F_n^* 1_k where it is real symmetric, and
/// diagonalized with `bits` of working precision. When s is reflection symmetric and the
/// mode set is closed under k -> n - k, the matrix splits into even and odd blocks first.
MpSpectrum mp_compressed_spectrum(const Symbol& s, int n, const std::vector<int>& modes, int bits,
                                  bool allow_split = true);

/// The real symmetric centered compression itself, rounded to double.
Eigen::MatrixXd mp_centered_compression(const Symbol& s, int n, const std::vector<int>& modes, int bits);

/// Working precision used for a first attempt at a d-dimensional spectrum.
int initial_bits_for(int d);

}  // namespace qfd

#endif  // QFD_MP_SPECTRUM_H
