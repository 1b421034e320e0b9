// include/latgraph/math_util.h

// Copyright 2026  The latgraph authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef LATGRAPH_MATH_UTIL_H_
#define LATGRAPH_MATH_UTIL_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include <Eigen/Dense>

namespace latgraph {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Log-semiring plus: log(exp(a) + exp(b)), shifted by the max for stability.
inline double LogAdd(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == kNegInf) return a;  // covers a == b == -inf too
  return a + std::log1p(std::exp(b - a));
}

// log(sum_i exp(xs[i])).  Empty input yields -inf by definition.
inline double LogSumExp(std::span<const double> xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - m);
  return m + std::log(sum);
}

// Per-row log(sum_j exp(m(i, j))).
inline Eigen::VectorXd RowLogSumExp(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  Eigen::VectorXd out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double mx = m.row(i).maxCoeff();
    if (mx == kNegInf) {
      out(i) = kNegInf;
      continue;
    }
    out(i) = mx + std::log((m.row(i).array() - mx).exp().sum());
  }
  return out;
}

// Row-wise log-softmax; idempotent on already-normalized rows up to
// float rounding.
inline Eigen::MatrixXd LogSoftmaxRows(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  Eigen::VectorXd lse = RowLogSumExp(m);
  return m.colwise() - lse;
}

}  // namespace latgraph

#endif  // LATGRAPH_MATH_UTIL_H_
