// Copyright 2026 The metroscale Authors
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

// Reference computations that share no code with the library: plain nested
// loops on std::complex, no Eigen.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "metroscale/qcore.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat from(const metroscale::ComplexMatrix& m) {
  Mat out(m.dim(), std::vector<C>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r][c] = m(r, c);
  return out;
}

inline Mat identity(std::size_t n) {
  Mat out(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1.0;
  return out;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// Characteristic polynomial coefficients by Faddeev-LeVerrier:
/// det(x I - A) = x^n + c[n-1] x^{n-1} + ... + c[0].
inline std::vector<C> characteristic_polynomial(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<C> c(n + 1);
  c[n] = 1.0;
  Mat m(n, std::vector<C>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Mat am = mul(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;  // M_k = A M_{k-1} + c_{n-k+1} I
    const Mat amk = mul(a, m);
    C trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += amk[i][i];
    c[n - k] = -trace / static_cast<double>(k);
  }
  return c;
}

/// All roots of a monic polynomial by Durand-Kerner iteration, sorted by
/// real part.
inline std::vector<double> real_roots(const std::vector<C>& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  auto eval = [&](C x) {
    C acc = coeffs[n];
    for (std::size_t k = n; k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
  };
  std::vector<C> z(n);
  const C seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<double>(i)) * 3.0;
  for (int it = 0; it < 2000; ++it) {
    double moved = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      C denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      const C step = eval(z[i]) / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15) break;
  }
  std::vector<double> out;
  for (const C& r : z) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

/// exp(-i phi H) by its Taylor series, with scaling and squaring.
inline Mat taylor_phase_unitary(const Mat& h, double phi) {
  const std::size_t n = h.size();
  double norm = 0.0;
  for (const auto& row : h)
    for (const C& v : row) norm = std::max(norm, std::abs(v));
  int squarings = 0;
  double scale = std::abs(phi) * norm * static_cast<double>(n);
  while (scale > 0.5) {
    scale /= 2.0;
    ++squarings;
  }
  const double t = phi / std::pow(2.0, squarings);
  Mat a(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = C(0.0, -t) * h[i][j];
  Mat sum = identity(n);
  Mat term = identity(n);
  for (int k = 1; k < 30; ++k) {
    term = mul(term, a);
    for (auto& row : term)
      for (C& v : row) v /= static_cast<double>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
  return sum;
}

/// Kronecker product with site 0 = a (most significant index).
inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  Mat out(na * nb, std::vector<C>(na * nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return out;
}

inline double max_diff(const Mat& a, const metroscale::ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b(i, j)));
  return worst;
}

/// Standard deviation of H on psi by direct matrix-vector products.
inline double spread(const Mat& h, const std::vector<C>& psi) {
  const std::size_t n = psi.size();
  std::vector<C> hpsi(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hpsi[i] += h[i][j] * psi[j];
  C mean = 0.0;
  C second = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean += std::conj(psi[i]) * hpsi[i];
    second += std::conj(hpsi[i]) * hpsi[i];
  }
  return std::sqrt(std::max(0.0, second.real() - mean.real() * mean.real()));
}

/// Collective h = sum_j H_j on N sites built from explicit Kronecker
/// products.
inline Mat collective(const Mat& h, std::size_t probes) {
  const std::size_t d = h.size();
  Mat total;
  for (std::size_t site = 0; site < probes; ++site) {
    Mat term = site == 0 ? h : identity(d);
    for (std::size_t s = 1; s < probes; ++s) term = kron(term, s == site ? h : identity(d));
    if (total.empty()) {
      total = term;
    } else {
      for (std::size_t i = 0; i < total.size(); ++i)
        for (std::size_t j = 0; j < total.size(); ++j) total[i][j] += term[i][j];
    }
  }
  return total;
}

}  // namespace oracle
