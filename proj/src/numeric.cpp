// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#include "branchcut/numeric.hpp"

#include <numeric>

namespace branchcut {

std::vector<cplx> poly_roots(const CPoly& p, const std::vector<cplx>* warm) {
  int n = p.degree();
  if (n <= 0) return {};
  cplx lead = p.c.back();
  if (std::abs(lead) == 0.0) throw LeadingCoefficientVanishes("zero leading coefficient");

  std::vector<cplx> z(static_cast<size_t>(n));
  if (warm && static_cast<int>(warm->size()) == n) {
    z = *warm;
  } else {
    // Aberth-style initial ring scaled by a coefficient-based radius bound
    double r = 0.0;
    for (int i = 0; i < n; ++i) r = std::max(r, std::pow(std::abs(p.c[i] / lead), 1.0 / (n - i)));
    r = 2.0 * r + 1.0;
    for (int i = 0; i < n; ++i)
      z[i] = r * std::polar(1.0, 2.0 * PI * (i + 0.25) / n + 0.7);
  }

  for (int iter = 0; iter < 400; ++iter) {
    double move = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx num = p.eval(z[i]) / lead;
      cplx den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      if (std::abs(den) == 0.0) {
        z[i] += 1e-8 * (1.0 + std::abs(z[i]));
        move = 1.0;
        continue;
      }
      cplx d = num / den;
      z[i] -= d;
      move = std::max(move, std::abs(d));
    }
    double scale = 1.0;
    for (auto& zi : z) scale = std::max(scale, std::abs(zi));
    if (move < 1e-14 * scale) break;
  }

  // one Newton polish per root where the derivative allows
  CPoly dp = p.derivative();
  for (auto& zi : z) {
    for (int k = 0; k < 3; ++k) {
      cplx d = dp.eval(zi);
      if (std::abs(d) < 1e-300) break;
      cplx step = p.eval(zi) / d;
      if (!(std::abs(step) < 1.0 + std::abs(zi))) break;
      zi -= step;
    }
  }
  return z;
}

const GaussRule& gauss_legendre_16() {
  static GaussRule rule = [] {
    GaussRule g;
    const int n = 16;
    g.x.resize(n);
    g.w.resize(n);
    // Newton on Legendre polynomials
    for (int i = 0; i < n; ++i) {
      double x = std::cos(PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      g.x[n - 1 - i] = x;
      g.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return g;
  }();
  return rule;
}

std::vector<cplx> laurent_coeffs(const std::function<cplx(cplx)>& f, cplx center, double r,
                                 int lo, int hi, int nsamples) {
  int span = hi - lo + 1;
  int N = nsamples > 0 ? nsamples : std::max(64, 8 * span);
  std::vector<cplx> vals(static_cast<size_t>(N));
  for (int j = 0; j < N; ++j) vals[j] = f(center + std::polar(r, 2.0 * PI * j / N));
  std::vector<cplx> out(static_cast<size_t>(span));
  for (int m = lo; m <= hi; ++m) {
    cplx s = 0.0;
    for (int j = 0; j < N; ++j) {
      double th = 2.0 * PI * j / N;
      s += vals[j] * std::polar(std::pow(r, -m), -m * th);
    }
    out[static_cast<size_t>(m - lo)] = s / static_cast<double>(N);
  }
  return out;
}

std::vector<cplx> lstsq(const std::vector<std::vector<cplx>>& A, const std::vector<cplx>& b) {
  size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  // normal equations A^H A x = A^H b, solved by Gaussian elimination
  std::vector<std::vector<cplx>> M(cols, std::vector<cplx>(cols + 1, 0.0));
  for (size_t i = 0; i < cols; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      cplx s = 0.0;
      for (size_t r = 0; r < rows; ++r) s += std::conj(A[r][i]) * A[r][j];
      M[i][j] = s;
    }
    cplx s = 0.0;
    for (size_t r = 0; r < rows; ++r) s += std::conj(A[r][i]) * b[r];
    M[i][cols] = s;
  }
  for (size_t i = 0; i < cols; ++i) {
    size_t piv = i;
    for (size_t r = i + 1; r < cols; ++r)
      if (std::abs(M[r][i]) > std::abs(M[piv][i])) piv = r;
    std::swap(M[i], M[piv]);
    cplx d = M[i][i];
    if (std::abs(d) < 1e-300) d = 1e-300;
    for (size_t j = i; j <= cols; ++j) M[i][j] /= d;
    for (size_t r = 0; r < cols; ++r) {
      if (r == i) continue;
      cplx f = M[r][i];
      if (f == cplx{0.0}) continue;
      for (size_t j = i; j <= cols; ++j) M[r][j] -= f * M[i][j];
    }
  }
  std::vector<cplx> x(cols);
  for (size_t i = 0; i < cols; ++i) x[i] = M[i][cols];
  return x;
}

}  // namespace branchcut
