// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef BRANCHCUT_JET_HPP
#define BRANCHCUT_JET_HPP

#include <algorithm>
#include <cassert>

#include "branchcut/common.hpp"

namespace branchcut {

// Truncated Taylor series sum c[m] h^m, m = 0..order.  All arithmetic keeps
// the fixed truncation order of the left operand.
struct Jet {
  std::vector<cplx> c;

  Jet() = default;
  explicit Jet(int order, cplx c0 = 0.0) : c(static_cast<size_t>(order) + 1, 0.0) { c[0] = c0; }

  int order() const { return static_cast<int>(c.size()) - 1; }
  cplx value() const { return c.empty() ? cplx{} : c[0]; }
  cplx operator[](int m) const { return c[static_cast<size_t>(m)]; }
  cplx& operator[](int m) { return c[static_cast<size_t>(m)]; }

  Jet& operator+=(const Jet& o) {
    size_t n = std::min(c.size(), o.c.size());
    for (size_t i = 0; i < n; ++i) c[i] += o.c[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    size_t n = std::min(c.size(), o.c.size());
    for (size_t i = 0; i < n; ++i) c[i] -= o.c[i];
    return *this;
  }
  Jet& operator*=(cplx s) {
    for (auto& x : c) x *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
  friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
  friend Jet operator*(Jet a, cplx s) { a *= s; return a; }
  friend Jet operator*(cplx s, Jet a) { a *= s; return a; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c[i] == 0.0) continue;
      int jmax = std::min(b.order(), a.order() - i);
      for (int j = 0; j <= jmax; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (auto& x : c) m = std::max(m, std::abs(x));
    return m;
  }

  bool is_zero(double eps) const { return max_abs() <= eps; }

  // Evaluate at offset h from the expansion point.
  cplx eval(cplx h) const {
    cplx s = 0.0;
    for (size_t i = c.size(); i-- > 0;) s = s * h + c[i];
    return s;
  }

  // Recenter the series at offset h (valid inside the convergence disk).
  Jet recenter(cplx h) const {
    int n = order();
    Jet r(n);
    // r[k] = sum_{m>=k} C(m,k) c[m] h^{m-k}, via repeated synthetic division
    std::vector<cplx> w = c;
    for (int k = 0; k <= n; ++k) {
      // synthetic division by (x - h): remainder -> r[k], quotient stays in w
      cplx acc = 0.0;
      for (int m = n - k; m >= 0; --m) {
        cplx t = w[static_cast<size_t>(m)] + acc * h;
        w[static_cast<size_t>(m)] = acc;
        acc = t;
      }
      r.c[static_cast<size_t>(k)] = acc;
    }
    return r;
  }
};

inline bool jets_equal(const Jet& a, const Jet& b, double eps_rel) {
  double scale = 1.0 + std::max(a.max_abs(), b.max_abs());
  size_t n = std::min(a.c.size(), b.c.size());
  for (size_t i = 0; i < n; ++i)
    if (std::abs(a.c[i] - b.c[i]) > eps_rel * scale) return false;
  return true;
}

}  // namespace branchcut

#endif
