// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef BRANCHCUT_NUMERIC_HPP
#define BRANCHCUT_NUMERIC_HPP

#include <array>
#include <functional>

#include "branchcut/common.hpp"
#include "branchcut/jet.hpp"

namespace branchcut {

// Dense complex polynomial, ascending coefficients.
struct CPoly {
  std::vector<cplx> c;

  CPoly() = default;
  explicit CPoly(std::vector<cplx> coeffs) : c(std::move(coeffs)) { trim(); }
  static CPoly constant(cplx v) { return CPoly({v}); }
  static CPoly x() { return CPoly({0.0, 1.0}); }

  void trim() {
    while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty() || (c.size() == 1 && c[0] == 0.0); }

  cplx eval(cplx z) const {
    cplx s = 0.0;
    for (size_t i = c.size(); i-- > 0;) s = s * z + c[i];
    return s;
  }
  Jet eval(const Jet& z) const {
    Jet s(z.order());
    for (size_t i = c.size(); i-- > 0;) {
      s = s * z;
      s[0] += c[i];
    }
    return s;
  }
  CPoly derivative() const {
    if (c.size() <= 1) return CPoly({cplx{0.0}});
    std::vector<cplx> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return CPoly(std::move(d));
  }

  friend CPoly operator+(const CPoly& a, const CPoly& b) {
    std::vector<cplx> r(std::max(a.c.size(), b.c.size()), 0.0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return CPoly(std::move(r));
  }
  friend CPoly operator-(const CPoly& a, const CPoly& b) {
    std::vector<cplx> r(std::max(a.c.size(), b.c.size()), 0.0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return CPoly(std::move(r));
  }
  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.is_zero() || b.is_zero()) return CPoly({cplx{0.0}});
    std::vector<cplx> r(a.c.size() + b.c.size() - 1, 0.0);
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return CPoly(std::move(r));
  }
  friend CPoly operator*(const CPoly& a, cplx s) {
    std::vector<cplx> r = a.c;
    for (auto& x : r) x *= s;
    return CPoly(std::move(r));
  }
};

// All roots by Durand-Kerner iteration, optionally warm-started.
std::vector<cplx> poly_roots(const CPoly& p, const std::vector<cplx>* warm = nullptr);

// Gauss-Legendre nodes/weights on [-1,1].
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_legendre_16();

// Laurent coefficients c_m of f around `center`, m = lo..hi (negative m allowed),
// from N equispaced samples on the circle of radius r.
std::vector<cplx> laurent_coeffs(const std::function<cplx(cplx)>& f, cplx center, double r,
                                 int lo, int hi, int nsamples = 0);

// Least-squares solve (A x = b) for small dense complex systems, normal equations.
std::vector<cplx> lstsq(const std::vector<std::vector<cplx>>& A, const std::vector<cplx>& b);

}  // namespace branchcut

#endif
