// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef BRANCHCUT_COMMON_HPP
#define BRANCHCUT_COMMON_HPP

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchcut {

using cplx = std::complex<double>;

constexpr double PI = 3.14159265358979323846;
inline const cplx I_UNIT{0.0, 1.0};
inline const cplx TWO_PI_I{0.0, 2.0 * PI};

inline double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); }

// Tolerance block shared by every module; CLI flags override the defaults.
struct Tolerances {
  double eps_geom_rel = 1e-9;   // geometric coincidence, relative to curve diameter
  double theta_min = 1e-3;      // minimal transversal crossing angle (radians)
  double eps_jet = 1e-8;        // germ equality, relative
  int jet_order = 8;            // truncation order J of branch jets
  double eps_quad = 1e-10;      // quadrature target per unit curve length
  double eps_laurent = 1e-7;    // negative Laurent coefficient bound in regularity tests
  double eps_tail = 1e-8;       // moment-tail identity check
  int word_bound = 8;           // word-length bound L for orbit exploration
  double eps_disc = 1e-7;       // stand-off from discriminant points, relative
};

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// geometry
struct TangentialIntersection : Error { using Error::Error; };
struct OverlapDetected : Error { using Error::Error; };
struct DegenerateContact : Error { using Error::Error; };
struct PointOnCurve : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct NotAdmissible : Error { using Error::Error; };

// algebraic continuation
struct NearDiscriminant : Error { using Error::Error; };
struct LeadingCoefficientVanishes : Error { using Error::Error; };
struct PathTooClose : Error { using Error::Error; };
struct TrackingAmbiguity : Error { using Error::Error; };
struct CriticalPointOnPath : Error { using Error::Error; };

// analysis
struct QuadratureNotConverged : Error { using Error::Error; };
struct PoleOnCurve : Error { using Error::Error; };
struct ModelMismatch : Error { using Error::Error; };
struct FitResidualTooLarge : Error { using Error::Error; };

// exact arithmetic
struct UnsupportedEndpointField : Error { using Error::Error; };
struct EndpointImagesDiffer : Error { using Error::Error; };
struct ExactUnavailable : Error { using Error::Error; };

struct InputError : Error { using Error::Error; };

}  // namespace branchcut

#endif
