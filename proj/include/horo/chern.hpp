#pragma once

// Second Chern character of a two-orbit variety X against the two surface
// classes S_Y and S_Z.
//
// S_Z is the image of a general plane S' in a fiber P^{codim Z} of the
// projective bundle Bl_Y X -> Z. Evaluating the projective-bundle formula on
// S' kills every pullback from Z and leaves ((codim Z + 1)/2) xi^2.S'.
// Evaluating the blow-up formula on S' and solving for ch2(X).S_Z gives
//
//   ch2(X).S_Z = bundle - ((codim Y + 1)/2) E^2.S' + (c1(X) - c1(Y)) H.l
//
// with l = S' cap E a line. S_Y is the mirror image with Y and Z swapped.

#include <string>
#include <utility>

#include "horo/checks.hpp"
#include "horo/pasquier.hpp"
#include "horo/rational.hpp"

namespace horo {

/// Intersection data of a fiber plane S' inside Bl X.
struct FiberSurfaceData {
  Integer xi_sq = 1;       // xi^2 . S'
  Integer e_sq = 1;        // E^2 . S'
  Integer h_dot_line = 1;  // H . (S' cap E)
  bool pullbacks_vanish = true;

  static FiberSurfaceData canonical() { return {}; }
};

struct Ch2Report {
  Rational ch2_dot_sy;
  Rational ch2_dot_sz;
  bool two_fano = false;
  /// Why positivity on {S_Y, S_Z} decides the question for this family.
  std::string h4_generation_basis;
};

/// ((codim_base + 1)/2) * xi_sq. Throws UnsupportedEvaluation when the base
/// pullbacks do not vanish on the surface.
Rational ch2_bundle_side(const Integer& codim_base, const FiberSurfaceData& data);

/// Solves the blow-up relation for ch2(X).S. Throws DomainError when
/// codim_center < 2.
Rational ch2_blowup_solve(const Rational& bundle_value, const Integer& codim_center,
                          const Integer& c1_x, const Integer& c1_center,
                          const FiberSurfaceData& data);

Ch2Report ch2_surfaces(const HorosphericalFamily& f);

/// (ch2.S_Y, ch2.S_Z) from the per-family closed forms.
std::pair<Rational, Rational> ch2_closed_form(const HorosphericalFamily& f);

CheckReport closed_form_check(const HorosphericalFamily& f);
CheckReport closed_form_check(const HorosphericalFamily& f,
                              const std::pair<Rational, Rational>& reference);

}  // namespace horo
