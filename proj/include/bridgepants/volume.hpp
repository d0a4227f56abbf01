#pragma once

// Hyperbolic volume bounds for 2-bridge knot complements, in units where v3
// is the volume of the regular ideal tetrahedron.

#include <string>

#include "bridgepants/twobridge.hpp"

namespace bridgepants {

/// Lobachevsky function Lambda(theta) = -int_0^theta log|2 sin t| dt
///                                    = 1/2 sum_{m>=1} sin(2 m theta) / m^2.
///
/// Odd and pi-periodic. Evaluated through the Clausen power series, whose
/// terms decay geometrically after reducing theta to [-pi/2, pi/2]; absolute
/// error below 1e-14.
double lobachevsky(double theta);

/// Volume of the regular ideal tetrahedron, 3 Lambda(pi/3).
double v3();

enum class BoundSource { Twist, Pants };

std::string to_string(BoundSource s);

/// lower <= vol(E(K)) < upper.
struct VolumeBounds {
  double lower;
  double upper;
  BoundSource source;

  bool contains(double volume) const { return lower <= volume && volume < upper; }
};

/// (max(0, v3 (tw - 2)), 10 v3 (tw - 1)) from a twist-reduced prime
/// alternating diagram. Throws DomainError for tw < 2.
VolumeBounds bounds_from_twist(int twist_number);

/// (max(0, v3 (D^P - 3)), 10 v3 (2 D^P - 3)) from the pants distance of a
/// (0,2)-splitting. Throws DomainError for D^P < 2.
VolumeBounds bounds_from_pants(int pants_distance);

/// Throws NotHyperbolicError for the unknot and (2, q) torus knots.
VolumeBounds bounds_for_knot(const TwoBridgeKnot& k, BoundSource via);

}  // namespace bridgepants
