// Conformal maps of R^{2,2} represented as linear maps L of R^{3,3} with
// L^T J L = sign * J, J = diag(1,1,1,-1,-1,-1), acting on diagonal
// polyspherical coordinates. Built from a four-family generating set
// (translations, linear isometries, dilations, inversion); each lift is
// verified against its classical point action in the tests.
#pragma once

#include <cstdint>
#include <optional>

#include "nc/dpc_spheres.hpp"
#include "nc/neutral_algebra.hpp"

namespace nc {

struct ConformalMap {
  Mat66 m;
  int sign = +1;  // L^T J L = sign * J

  // max entry of |L^T J L - sign*J|
  double validation_residual() const;
  bool validate(double tol = 1e-10) const;
};

struct Generator {
  enum class Kind { Translation, LinearIsometry, Dilation, Inversion };
  Kind kind = Kind::Inversion;
  Point22 v{};       // Translation
  Mat44 m{};         // LinearIsometry
  double lambda = 1; // Dilation

  static Generator translation(const Point22& v);
  static Generator linear_isometry(const Mat44& m);  // requires M^T g M = g
  static Generator dilation(double lambda);          // requires lambda > 0
  static Generator inversion();
  // rotation/boost in coordinate plane (i, j), 0-based
  static Generator plane_rotation(int i, int j, double angle);
};

ConformalMap lift(const Generator& g);

ConformalMap compose(const ConformalMap& a, const ConformalMap& b);
ConformalMap inverse(const ConformalMap& a);
ConformalMap identity_map();

// Classical point action induced by the lift; absent when the image is the
// point at infinity.
std::optional<Point22> apply_point(const ConformalMap& m, const Point22& x,
                                   double tol = kDefaultTol);

DPC apply_dpc(const ConformalMap& m, const DPC& s);

// Product of n generators drawn from a fixed seeded distribution:
// inversion with probability 1/4, otherwise translation (components uniform
// in [-1,1]), dilation (log-uniform in [1/2,2]) or an isometry built from
// three random plane rotations/boosts with angle uniform in [-1,1].
ConformalMap random_map(std::uint64_t seed, int n);

struct ConformalityReport {
  double lambda = 0;        // g(D e1, D e1) of the finite-difference Jacobian
  double max_residual = 0;  // max |g(D ei, D ej) - lambda g(ei, ej)|
};

// Central finite differences with step h over the 8 stencil points; throws
// NearInfinity when any stencil image is absent.
ConformalityReport pointwise_conformality_check(const ConformalMap& m, const Point22& x, double h);

}  // namespace nc
