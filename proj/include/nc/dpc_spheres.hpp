// Hyperspheres of R^{2,2} and their diagonal polyspherical coordinates (DPC):
// a hypersphere with DPC s = (s0, s, s5) is the solution set of
//   (s0+s5) |x|^2 - 2 <s, x> + (s5-s0) = 0,
// so proper hyperspheres have s0+s5 != 0, hyperplanes form the slice
// P = {s0+s5 = 0}, and the ray (1,0,-1) is the empty sphere.
#pragma once

#include <vector>

#include "nc/neutral_algebra.hpp"

namespace nc {

enum class HypersphereKind { Proper, Plane, Empty };

struct Hypersphere {
  HypersphereKind kind = HypersphereKind::Empty;
  // Proper: |x - center|^2 = radius_sq (radius_sq of either sign; 0 is the
  // isotropic cone at center).
  Point22 center{};
  double radius_sq = 0;
  // Plane: <normal, x> = offset with the neutral pairing.
  Point22 normal{};
  double offset = 0;

  static Hypersphere proper(const Point22& center, double radius_sq);
  static Hypersphere isotropic_cone(const Point22& center) { return proper(center, 0.0); }
  static Hypersphere plane(const Point22& normal, double offset);
  static Hypersphere empty();
};

// Projective 6-vector of diagonal polyspherical coordinates.
struct DPC {
  Vec33 v;

  explicit DPC(const Vec33& raw);

  // Rescale so s0+s5 = 1 when that is meaningful at the tolerance; otherwise
  // to Euclidean unit length with the first non-negligible component positive.
  DPC normalized(double tol = kDefaultTol) const;

  bool is_null(double tol = kDefaultTol) const;
};

DPC dpc_from_hypersphere(const Hypersphere& h);

// Embedding of a point as its isotropic cone; lands on the null cone slice
// {inner33(s,s) = 0, s0+s5 = 1}.
DPC phi(const Point22& p);

HypersphereKind classify_dpc(const DPC& s, double tol = kDefaultTol);

Hypersphere hypersphere_from_dpc(const DPC& s, double tol = kDefaultTol);

bool point_on(const DPC& s_h, const Point22& x, double tol = kDefaultTol);

// |a-b|^2; equals -2 inner33(phi(a), phi(b)).
double separation(const Point22& a, const Point22& b);

// Membership of phi(x) in the hyperplane s0*x0 + <s_mid, x_mid> - s5*x5 = 0,
// written out componentwise. Kept as an independent check against point_on.
std::vector<bool> complementary_hyperplane_points(const DPC& s, const std::vector<Point22>& sample,
                                                  double tol = kDefaultTol);

struct OrthogonalityCheck {
  bool by_dpc = false;       // inner33 of the two DPC vanishes
  bool by_geometry = false;  // the matching geometric clause
};

OrthogonalityCheck orthogonality_oracle(const Hypersphere& h, const Hypersphere& k,
                                        double tol = kDefaultTol);

bool same_hypersphere(const Hypersphere& a, const Hypersphere& b, double tol = 1e-10);

}  // namespace nc
