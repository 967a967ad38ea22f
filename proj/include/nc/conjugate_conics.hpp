// Conics of R^{2,2} as 3-dimensional associated subspaces of R^{3,3}:
// construction from hyperspheres, from three isotropic cones and from
// conformal images of the standard circle pair, classification by the
// containing-plane metric and by the null-ray normalization function
// lambda(theta), and arc-length sampling.
#pragma once

#include <optional>
#include <vector>

#include "nc/conformal_group.hpp"
#include "nc/dpc_spheres.hpp"
#include "nc/neutral_algebra.hpp"

namespace nc {

struct Conic {
  Subspace33 v;  // indefinite 3-subspace; the conic is {x : phi(x) ⊥ V}
};

struct ConicPair {
  Subspace33 v;   // side S
  Subspace33 vp;  // side S-perp
};

enum class PairClass { LineEmpty, Circles, Hyperbolae, Parabolae };

const char* pair_class_name(PairClass c);

struct ContainingPlane {
  Point22 base{};
  Point22 span1{}, span2{};
  MetricClass metric_class = MetricClass::Degenerate;
};

struct PairClassification {
  PairClass cls = PairClass::Circles;
  // For LineEmpty: 0 when side S is the line, 1 when side S-perp is.
  int line_side = -1;
  std::optional<ContainingPlane> plane_s, plane_sp;
};

struct ConicSample {
  double theta = 0;
  Point22 point{};
  double speed = 0;  // dl/dtheta
  bool finite = false;
};

// Pseudo-orthonormal chart {e; f1, f2} of a 3-subspace W with Gram
// diag(+,-,-) or diag(-,+,+); the null rays are e + cos(t) f1 + sin(t) f2 and
// lambda(t) = alpha + beta cos(t) + gamma sin(t) is their s0+s5 component.
struct ConicChart {
  Vec33 e{}, f1{}, f2{};
  double alpha = 0, beta = 0, gamma = 0;

  Vec33 ray(double theta) const;
  double lambda(double theta) const { return alpha + beta * std::cos(theta) + gamma * std::sin(theta); }
  ConicSample sample(double theta, double tol = kDefaultTol) const;
};

// Chart whose rays are the null vectors of the given subspace itself.
ConicChart chart_of_subspace(const Subspace33& w);
// Chart used to sample a conic: null rays of the complement of V.
ConicChart chart(const Conic& s);

ConicPair standard_pair();

Conic conic_from_hyperspheres(const DPC& s1, const DPC& s2, const DPC& s3,
                              double tol = kDefaultTol);
Conic conic_from_three_cones(const Point22& a, const Point22& b, const Point22& c,
                             double tol = kDefaultTol);
ConicPair pair_from_conic(const Conic& s);
ConicPair make_pair_checked(const Subspace33& v, const Subspace33& vp);
ConicPair apply_map(const ConformalMap& m, const ConicPair& pair);

PairClassification classify_pair(const ConicPair& pair);

struct Case2Data {
  PairClass cls = PairClass::Circles;
  // Circles / Hyperbolae: common center and opposite radius-squares.
  Point22 center{};
  double rho_s = 0, rho_sp = 0;
  // Parabolae: cone centers, p on side S and p_tilde on side S-perp,
  // null-separated; S = plane_s ∩ C_{p_tilde} and S-perp = plane_sp ∩ C_p.
  Point22 p{}, p_tilde{};
  ContainingPlane plane_s{}, plane_sp{};
};

Case2Data extract_case2_data(const ConicPair& pair);

std::vector<ConicSample> parametrize(const Conic& s, const std::vector<double>& thetas,
                                     double tol = kDefaultTol);

struct LambdaClass {
  int roots = 0;             // 0, 1 or 2 (ignored when all_infinite)
  bool all_infinite = false; // lambda vanishes identically: the empty side
  double root_thetas[2] = {0, 0};
  PairClass hint = PairClass::Circles;
};

LambdaClass classify_by_lambda(const Conic& s, double tol = 1e-8);

// Pair-level verdict from the two per-side lambda records.
PairClass pair_class_from_lambda(const LambdaClass& side_s, const LambdaClass& side_sp);

}  // namespace nc
