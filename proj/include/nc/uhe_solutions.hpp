// Exact solutions of the ultrahyperbolic equation
//   u_11 + u_22 - u_33 - u_44 = 0
// in three families (null plane waves, neutral-trace-free quadratics and
// closed-form X-ray transforms of Gaussian mixtures), plus the
// finite-difference residual machinery used to certify them.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nc/neutral_algebra.hpp"

namespace nc {

struct Profile {
  enum class Kind { Gaussian, Cosine, Monomial };
  Kind kind = Kind::Gaussian;
  double omega = 1;  // Cosine
  int degree = 2;    // Monomial, <= 4

  double operator()(double t) const;
  static Profile gaussian() { return {}; }
  static Profile cosine(double omega) { return {Kind::Cosine, omega, 2}; }
  static Profile monomial(int degree);
};

struct GaussianComponent {
  std::array<double, 3> center{};
  double sigma = 1;
  double weight = 1;
};

enum class Decay { Compactish, GaussianDecay, Polynomial };

class Solution {
 public:
  enum class Kind { PlaneWave, Quadratic, XRayGaussianMix, Sum };

  static Solution plane_wave(const Point22& k, const Profile& profile);
  // Bypasses the null-direction validation; negative-control use only.
  static Solution plane_wave_unchecked(const Point22& k, const Profile& profile);
  static Solution quadratic(const Mat44& q, const Point22& linear, double constant);
  static Solution xray_gaussians(std::vector<GaussianComponent> components);
  static Solution sum(std::vector<Solution> terms);

  double eval(const Point22& x) const;
  Kind kind() const { return kind_; }
  Decay decay() const;

  const Point22& wave_vector() const { return k_; }
  const Profile& profile() const { return profile_; }
  const Mat44& quadratic_form() const { return q_; }
  const Point22& linear_part() const { return linear_; }
  double constant_part() const { return const_; }
  const std::vector<GaussianComponent>& components() const { return components_; }
  const std::vector<Solution>& terms() const { return terms_; }

  std::string id;  // label used in reports

 private:
  Kind kind_ = Kind::Quadratic;
  Point22 k_{};
  Profile profile_{};
  Mat44 q_{};
  Point22 linear_{};
  double const_ = 0;
  std::vector<GaussianComponent> components_;
  std::vector<Solution> terms_;
};

// Closed-form X-ray transform of a Gaussian mixture, evaluated at the line
// whose chart point is x. Integration is in the chart parameter z (not arc
// length), which is what makes the result a solution in these coordinates.
double xray_u(const std::vector<GaussianComponent>& mix, const Point22& x);

// Central second differences with the neutral signs.
double laplacian_residual(const Solution& u, const Point22& x, double h);

struct CertificateReport {
  double max_residual_h = 0;   // at h
  double max_residual_h2 = 0;  // at h/2
  double order = 0;            // log2 ratio of the two maxima
  int points = 0;
};

// Residuals at n seeded random points of [-2,2]^4 at h and h/2.
CertificateReport uhe_certificate(const Solution& u, int n, std::uint64_t seed,
                                  double h = 1e-2);

// The fixed solution battery: 5 quadratics, 10 null plane waves, 5 X-ray
// Gaussian mixtures, in that order.
std::vector<Solution> builtin_solutions();
// Subset with Gaussian decay, usable on unbounded conics.
std::vector<Solution> builtin_gaussian_decay();
// Subset of builtin_solutions with class-independent positive-mass integrals,
// used for mean-value grids over random pairs.
std::vector<Solution> builtin_mv_circle_set();

}  // namespace nc
