#include "nc/uhe_solutions.hpp"

#include <cmath>
#include <numbers>

#include "nc/line_geometry.hpp"
#include "nc/rng.hpp"

namespace nc {

double Profile::operator()(double t) const {
  switch (kind) {
    case Kind::Gaussian: return std::exp(-t * t);
    case Kind::Cosine: return std::cos(omega * t);
    case Kind::Monomial: {
      double p = 1;
      for (int i = 0; i < degree; ++i) p *= t;
      return p;
    }
  }
  return 0;
}

Profile Profile::monomial(int degree) {
  if (degree < 0 || degree > 4) raise(Errc::InvalidSolution, "monomial degree must be 0..4");
  return {Kind::Monomial, 1, degree};
}

Solution Solution::plane_wave(const Point22& k, const Profile& profile) {
  double n = enorm(k);
  if (std::abs(norm22(k)) > 1e-12 * n * n)
    raise(Errc::InvalidSolution, "plane wave direction must be null");
  return plane_wave_unchecked(k, profile);
}

Solution Solution::plane_wave_unchecked(const Point22& k, const Profile& profile) {
  Solution s;
  s.kind_ = Kind::PlaneWave;
  s.k_ = k;
  s.profile_ = profile;
  return s;
}

Solution Solution::quadratic(const Mat44& q, const Point22& linear, double constant) {
  double scale = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(q.a[i][j]));
  double trace = q.a[0][0] + q.a[1][1] - q.a[2][2] - q.a[3][3];
  if (std::abs(trace) > 1e-12 * std::max(1.0, scale))
    raise(Errc::InvalidSolution, "quadratic form must be neutral trace-free");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(q.a[i][j] - q.a[j][i]) > 1e-12 * std::max(1.0, scale))
        raise(Errc::InvalidSolution, "quadratic form must be symmetric");
  Solution s;
  s.kind_ = Kind::Quadratic;
  s.q_ = q;
  s.linear_ = linear;
  s.const_ = constant;
  return s;
}

Solution Solution::xray_gaussians(std::vector<GaussianComponent> components) {
  for (const auto& c : components)
    if (!(c.sigma > 0)) raise(Errc::InvalidSolution, "gaussian width must be positive");
  Solution s;
  s.kind_ = Kind::XRayGaussianMix;
  s.components_ = std::move(components);
  return s;
}

Solution Solution::sum(std::vector<Solution> terms) {
  Solution s;
  s.kind_ = Kind::Sum;
  s.terms_ = std::move(terms);
  return s;
}

double Solution::eval(const Point22& x) const {
  switch (kind_) {
    case Kind::PlaneWave:
      return profile_(inner22(k_, x));
    case Kind::Quadratic: {
      double acc = const_ + inner22(linear_, x);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += q_.a[i][j] * x[i] * x[j];
      return acc;
    }
    case Kind::XRayGaussianMix:
      return xray_u(components_, x);
    case Kind::Sum: {
      double acc = 0;
      for (const Solution& t : terms_) acc += t.eval(x);
      return acc;
    }
  }
  return 0;
}

Decay Solution::decay() const {
  switch (kind_) {
    case Kind::PlaneWave:
      return profile_.kind == Profile::Kind::Gaussian ? Decay::GaussianDecay : Decay::Polynomial;
    case Kind::Quadratic:
      return Decay::Polynomial;
    case Kind::XRayGaussianMix:
      return Decay::GaussianDecay;
    case Kind::Sum: {
      Decay d = Decay::GaussianDecay;
      for (const Solution& t : terms_)
        if (t.decay() == Decay::Polynomial) d = Decay::Polynomial;
      return d;
    }
  }
  return Decay::Polynomial;
}

double xray_u(const std::vector<GaussianComponent>& mix, const Point22& x) {
  LineABCD l = abcd_from_john(x);
  const double a = l.a * l.a + l.c * l.c + 1;
  double total = 0;
  for (const GaussianComponent& g : mix) {
    double b = l.a * (l.b - g.center[0]) + l.c * (l.d - g.center[1]) - g.center[2];
    // distance-square of the line to the center, evaluated at the minimizing
    // parameter to keep the argument nonnegative under cancellation
    double zs = -b / a;
    double dx = l.a * zs + l.b - g.center[0];
    double dy = l.c * zs + l.d - g.center[1];
    double dz = zs - g.center[2];
    double dist_sq = dx * dx + dy * dy + dz * dz;
    total += g.weight * g.sigma * std::sqrt(std::numbers::pi / a) *
             std::exp(-dist_sq / (g.sigma * g.sigma));
  }
  return total;
}

double laplacian_residual(const Solution& u, const Point22& x, double h) {
  if (!(h > 0)) raise(Errc::BadInput, "step must be positive");
  static const double g[4] = {1, 1, -1, -1};
  const double u0 = u.eval(x);
  double acc = 0;
  for (int i = 0; i < 4; ++i) {
    Point22 xp = x, xm = x;
    (&xp.x1)[i] += h;
    (&xm.x1)[i] -= h;
    acc += g[i] * (u.eval(xp) - 2 * u0 + u.eval(xm)) / (h * h);
  }
  return acc;
}

CertificateReport uhe_certificate(const Solution& u, int n, std::uint64_t seed, double h) {
  CertificateReport rep;
  rep.points = n;
  CounterRng rng(seed);
  for (int i = 0; i < n; ++i) {
    Point22 x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    rep.max_residual_h = std::max(rep.max_residual_h, std::abs(laplacian_residual(u, x, h)));
    rep.max_residual_h2 = std::max(rep.max_residual_h2, std::abs(laplacian_residual(u, x, h / 2)));
  }
  if (rep.max_residual_h2 > 0)
    rep.order = std::log2(rep.max_residual_h / rep.max_residual_h2);
  return rep;
}

namespace {

Mat44 sym4(double d11, double d22, double d33, double d44) {
  Mat44 m;
  m.a[0][0] = d11;
  m.a[1][1] = d22;
  m.a[2][2] = d33;
  m.a[3][3] = d44;
  return m;
}

}  // namespace

std::vector<Solution> builtin_solutions() {
  std::vector<Solution> out;

  // quadratics
  {
    Solution s = Solution::quadratic(sym4(1, 0, 1, 0), {}, 0);
    s.id = "quad-x1x1+x3x3";
    out.push_back(s);
    s = Solution::quadratic(sym4(1, 1, 1, 1), {0, 1, 0, 0}, -3);
    s.id = "quad-allsq+x2-3";
    out.push_back(s);
    Mat44 m{};
    m.a[0][1] = m.a[1][0] = 0.5;
    m.a[2][3] = m.a[3][2] = 0.5;
    s = Solution::quadratic(m, {}, 1);
    s.id = "quad-x1x2+x3x4+1";
    out.push_back(s);
    m = Mat44{};
    m.a[0][2] = m.a[2][0] = 0.5;
    s = Solution::quadratic(m, {1, 0, 0, 2}, 2);
    s.id = "quad-x1x3+lin+2";
    out.push_back(s);
    m = sym4(0, 1, 0, 1);
    m.a[0][1] = m.a[1][0] = -1;
    s = Solution::quadratic(m, {}, 5);
    s.id = "quad-x2x2+x4x4-2x1x2+5";
    out.push_back(s);
  }

  // null plane waves
  {
    const double rt2 = std::sqrt(2.0);
    struct Wave {
      Point22 k;
      Profile p;
      const char* id;
    };
    const Wave waves[] = {
        {{1, 0, 1, 0}, Profile::gaussian(), "pw-gauss-1010"},
        {{0, 1, 0, 1}, Profile::gaussian(), "pw-gauss-0101"},
        {{1, 0, 0, 1}, Profile::gaussian(), "pw-gauss-1001"},
        {{1, 1, rt2, 0}, Profile::gaussian(), "pw-gauss-11r0"},
        {{0, 1, 1, 0}, Profile::cosine(1.0), "pw-cos1-0110"},
        {{1, 0, -1, 0}, Profile::cosine(2.0), "pw-cos2-10m10"},
        {{rt2, 0, 1, 1}, Profile::cosine(0.7), "pw-cos07-r011"},
        {{0, 1, 0, -1}, Profile::cosine(1.3), "pw-cos13-010m1"},
        {{1, 0, 1, 0}, Profile::monomial(2), "pw-mono2-1010"},
        {{0, 1, 0, 1}, Profile::monomial(3), "pw-mono3-0101"},
    };
    for (const Wave& w : waves) {
      Solution s = Solution::plane_wave(w.k, w.p);
      s.id = w.id;
      out.push_back(s);
    }
  }

  // X-ray Gaussian mixtures
  {
    struct Mix {
      std::vector<GaussianComponent> comps;
      const char* id;
    };
    const Mix mixes[] = {
        {{{{{0, 0, 0}}, 1.5, 1.0}}, "xray-origin"},
        {{{{{0.5, 0, 0}}, 1.6, 0.8}, {{{-0.5, 0.3, 0}}, 1.8, 0.6}}, "xray-two"},
        {{{{{0, 0.7, -0.4}}, 2.0, 1.2}}, "xray-offset"},
        {{{{{0.3, -0.3, 0.5}}, 1.4, 0.5}, {{{0, 0, -0.6}}, 1.7, 0.9}}, "xray-pairmix"},
        {{{{{-0.8, 0.2, 0.1}}, 1.9, 1.0}, {{{0.4, 0.4, 0.4}}, 1.5, 0.4}, {{{0, -0.5, 0}}, 2.2, 0.7}},
         "xray-three"},
    };
    for (const Mix& m : mixes) {
      Solution s = Solution::xray_gaussians(m.comps);
      s.id = m.id;
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Solution> builtin_gaussian_decay() {
  std::vector<Solution> out;
  struct Wave {
    Point22 k;
    const char* id;
  };
  const double rt2 = std::sqrt(2.0);
  const Wave waves[] = {
      {{1, 0, 1, 0}, "gd-1010"},
      {{0, 1, 0, 1}, "gd-0101"},
      {{1, 0, 0, 1}, "gd-1001"},
      {{0, 1, 1, 0}, "gd-0110"},
      {{1, 1, rt2, 0}, "gd-11r0"},
      {{1, -1, 0, rt2}, "gd-1m10r"},
      {{rt2, 0, 1, 1}, "gd-r011"},
      {{0.5, 0, 0.3, 0.4}, "gd-small"},
      {{2, 0, 2, 0}, "gd-2020"},
      {{0.8, 0.6, 1, 0}, "gd-8610"},
  };
  for (const Wave& w : waves) {
    Solution s = Solution::plane_wave(w.k, Profile::gaussian());
    s.id = w.id;
    out.push_back(s);
  }
  return out;
}

std::vector<Solution> builtin_mv_circle_set() {
  std::vector<Solution> all = builtin_solutions();
  // quadratics with constant mass, Gaussian waves, even monomial, X-ray mixes
  std::vector<Solution> out;
  auto take = [&](const char* id) {
    for (const Solution& s : all)
      if (s.id == id) out.push_back(s);
  };
  take("quad-x1x1+x3x3");
  take("quad-allsq+x2-3");
  take("quad-x2x2+x4x4-2x1x2+5");
  take("pw-gauss-1010");
  take("pw-gauss-0101");
  take("pw-gauss-11r0");
  take("pw-mono2-1010");
  take("xray-origin");
  take("xray-two");
  take("xray-offset");
  return out;
}

}  // namespace nc
