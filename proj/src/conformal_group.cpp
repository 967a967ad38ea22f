#include "nc/conformal_group.hpp"

#include <cmath>

#include "nc/rng.hpp"

namespace nc {

namespace {

Mat66 jmat() {
  Mat66 j;
  j.a[0][0] = j.a[1][1] = j.a[2][2] = 1;
  j.a[3][3] = j.a[4][4] = j.a[5][5] = -1;
  return j;
}

}  // namespace

double ConformalMap::validation_residual() const {
  Mat66 t = m.transposed() * (jmat() * m);
  double worst = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      double want = 0;
      if (i == j) want = (i < 3 ? 1.0 : -1.0) * sign;
      worst = std::max(worst, std::abs(t.a[i][j] - want));
    }
  return worst;
}

bool ConformalMap::validate(double tol) const {
  return (sign == 1 || sign == -1) && validation_residual() <= tol;
}

Generator Generator::translation(const Point22& v) {
  Generator g;
  g.kind = Kind::Translation;
  g.v = v;
  return g;
}

Generator Generator::linear_isometry(const Mat44& m) {
  if (m.isometry_residual() > 1e-10)
    raise(Errc::InvalidGenerator, "matrix does not preserve the neutral form");
  Generator g;
  g.kind = Kind::LinearIsometry;
  g.m = m;
  return g;
}

Generator Generator::dilation(double lambda) {
  if (!(lambda > 0)) raise(Errc::InvalidGenerator, "dilation factor must be positive");
  Generator g;
  g.kind = Kind::Dilation;
  g.lambda = lambda;
  return g;
}

Generator Generator::inversion() {
  Generator g;
  g.kind = Kind::Inversion;
  return g;
}

Generator Generator::plane_rotation(int i, int j, double angle) {
  Mat44 m = Mat44::identity();
  const bool ipos = i < 2, jpos = j < 2;
  if (ipos == jpos) {
    m.a[i][i] = std::cos(angle);
    m.a[j][j] = std::cos(angle);
    m.a[i][j] = -std::sin(angle);
    m.a[j][i] = std::sin(angle);
  } else {
    m.a[i][i] = std::cosh(angle);
    m.a[j][j] = std::cosh(angle);
    m.a[i][j] = std::sinh(angle);
    m.a[j][i] = std::sinh(angle);
  }
  return linear_isometry(m);
}

ConformalMap lift(const Generator& g) {
  ConformalMap out;
  out.sign = +1;
  Mat66& m = out.m;
  switch (g.kind) {
    case Generator::Kind::Translation: {
      const Point22& v = g.v;
      const double w = norm22(v) / 2;
      // neutral pairing weights for <s_mid, v>
      const double gv[4] = {v.x1, v.x2, -v.x3, -v.x4};
      m = Mat66::identity();
      m.a[0][0] = 1 - w;
      m.a[0][5] = -w;
      m.a[5][0] = w;
      m.a[5][5] = 1 + w;
      for (int i = 0; i < 4; ++i) {
        m.a[0][1 + i] = -gv[i];
        m.a[5][1 + i] = gv[i];
        m.a[1 + i][0] = (&v.x1)[i];
        m.a[1 + i][5] = (&v.x1)[i];
      }
      break;
    }
    case Generator::Kind::LinearIsometry: {
      m.a[0][0] = 1;
      m.a[5][5] = 1;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.a[1 + i][1 + j] = g.m.a[i][j];
      break;
    }
    case Generator::Kind::Dilation: {
      const double l = g.lambda;
      m = Mat66::identity();
      m.a[0][0] = (1 + l * l) / (2 * l);
      m.a[0][5] = (1 - l * l) / (2 * l);
      m.a[5][0] = (1 - l * l) / (2 * l);
      m.a[5][5] = (1 + l * l) / (2 * l);
      break;
    }
    case Generator::Kind::Inversion: {
      m = Mat66::identity();
      m.a[0][0] = -1;
      break;
    }
  }
  return out;
}

ConformalMap compose(const ConformalMap& a, const ConformalMap& b) {
  ConformalMap out;
  out.m = a.m * b.m;
  out.sign = a.sign * b.sign;
  return out;
}

ConformalMap inverse(const ConformalMap& a) {
  // From L^T J L = sign*J: L^{-1} = sign * J L^T J.
  ConformalMap out;
  Mat66 j = jmat();
  out.m = j * (a.m.transposed() * j);
  if (a.sign < 0)
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 6; ++k) out.m.a[i][k] = -out.m.a[i][k];
  out.sign = a.sign;
  return out;
}

ConformalMap identity_map() { return ConformalMap{Mat66::identity(), +1}; }

std::optional<Point22> apply_point(const ConformalMap& m, const Point22& x, double tol) {
  Vec33 t = m.m.apply(phi(x).v);
  double tr = t.s0 + t.s5;
  if (std::abs(tr) <= tol * enorm(t)) return std::nullopt;
  return t.mid() * (1.0 / tr);
}

DPC apply_dpc(const ConformalMap& m, const DPC& s) { return DPC(m.m.apply(s.v)); }

ConformalMap random_map(std::uint64_t seed, int n) {
  ConformalMap acc = identity_map();
  for (int i = 0; i < n; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    double pick = rng.next_u01();
    Generator g = Generator::inversion();
    if (pick < 0.25) {
      g = Generator::inversion();
    } else if (pick < 0.50) {
      g = Generator::translation(
          {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    } else if (pick < 0.75) {
      g = Generator::dilation(std::exp2(rng.uniform(-1, 1)));
    } else {
      static const int planes[6][2] = {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
      Mat44 m4 = Mat44::identity();
      for (int k = 0; k < 3; ++k) {
        int p = static_cast<int>(rng.next_below(6));
        m4 = Generator::plane_rotation(planes[p][0], planes[p][1], rng.uniform(-1, 1)).m * m4;
      }
      g = Generator::linear_isometry(m4);
    }
    acc = compose(lift(g), acc);
  }
  return acc;
}

ConformalityReport pointwise_conformality_check(const ConformalMap& m, const Point22& x,
                                                double h) {
  Point22 d[4];
  for (int i = 0; i < 4; ++i) {
    Point22 xp = x, xm = x;
    (&xp.x1)[i] += h;
    (&xm.x1)[i] -= h;
    auto fp = apply_point(m, xp);
    auto fm = apply_point(m, xm);
    if (!fp || !fm) raise(Errc::NearInfinity, "stencil point maps to infinity");
    d[i] = (*fp - *fm) * (1.0 / (2 * h));
  }
  static const double g[4] = {1, 1, -1, -1};
  ConformalityReport rep;
  rep.lambda = inner22(d[0], d[0]);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      double want = (i == j) ? rep.lambda * g[i] : 0.0;
      rep.max_residual = std::max(rep.max_residual, std::abs(inner22(d[i], d[j]) - want));
    }
  return rep;
}

}  // namespace nc
