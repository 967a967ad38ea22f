#include "nc/conjugate_conics.hpp"

#include <algorithm>
#include <cmath>

namespace nc {

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::LineEmpty: return "line_empty";
    case PairClass::Circles: return "circles";
    case PairClass::Hyperbolae: return "hyperbolae";
    case PairClass::Parabolae: return "parabolae";
  }
  return "?";
}

Vec33 ConicChart::ray(double theta) const {
  return e + f1 * std::cos(theta) + f2 * std::sin(theta);
}

ConicSample ConicChart::sample(double theta, double tol) const {
  ConicSample s;
  s.theta = theta;
  Vec33 v = ray(theta);
  double l = lambda(theta);
  if (std::abs(l) <= tol * std::max(1.0, enorm(v))) return s;  // at infinity
  s.finite = true;
  Point22 m = v.mid();
  s.point = m * (1.0 / l);
  Point22 mprime = f1.mid() * -std::sin(theta) + f2.mid() * std::cos(theta);
  double lprime = -beta * std::sin(theta) + gamma * std::cos(theta);
  Point22 xprime = (mprime * l - m * lprime) * (1.0 / (l * l));
  s.speed = std::sqrt(std::abs(inner22(xprime, xprime)));
  return s;
}

ConicChart chart_of_subspace(const Subspace33& w) {
  if (w.dim() != 3) raise(Errc::DegenerateConic, "chart requires a 3-subspace");
  const double tol = w.tol;

  std::vector<Vec33> rem;
  for (const Vec33& b : w.basis) {
    double n = enorm(b);
    if (n <= 0) raise(Errc::ZeroVector, "zero basis vector");
    rem.push_back(b * (1.0 / n));
  }

  std::vector<Vec33> units;
  std::vector<int> signs;
  for (int step = 0; step < 3; ++step) {
    // candidate with the largest scale-free |self inner product|; sums and
    // differences cover the case where the remaining vectors are all null
    std::vector<Vec33> cand = rem;
    for (size_t i = 0; i < rem.size(); ++i)
      for (size_t j = i + 1; j < rem.size(); ++j) {
        cand.push_back(rem[i] + rem[j]);
        cand.push_back(rem[i] - rem[j]);
      }
    int best = -1;
    double best_ratio = 0;
    for (size_t i = 0; i < cand.size(); ++i) {
      double n = enorm(cand[i]);
      if (n <= tol) continue;
      double ratio = std::abs(inner33(cand[i], cand[i])) / (n * n);
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best = static_cast<int>(i);
      }
    }
    if (best < 0 || best_ratio <= tol)
      raise(Errc::DegenerateConic, "subspace is degenerate at the working tolerance");

    double q = inner33(cand[best], cand[best]);
    int sg = q > 0 ? +1 : -1;
    Vec33 u = cand[best] * (1.0 / std::sqrt(std::abs(q)));
    units.push_back(u);
    signs.push_back(sg);

    // project the remaining vectors off u, then keep an independent subset
    std::vector<Vec33> next;
    for (const Vec33& r : rem) {
      Vec33 x = r - u * (sg * inner33(r, u));
      double n = enorm(x);
      if (n <= tol) continue;
      x = x * (1.0 / n);
      std::vector<Vec33> trial = next;
      trial.push_back(x);
      if (rank(trial, tol) == static_cast<int>(trial.size())) next.push_back(x);
    }
    rem = std::move(next);
    if (static_cast<int>(rem.size()) < 2 - step)
      raise(Errc::DegenerateConic, "pseudo-orthonormalization lost rank");
  }

  int plus = 0;
  for (int s : signs) plus += (s > 0);
  if (plus != 1 && plus != 2)
    raise(Errc::DegenerateConic, "subspace signature is not (1,2) or (2,1)");
  const int minority = (plus == 1) ? +1 : -1;

  ConicChart ch;
  bool have_e = false;
  for (size_t i = 0; i < units.size(); ++i) {
    if (!have_e && signs[i] == minority) {
      ch.e = units[i];
      have_e = true;
    } else if (enorm(ch.f1) == 0) {
      ch.f1 = units[i];
    } else {
      ch.f2 = units[i];
    }
  }
  ch.alpha = ch.e.s0 + ch.e.s5;
  ch.beta = ch.f1.s0 + ch.f1.s5;
  ch.gamma = ch.f2.s0 + ch.f2.s5;
  return ch;
}

ConicChart chart(const Conic& s) { return chart_of_subspace(orthogonal_complement(s.v)); }

ConicPair standard_pair() {
  ConicPair p;
  p.v.basis = {Vec33{1, 0, 0, 0, 0, 0}, Vec33{0, 0, 0, 1, 0, 0}, Vec33{0, 0, 0, 0, 1, 0}};
  p.vp.basis = {Vec33{0, 0, 0, 0, 0, 1}, Vec33{0, 1, 0, 0, 0, 0}, Vec33{0, 0, 1, 0, 0, 0}};
  return p;
}

Conic conic_from_hyperspheres(const DPC& s1, const DPC& s2, const DPC& s3, double tol) {
  Conic c;
  c.v.tol = tol;
  c.v.basis = {s1.v, s2.v, s3.v};
  if (rank(c.v.basis, tol) < 3) raise(Errc::DependentSpheres, "DPC span has dimension below 3");
  if (signature(c.v).cls != MetricClass::Indefinite)
    raise(Errc::DegenerateConic, "associated subspace is not indefinite");
  return c;
}

Conic conic_from_three_cones(const Point22& a, const Point22& b, const Point22& c, double tol) {
  const Point22* pts[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double en = enorm(*pts[i]) + enorm(*pts[j]);
      if (std::abs(separation(*pts[i], *pts[j])) <= tol * (1 + en * en))
        raise(Errc::NullSeparatedCenters, "cone centers must be pairwise non-null-separated");
    }
  Conic out;
  out.v.tol = tol;
  out.v.basis = {phi(a).v, phi(b).v, phi(c).v};
  if (signature(out.v).cls != MetricClass::Indefinite)
    raise(Errc::DegenerateConic, "cone span is not indefinite");
  return out;
}

ConicPair pair_from_conic(const Conic& s) {
  if (signature(s.v).cls != MetricClass::Indefinite)
    raise(Errc::DegenerateConic, "conic subspace is not indefinite");
  ConicPair p;
  p.v = s.v;
  p.vp = orthogonal_complement(s.v);
  if (signature(p.vp).cls != MetricClass::Indefinite)
    raise(Errc::DegenerateComplement, "complement is not indefinite");
  return p;
}

ConicPair make_pair_checked(const Subspace33& v, const Subspace33& vp) {
  if (v.dim() != 3 || vp.dim() != 3) raise(Errc::NotAConic, "both sides must have dimension 3");
  if (signature(v).cls != MetricClass::Indefinite ||
      signature(vp).cls != MetricClass::Indefinite)
    raise(Errc::NotAConic, "both sides must be indefinite");
  const double tol = std::max(v.tol, vp.tol);
  for (const Vec33& a : v.basis)
    for (const Vec33& b : vp.basis)
      if (std::abs(inner33(a, b)) > tol * std::max(1.0, enorm(a) * enorm(b)))
        raise(Errc::NotAConic, "sides are not mutually orthogonal");
  std::vector<Vec33> stacked = v.basis;
  stacked.insert(stacked.end(), vp.basis.begin(), vp.basis.end());
  if (rank(stacked, tol) != 6) raise(Errc::NotAConic, "sides are not complementary");
  return ConicPair{v, vp};
}

ConicPair apply_map(const ConformalMap& m, const ConicPair& pair) {
  ConicPair out;
  out.v.tol = pair.v.tol;
  out.vp.tol = pair.vp.tol;
  for (const Vec33& b : pair.v.basis) out.v.basis.push_back(m.m.apply(b));
  for (const Vec33& b : pair.vp.basis) out.vp.basis.push_back(m.m.apply(b));
  return out;
}

namespace {

// Plane data (a, b) of a vector inside P, written s = (-b, a, b).
void plane_coefficients(const Vec33& s, Point22& a, double& b) {
  a = s.mid();
  b = (s.s5 - s.s0) / 2;
}

// Affine 2-plane cut out by the two hyperplane equations of a 2-subspace of P.
ContainingPlane plane_from_subspace(const Subspace33& i2) {
  if (i2.dim() != 2) raise(Errc::NotAConic, "containing plane needs a 2-subspace of P");
  Point22 a1, a2;
  double b1, b2;
  plane_coefficients(i2.basis[0], a1, b1);
  plane_coefficients(i2.basis[1], a2, b2);

  // rows of the linear system <a, x> = b with the neutral pairing expanded
  double rows[2][5] = {{a1.x1, a1.x2, -a1.x3, -a1.x4, b1}, {a2.x1, a2.x2, -a2.x3, -a2.x4, b2}};

  // particular solution with free variables zero
  int pivot_col[2] = {-1, -1};
  int r = 0;
  for (int c = 0; c < 4 && r < 2; ++c) {
    int piv = r;
    if (std::abs(rows[1][c]) > std::abs(rows[r][c]) && r == 0) piv = 1;
    if (std::abs(rows[piv][c]) <= 1e-12) continue;
    if (piv != r) std::swap(rows[piv], rows[r]);
    for (int o = 0; o < 2; ++o) {
      if (o == r) continue;
      double f = rows[o][c] / rows[r][c];
      for (int k = c; k < 5; ++k) rows[o][k] -= f * rows[r][k];
    }
    pivot_col[r] = c;
    ++r;
  }
  if (r < 2) raise(Errc::NotAConic, "containing plane equations are dependent");

  ContainingPlane pl;
  Point22 base{};
  for (int i = 1; i >= 0; --i) base[pivot_col[i]] = rows[i][4] / rows[i][pivot_col[i]];
  pl.base = base;

  // homogeneous solutions: two free columns
  Point22 spans[2];
  int nfree = 0;
  for (int c = 0; c < 4; ++c) {
    if (c == pivot_col[0] || c == pivot_col[1]) continue;
    Point22 d{};
    d[c] = 1;
    for (int i = 0; i < 2; ++i) d[pivot_col[i]] = -rows[i][c] / rows[i][pivot_col[i]];
    spans[nfree++] = d * (1.0 / enorm(d));
  }
  pl.span1 = spans[0];
  pl.span2 = spans[1];
  std::vector<std::vector<double>> gram = {
      {inner22(pl.span1, pl.span1), inner22(pl.span1, pl.span2)},
      {inner22(pl.span1, pl.span2), inner22(pl.span2, pl.span2)}};
  pl.metric_class = signature_of_symmetric(gram).cls;
  return pl;
}

PairClass class_from_metric(MetricClass m) {
  switch (m) {
    case MetricClass::Definite: return PairClass::Circles;
    case MetricClass::Indefinite: return PairClass::Hyperbolae;
    case MetricClass::Degenerate: return PairClass::Parabolae;
  }
  return PairClass::Circles;
}

}  // namespace

PairClassification classify_pair(const ConicPair& pair) {
  Subspace33 i = intersect_with_P(pair.v);
  Subspace33 ip = intersect_with_P(pair.vp);

  PairClassification out;
  if (i.dim() == 3 && ip.dim() == 3)
    raise(Errc::NotAConic, "both sides lie inside P");
  if (i.dim() == 3 || ip.dim() == 3) {
    out.cls = PairClass::LineEmpty;
    out.line_side = (i.dim() == 3) ? 0 : 1;
    // no containing plane is reported for either side of a line-empty pair
    return out;
  }
  if (i.dim() != 2 || ip.dim() != 2) raise(Errc::NotAConic, "unexpected intersection with P");

  Signature sig_s = signature(i);
  Signature sig_sp = signature(ip);
  if (sig_s.cls != sig_sp.cls || sig_s.pos != sig_sp.neg || sig_s.neg != sig_sp.pos)
    raise(Errc::NotAConic, "side signatures do not balance");

  out.cls = class_from_metric(sig_s.cls);
  out.plane_s = plane_from_subspace(i);
  out.plane_sp = plane_from_subspace(ip);
  return out;
}

namespace {

// Null ray of the subspace at the maximum of |lambda| on its own chart,
// rescaled to s0+s5 = 1; this is phi of a point of the opposite conic.
Point22 cone_center_from_subspace(const Subspace33& v) {
  ConicChart ch = chart_of_subspace(v);
  double r = std::hypot(ch.beta, ch.gamma);
  double psi = (r > 0) ? std::atan2(ch.gamma, ch.beta) : 0.0;
  double theta = (ch.alpha >= 0) ? psi : psi + std::acos(-1.0);
  Vec33 ray = ch.ray(theta);
  double tr = ray.s0 + ray.s5;
  if (std::abs(tr) <= v.tol * enorm(ray))
    raise(Errc::WrongCase, "no proper cone in the pencil at the chart maximum");
  return ray.mid() * (1.0 / tr);
}

// Radius-square of the unique sphere centered at p inside the pencil whose
// orthogonal complement is spanned by `complement`.
double pencil_radius_sq(const Point22& p, const std::vector<Vec33>& complement, double tol) {
  int best = -1;
  double best_tr = 0;
  for (size_t j = 0; j < complement.size(); ++j) {
    double tr = (complement[j].s0 + complement[j].s5) / std::max(1e-300, enorm(complement[j]));
    if (std::abs(tr) > std::abs(best_tr)) {
      best_tr = tr;
      best = static_cast<int>(j);
    }
  }
  if (best < 0 || std::abs(best_tr) <= tol) raise(Errc::WrongCase, "pencil has no proper sphere");
  const Vec33& u = complement[best];
  return -2 * inner33(phi(p).v, u) / (u.s0 + u.s5);
}

}  // namespace

Case2Data extract_case2_data(const ConicPair& pair) {
  PairClassification cl = classify_pair(pair);
  if (cl.cls == PairClass::LineEmpty) raise(Errc::WrongCase, "line-empty pairs carry no case-2 data");

  Case2Data out;
  out.cls = cl.cls;
  out.plane_s = *cl.plane_s;
  out.plane_sp = *cl.plane_sp;

  if (cl.cls == PairClass::Parabolae) {
    out.p_tilde = cone_center_from_subspace(pair.v);   // point of S-perp
    out.p = cone_center_from_subspace(pair.vp);        // point of S
    return out;
  }

  // Circles / Hyperbolae: common center from the four hyperplane equations.
  Subspace33 i = intersect_with_P(pair.v);
  Subspace33 ip = intersect_with_P(pair.vp);
  double m[4][5];
  int r = 0;
  for (const Subspace33* sub : {&i, &ip})
    for (const Vec33& s : sub->basis) {
      Point22 a;
      double b;
      plane_coefficients(s, a, b);
      m[r][0] = a.x1;
      m[r][1] = a.x2;
      m[r][2] = -a.x3;
      m[r][3] = -a.x4;
      m[r][4] = b;
      ++r;
    }
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int k = c + 1; k < 4; ++k)
      if (std::abs(m[k][c]) > std::abs(m[piv][c])) piv = k;
    if (std::abs(m[piv][c]) <= 1e-12) raise(Errc::WrongCase, "planes do not meet in a point");
    if (piv != c)
      for (int k = 0; k < 5; ++k) std::swap(m[piv][k], m[c][k]);
    for (int o = 0; o < 4; ++o) {
      if (o == c) continue;
      double f = m[o][c] / m[c][c];
      for (int k = c; k < 5; ++k) m[o][k] -= f * m[c][k];
    }
  }
  for (int c = 0; c < 4; ++c) out.center[c] = m[c][4] / m[c][c];

  double tol = std::max(pair.v.tol, pair.vp.tol);
  out.rho_s = pencil_radius_sq(out.center, pair.vp.basis, tol);
  out.rho_sp = pencil_radius_sq(out.center, pair.v.basis, tol);
  return out;
}

std::vector<ConicSample> parametrize(const Conic& s, const std::vector<double>& thetas,
                                     double tol) {
  ConicChart ch = chart(s);
  std::vector<ConicSample> out;
  out.reserve(thetas.size());
  for (double t : thetas) out.push_back(ch.sample(t, tol));
  return out;
}

LambdaClass classify_by_lambda(const Conic& s, double tol) {
  ConicChart ch = chart(s);
  LambdaClass out;
  const double r = std::hypot(ch.beta, ch.gamma);
  const double a = std::abs(ch.alpha);
  const double scale = std::max(1.0, enorm(ch.e) + enorm(ch.f1) + enorm(ch.f2));
  if (a <= kDefaultTol * scale && r <= kDefaultTol * scale) {
    out.all_infinite = true;
    return out;
  }
  const double psi = (r > 0) ? std::atan2(ch.gamma, ch.beta) : 0.0;
  if (std::abs(a - r) <= tol * (a + r)) {
    out.roots = 1;
    out.root_thetas[0] = (ch.alpha >= 0) ? psi + std::acos(-1.0) : psi;
    out.hint = PairClass::Parabolae;
  } else if (a > r) {
    out.roots = 0;
    out.hint = PairClass::Circles;
  } else {
    out.roots = 2;
    double delta = std::acos(std::clamp(-ch.alpha / r, -1.0, 1.0));
    out.root_thetas[0] = psi - delta;
    out.root_thetas[1] = psi + delta;
    out.hint = PairClass::Hyperbolae;
  }
  return out;
}

PairClass pair_class_from_lambda(const LambdaClass& side_s, const LambdaClass& side_sp) {
  if (side_s.all_infinite || side_sp.all_infinite) {
    const LambdaClass& other = side_s.all_infinite ? side_sp : side_s;
    if (!other.all_infinite && other.roots == 1) return PairClass::LineEmpty;
    raise(Errc::NotAConic, "inconsistent lambda classification");
  }
  if (side_s.roots != side_sp.roots) raise(Errc::NotAConic, "sides disagree on root count");
  switch (side_s.roots) {
    case 0: return PairClass::Circles;
    case 1: return PairClass::Parabolae;
    case 2: return PairClass::Hyperbolae;
  }
  raise(Errc::NotAConic, "unexpected root count");
}

}  // namespace nc
