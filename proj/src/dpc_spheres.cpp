#include "nc/dpc_spheres.hpp"

#include <algorithm>
#include <cmath>

namespace nc {

Hypersphere Hypersphere::proper(const Point22& center, double radius_sq) {
  Hypersphere h;
  h.kind = HypersphereKind::Proper;
  h.center = center;
  h.radius_sq = radius_sq;
  return h;
}

Hypersphere Hypersphere::plane(const Point22& normal, double offset) {
  if (enorm(normal) <= 0) raise(Errc::ZeroVector, "plane normal must be nonzero");
  Hypersphere h;
  h.kind = HypersphereKind::Plane;
  h.normal = normal;
  h.offset = offset;
  return h;
}

Hypersphere Hypersphere::empty() { return Hypersphere{}; }

DPC::DPC(const Vec33& raw) : v(raw) {
  if (enorm(raw) <= 0) raise(Errc::ZeroVector, "DPC must be nonzero");
}

DPC DPC::normalized(double tol) const {
  double n = enorm(v);
  double tr = v.s0 + v.s5;
  if (std::abs(tr) > tol * n) return DPC(v * (1.0 / tr));
  Vec33 u = v * (1.0 / n);
  for (int i = 0; i < 6; ++i) {
    if (std::abs(u[i]) > tol) {
      if (u[i] < 0) u = -u;
      break;
    }
  }
  return DPC(u);
}

bool DPC::is_null(double tol) const {
  double n = enorm(v);
  return std::abs(inner33(v, v)) <= tol * n * n;
}

DPC dpc_from_hypersphere(const Hypersphere& h) {
  switch (h.kind) {
    case HypersphereKind::Proper: {
      double p2 = norm22(h.center);
      return DPC(Vec33::from_parts((1 - p2 + h.radius_sq) / 2, h.center,
                                   (1 + p2 - h.radius_sq) / 2));
    }
    case HypersphereKind::Plane:
      return DPC(Vec33::from_parts(-h.offset, h.normal, h.offset));
    case HypersphereKind::Empty:
      raise(Errc::EmptyHypersphere, "the empty hypersphere has no DPC constructor");
  }
  raise(Errc::BadInput, "unreachable");
}

DPC phi(const Point22& p) {
  double p2 = norm22(p);
  return DPC(Vec33::from_parts((1 - p2) / 2, p, (1 + p2) / 2));
}

HypersphereKind classify_dpc(const DPC& s, double tol) {
  double n = enorm(s.v);
  if (std::abs(s.v.s0 + s.v.s5) > tol * n) return HypersphereKind::Proper;
  if (enorm(s.v.mid()) > tol * n) return HypersphereKind::Plane;
  return HypersphereKind::Empty;
}

Hypersphere hypersphere_from_dpc(const DPC& s, double tol) {
  switch (classify_dpc(s, tol)) {
    case HypersphereKind::Proper: {
      DPC n = s.normalized(tol);
      return Hypersphere::proper(n.v.mid(), inner33(n.v, n.v));
    }
    case HypersphereKind::Plane: {
      DPC n = s.normalized(tol);  // unit-length branch
      return Hypersphere::plane(n.v.mid(), n.v.s5);
    }
    case HypersphereKind::Empty:
      return Hypersphere::empty();
  }
  raise(Errc::BadInput, "unreachable");
}

bool point_on(const DPC& s_h, const Point22& x, double tol) {
  Vec33 sx = phi(x).v;
  double scale = enorm(sx) * enorm(s_h.v);
  return std::abs(inner33(sx, s_h.v)) <= tol * scale;
}

double separation(const Point22& a, const Point22& b) { return norm22(a - b); }

std::vector<bool> complementary_hyperplane_points(const DPC& s, const std::vector<Point22>& sample,
                                                  double tol) {
  std::vector<bool> out;
  out.reserve(sample.size());
  for (const Point22& x : sample) {
    Vec33 t = phi(x).v;
    double lhs = s.v.s0 * t.s0 + (s.v.s1 * t.s1 + s.v.s2 * t.s2 - s.v.s3 * t.s3 - s.v.s4 * t.s4) -
                 s.v.s5 * t.s5;
    out.push_back(std::abs(lhs) <= tol * enorm(s.v) * enorm(t));
  }
  return out;
}

OrthogonalityCheck orthogonality_oracle(const Hypersphere& h, const Hypersphere& k, double tol) {
  if (h.kind == HypersphereKind::Empty || k.kind == HypersphereKind::Empty)
    raise(Errc::EmptyHypersphere, "orthogonality is defined for proper spheres and planes");

  DPC sh = dpc_from_hypersphere(h), sk = dpc_from_hypersphere(k);
  OrthogonalityCheck r;
  r.by_dpc = std::abs(inner33(sh.v, sk.v)) <= tol * enorm(sh.v) * enorm(sk.v);

  const bool hp = h.kind == HypersphereKind::Proper;
  const bool kp = k.kind == HypersphereKind::Proper;
  if (hp && kp) {
    // |p - p'|^2 = rho + rho' covers sphere/sphere, sphere/cone and cone/cone
    double lhs = separation(h.center, k.center);
    double rhs = h.radius_sq + k.radius_sq;
    double en = enorm(h.center) + enorm(k.center);
    double scale = 1 + en * en + std::abs(h.radius_sq) + std::abs(k.radius_sq);
    r.by_geometry = std::abs(lhs - rhs) <= tol * scale;
  } else if (!hp && !kp) {
    double scale = 1 + enorm(h.normal) * enorm(k.normal);
    r.by_geometry = std::abs(inner22(h.normal, k.normal)) <= tol * scale;
  } else {
    const Hypersphere& plane = hp ? k : h;
    const Hypersphere& sphere = hp ? h : k;
    double lhs = inner22(plane.normal, sphere.center);
    double scale = 1 + enorm(plane.normal) * (1 + enorm(sphere.center)) + std::abs(plane.offset);
    r.by_geometry = std::abs(lhs - plane.offset) <= tol * scale;
  }
  return r;
}

bool same_hypersphere(const Hypersphere& a, const Hypersphere& b, double tol) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case HypersphereKind::Proper: {
      double scale = 1 + enorm(a.center) + std::abs(a.radius_sq);
      return enorm(a.center - b.center) <= tol * scale &&
             std::abs(a.radius_sq - b.radius_sq) <= tol * scale;
    }
    case HypersphereKind::Plane: {
      // projective comparison of (normal, offset)
      Vec33 va = Vec33::from_parts(-a.offset, a.normal, a.offset);
      Vec33 vb = Vec33::from_parts(-b.offset, b.normal, b.offset);
      va = va * (1.0 / enorm(va));
      vb = vb * (1.0 / enorm(vb));
      double dot = 0;
      for (int i = 0; i < 6; ++i) dot += va[i] * vb[i];
      if (dot < 0) vb = -vb;
      return enorm(va - vb) <= tol;
    }
    case HypersphereKind::Empty:
      return true;
  }
  return false;
}

}  // namespace nc
