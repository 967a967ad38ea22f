#include "nc/neutral_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::EmptyHypersphere: return "EmptyHypersphere";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::InvalidGenerator: return "InvalidGenerator";
    case Errc::Singular: return "Singular";
    case Errc::NearInfinity: return "NearInfinity";
    case Errc::DependentSpheres: return "DependentSpheres";
    case Errc::DegenerateConic: return "DegenerateConic";
    case Errc::NullSeparatedCenters: return "NullSeparatedCenters";
    case Errc::DegenerateComplement: return "DegenerateComplement";
    case Errc::WrongCase: return "WrongCase";
    case Errc::NotAConic: return "NotAConic";
    case Errc::HorizontalLine: return "HorizontalLine";
    case Errc::DegenerateConfiguration: return "DegenerateConfiguration";
    case Errc::NotSkew: return "NotSkew";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::InvalidSolution: return "InvalidSolution";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

double inner22(const Point22& a, const Point22& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3 - a.x4 * b.x4;
}

double norm22(const Point22& a) { return inner22(a, a); }

double enorm(const Point22& a) {
  return std::sqrt(a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3 + a.x4 * a.x4);
}

double inner33(const Vec33& a, const Vec33& b) {
  return a.s0 * b.s0 + a.s1 * b.s1 + a.s2 * b.s2 - a.s3 * b.s3 - a.s4 * b.s4 - a.s5 * b.s5;
}

double enorm(const Vec33& a) {
  double s = 0;
  for (int i = 0; i < 6; ++i) s += a[i] * a[i];
  return std::sqrt(s);
}

Mat44 Mat44::identity() {
  Mat44 m;
  for (int i = 0; i < 4; ++i) m.a[i][i] = 1;
  return m;
}

Point22 Mat44::apply(const Point22& p) const {
  Point22 r;
  for (int i = 0; i < 4; ++i) {
    double acc = 0;
    for (int j = 0; j < 4; ++j) acc += a[i][j] * p[j];
    r[i] = acc;
  }
  return r;
}

Mat44 Mat44::operator*(const Mat44& o) const {
  Mat44 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double acc = 0;
      for (int k = 0; k < 4; ++k) acc += a[i][k] * o.a[k][j];
      r.a[i][j] = acc;
    }
  return r;
}

double Mat44::isometry_residual() const {
  static const double g[4] = {1, 1, -1, -1};
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double acc = 0;
      for (int k = 0; k < 4; ++k) acc += a[k][i] * g[k] * a[k][j];
      double want = (i == j) ? g[i] : 0.0;
      worst = std::max(worst, std::abs(acc - want));
    }
  return worst;
}

Mat66 Mat66::identity() {
  Mat66 m;
  for (int i = 0; i < 6; ++i) m.a[i][i] = 1;
  return m;
}

Vec33 Mat66::apply(const Vec33& v) const {
  Vec33 r;
  for (int i = 0; i < 6; ++i) {
    double acc = 0;
    for (int j = 0; j < 6; ++j) acc += a[i][j] * v[j];
    r[i] = acc;
  }
  return r;
}

Mat66 Mat66::operator*(const Mat66& o) const {
  Mat66 r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      double acc = 0;
      for (int k = 0; k < 6; ++k) acc += a[i][k] * o.a[k][j];
      r.a[i][j] = acc;
    }
  return r;
}

Mat66 Mat66::transposed() const {
  Mat66 r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r.a[i][j] = a[j][i];
  return r;
}

double Mat66::det() const {
  // elimination with partial pivoting
  std::array<std::array<double, 6>, 6> m = a;
  double d = 1;
  for (int c = 0; c < 6; ++c) {
    int piv = c;
    for (int r = c + 1; r < 6; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int r = c + 1; r < 6; ++r) {
      double f = m[r][c] / m[c][c];
      for (int k = c; k < 6; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

const char* metric_class_name(MetricClass c) {
  switch (c) {
    case MetricClass::Definite: return "definite";
    case MetricClass::Indefinite: return "indefinite";
    case MetricClass::Degenerate: return "degenerate";
  }
  return "?";
}

JacobiEigen jacobi_eigen(std::vector<std::vector<double>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  auto off_norm = [&]() {
    double s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2 * m[p][q] * m[p][q];
    return std::sqrt(s);
  };
  auto full_norm = [&]() {
    double s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) s += m[p][q] * m[p][q];
    return std::sqrt(s);
  };

  const double target = 1e-15 * std::max(1e-300, full_norm());
  for (int sweep = 0; sweep < 60 && off_norm() > target; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = m[p][q];
        if (std::abs(apq) <= 1e-300) continue;
        double theta = (m[q][q] - m[p][p]) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        double tau = s / (1 + c);
        double app = m[p][p], aqq = m[q][q];
        m[p][p] = app - t * apq;
        m[q][q] = aqq + t * apq;
        m[p][q] = m[q][p] = 0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            double arp = m[r][p], arq = m[r][q];
            m[r][p] = m[p][r] = arp - s * (arq + tau * arp);
            m[r][q] = m[q][r] = arq + s * (arp - tau * arq);
          }
          double vrp = v[r][p], vrq = v[r][q];
          v[r][p] = vrp - s * (vrq + tau * vrp);
          v[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  JacobiEigen out;
  out.offdiag_norm = off_norm();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (m[i][i] != m[j][j]) return m[i][i] < m[j][j];
    return i < j;
  });
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    out.values[k] = m[order[k]][order[k]];
    for (int r = 0; r < n; ++r) out.vectors[k][r] = v[r][order[k]];
  }
  return out;
}

namespace {

std::vector<Vec33> unit_rows(const std::vector<Vec33>& vs) {
  std::vector<Vec33> rows;
  rows.reserve(vs.size());
  for (const Vec33& v : vs) {
    double n = enorm(v);
    rows.push_back(n > 0 ? v * (1.0 / n) : v);
  }
  return rows;
}

// Row echelon rank of a k x 6 matrix whose rows are unit length.
int echelon_rank(std::vector<Vec33> rows, double tol) {
  const int k = static_cast<int>(rows.size());
  int r = 0;
  for (int c = 0; c < 6 && r < k; ++c) {
    int piv = r;
    for (int i = r + 1; i < k; ++i)
      if (std::abs(rows[i][c]) > std::abs(rows[piv][c])) piv = i;
    if (std::abs(rows[piv][c]) <= tol) continue;
    std::swap(rows[piv], rows[r]);
    for (int i = r + 1; i < k; ++i) {
      double f = rows[i][c] / rows[r][c];
      for (int j = c; j < 6; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Nullspace basis of an m x n matrix (m rows, n columns), partial pivoting,
// free variables set to 1 one at a time in column order.
std::vector<std::vector<double>> nullspace(std::vector<std::vector<double>> m, double tol) {
  if (m.empty()) return {};
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());

  double scale = 0;
  for (const auto& row : m)
    for (double e : row) scale = std::max(scale, std::abs(e));
  const double thresh = tol * std::max(1.0, scale);

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    for (int i = r + 1; i < rows; ++i)
      if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
    if (std::abs(m[piv][c]) <= thresh) continue;
    std::swap(m[piv], m[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      double f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<double>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<double> x(cols, 0.0);
    x[free] = 1.0;
    for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
      int pc = pivot_col[i];
      x[pc] = -m[i][free] / m[i][pc];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Vec33 j_flip(const Vec33& v) { return {v.s0, v.s1, v.s2, -v.s3, -v.s4, -v.s5}; }

}  // namespace

int rank(const std::vector<Vec33>& vectors, double tol) {
  if (vectors.empty()) return 0;
  return echelon_rank(unit_rows(vectors), tol);
}

Signature signature_of_symmetric(const std::vector<std::vector<double>>& m, double tol) {
  JacobiEigen eig = jacobi_eigen(m);
  double max_abs = 0;
  for (double l : eig.values) max_abs = std::max(max_abs, std::abs(l));
  const double zero_at = tol * std::max(1.0, max_abs);
  Signature sig;
  for (double l : eig.values) {
    if (std::abs(l) <= zero_at)
      ++sig.zero;
    else if (l > 0)
      ++sig.pos;
    else
      ++sig.neg;
  }
  if (sig.zero > 0)
    sig.cls = MetricClass::Degenerate;
  else if (sig.pos == 0 || sig.neg == 0)
    sig.cls = MetricClass::Definite;
  else
    sig.cls = MetricClass::Indefinite;
  return sig;
}

Signature signature(const Subspace33& v) {
  const int k = v.dim();
  if (k == 0) raise(Errc::DependentBasis, "empty basis");
  std::vector<Vec33> b = unit_rows(v.basis);
  if (echelon_rank(b, v.tol) < k) raise(Errc::DependentBasis, "basis rank below dimension");
  std::vector<std::vector<double>> gram(k, std::vector<double>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram[i][j] = inner33(b[i], b[j]);
  return signature_of_symmetric(gram, v.tol);
}

Subspace33 orthogonal_complement(const Subspace33& v) {
  const int k = v.dim();
  if (k == 0 || k > 6) raise(Errc::DependentBasis, "bad dimension");
  std::vector<Vec33> b = unit_rows(v.basis);
  if (echelon_rank(b, v.tol) < k) raise(Errc::DependentBasis, "basis rank below dimension");

  // inner33(v, w) = (J v) . w, so the complement is the Euclidean nullspace
  // of the rows J b_i.
  std::vector<std::vector<double>> rows(k, std::vector<double>(6));
  for (int i = 0; i < k; ++i) {
    Vec33 f = j_flip(b[i]);
    for (int j = 0; j < 6; ++j) rows[i][j] = f[j];
  }
  auto ns = nullspace(rows, v.tol);
  Subspace33 out;
  out.tol = v.tol;
  for (const auto& x : ns) {
    Vec33 w{x[0], x[1], x[2], x[3], x[4], x[5]};
    double n = enorm(w);
    out.basis.push_back(w * (1.0 / n));
  }
  if (out.dim() != 6 - k) raise(Errc::DependentBasis, "complement dimension mismatch");
  return out;
}

SubspaceRelations subspace_relations(const Subspace33& v, const Subspace33& w) {
  SubspaceRelations rel;
  const double tol = std::max(v.tol, w.tol);

  std::vector<Vec33> stacked = v.basis;
  stacked.insert(stacked.end(), w.basis.begin(), w.basis.end());
  const int rv = rank(v.basis, tol);
  const int rw = rank(w.basis, tol);
  const int rs = rank(stacked, tol);

  rel.contains = (rs == rv);
  rel.equal = (rs == rv && rs == rw);
  rel.complementary = (rv + rw == 6 && rs == 6);

  // x in V cap W  <=>  x = sum a_i v_i = sum b_j w_j; solve for (a, -b).
  std::vector<Vec33> vb = unit_rows(v.basis), wb = unit_rows(w.basis);
  const int kv = static_cast<int>(vb.size()), kw = static_cast<int>(wb.size());
  std::vector<std::vector<double>> m(6, std::vector<double>(kv + kw));
  for (int r = 0; r < 6; ++r) {
    for (int i = 0; i < kv; ++i) m[r][i] = vb[i][r];
    for (int j = 0; j < kw; ++j) m[r][kv + j] = -wb[j][r];
  }
  auto ns = nullspace(m, tol);
  rel.intersection.tol = tol;
  std::vector<Vec33> cand;
  for (const auto& c : ns) {
    Vec33 x{};
    for (int i = 0; i < kv; ++i) x = x + vb[i] * c[i];
    double n = enorm(x);
    if (n > tol) cand.push_back(x * (1.0 / n));
  }
  // prune to an independent set
  for (const Vec33& x : cand) {
    std::vector<Vec33> trial = rel.intersection.basis;
    trial.push_back(x);
    if (rank(trial, tol) == static_cast<int>(trial.size())) rel.intersection.basis.push_back(x);
  }
  return rel;
}

bool subspace_equal(const Subspace33& v, const Subspace33& w, double tol) {
  Subspace33 a = v, b = w;
  a.tol = b.tol = tol;
  return subspace_relations(a, b).equal;
}

double subspace_distance(const Subspace33& v, const Subspace33& w) {
  // Euclidean orthonormal basis by modified Gram-Schmidt, then projector
  // difference in Frobenius norm.
  auto orthonormal = [](const std::vector<Vec33>& basis) {
    std::vector<Vec33> q;
    for (Vec33 x : basis) {
      for (const Vec33& u : q) {
        double d = 0;
        for (int i = 0; i < 6; ++i) d += x[i] * u[i];
        x = x - u * d;
      }
      double n = enorm(x);
      if (n > 1e-13) q.push_back(x * (1.0 / n));
    }
    return q;
  };
  auto qa = orthonormal(v.basis), qb = orthonormal(w.basis);
  double s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      double pa = 0, pb = 0;
      for (const Vec33& u : qa) pa += u[i] * u[j];
      for (const Vec33& u : qb) pb += u[i] * u[j];
      s += (pa - pb) * (pa - pb);
    }
  return std::sqrt(s);
}

Subspace33 intersect_with_P(const Subspace33& v) {
  std::vector<Vec33> b = unit_rows(v.basis);
  const int k = static_cast<int>(b.size());
  std::vector<double> d(k);
  int piv = 0;
  for (int i = 0; i < k; ++i) {
    d[i] = b[i].s0 + b[i].s5;
    if (std::abs(d[i]) > std::abs(d[piv])) piv = i;
  }
  Subspace33 out;
  out.tol = v.tol;
  if (std::abs(d[piv]) <= v.tol) {
    out.basis = b;  // V lies inside P
    return out;
  }
  for (int i = 0; i < k; ++i) {
    if (i == piv) continue;
    Vec33 x = b[i] - b[piv] * (d[i] / d[piv]);
    double n = enorm(x);
    if (n > v.tol) out.basis.push_back(x * (1.0 / n));
  }
  return out;
}

}  // namespace nc
