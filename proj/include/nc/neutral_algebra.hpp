// Fixed-dimension linear algebra over the neutral inner-product spaces
// R^{2,2} and R^{3,3}: inner products, Gram matrices, signatures,
// orthogonal complements and subspace predicates.
#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nc {

constexpr double kDefaultTol = 1e-9;

enum class Errc {
  DependentBasis,
  EmptyHypersphere,
  ZeroVector,
  InvalidGenerator,
  Singular,
  NearInfinity,
  DependentSpheres,
  DegenerateConic,
  NullSeparatedCenters,
  DegenerateComplement,
  WrongCase,
  NotAConic,
  HorizontalLine,
  DegenerateConfiguration,
  NotSkew,
  RankDeficient,
  InvalidSolution,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& msg);

// A point (or direction) of R^{2,2} with quadratic form x1^2+x2^2-x3^2-x4^2.
struct Point22 {
  double x1 = 0, x2 = 0, x3 = 0, x4 = 0;

  double& operator[](int i) { return (&x1)[i]; }
  double operator[](int i) const { return (&x1)[i]; }

  Point22 operator+(const Point22& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x4 + o.x4}; }
  Point22 operator-(const Point22& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x4 - o.x4}; }
  Point22 operator*(double c) const { return {c * x1, c * x2, c * x3, c * x4}; }
  Point22 operator-() const { return {-x1, -x2, -x3, -x4}; }
};

inline Point22 operator*(double c, const Point22& p) { return p * c; }

double inner22(const Point22& a, const Point22& b);
double norm22(const Point22& a);
// Euclidean norm, used for scale-relative tolerances only.
double enorm(const Point22& a);

// A vector of R^{3,3}, written s = (s0, mid, s5) with mid in R^{2,2}.
struct Vec33 {
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;

  double& operator[](int i) { return (&s0)[i]; }
  double operator[](int i) const { return (&s0)[i]; }

  Point22 mid() const { return {s1, s2, s3, s4}; }

  static Vec33 from_parts(double s0, const Point22& m, double s5) {
    return {s0, m.x1, m.x2, m.x3, m.x4, s5};
  }

  Vec33 operator+(const Vec33& o) const {
    return {s0 + o.s0, s1 + o.s1, s2 + o.s2, s3 + o.s3, s4 + o.s4, s5 + o.s5};
  }
  Vec33 operator-(const Vec33& o) const {
    return {s0 - o.s0, s1 - o.s1, s2 - o.s2, s3 - o.s3, s4 - o.s4, s5 - o.s5};
  }
  Vec33 operator*(double c) const { return {c * s0, c * s1, c * s2, c * s3, c * s4, c * s5}; }
  Vec33 operator-() const { return {-s0, -s1, -s2, -s3, -s4, -s5}; }
};

inline Vec33 operator*(double c, const Vec33& v) { return v * c; }

double inner33(const Vec33& a, const Vec33& b);
double enorm(const Vec33& a);

struct Mat44 {
  std::array<std::array<double, 4>, 4> a{};

  static Mat44 identity();
  Point22 apply(const Point22& p) const;
  Mat44 operator*(const Mat44& o) const;
  // max |M^T g M - g| entry, g = diag(1,1,-1,-1)
  double isometry_residual() const;
};

struct Mat66 {
  std::array<std::array<double, 6>, 6> a{};

  static Mat66 identity();
  Vec33 apply(const Vec33& v) const;
  Mat66 operator*(const Mat66& o) const;
  Mat66 transposed() const;
  double det() const;
};

enum class MetricClass { Definite, Indefinite, Degenerate };

const char* metric_class_name(MetricClass c);

struct Signature {
  int pos = 0, neg = 0, zero = 0;
  MetricClass cls = MetricClass::Degenerate;
};

// Linear subspace of R^{3,3} held as an ordered basis.
struct Subspace33 {
  std::vector<Vec33> basis;
  double tol = kDefaultTol;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Eigen-decomposition of a small dense symmetric matrix by cyclic Jacobi
// rotations. Eigenvalues ascending, vectors[j] is the eigenvector of values[j].
struct JacobiEigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  double offdiag_norm = 0;  // off-diagonal Frobenius norm after convergence
};

JacobiEigen jacobi_eigen(std::vector<std::vector<double>> m);

// Rank of a list of 6-vectors at a relative tolerance (rows are
// unit-normalized before elimination).
int rank(const std::vector<Vec33>& vectors, double tol = kDefaultTol);

// Eigenvalue sign counts of the Gram matrix G_ij = inner33(b_i, b_j).
// Throws DependentBasis when the basis has rank < dim.
Signature signature(const Subspace33& v);

// Sign counts of a small symmetric matrix directly (helper for 2x2 plane
// metrics and quadric inspection).
Signature signature_of_symmetric(const std::vector<std::vector<double>>& m,
                                 double tol = kDefaultTol);

// Orthogonal complement with respect to inner33. Gaussian elimination with
// partial pivoting; deterministic basis for a given basis order.
Subspace33 orthogonal_complement(const Subspace33& v);

struct SubspaceRelations {
  bool contains = false;       // span(V) contains span(W)
  bool equal = false;
  bool complementary = false;  // V + W = R^{3,3} and V cap W = 0
  Subspace33 intersection;
};

SubspaceRelations subspace_relations(const Subspace33& v, const Subspace33& w);

bool subspace_equal(const Subspace33& v, const Subspace33& w, double tol = kDefaultTol);

// Frobenius distance between the Euclidean orthogonal projectors onto the two
// spans; 0 iff the subspaces agree.
double subspace_distance(const Subspace33& v, const Subspace33& w);

// Intersection with the hyperplane P = {s0 + s5 = 0}. Returns a basis of
// V cap P; the decision "V inside P" is taken componentwise on the
// unit-normalized basis, which keeps it scale-free.
Subspace33 intersect_with_P(const Subspace33& v);

}  // namespace nc
