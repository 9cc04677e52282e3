#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "braidbench/cyc.hpp"

namespace braidbench {

struct grcat_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite-dimensional Z/n-graded vector space over Q(zeta_n). The basis is
/// explicit: basis vector i has degree degs[i]. Atomic objects list their
/// basis degree-major; a tensor product concatenates pairs in lexicographic
/// order (left index major), which makes the monoidal structure strict: the
/// basis of (X (x) Y) (x) Z and of X (x) (Y (x) Z) is the same flat sequence,
/// and the unit object is a genuine two-sided unit.
struct GrObject {
  unsigned n = 1;
  std::vector<unsigned> degs;

  GrObject() = default;
  GrObject(unsigned n_, std::vector<unsigned> degs_);

  static GrObject unit(unsigned n);
  /// The simple object k_g: one-dimensional, concentrated in degree g.
  static GrObject simple(unsigned n, unsigned g);
  /// Object with dims[g] basis vectors of degree g, listed degree-major.
  static GrObject from_dims(unsigned n, const std::vector<unsigned>& dims);

  unsigned total() const { return static_cast<unsigned>(degs.size()); }
  unsigned degree_of(unsigned idx) const { return degs.at(idx); }
  std::vector<unsigned> dims() const;

  friend bool operator==(const GrObject& a, const GrObject& b) {
    return a.n == b.n && a.degs == b.degs;
  }
  friend bool operator!=(const GrObject& a, const GrObject& b) {
    return !(a == b);
  }
};

GrObject tensor_obj(const GrObject& x, const GrObject& y);

/// Dual object: basis vector i of dual(x) is the functional dual to basis
/// vector i of x, of degree -degs[i]. Index order is shared with x, so
/// dual(dual(x)) == x on the nose.
GrObject dual_obj(const GrObject& x);

/// A graded linear map, stored sparsely: one row per target basis vector,
/// each row a column-sorted list of nonzero entries. All entries of a valid
/// morphism connect basis vectors of equal degree; `check_graded` verifies.
class GrMorphism {
 public:
  using Row = std::vector<std::pair<unsigned, Cyc>>;

  GrMorphism() = default;
  GrMorphism(GrObject src, GrObject dst);

  static GrMorphism identity(const GrObject& x);
  static GrMorphism zero(const GrObject& src, const GrObject& dst);

  const GrObject& src() const { return src_; }
  const GrObject& dst() const { return dst_; }
  const std::vector<Row>& rows() const { return rows_; }

  void set(unsigned row, unsigned col, const Cyc& value);
  void add_to(unsigned row, unsigned col, const Cyc& value);
  Cyc get(unsigned row, unsigned col) const;
  unsigned nnz() const;
  bool is_zero() const;
  bool check_graded() const;

  GrMorphism operator+(const GrMorphism& o) const;
  GrMorphism operator-(const GrMorphism& o) const;
  GrMorphism scaled(const Cyc& c) const;

  friend bool operator==(const GrMorphism& a, const GrMorphism& b);
  friend bool operator!=(const GrMorphism& a, const GrMorphism& b) {
    return !(a == b);
  }

  /// First entry position at which the two maps differ (row-major order).
  static std::optional<std::pair<unsigned, unsigned>> first_diff(
      const GrMorphism& a, const GrMorphism& b);

 private:
  GrObject src_, dst_;
  std::vector<Row> rows_;
  friend GrMorphism compose_serial(const GrMorphism&, const GrMorphism&);
  friend GrMorphism compose_parallel(const GrMorphism&, const GrMorphism&);
  friend GrMorphism tensor_mor(const GrMorphism&, const GrMorphism&);
};

/// g after f (matrix product). The default entry point dispatches to the
/// OpenMP kernel for large targets; compose_serial is the reference kernel.
GrMorphism compose(const GrMorphism& g, const GrMorphism& f);
GrMorphism compose_serial(const GrMorphism& g, const GrMorphism& f);
GrMorphism compose_parallel(const GrMorphism& g, const GrMorphism& f);
GrMorphism compose(const GrMorphism& a, const GrMorphism& b,
                   const GrMorphism& c);
GrMorphism compose(const GrMorphism& a, const GrMorphism& b,
                   const GrMorphism& c, const GrMorphism& d);

GrMorphism tensor_mor(const GrMorphism& f, const GrMorphism& g);

/// Braiding tau_{X,Y}: X (x) Y -> Y (x) X, x_u (x) y_v -> q^{|u||v|} y_v (x) x_u
/// with q = zeta_n, and its inverse.
GrMorphism braiding(const GrObject& x, const GrObject& y);
GrMorphism braiding_inv(const GrObject& x, const GrObject& y);

/// Duality data. Left evaluation pairs e^i (x) e_i, left coevaluation inserts
/// sum e_i (x) e^i; the right-hand versions use the same dual object with the
/// mirrored pairings. All four satisfy the snake identities strictly.
GrMorphism ev(const GrObject& x);      // dual(x) (x) x -> 1
GrMorphism coev(const GrObject& x);    // 1 -> x (x) dual(x)
GrMorphism rev(const GrObject& x);     // x (x) dual(x) -> 1
GrMorphism rcoev(const GrObject& x);   // 1 -> dual(x) (x) x

/// Transpose under the duality: dual(f): dual(Y) -> dual(X) for f: X -> Y.
GrMorphism dual_mor(const GrMorphism& f);

/// Pure basis permutation: basis vector perm[i] of dst for basis vector i of
/// src (degrees must agree).
GrMorphism perm_morphism(const GrObject& src, const GrObject& dst,
                         const std::vector<unsigned>& perm);

/// Deterministic pseudo-random degree-preserving morphism with small integer
/// entries; used as a probe in naturality tests.
GrMorphism random_homogeneous(const GrObject& src, const GrObject& dst,
                              uint64_t seed);

}  // namespace braidbench
