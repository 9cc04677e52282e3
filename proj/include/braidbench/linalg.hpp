#pragma once

#include <functional>

#include "braidbench/grcat.hpp"

namespace braidbench {

/// Result of an exact linear solve A x = b over Q(zeta_n).
struct LinSolve {
  bool consistent = false;
  unsigned rank = 0;
  unsigned kernel_dim = 0;
  std::vector<Cyc> x;  // one particular solution when consistent
};

unsigned rank_dense(std::vector<std::vector<Cyc>> a);
LinSolve solve_dense(std::vector<std::vector<Cyc>> a, std::vector<Cyc> b,
                     unsigned order);

unsigned rank_of(const GrMorphism& f);

/// Exact two-sided inverse; degree blocks are inverted independently.
/// Returns nothing if the map is not invertible.
std::optional<GrMorphism> try_invert(const GrMorphism& f);
GrMorphism invert(const GrMorphism& f);

/// The space of degree-preserving linear maps src -> dst, coordinatized by
/// its matrix positions in a fixed order. Used to pose morphism equations as
/// plain linear systems.
struct HomSpace {
  GrObject src, dst;
  std::vector<std::pair<unsigned, unsigned>> positions;  // (row, col)

  HomSpace(GrObject src_, GrObject dst_);
  unsigned dim() const { return static_cast<unsigned>(positions.size()); }
  GrMorphism from_coords(const std::vector<Cyc>& v) const;
  std::vector<Cyc> to_coords(const GrMorphism& f) const;
};

/// Solution of op(T) = rhs for a linear operator on a hom space, reporting
/// the affine solution set (consistency, a particular solution, kernel
/// dimension) so callers can certify uniqueness or emptiness.
struct MorphismSolve {
  bool consistent = false;
  unsigned rank = 0;
  unsigned kernel_dim = 0;
  std::optional<GrMorphism> solution;
};

MorphismSolve solve_morphism_equation(
    const std::function<GrMorphism(const GrMorphism&)>& op,
    const HomSpace& unknowns, const GrMorphism& rhs);

/// Joint solve of several linear conditions op_i(T) = rhs_i.
MorphismSolve solve_morphism_equations(
    const std::vector<std::function<GrMorphism(const GrMorphism&)>>& ops,
    const HomSpace& unknowns, const std::vector<GrMorphism>& rhss);

}  // namespace braidbench
