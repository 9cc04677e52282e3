#pragma once

#include <memory>

#include "braidbench/linalg.hpp"
#include "braidbench/report.hpp"

namespace braidbench {

/// A (candidate) Hopf algebra in B_n: carrier plus structural morphisms.
/// Nothing is assumed verified; run check_hopf to certify.
struct HopfData {
  GrObject carrier;
  GrMorphism m;    // A (x) A -> A
  GrMorphism u;    // 1 -> A
  GrMorphism cp;   // A -> A (x) A
  GrMorphism eps;  // A -> 1
  GrMorphism S;    // A -> A
  std::optional<GrMorphism> Sinv;

  unsigned order() const { return carrier.n; }
};

/// The truncated polynomial Hopf algebra on k[X]/(X^n) in B_n: basis x^m of
/// degree m, truncated product, q-binomial coproduct, closed-form antipode.
HopfData build_An(unsigned n);

/// One-dimensional Hopf algebra on the unit object (m, u, cp, eps, S all
/// scalar 1); the double of this recovers the coend.
HopfData unit_hopf(unsigned n);

Report check_hopf(const HopfData& h, const std::string& subject);

struct FusionOps {
  GrMorphism Hl;  // (id (x) m)(cp (x) id)
  GrMorphism Hr;  // (m (x) id)(id (x) br)(cp (x) id)
};
FusionOps fusion_ops(const HopfData& h);

/// Antipode recovery S = (eps (x) id) Hl^{-1} (id (x) u); throws grcat_error
/// with a "not a Hopf algebra" diagnostic when Hl is singular.
GrMorphism antipode_from_fusion(const HopfData& h);

/// Affine solution set of the two antipode equations; kernel_dim 0 with a
/// solution certifies uniqueness.
MorphismSolve solve_antipode(const HopfData& h);

enum class Side { Left, Right };

struct ModuleData {
  std::shared_ptr<const HopfData> algebra;
  GrObject carrier;
  GrMorphism action;  // Left: A (x) M -> M; Right: M (x) A -> M
  Side side = Side::Left;
};

Report check_module(const ModuleData& mod, const std::string& subject);

ModuleData trivial_module(std::shared_ptr<const HopfData> a, Side side);
ModuleData regular_module(std::shared_ptr<const HopfData> a, Side side);
/// Free module on X: carrier X (x) A (right side) or A (x) X (left side),
/// acting by multiplication on the A factor.
ModuleData free_module(std::shared_ptr<const HopfData> a, const GrObject& x,
                       Side side);

ModuleData module_tensor(const ModuleData& m, const ModuleData& n);

enum class DualKind { Left, Right };
ModuleData module_dual(const ModuleData& m, DualKind which);

/// F_A(M,r) = (M, r tau_{M,A} (id_M (x) S)): left modules to right modules.
ModuleData fa_functor(const ModuleData& m);

/// An A-linear check: f (lhs-action) = (rhs-action)(... (x) f).
bool is_module_morphism(const ModuleData& m, const ModuleData& n,
                        const GrMorphism& f);

}  // namespace braidbench
