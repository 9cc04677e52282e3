#pragma once

#include "braidbench/coend.hpp"
#include "braidbench/dsl.hpp"

namespace braidbench {

/// An R-matrix for a Hopf algebra A in B_n: a morphism r : C (x) C -> A (x) A
/// parameterized by two coend inputs. The axioms are checked by
/// check_rmatrix; when the subject is the coend itself, A = C.
struct RMatrixData {
  std::shared_ptr<const HopfData> algebra;
  std::shared_ptr<const CoendData> coend;
  GrMorphism r;
};

/// The double of A: a quasitriangular Hopf algebra with carrier
/// A (x) dual(A) (x) C, together with the three layer embeddings.
struct DoubleData {
  std::shared_ptr<const HopfData> hopf;
  RMatrixData rmatrix;
  GrMorphism embed_a, embed_b, embed_c;
};

/// Directory holding the diagram transcription files; taken from the
/// BRAIDBENCH_DSL_DIR environment variable, falling back to "dsl".
std::string dsl_dir();

/// The evaluation environment binding the generators of A, its left dual B,
/// and the coend C (objects A, B, C, D, I and the structural morphisms of
/// each layer plus pair_C and the coaction family).
Env double_env(std::shared_ptr<const HopfData> a, const CoendData& cd);

/// Builds the double from the diagram transcriptions in <dir>/double.dsl.
/// The structural morphisms are taken verbatim from the evaluated bindings;
/// correctness is established by running check_hopf and check_rmatrix on the
/// result, not assumed.
DoubleData build_double(std::shared_ptr<const HopfData> a, const CoendData& cd,
                        const std::string& dir = dsl_dir());

/// The four axiom families for an R-matrix, transcribed in
/// <dir>/rmatrix.dsl and evaluated exactly; one report entry per diagram.
Report check_rmatrix(const RMatrixData& rd, const std::string& subject,
                     const std::string& dir = dsl_dir());

/// The braiding on modules over rd.algebra induced by the R-matrix: the
/// canonical composite for right modules, and its left-module mirror for
/// left modules. Output shape M (x) N -> N (x) M.
GrMorphism induced_braiding(const RMatrixData& rd, const ModuleData& m,
                            const ModuleData& n, Side side);

/// The convolution-style R-matrix axioms for r : 1 -> A (x) A (the
/// coend-free notion), with the rigid-case invertibility criterion; each
/// diagram is reported separately.
Report check_majid_rmatrix(const HopfData& a, const GrMorphism& r,
                           const std::string& subject);

/// Membership in the subcategory of modules whose action coequalizes the
/// double braiding of the carrier with A.
bool oa_membership(const ModuleData& m);

/// A Yetter-Drinfeld module over A viewed as a Hopf algebra in the center:
/// the carrier is an object of the center presented through its coend
/// module structure (half-braidings are recovered by center_iso), together
/// with a left action and a left coaction of A.
struct YDModule {
  HalfBraiding carrier;
  std::shared_ptr<const HopfData> algebra;
  GrMorphism action;    // A (x) M -> M
  GrMorphism coaction;  // M -> A (x) M
};

/// The trivial Yetter-Drinfeld structure (eps-action, u-coaction) on a
/// center object.
YDModule yd_trivial(const CoendData& cd, std::shared_ptr<const HopfData> a,
                    HalfBraiding carrier);

/// Module axioms, comodule axioms, and the compatibility square, evaluated
/// with the center braidings of the carrier and of A.
Report yd_check(const CoendData& cd, const YDModule& y,
                const std::string& subject);

YDModule yd_tensor(const CoendData& cd, const YDModule& y,
                   const YDModule& z);

/// The braiding of the Yetter-Drinfeld category at (y, z).
GrMorphism yd_braiding(const CoendData& cd, const YDModule& y,
                       const YDModule& z);

/// The half-braiding component over the module category attached to a
/// Yetter-Drinfeld module, evaluated at the module (N, t).
GrMorphism yd_gamma(const CoendData& cd, const YDModule& y,
                    const ModuleData& nt);

/// All pairs (action, coaction) making the given center object a
/// Yetter-Drinfeld module over A. The module and comodule unit constraints
/// are affine-linear on the degree-forced hom spaces; the solver certifies
/// the candidate set is zero-dimensional and the remaining axioms are
/// evaluated on each candidate. The rank certificate of the two unit
/// equations is returned through the report of yd_solve_report.
std::vector<YDModule> yd_solve(const CoendData& cd,
                               std::shared_ptr<const HopfData> a,
                               const HalfBraiding& carrier);

/// Same as yd_solve but also reports the solver ranks and the per-candidate
/// axiom outcomes, for certification of emptiness.
Report yd_solve_report(const CoendData& cd, std::shared_ptr<const HopfData> a,
                       const HalfBraiding& carrier, const std::string& subject,
                       std::vector<YDModule>* out = nullptr);

}  // namespace braidbench
