#pragma once

#include "braidbench/hopf.hpp"

namespace braidbench {

/// The coend C of B_n, realized as the direct sum of dual(k_g) (x) k_g over
/// the n simples. The carrier is n-dimensional and concentrated in degree 0;
/// basis vector g is written c_g. Every structural morphism is solved from
/// its characterizing equality at the simples, with uniqueness certified by
/// the solver, rather than hard-coded from a closed form.
struct CoendData {
  unsigned n = 1;
  GrObject carrier;
  /// din[g] : dual(k_g) (x) k_g -> C, the universal dinatural component at
  /// the simple k_g, normalized to the canonical basis inclusion.
  std::vector<GrMorphism> din;
  std::shared_ptr<const HopfData> hopf;
  GrMorphism omega;  // canonical pairing C (x) C -> 1
  GrMorphism rmat;   // C (x) C -> C (x) C, extracted from the center braiding
};

CoendData build_coend(unsigned n);

/// The dinatural component i_Y : dual(Y) (x) Y -> C for arbitrary Y,
/// assembled from the homogeneous decomposition of Y.
GrMorphism din_general(const CoendData& cd, const GrObject& y);

/// The universal coaction delta_Y = (id_Y (x) i_Y)(coev_Y (x) id_Y) : Y -> Y (x) C.
GrMorphism universal_coaction(const CoendData& cd, const GrObject& y);

/// Structural sanity of the coend itself: joint bijectivity of the din
/// components, dinaturality, the coaction identities, the expression of
/// delta_C through the Hopf structure, and cocommutativity under the
/// canonical half braiding.
Report check_coend(const CoendData& cd, const std::string& subject);

/// The four Hopf-pairing axioms for omega, the antipode-balance identity,
/// self-duality, and an informational record of whether omega is the trivial
/// pairing eps (x) eps (which detects symmetry of the ambient category).
Report check_pairing(const CoendData& cd, const std::string& subject);

bool omega_is_trivial(const CoendData& cd);

/// A right C-module seen as an object of the center: the half-braiding
/// component at X is sigma_X = (id_X (x) r)(br_{M,X} (x) id_C)(id_M (x) delta_X).
struct HalfBraiding {
  GrObject c_carrier;
  ModuleData mod;  // right module over the coend's Hopf algebra

  GrMorphism sigma(const GrObject& x) const;
};

HalfBraiding center_iso(const CoendData& cd, ModuleData mod);

/// Half-braiding axioms for the components produced by center_iso:
/// invertibility, unit component, multiplicativity over tensor products,
/// and naturality against random homogeneous maps.
Report check_half_braiding(const HalfBraiding& hb, const std::string& subject);

/// The canonical half braiding carried by C itself (the regular right
/// C-module pushed through center_iso), at the object x.
GrMorphism canonical_half_braiding(const CoendData& cd, const GrObject& x);

/// The one-dimensional right C-module with carrier k_d on which c_g acts by
/// the character g -> zeta_n^{c g}. These n^2 modules are the simple objects
/// of the center.
ModuleData simple_center_module(const CoendData& cd, unsigned d, unsigned c);

}  // namespace braidbench
