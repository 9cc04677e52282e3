#include "braidbench/dble.hpp"

#include <cstdlib>

#include "braidbench/linalg.hpp"

namespace braidbench {

namespace {

GrMorphism T(const GrMorphism& a, const GrMorphism& b) {
  return tensor_mor(a, b);
}
GrMorphism T(const GrMorphism& a, const GrMorphism& b, const GrMorphism& c) {
  return tensor_mor(tensor_mor(a, b), c);
}
GrMorphism T(const GrMorphism& a, const GrMorphism& b, const GrMorphism& c,
             const GrMorphism& d) {
  return tensor_mor(tensor_mor(tensor_mor(a, b), c), d);
}

/// Composite of the listed factors, first-listed applied last.
GrMorphism chain(std::initializer_list<GrMorphism> fs) {
  GrMorphism acc;
  bool first = true;
  for (const auto& f : fs) {
    acc = first ? f : compose(acc, f);
    first = false;
  }
  return acc;
}

}  // namespace

std::string dsl_dir() {
  const char* env = std::getenv("BRAIDBENCH_DSL_DIR");
  return env ? env : "dsl";
}

Env double_env(std::shared_ptr<const HopfData> a, const CoendData& cd) {
  unsigned n = cd.n;
  Env env = make_env(n);
  GrObject A = a->carrier, B = dual_obj(A), C = cd.carrier;
  env.def_object("A", A);
  env.def_object("B", B);
  env.def_object("C", C);
  env.def_object("D", tensor_obj(tensor_obj(A, B), C));
  env.def_object("I", GrObject::unit(n));
  env.def_morphism("m_A", a->m);
  env.def_morphism("u_A", a->u);
  env.def_morphism("cp_A", a->cp);
  env.def_morphism("eps_A", a->eps);
  env.def_morphism("S_A", a->S);
  env.def_morphism("Sinv_A", invert(a->S));
  env.def_morphism("mC", cd.hopf->m);
  env.def_morphism("uC", cd.hopf->u);
  env.def_morphism("cpC", cd.hopf->cp);
  env.def_morphism("epsC", cd.hopf->eps);
  env.def_morphism("SC", cd.hopf->S);
  env.def_morphism("SinvC", invert(cd.hopf->S));
  env.def_morphism("pair_C", cd.omega);
  env.def_family("coact", [cd](const std::vector<GrObject>& args) {
    if (args.size() != 1)
      throw dsl_error("dsl: coact expects 1 object argument");
    return universal_coaction(cd, args[0]);
  });
  env.def_family("din", [cd](const std::vector<GrObject>& args) {
    if (args.size() != 1)
      throw dsl_error("dsl: din expects 1 object argument");
    return din_general(cd, args[0]);
  });
  return env;
}

DoubleData build_double(std::shared_ptr<const HopfData> a, const CoendData& cd,
                        const std::string& dir) {
  Env env = double_env(a, cd);
  env.load(load_file(dir + "/double.dsl"));
  auto dh = std::make_shared<HopfData>();
  dh->carrier = env.object("D");
  dh->m = env.morphism("mD");
  dh->u = env.morphism("uD");
  dh->cp = env.morphism("cpD");
  dh->eps = env.morphism("epsD");
  dh->S = env.morphism("SD");
  dh->Sinv = try_invert(dh->S);
  DoubleData out;
  out.hopf = dh;
  out.rmatrix = RMatrixData{dh, std::make_shared<CoendData>(cd),
                            env.morphism("rD")};
  out.embed_a = env.morphism("eA");
  out.embed_b = env.morphism("eB");
  out.embed_c = env.morphism("eC");
  return out;
}

namespace {

/// Environment for the R-matrix axiom transcriptions: the algebra under
/// test is bound as H (it is the coend itself in the coend case).
Env rmatrix_env(const RMatrixData& rd) {
  const CoendData& cd = *rd.coend;
  Env env = make_env(cd.n);
  env.def_object("H", rd.algebra->carrier);
  env.def_object("C", cd.carrier);
  env.def_object("I", GrObject::unit(cd.n));
  env.def_morphism("m_H", rd.algebra->m);
  env.def_morphism("u_H", rd.algebra->u);
  env.def_morphism("cp_H", rd.algebra->cp);
  env.def_morphism("eps_H", rd.algebra->eps);
  env.def_morphism("mC", cd.hopf->m);
  env.def_morphism("uC", cd.hopf->u);
  env.def_morphism("cpC", cd.hopf->cp);
  env.def_morphism("epsC", cd.hopf->eps);
  env.def_morphism("r", rd.r);
  env.def_family("coact", [cd](const std::vector<GrObject>& args) {
    if (args.size() != 1)
      throw dsl_error("dsl: coact expects 1 object argument");
    return universal_coaction(cd, args[0]);
  });
  return env;
}

}  // namespace

Report check_rmatrix(const RMatrixData& rd, const std::string& subject,
                     const std::string& dir) {
  Report rep(subject);
  GrObject A = rd.algebra->carrier, C = rd.coend->carrier;
  if (!(rd.r.src() == tensor_obj(C, C)) ||
      !(rd.r.dst() == tensor_obj(A, A)))
    throw grcat_error("check_rmatrix: r must map C (x) C to A (x) A");
  Env env = rmatrix_env(rd);
  env.load(load_file(dir + "/rmatrix.dsl"));
  rep.add_equal("coproduct_compat_left", env.morphism("ax1_lhs"),
                env.morphism("ax1_rhs"));
  rep.add_equal("coproduct_compat_right", env.morphism("ax2_lhs"),
                env.morphism("ax2_rhs"));
  rep.add_equal("product_compat", env.morphism("ax3_lhs"),
                env.morphism("ax3_rhs"));
  rep.add_equal("counit_left", env.morphism("unit_left"),
                env.morphism("unit_mid"));
  rep.add_equal("counit_right", env.morphism("unit_right"),
                env.morphism("unit_mid"));
  return rep;
}

GrMorphism induced_braiding(const RMatrixData& rd, const ModuleData& m,
                            const ModuleData& n, Side side) {
  if (m.side != side || n.side != side)
    throw grcat_error("induced_braiding: module side mismatch");
  const CoendData& cd = *rd.coend;
  GrObject M = m.carrier, N = n.carrier, C = cd.carrier;
  GrObject A = rd.algebra->carrier;
  GrMorphism dm = universal_coaction(cd, M);
  GrMorphism dn = universal_coaction(cd, N);
  GrMorphism idM = GrMorphism::identity(M), idN = GrMorphism::identity(N);
  GrMorphism idC = GrMorphism::identity(C), idA = GrMorphism::identity(A);
  if (side == Side::Right) {
    // M N -> M Cm N Cn -> M N Cm Cn -> N M Cm Cn -> N M A1 A2
    //   -> N A1 M A2 -> N M
    return chain({T(n.action, m.action),
                  T(idN, braiding(M, A), idA),
                  T(braiding(M, N), rd.r),
                  T(idM, braiding(C, N), idC),
                  T(dm, dn)});
  }
  // Left-module mirror: the degree tokens travel to the left of both
  // carriers, the R-matrix outputs act from the left after the carriers are
  // exchanged.
  // M N -> M Cm N Cn -> M Cm Cn N -> Cm M Cn N -> Cm Cn M N
  //   -> A1 A2 M N -> A1 A2 N M -> A1 N A2 M -> N M
  return chain({T(n.action, m.action),
                T(idA, braiding_inv(N, A), idM),
                T(idA, idA, braiding_inv(N, M)),
                T(rd.r, idM, idN),
                T(idC, braiding_inv(C, M), idN),
                T(braiding_inv(C, M), idC, idN),
                T(idM, idC, braiding_inv(C, N)),
                T(dm, dn)});
}

Report check_majid_rmatrix(const HopfData& a, const GrMorphism& r,
                           const std::string& subject) {
  Report rep(subject);
  GrObject A = a.carrier;
  unsigned n = A.n;
  GrObject I = GrObject::unit(n);
  if (!(r.src() == I) || !(r.dst() == tensor_obj(A, A)))
    throw grcat_error("check_majid_rmatrix: r must map 1 to A (x) A");
  GrMorphism idA = GrMorphism::identity(A);
  GrMorphism swap_mid = T(idA, braiding(A, A), idA);
  GrMorphism rr = T(r, r);
  rep.add_equal("coproduct_compat_left", compose(T(idA, a.cp), r),
                compose(T(a.m, idA, idA), swap_mid, rr));
  rep.add_equal("coproduct_compat_right", compose(T(a.cp, idA), r),
                compose(T(idA, idA, a.m), swap_mid, rr));
  GrMorphism lhs3 = compose(T(a.m, a.m), swap_mid, T(r, a.cp));
  GrMorphism rhs3 = compose(T(a.m, a.m), swap_mid, T(idA, idA, r),
                            compose(braiding(A, A), a.cp));
  rep.add_equal("product_compat", lhs3, rhs3);
  rep.add_equal("counit_left", compose(T(a.eps, idA), r), a.u);
  rep.add_equal("counit_right", compose(T(idA, a.eps), r), a.u);
  // convolution inverse in the algebra A (x) A, solved exactly
  GrMorphism conv_unit = T(a.u, a.u);
  GrMorphism m2 = compose(T(a.m, a.m), swap_mid);
  HomSpace hs(I, tensor_obj(A, A));
  MorphismSolve sol = solve_morphism_equations(
      {[&](const GrMorphism& t) { return compose(m2, T(r, t)); },
       [&](const GrMorphism& t) { return compose(m2, T(t, r)); }},
      hs, {conv_unit, conv_unit});
  rep.add_bool("convolution_invertible", sol.consistent,
               "rank " + std::to_string(sol.rank) + ", kernel dim " +
                   std::to_string(sol.kernel_dim));
  return rep;
}

bool oa_membership(const ModuleData& m) {
  GrObject A = m.algebra->carrier, M = m.carrier;
  GrMorphism dbl = m.side == Side::Right
                       ? compose(braiding(A, M), braiding(M, A))
                       : compose(braiding(M, A), braiding(A, M));
  return compose(m.action, dbl) == m.action;
}

YDModule yd_trivial(const CoendData& cd, std::shared_ptr<const HopfData> a,
                    HalfBraiding carrier) {
  (void)cd;
  GrObject M = carrier.mod.carrier;
  GrMorphism idM = GrMorphism::identity(M);
  YDModule y;
  y.carrier = std::move(carrier);
  y.algebra = a;
  y.action = T(a->eps, idM);
  y.coaction = T(a->u, idM);
  return y;
}

Report yd_check(const CoendData& cd, const YDModule& y,
                const std::string& subject) {
  (void)cd;
  Report rep(subject);
  const HopfData& a = *y.algebra;
  GrObject A = a.carrier, M = y.carrier.mod.carrier;
  GrMorphism idA = GrMorphism::identity(A), idM = GrMorphism::identity(M);
  const GrMorphism& act = y.action;
  const GrMorphism& co = y.coaction;
  rep.add_equal("module_unit", compose(act, T(a.u, idM)), idM);
  rep.add_equal("module_assoc", compose(act, T(idA, act)),
                compose(act, T(a.m, idM)));
  rep.add_equal("comodule_counit", compose(T(a.eps, idM), co), idM);
  rep.add_equal("comodule_coassoc", compose(T(a.cp, idM), co),
                compose(T(idA, co), co));
  // compatibility square, written with the center braidings: the algebra
  // half-braids by the ambient braiding, the carrier by its own
  // half-braiding component.
  GrMorphism sigma_a = y.carrier.sigma(A);
  GrMorphism lhs = compose(T(a.m, act), T(idA, braiding(A, A), idM),
                           T(a.cp, co));
  GrMorphism rhs = chain({T(a.m, idM), T(idA, sigma_a),
                          T(compose(co, act), idA),
                          T(idA, braiding(A, M)), T(a.cp, idM)});
  rep.add_equal("yd_square", lhs, rhs);
  return rep;
}

YDModule yd_tensor(const CoendData& cd, const YDModule& y,
                   const YDModule& z) {
  const HopfData& a = *y.algebra;
  GrObject A = a.carrier;
  GrObject M = y.carrier.mod.carrier, N = z.carrier.mod.carrier;
  GrMorphism idA = GrMorphism::identity(A);
  GrMorphism idM = GrMorphism::identity(M), idN = GrMorphism::identity(N);
  YDModule out;
  out.algebra = y.algebra;
  out.carrier = center_iso(cd, module_tensor(y.carrier.mod, z.carrier.mod));
  out.action = compose(T(y.action, z.action), T(idA, braiding(A, M), idN),
                       T(a.cp, idM, idN));
  out.coaction =
      compose(T(a.m, idM, idN), T(idA, y.carrier.sigma(A), idN),
              T(y.coaction, z.coaction));
  return out;
}

GrMorphism yd_braiding(const CoendData& cd, const YDModule& y,
                       const YDModule& z) {
  (void)cd;
  GrObject N = z.carrier.mod.carrier;
  return compose(T(z.action, GrMorphism::identity(y.carrier.mod.carrier)),
                 T(GrMorphism::identity(y.algebra->carrier),
                   y.carrier.sigma(N)),
                 T(y.coaction, GrMorphism::identity(N)));
}

GrMorphism yd_gamma(const CoendData& cd, const YDModule& y,
                    const ModuleData& nt) {
  (void)cd;
  GrObject N = nt.carrier;
  return compose(T(nt.action, GrMorphism::identity(y.carrier.mod.carrier)),
                 T(GrMorphism::identity(y.algebra->carrier),
                   y.carrier.sigma(N)),
                 T(y.coaction, GrMorphism::identity(N)));
}

Report yd_solve_report(const CoendData& cd, std::shared_ptr<const HopfData> a,
                       const HalfBraiding& carrier, const std::string& subject,
                       std::vector<YDModule>* out) {
  Report rep(subject);
  GrObject A = a->carrier, M = carrier.mod.carrier;
  GrMorphism idM = GrMorphism::identity(M);
  HomSpace act_space(tensor_obj(A, M), M);
  HomSpace co_space(M, tensor_obj(A, M));
  MorphismSolve act_sol = solve_morphism_equation(
      [&](const GrMorphism& t) { return compose(t, T(a->u, idM)); },
      act_space, idM);
  MorphismSolve co_sol = solve_morphism_equation(
      [&](const GrMorphism& t) { return compose(T(a->eps, idM), t); },
      co_space, idM);
  rep.add_bool("action_unit_solvable", act_sol.consistent,
               "rank " + std::to_string(act_sol.rank) + ", kernel dim " +
                   std::to_string(act_sol.kernel_dim));
  rep.add_bool("coaction_counit_solvable", co_sol.consistent,
               "rank " + std::to_string(co_sol.rank) + ", kernel dim " +
                   std::to_string(co_sol.kernel_dim));
  if (!act_sol.consistent || !co_sol.consistent) {
    rep.add_bool("solution_count", true, "0 (unit constraints unsatisfiable)");
    return rep;
  }
  if (act_sol.kernel_dim > 0 || co_sol.kernel_dim > 0)
    throw grcat_error("yd_solve: candidate space is positive-dimensional");
  YDModule cand;
  cand.carrier = carrier;
  cand.algebra = a;
  cand.action = *act_sol.solution;
  cand.coaction = *co_sol.solution;
  Report axioms = yd_check(cd, cand, subject + ".candidate");
  bool ok = axioms.all_pass();
  for (auto c : axioms.checks()) {
    c.key = "candidate_" + c.key;
    if (!c.pass) c.note = "violated by the candidate; entry retained";
    c.pass = true;  // recorded as evidence; emptiness is the verdict below
    rep.add(std::move(c));
  }
  rep.add_bool("solution_count", true,
               ok ? "1 (the unique unit-compatible pair satisfies all axioms)"
                  : "0 (the unique unit-compatible pair violates an axiom; "
                    "see the retained witness)");
  if (ok && out) out->push_back(cand);
  return rep;
}

std::vector<YDModule> yd_solve(const CoendData& cd,
                               std::shared_ptr<const HopfData> a,
                               const HalfBraiding& carrier) {
  std::vector<YDModule> out;
  yd_solve_report(cd, a, carrier, "yd_solve", &out);
  return out;
}

}  // namespace braidbench
