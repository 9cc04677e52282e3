#include "braidbench/hopf.hpp"

namespace braidbench {

namespace {

GrMorphism tensor3(const GrMorphism& a, const GrMorphism& b,
                   const GrMorphism& c) {
  return tensor_mor(tensor_mor(a, b), c);
}

}  // namespace

HopfData build_An(unsigned n) {
  if (n < 2) throw grcat_error("build_An: n must be at least 2");
  std::vector<unsigned> degs(n);
  for (unsigned m = 0; m < n; ++m) degs[m] = m;
  GrObject a(n, degs);
  GrObject aa = tensor_obj(a, a);
  HopfData h;
  h.carrier = a;
  h.m = GrMorphism(aa, a);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j + i < n; ++j)
      h.m.set(i + j, i * n + j, Cyc::one(n));
  h.u = GrMorphism(GrObject::unit(n), a);
  h.u.set(0, 0, Cyc::one(n));
  h.cp = GrMorphism(a, aa);
  Cyc q = Cyc::root(n);
  for (unsigned m = 0; m < n; ++m)
    for (unsigned k = 0; k <= m; ++k)
      h.cp.set(k * n + (m - k), m, qbinom(m, k, q));
  h.eps = GrMorphism(a, GrObject::unit(n));
  h.eps.set(0, 0, Cyc::one(n));
  h.S = GrMorphism(a, a);
  for (unsigned m = 0; m < n; ++m) {
    Cyc val = Cyc::root_pow(n, static_cast<long>(m) * (m - 1) / 2);
    if (m % 2 == 1) val = -val;
    h.S.set(m, m, val);
  }
  h.Sinv = invert(h.S);
  return h;
}

HopfData unit_hopf(unsigned n) {
  GrObject one = GrObject::unit(n);
  GrMorphism scalar = GrMorphism::identity(one);
  HopfData h;
  h.carrier = one;
  h.m = scalar;
  h.u = scalar;
  h.cp = scalar;
  h.eps = scalar;
  h.S = scalar;
  h.Sinv = scalar;
  return h;
}

Report check_hopf(const HopfData& h, const std::string& subject) {
  Report rep(subject);
  const GrObject& a = h.carrier;
  GrMorphism ida = GrMorphism::identity(a);
  GrMorphism id1 = GrMorphism::identity(GrObject::unit(a.n));

  rep.add_equal("alg.assoc", compose(h.m, tensor_mor(h.m, ida)),
                compose(h.m, tensor_mor(ida, h.m)));
  rep.add_equal("alg.unit_l", compose(h.m, tensor_mor(h.u, ida)), ida);
  rep.add_equal("alg.unit_r", compose(h.m, tensor_mor(ida, h.u)), ida);
  rep.add_equal("coalg.coassoc", compose(tensor_mor(h.cp, ida), h.cp),
                compose(tensor_mor(ida, h.cp), h.cp));
  rep.add_equal("coalg.counit_l", compose(tensor_mor(h.eps, ida), h.cp), ida);
  rep.add_equal("coalg.counit_r", compose(tensor_mor(ida, h.eps), h.cp), ida);
  rep.add_equal(
      "bialg.delta_m", compose(h.cp, h.m),
      compose(tensor_mor(h.m, h.m),
              tensor3(ida, braiding(a, a), ida),
              tensor_mor(h.cp, h.cp)));
  rep.add_equal("bialg.delta_u", compose(h.cp, h.u), tensor_mor(h.u, h.u));
  rep.add_equal("bialg.eps_m", compose(h.eps, h.m),
                tensor_mor(h.eps, h.eps));
  rep.add_equal("bialg.eps_u", compose(h.eps, h.u), id1);
  GrMorphism ueps = compose(h.u, h.eps);
  rep.add_equal("antipode.left",
                compose(h.m, tensor_mor(h.S, ida), h.cp), ueps);
  rep.add_equal("antipode.right",
                compose(h.m, tensor_mor(ida, h.S), h.cp), ueps);
  if (h.Sinv) {
    rep.add_equal("antipode.sinv_l", compose(*h.Sinv, h.S), ida);
    rep.add_equal("antipode.sinv_r", compose(h.S, *h.Sinv), ida);
  }
  return rep;
}

FusionOps fusion_ops(const HopfData& h) {
  const GrObject& a = h.carrier;
  GrMorphism ida = GrMorphism::identity(a);
  FusionOps f;
  f.Hl = compose(tensor_mor(ida, h.m), tensor_mor(h.cp, ida));
  f.Hr = compose(tensor_mor(h.m, ida), tensor_mor(ida, braiding(a, a)),
                 tensor_mor(h.cp, ida));
  return f;
}

GrMorphism antipode_from_fusion(const HopfData& h) {
  const GrObject& a = h.carrier;
  GrMorphism ida = GrMorphism::identity(a);
  auto hl_inv = try_invert(fusion_ops(h).Hl);
  if (!hl_inv)
    throw grcat_error(
        "antipode_from_fusion: left fusion operator is singular; "
        "not a Hopf algebra");
  return compose(tensor_mor(h.eps, ida), *hl_inv, tensor_mor(ida, h.u));
}

MorphismSolve solve_antipode(const HopfData& h) {
  const GrObject& a = h.carrier;
  GrMorphism ida = GrMorphism::identity(a);
  GrMorphism ueps = compose(h.u, h.eps);
  HomSpace hom(a, a);
  std::vector<std::function<GrMorphism(const GrMorphism&)>> ops = {
      [&](const GrMorphism& t) {
        return compose(h.m, tensor_mor(t, ida), h.cp);
      },
      [&](const GrMorphism& t) {
        return compose(h.m, tensor_mor(ida, t), h.cp);
      }};
  return solve_morphism_equations(ops, hom, {ueps, ueps});
}

Report check_module(const ModuleData& mod, const std::string& subject) {
  Report rep(subject);
  const HopfData& h = *mod.algebra;
  const GrObject& a = h.carrier;
  const GrObject& m = mod.carrier;
  GrMorphism ida = GrMorphism::identity(a);
  GrMorphism idm = GrMorphism::identity(m);
  const GrMorphism& r = mod.action;
  if (mod.side == Side::Left) {
    rep.add_equal("module.assoc", compose(r, tensor_mor(h.m, idm)),
                  compose(r, tensor_mor(ida, r)));
    rep.add_equal("module.unit", compose(r, tensor_mor(h.u, idm)), idm);
  } else {
    rep.add_equal("module.assoc", compose(r, tensor_mor(idm, h.m)),
                  compose(r, tensor_mor(r, ida)));
    rep.add_equal("module.unit", compose(r, tensor_mor(idm, h.u)), idm);
  }
  return rep;
}

ModuleData trivial_module(std::shared_ptr<const HopfData> a, Side side) {
  ModuleData m;
  m.algebra = a;
  m.carrier = GrObject::unit(a->order());
  m.side = side;
  m.action = a->eps;  // both sides: 1 (x) A = A (x) 1 = A strictly
  return m;
}

ModuleData regular_module(std::shared_ptr<const HopfData> a, Side side) {
  ModuleData m;
  m.algebra = a;
  m.carrier = a->carrier;
  m.side = side;
  m.action = a->m;
  return m;
}

ModuleData free_module(std::shared_ptr<const HopfData> a, const GrObject& x,
                       Side side) {
  ModuleData m;
  m.algebra = a;
  m.side = side;
  GrMorphism idx = GrMorphism::identity(x);
  if (side == Side::Right) {
    m.carrier = tensor_obj(x, a->carrier);
    m.action = tensor_mor(idx, a->m);
  } else {
    m.carrier = tensor_obj(a->carrier, x);
    m.action = tensor_mor(a->m, idx);
  }
  return m;
}

ModuleData module_tensor(const ModuleData& m, const ModuleData& n) {
  if (m.algebra != n.algebra)
    throw grcat_error("module_tensor: modules over different algebras");
  if (m.side != n.side)
    throw grcat_error("module_tensor: mixed sides");
  const HopfData& h = *m.algebra;
  GrMorphism idm = GrMorphism::identity(m.carrier);
  GrMorphism idn = GrMorphism::identity(n.carrier);
  ModuleData out;
  out.algebra = m.algebra;
  out.side = m.side;
  out.carrier = tensor_obj(m.carrier, n.carrier);
  if (m.side == Side::Left) {
    out.action = compose(
        tensor_mor(m.action, n.action),
        tensor3(GrMorphism::identity(h.carrier),
                braiding(h.carrier, m.carrier), idn),
        tensor_mor(h.cp, tensor_mor(idm, idn)));
  } else {
    out.action = compose(
        tensor_mor(m.action, n.action),
        tensor3(idm, braiding(n.carrier, h.carrier),
                GrMorphism::identity(h.carrier)),
        tensor_mor(tensor_mor(idm, idn), h.cp));
  }
  return out;
}

ModuleData module_dual(const ModuleData& mod, DualKind which) {
  const HopfData& h = *mod.algebra;
  if (!h.Sinv && which != DualKind::Right)
    throw grcat_error("module_dual: S^{-1} required");
  const GrObject& a = h.carrier;
  const GrObject& m = mod.carrier;
  GrObject dm = dual_obj(m);
  GrMorphism ida = GrMorphism::identity(a);
  GrMorphism idm = GrMorphism::identity(m);
  GrMorphism iddm = GrMorphism::identity(dm);
  const GrMorphism& r = mod.action;
  ModuleData out;
  out.algebra = mod.algebra;
  out.carrier = dm;
  out.side = mod.side;
  if (mod.side == Side::Left) {
    if (which == DualKind::Left) {
      // (lev (x) id)(id (x) r(S (x) id) (x) id)(tau_{A,dM} (x) lcoev)
      out.action = compose(
          tensor_mor(ev(m), iddm),
          tensor3(iddm, compose(r, tensor_mor(h.S, idm)), iddm),
          tensor_mor(braiding(a, dm), coev(m)));
    } else {
      if (!h.Sinv) throw grcat_error("module_dual: S^{-1} required");
      // (id (x) rev)(id (x) r tau^{-1}_{A,M} (x) id)(rcoev (x) S^{-1} (x) id)
      out.action = compose(
          tensor_mor(iddm, rev(m)),
          tensor3(iddm, compose(r, braiding_inv(a, m)), iddm),
          tensor3(rcoev(m), *h.Sinv, iddm));
    }
  } else {
    if (which == DualKind::Left) {
      if (!h.Sinv) throw grcat_error("module_dual: S^{-1} required");
      // (lev (x) id)(id (x) r tau^{-1}_{M,A} (x) id)(id (x) S^{-1} (x) lcoev)
      out.action = compose(
          tensor_mor(ev(m), iddm),
          tensor3(iddm, compose(r, braiding_inv(m, a)), iddm),
          tensor3(iddm, *h.Sinv, coev(m)));
    } else {
      // (id (x) rev)(id (x) r(id (x) S) (x) id)(rcoev (x) tau_{dM,A})
      out.action = compose(
          tensor_mor(iddm, rev(m)),
          tensor3(iddm, compose(r, tensor_mor(idm, h.S)), iddm),
          tensor_mor(rcoev(m), braiding(dm, a)));
    }
  }
  return out;
}

ModuleData fa_functor(const ModuleData& mod) {
  if (mod.side != Side::Left)
    throw grcat_error("fa_functor: expects a left module");
  const HopfData& h = *mod.algebra;
  ModuleData out;
  out.algebra = mod.algebra;
  out.carrier = mod.carrier;
  out.side = Side::Right;
  out.action =
      compose(mod.action, braiding(mod.carrier, h.carrier),
              tensor_mor(GrMorphism::identity(mod.carrier), h.S));
  return out;
}

bool is_module_morphism(const ModuleData& m, const ModuleData& n,
                        const GrMorphism& f) {
  if (m.algebra != n.algebra || m.side != n.side) return false;
  const GrObject& a = m.algebra->carrier;
  GrMorphism ida = GrMorphism::identity(a);
  if (m.side == Side::Left)
    return compose(f, m.action) == compose(n.action, tensor_mor(ida, f));
  return compose(f, m.action) == compose(n.action, tensor_mor(f, ida));
}

}  // namespace braidbench
