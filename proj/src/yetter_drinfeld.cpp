#include "whakit/yetter_drinfeld.hpp"

#include "whakit/verify.hpp"

namespace whakit {

namespace {

std::vector<const std::vector<std::string>*> legs_of(std::initializer_list<const std::vector<std::string>*> l) {
  return l;
}

// rho applied to leg `leg` of t; the comodule legs replace it.
Tensor coact(const Tensor& t, std::size_t leg, const LinMap& coaction, std::size_t outer_dim, std::size_t dim) {
  return apply(t, {leg}, coaction, {outer_dim, dim}, leg);
}

std::optional<Witness> compare_columns(const LinMap& lhs, const LinMap& rhs, const std::vector<std::string>& names,
                                       const std::vector<const std::vector<std::string>*>& legs,
                                       const std::string& where) {
  auto w = first_difference(lhs, rhs, label_namer(names), tensor_renderer(legs));
  if (w) w->indices.insert(w->indices.begin(), where);
  return w;
}

}  // namespace

Report check_yd(const YDModule& ym) {
  const HModule& M = *ym.module;
  const auto& H = M.H();
  const std::size_t d = H.dim(), n = M.dim();
  Report rep("Yetter-Drinfeld module " + M.name());
  const auto legs = legs_of({&H.labels(), &M.labels()});
  auto rho = [&](std::size_t m) { return Tensor({d, n}, ym.coaction.column(m)); };

  rep.run("yd.shape", [&]() -> std::optional<Witness> {
    if (ym.coaction.rows() == d * n && ym.coaction.cols() == n) return std::nullopt;
    return Witness{{M.name()}, std::to_string(d * n) + "x" + std::to_string(n),
                   std::to_string(ym.coaction.rows()) + "x" + std::to_string(ym.coaction.cols())};
  });
  if (!rep.passed()) return rep;
  rep.run("yd.truncated", [&] {
    LinMap rhs = tabulate(d * n, n, [&](std::size_t m) {
      Tensor t = outer(rho(m), H.delta_one());  // x, m0, 1_1, 1_2
      t = H.mul(t, 2, 0);                      // 1_1 x, m0, 1_2
      return M.act_leg(t, 2, 1).terms();
    });
    return compare_columns(ym.coaction, rhs, M.labels(), legs, "rho(m) in H (x)_t M");
  });
  rep.run("yd.coassociative", [&] {
    LinMap lhs = tabulate(d * d * n, n, [&](std::size_t m) { return H.comul(rho(m), 0).terms(); });
    LinMap rhs = tabulate(d * d * n, n, [&](std::size_t m) { return coact(rho(m), 1, ym.coaction, d, n).terms(); });
    return compare_columns(lhs, rhs, M.labels(), legs_of({&H.labels(), &H.labels(), &M.labels()}), "coassociativity");
  });
  rep.run("yd.counit", [&] {
    LinMap lhs = tabulate(n, n, [&](std::size_t m) { return H.counit_leg(rho(m), 0).terms(); });
    return compare_columns(lhs, LinMap::identity(n), M.labels(), legs_of({&M.labels()}), "counit");
  });
  rep.run("yd.compatibility", [&]() -> std::optional<Witness> {
    for (std::size_t h = 0; h < d; ++h) {
      Tensor h3 = H.comul(H.comul(H.basis_elem(h), 0), 0);
      LinMap lhs = compose(ym.coaction, M.rho(h));
      LinMap rhs = tabulate(d * n, n, [&](std::size_t m) {
        Tensor t = outer(h3, rho(m));  // h1, h2, h3, x, m0
        t = H.S(t, 2);
        t = H.mul(t, 0, 3);  // h1 x, h2, S(h3), m0
        t = H.mul(t, 0, 2);  // h1 x S(h3), h2, m0
        return M.act_leg(t, 1, 2).terms();
      });
      if (auto w = compare_columns(lhs, rhs, M.labels(), legs, "h=" + H.labels()[h])) return w;
    }
    return std::nullopt;
  });
  rep.run("yd.unit_identity", [&] {
    LinMap rhs = tabulate(d * n, n, [&](std::size_t m) {
      Tensor t = outer(rho(m), H.delta_one());  // x, m0, 1_1, 1_2
      t = H.S(t, 3);
      t = H.mul(t, 0, 3);  // x S(1_2), m0, 1_1
      return M.act_leg(t, 2, 1).terms();
    });
    return compare_columns(ym.coaction, rhs, M.labels(), legs, "m_[-1] S(1_2) (x) 1_1 . m_[0]");
  });
  return rep;
}

Report check_rh_comodule(const RHComodule& cm) {
  const HModule& M = *cm.module;
  const BraidedHopfAlgebra& B = *cm.base;
  const auto& H = B.H();
  const std::size_t c = B.dim(), n = M.dim();
  Report rep("_RH-comodule " + M.name());
  const auto legs = legs_of({&B.labels(), &M.labels()});
  auto rho = [&](std::size_t m) { return Tensor({c, n}, cm.coaction.column(m)); };

  rep.run("comodule.shape", [&]() -> std::optional<Witness> {
    if (cm.coaction.rows() == c * n && cm.coaction.cols() == n) return std::nullopt;
    return Witness{{M.name()}, std::to_string(c * n) + "x" + std::to_string(n),
                   std::to_string(cm.coaction.rows()) + "x" + std::to_string(cm.coaction.cols())};
  });
  if (!rep.passed()) return rep;
  const ModulePtr amb = ambient_tensor(*B.module, M);
  rep.run("comodule.truncated", [&] {
    return compare_columns(compose(amb->rho_of(H.one()), cm.coaction), cm.coaction, M.labels(), legs,
                           "rho(m) in _RH (x)_t M");
  });
  rep.run("comodule.h_linear", [&]() -> std::optional<Witness> {
    for (std::size_t h = 0; h < H.dim(); ++h)
      if (auto w = compare_columns(compose(cm.coaction, M.rho(h)), compose(amb->rho(h), cm.coaction), M.labels(),
                                   legs, "h=" + H.labels()[h]))
        return w;
    return std::nullopt;
  });
  rep.run("comodule.coassociative", [&] {
    LinMap lhs = tabulate(c * c * n, n, [&](std::size_t m) { return b_comul(B, rho(m), 0).terms(); });
    LinMap rhs = tabulate(c * c * n, n, [&](std::size_t m) { return coact(rho(m), 1, cm.coaction, c, n).terms(); });
    return compare_columns(lhs, rhs, M.labels(), legs_of({&B.labels(), &B.labels(), &M.labels()}),
                           "coassociativity");
  });
  rep.run("comodule.counit", [&] {
    const LinMap eps = compose(B.H().target().inclusion, B.counit_bar);
    LinMap lhs = tabulate(n, n, [&](std::size_t m) { return M.act_leg(map_leg(rho(m), 0, eps), 0, 1).terms(); });
    return compare_columns(lhs, LinMap::identity(n), M.labels(), legs_of({&M.labels()}), "eps_t(m_(-1)) . m_(0)");
  });
  return rep;
}

YDModule induced_yd(const RMatrix& r, const ModulePtr& m) {
  const auto& H = r.H();
  YDModule out{m, tabulate(H.dim() * m->dim(), m->dim(), [&](std::size_t j) {
                 Tensor t = outer(r.r(), Tensor::vector(m->dim(), unit_vector(j)));  // R1, R2, m
                 return m->act_leg(t, 0, 2).terms();
               })};
  return out;
}

RHComodule functor_G(const BraidedPtr& b, const YDModule& yn) {
  const HModule& N = *yn.module;
  const auto& H = b->H();
  const std::size_t d = H.dim(), n = N.dim();
  RHComodule out{b, yn.module, tabulate(b->dim() * n, n, [&](std::size_t j) {
                   Tensor t = outer(Tensor({d, n}, yn.coaction.column(j)), b->R().r());  // x, n0, R1, R2
                   t = H.S(t, 3);
                   t = H.mul(t, 0, 3);       // x S(R2), n0, R1
                   t = N.act_leg(t, 2, 1);   // x S(R2), R1 . n0
                   return leg_to_subspace(t, 0, b->carrier, ErrorKind::CoactionEscapesCarrier, "induced coaction")
                       .terms();
                 })};
  return out;
}

YDModule functor_F(const RHComodule& cm) {
  const HModule& M = *cm.module;
  const auto& B = *cm.base;
  const auto& H = B.H();
  const std::size_t n = M.dim();
  YDModule out{cm.module, tabulate(H.dim() * n, n, [&](std::size_t j) {
                 Tensor t = map_leg(Tensor({B.dim(), n}, cm.coaction.column(j)), 0, B.carrier.inclusion);
                 t = outer(t, B.R().r());  // x, m0, R1, R2
                 t = H.mul(t, 0, 3);       // x R2, m0, R1
                 return M.act_leg(t, 2, 1).terms();
               })};
  return out;
}

RHComodule trivial_comodule(const BraidedPtr& b, const ModulePtr& m) {
  const ModulePtr amb = ambient_tensor(*b->module, *m);
  const LinMap p = amb->rho_of(b->H().one());
  const SparseVec one = b->one();
  RHComodule out{b, m, tabulate(b->dim() * m->dim(), m->dim(), [&](std::size_t j) {
                   return p.apply(outer(Tensor::vector(b->dim(), one), Tensor::vector(m->dim(), unit_vector(j))).terms());
                 })};
  return out;
}

RHComodule regular_comodule(const BraidedPtr& b) { return RHComodule{b, b->module, b->comult_full}; }

ComoduleTensor comodule_tensor(const RHComodule& u, const RHComodule& v) {
  const BraidedHopfAlgebra& B = *u.base;
  const HModule& U = *u.module;
  const HModule& V = *v.module;
  const std::size_t c = B.dim();
  ComoduleTensor out;
  out.tensor = truncated_tensor(u.module, v.module);
  const Subspace& carrier = out.tensor.carrier;
  LinMap coaction = tabulate(c * carrier.dim(), carrier.dim(), [&](std::size_t k) {
    Tensor t({U.dim(), V.dim()}, carrier.inclusion.column(k));
    t = coact(t, 0, u.coaction, c, U.dim());  // a, u0, v
    t = coact(t, 2, v.coaction, c, V.dim());  // a, u0, b, v0
    t = outer(t, B.R().r());                  // a, u0, b, v0, R1, R2
    t = B.module->act_leg(t, 5, 2);           // a, u0, R2 |> b, v0, R1
    t = U.act_leg(t, 4, 1);                   // a, R1 . u0, R2 |> b, v0
    t = permute(t, {0, 2, 1, 3});
    t = b_mul(B, t, 0, 1);  // a (R2 |> b), u0, v0
    return legs_to_subspace(t, 1, carrier, ErrorKind::CoactionEscapesCarrier, "tensor coaction").terms();
  });
  out.comodule = RHComodule{u.base, out.tensor.module, std::move(coaction)};
  return out;
}

YDModule yd_tensor(const YDModule& u, const YDModule& v, const TruncatedTensor& uv) {
  const HModule& U = *u.module;
  const HModule& V = *v.module;
  const auto& H = U.H();
  const std::size_t d = H.dim();
  const Subspace& carrier = uv.carrier;
  LinMap coaction = tabulate(d * carrier.dim(), carrier.dim(), [&](std::size_t k) {
    Tensor t({U.dim(), V.dim()}, carrier.inclusion.column(k));
    t = coact(t, 0, u.coaction, d, U.dim());  // x, u0, v
    t = coact(t, 2, v.coaction, d, V.dim());  // x, u0, y, v0
    t = H.mul(t, 0, 2);                       // x y, u0, v0
    return legs_to_subspace(t, 1, carrier, ErrorKind::CoactionEscapesCarrier, "tensor coaction").terms();
  });
  return YDModule{uv.module, std::move(coaction)};
}

LinMap yd_braiding_full(const YDModule& yv, const HModule& W) {
  const HModule& V = *yv.module;
  const std::size_t d = V.H().dim();
  return tabulate(W.dim() * V.dim(), V.dim() * W.dim(), [&](std::size_t j) {
    Tensor t = coact(Tensor({V.dim(), W.dim()}, unit_vector(j)), 0, yv.coaction, d, V.dim());  // x, v0, w
    t = W.act_leg(t, 0, 2);  // v0, x . w
    return permute(t, {1, 0}).terms();
  });
}

LinMap yd_braiding_inverse_full(const YDModule& yv, const HModule& W) {
  const HModule& V = *yv.module;
  const auto& H = V.H();
  return tabulate(V.dim() * W.dim(), W.dim() * V.dim(), [&](std::size_t j) {
    Tensor t = coact(Tensor({W.dim(), V.dim()}, unit_vector(j)), 1, yv.coaction, H.dim(), V.dim());  // w, x, v0
    t = H.S_inv(t, 1);
    t = W.act_leg(t, 1, 0);  // S^-1(x) . w, v0
    return permute(t, {1, 0}).terms();
  });
}

LinMap comodule_braiding_full(const RHComodule& u, const HModule& V) {
  const BraidedHopfAlgebra& B = *u.base;
  const HModule& U = *u.module;
  const auto& H = B.H();
  return tabulate(V.dim() * U.dim(), U.dim() * V.dim(), [&](std::size_t j) {
    Tensor t = coact(Tensor({U.dim(), V.dim()}, unit_vector(j)), 0, u.coaction, B.dim(), U.dim());  // a, u0, v
    t = map_leg(t, 0, B.carrier.inclusion);
    t = outer(t, B.R().r());  // a, u0, v, R1, R2
    t = H.mul(t, 0, 4);       // a R2, u0, v, R1
    t = V.act_leg(t, 0, 2);   // u0, a R2 . v, R1
    t = U.act_leg(t, 2, 0);   // R1 . u0, a R2 . v
    return permute(t, {1, 0}).terms();
  });
}

LinMap comodule_braiding_inverse_full(const RHComodule& u, const HModule& V) {
  const BraidedHopfAlgebra& B = *u.base;
  const HModule& U = *u.module;
  const auto& H = B.H();
  return tabulate(U.dim() * V.dim(), V.dim() * U.dim(), [&](std::size_t j) {
    Tensor t = coact(Tensor({V.dim(), U.dim()}, unit_vector(j)), 1, u.coaction, B.dim(), U.dim());  // v, a, u0
    t = map_leg(t, 1, B.carrier.inclusion);
    t = outer(t, B.R().r());  // v, a, u0, R1, R2
    t = H.mul(t, 1, 4);       // v, a R2, u0, R1
    t = H.S_inv(t, 1);
    t = V.act_leg(t, 1, 0);  // S^-1(a R2) . v, u0, R1
    t = U.act_leg(t, 2, 1);  // v', R1 . u0
    return permute(t, {1, 0}).terms();
  });
}

Subspace comodule_hom_space(const RHComodule& u, const RHComodule& v) {
  const std::size_t nu = u.module->dim(), nv = v.module->dim(), c = u.base->dim();
  const Subspace lin = hom_space(*u.module, *v.module);
  // rho_V f - (id (x) f) rho_U, flattened as row * nu + col.
  LinMap colin = tabulate(c * nv * nu, lin.dim(), [&](std::size_t k) {
    const LinMap f = unflatten(lin.inclusion.column(k), nv, nu);
    const LinMap diff = sub(compose(v.coaction, f), compose(tensor(LinMap::identity(c), f), u.coaction));
    return flatten(diff);
  });
  return image(compose(lin.inclusion, kernel(colin).inclusion));
}

std::vector<RHComodule> standard_comodule_samples(const BraidedPtr& b) {
  return {trivial_comodule(b, regular_module(b->base->algebra())), trivial_comodule(b, b->unit_module),
          regular_comodule(b)};
}

Report check_equivalence_roundtrip(const BraidedPtr& b, const std::vector<RHComodule>& samples) {
  Report rep("comodule / Yetter-Drinfeld equivalence over " + b->H().name());
  const auto& H = b->H();
  auto name = [](const RHComodule& m) { return m.module->name(); };
  rep.run("samples.comodules", [&]() -> std::optional<Witness> {
    for (const auto& m : samples)
      if (const auto* f = check_rh_comodule(m).first_failure())
        return Witness{{name(m), f->name}, "comodule", f->witness ? f->witness->actual : f->note};
    return std::nullopt;
  });
  rep.run("functor_F.yetter_drinfeld", [&]() -> std::optional<Witness> {
    for (const auto& m : samples)
      if (const auto* f = check_yd(functor_F(m)).first_failure())
        return Witness{{name(m), f->name}, "Yetter-Drinfeld module", f->witness ? f->witness->actual : f->note};
    return std::nullopt;
  });
  rep.run("roundtrip.G_after_F", [&]() -> std::optional<Witness> {
    for (const auto& m : samples) {
      RHComodule back = functor_G(b, functor_F(m));
      if (auto w = compare_columns(back.coaction, m.coaction, m.module->labels(),
                                   legs_of({&b->labels(), &m.module->labels()}), name(m)))
        return w;
    }
    return std::nullopt;
  });
  rep.run("roundtrip.F_after_G", [&]() -> std::optional<Witness> {
    for (const auto& m : samples) {
      YDModule n = functor_F(m);
      YDModule back = functor_F(functor_G(b, n));
      if (auto w = compare_columns(back.coaction, n.coaction, m.module->labels(),
                                   legs_of({&H.labels(), &m.module->labels()}), name(m)))
        return w;
    }
    return std::nullopt;
  });
  rep.run("induced.trivial", [&]() -> std::optional<Witness> {
    for (const auto& m : {regular_module(b->base->algebra()), b->unit_module}) {
      RHComodule g = functor_G(b, induced_yd(b->R(), m));
      RHComodule t = trivial_comodule(b, m);
      if (auto w = compare_columns(g.coaction, t.coaction, m->labels(), legs_of({&b->labels(), &m->labels()}),
                                   m->name()))
        return w;
    }
    return std::nullopt;
  });
  rep.run("roundtrip.monoidal", [&]() -> std::optional<Witness> {
    for (const auto& u : samples)
      for (const auto& v : samples) {
        ComoduleTensor uv = comodule_tensor(u, v);
        YDModule yd = yd_tensor(functor_F(u), functor_F(v), uv.tensor);
        RHComodule g = functor_G(b, yd);
        const std::string at = name(u) + " (x)_t " + name(v);
        if (auto w = compare_columns(g.coaction, uv.comodule.coaction, uv.tensor.module->labels(),
                                     legs_of({&b->labels(), &uv.tensor.module->labels()}), at))
          return w;
      }
    return std::nullopt;
  });
  return rep;
}

Report check_comodule_braiding(const BraidedPtr& b, const std::vector<RHComodule>& samples,
                               const BraidingOptions& options) {
  Report rep("braiding of _RH-comodules over " + b->H().name());
  Lcg rng(options.seed);
  auto name = [](const RHComodule& m) { return m.module->name(); };

  rep.run("comodule_braiding.inverse", [&]() -> std::optional<Witness> {
    for (const auto& u : samples)
      for (const auto& v : samples) {
        auto uv = truncated_tensor(u.module, v.module);
        auto vu = truncated_tensor(v.module, u.module);
        const LinMap c = comodule_braiding_full(u, *v.module);
        const LinMap ci = comodule_braiding_inverse_full(u, *v.module);
        const std::string at = name(u) + "," + name(v);
        LinMap fwd = restrict_formula(
            uv.carrier, vu.carrier, [&](const SparseVec& x) { return c.apply(x); }, ErrorKind::InvalidInput,
            "comodule braiding");
        LinMap back = restrict_formula(
            vu.carrier, uv.carrier, [&](const SparseVec& x) { return ci.apply(x); }, ErrorKind::InvalidInput,
            "inverse comodule braiding");
        if (auto w = identity_witness(compose(back, fwd), "C~^-1 C~ on " + at)) return w;
        if (auto w = identity_witness(compose(fwd, back), "C~ C~^-1 on " + at)) return w;
      }
    return std::nullopt;
  });
  rep.run("comodule_braiding.morphism", [&]() -> std::optional<Witness> {
    for (const auto& u : samples)
      for (const auto& v : samples) {
        ComoduleTensor uv = comodule_tensor(u, v);
        ComoduleTensor vu = comodule_tensor(v, u);
        const LinMap c = comodule_braiding_full(u, *v.module);
        LinMap fwd = restrict_formula(
            uv.tensor.carrier, vu.tensor.carrier, [&](const SparseVec& x) { return c.apply(x); },
            ErrorKind::InvalidInput, "comodule braiding");
        const std::string at = name(u) + "," + name(v);
        if (auto w = h_linearity_witness(fwd, *uv.tensor.module, *vu.tensor.module)) {
          w->indices.insert(w->indices.begin(), "H-linearity on " + at);
          return w;
        }
        LinMap lhs = compose(vu.comodule.coaction, fwd);
        LinMap rhs = compose(tensor(LinMap::identity(b->dim()), fwd), uv.comodule.coaction);
        auto w = first_difference(lhs, rhs, label_namer(uv.tensor.module->labels()),
                                  [](const SparseVec& x) { return render_vec(x); });
        if (w) {
          w->indices.insert(w->indices.begin(), "colinearity on " + at);
          return w;
        }
      }
    return std::nullopt;
  });
  rep.run("comodule_braiding.hexagons", [&]() -> std::optional<Witness> {
    for (const auto& u : samples)
      for (const auto& v : samples)
        for (const auto& w : samples) {
          const HModule &U = *u.module, &V = *v.module, &W = *w.module;
          Subspace c = triple_carrier(U, V, W);
          const std::string at = name(u) + "," + name(v) + "," + name(w);
          const LinMap idu = LinMap::identity(U.dim()), idv = LinMap::identity(V.dim()),
                       idw = LinMap::identity(W.dim());
          // C~_{U,V(x)W} = (id (x) C~_{U,W})(C~_{U,V} (x) id)
          LinMap lhs = comodule_braiding_full(u, *ambient_tensor(V, W));
          LinMap rhs = compose(tensor(idv, comodule_braiding_full(u, W)), tensor(comodule_braiding_full(u, V), idw));
          if (auto x = on_subspace(lhs, rhs, c, "first hexagon on " + at)) return x;
          // C~_{U(x)V,W} = (C~_{U,W} (x) id)(id (x) C~_{V,W}), through the carrier of U (x)_t V
          ComoduleTensor uv = comodule_tensor(u, v);
          const LinMap to_uv = tensor(uv.tensor.carrier.projection, idw);
          const LinMap from_wuv = tensor(idw, uv.tensor.carrier.inclusion);
          lhs = compose(from_wuv, compose(comodule_braiding_full(uv.comodule, W), to_uv));
          rhs = compose(tensor(comodule_braiding_full(u, W), idv), tensor(idu, comodule_braiding_full(v, W)));
          if (auto x = on_subspace(lhs, rhs, c, "second hexagon on " + at)) return x;
        }
    return std::nullopt;
  });
  rep.run("comodule_braiding.naturality", [&]() -> std::optional<Witness> {
    for (const auto& u : samples)
      for (const auto& u2 : samples) {
        Subspace hom = comodule_hom_space(u, u2);
        if (hom.dim() == 0) continue;
        for (std::size_t s = 0; s < options.morphisms; ++s) {
          LinMap f = unflatten(random_combination(hom, rng), u2.module->dim(), u.module->dim());
          for (const auto& v : samples) {
            const HModule& V = *v.module;
            const LinMap idv = LinMap::identity(V.dim());
            const std::string at = name(u) + "->" + name(u2) + " beside " + name(v);
            auto uv = truncated_tensor(u.module, v.module);
            LinMap lhs = compose(comodule_braiding_full(u2, V), tensor(f, idv));
            LinMap rhs = compose(tensor(idv, f), comodule_braiding_full(u, V));
            if (auto w = on_subspace(lhs, rhs, uv.carrier, "first slot " + at)) return w;
            auto vu = truncated_tensor(v.module, u.module);
            lhs = compose(comodule_braiding_full(v, *u2.module), tensor(idv, f));
            rhs = compose(tensor(f, idv), comodule_braiding_full(v, *u.module));
            if (auto w = on_subspace(lhs, rhs, vu.carrier, "second slot " + at)) return w;
          }
        }
      }
    return std::nullopt;
  });
  rep.run("comodule_braiding.matches_yd_braiding", [&]() -> std::optional<Witness> {
    for (const auto& u : samples)
      for (const auto& v : samples) {
        auto uv = truncated_tensor(u.module, v.module);
        const std::string at = name(u) + "," + name(v);
        if (auto w = on_subspace(comodule_braiding_full(u, *v.module), yd_braiding_full(functor_F(u), *v.module),
                                 uv.carrier, at))
          return w;
      }
    return std::nullopt;
  });
  rep.run("yd_braiding.restricts_to_module_braiding", [&]() -> std::optional<Witness> {
    const std::vector<ModulePtr> mods{regular_module(b->base->algebra()), b->unit_module, b->module};
    for (const auto& m : mods)
      for (const auto& n : mods) {
        auto mn = truncated_tensor(m, n);
        const std::string at = m->name() + "," + n->name();
        if (auto w = on_subspace(yd_braiding_full(induced_yd(b->R(), m), *n), braiding_full(b->R(), *m, *n),
                                 mn.carrier, at))
          return w;
      }
    return std::nullopt;
  });
  return rep;
}

}  // namespace whakit
