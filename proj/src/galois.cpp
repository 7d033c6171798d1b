#include "whakit/galois.hpp"

#include <variant>

#include "whakit/verify.hpp"

namespace whakit {

namespace {

using Legs = std::vector<const std::vector<std::string>*>;

Tensor coact(const Tensor& t, std::size_t leg, const LinMap& coaction, std::size_t first, std::size_t second) {
  return apply(t, {leg}, coaction, {first, second}, leg);
}

std::optional<Witness> compare(const LinMap& lhs, const LinMap& rhs, const std::vector<std::string>& names,
                               const Legs& legs, const std::string& where) {
  auto w = first_difference(lhs, rhs, label_namer(names), tensor_renderer(legs));
  if (w) w->indices.insert(w->indices.begin(), where);
  return w;
}

std::optional<Witness> bijective(const LinMap& f, const std::string& what) {
  if (f.rows() == f.cols() && rank(f) == f.cols()) return std::nullopt;
  return Witness{{what}, "bijection of rank " + std::to_string(f.cols()),
                 std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + " of rank " + std::to_string(rank(f))};
}

LinMap delta_one_projector(const HModule& m, const HModule& n) { return ambient_tensor(m, n)->rho_of(m.H().one()); }

// eta^-1 : eta(H_t) -> H_t in target coordinates, composed with the projection
// onto the image; `image` receives that image.
LinMap unit_inverse(const ComoduleAlgebra& a, Subspace& img) {
  const LinMap eta = a.unit_map();
  img = image(eta);
  auto inv = inverse(compose(img.projection, eta));
  if (!inv) throw Error(ErrorKind::InvalidInput, "unit map of " + a.name + " is not injective");
  return compose(*inv, img.projection);
}

// Leg `leg` of t must lie in s; returns it in s coordinates.
std::optional<Tensor> leg_in(const Tensor& t, std::size_t leg, const Subspace& s) {
  Tensor c = map_leg(t, leg, s.projection);
  if (map_leg(c, leg, s.inclusion) != t) return std::nullopt;
  return c;
}

}  // namespace

LinMap ComoduleAlgebra::unit_map() const {
  const Subspace& T = H().target();
  return tabulate(dim(), T.dim(), [&](std::size_t k) { return module->act(T.inclusion.column(k), unit); });
}

RHComodule ComoduleAlgebra::left_comodule() const {
  if (!left) throw Error(ErrorKind::InvalidInput, name + " has no left coaction");
  return RHComodule{base, module, *left};
}

AlgebraObj make_comodule_algebra(std::string name, BraidedPtr base, ModulePtr module, const LinMap& mult,
                                 SparseVec unit, std::optional<LinMap> left, std::optional<LinMap> right) {
  const std::size_t n = module->dim(), c = base->dim();
  if (mult.rows() != n || mult.cols() != n * n)
    throw Error(ErrorKind::DimensionMismatch, "multiplication of " + name + " must be " + std::to_string(n) + "x" +
                                                  std::to_string(n * n));
  if (left && (left->rows() != c * n || left->cols() != n))
    throw Error(ErrorKind::DimensionMismatch, "left coaction of " + name + " has the wrong shape");
  if (right && (right->rows() != n * c || right->cols() != n))
    throw Error(ErrorKind::DimensionMismatch, "right coaction of " + name + " has the wrong shape");
  for (const auto& e : unit)
    if (e.index >= n) throw Error(ErrorKind::DimensionMismatch, "unit of " + name + " is out of range");
  auto a = std::make_shared<ComoduleAlgebra>();
  a->name = std::move(name);
  a->base = std::move(base);
  a->mult = compose(mult, delta_one_projector(*module, *module));
  a->module = std::move(module);
  a->unit = std::move(unit);
  a->left = std::move(left);
  a->right = std::move(right);
  return a;
}

AlgebraObj rh_comodule_algebra(const BraidedPtr& b) {
  return make_comodule_algebra("_RH", b, b->module, b->mult_full, b->one(), b->comult_full, b->comult_full);
}

Report check_algebra_in_cat(const ComoduleAlgebra& a) {
  Report rep("algebra " + a.name + " in H-modules");
  const HModule& A = *a.module;
  const std::size_t n = a.dim();
  const ModulePtr& U = a.base->unit_module;
  const TruncatedTensor sq = truncated_tensor(a.module, a.module);
  const LinMap eta = a.unit_map();
  const Legs one_leg{&A.labels()};

  rep.run("algebra.h_linear", [&]() -> std::optional<Witness> {
    if (auto w = h_linearity_witness(compose(a.mult, sq.carrier.inclusion), *sq.module, A)) return w;
    return h_linearity_witness(eta, *U, A);
  });
  rep.run("algebra.associative", [&]() -> std::optional<Witness> {
    Subspace tri = triple_carrier(A, A, A);
    for (std::size_t k = 0; k < tri.dim(); ++k) {
      Tensor t({n, n, n}, tri.inclusion.column(k));
      Tensor lhs = contract(contract(t, 0, 1, a.mult), 0, 1, a.mult);
      Tensor rhs = contract(contract(t, 1, 2, a.mult), 0, 1, a.mult);
      if (lhs != rhs)
        return Witness{{"triple carrier vector " + std::to_string(k), render_tensor(t, {&A.labels(), &A.labels(), &A.labels()})},
                       render_tensor(lhs, one_leg), render_tensor(rhs, one_leg)};
    }
    return std::nullopt;
  });
  rep.run("algebra.unit", [&]() -> std::optional<Witness> {
    const auto ua = truncated_tensor(U, a.module);
    const auto au = truncated_tensor(a.module, U);
    const LinMap id = LinMap::identity(n);
    LinMap lhs = compose(compose(a.mult, tensor(eta, id)), ua.carrier.inclusion);
    if (auto w = compare(lhs, left_unitor(ua).forward, ua.module->labels(), one_leg, "mu(eta (x) id) = l")) return w;
    LinMap rhs = compose(compose(a.mult, tensor(id, eta)), au.carrier.inclusion);
    return compare(rhs, right_unitor(au).forward, au.module->labels(), one_leg, "mu(id (x) eta) = r");
  });
  return rep;
}

Report check_comodule_algebra(const ComoduleAlgebra& a, Side side) {
  const BraidedHopfAlgebra& B = *a.base;
  const HModule& A = *a.module;
  const auto& H = B.H();
  const std::size_t n = a.dim(), c = B.dim();
  const TruncatedTensor sq = truncated_tensor(a.module, a.module);
  auto sq_elem = [&](std::size_t k) { return Tensor({n, n}, sq.carrier.inclusion.column(k)); };
  const Tensor rmat = B.R().r();

  if (side == Side::Left) {
    Report rep("left _RH-comodule algebra " + a.name);
    if (!a.left) {
      rep.fail("left.present", Witness{{a.name}, "left coaction", "none"});
      return rep;
    }
    rep.merge(check_rh_comodule(a.left_comodule()), "left.");
    if (!rep.passed()) return rep;
    const LinMap& rho = *a.left;
    const Legs legs{&B.labels(), &A.labels()};
    rep.run("left.multiplicative", [&] {
      // rho(ab) = a_(-1)(R^2 |> b_(-1)) (x) (R^1 . a_(0)) b_(0)
      LinMap lhs = compose(rho, compose(a.mult, sq.carrier.inclusion));
      LinMap rhs = tabulate(c * n, sq.carrier.dim(), [&](std::size_t k) {
        Tensor t = coact(sq_elem(k), 0, rho, c, n);  // p, a0, b
        t = coact(t, 2, rho, c, n);                  // p, a0, q, b0
        t = outer(t, rmat);                          // p, a0, q, b0, R1, R2
        t = B.module->act_leg(t, 5, 2);
        t = A.act_leg(t, 4, 1);
        t = permute(t, {0, 2, 1, 3});  // p, q', a0', b0
        t = b_mul(B, t, 0, 1);
        return contract(t, 1, 2, a.mult).terms();
      });
      return compare(lhs, rhs, sq.module->labels(), legs, "rho^l(ab)");
    });
    rep.run("left.unit", [&]() -> std::optional<Witness> {
      SparseVec lhs = rho.apply(a.unit);
      SparseVec rhs = delta_one_projector(*B.module, A).apply(outer(Tensor::vector(c, B.one()), Tensor::vector(n, a.unit)).terms());
      if (vec_equal(lhs, rhs)) return std::nullopt;
      return Witness{{"1_A"}, render_tensor(Tensor({c, n}, rhs), legs), render_tensor(Tensor({c, n}, lhs), legs)};
    });
    return rep;
  }

  Report rep("right _RH-comodule algebra " + a.name);
  if (!a.right) {
    rep.fail("right.present", Witness{{a.name}, "right coaction", "none"});
    return rep;
  }
  const LinMap& rho = *a.right;
  const Legs legs{&A.labels(), &B.labels()};
  auto rho_of = [&](std::size_t m) { return Tensor({n, c}, rho.column(m)); };
  const ModulePtr amb = ambient_tensor(A, *B.module);
  rep.run("right.truncated", [&] {
    return compare(compose(amb->rho_of(H.one()), rho), rho, A.labels(), legs, "rho^r(a) in A (x)_t _RH");
  });
  rep.run("right.h_linear", [&]() -> std::optional<Witness> {
    for (std::size_t h = 0; h < H.dim(); ++h)
      if (auto w = compare(compose(rho, A.rho(h)), compose(amb->rho(h), rho), A.labels(), legs, "h=" + H.labels()[h]))
        return w;
    return std::nullopt;
  });
  rep.run("right.coassociative", [&] {
    LinMap lhs = tabulate(n * c * c, n, [&](std::size_t m) { return coact(rho_of(m), 0, rho, n, c).terms(); });
    LinMap rhs = tabulate(n * c * c, n, [&](std::size_t m) { return b_comul(B, rho_of(m), 1).terms(); });
    return compare(lhs, rhs, A.labels(), {&A.labels(), &B.labels(), &B.labels()}, "coassociativity");
  });
  rep.run("right.counit", [&] {
    const LinMap s_eps = compose(H.antipode_map(), compose(H.target().inclusion, B.counit_bar));
    LinMap lhs = tabulate(n, n, [&](std::size_t m) { return A.act_leg(map_leg(rho_of(m), 1, s_eps), 1, 0).terms(); });
    return compare(lhs, LinMap::identity(n), A.labels(), {&A.labels()}, "S(eps_t(a_(1))) . a_(0)");
  });
  if (!rep.passed()) return rep;
  rep.run("right.multiplicative", [&] {
    // rho(ab) = a_(0)(R^2 . b_(0)) (x) (R^1 |> a_(1)) b_(1)
    LinMap lhs = compose(rho, compose(a.mult, sq.carrier.inclusion));
    LinMap rhs = tabulate(n * c, sq.carrier.dim(), [&](std::size_t k) {
      Tensor t = coact(sq_elem(k), 0, rho, n, c);  // a0, a1, b
      t = coact(t, 2, rho, n, c);                  // a0, a1, b0, b1
      t = outer(t, rmat);
      t = A.act_leg(t, 5, 2);
      t = B.module->act_leg(t, 4, 1);
      t = permute(t, {0, 2, 1, 3});  // a0, b0', a1', b1
      t = contract(t, 0, 1, a.mult);
      return b_mul(B, t, 1, 2).terms();
    });
    return compare(lhs, rhs, sq.module->labels(), legs, "rho^r(ab)");
  });
  rep.run("right.unit", [&]() -> std::optional<Witness> {
    SparseVec lhs = rho.apply(a.unit);
    SparseVec rhs = amb->rho_of(H.one()).apply(outer(Tensor::vector(n, a.unit), Tensor::vector(c, B.one())).terms());
    if (vec_equal(lhs, rhs)) return std::nullopt;
    return Witness{{"1_A"}, render_tensor(Tensor({n, c}, rhs), legs), render_tensor(Tensor({n, c}, lhs), legs)};
  });
  return rep;
}

Report check_bicomodule(const ComoduleAlgebra& a) {
  Report rep("bicomodule " + a.name);
  if (!a.left || !a.right) {
    rep.fail("bicomodule.present", Witness{{a.name}, "both coactions", a.left ? "left only" : "right only"});
    return rep;
  }
  const std::size_t n = a.dim(), c = a.base->dim();
  const auto& bl = a.base->labels();
  rep.run("bicomodule.coactions_commute", [&] {
    LinMap lhs = tabulate(c * n * c, n, [&](std::size_t m) {
      return coact(Tensor({n, c}, a.right->column(m)), 0, *a.left, c, n).terms();
    });
    LinMap rhs = tabulate(c * n * c, n, [&](std::size_t m) {
      return coact(Tensor({c, n}, a.left->column(m)), 1, *a.right, n, c).terms();
    });
    return compare(lhs, rhs, a.labels(), {&bl, &a.labels(), &bl}, "(rho^l (x) id) rho^r");
  });
  return rep;
}

Subspace coinvariants(const ComoduleAlgebra& a, Side side) {
  const BraidedHopfAlgebra& B = *a.base;
  const std::size_t n = a.dim(), c = B.dim();
  if (side == Side::Right) {
    if (!a.right) throw Error(ErrorKind::InvalidInput, a.name + " has no right coaction");
    const LinMap p = delta_one_projector(*a.module, *B.module);
    LinMap diff = tabulate(n * c, n, [&](std::size_t m) {
      return sub(a.right->column(m), p.apply(outer(Tensor::vector(n, unit_vector(m)), Tensor::vector(c, B.one())).terms()));
    });
    return kernel(diff);
  }
  if (!a.left) throw Error(ErrorKind::InvalidInput, a.name + " has no left coaction");
  const LinMap p = delta_one_projector(*B.module, *a.module);
  LinMap diff = tabulate(c * n, n, [&](std::size_t m) {
    return sub(a.left->column(m), p.apply(outer(Tensor::vector(c, B.one()), Tensor::vector(n, unit_vector(m))).terms()));
  });
  return kernel(diff);
}

bool coinvariants_trivial(const ComoduleAlgebra& a, Side side) {
  return same_span(coinvariants(a, side), image(a.unit_map()));
}

LinMap galois_map_beta(const ComoduleAlgebra& a, Side side) {
  const BraidedHopfAlgebra& B = *a.base;
  const std::size_t n = a.dim(), c = B.dim();
  const TruncatedTensor sq = truncated_tensor(a.module, a.module);
  if (side == Side::Right) {
    const Subspace target = truncated_tensor(a.module, B.module).carrier;
    return restrict_formula(
        sq.carrier, target,
        [&](const SparseVec& x) {
          Tensor t = coact(Tensor({n, n}, x), 1, *a.right, n, c);  // a, b0, b1
          return contract(t, 0, 1, a.mult).terms();
        },
        ErrorKind::InvalidInput, "right Galois map");
  }
  const Subspace target = truncated_tensor(B.module, a.module).carrier;
  return restrict_formula(
      sq.carrier, target,
      [&](const SparseVec& x) {
        Tensor t = coact(Tensor({n, n}, x), 0, *a.left, c, n);  // a_(-1), a0, b
        return contract(t, 1, 2, a.mult).terms();
      },
      ErrorKind::InvalidInput, "left Galois map");
}

Report check_galois(const ComoduleAlgebra& a) {
  Report rep("Galois object " + a.name);
  if (!a.left || !a.right) {
    rep.fail("galois.coactions_present", Witness{{a.name}, "both coactions", a.left ? "left only" : "right only"});
    return rep;
  }
  rep.run("galois.right_map_bijective", [&] { return bijective(galois_map_beta(a, Side::Right), "beta_r"); });
  rep.run("galois.left_map_bijective", [&] { return bijective(galois_map_beta(a, Side::Left), "beta_l"); });
  const Subspace eta = image(a.unit_map());
  for (auto [side, name] : {std::pair{Side::Right, "right"}, std::pair{Side::Left, "left"}}) {
    rep.run(std::string("galois.") + name + "_coinvariants_trivial", [&, side = side]() -> std::optional<Witness> {
      Subspace co = coinvariants(a, side);
      if (same_span(co, eta)) return std::nullopt;
      return Witness{{a.name}, "coinvariants = eta(H_t) of dimension " + std::to_string(eta.dim()),
                     "coinvariants of dimension " + std::to_string(co.dim())};
    });
  }
  // Finite-dimensional surrogate for faithful flatness over H_t: A is nonzero
  // and H_t embeds through the unit.
  rep.run("galois.faithfully_flat_surrogate", [&]() -> std::optional<Witness> {
    const std::size_t t = a.H().target().dim();
    if (a.dim() > 0 && eta.dim() == t) return std::nullopt;
    return Witness{{a.name}, "injective unit H_t -> A of rank " + std::to_string(t),
                   "dim A = " + std::to_string(a.dim()) + ", rank " + std::to_string(eta.dim())};
  });
  return rep;
}

bool is_galois(const ComoduleAlgebra& a) { return check_galois(a).passed(); }

Report check_cocommutative(const ComoduleAlgebra& a) {
  Report rep("cocommutativity of " + a.name);
  rep.run("cocommutative.right_is_tau_of_left", [&]() -> std::optional<Witness> {
    if (!a.left || !a.right) return Witness{{a.name}, "both coactions", "missing coaction"};
    const TruncatedTensor ba = truncated_tensor(a.base->module, a.module);
    const LinMap tau = half_braiding_tau(*a.base, ba);
    LinMap lhs = compose(tau, compose(ba.carrier.projection, *a.left));
    return compare(lhs, *a.right, a.labels(), {&a.labels(), &a.base->labels()}, "tau rho^l = rho^r");
  });
  return rep;
}

Report check_quantum_commutative(const ComoduleAlgebra& a) {
  Report rep("quantum commutativity of " + a.name);
  rep.run("quantum_commutative.braided_product", [&]() -> std::optional<Witness> {
    if (!a.left) return Witness{{a.name}, "left coaction", "none"};
    const TruncatedTensor sq = truncated_tensor(a.module, a.module);
    const LinMap braid = yd_braiding_full(functor_F(a.left_comodule()), *a.module);
    LinMap lhs = compose(a.mult, sq.carrier.inclusion);
    LinMap rhs = compose(a.mult, compose(braid, sq.carrier.inclusion));
    return compare(lhs, rhs, sq.module->labels(), {&a.labels()}, "mu = mu C");
  });
  return rep;
}

bool is_cocommutative(const ComoduleAlgebra& a) { return check_cocommutative(a).passed(); }
bool is_quantum_commutative(const ComoduleAlgebra& a) { return check_quantum_commutative(a).passed(); }

Cotensor cotensor(const ModulePtr& m, const LinMap& right, const std::optional<LinMap>& left, const RHComodule& n) {
  const BraidedHopfAlgebra& B = *n.base;
  const std::size_t dm = m->dim(), dn = n.module->dim(), c = B.dim();
  const TruncatedTensor mn = truncated_tensor(m, n.module);
  LinMap constraint = tabulate(dm * c * dn, mn.carrier.dim(), [&](std::size_t k) {
    Tensor t({dm, dn}, mn.carrier.inclusion.column(k));
    return (coact(t, 0, right, dm, c) - coact(t, 1, n.coaction, c, dn)).terms();
  });
  Cotensor out;
  out.space = image(compose(mn.carrier.inclusion, kernel(constraint).inclusion));
  out.module = submodule(*ambient_tensor(*m, *n.module), out.space, m->name() + " box " + n.module->name());
  if (left) {
    const std::size_t s = out.space.dim();
    LinMap coaction = tabulate(c * s, s, [&](std::size_t k) {
      Tensor t = coact(Tensor({dm, dn}, out.space.inclusion.column(k)), 0, *left, c, dm);  // b, a, n
      return legs_to_subspace(t, 1, out.space, ErrorKind::CoactionEscapesCarrier, "inherited coaction").terms();
    });
    out.comodule = RHComodule{n.base, out.module, std::move(coaction)};
  }
  return out;
}

Cotensor cotensor(const ComoduleAlgebra& a, const RHComodule& n) {
  if (!a.right) throw Error(ErrorKind::InvalidInput, a.name + " has no right coaction");
  return cotensor(a.module, *a.right, a.left, n);
}

LinMap xi_full(const ComoduleAlgebra& a, const Cotensor& am, const Cotensor& an, const HModule& m) {
  const std::size_t da = a.dim(), dm = m.dim(), dn = an.space.ambient / da;
  const std::size_t s = am.space.dim(), r = an.space.dim();
  const Tensor rmat = a.base->R().r();
  return tabulate(da * dm * dn, s * r, [&](std::size_t j) {
    Tensor t({s, r}, unit_vector(j));
    t = apply(t, {0}, am.space.inclusion, {da, dm}, 0);  // a, m, y
    t = apply(t, {2}, an.space.inclusion, {da, dn}, 2);  // a, m, b, n
    t = outer(t, rmat);                                  // a, m, b, n, R1, R2
    t = a.module->act_leg(t, 5, 2);
    t = m.act_leg(t, 4, 1);  // a, R1 . m, R2 . b, n
    return contract(t, 0, 2, a.mult).terms();
  });
}

LinMap xi_iso(const ComoduleAlgebra& a, const RHComodule& m, const RHComodule& n) {
  const Cotensor am = cotensor(a, m), an = cotensor(a, n);
  const TruncatedTensor dom = truncated_tensor(am.module, an.module);
  const ComoduleTensor mn = comodule_tensor(m, n);
  const Cotensor target = cotensor(a, mn.comodule);
  const LinMap full = xi_full(a, am, an, *m.module);
  const std::size_t da = a.dim(), dm = m.module->dim(), dn = n.module->dim();
  LinMap xi = tabulate(target.space.dim(), dom.carrier.dim(), [&](std::size_t k) {
    Tensor t({da, dm, dn}, full.apply(dom.carrier.inclusion.column(k)));
    t = legs_to_subspace(t, 1, mn.tensor.carrier, ErrorKind::XiNotBijective, "xi leaves A (x) (M (x)_t N)");
    return legs_to_subspace(t, 0, target.space, ErrorKind::XiNotBijective, "xi leaves A box (M (x)_t N)").terms();
  });
  if (auto w = bijective(xi, "xi"))
    throw Error(ErrorKind::XiNotBijective, "xi on " + m.module->name() + ", " + n.module->name() + " is a " +
                                               w->actual);
  return xi;
}

std::optional<Witness> autoequivalence_witness(const ComoduleAlgebra& a, const RHComodule& m, const RHComodule& n) {
  const Cotensor am = cotensor(a, m), an = cotensor(a, n);
  const Subspace dom = truncated_tensor(am.module, an.module).carrier;
  const LinMap lhs = compose(xi_full(a, an, am, *n.module), comodule_braiding_full(*am.comodule, *an.module));
  const LinMap rhs =
      compose(tensor(LinMap::identity(a.dim()), comodule_braiding_full(m, *n.module)), xi_full(a, am, an, *m.module));
  auto w = first_difference(compose(lhs, dom.inclusion), compose(rhs, dom.inclusion),
                            [](std::size_t k) { return std::vector<std::string>{"carrier vector " + std::to_string(k)}; },
                            tensor_renderer({&a.labels(), &n.module->labels(), &m.module->labels()}));
  if (w) w->indices.insert(w->indices.begin(), "(" + m.module->name() + ", " + n.module->name() + ")");
  return w;
}

Report check_autoequivalence_diagram(const ComoduleAlgebra& a,
                                     const std::vector<std::pair<RHComodule, RHComodule>>& pairs) {
  Report rep("braided autoequivalence diagram for " + a.name);
  rep.run("xi.bijective", [&]() -> std::optional<Witness> {
    for (const auto& [m, n] : pairs) xi_iso(a, m, n);
    return std::nullopt;
  });
  rep.run("autoequivalence.diagram", [&]() -> std::optional<Witness> {
    for (const auto& [m, n] : pairs)
      if (auto w = autoequivalence_witness(a, m, n)) return w;
    return std::nullopt;
  });
  return rep;
}

namespace {

// phi : X -> M between comodules, checked bijective, H-linear and colinear.
std::optional<Witness> comodule_iso_witness(const LinMap& phi, const RHComodule& x, const RHComodule& m,
                                            const std::string& where) {
  if (auto w = bijective(phi, where)) return w;
  if (auto w = h_linearity_witness(phi, *x.module, *m.module)) {
    w->indices.insert(w->indices.begin(), where + " H-linearity");
    return w;
  }
  const LinMap lhs = compose(m.coaction, phi);
  const LinMap rhs = compose(tensor(LinMap::identity(x.base->dim()), phi), x.coaction);
  return compare(lhs, rhs, x.module->labels(), {&x.base->labels(), &m.module->labels()}, where + " colinearity");
}

}  // namespace

Report check_identity_cotensor(const BraidedPtr& b, const std::vector<RHComodule>& samples) {
  Report rep("_RH box M = M over " + b->H().name());
  const AlgebraObj rh = rh_comodule_algebra(b);
  const LinMap eps = compose(b->H().target().inclusion, b->counit_bar);
  rep.run("identity_object.dimension", [&]() -> std::optional<Witness> {
    for (const auto& m : samples) {
      const auto bm = cotensor(*rh, m);
      if (bm.space.dim() != m.module->dim())
        return Witness{{m.module->name()}, std::to_string(m.module->dim()), std::to_string(bm.space.dim())};
    }
    return std::nullopt;
  });
  rep.run("identity_object.canonical_iso", [&]() -> std::optional<Witness> {
    for (const auto& m : samples) {
      const auto bm = cotensor(*rh, m);
      const std::size_t dm = m.module->dim();
      LinMap phi = tabulate(dm, bm.space.dim(), [&](std::size_t k) {
        Tensor t = map_leg(Tensor({b->dim(), dm}, bm.space.inclusion.column(k)), 0, eps);
        return m.module->act_leg(t, 0, 1).terms();
      });
      if (auto w = comodule_iso_witness(phi, *bm.comodule, m, "_RH box " + m.module->name())) return w;
    }
    return std::nullopt;
  });
  return rep;
}

Report check_trivializable(const ComoduleAlgebra& a, const std::vector<ModulePtr>& plain, std::uint64_t seed) {
  Report rep("trivializability of " + a.name);
  const BraidedPtr& b = a.base;
  const Subspace& T = a.H().target();
  Subspace eta_img;
  const LinMap eta_inv = unit_inverse(a, eta_img);
  Lcg rng(seed);

  // a (x) m -> eta^-1(a) . m on A box M
  auto canonical = [&](const Cotensor& am, const HModule& m) -> std::variant<LinMap, Witness> {
    const std::size_t n = a.dim();
    std::optional<Witness> bad;
    LinMap phi = tabulate(m.dim(), am.space.dim(), [&](std::size_t k) {
      Tensor t({n, m.dim()}, am.space.inclusion.column(k));
      auto z = leg_in(t, 0, eta_img);
      if (!z) {
        if (!bad) bad = Witness{{m.name(), "basis vector " + std::to_string(k)}, "A leg in eta(H_t)",
                                render_tensor(t, {&a.labels(), &m.labels()})};
        return SparseVec{};
      }
      Tensor u = map_leg(map_leg(t, 0, eta_inv), 0, T.inclusion);
      return m.act_leg(u, 0, 1).terms();
    });
    if (bad) return *bad;
    return phi;
  };

  std::vector<Cotensor> boxes;
  std::vector<RHComodule> trivial;
  for (const auto& m : plain) {
    trivial.push_back(trivial_comodule(b, m));
    boxes.push_back(cotensor(a, trivial.back()));
  }
  rep.run("trivializable.dimension", [&]() -> std::optional<Witness> {
    for (std::size_t i = 0; i < plain.size(); ++i)
      if (boxes[i].space.dim() != plain[i]->dim())
        return Witness{{plain[i]->name()}, std::to_string(plain[i]->dim()), std::to_string(boxes[i].space.dim())};
    return std::nullopt;
  });
  std::vector<LinMap> phis;
  rep.run("trivializable.canonical_iso", [&]() -> std::optional<Witness> {
    for (std::size_t i = 0; i < plain.size(); ++i) {
      auto phi = canonical(boxes[i], *plain[i]);
      if (auto* w = std::get_if<Witness>(&phi)) return *w;
      const LinMap& f = std::get<LinMap>(phi);
      if (auto w = comodule_iso_witness(f, *boxes[i].comodule, trivial[i], a.name + " box " + plain[i]->name()))
        return w;
      phis.push_back(f);
    }
    return std::nullopt;
  });
  if (!rep.passed()) return rep;
  rep.run("trivializable.natural", [&]() -> std::optional<Witness> {
    for (std::size_t i = 0; i < plain.size(); ++i)
      for (std::size_t j = 0; j < plain.size(); ++j) {
        Subspace hom = hom_space(*plain[i], *plain[j]);
        if (hom.dim() == 0) continue;
        for (int s = 0; s < 2; ++s) {
          LinMap f = unflatten(random_combination(hom, rng), plain[j]->dim(), plain[i]->dim());
          LinMap lifted = compose(boxes[j].space.projection,
                                  compose(tensor(LinMap::identity(a.dim()), f), boxes[i].space.inclusion));
          LinMap lhs = compose(f, phis[i]);
          LinMap rhs = compose(phis[j], lifted);
          auto w = first_difference(lhs, rhs, label_namer({}), [](const SparseVec& v) { return render_vec(v); });
          if (w) {
            w->indices.insert(w->indices.begin(), plain[i]->name() + " -> " + plain[j]->name());
            return w;
          }
        }
      }
    return std::nullopt;
  });
  return rep;
}

AlgebraObj cotensor_algebra(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
  if (!b.left || !b.right) throw Error(ErrorKind::InvalidInput, b.name + " needs both coactions");
  const Cotensor ab = cotensor(a, b.left_comodule());
  const std::size_t da = a.dim(), db = b.dim(), s = ab.space.dim(), c = a.base->dim();
  const LinMap braid = braiding_full(a.base->R(), *b.module, *a.module);  // b (x) a' -> R2 . a' (x) R1 . b
  LinMap mult = tabulate(s, s * s, [&](std::size_t j) {
    Tensor t = outer(Tensor({da, db}, ab.space.inclusion.column(j / s)),
                     Tensor({da, db}, ab.space.inclusion.column(j % s)));  // a, b, a', b'
    t = apply(t, {1, 2}, braid, {da, db}, 1);                               // a, R2 . a', R1 . b, b'
    t = contract(t, 0, 1, a.mult);
    t = contract(t, 1, 2, b.mult);
    return legs_to_subspace(t, 0, ab.space, ErrorKind::InvalidInput, "product leaves the cotensor product").terms();
  });
  SparseVec unit = delta_one_projector(*a.module, *b.module)
                       .apply(outer(Tensor::vector(da, a.unit), Tensor::vector(db, b.unit)).terms());
  if (!ab.space.contains(unit)) throw Error(ErrorKind::InvalidInput, "unit leaves the cotensor product");
  LinMap right = tabulate(s * c, s, [&](std::size_t k) {
    Tensor t = coact(Tensor({da, db}, ab.space.inclusion.column(k)), 1, *b.right, db, c);  // a, b0, b1
    return legs_to_subspace(t, 0, ab.space, ErrorKind::CoactionEscapesCarrier, "right coaction").terms();
  });
  return make_comodule_algebra(a.name + " box " + b.name, a.base, ab.module, mult, ab.space.project(unit),
                               ab.comodule->coaction, std::move(right));
}

Report certify_qc_galois(const ComoduleAlgebra& a) {
  Report rep("quantum commutative bi-Galois object " + a.name);
  rep.merge(check_algebra_in_cat(a));
  if (!rep.passed()) return rep;
  rep.merge(check_comodule_algebra(a, Side::Left));
  rep.merge(check_comodule_algebra(a, Side::Right));
  if (!rep.passed()) return rep;
  rep.merge(check_bicomodule(a));
  rep.merge(check_galois(a));
  rep.merge(check_cocommutative(a));
  rep.merge(check_quantum_commutative(a));
  return rep;
}

AlgebraObj twisted_klein_control(const BraidedPtr& b) {
  const auto& H = b->H();
  if (H.dim() != 4 || b->dim() != 4 || !H.field().is_rational())
    throw Error(ErrorKind::InvalidInput, "the twisted control needs the Klein four-group algebra");
  // Basis index x + 2y stands for u^x v^y; (u^x1 v^y1)(u^x2 v^y2) = (-1)^{y1 x2} u^{x1+x2} v^{y1+y2}.
  VectorSpace space{4, {"1", "u", "v", "uv"}};
  std::vector<LinMap> action;
  for (std::size_t h = 0; h < 4; ++h) action.push_back(scale(LinMap::identity(4), H.counit(unit_vector(h))));
  ModulePtr module = make_module(b->base->algebra(), std::move(space), std::move(action), "klein_twisted");
  LinMap mult = tabulate(4, 16, [](std::size_t j) {
    const std::size_t x = j / 4, y = j % 4;
    const bool sign = (x >> 1) & y & 1;
    return unit_vector(x ^ y, Scalar(sign ? -1 : 1));
  });
  LinMap left = tabulate(16, 4, [&](std::size_t g) {
    return outer(Tensor::vector(4, b->carrier.project(unit_vector(g))), Tensor::vector(4, unit_vector(g))).terms();
  });
  LinMap right = tabulate(16, 4, [&](std::size_t g) {
    return outer(Tensor::vector(4, unit_vector(g)), Tensor::vector(4, b->carrier.project(unit_vector(g)))).terms();
  });
  return make_comodule_algebra("klein_twisted", b, module, mult, unit_vector(0), std::move(left), std::move(right));
}

Report check_group_law(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
  Report rep("cotensor product " + a.name + " box " + b.name);
  AlgebraObj p;
  rep.run("group_law.cotensor_algebra", [&]() -> std::optional<Witness> {
    p = cotensor_algebra(a, b);
    return std::nullopt;
  });
  if (!p) return rep;
  rep.run("group_law.dimension", [&]() -> std::optional<Witness> {
    if (p->dim() == a.base->dim()) return std::nullopt;
    return Witness{{p->name}, "dim _RH = " + std::to_string(a.base->dim()), std::to_string(p->dim())};
  });
  rep.merge(certify_qc_galois(*p), "group_law.");
  return rep;
}

InverseObject inverse_galois_object(const ComoduleAlgebra& a) {
  if (!a.left || !a.right) throw Error(ErrorKind::InvalidInput, a.name + " needs both coactions");
  const BraidedHopfAlgebra& B = *a.base;
  const std::size_t n = a.dim(), c = B.dim();
  const TruncatedTensor ba = truncated_tensor(B.module, a.module);
  const ModulePtr amb = ambient_tensor(*B.module, *a.module);
  const LinMap p3 = ambient_tensor(*amb, *B.module)->rho_of(B.H().one());
  const Tensor rmat = B.R().r();
  // h (x) a -> h_(1) (x) R^2 . a_(0) (x) (R^1 |> h_(2)) a_(1), minus x (x)_t 1.
  LinMap constraint = tabulate(c * n * c, ba.carrier.dim(), [&](std::size_t k) {
    const SparseVec& x = ba.carrier.inclusion.column(k);
    Tensor t = b_comul(B, Tensor({c, n}, x), 0);  // h1, h2, a
    t = coact(t, 2, *a.right, n, c);              // h1, h2, a0, a1
    t = outer(t, rmat);
    t = a.module->act_leg(t, 5, 2);
    t = B.module->act_leg(t, 4, 1);
    t = permute(t, {0, 2, 1, 3});  // h1, a0', h2', a1
    t = b_mul(B, t, 2, 3);
    SparseVec trivial = p3.apply(outer(Tensor({c, n}, x), Tensor::vector(c, B.one())).terms());
    return sub(t.terms(), trivial);
  });
  const Subspace space = image(compose(ba.carrier.inclusion, kernel(constraint).inclusion));
  if (space.dim() != n)
    throw Error(ErrorKind::InverseConstructionFailed, "coinvariants of _RH (x) " + a.name + " have dimension " +
                                                          std::to_string(space.dim()) + ", expected " +
                                                          std::to_string(n));
  const std::size_t s = space.dim();
  const ModulePtr module = submodule(*amb, space, "(" + a.name + ")^-1");
  // (h (x) a)(k (x) b) = h (R^2 |> k) (x) mu^op(R^1 . a (x) b), mu^op = mu c_{A,A}
  const LinMap braid_ab = braiding_full(B.R(), *a.module, *B.module);
  const LinMap mu_op = compose(a.mult, braiding_full(B.R(), *a.module, *a.module));
  LinMap mult = tabulate(s, s * s, [&](std::size_t j) {
    Tensor t = outer(Tensor({c, n}, space.inclusion.column(j / s)), Tensor({c, n}, space.inclusion.column(j % s)));
    t = apply(t, {1, 2}, braid_ab, {c, n}, 1);  // h, R2 |> k, R1 . a, b
    t = b_mul(B, t, 0, 1);
    t = contract(t, 1, 2, mu_op);
    return legs_to_subspace(t, 0, space, ErrorKind::InverseConstructionFailed, "product leaves the coinvariants")
        .terms();
  });
  SparseVec unit = amb->rho_of(B.H().one()).apply(outer(Tensor::vector(c, B.one()), Tensor::vector(n, a.unit)).terms());
  if (!space.contains(unit)) throw Error(ErrorKind::InverseConstructionFailed, "unit is not coinvariant");
  LinMap left = tabulate(c * s, s, [&](std::size_t k) {
    Tensor t = b_comul(B, Tensor({c, n}, space.inclusion.column(k)), 0);  // h1, h2, a
    return legs_to_subspace(t, 1, space, ErrorKind::InverseConstructionFailed, "left coaction").terms();
  });
  const TruncatedTensor bi = truncated_tensor(a.base->module, module);
  LinMap right = compose(half_braiding_tau(B, bi), compose(bi.carrier.projection, left));
  return InverseObject{make_comodule_algebra("(" + a.name + ")^-1", a.base, module, mult, space.project(unit),
                                            std::move(left), std::move(right)),
                       space};
}

namespace {

// phi : P -> _RH checked as an isomorphism of bicomodule algebras.
void check_iso_to_base(Report& rep, const std::string& prefix, const ComoduleAlgebra& p, const LinMap& phi) {
  const BraidedHopfAlgebra& B = *p.base;
  const auto& bl = B.labels();
  const Legs one{&bl}, two{&bl, &bl};
  rep.run(prefix + ".bijective", [&] { return bijective(phi, p.name + " -> _RH"); });
  rep.run(prefix + ".h_linear", [&] { return h_linearity_witness(phi, *p.module, *B.module); });
  rep.run(prefix + ".unit", [&]() -> std::optional<Witness> {
    SparseVec img = phi.apply(p.unit);
    if (vec_equal(img, B.one())) return std::nullopt;
    return Witness{{"1"}, render_vec(B.one(), &bl), render_vec(img, &bl)};
  });
  rep.run(prefix + ".multiplicative", [&] {
    const Subspace sq = truncated_tensor(p.module, p.module).carrier;
    LinMap lhs = compose(phi, compose(p.mult, sq.inclusion));
    LinMap rhs = compose(B.mult_full, compose(tensor(phi, phi), sq.inclusion));
    return compare(lhs, rhs, {}, one, "phi(xy) = phi(x) phi(y)");
  });
  rep.run(prefix + ".left_colinear", [&] {
    return compare(compose(B.comult_full, phi), compose(tensor(LinMap::identity(B.dim()), phi), *p.left), p.labels(),
                   two, "comult phi = (id (x) phi) rho^l");
  });
  rep.run(prefix + ".right_colinear", [&] {
    return compare(compose(B.comult_full, phi), compose(tensor(phi, LinMap::identity(B.dim())), *p.right),
                   p.labels(), two, "comult phi = (phi (x) id) rho^r");
  });
}

}  // namespace

Report check_inverse(const ComoduleAlgebra& a, const InverseObject& inv) {
  Report rep("inverse of " + a.name);
  const ComoduleAlgebra& ai = *inv.algebra;
  rep.merge(certify_qc_galois(ai), "inverse.");
  const BraidedHopfAlgebra& B = *a.base;
  const std::size_t n = a.dim(), c = B.dim(), s = ai.dim();
  Subspace eta_img;
  const LinMap eta_inv = unit_inverse(a, eta_img);
  const LinMap s_incl = compose(B.H().antipode_map(), B.H().target().inclusion);
  const LinMap braid = braiding_full(B.R(), *a.module, *B.module);

  // t has legs (h, x) with x in eta(H_t); returns S(eta^-1(x)) |> h.
  auto finish = [&](const Tensor& t, std::optional<Witness>& bad, const std::string& where) {
    auto z = leg_in(t, 1, eta_img);
    if (!z) {
      if (!bad) bad = Witness{{where}, "product in eta(H_t)", render_tensor(t, {&B.labels(), &a.labels()})};
      return SparseVec{};
    }
    Tensor u = map_leg(map_leg(t, 1, eta_inv), 1, s_incl);
    return B.module->act_leg(u, 1, 0).terms();
  };

  for (bool right_product : {true, false}) {
    const std::string prefix = right_product ? "inverse.a_box_inverse" : "inverse.inverse_box_a";
    AlgebraObj p;
    Cotensor box;
    rep.run(prefix + ".cotensor_algebra", [&]() -> std::optional<Witness> {
      if (right_product) {
        p = cotensor_algebra(a, ai);
        box = cotensor(a, ai.left_comodule());
      } else {
        p = cotensor_algebra(ai, a);
        box = cotensor(ai, a.left_comodule());
      }
      return std::nullopt;
    });
    if (!p) continue;
    std::optional<Witness> bad;
    LinMap phi = tabulate(c, p->dim(), [&](std::size_t k) {
      if (right_product) {
        Tensor t({n, s}, box.space.inclusion.column(k));
        t = apply(t, {1}, inv.embedding.inclusion, {c, n}, 1);  // a, h, b
        t = apply(t, {0, 1}, braid, {c, n}, 0);                  // R2 |> h, R1 . a, b
        t = contract(t, 1, 2, a.mult);
        return finish(t, bad, "basis vector " + std::to_string(k));
      }
      Tensor t({s, n}, box.space.inclusion.column(k));
      t = apply(t, {0}, inv.embedding.inclusion, {c, n}, 0);  // h, a, b
      t = contract(t, 1, 2, a.mult);
      return finish(t, bad, "basis vector " + std::to_string(k));
    });
    rep.run(prefix + ".lands_in_unit", [&] { return bad; });
    if (bad) continue;
    check_iso_to_base(rep, prefix, *p, phi);
  }
  return rep;
}

}  // namespace whakit
