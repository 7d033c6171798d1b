#include "whakit/transmutation.hpp"

#include "whakit/verify.hpp"

namespace whakit {

SparseVec BraidedHopfAlgebra::one() const { return carrier.project(H().one()); }

Subspace centralizer_subalgebra(const WeakHopfAlgebra& h) {
  std::vector<SparseVec> gens;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Tensor t = outer(h.delta_one(), h.basis_elem(i));  // 1_1, 1_2, e_i
    t = h.S(t, 1);
    t = h.mul(t, 0, 2);  // 1_1 e_i, S(1_2)
    gens.push_back(h.mul(t, 0, 1).terms());
  }
  Subspace c = span(h.dim(), gens);
  for (const auto& x : c.inclusion.columns()) {
    for (const auto& y : h.source().inclusion.columns())
      if (!vec_equal(h.multiply(x, y), h.multiply(y, x)))
        throw Error(ErrorKind::InvalidInput, "centralizer candidate does not commute with H_s");
    for (const auto& z : c.inclusion.columns())
      if (!c.contains(h.multiply(x, z)))
        throw Error(ErrorKind::InvalidInput, "centralizer candidate is not closed under multiplication");
  }
  return c;
}

SparseVec to_carrier_pair(const BraidedHopfAlgebra& b, const Tensor& t, ErrorKind escape) {
  const auto& c = b.carrier;
  Tensor coords = map_leg(map_leg(t, 0, c.projection), 1, c.projection);
  if (map_leg(map_leg(coords, 0, c.inclusion), 1, c.inclusion) != t)
    throw Error(escape, "element of H (x) H has a leg outside the transmuted carrier");
  return coords.terms();
}

Tensor b_mul(const BraidedHopfAlgebra& b, const Tensor& t, std::size_t x, std::size_t y) {
  return contract(t, x, y, b.mult_full);
}

Tensor b_comul(const BraidedHopfAlgebra& b, const Tensor& t, std::size_t leg) {
  return apply(t, {leg}, b.comult_full, {b.dim(), b.dim()}, leg);
}

BraidedPtr transmute(const RMatrixPtr& rp) {
  require_certified(*rp);
  const RMatrix& R = *rp;
  const WeakHopfAlgebra& H = R.H();
  const AlgebraPtr& hp = R.algebra();
  auto b = std::make_shared<BraidedHopfAlgebra>();
  b->base = rp;
  b->carrier = centralizer_subalgebra(H);
  const Subspace& C = b->carrier;
  const std::size_t c = C.dim();

  std::vector<LinMap> action;
  for (std::size_t i = 0; i < H.dim(); ++i)
    action.push_back(restrict_formula(
        C, C, [&](const SparseVec& x) { return H.adjoint(outer(H.basis_elem(i), H.elem(x)), 0, 1).terms(); },
        ErrorKind::InvalidInput, "adjoint action"));
  VectorSpace space{c, {}};
  for (const auto& v : C.inclusion.columns()) {
    space.labels.push_back(v.size() == 1 && v.front().value.is_one() ? H.labels()[v.front().index]
                                                                    : "[" + render_vec(v, &H.labels()) + "]");
  }
  b->module = make_module(hp, std::move(space), std::move(action), "_RH");
  b->unit_module = unit_object(hp);
  b->square = truncated_tensor(b->module, b->module);

  // (1_1 |> a)(1_2 |> b) on the untruncated square.
  b->mult_full = tabulate(c, c * c, [&](std::size_t j) {
    Tensor t = outer(H.delta_one(), outer(H.elem(C.inclusion.column(j / c)), H.elem(C.inclusion.column(j % c))));
    t = H.adjoint(t, 0, 2);
    t = H.adjoint(t, 0, 2);
    SparseVec prod = H.mul(t, 0, 1).terms();
    if (!C.contains(prod)) throw Error(ErrorKind::InvalidInput, "transmuted product leaves the carrier");
    return C.project(prod);
  });
  b->mult_bar = compose(b->mult_full, b->square.carrier.inclusion);
  b->unit_bar = restrict_formula(
      H.target(), C, [](const SparseVec& z) { return z; }, ErrorKind::InvalidInput, "unit");

  // x_1 S(R^2) (x) R^1 |> x_2
  b->comult_full = tabulate(c * c, c, [&](std::size_t j) {
    Tensor t = outer(H.comul(H.elem(C.inclusion.column(j)), 0), R.r());  // x1, x2, R1, R2
    t = H.S(t, 3);
    t = H.mul(t, 0, 3);         // x1 S(R2), x2, R1
    t = H.adjoint(t, 2, 1);     // x1 S(R2), R1 |> x2
    return to_carrier_pair(*b, t, ErrorKind::ComultiplicationEscapesCarrier);
  });
  b->comult_bar = restrict_formula(
      whole_space(c), b->square.carrier, [&](const SparseVec& x) { return b->comult_full.apply(x); },
      ErrorKind::ComultiplicationEscapesCarrier, "transmuted comultiplication");
  b->counit_bar = restrict_formula(
      C, H.target(), [&](const SparseVec& x) { return H.epsilon_t(x); }, ErrorKind::InvalidInput, "counit");

  // R^2 R'^2 S(R^1 x S(R'^1))
  const Tensor rr = outer(R.r(), R.r());
  b->antipode_bar = restrict_formula(
      C, C,
      [&](const SparseVec& x) {
        Tensor t = outer(rr, H.elem(x));  // a1, a2, b1, b2, x
        t = H.S(t, 2);
        t = H.mul(t, 0, 4);  // a1 x, a2, S(b1), b2
        t = H.mul(t, 0, 2);  // a1 x S(b1), a2, b2
        t = H.S(t, 0);
        t = H.mul(t, 1, 2);  // S(..), a2 b2
        return H.mul(t, 1, 0).terms();
      },
      ErrorKind::InvalidInput, "transmuted antipode");
  return b;
}

LinMap half_braiding_tau(const BraidedHopfAlgebra& b, const TruncatedTensor& bm) {
  const auto& H = b.H();
  const auto& M = *bm.right;
  const Subspace& C = b.carrier;
  const Tensor rr = outer(b.R().r(), b.R().r());
  return tabulate(M.dim() * b.dim(), bm.carrier.dim(), [&](std::size_t k) {
    Tensor x = map_leg(Tensor({b.dim(), M.dim()}, bm.carrier.inclusion.column(k)), 0, C.inclusion);
    Tensor t = outer(rr, x);  // r1, r2, R1, R2, h, m
    t = H.mul(t, 1, 2);       // r1, r2 R1, R2, h, m
    t = M.act_leg(t, 1, 4);   // r1, R2, h, m'
    t = H.mul(t, 0, 2);       // r1 h, R2, m'
    t = H.mul(t, 0, 1);       // r1 h R2, m'
    t = permute(t, {1, 0});
    Tensor coords = map_leg(t, 1, C.projection);
    if (map_leg(coords, 1, C.inclusion) != t)
      throw Error(ErrorKind::CoactionEscapesCarrier, "half-braiding leaves the transmuted carrier");
    return coords.terms();
  });
}

namespace {

std::optional<Witness> compare_on_basis(const BraidedHopfAlgebra& b, std::size_t n,
                                        const std::function<Tensor(std::size_t)>& lhs,
                                        const std::function<Tensor(std::size_t)>& rhs,
                                        const std::function<std::string(std::size_t)>& name) {
  for (std::size_t k = 0; k < n; ++k) {
    Tensor x = lhs(k), y = rhs(k);
    if (x != y) {
      std::vector<const std::vector<std::string>*> legs(x.legs(), &b.labels());
      return Witness{{name(k)}, render_tensor(x, legs), render_tensor(y, legs)};
    }
  }
  return std::nullopt;
}

}  // namespace

Report check_braided_hopf(const BraidedHopfAlgebra& b) {
  Report rep("braided Hopf algebra _RH over " + b.H().name());
  const auto& H = b.H();
  const std::size_t c = b.dim();
  const Subspace& sq = b.square.carrier;
  const ModulePtr& U = b.unit_module;
  const std::size_t t = U->dim();
  const LinMap braid = braiding_full(b.R(), *b.module, *b.module);
  auto sq_elem = [&](std::size_t k) { return Tensor({c, c}, sq.inclusion.column(k)); };
  auto sq_name = [&](std::size_t k) { return b.square.module->labels()[k]; };
  auto c_name = [&](std::size_t k) { return b.labels()[k]; };
  auto c_elem = [&](std::size_t k) { return Tensor::vector(c, unit_vector(k)); };

  rep.run("maps.h_linear", [&]() -> std::optional<Witness> {
    if (auto w = h_linearity_witness(b.mult_bar, *b.square.module, *b.module)) return w;
    if (auto w = h_linearity_witness(b.unit_bar, *U, *b.module)) return w;
    if (auto w = h_linearity_witness(b.comult_bar, *b.module, *b.square.module)) return w;
    if (auto w = h_linearity_witness(b.counit_bar, *b.module, *U)) return w;
    return h_linearity_witness(b.antipode_bar, *b.module, *b.module);
  });
  rep.run("mult.associative", [&]() {
    Subspace tri = triple_carrier(*b.module, *b.module, *b.module);
    return compare_on_basis(
        b, tri.dim(),
        [&](std::size_t k) { return b_mul(b, b_mul(b, Tensor({c, c, c}, tri.inclusion.column(k)), 0, 1), 0, 1); },
        [&](std::size_t k) { return b_mul(b, b_mul(b, Tensor({c, c, c}, tri.inclusion.column(k)), 1, 2), 0, 1); },
        [](std::size_t k) { return "triple carrier vector " + std::to_string(k); });
  });
  rep.run("mult.unit", [&]() -> std::optional<Witness> {
    const auto ub = truncated_tensor(U, b.module);
    const auto bu = truncated_tensor(b.module, U);
    const LinMap id = LinMap::identity(c);
    auto render = [&](const SparseVec& v) { return render_vec(v, &b.labels()); };
    LinMap lhs = compose(compose(b.mult_full, tensor(b.unit_bar, id)), ub.carrier.inclusion);
    if (auto w = first_difference(lhs, left_unitor(ub).forward, label_namer(ub.module->labels()), render)) return w;
    LinMap rhs = compose(compose(b.mult_full, tensor(id, b.unit_bar)), bu.carrier.inclusion);
    return first_difference(rhs, right_unitor(bu).forward, label_namer(bu.module->labels()), render);
  });
  rep.run("comult.coassociative", [&] {
    return compare_on_basis(
        b, c, [&](std::size_t k) { return b_comul(b, b_comul(b, c_elem(k), 0), 0); },
        [&](std::size_t k) { return b_comul(b, b_comul(b, c_elem(k), 0), 1); }, c_name);
  });
  rep.run("comult.counit", [&]() -> std::optional<Witness> {
    // l((eps (x) id) comult(x)) = x = r((id (x) eps) comult(x))
    const Subspace& T = H.target();
    const LinMap s_incl = compose(H.antipode_map(), T.inclusion);
    auto left = [&](std::size_t k) {
      Tensor x = map_leg(b_comul(b, c_elem(k), 0), 0, compose(T.inclusion, b.counit_bar));
      return b.module->act_leg(x, 0, 1);
    };
    auto right = [&](std::size_t k) {
      Tensor x = map_leg(b_comul(b, c_elem(k), 0), 1, compose(s_incl, b.counit_bar));
      return b.module->act_leg(x, 1, 0);
    };
    if (auto w = compare_on_basis(b, c, left, c_elem, c_name)) return w;
    return compare_on_basis(b, c, right, c_elem, c_name);
  });
  rep.run("bialgebra.compatibility", [&] {
    return compare_on_basis(
        b, sq.dim(), [&](std::size_t k) { return b_comul(b, b_mul(b, sq_elem(k), 0, 1), 0); },
        [&](std::size_t k) {
          Tensor x = b_comul(b, b_comul(b, sq_elem(k), 1), 0);  // a1, a2, b1, b2
          x = apply(x, {1, 2}, braid, {c, c}, 1);               // a1, b1', a2', b2
          x = b_mul(b, x, 0, 1);
          return b_mul(b, x, 1, 2);
        },
        sq_name);
  });
  rep.run("counit.multiplicative", [&]() -> std::optional<Witness> {
    // eps_t(ab) = eps_t(eps_t(a) eps_t(b)) on the truncated square
    for (std::size_t k = 0; k < sq.dim(); ++k) {
      Tensor x = map_leg(sq_elem(k), 0, b.carrier.inclusion);
      x = map_leg(x, 1, b.carrier.inclusion);
      SparseVec lhs = H.epsilon_t(b.carrier.include(b.mult_bar.column(k)));
      Tensor e = map_leg(map_leg(x, 0, H.eps_t_map()), 1, H.eps_t_map());
      SparseVec rhs = H.epsilon_t(H.mul(e, 0, 1).terms());
      if (!vec_equal(lhs, rhs)) return Witness{{sq_name(k)}, render_vec(lhs, &H.labels()), render_vec(rhs, &H.labels())};
    }
    return std::nullopt;
  });
  rep.run("unit.counit_and_comult", [&]() -> std::optional<Witness> {
    auto render_t = [&](const SparseVec& v) { return render_vec(v); };
    LinMap eu = compose(b.counit_bar, b.unit_bar);
    if (auto w = first_difference(eu, LinMap::identity(t), label_namer(U->labels()), render_t)) return w;
    // comult(unit(z)) = unit(eps_t(1_1)) (x) unit(eps_t(1_2 z))
    for (std::size_t k = 0; k < t; ++k) {
      SparseVec z = H.target().inclusion.column(k);
      Tensor lhs = b_comul(b, Tensor::vector(c, b.unit_bar.column(k)), 0);
      Tensor u = outer(H.delta_one(), H.elem(z));
      u = H.mul(u, 1, 2);
      u = map_leg(map_leg(u, 0, H.eps_t_map()), 1, H.eps_t_map());
      Tensor rhs({c, c}, to_carrier_pair(b, u, ErrorKind::InvalidInput));
      if (lhs != rhs)
        return Witness{{U->labels()[k]}, render_tensor(lhs), render_tensor(rhs)};
    }
    return std::nullopt;
  });
  rep.run("antipode.laws", [&]() -> std::optional<Witness> {
    auto unit_counit = [&](std::size_t k) {
      return Tensor::vector(c, b.unit_bar.apply(b.counit_bar.column(k)));
    };
    auto left = [&](std::size_t k) { return b_mul(b, map_leg(b_comul(b, c_elem(k), 0), 0, b.antipode_bar), 0, 1); };
    auto right = [&](std::size_t k) { return b_mul(b, map_leg(b_comul(b, c_elem(k), 0), 1, b.antipode_bar), 0, 1); };
    if (auto w = compare_on_basis(b, c, left, unit_counit, c_name)) return w;
    return compare_on_basis(b, c, right, unit_counit, c_name);
  });
  return rep;
}

Report check_cocommutative_surrogate(const BraidedHopfAlgebra& b) {
  Report rep("cocommutativity surrogate for _RH over " + b.H().name());
  rep.run("tau.fixes_comultiplication", [&]() -> std::optional<Witness> {
    const LinMap tau = half_braiding_tau(b, b.square);
    const LinMap lhs = compose(tau, b.comult_bar);
    std::vector<const std::vector<std::string>*> legs(2, &b.labels());
    return first_difference(lhs, b.comult_full, label_namer(b.labels()), tensor_renderer(legs));
  });
  return rep;
}

}  // namespace whakit
