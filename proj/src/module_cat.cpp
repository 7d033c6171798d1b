#include "whakit/module_cat.hpp"

#include "whakit/verify.hpp"

namespace whakit {

HModule::HModule(AlgebraPtr h, VectorSpace space, std::vector<LinMap> action, std::string name)
    : algebra_(std::move(h)), space_(std::move(space)), action_(std::move(action)), name_(std::move(name)) {
  const std::size_t d = algebra_->dim();
  const std::size_t n = space_.dim;
  if (space_.labels.size() != n) space_ = VectorSpace::numbered(n, "m");
  if (action_.size() != d)
    throw Error(ErrorKind::DimensionMismatch, "module needs one operator per basis element of " + algebra_->name());
  for (const auto& a : action_)
    if (a.rows() != n || a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "module operator has wrong shape");
  std::vector<SparseVec> cols;
  cols.reserve(d * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t m = 0; m < n; ++m) cols.push_back(action_[i].column(m));
  packed_ = LinMap(n, d * n, std::move(cols));
}

LinMap HModule::rho_of(const SparseVec& h) const {
  LinMap out = LinMap::zero(dim(), dim());
  for (const auto& e : h) out = add(out, scale(action_[e.index], e.value));
  return out;
}

SparseVec HModule::act(const SparseVec& h, const SparseVec& m) const {
  SparseVec out;
  for (const auto& e : h) axpy(out, e.value, action_[e.index].apply(m));
  return out;
}

Tensor HModule::act_leg(const Tensor& t, std::size_t h_leg, std::size_t m_leg) const {
  return apply(t, {h_leg, m_leg}, packed_, {dim()}, h_leg < m_leg ? m_leg - 1 : m_leg);
}

ModulePtr make_module(AlgebraPtr h, VectorSpace space, std::vector<LinMap> action, std::string name) {
  return std::make_shared<const HModule>(std::move(h), std::move(space), std::move(action), std::move(name));
}

ModulePtr regular_module(const AlgebraPtr& h) {
  std::vector<LinMap> action;
  for (std::size_t i = 0; i < h->dim(); ++i) action.push_back(h->left_mult(i));
  return make_module(h, h->data().space, std::move(action), "regular");
}

ModulePtr unit_object(const AlgebraPtr& h) {
  const auto& t = h->target();
  std::vector<LinMap> action;
  for (std::size_t i = 0; i < h->dim(); ++i)
    action.push_back(restrict_formula(
        t, t, [&](const SparseVec& z) { return h->epsilon_t(h->multiply(unit_vector(i), z)); },
        ErrorKind::InvalidInput, "target action"));
  VectorSpace space{t.dim(), {}};
  for (const auto& v : t.inclusion.columns()) space.labels.push_back("[" + render_vec(v, &h->labels()) + "]");
  return make_module(h, std::move(space), std::move(action), "H_t");
}

SparseVec diagonal_act(const HModule& m, const HModule& n, const SparseVec& h, const SparseVec& x) {
  const std::size_t d = m.H().dim();
  Tensor t = outer(Tensor({d, d}, m.H().comultiply(h)), Tensor({m.dim(), n.dim()}, x));
  t = m.act_leg(t, 0, 2);  // h2, m', n
  t = n.act_leg(t, 0, 2);  // m', n'
  return t.terms();
}

ModulePtr ambient_tensor(const HModule& m, const HModule& n) {
  const std::size_t dim = m.dim() * n.dim();
  std::vector<LinMap> action;
  for (std::size_t i = 0; i < m.H().dim(); ++i)
    action.push_back(tabulate(dim, dim, [&](std::size_t j) {
      return diagonal_act(m, n, unit_vector(i), unit_vector(j));
    }));
  return make_module(m.algebra(), VectorSpace::tensor(m.space(), n.space()), std::move(action),
                     m.name() + "(x)" + n.name());
}

ModulePtr submodule(const HModule& m, const Subspace& s, std::string name) {
  std::vector<LinMap> action;
  for (std::size_t i = 0; i < m.H().dim(); ++i)
    action.push_back(restrict_formula(
        s, s, [&](const SparseVec& x) { return m.rho(i).apply(x); }, ErrorKind::InvalidInput,
        "action on submodule"));
  VectorSpace space{s.dim(), {}};
  for (const auto& v : s.inclusion.columns()) space.labels.push_back("[" + render_vec(v, &m.labels()) + "]");
  return make_module(m.algebra(), std::move(space), std::move(action), std::move(name));
}

Report check_module(const HModule& m) {
  Report rep("module " + m.name());
  const auto& H = m.H();
  const std::size_t d = H.dim();
  auto render = [&](const SparseVec& v) { return render_vec(v, &m.labels()); };
  rep.run("module.unit", [&] {
    return first_difference(m.rho_of(H.one()), LinMap::identity(m.dim()), label_namer(m.labels()), render);
  });
  rep.run("module.law", [&]() -> std::optional<Witness> {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        LinMap lhs = compose(m.rho(i), m.rho(j));
        LinMap rhs = m.rho_of(H.mult_map().column(i * d + j));
        if (auto w = first_difference(lhs, rhs, label_namer(m.labels()), render)) {
          w->indices.insert(w->indices.begin(), {H.labels()[i], H.labels()[j]});
          return w;
        }
      }
    return std::nullopt;
  });
  return rep;
}

std::optional<Witness> h_linearity_witness(const LinMap& f, const HModule& m, const HModule& n) {
  auto render = [&](const SparseVec& v) { return render_vec(v, &n.labels()); };
  for (std::size_t i = 0; i < m.H().dim(); ++i)
    if (auto w = first_difference(compose(f, m.rho(i)), compose(n.rho(i), f), label_namer(m.labels()), render)) {
      w->indices.insert(w->indices.begin(), m.H().labels()[i]);
      return w;
    }
  return std::nullopt;
}

bool is_h_linear(const LinMap& f, const HModule& m, const HModule& n) {
  return !h_linearity_witness(f, m, n).has_value();
}

LinMap unflatten(const SparseVec& v, std::size_t rows, std::size_t cols) {
  std::vector<std::tuple<Index, Index, Scalar>> trip;
  for (const auto& e : v) trip.emplace_back(e.index / cols, e.index % cols, e.value);
  return LinMap::from_triplets(rows, cols, trip);
}

SparseVec flatten(const LinMap& f) {
  SparseVec v;
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (const auto& e : f.column(c)) v.push_back(Entry{e.index * f.cols() + c, e.value});
  normalize(v);
  return v;
}

LinMap h_linearity_constraints(const HModule& m, const HModule& n) {
  const std::size_t dm = m.dim(), dn = n.dim(), block = dm * dn;
  const std::size_t d = m.H().dim();
  std::vector<LinMap> rho_m_t;
  for (std::size_t i = 0; i < d; ++i) rho_m_t.push_back(m.rho(i).transpose());
  return tabulate(d * block, block, [&](std::size_t rc) {
    const std::size_t r = rc / dm, c = rc % dm;
    SparseVec col;
    for (std::size_t i = 0; i < d; ++i) {
      // rho_N(h) E_rc - E_rc rho_M(h)
      for (const auto& e : n.rho(i).column(r)) col.push_back(Entry{i * block + e.index * dm + c, e.value});
      for (const auto& e : rho_m_t[i].column(c)) col.push_back(Entry{i * block + r * dm + e.index, -e.value});
    }
    normalize(col);
    return col;
  });
}

Subspace hom_space(const HModule& m, const HModule& n) { return kernel(h_linearity_constraints(m, n)); }

Tensor legs_to_subspace(const Tensor& t, std::size_t first, const Subspace& s, ErrorKind escape,
                        const std::string& what) {
  const auto& dims = t.dims();
  Tensor out = apply(t, {first, first + 1}, s.projection, {s.dim()}, first);
  if (apply(out, {first}, s.inclusion, {dims[first], dims[first + 1]}, first) != t)
    throw Error(escape, what + " leaves its carrier");
  return out;
}

Tensor leg_to_subspace(const Tensor& t, std::size_t leg, const Subspace& s, ErrorKind escape,
                       const std::string& what) {
  Tensor out = map_leg(t, leg, s.projection);
  if (map_leg(out, leg, s.inclusion) != t) throw Error(escape, what + " leaves its carrier");
  return out;
}

Subspace whole_space(std::size_t n) {
  Subspace s;
  s.ambient = n;
  s.inclusion = LinMap::identity(n);
  s.projection = LinMap::identity(n);
  return s;
}

LinMap restrict_formula(const Subspace& source, const Subspace& target,
                        const std::function<SparseVec(const SparseVec&)>& f, ErrorKind escape,
                        const std::string& what) {
  return tabulate(target.dim(), source.dim(), [&](std::size_t k) {
    SparseVec y = f(source.inclusion.column(k));
    SparseVec p = target.project(y);
    if (!vec_equal(target.include(p), y))
      throw Error(escape, what + " leaves its target on source basis vector " + std::to_string(k));
    return p;
  });
}

TruncatedTensor truncated_tensor(const ModulePtr& m, const ModulePtr& n) {
  if (m->algebra() != n->algebra())
    throw Error(ErrorKind::DimensionMismatch, "tensor product of modules over different algebras");
  const std::size_t dim = m->dim() * n->dim();
  const auto& H = m->H();
  LinMap p = tabulate(dim, dim, [&](std::size_t j) { return diagonal_act(*m, *n, H.one(), unit_vector(j)); });
  if (!is_idempotent(p))
    throw Error(ErrorKind::IdempotentFailure, "Delta(1) does not act idempotently on " + m->name() + "(x)" + n->name());
  TruncatedTensor out;
  out.left = m;
  out.right = n;
  out.carrier = split_idempotent(p);
  std::vector<LinMap> action;
  for (std::size_t i = 0; i < H.dim(); ++i)
    action.push_back(restrict_formula(
        out.carrier, out.carrier, [&](const SparseVec& x) { return diagonal_act(*m, *n, unit_vector(i), x); },
        ErrorKind::IdempotentFailure, "diagonal action"));
  VectorSpace space{out.carrier.dim(), {}};
  const auto amb = VectorSpace::tensor(m->space(), n->space());
  for (const auto& v : out.carrier.inclusion.columns()) space.labels.push_back("[" + render_vec(v, &amb.labels) + "]");
  out.module = make_module(m->algebra(), std::move(space), std::move(action), m->name() + "(x)_t" + n->name());
  return out;
}

Subspace triple_carrier(const HModule& m, const HModule& n, const HModule& p) {
  ModulePtr mn = ambient_tensor(m, n);
  const std::size_t dim = mn->dim() * p.dim();
  LinMap proj = tabulate(dim, dim, [&](std::size_t j) { return diagonal_act(*mn, p, m.H().one(), unit_vector(j)); });
  return image(proj);
}

Iso left_unitor(const TruncatedTensor& um) {
  const auto& H = um.left->H();
  const auto& M = *um.right;
  const Subspace& t = H.target();
  if (um.left->dim() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "left factor is not the unit object");
  Iso iso;
  iso.forward = restrict_formula(
      um.carrier, whole_space(M.dim()),
      [&](const SparseVec& x) {
        Tensor u = map_leg(Tensor({t.dim(), M.dim()}, x), 0, t.inclusion);
        return M.act_leg(u, 0, 1).terms();
      },
      ErrorKind::InvalidInput, "left unitor");
  const LinMap to_target = compose(t.projection, H.eps_t_map());
  iso.inverse = restrict_formula(
      whole_space(M.dim()), um.carrier,
      [&](const SparseVec& m) {
        Tensor u = outer(H.delta_one(), Tensor::vector(M.dim(), m));
        u = M.act_leg(u, 1, 2);  // 1_1, 1_2 . m
        return map_leg(u, 0, to_target).terms();
      },
      ErrorKind::InvalidInput, "inverse left unitor");
  return iso;
}

Iso right_unitor(const TruncatedTensor& mu) {
  const auto& H = mu.left->H();
  const auto& M = *mu.left;
  const Subspace& t = H.target();
  if (mu.right->dim() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "right factor is not the unit object");
  Iso iso;
  const LinMap s_incl = compose(H.antipode_map(), t.inclusion);
  iso.forward = restrict_formula(
      mu.carrier, whole_space(M.dim()),
      [&](const SparseVec& x) {
        Tensor u = map_leg(Tensor({M.dim(), t.dim()}, x), 1, s_incl);
        return M.act_leg(u, 1, 0).terms();
      },
      ErrorKind::InvalidInput, "right unitor");
  const LinMap in_target = t.projector();
  iso.inverse = restrict_formula(
      whole_space(M.dim()), mu.carrier,
      [&](const SparseVec& m) {
        Tensor u = outer(H.delta_one(), Tensor::vector(M.dim(), m));
        u = permute(M.act_leg(u, 0, 2), {1, 0});  // 1_1 . m, 1_2
        if (map_leg(u, 1, in_target) != u)
          throw Error(ErrorKind::InvalidInput, "second leg of Delta(1) does not lie in the target subalgebra");
        return map_leg(u, 1, t.projection).terms();
      },
      ErrorKind::InvalidInput, "inverse right unitor");
  return iso;
}

LinMap braiding_full(const RMatrix& r, const HModule& m, const HModule& n) {
  return tabulate(n.dim() * m.dim(), m.dim() * n.dim(), [&](std::size_t j) {
    Tensor t = outer(r.r(), Tensor({m.dim(), n.dim()}, unit_vector(j)));
    t = n.act_leg(t, 1, 3);  // R1, m, R2 . n
    t = m.act_leg(t, 0, 1);  // R1 . m, R2 . n
    return permute(t, {1, 0}).terms();
  });
}

LinMap braiding_inverse_full(const RMatrix& r, const HModule& m, const HModule& n) {
  return tabulate(m.dim() * n.dim(), n.dim() * m.dim(), [&](std::size_t j) {
    Tensor t = outer(r.r_bar(), Tensor({n.dim(), m.dim()}, unit_vector(j)));
    t = n.act_leg(t, 1, 2);  // Rbar1, Rbar2 . n, m
    t = m.act_leg(t, 0, 2);  // Rbar2 . n, Rbar1 . m
    return permute(t, {1, 0}).terms();
  });
}

Iso braiding_c(const RMatrix& r, const TruncatedTensor& mn, const TruncatedTensor& nm) {
  const LinMap c = braiding_full(r, *mn.left, *mn.right);
  const LinMap ci = braiding_inverse_full(r, *mn.left, *mn.right);
  Iso iso;
  iso.forward = restrict_formula(
      mn.carrier, nm.carrier, [&](const SparseVec& x) { return c.apply(x); }, ErrorKind::InvalidInput, "braiding");
  iso.inverse = restrict_formula(
      nm.carrier, mn.carrier, [&](const SparseVec& x) { return ci.apply(x); }, ErrorKind::InvalidInput,
      "inverse braiding");
  return iso;
}

Report check_monoidal_coherence(const RMatrix& r, const std::vector<ModulePtr>& samples,
                                const CoherenceOptions& options) {
  require_certified(r);
  const auto& H = r.H();
  Report rep("monoidal coherence over " + H.name());
  const ModulePtr unit = unit_object(r.algebra());
  Lcg rng(options.seed);

  rep.run("unitors.inverse_pairs", [&]() -> std::optional<Witness> {
    for (const auto& m : samples) {
      Iso l = left_unitor(truncated_tensor(unit, m));
      Iso rr = right_unitor(truncated_tensor(m, unit));
      if (auto w = identity_witness(compose(l.forward, l.inverse), "l l^-1 on " + m->name())) return w;
      if (auto w = identity_witness(compose(l.inverse, l.forward), "l^-1 l on " + m->name())) return w;
      if (auto w = identity_witness(compose(rr.forward, rr.inverse), "r r^-1 on " + m->name())) return w;
      if (auto w = identity_witness(compose(rr.inverse, rr.forward), "r^-1 r on " + m->name())) return w;
    }
    return std::nullopt;
  });
  rep.run("unitors.h_linear", [&]() -> std::optional<Witness> {
    for (const auto& m : samples) {
      auto um = truncated_tensor(unit, m);
      auto mu = truncated_tensor(m, unit);
      if (auto w = h_linearity_witness(left_unitor(um).forward, *um.module, *m)) return w;
      if (auto w = h_linearity_witness(right_unitor(mu).forward, *mu.module, *m)) return w;
    }
    return std::nullopt;
  });
  rep.run("unitors.triangle", [&]() -> std::optional<Witness> {
    const Subspace& t = H.target();
    const LinMap incl = t.inclusion;
    const LinMap s_incl = compose(H.antipode_map(), t.inclusion);
    for (const auto& m : samples)
      for (const auto& n : samples) {
        Subspace c = triple_carrier(*m, *unit, *n);
        const std::vector<std::size_t> dims{m->dim(), t.dim(), n->dim()};
        for (std::size_t k = 0; k < c.dim(); ++k) {
          Tensor x(dims, c.inclusion.column(k));
          Tensor lhs = n->act_leg(map_leg(x, 1, incl), 1, 2);
          Tensor rhs = m->act_leg(map_leg(x, 1, s_incl), 1, 0);
          if (lhs != rhs)
            return Witness{{m->name(), n->name(), "carrier vector " + std::to_string(k)},
                           render_vec(lhs.terms()), render_vec(rhs.terms())};
        }
      }
    return std::nullopt;
  });
  rep.run("associator.nested_carriers", [&]() -> std::optional<Witness> {
    for (const auto& m : samples)
      for (const auto& n : samples)
        for (const auto& p : samples) {
          auto mn = truncated_tensor(m, n);
          auto np = truncated_tensor(n, p);
          auto left = truncated_tensor(mn.module, p);
          auto right = truncated_tensor(m, np.module);
          Subspace l = image(compose(tensor(mn.carrier.inclusion, LinMap::identity(p->dim())), left.carrier.inclusion));
          Subspace rr = image(compose(tensor(LinMap::identity(m->dim()), np.carrier.inclusion), right.carrier.inclusion));
          Subspace c = triple_carrier(*m, *n, *p);
          if (!same_span(l, rr) || !same_span(l, c))
            return Witness{{m->name(), n->name(), p->name()},
                           "equal subspaces of dim " + std::to_string(c.dim()),
                           "dims " + std::to_string(l.dim()) + ", " + std::to_string(rr.dim()) + ", " +
                               std::to_string(c.dim())};
        }
    return std::nullopt;
  });
  rep.run("braiding.inverse", [&]() -> std::optional<Witness> {
    for (const auto& m : samples)
      for (const auto& n : samples) {
        auto mn = truncated_tensor(m, n);
        auto nm = truncated_tensor(n, m);
        Iso c = braiding_c(r, mn, nm);
        const std::string at = m->name() + "," + n->name();
        if (auto w = identity_witness(compose(c.inverse, c.forward), "C^-1 C on " + at)) return w;
        if (auto w = identity_witness(compose(c.forward, c.inverse), "C C^-1 on " + at)) return w;
      }
    return std::nullopt;
  });
  rep.run("braiding.h_linear", [&]() -> std::optional<Witness> {
    for (const auto& m : samples)
      for (const auto& n : samples) {
        auto mn = truncated_tensor(m, n);
        auto nm = truncated_tensor(n, m);
        if (auto w = h_linearity_witness(braiding_c(r, mn, nm).forward, *mn.module, *nm.module)) return w;
      }
    return std::nullopt;
  });
  rep.run("braiding.hexagons", [&]() -> std::optional<Witness> {
    for (const auto& m : samples)
      for (const auto& n : samples)
        for (const auto& p : samples) {
          Subspace c = triple_carrier(*m, *n, *p);
          const std::string at = m->name() + "," + n->name() + "," + p->name();
          const LinMap idm = LinMap::identity(m->dim()), idn = LinMap::identity(n->dim()),
                       idp = LinMap::identity(p->dim());
          // C_{M(x)N,P} = (C_{M,P} (x) id)(id (x) C_{N,P})
          LinMap lhs = braiding_full(r, *ambient_tensor(*m, *n), *p);
          LinMap rhs = compose(tensor(braiding_full(r, *m, *p), idn), tensor(idm, braiding_full(r, *n, *p)));
          if (auto w = on_subspace(lhs, rhs, c, "first hexagon on " + at)) return w;
          // C_{M,N(x)P} = (id (x) C_{M,P})(C_{M,N} (x) id)
          lhs = braiding_full(r, *m, *ambient_tensor(*n, *p));
          rhs = compose(tensor(idn, braiding_full(r, *m, *p)), tensor(braiding_full(r, *m, *n), idp));
          if (auto w = on_subspace(lhs, rhs, c, "second hexagon on " + at)) return w;
        }
    return std::nullopt;
  });
  rep.run("braiding.naturality", [&]() -> std::optional<Witness> {
    for (const auto& m : samples)
      for (const auto& m2 : samples) {
        Subspace hom = hom_space(*m, *m2);
        if (hom.dim() == 0) continue;
        for (std::size_t s = 0; s < options.morphisms; ++s) {
          LinMap f = unflatten(random_combination(hom, rng), m2->dim(), m->dim());
          for (const auto& n : samples) {
            const LinMap idn = LinMap::identity(n->dim());
            auto mn = truncated_tensor(m, n);
            LinMap lhs = compose(braiding_full(r, *m2, *n), tensor(f, idn));
            LinMap rhs = compose(tensor(idn, f), braiding_full(r, *m, *n));
            const std::string at = m->name() + "->" + m2->name() + " beside " + n->name();
            if (auto w = on_subspace(lhs, rhs, mn.carrier, "first slot " + at)) return w;
            auto nm = truncated_tensor(n, m);
            lhs = compose(braiding_full(r, *n, *m2), tensor(idn, f));
            rhs = compose(tensor(f, idn), braiding_full(r, *n, *m));
            if (auto w = on_subspace(lhs, rhs, nm.carrier, "second slot " + at)) return w;
          }
        }
      }
    return std::nullopt;
  });
  return rep;
}

}  // namespace whakit
