#include "whakit/weak_hopf.hpp"

#include "whakit/verify.hpp"

namespace whakit {

namespace {

void expect_shape(const LinMap& f, std::size_t rows, std::size_t cols, const char* what) {
  if (f.rows() != rows || f.cols() != cols)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has shape " + std::to_string(f.rows()) + "x" +
                                                  std::to_string(f.cols()) + ", expected " +
                                                  std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace

WeakHopfAlgebra::WeakHopfAlgebra(WeakHopfData data) : data_(std::move(data)) {
  const std::size_t d = dim();
  if (data_.space.labels.size() != d) data_.space = VectorSpace::numbered(d);
  expect_shape(data_.mult, d, d * d, "multiplication");
  expect_shape(data_.comult, d * d, d, "comultiplication");
  expect_shape(data_.counit, 1, d, "counit");
  expect_shape(data_.antipode, d, d, "antipode");
  if (data_.antipode_inverse) expect_shape(*data_.antipode_inverse, d, d, "antipode inverse");
  if (!data_.unit.empty() && data_.unit.back().index >= d)
    throw Error(ErrorKind::DimensionMismatch, "unit vector out of range");

  left_mult_.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    left_mult_.push_back(tabulate(d, d, [&](std::size_t l) { return data_.mult.column(i * d + l); }));

  delta_one_ = Tensor({d, d}, data_.comult.apply(data_.unit));

  // eps_t(h) = eps(1_1 h) 1_2 and eps_s(h) = 1_1 eps(h 1_2).
  eps_t_ = tabulate(d, d, [&](std::size_t h) {
    SparseVec out;
    for (const auto& e : delta_one_.terms()) {
      const Index a = e.index / d, b = e.index % d;
      const Scalar c = counit(data_.mult.column(a * d + h));
      if (!c.is_zero()) axpy(out, e.value * c, unit_vector(b));
    }
    return out;
  });
  eps_s_ = tabulate(d, d, [&](std::size_t h) {
    SparseVec out;
    for (const auto& e : delta_one_.terms()) {
      const Index a = e.index / d, b = e.index % d;
      const Scalar c = counit(data_.mult.column(h * d + b));
      if (!c.is_zero()) axpy(out, e.value * c, unit_vector(a));
    }
    return out;
  });
  target_ = image(eps_t_);
  source_ = image(eps_s_);
}

const LinMap& WeakHopfAlgebra::antipode_inverse_map() const {
  if (data_.antipode_inverse) return *data_.antipode_inverse;
  if (!antipode_inverse_) {
    auto inv = inverse(data_.antipode);
    if (!inv) throw Error(ErrorKind::AntipodeNotInvertible, "antipode of " + name() + " is singular");
    antipode_inverse_ = std::move(*inv);
  }
  return *antipode_inverse_;
}

LinMap WeakHopfAlgebra::left_mult_by(const SparseVec& a) const {
  LinMap out = LinMap::zero(dim(), dim());
  for (const auto& e : a) out = add(out, scale(left_mult_[e.index], e.value));
  return out;
}

LinMap WeakHopfAlgebra::right_mult_by(const SparseVec& a) const {
  return tabulate(dim(), dim(), [&](std::size_t l) { return multiply(unit_vector(l), a); });
}

SparseVec WeakHopfAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  const std::size_t d = dim();
  SparseVec out;
  for (const auto& x : a)
    for (const auto& y : b) {
      const auto& col = data_.mult.column(x.index * d + y.index);
      if (!col.empty()) axpy(out, x.value * y.value, col);
    }
  return out;
}

SparseVec WeakHopfAlgebra::comultiply(const SparseVec& a) const { return data_.comult.apply(a); }

Scalar WeakHopfAlgebra::counit(const SparseVec& a) const {
  Scalar s(0);
  for (const auto& e : a) {
    const auto& col = data_.counit.column(e.index);
    if (!col.empty()) s = s + e.value * col.front().value;
  }
  return s;
}

SparseVec WeakHopfAlgebra::antipode(const SparseVec& a) const { return data_.antipode.apply(a); }

Tensor WeakHopfAlgebra::product(const Tensor& a, const Tensor& b) const {
  if (a.dims() != b.dims()) throw Error(ErrorKind::DimensionMismatch, "legwise product of different shapes");
  const std::size_t d = dim();
  const std::size_t n = a.legs();
  SparseVec terms;
  std::vector<const SparseVec*> factors(n);
  std::vector<std::size_t> pos(n);
  for (const auto& x : a.terms()) {
    const auto xi = a.decode(x.index);
    for (const auto& y : b.terms()) {
      const auto yi = b.decode(y.index);
      bool zero = false;
      for (std::size_t k = 0; k < n && !zero; ++k) {
        factors[k] = &data_.mult.column(xi[k] * d + yi[k]);
        zero = factors[k]->empty();
      }
      if (zero) continue;
      const Scalar c = x.value * y.value;
      // Expand the product of the per-leg results.
      std::fill(pos.begin(), pos.end(), 0);
      bool more = true;
      while (more) {
        Index flat = 0;
        Scalar v = c;
        for (std::size_t k = 0; k < n; ++k) {
          const auto& e = (*factors[k])[pos[k]];
          flat = flat * d + e.index;
          v = v * e.value;
        }
        terms.push_back(Entry{flat, v});
        more = false;
        for (std::size_t k = n; k-- > 0;) {
          if (++pos[k] < factors[k]->size()) {
            more = true;
            break;
          }
          pos[k] = 0;
        }
      }
    }
  }
  return Tensor(a.dims(), std::move(terms));
}

Tensor WeakHopfAlgebra::adjoint(const Tensor& t, std::size_t h, std::size_t x) const {
  if (!adjoint_) {
    const std::size_t d = dim();
    adjoint_ = tabulate(d, d * d, [&](std::size_t col) {
      Tensor u = comul(basis_elem(col / d), 0);
      u = outer(u, basis_elem(col % d));  // h1, h2, x
      u = S(u, 1);
      u = mul(u, 0, 2);                   // h1 x, S(h2)
      return mul(u, 0, 1).terms();
    });
  }
  return apply(t, {h, x}, *adjoint_, {dim()}, h < x ? x - 1 : x);
}

namespace {

// Compares two formulas evaluated on every basis tensor of H^{(x)in_legs}.
std::optional<Witness> compare_tensor_maps(const WeakHopfAlgebra& h, std::size_t in_legs, std::size_t out_legs,
                                           const std::function<Tensor(std::size_t)>& lhs,
                                           const std::function<Tensor(std::size_t)>& rhs) {
  Index in = 1;
  for (std::size_t k = 0; k < in_legs; ++k) in *= h.dim();
  for (Index j = 0; j < in; ++j) {
    Tensor a = lhs(j), b = rhs(j);
    if (!vec_equal(a.terms(), b.terms())) {
      auto name = tensor_namer(h.leg_labels(in_legs));
      auto render = tensor_renderer(h.leg_labels(out_legs));
      return Witness{name(j), render(a.terms()), render(b.terms())};
    }
  }
  return std::nullopt;
}

}  // namespace

Report check_weak_hopf(const WeakHopfAlgebra& H) {
  Report rep("weak Hopf algebra " + H.name());
  const std::size_t d = H.dim();
  const auto& labels = H.labels();
  auto vec_render = [&](const SparseVec& v) { return render_vec(v, &labels); };
  auto e = [&](std::size_t i) { return H.basis_elem(i); };
  auto delta2 = [&](std::size_t i) { return H.comul(H.comul(e(i), 0), 1); };
  const Tensor one = H.one_elem();
  const Tensor& D1 = H.delta_one();

  rep.run("algebra.associativity", [&]() -> std::optional<Witness> {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        LinMap lhs = H.left_mult_by(H.mult_map().column(i * d + j));
        LinMap rhs = compose(H.left_mult(i), H.left_mult(j));
        if (auto w = first_difference(lhs, rhs, label_namer(labels), vec_render)) {
          w->indices.insert(w->indices.begin(), {labels[i], labels[j]});
          return w;
        }
      }
    return std::nullopt;
  });
  rep.run("algebra.unit", [&]() -> std::optional<Witness> {
    for (std::size_t i = 0; i < d; ++i) {
      auto u = unit_vector(i);
      if (!vec_equal(H.multiply(H.one(), u), u))
        return Witness{{labels[i]}, vec_render(u), vec_render(H.multiply(H.one(), u))};
      if (!vec_equal(H.multiply(u, H.one()), u))
        return Witness{{labels[i]}, vec_render(u), vec_render(H.multiply(u, H.one()))};
    }
    return std::nullopt;
  });
  rep.run("coalgebra.coassociativity", [&]() {
    return compare_tensor_maps(
        H, 1, 3, [&](std::size_t i) { return H.comul(H.comul(e(i), 0), 0); },
        [&](std::size_t i) { return H.comul(H.comul(e(i), 0), 1); });
  });
  rep.run("coalgebra.counit", [&]() {
    auto left = compare_tensor_maps(
        H, 1, 1, [&](std::size_t i) { return H.counit_leg(H.comul(e(i), 0), 0); }, e);
    if (left) return left;
    return compare_tensor_maps(
        H, 1, 1, [&](std::size_t i) { return H.counit_leg(H.comul(e(i), 0), 1); }, e);
  });
  rep.run("comultiplication.multiplicative", [&]() {
    return compare_tensor_maps(
        H, 2, 2, [&](std::size_t ij) { return Tensor({d, d}, H.comultiply(H.mult_map().column(ij))); },
        [&](std::size_t ij) { return H.product(H.comul(e(ij / d), 0), H.comul(e(ij % d), 0)); });
  });
  rep.run("unit.delta_squared", [&]() -> std::optional<Witness> {
    Tensor d2 = H.comul(D1, 0);
    Tensor a = outer(D1, one), b = outer(one, D1);
    auto render = tensor_renderer(H.leg_labels(3));
    if (d2 != H.product(a, b)) return Witness{{"1"}, render(d2.terms()), render(H.product(a, b).terms())};
    if (d2 != H.product(b, a)) return Witness{{"1"}, render(d2.terms()), render(H.product(b, a).terms())};
    return std::nullopt;
  });
  rep.run("counit.weak_multiplicativity", [&]() -> std::optional<Witness> {
    // E[h][l] = eps(e_h e_l); for each k compare eps(h k l) with eps(h k_1) eps(k_2 l)
    // and eps(h k_2) eps(k_1 l) as bilinear forms in (h, l).
    LinMap E = tabulate(d, d, [&](std::size_t l) {
      SparseVec col;
      for (std::size_t hh = 0; hh < d; ++hh) {
        Scalar c = H.counit(H.mult_map().column(hh * d + l));
        if (!c.is_zero()) col.push_back(Entry{hh, c});
      }
      return col;
    });
    for (std::size_t k = 0; k < d; ++k) {
      LinMap right_k = tabulate(d, d, [&](std::size_t hh) { return H.mult_map().column(hh * d + k); });
      LinMap lhs = compose(right_k.transpose(), E);
      const auto dk = H.comultiply(unit_vector(k));
      for (int variant = 0; variant < 2; ++variant) {
        LinMap rhs = tabulate(d, d, [&](std::size_t l) {
          SparseVec col;
          for (const auto& t : dk) {
            Index a = t.index / d, b = t.index % d;
            if (variant) std::swap(a, b);
            const Scalar c = t.value * coefficient(E.column(l), b);
            if (!c.is_zero()) axpy(col, c, E.column(a));
          }
          return col;
        });
        for (std::size_t l = 0; l < d; ++l) {
          const auto& x = lhs.column(l);
          const auto& y = rhs.column(l);
          if (vec_equal(x, y)) continue;
          const auto diff = sub(x, y);
          const std::size_t hh = diff.front().index;
          return Witness{{labels[hh], labels[k], labels[l]},
                         render_scalar(coefficient(x, hh)),
                         render_scalar(coefficient(y, hh))};
        }
      }
    }
    return std::nullopt;
  });
  rep.run("antipode.target", [&]() {
    return compare_tensor_maps(
        H, 1, 1, [&](std::size_t i) { return H.mul(H.S(H.comul(e(i), 0), 1), 0, 1); },
        [&](std::size_t i) { return H.elem(H.epsilon_t(unit_vector(i))); });
  });
  rep.run("antipode.source", [&]() {
    return compare_tensor_maps(
        H, 1, 1, [&](std::size_t i) { return H.mul(H.S(H.comul(e(i), 0), 0), 0, 1); },
        [&](std::size_t i) { return H.elem(H.epsilon_s(unit_vector(i))); });
  });
  rep.run("antipode.sandwich", [&]() {
    return compare_tensor_maps(
        H, 1, 1,
        [&](std::size_t i) {
          Tensor t = H.S(H.S(delta2(i), 0), 2);
          return H.mul(H.mul(t, 0, 1), 0, 1);
        },
        [&](std::size_t i) { return H.elem(H.antipode(unit_vector(i))); });
  });
  rep.run("antipode.target_comultiplied", [&]() {
    return compare_tensor_maps(
        H, 1, 2, [&](std::size_t i) { return H.mul(H.S(delta2(i), 2), 1, 2); },
        [&](std::size_t i) { return H.product(D1, outer(e(i), one)); });
  });
  rep.run("antipode.source_comultiplied", [&]() {
    return compare_tensor_maps(
        H, 1, 2, [&](std::size_t i) { return H.mul(H.S(delta2(i), 0), 0, 1); },
        [&](std::size_t i) { return H.product(outer(one, e(i)), D1); });
  });
  const Tensor D1_S2 = H.S(D1, 1), D1_S1 = H.S(D1, 0);
  rep.run("antipode.source_right_comultiplied", [&]() {
    return compare_tensor_maps(
        H, 1, 2, [&](std::size_t i) { return H.mul(H.S(delta2(i), 1), 1, 2); },
        [&](std::size_t i) { return H.product(outer(e(i), one), D1_S2); });
  });
  rep.run("antipode.target_left_comultiplied", [&]() {
    return compare_tensor_maps(
        H, 1, 2, [&](std::size_t i) { return H.mul(H.S(delta2(i), 1), 0, 1); },
        [&](std::size_t i) { return H.product(D1_S1, outer(one, e(i))); });
  });
  rep.run("counit.target_source_pairing", [&]() -> std::optional<Witness> {
    LinMap E = tabulate(d, d, [&](std::size_t hh) {
      SparseVec col;
      for (std::size_t g = 0; g < d; ++g) {
        Scalar c = H.counit(H.mult_map().column(g * d + hh));
        if (!c.is_zero()) col.push_back(Entry{g, c});
      }
      return col;
    });  // column h, row g: eps(g h)
    LinMap with_t = compose(E, H.eps_t_map());
    LinMap with_s = compose(H.eps_s_map().transpose(), E);
    auto namer = label_namer(labels);
    auto render = [&](const SparseVec& v) { return "eps(g .) over g: " + vec_render(v); };
    if (auto w = first_difference(with_t, E, namer, render)) return w;
    return first_difference(with_s, E, namer, render);
  });
  rep.run("unit.source_commutation", [&]() -> std::optional<Witness> {
    const auto& hs = H.source();
    for (std::size_t k = 0; k < hs.dim(); ++k) {
      Tensor y = H.elem(hs.inclusion.column(k));
      Tensor a = H.product(outer(y, one), D1_S2), b = H.product(D1_S2, outer(one, y));
      if (a != b) {
        auto render = tensor_renderer(H.leg_labels(2));
        return Witness{{"y=" + vec_render(y.terms())}, render(a.terms()), render(b.terms())};
      }
    }
    return std::nullopt;
  });
  rep.run("unit.target_commutation", [&]() -> std::optional<Witness> {
    const auto& ht = H.target();
    for (std::size_t k = 0; k < ht.dim(); ++k) {
      Tensor z = H.elem(ht.inclusion.column(k));
      Tensor a = H.product(outer(z, one), D1_S1), b = H.product(D1_S1, outer(one, z));
      if (a != b) {
        auto render = tensor_renderer(H.leg_labels(2));
        return Witness{{"z=" + vec_render(z.terms())}, render(a.terms()), render(b.terms())};
      }
    }
    return std::nullopt;
  });
  rep.run("counital_maps.idempotent", [&]() {
    auto namer = label_namer(labels);
    if (auto w = first_difference(compose(H.eps_t_map(), H.eps_t_map()), H.eps_t_map(), namer, vec_render))
      return w;
    return first_difference(compose(H.eps_s_map(), H.eps_s_map()), H.eps_s_map(), namer, vec_render);
  });
  rep.run("antipode.target_to_source", [&]() -> std::optional<Witness> {
    Subspace s_of_t = image(compose(H.antipode_map(), H.target().inclusion));
    if (!same_span(s_of_t, H.source()) || s_of_t.dim() != H.target().dim())
      return Witness{{"H_t"}, "S(H_t) = H_s with dim " + std::to_string(H.target().dim()),
                     "dim S(H_t) = " + std::to_string(s_of_t.dim()) + ", dim H_s = " +
                         std::to_string(H.source().dim())};
    return std::nullopt;
  });
  if (H.data().antipode_inverse) {
    rep.run("antipode.inverse", [&]() {
      auto namer = label_namer(labels);
      const auto& inv = *H.data().antipode_inverse;
      if (auto w = first_difference(compose(inv, H.antipode_map()), LinMap::identity(d), namer, vec_render))
        return w;
      return first_difference(compose(H.antipode_map(), inv), LinMap::identity(d), namer, vec_render);
    });
  }
  return rep;
}

AlgebraPtr certify(std::shared_ptr<WeakHopfAlgebra> h) {
  Report rep = check_weak_hopf(*h);
  if (const auto* f = rep.first_failure())
    throw Error(ErrorKind::Uncertified, h->name() + " fails " + f->name);
  h->certified_ = true;
  return h;
}

AlgebraPtr certify(WeakHopfData data) { return certify(std::make_shared<WeakHopfAlgebra>(std::move(data))); }

Certification try_certify(WeakHopfData data) {
  auto h = std::make_shared<WeakHopfAlgebra>(std::move(data));
  Certification out{nullptr, check_weak_hopf(*h)};
  if (out.report.passed()) {
    h->certified_ = true;
    out.algebra = h;
  }
  return out;
}

void require_certified(const WeakHopfAlgebra& h) {
  if (!h.certified()) throw Error(ErrorKind::Uncertified, h.name() + " has not been certified");
}

const Subspace& target_space(const WeakHopfAlgebra& h) { return h.target(); }
const Subspace& source_space(const WeakHopfAlgebra& h) { return h.source(); }

Subspace generated_subalgebra(const WeakHopfAlgebra& h, const Subspace& s) {
  Echelon ech(h.dim());
  ech.insert(h.one());
  for (const auto& v : s.inclusion.columns()) ech.insert(v);
  while (true) {
    const auto basis = ech.basis();
    bool grew = false;
    for (const auto& a : basis)
      for (const auto& b : basis) grew = ech.insert(h.multiply(a, b)) || grew;
    if (!grew) break;
  }
  return span(h.dim(), ech.basis());
}

bool is_regular(const WeakHopfAlgebra& h) {
  std::vector<SparseVec> gens = h.target().inclusion.columns();
  for (const auto& v : h.source().inclusion.columns()) gens.push_back(v);
  Subspace closure = generated_subalgebra(h, span(h.dim(), gens));
  for (const auto& x : closure.inclusion.columns())
    if (!vec_equal(h.antipode(h.antipode(x)), x)) return false;
  return true;
}

bool is_hopf(const WeakHopfAlgebra& h) {
  const std::size_t d = h.dim();
  SparseVec one_one;
  for (const auto& a : h.one())
    for (const auto& b : h.one()) one_one.push_back(Entry{a.index * d + b.index, a.value * b.value});
  return vec_equal(h.delta_one().terms(), one_one);
}

}  // namespace whakit
