#include "whakit/face_algebra.hpp"

#include <array>

#include "whakit/verify.hpp"

namespace whakit {

PresentedAlgebra face_algebra(unsigned n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "face algebra needs N >= 2");
  const FaceIndex X{n};
  const std::size_t d = X.dim();
  const Field field = Field::cyclotomic(n);
  VectorSpace space{d, std::vector<std::string>(d)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < n; ++s)
        space.labels[X(i, j, s)] =
            "X^" + std::to_string(i) + "_" + std::to_string(j) + "(" + std::to_string(s) + ")";
  auto split = [n](std::size_t idx) {
    return std::array<std::size_t, 3>{idx / (n * n), (idx / n) % n, idx % n};
  };
  auto mult = [&](std::size_t a, std::size_t b) -> SparseVec {
    auto [i, j, p] = split(a);
    auto [k, l, q] = split(b);
    if (j != k || p != q) return {};
    return unit_vector(X(i, l, p));
  };
  SparseVec unit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p) unit.push_back(Entry{X(i, i, p), Scalar(1)});
  auto comult = [&](std::size_t a) {
    auto [i, j, s] = split(a);
    SparseVec v;
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t q = (s + n - p) % n;
      v.push_back(Entry{X(i, j, p) * d + X(i + p, j + p, q), Scalar(1)});
    }
    normalize(v);
    return v;
  };
  auto counit = [&](std::size_t a) { return Scalar(split(a)[2] == 0 ? 1 : 0); };
  auto antipode = [&](std::size_t a) {
    auto [i, j, p] = split(a);
    return unit_vector(X(j + p, i + p, n - p));
  };
  PresentedAlgebra out;
  out.algebra = present("face:" + std::to_string(n), field, std::move(space), mult, unit, comult, counit, antipode);

  SparseVec r, r_bar;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        const std::size_t diff = (i + n - j) % n;
        // w^{-p(i-j)}
        const Scalar c = Scalar::root_power(field, static_cast<long>((n - (p * diff) % n) % n));
        r.push_back(Entry{X(i, j, p) * d + X(j, j + p, diff), c});
        r_bar.push_back(Entry{X(j + p, i + p, n - p) * d + X(j, j + p, diff), c});
      }
  normalize(r);
  normalize(r_bar);
  out.r = std::move(r);
  out.r_bar = std::move(r_bar);
  return out;
}

namespace {

std::size_t block_of(std::size_t carrier_index, unsigned n) { return carrier_index / n; }

std::string x_label(std::size_t i, std::size_t j, std::size_t s) {
  return "X^" + std::to_string(i) + "_" + std::to_string(j) + "(" + std::to_string(s) + ")";
}

// The transmuted carrier must be span{X^k_k(s)} with X^k_k(s) at k*N + s.
void require_face_carrier(const BraidedHopfAlgebra& b, unsigned n) {
  const FaceIndex X{n};
  const Subspace& c = b.carrier;
  bool ok = c.ambient == X.dim() && c.dim() == std::size_t{n} * n;
  for (std::size_t k = 0; ok && k < n; ++k)
    for (std::size_t s = 0; ok && s < n; ++s) ok = vec_equal(c.inclusion.column(k * n + s), unit_vector(X(k, k, s)));
  if (!ok) throw Error(ErrorKind::BlockDecompositionFailed, "carrier is not span{X^k_k(s)} in block order");
}

// Coordinates of the block-i part; throws if v leaves block i.
SparseVec to_block(const SparseVec& v, unsigned n, std::size_t i, const std::string& what) {
  SparseVec out;
  for (const auto& e : v) {
    if (block_of(e.index, n) != i) throw Error(ErrorKind::BlockDecompositionFailed, what + " leaves block " + std::to_string(i));
    out.push_back(Entry{e.index % n, e.value});
  }
  return out;
}

Subspace block_space(unsigned n, std::size_t i) {
  std::vector<SparseVec> vs;
  for (std::size_t p = 0; p < n; ++p) vs.push_back(unit_vector(i * n + p));
  return span(std::size_t{n} * n, vs);
}

std::optional<Witness> table_difference(const LinMap& lhs, const LinMap& rhs, const std::string& what) {
  auto w = first_difference(lhs, rhs, [](std::size_t j) { return std::vector<std::string>{"column " + std::to_string(j)}; },
                            [](const SparseVec& v) { return render_vec(v); });
  if (w) w->indices.insert(w->indices.begin(), what);
  return w;
}

std::optional<Rational> as_rational(const Scalar& s) {
  if (s.is_rational()) return s.rational();
  const Cyclotomic& c = s.cyclotomic();
  if (!c.is_rational()) return std::nullopt;
  return c.coeffs().empty() ? Rational(0) : c.coeffs().front();
}

bool exact_root(const Integer& v, unsigned n) {
  Integer r;
  return mpz_root(r.get_mpz_t(), v.get_mpz_t(), n) != 0;
}

}  // namespace

SparseVec block_unit(unsigned n, std::size_t i) {
  const FaceIndex X{n};
  SparseVec v;
  for (std::size_t p = 0; p < n; ++p) v.push_back(Entry{X(i, i, p), Scalar(1)});
  normalize(v);
  return v;
}

TransmutationTables expected_transmutation(unsigned n) {
  const std::size_t c = std::size_t{n} * n;
  const FaceIndex X{n};
  TransmutationTables t;
  t.n = n;
  t.mult = tabulate(c, c * c, [&](std::size_t j) {
    const std::size_t a = j / c, b = j % c;
    return a == b ? unit_vector(a) : SparseVec{};
  });
  t.comult = tabulate(c * c, c, [&](std::size_t a) {
    const std::size_t k = a / n, s = a % n;
    SparseVec v;
    for (std::size_t w = 0; w < n; ++w) v.push_back(Entry{(k * n + w) * c + k * n + (s + n - w) % n, Scalar(1)});
    normalize(v);
    return v;
  });
  t.counit = tabulate(X.dim(), c, [&](std::size_t a) { return a % n == 0 ? block_unit(n, a / n) : SparseVec{}; });
  t.unit = tabulate(c, n, [&](std::size_t i) {
    SparseVec v;
    for (std::size_t p = 0; p < n; ++p) v.push_back(Entry{i * n + p, Scalar(1)});
    return v;
  });
  t.antipode = tabulate(c, c, [&](std::size_t a) { return unit_vector(a / n * n + (n - a % n) % n); });
  return t;
}

WeakHopfData block_hopf_data(const BraidedHopfAlgebra& b, unsigned n, std::size_t i) {
  require_face_carrier(b, n);
  const std::size_t c = b.dim();
  const auto& H = b.H();
  const SparseVec one_i = block_unit(n, i);
  VectorSpace space{n, {}};
  for (std::size_t p = 0; p < n; ++p) space.labels.push_back(x_label(i, i, p));
  auto idx = [&](std::size_t p) { return i * n + p; };
  return present(
      "H^" + std::to_string(i) + " of " + H.name(), H.field(), std::move(space),
      [&](std::size_t p, std::size_t q) { return to_block(b.mult_full.column(idx(p) * c + idx(q)), n, i, "product"); },
      [&] {
        SparseVec u;
        for (std::size_t p = 0; p < n; ++p) u.push_back(Entry{p, Scalar(1)});
        return u;
      }(),
      [&](std::size_t p) {
        SparseVec out;
        for (const auto& e : b.comult_full.column(idx(p))) {
          const std::size_t x = e.index / c, y = e.index % c;
          if (block_of(x, n) != i || block_of(y, n) != i)
            throw Error(ErrorKind::BlockDecompositionFailed, "comultiplication leaves block " + std::to_string(i));
          out.push_back(Entry{(x % n) * n + y % n, e.value});
        }
        return out;
      },
      [&](std::size_t p) {
        const SparseVec z = H.target().include(b.counit_bar.column(idx(p)));
        if (z.empty()) return Scalar(0);
        const Scalar lambda = coefficient(z, one_i.front().index);
        if (!vec_equal(z, scale(one_i, lambda)))
          throw Error(ErrorKind::BlockDecompositionFailed, "counit of block " + std::to_string(i) + " is not a multiple of 1^i");
        return lambda;
      },
      [&](std::size_t p) { return to_block(b.antipode_bar.column(idx(p)), n, i, "antipode"); });
}

BlockGaloisObject omega_project(const ComoduleAlgebra& a, unsigned n, std::size_t i) {
  const BraidedHopfAlgebra& B = *a.base;
  if (i >= n) throw Error(ErrorKind::InvalidInput, "block index out of range");
  if (!a.right) throw Error(ErrorKind::BlockDecompositionFailed, a.name + " has no right coaction");
  BlockGaloisObject g;
  g.component = i;
  g.hopf = certify(block_hopf_data(B, n, i));
  const LinMap p = a.module->rho_of(block_unit(n, i));
  g.embedding = image(p);
  const Subspace& e = g.embedding;
  const std::size_t k = e.dim(), d = a.dim();
  g.mult = tabulate(k, k * k, [&](std::size_t j) {
    SparseVec prod = a.mult.apply(outer(Tensor::vector(d, e.inclusion.column(j / k)), Tensor::vector(d, e.inclusion.column(j % k))).terms());
    if (!e.contains(prod)) throw Error(ErrorKind::BlockDecompositionFailed, "product leaves block " + std::to_string(i));
    return e.project(prod);
  });
  const SparseVec u = p.apply(a.unit);
  if (!e.contains(u)) throw Error(ErrorKind::BlockDecompositionFailed, "unit leaves block " + std::to_string(i));
  g.unit = e.project(u);
  const Subspace bs = block_space(n, i);
  g.coaction = tabulate(k * n, k, [&](std::size_t j) {
    Tensor t({d, B.dim()}, a.right->apply(e.inclusion.column(j)));
    t = leg_to_subspace(t, 1, bs, ErrorKind::BlockDecompositionFailed, "coaction leaves H^" + std::to_string(i));
    return leg_to_subspace(t, 0, e, ErrorKind::BlockDecompositionFailed, "coaction leaves the block").terms();
  });
  return g;
}

Report check_block_galois(const BlockGaloisObject& g) {
  const WeakHopfAlgebra& H = *g.hopf;
  const std::size_t k = g.embedding.dim(), n = H.dim();
  Report rep("block " + std::to_string(g.component) + " as an " + H.name() + "-Galois object");
  auto x = [&](std::size_t j) { return Tensor::vector(k, unit_vector(j)); };
  auto rho = [&](std::size_t j) { return Tensor({k, n}, g.coaction.column(j)); };
  auto coact = [&](const Tensor& t, std::size_t leg) { return apply(t, {leg}, g.coaction, {k, n}, leg); };
  auto differ = [&](const Tensor& l, const Tensor& r, const std::string& at) -> std::optional<Witness> {
    if (l == r) return std::nullopt;
    return Witness{{at}, render_tensor(r), render_tensor(l)};
  };
  auto pair_name = [](std::size_t a, std::size_t b) { return "u" + std::to_string(a) + " u" + std::to_string(b); };

  rep.run("block.associative", [&]() -> std::optional<Witness> {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) {
          Tensor t = outer(outer(x(a), x(b)), x(c));
          if (auto w = differ(contract(contract(t, 0, 1, g.mult), 0, 1, g.mult),
                              contract(contract(t, 1, 2, g.mult), 0, 1, g.mult), pair_name(a, b) + " u" + std::to_string(c)))
            return w;
        }
    return std::nullopt;
  });
  rep.run("block.unit", [&]() -> std::optional<Witness> {
    const Tensor one = Tensor::vector(k, g.unit);
    for (std::size_t a = 0; a < k; ++a) {
      if (auto w = differ(contract(outer(one, x(a)), 0, 1, g.mult), x(a), "1 u" + std::to_string(a))) return w;
      if (auto w = differ(contract(outer(x(a), one), 0, 1, g.mult), x(a), "u" + std::to_string(a) + " 1")) return w;
    }
    return std::nullopt;
  });
  rep.run("block.coassociative", [&]() -> std::optional<Witness> {
    for (std::size_t a = 0; a < k; ++a)
      if (auto w = differ(coact(rho(a), 0), H.comul(rho(a), 1), "u" + std::to_string(a))) return w;
    return std::nullopt;
  });
  rep.run("block.counit", [&]() -> std::optional<Witness> {
    for (std::size_t a = 0; a < k; ++a)
      if (auto w = differ(H.counit_leg(rho(a), 1), x(a), "u" + std::to_string(a))) return w;
    return std::nullopt;
  });
  rep.run("block.multiplicative", [&]() -> std::optional<Witness> {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        Tensor prod = contract(outer(x(a), x(b)), 0, 1, g.mult);
        Tensor lhs = coact(prod, 0);
        Tensor rhs = permute(outer(rho(a), rho(b)), {0, 2, 1, 3});
        rhs = H.mul(contract(rhs, 0, 1, g.mult), 1, 2);
        if (auto w = differ(lhs, rhs, pair_name(a, b))) return w;
      }
    return std::nullopt;
  });
  rep.run("block.unit_coaction", [&] {
    return differ(coact(Tensor::vector(k, g.unit), 0), outer(Tensor::vector(k, g.unit), H.one_elem()), "1");
  });
  rep.run("block.galois_map_bijective", [&]() -> std::optional<Witness> {
    LinMap beta = tabulate(k * n, k * k, [&](std::size_t j) {
      Tensor t = coact(Tensor({k, k}, unit_vector(j)), 1);
      return contract(t, 0, 1, g.mult).terms();
    });
    if (beta.rows() == beta.cols() && rank(beta) == beta.cols()) return std::nullopt;
    return Witness{{"beta"}, "bijection of rank " + std::to_string(k * k), "rank " + std::to_string(rank(beta))};
  });
  rep.run("block.coinvariants_trivial", [&]() -> std::optional<Witness> {
    LinMap diff = tabulate(k * n, k, [&](std::size_t j) { return (rho(j) - outer(x(j), H.one_elem())).terms(); });
    Subspace co = kernel(diff);
    if (co.dim() == 1 && co.contains(g.unit)) return std::nullopt;
    return Witness{{"coinvariants"}, "k 1", "dimension " + std::to_string(co.dim())};
  });
  return rep;
}

Report check_face_structure(unsigned n) {
  Report rep("face algebra structure, N = " + std::to_string(n));
  const CertifiedPair p = certify_presented(face_algebra(n));
  const BraidedPtr b = transmute(p.r);
  const auto& H = b->H();
  const std::size_t c = std::size_t{n} * n;
  rep.set_info("dim_carrier", std::to_string(b->dim()));
  rep.set_info("dim_square", std::to_string(b->square.carrier.dim()));
  rep.run("transmutation.carrier", [&]() -> std::optional<Witness> {
    try {
      require_face_carrier(*b, n);
    } catch (const Error& e) {
      return Witness{{"carrier"}, "span{X^k_k(s)}, dimension " + std::to_string(c), e.what()};
    }
    return std::nullopt;
  });
  if (!rep.passed()) return rep;
  const TransmutationTables t = expected_transmutation(n);
  rep.run("transmutation.product", [&] { return table_difference(b->mult_full, t.mult, "product"); });
  rep.run("transmutation.comultiplication", [&] { return table_difference(b->comult_full, t.comult, "comultiplication"); });
  rep.run("transmutation.counit", [&] {
    return table_difference(compose(H.target().inclusion, b->counit_bar), t.counit, "counit");
  });
  rep.run("transmutation.unit", [&] {
    LinMap engine = tabulate(c, n, [&](std::size_t i) { return b->unit_bar.apply(H.target().project(block_unit(n, i))); });
    return table_difference(engine, t.unit, "unit");
  });
  rep.run("transmutation.antipode", [&] { return table_difference(b->antipode_bar, t.antipode, "antipode"); });
  rep.run("blocks.carrier_decomposition", [&]() -> std::optional<Witness> {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        block_hopf_data(*b, n, i);
      } catch (const Error& e) {
        return Witness{{"block " + std::to_string(i)}, "block-diagonal structure maps", e.what()};
      }
    }
    return std::nullopt;
  });
  rep.run("square.dimension", [&]() -> std::optional<Witness> {
    if (b->square.carrier.dim() == c * n) return std::nullopt;
    return Witness{{"_RH (x)_t _RH"}, std::to_string(c * n), std::to_string(b->square.carrier.dim())};
  });
  rep.run("square.block_support", [&]() -> std::optional<Witness> {
    std::vector<SparseVec> blocks;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) blocks.push_back(unit_vector((i * n + p) * c + i * n + q));
    if (same_span(b->square.carrier, span(c * c, blocks))) return std::nullopt;
    return Witness{{"_RH (x)_t _RH"}, "sum of H^i (x) H^i", "different span"};
  });
  if (!rep.passed()) return rep;
  std::vector<WeakHopfData> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(block_hopf_data(*b, n, i));
  rep.run("blocks.hopf_axioms", [&]() -> std::optional<Witness> {
    for (const auto& d : blocks) {
      WeakHopfAlgebra h(d);
      Report r = check_weak_hopf(h);
      if (const auto* f = r.first_failure())
        return Witness{{d.name, f->name}, "pass", f->witness ? f->witness->actual : f->note};
      if (!is_hopf(h)) return Witness{{d.name}, "Delta(1) = 1 (x) 1", "weak"};
    }
    return std::nullopt;
  });
  rep.run("blocks.isomorphic", [&]() -> std::optional<Witness> {
    // X^i_i(p) -> X^j_j(p) is the identity in block coordinates.
    for (std::size_t j = 1; j < n; ++j) {
      const auto &x = blocks[0], &y = blocks[j];
      const std::string at = "iota " + std::to_string(j) + " <- 0";
      if (auto w = table_difference(y.mult, x.mult, at + " product")) return w;
      if (auto w = table_difference(y.comult, x.comult, at + " comultiplication")) return w;
      if (auto w = table_difference(y.counit, x.counit, at + " counit")) return w;
      if (auto w = table_difference(y.antipode, x.antipode, at + " antipode")) return w;
      if (!vec_equal(y.unit, x.unit)) return Witness{{at + " unit"}, render_vec(x.unit), render_vec(y.unit)};
    }
    return std::nullopt;
  });
  rep.run("blocks.project_rh", [&]() -> std::optional<Witness> {
    const AlgebraObj rh = rh_comodule_algebra(b);
    for (std::size_t i = 0; i < n; ++i) {
      const BlockGaloisObject g = omega_project(*rh, n, i);
      const std::string at = "block " + std::to_string(i);
      if (!same_span(g.embedding, block_space(n, i))) return Witness{{at}, "H^i", "different subspace"};
      if (auto w = table_difference(g.mult, blocks[i].mult, at + " product")) return w;
      if (auto w = table_difference(g.coaction, blocks[i].comult, at + " coaction")) return w;
      if (const auto* f = check_block_galois(g).first_failure())
        return Witness{{at, f->name}, "pass", f->witness ? f->witness->actual : f->note};
    }
    return std::nullopt;
  });
  return rep;
}

CocycleAlgebra cocycle_algebra(unsigned n, const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroParameter, "cocycle parameter must be nonzero");
  const Field field = Field::cyclotomic(n);
  CocycleAlgebra out;
  out.n = n;
  out.a = a.in_field(field);
  out.mult = tabulate(n, std::size_t{n} * n, [&](std::size_t j) {
    const std::size_t m = j / n + j % n;
    return unit_vector(m % n, m >= n ? out.a : Scalar(1));
  });
  out.coaction = tabulate(std::size_t{n} * n, n, [&](std::size_t m) {
    SparseVec v;
    for (std::size_t p = 0; p < n; ++p)
      v.push_back(Entry{m * n + p, Scalar::root_power(field, static_cast<std::int64_t>((m * p) % n))});
    return v;
  });
  return out;
}

AlgebraObj cocycle_galois_object(const BraidedPtr& b, unsigned n, std::size_t component, const Scalar& a) {
  if (component >= n) throw Error(ErrorKind::InvalidInput, "block index out of range");
  const CocycleAlgebra ap = cocycle_algebra(n, a);
  require_face_carrier(*b, n);
  const auto& H = b->H();
  const std::size_t d = std::size_t{n} * n, c = b->dim();
  VectorSpace space{d, {}};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m) space.labels.push_back("u_" + std::to_string(j) + "^" + std::to_string(m));
  std::vector<LinMap> action;
  for (std::size_t h = 0; h < H.dim(); ++h) {
    const std::size_t i = h / (n * n), l = (h / n) % n, p = h % n;
    action.push_back(tabulate(d, d, [&](std::size_t col) {
      return p == 0 && col / n == l ? unit_vector(i * n + col % n) : SparseVec{};
    }));
  }
  const std::string name = "A_" + render_scalar(ap.a);
  ModulePtr module = make_module(b->base->algebra(), std::move(space), std::move(action), name);
  LinMap mult = tabulate(d, d * d, [&](std::size_t col) {
    const std::size_t x = col / d, y = col % d;
    if (x / n != y / n) return SparseVec{};
    SparseVec v = ap.mult.column((x % n) * n + y % n);
    for (auto& e : v) e.index += x / n * n;
    return v;
  });
  SparseVec unit;
  for (std::size_t j = 0; j < n; ++j) unit.push_back(Entry{j * n, Scalar(1)});
  // u_j^m -> g^(j)_m (x) u_j^m, transported from block `component`
  LinMap left = tabulate(c * d, d, [&](std::size_t col) {
    const std::size_t j = col / n, m = col % n;
    SparseVec v;
    for (const auto& e : ap.coaction.column(m)) v.push_back(Entry{(j * n + e.index % n) * d + col, e.value});
    normalize(v);
    return v;
  });
  const TruncatedTensor ba = truncated_tensor(b->module, module);
  LinMap right = compose(half_braiding_tau(*b, ba), compose(ba.carrier.projection, left));
  AlgebraObj out = make_comodule_algebra(name, b, module, mult, unit, std::move(left), std::move(right));
  if (const auto* f = certify_qc_galois(*out).first_failure())
    throw Error(ErrorKind::Uncertified, name + " fails " + f->name);
  return out;
}

Report check_omega_roundtrip(const BraidedPtr& b, unsigned n, std::size_t i, const Scalar& a) {
  const CocycleAlgebra ap = cocycle_algebra(n, a);
  Report rep("block " + std::to_string(i) + " of A_" + render_scalar(ap.a) + " against A'");
  const AlgebraObj obj = cocycle_galois_object(b, n, i, a);
  const BlockGaloisObject g = omega_project(*obj, n, i);
  rep.run("omega.embedding", [&]() -> std::optional<Witness> {
    for (std::size_t m = 0; m < n; ++m)
      if (g.embedding.dim() != n || !vec_equal(g.embedding.inclusion.column(m), unit_vector(i * n + m)))
        return Witness{{"u^" + std::to_string(m)}, "u_" + std::to_string(i) + "^" + std::to_string(m),
                       g.embedding.dim() == n ? render_vec(g.embedding.inclusion.column(m), &obj->labels())
                                              : "block of dimension " + std::to_string(g.embedding.dim())};
    return std::nullopt;
  });
  if (!rep.passed()) return rep;
  rep.run("omega.product", [&] { return table_difference(g.mult, ap.mult, "product"); });
  rep.run("omega.unit", [&]() -> std::optional<Witness> {
    if (vec_equal(g.unit, unit_vector(0))) return std::nullopt;
    return Witness{{"unit"}, "u^0", render_vec(g.unit)};
  });
  rep.run("omega.coaction", [&] { return table_difference(g.coaction, ap.coaction, "coaction"); });
  rep.merge(check_block_galois(g), "omega.");
  return rep;
}

Scalar cocycle_group_probe(const ComoduleAlgebra& a, const ComoduleAlgebra& b, unsigned n) {
  const std::size_t d = std::size_t{n} * n;
  if (a.dim() != d || b.dim() != d) throw Error(ErrorKind::GeneratorNotFound, "probe needs two cocycle objects");
  const AlgebraObj p = cotensor_algebra(a, b);
  const Cotensor box = cotensor(a, b.left_comodule());
  const Subspace& s = box.space;
  // Degree-one part: support on u_j^1 (x) u_k^1.
  std::vector<Index> other;
  for (Index x = 0; x < d * d; ++x)
    if ((x / d) % n != 1 || (x % d) % n != 1) other.push_back(x);
  const Subspace deg1 = kernel(s.inclusion.select_rows(other));
  const LinMap block0 = p->module->rho_of(block_unit(n, 0));
  SparseVec gen;
  for (const auto& v : deg1.inclusion.columns()) {
    gen = block0.apply(v);
    if (!gen.empty()) break;
  }
  if (gen.empty()) throw Error(ErrorKind::GeneratorNotFound, "no degree-one element in block 0 of " + p->name);
  const SparseVec amb = s.include(gen);
  if (amb.size() != 1) throw Error(ErrorKind::GeneratorNotFound, "degree-one element of " + p->name + " is not a pure tensor");
  gen = scale(gen, amb.front().value.inverse());
  SparseVec power = gen;
  const std::size_t k = p->dim();
  for (unsigned r = 1; r < n; ++r)
    power = p->mult.apply(outer(Tensor::vector(k, power), Tensor::vector(k, gen)).terms());
  const SparseVec e = block0.apply(p->unit);
  if (e.empty() || power.empty()) throw Error(ErrorKind::GeneratorNotFound, "generator power vanishes in " + p->name);
  const Scalar lambda = coefficient(power, e.front().index) / e.front().value;
  if (!vec_equal(power, scale(e, lambda)))
    throw Error(ErrorKind::GeneratorNotFound, "generator power is not a multiple of the block unit");
  return lambda;
}

std::optional<bool> same_cocycle_class(const Scalar& a, const Scalar& b, unsigned n) {
  auto x = as_rational(a), y = as_rational(b);
  if (!x || !y || *x == 0 || *y == 0) return std::nullopt;
  Rational q = *x / *y;
  q.canonicalize();
  if (q < 0 && n % 2 == 0) return std::nullopt;
  const Integer num = abs(q.get_num());
  if (exact_root(num, n) && exact_root(q.get_den(), n)) return true;
  return std::nullopt;
}

}  // namespace whakit
