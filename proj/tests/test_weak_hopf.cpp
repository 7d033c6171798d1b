#include <doctest.h>

#include "helpers.hpp"
#include "whakit/face_algebra.hpp"

using namespace whakit;
using th::Dense;

namespace {

/// Face algebra tables written out from the defining formulas.
WeakHopfData face_oracle(unsigned n) {
  const std::size_t d = n * n * n;
  std::vector<std::tuple<Index, Index, Scalar>> mult, comult, counit, antipode;
  SparseVec unit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        const Index a = th::X(n, i, j, p);
        for (std::size_t l = 0; l < n; ++l) mult.emplace_back(th::X(n, i, l, p), a * d + th::X(n, j, l, p), Scalar(1));
        for (std::size_t u = 0; u < n; ++u) {
          const std::size_t v = th::mod(long(p) - long(u), n);
          comult.emplace_back(th::X(n, i, j, u) * d + th::X(n, i + u, j + u, v), a, Scalar(1));
        }
        if (p == 0) counit.emplace_back(0, a, Scalar(1));
        antipode.emplace_back(th::X(n, j + p, i + p, th::mod(-long(p), n)), a, Scalar(1));
        if (i == j) unit.push_back({a, Scalar(1)});
      }
  normalize(unit);
  WeakHopfData out;
  out.field = Field::cyclotomic(n);
  out.space = VectorSpace::numbered(d);
  out.mult = LinMap::from_triplets(d, d * d, mult);
  out.unit = unit;
  out.comult = LinMap::from_triplets(d * d, d, comult);
  out.counit = LinMap::from_triplets(1, d, counit);
  out.antipode = LinMap::from_triplets(d, d, antipode);
  return out;
}

Dense naive_comult(const WeakHopfData& h, const Dense& x) { return th::naive_apply(h.comult, x); }

Scalar naive_counit(const WeakHopfData& h, const Dense& x) {
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += x[i] * h.counit.at(0, i);
  return s;
}

/// eps_t(x) = eps(1_1 x) 1_2 and eps_s(x) = 1_1 eps(x 1_2).
Dense naive_eps(const WeakHopfData& h, const Dense& x, bool target) {
  const std::size_t d = h.space.dim;
  const Dense one = th::dense(h.unit, d);
  const Dense d1 = naive_comult(h, one);
  Dense out(d);
  for (std::size_t a = 0; a < d * d; ++a) {
    if (d1[a].is_zero()) continue;
    const std::size_t l = a / d, r = a % d;
    const Dense e_l = th::dense(unit_vector(l), d), e_r = th::dense(unit_vector(r), d);
    const Scalar c = target ? naive_counit(h, th::naive_mult(h, e_l, x)) : naive_counit(h, th::naive_mult(h, x, e_r));
    if (c.is_zero()) continue;
    out[target ? r : l] += d1[a] * c;
  }
  return out;
}

/// m (id (x) S) Delta or m (S (x) id) Delta.
Dense naive_convolution(const WeakHopfData& h, const Dense& x, bool antipode_right) {
  const std::size_t d = h.space.dim;
  const Dense dx = naive_comult(h, x);
  Dense out(d);
  for (std::size_t a = 0; a < d * d; ++a) {
    if (dx[a].is_zero()) continue;
    Dense l = th::dense(unit_vector(a / d), d), r = th::dense(unit_vector(a % d), d);
    if (antipode_right) r = th::naive_apply(h.antipode, r);
    else l = th::naive_apply(h.antipode, l);
    const Dense p = th::naive_mult(h, l, r);
    for (std::size_t k = 0; k < d; ++k) out[k] += dx[a] * p[k];
  }
  return out;
}

void spot_check(const WeakHopfData& h, Lcg& g) {
  const std::size_t d = h.space.dim;
  const SparseVec xs = th::random_element(g, d, h.field), ys = th::random_element(g, d, h.field),
                  zs = th::random_element(g, d, h.field);
  const Dense x = th::dense(xs, d), y = th::dense(ys, d), z = th::dense(zs, d);
  INFO("x = " << render_vec(xs, &h.space.labels));
  CHECK(th::dense_eq(th::naive_mult(h, th::naive_mult(h, x, y), z), th::naive_mult(h, x, th::naive_mult(h, y, z))));
  CHECK(th::dense_eq(naive_comult(h, th::naive_mult(h, x, y)),
                     th::naive_mult2(h, naive_comult(h, x), naive_comult(h, y))));
  // (eps (x) id) Delta = id
  const Dense dx = naive_comult(h, x);
  Dense left(d);
  for (std::size_t a = 0; a < d * d; ++a)
    if (!dx[a].is_zero()) left[a % d] += dx[a] * h.counit.at(0, a / d);
  CHECK(th::dense_eq(left, x));
  CHECK(th::dense_eq(naive_convolution(h, x, true), naive_eps(h, x, true)));
  CHECK(th::dense_eq(naive_convolution(h, x, false), naive_eps(h, x, false)));

  // The library's own evaluation agrees with the naive one.
  const WeakHopfAlgebra alg(h);
  CHECK(vec_equal(alg.multiply(xs, ys), th::sparse(th::naive_mult(h, x, y))));
  CHECK(vec_equal(alg.comultiply(xs), th::sparse(dx)));
  CHECK(vec_equal(alg.epsilon_t(xs), th::sparse(naive_eps(h, x, true))));
  CHECK(vec_equal(alg.epsilon_s(xs), th::sparse(naive_eps(h, x, false))));
}

}  // namespace

TEST_SUITE("weak_hopf") {
  TEST_CASE("catalog entries certify") {
    for (const std::string name : {"sweedler", "group_zn:1", "group_zn:2", "group_zn:5", "klein", "face:2", "face:3"}) {
      INFO(name);
      const Report rep = check_weak_hopf(WeakHopfAlgebra(catalog(name).algebra));
      CHECK(rep.passed());
    }
  }

  TEST_CASE("Sweedler's algebra") {
    const AlgebraPtr h = certify(sweedler().algebra);
    const SparseVec g = unit_vector(1), x = unit_vector(2), gx = unit_vector(3);
    CHECK(h->multiply(x, x).empty());
    CHECK(vec_equal(h->antipode(x), gx));
    CHECK(vec_equal(h->multiply(g, g), h->one()));
    CHECK(vec_equal(h->multiply(x, g), scale(gx, Scalar(-1))));
    CHECK(vec_equal(h->comultiply(x), add(unit_vector(0 * 4 + 2), unit_vector(2 * 4 + 1))));
    CHECK(is_hopf(*h));
  }

  TEST_CASE("face algebra tables match the defining formulas") {
    for (unsigned n : {2u, 3u, 4u}) {
      INFO("N = " << n);
      const WeakHopfData lib = face_algebra(n).algebra, ref = face_oracle(n);
      CHECK(map_eq(lib.mult, ref.mult));
      CHECK(vec_equal(lib.unit, ref.unit));
      CHECK(map_eq(lib.comult, ref.comult));
      CHECK(map_eq(lib.counit, ref.counit));
      CHECK(map_eq(lib.antipode, ref.antipode));
    }
  }

  TEST_CASE("face algebra is weak, regular and not Hopf") {
    const AlgebraPtr h = certify(face_algebra(2).algebra);
    CHECK_FALSE(is_hopf(*h));
    CHECK(is_regular(*h));
    CHECK(h->target().dim() == 2);
    CHECK(h->source().dim() == 2);
  }

  TEST_CASE("group algebras are Hopf with one-dimensional base") {
    for (unsigned n = 1; n <= 4; ++n) {
      const AlgebraPtr h = certify(group_zn(n).algebra);
      CHECK(is_hopf(*h));
      CHECK(h->target().dim() == 1);
    }
  }

  TEST_CASE("random non-basis elements satisfy the axioms") {
    Lcg g(2024);
    const WeakHopfData face3 = face_algebra(3).algebra, sw = sweedler().algebra, z4 = group_zn(4).algebra;
    for (int t = 0; t < 40; ++t) spot_check(face3, g);
    for (int t = 0; t < 40; ++t) spot_check(sw, g);
    for (int t = 0; t < 20; ++t) spot_check(z4, g);
  }

  TEST_CASE("corrupted antipode is rejected with a named check") {
    WeakHopfData d = face_algebra(3).algebra;
    d.antipode.set_column(th::X(3, 1, 1, 0), {});
    const Report rep = check_weak_hopf(WeakHopfAlgebra(d));
    REQUIRE_FALSE(rep.passed());
    const CheckResult* f = rep.first_failure();
    CHECK(f->name.rfind("antipode.", 0) == 0);
    REQUIRE(f->witness.has_value());
    CHECK_FALSE(f->witness->indices.empty());
    CHECK_THROWS_AS(certify(d), Error);
  }

  TEST_CASE("non-associative product is rejected") {
    WeakHopfData d = sweedler().algebra;
    d.mult.set_column(2 * 4 + 1, unit_vector(3));
    const Report rep = check_weak_hopf(WeakHopfAlgebra(d));
    REQUIRE_FALSE(rep.passed());
    CHECK(rep.first_failure()->name == "algebra.associativity");
  }

  TEST_CASE("shape errors") {
    WeakHopfData d = sweedler().algebra;
    d.antipode = LinMap::identity(3);
    CHECK_THROWS_AS((void)WeakHopfAlgebra(d), Error);
  }
}
