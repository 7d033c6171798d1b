#include <doctest.h>

#include "helpers.hpp"
#include "whakit/linalg.hpp"

using namespace whakit;

namespace {

LinMap random_map(Lcg& g, std::size_t rows, std::size_t cols, unsigned density) {
  std::vector<std::tuple<Index, Index, Scalar>> t;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (g.below(10) < density) t.emplace_back(r, c, Scalar(g.between(-3, 3)));
  return LinMap::from_triplets(rows, cols, t);
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank plus nullity") {
    Lcg g(3);
    for (int t = 0; t < 50; ++t) {
      const std::size_t rows = 1 + g.below(7), cols = 1 + g.below(7);
      const LinMap f = random_map(g, rows, cols, 4);
      const Subspace k = kernel(f);
      CHECK(rank(f) + k.dim() == cols);
      for (const auto& v : k.inclusion.columns()) CHECK(f.apply(v).empty());
      const Subspace im = image(f);
      for (const auto& c : f.columns()) CHECK(im.contains(c));
    }
  }

  TEST_CASE("inverse and solve") {
    Lcg g(5);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + g.below(6);
      // Unit upper triangular times a permutation-free lower factor: invertible.
      LinMap u = LinMap::identity(n), l = LinMap::identity(n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < c; ++r) {
          SparseVec col = u.column(c);
          axpy(col, Scalar(g.between(-2, 2)), unit_vector(r));
          u.set_column(c, col);
          SparseVec lc = l.column(r);
          axpy(lc, Scalar(g.between(-2, 2)), unit_vector(c));
          l.set_column(r, lc);
        }
      const LinMap f = compose(u, l);
      auto inv = inverse(f);
      REQUIRE(inv.has_value());
      CHECK(map_eq(compose(f, *inv), LinMap::identity(n)));
      CHECK(map_eq(compose(*inv, f), LinMap::identity(n)));
      const SparseVec y = th::random_element(g, n + 1, Field::rational());
      SparseVec y_trunc;
      for (const auto& e : y)
        if (e.index < n) y_trunc.push_back(e);
      auto x = solve(f, y_trunc);
      REQUIRE(x.has_value());
      CHECK(vec_equal(f.apply(*x), y_trunc));
    }
    CHECK_FALSE(inverse(LinMap::zero(2, 2)).has_value());
  }

  TEST_CASE("kronecker product follows the lexicographic convention") {
    Lcg g(9);
    const LinMap f = random_map(g, 3, 2, 6), h = random_map(g, 2, 4, 6);
    const LinMap fh = tensor(f, h);
    REQUIRE(fh.rows() == 6);
    REQUIRE(fh.cols() == 8);
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t b = 0; b < 2; ++b) CHECK((fh.at(a * 2 + b, m * 4 + n) == f.at(a, m) * h.at(b, n)));
  }

  TEST_CASE("split idempotent") {
    // Projection onto span{e0 + e1} along e1.
    const LinMap p = LinMap::from_triplets(2, 2, {{0, 0, Scalar(1)}, {1, 0, Scalar(1)}});
    REQUIRE(is_idempotent(p));
    const Subspace s = split_idempotent(p);
    CHECK(s.dim() == 1);
    CHECK(map_eq(s.projector(), p));
    CHECK(map_eq(compose(s.projection, s.inclusion), LinMap::identity(1)));
    const LinMap not_idem = LinMap::from_triplets(1, 1, {{0, 0, Scalar(2)}});
    CHECK_THROWS_AS(split_idempotent(not_idem), Error);
  }

  TEST_CASE("spans are canonical") {
    const Subspace a = span(3, {unit_vector(0, 2), add(unit_vector(0), unit_vector(2))});
    const Subspace b = span(3, {unit_vector(2, -1), unit_vector(0, 5)});
    CHECK(same_span(a, b));
    CHECK(map_eq(a.inclusion, b.inclusion));
  }
}
