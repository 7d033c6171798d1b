#include <doctest.h>

#include "helpers.hpp"
#include "whakit/face_algebra.hpp"

using namespace whakit;
using th::Dense;

namespace {

/// R = sum X^i_j(p) (x) X^j_{j+p}(i-j) w^{-p(i-j)}.
SparseVec face_r_oracle(unsigned n) {
  const std::size_t d = n * n * n;
  const Field f = Field::cyclotomic(n);
  SparseVec r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        const long ij = long(i) - long(j);
        r.push_back({th::X(n, i, j, p) * d + th::X(n, j, j + p, th::mod(ij, n)),
                     Scalar::root_power(f, -long(p) * ij)});
      }
  normalize(r);
  return r;
}

/// Embeds a two-leg element into H^(x)3 at legs (a, b), the third leg being 1.
Dense embed(const WeakHopfData& h, const SparseVec& r, int a, int b) {
  const std::size_t d = h.space.dim;
  Dense out(d * d * d);
  for (const auto& e : r)
    for (const auto& u : h.unit) {
      std::size_t idx[3];
      idx[a] = e.index / d;
      idx[b] = e.index % d;
      idx[3 - a - b] = u.index;
      out[(idx[0] * d + idx[1]) * d + idx[2]] += e.value * u.value;
    }
  return out;
}

Dense mult3(const WeakHopfData& h, const Dense& x, const Dense& y) {
  const std::size_t d = h.space.dim;
  Dense out(d * d * d);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b].is_zero()) continue;
      const std::size_t a0 = a / (d * d), a1 = (a / d) % d, a2 = a % d;
      const std::size_t b0 = b / (d * d), b1 = (b / d) % d, b2 = b % d;
      for (const auto& e0 : h.mult.column(a0 * d + b0))
        for (const auto& e1 : h.mult.column(a1 * d + b1))
          for (const auto& e2 : h.mult.column(a2 * d + b2))
            out[(e0.index * d + e1.index) * d + e2.index] += x[a] * y[b] * e0.value * e1.value * e2.value;
    }
  }
  return out;
}

bool yang_baxter(const PresentedAlgebra& p) {
  const WeakHopfData& h = p.algebra;
  const Dense r12 = embed(h, *p.r, 0, 1), r13 = embed(h, *p.r, 0, 2), r23 = embed(h, *p.r, 1, 2);
  return th::dense_eq(mult3(h, mult3(h, r12, r13), r23), mult3(h, mult3(h, r23, r13), r12));
}

RMatrixPtr certified_r(const std::string& name) { return certify_presented(catalog(name)).r; }

}  // namespace

TEST_SUITE("quasitriangular") {
  TEST_CASE("face R-matrix matches the closed formula") {
    for (unsigned n : {2u, 3u, 4u}) {
      INFO("N = " << n);
      CHECK(vec_equal(*face_algebra(n).r, face_r_oracle(n)));
    }
  }

  TEST_CASE("catalog R-matrices certify with derived identities") {
    for (const std::string name : {"sweedler", "group_zn:3", "klein", "face:2", "face:3"}) {
      INFO(name);
      const RMatrixPtr r = certified_r(name);
      REQUIRE(r);
      const Report derived = check_derived_r_identities(*r);
      CHECK(derived.passed());
      CHECK(check_quasitriangular(*r).find("r.yang_baxter") != nullptr);
    }
  }

  TEST_CASE("Yang-Baxter by direct expansion") {
    CHECK(yang_baxter(sweedler()));
    CHECK(yang_baxter(face_algebra(2)));
    CHECK(yang_baxter(group_zn(3)));
  }

  TEST_CASE("triangularity") {
    CHECK(is_triangular(*certified_r("group_zn:4")));
    CHECK(is_triangular(*certified_r("sweedler")));
    const Report rep = check_quasitriangular(*certified_r("group_zn:2"));
    CHECK(rep.flag("triangular") == std::optional<bool>(true));
  }

  TEST_CASE("weak inverse is recovered by solving") {
    for (unsigned n : {2u, 3u}) {
      const PresentedAlgebra p = face_algebra(n);
      const AlgebraPtr h = certify(p.algebra);
      const std::size_t d = h->dim();
      auto solved = solve_r_bar(*h, Tensor({d, d}, *p.r));
      REQUIRE(solved.has_value());
      CHECK(vec_equal(solved->terms(), *p.r_bar));
    }
  }

  TEST_CASE("trivial R on Sweedler's algebra fails") {
    const AlgebraPtr h = certify(sweedler().algebra);
    const Tensor one({4, 4}, unit_vector(0));
    const RMatrix r(h, one, one);
    const Report rep = check_quasitriangular(r);
    REQUIRE_FALSE(rep.passed());
    CHECK(rep.first_failure()->name == "r.intertwines_comultiplication");
    CHECK_THROWS_AS(certify_r(h, one, one), Error);
  }

  TEST_CASE("uncertified algebras are refused") {
    const auto h = std::make_shared<WeakHopfAlgebra>(sweedler().algebra);
    const Tensor one({4, 4}, unit_vector(0));
    CHECK_THROWS_AS(certify_r(h, one, one), Error);
  }
}
