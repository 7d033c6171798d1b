#include <doctest.h>

#include "helpers.hpp"
#include "whakit/face_algebra.hpp"

using namespace whakit;

TEST_SUITE("face_algebra") {
  TEST_CASE("structure for small N") {
    for (unsigned n : {2u, 3u}) {
      INFO("N = " << n);
      const Report rep = check_face_structure(n);
      CHECK(rep.passed());
      CHECK(rep.info().at("dim_carrier") == std::to_string(n * n));
      CHECK(rep.info().at("dim_square") == std::to_string(n * n * n));
    }
  }

  TEST_CASE("transmutation tables by hand for N = 2") {
    // Coordinates k*2 + s stand for X^k_k(s).
    const TransmutationTables t = expected_transmutation(2);
    CHECK(vec_equal(t.mult.column(1 * 4 + 1), unit_vector(1)));  // X^0_0(1)^2
    CHECK(t.mult.column(1 * 4 + 2).empty());                     // X^0_0(1) X^1_1(0)
    CHECK(vec_equal(t.antipode.column(3), unit_vector(3)));       // -1 = 1 mod 2
    SparseVec d;
    for (std::size_t w = 0; w < 2; ++w) d.push_back({(2 + w) * 4 + 2 + (1 - w), Scalar(1)});
    normalize(d);
    CHECK(vec_equal(t.comult.column(3), d));
  }

  TEST_CASE("blocks are Hopf algebras") {
    const BraidedPtr b = transmute(certify_presented(face_algebra(3)).r);
    for (std::size_t i = 0; i < 3; ++i) {
      const AlgebraPtr h = certify(block_hopf_data(*b, 3, i));
      CHECK(is_hopf(*h));
      CHECK(h->dim() == 3);
    }
    CHECK(block_unit(3, 1).size() == 3);
  }

  TEST_CASE("omega correspondence on cocycle objects") {
    const BraidedPtr b = transmute(certify_presented(face_algebra(2)).r);
    for (std::size_t i = 0; i < 2; ++i)
      for (long a : {1L, 2L, -1L}) {
        INFO("i = " << i << ", a = " << a);
        CHECK(check_omega_roundtrip(b, 2, i, Scalar(a)).passed());
      }
    const AlgebraObj obj = cocycle_galois_object(b, 2, 0, Scalar(2));
    const BlockGaloisObject g = omega_project(*obj, 2, 1);
    CHECK(g.embedding.dim() == 2);
    CHECK(check_block_galois(g).passed());
  }

  TEST_CASE("cocycle algebra relations") {
    const CocycleAlgebra c = cocycle_algebra(3, Scalar(5));
    // u * u^2 = a
    CHECK(vec_equal(c.mult.column(1 * 3 + 2), unit_vector(0, Scalar(5))));
    CHECK(vec_equal(c.mult.column(1 * 3 + 1), unit_vector(2)));
    CHECK_THROWS_AS(cocycle_algebra(3, Scalar(0)), Error);
  }

  TEST_CASE("N below two is refused") { CHECK_THROWS_AS(face_algebra(1), Error); }
}
