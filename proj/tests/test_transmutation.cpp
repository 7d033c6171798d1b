#include <doctest.h>

#include "helpers.hpp"
#include "whakit/transmutation.hpp"

using namespace whakit;

namespace {

BraidedPtr braided(const std::string& name) { return transmute(certify_presented(catalog(name)).r); }

}  // namespace

TEST_SUITE("transmutation") {
  TEST_CASE("braided Hopf axioms") {
    for (const std::string name : {"face:2", "face:3", "sweedler", "group_zn:3"}) {
      INFO(name);
      const BraidedPtr b = braided(name);
      const Report rep = check_braided_hopf(*b);
      CHECK(rep.passed());
    }
  }

  TEST_CASE("tau surrogate holds for trivial R on a cocommutative algebra") {
    CHECK(check_cocommutative_surrogate(*braided("group_zn:3")).passed());
    CHECK(check_cocommutative_surrogate(*braided("klein")).passed());
  }

  TEST_CASE("carrier dimensions") {
    for (unsigned n : {2u, 3u, 4u}) {
      const BraidedPtr b = braided("face:" + std::to_string(n));
      CHECK(b->dim() == n * n);
      CHECK(b->square.carrier.dim() == n * n * n);
    }
    CHECK(braided("sweedler")->dim() == 4);
  }

  TEST_CASE("trivial R leaves group algebras unchanged") {
    const CertifiedPair p = certify_presented(group_zn(4));
    const BraidedPtr b = transmute(p.r);
    REQUIRE(b->dim() == 4);
    CHECK(map_eq(b->carrier.inclusion, LinMap::identity(4)));
    CHECK(map_eq(b->mult_full, p.h->mult_map()));
    CHECK(map_eq(b->comult_full, p.h->comult_map()));
    CHECK(map_eq(b->antipode_bar, p.h->antipode_map()));
  }

  TEST_CASE("the carrier centralizes the source subalgebra") {
    const CertifiedPair p = certify_presented(catalog("face:3"));
    const Subspace c = centralizer_subalgebra(*p.h);
    for (const auto& x : c.inclusion.columns())
      for (const auto& y : p.h->source().inclusion.columns())
        CHECK(vec_equal(p.h->multiply(x, y), p.h->multiply(y, x)));
  }

  TEST_CASE("uncertified R-matrix is refused") {
    const AlgebraPtr h = certify(sweedler().algebra);
    const Tensor one({4, 4}, unit_vector(0));
    const auto r = std::make_shared<RMatrix>(h, one, one);
    CHECK_THROWS_AS(transmute(r), Error);
  }
}
