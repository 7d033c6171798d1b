#include <doctest.h>

#include "helpers.hpp"
#include "whakit/yetter_drinfeld.hpp"

using namespace whakit;

namespace {

BraidedPtr braided(const std::string& name) { return transmute(certify_presented(catalog(name)).r); }

}  // namespace

TEST_SUITE("yetter_drinfeld") {
  TEST_CASE("F and G are mutually inverse and monoidal") {
    for (const std::string name : {"face:2", "face:3", "sweedler"}) {
      INFO(name);
      const BraidedPtr b = braided(name);
      const Report rep = check_equivalence_roundtrip(b, standard_comodule_samples(b));
      CHECK(rep.passed());
      CHECK(rep.find("roundtrip.G_after_F") != nullptr);
      CHECK(rep.find("roundtrip.monoidal") != nullptr);
    }
  }

  TEST_CASE("comodule braiding") {
    for (const std::string name : {"face:2", "sweedler"}) {
      INFO(name);
      const BraidedPtr b = braided(name);
      BraidingOptions options;
      options.seed = 17;
      const Report rep = check_comodule_braiding(b, standard_comodule_samples(b), options);
      CHECK(rep.passed());
      CHECK(rep.find("comodule_braiding.hexagons") != nullptr);
      CHECK(rep.find("comodule_braiding.naturality") != nullptr);
    }
  }

  TEST_CASE("induced Yetter-Drinfeld modules") {
    const CertifiedPair p = certify_presented(catalog("face:2"));
    const YDModule yd = induced_yd(*p.r, regular_module(p.h));
    CHECK(check_yd(yd).passed());
    const BraidedPtr b = transmute(p.r);
    const RHComodule g = functor_G(b, yd);
    CHECK(check_rh_comodule(g).passed());
    CHECK(map_eq(functor_F(g).coaction, yd.coaction));
  }

  TEST_CASE("regular comodule and its Yetter-Drinfeld image") {
    const BraidedPtr b = braided("sweedler");
    const RHComodule rh = regular_comodule(b);
    CHECK(check_rh_comodule(rh).passed());
    CHECK(check_yd(functor_F(rh)).passed());
  }

  TEST_CASE("a broken coaction is reported") {
    const BraidedPtr b = braided("face:2");
    RHComodule rh = regular_comodule(b);
    rh.coaction = scale(rh.coaction, Scalar(2));
    CHECK_FALSE(check_rh_comodule(rh).passed());
  }
}
