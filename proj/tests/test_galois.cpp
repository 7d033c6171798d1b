#include <doctest.h>

#include "helpers.hpp"
#include "whakit/face_algebra.hpp"
#include "whakit/galois.hpp"
#include "whakit/verify.hpp"

using namespace whakit;

namespace {

BraidedPtr braided(const std::string& name) { return transmute(certify_presented(catalog(name)).r); }

const BraidedPtr& face2() {
  static const BraidedPtr b = braided("face:2");
  return b;
}

std::vector<std::pair<RHComodule, RHComodule>> diagram_pairs(const BraidedPtr& b) {
  const auto s = standard_comodule_samples(b);
  return {{s[2], s[2]}, {s[1], s[2]}};
}

std::vector<ModulePtr> plain_samples(const BraidedPtr& b) {
  return {regular_module(b->base->algebra()), b->unit_module};
}

}  // namespace

TEST_SUITE("galois") {
  TEST_CASE("_RH is a quantum commutative bi-Galois object") {
    for (const std::string name : {"face:2", "face:3", "sweedler"}) {
      INFO(name);
      const BraidedPtr b = braided(name);
      const AlgebraObj a = rh_comodule_algebra(b);
      CHECK(certify_qc_galois(*a).passed());
      CHECK(is_galois(*a));
      CHECK(is_quantum_commutative(*a));
      CHECK(is_cocommutative(*a));
      CHECK(check_identity_cotensor(b, standard_comodule_samples(b)).passed());
      CHECK(check_trivializable(*a, plain_samples(b)).passed());
      CHECK(coinvariants(*a, Side::Right).dim() == b->H().target().dim());
    }
  }

  TEST_CASE("cotensor with _RH has the dimension of the comodule") {
    const BraidedPtr b = face2();
    const AlgebraObj a = rh_comodule_algebra(b);
    for (const auto& m : standard_comodule_samples(b)) CHECK(cotensor(*a, m).space.dim() == m.module->dim());
  }

  TEST_CASE("cocycle objects commute with the braided autoequivalence") {
    const std::vector<std::pair<unsigned, long>> cases{{2, 1}, {2, 2}, {2, -1}, {3, 1}, {3, 2}};
    for (const auto& [n, a] : cases) {
      INFO("N = " << n << ", a = " << a);
      const BraidedPtr b = n == 2 ? face2() : braided("face:3");
      const AlgebraObj obj = cocycle_galois_object(b, n, 0, Scalar(a));
      CHECK(obj->dim() == n * n);
      CHECK(check_autoequivalence_diagram(*obj, diagram_pairs(b)).passed());
      CHECK(check_trivializable(*obj, plain_samples(b), 3).passed());
    }
  }

  TEST_CASE("zero parameter is refused") {
    try {
      cocycle_galois_object(face2(), 2, 0, Scalar(0));
      FAIL("expected ZeroParameter");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ZeroParameter);
    }
  }

  TEST_CASE("twisted Klein control is bi-Galois but fails the diagram") {
    const BraidedPtr b = braided("klein");
    const AlgebraObj k = twisted_klein_control(b);
    const Report rep = certify_qc_galois(*k);
    std::vector<std::string> failed;
    for (const auto& c : rep.checks())
      if (!c.passed) failed.push_back(c.name);
    CHECK(failed == std::vector<std::string>{"quantum_commutative.braided_product"});
    CHECK(is_galois(*k));
    CHECK(is_cocommutative(*k));
    const RHComodule rh = regular_comodule(b);
    const auto w = autoequivalence_witness(*k, rh, rh);
    REQUIRE(w.has_value());
    CHECK(w->expected != w->actual);
    const Report diagram = check_autoequivalence_diagram(*k, {{rh, rh}});
    REQUIRE_FALSE(diagram.passed());
    CHECK(diagram.first_failure()->name == "autoequivalence.diagram");
  }

  TEST_CASE("breaking cocommutativity is detected") {
    const AlgebraObj a = cocycle_galois_object(face2(), 2, 0, Scalar(2));
    auto swapped = std::make_shared<ComoduleAlgebra>(*a);
    swapped->right = tabulate(a->right->rows(), a->right->cols(), [&](std::size_t j) {
      SparseVec v;
      for (const auto& e : a->right->column(j)) {
        const Index m = e.index / 4, q = e.index % 4;
        v.push_back(Entry{m * 4 + (q / 2) * 2 + (q % 2 ^ 1), e.value});
      }
      normalize(v);
      return v;
    });
    const Report rep = check_cocommutative(*swapped);
    REQUIRE_FALSE(rep.passed());
    CHECK(rep.first_failure()->name == "cocommutative.right_is_tau_of_left");
  }

  TEST_CASE("inverse objects") {
    for (long a : {2L, -1L}) {
      INFO("a = " << a);
      const AlgebraObj obj = cocycle_galois_object(face2(), 2, 0, Scalar(a));
      const InverseObject inv = inverse_galois_object(*obj);
      CHECK(inv.algebra->dim() == obj->dim());
      const Report rep = check_inverse(*obj, inv);
      CHECK(rep.passed());
      CHECK(rep.find("inverse.a_box_inverse.bijective") != nullptr);
    }
    const AlgebraObj rh = rh_comodule_algebra(braided("sweedler"));
    CHECK(check_inverse(*rh, inverse_galois_object(*rh)).passed());
  }

  TEST_CASE("group law on cocycle classes") {
    const BraidedPtr b = face2();
    const std::vector<std::pair<Scalar, Scalar>> pairs{{Scalar(1), Scalar(2)},
                                                       {Scalar(2), Scalar(2)},
                                                       {Scalar(2), Scalar(-1)},
                                                       {Scalar(-1), Scalar(-1)},
                                                       {Scalar(2), Scalar::fraction(1, 2)}};
    for (const auto& [x, y] : pairs) {
      INFO(render_scalar(x) << " * " << render_scalar(y));
      const AlgebraObj ax = cocycle_galois_object(b, 2, 0, x), ay = cocycle_galois_object(b, 2, 0, y);
      const Scalar probe = cocycle_group_probe(*ax, *ay, 2);
      CHECK((probe == x * y));
      CHECK(cotensor_algebra(*ax, *ay)->dim() == b->dim());
      CHECK(check_group_law(*ax, *ay).passed());
    }
    // 2 * 1/2 = 1: the product is the trivial class.
    CHECK(same_cocycle_class(Scalar(2) * Scalar::fraction(1, 2), Scalar(1), 2) == std::optional<bool>(true));
  }

  TEST_CASE("cocycle class comparison") {
    CHECK(same_cocycle_class(Scalar(1), Scalar(4), 2) == std::optional<bool>(true));
    CHECK(same_cocycle_class(Scalar(2), Scalar(16), 3) == std::optional<bool>(true));
    CHECK(same_cocycle_class(Scalar::fraction(1, 9), Scalar(1), 2) == std::optional<bool>(true));
    CHECK_FALSE(same_cocycle_class(Scalar(2), Scalar(8), 3).has_value());
  }
}
