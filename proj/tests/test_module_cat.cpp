#include <doctest.h>

#include "helpers.hpp"
#include "whakit/face_algebra.hpp"
#include "whakit/module_cat.hpp"

using namespace whakit;

namespace {

CertifiedPair pair_of(const std::string& name) { return certify_presented(catalog(name)); }

/// Rank by dense row reduction.
std::size_t dense_rank(std::vector<th::Dense> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c].is_zero()) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    const Scalar inv = rows[rank][c].inverse();
    for (std::size_t k = rank + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      const Scalar f = rows[k][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("module_cat") {
  TEST_CASE("regular and unit modules") {
    for (const std::string name : {"sweedler", "face:2", "face:3"}) {
      INFO(name);
      const CertifiedPair p = pair_of(name);
      CHECK(check_module(*regular_module(p.h)).passed());
      const ModulePtr u = unit_object(p.h);
      CHECK(check_module(*u).passed());
      CHECK(u->dim() == p.h->target().dim());
    }
  }

  TEST_CASE("monoidal coherence on samples") {
    for (const std::string name : {"sweedler", "face:2"}) {
      INFO(name);
      const CertifiedPair p = pair_of(name);
      const std::vector<ModulePtr> samples{regular_module(p.h), unit_object(p.h)};
      const Report rep = check_monoidal_coherence(*p.r, samples);
      CHECK(rep.passed());
      CHECK(rep.find("braiding.hexagons") != nullptr);
    }
  }

  TEST_CASE("truncated square of the regular face module has dimension N^5") {
    // Oracle for N = 2: rank of x -> Delta(1) x on H (x) H from the raw tables.
    const WeakHopfData h = face_algebra(2).algebra;
    const std::size_t d = h.space.dim;
    const th::Dense d1 = th::naive_apply(h.comult, th::dense(h.unit, d));
    std::vector<th::Dense> images;
    for (std::size_t a = 0; a < d * d; ++a) images.push_back(th::naive_mult2(h, d1, th::dense(unit_vector(a), d * d)));
    CHECK(dense_rank(images) == 32);
    for (unsigned n : {2u, 3u}) {
      const ModulePtr m = regular_module(pair_of("face:" + std::to_string(n)).h);
      CHECK(truncated_tensor(m, m).carrier.dim() == n * n * n * n * n);
    }
  }

  TEST_CASE("truncated tensor with the unit object") {
    const CertifiedPair p = pair_of("face:3");
    const ModulePtr m = regular_module(p.h), u = unit_object(p.h);
    const TruncatedTensor um = truncated_tensor(u, m), mu = truncated_tensor(m, u);
    CHECK(um.carrier.dim() == m->dim());
    CHECK(mu.carrier.dim() == m->dim());
    const Iso l = left_unitor(um);
    CHECK(map_eq(compose(l.forward, l.inverse), LinMap::identity(m->dim())));
    CHECK(is_h_linear(l.forward, *um.module, *m));
  }

  TEST_CASE("trivial R braids regular modules by the flip") {
    const CertifiedPair p = pair_of("group_zn:3");
    const ModulePtr m = regular_module(p.h);
    const LinMap c = braiding_full(*p.r, *m, *m);
    const std::size_t d = m->dim();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) CHECK(vec_equal(c.column(a * d + b), unit_vector(b * d + a)));
  }

  TEST_CASE("endomorphisms of the regular module") {
    // End_H(H) is H^op: one right multiplication per basis element.
    for (const std::string name : {"sweedler", "face:2"}) {
      const CertifiedPair p = pair_of(name);
      const ModulePtr m = regular_module(p.h);
      CHECK(hom_space(*m, *m).dim() == p.h->dim());
      CHECK(is_h_linear(p.h->right_mult_by(unit_vector(1)), *m, *m));
    }
    // Sweedler's algebra is not commutative, so left multiplication by g is not.
    const CertifiedPair p = pair_of("sweedler");
    const ModulePtr m = regular_module(p.h);
    CHECK_FALSE(is_h_linear(p.h->left_mult_by(unit_vector(1)), *m, *m));
  }

  TEST_CASE("a module law violation is reported") {
    const CertifiedPair p = pair_of("sweedler");
    std::vector<LinMap> action = regular_module(p.h)->action();
    action[2] = LinMap::identity(4);
    const HModule bad(p.h, VectorSpace::numbered(4), action, "broken");
    CHECK_FALSE(check_module(bad).passed());
  }
}
