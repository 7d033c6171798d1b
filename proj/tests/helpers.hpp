#pragma once

// Generators and naive reference evaluations shared by the test files.  The
// references work entry by entry on structure constants and never go through
// the library's tensor pipelines.

#include <string>
#include <vector>

#include "whakit/examples.hpp"
#include "whakit/rng.hpp"

namespace th {

using namespace whakit;

inline Scalar small_rational(Lcg& g) { return Scalar::fraction(g.between(-5, 5), g.between(1, 4)); }

inline Scalar random_scalar(Lcg& g, const Field& f) {
  if (f.is_rational()) return small_rational(g);
  std::vector<Rational> c;
  for (unsigned k = 0; k < f.degree(); ++k) {
    Rational r(g.between(-3, 3), g.between(1, 3));
    r.canonicalize();
    c.push_back(r);
  }
  return Scalar(Cyclotomic(f.order, c));
}

/// A vector with at least two non-zero coordinates, so never a multiple of a
/// basis vector.
inline SparseVec random_element(Lcg& g, std::size_t dim, const Field& f) {
  SparseVec v;
  while (v.size() < 2) {
    v.clear();
    const std::size_t terms = 2 + g.below(4);
    for (std::size_t t = 0; t < terms; ++t) v.push_back({g.below(dim), random_scalar(g, f)});
    normalize(v);
  }
  return v;
}

/// Dense vector over a flat index range.
using Dense = std::vector<Scalar>;

inline Dense dense(const SparseVec& v, std::size_t n) {
  Dense out(n);
  for (const auto& e : v) out[e.index] = e.value;
  return out;
}

inline SparseVec sparse(const Dense& d) {
  SparseVec out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) out.push_back({i, d[i]});
  return out;
}

/// Naive product in an algebra given by d x d^2 structure constants.
inline Dense naive_mult(const WeakHopfData& h, const Dense& x, const Dense& y) {
  const std::size_t d = h.space.dim;
  Dense out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      for (const auto& e : h.mult.column(i * d + j)) out[e.index] += x[i] * y[j] * e.value;
    }
  }
  return out;
}

/// Legwise product in H (x) H.
inline Dense naive_mult2(const WeakHopfData& h, const Dense& x, const Dense& y) {
  const std::size_t d = h.space.dim;
  Dense out(d * d);
  for (std::size_t a = 0; a < d * d; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < d * d; ++b) {
      if (y[b].is_zero()) continue;
      const auto& l = h.mult.column((a / d) * d + b / d);
      const auto& r = h.mult.column((a % d) * d + b % d);
      for (const auto& el : l)
        for (const auto& er : r) out[el.index * d + er.index] += x[a] * y[b] * el.value * er.value;
    }
  }
  return out;
}

inline Dense naive_apply(const LinMap& f, const Dense& x) {
  Dense out(f.rows());
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero())
      for (const auto& e : f.column(j)) out[e.index] += x[j] * e.value;
  return out;
}

inline bool dense_eq(const Dense& a, const Dense& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// Face algebra basis index of X^i_j(s).
inline std::size_t X(unsigned n, std::size_t i, std::size_t j, std::size_t s) {
  return (i % n) * n * n + (j % n) * n + s % n;
}

inline std::size_t mod(long a, unsigned n) { return static_cast<std::size_t>(((a % long(n)) + long(n)) % long(n)); }

}  // namespace th
