#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nclp/detail/memo.hpp"
#include "nclp/enumerate.hpp"
#include "nclp/error.hpp"
#include "nclp/partition.hpp"
#include "nclp/rational.hpp"
#include "nclp/series.hpp"
#include "nclp/tree.hpp"

namespace nclp {

namespace detail {

// A sum over partitions of products of sequence entries only depends on which
// entries each partition multiplies together. These tables collect every
// partition of a given size under its sorted index multiset with a count, so
// the recursions below sum over all of NC(n) / NCL(n) without revisiting
// partitions that contribute the same monomial.
using Monomial = std::vector<int>;
using MonomialTable = std::map<Monomial, long long>;

// Key: sorted block sizes (indices into k_1..).
inline const MonomialTable& nc_monomials(int n) {
  static Memo<int, MonomialTable> memo;
  return memo.get(n, [n] {
    MonomialTable table;
    for (const auto& gamma : nc_cached(n)) {
      Monomial key;
      for (const Block& b : gamma.blocks()) key.push_back(static_cast<int>(b.size()));
      std::sort(key.begin(), key.end());
      ++table[key];
    }
    return table;
  });
}

// Key: sorted t-indices, one |B|-1 per block and one 0 per element of s(pi).
template <class Kind>
Monomial t_monomial(const Partition<Kind>& pi) {
  Monomial key;
  for (const Block& b : pi.blocks()) key.push_back(static_cast<int>(b.size()) - 1);
  key.insert(key.end(), non_minimal_elements(pi).size(), 0);
  std::sort(key.begin(), key.end());
  return key;
}

inline const MonomialTable& ncl_monomials(int n) {
  static Memo<int, MonomialTable> memo;
  return memo.get(n, [n] {
    MonomialTable table;
    for (const auto& pi : ncl_cached(n)) ++table[t_monomial(pi)];
    return table;
  });
}

// Key: (sorted block sizes of gamma, sorted block sizes of Kr(gamma)).
inline const std::map<std::pair<Monomial, Monomial>, long long>& kreweras_monomials(int n) {
  static Memo<int, std::map<std::pair<Monomial, Monomial>, long long>> memo;
  return memo.get(n, [n] {
    std::map<std::pair<Monomial, Monomial>, long long> table;
    for (const auto& gamma : nc_cached(n)) {
      Monomial left;
      Monomial right;
      for (const Block& b : gamma.blocks()) left.push_back(static_cast<int>(b.size()));
      const NCPartition complement = kreweras(gamma);
      for (const Block& b : complement.blocks()) right.push_back(static_cast<int>(b.size()));
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      ++table[{left, right}];
    }
    return table;
  });
}

template <class Tag>
Rational product(const Sequence<Tag>& seq, const Monomial& indices) {
  Rational out = 1;
  for (int i : indices) out *= seq[i];
  return out;
}

}  // namespace detail

// m_n = sum over NC(n) of prod_blocks k_|B|.
inline MomentSequence cumulants_to_moments(const CumulantSequence& kappa, const Limits& limits = Limits::defaults()) {
  check_limit("nc", kappa.order(), limits.nc);
  std::vector<Rational> m;
  for (int n = 1; n <= kappa.order(); ++n) {
    Rational sum = 0;
    for (const auto& [key, count] : detail::nc_monomials(n)) sum += count * detail::product(kappa, key);
    m.push_back(sum);
  }
  return MomentSequence(std::move(m));
}

// Inverts the moment-cumulant relation order by order; k_n enters m_n only
// through 1_n, with coefficient 1.
inline CumulantSequence moments_to_cumulants(const MomentSequence& m, const Limits& limits = Limits::defaults()) {
  check_limit("nc", m.order(), limits.nc);
  std::vector<Rational> k;
  for (int n = 1; n <= m.order(); ++n) {
    std::vector<Rational> padded = k;
    padded.push_back(0);  // k_n itself, never read
    const CumulantSequence known(std::move(padded));
    Rational rest = 0;
    for (const auto& [key, count] : detail::nc_monomials(n)) {
      if (key == detail::Monomial{n}) continue;
      rest += count * detail::product(known, key);
    }
    k.push_back(m[n] - rest);
  }
  return CumulantSequence(std::move(k));
}

// t_pi = prod_blocks t_{|B|-1} * prod_{s(pi)} t_0.
template <class Kind>
Rational t_weight(const Partition<Kind>& pi, const TCoeffSequence& t) {
  return detail::product(t, detail::t_monomial(pi));
}

// m_n = sum over NCL(n) of t_pi.
inline MomentSequence tcoeffs_to_moments(const TCoeffSequence& t, const Limits& limits = Limits::defaults()) {
  if (t[0] == 0) throw Error(ErrorKind::ZeroT0, "t_0 must be nonzero");
  check_limit("ncl", t.order(), limits.ncl);
  std::vector<Rational> m;
  for (int n = 1; n <= t.order(); ++n) {
    Rational sum = 0;
    for (const auto& [key, count] : detail::ncl_monomials(n)) sum += count * detail::product(t, key);
    m.push_back(sum);
  }
  return MomentSequence(std::move(m));
}

// Solves for t_{n-1}: it appears only in the 1_n term, as t_{n-1} t_0^{n-1}.
inline TCoeffSequence moments_to_tcoeffs(const MomentSequence& m, const Limits& limits = Limits::defaults()) {
  if (m[1] == 0) throw Error(ErrorKind::ZeroFirstMoment, "m_1 = 0: the element has zero first moment");
  check_limit("ncl", m.order(), limits.ncl);
  std::vector<Rational> t{m[1]};
  for (int n = 2; n <= m.order(); ++n) {
    detail::Monomial top(n - 1, 0);
    top.push_back(n - 1);
    const TCoeffSequence known(t);
    Rational rest = 0;
    for (const auto& [key, count] : detail::ncl_monomials(n)) {
      if (key == top) continue;
      rest += count * detail::product(known, key);
    }
    t.push_back((m[n] - rest) / pow(t[0], n - 1));
  }
  return TCoeffSequence(std::move(t));
}

// k_n as the sum of t_pi over the linked partitions connecting all of 1..n.
inline Rational cumulant_via_classes(const TCoeffSequence& t, int n, const Limits& limits = Limits::defaults()) {
  check_limit("trees", n, limits.trees);
  if (n > t.order()) throw Error(ErrorKind::OrderTooLow, "need t_0..t_" + std::to_string(n - 1));
  Rational sum = 0;
  for (const auto& pi : detail::single_class_cached(n)) sum += t_weight(pi, t);
  return sum;
}

// Product over elementary pieces (leaves included) of t_{child count}.
inline Rational eval_tree(const PlanarTree& tree, const TCoeffSequence& t) {
  Rational out = 1;
  for (const auto& view : elementary_decomposition(tree)) {
    if (view.child_count >= t.order()) {
      throw Error(ErrorKind::OrderTooLow, "tree needs t_" + std::to_string(view.child_count));
    }
    out *= t[view.child_count];
  }
  return out;
}

inline Rational cumulant_via_trees(const TCoeffSequence& t, int n, const Limits& limits = Limits::defaults()) {
  Rational sum = 0;
  for (const auto& tree : enumerate_planar_trees(n, limits)) sum += eval_tree(tree, t);
  return sum;
}

// Free cumulants of X+Y: the R-transforms add.
inline CumulantSequence free_additive(const CumulantSequence& x, const CumulantSequence& y) {
  if (x.order() != y.order()) throw Error(ErrorKind::SizeMismatch, "cumulant sequences differ in order");
  const TruncatedSeries sum = r_transform(x) + r_transform(y);
  return CumulantSequence(std::vector<Rational>(sum.coefficients().begin() + 1, sum.coefficients().end()));
}

// k_n(XY) = sum over NC(n) of k_gamma[X] k_{Kr(gamma)}[Y].
inline Rational free_multiplicative(const CumulantSequence& x, const CumulantSequence& y, int n,
                                    const Limits& limits = Limits::defaults()) {
  check_limit("nc", n, limits.nc);
  if (n > x.order() || n > y.order()) throw Error(ErrorKind::OrderTooLow, "need cumulants up to k_" + std::to_string(n));
  Rational sum = 0;
  for (const auto& [keys, count] : detail::kreweras_monomials(n)) {
    sum += count * detail::product(x, keys.first) * detail::product(y, keys.second);
  }
  return sum;
}

// Product over vertices of t_k(X) t_{d-k}(Y), k solid out of d offspring.
inline Rational eval_bicolor(const BicolorPlanarTree& tree, const TCoeffSequence& x, const TCoeffSequence& y) {
  int solid_count = 0;
  const int d = static_cast<int>(tree.branches.size());
  for (const auto& branch : tree.branches) solid_count += branch.color == solid ? 1 : 0;
  if (solid_count >= x.order() || d - solid_count >= y.order()) {
    throw Error(ErrorKind::OrderTooLow, "bicolor tree needs more t-coefficients");
  }
  Rational out = x[solid_count] * y[d - solid_count];
  for (const auto& branch : tree.branches) out *= eval_bicolor(branch.subtree, x, y);
  return out;
}

// Odd blocks and odd elements of s(pi) are weighted by X, even ones by Y.
inline Rational ncls_weight(const NCLPartition& pi, const TCoeffSequence& x, const TCoeffSequence& y) {
  if (!is_ncls(pi)) throw Error(ErrorKind::NotNclS, "partition is not in NCL_S(2n)");
  Rational out = 1;
  for (const Block& b : pi.blocks()) {
    const auto& t = b.front() % 2 == 1 ? x : y;
    out *= t[static_cast<int>(b.size()) - 1];
  }
  for (int k : non_minimal_elements(pi)) out *= (k % 2 == 1 ? x : y)[0];
  return out;
}

// T_X T_Y as a Cauchy product.
inline TCoeffSequence t_convolve(const TCoeffSequence& x, const TCoeffSequence& y) {
  if (x.order() != y.order()) throw Error(ErrorKind::SizeMismatch, "t-sequences differ in order");
  return TCoeffSequence((t_transform(x) * t_transform(y)).coefficients());
}

struct IdentityCheck {
  std::string name;
  int order = 0;
  Rational lhs;
  Rational rhs;
  bool pass() const { return lhs == rhs; }
};

struct TMultiplicativityReport {
  int order = 0;
  TCoeffSequence via_cumulants;
  TCoeffSequence via_convolution;
  std::vector<IdentityCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass(); });
  }
};

// t(XY) two ways for free X, Y with nonzero means:
//   through cumulants: k(XY) from the Kreweras sum, back to moments, then to t;
//   through series:    T_X * T_Y.
// Also checks, per order, that the elementary tree's XY-weight is the sum over
// its bicolorings, and that the tree sums for XY and the bicolor sums agree
// with k_n(XY).
inline TMultiplicativityReport verify_t_multiplicativity(const MomentSequence& mx, const MomentSequence& my, int order,
                                                         const Limits& limits = Limits::defaults()) {
  if (mx[1] == 0 || my[1] == 0) throw Error(ErrorKind::ZeroFirstMoment, "both factors need nonzero first moments");
  check_limit("theorem", order, limits.theorem);
  if (mx.order() < order || my.order() < order) {
    throw Error(ErrorKind::OrderTooLow, "need " + std::to_string(order) + " moments of each factor");
  }
  const MomentSequence x = mx.prefix(order);
  const MomentSequence y = my.prefix(order);
  const CumulantSequence kx = moments_to_cumulants(x, limits);
  const CumulantSequence ky = moments_to_cumulants(y, limits);
  std::vector<Rational> kxy;
  for (int n = 1; n <= order; ++n) kxy.push_back(free_multiplicative(kx, ky, n, limits));
  const CumulantSequence product_cumulants(kxy);

  TMultiplicativityReport report;
  report.order = order;
  report.via_cumulants = moments_to_tcoeffs(cumulants_to_moments(product_cumulants, limits), limits);
  const TCoeffSequence tx = moments_to_tcoeffs(x, limits);
  const TCoeffSequence ty = moments_to_tcoeffs(y, limits);
  report.via_convolution = t_convolve(tx, ty);

  const TCoeffSequence& txy = report.via_cumulants;
  for (int m = 0; m < order; ++m) {
    report.checks.push_back({"t_m(XY) = sum_k t_k(X) t_{m-k}(Y)", m, txy[m], report.via_convolution[m]});
  }
  for (int m = 1; m <= order; ++m) {
    Rational colored = 0;
    for (const auto& b : enumerate_bicolor_elementary(m)) colored += eval_bicolor(b, tx, ty);
    report.checks.push_back({"E_XY(elementary tree) = sum over its bicolorings", m, eval_tree(elementary_tree(m), txy),
                             colored});
  }
  for (int n = 1; n <= order; ++n) {
    Rational trees = 0;
    for (const auto& a : enumerate_planar_trees(n, limits)) trees += eval_tree(a, txy);
    Rational bicolor = 0;
    for (const auto& b : enumerate_bicolor(n, limits)) bicolor += eval_bicolor(b, tx, ty);
    report.checks.push_back({"sum_trees E_XY = sum_bicolor omega_XY", n, trees, bicolor});
    report.checks.push_back({"k_n(XY) = sum_bicolor omega_XY", n, product_cumulants[n], bicolor});
  }
  return report;
}

}  // namespace nclp
