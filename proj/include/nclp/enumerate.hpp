#pragma once

#include <algorithm>
#include <vector>

#include "nclp/bijection.hpp"
#include "nclp/detail/memo.hpp"
#include "nclp/error.hpp"
#include "nclp/partition.hpp"
#include "nclp/tree.hpp"

namespace nclp {

namespace detail {

inline const std::vector<NCPartition>& nc_cached(int n) {
  static Memo<int, std::vector<NCPartition>> memo;
  return memo.get(n, [n] {
    std::vector<NCPartition> out;
    if (n == 1) {
      out.push_back(NCPartition::zero(1));
      return out;
    }
    // The block of 1 is {1} + S; every gap it leaves (between consecutive
    // elements, and after the last one) is filled independently.
    const unsigned subsets = 1u << (n - 1);
    for (unsigned mask = 0; mask < subsets; ++mask) {
      Block first{1};
      for (int x = 2; x <= n; ++x)
        if (mask & (1u << (x - 2))) first.push_back(x);
      std::vector<std::vector<Block>> partial{{first}};
      auto fill = [&](int lo, int hi) {
        if (lo > hi) return;
        std::vector<std::vector<Block>> next;
        for (const auto& prefix : partial) {
          for (const auto& inner : nc_cached(hi - lo + 1)) {
            auto extended = prefix;
            for (const Block& b : inner.blocks()) {
              Block shifted;
              for (int x : b) shifted.push_back(x + lo - 1);
              extended.push_back(std::move(shifted));
            }
            next.push_back(std::move(extended));
          }
        }
        partial = std::move(next);
      };
      for (std::size_t i = 0; i + 1 < first.size(); ++i) fill(first[i] + 1, first[i + 1] - 1);
      fill(first.back() + 1, n);
      for (auto& blocks : partial) out.push_back(NCPartition::canonical(n, std::move(blocks)));
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

// [1_k] as block lists on 1..k, via theta^{-1} over all planar trees.
inline const std::vector<NCLPartition>& single_class_cached(int k) {
  static Memo<int, std::vector<NCLPartition>> memo;
  return memo.get(k, [k] {
    std::vector<NCLPartition> out;
    for (const auto& tree : planar_trees_cached(k)) out.push_back(theta_inv(tree));
    std::sort(out.begin(), out.end());
    return out;
  });
}

inline std::vector<NCLPartition> class_members_unchecked(const NCPartition& gamma) {
  std::vector<std::vector<Block>> partial{{}};
  for (const Block& component : gamma.blocks()) {
    std::vector<std::vector<Block>> next;
    for (const auto& prefix : partial) {
      for (const auto& member : single_class_cached(static_cast<int>(component.size()))) {
        auto extended = prefix;
        for (const Block& b : member.blocks()) {
          Block placed;
          for (int label : b) placed.push_back(component[label - 1]);
          extended.push_back(std::move(placed));
        }
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  std::vector<NCLPartition> out;
  for (auto& blocks : partial) out.push_back(NCLPartition::canonical(gamma.size(), std::move(blocks)));
  std::sort(out.begin(), out.end());
  return out;
}

inline const std::vector<NCLPartition>& ncl_cached(int n) {
  static Memo<int, std::vector<NCLPartition>> memo;
  return memo.get(n, [n] {
    std::vector<NCLPartition> out;
    for (const auto& gamma : nc_cached(n)) {
      auto members = class_members_unchecked(gamma);
      out.insert(out.end(), std::make_move_iterator(members.begin()), std::make_move_iterator(members.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

inline const std::vector<NCPartition>& ncs_cached(int n) {
  static Memo<int, std::vector<NCPartition>> memo;
  return memo.get(n, [n] {
    std::vector<NCPartition> out;
    for (const auto& odd : nc_cached(n)) out.push_back(interleave(odd, kreweras(odd)));
    std::sort(out.begin(), out.end());
    return out;
  });
}

}  // namespace detail

// NC(n) in lexicographic order of canonical block lists.
inline const std::vector<NCPartition>& enumerate_nc(int n, const Limits& limits = Limits::defaults()) {
  check_limit("nc", n, limits.nc);
  return detail::nc_cached(n);
}

// The class [gamma] = {pi : c(pi) = gamma}: one tree-class member per block of
// gamma, relabeled onto that block's elements.
inline std::vector<NCLPartition> class_members(const NCPartition& gamma, const Limits& limits = Limits::defaults()) {
  for (const Block& b : gamma.blocks()) check_limit("trees", static_cast<int>(b.size()), limits.trees);
  return detail::class_members_unchecked(gamma);
}

// NCL(n) as the disjoint union of the classes [gamma], gamma in NC(n).
inline const std::vector<NCLPartition>& enumerate_ncl(int n, const Limits& limits = Limits::defaults()) {
  check_limit("ncl", n, limits.ncl);
  return detail::ncl_cached(n);
}

// NC_S(2n) = { odd half gamma, even half Kr(gamma) : gamma in NC(n) }.
inline const std::vector<NCPartition>& enumerate_ncs(int n, const Limits& limits = Limits::defaults()) {
  check_limit("ncs", n, limits.ncs);
  return detail::ncs_cached(n);
}

inline const std::vector<NCLPartition>& enumerate_ncls(int n, const Limits& limits = Limits::defaults()) {
  check_limit("ncls", n, limits.ncls);
  static detail::Memo<int, std::vector<NCLPartition>> memo;
  return memo.get(n, [n] {
    std::vector<NCLPartition> out;
    for (const auto& gamma : detail::ncs_cached(n)) {
      auto members = detail::class_members_unchecked(gamma);
      out.insert(out.end(), std::make_move_iterator(members.begin()), std::make_move_iterator(members.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

}  // namespace nclp
