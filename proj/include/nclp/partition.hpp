#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nclp/error.hpp"

namespace nclp {

// Strictly increasing, 1-based ground-set positions.
using Block = std::vector<int>;

struct non_crossing_tag {};
struct linked_tag {};

// A block system on {1..n}. The Kind tag separates ordinary non-crossing
// partitions (disjoint blocks) from linked ones (blocks may share one element).
// Blocks are kept sorted lexicographically, which for valid inputs is the same
// as sorting by minimum: no two blocks share a minimum.
template <class Kind>
class Partition {
 public:
  // Caller guarantees validity; only the block order is canonicalized.
  static Partition canonical(int n, std::vector<Block> blocks) {
    Partition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    std::sort(p.blocks_.begin(), p.blocks_.end());
    return p;
  }

  // 0_n: all singletons.
  static Partition zero(int n) {
    std::vector<Block> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return canonical(n, std::move(blocks));
  }

  // 1_n: the single block (1..n).
  static Partition one(int n) {
    Block all(n);
    std::iota(all.begin(), all.end(), 1);
    return canonical(n, {std::move(all)});
  }

  int size() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

using NCPartition = Partition<non_crossing_tag>;
using NCLPartition = Partition<linked_tag>;

// Every non-crossing partition is a linked one with no links.
inline NCLPartition as_linked(const NCPartition& gamma) {
  return NCLPartition::canonical(gamma.size(), gamma.blocks());
}

struct PartitionClassId {
  NCPartition connected_profile;
  friend auto operator<=>(const PartitionClassId&, const PartitionClassId&) = default;
  friend bool operator==(const PartitionClassId&, const PartitionClassId&) = default;
};

namespace detail {

// Returns i<k<p<q with i,p in one block and k,q in another, if any.
inline std::optional<std::array<int, 4>> find_crossing(const std::vector<Block>& blocks) {
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      const Block& outer = blocks[a];
      const Block& other = blocks[b];
      for (std::size_t j = 0; j + 1 < outer.size(); ++j) {
        int lo = outer[j];
        int hi = outer[j + 1];
        auto inside = std::upper_bound(other.begin(), other.end(), lo);
        if (inside == other.end() || *inside >= hi) continue;
        auto beyond = std::upper_bound(other.begin(), other.end(), hi);
        if (beyond != other.end()) return std::array<int, 4>{lo, *inside, hi, *beyond};
        // The point inside may be shared with `outer`; then look left instead.
        if (other.front() < lo) return std::array<int, 4>{other.front(), lo, *inside, hi};
      }
    }
  }
  return std::nullopt;
}

inline std::string format_block(const Block& block) {
  std::string out = "(";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(block[i]);
  }
  return out + ")";
}

// Sorts each raw block and rejects empties, duplicates and out-of-range labels.
inline std::vector<Block> normalize_blocks(int n, std::vector<Block> raw, ErrorKind kind) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "ground set size must be >= 1");
  for (Block& block : raw) {
    if (block.empty()) throw Error(kind, "empty block");
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw Error(kind, "repeated element in block " + format_block(block));
    }
    if (block.front() < 1 || block.back() > n) {
      throw Error(kind, "block " + format_block(block) + " leaves {1.." + std::to_string(n) + "}");
    }
  }
  return raw;
}

inline std::vector<int> multiplicities(int n, const std::vector<Block>& blocks) {
  std::vector<int> count(n + 1, 0);
  for (const Block& block : blocks)
    for (int x : block) ++count[x];
  return count;
}

inline void reject_crossing(const std::vector<Block>& blocks) {
  if (auto w = find_crossing(blocks)) {
    std::vector<int> witness(w->begin(), w->end());
    throw Error(ErrorKind::Crossing,
                "blocks cross at " + std::to_string(witness[0]) + "<" + std::to_string(witness[1]) +
                    "<" + std::to_string(witness[2]) + "<" + std::to_string(witness[3]),
                witness);
  }
}

inline bool contains(const Block& block, int x) {
  return std::binary_search(block.begin(), block.end(), x);
}

}  // namespace detail

// Checks cover, disjointness and the non-crossing condition.
inline NCPartition validate_nc(int n, std::vector<Block> raw) {
  auto blocks = detail::normalize_blocks(n, std::move(raw), ErrorKind::NotAPartition);
  auto count = detail::multiplicities(n, blocks);
  for (int x = 1; x <= n; ++x) {
    if (count[x] == 0) throw Error(ErrorKind::NotAPartition, "element " + std::to_string(x) + " is not covered", {x});
    if (count[x] > 1) throw Error(ErrorKind::NotAPartition, "element " + std::to_string(x) + " lies in several blocks", {x});
  }
  detail::reject_crossing(blocks);
  return NCPartition::canonical(n, std::move(blocks));
}

// Checks cover, the link condition (two blocks share at most one element, both
// have size >= 2, and the shared element is the minimum of exactly one of
// them) and the non-crossing condition.
inline NCLPartition validate_ncl(int n, std::vector<Block> raw) {
  auto blocks = detail::normalize_blocks(n, std::move(raw), ErrorKind::NotACover);
  auto count = detail::multiplicities(n, blocks);
  for (int x = 1; x <= n; ++x) {
    if (count[x] == 0) throw Error(ErrorKind::NotACover, "element " + std::to_string(x) + " is not covered", {x});
  }
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      std::vector<int> shared;
      std::set_intersection(blocks[a].begin(), blocks[a].end(), blocks[b].begin(), blocks[b].end(),
                            std::back_inserter(shared));
      if (shared.empty()) continue;
      const std::string pair = detail::format_block(blocks[a]) + " and " + detail::format_block(blocks[b]);
      if (shared.size() > 1) throw Error(ErrorKind::BadLink, pair + " share more than one element", shared);
      const int j = shared.front();
      if (blocks[a].size() < 2 || blocks[b].size() < 2) {
        throw Error(ErrorKind::BadLink, pair + " link through a singleton", {j});
      }
      const bool min_a = blocks[a].front() == j;
      const bool min_b = blocks[b].front() == j;
      if (min_a == min_b) {
        throw Error(ErrorKind::BadLink,
                    pair + ": shared element " + std::to_string(j) + " must be the minimum of exactly one block",
                    {j});
      }
    }
  }
  detail::reject_crossing(blocks);
  return NCLPartition::canonical(n, std::move(blocks));
}

// sigma <= pi: every block of pi is the union of the blocks of sigma it contains.
template <class K1, class K2>
bool leq(const Partition<K1>& sigma, const Partition<K2>& pi) {
  if (sigma.size() != pi.size()) throw Error(ErrorKind::SizeMismatch, "partitions live on different ground sets");
  for (const Block& big : pi.blocks()) {
    std::vector<bool> covered(pi.size() + 1, false);
    for (const Block& small : sigma.blocks()) {
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        for (int x : small) covered[x] = true;
      }
    }
    for (int x : big)
      if (!covered[x]) return false;
  }
  return true;
}

// c(pi): blocks are the classes of the "chained by shared elements" relation.
template <class Kind>
NCPartition connected_components(const Partition<Kind>& pi) {
  const int n = pi.size();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Block& block : pi.blocks())
    for (int x : block) parent[find(x)] = find(block.front());
  std::vector<Block> groups(n + 1);
  for (int x = 1; x <= n; ++x) groups[find(x)].push_back(x);
  std::vector<Block> blocks;
  for (Block& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return NCPartition::canonical(n, std::move(blocks));
}

template <class Kind>
PartitionClassId class_id(const Partition<Kind>& pi) {
  return {connected_components(pi)};
}

// A block (i_1..i_p) is exterior when no other block contains i_1, and no other
// block has elements l < i_1 and s > i_p. For singletons this is l < i < s.
template <class Kind>
std::vector<Block> exterior_blocks(const Partition<Kind>& pi) {
  std::vector<Block> result;
  for (const Block& block : pi.blocks()) {
    const int first = block.front();
    const int last = block.back();
    bool exterior = true;
    for (const Block& other : pi.blocks()) {
      if (&other == &block) continue;
      if (detail::contains(other, first) || (other.front() < first && other.back() > last)) {
        exterior = false;
        break;
      }
    }
    if (exterior) result.push_back(block);
  }
  return result;
}

// s(pi): elements that are the minimum of no block, ascending.
template <class Kind>
std::vector<int> non_minimal_elements(const Partition<Kind>& pi) {
  std::vector<bool> is_min(pi.size() + 1, false);
  for (const Block& block : pi.blocks()) is_min[block.front()] = true;
  std::vector<int> result;
  for (int x = 1; x <= pi.size(); ++x)
    if (!is_min[x]) result.push_back(x);
  return result;
}

// pi restricted to S and relabeled order-isomorphically onto {1..|S|}. Every
// block must lie inside S or avoid it.
template <class Kind>
Partition<Kind> restrict(const Partition<Kind>& pi, const std::vector<int>& subset) {
  if (subset.empty()) throw Error(ErrorKind::InvalidArgument, "cannot restrict to the empty set");
  std::vector<int> label(pi.size() + 1, 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const int x = subset[i];
    if (x < 1 || x > pi.size() || (i > 0 && subset[i - 1] >= x)) {
      throw Error(ErrorKind::InvalidArgument, "restriction set must be strictly increasing inside {1..n}");
    }
    label[x] = static_cast<int>(i) + 1;
  }
  std::vector<Block> blocks;
  for (const Block& block : pi.blocks()) {
    const auto inside = std::count_if(block.begin(), block.end(), [&](int x) { return label[x] != 0; });
    if (inside == 0) continue;
    if (inside != static_cast<long>(block.size())) {
      throw Error(ErrorKind::BlockStraddlesSet, "block " + detail::format_block(block) + " straddles the set", block);
    }
    Block relabeled;
    for (int x : block) relabeled.push_back(label[x]);
    blocks.push_back(std::move(relabeled));
  }
  return Partition<Kind>::canonical(static_cast<int>(subset.size()), std::move(blocks));
}

// Kr(gamma) read as a permutation: with each block an increasing cycle P and
// c = (1 2 ... n), the cycles of P^{-1} c are the blocks of the complement on
// the barred copy sitting at 1, 1bar, 2, 2bar, ...
inline NCPartition kreweras(const NCPartition& gamma) {
  const int n = gamma.size();
  std::vector<int> inverse(n + 1);
  for (const Block& block : gamma.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      inverse[block[(i + 1) % block.size()]] = block[i];
    }
  }
  std::vector<bool> seen(n + 1, false);
  std::vector<Block> blocks;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    Block cycle;
    for (int x = start; !seen[x]; x = inverse[x % n + 1]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    std::sort(cycle.begin(), cycle.end());
    blocks.push_back(std::move(cycle));
  }
  return NCPartition::canonical(n, std::move(blocks));
}

// Places `odd` on positions 1,3,..,2n-1 and `even` on 2,4,..,2n.
template <class Kind>
Partition<Kind> interleave(const Partition<Kind>& odd, const Partition<Kind>& even) {
  if (odd.size() != even.size()) throw Error(ErrorKind::SizeMismatch, "interleaved halves differ in size");
  std::vector<Block> blocks;
  for (const Block& b : odd.blocks()) {
    Block mapped;
    for (int x : b) mapped.push_back(2 * x - 1);
    blocks.push_back(std::move(mapped));
  }
  for (const Block& b : even.blocks()) {
    Block mapped;
    for (int x : b) mapped.push_back(2 * x);
    blocks.push_back(std::move(mapped));
  }
  return Partition<Kind>::canonical(2 * odd.size(), std::move(blocks));
}

namespace detail {

inline std::vector<int> parity_positions(int n, int parity) {
  std::vector<int> out;
  for (int x = parity == 1 ? 1 : 2; x <= 2 * n; x += 2) out.push_back(x);
  return out;
}

}  // namespace detail

// Membership in NC_S(2n): parity-pure blocks and the even half equal to the
// Kreweras complement of the odd half.
inline bool is_ncs(const NCPartition& gamma) {
  if (gamma.size() % 2 != 0) {
    throw Error(ErrorKind::OddGroundSet, "NC_S needs an even ground set, got " + std::to_string(gamma.size()));
  }
  for (const Block& block : gamma.blocks()) {
    for (int x : block)
      if ((x - block.front()) % 2 != 0) return false;
  }
  const int n = gamma.size() / 2;
  const NCPartition odd = restrict(gamma, detail::parity_positions(n, 1));
  const NCPartition even = restrict(gamma, detail::parity_positions(n, 0));
  return even == kreweras(odd);
}

// Membership in NCL_S(2n): the connected profile lies in NC_S(2n).
inline bool is_ncls(const NCLPartition& pi) {
  if (pi.size() % 2 != 0) return false;
  return is_ncs(connected_components(pi));
}

}  // namespace nclp
