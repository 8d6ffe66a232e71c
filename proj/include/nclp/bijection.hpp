#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nclp/error.hpp"
#include "nclp/partition.hpp"
#include "nclp/tree.hpp"

namespace nclp {

// Theta: the linked partitions connecting all of {1..n} -> planar trees on n
// vertices. Block (i_1..i_s) becomes the elementary piece rooted at vertex i_1
// with offspring i_2..i_s, where vertices carry their left-depth-first number.
inline PlanarTree theta(const NCLPartition& pi) {
  const int n = pi.size();
  if (connected_components(pi) != NCPartition::one(n)) {
    throw Error(ErrorKind::NotConnected, "theta needs a partition whose connected profile is 1_n");
  }
  std::vector<std::vector<int>> children(n + 1);
  std::vector<int> parents(n + 1, 0);
  for (const Block& block : pi.blocks()) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      children[block.front()].push_back(block[i]);
      ++parents[block[i]];
    }
  }
  for (int v = 2; v <= n; ++v) {
    if (parents[v] != 1) {
      throw Error(ErrorKind::NotConnected, "element " + std::to_string(v) + " has no unique parent block");
    }
  }
  std::vector<int> preorder;
  std::function<PlanarTree(int)> build = [&](int v) {
    preorder.push_back(v);
    PlanarTree node;
    for (int c : children[v]) node.children.push_back(build(c));
    return node;
  };
  PlanarTree tree = build(1);
  for (int i = 0; i < n; ++i) {
    if (preorder[i] != i + 1) {
      throw Error(ErrorKind::NotConnected, "block labels are not consistent with left-depth-first order");
    }
  }
  return tree;
}

// Blocks are the vertex numbers of each non-leaf elementary piece.
inline NCLPartition theta_inv(const PlanarTree& tree) {
  const NumberedTree numbered = vertex_order(tree);
  if (numbered.size == 1) return NCLPartition::zero(1);
  std::vector<Block> blocks;
  for (int v = 1; v <= numbered.size; ++v) {
    if (numbered.children[v].empty()) continue;
    Block block{v};
    block.insert(block.end(), numbered.children[v].begin(), numbered.children[v].end());
    blocks.push_back(std::move(block));
  }
  return NCLPartition::canonical(numbered.size, std::move(blocks));
}

// Lambda: NCL_S(2n) -> bicolor planar trees on n vertices.
//
// The root carries the two exterior blocks: the odd one's later elements become
// solid offspring, the even one's become dashed offspring. A non-root vertex
// stands for an element x that is not the first of its block. Let x' be the
// element preceding x in x's connected component; the gap x'+1..x-1 holds
// exactly one exterior block G (opposite parity). x's offspring are the later
// elements of G, colored by G's parity, together with the later elements of the
// block starting at x (if any), colored by x's parity; solid ones first.
inline BicolorPlanarTree lambda(const NCLPartition& pi) {
  if (pi.size() % 2 != 0 || !is_ncls(pi)) {
    throw Error(ErrorKind::NotNclS, "partition is not in NCL_S(2n)");
  }
  const int size = pi.size();
  const auto exterior = exterior_blocks(pi);
  if (exterior.size() != 2 || exterior[0].front() % 2 != 1 || exterior[1].front() % 2 != 0) {
    throw Error(ErrorKind::NotNclS, "expected one odd and one even exterior block");
  }

  std::vector<int> predecessor(size + 1, 0);
  const NCPartition components = connected_components(pi);
  for (const Block& component : components.blocks()) {
    for (std::size_t i = 1; i < component.size(); ++i) predecessor[component[i]] = component[i - 1];
  }
  std::vector<const Block*> starting_at(size + 1, nullptr);
  for (const Block& block : pi.blocks()) starting_at[block.front()] = &block;

  auto color_of = [](int x) { return x % 2 == 1 ? solid : dashed; };

  std::function<BicolorPlanarTree(int)> vertex = [&](int x) {
    std::vector<int> gap;
    for (int y = predecessor[x] + 1; y < x; ++y) gap.push_back(y);
    if (gap.empty()) throw Error(ErrorKind::NotNclS, "empty gap before " + std::to_string(x));
    const auto inner = exterior_blocks(restrict(pi, gap));
    if (inner.size() != 1) {
      throw Error(ErrorKind::NotNclS, "gap before " + std::to_string(x) + " has " +
                                          std::to_string(inner.size()) + " exterior blocks");
    }
    Block gap_block;
    for (int label : inner.front()) gap_block.push_back(gap[label - 1]);
    if (color_of(gap_block.front()) == color_of(x)) {
      throw Error(ErrorKind::NotNclS, "gap block has the parity of " + std::to_string(x));
    }

    std::vector<int> own;
    if (const Block* d = starting_at[x]) own.assign(d->begin() + 1, d->end());
    std::vector<int> opposite(gap_block.begin() + 1, gap_block.end());

    const auto& first = color_of(x) == solid ? own : opposite;
    const auto& second = color_of(x) == solid ? opposite : own;
    BicolorPlanarTree node;
    for (int y : first) node.branches.push_back({solid, vertex(y)});
    for (int y : second) node.branches.push_back({dashed, vertex(y)});
    return node;
  };

  BicolorPlanarTree root;
  for (std::size_t i = 1; i < exterior[0].size(); ++i) root.branches.push_back({solid, vertex(exterior[0][i])});
  for (std::size_t i = 1; i < exterior[1].size(); ++i) root.branches.push_back({dashed, vertex(exterior[1][i])});
  return root;
}

// Reverses lambda by laying the tree out on 1..2n. Each vertex v of color c
// (the root counts as dashed) owns two positions: first the opener of its
// opposite-color block, followed by the layouts of its opposite-color
// offspring, then v's own position, followed by the layouts of its same-color
// offspring.
inline NCLPartition lambda_inv(const BicolorPlanarTree& tree) {
  if (!is_valid(tree)) throw Error(ErrorKind::InvalidArgument, "solid branches must precede dashed ones");
  std::vector<Block> blocks;
  int next = 0;
  std::function<int(const BicolorPlanarTree&, int, bool)> layout = [&](const BicolorPlanarTree& node, int color,
                                                                       bool is_root) {
    Block opposite{++next};
    for (const auto& branch : node.branches) {
      if (branch.color != color) opposite.push_back(layout(branch.subtree, branch.color, false));
    }
    const int position = ++next;
    Block own{position};
    for (const auto& branch : node.branches) {
      if (branch.color == color) own.push_back(layout(branch.subtree, branch.color, false));
    }
    blocks.push_back(std::move(opposite));
    if (is_root || own.size() > 1) blocks.push_back(std::move(own));
    return position;
  };
  layout(tree, dashed, true);
  return NCLPartition::canonical(next, std::move(blocks));
}

}  // namespace nclp
