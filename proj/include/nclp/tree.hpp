#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <vector>

#include "nclp/detail/memo.hpp"
#include "nclp/error.hpp"

namespace nclp {

// Rooted tree with ordered children.
struct PlanarTree {
  std::vector<PlanarTree> children;

  friend std::strong_ordering operator<=>(const PlanarTree&, const PlanarTree&) = default;
  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

enum Color : int { dashed = 0, solid = 1 };

// Planar tree whose branches carry a color; at every vertex the solid (1)
// branches come before the dashed (0) ones.
struct BicolorPlanarTree {
  struct Branch;
  std::vector<Branch> branches;

  friend std::strong_ordering operator<=>(const BicolorPlanarTree&, const BicolorPlanarTree&) = default;
  friend bool operator==(const BicolorPlanarTree&, const BicolorPlanarTree&) = default;
};

struct BicolorPlanarTree::Branch {
  int color = solid;
  BicolorPlanarTree subtree;

  friend std::strong_ordering operator<=>(const Branch&, const Branch&) = default;
  friend bool operator==(const Branch&, const Branch&) = default;
};

inline int vertex_count(const PlanarTree& tree) {
  int n = 1;
  for (const auto& child : tree.children) n += vertex_count(child);
  return n;
}

inline int vertex_count(const BicolorPlanarTree& tree) {
  int n = 1;
  for (const auto& branch : tree.branches) n += vertex_count(branch.subtree);
  return n;
}

inline bool is_valid(const BicolorPlanarTree& tree) {
  bool seen_dashed = false;
  for (const auto& branch : tree.branches) {
    if (branch.color != solid && branch.color != dashed) return false;
    if (branch.color == dashed) seen_dashed = true;
    else if (seen_dashed) return false;
    if (!is_valid(branch.subtree)) return false;
  }
  return true;
}

inline PlanarTree shape(const BicolorPlanarTree& tree) {
  PlanarTree out;
  for (const auto& branch : tree.branches) out.children.push_back(shape(branch.subtree));
  return out;
}

// A root with vertices-1 leaf children.
inline PlanarTree elementary_tree(int vertices) {
  PlanarTree t;
  t.children.resize(vertices - 1);
  return t;
}

inline PlanarTree chain_tree(int vertices) {
  PlanarTree t;
  for (int i = 1; i < vertices; ++i) {
    PlanarTree up;
    up.children.push_back(std::move(t));
    t = std::move(up);
  }
  return t;
}

// Vertices numbered 1..n in left-depth-first order (roots before offspring,
// siblings left to right, offspring of an earlier vertex before those of a
// later one): that is preorder. children[v] lists v's children by number;
// parent[1] is 0. Index 0 of both vectors is unused.
struct NumberedTree {
  int size = 0;
  std::vector<std::vector<int>> children;
  std::vector<int> parent;
};

inline NumberedTree vertex_order(const PlanarTree& tree) {
  NumberedTree out;
  out.size = vertex_count(tree);
  out.children.assign(out.size + 1, {});
  out.parent.assign(out.size + 1, 0);
  int next = 0;
  std::function<int(const PlanarTree&, int)> visit = [&](const PlanarTree& node, int parent) {
    const int id = ++next;
    out.parent[id] = parent;
    for (const auto& child : node.children) out.children[id].push_back(visit(child, id));
    return id;
  };
  visit(tree, 0);
  return out;
}

struct ElementaryView {
  int vertex = 0;
  int child_count = 0;
  friend bool operator==(const ElementaryView&, const ElementaryView&) = default;
};

// One depth-one subtree per vertex, leaves included as single-vertex pieces.
inline std::vector<ElementaryView> elementary_decomposition(const PlanarTree& tree) {
  const NumberedTree numbered = vertex_order(tree);
  std::vector<ElementaryView> views;
  for (int v = 1; v <= numbered.size; ++v) {
    views.push_back({v, static_cast<int>(numbered.children[v].size())});
  }
  return views;
}

namespace detail {

inline std::vector<std::vector<PlanarTree>> planar_forests(int vertices);

inline const std::vector<PlanarTree>& planar_trees_cached(int n) {
  static Memo<int, std::vector<PlanarTree>> memo;
  return memo.get(n, [n] {
    std::vector<PlanarTree> out;
    for (auto& forest : planar_forests(n - 1)) out.push_back(PlanarTree{std::move(forest)});
    std::sort(out.begin(), out.end());
    return out;
  });
}

// Ordered forests with the given total vertex count: first tree of size k,
// then any forest on the rest.
inline std::vector<std::vector<PlanarTree>> planar_forests(int vertices) {
  if (vertices == 0) return {{}};
  std::vector<std::vector<PlanarTree>> out;
  for (int first = 1; first <= vertices; ++first) {
    const auto& heads = planar_trees_cached(first);
    const auto tails = planar_forests(vertices - first);
    for (const auto& head : heads) {
      for (const auto& tail : tails) {
        std::vector<PlanarTree> forest{head};
        forest.insert(forest.end(), tail.begin(), tail.end());
        out.push_back(std::move(forest));
      }
    }
  }
  return out;
}

inline std::vector<BicolorPlanarTree> colorings(const PlanarTree& tree) {
  std::vector<std::vector<BicolorPlanarTree>> child_options;
  for (const auto& child : tree.children) child_options.push_back(colorings(child));

  // Cartesian product over children of their colorings.
  std::vector<std::vector<BicolorPlanarTree>> subtrees{{}};
  for (const auto& options : child_options) {
    std::vector<std::vector<BicolorPlanarTree>> next;
    for (const auto& prefix : subtrees) {
      for (const auto& option : options) {
        auto extended = prefix;
        extended.push_back(option);
        next.push_back(std::move(extended));
      }
    }
    subtrees = std::move(next);
  }

  const int d = static_cast<int>(tree.children.size());
  std::vector<BicolorPlanarTree> out;
  for (const auto& kids : subtrees) {
    for (int solid_count = d; solid_count >= 0; --solid_count) {
      BicolorPlanarTree b;
      for (int i = 0; i < d; ++i) {
        b.branches.push_back({i < solid_count ? solid : dashed, kids[i]});
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace detail

inline const std::vector<PlanarTree>& enumerate_planar_trees(int n, const Limits& limits = Limits::defaults()) {
  check_limit("trees", n, limits.trees);
  return detail::planar_trees_cached(n);
}

// The n one-level bicolor trees: k solid then n-1-k dashed offspring, k = n-1..0.
inline std::vector<BicolorPlanarTree> enumerate_bicolor_elementary(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "elementary trees need at least one vertex");
  std::vector<BicolorPlanarTree> out;
  for (int k = n - 1; k >= 0; --k) {
    BicolorPlanarTree b;
    for (int i = 0; i < n - 1; ++i) b.branches.push_back({i < k ? solid : dashed, {}});
    out.push_back(std::move(b));
  }
  return out;
}

inline const std::vector<BicolorPlanarTree>& enumerate_bicolor(int n, const Limits& limits = Limits::defaults()) {
  check_limit("bicolor", n, limits.bicolor);
  static detail::Memo<int, std::vector<BicolorPlanarTree>> memo;
  return memo.get(n, [n] {
    std::vector<BicolorPlanarTree> out;
    for (const auto& t : detail::planar_trees_cached(n)) {
      auto c = detail::colorings(t);
      out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

}  // namespace nclp
