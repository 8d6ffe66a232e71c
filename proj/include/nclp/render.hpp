#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "nclp/partition.hpp"
#include "nclp/tree.hpp"

namespace nclp {

namespace detail {

inline std::string join_lines(std::vector<std::string> rows) {
  std::string out;
  for (auto& row : rows) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row + "\n";
  }
  return out;
}

}  // namespace detail

// Arc diagram: points 1..n on the bottom line, each block of two or more
// elements drawn as a bar over its points. A block sits above every block
// nested in its span and above every block hanging from one of its later
// elements, so linked blocks show up as a step down at the shared point.
//
//   +-----------+
//   |  +--+     |
//   1  2  3  4  5
template <class Kind>
std::string render_partition(const Partition<Kind>& pi) {
  const auto& blocks = pi.blocks();
  const std::size_t count = blocks.size();
  std::vector<int> height(count, 0);
  // Minima are distinct and every "below" relation points to a larger
  // minimum, so filling from the right settles dependencies first.
  for (std::size_t i = count; i-- > 0;) {
    const Block& b = blocks[i];
    if (b.size() < 2) continue;
    int h = 1;
    for (std::size_t j = i + 1; j < count; ++j) {
      const Block& d = blocks[j];
      if (d.size() < 2) continue;
      const bool nested = d.back() <= b.back();
      const bool hanging = detail::contains(b, d.front());
      if (nested || hanging) h = std::max(h, height[j] + 1);
    }
    height[i] = h;
  }
  const int top = count ? *std::max_element(height.begin(), height.end()) : 0;
  const int spacing = 4;
  const int width = spacing * pi.size();
  auto column = [&](int x) { return spacing * (x - 1); };

  std::vector<std::string> rows(top, std::string(width, ' '));
  for (std::size_t i = 0; i < count; ++i) {
    if (height[i] == 0) continue;
    const Block& b = blocks[i];
    const int row = top - height[i];
    for (int c = column(b.front()); c <= column(b.back()); ++c) {
      if (rows[row][c] == ' ') rows[row][c] = '-';
    }
    for (int x : b) {
      rows[row][column(x)] = '+';
      for (int r = row + 1; r < top; ++r) {
        char& cell = rows[r][column(x)];
        cell = cell == ' ' ? '|' : '+';
      }
    }
  }
  std::string labels(width + 2, ' ');
  for (int x = 1; x <= pi.size(); ++x) {
    const std::string text = std::to_string(x);
    labels.replace(column(x), text.size(), text);
  }
  rows.push_back(labels);
  return detail::join_lines(std::move(rows));
}

namespace detail {

struct TreeCanvas {
  std::vector<std::string> rows;

  void put(int row, int col, char c) {
    if (static_cast<int>(rows.size()) <= row) rows.resize(row + 1);
    auto& line = rows[row];
    if (static_cast<int>(line.size()) <= col) line.resize(col + 1, ' ');
    line[col] = c;
  }
};

// Each subtree takes as many 3-character slots as it has leaves; a vertex sits
// over its first child and a bus on the vertex's own row reaches the others.
template <class Node, class ChildrenOf>
int draw_tree(TreeCanvas& canvas, const Node& node, int depth, int slot, ChildrenOf children_of) {
  const int row = 2 * depth;
  const int col = 3 * slot;
  canvas.put(row, col, 'o');
  int next = slot;
  int previous_col = col;
  for (const auto& [color, child] : children_of(node)) {
    const int child_col = 3 * next;
    const bool is_solid = color == solid;
    for (int c = previous_col + 1; c < child_col; ++c) canvas.put(row, c, is_solid ? '-' : '.');
    if (child_col != col) canvas.put(row, child_col, is_solid ? '+' : '.');
    canvas.put(row + 1, child_col, is_solid ? '|' : ':');
    previous_col = child_col;
    next += draw_tree(canvas, *child, depth + 1, next, children_of);
  }
  return std::max(1, next - slot);
}

}  // namespace detail

// Root at the top; solid branches drawn with | and -, dashed ones with : and .
inline std::string render_tree(const BicolorPlanarTree& tree) {
  detail::TreeCanvas canvas;
  detail::draw_tree(canvas, tree, 0, 0, [](const BicolorPlanarTree& node) {
    std::vector<std::pair<int, const BicolorPlanarTree*>> out;
    for (const auto& branch : node.branches) out.emplace_back(branch.color, &branch.subtree);
    return out;
  });
  return detail::join_lines(std::move(canvas.rows));
}

inline std::string render_tree(const PlanarTree& tree) {
  detail::TreeCanvas canvas;
  detail::draw_tree(canvas, tree, 0, 0, [](const PlanarTree& node) {
    std::vector<std::pair<int, const PlanarTree*>> out;
    for (const auto& child : node.children) out.emplace_back(static_cast<int>(solid), &child);
    return out;
  });
  return detail::join_lines(std::move(canvas.rows));
}

}  // namespace nclp
