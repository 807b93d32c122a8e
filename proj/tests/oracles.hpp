#pragma once
// Brute-force reference implementations. Nothing here calls into the
// enumerators or maps under test; only value types (Partition, Filling,
// GridTableau) are shared.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ltab/bigint.hpp"
#include "ltab/grid.hpp"
#include "ltab/shapes.hpp"

namespace oracle {

using ltab::BigInt;
using ltab::BoxCoord;
using ltab::Cell;
using ltab::CellKind;
using ltab::GridTableau;
using ltab::Partition;

// Every partition of n with at most `rows` parts, each at most `cols`.
inline std::vector<Partition> partitions(int n, int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == rows) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  if (n >= 0) rec(n, cols);
  return out;
}

inline int part(const Partition& p, int i) { return p.row(i); }

inline bool includes(const Partition& outer, const Partition& inner) {
  for (int i = 1; i <= std::max(outer.length(), inner.length()); ++i)
    if (part(inner, i) > part(outer, i)) return false;
  return true;
}

// Cell-set tests: at most one box of outer/inner per column (horizontal) or row (vertical).
inline bool horizontal_by_cells(const Partition& outer, const Partition& inner) {
  if (!includes(outer, inner)) return false;
  for (int col = 1; col <= outer.width(); ++col) {
    int boxes = 0;
    for (int row = 1; row <= outer.length(); ++row)
      if (col <= part(outer, row) && col > part(inner, row)) ++boxes;
    if (boxes > 1) return false;
  }
  return true;
}

inline bool vertical_by_cells(const Partition& outer, const Partition& inner) {
  if (!includes(outer, inner)) return false;
  for (int row = 1; row <= outer.length(); ++row)
    if (part(outer, row) - part(inner, row) > 1) return false;
  return true;
}

// All nu in the box with |nu| = |lambda| + k and nu/lambda a strip; descending order.
inline std::vector<Partition> strip_extensions(const Partition& lambda, int k, bool horizontal, int rows, int cols) {
  std::vector<Partition> out;
  for (const Partition& nu : partitions(lambda.size() + k, rows, cols))
    if (horizontal ? horizontal_by_cells(nu, lambda) : vertical_by_cells(nu, lambda)) out.push_back(nu);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
  return out;
}

// Number of chains lambda = nu_0 < nu_1 < ... < nu_m = target whose steps are
// the given strips (true = horizontal), all inside the box.
inline BigInt chain_count(const Partition& lambda, const std::vector<std::pair<bool, int>>& strips,
                          const Partition& target, int rows, int cols) {
  std::map<Partition, BigInt> layer{{lambda, 1}};
  for (const auto& [horizontal, size] : strips) {
    std::map<Partition, BigInt> next;
    for (const auto& [mu, c] : layer)
      for (const Partition& nu : strip_extensions(mu, size, horizontal, rows, cols)) next[nu] += c;
    layer = std::move(next);
  }
  auto it = layer.find(target);
  return it == layer.end() ? BigInt(0) : it->second;
}

// SYT count by removing corners recursively.
inline BigInt syt_count(const Partition& lambda) {
  static std::map<std::vector<int>, BigInt> memo;
  if (lambda.size() <= 1) return 1;
  if (auto it = memo.find(lambda.parts()); it != memo.end()) return it->second;
  BigInt total = 0;
  std::vector<int> parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool corner = i + 1 == parts.size() || parts[i + 1] < parts[i];
    if (!corner) continue;
    std::vector<int> smaller = parts;
    --smaller[i];
    total += syt_count(Partition(smaller));
  }
  memo[lambda.parts()] = total;
  return total;
}

// ---- generic cell-by-cell filler ---------------------------------------------

// Cells of a straight or skew shape in bottom-up, left-to-right order.
inline std::vector<BoxCoord> cells(const Partition& outer, const Partition& inner = Partition()) {
  std::vector<BoxCoord> out;
  for (int row = 1; row <= outer.length(); ++row)
    for (int col = part(inner, row) + 1; col <= part(outer, row); ++col) out.push_back({row, col});
  return out;
}

using Assignment = std::map<BoxCoord, int>;

// Every assignment of values in [lo, hi] to the cells (in order) accepted by
// `ok(assignment, cell, value)` at each step and by `done` at the end.
inline std::vector<Assignment> fill(const std::vector<BoxCoord>& order, int lo, int hi,
                                    const std::function<bool(const Assignment&, BoxCoord, int)>& ok,
                                    const std::function<bool(const Assignment&)>& done) {
  std::vector<Assignment> out;
  Assignment a;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      if (done(a)) out.push_back(a);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      if (!ok(a, order[i], v)) continue;
      a[order[i]] = v;
      rec(i + 1);
      a.erase(order[i]);
    }
  };
  rec(0);
  return out;
}

inline const int* lookup(const Assignment& a, BoxCoord c) {
  auto it = a.find(c);
  return it == a.end() ? nullptr : &it->second;
}

// SSYT (rows weak, columns strict) or transposed (rows strict, columns weak).
inline std::vector<Assignment> tableaux(const Partition& outer, const Partition& inner, int lo, int hi, bool transposed) {
  auto ok = [transposed](const Assignment& a, BoxCoord c, int v) {
    if (const int* left = lookup(a, {c.row, c.col - 1}))
      if (transposed ? *left >= v : *left > v) return false;
    if (const int* below = lookup(a, {c.row - 1, c.col}))
      if (transposed ? *below > v : *below >= v) return false;
    return true;
  };
  return fill(cells(outer, inner), lo, hi, ok, [](const Assignment&) { return true; });
}

inline std::vector<int> content_of(const Assignment& a, int hi) {
  std::vector<int> c(static_cast<std::size_t>(hi) + 1, 0);
  for (const auto& [cell, v] : a) ++c[static_cast<std::size_t>(v)];
  return c;
}

// Transposed SSYT of straight shapes in an (r+1) x g box with content (i^g).
inline std::vector<std::vector<std::vector<int>>> trssyt(int g, int r, int i) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const Partition& lambda : partitions(g * i, r + 1, g)) {
    for (const Assignment& a : tableaux(lambda, Partition(), 1, g, true)) {
      const auto c = content_of(a, g);
      if (std::any_of(c.begin() + 1, c.end(), [i](int m) { return m != i; })) continue;
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
      for (const auto& [cell, v] : a) rows[static_cast<std::size_t>(cell.row - 1)].push_back(v);
      out.push_back(std::move(rows));
    }
  }
  return out;
}

// ---- grids -------------------------------------------------------------------

inline std::string key(const GridTableau& grid) { return grid.to_string(); }

// L-tableaux by filling every cell with a red label 1..g or a blue letter 0..r.
inline std::set<std::string> l_tableaux(int g, int r, int d) {
  std::set<std::string> out;
  const int rows = r + 1, cols = d - r;
  if (cols < 0) return out;
  GridTableau grid(rows, cols);
  std::vector<int> used(static_cast<std::size_t>(g) + 1, 0);
  std::function<void(int)> rec = [&](int index) {
    if (index == rows * cols) {
      for (int v = 1; v <= g; ++v)
        if (used[static_cast<std::size_t>(v)] != r) return;
      out.insert(key(grid));
      return;
    }
    const BoxCoord c{index / cols + 1, index % cols + 1};
    const Cell* left = c.col > 1 ? &grid.at({c.row, c.col - 1}) : nullptr;
    const Cell* below = c.row > 1 ? &grid.at({c.row - 1, c.col}) : nullptr;
    for (int v = 1; v <= g; ++v) {
      if (left && (left->kind != CellKind::red || left->value >= v)) continue;
      if (below && (below->kind != CellKind::red || below->value > v)) continue;
      if (used[static_cast<std::size_t>(v)] == r) continue;
      ++used[static_cast<std::size_t>(v)];
      grid.at(c) = Cell::red(v);
      rec(index + 1);
      --used[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v <= r; ++v) {
      if (left && left->kind == CellKind::blue && left->value > v) continue;
      if (below && below->kind == CellKind::blue && below->value >= v) continue;
      grid.at(c) = Cell::blue(v);
      rec(index + 1);
    }
  };
  rec(0);
  return out;
}

// L'-tableaux: two rows of the given width, the last `gray` top cells gray,
// a red SYT on 1..g in the lower left and blue 0/1 elsewhere.
inline std::set<std::string> lprime_tableaux(int g, int width, int gray) {
  std::set<std::string> out;
  if (width < 0 || gray > width) return out;
  GridTableau grid(2, width);
  std::vector<bool> used(static_cast<std::size_t>(g) + 1, false);
  std::function<void(int)> rec = [&](int index) {
    if (index == 2 * width) {
      for (int v = 1; v <= g; ++v)
        if (!used[static_cast<std::size_t>(v)]) return;
      out.insert(key(grid));
      return;
    }
    const BoxCoord c{index / width + 1, index % width + 1};
    if (c.row == 2 && c.col > width - gray) {
      grid.at(c) = Cell::gray();
      rec(index + 1);
      return;
    }
    const Cell* left = c.col > 1 ? &grid.at({c.row, c.col - 1}) : nullptr;
    const Cell* below = c.row > 1 ? &grid.at({c.row - 1, c.col}) : nullptr;
    for (int v = 1; v <= g; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (left && (left->kind != CellKind::red || left->value >= v)) continue;
      if (below && (below->kind != CellKind::red || below->value >= v)) continue;
      used[static_cast<std::size_t>(v)] = true;
      grid.at(c) = Cell::red(v);
      rec(index + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
    for (int v = 0; v <= 1; ++v) {
      if (left && left->kind == CellKind::blue && left->value > v) continue;
      if (below && below->kind == CellKind::blue && below->value >= v) continue;
      grid.at(c) = Cell::blue(v);
      rec(index + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
