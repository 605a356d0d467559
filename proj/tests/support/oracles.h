// Brute-force reference computations for the unit and acceptance suites.
// None of these call the routines they are used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace compas::testing {

struct XY {
  double x, y;
};

/// Vertices of the chosen beats on the unit circle, in position order.
inline std::vector<XY> circle_vertices(const std::vector<int>& positions, int beats) {
  std::vector<XY> out;
  for (int p : positions) {
    double angle = 2.0 * std::numbers::pi * p / beats;
    out.push_back({std::sin(angle), std::cos(angle)});
  }
  return out;
}

/// Absolute shoelace area.
inline double shoelace_area(const std::vector<XY>& v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const XY& a = v[i];
    const XY& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::abs(twice) / 2.0;
}

/// Height of the chronotonic box over beat t, computed beat by beat.
inline int box_height_at(const std::vector<int>& onsets, int beats, int t) {
  int prev = 0;
  int next = beats;
  for (int o : onsets) {
    if (o <= t) prev = std::max(prev, o);
    if (o > t) next = std::min(next, o);
  }
  return next - prev;
}

/// Unit-width rectangle decomposition of the area between two curves.
inline int chronotonic_by_beats(const std::vector<int>& a, const std::vector<int>& b, int beats) {
  int area = 0;
  for (int t = 0; t < beats; ++t) {
    area += std::abs(box_height_at(a, beats, t) - box_height_at(b, beats, t));
  }
  return area;
}

/// Minimum of sum |a_i - b_sigma(i)| over all k! bijections.
inline int min_bijection_cost(const std::vector<int>& a, std::vector<int> b) {
  std::sort(b.begin(), b.end());
  int best = std::numeric_limits<int>::max();
  do {
    int cost = 0;
    for (std::size_t i = 0; i < a.size(); ++i) cost += std::abs(a[i] - b[i]);
    best = std::min(best, cost);
  } while (std::next_permutation(b.begin(), b.end()));
  return best;
}

/// Minimum transport cost over every non-decreasing map from `src` onto `dst`
/// (both sorted), by direct enumeration.
inline int min_monotone_surjection_cost(const std::vector<int>& src, const std::vector<int>& dst) {
  int best = std::numeric_limits<int>::max();
  std::vector<std::size_t> target(src.size());
  std::function<void(std::size_t, std::size_t)> assign = [&](std::size_t i, std::size_t lo) {
    if (i == src.size()) {
      std::vector<bool> hit(dst.size(), false);
      int cost = 0;
      for (std::size_t s = 0; s < src.size(); ++s) {
        hit[target[s]] = true;
        cost += std::abs(src[s] - dst[target[s]]);
      }
      if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
        best = std::min(best, cost);
      }
      return;
    }
    for (std::size_t j = lo; j < dst.size(); ++j) {
      target[i] = j;
      assign(i + 1, j);
    }
  };
  assign(0, 0);
  return best;
}

/// Random k-subset of [0, n), sorted.
inline std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> out(all.begin(), all.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

/// Unrooted binary tree with weighted edges, grown by repeatedly splitting a
/// random edge and hanging a new leaf off the split point.
struct ReferenceTree {
  struct E {
    int a, b;
    double w;
  };
  int nodes = 0;
  std::vector<int> leaf_node;  // leaf i -> node id
  std::vector<std::string> labels;
  std::vector<E> edges;

  static ReferenceTree random(std::mt19937_64& rng, int leaves) {
    std::uniform_real_distribution<double> len(1.0, 10.0);
    ReferenceTree t;
    t.nodes = 4;  // centre 0, leaves 1..3
    for (int i = 1; i <= 3; ++i) {
      t.edges.push_back({0, i, len(rng)});
      t.leaf_node.push_back(i);
    }
    while (static_cast<int>(t.leaf_node.size()) < leaves) {
      std::uniform_int_distribution<std::size_t> pick(0, t.edges.size() - 1);
      E old = t.edges[pick(rng)];
      const int mid = t.nodes++;
      const int leaf = t.nodes++;
      // Replace the picked edge by two halves with fresh lengths.
      for (auto& e : t.edges) {
        if (e.a == old.a && e.b == old.b) {
          e = {old.a, mid, len(rng)};
          break;
        }
      }
      t.edges.push_back({mid, old.b, len(rng)});
      t.edges.push_back({mid, leaf, len(rng)});
      t.leaf_node.push_back(leaf);
    }
    for (std::size_t i = 0; i < t.leaf_node.size(); ++i) t.labels.push_back("L" + std::to_string(i));
    return t;
  }

  /// All-pairs path lengths between leaves (Floyd-Warshall on the nodes).
  std::vector<double> leaf_distances() const {
    const double inf = std::numeric_limits<double>::infinity();
    const auto n = static_cast<std::size_t>(nodes);
    std::vector<double> d(n * n, inf);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
    for (const auto& e : edges) {
      d[static_cast<std::size_t>(e.a) * n + static_cast<std::size_t>(e.b)] = e.w;
      d[static_cast<std::size_t>(e.b) * n + static_cast<std::size_t>(e.a)] = e.w;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    const std::size_t m = leaf_node.size();
    std::vector<double> out(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        out[i * m + j] = d[static_cast<std::size_t>(leaf_node[i]) * n +
                           static_cast<std::size_t>(leaf_node[j])];
    return out;
  }

  /// Each edge as the sorted labels on the side without leaf 0.
  std::map<std::vector<std::string>, double> splits() const {
    std::map<std::vector<std::string>, double> out;
    for (std::size_t cut = 0; cut < edges.size(); ++cut) {
      // Flood fill from leaf 0 without the cut edge.
      std::vector<bool> reach(static_cast<std::size_t>(nodes), false);
      std::vector<int> stack{leaf_node[0]};
      reach[static_cast<std::size_t>(leaf_node[0])] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (e == cut) continue;
          int w = edges[e].a == v ? edges[e].b : edges[e].b == v ? edges[e].a : -1;
          if (w >= 0 && !reach[static_cast<std::size_t>(w)]) {
            reach[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
          }
        }
      }
      std::vector<std::string> far;
      for (std::size_t i = 0; i < leaf_node.size(); ++i) {
        if (!reach[static_cast<std::size_t>(leaf_node[i])]) far.push_back(labels[i]);
      }
      std::sort(far.begin(), far.end());
      out[far] = edges[cut].w;
    }
    return out;
  }
};

}  // namespace compas::testing
