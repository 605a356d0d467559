#include "compas/phylo.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "compas/errors.h"
#include "compas/rhythm_file.h"
#include "text_util.h"

namespace compas {

// ---------------------------------------------------------------------------
// PhyloTree
// ---------------------------------------------------------------------------

std::size_t PhyloTree::add_leaf(std::string label) {
  nodes_.push_back({std::move(label), static_cast<int>(leaves_.size()), {}});
  leaves_.push_back(nodes_.size() - 1);
  return nodes_.size() - 1;
}

std::size_t PhyloTree::add_internal() {
  nodes_.push_back({});
  return nodes_.size() - 1;
}

void PhyloTree::connect(std::size_t a, std::size_t b, double length) {
  if (a >= nodes_.size() || b >= nodes_.size() || a == b) {
    throw InvalidArgument("invalid tree edge");
  }
  if (!(length >= 0.0) || !std::isfinite(length)) {
    throw InvalidArgument("branch lengths must be finite and non-negative");
  }
  nodes_[a].edges.push_back({b, length});
  nodes_[b].edges.push_back({a, length});
}

std::vector<std::string> PhyloTree::leaf_labels() const {
  std::vector<std::string> out;
  out.reserve(leaves_.size());
  for (std::size_t id : leaves_) out.push_back(nodes_[id].label);
  return out;
}

void PhyloTree::set_root(std::size_t node) {
  if (node >= nodes_.size()) throw InvalidArgument("root outside tree");
  root_ = node;
}

DistanceMatrix PhyloTree::path_lengths() const {
  const std::size_t n = leaves_.size();
  std::vector<double> values(n * n, 0.0);
  std::vector<double> dist(nodes_.size());
  std::vector<bool> seen(nodes_.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    std::vector<std::size_t> stack{leaves_[i]};
    dist[leaves_[i]] = 0.0;
    seen[leaves_[i]] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const Edge& e : nodes_[v].edges) {
        if (seen[e.to]) continue;
        seen[e.to] = true;
        dist[e.to] = dist[v] + e.length;
        stack.push_back(e.to);
      }
    }
    for (std::size_t j = 0; j < n; ++j) values[i * n + j] = i == j ? 0.0 : dist[leaves_[j]];
  }
  // Floating-point sums along a path can differ in the last bit depending on
  // direction; symmetrize.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) values[j * n + i] = values[i * n + j];
  }
  return DistanceMatrix(leaf_labels(), std::move(values));
}

std::map<std::vector<std::string>, double> PhyloTree::splits() const {
  std::map<std::vector<std::string>, double> out;
  if (leaves_.empty()) return out;
  const std::size_t anchor = leaves_.front();

  // Leaves reachable from `start` without crossing back to `blocked`.
  auto side = [&](std::size_t start, std::size_t blocked) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, blocked}};
    bool has_anchor = false;
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      if (is_leaf(v)) {
        labels.push_back(nodes_[v].label);
        if (v == anchor) has_anchor = true;
      }
      for (const Edge& e : nodes_[v].edges) {
        if (e.to != from) stack.push_back({e.to, v});
      }
    }
    return std::make_pair(labels, has_anchor);
  };

  for (std::size_t a = 0; a < nodes_.size(); ++a) {
    for (const Edge& e : nodes_[a].edges) {
      if (e.to < a) continue;
      auto [labels, has_anchor] = side(e.to, a);
      if (has_anchor) labels = side(a, e.to).first;
      std::sort(labels.begin(), labels.end());
      out[labels] = e.length;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Neighbor joining
// ---------------------------------------------------------------------------

PhyloTree neighbor_joining(const DistanceMatrix& distances) {
  const std::size_t n = distances.size();
  if (n < 3) throw InvalidArgument("neighbor joining needs at least three labels");

  PhyloTree tree;
  std::vector<std::size_t> active;  // tree node per active row
  for (const auto& label : distances.labels()) active.push_back(tree.add_leaf(label));
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = distances.at(i, j);
  }

  auto describe = [&](std::size_t node) {
    return tree.is_leaf(node) ? "'" + tree.label(node) + "'" : "node " + std::to_string(node);
  };
  auto attach = [&](std::size_t parent, std::size_t child, double length) {
    if (length < 0.0) {
      tree.note_clamped({"branch to " + describe(child), length});
      length = 0.0;
    }
    tree.connect(parent, child, length);
  };

  while (active.size() > 3) {
    const std::size_t m = active.size();
    std::vector<double> row_sum(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) row_sum[i] += d[i][j];
    }
    std::size_t bi = 0, bj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double q = static_cast<double>(m - 2) * d[i][j] - row_sum[i] - row_sum[j];
        if (!std::isfinite(best) || q < best - 1e-12 * (1.0 + std::abs(best))) {
          best = q;
          bi = i;
          bj = j;
        }
      }
    }

    const double dij = d[bi][bj];
    const double li = dij / 2.0 + (row_sum[bi] - row_sum[bj]) / (2.0 * static_cast<double>(m - 2));
    const double lj = dij - li;
    const std::size_t joined = tree.add_internal();
    attach(joined, active[bi], li);
    attach(joined, active[bj], lj);

    std::vector<double> to_joined;
    for (std::size_t k = 0; k < m; ++k) {
      if (k != bi && k != bj) to_joined.push_back((d[bi][k] + d[bj][k] - dij) / 2.0);
    }
    // Drop rows bi < bj, then append the joined node.
    for (auto* idx : {&bj, &bi}) {
      d.erase(d.begin() + static_cast<long>(*idx));
      for (auto& row : d) row.erase(row.begin() + static_cast<long>(*idx));
      active.erase(active.begin() + static_cast<long>(*idx));
    }
    for (std::size_t k = 0; k < d.size(); ++k) d[k].push_back(to_joined[k]);
    to_joined.push_back(0.0);
    d.push_back(std::move(to_joined));
    active.push_back(joined);
  }

  const std::size_t centre = tree.add_internal();
  attach(centre, active[0], (d[0][1] + d[0][2] - d[1][2]) / 2.0);
  attach(centre, active[1], (d[0][1] + d[1][2] - d[0][2]) / 2.0);
  attach(centre, active[2], (d[0][2] + d[1][2] - d[0][1]) / 2.0);
  tree.set_root(centre);
  return tree;
}

// ---------------------------------------------------------------------------
// Newick
// ---------------------------------------------------------------------------

namespace {

std::string newick_label(const std::string& label) {
  if (is_valid_label(label)) return label;
  std::string out = "'";
  for (char c : label) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

std::string newick_length(double length) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", length + 0.0);
  return buf;
}

}  // namespace

std::string to_newick(const PhyloTree& tree) {
  if (tree.node_count() == 0) return ";";
  std::vector<int> min_leaf(tree.node_count(), std::numeric_limits<int>::max());

  std::function<int(std::size_t, std::size_t)> index_below = [&](std::size_t v, std::size_t from) {
    int best = std::numeric_limits<int>::max();
    if (tree.is_leaf(v)) {
      auto it = std::find(tree.leaves().begin(), tree.leaves().end(), v);
      best = static_cast<int>(it - tree.leaves().begin());
    }
    for (const auto& e : tree.neighbors(v)) {
      if (e.to != from) best = std::min(best, index_below(e.to, v));
    }
    min_leaf[v] = best;
    return best;
  };
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  index_below(tree.root(), kNone);

  std::function<std::string(std::size_t, std::size_t)> write = [&](std::size_t v,
                                                                    std::size_t from) {
    std::vector<PhyloTree::Edge> children;
    for (const auto& e : tree.neighbors(v)) {
      if (e.to != from) children.push_back(e);
    }
    std::sort(children.begin(), children.end(),
              [&](const auto& a, const auto& b) { return min_leaf[a.to] < min_leaf[b.to]; });
    std::string out;
    if (!children.empty()) {
      out += '(';
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i > 0) out += ',';
        out += write(children[i].to, v) + ':' + newick_length(children[i].length);
      }
      out += ')';
    }
    if (tree.is_leaf(v)) out += newick_label(tree.label(v));
    return out;
  };
  return write(tree.root(), kNone) + ";";
}

namespace {

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  PhyloTree parse() {
    skip_space();
    std::size_t root = subtree(kNoParent);
    tree_.set_root(root);
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after ';'");
    if (tree_.leaves().empty()) fail("tree has no leaves");
    return std::move(tree_);
  }

 private:
  static constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("newick: " + message + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string label() {
    skip_space();
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated quoted label");
        char c = text_[pos_++];
        if (c == '\'') {
          if (pos_ < text_.size() && text_[pos_] == '\'') {
            out += '\'';
            ++pos_;
            continue;
          }
          break;
        }
        out += c;
      }
      return out;
    }
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '\'' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      out += c;
      ++pos_;
    }
    return out;
  }

  double length() {
    if (!peek(':')) return 0.0;
    ++pos_;
    skip_space();
    std::size_t begin = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '.' || text_[pos_] == '-' ||
                                   text_[pos_] == '+' || text_[pos_] == 'e' ||
                                   text_[pos_] == 'E')) {
      ++pos_;
    }
    auto value = detail::parse_double(text_.substr(begin, pos_ - begin));
    if (!value) fail("bad branch length");
    if (*value < 0.0) fail("negative branch length");
    return *value;
  }

  std::size_t subtree(std::size_t parent) {
    std::size_t node;
    if (peek('(')) {
      ++pos_;
      node = tree_.add_internal();
      do {
        std::size_t child = subtree(node);
        (void)child;
      } while (peek(',') && (++pos_, true));
      expect(')');
      label();  // internal labels are not kept
    } else {
      std::string name = label();
      if (name.empty()) fail("expected a leaf label");
      node = tree_.add_leaf(std::move(name));
    }
    double len = length();
    if (parent != kNoParent) tree_.connect(parent, node, len);
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  PhyloTree tree_;
};

}  // namespace

PhyloTree parse_newick(std::string_view text) { return NewickParser(text).parse(); }

}  // namespace compas
