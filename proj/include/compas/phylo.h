// Unrooted trees from distance matrices (neighbor joining) and Newick I/O.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "compas/similarity.h"

namespace compas {

class PhyloTree {
 public:
  struct Edge {
    std::size_t to = 0;
    double length = 0.0;
  };

  /// A branch whose estimated length was negative and has been set to zero.
  struct ClampedBranch {
    std::string description;
    double estimate = 0.0;
  };

  std::size_t add_leaf(std::string label);
  std::size_t add_internal();
  /// Throws InvalidArgument for unknown nodes, self loops or negative lengths.
  void connect(std::size_t a, std::size_t b, double length);

  std::size_t node_count() const { return nodes_.size(); }
  bool is_leaf(std::size_t node) const { return nodes_[node].leaf_index >= 0; }
  const std::string& label(std::size_t node) const { return nodes_[node].label; }
  const std::vector<Edge>& neighbors(std::size_t node) const { return nodes_[node].edges; }

  /// Leaf node ids in insertion order.
  const std::vector<std::size_t>& leaves() const { return leaves_; }
  std::vector<std::string> leaf_labels() const;

  /// Node the Newick text is written from.
  std::size_t root() const { return root_; }
  void set_root(std::size_t node);

  const std::vector<ClampedBranch>& clamped() const { return clamped_; }
  void note_clamped(ClampedBranch branch) { clamped_.push_back(std::move(branch)); }

  /// Leaf-to-leaf path lengths, rows in leaf insertion order.
  DistanceMatrix path_lengths() const;

  /// Every edge as the leaf bipartition it induces, keyed by the sorted labels
  /// on the side that does not hold the first leaf, mapped to its length.
  std::map<std::vector<std::string>, double> splits() const;

 private:
  struct Node {
    std::string label;
    int leaf_index = -1;
    std::vector<Edge> edges;
  };

  std::vector<Node> nodes_;
  std::vector<std::size_t> leaves_;
  std::size_t root_ = 0;
  std::vector<ClampedBranch> clamped_;
};

/// Standard neighbor-joining agglomeration. Ties in the selection criterion go
/// to the pair with the smallest indices (original labels first, joined nodes
/// in creation order). Negative branch estimates are clamped to zero and
/// listed in `clamped()`. The root is the centre node of the final join.
/// Throws InvalidArgument for fewer than three labels.
PhyloTree neighbor_joining(const DistanceMatrix& distances);

/// Newick text with six-decimal branch lengths. Children are ordered by the
/// smallest leaf insertion index below them, so output is deterministic.
std::string to_newick(const PhyloTree& tree);

/// Parses Newick text. Missing branch lengths read as zero, internal node
/// labels are discarded. Throws ParseError.
PhyloTree parse_newick(std::string_view text);

}  // namespace compas
