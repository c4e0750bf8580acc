#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace operad {

/// Rooted planar operadic tree.
///
/// Internal vertices are stored in preorder, vertex 0 carrying the root
/// half-edge. Each vertex lists its inputs left to right; an input is either a
/// child vertex (id >= 0) or a leaf half-edge encoded as -(k+1) for the k-th
/// leaf in planar order. Because the storage is canonical, structural equality
/// is isomorphism preserving root and child order.
///
/// Half-edges are numbered 0 (root) and 1..leaf_count() (leaves). The trivial
/// tree has no vertices and a single half-edge that is both root and leaf.
class OperadTree {
 public:
  using Input = int;

  static OperadTree trivial();
  static OperadTree corolla(std::size_t arity);

  std::size_t vertex_count() const { return inputs_.size(); }
  std::size_t leaf_count() const { return leaves_; }
  bool is_trivial() const { return inputs_.empty(); }

  std::span<const Input> inputs(std::size_t vertex) const { return inputs_.at(vertex); }
  std::size_t arity(std::size_t vertex) const { return inputs_.at(vertex).size(); }
  static bool is_leaf(Input in) { return in < 0; }
  static std::size_t leaf_index(Input in) { return static_cast<std::size_t>(-in - 1); }

  std::size_t half_edge_count() const { return leaves_ + 1; }
  /// Vertex a half-edge is attached to; nullopt only for the trivial tree.
  std::optional<std::size_t> incidence(std::size_t half_edge) const;
  /// Unordered {parent, child} pairs.
  std::vector<std::pair<std::size_t, std::size_t>> internal_edges() const;

  /// Checks that the associated classical graph (vertices and half-edges as
  /// nodes, internal edges and incidence pairs as edges) is a tree and that
  /// every half-edge node has degree 1.
  bool audit() const;

  /// Preorder with arities, e.g. `2(2(|,|),|)`; the trivial tree is `|`.
  std::string serialize() const;

  friend bool operator==(const OperadTree&, const OperadTree&) = default;

  struct Origin {
    int source;  // -1 for the host, k for argument k
    std::size_t index;  // vertex (for vertices) or leaf (for leaves) in the source
  };

  struct GraftResult;

  /// γ(host; args): the root of args[k] is grafted onto the k-th leaf of host.
  /// Throws ShapeError when args.size() != host.leaf_count().
  static OperadTree graft(const OperadTree& host, std::span<const OperadTree> args);
  /// Same as graft(), also reporting where every vertex and leaf came from.
  static GraftResult graft_traced(const OperadTree& host, std::span<const OperadTree> args);

 private:
  friend class TreeBuilder;
  std::vector<std::vector<Input>> inputs_;
  std::size_t leaves_ = 1;
};

struct OperadTree::GraftResult {
  OperadTree tree;
  std::vector<Origin> vertex_origin;
  std::vector<Origin> leaf_origin;
};

/// Preorder tree construction, used by grafting and by term parsing.
class TreeBuilder {
 public:
  /// Opens a vertex; returns its id. Inputs are appended with add_*.
  std::size_t open_vertex();
  void add_child(std::size_t parent, std::size_t child);
  /// Appends a fresh leaf to `parent` and returns its leaf index.
  std::size_t add_leaf(std::size_t parent);
  OperadTree finish();

 private:
  OperadTree tree_{};
  bool started_ = false;
};

}  // namespace operad
