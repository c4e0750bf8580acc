#include "operad/tree.hpp"

#include <functional>

#include "operad/error.hpp"

namespace operad {

OperadTree OperadTree::trivial() { return OperadTree{}; }

OperadTree OperadTree::corolla(std::size_t arity) {
  TreeBuilder b;
  auto v = b.open_vertex();
  for (std::size_t i = 0; i < arity; ++i) b.add_leaf(v);
  return b.finish();
}

std::size_t TreeBuilder::open_vertex() {
  if (!started_) {
    tree_.leaves_ = 0;
    started_ = true;
  }
  tree_.inputs_.emplace_back();
  return tree_.inputs_.size() - 1;
}

void TreeBuilder::add_child(std::size_t parent, std::size_t child) {
  tree_.inputs_.at(parent).push_back(static_cast<OperadTree::Input>(child));
}

std::size_t TreeBuilder::add_leaf(std::size_t parent) {
  const std::size_t k = tree_.leaves_++;
  tree_.inputs_.at(parent).push_back(-static_cast<OperadTree::Input>(k) - 1);
  return k;
}

OperadTree TreeBuilder::finish() {
  OperadTree out = std::move(tree_);
  if (!started_) out = OperadTree::trivial();
  tree_ = OperadTree{};
  started_ = false;
  return out;
}

std::optional<std::size_t> OperadTree::incidence(std::size_t half_edge) const {
  if (half_edge >= half_edge_count()) throw ShapeError("half-edge " + std::to_string(half_edge) + " out of range");
  if (is_trivial()) return std::nullopt;
  if (half_edge == 0) return 0;
  for (std::size_t v = 0; v < inputs_.size(); ++v)
    for (Input in : inputs_[v])
      if (is_leaf(in) && leaf_index(in) == half_edge - 1) return v;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> OperadTree::internal_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < inputs_.size(); ++v)
    for (Input in : inputs_[v])
      if (!is_leaf(in)) edges.emplace_back(v, static_cast<std::size_t>(in));
  return edges;
}

bool OperadTree::audit() const {
  if (is_trivial()) return leaves_ == 1;
  // Nodes: vertices 0..V-1, then half-edges V..V+L (root first).
  const std::size_t V = inputs_.size();
  const std::size_t N = V + half_edge_count();
  std::vector<std::vector<std::size_t>> adj(N);
  std::size_t edge_count = 0;
  auto link = [&](std::size_t a, std::size_t b) {
    if (a >= N || b >= N) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
    ++edge_count;
    return true;
  };
  if (!link(0, V)) return false;
  std::vector<int> leaf_seen(leaves_, 0);
  for (std::size_t v = 0; v < V; ++v) {
    for (Input in : inputs_[v]) {
      if (is_leaf(in)) {
        const std::size_t k = leaf_index(in);
        if (k >= leaves_ || leaf_seen[k]++) return false;
        if (!link(v, V + 1 + k)) return false;
      } else if (!link(v, static_cast<std::size_t>(in))) {
        return false;
      }
    }
  }
  if (edge_count != N - 1) return false;
  std::vector<bool> seen(N, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != N) return false;
  for (std::size_t h = V; h < N; ++h)
    if (adj[h].size() != 1) return false;
  return true;
}

std::string OperadTree::serialize() const {
  if (is_trivial()) return "|";
  std::string out;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    out += std::to_string(inputs_[v].size());
    out += '(';
    bool first = true;
    for (Input in : inputs_[v]) {
      if (!first) out += ',';
      first = false;
      if (is_leaf(in))
        out += '|';
      else
        walk(static_cast<std::size_t>(in));
    }
    out += ')';
  };
  walk(0);
  return out;
}

OperadTree::GraftResult OperadTree::graft_traced(const OperadTree& host, std::span<const OperadTree> args) {
  if (args.size() != host.leaf_count())
    throw ShapeError("grafting needs " + std::to_string(host.leaf_count()) + " arguments, got " +
                     std::to_string(args.size()));
  GraftResult result;
  TreeBuilder b;

  // Copies vertex v of `src` (source id `tag`) under `parent`; host leaves
  // are replaced by the matching argument.
  std::function<std::size_t(const OperadTree&, int, std::size_t)> copy_vertex =
      [&](const OperadTree& src, int tag, std::size_t v) -> std::size_t {
    const std::size_t id = b.open_vertex();
    result.vertex_origin.push_back({tag, v});
    for (Input in : src.inputs_[v]) {
      if (!is_leaf(in)) {
        b.add_child(id, copy_vertex(src, tag, static_cast<std::size_t>(in)));
        continue;
      }
      const std::size_t k = leaf_index(in);
      if (tag >= 0) {
        b.add_leaf(id);
        result.leaf_origin.push_back({tag, k});
        continue;
      }
      const OperadTree& arg = args[k];
      if (arg.is_trivial()) {
        b.add_leaf(id);
        result.leaf_origin.push_back({static_cast<int>(k), 0});
      } else {
        b.add_child(id, copy_vertex(arg, static_cast<int>(k), 0));
      }
    }
    return id;
  };

  if (host.is_trivial()) {
    const OperadTree& arg = args[0];
    if (arg.is_trivial()) {
      result.tree = trivial();
      result.leaf_origin.push_back({0, 0});
      return result;
    }
    copy_vertex(arg, 0, 0);
  } else {
    copy_vertex(host, -1, 0);
  }
  result.tree = b.finish();
  return result;
}

OperadTree OperadTree::graft(const OperadTree& host, std::span<const OperadTree> args) {
  return graft_traced(host, args).tree;
}

}  // namespace operad
