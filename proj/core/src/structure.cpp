#include "hypercount/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hypercount/error.hpp"

namespace hypercount {

Degeneracy degeneracy(const Hypergraph& h) {
  const std::size_t m = h.vertex_count();
  std::vector<std::size_t> deg(m);
  for (Vertex v = 0; v < m; ++v) deg[v] = h.degree(v);
  std::vector<char> edge_alive(h.edge_count(), 1);
  std::vector<char> removed(m, 0);
  // (degree, id) buckets give the smallest-id tie-break for free.
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < m; ++v) queue.emplace(deg[v], v);

  std::vector<Vertex> removal;
  std::vector<std::size_t> removal_degree;
  removal.reserve(m);
  std::size_t best = 0;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    removal.push_back(v);
    removal_degree.push_back(d);
    best = std::max(best, d);
    for (EdgeId e : h.incident(v)) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = 0;
      for (Vertex u : h.edge(e)) {
        if (u == v || removed[u]) continue;
        queue.erase({deg[u], u});
        --deg[u];
        queue.emplace(deg[u], u);
      }
    }
  }
  Degeneracy out;
  out.value = best;
  out.ordering.sequence.assign(removal.rbegin(), removal.rend());
  out.ordering.left_degrees.assign(removal_degree.rbegin(), removal_degree.rend());
  out.ordering.bound = best;
  return out;
}

std::size_t max_degree(const Hypergraph& h) {
  std::size_t best = 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v) best = std::max(best, h.degree(v));
  return best;
}

std::vector<VertexSet> connectors(const Hypergraph& h) {
  if (!is_linear(h)) throw Error(ErrorKind::not_linear, "connectors are defined for linear hypergraphs");
  const std::size_t k = h.uniformity();
  std::vector<VertexSet> out;
  std::vector<std::size_t> hits(h.vertex_count(), 0);
  std::vector<Vertex> touched;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto edge = h.edge(e);
    touched.clear();
    // By linearity an edge f through an outside vertex w meets e in at most
    // one vertex, and distinct such f meet e in distinct vertices, so w
    // witnesses a connector iff k edges through it touch e.
    for (Vertex u : edge) {
      for (EdgeId f : h.incident(u)) {
        if (f == e) continue;
        for (Vertex w : h.edge(f)) {
          if (w == u) continue;
          if (hits[w]++ == 0) touched.push_back(w);
        }
      }
    }
    bool connector = false;
    for (Vertex w : touched) {
      if (hits[w] >= k) connector = true;
      hits[w] = 0;
    }
    if (connector) out.emplace_back(edge.begin(), edge.end());
  }
  return out;
}

StructureProfile profile(const Hypergraph& h) {
  StructureProfile p;
  p.degeneracy = degeneracy(h).value;
  p.max_degree = max_degree(h);
  p.cap = std::min(h.uniformity() * p.degeneracy, p.max_degree);
  p.linear = is_linear(h);
  if (p.linear) {
    p.connectors = connectors(h);
    p.connector_free = p.connectors->empty();
  }
  return p;
}

std::vector<std::size_t> left_degrees(const Hypergraph& h, std::span<const Vertex> sequence) {
  const std::size_t m = h.vertex_count();
  if (sequence.size() != m) throw Error(ErrorKind::not_permutation, "ordering must list every vertex once");
  std::vector<std::size_t> position(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex v = sequence[i];
    if (v >= m || position[v] != m) {
      throw Error(ErrorKind::not_permutation, "ordering must list every vertex once");
    }
    position[v] = i;
  }
  std::vector<std::size_t> out(m, 0);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    std::size_t last = 0;
    for (Vertex v : h.edge(e)) last = std::max(last, position[v]);
    ++out[last];
  }
  return out;
}

std::vector<Vertex> with_prefix(std::span<const Vertex> prefix, std::span<const Vertex> order) {
  std::vector<Vertex> out(prefix.begin(), prefix.end());
  for (Vertex v : order) {
    if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) out.push_back(v);
  }
  return out;
}

namespace {

Ordering make_ordering(const Hypergraph& h, std::vector<Vertex> sequence, std::size_t bound) {
  Ordering o;
  o.left_degrees = left_degrees(h, sequence);
  o.sequence = std::move(sequence);
  o.bound = bound;
  return o;
}

}  // namespace

PrefixOrdering prefix_degenerate_ordering(const Hypergraph& h, std::span<const Vertex> prefix) {
  const std::size_t m = h.vertex_count();
  const std::size_t k = h.uniformity();
  if (!is_linear(h)) throw Error(ErrorKind::not_linear, "prefix ordering needs a linear hypergraph");
  std::vector<char> seen(m, 0);
  for (Vertex w : prefix) {
    if (w >= m) throw Error(ErrorKind::vertex_out_of_range, "prefix vertex " + std::to_string(w) + " >= m");
    if (seen[w]++) throw Error(ErrorKind::invalid_argument, "prefix repeats a vertex");
  }
  const Degeneracy base = degeneracy(h);
  const std::size_t d = base.value;
  const std::size_t delta = max_degree(h);
  const std::size_t cap = std::min(k * d, delta);
  if (prefix.size() > std::max(k, d)) {
    throw Error(ErrorKind::size_out_of_range,
                "prefix length " + std::to_string(prefix.size()) + " exceeds max(k, d_H)=" +
                    std::to_string(std::max(k, d)));
  }

  PrefixOrdering out;
  const auto& order = base.ordering.sequence;
  if (prefix.empty()) {
    out.ordering = make_ordering(h, order, cap);
    out.used = PrefixCase::empty_prefix;
  } else if (cap == delta) {
    out.ordering = make_ordering(h, with_prefix(prefix, order), cap);
    out.used = PrefixCase::max_degree;
  } else if (d >= 2) {
    out.ordering = make_ordering(h, with_prefix(prefix, order), cap);
    out.used = PrefixCase::dense;
  } else {
    // d_H = 1: at most one vertex can exceed left degree k in (W, L\W);
    // placing it directly after W repairs the ordering.
    auto candidate = with_prefix(prefix, order);
    const auto degrees = left_degrees(h, candidate);
    std::optional<Vertex> overloaded;
    for (std::size_t i = 0; i < m; ++i) {
      if (degrees[i] > k) {
        if (overloaded) throw std::logic_error("more than one overloaded vertex in a 1-degenerate ordering");
        overloaded = candidate[i];
      }
    }
    if (overloaded) {
      std::vector<Vertex> extended(prefix.begin(), prefix.end());
      extended.push_back(*overloaded);
      out.ordering = make_ordering(h, with_prefix(extended, order), cap);
      out.used = PrefixCase::promoted;
      out.promoted = overloaded;
    } else {
      out.ordering = make_ordering(h, std::move(candidate), cap);
      out.used = PrefixCase::unchanged;
    }
  }
  const auto worst = std::max_element(out.ordering.left_degrees.begin(), out.ordering.left_degrees.end());
  if (worst != out.ordering.left_degrees.end() && *worst > cap) {
    throw std::logic_error("prefix ordering exceeds D_H");
  }
  return out;
}

Hypergraph induced_relabeled(const Hypergraph& h, std::span<const Vertex> vertices) {
  std::vector<std::size_t> index(h.vertex_count(), vertices.size());
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (vertices[j] >= h.vertex_count()) throw Error(ErrorKind::vertex_out_of_range, "vertex out of range");
    index[vertices[j]] = j;
  }
  std::vector<VertexSet> edges;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    VertexSet mapped;
    bool inside = true;
    for (Vertex v : h.edge(e)) {
      if (index[v] == vertices.size()) {
        inside = false;
        break;
      }
      mapped.push_back(static_cast<Vertex>(index[v]));
    }
    if (inside) edges.push_back(std::move(mapped));
  }
  return Hypergraph(vertices.size(), h.uniformity(), std::move(edges));
}

}  // namespace hypercount
