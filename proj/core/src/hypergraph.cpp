#include "hypercount/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hypercount/error.hpp"

namespace hypercount {

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void validate_edge(VertexSet& e, std::size_t n, std::size_t k) {
  if (e.size() != k) {
    throw Error(ErrorKind::arity_mismatch,
                "edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
  }
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
    throw Error(ErrorKind::arity_mismatch, "edge repeats a vertex");
  }
  if (!e.empty() && e.back() >= n) {
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex " + std::to_string(e.back()) + " out of range for n=" + std::to_string(n));
  }
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::size_t k, std::vector<VertexSet> edges)
    : n_(n), k_(k), incidence_(n) {
  if (k < 2) throw Error(ErrorKind::invalid_argument, "uniformity must be at least 2");
  for (auto& e : edges) validate_edge(e, n, k);
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorKind::duplicate_edge, "duplicate edge");
  }
  flat_.reserve(edges.size() * k);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    for (Vertex v : edges[id]) {
      flat_.push_back(v);
      incidence_[v].push_back(id);
    }
  }
}

bool Hypergraph::has_edge(std::span<const Vertex> sorted) const noexcept {
  if (sorted.size() != k_) return false;
  std::size_t lo = 0, hi = edge_count();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (lex_less(edge(static_cast<EdgeId>(mid)), sorted)) lo = mid + 1; else hi = mid;
  }
  if (lo == edge_count()) return false;
  const auto e = edge(static_cast<EdgeId>(lo));
  return std::equal(e.begin(), e.end(), sorted.begin());
}

std::vector<VertexSet> Hypergraph::edges() const {
  std::vector<VertexSet> out;
  out.reserve(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) out.emplace_back(edge(e).begin(), edge(e).end());
  return out;
}

SubsetFamily::SubsetFamily(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
  if (sets_.empty()) throw Error(ErrorKind::invalid_argument, "family must contain a set");
  const std::size_t i = sets_.front().size();
  for (auto& s : sets_) {
    if (s.size() != i) throw Error(ErrorKind::invalid_argument, "family mixes set sizes");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(ErrorKind::invalid_argument, "family set repeats a vertex");
    }
  }
  std::sort(sets_.begin(), sets_.end());
  if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end()) {
    throw Error(ErrorKind::invalid_argument, "family sets must be distinct");
  }
}

VertexSet canonical_set(std::span<const Vertex> s, std::size_t n) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(ErrorKind::invalid_argument, "vertex set repeats a vertex");
  }
  if (!out.empty() && out.back() >= n) {
    throw Error(ErrorKind::vertex_out_of_range, "vertex " + std::to_string(out.back()) + " >= n");
  }
  return out;
}

std::vector<VertexSet> neighborhood(const Hypergraph& g, std::span<const Vertex> s) {
  const std::size_t k = g.uniformity();
  if (s.empty() || s.size() >= k) {
    throw Error(ErrorKind::size_out_of_range,
                "neighborhood needs 1 <= |S| <= k-1, got |S|=" + std::to_string(s.size()));
  }
  const VertexSet set = canonical_set(s, g.vertex_count());
  const Vertex pivot = *std::min_element(set.begin(), set.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) < g.degree(b);
  });
  std::vector<VertexSet> out;
  for (EdgeId e : g.incident(pivot)) {
    const auto edge = g.edge(e);
    if (!std::includes(edge.begin(), edge.end(), set.begin(), set.end())) continue;
    VertexSet rest;
    rest.reserve(k - set.size());
    std::set_difference(edge.begin(), edge.end(), set.begin(), set.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> joint_neighborhood(const Hypergraph& g, const SubsetFamily& family) {
  std::vector<VertexSet> acc = neighborhood(g, family.sets().front());
  for (std::size_t j = 1; j < family.size() && !acc.empty(); ++j) {
    const auto next = neighborhood(g, family.sets()[j]);
    std::vector<VertexSet> both;
    std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(), std::back_inserter(both));
    acc = std::move(both);
  }
  // validate the remaining sets even when the intersection emptied early
  for (const auto& s : family.sets()) {
    if (s.size() >= g.uniformity()) {
      throw Error(ErrorKind::size_out_of_range, "family set size must be below k");
    }
    canonical_set(s, g.vertex_count());
  }
  return acc;
}

Density density(const Hypergraph& g) {
  if (g.vertex_count() < g.uniformity()) {
    throw Error(ErrorKind::domain, "density needs n >= k");
  }
  Density d;
  d.edges = g.edge_count();
  d.total = binomial(g.vertex_count(), g.uniformity());
  const std::uint64_t div = std::gcd(d.edges, d.total);
  d.num = d.edges / div;
  d.den = d.total / div;
  d.value = static_cast<double>(static_cast<long double>(d.edges) / static_cast<long double>(d.total));
  return d;
}

bool is_stable(const Hypergraph& h, std::span<const Vertex> vertices) {
  const VertexSet set = canonical_set(vertices, h.vertex_count());
  if (set.size() < h.uniformity()) return true;
  std::vector<char> inside(h.vertex_count(), 0);
  for (Vertex v : set) inside[v] = 1;
  for (Vertex v : set) {
    for (EdgeId e : h.incident(v)) {
      const auto edge = h.edge(e);
      if (std::all_of(edge.begin(), edge.end(), [&](Vertex u) { return inside[u] != 0; })) return false;
    }
  }
  return true;
}

bool is_linear(const Hypergraph& h) {
  // Two edges share >= 2 vertices iff some vertex pair lies in both.
  std::unordered_set<std::uint64_t> pairs;
  const std::uint64_t n = h.vertex_count();
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto edge = h.edge(e);
    for (std::size_t a = 0; a < edge.size(); ++a) {
      for (std::size_t b = a + 1; b < edge.size(); ++b) {
        if (!pairs.insert(edge[a] * n + edge[b]).second) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw ParseError(ErrorKind::parse, lineno, "expected a non-negative integer");
    }
    out.push_back(v);
    p = next;
  }
  return out;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Hypergraph read_hypergraph(std::string_view text) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0, k = 0, m = 0;
  std::vector<VertexSet> edges;
  std::set<VertexSet> seen;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++lineno;
    if (skippable(line)) continue;
    const auto nums = parse_numbers(line, lineno);
    if (!have_header) {
      if (nums.size() != 3) throw ParseError(ErrorKind::parse, lineno, "header must be \"n k m\"");
      n = nums[0];
      k = nums[1];
      m = nums[2];
      if (k < 2) throw ParseError(ErrorKind::parse, lineno, "uniformity must be at least 2");
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw ParseError(ErrorKind::parse, lineno, "more edge lines than declared");
    if (nums.size() != k) {
      throw ParseError(ErrorKind::arity_mismatch, lineno,
                       "edge has " + std::to_string(nums.size()) + " vertices, expected " +
                           std::to_string(k));
    }
    VertexSet e;
    for (auto v : nums) {
      if (v >= n) {
        throw ParseError(ErrorKind::vertex_out_of_range, lineno,
                         "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
      }
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParseError(ErrorKind::arity_mismatch, lineno, "edge repeats a vertex");
    }
    if (!seen.insert(e).second) throw ParseError(ErrorKind::duplicate_edge, lineno, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(ErrorKind::parse, lineno + 1, "missing header");
  if (edges.size() != m) {
    throw ParseError(ErrorKind::parse, lineno + 1,
                     "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Hypergraph(n, k, std::move(edges));
}

std::string write_hypergraph(const Hypergraph& g) {
  std::string out = std::to_string(g.vertex_count()) + ' ' + std::to_string(g.uniformity()) + ' ' +
                    std::to_string(g.edge_count()) + '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto edge = g.edge(e);
    for (std::size_t j = 0; j < edge.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(edge[j]);
    }
    out += '\n';
  }
  return out;
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_hypergraph(buf.str());
}

void save_hypergraph(const Hypergraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path);
  out << write_hypergraph(g);
  if (!out) throw Error(ErrorKind::io, "write failed for " + path);
}

}  // namespace hypercount
