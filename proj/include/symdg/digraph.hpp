#ifndef SYMDG_DIGRAPH_HPP
#define SYMDG_DIGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "symdg/coset.hpp"
#include "symdg/errors.hpp"
#include "symdg/matrix.hpp"
#include "symdg/permutation.hpp"

namespace symdg {

using Vertex = std::uint32_t;

/**
 * Finite digraph without loops. Out-neighbour lists are strictly increasing,
 * so the arc set has a single canonical representation.
 */
class Digraph {
public:
  Digraph() = default;

  Digraph(std::size_t n, std::vector<std::vector<Vertex>> out_adjacency,
          std::vector<std::string> labels = {})
  : _out(std::move(out_adjacency)), _labels(std::move(labels))
  {
    if (_out.size() != n)
      throw InvalidDigraph("adjacency list count " + std::to_string(_out.size()) +
                           " differs from vertex count " + std::to_string(n));
    if (!_labels.empty() && _labels.size() != n)
      throw InvalidDigraph("label count differs from vertex count");
    for (std::size_t u = 0; u < n; ++u) {
      auto const &list = _out[u];
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (list[k] >= n)
          throw InvalidDigraph("arc target " + std::to_string(list[k]) + " out of range");
        if (list[k] == u)
          throw InvalidDigraph("self-loop at vertex " + std::to_string(u));
        if (k > 0 && list[k] <= list[k - 1])
          throw InvalidDigraph("out-neighbours of " + std::to_string(u) +
                               " not strictly increasing");
      }
    }
  }

  /// Builds from an arc list in any order; duplicates are rejected.
  static Digraph from_arcs(std::size_t n, std::vector<std::pair<Vertex, Vertex>> const &arcs,
                           std::vector<std::string> labels = {})
  {
    std::vector<std::vector<Vertex>> out(n);
    for (auto [u, v] : arcs) {
      if (u >= n || v >= n)
        throw InvalidDigraph("arc (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range");
      out[u].push_back(v);
    }
    for (std::size_t u = 0; u < n; ++u) {
      std::sort(out[u].begin(), out[u].end());
      if (std::adjacent_find(out[u].begin(), out[u].end()) != out[u].end())
        throw InvalidDigraph("duplicate arc from vertex " + std::to_string(u));
    }
    return Digraph(n, std::move(out), std::move(labels));
  }

  std::size_t order() const { return _out.size(); }

  std::span<Vertex const> out(std::size_t v) const { return _out[v]; }

  std::vector<std::vector<Vertex>> const &adjacency() const { return _out; }

  std::vector<std::string> const &labels() const { return _labels; }

  std::size_t arc_count() const
  {
    std::size_t total = 0;
    for (auto const &list : _out)
      total += list.size();
    return total;
  }

  bool has_arc(std::size_t u, std::size_t v) const
  {
    auto const &list = _out[u];
    return std::binary_search(list.begin(), list.end(), static_cast<Vertex>(v));
  }

  std::vector<std::size_t> in_degrees() const
  {
    std::vector<std::size_t> result(order(), 0);
    for (auto const &list : _out) {
      for (Vertex v : list)
        ++result[v];
    }
    return result;
  }

  std::vector<std::vector<Vertex>> in_adjacency() const
  {
    std::vector<std::vector<Vertex>> result(order());
    for (std::size_t u = 0; u < order(); ++u) {
      for (Vertex v : _out[u])
        result[v].push_back(static_cast<Vertex>(u));
    }
    return result;
  }

  /// Common in- and out-valency, if every vertex has the same one.
  std::optional<std::size_t> valency() const
  {
    if (order() == 0)
      return std::nullopt;
    std::size_t d = _out[0].size();
    for (auto const &list : _out) {
      if (list.size() != d)
        return std::nullopt;
    }
    for (std::size_t in : in_degrees()) {
      if (in != d)
        return std::nullopt;
    }
    return d;
  }

  friend bool operator==(Digraph const &lhs, Digraph const &rhs)
  {
    return lhs._out == rhs._out;
  }

private:
  std::vector<std::vector<Vertex>> _out;
  std::vector<std::string> _labels;
};

/**
 * Cay(G, S): one vertex per element in the given order, x -> y iff
 * y x^-1 ∈ S. The element list must start with the identity and be closed
 * under left multiplication by S.
 */
inline Digraph cayley_digraph(std::span<Permutation const> elements,
                              std::span<Permutation const> connection_set,
                              std::vector<std::string> labels = {})
{
  if (elements.empty() || !elements.front().is_identity())
    throw InvalidConnectionSet("Cayley digraph: element list must start with the identity");
  std::unordered_map<Permutation, Vertex, PermutationHash> index;
  index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<Vertex>(i)).second)
      throw InvalidConnectionSet("Cayley digraph: repeated group element");
  }
  for (auto const &s : connection_set) {
    if (s.is_identity())
      throw InvalidConnectionSet("Cayley digraph: identity in the connection set");
    if (!index.contains(s))
      throw InvalidConnectionSet("Cayley digraph: " + s.to_cycle_string() +
                                 " is not a group element");
  }
  std::vector<std::vector<Vertex>> out(elements.size());
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (auto const &s : connection_set) {
      auto it = index.find(s * elements[x]);
      if (it == index.end())
        throw InvalidConnectionSet("Cayley digraph: element list is not closed under products");
      out[x].push_back(it->second);
    }
    std::sort(out[x].begin(), out[x].end());
    if (std::adjacent_find(out[x].begin(), out[x].end()) != out[x].end())
      throw InvalidConnectionSet("Cayley digraph: repeated connection set element");
  }
  return Digraph(elements.size(), std::move(out), std::move(labels));
}

/**
 * Cos(G, H, D) for D the union of the double cosets H r H. Vertices are the
 * coset labels of `action`; Hx -> Hy iff y x^-1 ∈ D.
 */
inline Digraph coset_digraph(CosetAction const &action, std::span<Permutation const> reps)
{
  std::vector<std::size_t> connection;
  for (auto const &r : reps) {
    if (action.subgroup().contains(r))
      throw InvalidConnectionSet("coset digraph: " + r.to_cycle_string() +
                                 " lies in H, so D would meet H");
    auto labels = double_coset_cosets(action, r);
    connection.insert(connection.end(), labels.begin(), labels.end());
  }
  std::sort(connection.begin(), connection.end());
  connection.erase(std::unique(connection.begin(), connection.end()), connection.end());

  // Out-neighbours of H w_k are the cosets (H r) w_k with H r ⊆ D.
  auto const translations = action.translations();
  std::size_t const n = action.degree();
  std::vector<std::vector<Vertex>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t label : connection)
      out[k].push_back(translations[k][label]);
    std::sort(out[k].begin(), out[k].end());
  }
  return Digraph(n, std::move(out));
}

/// 0/1 matrix with entry (u, v) = 1 iff u -> v.
inline RationalMatrix adjacency_matrix(Digraph const &graph)
{
  RationalMatrix m(graph.order(), graph.order());
  for (std::size_t u = 0; u < graph.order(); ++u) {
    for (Vertex v : graph.out(u))
      m(u, v) = 1;
  }
  return m;
}

/// Vertex (u, v) is numbered u * |V(rhs)| + v.
inline Digraph tensor_product(Digraph const &lhs, Digraph const &rhs)
{
  std::size_t const m = rhs.order();
  std::size_t const n = lhs.order() * m;
  std::vector<std::vector<Vertex>> out(n);
  for (std::size_t u = 0; u < lhs.order(); ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      auto &list = out[u * m + v];
      for (Vertex u2 : lhs.out(u)) {
        for (Vertex v2 : rhs.out(v))
          list.push_back(static_cast<Vertex>(u2 * m + v2));
      }
    }
  }
  return Digraph(n, std::move(out));
}

inline Digraph tensor_power(Digraph const &base, std::size_t n)
{
  if (n == 0)
    throw DomainError("tensor power needs n >= 1");
  Digraph result = base;
  for (std::size_t i = 1; i < n; ++i)
    result = tensor_product(result, base);
  return result;
}

/// Strongly connected components (iterative Tarjan); component ids per vertex.
inline std::vector<std::size_t> strongly_connected_components(Digraph const &graph)
{
  std::size_t const n = graph.order();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), component(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call; // (vertex, next edge)
  std::size_t counter = 0, components = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited)
      continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto &[v, edge] = call.back();
      if (edge == 0 && index[v] == unvisited) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      auto const out = graph.out(v);
      if (edge < out.size()) {
        std::size_t w = out[edge++];
        if (index[w] == unvisited) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = components;
        } while (w != v);
        ++components;
      }
      std::size_t finished = v;
      call.pop_back();
      if (!call.empty())
        low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  return component;
}

inline bool strongly_connected(Digraph const &graph)
{
  if (graph.order() == 0)
    return false;
  auto const component = strongly_connected_components(graph);
  return std::all_of(component.begin(), component.end(),
                     [&](std::size_t c) { return c == component.front(); });
}

/// Number of walks with s steps (an s-arc may revisit vertices).
inline mpz_class count_s_arcs(Digraph const &graph, std::size_t s)
{
  std::vector<mpz_class> walks(graph.order(), 1);
  for (std::size_t step = 0; step < s; ++step) {
    std::vector<mpz_class> next(graph.order(), 0);
    for (std::size_t v = 0; v < graph.order(); ++v) {
      for (Vertex w : graph.out(v))
        next[v] += walks[w];
    }
    walks = std::move(next);
  }
  mpz_class total = 0;
  for (auto const &w : walks)
    total += w;
  return total;
}

/// Throws NotAnAutomorphism naming the first arc whose image is not an arc.
inline void check_automorphism(Digraph const &graph, Permutation const &g)
{
  if (g.degree() != graph.order())
    throw DegreeMismatch("automorphism check: permutation degree " +
                         std::to_string(g.degree()) + " vs " +
                         std::to_string(graph.order()) + " vertices");
  for (std::size_t u = 0; u < graph.order(); ++u) {
    for (Vertex v : graph.out(u)) {
      if (!graph.has_arc(g[u], g[v]))
        throw NotAnAutomorphism("permutation " + g.to_cycle_string() + " maps arc (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") to the non-arc (" + std::to_string(g[u]) + "," +
                                  std::to_string(g[v]) + ")",
                                u, v);
    }
  }
}

struct ArcOrbitWitness {
  std::size_t s = 0;
  std::uint64_t total_arcs = 0;
  std::uint64_t orbit_size = 0;
  bool transitive = false;
};

inline constexpr std::uint64_t kDefaultMaxArcs = 100'000'000;

namespace detail {

struct ArcHash {
  std::size_t operator()(std::vector<Vertex> const &arc) const noexcept
  {
    std::uint64_t h = 1469598103934665603ull;
    for (Vertex v : arc) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using ArcSet = std::unordered_set<std::vector<Vertex>, ArcHash>;

inline std::uint64_t checked_arc_count(Digraph const &graph, std::size_t s,
                                       std::uint64_t max_arcs)
{
  mpz_class total = count_s_arcs(graph, s);
  if (total > mpz_class(std::to_string(max_arcs)))
    throw ResourceBoundExceeded("digraph has " + total.get_str() + " " + std::to_string(s) +
                                "-arcs, above the limit " + std::to_string(max_arcs));
  return std::stoull(total.get_str());
}

inline ArcSet orbit_of_arc(std::vector<Vertex> const &start,
                           std::span<Permutation const> generators)
{
  ArcSet seen{start};
  std::vector<std::vector<Vertex>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::vector<Vertex>> next;
    for (auto const &arc : frontier) {
      for (auto const &g : generators) {
        std::vector<Vertex> image(arc.size());
        for (std::size_t i = 0; i < arc.size(); ++i)
          image[i] = g[arc[i]];
        if (seen.insert(image).second)
          next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

} // namespace detail

/// Lexicographically least s-arc, if any exists.
inline std::optional<std::vector<Vertex>> first_s_arc(Digraph const &graph, std::size_t s)
{
  // extendable[k][v]: some walk of k further steps starts at v
  std::vector<std::vector<bool>> extendable(s + 1, std::vector<bool>(graph.order(), true));
  for (std::size_t k = 1; k <= s; ++k) {
    for (std::size_t v = 0; v < graph.order(); ++v) {
      auto const out = graph.out(v);
      extendable[k][v] = std::any_of(out.begin(), out.end(),
                                     [&](Vertex w) { return extendable[k - 1][w]; });
    }
  }
  std::vector<Vertex> arc;
  for (std::size_t v = 0; v < graph.order(); ++v) {
    if (extendable[s][v]) {
      arc.push_back(static_cast<Vertex>(v));
      break;
    }
  }
  if (arc.empty())
    return std::nullopt;
  for (std::size_t k = s; k > 0; --k) {
    for (Vertex w : graph.out(arc.back())) {
      if (extendable[k - 1][w]) {
        arc.push_back(w);
        break;
      }
    }
  }
  return arc;
}

/**
 * Orbit of the lexicographically first s-arc under the witness generators.
 * A transitive verdict certifies s-arc-transitivity of the digraph; an
 * intransitive one only says the witness group is not transitive.
 */
inline ArcOrbitWitness is_s_arc_transitive_under(Digraph const &graph,
                                                 std::span<Permutation const> witness,
                                                 std::size_t s,
                                                 std::uint64_t max_arcs = kDefaultMaxArcs)
{
  for (auto const &g : witness)
    check_automorphism(graph, g);
  ArcOrbitWitness result;
  result.s = s;
  result.total_arcs = detail::checked_arc_count(graph, s, max_arcs);
  auto start = first_s_arc(graph, s);
  if (!start) {
    result.transitive = true;
    return result;
  }
  result.orbit_size = detail::orbit_of_arc(*start, witness).size();
  result.transitive = result.orbit_size == result.total_arcs;
  return result;
}

/// Sizes of all orbits of the witness group on s-arcs, largest first.
inline std::vector<std::uint64_t> s_arc_orbit_sizes(Digraph const &graph,
                                                    std::span<Permutation const> witness,
                                                    std::size_t s,
                                                    std::uint64_t max_arcs = kDefaultMaxArcs)
{
  for (auto const &g : witness)
    check_automorphism(graph, g);
  detail::checked_arc_count(graph, s, max_arcs);

  detail::ArcSet covered;
  std::vector<std::uint64_t> sizes;
  std::vector<Vertex> arc;
  auto visit = [&](auto &&self, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (!covered.contains(arc)) {
        auto orbit = detail::orbit_of_arc(arc, witness);
        sizes.push_back(orbit.size());
        covered.merge(orbit);
      }
      return;
    }
    for (Vertex w : graph.out(arc.back())) {
      arc.push_back(w);
      self(self, remaining - 1);
      arc.pop_back();
    }
  };
  for (std::size_t v = 0; v < graph.order(); ++v) {
    arc.assign(1, static_cast<Vertex>(v));
    visit(visit, s);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

/**
 * Moves a coset action onto the vertices of a Cayley digraph whose vertex
 * elements form a right transversal: vertex r goes where Hr goes.
 * `vertex_labels[i]` is the coset label of the i-th vertex element.
 */
inline std::vector<Permutation> transport_action(CosetAction const &action,
                                                 std::span<std::size_t const> vertex_labels)
{
  std::vector<Point> vertex_of(action.degree(), 0);
  for (std::size_t i = 0; i < vertex_labels.size(); ++i)
    vertex_of[vertex_labels[i]] = static_cast<Point>(i);
  std::vector<Permutation> result;
  for (auto const &g : action.induced_generators()) {
    std::vector<Point> images(vertex_labels.size());
    for (std::size_t i = 0; i < vertex_labels.size(); ++i)
      images[i] = vertex_of[g[vertex_labels[i]]];
    result.emplace_back(std::move(images));
  }
  return result;
}

struct CosetModelResult {
  bool isomorphic = false;
  std::string reason;
  /// Coset label of each vertex (psi: r -> Hr).
  std::vector<std::size_t> vertex_labels;
};

/**
 * Checks that r -> Hr is an isomorphism from the Cayley digraph on the
 * transversal `vertex_elements` to Cos(G, H, ∪ H rep H), comparing all n²
 * vertex pairs. Two vertices in one coset raise TransversalError.
 */
inline CosetModelResult verify_coset_model(Digraph const &graph,
                                           std::span<Permutation const> vertex_elements,
                                           CosetAction const &action,
                                           std::span<Permutation const> reps)
{
  CosetModelResult result;
  if (graph.order() != vertex_elements.size()) {
    result.reason = "vertex element count differs from the digraph order";
    return result;
  }
  if (graph.order() != action.degree()) {
    result.reason = "digraph has " + std::to_string(graph.order()) + " vertices but there are " +
                    std::to_string(action.degree()) + " cosets";
    return result;
  }
  std::vector<std::size_t> vertex_at(action.degree(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < vertex_elements.size(); ++i) {
    std::size_t label = action.label_of(vertex_elements[i]);
    if (vertex_at[label] != static_cast<std::size_t>(-1))
      throw TransversalError("vertices " + std::to_string(vertex_at[label]) + " and " +
                               std::to_string(i) + " lie in the same coset",
                             vertex_at[label], i);
    vertex_at[label] = i;
    result.vertex_labels.push_back(label);
  }
  Digraph const cosets = coset_digraph(action, reps);
  std::size_t const n = graph.order();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      bool lhs = graph.has_arc(u, v);
      bool rhs = cosets.has_arc(result.vertex_labels[u], result.vertex_labels[v]);
      if (lhs != rhs) {
        result.reason = "arc mismatch at vertex pair (" + std::to_string(u) + "," +
                        std::to_string(v) + ")";
        return result;
      }
    }
  }
  result.isomorphic = true;
  return result;
}

} // namespace symdg

#endif // SYMDG_DIGRAPH_HPP
