#include "cospectra/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cospectra {

namespace {

struct Refinement {
  std::vector<std::size_t> colors;
  // Isomorphism-invariant record of every refinement round; two colourings
  // that can be mapped onto each other by an automorphism have equal traces.
  std::vector<std::size_t> trace;
  std::size_t num_colors = 0;
};

constexpr std::size_t kTraceSeparator = static_cast<std::size_t>(-1);

Refinement refine(const Graph& g, std::vector<std::size_t> colors) {
  const std::size_t n = g.order();
  Refinement out;
  std::size_t previous = 0;
  {
    auto sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    previous = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  std::vector<std::vector<std::size_t>> signature(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(colors[v]);
      for (Vertex w : g.neighbors(v)) sig.push_back(colors[w]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });
    std::vector<std::size_t> next(n);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool fresh = i == 0 || signature[order[i]] != signature[order[i - 1]];
      if (fresh && i != 0) ++rank;
      next[order[i]] = rank;
      if (fresh) {
        out.trace.insert(out.trace.end(), signature[order[i]].begin(), signature[order[i]].end());
        out.trace.push_back(kTraceSeparator);
      }
    }
    const std::size_t count = n == 0 ? 0 : rank + 1;
    out.trace.push_back(count);
    colors = std::move(next);
    if (count == previous) break;
    previous = count;
  }
  out.colors = std::move(colors);
  out.num_colors = previous;
  return out;
}

std::vector<std::size_t> individualize(std::vector<std::size_t> colors, Vertex v) {
  const std::size_t fresh = *std::max_element(colors.begin(), colors.end()) + 1;
  colors[v] = fresh;
  return colors;
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g) {}

  std::optional<Permutation> run(std::vector<std::size_t> left, std::vector<std::size_t> right) const {
    const Refinement l = refine(g_, std::move(left));
    const Refinement r = refine(g_, std::move(right));
    if (l.trace != r.trace) return std::nullopt;

    const std::size_t n = g_.order();
    if (l.num_colors == n) {
      std::vector<Vertex> by_color(n);
      for (Vertex v = 0; v < n; ++v) by_color[r.colors[v]] = v;
      Permutation perm(n);
      for (Vertex v = 0; v < n; ++v) perm[v] = by_color[l.colors[v]];
      if (is_automorphism(g_, perm)) return perm;
      return std::nullopt;
    }

    // First largest non-singleton cell; individualize its smallest vertex.
    std::vector<std::size_t> cell_size(l.num_colors, 0);
    for (Vertex v = 0; v < n; ++v) ++cell_size[l.colors[v]];
    std::size_t target = 0;
    for (std::size_t c = 0; c < cell_size.size(); ++c) {
      if (cell_size[c] > cell_size[target]) target = c;
    }
    Vertex x = 0;
    while (l.colors[x] != target) ++x;

    for (Vertex y = 0; y < n; ++y) {
      if (r.colors[y] != target) continue;
      if (auto perm = run(individualize(l.colors, x), individualize(r.colors, y))) return perm;
    }
    return std::nullopt;
  }

 private:
  const Graph& g_;
};

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void check_size(const Graph& g, const OrbitOptions& options) {
  if (g.order() > options.max_vertices) {
    throw SearchLimitError("automorphism search limit: graph has " + std::to_string(g.order()) +
                           " vertices, cap is " + std::to_string(options.max_vertices));
  }
}

OrbitPartition compute_orbits(const Graph& g, std::optional<Vertex> fixed, const OrbitOptions& options) {
  check_size(g, options);
  const std::size_t n = g.order();
  if (fixed && *fixed >= n) {
    throw std::out_of_range("automorphism_orbits: fixed vertex " + std::to_string(*fixed) + " out of range");
  }
  std::vector<Vertex> fixed_list;
  if (fixed) fixed_list.push_back(*fixed);

  std::vector<std::size_t> start(n, 0);
  if (fixed) start = individualize(start, *fixed);
  const Refinement base = n == 0 ? Refinement{} : refine(g, start);

  DisjointSets sets(n);
  for (Vertex w = 1; w < n; ++w) {
    std::vector<std::size_t> roots;
    for (Vertex v = 0; v < w; ++v) {
      if (base.colors[v] == base.colors[w]) roots.push_back(sets.find(v));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (std::find(roots.begin(), roots.end(), sets.find(w)) != roots.end()) continue;
    for (std::size_t root : roots) {
      if (auto perm = find_automorphism(g, fixed_list, root, w, options)) {
        for (Vertex v = 0; v < n; ++v) sets.unite(v, (*perm)[v]);
        break;
      }
    }
  }

  OrbitPartition p;
  p.fixed = fixed;
  p.orbit_of.assign(n, 0);
  std::vector<std::optional<std::size_t>> index_of_root(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto root = sets.find(v);
    if (!index_of_root[root]) {
      index_of_root[root] = p.orbits.size();
      p.orbits.emplace_back();
    }
    p.orbit_of[v] = *index_of_root[root];
    p.orbits[*index_of_root[root]].push_back(v);
  }
  return p;
}

}  // namespace

std::vector<std::size_t> refine_colors(const Graph& g, std::vector<std::size_t> colors) {
  if (colors.size() != g.order()) throw std::invalid_argument("refine_colors: size mismatch");
  if (g.order() == 0) return colors;
  return refine(g, std::move(colors)).colors;
}

OrbitPartition automorphism_orbits(const Graph& g, Vertex fixed, const OrbitOptions& options) {
  return compute_orbits(g, fixed, options);
}

OrbitPartition automorphism_orbits(const Graph& g, const OrbitOptions& options) {
  return compute_orbits(g, std::nullopt, options);
}

bool same_orbit(const OrbitPartition& p, Vertex u, Vertex v) {
  if (u >= p.orbit_of.size() || v >= p.orbit_of.size()) {
    throw std::out_of_range("same_orbit: vertex out of range");
  }
  return p.orbit_of[u] == p.orbit_of[v];
}

std::optional<Permutation> find_automorphism(const Graph& g, std::span<const Vertex> fixed, Vertex from,
                                             Vertex to, const OrbitOptions& options) {
  check_size(g, options);
  const std::size_t n = g.order();
  if (from >= n || to >= n) throw std::out_of_range("find_automorphism: vertex out of range");
  std::vector<std::size_t> left(n, 0);
  std::vector<std::size_t> right(n, 0);
  for (Vertex f : fixed) {
    if (f >= n) throw std::out_of_range("find_automorphism: fixed vertex out of range");
    left = individualize(left, f);
    right = individualize(right, f);
  }
  left = individualize(left, from);
  right = individualize(right, to);
  return AutomorphismSearch(g).run(std::move(left), std::move(right));
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : perm) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(perm[u], perm[v])) return false;
  }
  return true;
}

}  // namespace cospectra
