#include "formation/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "formation/persistence.hpp"

namespace formation {

namespace {

std::vector<VertexId> ids(std::size_t n, VertexId offset) {
  std::vector<VertexId> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = offset + static_cast<VertexId>(i);
  return v;
}

std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::vector<std::size_t> pickDistinct(std::mt19937_64& rng, std::vector<std::size_t> pool, std::size_t k) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  return pool;
}

// Local edge list on 0-based vertices.
using Local = std::vector<std::pair<std::size_t, std::size_t>>;

bool linked(const Local& edges, std::size_t a, std::size_t b) {
  return std::any_of(edges.begin(), edges.end(), [&](auto e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

Formation build(std::size_t n, const Local& edges, VertexId offset) {
  std::vector<Edge> out;
  for (auto [t, h] : edges) out.push_back({offset + static_cast<VertexId>(t), offset + static_cast<VertexId>(h)});
  return Formation(ids(n, offset), out);
}

Local grow(Dim d, std::size_t n, std::mt19937_64& rng) {
  std::size_t k = toInt(d);
  Local edges;
  std::size_t start = std::min(n, k);
  for (std::size_t v = 1; v < start; ++v)
    for (std::size_t w = 0; w < v; ++w) edges.emplace_back(v, w);
  for (std::size_t v = start; v < n; ++v) {
    std::vector<std::size_t> pool(v);
    for (std::size_t i = 0; i < v; ++i) pool[i] = i;
    if (below(rng, 2) == 0 || v < k + 1) {
      for (std::size_t w : pickDistinct(rng, pool, k)) edges.emplace_back(v, w);
      continue;
    }
    // Edge split: u->w becomes u->v, v->w plus k-1 more out-edges of v.
    std::size_t e = below(rng, edges.size());
    auto [u, w] = edges[e];
    edges[e] = {u, v};
    edges.emplace_back(v, w);
    pool.erase(std::remove_if(pool.begin(), pool.end(), [&](std::size_t x) { return x == u || x == w; }), pool.end());
    for (std::size_t x : pickDistinct(rng, pool, k - 1)) edges.emplace_back(v, x);
  }
  return edges;
}

}  // namespace

Formation tetrahedron(VertexId first) {
  return build(4, {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}, first);
}

Formation doubleBanana() {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  auto clique = [&](std::vector<VertexId> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(vs[i], vs[j]);
  };
  clique({1, 3, 4, 5});
  clique({2, 6, 7, 8});
  for (VertexId v : {3, 4, 5}) pairs.emplace_back(2, v);
  for (VertexId v : {6, 7, 8}) pairs.emplace_back(1, v);
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({std::max(a, b), std::min(a, b)});
  return Formation(ids(8, 1), edges);
}

Formation minPersistent(Dim d, std::size_t n, std::uint64_t seed, VertexId offset) {
  if (n < 1 || n > 500) throw InputError("n must be in [1, 500]");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Formation f = build(n, grow(d, n, rng), offset);
    if (isPersistent(f, d).minimallyPersistent) return f;
  }
  throw PreconditionError("could not grow a minimally persistent formation");
}

Formation minRigid2D(std::size_t n, std::uint64_t seed, VertexId offset) {
  Formation f = minPersistent(Dim::Two, n, seed, offset);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Edge> edges = f.edges();
  for (Edge& e : edges)
    if (below(rng, 2)) std::swap(e.tail, e.head);
  return f.withEdges(edges);
}

namespace {

struct Base {
  std::size_t n;
  Local pairs;
  std::vector<int> out;
};

Local complete(std::size_t n) {
  Local p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return p;
}

Local withoutPair(Local p, std::size_t a, std::size_t b) {
  p.erase(std::remove(p.begin(), p.end(), std::make_pair(a, b)), p.end());
  return p;
}

std::vector<Base> bases(Dim d) {
  if (d == Dim::Two) return {{2, complete(2), {0, 1}}, {3, complete(3), {1, 1, 1}}};
  Local octa = complete(6);
  for (std::size_t i = 0; i < 6; i += 2) octa = withoutPair(octa, i, i + 1);
  return {
      {3, complete(3), {0, 1, 2}},
      {3, complete(3), {1, 1, 1}},
      {4, complete(4), {0, 2, 2, 2}},
      {4, complete(4), {1, 1, 2, 2}},
      {5, withoutPair(complete(5), 0, 1), {1, 2, 2, 2, 2}},
      {6, octa, {2, 2, 2, 2, 2, 2}},
      {5, withoutPair(complete(5), 0, 1), {0, 0, 3, 3, 3}},
  };
}

// Orients undirected pairs so vertex i gets out-degree out[i].
bool orient(const Local& pairs, std::vector<int> out, std::size_t i, Local& chosen) {
  if (i == pairs.size()) return std::all_of(out.begin(), out.end(), [](int x) { return x == 0; });
  auto [a, b] = pairs[i];
  for (auto [t, h] : {std::make_pair(a, b), std::make_pair(b, a)}) {
    if (out[t] == 0) continue;
    --out[t];
    chosen.emplace_back(t, h);
    if (orient(pairs, out, i + 1, chosen)) return true;
    chosen.pop_back();
    ++out[t];
  }
  return false;
}

}  // namespace

Formation allocationFormation(Dim d, std::vector<int> alloc, std::size_t extra, std::uint64_t seed,
                              VertexId offset) {
  int k = toInt(d);
  std::sort(alloc.rbegin(), alloc.rend());
  int total = 0;
  for (int x : alloc) {
    if (x < 1 || x > k) throw InputError("allocation entries must lie in [1, dim]");
    total += x;
  }
  if (total > (k == 2 ? 3 : 6)) throw PreconditionError("allocation exceeds the persistent DOF bound");
  std::mt19937_64 rng(seed);
  for (const Base& base : bases(d)) {
    std::vector<std::size_t> byDof(base.n);
    for (std::size_t i = 0; i < base.n; ++i) byDof[i] = i;
    std::stable_sort(byDof.begin(), byDof.end(), [&](auto x, auto y) { return base.out[x] < base.out[y]; });
    if (alloc.size() > base.n) continue;
    bool fits = true;
    for (std::size_t i = 0; i < alloc.size(); ++i) fits &= alloc[i] <= k - base.out[byDof[i]];
    if (!fits) continue;
    Local oriented;
    if (!orient(base.pairs, base.out, 0, oriented)) continue;
    for (int attempt = 0; attempt < 200; ++attempt) {
      Local edges = oriented;
      std::size_t n = base.n + extra;
      for (std::size_t v = base.n; v < n; ++v) {
        std::vector<std::size_t> pool(v);
        for (std::size_t i = 0; i < v; ++i) pool[i] = i;
        if (pool.size() < static_cast<std::size_t>(k)) break;
        for (std::size_t w : pickDistinct(rng, pool, k)) edges.emplace_back(v, w);
      }
      bool ok = true;
      for (std::size_t i = 0; i < base.n && ok; ++i) {
        std::size_t v = byDof[i];
        int want = i < alloc.size() ? alloc[i] : 0;
        int spare = k - base.out[v] - want;
        std::vector<std::size_t> pool;
        for (std::size_t w = 0; w < n; ++w)
          if (w != v && !linked(edges, v, w)) pool.push_back(w);
        if (pool.size() < static_cast<std::size_t>(spare)) {
          ok = false;
          break;
        }
        for (std::size_t w : pickDistinct(rng, pool, spare)) edges.emplace_back(v, w);
      }
      if (!ok) continue;
      Formation f = build(n, edges, offset);
      if (isPersistent(f, d).persistent) return f;
    }
  }
  throw PreconditionError("no persistent formation found for the requested allocation");
}

Formation generate(const std::string& kind, std::size_t n, std::uint64_t seed, VertexId offset) {
  if (kind == "tetra") return tetrahedron(offset);
  if (kind == "banana") return doubleBanana();
  if (kind == "min-rigid-2d") return minRigid2D(n, seed, offset);
  if (kind == "min-persistent-2d") return minPersistent(Dim::Two, n, seed, offset);
  if (kind == "min-persistent-3d") return minPersistent(Dim::Three, n, seed, offset);
  throw InputError("unknown generator kind: " + kind);
}

}  // namespace formation
