#include "nga/canonical.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace nga {

Permutation permutation_inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) inv[p[v]] = static_cast<int>(v);
  return inv;
}

Permutation permutation_compose(const Permutation& f, const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out[v] = f[g[v]];
  return out;
}

namespace {

using Cert = std::array<std::uint16_t, 16>;

struct Coloring {
  std::array<std::int8_t, 16> color{};
  int num_colors = 1;
};

/// Union-find over <= 16 vertices, used for sibling-orbit pruning.
struct Orbits {
  std::array<std::int8_t, 16> parent{};
  void reset(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::int8_t>(i);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = static_cast<std::int8_t>(a);
  }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : p_(g.order()) {
    for (int v = 0; v < p_; ++v) adj_[v] = static_cast<std::uint16_t>(g.neighbor_mask(v));
  }

  CanonicalResult run(const Graph& g) {
    CanonicalResult out{Graph(), {}, {}};
    if (p_ == 0) {
      out.canonical = g;
      return out;
    }
    Coloring c;
    refine(c);
    search(c);

    Permutation best(best_perm_.begin(), best_perm_.begin() + p_);
    out.to_canonical = best;
    out.canonical = g.relabeled(best);
    out.automorphism_generators = std::move(gens_);
    return out;
  }

 private:
  // Equitable refinement (1-WL): split cells by neighbour counts against every
  // cell until stable. The new colour order is derived from sorted signatures,
  // so it does not depend on vertex labels.
  void refine(Coloring& c) const {
    while (true) {
      std::array<std::uint16_t, 16> cell{};
      for (int v = 0; v < p_; ++v) cell[c.color[v]] |= static_cast<std::uint16_t>(1u << v);

      std::array<std::array<std::int8_t, 17>, 16> sig{};
      std::array<int, 16> order{};
      for (int v = 0; v < p_; ++v) {
        order[v] = v;
        sig[v][0] = c.color[v];
        for (int cc = 0; cc < c.num_colors; ++cc)
          sig[v][cc + 1] = static_cast<std::int8_t>(__builtin_popcount(adj_[v] & cell[cc]));
      }
      std::sort(order.begin(), order.begin() + p_,
                [&](int a, int b) { return sig[a] < sig[b]; });

      Coloring next;
      int colors = 0;
      next.color[order[0]] = 0;
      for (int i = 1; i < p_; ++i) {
        if (sig[order[i]] != sig[order[i - 1]]) ++colors;
        next.color[order[i]] = static_cast<std::int8_t>(colors);
      }
      next.num_colors = colors + 1;
      if (next.num_colors == c.num_colors) return;  // same cell count => identical partition
      c = next;
    }
  }

  Coloring individualized(const Coloring& c, int v) const {
    // split v out of its cell, placing it first, then re-refine
    std::array<int, 16> order{};
    for (int u = 0; u < p_; ++u) order[u] = u;
    const auto key = [&](int u) { return 2 * c.color[u] + (u == v ? 0 : 1); };
    std::sort(order.begin(), order.begin() + p_, [&](int a, int b) { return key(a) < key(b); });
    Coloring next;
    int colors = 0;
    next.color[order[0]] = 0;
    for (int i = 1; i < p_; ++i) {
      if (key(order[i]) != key(order[i - 1])) ++colors;
      next.color[order[i]] = static_cast<std::int8_t>(colors);
    }
    next.num_colors = colors + 1;
    refine(next);
    return next;
  }

  Cert certificate(const std::array<std::int8_t, 16>& perm) const {
    Cert cert{};
    for (int v = 0; v < p_; ++v) {
      std::uint16_t row = 0;
      std::uint16_t nb = adj_[v];
      while (nb) {
        const int u = __builtin_ctz(nb);
        nb &= static_cast<std::uint16_t>(nb - 1);
        row |= static_cast<std::uint16_t>(1u << perm[u]);
      }
      cert[perm[v]] = row;
    }
    return cert;
  }

  void leaf(const Coloring& c) {
    std::array<std::int8_t, 16> perm{};
    for (int v = 0; v < p_; ++v) perm[v] = c.color[v];
    const Cert cert = certificate(perm);

    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = cert;
      first_perm_ = best_perm_ = perm;
      return;
    }
    if (cert == first_cert_ || cert == best_cert_) {
      const auto& ref = (cert == first_cert_) ? first_perm_ : best_perm_;
      Permutation g(p_);
      std::array<std::int8_t, 16> ref_inv{};
      for (int v = 0; v < p_; ++v) ref_inv[ref[v]] = static_cast<std::int8_t>(v);
      bool identity = true;
      for (int v = 0; v < p_; ++v) {
        g[v] = ref_inv[perm[v]];
        identity = identity && g[v] == v;
      }
      if (!identity) gens_.push_back(std::move(g));
    }
    if (best_cert_ < cert) {
      best_cert_ = cert;
      best_perm_ = perm;
    }
  }

  void search(const Coloring& c) {
    if (c.num_colors == p_) {
      leaf(c);
      return;
    }
    // target cell: smallest non-singleton, ties by colour index
    std::array<std::int8_t, 16> count{};
    for (int v = 0; v < p_; ++v) ++count[c.color[v]];
    int target = -1;
    for (int cc = 0; cc < c.num_colors; ++cc)
      if (count[cc] > 1 && (target < 0 || count[cc] < count[target])) target = cc;

    int candidates[16];
    int num_candidates = 0;
    for (int v = 0; v < p_; ++v)
      if (c.color[v] == target) candidates[num_candidates++] = v;

    int tried[16];
    int num_tried = 0;
    Orbits orbits;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    for (int i = 0; i < num_candidates; ++i) {
      const int v = candidates[i];
      if (gens_seen != gens_.size()) {
        // rebuild sibling orbits from automorphisms fixing the current path
        gens_seen = gens_.size();
        orbits.reset(p_);
        for (const Permutation& g : gens_) {
          bool fixes = true;
          for (std::size_t d = 0; fixes && d < path_.size(); ++d) fixes = g[path_[d]] == path_[d];
          if (fixes)
            for (int u = 0; u < p_; ++u) orbits.unite(u, g[u]);
        }
      }
      bool skip = false;
      for (int t = 0; !skip && t < num_tried; ++t) skip = orbits.find(tried[t]) == orbits.find(v);
      if (skip) continue;
      tried[num_tried++] = v;

      path_.push_back(v);
      search(individualized(c, v));
      path_.pop_back();
    }
  }

  int p_;
  std::array<std::uint16_t, 16> adj_{};
  std::vector<int> path_;
  std::vector<Permutation> gens_;
  bool have_first_ = false;
  Cert first_cert_{}, best_cert_{};
  std::array<std::int8_t, 16> first_perm_{}, best_perm_{};
};

}  // namespace

CanonicalResult canonicalize(const Graph& g) {
  if (g.order() > kCanonicalMaxVertices)
    throw InputError("exceeds canonicalization bound (order " + std::to_string(g.order()) + " > 16)");
  return CanonSearch(g).run(g);
}

Graph canonical_form(const Graph& g) { return canonicalize(g).canonical; }

std::vector<Permutation> automorphism_generators(const Graph& g) {
  auto gens = canonicalize(g).automorphism_generators;
  if (gens.empty() && g.order() > 0) {
    Permutation id(g.order());
    for (int v = 0; v < g.order(); ++v) id[v] = v;
    gens.push_back(std::move(id));
  }
  return gens;
}

unsigned long long automorphism_group_order(const Graph& g) {
  return permutation_group_order(canonicalize(g).automorphism_generators, g.order());
}

unsigned long long permutation_group_order(const std::vector<Permutation>& generators, int n) {
  if (n == 0) return 1;
  if (n > 16) throw InputError("group closure supported for degree <= 16 only");
  const auto encode = [n](const Permutation& p) {
    std::uint64_t code = 0;
    for (int v = 0; v < n; ++v) code |= static_cast<std::uint64_t>(p[v]) << (4 * v);
    return code;
  };
  Permutation id(n);
  for (int v = 0; v < n; ++v) id[v] = v;

  std::unordered_set<std::uint64_t> seen{encode(id)};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier)
      for (const Permutation& g : generators) {
        Permutation q = permutation_compose(g, p);
        if (seen.insert(encode(q)).second) next.push_back(std::move(q));
      }
    if (seen.size() > 20'000'000) throw InputError("group closure too large");
    frontier = std::move(next);
  }
  return seen.size();
}

std::pair<std::uint64_t, std::uint64_t> canonical_certificate(const Graph& g) {
  const Graph canon = canonical_form(g);
  std::uint64_t lo = 0, hi = 0;
  int bit = 0;
  for (int i = 0; i < canon.order(); ++i)
    for (int j = i + 1; j < canon.order(); ++j, ++bit)
      if (canon.adjacent(i, j)) (bit < 64 ? lo : hi) |= std::uint64_t{1} << (bit & 63);
  return {lo, hi};
}

Graph graph_from_certificate(int p, std::pair<std::uint64_t, std::uint64_t> cert) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j, ++bit)
      if (((bit < 64 ? cert.first : cert.second) >> (bit & 63)) & 1) edges.push_back(Edge{i, j});
  return Graph(p, std::move(edges));
}

}  // namespace nga
