#include "nga/census.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "nga/canonical.hpp"

namespace nga {

namespace {

std::uint64_t cert64(const Graph& g) {
  const auto [lo, hi] = canonical_certificate(g);
  (void)hi;  // p <= 11 here, so everything fits in the low word
  return lo;
}

/// One augmentation level: every class on p vertices arises by attaching a new
/// vertex to some class on p-1 vertices (for the connected census the parent
/// may be taken connected and the attachment nonempty, since every connected
/// graph has a vertex whose removal keeps it connected).
std::vector<std::uint64_t> augment(const std::vector<std::uint64_t>& parents, int p, bool connected) {
  const std::uint32_t mask_lo = (p > 1 && connected) ? 1 : 0;
  const std::uint32_t mask_hi = std::uint32_t{1} << (p - 1);

  const unsigned num_threads =
      std::clamp(std::thread::hardware_concurrency(), 1u, 4u);
  std::vector<std::unordered_set<std::uint64_t>> shards(num_threads);

  const auto work = [&](unsigned shard) {
    auto& seen = shards[shard];
    for (std::size_t pi = shard; pi < parents.size(); pi += num_threads) {
      const Graph parent = graph_from_certificate(p - 1, {parents[pi], 0});
      for (std::uint32_t mask = mask_lo; mask < mask_hi; ++mask) {
        std::vector<Edge> edges = parent.edges();
        std::uint32_t m = mask;
        while (m) {
          const int u = __builtin_ctz(m);
          m &= m - 1;
          edges.push_back(Edge{u, p - 1});
        }
        seen.insert(cert64(Graph(p, std::move(edges))));
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < num_threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& t : pool) t.join();

  auto& all = shards[0];
  for (unsigned t = 1; t < num_threads; ++t) all.insert(shards[t].begin(), shards[t].end());
  std::vector<std::uint64_t> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> augmented_census(int p, bool connected) {
  std::vector<std::uint64_t> level{0};  // the one-vertex graph
  for (int k = 2; k <= p; ++k) level = augment(level, k, connected);
  return level;
}

/// Labeled backtracking generator for r-regular graphs: vertex v >= 1 picks
/// its neighbours among 0..v-1. Up to relabeling every class has a labeling
/// with N(0) = {1..r} (BFS order), and for connected graphs one where every
/// vertex has a smaller neighbour, so those constraints are imposed and the
/// survivors deduplicated by canonical certificate.
class RegularGenerator {
 public:
  RegularGenerator(int p, int r, bool connected) : p_(p), r_(r), connected_(connected) {}

  std::vector<std::uint64_t> run() {
    if (r_ == 0) {
      if (!connected_ || p_ == 1) seen_.insert(cert64(Graph(p_, {})));
    } else if (r_ < p_ && (p_ * r_) % 2 == 0) {
      deg_.assign(p_, 0);
      rows_.assign(p_, 0);
      place(1);
    }
    std::vector<std::uint64_t> out(seen_.begin(), seen_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool feasible(int v) const {
    // every still-deficient vertex <= v needs one future neighbour per unit
    const int future = p_ - 1 - v;
    int total_need = 0;
    for (int u = 0; u <= v; ++u) {
      const int need = r_ - deg_[u];
      if (need < 0 || need > future) return false;
      total_need += need;
    }
    return total_need <= future * r_;
  }

  void place(int v) {
    if (v == p_) {
      for (int u = 0; u < p_; ++u)
        if (deg_[u] != r_) return;
      std::vector<Edge> edges;
      for (int w = 1; w < p_; ++w) {
        std::uint32_t m = rows_[w];
        while (m) {
          const int u = __builtin_ctz(m);
          m &= m - 1;
          edges.push_back(Edge{u, w});
        }
      }
      seen_.insert(cert64(Graph(p_, std::move(edges))));
      return;
    }
    // N(0) = {1..r}: bit 0 forced for v <= r, forbidden after
    const std::uint32_t below = (std::uint32_t{1} << v) - 1;
    const std::uint32_t forced = (v <= r_) ? 1u : 0u;
    std::uint32_t allowed = below & ~forced;
    if (v > r_) allowed &= ~1u;
    for (int u = 0; u < v; ++u)
      if (deg_[u] >= r_) allowed &= ~(std::uint32_t{1} << u);
    if (forced && deg_[0] >= r_) return;

    std::vector<std::uint32_t> choices;
    subsets_up_to(allowed, r_ - static_cast<int>(__builtin_popcount(forced)), choices);
    for (std::uint32_t extra : choices) {
      const std::uint32_t row = extra | forced;
      if (connected_ && row == 0) continue;
      rows_[v] = row;
      std::uint32_t m = row;
      while (m) {
        ++deg_[__builtin_ctz(m)];
        m &= m - 1;
      }
      deg_[v] = __builtin_popcount(row);
      if (deg_[v] <= r_ && feasible(v)) place(v + 1);
      m = row;
      while (m) {
        --deg_[__builtin_ctz(m)];
        m &= m - 1;
      }
      deg_[v] = 0;
    }
  }

  static void subsets_up_to(std::uint32_t pool, int max_bits, std::vector<std::uint32_t>& out) {
    out.clear();
    // iterate all submasks of pool with popcount <= max_bits, ascending
    for (std::uint32_t s = 0;; s = (s - pool) & pool) {
      if (__builtin_popcount(s) <= max_bits) out.push_back(s);
      if (s == pool) break;
    }
    std::sort(out.begin(), out.end());
  }

  int p_, r_;
  bool connected_;
  std::vector<int> deg_;
  std::vector<std::uint32_t> rows_;
  std::unordered_set<std::uint64_t> seen_;
};

struct CacheKey {
  int p;
  bool connected;
  int regular;  // -1 = unrestricted
  auto operator<=>(const CacheKey&) const = default;
};

std::map<CacheKey, std::vector<std::uint64_t>> g_cache;
std::mutex g_cache_mutex;

}  // namespace

std::vector<Graph> census(int p, const CensusOptions& options) {
  if (p < 1) throw InputError("census: order must be positive");
  if (options.regular_degree) {
    if (*options.regular_degree < 0) throw InputError("census: negative degree");
    if (p > 10) throw InputError("census: regular censuses support p <= 10");
  } else if (options.connected) {
    if (p > 9) throw InputError("census: connected censuses support p <= 9");
  } else if (p > 8) {
    throw InputError("census: unrestricted censuses support p <= 8");
  }

  const CacheKey key{p, options.connected, options.regular_degree.value_or(-1)};
  std::vector<std::uint64_t> certs;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    const auto it = g_cache.find(key);
    if (it != g_cache.end()) certs = it->second;
  }
  if (certs.empty()) {
    certs = options.regular_degree
                ? RegularGenerator(p, *options.regular_degree, options.connected).run()
                : augmented_census(p, options.connected);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.emplace(key, certs);
  }

  std::vector<Graph> out;
  out.reserve(certs.size());
  for (std::uint64_t c : certs) out.push_back(graph_from_certificate(p, {c, 0}));
  return out;
}

}  // namespace nga
