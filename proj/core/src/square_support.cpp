#include "nga/square_support.hpp"

#include <algorithm>

#include "nga/short_functional.hpp"

namespace nga {

namespace {

std::vector<bool> support_mask(const Graph& g, const std::vector<int>& support) {
  std::vector<bool> in_s(g.size(), false);
  for (int e : support) {
    if (e < 0 || e >= g.size()) throw InputError("support contains an invalid edge index");
    in_s[e] = true;
  }
  return in_s;
}

/// Rows of the lambda matrix restricted to the edges off S, as int64 data.
std::vector<std::int64_t> off_support_rows(const Graph& g, const std::vector<bool>& in_s,
                                           std::size_t* num_rows) {
  const std::size_t p = static_cast<std::size_t>(g.order());
  std::vector<std::int64_t> data;
  std::size_t rows = 0;
  for (int e = 0; e < g.size(); ++e) {
    if (in_s[e]) continue;
    const auto [x, y] = g.edge(e);
    std::vector<std::int64_t> row(p, 0);
    row[x] = row[y] = 1;
    data.insert(data.end(), row.begin(), row.end());
    ++rows;
  }
  *num_rows = rows;
  return data;
}

}  // namespace

bool square_support_exists(const Graph& g, const std::vector<int>& support) {
  const auto in_s = support_mask(g, support);
  const std::size_t p = static_cast<std::size_t>(g.order());
  std::size_t rows = 0;
  std::vector<std::int64_t> base = off_support_rows(g, in_s, &rows);
  const auto base_rank = detail::bareiss_rank_int64(base, rows, p);
  if (!base_rank) throw InvariantViolation("integer rank overflow on a 0/1 matrix");
  if (*base_rank == p) return false;  // kernel is zero
  // lambda_e must not vanish identically on the kernel: appending the e-row
  // has to raise the rank
  for (int e = 0; e < g.size(); ++e) {
    if (!in_s[e]) continue;
    std::vector<std::int64_t> extended = base;
    extended.resize(base.size() + p, 0);
    const auto [x, y] = g.edge(e);
    extended[base.size() + x] = extended[base.size() + y] = 1;
    const auto r = detail::bareiss_rank_int64(std::move(extended), rows + 1, p);
    if (!r) throw InvariantViolation("integer rank overflow on a 0/1 matrix");
    if (*r == *base_rank) return false;
  }
  return true;
}

SquareSupportResult square_support_solutions(const Graph& g, const std::vector<int>& support) {
  const auto in_s = support_mask(g, support);
  const std::size_t p = static_cast<std::size_t>(g.order());

  std::size_t off_rows = 0;
  for (int e = 0; e < g.size(); ++e) off_rows += in_s[e] ? 0 : 1;
  RatMatrix m(off_rows, p);
  for (int e = 0, r = 0; e < g.size(); ++e) {
    if (in_s[e]) continue;
    const auto [x, y] = g.edge(e);
    m.at(r, x) = 1;
    m.at(r, y) = 1;
    ++r;
  }
  auto basis = kernel_basis(m);

  SquareSupportResult out;
  out.kernel_dim = basis.size();
  if (basis.empty()) return out;

  // any edge functional vanishing on the whole kernel rules out solutions
  for (int e = 0; e < g.size(); ++e) {
    if (!in_s[e]) continue;
    const bool vanishes = std::all_of(basis.begin(), basis.end(), [&](const auto& v) {
      return edge_functional_value(g, e, v) == 0;
    });
    if (vanishes) return out;
  }

  const auto qualifies = [&](const std::vector<Rational>& v) {
    return std::all_of(support.begin(), support.end(),
                       [&](int e) { return edge_functional_value(g, e, v) != 0; });
  };

  if (support.empty()) {
    // every kernel member has empty square support; report the basis spans
    out.spans = std::move(basis);
    out.exhaustive = out.kernel_dim <= 1;
    return out;
  }
  if (out.kernel_dim == 1) {
    // no functional vanishes on the one-dimensional kernel, so its generator
    // is the unique solution span
    out.spans.push_back(std::move(basis[0]));
    return out;
  }

  // kernel of dimension >= 2 with no identically-vanishing functional:
  // infinitely many solution spans exist; emit deterministic representatives
  out.exhaustive = false;
  for (const auto& v : basis)
    if (qualifies(v)) out.spans.push_back(v);
  if (out.spans.empty()) {
    for (long long t = 1;; ++t) {
      std::vector<Rational> combo(p, Rational(0));
      Rational power(1);
      for (const auto& v : basis) {
        for (std::size_t i = 0; i < p; ++i) combo[i] += power * v[i];
        power *= t;
      }
      if (qualifies(combo)) {
        for (const Rational& x : combo)
          if (x != 0) {
            const Rational inv = 1 / x;
            for (Rational& y : combo) y *= inv;
            break;
          }
        out.spans.push_back(std::move(combo));
        break;
      }
    }
  }
  return out;
}

namespace {

std::optional<SquareWitness> witness_for(const Graph& g, Edge e) {
  const int idx = g.edge_index(e.a, e.b);
  const Graph ge = g.with_edge_removed(e);
  const BipartiteStructure bs = bipartite_structure(ge);

  if (bs.components == 1 && bs.parts[0]) {
    // e closes an odd cycle iff both endpoints land in the same part
    const auto [part0, part1] = *bs.parts[0];
    const std::uint64_t bit_a = std::uint64_t{1} << e.a;
    const std::uint64_t bit_b = std::uint64_t{1} << e.b;
    const bool same_part = ((part0 & bit_a) && (part0 & bit_b)) ||
                           ((part1 & bit_a) && (part1 & bit_b));
    if (!same_part) return std::nullopt;
    const std::uint64_t with_ab = (part0 & bit_a) ? part0 : part1;
    SquareWitness w;
    w.u.assign(g.order(), Rational(0));
    for (int v = 0; v < g.order(); ++v)
      w.u[v] = ((with_ab >> v) & 1) ? Rational(1, 2) : Rational(-1, 2);
    w.target_support = {idx};
    return w;
  }
  if (bs.components == 2) {
    // bridge: assign +-1 on a bipartite side, 0 on the other
    for (const int anchor : {e.a, e.b}) {
      const int comp = bs.component_of[anchor];
      if (!bs.parts[comp]) continue;
      const auto [part0, part1] = *bs.parts[comp];
      const std::uint64_t with_anchor = ((part0 >> anchor) & 1) ? part0 : part1;
      const std::uint64_t other = ((part0 >> anchor) & 1) ? part1 : part0;
      SquareWitness w;
      w.u.assign(g.order(), Rational(0));
      for (int v = 0; v < g.order(); ++v) {
        if ((with_anchor >> v) & 1)
          w.u[v] = 1;
        else if ((other >> v) & 1)
          w.u[v] = -1;
      }
      w.target_support = {idx};
      return w;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SquareWitness> edge_square_witness(const Graph& g, Edge e) {
  if (!is_connected(g)) throw InputError("edge_square_witness: graph must be connected");
  const int idx = g.edge_index(e.a, e.b);
  if (idx < 0) throw InputError("edge_square_witness: edge not in graph");

  auto witness = witness_for(g, e);
  if (witness) {
    // the proof's coefficient assignment must square exactly to the edge
    for (int f = 0; f < g.size(); ++f) {
      const Rational lf = edge_functional_value(g, f, witness->u);
      if (lf * lf != Rational(f == idx ? 1 : 0))
        throw InvariantViolation("edge-square witness fails to square to the edge");
    }
    return witness;
  }
  // certify the absence through the generic search
  if (square_support_exists(g, {idx}))
    throw InvariantViolation("square-support search contradicts the edge-square criterion");
  return std::nullopt;
}

}  // namespace nga
