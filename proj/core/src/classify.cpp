#include "nga/classify.hpp"

#include <algorithm>

#include "nga/short_functional.hpp"
#include "nga/square_support.hpp"

namespace nga {

std::string to_string(ClassificationTag tag) {
  switch (tag) {
    case ClassificationTag::TreeF0Op: return "Tree_F0_Op";
    case ClassificationTag::OddUnicyclicOp: return "OddUnicyclic_Op";
    case ClassificationTag::EvenCycleF0Tp: return "EvenCycle_F0_Tp";
    case ClassificationTag::DoublyOddPaddleTp: return "DoublyOddPaddle_Tp";
    case ClassificationTag::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

namespace {

std::vector<Rational> annihilator_vector(const Graph& g) {
  const auto basis = annihilator_basis(g);
  if (basis.size() != 1)
    throw InvariantViolation("expected a one-dimensional annihilator");
  return basis[0];
}

GradedMap checked_iso(const AlgebraHandle& source, const AlgebraHandle& target, RatMatrix basis,
                      RatMatrix z_block) {
  const auto u_inv = inverse(basis);
  if (!u_inv) throw InvariantViolation("classification basis is singular");
  GradedMap iso{source, target, *u_inv, std::move(z_block)};
  if (!is_homomorphism(iso) || !is_invertible(iso))
    throw InvariantViolation("constructed classification map is not an isomorphism");
  return iso;
}

/// Smallest odd cycle length, for the report of odd unicyclic graphs.
std::optional<int> odd_cycle_length(const Graph& g) {
  const CycleList cycles = enumerate_cycles(g, g.order());
  for (const auto& c : cycles.cycles)
    if (c.size() % 2 == 1) return static_cast<int>(c.size());
  return std::nullopt;
}

}  // namespace

bool is_edge_square(const Graph& g) {
  for (const Edge& e : g.edges())
    if (!edge_square_witness(g, e)) return false;
  return true;
}

ClassificationReport classify_edge_square(const Graph& g) {
  if (!is_connected(g)) throw InputError("classify_edge_square: graph must be connected");
  const int p = g.order();
  const int q = g.size();
  ClassificationReport report;
  report.p = p;
  report.q = q;

  std::vector<SquareWitness> witnesses;
  witnesses.reserve(q);
  for (const Edge& e : g.edges()) {
    auto w = edge_square_witness(g, e);
    if (!w) return report;  // Unclassified
    witnesses.push_back(std::move(*w));
  }

  const AlgebraHandle source = graph_algebra(g);
  if (q == p - 1) {
    report.tag = ClassificationTag::TreeF0Op;
    RatMatrix basis(p, p);
    const auto ann = annihilator_vector(g);
    for (int r = 0; r < p; ++r) basis.at(r, 0) = ann[r];
    for (int i = 0; i < q; ++i)
      for (int r = 0; r < p; ++r) basis.at(r, i + 1) = witnesses[i].u[r];
    // a single vertex is the plain one-generator zero algebra
    const AlgebraHandle target =
        p == 1 ? f0_algebra()
               : direct_sum(f0_algebra(), build_canonical(CanonicalKind::Op, p - 1));
    report.iso = checked_iso(source, target, std::move(basis), RatMatrix::identity(q));
  } else if (q == p) {
    report.tag = ClassificationTag::OddUnicyclicOp;
    report.m = odd_cycle_length(g);
    RatMatrix basis(p, p);
    for (int i = 0; i < q; ++i)
      for (int r = 0; r < p; ++r) basis.at(r, i) = witnesses[i].u[r];
    report.iso = checked_iso(source, build_canonical(CanonicalKind::Op, p), std::move(basis),
                             RatMatrix::identity(q));
  } else {
    throw InvariantViolation("edge-square graph with q outside {p-1, p}");
  }
  return report;
}

namespace {

/// Solution of supp(u^2) = {e0, ei} scaled to lambda_{e0}(u) = 1; the scale
/// on the second edge comes back as alpha = lambda_{ei}(u).
struct PairSolution {
  std::vector<Rational> u;
  Rational alpha;
};

std::optional<PairSolution> pair_solution(const Graph& g, int e0, int ei) {
  // solutions are unique only modulo the annihilator (adding an annihilator
  // vector changes neither any lambda value nor the square), so any
  // representative span serves the construction
  const auto result = square_support_solutions(g, {e0, ei});
  if (result.spans.empty()) return std::nullopt;
  PairSolution s;
  s.u = result.spans.front();
  const Rational l0 = edge_functional_value(g, e0, s.u);
  const Rational inv = 1 / l0;
  for (Rational& x : s.u) x *= inv;
  s.alpha = edge_functional_value(g, ei, s.u);
  return s;
}

}  // namespace

ClassificationReport classify_pair_square(const Graph& g) {
  if (!is_connected(g)) throw InputError("classify_pair_square: graph must be connected");
  if (is_edge_square(g)) throw InputError("graph is edge-square; use classify_edge_square");
  const int p = g.order();
  const int q = g.size();
  ClassificationReport report;
  report.p = p;
  report.q = q;

  // fixed-edge reduction: when every pair through e0 is a square support,
  // differences of the solutions cover every other pair
  for (int i = 1; i < q; ++i)
    if (!square_support_exists(g, {0, i})) return report;  // Unclassified

  if (q != p && q != p + 1) {
    if (q < 2) return report;
    throw InvariantViolation("pair-square graph with q outside {p, p+1}");
  }

  std::vector<PairSolution> sols;
  for (int i = 1; i < q; ++i) {
    auto s = pair_solution(g, 0, i);
    if (!s) throw InvariantViolation("pair solution vanished after the existence test");
    sols.push_back(std::move(*s));
  }

  const AlgebraHandle source = graph_algebra(g);
  const auto z_scaling = [&](std::size_t dim_z, std::size_t z_offset) {
    // e0 -> z0, ei -> alpha_i^{-2} z_i
    RatMatrix zb(dim_z, q);
    zb.at(z_offset, 0) = 1;
    for (int i = 1; i < q; ++i)
      zb.at(z_offset + i, i) = 1 / (sols[i - 1].alpha * sols[i - 1].alpha);
    return zb;
  };

  if (q == p) {
    // connected, every degree >= 2 (terminal edges would be squares), q = p:
    // the graph is a cycle, necessarily even
    for (int v = 0; v < p; ++v)
      if (g.degree(v) != 2) throw InvariantViolation("pair-square graph with q = p is not a cycle");
    if (p % 2 != 0) throw InvariantViolation("odd cycle passed the pair-square test");
    report.tag = ClassificationTag::EvenCycleF0Tp;
    report.m = p;
    RatMatrix basis(p, p);
    const auto ann = annihilator_vector(g);
    for (int r = 0; r < p; ++r) basis.at(r, 0) = ann[r];
    for (int i = 0; i + 1 < p; ++i)
      for (int r = 0; r < p; ++r) basis.at(r, i + 1) = sols[i].u[r];
    report.iso = checked_iso(source, direct_sum(f0_algebra(), build_canonical(CanonicalKind::Tp, p - 1)),
                             std::move(basis), z_scaling(q, 0));
  } else {
    report.tag = ClassificationTag::DoublyOddPaddleTp;
    const auto shape = paddle_decomposition(g);
    if (!shape) throw InvariantViolation("pair-square graph with q = p+1 is not a doubly-odd paddle");
    report.m = shape->m;
    report.n = shape->n;
    report.path_len = shape->path_len;
    RatMatrix basis(p, p);
    for (int i = 0; i < p; ++i)
      for (int r = 0; r < p; ++r) basis.at(r, i) = sols[i].u[r];
    report.iso = checked_iso(source, build_canonical(CanonicalKind::Tp, p), std::move(basis),
                             z_scaling(q, 0));
  }
  return report;
}

bool is_pair_square_exhaustive(const Graph& g) {
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!square_support_exists(g, {i, j})) return false;
  return true;
}

}  // namespace nga
