#include "nga/petersen.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "nga/canonical.hpp"
#include "nga/census.hpp"
#include "nga/coherence.hpp"
#include "nga/graph6.hpp"
#include "nga/short_functional.hpp"
#include "nga/square_support.hpp"

namespace nga {

namespace {

// row i of the weight-3 table: entries -1/2 at the vertices showing index i
std::vector<Rational> u_row(const PetersenModel& m, int i) {
  std::vector<Rational> u(10);
  for (int v = 0; v < 10; ++v) {
    const auto [a, b] = m.vertex_pairs[v];
    u[v] = (a == i || b == i) ? Rational(-1, 2) : Rational(1, 2);
  }
  return u;
}

// the H-table: six 1-factors as six-index symbols
constexpr const char* kHTable[6][5] = {
    {"123456", "132546", "143526", "152436", "162345"},
    {"123546", "132456", "142536", "153426", "162345"},
    {"124536", "132546", "142356", "153426", "162435"},
    {"124536", "132456", "143526", "152346", "162534"},
    {"123456", "134526", "142536", "152346", "162435"},
    {"123546", "134526", "142356", "152436", "162534"},
};

}  // namespace

int PetersenModel::vertex_of_pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (int v = 0; v < 10; ++v)
    if (vertex_pairs[v] == std::make_pair(i, j)) return v;
  throw InputError("not a 2-subset of {1..5}");
}

int PetersenModel::edge_of_enhanced(const std::string& symbol) const {
  if (symbol.size() != 6) throw InputError("six-index symbol expected");
  std::array<std::pair<int, int>, 3> pairs;
  int seen = 0;
  for (int k = 0; k < 3; ++k) {
    const int a = symbol[2 * k] - '0';
    const int b = symbol[2 * k + 1] - '0';
    if (a < 1 || a > 6 || b < 1 || b > 6) throw InputError("symbol digit out of range");
    pairs[k] = std::minmax(a, b);
    seen |= (1 << a) | (1 << b);
  }
  if (seen != 0b1111110) throw InputError("symbol must use each of 1..6 once");
  std::vector<int> verts;
  for (const auto& [a, b] : pairs)
    if (b != 6) verts.push_back(vertex_of_pair(a, b));
  if (verts.size() != 2) throw InputError("symbol lacks the pair containing 6");
  const int e = graph.edge_index(verts[0], verts[1]);
  if (e < 0) throw InputError("symbol does not name an edge");
  return e;
}

PetersenModel build_petersen() {
  PetersenModel m;
  int v = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) m.vertex_pairs[v++] = {i, j};

  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < 10; ++x)
    for (int y = x + 1; y < 10; ++y) {
      const auto [a, b] = m.vertex_pairs[x];
      const auto [c, d] = m.vertex_pairs[y];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(x, y);
    }
  m.graph = Graph::from_pairs(10, edges);

  for (const auto& [a, b] : m.vertex_pairs)
    m.vertex_labels.push_back(std::to_string(a) + std::to_string(b));
  for (const Edge& e : m.graph.edges()) {
    m.edge_labels.push_back(m.vertex_labels[e.a] + m.vertex_labels[e.b]);
    // six-index form: add {missing, 6}, pairs sorted by first index
    const auto [a, b] = m.vertex_pairs[e.a];
    const auto [c, d] = m.vertex_pairs[e.b];
    const int missing = 15 - a - b - c - d;
    std::array<std::pair<int, int>, 3> pairs = {m.vertex_pairs[e.a], m.vertex_pairs[e.b],
                                                {missing, 6}};
    std::sort(pairs.begin(), pairs.end());
    std::string symbol;
    for (const auto& [x, y] : pairs) symbol += std::to_string(x) + std::to_string(y);
    m.enhanced_edge_labels.push_back(symbol);
  }
  m.algebra = graph_algebra(m.graph, m.vertex_labels, m.edge_labels);

  if (m.graph.size() != 15) throw InvariantViolation("petersen: expected 15 edges");
  for (int x = 0; x < 10; ++x)
    if (m.graph.degree(x) != 3) throw InvariantViolation("petersen: not 3-regular");
  const CycleList short_cycles = enumerate_cycles(m.graph, 4);
  if (!short_cycles.cycles.empty()) throw InvariantViolation("petersen: girth below 5");
  if (automorphism_group_order(m.graph) != 120)
    throw InvariantViolation("petersen: automorphism group order is not 120");
  return m;
}

Weight3Spans weight3_spans(const PetersenModel& m) {
  Weight3Spans out;
  const int q = m.graph.size();
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      for (int c = b + 1; c < q; ++c) {
        if (!square_support_exists(m.graph, {a, b, c})) continue;
        const auto result = square_support_solutions(m.graph, {a, b, c});
        if (!result.exhaustive)
          throw InvariantViolation("weight-3 support with a multi-dimensional solution space");
        for (const auto& span : result.spans) out.spans.push_back(span);
      }

  // name the spans: vertex spans and the table rows
  std::vector<std::vector<Rational>> expected_u;
  for (int i = 1; i <= 5; ++i) {
    auto u = u_row(m, i);
    normalize_span(u);
    expected_u.push_back(std::move(u));
  }
  for (const auto& span : out.spans) {
    int nonzero = 0, index = -1;
    for (int v = 0; v < 10; ++v)
      if (span[v] != 0) {
        ++nonzero;
        index = v;
      }
    if (nonzero == 1) {
      out.labels.push_back(m.vertex_labels[index]);
      continue;
    }
    const auto it = std::find(expected_u.begin(), expected_u.end(), span);
    if (it == expected_u.end())
      throw InvariantViolation("weight-3 span outside the expected fifteen");
    out.labels.push_back(std::to_string(it - expected_u.begin() + 1) + "6");
  }
  return out;
}

bool low_weight_absence(const PetersenModel& m) {
  const int q = m.graph.size();
  for (int a = 0; a < q; ++a)
    if (square_support_exists(m.graph, {a})) return false;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (square_support_exists(m.graph, {a, b})) return false;
  return true;
}

std::array<std::vector<int>, 6> families_F(const PetersenModel& m, const Weight3Spans& spans) {
  const int n = static_cast<int>(spans.spans.size());
  std::vector<Element> elements;
  for (const auto& s : spans.spans) elements.push_back(u_element(m.algebra, s));
  std::vector<std::vector<bool>> zero(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) zero[i][j] = zero[j][i] = is_zero(multiply(elements[i], elements[j]));

  std::vector<std::vector<int>> found;
  std::vector<int> subset;
  const auto extend = [&](auto&& self, int start) -> void {
    if (subset.size() == 5) {
      found.push_back(subset);
      return;
    }
    for (int k = start; k < n; ++k) {
      if (!std::all_of(subset.begin(), subset.end(), [&](int s) { return zero[s][k]; })) continue;
      subset.push_back(k);
      self(self, k + 1);
      subset.pop_back();
    }
  };
  extend(extend, 0);
  if (found.size() != 6)
    throw InvariantViolation("expected six zero-product families, found " +
                             std::to_string(found.size()));

  std::array<std::vector<int>, 6> families;
  std::array<bool, 6> assigned{};
  for (const auto& family : found) {
    int common = 0b1111110;
    for (int s : family) {
      int digits = 0;
      for (char c : spans.labels[s]) digits |= 1 << (c - '0');
      common &= digits;
    }
    if (__builtin_popcount(common) != 1)
      throw InvariantViolation("family without a unique common digit");
    const int digit = __builtin_ctz(common);
    if (assigned[digit - 1]) throw InvariantViolation("two families share a digit");
    assigned[digit - 1] = true;
    families[digit - 1] = family;
  }
  return families;
}

GradedMap build_t(const PetersenModel& m, const Weight3Spans&) {
  RatMatrix ub(10, 10), zb(15, 15);
  for (int v = 0; v < 10; ++v) {
    const auto [a, b] = m.vertex_pairs[v];
    if (a == 1) {
      const auto u = u_row(m, b);  // 1k -> k6
      for (int r = 0; r < 10; ++r) ub.at(r, v) = u[r];
    } else {
      ub.at(v, v) = 1;
    }
  }
  for (int e = 0; e < 15; ++e) {
    const auto [x, y] = m.graph.edge(e);
    const auto [a1, a2] = m.vertex_pairs[x];
    const auto [b1, b2] = m.vertex_pairs[y];
    const int missing = 15 - a1 - a2 - b1 - b2;
    if (missing == 1) {
      zb.at(e, e) = 1;  // shows the pair 16
      continue;
    }
    // {1,h},{i,j},{k,6} -> {1,k},{i,j},{h,6}: the partner of 1 moves to the
    // 6-pair and the old 6-partner k joins 1
    int other_a, other_b;
    if (a1 == 1 || a2 == 1) {
      other_a = b1;
      other_b = b2;
    } else {
      other_a = a1;
      other_b = a2;
    }
    const int va = m.vertex_of_pair(1, missing);
    const int vb = m.vertex_of_pair(other_a, other_b);
    const int img = m.graph.edge_index(va, vb);
    if (img < 0) throw InvariantViolation("t: image pairs are not an edge");
    zb.at(img, e) = 1;
  }
  GradedMap t{m.algebra, m.algebra, std::move(ub), std::move(zb)};
  if (!is_homomorphism(t) || !is_invertible(t))
    throw InvariantViolation("t is not an algebra automorphism");
  return t;
}

namespace {

/// Action of an algebra automorphism on the 15 span vectors and on edges.
struct SpanAction {
  std::vector<int> span_perm;  // indices into the span list
  std::vector<int> edge_perm;
};

SpanAction action_of(const PetersenModel& m, const Weight3Spans& spans, const GradedMap& g) {
  SpanAction act;
  for (const auto& s : spans.spans) {
    auto image = g.u_block.apply(s);
    normalize_span(image);
    const auto it = std::find(spans.spans.begin(), spans.spans.end(), image);
    if (it == spans.spans.end())
      throw InvariantViolation("automorphism does not permute the weight-3 spans");
    act.span_perm.push_back(static_cast<int>(it - spans.spans.begin()));
  }
  for (int e = 0; e < m.graph.size(); ++e) {
    int image = -1;
    for (int r = 0; r < m.graph.size(); ++r) {
      if (g.z_block.at(r, e) == 0) continue;
      if (image >= 0) throw InvariantViolation("edge image is not a span");
      image = r;
    }
    if (image < 0) throw InvariantViolation("edge maps to zero");
    act.edge_perm.push_back(image);
  }
  return act;
}

std::array<int, 6> set_action(const std::array<std::vector<int>, 6>& sets,
                              const std::vector<int>& perm) {
  std::array<int, 6> out{};
  for (int i = 0; i < 6; ++i) {
    std::vector<int> image;
    for (int x : sets[i]) image.push_back(perm[x]);
    std::sort(image.begin(), image.end());
    int target = -1;
    for (int j = 0; j < 6; ++j) {
      std::vector<int> sorted = sets[j];
      std::sort(sorted.begin(), sorted.end());
      if (sorted == image) target = j;
    }
    if (target < 0) throw InvariantViolation("automorphism does not permute the six sets");
    out[i] = target;
  }
  return out;
}

Permutation label_perm_to_vertex_perm(const PetersenModel& m, const std::array<int, 5>& pi) {
  Permutation perm(10);
  for (int v = 0; v < 10; ++v) {
    const auto [a, b] = m.vertex_pairs[v];
    perm[v] = m.vertex_of_pair(pi[a - 1], pi[b - 1]);
  }
  return perm;
}

std::uint64_t encode_pair(const std::array<int, 6>& f, const std::array<int, 6>& h) {
  std::uint64_t code = 0;
  for (int i = 0; i < 6; ++i) code = code * 6 + f[i];
  for (int i = 0; i < 6; ++i) code = code * 6 + h[i];
  return code;
}

std::array<int, 6> compose6(const std::array<int, 6>& f, const std::array<int, 6>& g) {
  std::array<int, 6> out{};
  for (int i = 0; i < 6; ++i) out[i] = f[g[i]];
  return out;
}

}  // namespace

Sym6Actions sym6_actions(const PetersenModel& m) {
  Sym6Actions out;
  const Weight3Spans spans = weight3_spans(m);
  out.families = families_F(m, spans);

  // six pairs of disjoint pentagons
  const CycleList cl = enumerate_cycles(m.graph, 5);
  std::vector<std::vector<int>> pentagons;
  for (const auto& c : cl.cycles)
    if (c.size() == 5) pentagons.push_back(c);
  if (pentagons.size() != 12) throw InvariantViolation("expected twelve pentagons");

  const auto vertex_set = [](const std::vector<int>& cycle) {
    std::uint64_t s = 0;
    for (int v : cycle) s |= std::uint64_t{1} << v;
    return s;
  };
  const auto edge_set = [&](const std::vector<int>& cycle) {
    std::vector<int> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      edges.push_back(m.graph.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]));
    std::sort(edges.begin(), edges.end());
    return edges;
  };

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < pentagons.size(); ++i)
    for (std::size_t j = i + 1; j < pentagons.size(); ++j)
      if ((vertex_set(pentagons[i]) & vertex_set(pentagons[j])) == 0)
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  if (pairs.size() != 6) throw InvariantViolation("expected six disjoint pentagon pairs");

  for (const auto& [i, j] : pairs) {
    std::vector<int> union_edges = edge_set(pentagons[i]);
    const auto ej = edge_set(pentagons[j]);
    union_edges.insert(union_edges.end(), ej.begin(), ej.end());
    std::sort(union_edges.begin(), union_edges.end());
    out.pentagon_pairs.push_back(std::move(union_edges));
  }

  // the five size-11 circuits over each pair contribute their eleventh edges
  std::vector<std::vector<int>> size11;
  for (const auto& c : minimal_coherent_subgraphs(m.graph, 11))
    if (c.size() == 11) size11.push_back(c);
  if (size11.size() != 30) throw InvariantViolation("expected thirty size-11 circuits");

  std::array<std::vector<int>, 6> h_unordered;
  std::vector<int> per_pair_count(6, 0);
  for (const auto& circuit : size11) {
    int owner = -1;
    for (int k = 0; k < 6; ++k)
      if (std::includes(circuit.begin(), circuit.end(), out.pentagon_pairs[k].begin(),
                        out.pentagon_pairs[k].end())) {
        if (owner >= 0) throw InvariantViolation("circuit contains two pentagon pairs");
        owner = k;
      }
    if (owner < 0) throw InvariantViolation("size-11 circuit without a pentagon pair");
    ++per_pair_count[owner];
    for (int e : circuit)
      if (!std::binary_search(out.pentagon_pairs[owner].begin(), out.pentagon_pairs[owner].end(), e))
        h_unordered[owner].push_back(e);
  }
  for (int k = 0; k < 6; ++k) {
    if (per_pair_count[k] != 5)
      throw InvariantViolation("pentagon pair with circuit count != 5");
    std::sort(h_unordered[k].begin(), h_unordered[k].end());
    if (h_unordered[k].size() != 5 ||
        std::unique(h_unordered[k].begin(), h_unordered[k].end()) != h_unordered[k].end())
      throw InvariantViolation("eleventh edges of a pentagon pair are not five distinct edges");
    std::uint64_t covered = 0;
    for (int e : h_unordered[k]) {
      covered |= std::uint64_t{1} << m.graph.edge(e).a;
      covered |= std::uint64_t{1} << m.graph.edge(e).b;
    }
    if (__builtin_popcountll(covered) != 10)
      throw InvariantViolation("an H-set is not a 1-factor");
  }

  // match the computed 1-factors against the table rows to fix the indexing
  std::array<std::vector<int>, 6> expected;
  for (int r = 0; r < 6; ++r) {
    for (const char* symbol : kHTable[r]) expected[r].push_back(m.edge_of_enhanced(symbol));
    std::sort(expected[r].begin(), expected[r].end());
  }
  std::array<bool, 6> used{};
  for (int r = 0; r < 6; ++r) {
    int match = -1;
    for (int k = 0; k < 6; ++k)
      if (!used[k] && h_unordered[k] == expected[r]) match = k;
    if (match < 0) throw InvariantViolation("computed 1-factors do not match the H-table");
    used[match] = true;
    out.h_sets[r] = h_unordered[match];
  }

  // generators: two graph automorphisms generating Sym(5), plus t
  std::vector<GradedMap> generators;
  generators.push_back(graphical_automorphism(
      m.algebra, m.graph, label_perm_to_vertex_perm(m, {2, 1, 3, 4, 5})));
  generators.push_back(graphical_automorphism(
      m.algebra, m.graph, label_perm_to_vertex_perm(m, {2, 3, 4, 5, 1})));
  generators.push_back(build_t(m, spans));

  std::vector<std::pair<std::array<int, 6>, std::array<int, 6>>> gen_actions;
  for (const GradedMap& g : generators) {
    const SpanAction act = action_of(m, spans, g);
    gen_actions.emplace_back(set_action(out.families, act.span_perm),
                             set_action(out.h_sets, act.edge_perm));
  }
  std::vector<std::pair<std::array<int, 6>, std::array<int, 6>>> group;
  std::unordered_set<std::uint64_t> seen;
  std::array<int, 6> id{0, 1, 2, 3, 4, 5};
  group.emplace_back(id, id);
  seen.insert(encode_pair(id, id));
  for (std::size_t head = 0; head < group.size(); ++head)
    for (const auto& [gf, gh] : gen_actions) {
      const auto f = compose6(gf, group[head].first);
      const auto h = compose6(gh, group[head].second);
      if (seen.insert(encode_pair(f, h)).second) group.emplace_back(f, h);
    }
  if (group.size() != 720)
    throw InvariantViolation("group on the families has order " + std::to_string(group.size()));

  std::set<std::array<int, 6>> distinct_f, distinct_h;
  for (const auto& [f, h] : group) {
    distinct_f.insert(f);
    distinct_h.insert(h);
    out.f_perms.push_back(f);
    out.h_perms.push_back(h);
  }
  if (distinct_f.size() != 720 || distinct_h.size() != 720)
    throw InvariantViolation("the actions on families and H-sets are not faithful");
  return out;
}

std::vector<std::pair<int, std::pair<int, int>>> duad_syntheme(const PetersenModel& m,
                                                               const Sym6Actions& actions) {
  std::vector<std::pair<int, std::pair<int, int>>> out;
  std::set<std::pair<int, int>> duads;
  for (int e = 0; e < m.graph.size(); ++e) {
    std::vector<int> rows;
    for (int r = 0; r < 6; ++r)
      if (std::binary_search(actions.h_sets[r].begin(), actions.h_sets[r].end(), e))
        rows.push_back(r + 1);
    if (rows.size() != 2)
      throw InvariantViolation("edge " + m.edge_labels[e] + " lies in " +
                               std::to_string(rows.size()) + " H-rows");
    duads.insert({rows[0], rows[1]});
    out.emplace_back(e, std::make_pair(rows[0], rows[1]));
  }
  if (duads.size() != 15) throw InvariantViolation("duad correspondence is not a bijection");
  return out;
}

std::vector<CubicFingerprint> uniqueness_census() {
  CensusOptions options;
  options.connected = true;
  options.regular_degree = 3;
  const auto graphs = census(10, options);
  if (graphs.size() != 19)
    throw InvariantViolation("expected 19 cubic graphs of order 10, found " +
                             std::to_string(graphs.size()));
  std::vector<CubicFingerprint> out;
  for (const Graph& g : graphs) {
    CubicFingerprint fp;
    fp.graph6 = to_graph6(g);
    const CycleList cycles = enumerate_cycles(g, 6);
    fp.four_cycles = cycles.count_of_length(4);
    fp.six_cycles = cycles.count_of_length(6);
    std::set<int> edges;
    for (const auto& c : cycles.cycles) {
      if (c.size() != 4) continue;
      for (std::size_t i = 0; i < 4; ++i)
        edges.insert(g.edge_index(c[i], c[(i + 1) % 4]));
    }
    fp.edges_in_four_cycles = static_cast<int>(edges.size());
    out.push_back(std::move(fp));
  }
  return out;
}

namespace {

void run_check(std::vector<NamedCheck>& checks, const std::string& name,
               const std::function<void()>& body) {
  NamedCheck c;
  c.name = name;
  try {
    body();
    c.passed = true;
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = e.what();
  }
  checks.push_back(std::move(c));
}

void expect(bool condition, const std::string& message) {
  if (!condition) throw InvariantViolation(message);
}

}  // namespace

std::vector<NamedCheck> petersen_verification() {
  std::vector<NamedCheck> checks;

  PetersenModel m;
  run_check(checks, "build: 3-regular, girth 5, |aut| = 120", [&] { m = build_petersen(); });
  if (!checks.back().passed) return checks;

  Weight3Spans spans;
  run_check(checks, "weight-3 spans: the ten vertices plus the five table rows", [&] {
    spans = weight3_spans(m);
    expect(spans.spans.size() == 15, "span count is not 15");
    int vertex_count = 0, extra_count = 0;
    for (const auto& label : spans.labels) (label.back() == '6' ? extra_count : vertex_count)++;
    expect(vertex_count == 10 && extra_count == 5, "span labels disagree with the table");
  });
  if (!checks.back().passed) return checks;

  run_check(checks, "representative products at u1", [&] {
    const Element u1 = u_element(m.algebra, u_row(m, 1));
    const Element sq = multiply(u1, u1);
    const SupportProfile prof = support_profile(sq);
    std::vector<int> expected = {m.edge_of_enhanced("162345"), m.edge_of_enhanced("162435"),
                                 m.edge_of_enhanced("162534")};
    std::sort(expected.begin(), expected.end());
    expect(prof.support == expected, "u1^2 is not the three opposite edges");
    for (const char* v : {"12", "13", "14", "15"}) {
      int a = v[0] - '0', b = v[1] - '0';
      const Element prod = multiply(u1, u_basis_element(m.algebra, m.vertex_of_pair(a, b)));
      expect(is_zero(prod), "u1 times a vertex showing 1 is nonzero");
    }
    const Element e2345 = z_basis_element(m.algebra, m.edge_of_enhanced("162345"));
    expect(equal(multiply(u1, u_basis_element(m.algebra, m.vertex_of_pair(2, 3))), e2345),
           "u1 x 23 is not 2345");
    expect(equal(multiply(u1, u_basis_element(m.algebra, m.vertex_of_pair(4, 5))), e2345),
           "u1 x 45 is not 2345");
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        expect(is_zero(multiply(u_element(m.algebra, u_row(m, i)), u_element(m.algebra, u_row(m, j)))),
               "u_i u_j != 0");
  });

  run_check(checks, "no squares of weight 1 or 2", [&] {
    expect(low_weight_absence(m), "a low-weight square exists");
  });

  std::array<std::vector<int>, 6> families;
  run_check(checks, "six families with pairwise zero products, intersections single spans", [&] {
    families = families_F(m, spans);
    for (int d = 0; d < 6; ++d) expect(families[d].size() == 5, "family size is not 5");
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        std::vector<int> meet;
        for (int s : families[i])
          if (std::find(families[j].begin(), families[j].end(), s) != families[j].end())
            meet.push_back(s);
        expect(meet.size() == 1, "family intersection is not a single span");
        // the shared span is labeled by the two digits
        const std::string& label = spans.labels[meet[0]];
        const std::string want1 = std::to_string(i + 1) + std::to_string(j + 1);
        expect(label == want1, "family intersection carries the wrong label");
      }
  });
  if (!checks.back().passed) return checks;

  GradedMap t;
  run_check(checks, "t: involutive automorphism with the stated edge action", [&] {
    t = build_t(m, spans);
    const GradedMap t2 = compose(t, t);
    const GradedMap id = identity_map(m.algebra);
    expect(t2.u_block == id.u_block && t2.z_block == id.z_block, "t^2 is not the identity");
    const int e0 = m.edge_of_enhanced("123456");
    const int img = m.edge_of_enhanced("153426");
    expect(t.z_block.at(img, e0) == 1, "t(123456) != 153426");
    const int fixed = m.edge_of_enhanced("162345");
    expect(t.z_block.at(fixed, fixed) == 1, "t does not fix 162345");
  });
  if (!checks.back().passed) return checks;

  Sym6Actions actions;
  run_check(checks, "pentagon pairs, size-11 circuits, and the H-table", [&] {
    actions = sym6_actions(m);
  });
  if (!checks.back().passed) return checks;

  run_check(checks, "t swaps F1 and F6, fixing the others", [&] {
    const SpanAction act = action_of(m, spans, t);
    const auto f = set_action(actions.families, act.span_perm);
    const std::array<int, 6> expected = {5, 1, 2, 3, 4, 0};
    expect(f == expected, "t acts on the families differently");
  });

  run_check(checks, "group on the families has order 720, faithful on both actions", [&] {
    expect(actions.f_perms.size() == 720, "group order != 720");
  });

  run_check(checks, "(12) -> (15)(26)(34), (123) -> (164)(253), (12345) cycles the H-rows", [&] {
    const auto act_of_label = [&](const std::array<int, 5>& pi) {
      const GradedMap g =
          graphical_automorphism(m.algebra, m.graph, label_perm_to_vertex_perm(m, pi));
      const SpanAction act = action_of(m, spans, g);
      return std::make_pair(set_action(actions.families, act.span_perm),
                            set_action(actions.h_sets, act.edge_perm));
    };
    const auto [f12, h12] = act_of_label({2, 1, 3, 4, 5});
    expect(f12 == std::array<int, 6>{1, 0, 2, 3, 4, 5}, "(12) acts on F unexpectedly");
    expect(h12 == std::array<int, 6>{4, 5, 3, 2, 0, 1}, "(12) does not act as (15)(26)(34) on H");
    const auto [f123, h123] = act_of_label({2, 3, 1, 4, 5});
    expect(f123 == std::array<int, 6>{1, 2, 0, 3, 4, 5}, "(123) acts on F unexpectedly");
    expect(h123 == std::array<int, 6>{5, 4, 1, 0, 2, 3}, "(123) does not act as (164)(253) on H");
    const auto [f5, h5] = act_of_label({2, 3, 4, 5, 1});
    expect(f5 == std::array<int, 6>{1, 2, 3, 4, 0, 5}, "(12345) acts on F unexpectedly");
    expect(h5 == std::array<int, 6>{1, 2, 3, 4, 0, 5}, "(12345) does not cycle H1..H5 fixing H6");
  });

  run_check(checks, "the induced Sym(6) automorphism is outer", [&] {
    int transpositions = 0;
    for (std::size_t k = 0; k < actions.f_perms.size(); ++k) {
      const auto& f = actions.f_perms[k];
      int moved = 0;
      for (int i = 0; i < 6; ++i) moved += f[i] != i;
      if (moved != 2) continue;
      ++transpositions;
      const auto& h = actions.h_perms[k];
      int h_moved = 0;
      bool involution = true;
      for (int i = 0; i < 6; ++i) {
        h_moved += h[i] != i;
        involution = involution && h[h[i]] == i;
      }
      expect(involution && h_moved == 6, "a transposition does not map to a triple transposition");
    }
    expect(transpositions == 15, "expected 15 transpositions in the F-action");
  });

  run_check(checks, "duad-syntheme correspondence", [&] {
    const auto map = duad_syntheme(m, actions);
    for (const auto& [e, duad] : map) {
      if (e == m.edge_of_enhanced("162345"))
        expect(duad == std::make_pair(1, 2), "162345 is not matched with duad 12");
      if (e == m.edge_of_enhanced("142356"))
        expect(duad == std::make_pair(3, 6), "142356 is not matched with duad 36");
    }
  });

  run_check(checks, "hexagons: the ten smallest circuits; three edge-pair orbits", [&] {
    const auto circuits = minimal_coherent_subgraphs(m.graph, 6);
    expect(circuits.size() == 10, "expected ten circuits of size <= 6");
    const CycleList cl = enumerate_cycles(m.graph, 6);
    expect(cl.count_of_length(5) == 12 && cl.count_of_length(6) == 10,
           "pentagon/hexagon counts are off");
    for (const auto& c : circuits) expect(c.size() == 6, "a circuit smaller than a hexagon exists");

    // orbits of unordered edge pairs under the graph automorphisms
    const auto gens = automorphism_generators(m.graph);
    std::vector<std::vector<int>> edge_perms;
    for (const auto& perm : gens) {
      std::vector<int> ep(m.graph.size());
      for (int e = 0; e < m.graph.size(); ++e) {
        const auto [x, y] = m.graph.edge(e);
        ep[e] = m.graph.edge_index(perm[x], perm[y]);
      }
      edge_perms.push_back(std::move(ep));
    }
    std::map<std::pair<int, int>, int> orbit;
    int orbit_count = 0;
    for (int a = 0; a < m.graph.size(); ++a)
      for (int b = a + 1; b < m.graph.size(); ++b) {
        if (orbit.count({a, b})) continue;
        // BFS over the orbit of the pair {a,b}
        std::vector<std::pair<int, int>> frontier{{a, b}};
        orbit[{a, b}] = orbit_count;
        while (!frontier.empty()) {
          const auto [x, y] = frontier.back();
          frontier.pop_back();
          for (const auto& ep : edge_perms) {
            const auto img = std::minmax(ep[x], ep[y]);
            if (!orbit.count(img)) {
              orbit[img] = orbit_count;
              frontier.push_back(img);
            }
          }
        }
        ++orbit_count;
      }
    expect(orbit_count == 3, "edge pairs form " + std::to_string(orbit_count) + " orbits");
    const int rep = m.edge_of_enhanced("143526");   // 1435
    const int adj = m.edge_of_enhanced("162435");   // 2435, shares the vertex 35
    const int skew = m.edge_of_enhanced("152436");  // 1524
    const int opp = m.edge_of_enhanced("152634");   // 1534, opposite in a hexagon
    std::set<int> reps = {orbit[std::minmax(rep, adj)], orbit[std::minmax(rep, skew)],
                          orbit[std::minmax(rep, opp)]};
    expect(reps.size() == 3, "the three representative pairs do not hit all orbits");
  });

  run_check(checks, "MC-edge connected (hexagon circuits overlap and cover)", [&] {
    expect(is_mc_edge_connected(m.graph), "Petersen is not MC-edge connected");
  });

  run_check(checks, "uniqueness census: 19 cubic graphs, separated fingerprints", [&] {
    const auto fps = uniqueness_census();
    std::set<std::tuple<int, int, int>> distinct;
    std::map<std::pair<int, int>, std::vector<int>> by_cycles;
    bool petersen_seen = false;
    for (const auto& fp : fps) {
      distinct.insert({fp.four_cycles, fp.six_cycles, fp.edges_in_four_cycles});
      by_cycles[{fp.four_cycles, fp.six_cycles}].push_back(fp.edges_in_four_cycles);
      petersen_seen = petersen_seen || (fp.four_cycles == 0 && fp.six_cycles == 10 &&
                                        fp.edges_in_four_cycles == 0);
    }
    expect(petersen_seen, "no graph with fingerprint (0, 10, 0) found");
    expect(distinct.size() == 19, "fingerprints are not pairwise distinct");
    int matched_pairs = 0;
    for (auto& [key, covers] : by_cycles) {
      if (covers.size() == 1) continue;
      expect(covers.size() == 2, "three graphs share a cycle-count pair");
      ++matched_pairs;
      std::sort(covers.begin(), covers.end());
      if (key == std::make_pair(2, 8))
        expect(covers == std::vector<int>{7, 8}, "(2,8) pair covers are not 7 and 8");
      else if (key == std::make_pair(3, 7))
        expect(covers == std::vector<int>{9, 11}, "(3,7) pair covers are not 9 and 11");
      else
        expect(false, "unexpected matched cycle-count pair");
    }
    expect(matched_pairs == 2, "expected exactly two matched cycle-count pairs");
  });

  return checks;
}

}  // namespace nga
