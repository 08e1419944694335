#include "translat/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

namespace translat {

int TsLattice::find(const TransferSystem& ts) const {
  for (size_t i = 0; i < systems.size(); ++i)
    if (systems[i].rel == ts.rel) return int(i);
  return -1;
}

namespace {

struct SystemPool {
  std::vector<TransferSystem> systems;
  std::unordered_map<uint64_t, std::vector<int>> index;

  // Index of ts, inserting when new.
  int intern(TransferSystem ts, bool* added = nullptr) {
    auto& bucket = index[ts.key()];
    for (int i : bucket)
      if (systems[i].rel == ts.rel) {
        if (added) *added = false;
        return i;
      }
    bucket.push_back(int(systems.size()));
    systems.push_back(std::move(ts));
    if (added) *added = true;
    return int(systems.size()) - 1;
  }
};

void sort_canonical(std::vector<TransferSystem>& systems) {
  std::sort(systems.begin(), systems.end(),
            [](const TransferSystem& x, const TransferSystem& y) {
              int cx = x.edge_count(), cy = y.edge_count();
              if (cx != cy) return cx < cy;
              return x.rel.lex_less(y.rel);
            });
}

TsLattice finalize(const Lattice& l, const LatticeAction& a,
                   std::vector<TransferSystem> systems, bool decorate) {
  sort_canonical(systems);
  int m = int(systems.size());

  TsLattice out;
  out.lattice_hash = l.hash;
  out.systems = std::move(systems);
  out.trivial_index = out.find(trivial_system(l));
  out.complete_index = out.find(complete_system(l));
  if (out.trivial_index < 0 || out.complete_index < 0)
    throw DomainError("enumeration lost the trivial or complete system");

  // strict inclusions, then covering pairs
  std::vector<Bitset> above(m, Bitset(m)), below(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && out.systems[i].rel.subset_of(out.systems[j].rel)) {
        above[i].set(j);
        below[j].set(i);
      }
  for (int i = 0; i < m; ++i)
    above[i].for_each([&](int j) {
      if (!(above[i] & below[j]).any()) out.hasse_edges.emplace_back(i, j);
    });
  std::sort(out.hasse_edges.begin(), out.hasse_edges.end());

  if (decorate) {
    out.decorations.resize(m);
    for (int i = 0; i < m; ++i) {
      const auto& ts = out.systems[i];
      auto& d = out.decorations[i];
      d.saturated = is_saturated(l, ts);
      d.cosaturated = is_cosaturated(l, a, ts);
      d.connected = is_connected(l, ts);
      d.lsp = is_lsp(l, a, ts, out.systems);
    }
  }
  return out;
}

std::vector<TransferSystem> enumerate_systems(const Lattice& l,
                                              const LatticeAction& a) {
  SystemPool pool;
  pool.intern(trivial_system(l));
  for (size_t i = 0; i < pool.systems.size(); ++i) {
    for (const auto& orbit : a.pair_orbits) {
      if (pool.systems[i].edge(orbit.rep.first, orbit.rep.second)) continue;
      BitMatrix rel = pool.systems[i].rel;
      rel.set(orbit.rep.first, orbit.rep.second);
      pool.intern(close_relation(l, a, std::move(rel)));
    }
  }
  return std::move(pool.systems);
}

std::vector<TransferSystem> axiom_filter_systems(const Lattice& l,
                                                 const LatticeAction& a) {
  int n = l.size;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && l.leq(x, y)) pairs.emplace_back(x, y);
  if (pairs.size() > 30) throw DomainError("oracle lattice too large");

  std::vector<TransferSystem> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
    BitMatrix rel(n);
    for (int x = 0; x < n; ++x) rel.set(x, x);
    for (size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) rel.set(pairs[b].first, pairs[b].second);

    // direct axiom checks (no closure machinery)
    bool ok = true;
    for (int low = 0; low < n && ok; ++low)
      for (int k = 0; k < n && ok; ++k) {
        if (!rel.test(low, k)) continue;
        for (int h = 0; h < n && ok; ++h)
          if (rel.test(k, h) && !rel.test(low, h)) ok = false;
      }
    for (int k = 0; k < n && ok; ++k)
      for (int h = 0; h < n && ok; ++h) {
        if (k == h || !rel.test(k, h)) continue;
        for (int m = 0; m < n && ok; ++m)
          if (l.leq(m, h) && !rel.test(l.meet_of(k, m), m)) ok = false;
      }
    for (const auto& p : a.gens) {
      if (!ok) break;
      for (int k = 0; k < n && ok; ++k)
        for (int h = 0; h < n && ok; ++h)
          if (rel.test(k, h) && !rel.test(p[k], p[h])) ok = false;
    }
    if (ok) out.push_back(wrap_relation(l, std::move(rel)));
  }
  return out;
}

bool same_system_sets(std::vector<TransferSystem> a, std::vector<TransferSystem> b) {
  if (a.size() != b.size()) return false;
  sort_canonical(a);
  sort_canonical(b);
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i].rel == b[i].rel)) return false;
  return true;
}

}  // namespace

TsLattice enumerate_all(const Lattice& l, const LatticeAction& a,
                        const EnumerateOptions& opts) {
  if (l.size > opts.max_lattice_size)
    throw DomainError("lattice size " + std::to_string(l.size) +
                      " exceeds enumeration cap " +
                      std::to_string(opts.max_lattice_size));
  auto systems = enumerate_systems(l, a);
  if (opts.verify_small && l.size <= 6 &&
      !same_system_sets(systems, axiom_filter_systems(l, a)))
    throw DomainError("enumeration disagrees with the axiom-filter oracle");
  return finalize(l, a, std::move(systems), opts.decorate);
}

TsLattice brute_force_oracle(const Lattice& l, const LatticeAction& a) {
  if (l.size > 6) throw DomainError("oracle is limited to lattices of size 6");
  return finalize(l, a, axiom_filter_systems(l, a), /*decorate=*/true);
}

// ---------------------------------------------------------------------------
// Width and complexity

WidthReport width(const FiniteGroup& g) {
  auto sl = from_subgroups(g);
  auto mi = meet_irreducibles(sl.lattice);

  std::vector<int> class_reps;
  std::vector<bool> seen(sl.action.orbits.size(), false);
  for (int x : mi) {
    int orb = sl.action.orbit_of[x];
    if (!seen[orb]) {
      seen[orb] = true;
      class_reps.push_back(sl.action.orbits[orb][0]);
    }
  }
  std::sort(class_reps.begin(), class_reps.end());

  WidthReport report;
  report.group_label = g.label;
  report.width = int(class_reps.size());
  for (int rep : class_reps) {
    report.class_labels.push_back(sl.lattice.labels[rep]);
    report.generating_edges.push_back(sl.lattice.labels[rep] + " -> " + g.label);
  }
  using Family = GroupSpec::Family;
  if (g.spec.family == Family::Dihedral || g.spec.family == Family::Quaternion ||
      g.spec.family == Family::Dicyclic) {
    report.formula_value = width_formula(g.spec.family, g.spec.param);
    if (*report.formula_value != report.width)
      throw DomainError("closed-form width " + std::to_string(*report.formula_value) +
                        " disagrees with meet-irreducible count " +
                        std::to_string(report.width) + " for " + g.label);
  }
  return report;
}

int width_formula(GroupSpec::Family family, int param) {
  using Family = GroupSpec::Family;
  auto exponents = [](int n) {
    int two = 0, odd = 0;
    for (auto [p, e] : factorize(n))
      (p == 2 ? two : odd) += e;
    return std::pair(two, odd);
  };
  switch (family) {
    case Family::Dihedral: {
      if (param < 2) throw DomainError("dihedral width needs n >= 2");
      auto [m, s] = exponents(param);
      return 2 * m + 1 + s;
    }
    case Family::Quaternion: {
      if (param < 8 || (param & (param - 1)) != 0)
        throw DomainError("quaternion width needs an order 2^k >= 8");
      int m = 0;
      for (int t = param; t > 4; t /= 2) ++m;
      return 2 * m + 2;
    }
    case Family::Dicyclic: {
      if (param < 2) throw DomainError("dicyclic width needs n >= 2");
      auto [m, s] = exponents(param);
      return 2 * m + 2 + s;
    }
    default:
      throw DomainError("no closed-form width for this family");
  }
}

ComplexityReport complexity(const FiniteGroup& g, const EnumerateOptions& opts) {
  auto sl = from_subgroups(g);
  EnumerateOptions local = opts;
  local.decorate = false;
  auto tsl = enumerate_all(sl.lattice, sl.action, local);
  ComplexityReport report;
  for (const auto& ts : tsl.systems) {
    int size = int(minimal_generating_set_orbitwise(sl.lattice, sl.action, ts).size());
    report.sizes.push_back(size);
    report.complexity = std::max(report.complexity, size);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hasse statistics and audits

namespace {

std::vector<std::vector<int>> undirected_adjacency(const TsLattice& tsl) {
  std::vector<std::vector<int>> adj(tsl.count());
  for (auto [i, j] : tsl.hasse_edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

std::vector<int> bfs_distances(const TsLattice& tsl, int start) {
  auto adj = undirected_adjacency(tsl);
  std::vector<int> dist(tsl.count(), -1);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

HasseStats hasse_stats(const TsLattice& tsl) {
  HasseStats s;
  s.count = tsl.count();
  auto dist = bfs_distances(tsl, tsl.trivial_index);
  s.shortest_path_length = dist[tsl.complete_index];
  for (const auto& d : tsl.decorations) {
    s.saturated += d.saturated;
    s.cosaturated += d.cosaturated;
    s.lsp += d.lsp;
    s.connected += d.connected;
    s.bisaturated += d.bisaturated();
  }
  return s;
}

BisatPathAudit audit_bisaturated_paths(const TsLattice& tsl) {
  if (tsl.decorations.empty())
    throw DomainError("audit needs a decorated enumeration");
  BisatPathAudit audit;
  int m = tsl.count();
  auto bisat = [&](int v) { return tsl.decorations[v].bisaturated() ? 1 : 0; };

  auto dist = bfs_distances(tsl, tsl.trivial_index);
  audit.shortest_length = dist[tsl.complete_index];

  // geodesic DAG sweep: path counts and best bisaturated tally
  auto adj = undirected_adjacency(tsl);
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return dist[x] < dist[y]; });
  std::vector<long long> npaths(m, 0);
  std::vector<int> best(m, std::numeric_limits<int>::min());
  npaths[tsl.trivial_index] = 1;
  best[tsl.trivial_index] = bisat(tsl.trivial_index);
  for (int v : order) {
    if (npaths[v] == 0) continue;
    for (int w : adj[v]) {
      if (dist[w] != dist[v] + 1) continue;
      npaths[w] += npaths[v];
      best[w] = std::max(best[w], best[v] + bisat(w));
    }
  }
  audit.shortest_path_count = npaths[tsl.complete_index];
  audit.max_bisaturated_on_shortest_path = best[tsl.complete_index];

  // monotone paths: the canonical sort is a topological order of inclusion
  std::vector<int> mono(m, std::numeric_limits<int>::min());
  mono[tsl.trivial_index] = bisat(tsl.trivial_index);
  std::vector<std::vector<int>> preds(m);
  for (auto [i, j] : tsl.hasse_edges) preds[j].push_back(i);
  for (int v = 0; v < m; ++v) {
    if (v == tsl.trivial_index) continue;
    for (int u : preds[v])
      if (mono[u] != std::numeric_limits<int>::min())
        mono[v] = std::max(mono[v], mono[u] + bisat(v));
  }
  audit.max_bisaturated_on_any_path = mono[tsl.complete_index];
  audit.readings_agree = audit.max_bisaturated_on_shortest_path ==
                         audit.max_bisaturated_on_any_path;
  return audit;
}

LspAudit audit_lsp_two_component(const Lattice& l, const LatticeAction& a,
                                 const TsLattice& tsl) {
  if (tsl.decorations.empty())
    throw DomainError("audit needs a decorated enumeration");
  LspAudit audit;
  if (l.bottom == l.top) return audit;

  for (int i = 0; i < tsl.count(); ++i) {
    const auto& ts = tsl.systems[i];
    // components of the undirected non-reflexive edge graph
    std::vector<int> comp(l.size, -1);
    std::vector<bool> isolated(l.size, true);
    auto edges = nonreflexive_edges(ts);
    for (const Edge& e : edges) isolated[e.lo] = isolated[e.hi] = false;
    int ncomp = 0;
    for (int v = 0; v < l.size; ++v) {
      if (comp[v] >= 0 || isolated[v]) continue;
      int id = ncomp++;
      std::vector<int> stack{v};
      comp[v] = id;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const Edge& e : edges) {
          int other = -1;
          if (e.lo == x) other = e.hi;
          else if (e.hi == x) other = e.lo;
          if (other >= 0 && comp[other] < 0) {
            comp[other] = id;
            stack.push_back(other);
          }
        }
      }
    }
    // hypothesis: isolated top vertex; every non-isolated vertex in the
    // bottom's component (isolated vertices count toward the bottom side)
    bool hypothesis = isolated[l.top];
    if (hypothesis && ncomp > 1) hypothesis = false;
    if (hypothesis && ncomp == 1 && isolated[l.bottom]) hypothesis = false;
    if (!hypothesis) continue;

    ++audit.hypothesis_matches;
    bool lsp = tsl.decorations[i].lsp;
    EdgeSet extended = edges;
    extended.push_back({uint16_t(l.bottom), uint16_t(l.top)});
    TransferSystem bigger = generate(l, a, extended);
    bool compat = compatible(l, ts, bigger);
    if (lsp || !compat)
      audit.counterexamples.push_back({i, lsp, compat});
  }
  return audit;
}

std::pair<long long, long long> restricted_count_bijection(
    const Lattice& l, const LatticeAction& a, const EnumerateOptions& opts) {
  EnumerateOptions local = opts;
  local.decorate = false;
  auto full = enumerate_all(l, a, local);
  long long restricted = 0;
  for (const auto& ts : full.systems) {
    bool all = true;
    for (int x = 0; x < l.size && all; ++x)
      if (!ts.edge(l.bottom, x)) all = false;
    restricted += all;
  }
  auto [l2, a2] = remove_bottom(l, a);
  auto reduced = enumerate_all(l2, a2, local);
  if (restricted != reduced.count())
    throw DomainError("bottom-removal bijection failed: " +
                      std::to_string(restricted) + " vs " +
                      std::to_string(reduced.count()));
  return {restricted, reduced.count()};
}

}  // namespace translat
