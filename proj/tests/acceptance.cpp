// Acceptance suite: runs the contract criteria end to end and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "translat/enumeration.hpp"

using namespace translat;
using translat::testing::Ctx;
using translat::testing::edges_by_label;
using translat::testing::make_ctx;

namespace {

struct Checker {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class T, class U>
  void expect_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == T(want))) {
      std::ostringstream os;
      os << what << ": expected " << want << ", computed " << got;
      failures.push_back(os.str());
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

std::map<std::string, Ctx>& ctx_cache() {
  static std::map<std::string, Ctx> cache;
  return cache;
}

const Ctx& ctx(const std::string& spec) {
  auto& cache = ctx_cache();
  auto it = cache.find(spec);
  if (it == cache.end()) it = cache.emplace(spec, make_ctx(spec)).first;
  return it->second;
}

// enumerations shared across criteria (criterion 7 reuses criterion 2's)
const TsLattice& enumerated(const std::string& spec) {
  static std::map<std::string, TsLattice> cache;
  auto it = cache.find(spec);
  if (it == cache.end()) {
    const Ctx& c = ctx(spec);
    it = cache.emplace(spec, enumerate_all(c.lattice, c.action)).first;
  }
  return it->second;
}

// --------------------------------------------------------------------------
// criteria

void criterion_catalan(Checker& ck) {
  const int expected[] = {2, 5, 14, 42};
  const char* specs[] = {"C:2", "C:4", "C:8", "C:16"};
  for (int i = 0; i < 4; ++i)
    ck.expect_eq(enumerated(specs[i]).count(), expected[i],
                 std::string("|TS(") + specs[i] + ")|");
}

void criterion_counts(Checker& ck) {
  ck.expect_eq(enumerated("D:9").count(), 56, "|TS(D_9)|");
  ck.expect_eq(enumerated("Dic:3").count(), 62, "|TS(Dic_3)|");
  ck.expect_eq(enumerated("F:5").count(), 59, "|TS(F_5)|");
  ck.expect_eq(enumerated("D:5").count(), 9, "|TS(D_5)|");
  ck.expect_eq(enumerated("C:15").count(), 10, "|TS(C_15)|");
  ck.expect_eq(enumerated("D:5").count(), enumerated("C:15").count() - 1,
               "one fewer D_p system than C_pq systems");
}

void criterion_a4(Checker& ck) {
  ck.expect_eq(enumerated("A:4").count(), 20, "|TS(A_4)|");
}

void criterion_width_theorems(Checker& ck) {
  auto w36 = width(ctx("D:36").group);
  ck.expect_eq(w36.width, 7, "w(D_36)");
  std::multiset<std::string> labels(w36.class_labels.begin(), w36.class_labels.end());
  ck.expect(labels == std::multiset<std::string>{"C_36", "D_12", "D_4", "D_18",
                                                 "D_18", "D_9", "D_9"},
            "D_36 generating set classes");

  ck.expect_eq(width(ctx("Q:8").group).width, 4, "w(Q_8)");
  for (int m = 1; m <= 3; ++m) {
    int order = 1 << (m + 2);
    ck.expect_eq(width(build_group("Q:" + std::to_string(order))).width, 2 * m + 2,
                 "w(Q_" + std::to_string(order) + ")");
  }
  for (int n = 2; n <= 50; ++n) {
    auto g = build_group("D:" + std::to_string(n));
    ck.expect_eq(width(g).width, width_formula(GroupSpec::Family::Dihedral, n),
                 "w(D_" + std::to_string(n) + ") vs closed form");
  }
  for (int n = 2; n <= 25; ++n) {
    auto g = build_group("Dic:" + std::to_string(n));
    ck.expect_eq(width(g).width, width_formula(GroupSpec::Family::Dicyclic, n),
                 "w(Dic_" + std::to_string(n) + ") vs closed form");
  }
  ck.expect_eq(width(build_group("Dic:18")).width, 6, "w(Dic_18)");
}

void criterion_frobenius(Checker& ck) {
  const std::pair<int, int> rows[] = {{5, 3},  {7, 3},  {8, 3},  {9, 5},
                                      {11, 3}, {13, 4}, {16, 5}, {17, 5}};
  for (auto [q, w] : rows) {
    auto g = build_group("F:" + std::to_string(q), BuildOptions{400});
    ck.expect_eq(width(g).width, w, "w(F_" + std::to_string(q) + ")");
  }
}

void criterion_abelian_widths(Checker& ck) {
  for (int n = 1; n <= 5; ++n)
    ck.expect_eq(width(build_group("C:" + std::to_string(1 << n))).width, n,
                 "w(C_2^" + std::to_string(n) + ")");
  int p3 = 1;
  for (int n = 1; n <= 3; ++n) {
    p3 *= 3;
    ck.expect_eq(width(build_group("C:" + std::to_string(p3))).width, n,
                 "w(C_3^" + std::to_string(n) + ")");
  }
  ck.expect_eq(width(build_group("C:12")).width, 3, "w(C_12)");
  ck.expect_eq(width(build_group("C:24")).width, 4, "w(C_24)");
  ck.expect_eq(width(build_group("C:18")).width, 3, "w(C_18)");
  ck.expect_eq(width(build_group("C:30")).width, 3, "w(C_30)");
}

void criterion_shortest_paths(Checker& ck) {
  const std::pair<const char*, int> rows[] = {{"C:9", 2},   {"C:15", 4}, {"A:4", 6},
                                              {"D:9", 7},   {"Dic:3", 7}, {"F:5", 8}};
  for (auto [spec, expected] : rows) {
    int got = hasse_stats(enumerated(spec)).shortest_path_length;
    ck.expect_eq(got, expected, std::string("shortest path ") + spec);
    if (std::string(spec) == "F:5" && got != expected)
      ck.note("the F:5 expectation of 8 is reproducible only on a rendering of the "
              "59-system lattice that omits 14 of its covering edges; the full "
              "diagram gives 7 (see README, known red)");
  }
}

void criterion_oracle(Checker& ck) {
  for (const char* spec : {"C:2", "C:3", "C:4", "C:6", "C:8", "Q:8"}) {
    const Ctx& c = ctx(spec);
    if (c.lattice.size > 6) {
      ck.expect(false, std::string(spec) + " exceeds the oracle size");
      continue;
    }
    auto fast = enumerate_all(c.lattice, c.action, {20, false, false});
    auto slow = brute_force_oracle(c.lattice, c.action);
    bool equal = fast.count() == slow.count();
    for (int i = 0; equal && i < fast.count(); ++i)
      equal = fast.systems[i].rel == slow.systems[i].rel;
    ck.expect(equal, std::string("oracle equivalence on ") + spec);
  }
}

void criterion_axiom_properties(Checker& ck) {
  // 1000 random generated systems per golden lattice pass validate
  std::mt19937 rng(0x5eed);
  for (const char* spec : {"C:9", "C:15", "D:3", "D:5", "D:9", "Dic:3", "F:5", "A:4", "Q:8"}) {
    const Ctx& c = ctx(spec);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      auto ts = generate(c.lattice, c.action, translat::testing::random_edges(c.lattice, rng));
      if (!validate(c.lattice, c.action, ts.rel).empty()) ++bad;
    }
    ck.expect_eq(bad, 0, std::string("invalid closures on ") + spec);
  }
  // idempotence and generating-set round trip over the criterion-2 systems
  for (const char* spec : {"D:9", "Dic:3", "F:5", "D:5", "C:15"}) {
    const Ctx& c = ctx(spec);
    const auto& tsl = enumerated(spec);
    int idem_bad = 0, round_bad = 0, minimal_bad = 0;
    for (const auto& ts : tsl.systems) {
      if (!(generate(c.lattice, c.action, nonreflexive_edges(ts)).rel == ts.rel)) ++idem_bad;
      auto mgs = minimal_generating_set(c.lattice, c.action, ts);
      if (!(generate(c.lattice, c.action, mgs).rel == ts.rel)) ++round_bad;
      for (size_t skip = 0; skip < mgs.size(); ++skip) {
        EdgeSet smaller;
        for (size_t i = 0; i < mgs.size(); ++i)
          if (i != skip) smaller.push_back(mgs[i]);
        if (generate(c.lattice, c.action, smaller).rel == ts.rel) ++minimal_bad;
      }
    }
    ck.expect_eq(idem_bad, 0, std::string("closure idempotence failures on ") + spec);
    ck.expect_eq(round_bad, 0, std::string("generating-set round-trip failures on ") + spec);
    ck.expect_eq(minimal_bad, 0, std::string("non-minimal generating sets on ") + spec);
  }
}

struct FigureRow {
  std::vector<std::pair<std::string, std::string>> class_edges;
  bool saturated, cosaturated, lsp, connected;
};

void check_figure(Checker& ck, const std::string& spec,
                  const std::vector<FigureRow>& rows) {
  const Ctx& c = ctx(spec);
  const auto& tsl = enumerated(spec);
  ck.expect_eq(tsl.count(), int(rows.size()), spec + " figure node count");
  std::set<int> seen;
  for (size_t r = 0; r < rows.size(); ++r) {
    EdgeSet edges = edges_by_label(c.lattice, rows[r].class_edges);
    BitMatrix rel(c.lattice.size);
    for (int i = 0; i < c.lattice.size; ++i) rel.set(i, i);
    for (const Edge& e : edges) rel.set(e.lo, e.hi);
    auto ts = wrap_relation(c.lattice, std::move(rel));
    int idx = tsl.find(ts);
    std::string tag = spec + " figure row " + std::to_string(r);
    if (idx < 0) {
      ck.expect(false, tag + " is not an enumerated system");
      continue;
    }
    seen.insert(idx);
    const auto& d = tsl.decorations[idx];
    ck.expect_eq(d.saturated, rows[r].saturated, tag + " saturated");
    ck.expect_eq(d.cosaturated, rows[r].cosaturated, tag + " cosaturated");
    ck.expect_eq(d.lsp, rows[r].lsp, tag + " lsp");
    ck.expect_eq(d.connected, rows[r].connected, tag + " connected");
  }
  ck.expect_eq(int(seen.size()), int(rows.size()), spec + " figure rows distinct");
}

void criterion_decorations(Checker& ck) {
  // C_9 = C_{p^2} at p = 3: five systems
  check_figure(ck, "C:9",
               {
                   {{}, true, true, false, false},                       // trivial
                   {{{"e", "C_3"}}, true, false, false, false},
                   {{{"C_3", "C_9"}}, true, true, true, false},
                   {{{"e", "C_3"}, {"e", "C_9"}}, false, true, true, true},
                   {{{"e", "C_3"}, {"e", "C_9"}, {"C_3", "C_9"}}, true, true, true, true},
               });
  // D_3 = D_p at p = 3: nine systems
  check_figure(
      ck, "D:3",
      {
          {{}, true, true, false, false},                                // trivial
          {{{"e", "C_3"}}, true, false, false, false},
          {{{"e", "C_2"}}, true, false, false, false},
          {{{"e", "C_2"}, {"e", "C_3"}}, true, false, false, false},
          {{{"e", "C_2"}, {"C_3", "D_3"}}, true, true, true, false},
          {{{"e", "C_2"}, {"e", "C_3"}, {"e", "D_3"}}, false, true, true, true},
          {{{"e", "C_2"}, {"e", "C_3"}, {"e", "D_3"}, {"C_3", "D_3"}}, false, true, true, true},
          {{{"e", "C_2"}, {"e", "C_3"}, {"e", "D_3"}, {"C_2", "D_3"}}, false, true, true, true},
          {{{"e", "C_2"}, {"e", "C_3"}, {"e", "D_3"}, {"C_2", "D_3"}, {"C_3", "D_3"}},
           true, true, true, true},
      });
}

void criterion_structural(Checker& ck) {
  for (const char* spec :
       {"D:3", "D:4", "D:5", "D:9", "D:36", "Q:8", "Q:16", "Dic:3", "Dic:5", "A:4",
        "C:12", "C:30"})
    ck.expect(is_lossless(ctx(spec).group), std::string("lossless ") + spec);

  const Ctx& a4 = ctx("A:4");
  auto pentagon = lattice_from_quotient(quotient(a4.lattice, a4.action));
  ck.expect(!is_modular(pentagon), "A_4 quotient lattice is non-modular");
  for (const char* spec : {"C:9", "C:12", "C:16", "C:30"})
    ck.expect(is_modular(ctx(spec).lattice), std::string("modular Sub(") + spec + ")");
}

// Independent re-verification of a flagged conjecture counterexample:
// recomputes the two-component hypothesis and scans the compatibility
// condition directly, without the audited code paths.
bool verify_counterexample(const Ctx& c, const TsLattice& tsl, const LspAuditEntry& e) {
  const Lattice& l = c.lattice;
  const TransferSystem& ts = tsl.systems[e.system_index];
  if (l.bottom == l.top) return false;

  // hypothesis: top isolated; non-isolated vertices form one component
  // containing bottom (isolated vertices count toward the bottom side)
  auto edges = nonreflexive_edges(ts);
  std::vector<int> comp(l.size);
  for (int i = 0; i < l.size; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  std::vector<bool> isolated(l.size, true);
  for (const Edge& edge : edges) {
    isolated[edge.lo] = isolated[edge.hi] = false;
    comp[find(edge.lo)] = find(edge.hi);
  }
  if (!isolated[l.top]) return false;
  std::set<int> nontrivial;
  for (int v = 0; v < l.size; ++v)
    if (!isolated[v]) nontrivial.insert(find(v));
  if (nontrivial.size() > 1) return false;
  if (nontrivial.size() == 1 && isolated[l.bottom]) return false;

  // claim (a): not LSP -- must hold for the entry to match the audit
  if (e.lsp) return false;

  // claim (b) failure: direct scan of the pair condition against the
  // closure of T plus bottom -> top
  EdgeSet ext = edges;
  ext.push_back({uint16_t(l.bottom), uint16_t(l.top)});
  TransferSystem bigger = generate(l, c.action, ext);
  if (!ts.rel.subset_of(bigger.rel)) return false;
  for (int b = 0; b < l.size; ++b)
    for (int av = 0; av < l.size; ++av) {
      if (!ts.edge(b, av)) continue;
      for (int cc = 0; cc < l.size; ++cc) {
        if (!l.leq(cc, av)) continue;
        if (bigger.edge(l.meet_of(b, cc), b) && !bigger.edge(cc, av))
          return true;  // genuine failure witness
      }
    }
  return false;
}

void criterion_audits(Checker& ck) {
  const char* golden[] = {"C:9", "C:15", "D:3", "D:5", "D:9", "Dic:3", "F:5", "A:4"};
  const std::set<std::string> small_expect_none = {"C:9", "C:15", "D:3", "D:5"};
  for (const char* spec : golden) {
    const Ctx& c = ctx(spec);
    const auto& tsl = enumerated(spec);
    auto lsp_audit = audit_lsp_two_component(c.lattice, c.action, tsl);
    auto path_audit = audit_bisaturated_paths(tsl);
    {
      std::ostringstream os;
      os << spec << ": shortest=" << path_audit.shortest_length << " ("
         << path_audit.shortest_path_count
         << " paths), max bisaturated on shortest=" << path_audit.max_bisaturated_on_shortest_path
         << ", on any monotone path=" << path_audit.max_bisaturated_on_any_path
         << (path_audit.readings_agree ? " (agree)" : " (differ)");
      ck.note(os.str());
    }
    if (small_expect_none.count(spec)) {
      ck.expect_eq(int(lsp_audit.counterexamples.size()), 0,
                   std::string("counterexamples on ") + spec);
      continue;
    }
    // larger lattices: every reported counterexample must be genuine
    for (const auto& entry : lsp_audit.counterexamples) {
      bool genuine = verify_counterexample(c, tsl, entry);
      ck.expect(genuine, std::string("unverified counterexample on ") + spec +
                             " system " + std::to_string(entry.system_index));
      if (genuine)
        ck.note(std::string(spec) + ": system " + std::to_string(entry.system_index) +
                " satisfies the two-component hypothesis, is not LSP, but is NOT "
                "compatible with its bottom->top extension (independently verified)");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  struct Entry {
    int id;
    const char* name;
    std::function<void(Checker&)> run;
  };
  const std::vector<Entry> criteria = {
      {1, "Catalan counts for cyclic 2-groups", criterion_catalan},
      {2, "transfer-system counts (D_9, Dic_3, F_5, D_5, C_15)", criterion_counts},
      {3, "A_4 count", criterion_a4},
      {4, "width theorems (dihedral, quaternion, dicyclic)", criterion_width_theorems},
      {5, "Frobenius width table", criterion_frobenius},
      {6, "abelian widths", criterion_abelian_widths},
      {7, "shortest path lengths", criterion_shortest_paths},
      {8, "oracle equivalence on small lattices", criterion_oracle},
      {9, "axiom and generating-set properties", criterion_axiom_properties},
      {10, "decoration fidelity (C_9, D_3)", criterion_decorations},
      {11, "lossless and modularity facts", criterion_structural},
      {12, "conjecture audits on the golden set", criterion_audits},
  };

  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (const auto& entry : criteria) {
    if (only && entry.id != only) continue;
    Checker ck;
    auto start = std::chrono::steady_clock::now();
    try {
      entry.run(ck);
    } catch (const std::exception& e) {
      ck.failures.push_back(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("criterion %2d %s  %s (%lld ms)\n", entry.id,
                ck.failures.empty() ? "PASS" : "FAIL", entry.name,
                static_cast<long long>(ms));
    for (const auto& note : ck.notes) std::printf("    note: %s\n", note.c_str());
    for (const auto& f : ck.failures) std::printf("    failure: %s\n", f.c_str());
    if (!ck.failures.empty()) ++failed;
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed ? 1 : 0;
}
