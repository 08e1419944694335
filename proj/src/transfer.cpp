#include "translat/transfer.hpp"

#include <algorithm>

namespace translat {

std::string AxiomViolation::describe(const Lattice& l) const {
  auto name = [&](int i) { return i >= 0 ? l.labels[i] : std::string("?"); };
  switch (axiom) {
    case Axiom::Subgroup:
      return "subgroup: edge " + name(a) + " -> " + name(b) + " but " + name(a) +
             " is not below " + name(b);
    case Axiom::Reflexivity:
      return "reflexivity: missing " + name(a) + " -> " + name(a);
    case Axiom::Composition:
      return "composition: " + name(a) + " -> " + name(b) + " and " + name(b) +
             " -> " + name(c) + " without " + name(a) + " -> " + name(c);
    case Axiom::Restriction:
      return "restriction: " + name(a) + " -> " + name(b) + " restricted by " +
             name(c) + " is missing";
    case Axiom::Conjugation:
      return "conjugation: image of " + name(a) + " -> " + name(b) +
             " under generator " + std::to_string(c) + " is missing";
  }
  return {};
}

std::vector<AxiomViolation> validate(const Lattice& l, const LatticeAction& a,
                                     const BitMatrix& rel) {
  if (rel.dim() != l.size) throw DomainError("relation dimension mismatch");
  std::vector<AxiomViolation> out;
  int n = l.size;

  for (int k = 0; k < n; ++k)
    rel.for_each_in_row(k, [&](int h) {
      if (!l.leq(k, h)) out.push_back({Axiom::Subgroup, k, h, -1});
    });
  for (int x = 0; x < n; ++x)
    if (!rel.test(x, x)) out.push_back({Axiom::Reflexivity, x, -1, -1});
  for (int low = 0; low < n; ++low)
    rel.for_each_in_row(low, [&](int k) {
      if (k == low) return;
      rel.for_each_in_row(k, [&](int h) {
        if (h != k && !rel.test(low, h))
          out.push_back({Axiom::Composition, low, k, h});
      });
    });
  for (int k = 0; k < n; ++k)
    rel.for_each_in_row(k, [&](int h) {
      if (k == h) return;
      l.down[h].for_each([&](int m) {
        if (!rel.test(l.meet_of(k, m), m))
          out.push_back({Axiom::Restriction, k, h, m});
      });
    });
  for (size_t gi = 0; gi < a.gens.size(); ++gi) {
    const auto& p = a.gens[gi];
    for (int k = 0; k < n; ++k)
      rel.for_each_in_row(k, [&](int h) {
        if (!rel.test(p[k], p[h]))
          out.push_back({Axiom::Conjugation, k, h, int(gi)});
      });
  }
  return out;
}

TransferSystem trivial_system(const Lattice& l) {
  BitMatrix rel(l.size);
  for (int i = 0; i < l.size; ++i) rel.set(i, i);
  return TransferSystem{l.hash, std::move(rel)};
}

TransferSystem complete_system(const Lattice& l) {
  BitMatrix rel(l.size);
  for (int a = 0; a < l.size; ++a)
    l.up[a].for_each([&](int b) { rel.set(a, b); });
  return TransferSystem{l.hash, std::move(rel)};
}

TransferSystem wrap_relation(const Lattice& l, BitMatrix rel) {
  if (rel.dim() != l.size) throw DomainError("relation dimension mismatch");
  return TransferSystem{l.hash, std::move(rel)};
}

TransferSystem close_relation(const Lattice& l, const LatticeAction& a, BitMatrix rel) {
  int n = l.size;
  if (rel.dim() != n) throw DomainError("relation dimension mismatch");
  for (int i = 0; i < n; ++i) {
    auto row = rel.row(i);
    auto up = l.up[i].words();
    for (size_t w = 0; w < row.size(); ++w)
      if (row[w] & ~up[w]) throw DomainError("relation has an edge against the order");
  }
  for (int i = 0; i < n; ++i) rel.set(i, i);

  bool changed = true;
  while (changed) {
    changed = false;

    // conjugation
    bool conj_changed = true;
    while (conj_changed) {
      conj_changed = false;
      for (const auto& p : a.gens)
        for (int k = 0; k < n; ++k)
          rel.for_each_in_row(k, [&](int h) {
            if (rel.test_set(p[k], p[h])) conj_changed = true;
          });
      changed |= conj_changed;
    }

    // restriction: k -> h and m <= h give (k ^ m) -> m
    for (int k = 0; k < n; ++k)
      rel.for_each_in_row(k, [&](int h) {
        if (k == h) return;
        l.down[h].for_each([&](int m) {
          if (rel.test_set(l.meet_of(k, m), m)) changed = true;
        });
      });

    // composition: one sweep against the topological order closes a
    // relation contained in <=
    for (int i = n - 1; i >= 0; --i) {
      int k = l.topo[i];
      rel.for_each_in_row(k, [&](int h) {
        if (h != k && rel.row_or(k, h)) changed = true;
      });
    }
  }
  return TransferSystem{l.hash, std::move(rel)};
}

TransferSystem generate(const Lattice& l, const LatticeAction& a, const EdgeSet& edges) {
  BitMatrix rel(l.size);
  for (const Edge& e : edges) {
    if (e.lo >= l.size || e.hi >= l.size || !l.leq(e.lo, e.hi))
      throw DomainError("malformed edge: source is not below target");
    rel.set(e.lo, e.hi);
  }
  return close_relation(l, a, std::move(rel));
}

EdgeSet nonreflexive_edges(const TransferSystem& ts) {
  EdgeSet out;
  for (int k = 0; k < ts.dim(); ++k)
    ts.rel.for_each_in_row(k, [&](int h) {
      if (h != k) out.push_back({uint16_t(k), uint16_t(h)});
    });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

EdgeSet greedy_minimize(const Lattice& l, const LatticeAction& a,
                        const TransferSystem& ts, EdgeSet candidates) {
  for (size_t i = 0; i < candidates.size();) {
    EdgeSet trial;
    trial.reserve(candidates.size() - 1);
    for (size_t j = 0; j < candidates.size(); ++j)
      if (j != i) trial.push_back(candidates[j]);
    if (generate(l, a, trial).rel == ts.rel)
      candidates = std::move(trial);
    else
      ++i;
  }
  return candidates;
}

}  // namespace

EdgeSet minimal_generating_set(const Lattice& l, const LatticeAction& a,
                               const TransferSystem& ts) {
  return greedy_minimize(l, a, ts, nonreflexive_edges(ts));
}

EdgeSet minimal_generating_set_orbitwise(const Lattice& l, const LatticeAction& a,
                                         const TransferSystem& ts) {
  EdgeSet reps;
  std::vector<bool> seen(a.pair_orbits.size(), false);
  for (const Edge& e : nonreflexive_edges(ts)) {
    int orb = a.pair_orbit(e.lo, e.hi, l.size);
    if (!seen[orb]) {
      seen[orb] = true;
      auto rep = a.pair_orbits[orb].rep;
      reps.push_back({rep.first, rep.second});
    }
  }
  std::sort(reps.begin(), reps.end());
  return greedy_minimize(l, a, ts, std::move(reps));
}

bool is_saturated(const Lattice& l, const TransferSystem& ts) {
  int n = l.size;
  for (int low = 0; low < n; ++low)
    for (int h = 0; h < n; ++h) {
      if (low == h || !ts.edge(low, h)) continue;
      Bitset between = l.up[low] & l.down[h];
      bool ok = true;
      between.for_each([&](int k) {
        if (!ts.edge(k, h)) ok = false;
      });
      if (!ok) return false;
    }
  return true;
}

TransferSystem saturated_hull(const Lattice& l, const LatticeAction& a,
                              const TransferSystem& ts) {
  TransferSystem cur = ts;
  while (true) {
    BitMatrix next = cur.rel;
    bool added = false;
    for (int low = 0; low < l.size; ++low)
      cur.rel.for_each_in_row(low, [&](int h) {
        if (low == h) return;
        (l.up[low] & l.down[h]).for_each([&](int k) {
          if (next.test_set(k, h)) added = true;
        });
      });
    if (!added) break;
    cur = close_relation(l, a, std::move(next));
  }
  return cur;
}

bool is_cosaturated(const Lattice& l, const LatticeAction& a, const TransferSystem& ts) {
  EdgeSet top_edges;
  for (int h = 0; h < l.size; ++h)
    if (h != l.top && ts.edge(h, l.top)) top_edges.push_back({uint16_t(h), uint16_t(l.top)});
  return generate(l, a, top_edges).rel == ts.rel;
}

bool is_connected(const Lattice& l, const TransferSystem& ts) {
  return ts.edge(l.bottom, l.top);
}

bool compatible(const Lattice& l, const TransferSystem& t1, const TransferSystem& t2) {
  if (t1.lattice_hash != t2.lattice_hash)
    throw DomainError("compatible: transfer systems on different lattices");
  if (!t1.rel.subset_of(t2.rel)) return false;
  int n = l.size;
  for (int b = 0; b < n; ++b)
    for (int top = 0; top < n; ++top) {
      if (!t1.edge(b, top)) continue;
      bool ok = true;
      l.down[top].for_each([&](int c) {
        if (ok && t2.edge(l.meet_of(b, c), b) && !t2.edge(c, top)) ok = false;
      });
      if (!ok) return false;
    }
  return true;
}

bool is_lsp(const Lattice& l, const LatticeAction& a, const TransferSystem& ts,
            const std::vector<TransferSystem>& all_systems) {
  bool found_self = false, found_trivial = false, found_complete = false;
  TransferSystem complete = complete_system(l);
  TransferSystem trivial = trivial_system(l);
  for (const auto& t : all_systems) {
    if (t.lattice_hash != ts.lattice_hash)
      throw DomainError("is_lsp: enumeration is for a different lattice");
    found_self |= t.rel == ts.rel;
    found_trivial |= t.rel == trivial.rel;
    found_complete |= t.rel == complete.rel;
  }
  if (!found_self || !found_trivial || !found_complete)
    throw DomainError("is_lsp: incomplete enumeration supplied");

  TransferSystem hull = saturated_hull(l, a, ts);
  for (const auto& t : all_systems) {
    if (t.rel == hull.rel || t.rel == complete.rel) continue;
    if (compatible(l, ts, t)) return false;
  }
  return true;
}

BitMatrix project_to_quotient(const Lattice& l, const QuotientPoset& q,
                              const TransferSystem& ts) {
  int nc = q.num_classes();
  BitMatrix out(nc);
  for (int k = 0; k < l.size; ++k)
    ts.rel.for_each_in_row(k, [&](int h) { out.set(q.class_of[k], q.class_of[h]); });
  return out;
}

bool lift_check(const FiniteGroup& g, const SubgroupLattice& sl,
                const QuotientPoset& q, const BitMatrix& class_rel) {
  if (!is_lossless(g))
    throw DomainError("lift criterion only applies to lossless groups");
  int nc = q.num_classes();
  if (class_rel.dim() != nc) throw DomainError("class relation dimension mismatch");
  for (int ck = 0; ck < nc; ++ck)
    for (int ch = 0; ch < nc; ++ch) {
      if (ck == ch || !class_rel.test(ck, ch)) continue;
      if (!q.order.test(ck, ch))
        throw DomainError("class relation is not contained in the quotient order");
      int h = q.classes[ch][0];
      for (int k1 : q.classes[ck]) {
        if (!sl.lattice.leq(k1, h)) continue;
        for (int k2 : q.classes[ck]) {
          if (!sl.lattice.leq(k2, h)) continue;
          int m = sl.lattice.meet_of(k1, k2);
          if (!class_rel.test(q.class_of[m], ch)) return false;
        }
      }
    }
  return true;
}

}  // namespace translat
