#include "translat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace translat {

namespace {

void build_order_caches(Lattice& l, const BitMatrix& leq) {
  int n = l.size;
  l.up.assign(n, Bitset(n));
  l.down.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq.test(a, b)) {
        l.up[a].set(b);
        l.down[b].set(a);
      }
  l.topo.resize(n);
  std::iota(l.topo.begin(), l.topo.end(), 0);
  std::stable_sort(l.topo.begin(), l.topo.end(),
                   [&](int a, int b) { return l.down[a].count() < l.down[b].count(); });
}

void check_partial_order(const BitMatrix& leq) {
  int n = leq.dim();
  for (int a = 0; a < n; ++a) {
    if (!leq.test(a, a)) throw DomainError("order is not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && leq.test(a, b) && leq.test(b, a))
        throw DomainError("order is not antisymmetric");
      if (!leq.test(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (leq.test(b, c) && !leq.test(a, c))
          throw DomainError("order is not transitive");
    }
  }
}

}  // namespace

Lattice lattice_from_order(const BitMatrix& leq, std::vector<std::string> labels) {
  int n = leq.dim();
  if (n == 0) throw DomainError("empty order");
  if (int(labels.size()) != n) throw DomainError("label count mismatch");
  check_partial_order(leq);

  Lattice l;
  l.size = n;
  l.labels = std::move(labels);
  build_order_caches(l, leq);

  int bottom = -1, top = -1;
  for (int a = 0; a < n; ++a) {
    if (l.up[a].count() == n) bottom = a;
    if (l.down[a].count() == n) top = a;
  }
  if (bottom < 0 || top < 0)
    throw DomainError("order has no unique bottom or top");
  l.bottom = bottom;
  l.top = top;

  l.meet.resize(size_t(n) * n);
  l.join.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Bitset lower = l.down[a] & l.down[b];
      int glb = -1;
      lower.for_each([&](int c) {
        if (lower.subset_of(l.down[c])) glb = c;
      });
      if (glb < 0) throw DomainError("pair without a meet: not a lattice");
      l.meet[size_t(a) * n + b] = uint16_t(glb);

      Bitset upper = l.up[a] & l.up[b];
      int lub = -1;
      upper.for_each([&](int c) {
        if (upper.subset_of(l.up[c])) lub = c;
      });
      if (lub < 0) throw DomainError("pair without a join: not a lattice");
      l.join[size_t(a) * n + b] = uint16_t(lub);
    }
  return l;
}

uint64_t structure_hash(const Lattice& l, const LatticeAction& a) {
  uint64_t h = fnv1a64(&l.size, sizeof(l.size));
  for (const auto& row : l.up)
    h = fnv1a64(row.words().data(), row.words().size() * sizeof(uint64_t), h);
  for (const auto& perm : a.gens)
    h = fnv1a64(perm.data(), perm.size() * sizeof(uint16_t), h);
  return h;
}

void seal(Lattice& l, const LatticeAction& a) {
  l.source.clear();
  l.hash = structure_hash(l, a);
}

LatticeAction make_action(const Lattice& l, std::vector<std::vector<uint16_t>> gens) {
  int n = l.size;
  for (const auto& p : gens) {
    if (int(p.size()) != n) throw DomainError("action permutation has wrong size");
    std::vector<bool> hit(n, false);
    for (uint16_t v : p) {
      if (v >= n || hit[v]) throw DomainError("action generator is not a permutation");
      hit[v] = true;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (l.leq(a, b) != l.leq(p[a], p[b]))
          throw DomainError("action generator does not preserve the order");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (p[l.meet_of(a, b)] != l.meet_of(p[a], p[b]))
          throw DomainError("action generator does not commute with meet");
        if (p[l.join_of(a, b)] != l.join_of(p[a], p[b]))
          throw DomainError("action generator does not commute with join");
      }
  }

  LatticeAction act;
  act.gens = std::move(gens);
  act.orbit_of.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (act.orbit_of[s] >= 0) continue;
    int id = int(act.orbits.size());
    std::vector<int> members = {s};
    act.orbit_of[s] = id;
    for (size_t i = 0; i < members.size(); ++i)
      for (const auto& p : act.gens) {
        int t = p[members[i]];
        if (act.orbit_of[t] < 0) {
          act.orbit_of[t] = id;
          members.push_back(t);
        }
      }
    std::sort(members.begin(), members.end());
    act.orbits.push_back(std::move(members));
  }

  act.pair_orbit_id.assign(size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !l.leq(a, b)) continue;
      if (act.pair_orbit_id[size_t(a) * n + b] >= 0) continue;
      int id = int(act.pair_orbits.size());
      LatticeAction::PairOrbit orb;
      std::vector<std::pair<uint16_t, uint16_t>> queue = {{uint16_t(a), uint16_t(b)}};
      act.pair_orbit_id[size_t(a) * n + b] = id;
      for (size_t i = 0; i < queue.size(); ++i)
        for (const auto& p : act.gens) {
          std::pair<uint16_t, uint16_t> img{p[queue[i].first], p[queue[i].second]};
          int& slot = act.pair_orbit_id[size_t(img.first) * n + img.second];
          if (slot < 0) {
            slot = id;
            queue.push_back(img);
          }
        }
      std::sort(queue.begin(), queue.end());
      orb.rep = queue.front();
      orb.pairs = std::move(queue);
      act.pair_orbits.push_back(std::move(orb));
    }
  return act;
}

LatticeAction identity_action(const Lattice& l) {
  return make_action(l, {});
}

SubgroupLattice from_subgroups(const FiniteGroup& g) {
  auto subs = enumerate_subgroups(g);
  int n = int(subs.size());

  BitMatrix leq(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (subs[a].members.subset_of(subs[b].members)) leq.set(a, b);

  std::unordered_map<uint64_t, std::vector<int>> by_hash;
  for (int i = 0; i < n; ++i) by_hash[subs[i].members.hash()].push_back(i);
  auto find = [&](const Bitset& b) {
    for (int idx : by_hash[b.hash()])
      if (subs[idx].members == b) return idx;
    return -1;
  };

  Lattice l;
  l.size = n;
  l.labels = subgroup_labels(g, subs);
  build_order_caches(l, leq);
  l.bottom = 0;
  l.top = n - 1;
  l.meet.resize(size_t(n) * n);
  l.join.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = find(subs[a].members & subs[b].members);
      if (m < 0) throw DomainError("intersection of subgroups missing");
      l.meet[size_t(a) * n + b] = uint16_t(m);
      // join = least subgroup containing both; canonical order is by
      // size, so the first hit in index order is it
      Bitset both = subs[a].members | subs[b].members;
      int j = -1;
      for (int c = 0; c < n; ++c)
        if (both.subset_of(subs[c].members)) {
          j = c;
          break;
        }
      l.join[size_t(a) * n + b] = uint16_t(j);
    }

  auto group_gens = small_generating_set(g);
  std::vector<std::vector<uint16_t>> perms;
  for (uint16_t x : group_gens) {
    std::vector<uint16_t> p(n);
    for (int s = 0; s < n; ++s) {
      Bitset image(g.order);
      subs[s].members.for_each([&](int e) { image.set(g.conj(x, e)); });
      int t = find(image);
      if (t < 0) throw DomainError("conjugate subgroup missing");
      p[s] = uint16_t(t);
    }
    perms.push_back(std::move(p));
  }

  SubgroupLattice out;
  out.lattice = std::move(l);
  out.action = make_action(out.lattice, std::move(perms));
  out.subgroups = std::move(subs);
  out.lattice.source = g.spec.str();
  out.lattice.hash = structure_hash(out.lattice, out.action);
  return out;
}

QuotientPoset quotient(const Lattice& l, const LatticeAction& a) {
  QuotientPoset q;
  q.classes = a.orbits;
  q.class_of = a.orbit_of;
  int nc = q.num_classes();
  q.order = BitMatrix(nc);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) {
      int rep = q.classes[j][0];
      for (int x : q.classes[i])
        if (l.leq(x, rep)) {
          q.order.set(i, j);
          break;
        }
    }
  q.labels.resize(nc);
  for (int i = 0; i < nc; ++i) {
    int mult = int(q.classes[i].size());
    const std::string& base = l.labels[q.classes[i][0]];
    q.labels[i] = mult > 1 ? "{}_" + std::to_string(mult) + base : base;
  }
  return q;
}

Lattice lattice_from_quotient(const QuotientPoset& q) {
  return lattice_from_order(q.order, q.labels);
}

bool is_modular(const Lattice& l) {
  int n = l.size;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (l.join_of(a, l.meet_of(c, b)) != l.meet_of(l.join_of(a, c), b))
          return false;
    }
  return true;
}

std::vector<std::pair<int, int>> covering_pairs(const Lattice& l) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b) {
      if (a == b || !l.leq(a, b)) continue;
      if ((l.up[a] & l.down[b]).count() == 2) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> meet_irreducibles(const Lattice& l) {
  std::vector<int> out;
  for (int x = 0; x < l.size; ++x) {
    if (x == l.top) continue;
    auto uppers = (l.up[x]).members();
    bool reducible = false;
    for (size_t i = 0; i < uppers.size() && !reducible; ++i) {
      if (uppers[i] == x) continue;
      for (size_t j = i + 1; j < uppers.size(); ++j) {
        if (uppers[j] == x) continue;
        if (l.meet_of(uppers[i], uppers[j]) == x) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

std::pair<Lattice, LatticeAction> remove_bottom(const Lattice& l,
                                                const LatticeAction& a) {
  if (l.size < 2) throw DomainError("remove_bottom needs at least two elements");
  int n = l.size - 1;
  std::vector<int> keep;
  for (int i = 0; i < l.size; ++i)
    if (i != l.bottom) keep.push_back(i);
  std::vector<int> new_index(l.size, -1);
  for (int i = 0; i < n; ++i) new_index[keep[i]] = i;

  int minima = 0;
  for (int i : keep) {
    Bitset strict = l.down[i];
    strict.reset(i);
    strict.reset(l.bottom);
    if (!strict.any()) ++minima;
  }
  if (minima != 1)
    throw DomainError("removing the bottom leaves no unique minimum");

  BitMatrix leq(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = l.labels[keep[i]];
    for (int j = 0; j < n; ++j)
      if (l.leq(keep[i], keep[j])) leq.set(i, j);
  }
  Lattice out = lattice_from_order(leq, std::move(labels));

  std::vector<std::vector<uint16_t>> gens;
  for (const auto& p : a.gens) {
    std::vector<uint16_t> q(n);
    for (int i = 0; i < n; ++i) q[i] = uint16_t(new_index[p[keep[i]]]);
    gens.push_back(std::move(q));
  }
  LatticeAction act = make_action(out, std::move(gens));
  seal(out, act);
  return {std::move(out), std::move(act)};
}

}  // namespace translat
