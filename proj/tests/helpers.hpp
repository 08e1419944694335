#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "translat/enumeration.hpp"

namespace translat::testing {

struct Ctx {
  FiniteGroup group;
  Lattice lattice;
  LatticeAction action;
  std::vector<Subgroup> subgroups;
};

inline Ctx make_ctx(const std::string& spec, int cap = 200) {
  Ctx ctx;
  ctx.group = build_group(spec, BuildOptions{cap});
  auto sl = from_subgroups(ctx.group);
  ctx.lattice = std::move(sl.lattice);
  ctx.action = std::move(sl.action);
  ctx.subgroups = std::move(sl.subgroups);
  return ctx;
}

// First subgroup index with the given label, -1 if absent.
inline int find_label(const Lattice& l, const std::string& label) {
  for (int i = 0; i < l.size; ++i)
    if (l.labels[i] == label) return i;
  return -1;
}

// All subgroup indices with the given label.
inline std::vector<int> find_all_labels(const Lattice& l, const std::string& label) {
  std::vector<int> out;
  for (int i = 0; i < l.size; ++i)
    if (l.labels[i] == label) out.push_back(i);
  return out;
}

// Edge set from (label, label) pairs; expands to every matching pair
// (lo, hi) with lo below hi.
inline EdgeSet edges_by_label(const Lattice& l,
                              const std::vector<std::pair<std::string, std::string>>& spec) {
  EdgeSet out;
  for (const auto& [lo, hi] : spec)
    for (int a : find_all_labels(l, lo))
      for (int b : find_all_labels(l, hi))
        if (a != b && l.leq(a, b)) out.push_back({uint16_t(a), uint16_t(b)});
  return out;
}

// Uniformly random subset of the comparable non-reflexive pairs.
inline EdgeSet random_edges(const Lattice& l, std::mt19937& rng) {
  EdgeSet out;
  std::bernoulli_distribution coin(0.3);
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      if (a != b && l.leq(a, b) && coin(rng)) out.push_back({uint16_t(a), uint16_t(b)});
  return out;
}

}  // namespace translat::testing
