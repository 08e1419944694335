#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "translat/bits.hpp"
#include "translat/error.hpp"
#include "translat/group.hpp"

namespace translat {

/// Finite lattice: full order table plus meet/join tables. Indices are
/// expected in a topological order (subgroup lattices sort by order, so
/// a <= b implies index(a) <= index(b); abstract inputs carry `topo`).
struct Lattice {
  int size = 0;
  std::vector<Bitset> up;    // up[i] = { j : i <= j }, includes i
  std::vector<Bitset> down;  // down[i] = { j : j <= i }
  std::vector<uint16_t> meet, join;  // row-major size x size
  int bottom = 0, top = 0;
  std::vector<std::string> labels;
  std::vector<int> topo;   // indices, order-compatible with <=
  uint64_t hash = 0;       // structure hash of (lattice, action)
  std::string source;      // group spec string when derived from one

  bool leq(int a, int b) const { return up[a].test(b); }
  uint16_t meet_of(int a, int b) const { return meet[size_t(a) * size + b]; }
  uint16_t join_of(int a, int b) const { return join[size_t(a) * size + b]; }
};

/// Order-preserving action given by generator permutations, with the
/// induced orbit data on elements and on comparable pairs.
struct LatticeAction {
  struct PairOrbit {
    std::pair<uint16_t, uint16_t> rep;  // lexicographically least pair
    std::vector<std::pair<uint16_t, uint16_t>> pairs;
  };

  std::vector<std::vector<uint16_t>> gens;
  std::vector<int> orbit_of;             // element -> orbit id
  std::vector<std::vector<int>> orbits;  // ordered by least member
  std::vector<PairOrbit> pair_orbits;    // non-reflexive comparable pairs
  std::vector<int> pair_orbit_id;        // size x size, -1 where undefined

  int pair_orbit(int a, int b, int size) const {
    return pair_orbit_id[size_t(a) * size + b];
  }
};

/// Conjugacy classes of lattice elements with the induced class-level
/// order; labels carry multiplicities as {}_nH.
struct QuotientPoset {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  BitMatrix order;
  std::vector<std::string> labels;
  int num_classes() const { return int(classes.size()); }
};

struct SubgroupLattice {
  Lattice lattice;
  LatticeAction action;
  std::vector<Subgroup> subgroups;
};

/// Sub(G) with meet = intersection, join = generated subgroup, and the
/// conjugation action restricted to a small generating set of G.
SubgroupLattice from_subgroups(const FiniteGroup& g);

/// Builds a lattice from an order table: derives meet/join and fails
/// when the order is not a lattice (or has no unique bottom/top).
Lattice lattice_from_order(const BitMatrix& leq, std::vector<std::string> labels);

/// Validates that the permutations preserve the order and commute with
/// meet and join, then computes orbit data.
LatticeAction make_action(const Lattice& l, std::vector<std::vector<uint16_t>> gens);
LatticeAction identity_action(const Lattice& l);

uint64_t structure_hash(const Lattice& l, const LatticeAction& a);
// Recomputes `hash` (and drops `source`); for lattices assembled by hand.
void seal(Lattice& l, const LatticeAction& a);

QuotientPoset quotient(const Lattice& l, const LatticeAction& a);

/// Reads the quotient order back as a lattice (errors when it is not one).
Lattice lattice_from_quotient(const QuotientPoset& q);

// Modular law: a <= b implies a v (c ^ b) = (a v c) ^ b; equivalent to
// the absence of a pentagon sublattice.
bool is_modular(const Lattice& l);

std::vector<std::pair<int, int>> covering_pairs(const Lattice& l);

/// Elements x != top that are not the meet of two strictly larger
/// elements; equivalently, elements with a unique upper cover.
std::vector<int> meet_irreducibles(const Lattice& l);

/// Lattice on everything above the bottom vertex. Fails when the rest
/// has no unique minimum.
std::pair<Lattice, LatticeAction> remove_bottom(const Lattice& l,
                                                const LatticeAction& a);

}  // namespace translat
