#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "translat/lattice.hpp"

namespace translat {

struct Edge {
  uint16_t lo = 0, hi = 0;
  auto operator<=>(const Edge&) const = default;
};
using EdgeSet = std::vector<Edge>;

/// A reflexive relation rel(k, h) = "k -> h" on a lattice, satisfying
/// the five transfer-system axioms (subgroup, reflexivity, composition,
/// restriction, conjugation).
struct TransferSystem {
  uint64_t lattice_hash = 0;
  BitMatrix rel;

  bool edge(int k, int h) const { return rel.test(k, h); }
  int dim() const { return rel.dim(); }
  int edge_count() const { return rel.count() - rel.dim(); }  // non-reflexive
  uint64_t key() const { return rel.hash(); }
  bool operator==(const TransferSystem&) const = default;
};

enum class Axiom { Subgroup = 1, Reflexivity, Composition, Restriction, Conjugation };

struct AxiomViolation {
  Axiom axiom;
  int a = -1, b = -1, c = -1;  // witness; meaning depends on the axiom
  std::string describe(const Lattice& l) const;
};

/// Empty result iff rel is a transfer system for (l, a). Conjugation is
/// checked on the action generators, which close under the whole group.
std::vector<AxiomViolation> validate(const Lattice& l, const LatticeAction& a,
                                     const BitMatrix& rel);

TransferSystem trivial_system(const Lattice& l);
TransferSystem complete_system(const Lattice& l);

// Wraps a relation known (or about to be checked) to be closed.
TransferSystem wrap_relation(const Lattice& l, BitMatrix rel);

/// Least transfer system containing the edges: inserts reflexives, then
/// iterates conjugation-, restriction- and composition-closure to the
/// fixpoint. Throws on an edge with lo not <= hi.
TransferSystem generate(const Lattice& l, const LatticeAction& a, const EdgeSet& edges);
TransferSystem close_relation(const Lattice& l, const LatticeAction& a, BitMatrix rel);

EdgeSet nonreflexive_edges(const TransferSystem& ts);

/// Deterministic minimal generating set: greedy removal over the
/// non-reflexive edges in canonical (source, target) order.
EdgeSet minimal_generating_set(const Lattice& l, const LatticeAction& a,
                               const TransferSystem& ts);

/// Same minimal size, but scans one representative per conjugation
/// orbit; used by the complexity sweep.
EdgeSet minimal_generating_set_orbitwise(const Lattice& l, const LatticeAction& a,
                                         const TransferSystem& ts);

// l -> h and l <= k <= h imply k -> h.
bool is_saturated(const Lattice& l, const TransferSystem& ts);

/// Smallest saturated transfer system containing ts.
TransferSystem saturated_hull(const Lattice& l, const LatticeAction& a,
                              const TransferSystem& ts);

// Generated by its own edges into the top element.
bool is_cosaturated(const Lattice& l, const LatticeAction& a, const TransferSystem& ts);

// Contains the edge bottom -> top.
bool is_connected(const Lattice& l, const TransferSystem& ts);

/// Compatible pair: t1 within t2, and whenever t1 has B -> A and t2 has
/// B^C -> B (for B, C <= A), t2 must have C -> A.
bool compatible(const Lattice& l, const TransferSystem& t1, const TransferSystem& t2);

/// Lesser simply paired: every compatible partner of ts is its hull or
/// the complete system. `all_systems` must be the full enumeration for
/// this lattice (checked: same hash, contains ts, trivial and complete).
bool is_lsp(const Lattice& l, const LatticeAction& a, const TransferSystem& ts,
            const std::vector<TransferSystem>& all_systems);

/// Class-level image of a transfer system on the quotient poset.
BitMatrix project_to_quotient(const Lattice& l, const QuotientPoset& q,
                              const TransferSystem& ts);

/// Lifting criterion for lossless groups: a class relation lifts iff
/// every class edge [K] -> [H] forces [K ^ K'] -> [H] for each K' <= H
/// conjugate to K. Throws when g is not lossless.
bool lift_check(const FiniteGroup& g, const SubgroupLattice& sl,
                const QuotientPoset& q, const BitMatrix& class_rel);

}  // namespace translat
