#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "translat/bits.hpp"
#include "translat/error.hpp"

namespace translat {

bool is_prime(int n);
// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<int, int>> factorize(int n);

/// Parsed form of the group spec grammar:
///   C:<n>  D:<n>  Q:<2^k>  Dic:<n>  F:<q>  A:4  perm:<path>
struct GroupSpec {
  enum class Family { Cyclic, Dihedral, Quaternion, Dicyclic, Frobenius, Alternating, PermGens };

  Family family = Family::Cyclic;
  int param = 1;      // n for C/D/Dic, group order for Q, q for F, 4 for A
  std::string path;   // generator file for perm:<path>

  static GroupSpec parse(const std::string& text);
  std::string str() const;
};

struct BuildOptions {
  int order_cap = 200;
};

/// A finite group as a multiplication table over element indices.
/// Construction normalizes the identity to index 0.
struct FiniteGroup {
  int order = 1;
  std::vector<uint16_t> mul;  // row-major order x order
  uint16_t identity = 0;
  std::vector<uint16_t> inv;
  std::string label;
  GroupSpec spec;

  uint16_t op(int a, int b) const { return mul[size_t(a) * order + b]; }
  uint16_t conj(int g, int x) const { return op(op(g, x), inv[g]); }
  int element_order(int x) const;
};

FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& opts = {});
inline FiniteGroup build_group(const std::string& spec, const BuildOptions& opts = {}) {
  return build_group(GroupSpec::parse(spec), opts);
}

struct Subgroup {
  Bitset members;
  int order() const { return members.count(); }
  bool operator==(const Subgroup&) const = default;
};

// Closure of the given elements under multiplication.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const uint16_t> gens);

/// All subgroups, sorted by (order ascending, then member list). The
/// trivial subgroup is first and the whole group last.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);

// Greedy generating set; at most log2(order) elements.
std::vector<uint16_t> small_generating_set(const FiniteGroup& g);

/// Conjugation viewed as permutations of the subgroup list.
struct ConjugationAction {
  // perms[g][s] = index of g S g^-1 in the subgroup list.
  std::vector<std::vector<uint16_t>> perms;
  std::vector<int> class_of;             // subgroup index -> class id
  std::vector<std::vector<int>> classes; // canonical order (min member first)
};

ConjugationAction conjugation_action(const FiniteGroup& g,
                                     const std::vector<Subgroup>& subs);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

/// True when conjugacy between subgroups of any H is always realized
/// inside N_G(H); quotient-level transfer reasoning is faithful exactly
/// for such groups.
bool is_lossless(const FiniteGroup& g);

/// Display names: recognizable structures get family names (C_n, C_p^k,
/// D_n, Q_n, Dic_n, A_4), anything else falls back to H<order>#<k>.
std::vector<std::string> subgroup_labels(const FiniteGroup& g,
                                         const std::vector<Subgroup>& subs);

}  // namespace translat
