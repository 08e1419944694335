#include "translat/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace translat {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int FiniteGroup::element_order(int x) const {
  int e = 1, y = x;
  while (y != identity) {
    y = op(y, x);
    ++e;
  }
  return e;
}

// ---------------------------------------------------------------------------
// Spec parsing

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw DomainError("group spec needs the form <family>:<param>: " + text);
  std::string tag = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  GroupSpec spec;
  if (tag == "perm") {
    if (rest.empty()) throw DomainError("perm: needs a file path");
    spec.family = Family::PermGens;
    spec.path = rest;
    return spec;
  }
  int value = 0;
  try {
    size_t pos = 0;
    value = std::stoi(rest, &pos);
    if (pos != rest.size()) throw std::invalid_argument(rest);
  } catch (const std::exception&) {
    throw DomainError("bad numeric parameter in group spec: " + text);
  }
  if (tag == "C")
    spec.family = Family::Cyclic;
  else if (tag == "D")
    spec.family = Family::Dihedral;
  else if (tag == "Q")
    spec.family = Family::Quaternion;
  else if (tag == "Dic")
    spec.family = Family::Dicyclic;
  else if (tag == "F")
    spec.family = Family::Frobenius;
  else if (tag == "A")
    spec.family = Family::Alternating;
  else
    throw DomainError("unknown group family: " + tag);
  spec.param = value;
  return spec;
}

std::string GroupSpec::str() const {
  switch (family) {
    case Family::Cyclic: return "C:" + std::to_string(param);
    case Family::Dihedral: return "D:" + std::to_string(param);
    case Family::Quaternion: return "Q:" + std::to_string(param);
    case Family::Dicyclic: return "Dic:" + std::to_string(param);
    case Family::Frobenius: return "F:" + std::to_string(param);
    case Family::Alternating: return "A:" + std::to_string(param);
    case Family::PermGens: return "perm:" + path;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Construction

namespace {

void check_table(const FiniteGroup& g) {
  int n = g.order;
  for (int a = 0; a < n; ++a) {
    if (g.op(g.identity, a) != a || g.op(a, g.identity) != a)
      throw DomainError("identity is not a two-sided unit");
    if (g.op(a, g.inv[a]) != g.identity || g.op(g.inv[a], a) != g.identity)
      throw DomainError("inverse table broken");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw DomainError("multiplication table is not associative");
}

void fill_inverses(FiniteGroup& g) {
  g.inv.assign(g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    bool found = false;
    for (int b = 0; b < g.order; ++b)
      if (g.op(a, b) == g.identity && g.op(b, a) == g.identity) {
        g.inv[a] = uint16_t(b);
        found = true;
        break;
      }
    if (!found) throw DomainError("element without inverse");
  }
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup g;
  g.order = n;
  g.mul.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[size_t(a) * n + b] = uint16_t((a + b) % n);
  g.label = "C_" + std::to_string(n);
  return g;
}

// Elements 0..n-1 are rotations r^i, n..2n-1 are reflections r^i s.
FiniteGroup dihedral_group(int n) {
  FiniteGroup g;
  int m = 2 * n;
  g.order = m;
  g.mul.resize(size_t(m) * m);
  auto idx = [&](bool refl, int i) { return (refl ? n : 0) + ((i % n + n) % n); };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool ra = a >= n, rb = b >= n;
      int ia = ra ? a - n : a, ib = rb ? b - n : b;
      int r;
      if (!ra && !rb) r = idx(false, ia + ib);
      else if (!ra && rb) r = idx(true, ia + ib);
      else if (ra && !rb) r = idx(true, ia - ib);
      else r = idx(false, ia - ib);
      g.mul[size_t(a) * m + b] = uint16_t(r);
    }
  g.label = "D_" + std::to_string(n);
  return g;
}

// Dic_n = <a, b | a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1>.
// Elements 0..2n-1 are a^i, 2n..4n-1 are a^i b.
FiniteGroup dicyclic_group(int n) {
  FiniteGroup g;
  int two_n = 2 * n, m = 4 * n;
  g.order = m;
  g.mul.resize(size_t(m) * m);
  auto rot = [&](int i) { return (i % two_n + two_n) % two_n; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool fa = a >= two_n, fb = b >= two_n;
      int ia = fa ? a - two_n : a, ib = fb ? b - two_n : b;
      int r;
      if (!fa && !fb) r = rot(ia + ib);
      else if (!fa && fb) r = two_n + rot(ia + ib);
      else if (fa && !fb) r = two_n + rot(ia - ib);
      else r = rot(ia - ib + n);
      g.mul[size_t(a) * m + b] = uint16_t(r);
    }
  g.label = "Dic_" + std::to_string(n);
  return g;
}

struct FieldTables {
  int q = 0;
  std::vector<uint16_t> add, mul;
  int plus(int a, int b) const { return add[size_t(a) * q + b]; }
  int times(int a, int b) const { return mul[size_t(a) * q + b]; }
};

// GF(p^k) with a fixed irreducible polynomial; elements are base-p
// digit strings read as polynomial coefficients.
FieldTables build_field(int q) {
  int p = factorize(q)[0].first;
  int k = 0;
  for (int t = q; t > 1; t /= p) ++k;
  std::vector<int> poly;  // monic irreducible, coefficients c0..ck
  if (q == 4) poly = {1, 1, 1};
  else if (q == 8) poly = {1, 1, 0, 1};
  else if (q == 9) poly = {1, 0, 1};
  else if (q == 16) poly = {1, 1, 0, 0, 1};
  else if (is_prime(q)) poly = {};
  else
    throw DomainError("unsupported Frobenius field size: " + std::to_string(q));

  FieldTables f;
  f.q = q;
  f.add.resize(size_t(q) * q);
  f.mul.resize(size_t(q) * q);
  auto digits = [&](int x) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) d[i] = x % p, x /= p;
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * p + d[i];
    return x;
  };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (poly.empty()) {
        f.add[size_t(a) * q + b] = uint16_t((a + b) % q);
        f.mul[size_t(a) * q + b] = uint16_t((a * b) % q);
        continue;
      }
      auto da = digits(a), db = digits(b);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      f.add[size_t(a) * q + b] = uint16_t(pack(s));
      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 2 * k - 2; d >= k; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        // x^d = -sum c_i x^{i + d - k}
        for (int i = 0; i < k; ++i)
          prod[i + d - k] = ((prod[i + d - k] - c * poly[i]) % p + p * p) % p;
      }
      prod.resize(k);
      f.mul[size_t(a) * q + b] = uint16_t(pack(prod));
    }
  return f;
}

// F_q = GF(q) x| GF(q)^*, realized as affine maps x -> a x + b.
// Element index = (index of a among nonzero field values) * q + b.
FiniteGroup frobenius_group(int q) {
  FieldTables f = build_field(q);
  int n = q * (q - 1);
  std::vector<int> units(q - 1);
  std::iota(units.begin(), units.end(), 1);
  FiniteGroup g;
  g.order = n;
  g.mul.resize(size_t(n) * n);
  auto compose = [&](int e1, int e2) {
    int a1 = units[e1 / q], b1 = e1 % q;
    int a2 = units[e2 / q], b2 = e2 % q;
    int a = f.times(a1, a2);
    int b = f.plus(f.times(a1, b2), b1);
    return (a - 1) * q + b;
  };
  for (int e1 = 0; e1 < n; ++e1)
    for (int e2 = 0; e2 < n; ++e2) g.mul[size_t(e1) * n + e2] = uint16_t(compose(e1, e2));
  g.label = "F_" + std::to_string(q);
  return g;
}

using Perm = std::vector<uint8_t>;

Perm compose_perm(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

FiniteGroup group_from_perms(int points, std::vector<Perm> gens,
                             const std::string& label, int order_cap) {
  Perm id(points);
  std::iota(id.begin(), id.end(), uint8_t{0});
  std::map<Perm, int> seen;
  std::vector<Perm> elems;
  auto push = [&](const Perm& p) {
    if (seen.emplace(p, 0).second) elems.push_back(p);
  };
  push(id);
  for (auto& p : gens) push(p);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gperm : gens) {
      push(compose_perm(elems[i], gperm));
      if (int(elems.size()) > order_cap)
        throw DomainError("permutation group exceeds order cap " +
                          std::to_string(order_cap));
    }
  }
  std::sort(elems.begin(), elems.end());  // identity sorts first
  std::map<Perm, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
  int n = int(elems.size());
  FiniteGroup g;
  g.order = n;
  g.mul.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.mul[size_t(a) * n + b] = uint16_t(index.at(compose_perm(elems[a], elems[b])));
  g.label = label;
  return g;
}

std::vector<Perm> parse_cycle_lines(std::istream& in, int& points) {
  std::vector<std::vector<std::vector<int>>> parsed;  // line -> cycles -> points
  int max_point = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = std::all_of(line.begin(), line.end(),
                             [](unsigned char c) { return std::isspace(c); });
    if (blank) continue;
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(uint8_t(line[i]))) { ++i; continue; }
      if (line[i] != '(') throw DomainError("expected '(' in cycle notation: " + line);
      size_t close = line.find(')', i);
      if (close == std::string::npos) throw DomainError("unclosed cycle: " + line);
      std::istringstream cyc(line.substr(i + 1, close - i - 1));
      std::vector<int> pts;
      std::string tok;
      while (cyc >> tok) {
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        if (tok.empty()) continue;
        int p = 0;
        try { p = std::stoi(tok); } catch (const std::exception&) {
          throw DomainError("bad point in cycle notation: " + tok);
        }
        if (p < 1) throw DomainError("cycle points are 1-based");
        max_point = std::max(max_point, p);
        pts.push_back(p);
      }
      if (!pts.empty()) cycles.push_back(std::move(pts));
      i = close + 1;
    }
    parsed.push_back(std::move(cycles));
  }
  if (parsed.empty()) throw DomainError("no generators in permutation file");
  if (max_point > 255) throw DomainError("at most 255 points are supported");
  points = max_point;
  std::vector<Perm> gens;
  for (auto& cycles : parsed) {
    Perm p(points);
    std::iota(p.begin(), p.end(), uint8_t{0});
    for (auto& cyc : cycles)
      for (size_t j = 0; j < cyc.size(); ++j)
        p[cyc[j] - 1] = uint8_t(cyc[(j + 1) % cyc.size()] - 1);
    gens.push_back(std::move(p));
  }
  return gens;
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& opts) {
  using Family = GroupSpec::Family;
  FiniteGroup g;
  switch (spec.family) {
    case Family::Cyclic:
      if (spec.param < 1) throw DomainError("cyclic parameter must be >= 1");
      g = cyclic_group(spec.param);
      break;
    case Family::Dihedral:
      if (spec.param < 2) throw DomainError("dihedral parameter must be >= 2");
      g = dihedral_group(spec.param);
      break;
    case Family::Quaternion: {
      int k = spec.param;
      if (k < 8 || (k & (k - 1)) != 0)
        throw DomainError("quaternion parameter must be a power of two >= 8");
      g = dicyclic_group(k / 4);
      g.label = "Q_" + std::to_string(k);
      break;
    }
    case Family::Dicyclic:
      if (spec.param < 2) throw DomainError("dicyclic parameter must be >= 2");
      g = dicyclic_group(spec.param);
      break;
    case Family::Frobenius: {
      int q = spec.param;
      bool supported = is_prime(q) || q == 4 || q == 8 || q == 9 || q == 16;
      if (!supported)
        throw DomainError("unsupported Frobenius parameter: " + std::to_string(q));
      g = frobenius_group(q);
      break;
    }
    case Family::Alternating: {
      if (spec.param != 4) throw DomainError("only A:4 is supported");
      std::vector<Perm> gens = {{1, 2, 0, 3}, {1, 0, 3, 2}};  // (123), (12)(34)
      g = group_from_perms(4, gens, "A_4", opts.order_cap);
      break;
    }
    case Family::PermGens: {
      std::ifstream in(spec.path);
      if (!in) throw DomainError("cannot open generator file: " + spec.path);
      int points = 0;
      auto gens = parse_cycle_lines(in, points);
      g = group_from_perms(points, gens, "", opts.order_cap);
      g.label = "G" + std::to_string(g.order);
      break;
    }
  }
  if (g.order > opts.order_cap)
    throw DomainError("group order " + std::to_string(g.order) +
                      " exceeds cap " + std::to_string(opts.order_cap));
  g.identity = 0;
  g.spec = spec;
  fill_inverses(g);
  check_table(g);
  return g;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const uint16_t> gens) {
  Bitset members(g.order);
  members.set(g.identity);
  std::vector<uint16_t> queue = {g.identity};
  auto push = [&](int x) {
    if (!members.test(x)) {
      members.set(x);
      queue.push_back(uint16_t(x));
    }
  };
  for (uint16_t x : gens) push(x);
  for (size_t i = 0; i < queue.size(); ++i)
    for (uint16_t x : gens) push(g.op(queue[i], x));
  return Subgroup{std::move(members)};
}

namespace {

// Greedy generating set for the subgroup with the given members.
std::vector<uint16_t> reduce_generators(const FiniteGroup& g, const Bitset& target) {
  std::vector<uint16_t> gens;
  Bitset have(g.order);
  have.set(g.identity);
  while (have != target) {
    int next = -1;
    for (int x = 0; x < g.order && next < 0; ++x)
      if (target.test(x) && !have.test(x)) next = x;
    gens.push_back(uint16_t(next));
    have = generated_subgroup(g, gens).members;
  }
  return gens;
}

}  // namespace

std::vector<uint16_t> small_generating_set(const FiniteGroup& g) {
  Bitset all(g.order);
  for (int x = 0; x < g.order; ++x) all.set(x);
  return reduce_generators(g, all);
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
  std::vector<Bitset> subs;
  std::vector<std::vector<uint16_t>> gens;
  std::unordered_map<uint64_t, std::vector<int>> by_hash;
  auto insert = [&](Bitset members, std::vector<uint16_t> gen_list) {
    uint64_t h = members.hash();
    auto& bucket = by_hash[h];
    for (int idx : bucket)
      if (subs[idx] == members) return false;
    bucket.push_back(int(subs.size()));
    subs.push_back(std::move(members));
    gens.push_back(std::move(gen_list));
    return true;
  };

  // Cyclic seeds, then close under pairwise join.
  insert(generated_subgroup(g, {}).members, {});
  for (int x = 1; x < g.order; ++x) {
    uint16_t gen[] = {uint16_t(x)};
    auto s = generated_subgroup(g, gen);
    auto reduced = reduce_generators(g, s.members);
    insert(std::move(s.members), std::move(reduced));
  }
  for (size_t i = 1; i < subs.size(); ++i) {
    for (size_t j = 1; j < i; ++j) {
      if (subs[i].subset_of(subs[j]) || subs[j].subset_of(subs[i])) continue;
      std::vector<uint16_t> seed = gens[i];
      seed.insert(seed.end(), gens[j].begin(), gens[j].end());
      auto join = generated_subgroup(g, seed);
      insert(join.members, reduce_generators(g, join.members));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (auto& s : subs) out.push_back(Subgroup{std::move(s)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    int ca = a.members.count(), cb = b.members.count();
    if (ca != cb) return ca < cb;
    return a.members.members_less(b.members);
  });
  return out;
}

ConjugationAction conjugation_action(const FiniteGroup& g,
                                     const std::vector<Subgroup>& subs) {
  int ns = int(subs.size());
  std::unordered_map<uint64_t, std::vector<int>> by_hash;
  for (int i = 0; i < ns; ++i) by_hash[subs[i].members.hash()].push_back(i);
  auto find = [&](const Bitset& b) {
    for (int idx : by_hash[b.hash()])
      if (subs[idx].members == b) return idx;
    throw DomainError("conjugate of a subgroup is missing from the list");
  };

  ConjugationAction act;
  act.perms.assign(g.order, std::vector<uint16_t>(ns));
  for (int x = 0; x < g.order; ++x) {
    for (int s = 0; s < ns; ++s) {
      Bitset image(g.order);
      subs[s].members.for_each([&](int e) { image.set(g.conj(x, e)); });
      act.perms[x][s] = uint16_t(find(image));
    }
  }

  act.class_of.assign(ns, -1);
  for (int s = 0; s < ns; ++s) {
    if (act.class_of[s] >= 0) continue;
    int id = int(act.classes.size());
    std::vector<int> members = {s};
    act.class_of[s] = id;
    for (size_t i = 0; i < members.size(); ++i)
      for (int x = 0; x < g.order; ++x) {
        int t = act.perms[x][members[i]];
        if (act.class_of[t] < 0) {
          act.class_of[t] = id;
          members.push_back(t);
        }
      }
    std::sort(members.begin(), members.end());
    act.classes.push_back(std::move(members));
  }
  return act;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Bitset members(g.order);
  for (int x = 0; x < g.order; ++x) {
    Bitset image(g.order);
    h.members.for_each([&](int e) { image.set(g.conj(x, e)); });
    if (image == h.members) members.set(x);
  }
  Subgroup n{std::move(members)};
  if (!n.members.test(g.identity)) throw DomainError("normalizer lost the identity");
  return n;
}

bool is_lossless(const FiniteGroup& g) {
  auto subs = enumerate_subgroups(g);
  auto act = conjugation_action(g, subs);
  int ns = int(subs.size());
  for (int h = 0; h < ns; ++h) {
    std::vector<int> norm_elems;
    for (int x = 0; x < g.order; ++x)
      if (act.perms[x][h] == h) norm_elems.push_back(x);
    for (int k = 0; k < ns; ++k) {
      if (!subs[k].members.subset_of(subs[h].members)) continue;
      Bitset reachable(ns);
      for (int x : norm_elems) reachable.set(act.perms[x][k]);
      for (int x = 0; x < g.order; ++x) {
        int k2 = act.perms[x][k];
        if (subs[k2].members.subset_of(subs[h].members) && !reachable.test(k2))
          return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Structure naming

namespace {

std::string detect_name(const FiniteGroup& g, const Subgroup& s) {
  int k = s.order();
  if (k == 1) return "e";
  auto elems = s.members.members();
  std::vector<int> orders;
  orders.reserve(elems.size());
  int involutions = 0, max_order = 1;
  for (int e : elems) {
    int o = g.element_order(e);
    orders.push_back(o);
    if (o == 2) ++involutions;
    max_order = std::max(max_order, o);
  }
  if (max_order == k) return "C_" + std::to_string(k);

  bool abelian = true;
  for (size_t i = 0; i < elems.size() && abelian; ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (g.op(elems[i], elems[j]) != g.op(elems[j], elems[i])) {
        abelian = false;
        break;
      }
  if (abelian) {
    auto f = factorize(k);
    if (f.size() == 1 && max_order == f[0].first)
      return "C_" + std::to_string(f[0].first) + "^" + std::to_string(f[0].second);
    return {};
  }

  int order3 = int(std::count(orders.begin(), orders.end(), 3));
  if (k == 12 && involutions == 3 && order3 == 8) return "A_4";
  if (k % 2 == 0) {
    int d = k / 2;
    bool has_d = std::find(orders.begin(), orders.end(), d) != orders.end();
    if (has_d && involutions >= d) return "D_" + std::to_string(d);
  }
  if (k % 4 == 0) {
    int m = k / 4;
    bool has_half = std::find(orders.begin(), orders.end(), k / 2) != orders.end();
    if (involutions == 1 && has_half)
      return (m & (m - 1)) == 0 ? "Q_" + std::to_string(k)
                                : "Dic_" + std::to_string(m);
  }
  return {};
}

}  // namespace

std::vector<std::string> subgroup_labels(const FiniteGroup& g,
                                         const std::vector<Subgroup>& subs) {
  std::vector<std::string> labels(subs.size());
  std::map<int, int> anon_count;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order() == g.order) {
      labels[i] = g.label;
      continue;
    }
    std::string name = detect_name(g, subs[i]);
    if (name.empty()) {
      int k = subs[i].order();
      name = "H" + std::to_string(k) + "#" + std::to_string(++anon_count[k]);
    }
    labels[i] = name;
  }
  return labels;
}

}  // namespace translat
