#include "hopfkit/groups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace hopfkit {

std::size_t GroupTable::inv(std::size_t i) const {
  for (std::size_t j = 0; j < order; ++j)
    if (table[i][j] == 0) return j;
  throw std::invalid_argument("group element has no inverse");
}

std::size_t GroupTable::element_order(std::size_t i) const {
  std::size_t x = i, n = 1;
  while (x != 0) {
    x = mul(x, i);
    ++n;
    if (n > order) throw std::invalid_argument("element order exceeds group order");
  }
  return n;
}

void validate_group_table(const GroupTable& g) {
  const std::size_t n = g.order;
  if (n == 0) throw std::invalid_argument("group of order 0");
  if (g.table.size() != n) throw std::invalid_argument("table row count != order");
  for (std::size_t i = 0; i < n; ++i) {
    if (g.table[i].size() != n)
      throw std::invalid_argument("table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (g.table[i][j] >= n)
        throw std::invalid_argument("table entry out of range at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.table[0][i] != i || g.table[i][0] != i)
      throw std::invalid_argument("element 0 is not an identity (witness " + std::to_string(i) + ")");
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen_row[g.table[i][j]])
        throw std::invalid_argument("row " + std::to_string(i) + " is not a permutation");
      seen_row[g.table[i][j]] = true;
      if (seen_col[g.table[j][i]])
        throw std::invalid_argument("column " + std::to_string(i) + " is not a permutation");
      seen_col[g.table[j][i]] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
          throw std::invalid_argument("associativity fails at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
  for (std::size_t i = 0; i < n; ++i) g.inv(i);  // throws if missing
}

namespace {

// Builds a table from an element list with an abstract product, reordering so
// the identity lands at index 0 (relative order of the rest preserved).
template <typename Elem, typename Mul>
GroupTable table_from_elements(std::string name, std::vector<Elem> elems, const Elem& id,
                               Mul mul) {
  auto it = std::find(elems.begin(), elems.end(), id);
  if (it == elems.end()) throw std::invalid_argument(name + ": identity not in element list");
  std::rotate(elems.begin(), it, it + 1);
  std::map<Elem, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  if (index.size() != elems.size()) throw std::invalid_argument(name + ": duplicate elements");
  GroupTable g;
  g.name = std::move(name);
  g.order = elems.size();
  g.table.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j) {
      auto p = index.find(mul(elems[i], elems[j]));
      if (p == index.end()) throw std::invalid_argument(g.name + ": product escapes element list");
      g.table[i][j] = p->second;
    }
  return g;
}

using Perm = std::vector<std::size_t>;

Perm perm_compose(const Perm& f, const Perm& g) {  // (f o g)(x) = f(g(x))
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

GroupTable permutation_group(std::string name, std::size_t points, std::vector<Perm> gens) {
  Perm id(points);
  for (std::size_t i = 0; i < points; ++i) id[i] = i;
  std::set<Perm> elems{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : gens) {
        Perm q = perm_compose(p, g);
        if (elems.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<Perm> sorted(elems.begin(), elems.end());
  return table_from_elements(std::move(name), std::move(sorted), id, perm_compose);
}

}  // namespace

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: order 0");
  GroupTable g;
  g.name = "C" + std::to_string(n);
  g.order = n;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  g.name = a.name + "x" + b.name;
  g.order = a.order * b.order;
  g.table.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j) {
      std::size_t ai = i / b.order, bi = i % b.order;
      std::size_t aj = j / b.order, bj = j % b.order;
      g.table[i][j] = a.mul(ai, aj) * b.order + b.mul(bi, bj);
    }
  return g;
}

GroupTable dihedral_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral_group: n = 0");
  // Index u*n + i for r^i s^u; r^i s^u * r^j s^v = r^(i + (-1)^u j) s^(u+v).
  GroupTable g;
  g.name = "D" + std::to_string(2 * n);
  g.order = 2 * n;
  g.table.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t ii = u == 0 ? (i + j) % n : (i + n - j % n) % n;
          g.table[u * n + i][v * n + j] = ((u + v) % 2) * n + ii;
        }
  return g;
}

GroupTable dicyclic_group(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dicyclic_group: n < 2");
  // a^i b^j, j in {0,1}, a^(2n)=1, b^2=a^n, b a b^-1 = a^-1; index j*2n + i.
  const std::size_t m = 2 * n;
  GroupTable g;
  g.name = n == 2 ? "Q8" : (n == 4 ? "Q16" : "Dic" + std::to_string(n));
  g.order = 4 * n;
  g.table.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t jq = 0; jq < 2; ++jq)
        for (std::size_t iq = 0; iq < m; ++iq) {
          std::size_t ii = j == 0 ? (i + iq) % m : (i + m - iq) % m;
          std::size_t jj = j + jq;
          if (jj == 2) {  // b^2 = a^n
            jj = 0;
            ii = (ii + n) % m;
          }
          g.table[j * m + i][jq * m + iq] = jj * m + ii;
        }
  return g;
}

GroupTable semidirect_cyclic(std::size_t n, std::size_t m, std::size_t k) {
  // (i,j)(i',j') = (i + k^j i', j+j'); index i*m + j.
  std::size_t kk = 1;
  for (std::size_t t = 0; t < m; ++t) kk = (kk * k) % n;
  if (kk != 1 % n) throw std::invalid_argument("semidirect_cyclic: k^m != 1 mod n");
  GroupTable g;
  g.name = "C" + std::to_string(n) + ":C" + std::to_string(m);
  g.order = n * m;
  g.table.assign(g.order, std::vector<std::size_t>(g.order));
  std::vector<std::size_t> kpow(m, 1);
  for (std::size_t j = 1; j < m; ++j) kpow[j] = (kpow[j - 1] * k) % n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t iq = 0; iq < n; ++iq)
        for (std::size_t jq = 0; jq < m; ++jq)
          g.table[i * m + j][iq * m + jq] = ((i + kpow[j] * iq) % n) * m + (j + jq) % m;
  return g;
}

GroupTable semidirect_general(const GroupTable& a, const GroupTable& b,
                              const std::vector<std::vector<std::size_t>>& phi) {
  if (phi.size() != b.order) throw std::invalid_argument("semidirect_general: phi size mismatch");
  for (std::size_t x = 0; x < b.order; ++x)
    for (std::size_t y = 0; y < b.order; ++y)
      for (std::size_t e = 0; e < a.order; ++e)
        if (phi[b.mul(x, y)][e] != phi[x][phi[y][e]])
          throw std::invalid_argument("semidirect_general: phi is not a homomorphism");
  for (std::size_t x = 0; x < b.order; ++x)
    for (std::size_t e = 0; e < a.order; ++e)
      for (std::size_t f = 0; f < a.order; ++f)
        if (phi[x][a.mul(e, f)] != a.mul(phi[x][e], phi[x][f]))
          throw std::invalid_argument("semidirect_general: phi[x] is not an automorphism");
  GroupTable g;
  g.name = a.name + ":" + b.name;
  g.order = a.order * b.order;
  g.table.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j) {
      std::size_t ai = i / b.order, bi = i % b.order;
      std::size_t aj = j / b.order, bj = j % b.order;
      g.table[i][j] = a.mul(ai, phi[bi][aj]) * b.order + b.mul(bi, bj);
    }
  return g;
}

GroupTable symmetric_group_s4() {
  return permutation_group("S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
}

GroupTable alternating_group_a4() {
  return permutation_group("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

GroupTable sl_2_3() {
  // All 2x2 matrices over F_3 with determinant 1, as flat 4-tuples.
  using M = std::array<std::size_t, 4>;
  std::vector<M> elems;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t d = 0; d < 3; ++d)
          if ((a * d + 9 - b * c) % 3 == 1) elems.push_back({a, b, c, d});
  M id{1, 0, 0, 1};
  auto mul = [](const M& x, const M& y) -> M {
    return {(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  return table_from_elements("SL(2,3)", std::move(elems), id, mul);
}

GroupTable quotient_group(const GroupTable& g, const std::vector<std::size_t>& normal_elems) {
  if (!is_normal_subgroup(g, normal_elems))
    throw std::invalid_argument("quotient_group: subgroup is not normal");
  std::vector<std::size_t> coset_of(g.order, g.order);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order; ++x) {
    if (coset_of[x] != g.order) continue;
    std::size_t c = reps.size();
    reps.push_back(x);
    for (std::size_t n : normal_elems) coset_of[g.mul(x, n)] = c;
  }
  GroupTable q;
  q.name = g.name + "/N" + std::to_string(normal_elems.size());
  q.order = reps.size();
  q.table.assign(q.order, std::vector<std::size_t>(q.order));
  for (std::size_t i = 0; i < q.order; ++i)
    for (std::size_t j = 0; j < q.order; ++j)
      q.table[i][j] = coset_of[g.mul(reps[i], reps[j])];
  return q;
}

GroupTable subgroup_table(const GroupTable& g, const std::vector<std::size_t>& sub) {
  std::string witness;
  if (!check_subgroup(g, sub, &witness))
    throw std::invalid_argument("subgroup_table: " + witness);
  GroupTable h;
  h.name = g.name + "_sub" + std::to_string(sub.size());
  h.order = sub.size();
  h.table.assign(sub.size(), std::vector<std::size_t>(sub.size()));
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j) {
      std::size_t prod = g.mul(sub[i], sub[j]);
      auto it = std::lower_bound(sub.begin(), sub.end(), prod);
      h.table[i][j] = static_cast<std::size_t>(it - sub.begin());
    }
  return h;
}

std::vector<std::size_t> subgroup_closure(const GroupTable& g, std::vector<std::size_t> seed) {
  std::set<std::size_t> s(seed.begin(), seed.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(s.begin(), s.end());
    for (std::size_t x : cur)
      for (std::size_t y : cur)
        if (s.insert(g.mul(x, y)).second) grew = true;
  }
  return std::vector<std::size_t>(s.begin(), s.end());
}

std::vector<std::vector<std::size_t>> all_subgroups(const GroupTable& g) {
  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> frontier;
  auto add = [&](std::vector<std::size_t> s) {
    if (found.insert(s).second) frontier.push_back(std::move(s));
  };
  add(subgroup_closure(g, {}));
  for (std::size_t x = 1; x < g.order; ++x) add(subgroup_closure(g, {x}));
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> work = std::move(frontier);
    frontier.clear();
    for (const auto& h : work) {
      if (h.size() == g.order) continue;
      for (std::size_t x = 1; x < g.order; ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<std::size_t> seed = h;
        seed.push_back(x);
        add(subgroup_closure(g, std::move(seed)));
      }
    }
  }
  return std::vector<std::vector<std::size_t>>(found.begin(), found.end());
}

namespace {
std::vector<std::size_t> conjugate_subgroup(const GroupTable& g, std::size_t x,
                                            const std::vector<std::size_t>& sub) {
  std::vector<std::size_t> r;
  r.reserve(sub.size());
  for (std::size_t h : sub) r.push_back(g.conjugate(x, h));
  std::sort(r.begin(), r.end());
  return r;
}
}  // namespace

std::vector<SubgroupClass> subgroup_conjugacy_classes(const GroupTable& g) {
  auto subs = all_subgroups(g);
  std::set<std::vector<std::size_t>> seen;
  std::vector<SubgroupClass> classes;
  for (const auto& h : subs) {  // subs is sorted, so representatives are lex-least
    if (seen.count(h)) continue;
    std::set<std::vector<std::size_t>> orbit;
    for (std::size_t x = 0; x < g.order; ++x) orbit.insert(conjugate_subgroup(g, x, h));
    for (const auto& o : orbit) seen.insert(o);
    classes.push_back({*orbit.begin(), orbit.size()});
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.size() != b.representative.size())
      return a.representative.size() < b.representative.size();
    return a.representative < b.representative;
  });
  return classes;
}

bool is_normal_subgroup(const GroupTable& g, const std::vector<std::size_t>& sub) {
  for (std::size_t x = 0; x < g.order; ++x)
    for (std::size_t h : sub)
      if (!std::binary_search(sub.begin(), sub.end(), g.conjugate(x, h))) return false;
  return true;
}

bool check_subgroup(const GroupTable& g, const std::vector<std::size_t>& sub,
                    std::string* witness) {
  auto fail = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  if (sub.empty() || sub[0] != 0) return fail("subgroup must contain the identity 0");
  if (!std::is_sorted(sub.begin(), sub.end())) return fail("subgroup indices must be sorted");
  for (std::size_t x : sub) {
    if (x >= g.order) return fail("index " + std::to_string(x) + " out of range");
    if (!std::binary_search(sub.begin(), sub.end(), g.inv(x)))
      return fail("not closed under inverse at " + std::to_string(x));
  }
  for (std::size_t x : sub)
    for (std::size_t y : sub)
      if (!std::binary_search(sub.begin(), sub.end(), g.mul(x, y)))
        return fail("not closed under product at (" + std::to_string(x) + "," +
                    std::to_string(y) + ")");
  return true;
}

std::vector<std::size_t> generating_set(const GroupTable& g,
                                        const std::vector<std::size_t>& sub) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> have = subgroup_closure(g, {});
  for (std::size_t x : sub) {
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens.push_back(x);
    std::vector<std::size_t> seed = have;
    seed.push_back(x);
    have = subgroup_closure(g, std::move(seed));
    if (have.size() == sub.size()) break;
  }
  return gens;
}

GroupFingerprint fingerprint(const GroupTable& g) {
  GroupFingerprint fp;
  std::map<std::size_t, std::size_t> prof;
  for (std::size_t x = 0; x < g.order; ++x) ++prof[g.element_order(x)];
  fp.order_profile.assign(prof.begin(), prof.end());

  std::size_t center = 0;
  for (std::size_t x = 0; x < g.order; ++x) {
    bool central = true;
    for (std::size_t y = 0; y < g.order && central; ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    if (central) ++center;
  }
  fp.center_order = center;

  std::vector<bool> seen(g.order, false);
  for (std::size_t x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    ++fp.class_count;
    for (std::size_t y = 0; y < g.order; ++y) seen[g.conjugate(y, x)] = true;
  }

  std::vector<std::size_t> comm;
  for (std::size_t x = 0; x < g.order; ++x)
    for (std::size_t y = 0; y < g.order; ++y)
      comm.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  auto derived = subgroup_closure(g, comm);
  fp.derived_order = derived.size();

  GroupTable ab = quotient_group(g, derived);
  std::map<std::size_t, std::size_t> abprof;
  for (std::size_t x = 0; x < ab.order; ++x) ++abprof[ab.element_order(x)];
  fp.abelianization_profile.assign(abprof.begin(), abprof.end());
  return fp;
}

std::vector<GroupTable> corpus_groups() {
  std::vector<GroupTable> gs;
  auto add = [&](GroupTable g, const std::string& rename = "") {
    if (!rename.empty()) g.name = rename;
    gs.push_back(std::move(g));
  };

  const GroupTable c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
  const GroupTable c2c2 = direct_product(c2, c2);
  const GroupTable d8 = dihedral_group(4), q8 = dicyclic_group(2);
  const GroupTable s3 = dihedral_group(3);

  for (std::size_t n = 1; n <= 24; ++n) add(cyclic_group(n));

  // order 4, 6
  add(c2c2);
  add(s3, "S3");

  // order 8
  add(direct_product(c2, c4));
  add(direct_product(c2, c2c2), "C2xC2xC2");
  add(d8);
  add(q8);

  // order 9
  add(direct_product(c3, c3));

  // order 10
  add(dihedral_group(5));

  // order 12
  add(direct_product(c2, cyclic_group(6)));
  add(dihedral_group(6));
  add(alternating_group_a4());
  add(dicyclic_group(3));

  // order 14
  add(dihedral_group(7));

  // order 16
  add(direct_product(c4, c4));
  add(direct_product(c2, cyclic_group(8)));
  add(direct_product(c2c2, c4), "C2xC2xC4");
  add(direct_product(c2c2, c2c2), "C2xC2xC2xC2");
  add(dihedral_group(8));
  add(semidirect_cyclic(8, 2, 3), "SD16");
  add(semidirect_cyclic(8, 2, 5), "M16");
  add(dicyclic_group(4));
  add(direct_product(c2, d8), "C2xD8");
  add(direct_product(c2, q8), "C2xQ8");
  add(semidirect_cyclic(4, 4, 3), "C4:C4");
  {
    // (C2xC2) x| C4, the C4 generator swapping the two factors.
    std::vector<std::vector<std::size_t>> phi(4);
    const std::vector<std::size_t> swap{0, 2, 1, 3}, idp{0, 1, 2, 3};
    for (std::size_t j = 0; j < 4; ++j) phi[j] = (j % 2 == 0) ? idp : swap;
    add(semidirect_general(c2c2, c4, phi), "(C2xC2):C4");
  }
  {
    // Central product C4 o D8: C4 x D8 modulo identified central involutions.
    GroupTable prod = direct_product(c4, d8);
    std::size_t z = 2 * d8.order + 2;  // (c^2, r^2)
    add(quotient_group(prod, subgroup_closure(prod, {z})), "C4oD8");
  }

  // order 18
  add(direct_product(c3, cyclic_group(6)), "C3xC6");
  add(dihedral_group(9));
  add(direct_product(s3, c3), "S3xC3");
  {
    GroupTable c3c3 = direct_product(c3, c3);
    std::vector<std::vector<std::size_t>> phi(2);
    phi[0].resize(9);
    phi[1].resize(9);
    for (std::size_t i = 0; i < 9; ++i) {
      phi[0][i] = i;
      std::size_t a = i / 3, b = i % 3;
      phi[1][i] = ((3 - a) % 3) * 3 + (3 - b) % 3;  // inversion
    }
    add(semidirect_general(c3c3, c2, phi), "(C3xC3):C2");
  }

  // order 20
  add(direct_product(c2, cyclic_group(10)), "C2xC10");
  add(dihedral_group(10));
  add(dicyclic_group(5));
  add(semidirect_cyclic(5, 4, 2), "F20");

  // order 21
  add(semidirect_cyclic(7, 3, 2), "C7:C3");

  // order 22
  add(dihedral_group(11));

  // order 24
  add(direct_product(c2, cyclic_group(12)), "C2xC12");
  add(direct_product(c2c2, cyclic_group(6)), "C2xC2xC6");
  add(symmetric_group_s4());
  add(direct_product(c2, alternating_group_a4()), "C2xA4");
  add(sl_2_3());
  add(dihedral_group(12));
  add(dicyclic_group(6));
  add(semidirect_cyclic(3, 8, 2), "C3:C8");
  add(direct_product(s3, c4), "S3xC4");
  add(direct_product(c2c2, s3), "C2xC2xS3");
  add(direct_product(c2, dicyclic_group(3)), "C2xDic3");
  add(direct_product(c3, d8), "C3xD8");
  add(direct_product(c3, q8), "C3xQ8");
  {
    // C3 x| D8 through the quotient killing <r^2, s>: odd rotations invert.
    // (Letting the reflections invert instead just rebuilds D24.)
    std::vector<std::vector<std::size_t>> phi(8);
    for (std::size_t d = 0; d < 8; ++d)
      phi[d] = (d % 4) % 2 == 1 ? std::vector<std::size_t>{0, 2, 1}
                                : std::vector<std::size_t>{0, 1, 2};
    add(semidirect_general(c3, d8, phi), "C3:D8");
  }

  std::stable_sort(gs.begin(), gs.end(),
                   [](const GroupTable& a, const GroupTable& b) { return a.order < b.order; });

  const std::size_t expected[25] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2,  2, 1, 5,
                                    1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  std::map<std::size_t, std::size_t> counts;
  for (const auto& g : gs) {
    validate_group_table(g);
    ++counts[g.order];
  }
  for (std::size_t n = 1; n <= 24; ++n)
    if (counts[n] != expected[n])
      throw std::runtime_error("corpus census mismatch at order " + std::to_string(n) +
                               ": built " + std::to_string(counts[n]) + ", expected " +
                               std::to_string(expected[n]));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i].order == gs[j].order && fingerprint(gs[i]) == fingerprint(gs[j]))
        throw std::runtime_error("corpus fingerprint collision: " + gs[i].name + " vs " +
                                 gs[j].name);
  return gs;
}

}  // namespace hopfkit
