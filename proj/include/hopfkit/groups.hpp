#pragma once

// Finite groups as multiplication tables, plus the pure group-theory side of
// the test corpus: subgroup enumeration by closure, conjugacy classes of
// subgroups, and a normality oracle by conjugation closure.  Nothing here
// knows about algebras or coalgebras; downstream Hopf-level criteria are
// checked against these oracles, never the other way around.
//
// Conventions: elements are 0..order-1, index 0 is the identity,
// table[i][j] = i*j.

#include <cstddef>
#include <string>
#include <vector>

namespace hopfkit {

struct GroupTable {
  std::string name;
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;

  std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
  std::size_t inv(std::size_t i) const;
  std::size_t element_order(std::size_t i) const;
  std::size_t conjugate(std::size_t g, std::size_t x) const {  // g x g^-1
    return mul(mul(g, x), inv(g));
  }
};

// Throws std::invalid_argument with a witness if the table is not a group
// table under the stated conventions (Latin square, identity at 0,
// associativity, inverses).
void validate_group_table(const GroupTable& g);

// --- builders ---

GroupTable cyclic_group(std::size_t n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable dihedral_group(std::size_t n);  // order 2n, n >= 1
GroupTable dicyclic_group(std::size_t n);  // order 4n, n >= 2; n=2 gives Q8
// C_n x| C_m with b a b^-1 = a^k; requires k^m = 1 mod n.
GroupTable semidirect_cyclic(std::size_t n, std::size_t m, std::size_t k);
// A x| B with explicit action: phi[b] is the permutation of A's elements by
// which b acts; must be a homomorphism B -> Aut(A) (validated).
GroupTable semidirect_general(const GroupTable& a, const GroupTable& b,
                              const std::vector<std::vector<std::size_t>>& phi);
GroupTable symmetric_group_s4();
GroupTable alternating_group_a4();
GroupTable sl_2_3();
// G / N for N normal; coset of the identity becomes element 0, remaining
// cosets ordered by their smallest member.
GroupTable quotient_group(const GroupTable& g, const std::vector<std::size_t>& normal_elems);
// The subgroup on sorted element list `sub` as a group in its own right
// (indices renumbered along sub).
GroupTable subgroup_table(const GroupTable& g, const std::vector<std::size_t>& sub);

// --- subgroup machinery ---

// Subgroups are sorted element lists containing 0.
std::vector<std::size_t> subgroup_closure(const GroupTable& g, std::vector<std::size_t> seed);
std::vector<std::vector<std::size_t>> all_subgroups(const GroupTable& g);

struct SubgroupClass {
  std::vector<std::size_t> representative;  // lex-least member of the class
  std::size_t class_size = 0;
};
std::vector<SubgroupClass> subgroup_conjugacy_classes(const GroupTable& g);

// Conjugation-closure oracle: g h g^-1 in H for all g, h.
bool is_normal_subgroup(const GroupTable& g, const std::vector<std::size_t>& sub);

// Validates closure under multiplication and inverse; on failure returns
// false and sets witness to an offending pair/element description.
bool check_subgroup(const GroupTable& g, const std::vector<std::size_t>& sub,
                    std::string* witness);

// Greedy generating set (first element extending the generated subgroup).
std::vector<std::size_t> generating_set(const GroupTable& g,
                                        const std::vector<std::size_t>& sub);

// --- isomorphism-invariant fingerprints ---

struct GroupFingerprint {
  std::vector<std::pair<std::size_t, std::size_t>> order_profile;  // (order, count)
  std::size_t center_order = 0;
  std::size_t class_count = 0;     // conjugacy classes of elements
  std::size_t derived_order = 0;   // commutator subgroup
  std::vector<std::pair<std::size_t, std::size_t>> abelianization_profile;

  bool operator==(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint(const GroupTable& g);

// --- the bundled corpus: every group of order <= 24 ---

// Constructed from first principles (cyclic, dihedral, dicyclic, symmetric,
// alternating, SL(2,3), direct/semidirect/central products).  The list is
// checked on construction: per-order counts must match the standard census
// 1,1,1,2,1,2,1,5,2,2,1,5,1,2,1,14,1,5,1,5,2,2,1,15 and fingerprints must be
// pairwise distinct within each order.  Throws on any violation.
std::vector<GroupTable> corpus_groups();

}  // namespace hopfkit
