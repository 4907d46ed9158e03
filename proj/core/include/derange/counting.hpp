#pragma once

// Exhaustive enumeration over S_a and S_n. These are the brute-force oracles
// every closed formula in the library is checked against.

#include <functional>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/permutation.hpp"

namespace derange::counting {

/// Visits each member of S_a exactly once: a value set is chosen for every
/// block and written decreasingly. Members arrive in lexicographic order.
void for_each_member(const Composition& a, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> members(const Composition& a);

/// True iff p has no fixed point in blocks A_1..A_j.
bool no_fixed_points_in_first_blocks(const Permutation& p, const Composition& a, int j);

/// |D_j(a)|: members with no fixed point in the first j blocks. 0 <= j <= k.
BigInt count_Dj(const Composition& a, int j);

/// |D_j(a)| for every j = 0..k from a single scan.
std::vector<BigInt> count_Dj_all(const Composition& a);

/// |D*_j(a)|: no fixed point in the first j - 1 blocks, one in A_j. 1 <= j <= k.
BigInt count_Dstar(const Composition& a, int j);

/// |D^_j(a)|: a fixed point in A_j and nowhere else. 1 <= j <= k.
BigInt count_Dhat(const Composition& a, int j);

/// The boundary r inside block A_j between excedances and deficiencies: the
/// first position of A_j holding a deficiency, or c_j + 1 if there is none.
int excedance_boundary(const Permutation& p, const Composition& a, int j);

/// phi_r(p) for p in D_j(a); the result lies in D*_j of a with a_j + 1.
/// Throws std::invalid_argument if p is not in D_j(a).
Permutation insert_block_fixed_point(const Permutation& p, const Composition& a, int j);

/// Inverse of insert_block_fixed_point: psi_r at the fixed point of block j
/// of `grown` (the composition with a_j + 1). Throws if A_j has no fixed point.
Permutation remove_block_fixed_point(const Permutation& p, const Composition& grown, int j);

/// Number of p in S_n whose block sort Phi_a(p) is fixed-point free, by a
/// full scan of S_n (partitioned over worker threads by the first entry).
BigInt count_sorted_derangement_preimage(const Composition& a);

struct FixDistribution {
  int n = 0;
  std::vector<BigInt> counts;  // counts[j] = #{p in S_n : fix(p) = j}
};

FixDistribution fix_distribution(int n);

}  // namespace derange::counting
