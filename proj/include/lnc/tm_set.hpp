#ifndef LNC_TM_SET_HPP
#define LNC_TM_SET_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lnc/permutation.hpp"

namespace lnc {

// T_m is the set of permutations whose one-line form strictly descends to
// the value 1 and then strictly ascends. This header collects its
// characterizations, enumerations, counts and factorizations.

/// Cycle-factorization data for a member of T_m:
/// sigma = (cycles[r-1] ... 1) o ... o (cycles[0] ... 1), rightmost applied
/// first, with cycles[i-1] = sigma(i) strictly decreasing and > 1.
struct MembershipWitness {
  int one_position = 1;          // t with sigma(t) = 1
  int descent_count = 0;         // r = t - 1
  std::vector<int> cycle_indices; // j_1 > j_2 > ... > j_r > 1
};

/// Membership via the descent pattern: descents occupy exactly a prefix
/// {1..r} of the positions.
bool is_member_descent(const Permutation& sigma);

/// Membership via block growth: every complete block of values {1..k}
/// around the position of 1 is extended by k+1 immediately to its left or
/// right.
bool is_member_block(const Permutation& sigma);

/// Membership via the greedy tau factorization: repeatedly strip
/// tau_{sigma(1)} on the right; succeeds exactly on members.
bool is_member_tau(const Permutation& sigma);

/// Cycle-factorization witness, or nullopt when sigma is not a member.
/// Independent of the descent test: validity is checked by recomposition.
std::optional<MembershipWitness> witness(const Permutation& sigma);

/// Recompose the descending-cycle product described by a witness.
Permutation recompose_witness(int degree, const MembershipWitness& w);

/// (-1)^(sigma^{-1}(1) - 1).
int sign(const Permutation& sigma);

/// All of T_m, in lexicographic one-line order.
std::vector<Permutation> enumerate_tm(int m);

/// The slice T_m^{(t)} = { sigma in T_m : sigma(t) = 1 }.
std::vector<Permutation> enumerate_tm_t(int m, int t);

/// |T_m| = 2^(m-1).
std::uint64_t count_tm(int m);

/// |T_m^{(t)}| = binomial(m-1, t-1).
std::uint64_t count_tm_t(int m, int t);

/// The unique D subset of {2..m} with sigma = tau_{d1} o tau_{d2} o ... for
/// d1 < d2 < ... (smallest index outermost). Returned ascending; nullopt
/// when sigma is not a member.
std::optional<std::vector<int>> tau_decomposition(const Permutation& sigma);

/// Composition of tau_d over d in D ascending, smallest index outermost.
Permutation recompose_tau(int m, const std::vector<int>& indices);

/// Members of T_m that fix the last m2 symbols and send position i to
/// m - m2 - i + 1 for i = 1..m1; equals T_{m-m1-m2} o tau_{m-m2} under the
/// standard embedding.
std::vector<Permutation> fixed_block_subset(int m, int m1, int m2);

} // namespace lnc

#endif
