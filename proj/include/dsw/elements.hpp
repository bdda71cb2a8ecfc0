#pragma once

#include <span>

#include "dsw/group_ring.hpp"

namespace dsw {

/// Largest arity for which the full-group sums are expanded (k! terms).
inline constexpr int kMaxSymmetrizerArity = 10;
/// Largest arity for the Dynkin-Specht-Wever element (2^(k-1) terms).
inline constexpr int kMaxBetaArity = 13;
/// Cap on the number of terms produced by tensor_embed.
inline constexpr std::size_t kMaxEmbeddedTerms = 10'000'000;

/// Sum of sgn(sigma) sigma over S_k.
GroupRingElement build_shat(int k);
/// Sum of sigma over S_k.
GroupRingElement build_sbar(int k);

/// The k permutations that move letter j to each position while keeping the
/// other letters in increasing order.
std::vector<Permutation> switching_set(int j, int k);
GroupRingElement build_that(int j, int k);
GroupRingElement build_tbar(int j, int k);

/// Block embedding R[S_j1] x ... x R[S_jl] -> R[S_k]. The first part acts on
/// letters 1..j1, the next on j1+1..j1+j2, and so on.
GroupRingElement tensor_embed(std::span<const GroupRingElement> parts);
GroupRingElement tensor_embed(std::initializer_list<GroupRingElement> parts);

/// `part` acting on letters offset+1 .. offset+arity of a length-k tensor,
/// identity elsewhere.
GroupRingElement embed_at(const GroupRingElement& part, int offset, int k);

/// beta_2 = 1 - (2,1), beta_k = (1 x beta_{k-1}) * (1 - (2,3,...,k,1)).
/// beta_1 is the identity of S_1. Results are memoized.
GroupRingElement build_beta(int k);

/// The cycle (2,3,...,k,1).
Permutation left_rotation(int k);

/// True iff beta_k * beta_k == k * beta_k exactly.
bool verify_dsw(int k);

}  // namespace dsw
