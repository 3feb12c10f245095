#pragma once

#include <cstdint>
#include <vector>

#include "mcd/common.hpp"

namespace mcd {

// Exact binomial coefficient; throws InputError on uint64 overflow.
std::uint64_t binomial(int n, int k);

// Colexicographic rank of a strictly increasing t-subset:
//   rank(b) = sum_i C(b[i], i+1).
// Ranks enumerate all t-subsets of {0..v-1} as 0..C(v,t)-1.
std::uint64_t subset_rank(const Block& b);

// Inverse of subset_rank for subsets of {0..v-1}.
Block subset_unrank(std::uint64_t rank, int v, int t);

// Block count forced by the design parameters:
//   S(3,4,v)          : C(v,3)/4
//   S(2,3,v)          : C(v,2)/3
//   CQS(g^n : s)      : (C(gn+s,3) - n*C(g+s,3) + (n-1)*C(s,3)) / 4
// Throws InputError when the division is not exact (parameters inadmissible).
std::uint64_t expected_sqs_blocks(int v);
std::uint64_t expected_sts_blocks(int v);
std::uint64_t expected_cqs_blocks(int g, int n, int s);

// All t-subsets of a sorted ground set, in lexicographic order.
std::vector<Block> all_subsets(const std::vector<int>& ground, int t);

}  // namespace mcd
