#pragma once

#include <cstdint>

#include "pcgraph/bigint.hpp"

namespace pcg {

// Number of 1-dimensional subspaces of F_q^n: (q^n - 1)/(q - 1), exact.
// q is any integer >= 2; throws ParameterRange below that.
BigUint q_bracket(std::uint64_t n, std::uint64_t q);

// Gaussian binomial coefficient: the number of k-dimensional subspaces of
// F_q^n. Computed with the q-Pascal recurrence
//   [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q,
// which stays in exact integers with no division. Throws ParameterRange
// unless q >= 2 and k <= n.
BigUint q_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

}  // namespace pcg
