#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcgraph/codes.hpp"

namespace pcg {

// Brute-force counterparts to the clique analysis. These deliberately avoid
// the Y-vector construction and work straight from the definitions, so an
// agreement between the two sides is meaningful evidence.

// All projective k-dimensional subcodes of u, where dim u = k+1: enumerate
// every hyperplane of u and keep the projective ones. Sorted canonically.
std::vector<Code> brute_force_clique(const Code& u);

// Adjacency in the Grassmann graph: equal dimensions meeting in dim k-1.
bool adjacency(const Code& a, const Code& b);

struct MaximalityResult {
    bool maximal = true;
    // A projective k-code outside the clique and adjacent to every member.
    std::optional<Code> witness;
};

// Candidate-set search for a witness. Complete because any witness X is
// adjacent to the first member C0, so T = X ∩ C0 is a (k-1)-subspace of C0
// and X shows up among the k-superspaces of T; scanning all [k]_q
// hyperplanes T of C0 and all [n-k+1]_q superspaces of each T therefore
// covers every possible witness. Input must be a nonempty clique of
// projective k-codes in one space (validated; throws std::invalid_argument).
MaximalityResult maximality_check(const std::vector<Code>& clique);

// Same answer by scanning every k-subspace of F_q^n. Kept as a check on the
// candidate-set argument itself; only allowed for q = 2, n <= 6 (TooLarge
// otherwise).
MaximalityResult maximality_check_naive(const std::vector<Code>& clique);

// Confirms the duality between the two sides of the construction:
// dim of the annihilator of span(Y) taken in F_q^(k+1) must equal the dim
// of the intersection of all brute-force clique members in F_q^n. Throws
// EmptyY when there is no admissible y at all.
bool verify_duality(const Mat& m);

// Number of lines [S, T] of the Grassmann graph through the vertex c,
// counted by enumerating both the hyperplanes S of c and the
// (k+1)-superspaces T of c. Equals [k]_q [n-k]_q; guarded by TooLarge.
std::uint64_t count_lines_through_code(const Code& c);

}  // namespace pcg
