#pragma once

#include <compare>
#include <cstddef>

#include "pcgraph/subspace.hpp"

namespace pcg {

// A linear [n, k]_q code, identified with its subspace of F_q^n. The stored
// canonical (RREF) generator makes every column-based predicate
// basis-independent.
class Code {
public:
    // Throws RankDeficient when the rows of g are linearly dependent.
    static Code from_generator(const Mat& g);
    static Code from_subspace(Subspace s) { return Code(std::move(s)); }

    const Subspace& space() const { return space_; }
    // Canonical generator matrix (the RREF basis).
    const Mat& generator() const { return space_.basis(); }
    std::size_t n() const { return space_.ambient(); }
    std::size_t k() const { return space_.dim(); }
    const Field& field() const { return space_.field(); }

    friend bool operator==(const Code& a, const Code& b) {
        return a.space_ == b.space_;
    }
    friend bool operator!=(const Code& a, const Code& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Code& a, const Code& b) {
        return a.space_ <=> b.space_;
    }

private:
    explicit Code(Subspace s) : space_(std::move(s)) {}

    Subspace space_;
};

// Neither column is a scalar multiple of the other. The zero vector counts
// as proportional to everything (0 = 0 * c), so a zero column is always
// proportional to any other column.
bool columns_proportional(const Field& field, const Vec& a, const Vec& b);

// No zero column in the generator.
bool is_nondegenerate(const Code& c);

// Nonzero, pairwise non-proportional generator columns: the columns hit n
// distinct projective points. Implies non-degenerate.
bool is_projective(const Code& c);

}  // namespace pcg
