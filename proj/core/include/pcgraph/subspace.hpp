#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "pcgraph/mat.hpp"

namespace pcg {

// A subspace of F_q^n, stored as its unique reduced-row-echelon basis with
// zero rows dropped. Uniqueness of the RREF makes equality, ordering and
// set membership plain data comparisons.
class Subspace {
public:
    static Subspace zero(const Field& field, std::size_t ambient);
    static Subspace full(const Field& field, std::size_t ambient);

    const Mat& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    const Field& field() const { return basis_.field(); }

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) {
        return !(a == b);
    }
    // Total order (field, ambient, dim, basis entries); used for sets.
    friend std::strong_ordering operator<=>(const Subspace& a,
                                            const Subspace& b);

private:
    friend Subspace row_space(const Mat& m);
    explicit Subspace(Mat canonical_basis) : basis_(std::move(canonical_basis)) {}

    Mat basis_;
};

// Span of the rows of m.
Subspace row_space(const Mat& m);

// Right null space {x : m x = 0}; dim = cols - rank (rank-nullity).
Subspace kernel(const Mat& m);

// a + b. Throws AmbientMismatch unless fields and ambients agree.
Subspace sum(const Subspace& a, const Subspace& b);

// a ∩ b, computed as the kernel of the stacked dual conditions: a vector
// lies in both spaces iff it annihilates a's and b's orthogonal complements.
Subspace intersect(const Subspace& a, const Subspace& b);

// {x : x . s = 0 for all s in the subspace} under the standard dot product.
// An involution: complement(complement(s)) == s.
Subspace orthogonal_complement(const Subspace& s);

// inner ⊆ outer.
bool contains(const Subspace& outer, const Subspace& inner);

bool contains_vector(const Subspace& s, const Vec& v);

// --- enumeration ---
//
// The scan_* primitives stream results through a callback that returns
// false to stop early (the scan itself then returns false). The for_each_*
// forms take a void callback and always run to completion; the enumerate_*
// forms materialize a vector and are meant for desk-scale inputs. All of
// them guard the result count before producing anything: more than 2^24
// vectors or more than 10^7 subspaces throws TooLarge.

// All q^m vectors of F_q^m in lexicographic order (last coordinate fastest).
bool scan_vectors(const Field& field, std::size_t m,
                  const std::function<bool(const Vec&)>& fn);
void for_each_vector(const Field& field, std::size_t m,
                     const std::function<void(const Vec&)>& fn);
std::vector<Vec> enumerate_vectors(const Field& field, std::size_t m);

// Every k-dimensional subspace of `within`, each exactly once, in canonical
// form. Yields nothing when k > dim(within).
bool scan_k_subspaces(const Subspace& within, std::size_t k,
                      const std::function<bool(const Subspace&)>& fn);
void for_each_k_subspace(const Subspace& within, std::size_t k,
                         const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> enumerate_k_subspaces(const Subspace& within,
                                            std::size_t k);

// Every k-dimensional subspace of the ambient space that contains `of`,
// via the correspondence with (k - dim of)-dimensional subspaces of the
// quotient. Yields nothing when k < dim(of).
bool scan_k_superspaces(const Subspace& of, std::size_t k,
                        const std::function<bool(const Subspace&)>& fn);
void for_each_k_superspace(const Subspace& of, std::size_t k,
                           const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> enumerate_k_superspaces(const Subspace& of,
                                              std::size_t k);

}  // namespace pcg
