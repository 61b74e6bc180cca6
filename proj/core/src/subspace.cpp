#include "pcgraph/subspace.hpp"

#include <algorithm>
#include <string>

#include "pcgraph/errors.hpp"
#include "pcgraph/qbinomial.hpp"

namespace pcg {

namespace {

constexpr std::uint64_t kVectorGuard = std::uint64_t(1) << 24;
constexpr std::uint64_t kSubspaceGuard = 10'000'000;

void check_same_space(const Subspace& a, const Subspace& b,
                      const char* what) {
    if (a.field() != b.field())
        throw AmbientMismatch(std::string(what) + " over different fields");
    if (a.ambient() != b.ambient())
        throw AmbientMismatch(std::string(what) + " with ambients " +
                              std::to_string(a.ambient()) + " and " +
                              std::to_string(b.ambient()));
}

}  // namespace

Subspace Subspace::zero(const Field& field, std::size_t ambient) {
    return Subspace(Mat(field, 0, ambient));
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
    Mat id(field, ambient, ambient);
    for (std::size_t i = 0; i < ambient; ++i) id(i, i) = 1;
    return Subspace(std::move(id));
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.field().q() <=> b.field().q(); c != 0) return c;
    if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j)
            if (auto c = a.basis()(i, j) <=> b.basis()(i, j); c != 0) return c;
    return std::strong_ordering::equal;
}

Subspace row_space(const Mat& m) {
    RrefResult r = rref(m);
    Mat basis(m.field(), r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = r.mat(i, j);
    return Subspace(std::move(basis));
}

Subspace kernel(const Mat& m) {
    const Field& f = m.field();
    const std::size_t n = m.cols();
    RrefResult r = rref(m);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    Mat raw(f, n - r.rank, n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        raw(row, free) = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            raw(row, r.pivots[i]) = f.neg(r.mat(i, free));
        ++row;
    }
    return row_space(raw);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    check_same_space(a, b, "sum of subspaces");
    return row_space(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    check_same_space(a, b, "intersection of subspaces");
    const Subspace ac = orthogonal_complement(a);
    const Subspace bc = orthogonal_complement(b);
    return kernel(vstack(ac.basis(), bc.basis()));
}

Subspace orthogonal_complement(const Subspace& s) {
    return kernel(s.basis());
}

bool contains(const Subspace& outer, const Subspace& inner) {
    check_same_space(outer, inner, "containment of subspaces");
    if (inner.dim() > outer.dim()) return false;
    for (std::size_t i = 0; i < inner.dim(); ++i)
        if (!contains_vector(outer, inner.basis().row(i))) return false;
    return true;
}

bool contains_vector(const Subspace& s, const Vec& v) {
    if (v.size() != s.ambient())
        throw AmbientMismatch("vector of length " + std::to_string(v.size()) +
                              " against ambient " +
                              std::to_string(s.ambient()));
    const Field& f = s.field();
    Vec rem = v;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        // The basis is RREF: row i's first nonzero entry is a 1.
        std::size_t p = 0;
        while (s.basis()(i, p) == 0) ++p;
        if (rem[p] == 0) continue;
        const Elem c = rem[p];
        for (std::size_t j = 0; j < s.ambient(); ++j)
            rem[j] = f.sub(rem[j], f.mul(c, s.basis()(i, j)));
    }
    return std::all_of(rem.begin(), rem.end(),
                       [](Elem e) { return e == 0; });
}

// --- enumeration ---

bool scan_vectors(const Field& field, std::size_t m,
                  const std::function<bool(const Vec&)>& fn) {
    if (BigUint::pow(BigUint(field.q()), m) > BigUint(kVectorGuard))
        throw TooLarge("enumerating q^m = " + std::to_string(field.q()) + "^" +
                       std::to_string(m) + " vectors exceeds the 2^24 guard");
    Vec cur(m, 0);
    const Elem top = static_cast<Elem>(field.q() - 1);
    for (;;) {
        if (!fn(cur)) return false;
        std::size_t i = m;
        while (i > 0 && cur[i - 1] == top) cur[--i] = 0;
        if (i == 0) return true;
        ++cur[i - 1];
    }
}

void for_each_vector(const Field& field, std::size_t m,
                     const std::function<void(const Vec&)>& fn) {
    scan_vectors(field, m, [&](const Vec& v) {
        fn(v);
        return true;
    });
}

std::vector<Vec> enumerate_vectors(const Field& field, std::size_t m) {
    std::vector<Vec> out;
    for_each_vector(field, m, [&](const Vec& v) { out.push_back(v); });
    return out;
}

namespace {

// Every k x d matrix in reduced row echelon form of full rank k, streamed as
// (pivot columns, entries); together these parametrize the k-subspaces of a
// d-dimensional space exactly once.
bool scan_rref_profiles(const Field& field, std::size_t d, std::size_t k,
                        const std::function<bool(const Mat&)>& fn) {
    if (k > d) return true;
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;

    for (;;) {
        // Free slots: row i may hold anything in non-pivot columns right of
        // its own pivot.
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        {
            std::vector<bool> is_pivot(d, false);
            for (std::size_t p : piv) is_pivot[p] = true;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = piv[i] + 1; j < d; ++j)
                    if (!is_pivot[j]) free_slots.emplace_back(i, j);
        }

        Mat r(field, k, d);
        for (std::size_t i = 0; i < k; ++i) r(i, piv[i]) = 1;
        Vec values(free_slots.size(), 0);
        const Elem top = static_cast<Elem>(field.q() - 1);
        for (;;) {
            for (std::size_t s = 0; s < free_slots.size(); ++s)
                r(free_slots[s].first, free_slots[s].second) = values[s];
            if (!fn(r)) return false;
            std::size_t i = values.size();
            while (i > 0 && values[i - 1] == top) values[--i] = 0;
            if (i == 0) break;
            ++values[i - 1];
        }

        // Next pivot combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == d - (k - i) - 1) --i;
        if (i == 0) return true;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

void check_subspace_guard(std::size_t d, std::size_t k, std::uint64_t q) {
    if (q_binomial(d, k, q) > BigUint(kSubspaceGuard))
        throw TooLarge("enumerating [" + std::to_string(d) + " choose " +
                       std::to_string(k) + "]_" + std::to_string(q) +
                       " subspaces exceeds the 10^7 guard");
}

}  // namespace

bool scan_k_subspaces(const Subspace& within, std::size_t k,
                      const std::function<bool(const Subspace&)>& fn) {
    const std::size_t d = within.dim();
    if (k > d) return true;
    check_subspace_guard(d, k, within.field().q());
    if (k == 0) return fn(Subspace::zero(within.field(), within.ambient()));
    return scan_rref_profiles(within.field(), d, k, [&](const Mat& coeffs) {
        return fn(row_space(coeffs * within.basis()));
    });
}

void for_each_k_subspace(const Subspace& within, std::size_t k,
                         const std::function<void(const Subspace&)>& fn) {
    scan_k_subspaces(within, k, [&](const Subspace& s) {
        fn(s);
        return true;
    });
}

std::vector<Subspace> enumerate_k_subspaces(const Subspace& within,
                                            std::size_t k) {
    std::vector<Subspace> out;
    for_each_k_subspace(within, k,
                        [&](const Subspace& s) { out.push_back(s); });
    return out;
}

bool scan_k_superspaces(const Subspace& of, std::size_t k,
                        const std::function<bool(const Subspace&)>& fn) {
    const std::size_t s = of.dim();
    const std::size_t n = of.ambient();
    if (k < s || k > n) return true;
    if (k == s) {
        check_subspace_guard(n - s, 0, of.field().q());
        return fn(of);
    }

    // A complement of `of`: unit vectors at the non-pivot columns of its
    // basis. X ↦ X ∩ complement is a bijection between k-superspaces of
    // `of` and (k-s)-subspaces of the complement, inverted by T ↦ of + T.
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t p = 0;
        while (of.basis()(i, p) == 0) ++p;
        is_pivot[p] = true;
    }
    Mat comp(of.field(), n - s, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) comp(row++, j) = 1;
    const Subspace complement = row_space(comp);

    return scan_k_subspaces(complement, k - s, [&](const Subspace& t) {
        return fn(sum(of, t));
    });
}

void for_each_k_superspace(const Subspace& of, std::size_t k,
                           const std::function<void(const Subspace&)>& fn) {
    scan_k_superspaces(of, k, [&](const Subspace& s) {
        fn(s);
        return true;
    });
}

std::vector<Subspace> enumerate_k_superspaces(const Subspace& of,
                                              std::size_t k) {
    std::vector<Subspace> out;
    for_each_k_superspace(of, k,
                          [&](const Subspace& s) { out.push_back(s); });
    return out;
}

}  // namespace pcg
