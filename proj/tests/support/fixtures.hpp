#pragma once

// Shared fixtures for the test suites: the bundled example matrices with
// their independently worked-out artifacts (admissible vectors, cores,
// witnesses), plus a seeded random generator of projective codes.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "pcgraph/codes.hpp"
#include "pcgraph/examples.hpp"
#include "pcgraph/mat.hpp"
#include "pcgraph/subspace.hpp"

namespace fx {

using pcg::Elem;
using pcg::Field;
using pcg::Mat;
using pcg::Subspace;
using pcg::Vec;

inline Mat mat_of(std::uint64_t q, const std::vector<Vec>& rows) {
    return Mat::from_rows(Field::make(q), rows);
}

inline Subspace span_of(std::uint64_t q, const std::vector<Vec>& rows) {
    return pcg::row_space(mat_of(q, rows));
}

// The bundled corpus by letter, with the rows restated verbatim so a slip
// in the library's own table cannot silently rewrite the expectations.
inline Mat example(char which) {
    switch (which) {
        case 'a':
            return mat_of(2, {{1, 0, 0, 0, 0, 1, 0, 1, 1, 0},
                              {0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
                              {0, 0, 1, 0, 0, 0, 1, 1, 0, 0},
                              {0, 0, 0, 1, 0, 0, 1, 0, 1, 0},
                              {0, 0, 0, 0, 1, 0, 0, 0, 1, 1}});
        case 'b':
            return mat_of(2, {{1, 0, 0, 0, 0, 1, 0, 1, 1, 0},
                              {0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
                              {0, 0, 1, 0, 0, 0, 1, 1, 0, 1},
                              {0, 0, 0, 1, 0, 0, 1, 0, 1, 0},
                              {0, 0, 0, 0, 1, 0, 0, 0, 1, 0}});
        case 'c':
            return mat_of(2, {{1, 0, 0, 0, 0, 1, 0, 1, 1, 0},
                              {0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
                              {0, 0, 1, 0, 0, 0, 1, 1, 0, 0},
                              {0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
                              {0, 0, 0, 0, 1, 0, 0, 0, 1, 0}});
        case 'd':
            return mat_of(2, {{1, 0, 0, 0, 1, 1},
                              {0, 1, 0, 0, 1, 0},
                              {0, 0, 1, 0, 0, 1},
                              {0, 0, 0, 1, 1, 1}});
        default:
            throw std::logic_error("unknown example");
    }
}

// [7,3]_2 simplex code: every nonzero column once. W is empty, so the
// clique is empty and lies on every line.
inline Mat simplex_7_3() {
    return mat_of(2, {{1, 0, 0, 1, 1, 0, 1},
                      {0, 1, 0, 1, 0, 1, 1},
                      {0, 0, 1, 0, 1, 1, 1}});
}

// [4,3]_3 code whose columns are three collinear points plus one point off
// their line. The secant lines of the column set then miss exactly one line
// of the plane, so Y = {(1,2,1),(1,2,2),(2,1,1),(2,1,2)} spans dimension 2:
// a one-line clique over F_3 (and in fact a full star).
inline Mat one_line_4_3_3() {
    return mat_of(3, {{1, 0, 1, 0},
                      {0, 1, 1, 0},
                      {0, 0, 0, 1}});
}

// Hand-checked artifacts for the corpus, as printed bases (not in RREF;
// compare via row_space).

// The single clique member of example a.
inline Subspace a_member() {
    return span_of(2, {{1, 1, 0, 0, 0, 0, 0, 1, 1, 1},
                       {0, 1, 1, 0, 0, 1, 1, 1, 0, 1},
                       {0, 0, 1, 1, 0, 0, 0, 1, 1, 0},
                       {0, 0, 0, 1, 1, 0, 1, 0, 0, 1}});
}

// A projective 4-code adjacent to a's member but outside its top.
inline Subspace a_witness() {
    return span_of(2, {{1, 1, 0, 0, 0, 0, 0, 1, 1, 1},
                       {0, 1, 1, 0, 0, 1, 1, 1, 0, 1},
                       {0, 0, 1, 1, 0, 0, 0, 1, 1, 0},
                       {0, 0, 0, 1, 1, 0, 1, 1, 1, 1}});
}

// The common intersection of example b's two members.
inline Subspace b_core() {
    return span_of(2, {{0, 1, 1, 0, 0, 1, 1, 1, 0, 0},
                       {0, 1, 0, 0, 1, 1, 0, 0, 1, 1},
                       {1, 1, 0, 1, 0, 0, 1, 1, 0, 1}});
}

// A projective 4-code through b's core that is not inside b's ambient code.
inline Subspace b_witness() {
    return span_of(2, {{0, 1, 1, 0, 0, 1, 1, 1, 0, 0},
                       {0, 1, 0, 0, 1, 1, 0, 0, 1, 1},
                       {1, 1, 0, 1, 0, 0, 1, 1, 0, 1},
                       {0, 0, 0, 1, 0, 0, 0, 1, 1, 0}});
}

// The common intersection of example c's members.
inline Subspace c_core() {
    return span_of(2, {{0, 1, 0, 0, 1, 1, 0, 0, 1, 1},
                       {0, 0, 1, 0, 1, 0, 1, 1, 1, 0}});
}

// The common intersection of example d's two members.
inline Subspace d_core() {
    return span_of(2, {{1, 1, 0, 1, 1, 0},
                       {0, 1, 1, 0, 1, 1}});
}

// The subcode of U cut out by the coefficient rows: rows are vectors a in
// F_q^(k+1), the result is the span of the a·M.
inline Subspace combo(const Mat& m, const std::vector<Vec>& coeff_rows) {
    return pcg::row_space(
        Mat::from_rows(m.field(), coeff_rows, m.rows()) * m);
}

// Uniformly random projective generator matrix: dim rows, n nonzero
// pairwise non-proportional columns, full row rank. Rejection sampling;
// requires n not to exceed the number of projective points (q^dim-1)/(q-1).
inline Mat random_projective(const Field& field, std::size_t dim,
                             std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, field.q() - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Vec> cols;
        int tries = 0;
        while (cols.size() < n && ++tries < 100000) {
            Vec c(dim, 0);
            bool zero = true;
            for (Elem& e : c) {
                e = pick(rng);
                if (e != 0) zero = false;
            }
            if (zero) continue;
            bool fresh = true;
            for (const Vec& prev : cols)
                if (pcg::columns_proportional(field, prev, c)) {
                    fresh = false;
                    break;
                }
            if (fresh) cols.push_back(std::move(c));
        }
        if (cols.size() < n) continue;
        Mat m(field, dim, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
        if (pcg::rref(m).rank == dim) return m;
    }
    throw std::logic_error("random_projective: rejection sampling exhausted");
}

struct CorpusEntry {
    std::uint64_t q;
    std::size_t dim;  // k + 1
    std::size_t n;
    Mat m;
};

// Deterministic random corpus across q in {2,3} and dim in {3,4}, with n
// running from dim+1 up to min(12, number of projective points). 130
// instances total.
inline const std::vector<CorpusEntry>& random_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> out;
        std::mt19937 rng(20260816u);
        auto add = [&](std::uint64_t q, std::size_t dim, std::size_t n_hi,
                       int per_n) {
            Field field = Field::make(q);
            for (std::size_t n = dim + 1; n <= n_hi; ++n)
                for (int i = 0; i < per_n; ++i)
                    out.push_back(
                        {q, dim, n, random_projective(field, dim, n, rng)});
        };
        add(2, 3, 7, 5);   // points bound 7:  n in 4..7,  20 instances
        add(2, 4, 12, 5);  // bound 15, cap:   n in 5..12, 40 instances
        add(3, 3, 12, 5);  // bound 13, cap:   n in 4..12, 45 instances
        add(3, 4, 9, 5);   // bound 40, cost:  n in 5..9,  25 instances
        return out;
    }();
    return corpus;
}

}  // namespace fx
