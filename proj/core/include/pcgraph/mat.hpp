#pragma once

#include <cstddef>
#include <vector>

#include "pcgraph/gf.hpp"

namespace pcg {

using Vec = std::vector<Elem>;

// Dense row-major matrix over a fixed field. Shapes with zero rows are legal
// (the empty generating set of the zero subspace).
class Mat {
public:
    Mat(Field field, std::size_t rows, std::size_t cols);

    // Throws AmbientMismatch on ragged rows, RangeError-free: entries are
    // trusted Elem values and asserted < q in debug builds.
    static Mat from_rows(const Field& field,
                         const std::vector<Vec>& rows,
                         std::size_t cols_if_empty = 0);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    Elem& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    std::vector<Vec> to_rows() const;

    void swap_rows(std::size_t a, std::size_t b);
    // row r *= s
    void scale_row(std::size_t r, Elem s);
    // row dst += s * row src
    void add_scaled_row(std::size_t dst, std::size_t src, Elem s);

    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

// a on top of b; throws AmbientMismatch unless fields and widths agree.
Mat vstack(const Mat& a, const Mat& b);

struct RrefResult {
    Mat mat;
    std::size_t rank;
    // Pivot column of row i, for i < rank; strictly increasing.
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form by Gauss-Jordan elimination. Deterministic: the
// pivot is always the first usable row, so equal inputs give equal outputs.
RrefResult rref(const Mat& m);

}  // namespace pcg
