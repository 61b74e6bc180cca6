#include "pcgraph/mat.hpp"

#include <cassert>
#include <string>

#include "pcgraph/errors.hpp"

namespace pcg {

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(rows * cols, 0) {}

Mat Mat::from_rows(const Field& field, const std::vector<Vec>& rows,
                   std::size_t cols_if_empty) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? cols_if_empty : rows[0].size();
    Mat out(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw AmbientMismatch("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(c));
        for (std::size_t j = 0; j < c; ++j) {
            assert(rows[i][j] < field.q());
            out(i, j) = rows[i][j];
        }
    }
    return out;
}

Vec Mat::row(std::size_t r) const {
    Vec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
    return out;
}

Vec Mat::col(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
    return out;
}

std::vector<Vec> Mat::to_rows() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void Mat::scale_row(std::size_t r, Elem s) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(r, j) = field_.mul((*this)(r, j), s);
}

void Mat::add_scaled_row(std::size_t dst, std::size_t src, Elem s) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) =
            field_.add((*this)(dst, j), field_.mul(s, (*this)(src, j)));
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.field_ != b.field_)
        throw AmbientMismatch("matrix product over different fields");
    if (a.cols_ != b.rows_)
        throw AmbientMismatch("matrix product shape mismatch: " +
                              std::to_string(a.cols_) + " vs " +
                              std::to_string(b.rows_));
    const Field& f = a.field_;
    Mat out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Elem s = a(i, l);
            if (s == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) = f.add(out(i, j), f.mul(s, b(l, j)));
        }
    return out;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.field() != b.field())
        throw AmbientMismatch("stacking matrices over different fields");
    if (a.cols() != b.cols())
        throw AmbientMismatch("stacking widths " + std::to_string(a.cols()) +
                              " and " + std::to_string(b.cols()));
    Mat out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, j) = b(i, j);
    return out;
}

RrefResult rref(const Mat& m) {
    Mat r = m;
    const Field& f = r.field();
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < r.cols() && rank < r.rows(); ++col) {
        std::size_t pr = rank;
        while (pr < r.rows() && r(pr, col) == 0) ++pr;
        if (pr == r.rows()) continue;
        r.swap_rows(rank, pr);
        r.scale_row(rank, f.inv(r(rank, col)));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == rank || r(i, col) == 0) continue;
            r.add_scaled_row(i, rank, f.neg(r(i, col)));
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(r), rank, std::move(pivots)};
}

}  // namespace pcg
