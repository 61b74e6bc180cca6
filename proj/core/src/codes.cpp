#include "pcgraph/codes.hpp"

#include <algorithm>
#include <string>

#include "pcgraph/errors.hpp"

namespace pcg {

Code Code::from_generator(const Mat& g) {
    Subspace s = row_space(g);
    if (s.dim() != g.rows())
        throw RankDeficient("generator has rank " + std::to_string(s.dim()) +
                            " but " + std::to_string(g.rows()) + " rows");
    return Code(std::move(s));
}

bool columns_proportional(const Field& field, const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw AmbientMismatch("comparing columns of lengths " +
                              std::to_string(a.size()) + " and " +
                              std::to_string(b.size()));
    const bool a_zero = std::all_of(a.begin(), a.end(),
                                    [](Elem e) { return e == 0; });
    const bool b_zero = std::all_of(b.begin(), b.end(),
                                    [](Elem e) { return e == 0; });
    if (a_zero || b_zero) return true;
    // Both nonzero: proportional iff b = lambda a with lambda fixed by the
    // first nonzero coordinate of a.
    std::size_t i = 0;
    while (a[i] == 0) ++i;
    if (b[i] == 0) return false;
    const Elem lambda = field.mul(b[i], field.inv(a[i]));
    for (std::size_t j = 0; j < a.size(); ++j)
        if (b[j] != field.mul(lambda, a[j])) return false;
    return true;
}

bool is_nondegenerate(const Code& c) {
    const Mat& g = c.generator();
    for (std::size_t j = 0; j < g.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < g.rows(); ++i)
            if (g(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) return false;
    }
    return true;
}

bool is_projective(const Code& c) {
    const Mat& g = c.generator();
    std::vector<Vec> cols;
    cols.reserve(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) cols.push_back(g.col(j));
    for (const Vec& col : cols) {
        if (std::all_of(col.begin(), col.end(),
                        [](Elem e) { return e == 0; }))
            return false;
    }
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            if (columns_proportional(c.field(), cols[i], cols[j]))
                return false;
    return true;
}

}  // namespace pcg
