#include "pcgraph/topclique.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <string>

#include "pcgraph/errors.hpp"

namespace pcg {

namespace {

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

// Full row rank + projective columns, shared by every clique op.
void validate_generator(const Mat& m) {
    const Code u = Code::from_generator(m);  // throws RankDeficient
    if (!is_projective(u))
        throw NotProjective("generator columns must be nonzero and pairwise "
                            "non-proportional");
}

void check_parameter_range(const Mat& m) {
    const std::size_t k = m.rows() - 1;
    const std::size_t n = m.cols();
    if (!(k > 1 && k + 1 < n))
        throw ParameterRange("need 1 < k < n-1, got k=" + std::to_string(k) +
                             ", n=" + std::to_string(n));
}

// C(w) without re-validating m.
Code code_c_unchecked(const Mat& m, const Vec& w) {
    Mat wrow(m.field(), 1, m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) wrow(0, i) = w[i];
    const Subspace coeffs = kernel(wrow);
    return Code::from_generator(coeffs.basis() * m);
}

std::vector<Vec> compute_w_unchecked(const Mat& m) {
    const Field& f = m.field();
    const std::size_t k1 = m.rows();
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));

    std::vector<Vec> w_set;
    for_each_vector(f, k1, [&](const Vec& w) {
        if (vec_is_zero(w)) return;
        for (const Vec& l : cols)
            if (columns_proportional(f, w, l)) return;
        w_set.push_back(w);
    });
    return w_set;
}

std::vector<Vec> compute_y_unchecked(const Mat& m) {
    const Field& f = m.field();
    const std::vector<Vec> w_set = compute_w_unchecked(m);
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));

    // Route 1: materialize every a l_i + b l_j with a, b nonzero and i < j.
    std::set<Vec> pair_combos;
    std::vector<Elem> nonzero;
    for (Elem a = 1; a < f.q(); ++a) nonzero.push_back(a);
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            for (Elem a : nonzero)
                for (Elem b : nonzero) {
                    Vec v(m.rows());
                    for (std::size_t t = 0; t < m.rows(); ++t)
                        v[t] = f.add(f.mul(a, cols[i][t]),
                                     f.mul(b, cols[j][t]));
                    pair_combos.insert(std::move(v));
                }

    // Route 2: for w in W, membership in some pair span <l_i, l_j>. Both
    // coefficients are forced nonzero there because W already excludes
    // multiples of single columns.
    std::vector<Subspace> pair_spans;
    pair_spans.reserve(cols.size() * (cols.size() - 1) / 2);
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            pair_spans.push_back(
                row_space(Mat::from_rows(f, {cols[i], cols[j]})));

    std::vector<Vec> y_set;
    for (const Vec& w : w_set) {
        const bool excluded_1 = pair_combos.count(w) > 0;
        bool excluded_2 = false;
        for (const Subspace& span : pair_spans)
            if (contains_vector(span, w)) {
                excluded_2 = true;
                break;
            }
        if (excluded_1 != excluded_2)
            throw std::logic_error(
                "pair-combination filter and pair-span filter disagree");
        if (!excluded_1) y_set.push_back(w);
    }
    return y_set;
}

std::vector<Code> top_clique_unchecked(const Mat& m) {
    std::set<Code> clique;
    for (const Vec& y : compute_y_unchecked(m))
        clique.insert(code_c_unchecked(m, y));
    return {clique.begin(), clique.end()};
}

CliqueCore clique_core_unchecked(const Mat& m) {
    const std::vector<Vec> y_set = compute_y_unchecked(m);
    if (y_set.empty()) return {};

    const Subspace span_y =
        row_space(Mat::from_rows(m.field(), y_set, m.rows()));

    // By definition: intersection of all clique members.
    const std::vector<Code> clique = top_clique_unchecked(m);
    Subspace core = clique.front().space();
    for (std::size_t i = 1; i < clique.size(); ++i)
        core = intersect(core, clique[i].space());

    // Duality route: the annihilator of span(Y), pushed through a ↦ a m,
    // must give the same subspace.
    const Subspace dual_core =
        row_space(orthogonal_complement(span_y).basis() * m);
    if (core != dual_core)
        throw std::logic_error(
            "clique intersection disagrees with the span(Y) annihilator");

    return {span_y.dim(), std::move(core)};
}

LineClass classify_lines_unchecked(const Mat& m) {
    const std::size_t k = m.rows() - 1;
    const std::size_t n = m.cols();
    const CliqueCore cc = clique_core_unchecked(m);

    LineClass lc;
    switch (cc.span_y_dim) {
        case 0:
            lc.kind = LineClass::Kind::AllLines;
            break;
        case 1:
            lc.kind = LineClass::Kind::ManyLines;
            lc.line_count =
                q_bracket(k, m.field().q()) * q_bracket(n - k, m.field().q());
            break;
        case 2:
            lc.kind = LineClass::Kind::OneLine;
            assert(cc.core && cc.core->dim() == k - 1);
            lc.line_core = cc.core;
            break;
        default:
            lc.kind = LineClass::Kind::NoLine;
            break;
    }
    return lc;
}

Verdict decide_top_unchecked(const Mat& m) {
    const LineClass lc = classify_lines_unchecked(m);
    Verdict v;
    switch (lc.kind) {
        case LineClass::Kind::NoLine:
            v = {true, false, Verdict::Reason::Top_NoLine};
            break;
        case LineClass::Kind::OneLine: {
            const std::vector<Code> clique = top_clique_unchecked(m);
            std::set<Code> clique_set(clique.begin(), clique.end());
            // Star of the core, restricted to projective codes.
            std::set<Code> star;
            for_each_k_superspace(*lc.line_core, m.rows() - 1,
                                  [&](const Subspace& x) {
                                      Code c = Code::from_subspace(x);
                                      if (is_projective(c))
                                          star.insert(std::move(c));
                                  });
            for (const Code& c : clique_set)
                if (!star.count(c))
                    throw std::logic_error(
                        "clique member missing from the star of the core");
            if (star == clique_set)
                v = {true, true, Verdict::Reason::Top_StarEqualsTop};
            else
                v = {false, false,
                     Verdict::Reason::NotMaximal_ProperSubsetOfStar};
            break;
        }
        case LineClass::Kind::AllLines:
        case LineClass::Kind::ManyLines:
            v = {false, false, Verdict::Reason::NotMaximal_EmptyOrSingleton};
            break;
    }
    return v;
}

}  // namespace

const char* to_string(LineClass::Kind kind) {
    switch (kind) {
        case LineClass::Kind::AllLines: return "AllLines";
        case LineClass::Kind::ManyLines: return "ManyLines";
        case LineClass::Kind::OneLine: return "OneLine";
        case LineClass::Kind::NoLine: return "NoLine";
    }
    return "?";
}

const char* to_string(Verdict::Reason reason) {
    switch (reason) {
        case Verdict::Reason::NotMaximal_EmptyOrSingleton:
            return "NotMaximal_EmptyOrSingleton";
        case Verdict::Reason::NotMaximal_ProperSubsetOfStar:
            return "NotMaximal_ProperSubsetOfStar";
        case Verdict::Reason::Top_NoLine:
            return "Top_NoLine";
        case Verdict::Reason::Top_StarEqualsTop:
            return "Top_StarEqualsTop";
    }
    return "?";
}

std::vector<Vec> compute_W(const Mat& m) {
    validate_generator(m);
    return compute_w_unchecked(m);
}

std::vector<Vec> compute_Y(const Mat& m) {
    validate_generator(m);
    return compute_y_unchecked(m);
}

Code code_C(const Mat& m, const Vec& w) {
    if (w.size() != m.rows())
        throw AmbientMismatch("w has length " + std::to_string(w.size()) +
                              ", generator has " + std::to_string(m.rows()) +
                              " rows");
    if (vec_is_zero(w)) throw ZeroVector("C(w) needs a nonzero w");
    validate_generator(m);
    return code_c_unchecked(m, w);
}

std::vector<Code> top_clique(const Mat& m) {
    validate_generator(m);
    return top_clique_unchecked(m);
}

CliqueCore clique_core(const Mat& m) {
    validate_generator(m);
    return clique_core_unchecked(m);
}

LineClass classify_lines(const Mat& m) {
    validate_generator(m);
    check_parameter_range(m);
    return classify_lines_unchecked(m);
}

Verdict decide_top(const Mat& m) {
    validate_generator(m);
    check_parameter_range(m);
    return decide_top_unchecked(m);
}

bool decide_star_and_top(const Mat& m) {
    return decide_top(m).reason == Verdict::Reason::Top_StarEqualsTop;
}

CliqueAnalysis analyze(const Mat& m) {
    validate_generator(m);
    check_parameter_range(m);

    CliqueAnalysis a{Code::from_generator(m), compute_w_unchecked(m),
                     compute_y_unchecked(m),  top_clique_unchecked(m),
                     0,                       std::nullopt,
                     LineClass{},             Verdict{}};
    CliqueCore cc = clique_core_unchecked(m);
    a.span_y_dim = cc.span_y_dim;
    a.core = std::move(cc.core);
    a.line_class = classify_lines_unchecked(m);
    a.verdict = decide_top_unchecked(m);
    return a;
}

}  // namespace pcg
