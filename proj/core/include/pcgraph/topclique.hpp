#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pcgraph/codes.hpp"
#include "pcgraph/qbinomial.hpp"

namespace pcg {

// Everything here analyzes the clique ⟨U] of the projective-code graph: the
// set of projective [n,k] codes contained in a projective [n,k+1] code U,
// all of which pairwise meet in dimension k-1. U enters as a generator
// matrix m with k+1 rows; k and n are read from the shape. Ops that build
// the clique require m to have full row rank (RankDeficient) and projective
// columns (NotProjective); the line/top classification additionally requires
// 1 < k < n-1 (ParameterRange).

// How the clique relates to lines of the Grassmann graph; a line [S, T] is
// the set of k-subspaces between a fixed (k-1)-subspace S and a fixed
// (k+1)-subspace T.
struct LineClass {
    enum class Kind {
        AllLines,   // clique empty: contained in every line
        ManyLines,  // a single member, lying on line_count distinct lines
        OneLine,    // contained in exactly one line [line_core, U]
        NoLine,     // not contained in any line
    };

    Kind kind = Kind::NoLine;
    // ManyLines only: [k]_q [n-k]_q, exact.
    BigUint line_count;
    // OneLine only: the (k-1)-dimensional S with clique ⊆ [S, U].
    std::optional<Subspace> line_core;
};

const char* to_string(LineClass::Kind kind);

struct Verdict {
    enum class Reason {
        // Clique has at most one member, always extendable.
        NotMaximal_EmptyOrSingleton,
        // Unique-line case, but some projective k-code through the core
        // falls outside U.
        NotMaximal_ProperSubsetOfStar,
        // Contained in no line: maximal.
        Top_NoLine,
        // Equals the full star of its core: maximal, and a star as well.
        Top_StarEqualsTop,
    };

    bool is_top = false;
    bool is_star_too = false;
    Reason reason = Reason::NotMaximal_EmptyOrSingleton;
};

const char* to_string(Verdict::Reason reason);

// Admissible vectors W: nonzero w in F_q^(k+1) proportional to no column of
// m. Each one cuts out a non-degenerate k-dimensional subcode
// C(w) = {a m : a . w = 0}. Lexicographic order.
std::vector<Vec> compute_W(const Mat& m);

// The subset Y of W whose members are also no combination a l_i + b l_j of
// two distinct columns with both coefficients nonzero; exactly these give
// projective C(y). Computed twice (literal scalar filter, and membership in
// the pair spans <l_i, l_j>) and cross-asserted.
std::vector<Vec> compute_Y(const Mat& m);

// The k-dimensional code C(w) = {a m : a . w = 0}. Throws ZeroVector on
// w = 0.
Code code_C(const Mat& m, const Vec& w);

// The clique ⟨U]: all C(y) for y in Y, deduplicated (proportional y give the
// same code), sorted canonically.
std::vector<Code> top_clique(const Mat& m);

struct CliqueCore {
    // dim of the span of Y inside F_q^(k+1).
    std::size_t span_y_dim = 0;
    // Intersection of all clique members; absent iff Y is empty. Always
    // equals the image of the orthogonal complement of span(Y) under
    // a ↦ a m, and that equality is asserted internally.
    std::optional<Subspace> core;
};

CliqueCore clique_core(const Mat& m);

// dim span(Y) decides everything: 0 → AllLines, 1 → ManyLines,
// 2 → OneLine (core has dim k-1), >2 → NoLine.
LineClass classify_lines(const Mat& m);

// Maximality. NoLine means maximal outright. In the OneLine case the clique
// is maximal iff it equals the set of ALL projective k-codes through the
// core, checked by enumerating the [n-k+1]_q k-superspaces of the core; then
// it is simultaneously a star. Otherwise (empty or singleton clique) it is
// never maximal.
Verdict decide_top(const Mat& m);

// True iff decide_top lands in the star-equality case.
bool decide_star_and_top(const Mat& m);

// One-stop record for reporting.
struct CliqueAnalysis {
    Code u;
    std::vector<Vec> w_set;
    std::vector<Vec> y_set;
    std::vector<Code> clique;
    std::size_t span_y_dim = 0;
    std::optional<Subspace> core;
    LineClass line_class;
    Verdict verdict;
};

CliqueAnalysis analyze(const Mat& m);

}  // namespace pcg
