#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "pcgraph/codes.hpp"
#include "pcgraph/errors.hpp"
#include "pcgraph/examples.hpp"
#include "pcgraph/topclique.hpp"

#include "support/fixtures.hpp"

using namespace pcg;

TEST_CASE("code construction") {
    Field f = Field::make(2);
    Mat g = Mat::from_rows(f, {{1, 0, 1, 1}, {0, 1, 1, 0}});
    Code c = Code::from_generator(g);
    CHECK(c.n() == 4);
    CHECK(c.k() == 2);
    CHECK(c.generator() == g);  // already in RREF

    // A non-canonical generator of the same code compares equal.
    Code c2 = Code::from_generator(
        Mat::from_rows(f, {{1, 1, 0, 1}, {0, 1, 1, 0}}));
    CHECK(c == c2);

    CHECK_THROWS_AS(
        Code::from_generator(Mat::from_rows(f, {{1, 0, 1, 1},
                                                {0, 1, 1, 0},
                                                {1, 1, 0, 1}})),
        RankDeficient);

    CHECK(Code::from_subspace(fx::span_of(2, {{1, 0}, {0, 1}})).k() == 2);
}

TEST_CASE("column proportionality") {
    Field f2 = Field::make(2);
    CHECK(columns_proportional(f2, {1, 0, 1}, {1, 0, 1}));
    CHECK(!columns_proportional(f2, {1, 0, 1}, {1, 1, 0}));
    // Zero is proportional to everything.
    CHECK(columns_proportional(f2, {0, 0, 0}, {1, 1, 0}));
    CHECK(columns_proportional(f2, {1, 1, 0}, {0, 0, 0}));

    Field f3 = Field::make(3);
    CHECK(columns_proportional(f3, {1, 2}, {2, 1}));   // (2,1) = 2 (1,2)
    CHECK(!columns_proportional(f3, {1, 2}, {1, 1}));
    CHECK(columns_proportional(f3, {0, 1, 2}, {0, 2, 1}));
}

TEST_CASE("projectivity predicate") {
    for (char which : {'a', 'b', 'c', 'd'}) {
        CAPTURE(which);
        CHECK(is_projective(Code::from_generator(fx::example(which))));
    }
    CHECK(is_projective(Code::from_generator(fx::simplex_7_3())));

    Field f = Field::make(2);
    // Duplicate column.
    Code dup = Code::from_generator(
        Mat::from_rows(f, {{1, 0, 1, 1}, {0, 1, 0, 0}}));
    CHECK(!is_projective(dup));
    CHECK(is_nondegenerate(dup));
    // Zero column.
    Code zc = Code::from_generator(
        Mat::from_rows(f, {{1, 0, 0, 1}, {0, 1, 0, 0}}));
    CHECK(!is_nondegenerate(zc));
    CHECK(!is_projective(zc));

    // Proportional but unequal columns over F_3.
    Field f3 = Field::make(3);
    Code prop = Code::from_generator(
        Mat::from_rows(f3, {{1, 0, 2, 1}, {0, 1, 1, 2}}));
    // columns 3 and 4: (2,1) and (1,2) = 2 (2,1); proportional.
    CHECK(!is_projective(prop));

    // Projectivity is a property of the code, not the generator: scrambled
    // generators agree.
    std::mt19937 rng(7);
    for (const auto& entry : fx::random_corpus()) {
        if (entry.n > 8) continue;
        Mat g = entry.m;
        Code c = Code::from_generator(g);
        CHECK(is_projective(c));
        CHECK(entry.n <= q_bracket(entry.dim, entry.q).to_u64());
    }
}

TEST_CASE("admissible vector count matches the closed form") {
    const Mat a = fx::example('a');
    auto w = compute_W(a);
    CHECK(w.size() == 21);
    CHECK(std::is_sorted(w.begin(), w.end()));

    // |W| = q^(k+1) - 1 - n(q-1) on any projective input.
    for (const auto& entry : fx::random_corpus()) {
        if (entry.n > 9) continue;
        auto ws = compute_W(entry.m);
        std::uint64_t expect = 1;
        for (std::size_t i = 0; i < entry.dim; ++i) expect *= entry.q;
        expect -= 1 + entry.n * (entry.q - 1);
        CHECK(ws.size() == expect);
    }

    // The simplex uses up every projective point, so nothing is admissible.
    CHECK(compute_W(fx::simplex_7_3()).empty());
}

TEST_CASE("projectivity filter on the corpus examples") {
    CHECK(compute_Y(fx::example('a')) ==
          std::vector<Vec>{{1, 1, 1, 1, 1}});
    CHECK(compute_Y(fx::example('b')) ==
          std::vector<Vec>{{0, 1, 1, 1, 1}, {1, 1, 1, 0, 1}});
    CHECK(compute_Y(fx::example('c')) ==
          std::vector<Vec>{{0, 1, 1, 0, 1},
                           {0, 1, 1, 1, 1},
                           {1, 1, 1, 0, 1},
                           {1, 1, 1, 1, 1}});
    CHECK(compute_Y(fx::example('d')) ==
          std::vector<Vec>{{0, 1, 1, 1}, {1, 1, 1, 0}});
    CHECK(compute_Y(fx::simplex_7_3()).empty());

    // Y is always a subset of W.
    const Mat b = fx::example('b');
    auto w = compute_W(b);
    for (const Vec& y : compute_Y(b))
        CHECK(std::binary_search(w.begin(), w.end(), y));
}

TEST_CASE("the cut-out subcode") {
    const Mat a = fx::example('a');
    Code c = code_C(a, {1, 1, 1, 1, 1});
    CHECK(c.k() == 4);
    CHECK(c.space() == fx::a_member());
    CHECK(is_projective(c));
    // Every codeword a.M with a . w = 0 and nothing else.
    CHECK(contains(Code::from_generator(a).space(), c.space()));

    CHECK_THROWS_AS(code_C(a, {0, 0, 0, 0, 0}), ZeroVector);
    CHECK_THROWS_AS(code_C(a, {1, 1, 1}), AmbientMismatch);

    // Example b's two members, written out as row combinations of M: with
    // v_i the rows, C(y1) = <v2+v3, v2+v5, v1+v2+v4, v1> and
    // C(y2) = <v2+v3, v2+v5, v1+v2+v4, v4>.
    const Mat bm = fx::example('b');
    Subspace cy1 = fx::combo(bm, {{0, 1, 1, 0, 0},
                                  {0, 1, 0, 0, 1},
                                  {1, 1, 0, 1, 0},
                                  {1, 0, 0, 0, 0}});
    Subspace cy2 = fx::combo(bm, {{0, 1, 1, 0, 0},
                                  {0, 1, 0, 0, 1},
                                  {1, 1, 0, 1, 0},
                                  {0, 0, 0, 1, 0}});
    CHECK(code_C(bm, {0, 1, 1, 1, 1}).space() == cy1);
    CHECK(code_C(bm, {1, 1, 1, 0, 1}).space() == cy2);

    // Proportional coefficient vectors cut out the same subcode.
    Field f3 = Field::make(3);
    std::mt19937 rng9(9);
    Mat m3 = fx::random_projective(f3, 3, 6, rng9);
    auto ys = compute_Y(m3);
    if (!ys.empty()) {
        Vec y = ys.front();
        Vec y2(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) y2[i] = f3.mul(2, y[i]);
        CHECK(code_C(m3, y) == code_C(m3, y2));
    }
}

TEST_CASE("clique construction on the corpus") {
    auto ca = top_clique(fx::example('a'));
    REQUIRE(ca.size() == 1);
    CHECK(ca[0].space() == fx::a_member());

    auto cb = top_clique(fx::example('b'));
    CHECK(cb.size() == 2);

    auto cc = top_clique(fx::example('c'));
    CHECK(cc.size() == 4);

    auto cd = top_clique(fx::example('d'));
    CHECK(cd.size() == 2);

    // Structural invariants on every member, for each example.
    for (char which : {'a', 'b', 'c', 'd'}) {
        CAPTURE(which);
        const Mat m = fx::example(which);
        const Code u = Code::from_generator(m);
        auto clique = top_clique(m);
        CHECK(std::is_sorted(clique.begin(), clique.end()));
        CHECK(std::adjacent_find(clique.begin(), clique.end()) ==
              clique.end());
        for (const Code& c : clique) {
            CHECK(c.k() == u.k() - 1);
            CHECK(is_projective(c));
            CHECK(contains(u.space(), c.space()));
        }
        // Pairwise adjacency: members of a top meet in dimension k-1.
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                CHECK(intersect(clique[i].space(), clique[j].space()).dim() ==
                      u.k() - 2);
    }
}

TEST_CASE("clique is a property of the code, not the generator") {
    // Multiply by random invertible matrices on the left.
    std::mt19937 rng(11);
    const Mat m = fx::example('d');
    const Field f = m.field();
    std::uniform_int_distribution<std::uint64_t> pick(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        Mat t(f, 4, 4);
        do {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) t(i, j) = pick(rng);
        } while (rref(t).rank != 4);
        CHECK(top_clique(t * m) == top_clique(m));
    }
}

TEST_CASE("core of the clique") {
    auto a = clique_core(fx::example('a'));
    CHECK(a.span_y_dim == 1);
    REQUIRE(a.core.has_value());
    CHECK(*a.core == fx::a_member());  // single member: core is the member

    auto b = clique_core(fx::example('b'));
    CHECK(b.span_y_dim == 2);
    REQUIRE(b.core.has_value());
    CHECK(b.core->dim() == 3);
    CHECK(*b.core == fx::b_core());

    auto c = clique_core(fx::example('c'));
    CHECK(c.span_y_dim == 3);
    REQUIRE(c.core.has_value());
    CHECK(c.core->dim() == 2);
    CHECK(*c.core == fx::c_core());

    auto d = clique_core(fx::example('d'));
    CHECK(d.span_y_dim == 2);
    REQUIRE(d.core.has_value());
    CHECK(*d.core == fx::d_core());

    auto s = clique_core(fx::simplex_7_3());
    CHECK(s.span_y_dim == 0);
    CHECK(!s.core.has_value());
}

TEST_CASE("the admissible vectors of the no-line example are dependent") {
    auto ys = compute_Y(fx::example('c'));
    REQUIRE(ys.size() == 4);
    const Field f = fx::example('c').field();
    // y1 + y2 + y3 = y4
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(f.add(f.add(ys[0][i], ys[1][i]), ys[2][i]) == ys[3][i]);
}

TEST_CASE("line classification across all four kinds") {
    auto la = classify_lines(fx::example('a'));
    CHECK(la.kind == LineClass::Kind::ManyLines);
    CHECK(la.line_count == BigUint(945));
    CHECK(la.line_count == q_bracket(4, 2) * q_bracket(6, 2));

    auto lb = classify_lines(fx::example('b'));
    CHECK(lb.kind == LineClass::Kind::OneLine);
    REQUIRE(lb.line_core.has_value());
    CHECK(*lb.line_core == fx::b_core());

    auto lc = classify_lines(fx::example('c'));
    CHECK(lc.kind == LineClass::Kind::NoLine);

    auto ld = classify_lines(fx::example('d'));
    CHECK(ld.kind == LineClass::Kind::OneLine);
    CHECK(*ld.line_core == fx::d_core());

    auto ls = classify_lines(fx::simplex_7_3());
    CHECK(ls.kind == LineClass::Kind::AllLines);

    CHECK(std::string(to_string(la.kind)) == "ManyLines");
    CHECK(std::string(to_string(ls.kind)) == "AllLines");
}

TEST_CASE("inputs outside the analyzed parameter range are rejected") {
    Field f = Field::make(2);
    // k = 1: a two-row projective generator.
    Mat k1 = Mat::from_rows(f, {{1, 0, 1}, {0, 1, 1}});
    CHECK_THROWS_AS(classify_lines(k1), ParameterRange);
    CHECK_THROWS_AS(decide_top(k1), ParameterRange);
    // k = n - 1: a square generator (only the identity is projective with
    // n = k + 1 <= 4... use n = 4, full space).
    Mat kn = Mat::from_rows(f, {{1, 0, 0, 0},
                                {0, 1, 0, 0},
                                {0, 0, 1, 0},
                                {0, 0, 0, 1}});
    CHECK_THROWS_AS(classify_lines(kn), ParameterRange);

    // Non-projective and rank-deficient inputs are rejected by every
    // analysis entry point.
    Mat dup = Mat::from_rows(f, {{1, 0, 1, 1, 0, 0},
                                 {0, 1, 1, 0, 0, 1},
                                 {0, 0, 0, 0, 1, 1}});
    // columns 1 and 4 both (1,0,0)? column 0 = (1,0,0), column 3 = (1,0,0).
    CHECK_THROWS_AS(top_clique(dup), NotProjective);
    CHECK_THROWS_AS(compute_W(dup), NotProjective);

    Mat rd = Mat::from_rows(f, {{1, 0, 1, 0, 1, 0},
                                {0, 1, 0, 1, 0, 1},
                                {1, 1, 1, 1, 1, 1}});
    CHECK_THROWS_AS(top_clique(rd), RankDeficient);
}

TEST_CASE("maximality verdicts on the corpus") {
    Verdict a = decide_top(fx::example('a'));
    CHECK(!a.is_top);
    CHECK(!a.is_star_too);
    CHECK(a.reason == Verdict::Reason::NotMaximal_EmptyOrSingleton);

    Verdict b = decide_top(fx::example('b'));
    CHECK(!b.is_top);
    CHECK(b.reason == Verdict::Reason::NotMaximal_ProperSubsetOfStar);

    Verdict c = decide_top(fx::example('c'));
    CHECK(c.is_top);
    CHECK(!c.is_star_too);
    CHECK(c.reason == Verdict::Reason::Top_NoLine);

    Verdict d = decide_top(fx::example('d'));
    CHECK(d.is_top);
    CHECK(d.is_star_too);
    CHECK(d.reason == Verdict::Reason::Top_StarEqualsTop);
    CHECK(decide_star_and_top(fx::example('d')));
    CHECK(!decide_star_and_top(fx::example('b')));

    Verdict s = decide_top(fx::simplex_7_3());
    CHECK(!s.is_top);
    CHECK(s.reason == Verdict::Reason::NotMaximal_EmptyOrSingleton);

    CHECK(std::string(to_string(d.reason)) == "Top_StarEqualsTop");
}

TEST_CASE("a one-line clique over F_3") {
    const Mat m = fx::one_line_4_3_3();
    CliqueAnalysis an = analyze(m);
    CHECK(an.w_set.size() == 18);  // 27 - 1 - 4 * 2
    CHECK(an.y_set == std::vector<Vec>{{1, 2, 1},
                                       {1, 2, 2},
                                       {2, 1, 1},
                                       {2, 1, 2}});
    // Four admissible vectors, but proportional in pairs: two members.
    CHECK(an.clique.size() == 2);
    CHECK(an.span_y_dim == 2);
    CHECK(an.line_class.kind == LineClass::Kind::OneLine);
    REQUIRE(an.core.has_value());
    CHECK(an.core->dim() == 1);
    CHECK(an.verdict.is_top);
    CHECK(an.verdict.is_star_too);
}

TEST_CASE("one-stop analysis is consistent with the individual operations") {
    for (char which : {'a', 'b', 'c', 'd'}) {
        CAPTURE(which);
        const Mat m = fx::example(which);
        CliqueAnalysis an = analyze(m);
        CHECK(an.u == Code::from_generator(m));
        CHECK(an.w_set == compute_W(m));
        CHECK(an.y_set == compute_Y(m));
        CHECK(an.clique == top_clique(m));
        auto core = clique_core(m);
        CHECK(an.span_y_dim == core.span_y_dim);
        CHECK(an.core == core.core);
        CHECK(an.line_class.kind == classify_lines(m).kind);
        Verdict v = decide_top(m);
        CHECK(an.verdict.is_top == v.is_top);
        CHECK(an.verdict.is_star_too == v.is_star_too);
        CHECK(an.verdict.reason == v.reason);
    }
}

TEST_CASE("bundled example table matches the fixtures") {
    const auto& all = bundled_examples();
    REQUIRE(all.size() == 4);
    const char letters[] = {'a', 'b', 'c', 'd'};
    const bool tops[] = {false, false, true, true};
    const bool stars[] = {false, false, false, true};
    for (std::size_t i = 0; i < 4; ++i) {
        CAPTURE(i);
        CHECK(example_matrix(all[i]) == fx::example(letters[i]));
        CHECK(all[i].expect_top == tops[i]);
        CHECK(all[i].expect_star == stars[i]);
    }
}
