#include "pcgraph/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

namespace pcg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json mat_rows(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json vec_list(const std::vector<Vec>& vs) {
    ordered_json out = ordered_json::array();
    for (const Vec& v : vs) {
        ordered_json row = ordered_json::array();
        for (Elem e : v) row.push_back(e);
        out.push_back(std::move(row));
    }
    return out;
}

void print_rows(std::ostringstream& out, const Mat& m, const char* pad) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << pad;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

}  // namespace

Report run_classify(const Mat& m, bool with_oracle, bool naive_oracle) {
    const auto start = std::chrono::steady_clock::now();

    Report r{m, analyze(m), std::nullopt, 0.0};

    if (with_oracle) {
        OracleReport o;
        o.full_scan = naive_oracle;
        const std::vector<Code> bf = brute_force_clique(r.analysis.u);
        o.clique_agrees = (bf == r.analysis.clique);
        if (!r.analysis.y_set.empty()) o.duality_agrees = verify_duality(m);
        if (!bf.empty()) {
            const MaximalityResult mr =
                naive_oracle ? maximality_check_naive(bf)
                             : maximality_check(bf);
            o.oracle_maximal = mr.maximal;
            o.maximality_agrees = (mr.maximal == r.analysis.verdict.is_top);
            o.witness = mr.witness;
        } else {
            // No clique to extend; the analysis must not call it a top.
            o.maximality_agrees = !r.analysis.verdict.is_top;
        }
        r.oracle = std::move(o);
    }

    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

std::string report_json(const Report& r, int indent) {
    const CliqueAnalysis& a = r.analysis;
    ordered_json j;
    j["schema"] = "pcgraph-report/1";
    j["input"] = {{"q", r.input.field().q()},
                  {"n", r.input.cols()},
                  {"k", r.input.rows() - 1},
                  {"dim_u", r.input.rows()},
                  {"generator", mat_rows(r.input)}};
    j["projective"] = true;
    j["w_count"] = a.w_set.size();
    j["y_count"] = a.y_set.size();
    j["y_vectors"] = vec_list(a.y_set);
    j["clique_size"] = a.clique.size();
    ordered_json gens = ordered_json::array();
    for (const Code& c : a.clique) gens.push_back(mat_rows(c.generator()));
    j["clique_generators"] = std::move(gens);
    j["span_y_dim"] = a.span_y_dim;
    if (a.core)
        j["core"] = {{"dim", a.core->dim()},
                     {"basis", mat_rows(a.core->basis())}};
    else
        j["core"] = nullptr;

    ordered_json lc;
    lc["kind"] = to_string(a.line_class.kind);
    if (a.line_class.kind == LineClass::Kind::ManyLines)
        lc["count"] = a.line_class.line_count.str();
    if (a.line_class.kind == LineClass::Kind::OneLine)
        lc["line_core"] = mat_rows(a.line_class.line_core->basis());
    j["line_class"] = std::move(lc);

    j["verdict"] = {{"is_top", a.verdict.is_top},
                    {"is_star_too", a.verdict.is_star_too},
                    {"reason", to_string(a.verdict.reason)}};

    if (r.oracle) {
        const OracleReport& o = *r.oracle;
        ordered_json oj;
        oj["mode"] = o.full_scan ? "full-scan" : "candidate-set";
        oj["clique_agrees"] = o.clique_agrees;
        oj["duality_agrees"] =
            o.duality_agrees ? ordered_json(*o.duality_agrees)
                             : ordered_json(nullptr);
        oj["maximal"] = o.oracle_maximal ? ordered_json(*o.oracle_maximal)
                                         : ordered_json(nullptr);
        oj["maximality_agrees"] = o.maximality_agrees;
        oj["witness"] = o.witness ? mat_rows(o.witness->generator())
                                  : ordered_json(nullptr);
        j["oracle"] = std::move(oj);
    } else {
        j["oracle"] = nullptr;
    }

    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(indent);
}

std::string report_text(const Report& r) {
    const CliqueAnalysis& a = r.analysis;
    std::ostringstream out;
    out << "generator: " << r.input.rows() << " x " << r.input.cols()
        << " over F_" << r.input.field().q() << "  (n=" << r.input.cols()
        << ", k=" << r.input.rows() - 1 << ")\n";
    out << "projective: yes\n";
    out << "|W| = " << a.w_set.size() << ", |Y| = " << a.y_set.size() << "\n";
    if (!a.y_set.empty()) {
        out << "Y vectors:\n";
        for (const Vec& y : a.y_set) {
            out << "  ";
            for (std::size_t i = 0; i < y.size(); ++i) {
                if (i) out << ' ';
                out << y[i];
            }
            out << '\n';
        }
    }
    out << "clique size: " << a.clique.size() << "\n";
    for (std::size_t i = 0; i < a.clique.size(); ++i) {
        out << "member " << i + 1 << " (RREF):\n";
        print_rows(out, a.clique[i].generator(), "  ");
    }
    out << "span(Y) dim: " << a.span_y_dim << "\n";
    if (a.core) {
        out << "core (dim " << a.core->dim() << "):\n";
        print_rows(out, a.core->basis(), "  ");
    } else {
        out << "core: (none)\n";
    }
    out << "line class: " << to_string(a.line_class.kind);
    if (a.line_class.kind == LineClass::Kind::ManyLines)
        out << " (" << a.line_class.line_count << " lines)";
    out << "\n";
    out << "verdict: " << (a.verdict.is_top ? "TOP" : "not a top");
    if (a.verdict.is_star_too) out << " and STAR";
    out << " [" << to_string(a.verdict.reason) << "]\n";

    if (r.oracle) {
        const OracleReport& o = *r.oracle;
        out << "oracle (" << (o.full_scan ? "full-scan" : "candidate-set")
            << "): clique " << (o.clique_agrees ? "agrees" : "DISAGREES");
        if (o.duality_agrees)
            out << ", duality " << (*o.duality_agrees ? "agrees"
                                                      : "DISAGREES");
        out << ", maximality "
            << (o.maximality_agrees ? "agrees" : "DISAGREES") << "\n";
        if (o.witness) {
            out << "witness (projective, adjacent to every member, outside "
                   "the clique):\n";
            print_rows(out, o.witness->generator(), "  ");
        }
    }
    out << "elapsed: " << r.elapsed_ms << " ms\n";
    return out.str();
}

}  // namespace pcg
