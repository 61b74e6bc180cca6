#include "pcgraph/oracle.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "pcgraph/errors.hpp"
#include "pcgraph/qbinomial.hpp"
#include "pcgraph/topclique.hpp"

namespace pcg {

namespace {

void validate_clique(const std::vector<Code>& clique) {
    if (clique.empty())
        throw std::invalid_argument("maximality check needs a nonempty clique");
    const Code& c0 = clique.front();
    for (const Code& c : clique) {
        if (c.field() != c0.field() || c.n() != c0.n())
            throw AmbientMismatch("clique members live in different spaces");
        if (c.k() != c0.k())
            throw std::invalid_argument("clique members of unequal dimension");
        if (!is_projective(c))
            throw std::invalid_argument("clique member is not projective");
    }
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!adjacency(clique[i], clique[j]))
                throw std::invalid_argument("input is not a clique");
}

bool adjacent_to_all(const Code& x, const std::vector<Code>& clique) {
    for (const Code& c : clique)
        if (!adjacency(x, c)) return false;
    return true;
}

}  // namespace

std::vector<Code> brute_force_clique(const Code& u) {
    if (!is_projective(u))
        throw NotProjective("brute_force_clique needs a projective code");
    std::set<Code> found;
    for_each_k_subspace(u.space(), u.k() - 1, [&](const Subspace& h) {
        Code c = Code::from_subspace(h);
        if (is_projective(c)) found.insert(std::move(c));
    });
    return {found.begin(), found.end()};
}

bool adjacency(const Code& a, const Code& b) {
    if (a.field() != b.field() || a.n() != b.n())
        throw AmbientMismatch("adjacency across different spaces");
    if (a.k() != b.k() || a.k() == 0) return false;
    return intersect(a.space(), b.space()).dim() == a.k() - 1;
}

MaximalityResult maximality_check(const std::vector<Code>& clique) {
    validate_clique(clique);
    const Code& c0 = clique.front();
    const std::size_t k = c0.k();

    std::set<Subspace> members;
    for (const Code& c : clique) members.insert(c.space());

    MaximalityResult result;
    scan_k_subspaces(c0.space(), k - 1, [&](const Subspace& t) {
        return scan_k_superspaces(t, k, [&](const Subspace& x) {
            if (members.count(x)) return true;
            Code cand = Code::from_subspace(x);
            if (!is_projective(cand)) return true;
            if (!adjacent_to_all(cand, clique)) return true;
            result.maximal = false;
            result.witness = std::move(cand);
            return false;
        });
    });
    return result;
}

MaximalityResult maximality_check_naive(const std::vector<Code>& clique) {
    validate_clique(clique);
    const Code& c0 = clique.front();
    if (c0.field().q() != 2 || c0.n() > 6)
        throw TooLarge("naive full scan is limited to q=2, n<=6");

    std::set<Subspace> members;
    for (const Code& c : clique) members.insert(c.space());

    MaximalityResult result;
    const Subspace everything = Subspace::full(c0.field(), c0.n());
    scan_k_subspaces(everything, c0.k(), [&](const Subspace& x) {
        if (members.count(x)) return true;
        Code cand = Code::from_subspace(x);
        if (!is_projective(cand)) return true;
        if (!adjacent_to_all(cand, clique)) return true;
        result.maximal = false;
        result.witness = std::move(cand);
        return false;
    });
    return result;
}

bool verify_duality(const Mat& m) {
    const std::vector<Vec> y_set = compute_Y(m);
    if (y_set.empty())
        throw EmptyY("duality check needs at least one admissible y");

    const Subspace span_y =
        row_space(Mat::from_rows(m.field(), y_set, m.rows()));
    const std::size_t annihilator_dim =
        orthogonal_complement(span_y).dim();

    const std::vector<Code> clique =
        brute_force_clique(Code::from_generator(m));
    if (clique.empty()) return false;
    Subspace meet = clique.front().space();
    for (std::size_t i = 1; i < clique.size(); ++i)
        meet = intersect(meet, clique[i].space());

    return meet.dim() == annihilator_dim;
}

std::uint64_t count_lines_through_code(const Code& c) {
    const std::uint64_t q = c.field().q();
    const BigUint expected_shape =
        q_bracket(c.k(), q) * q_bracket(c.n() - c.k(), q);
    if (expected_shape > BigUint(10'000'000))
        throw TooLarge("line count through the code exceeds the 10^7 guard");

    std::uint64_t hyperplanes = 0;
    for_each_k_subspace(c.space(), c.k() - 1,
                        [&](const Subspace&) { ++hyperplanes; });
    std::uint64_t superspaces = 0;
    for_each_k_superspace(c.space(), c.k() + 1, [&](const Subspace& t) {
        if (!contains(t, c.space()))
            throw std::logic_error("superspace enumeration produced a "
                                   "non-superspace");
        ++superspaces;
    });
    // Lines through c are exactly the pairs (S, T) with S ⊂ c ⊂ T.
    return hyperplanes * superspaces;
}

}  // namespace pcg
