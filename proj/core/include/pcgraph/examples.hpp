#pragma once

#include <cstdint>
#include <vector>

#include "pcgraph/mat.hpp"

namespace pcg {

// A small built-in corpus of generator matrices with known outcomes, used by
// the `examples` CLI subcommand and as self-check fixtures.  One entry per
// qualitative behaviour of the classifier:
//
//   singleton   clique of size 1, many lines through it, not maximal
//   one-line    clique spans one line but misses part of it, not maximal
//   no-line     clique contained in no line, maximal
//   star        clique equal to a full star, maximal in two senses
struct BundledExample {
    const char* name;
    const char* summary;
    std::uint64_t q;
    std::vector<Vec> rows;
    bool expect_top;
    bool expect_star;
};

const std::vector<BundledExample>& bundled_examples();

Mat example_matrix(const BundledExample& ex);

}  // namespace pcg
