#include "pcgraph/examples.hpp"

namespace pcg {

const std::vector<BundledExample>& bundled_examples() {
    static const std::vector<BundledExample> corpus = {
        {"singleton",
         "[10,5]_2 code whose clique is a single vertex",
         2,
         {{1, 0, 0, 0, 0, 1, 0, 1, 1, 0},
          {0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
          {0, 0, 1, 0, 0, 0, 1, 1, 0, 0},
          {0, 0, 0, 1, 0, 0, 1, 0, 1, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 1, 1}},
         false,
         false},
        {"one-line",
         "[10,5]_2 code whose clique lies on exactly one line",
         2,
         {{1, 0, 0, 0, 0, 1, 0, 1, 1, 0},
          {0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
          {0, 0, 1, 0, 0, 0, 1, 1, 0, 1},
          {0, 0, 0, 1, 0, 0, 1, 0, 1, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 1, 0}},
         false,
         false},
        {"no-line",
         "[10,5]_2 code whose clique lies on no line (maximal)",
         2,
         {{1, 0, 0, 0, 0, 1, 0, 1, 1, 0},
          {0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
          {0, 0, 1, 0, 0, 0, 1, 1, 0, 0},
          {0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
          {0, 0, 0, 0, 1, 0, 0, 0, 1, 0}},
         true,
         false},
        {"star",
         "[6,4]_2 code whose clique fills its one line (a full star)",
         2,
         {{1, 0, 0, 0, 1, 1},
          {0, 1, 0, 0, 1, 0},
          {0, 0, 1, 0, 0, 1},
          {0, 0, 0, 1, 1, 1}},
         true,
         true},
    };
    return corpus;
}

Mat example_matrix(const BundledExample& ex) {
    return Mat::from_rows(Field::make(ex.q), ex.rows);
}

}  // namespace pcg
