#pragma once

#include <iosfwd>
#include <string>

#include "pcgraph/mat.hpp"

namespace pcg {

// Matrix file grammar, one token stream with 1-based error positions:
//
//   # comment lines and blank lines are skipped anywhere
//   q <integer>            first significant line
//   <e11> <e12> ... <e1n>  one line per generator row
//   ...
//
// Entries must be integers in [0, q). Throws ParseError on malformed input
// (ragged rows included), FieldError when q is not a usable field size, and
// RangeError for out-of-range entries.
Mat parse_matrix(std::istream& in);

// Same, reading from a file; errors mention the stream position only.
Mat parse_matrix_file(const std::string& path);

// Inverse of parse_matrix: "q <q>" header plus one line per row.
std::string format_matrix_file(const Mat& m);

}  // namespace pcg
