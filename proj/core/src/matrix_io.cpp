#include "pcgraph/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pcgraph/errors.hpp"

namespace pcg {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool is_comment_or_blank(const std::vector<Token>& tokens) {
    return tokens.empty() || tokens.front().text[0] == '#';
}

// Nonnegative integer strictly below q, or the appropriate error.
std::uint64_t parse_entry(const Token& tok, std::uint64_t q,
                          std::size_t line_no) {
    if (tok.text[0] == '-')
        throw RangeError("negative entry '" + tok.text + "'", line_no,
                         tok.column);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(),
                                     tok.text.data() + tok.text.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw RangeError("entry '" + tok.text + "' is out of range", line_no,
                         tok.column);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw ParseError("expected an integer, got '" + tok.text + "'",
                         line_no, tok.column);
    if (value >= q)
        throw RangeError("entry " + tok.text + " is not below q=" +
                         std::to_string(q), line_no, tok.column);
    return value;
}

}  // namespace

Mat parse_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    // Header: q <integer>.
    std::vector<Token> header;
    std::size_t header_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (is_comment_or_blank(tokens)) continue;
        header = std::move(tokens);
        header_line = line_no;
        break;
    }
    if (header.empty()) throw ParseError("empty input, expected 'q <int>'",
                                         line_no + 1, 1);
    if (header[0].text != "q")
        throw ParseError("first significant line must start with 'q', got '" +
                         header[0].text + "'", header_line, header[0].column);
    if (header.size() != 2)
        throw ParseError("header must be exactly 'q <int>'", header_line,
                         header.size() > 2 ? header[2].column
                                           : header[0].column);
    std::uint64_t q = 0;
    {
        const Token& tok = header[1];
        auto [ptr, ec] = std::from_chars(
            tok.text.data(), tok.text.data() + tok.text.size(), q);
        if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
            throw ParseError("expected an integer field size, got '" +
                             tok.text + "'", header_line, tok.column);
    }

    Field field = [&] {
        try {
            return make_field(q);
        } catch (const NotPrimePower& e) {
            throw FieldError(e.what(), header_line, header[1].column);
        } catch (const UnsupportedExtension& e) {
            throw FieldError(e.what(), header_line, header[1].column);
        }
    }();

    std::vector<Vec> rows;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (is_comment_or_blank(tokens)) continue;
        Vec row;
        row.reserve(tokens.size());
        for (const Token& tok : tokens)
            row.push_back(parse_entry(tok, q, line_no));
        if (rows.empty()) {
            width = row.size();
        } else if (row.size() != width) {
            throw ParseError("row has " + std::to_string(row.size()) +
                             " entries, previous rows have " +
                             std::to_string(width), line_no,
                             tokens.front().column);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError("no matrix rows after the header", line_no + 1, 1);
    return Mat::from_rows(field, rows);
}

Mat parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return parse_matrix(in);
}

std::string format_matrix_file(const Mat& m) {
    std::ostringstream out;
    out << "q " << m.field().q() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace pcg
