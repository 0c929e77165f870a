// rack_io.cpp
#include "racklab/rack_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "racklab/errors.hpp"

namespace racklab {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::size_t parse_number(const Token& tok, std::size_t line) {
    std::size_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, tok.column, "expected a non-negative integer, got '" + tok.text + "'");
    }
    return value;
}

}  // namespace

Table parse_table(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError(1, 1, "missing order line");
    ++line_no;
    auto head = tokenize(line);
    if (head.size() != 1) {
        throw ParseError(line_no, head.empty() ? 1 : head[1 % head.size()].column,
                         "first line must contain exactly the order n");
    }
    const std::size_t n = parse_number(head[0], line_no);
    if (n == 0) throw ParseError(line_no, head[0].column, "order must be positive");
    if (n > 65535) throw ParseError(line_no, head[0].column, "order exceeds 65535");

    Table t(n);
    for (std::size_t x = 0; x < n; ++x) {
        if (!std::getline(in, line)) {
            throw ParseError(line_no + 1, 1, "expected row " + std::to_string(x) + ", found end of input");
        }
        ++line_no;
        const auto toks = tokenize(line);
        if (toks.size() != n) {
            const std::size_t col = toks.size() > n ? toks[n].column : line.size() + 1;
            throw ParseError(line_no, col, "row " + std::to_string(x) + " has " +
                                               std::to_string(toks.size()) + " entries, expected " +
                                               std::to_string(n));
        }
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t v = parse_number(toks[y], line_no);
            if (v >= n) {
                throw ParseError(line_no, toks[y].column,
                                 "entry " + toks[y].text + " is outside 0.." + std::to_string(n - 1));
            }
            t.at(x, y) = Element(v);
        }
    }
    while (std::getline(in, line)) {
        ++line_no;
        const auto extra = tokenize(line);
        if (!extra.empty()) throw ParseError(line_no, extra[0].column, "unexpected content after the table");
    }
    return t;
}

Table parse_table(const std::string& text) {
    std::istringstream in(text);
    return parse_table(in);
}

Table read_table_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_table(in);
}

std::string format_table(const Table& table) {
    std::string out = std::to_string(table.n) + "\n";
    for (std::size_t x = 0; x < table.n; ++x) {
        for (std::size_t y = 0; y < table.n; ++y) {
            if (y) out += ' ';
            out += std::to_string(table.at(x, y));
        }
        out += '\n';
    }
    return out;
}

void write_table_file(const std::filesystem::path& path, const Table& table) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << format_table(table);
}

}  // namespace racklab
