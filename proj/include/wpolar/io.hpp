#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "tree.hpp"

namespace wpolar {

enum class ParseErrorKind {
    BadHeader,
    MalformedLine,
    VertexOutOfRange,
    DuplicateEdge,
    WrongEdgeCount,
    NotATree,
    DegreeTooLarge,
};

struct ParseError : std::runtime_error {
    ParseErrorKind kind;
    ParseError(ParseErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Edge-list document: line 1 holds n, then exactly n-1 lines "u v" with
// 0 <= u < v < n, decimal, LF-terminated.
inline Tree parse_edge_list(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(ParseErrorKind::BadHeader, "empty document");

    auto parse_int = [](const std::string& s, std::size_t& pos) -> long long {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start || pos - start > 9) return -1;
        return std::stoll(s.substr(start, pos - start));
    };

    std::size_t pos = 0;
    long long n = parse_int(lines[0], pos);
    if (n < 1 || pos != lines[0].size())
        throw ParseError(ParseErrorKind::BadHeader, "first line must hold the vertex count");
    if (static_cast<long long>(lines.size()) - 1 != n - 1)
        throw ParseError(ParseErrorKind::WrongEdgeCount,
                         "expected exactly " + std::to_string(n - 1) + " edge lines, got " +
                             std::to_string(lines.size() - 1));

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& ln = lines[i];
        pos = 0;
        long long u = parse_int(ln, pos);
        if (u < 0 || pos >= ln.size() || ln[pos] != ' ')
            throw ParseError(ParseErrorKind::MalformedLine, "bad edge line " + std::to_string(i + 1));
        ++pos;
        long long v = parse_int(ln, pos);
        if (v < 0 || pos != ln.size())
            throw ParseError(ParseErrorKind::MalformedLine, "bad edge line " + std::to_string(i + 1));
        if (u >= v)
            throw ParseError(ParseErrorKind::MalformedLine,
                             "edge endpoints must satisfy u < v on line " + std::to_string(i + 1));
        if (v >= n)
            throw ParseError(ParseErrorKind::VertexOutOfRange,
                             "vertex label out of range on line " + std::to_string(i + 1));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i] == edges[j]) throw ParseError(ParseErrorKind::DuplicateEdge, "duplicate edge");

    Tree t;
    try {
        t = make_tree(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorKind::NotATree, e.what());
    }
    if (!is_chemical(t))
        throw ParseError(ParseErrorKind::DegreeTooLarge, "vertex of degree greater than 4");
    return t;
}

inline std::string serialize_edge_list(const Tree& t) {
    std::string out = std::to_string(t.n);
    out += '\n';
    for (auto [u, v] : t.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

// Single-line rendering for witness cells: "n:u-v,u-v,...".
inline std::string serialize_edge_list_inline(const Tree& t) {
    std::string out = std::to_string(t.n);
    out += ':';
    bool first = true;
    for (auto [u, v] : t.edges()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(u);
        out += '-';
        out += std::to_string(v);
    }
    return out;
}

// RFC-style minimal quoting; numeric cells stay bare.
inline std::string csv_cell(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(cells[i]);
    }
    out += '\n';
    return out;
}

}  // namespace wpolar
