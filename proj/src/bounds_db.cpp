#include "vdw/bounds_db.hpp"

#include <fstream>
#include <sstream>

namespace vdw {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

int parse_int(const std::string& s, const char* what, std::int64_t line_no) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + " field '" + s + "'", line_no);
    }
}

Bigint parse_bigint(const std::string& s, std::int64_t line_no) {
    if (s.empty()) throw ParseError("empty value field", line_no);
    for (char ch : s)
        if (ch < '0' || ch > '9')
            throw ParseError("bad value field '" + s + "'", line_no);
    return Bigint(s);
}

}  // namespace

BoundsDb load_bounds_db(std::istream& in) {
    BoundsDb db;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 5)
            throw ParseError("expected 5 tab-separated fields, got " +
                             std::to_string(fields.size()), line_no);
        KnownBound b;
        b.r = parse_int(fields[0], "r", line_no);
        b.k = parse_int(fields[1], "k", line_no);
        if (fields[2] == "exact")
            b.kind = BoundKind::Exact;
        else if (fields[2] == "lower")
            b.kind = BoundKind::StrictLower;
        else
            throw ParseError("bad kind field '" + fields[2] + "' (want exact|lower)", line_no);
        b.value = parse_bigint(fields[3], line_no);
        b.source = fields[4];
        try {
            db.add(std::move(b));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return db;
}

BoundsDb load_bounds_db(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open bounds db '" + path.string() + "'");
    return load_bounds_db(in);
}

}  // namespace vdw
