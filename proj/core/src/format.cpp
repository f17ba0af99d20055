#include "mstd/format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mstd/errors.hpp"

namespace mstd {

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::int64_t parse_int(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    const std::size_t start = i;
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(s.data() + start, s.data() + s.size(), value);
    if (ec != std::errc{}) {
        std::size_t end = start;
        while (end < s.size() && s[end] != ',' && s[end] != '}' &&
               s[end] != ']' && !std::isspace(static_cast<unsigned char>(s[end])))
            ++end;
        throw parse_error("expected integer, got \"" +
                              s.substr(start, std::max<std::size_t>(end - start, 1)) +
                              "\" at position " + std::to_string(start),
                          start);
    }
    i = std::size_t(ptr - s.data());
    return value;
}

void expect(const std::string& s, std::size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw parse_error(std::string("expected '") + c + "' at position " +
                              std::to_string(i),
                          i);
    ++i;
}

ParsedSet build(std::vector<std::int64_t> values) {
    ParsedSet result;
    std::vector<std::int64_t> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1] && (i == 1 || sorted[i] != sorted[i - 2]))
            result.warnings.push_back("duplicate element " +
                                      std::to_string(sorted[i]));
    result.set = IntSet(std::move(values));
    return result;
}

// "[lo,hi] \ {m1,m2,...}" with the exclusion part optional.
ParsedSet parse_interval_form(const std::string& s, std::size_t& i) {
    expect(s, i, '[');
    const std::int64_t lo = parse_int(s, i);
    expect(s, i, ',');
    const std::int64_t hi = parse_int(s, i);
    expect(s, i, ']');
    if (hi < lo)
        throw parse_error("empty interval [" + std::to_string(lo) + "," +
                              std::to_string(hi) + "]",
                          i);
    std::vector<std::int64_t> missing;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '\\') {
        ++i;
        expect(s, i, '{');
        skip_ws(s, i);
        if (i < s.size() && s[i] != '}') {
            missing.push_back(parse_int(s, i));
            skip_ws(s, i);
            while (i < s.size() && s[i] == ',') {
                ++i;
                missing.push_back(parse_int(s, i));
                skip_ws(s, i);
            }
        }
        expect(s, i, '}');
    }
    std::vector<std::int64_t> values;
    for (std::int64_t v = lo; v <= hi; ++v) values.push_back(v);
    std::erase_if(values, [&](std::int64_t v) {
        return std::find(missing.begin(), missing.end(), v) != missing.end();
    });
    return {IntSet(std::move(values)), {}};
}

}  // namespace

ParsedSet parse_set_literal(const std::string& text) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '[') {
        ParsedSet p = parse_interval_form(text, i);
        skip_ws(text, i);
        if (i != text.size())
            throw parse_error("trailing characters at position " +
                                  std::to_string(i),
                              i);
        return p;
    }
    std::vector<std::int64_t> values;
    if (i == text.size()) throw parse_error("empty set literal", 0);
    values.push_back(parse_int(text, i));
    skip_ws(text, i);
    while (i < text.size()) {
        expect(text, i, ',');
        values.push_back(parse_int(text, i));
        skip_ws(text, i);
    }
    return build(std::move(values));
}

ParsedSet parse_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open set file: " + path, 0);
    std::vector<std::int64_t> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        skip_ws(line, i);
        if (i == line.size() || line[i] == '#') continue;
        std::int64_t v;
        try {
            v = parse_int(line, i);
        } catch (const parse_error& e) {
            throw parse_error(path + ":" + std::to_string(lineno) + ": " +
                                  e.what(),
                              lineno);
        }
        skip_ws(line, i);
        if (i != line.size())
            throw parse_error(path + ":" + std::to_string(lineno) +
                                  ": trailing characters after integer",
                              lineno);
        values.push_back(v);
    }
    return build(std::move(values));
}

std::string format_set(const IntSet& a) {
    std::ostringstream out;
    bool first = true;
    for (std::int64_t x : a.elements()) {
        if (!first) out << ',';
        out << x;
        first = false;
    }
    return out.str();
}

std::string format_set_pretty(const IntSet& a) {
    if (a.size() < 2) return format_set(a);
    const std::uint64_t interval_size = std::uint64_t(a.diameter()) + 1;
    if (interval_size - a.size() > 3) return format_set(a);
    std::ostringstream out;
    out << '[' << a.min() << ',' << a.max() << ']';
    if (interval_size > a.size()) {
        out << " \\ {";
        bool first = true;
        std::size_t idx = 0;
        for (std::int64_t v = a.min(); v <= a.max(); ++v) {
            if (idx < a.size() && a.elements()[idx] == v) {
                ++idx;
                continue;
            }
            if (!first) out << ',';
            out << v;
            first = false;
        }
        out << '}';
    }
    return out.str();
}

}  // namespace mstd
