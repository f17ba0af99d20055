#pragma once

#include <string>
#include <vector>

#include "mstd/intset.hpp"

namespace mstd {

struct ParsedSet {
    IntSet set;
    std::vector<std::string> warnings;  // e.g. duplicate elements
};

/// Parses "0,2,3,4" (optional whitespace) or the interval shorthand
/// "[0,16] \ {14,15}". Duplicates are reported as warnings, not errors.
/// Throws parse_error naming the offending token and its position.
ParsedSet parse_set_literal(const std::string& text);

/// One integer per line; lines starting with '#' (and blank lines) ignored.
ParsedSet parse_set_file(const std::string& path);

/// Comma-separated element list, e.g. "0,2,3,4,7,11,12,14".
std::string format_set(const IntSet& a);

/// Uses the interval shorthand "[lo,hi] \ {missing}" when the set is within
/// 3 elements of a full interval, else the plain element list.
std::string format_set_pretty(const IntSet& a);

}  // namespace mstd
