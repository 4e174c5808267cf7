#pragma once

#include <iosfwd>
#include <string>

#include "famc/group.hpp"

namespace famc {

// Cayley-table JSON format:
//   {
//     "order": n,
//     "table": [[...], ...],   // n rows of n indices in 0..n-1
//     "labels": ["e", ...]     // optional, n strings
//   }
// The loaded table goes through the full validating path, so malformed JSON,
// shape mismatches and non-groups all fail with a diagnostic.
GroupPtr load_group_json(std::istream& in,
                         std::size_t max_order = kDefaultMaxOrder);
GroupPtr load_group_file(const std::string& path,
                         std::size_t max_order = kDefaultMaxOrder);
GroupPtr load_group_string(const std::string& text,
                           std::size_t max_order = kDefaultMaxOrder);

std::string group_to_json(const FiniteGroup& g);

}  // namespace famc
