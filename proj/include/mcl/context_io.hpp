#pragma once

#include <iosfwd>
#include <string>

#include "mcl/context.hpp"

namespace mcl {

// Context CSV: header row of attribute names (first cell blank or "object"),
// then one row per object with cells exactly "0" or "1". UTF-8, comma
// separated, newline terminated. Negated attributes never appear in files.
FormalContext loadContextCsv(std::istream& in);
FormalContext loadContextCsvFile(const std::string& path);

void saveContextCsv(const FormalContext& ctx, std::ostream& out);
void saveContextCsvFile(const FormalContext& ctx, const std::string& path);

}  // namespace mcl
