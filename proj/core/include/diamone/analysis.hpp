// Canonical JSON analysis reports: the single-document summary the CLI
// emits for a table or bare tuple.  Reports are deterministic (sorted keys,
// integers only, newline-terminated) and embed the canonicalized input, so
// re-analyzing the echoed input reproduces the report byte for byte.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "diamone/betti_table.hpp"

namespace diamone {

/// Analyze a table.  For diameter-one tables `c_override`, if given, must
/// equal the profile degree; ACM tables require it (there is no intrinsic
/// c to read the five-tuple at) — missing/conflicting values throw
/// parse_error.
std::string analyze_table_json(const BettiTable& table,
                               std::optional<std::int64_t> c_override);

/// Analyze a bare five-tuple (no table-dependent sections).
std::string analyze_tuple_json(const FiveTuple& t);

}  // namespace diamone
