#pragma once

#include <filesystem>
#include <string>

#include "symgrowth/iteration.hpp"

namespace symgrowth {

/// Canonical form: keys sorted, every count and rational as an exact
/// string, sets as arrays of element encodings in canonical order.
json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& value, GroupPtr group);

json trace_to_json(const IterationTrace& trace, const Group& group);
IterationTrace trace_from_json(const json& value, const Group& group);

json ledger_to_json(const Ledger& ledger);
Ledger ledger_from_json(const json& value);

/// Pretty-printed canonical JSON plus trailing newline; byte-stable.
std::string canonical_dump(const json& value);

/// Writes via a temporary file and rename so readers never see a partial file.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

void emit_certificate(const Certificate& cert, const std::filesystem::path& path);

}  // namespace symgrowth
