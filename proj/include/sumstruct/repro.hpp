#pragma once

#include <iosfwd>
#include <string>

namespace sumstruct {

// Recomputes the worked-example corpus as one canonical line per entry.
std::string repro_corpus();

// Compares the freshly computed corpus against the golden file.
// Returns true on an exact match; differences are written to diag.
bool repro_check(const std::string& golden_path, std::ostream& diag);

// Writes the freshly computed corpus to the golden file.
void repro_write(const std::string& golden_path);

} // namespace sumstruct
