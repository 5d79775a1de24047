#pragma once

#include <string>
#include <vector>

namespace knotmosaic {

enum class Passage { Over, Under };

/// One crossing visit: positive label, over/under, optional sign
/// (0 = unspecified).
struct GaussEntry {
    int label = 0;
    Passage passage = Passage::Over;
    int sign = 0; // +1, -1 or 0

    bool operator==(const GaussEntry&) const = default;
};

/// Cyclic itinerary of crossings along a knot.  Valid codes mention each
/// label exactly twice, once over and once under.
struct GaussCode {
    std::vector<GaussEntry> entries;

    bool empty() const { return entries.empty(); }
    int crossing_count() const { return static_cast<int>(entries.size()) / 2; }
    bool has_signs() const;

    bool operator==(const GaussCode&) const = default;
};

/// Text form, e.g. "O1+U2+O3+U1+O2+U3+".
std::string gauss_to_string(const GaussCode& code);

/// Parse the text form (whitespace ignored).  Throws BadToken on a malformed
/// token and LabelCountMismatch when a label is not seen exactly once over
/// and once under.
GaussCode parse_gauss(const std::string& text);

/// Validate a code built in memory; throws LabelCountMismatch on violation.
void validate_gauss(const GaussCode& code);

/// True iff the two codes agree up to relabeling, cyclic rotation and
/// reversal.  Signs are compared only when `compare_signs` is set; a global
/// sign flip (mirror) is accepted.
bool gauss_equivalent(const GaussCode& a, const GaussCode& b,
                      bool compare_signs = false);

} // namespace knotmosaic
