#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

enum class Subject { Knot, Link };

/// Upper bound on the crossing number of a size-n mosaic diagram: (n-2)^2
/// for links; knots lose one more crossing when n > 3 is even and two more
/// when n > 3 is odd.
int max_crossings(int n, Subject subject);

/// Lower bound on the mosaic number of a knot with crossing number c:
/// ceil(sqrt(c)) + 2.
int min_mosaic_number(int c);

/// Upper bound on the mosaic number: 4c + 2.
int max_mosaic_number(int c);

/// crossings + virtual crossings <= (n-2)^2 for a suitably connected mosaic.
bool virtual_bound_check(const Mosaic& m);

struct BoundCheck {
    std::string name;
    bool holds = false;
    std::string details;
};

struct ConjectureRow {
    std::string jones_text;
    int crossing_number = 0;
    int mosaic_size = 0;
    bool within_c_plus_2 = false;
    bool certified = false; // bracket span bound met the diagram's crossings
};

struct BoundReport {
    int n = 0;
    std::vector<BoundCheck> checks;
    std::vector<ConjectureRow> conjecture;

    bool all_hold() const;
    /// Human-readable text followed by a machine-readable
    /// `name=pass|fail` trailer.
    std::string to_string() const;
};

/// Census-backed audit of the bound formulas at size n (n <= 4 runs the full
/// enumeration; n == 5 runs the constrained all-interior-crossing checks).
BoundReport audit(int n, int feasibility_limit = 5);

} // namespace knotmosaic
