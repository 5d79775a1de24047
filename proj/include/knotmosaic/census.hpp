#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/laurent.hpp"
#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

enum class InteriorConstraint {
    None,
    AllCrossings,  // every interior cell is a classical crossing tile
    MinCrossings,  // at least min_crossings crossing tiles overall
};

struct CensusOptions {
    bool knots_only = false;
    bool canonical_only = false;
    bool with_jones = false; // only meaningful with knots_only
    InteriorConstraint interior = InteriorConstraint::None;
    int min_crossings = 0;
    std::optional<long long> max_results;
    Alphabet alphabet = Alphabet::Classical;
    int jobs = 1;
};

struct CensusRecord {
    Mosaic mosaic;
    int components = 0;
    int crossings = 0;
    int virtual_crossings = 0;
    std::optional<LaurentPoly> jones; // knots with with_jones only
    int multiplicity = 1;             // D4 orbit size

    CensusRecord() : mosaic(1) {}
};

/// Emit every suitably connected n-mosaic satisfying the options exactly once
/// (once per D4 orbit when canonical_only), in deterministic row-major
/// search order.  The callback returns false to stop early.
void enumerate(int n, const CensusOptions& opts,
               const std::function<bool(const CensusRecord&)>& emit);

/// Convenience: collect the full stream.
std::vector<CensusRecord> enumerate_all(int n, const CensusOptions& opts);

/// Transfer-matrix count of suitably connected n-mosaics.  Only
/// connectivity-local options are supported (alphabet, AllCrossings);
/// knots_only / canonical_only / MinCrossings throw UnsupportedFilter.
BigInt count(int n, const CensusOptions& opts = {});

/// Minimum of the eight D4 transforms under serialized-text order.
Mosaic canonical_form(const Mosaic& m);

/// D4 orbit size (divides 8).
int orbit_size(const Mosaic& m);

struct KnotClass {
    LaurentPoly jones;
    Mosaic witness; // fewest crossings, then canonical text order
    int witness_crossings = 0;
    long long count = 0; // canonical records in the class

    KnotClass() : witness(1) {}
};

/// Knot mosaics of size n grouped by Jones polynomial (one record per D4
/// orbit).  Throws FeasibilityLimit when n exceeds the limit.
std::vector<KnotClass> knot_census(int n, int feasibility_limit = 4);

} // namespace knotmosaic
