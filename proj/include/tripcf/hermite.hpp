#pragma once

#include "tripcf/units.hpp"

#include <string>
#include <vector>

namespace tripcf {

/// Fixed bijection between row indices i >= 1 and combo specs:
/// i -> (class ((i-1) mod 3) + 1, n = (i-1) / 3). Classes interleave before n
/// grows, so small algorithms are scanned first.
ComboSpec family_decode(long i);
long family_encode(const ComboSpec& spec);

/// One row of the digit matrix of a pair: the combo digit tuples of
/// family_decode(index) at that pair, flattened by simple concatenation.
struct HermiteRow {
    long index = 0;
    ComboSpec combo;
    std::vector<DigitTuple> tuples;
    std::vector<long> digits; // concatenation of the tuples
    OrbitStop termination = OrbitStop::Completed;
    std::string note;
    bool hasPeriodicity = false; // true iff periodicity.status is proven
    PeriodicityReport periodicity;
};

/// Streams `length` combo applications of row i and attaches the periodicity
/// report (proven only by an exact state revisit within caps).
HermiteRow hermite_row(const TrianglePoint& pt, long i, int length,
                       const PipelineCaps& caps = {});

struct RowNote {
    long index = 0;
    std::string status;

    bool operator==(const RowNote& o) const { return index == o.index && status == o.status; }
};

/// Bounded search outcome. found=false records how far the scan went and why
/// each row stopped; it is never a claim of non-periodicity.
struct PeriodicSearchResult {
    bool found = false;
    HermiteRow row; // meaningful when found
    long scanned = 0;
    std::vector<RowNote> provenance;
    std::string note;
};

/// Scans rows i = 1..maxRows and returns the first whose periodicity is
/// proven by revisit; the returned row streams one full preperiod + cycle.
PeriodicSearchResult find_periodic_row(const TrianglePoint& pt, long maxRows,
                                       const PipelineCaps& caps = {});

} // namespace tripcf
