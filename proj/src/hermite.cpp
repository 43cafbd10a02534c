#include "tripcf/hermite.hpp"

#include "tripcf/errors.hpp"

namespace tripcf {

ComboSpec family_decode(long i) {
    if (i < 1) throw ParameterRange("family index must be >= 1; got " + std::to_string(i));
    ComboSpec spec;
    spec.classId = static_cast<int>((i - 1) % 3) + 1;
    spec.n = (i - 1) / 3;
    return spec;
}

long family_encode(const ComboSpec& spec) {
    if (spec.classId < 1 || spec.classId > 3 || spec.n < 0)
        throw ParameterRange("no family index for " + spec.str());
    return 3 * spec.n + spec.classId;
}

HermiteRow hermite_row(const TrianglePoint& pt, long i, int length, const PipelineCaps& caps) {
    HermiteRow row;
    row.index = i;
    row.combo = family_decode(i);

    ComboSequence seq = combo_sequence(row.combo, pt, length, caps.maxK);
    row.tuples = std::move(seq.tuples);
    row.termination = seq.stop;
    row.note = std::move(seq.note);
    for (const DigitTuple& t : row.tuples)
        for (long d : t.flattened()) row.digits.push_back(d);

    row.periodicity = detect_periodicity(row.combo, pt, caps.capIterations, caps.maxK);
    row.hasPeriodicity = row.periodicity.status == PeriodicityStatus::ProvenByRevisit;
    return row;
}

PeriodicSearchResult find_periodic_row(const TrianglePoint& pt, long maxRows,
                                       const PipelineCaps& caps) {
    PeriodicSearchResult result;
    result.note = "bounded search over rows 1.." + std::to_string(maxRows) +
                  "; a negative outcome is not a proof of non-periodicity";
    for (long i = 1; i <= maxRows; ++i) {
        ++result.scanned;
        PeriodicityReport report = detect_periodicity(family_decode(i), pt, caps.capIterations,
                                                      caps.maxK);
        std::string status = periodicity_status_name(report.status);
        if (!report.note.empty()) status += "; " + report.note;
        result.provenance.push_back({i, status});
        if (report.status == PeriodicityStatus::ProvenByRevisit) {
            result.found = true;
            int length = static_cast<int>(report.preperiod + report.period);
            result.row = hermite_row(pt, i, length, caps);
            return result;
        }
    }
    return result;
}

} // namespace tripcf
