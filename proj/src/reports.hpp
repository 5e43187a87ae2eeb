#ifndef HIGLIM_REPORTS_HPP
#define HIGLIM_REPORTS_HPP

#include <string>
#include <string_view>

#include "endo.hpp"
#include "invsystem.hpp"
#include "nielsen.hpp"
#include "prolimit.hpp"
#include "stallings.hpp"

// Plain-text renderings of the structured results, with a stable line
// grammar: identical inputs always produce byte-identical text, so scripts
// can diff reports and tests can pin golden output.

namespace higlim {

std::string fold_report(const SubgroupGraph& graph);
std::string split_report(const BasisSplit& split);
std::string validation_report_text(const ValidationReport& report);

// section: "all", "signature", "isos", or "squares".
std::string normalize_report(const Normalization& norm, const SystemDescription& s,
                             std::string_view section);

// One-line verdict, e.g. "UniversalG (prefix verdict)"; undetermined
// verdicts carry the rank evidence on a second line.
std::string classification_report(const Classification& c);

std::string counterexample_report_text(const CounterexampleReport& report);
std::string convergence_report_text(const ConvergenceReport& report);
std::string metric_bounds_text(const MetricBounds& bounds);
std::string occurrence_profile_text(const OccurrenceProfile& profile);

}  // namespace higlim

#endif
