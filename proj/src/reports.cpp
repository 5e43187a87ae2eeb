#include "reports.hpp"

#include <sstream>

namespace higlim {

std::string fold_report(const SubgroupGraph& graph) {
  std::ostringstream os;
  os << graph.adjacency_text();
  os << "subgroup rank " << graph.subgroup_rank() << '\n';
  return os.str();
}

std::string split_report(const BasisSplit& split) {
  std::ostringstream os;
  const std::uint32_t m = split.section.domain_rank;
  const std::uint32_t n = split.section.codomain_rank;
  os << "split rank " << n << " onto " << m << '\n';
  for (std::uint32_t j = 1; j <= m; ++j)
    os << "b " << j << ' ' << to_text(split.preimage_part[j - 1]) << '\n';
  for (std::uint32_t j = 1; j <= n - m; ++j)
    os << "k " << j << ' ' << to_text(split.kernel_part[j - 1]) << '\n';
  for (std::uint32_t j = 1; j <= m; ++j)
    os << "section " << j << ' ' << to_text(split.section.images[j - 1]) << '\n';
  os << "moves " << split.trace.moves.size() << '\n';
  return os.str();
}

std::string validation_report_text(const ValidationReport& report) {
  if (report.ok) return "ok\n";
  std::string out;
  for (const std::string& v : report.violations) out += "violation: " + v + "\n";
  return out;
}

std::string normalize_report(const Normalization& norm, const SystemDescription& s,
                             std::string_view section) {
  std::ostringstream os;
  os << "normalize levels " << s.levels << '\n';
  if (section == "all" || section == "signature") {
    os << "signature";
    for (const auto& [b, k] : norm.signature) os << " (" << b << ',' << k << ')';
    os << '\n';
  }
  if (section == "all" || section == "isos") {
    for (std::uint32_t n = 1; n <= s.levels; ++n) {
      os << "iso " << n;
      for (const Word& w : norm.level_isos[n - 1].images) os << ' ' << to_text(w) << " |";
      os << '\n';
    }
  }
  if (section == "all" || section == "squares") {
    // The squares were verified exactly during normalize; this section
    // restates the per-level identity that holds.
    for (std::uint32_t n = 2; n <= s.levels; ++n)
      os << "square " << n << " ok\n";
  }
  return os.str();
}

std::string classification_report(const Classification& c) {
  std::ostringstream os;
  switch (c.verdict) {
    case SystemVerdict::universal_limit:
      os << "UniversalG (prefix verdict)\n";
      break;
    case SystemVerdict::free_of_rank:
      os << "FreeOfRank(" << c.rank << ") (prefix verdict)\n";
      break;
    case SystemVerdict::undetermined:
      os << "Undetermined (prefix verdict)\n";
      os << "ranks";
      for (std::uint32_t r : c.rank_evidence) os << ' ' << r;
      os << '\n';
      break;
  }
  return os.str();
}

std::string counterexample_report_text(const CounterexampleReport& report) {
  std::ostringstream os;
  os << "endo-verify depth " << report.table_depth << " shift " << report.shift_bound
     << " out-depth " << report.out_depth << '\n';

  if (report.null_convergence_ok)
    os << "null-convergence ok\n";
  else
    os << "null-convergence violation at j " << report.null_violation_index << '\n';

  if (report.first_nontrivial_ok)
    os << "first-nontrivial ok\n";
  else
    os << "first-nontrivial violation at j " << report.first_nontrivial_violation_index
       << '\n';

  if (!report.null_convergence_ok) {
    os << "relations skipped\n";
    os << "coherence skipped\n";
  } else {
    if (report.relations_ok) {
      os << "relations ok i";
      for (std::uint32_t i : report.relation_indices) os << ' ' << i;
      os << '\n';
    } else {
      os << "relations violation at i " << report.relation_violation_i << " coordinate "
         << report.relation_violation_coordinate << '\n';
    }
    if (report.coherence_ok)
      os << "coherence ok\n";
    else
      os << "coherence violation at j " << report.coherence_violation_index << '\n';
    os << "factoring";
    for (std::uint32_t n : report.factoring_depths) os << ' ' << n;
    os << '\n';
  }

  os << "verdict " << (report.ok ? "ok" : "FAIL") << '\n';
  return os.str();
}

std::string convergence_report_text(const ConvergenceReport& report) {
  std::ostringstream os;
  os << "converges depth " << report.depth << '\n';
  for (std::uint32_t n = 1; n <= report.depth; ++n) {
    os << "coordinate " << n;
    if (report.stable[n - 1])
      os << " stable from " << report.settles_at[n - 1];
    else
      os << " not stable within the list";
    os << '\n';
  }
  os << "verdict " << (report.all_stable ? "stable" : "not stable") << '\n';
  return os.str();
}

std::string metric_bounds_text(const MetricBounds& bounds) {
  return "lower " + bounds.lower.to_text() + "\nupper " + bounds.upper.to_text() + "\n";
}

std::string occurrence_profile_text(const OccurrenceProfile& profile) {
  std::ostringstream os;
  os << "profile depth " << profile.depth << '\n';
  for (std::uint32_t i = 1; i <= profile.depth; ++i) {
    os << "a" << i;
    for (std::uint32_t n = 1; n <= profile.depth; ++n)
      os << ' ' << profile.counts[i - 1][n - 1];
    os << (profile.growing[i - 1] ? " growing" : " settled") << '\n';
  }
  return os.str();
}

}  // namespace higlim
