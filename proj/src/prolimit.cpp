#include "prolimit.hpp"

#include <algorithm>

namespace higlim {

Truncation::Truncation(std::vector<Word> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ArgumentError("a truncation needs at least one coordinate");
  for (std::size_t n = 1; n <= coords_.size(); ++n) {
    if (coords_[n - 1].max_index() > n)
      throw ArgumentError("coordinate " + std::to_string(n) +
                          " uses a generator beyond its rank");
  }
  for (std::size_t n = 2; n <= coords_.size(); ++n) {
    if (project_to_rank(coords_[n - 1], static_cast<std::uint32_t>(n - 1)) != coords_[n - 2])
      throw ArgumentError("coordinates " + std::to_string(n - 1) + " and " +
                          std::to_string(n) + " are not coherent");
  }
}

const Word& Truncation::coordinate(std::uint32_t n) const {
  if (n < 1 || n > coords_.size()) throw ArgumentError("coordinate index out of range");
  return coords_[n - 1];
}

StableElement embed(const Word& w) { return StableElement(w); }

Truncation truncate(const StableElement& g, std::uint32_t depth) {
  if (depth < 1) throw ArgumentError("truncation depth must be at least 1");
  std::vector<Word> coords;
  coords.reserve(depth);
  for (std::uint32_t n = 1; n <= depth; ++n) coords.push_back(g.coordinate(n));
  return Truncation(std::move(coords));
}

Truncation truncate(const Truncation& x, std::uint32_t depth) {
  if (depth < 1 || depth > x.depth())
    throw ArgumentError("truncation depth out of range");
  std::vector<Word> coords(x.coordinates().begin(), x.coordinates().begin() + depth);
  return Truncation(std::move(coords));
}

Truncation group_op(const Truncation& x, const Truncation& y) {
  std::uint32_t depth = std::min(x.depth(), y.depth());
  std::vector<Word> coords;
  coords.reserve(depth);
  for (std::uint32_t n = 1; n <= depth; ++n)
    coords.push_back(x.coordinate(n) * y.coordinate(n));
  return Truncation(std::move(coords));
}

Truncation group_inv(const Truncation& x) {
  std::vector<Word> coords;
  coords.reserve(x.depth());
  for (std::uint32_t n = 1; n <= x.depth(); ++n) coords.push_back(x.coordinate(n).inverse());
  return Truncation(std::move(coords));
}

StableElement group_op(const StableElement& x, const StableElement& y) {
  return StableElement(x.word() * y.word());
}

StableElement group_inv(const StableElement& x) { return StableElement(x.word().inverse()); }

MetricBounds metric_bounds(const Truncation& x, const Truncation& y, std::uint32_t depth) {
  std::uint32_t common = std::min(x.depth(), y.depth());
  if (depth == 0) depth = common;
  if (depth > common) throw ArgumentError("metric depth exceeds a truncation's depth");
  Dyadic lower = Dyadic::zero();
  for (std::uint32_t n = 1; n <= depth; ++n) {
    if (x.coordinate(n) != y.coordinate(n))
      lower = lower + Dyadic::two_to_minus(static_cast<std::int32_t>(n));
  }
  return MetricBounds{lower, lower + Dyadic::two_to_minus(static_cast<std::int32_t>(depth))};
}

Dyadic metric(const StableElement& x, const StableElement& y) {
  if (x == y) return Dyadic::zero();
  // Coordinates at or beyond the larger max_index are the words themselves,
  // hence differ at every such level; the tail sums to 2^-(R-1).
  std::uint32_t r = std::max(x.word().max_index(), y.word().max_index());
  Dyadic total = Dyadic::two_to_minus(static_cast<std::int32_t>(r) - 1);
  for (std::uint32_t n = 1; n < r; ++n) {
    if (x.coordinate(n) != y.coordinate(n))
      total = total + Dyadic::two_to_minus(static_cast<std::int32_t>(n));
  }
  return total;
}

ConvergenceReport converges(std::span<const Truncation> seq, std::uint32_t depth) {
  if (seq.empty()) throw ArgumentError("convergence needs a nonempty sequence");
  if (depth < 1) throw ArgumentError("convergence depth must be at least 1");
  for (const Truncation& t : seq) {
    if (t.depth() < depth)
      throw ArgumentError("every sequence element must be defined to the requested depth");
  }
  ConvergenceReport report;
  report.depth = depth;
  report.settles_at.resize(depth);
  report.stable.resize(depth);
  report.all_stable = true;
  const std::size_t len = seq.size();
  for (std::uint32_t n = 1; n <= depth; ++n) {
    std::size_t start = len;
    while (start > 1 && seq[start - 2].coordinate(n) == seq[start - 1].coordinate(n)) --start;
    report.settles_at[n - 1] = static_cast<std::uint32_t>(start);
    report.stable[n - 1] = start < len;
    report.all_stable = report.all_stable && report.stable[n - 1];
  }
  return report;
}

std::optional<Truncation> limit_of_stable_sequence(std::span<const Truncation> seq,
                                                   std::uint32_t depth) {
  ConvergenceReport report = converges(seq, depth);
  if (!report.all_stable) return std::nullopt;
  return truncate(seq.back(), depth);
}

StableElement approximate_by_stable(const Truncation& x) {
  return embed(x.coordinate(x.depth()));
}

OccurrenceProfile hawaiian_occurrence_profile(const Truncation& x) {
  OccurrenceProfile profile;
  profile.depth = x.depth();
  profile.counts.resize(profile.depth);
  profile.growing.resize(profile.depth);
  for (std::uint32_t i = 1; i <= profile.depth; ++i) {
    auto& row = profile.counts[i - 1];
    row.resize(profile.depth);
    for (std::uint32_t n = 1; n <= profile.depth; ++n)
      row[n - 1] = x.coordinate(n).occurrences(i);
    profile.growing[i - 1] = profile.depth >= 2 && row[profile.depth - 1] > row[profile.depth - 2];
  }
  return profile;
}

}  // namespace higlim
