#ifndef HIGLIM_PROLIMIT_HPP
#define HIGLIM_PROLIMIT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dyadic.hpp"
#include "word.hpp"

namespace higlim {

// An element of the inverse limit of the free groups F_1 <- F_2 <- ...
// (connected by the standard projections), known up to level `depth`.
// Coordinate n is a word over rank n, and killing generator n+1 in
// coordinate n+1 must give coordinate n.
class Truncation {
 public:
  // coords[n-1] is coordinate n.  Throws ArgumentError when the list is
  // empty, a coordinate uses letters beyond its rank, or coherence between
  // adjacent coordinates fails.
  explicit Truncation(std::vector<Word> coords);

  std::uint32_t depth() const { return static_cast<std::uint32_t>(coords_.size()); }
  const Word& coordinate(std::uint32_t n) const;  // 1-based
  const std::vector<Word>& coordinates() const { return coords_; }

  friend bool operator==(const Truncation&, const Truncation&) = default;

 private:
  std::vector<Word> coords_;
};

// An element of the limit group whose coordinate sequence stabilizes: all
// coordinates from max_index(word) on equal the word itself, and earlier
// ones are its projections.  These are exactly the images of ordinary
// words under the generator-wise embedding, and they form a dense subgroup.
class StableElement {
 public:
  StableElement() = default;  // identity
  explicit StableElement(Word w) : word_(std::move(w)) {}

  const Word& word() const { return word_; }
  Word coordinate(std::uint32_t n) const { return project_to_rank(word_, n); }

  friend bool operator==(const StableElement&, const StableElement&) = default;

 private:
  Word word_;
};

StableElement embed(const Word& w);
Truncation truncate(const StableElement& g, std::uint32_t depth);
// First `depth` coordinates of x; depth must not exceed x.depth().
Truncation truncate(const Truncation& x, std::uint32_t depth);

// Coordinatewise group structure.  Mixed depths truncate to the minimum.
Truncation group_op(const Truncation& x, const Truncation& y);
Truncation group_inv(const Truncation& x);
StableElement group_op(const StableElement& x, const StableElement& y);
StableElement group_inv(const StableElement& x);

// Distance information at truncation level: the distance of any two limit
// elements extending x and y lies in [lower, upper].  Coordinates n <= N
// contribute 2^-n when they differ; the unseen tail can add at most 2^-N.
struct MetricBounds {
  Dyadic lower;
  Dyadic upper;
};

// depth 0 means "use the common depth min(x.depth(), y.depth())".
MetricBounds metric_bounds(const Truncation& x, const Truncation& y, std::uint32_t depth = 0);

// Exact distance between stable elements: beyond the larger max_index the
// coordinates are the words themselves, so the tail is a full geometric sum.
Dyadic metric(const StableElement& x, const StableElement& y);

// Coordinatewise stabilization of a finite sequence, judged within the
// sequence only.  settles_at[n-1] is the least 1-based position from which
// coordinate n is constant to the end; the coordinate counts as stable when
// that happens strictly before the last position (a constant tail of length
// one certifies nothing).
struct ConvergenceReport {
  std::uint32_t depth = 0;
  std::vector<std::uint32_t> settles_at;
  std::vector<bool> stable;
  bool all_stable = false;
};

ConvergenceReport converges(std::span<const Truncation> seq, std::uint32_t depth);

// The coordinatewise eventual value when every coordinate has settled, as a
// coherent Truncation of the given depth; nullopt otherwise.
std::optional<Truncation> limit_of_stable_sequence(std::span<const Truncation> seq,
                                                   std::uint32_t depth);

// Stable element agreeing with x on every known coordinate, so within
// distance 2^-depth of any extension of x.
StableElement approximate_by_stable(const Truncation& x);

// Occurrence counts of each generator in each coordinate.  counts[i-1][n-1]
// is occurrences(coordinate n, a_i).  growing[i-1] is set when the count of
// a_i still increased at the last known coordinate, the truncation-level
// signal that the element may fall outside the wedge-of-circles subgroup.
struct OccurrenceProfile {
  std::uint32_t depth = 0;
  std::vector<std::vector<std::size_t>> counts;
  std::vector<bool> growing;
};

OccurrenceProfile hawaiian_occurrence_profile(const Truncation& x);

}  // namespace higlim

#endif
