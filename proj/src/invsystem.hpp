#ifndef HIGLIM_INVSYSTEM_HPP
#define HIGLIM_INVSYSTEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fmap.hpp"
#include "nielsen.hpp"

namespace higlim {

// An inverse system of free groups over levels 1 ... levels: level n has
// rank ranks[n-1], and maps[n-2] connects level n to level n-1 (no map
// enters level 1).  Construction checks shape only; whether the declared
// ranks match the maps and whether the maps are surjective is validate()'s
// verdict, so defective systems can be represented and reported on.
struct SystemDescription {
  std::uint32_t levels = 0;
  std::vector<std::uint32_t> ranks;
  std::vector<FreeMap> maps;

  const FreeMap& map_into(std::uint32_t level) const;  // the map level -> level-1

  friend bool operator==(const SystemDescription&, const SystemDescription&) = default;
};

SystemDescription make_system(std::vector<std::uint32_t> ranks, std::vector<FreeMap> maps);

// Levels 1 ... n of the full-rank system: rank k at level k, connected by
// the standard projections.
SystemDescription standard_system(std::uint32_t levels);

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> violations;
};

// Checks that every connecting map's ranks agree with the declared rank
// sequence and that every connecting map is surjective.  Collects all
// failures rather than stopping at the first.
ValidationReport validate(const SystemDescription& s);

// The subsystem on the selected levels (1-based, strictly increasing,
// nonempty); connecting maps are the composites of the original maps
// between consecutive selections.
SystemDescription restrict_cofinal(const SystemDescription& s,
                                   const std::vector<std::uint32_t>& indices);

// Change of coordinates aligning a system with the standard one: level_isos
// holds an isomorphism theta_n : level n -> F_ranks[n-1] per level, and for
// every n >= 2
//
//   compose(maps[n-2], theta_{n-1}) == compose(theta_n, standard_projection)
//
// holds exactly.  splits[n-2] is the basis split of the map into level n-1
// that the construction consumed, and signature[n-1] is the pair
// (preimage part size, kernel part size) at level n, with level 1 counted
// as (rank, 0).
struct Normalization {
  std::vector<FreeMap> level_isos;
  std::vector<BasisSplit> splits;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> signature;
};

Normalization normalize(const SystemDescription& s);

// signature(s) = normalize(s).signature; kernel sizes equal the rank jumps.
std::vector<std::pair<std::uint32_t, std::uint32_t>> signature(const SystemDescription& s);

enum class SystemVerdict : std::uint8_t { free_of_rank, universal_limit, undetermined };

// Verdict about the supplied finite prefix of a system.  universal_limit
// ("UniversalG") needs every level to be strictly outranked by some later
// level; free_of_rank needs the final `window` levels to share one rank.
// Anything else is undetermined, with the rank sequence as evidence.
struct Classification {
  SystemVerdict verdict = SystemVerdict::undetermined;
  std::uint32_t rank = 0;    // meaningful for free_of_rank
  std::uint32_t window = 0;  // the window the verdict used
  std::vector<std::uint32_t> rank_evidence;
};

Classification classify(const SystemDescription& s, std::uint32_t window = 3);

}  // namespace higlim

#endif
