#include "invsystem.hpp"

#include <algorithm>

namespace higlim {

const FreeMap& SystemDescription::map_into(std::uint32_t level) const {
  if (level < 2 || level > levels)
    throw ArgumentError("no connecting map enters level " + std::to_string(level));
  return maps[level - 2];
}

SystemDescription make_system(std::vector<std::uint32_t> ranks, std::vector<FreeMap> maps) {
  if (ranks.empty()) throw ArgumentError("a system needs at least one level");
  if (maps.size() + 1 != ranks.size())
    throw ArgumentError("a system over N levels needs exactly N-1 connecting maps");
  SystemDescription s;
  s.levels = static_cast<std::uint32_t>(ranks.size());
  s.ranks = std::move(ranks);
  s.maps = std::move(maps);
  return s;
}

SystemDescription standard_system(std::uint32_t levels) {
  if (levels < 1) throw ArgumentError("a system needs at least one level");
  std::vector<std::uint32_t> ranks;
  std::vector<FreeMap> maps;
  for (std::uint32_t n = 1; n <= levels; ++n) {
    ranks.push_back(n);
    if (n >= 2) maps.push_back(standard_projection(n, n - 1));
  }
  return make_system(std::move(ranks), std::move(maps));
}

ValidationReport validate(const SystemDescription& s) {
  ValidationReport report;
  for (std::uint32_t n = 2; n <= s.levels; ++n) {
    const FreeMap& f = s.maps[n - 2];
    if (f.domain_rank != s.ranks[n - 1] || f.codomain_rank != s.ranks[n - 2]) {
      report.violations.push_back(
          "level " + std::to_string(n) + ": rank mismatch, map is " +
          std::to_string(f.domain_rank) + " -> " + std::to_string(f.codomain_rank) +
          " but declared ranks are " + std::to_string(s.ranks[n - 1]) + " -> " +
          std::to_string(s.ranks[n - 2]));
      continue;
    }
    if (!is_surjective(f))
      report.violations.push_back("level " + std::to_string(n) +
                                  ": connecting map is not surjective");
  }
  report.ok = report.violations.empty();
  return report;
}

SystemDescription restrict_cofinal(const SystemDescription& s,
                                   const std::vector<std::uint32_t>& indices) {
  if (indices.empty()) throw ArgumentError("invalid index set: empty");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 1 || indices[k] > s.levels)
      throw ArgumentError("invalid index set: level " + std::to_string(indices[k]) +
                          " does not exist");
    if (k > 0 && indices[k] <= indices[k - 1])
      throw ArgumentError("invalid index set: indices must be strictly increasing");
  }
  std::vector<std::uint32_t> ranks;
  ranks.reserve(indices.size());
  for (std::uint32_t i : indices) ranks.push_back(s.ranks[i - 1]);

  std::vector<FreeMap> maps;
  maps.reserve(indices.size() - 1);
  for (std::size_t k = 1; k < indices.size(); ++k) {
    // Composite from level indices[k] all the way down to indices[k-1].
    FreeMap composite = s.map_into(indices[k]);
    for (std::uint32_t m = indices[k] - 1; m > indices[k - 1]; --m)
      composite = compose(composite, s.map_into(m));
    maps.push_back(std::move(composite));
  }
  return make_system(std::move(ranks), std::move(maps));
}

Normalization normalize(const SystemDescription& s) {
  ValidationReport report = validate(s);
  if (!report.ok) {
    const bool rank_trouble =
        std::any_of(report.violations.begin(), report.violations.end(),
                    [](const std::string& v) { return v.find("rank mismatch") != std::string::npos; });
    if (rank_trouble) throw ArgumentError("system fails validation: " + report.violations.front());
    throw NotSurjectiveError("system fails validation: " + report.violations.front());
  }

  Normalization out;
  out.level_isos.reserve(s.levels);
  out.signature.reserve(s.levels);

  // Accumulated change of basis: basis_map_n sends the standard basis of
  // F_ranks[n-1] to the adapted basis (preimages first, kernel words last),
  // so theta_n is its inverse.  Level 1 keeps its own basis.
  FreeMap basis_map = identity_map(s.ranks[0]);
  out.level_isos.push_back(invert_bijective(basis_map));
  out.signature.emplace_back(s.ranks[0], 0);

  for (std::uint32_t n = 2; n <= s.levels; ++n) {
    BasisSplit split = split_basis(s.map_into(n));

    // Pull the previous level's adapted basis back through the section,
    // then append this level's kernel words.
    std::vector<Word> adapted;
    adapted.reserve(s.ranks[n - 1]);
    for (const Word& b : basis_map.images) adapted.push_back(apply(split.section, b));
    adapted.insert(adapted.end(), split.kernel_part.begin(), split.kernel_part.end());
    basis_map = make_map(s.ranks[n - 1], s.ranks[n - 1], std::move(adapted));

    out.level_isos.push_back(invert_bijective(basis_map));
    out.signature.emplace_back(static_cast<std::uint32_t>(basis_map.images.size() -
                                                          split.kernel_part.size()),
                               static_cast<std::uint32_t>(split.kernel_part.size()));
    out.splits.push_back(std::move(split));
  }

  // The squares this normalization exists to produce, checked exactly.
  for (std::uint32_t n = 2; n <= s.levels; ++n) {
    FreeMap down_then_iso = compose(s.map_into(n), out.level_isos[n - 2]);
    FreeMap iso_then_project =
        compose(out.level_isos[n - 1], standard_projection(s.ranks[n - 1], s.ranks[n - 2]));
    detail::check(down_then_iso == iso_then_project,
                  "normalization square fails to commute");
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> signature(const SystemDescription& s) {
  return normalize(s).signature;
}

Classification classify(const SystemDescription& s, std::uint32_t window) {
  if (window < 1) throw ArgumentError("classification window must be at least 1");
  ValidationReport report = validate(s);
  if (!report.ok)
    throw ArgumentError("cannot classify an invalid system: " + report.violations.front());

  Classification out;
  out.window = window;
  out.rank_evidence = s.ranks;

  // Every level strictly outranked by a later one: the prefix pattern of a
  // system whose ranks grow without bound.
  if (s.levels >= 2) {
    bool cofinal_growth = true;
    for (std::uint32_t i = 0; i + 1 < s.levels && cofinal_growth; ++i) {
      bool outranked = false;
      for (std::uint32_t j = i + 1; j < s.levels; ++j) {
        if (s.ranks[j] > s.ranks[i]) {
          outranked = true;
          break;
        }
      }
      cofinal_growth = outranked;
    }
    if (cofinal_growth) {
      out.verdict = SystemVerdict::universal_limit;
      return out;
    }
  }

  if (s.levels >= window) {
    bool constant_tail = true;
    for (std::uint32_t i = s.levels - window; i < s.levels; ++i)
      constant_tail = constant_tail && s.ranks[i] == s.ranks[s.levels - 1];
    if (constant_tail) {
      out.verdict = SystemVerdict::free_of_rank;
      out.rank = s.ranks[s.levels - 1];
      return out;
    }
  }

  out.verdict = SystemVerdict::undetermined;
  return out;
}

}  // namespace higlim
