#include "fmap.hpp"

#include <sstream>

#include "stallings.hpp"

namespace higlim {

FreeMap make_map(std::uint32_t domain_rank, std::uint32_t codomain_rank,
                 std::vector<Word> images) {
  if (domain_rank > kMaxGeneratorIndex || codomain_rank > kMaxGeneratorIndex)
    throw ArgumentError("rank exceeds the supported maximum");
  if (images.size() != domain_rank)
    throw RankMismatchError("expected one image per domain generator");
  for (const Word& w : images) {
    if (w.max_index() > codomain_rank)
      throw RankMismatchError("image word uses a generator beyond the codomain rank");
  }
  return FreeMap{domain_rank, codomain_rank, std::move(images)};
}

FreeMap identity_map(std::uint32_t rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (std::uint32_t k = 1; k <= rank; ++k) images.push_back(Word::generator(k));
  return FreeMap{rank, rank, std::move(images)};
}

FreeMap standard_projection(std::uint32_t source_rank, std::uint32_t target_rank) {
  if (source_rank < target_rank)
    throw ArgumentError("projection source rank must be >= target rank");
  std::vector<Word> images;
  images.reserve(source_rank);
  for (std::uint32_t k = 1; k <= source_rank; ++k)
    images.push_back(k <= target_rank ? Word::generator(k) : Word());
  return make_map(source_rank, target_rank, std::move(images));
}

Word substitute(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (Letter x : w.letters()) {
    if (x.index > images.size())
      throw RankMismatchError("word uses a generator with no assigned image");
    const Word& img = images[x.index - 1];
    out = out * (x.sign > 0 ? img : img.inverse());
  }
  return out;
}

Word apply(const FreeMap& f, const Word& w) {
  if (w.max_index() > f.domain_rank)
    throw RankMismatchError("word lies outside the domain of the map");
  return substitute(f.images, w);
}

FreeMap compose(const FreeMap& f, const FreeMap& g) {
  if (f.codomain_rank != g.domain_rank)
    throw RankMismatchError("cannot compose: codomain and domain ranks differ");
  std::vector<Word> images;
  images.reserve(f.domain_rank);
  for (const Word& w : f.images) images.push_back(apply(g, w));
  return make_map(f.domain_rank, g.codomain_rank, std::move(images));
}

bool is_surjective(const FreeMap& f) {
  SubgroupGraph graph = SubgroupGraph::fold(f.images, f.codomain_rank);
  return graph.vertex_count() == 1 && graph.edge_count() == f.codomain_rank;
}

std::string to_text(const FreeMap& f) {
  std::ostringstream os;
  os << "map " << f.domain_rank << ' ' << f.codomain_rank << '\n';
  for (const Word& w : f.images) os << to_text(w) << '\n';
  return os.str();
}

}  // namespace higlim
