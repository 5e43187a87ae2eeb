#ifndef HIGLIM_FMAP_HPP
#define HIGLIM_FMAP_HPP

#include <cstdint>
#include <vector>

#include "word.hpp"

namespace higlim {

// A homomorphism F_domain_rank -> F_codomain_rank, given by the images of
// the domain generators a1 ... a_domain_rank.  images[k-1] is the image of
// a_k and must only use generators up to codomain_rank.
struct FreeMap {
  std::uint32_t domain_rank = 0;
  std::uint32_t codomain_rank = 0;
  std::vector<Word> images;

  friend bool operator==(const FreeMap&, const FreeMap&) = default;
};

// Validates ranks and image alphabets; the only sanctioned way to build a
// FreeMap from raw parts.
FreeMap make_map(std::uint32_t domain_rank, std::uint32_t codomain_rank,
                 std::vector<Word> images);

FreeMap identity_map(std::uint32_t rank);

// a_k -> a_k for k <= target_rank, a_k -> 1 for k > target_rank.
// Requires source_rank >= target_rank.
FreeMap standard_projection(std::uint32_t source_rank, std::uint32_t target_rank);

// Image of `w` under `f`; substitutes generator images and reduces.
Word apply(const FreeMap& f, const Word& w);

// Substitution without a rank check on the result: replaces a_k in `w` by
// images[k-1].  Building block for apply() and for evaluating expressions
// against an arbitrary word tuple.
Word substitute(const std::vector<Word>& images, const Word& w);

// The composite "f then g" as a single map: (compose(f, g))(x) = g(f(x)).
// Requires f.codomain_rank == g.domain_rank.
FreeMap compose(const FreeMap& f, const FreeMap& g);

// Whether f hits every generator of the codomain, decided by folding the
// image tuple and checking that the result is the full-rank rose.
bool is_surjective(const FreeMap& f);

std::string to_text(const FreeMap& f);

}  // namespace higlim

#endif
