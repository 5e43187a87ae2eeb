#ifndef HIGLIM_NIELSEN_HPP
#define HIGLIM_NIELSEN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fmap.hpp"
#include "word.hpp"

namespace higlim {

// Elementary transformation of a word tuple: swap two slots, invert a slot,
// or right-multiply slot t by slot s (or its inverse).  Slots are 1-based.
enum class NielsenMoveKind : std::uint8_t { swap_slots, invert_slot, right_multiply };

struct NielsenMove {
  NielsenMoveKind kind;
  std::uint32_t t = 0;   // the slot the move rewrites (swap partner one)
  std::uint32_t s = 0;   // swap partner two, or the multiplier slot
  std::int8_t sign = 1;  // exponent on slot s for right_multiply

  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

// Mutates `tuple` by one move.  Throws ArgumentError for out-of-range slots
// or a two-slot move with t == s.
void apply_move(std::vector<Word>& tuple, const NielsenMove& m);

// The move as an automorphism of the free group on `slots` generators:
// swap exchanges a_t and a_s, invert sends a_t to its inverse, and
// right_multiply sends a_t to a_t * a_s^sign.
FreeMap elementary_automorphism(const NielsenMove& m, std::uint32_t slots);

// Accumulated effect of a move sequence.  Viewing a tuple U over F_r as the
// map f_U : F_n -> F_r with a_t |-> u_t, every move precomposes with its
// elementary automorphism, so after the run
//
//   substitute(final_tuple, v) == substitute(initial_tuple, apply(forward, v))
//
// for every word v over the slots, and backward is the inverse automorphism.
struct AutoTrace {
  std::vector<NielsenMove> moves;
  FreeMap forward;
  FreeMap backward;
};

struct NielsenReduction {
  std::vector<Word> tuple;
  AutoTrace trace;
};

// Greedy Nielsen reduction.  Repeatedly applies the first candidate move in
// a fixed scan order: first any one- or two-sided multiplication that
// strictly shortens a slot, then tie-breaking moves that keep lengths but
// strictly shrink a slot's comparison key (see below), sorting trivial
// slots to the end.  The result is a reduced tuple plus the full trace.
//
// The comparison key of a word w is the tuple (length, first half of w,
// first half of w^-1, w) compared lexicographically, letters ordered
// a1 < a1^-1 < a2 < ...  Keying on both halves rules out stable descents
// that plain shortlex cannot break, and makes the reduced form of a tuple
// that generates the whole ambient group exactly (a1, ..., a_r, 1, ..., 1).
NielsenReduction nielsen_reduce(std::span<const Word> tuple, std::uint32_t ambient_rank);
NielsenReduction nielsen_reduce(const std::vector<Word>& tuple, std::uint32_t ambient_rank);

// For a surjective f : F_n -> F_m, a map s : F_m -> F_n with
// compose(s, f) == identity_map(m).  Throws NotSurjectiveError otherwise.
FreeMap section_of_surjection(const FreeMap& f);

// Inverse of a bijective map.  Throws RankMismatchError when ranks differ
// and NotSurjectiveError when f is not onto (same-rank free groups are
// Hopfian, so onto is the whole bijectivity check).
FreeMap invert_bijective(const FreeMap& f);

// Basis of the domain adapted to a surjection f : F_n -> F_m.  The words
// preimage_part (m of them) map to a1 ... am in order, kernel_part (n - m)
// map to the identity, and together they form a free basis of the domain.
// section sends a_j to preimage_part[j-1].
struct BasisSplit {
  std::vector<Word> preimage_part;
  std::vector<Word> kernel_part;
  FreeMap section;
  AutoTrace trace;
};

BasisSplit split_basis(const FreeMap& f);

}  // namespace higlim

#endif
