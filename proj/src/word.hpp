#ifndef HIGLIM_WORD_HPP
#define HIGLIM_WORD_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace higlim {

// Largest generator index accepted anywhere in the library.  Keeps index
// arithmetic comfortably inside 32 bits and catches absurd input early.
inline constexpr std::uint32_t kMaxGeneratorIndex = 1'000'000;

// One letter of a free-group word: a generator a_k or its inverse.
// Letters are ordered a1 < a1^-1 < a2 < a2^-1 < ..., which is the order all
// lexicographic comparisons in the library use.
struct Letter {
  std::uint32_t index = 1;  // generator number, >= 1
  std::int8_t sign = +1;    // +1 for a_k, -1 for a_k^-1

  friend bool operator==(const Letter&, const Letter&) = default;
};

Letter inverse(Letter x);

// True when `earlier` precedes `later` in the a1 < a1^-1 < a2 < ... order.
bool letter_less(Letter earlier, Letter later);

// A freely reduced word over {a1, a2, ...}.  Every constructor and operation
// reduces eagerly, so a Word never contains an adjacent x x^-1 pair.
class Word {
 public:
  Word() = default;  // identity

  // Reduces an arbitrary letter sequence.  Throws ArgumentError for a zero
  // index or an index above kMaxGeneratorIndex.
  explicit Word(std::span<const Letter> raw);
  explicit Word(std::initializer_list<Letter> raw);

  static Word generator(std::uint32_t index, std::int8_t sign = +1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  // Largest generator index occurring anywhere in the word; 0 for identity.
  std::uint32_t max_index() const;

  // Number of letters with the given index, counting both signs.
  std::size_t occurrences(std::uint32_t index) const;

  Word inverse() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Shortlex: shorter words first, equal lengths ordered letterwise by
// letter_less.  Total order on reduced words.
bool shortlex_less(const Word& lhs, const Word& rhs);

// Kills every letter with index > rank and reduces the rest.  This is the
// effect of the standard projection onto the first `rank` generators.
Word project_to_rank(const Word& w, std::uint32_t rank);

// Rendering used everywhere: "a3" / "A3" per letter, space separated, with a
// bare "1" for the identity.
std::string to_text(const Word& w);
std::string to_text(Letter x);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace higlim

#endif
