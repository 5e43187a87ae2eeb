#include "word.hpp"

#include <ostream>
#include <sstream>

namespace higlim {

namespace {

void validate_letter(Letter x) {
  if (x.index == 0) throw ArgumentError("generator index must be >= 1");
  if (x.index > kMaxGeneratorIndex)
    throw ArgumentError("generator index exceeds the supported maximum");
  if (x.sign != +1 && x.sign != -1)
    throw ArgumentError("letter sign must be +1 or -1");
}

// Appends a letter to a reduced prefix, cancelling against the top if the
// new letter is its inverse.  Keeping the prefix reduced at every step makes
// a single left-to-right pass a complete free reduction.
void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back().index == x.index && out.back().sign != x.sign) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

Letter inverse(Letter x) { return Letter{x.index, static_cast<std::int8_t>(-x.sign)}; }

bool letter_less(Letter earlier, Letter later) {
  if (earlier.index != later.index) return earlier.index < later.index;
  return earlier.sign > later.sign;  // +1 before -1
}

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter x : raw) {
    validate_letter(x);
    push_reduced(letters_, x);
  }
}

Word::Word(std::initializer_list<Letter> raw)
    : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::generator(std::uint32_t index, std::int8_t sign) {
  Letter x{index, sign};
  validate_letter(x);
  Word w;
  w.letters_.push_back(x);
  return w;
}

std::uint32_t Word::max_index() const {
  std::uint32_t m = 0;
  for (Letter x : letters_) m = std::max(m, x.index);
  return m;
}

std::size_t Word::occurrences(std::uint32_t index) const {
  std::size_t n = 0;
  for (Letter x : letters_)
    if (x.index == index) ++n;
  return n;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(higlim::inverse(*it));
  return w;  // reversal of a reduced word is reduced
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word w;
  w.letters_ = lhs.letters_;
  w.letters_.reserve(lhs.letters_.size() + rhs.letters_.size());
  for (Letter x : rhs.letters_) push_reduced(w.letters_, x);
  return w;
}

bool shortlex_less(const Word& lhs, const Word& rhs) {
  if (lhs.length() != rhs.length()) return lhs.length() < rhs.length();
  const auto& a = lhs.letters();
  const auto& b = rhs.letters();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_less(a[i], b[i]);
  }
  return false;
}

Word project_to_rank(const Word& w, std::uint32_t rank) {
  std::vector<Letter> kept;
  kept.reserve(w.length());
  for (Letter x : w.letters())
    if (x.index <= rank) kept.push_back(x);
  return Word(std::span<const Letter>(kept));
}

std::string to_text(Letter x) {
  return (x.sign > 0 ? "a" : "A") + std::to_string(x.index);
}

std::string to_text(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out += ' ';
    out += to_text(w.letters()[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_text(w); }

}  // namespace higlim
