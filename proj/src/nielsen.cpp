#include "nielsen.hpp"

#include <algorithm>

#include "stallings.hpp"

namespace higlim {

namespace {

int compare_letters(Letter a, Letter b) {
  if (a == b) return 0;
  return letter_less(a, b) ? -1 : 1;
}

// Lexicographic comparison of the first `count` letters, reading rhs
// positions through `mirror`: when mirrored, position i means the i-th
// letter of the word's inverse.
int compare_run(const Word& a, const Word& b, std::size_t count, bool mirror) {
  for (std::size_t i = 0; i < count; ++i) {
    Letter x = mirror ? inverse(a.letters()[a.length() - 1 - i]) : a.letters()[i];
    Letter y = mirror ? inverse(b.letters()[b.length() - 1 - i]) : b.letters()[i];
    if (int c = compare_letters(x, y); c != 0) return c;
  }
  return 0;
}

// Key: (length, first half, first half of the inverse, whole word).
int compare_key(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  std::size_t half = a.length() / 2;
  if (int c = compare_run(a, b, half, false); c != 0) return c;
  if (int c = compare_run(a, b, half, true); c != 0) return c;
  return compare_run(a, b, a.length(), false);
}

// Slot order for sorting: nontrivial words by key, trivial words last.
bool slot_less(const Word& a, const Word& b) {
  if (b.is_identity()) return !a.is_identity();
  if (a.is_identity()) return false;
  return compare_key(a, b) < 0;
}

NielsenMove inverse_move(const NielsenMove& m) {
  NielsenMove inv = m;
  if (m.kind == NielsenMoveKind::right_multiply) inv.sign = static_cast<std::int8_t>(-m.sign);
  return inv;
}

class Reducer {
 public:
  Reducer(std::span<const Word> tuple, std::uint32_t ambient_rank)
      : slots_(static_cast<std::uint32_t>(tuple.size())) {
    for (const Word& w : tuple) {
      if (w.max_index() > ambient_rank)
        throw RankMismatchError("tuple word uses a letter beyond the ambient rank");
    }
    out_.tuple.assign(tuple.begin(), tuple.end());
    out_.trace.forward = identity_map(slots_);
    out_.trace.backward = identity_map(slots_);
  }

  NielsenReduction run() {
    while (shorten_some_slot() || improve_some_key()) {
    }
    detail::check(compose(out_.trace.forward, out_.trace.backward) == identity_map(slots_) &&
                      compose(out_.trace.backward, out_.trace.forward) == identity_map(slots_),
                  "move trace is not an automorphism pair");
    return std::move(out_);
  }

 private:
  const Word& slot(std::uint32_t i) const { return out_.tuple[i - 1]; }

  void push(const NielsenMove& m) {
    apply_move(out_.tuple, m);
    out_.trace.moves.push_back(m);
    out_.trace.forward = compose(elementary_automorphism(m, slots_), out_.trace.forward);
    out_.trace.backward =
        compose(out_.trace.backward, elementary_automorphism(inverse_move(m), slots_));
  }

  // u_t <- u_s^sign * u_t, recorded as invert, right-multiply, invert.
  void push_left_multiply(std::uint32_t t, std::uint32_t s, std::int8_t sign) {
    push({NielsenMoveKind::invert_slot, t});
    push({NielsenMoveKind::right_multiply, t, s, static_cast<std::int8_t>(-sign)});
    push({NielsenMoveKind::invert_slot, t});
  }

  // The four products that can replace slot t using slot s, in scan order.
  struct Candidate {
    Word product;
    bool left;
    std::int8_t sign;
  };
  Candidate candidate(std::uint32_t t, std::uint32_t s, int which) const {
    switch (which) {
      case 0: return {slot(t) * slot(s), false, +1};
      case 1: return {slot(t) * slot(s).inverse(), false, -1};
      case 2: return {slot(s) * slot(t), true, +1};
      default: return {slot(s).inverse() * slot(t), true, -1};
    }
  }

  void apply_candidate(std::uint32_t t, std::uint32_t s, const Candidate& c) {
    if (c.left)
      push_left_multiply(t, s, c.sign);
    else
      push({NielsenMoveKind::right_multiply, t, s, c.sign});
  }

  bool shorten_some_slot() {
    for (std::uint32_t s = 1; s <= slots_; ++s) {
      for (std::uint32_t t = 1; t <= slots_; ++t) {
        if (t == s) continue;
        for (int which = 0; which < 4; ++which) {
          Candidate c = candidate(t, s, which);
          if (c.product.length() < slot(t).length()) {
            apply_candidate(t, s, c);
            return true;
          }
        }
      }
    }
    return false;
  }

  bool improve_some_key() {
    for (std::uint32_t i = 1; i < slots_; ++i) {
      for (std::uint32_t j = i + 1; j <= slots_; ++j) {
        if (slot_less(slot(j), slot(i))) {
          push({NielsenMoveKind::swap_slots, i, j});
          return true;
        }
      }
    }
    for (std::uint32_t t = 1; t <= slots_; ++t) {
      if (!slot(t).is_identity() && compare_key(slot(t).inverse(), slot(t)) < 0) {
        push({NielsenMoveKind::invert_slot, t});
        return true;
      }
    }
    for (std::uint32_t s = 1; s <= slots_; ++s) {
      for (std::uint32_t t = 1; t <= slots_; ++t) {
        if (t == s) continue;
        for (int which = 0; which < 4; ++which) {
          Candidate c = candidate(t, s, which);
          if (c.product.length() == slot(t).length() &&
              compare_key(c.product, slot(t)) < 0) {
            apply_candidate(t, s, c);
            return true;
          }
        }
      }
    }
    return false;
  }

  std::uint32_t slots_;
  NielsenReduction out_;
};

// Shared by the operations that require the reduced form of a generating
// tuple: checks it is exactly (a1, ..., a_m, 1, ..., 1).
bool is_standard_form(const std::vector<Word>& tuple, std::uint32_t m) {
  if (tuple.size() < m) return false;
  for (std::uint32_t i = 0; i < tuple.size(); ++i) {
    const Word expected = i < m ? Word::generator(i + 1) : Word();
    if (tuple[i] != expected) return false;
  }
  return true;
}

}  // namespace

void apply_move(std::vector<Word>& tuple, const NielsenMove& m) {
  auto slot_index = [&](std::uint32_t i) -> std::size_t {
    if (i < 1 || i > tuple.size()) throw ArgumentError("move slot out of range");
    return i - 1;
  };
  switch (m.kind) {
    case NielsenMoveKind::swap_slots: {
      std::size_t a = slot_index(m.t), b = slot_index(m.s);
      if (a == b) throw ArgumentError("swap needs two distinct slots");
      std::swap(tuple[a], tuple[b]);
      break;
    }
    case NielsenMoveKind::invert_slot: {
      std::size_t a = slot_index(m.t);
      tuple[a] = tuple[a].inverse();
      break;
    }
    case NielsenMoveKind::right_multiply: {
      std::size_t a = slot_index(m.t), b = slot_index(m.s);
      if (a == b) throw ArgumentError("multiplication needs two distinct slots");
      if (m.sign != 1 && m.sign != -1) throw ArgumentError("multiplier sign must be +1 or -1");
      tuple[a] = tuple[a] * (m.sign > 0 ? tuple[b] : tuple[b].inverse());
      break;
    }
  }
}

FreeMap elementary_automorphism(const NielsenMove& m, std::uint32_t slots) {
  FreeMap f = identity_map(slots);
  apply_move(f.images, m);
  return f;
}

NielsenReduction nielsen_reduce(const std::vector<Word>& tuple, std::uint32_t ambient_rank) {
  return nielsen_reduce(std::span<const Word>(tuple), ambient_rank);
}

NielsenReduction nielsen_reduce(std::span<const Word> tuple, std::uint32_t ambient_rank) {
  return Reducer(tuple, ambient_rank).run();
}

FreeMap section_of_surjection(const FreeMap& f) {
  NielsenReduction red = nielsen_reduce(f.images, f.codomain_rank);
  if (!is_standard_form(red.tuple, f.codomain_rank))
    throw NotSurjectiveError("map is not onto: its image tuple does not reduce to a basis");
  std::vector<Word> images(red.trace.forward.images.begin(),
                           red.trace.forward.images.begin() + f.codomain_rank);
  FreeMap section = make_map(f.codomain_rank, f.domain_rank, std::move(images));
  detail::check(compose(section, f) == identity_map(f.codomain_rank),
                "computed section fails to split the surjection");
  return section;
}

FreeMap invert_bijective(const FreeMap& f) {
  if (f.domain_rank != f.codomain_rank)
    throw RankMismatchError("only maps between equal ranks can be inverted");
  NielsenReduction red = nielsen_reduce(f.images, f.codomain_rank);
  if (!is_standard_form(red.tuple, f.codomain_rank))
    throw NotSurjectiveError("map is not onto, hence not an automorphism");
  FreeMap inverse = red.trace.forward;
  detail::check(compose(f, inverse) == identity_map(f.domain_rank) &&
                    compose(inverse, f) == identity_map(f.domain_rank),
                "computed inverse fails the two-sided identity check");
  return inverse;
}

BasisSplit split_basis(const FreeMap& f) {
  if (!is_surjective(f))
    throw NotSurjectiveError("map is not onto: folded image graph is not the full rose");
  const std::uint32_t n = f.domain_rank;
  const std::uint32_t m = f.codomain_rank;
  NielsenReduction red = nielsen_reduce(f.images, m);
  detail::check(is_standard_form(red.tuple, m),
                "generating tuple did not reduce to the standard form");

  BasisSplit out;
  out.preimage_part.assign(red.trace.forward.images.begin(),
                           red.trace.forward.images.begin() + m);
  out.kernel_part.assign(red.trace.forward.images.begin() + m,
                         red.trace.forward.images.end());

  // Section: express each codomain generator over the images of the
  // preimage words, then substitute the preimage words back in.
  std::vector<Word> image_basis;
  image_basis.reserve(m);
  for (const Word& b : out.preimage_part) image_basis.push_back(apply(f, b));
  std::vector<Word> section_images;
  section_images.reserve(m);
  for (std::uint32_t j = 1; j <= m; ++j) {
    std::optional<Word> expr = express_in_basis(image_basis, Word::generator(j), m);
    detail::check(expr.has_value(), "codomain generator escapes the image of the section basis");
    section_images.push_back(substitute(out.preimage_part, *expr));
  }
  out.section = make_map(m, n, std::move(section_images));

  detail::check(compose(out.section, f) == identity_map(m),
                "section does not split the surjection");
  for (const Word& k : out.kernel_part)
    detail::check(apply(f, k).is_identity(), "kernel part word has a nontrivial image");
  std::vector<Word> both = out.preimage_part;
  both.insert(both.end(), out.kernel_part.begin(), out.kernel_part.end());
  for (std::uint32_t i = 1; i <= n; ++i)
    detail::check(substitute(both, red.trace.backward.images[i - 1]) == Word::generator(i),
                  "adapted words do not form a basis of the domain");

  out.trace = std::move(red.trace);
  return out;
}

}  // namespace higlim
