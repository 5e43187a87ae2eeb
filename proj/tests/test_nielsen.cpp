#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fmap.hpp"
#include "nielsen.hpp"
#include "stallings.hpp"
#include "testutil.hpp"
#include "word.hpp"

using namespace higlim;
using higlim::testing::Rng;

namespace {

constexpr Letter a1{1, 1}, A1{1, -1}, a2{2, 1}, A2{2, -1};

Word w(std::initializer_list<Letter> raw) { return Word(raw); }

// The trace contract, checked from scratch: the final tuple, read as a map,
// equals the initial tuple precomposed with the forward automorphism.
void check_trace(const std::vector<Word>& initial, const NielsenReduction& run,
                 std::uint32_t ambient_rank, Rng& rng) {
  const std::uint32_t slots = static_cast<std::uint32_t>(initial.size());
  CHECK(compose(run.trace.forward, run.trace.backward) == identity_map(slots));
  CHECK(compose(run.trace.backward, run.trace.forward) == identity_map(slots));
  for (int probe = 0; probe < 20; ++probe) {
    Word word_in_slots = testing::random_word(rng, slots, 6);
    CHECK(substitute(run.tuple, word_in_slots) ==
          substitute(initial, apply(run.trace.forward, word_in_slots)));
    CHECK(substitute(initial, word_in_slots) ==
          substitute(run.tuple, apply(run.trace.backward, word_in_slots)));
  }
  for (const Word& entry : run.tuple) CHECK(entry.max_index() <= ambient_rank);
}

}  // namespace

TEST_CASE("elementary moves rewrite tuples") {
  std::vector<Word> tuple{w({a1, a2}), Word::generator(2)};
  apply_move(tuple, NielsenMove{NielsenMoveKind::right_multiply, 1, 2, -1});
  CHECK(tuple == std::vector<Word>{Word::generator(1), Word::generator(2)});
  apply_move(tuple, NielsenMove{NielsenMoveKind::swap_slots, 1, 2, 1});
  CHECK(tuple == std::vector<Word>{Word::generator(2), Word::generator(1)});
  apply_move(tuple, NielsenMove{NielsenMoveKind::invert_slot, 1, 0, 1});
  CHECK(tuple == std::vector<Word>{Word::generator(2, -1), Word::generator(1)});
}

TEST_CASE("elementary moves validate slots") {
  std::vector<Word> tuple{Word::generator(1), Word::generator(2)};
  CHECK_THROWS_AS(apply_move(tuple, NielsenMove{NielsenMoveKind::invert_slot, 3, 0, 1}),
                  ArgumentError);
  CHECK_THROWS_AS(apply_move(tuple, NielsenMove{NielsenMoveKind::swap_slots, 1, 1, 1}),
                  ArgumentError);
  CHECK_THROWS_AS(apply_move(tuple, NielsenMove{NielsenMoveKind::right_multiply, 2, 2, 1}),
                  ArgumentError);
}

TEST_CASE("reduction shortens a redundant generator pair") {
  std::vector<Word> initial{w({a1, a2}), Word::generator(2)};
  NielsenReduction run = nielsen_reduce(initial, 2);
  CHECK(run.tuple == std::vector<Word>{Word::generator(1), Word::generator(2)});
  CHECK(run.trace.moves.size() == 1);
  CHECK(run.trace.moves[0].kind == NielsenMoveKind::right_multiply);
  Rng rng(61);
  check_trace(initial, run, 2, rng);
}

TEST_CASE("reduced tuples come back untouched") {
  std::vector<Word> initial{Word::generator(1), Word::generator(2), Word()};
  NielsenReduction run = nielsen_reduce(initial, 2);
  CHECK(run.tuple == initial);
  CHECK(run.trace.moves.empty());
}

TEST_CASE("duplicate generators collapse to one") {
  std::vector<Word> initial{Word::generator(1), Word::generator(1)};
  NielsenReduction run = nielsen_reduce(initial, 1);
  CHECK(run.tuple == std::vector<Word>{Word::generator(1), Word()});
  CHECK(run.trace.moves.size() == 1);
  Rng rng(67);
  check_trace(initial, run, 1, rng);
}

TEST_CASE("reduction escapes the equal-length trap") {
  // Right-multiplications alone cannot shorten this pair; the reducer has
  // to reach through a left-multiplication to untangle it.
  std::vector<Word> initial{w({a1, a2}), w({a1, a2, A1})};
  NielsenReduction run = nielsen_reduce(initial, 2);
  CHECK(run.tuple == std::vector<Word>{Word::generator(1), Word::generator(2)});
  Rng rng(71);
  check_trace(initial, run, 2, rng);
}

TEST_CASE("tuples generating everything reduce to the standard form") {
  Rng rng(73);
  for (int round = 0; round < 120; ++round) {
    const std::uint32_t rank = 1 + static_cast<std::uint32_t>(rng() % 4);
    testing::RandomAutomorphism aut = testing::random_automorphism(rng, rank, 8, 8);
    std::vector<Word> initial = aut.forward.images;
    for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra)
      initial.push_back(testing::random_word(rng, rank, 3));
    NielsenReduction run = nielsen_reduce(initial, rank);
    for (std::uint32_t slot = 1; slot <= initial.size(); ++slot) {
      if (slot <= rank)
        CHECK(run.tuple[slot - 1] == Word::generator(slot));
      else
        CHECK(run.tuple[slot - 1].is_identity());
    }
    check_trace(initial, run, rank, rng);
  }
}

TEST_CASE("random tuples keep the trace contract") {
  Rng rng(79);
  for (int round = 0; round < 150; ++round) {
    const std::uint32_t rank = 1 + static_cast<std::uint32_t>(rng() % 3);
    std::vector<Word> initial;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) initial.push_back(testing::random_word(rng, rank, 6));
    NielsenReduction run = nielsen_reduce(initial, rank);
    check_trace(initial, run, rank, rng);
    std::size_t total_before = 0, total_after = 0;
    for (const Word& u : initial) total_before += u.length();
    for (const Word& u : run.tuple) total_after += u.length();
    CHECK(total_after <= total_before);
  }
}

TEST_CASE("sections invert surjections from the right") {
  FreeMap p = standard_projection(3, 2);
  FreeMap s = section_of_surjection(p);
  CHECK(compose(s, p) == identity_map(2));
  CHECK_THROWS_AS(section_of_surjection(make_map(1, 2, {Word::generator(1)})),
                  NotSurjectiveError);

  Rng rng(83);
  for (int round = 0; round < 80; ++round) {
    const std::uint32_t high = 2 + static_cast<std::uint32_t>(rng() % 3);
    const std::uint32_t low = 1 + static_cast<std::uint32_t>(rng() % high);
    testing::RandomAutomorphism upper = testing::random_automorphism(rng, high, 5, 6);
    testing::RandomAutomorphism lower = testing::random_automorphism(rng, low, 5, 6);
    FreeMap f = compose(compose(upper.forward, standard_projection(high, low)),
                        lower.forward);
    FreeMap section = section_of_surjection(f);
    CHECK(compose(section, f) == identity_map(low));
  }
}

TEST_CASE("bijective maps invert exactly") {
  CHECK(invert_bijective(identity_map(3)) == identity_map(3));
  FreeMap swap = make_map(2, 2, {Word::generator(2), Word::generator(1)});
  CHECK(invert_bijective(swap) == swap);
  FreeMap shear = make_map(2, 2, {w({a1, a2}), Word::generator(2)});
  CHECK(invert_bijective(shear) == make_map(2, 2, {w({a1, A2}), Word::generator(2)}));
  CHECK_THROWS_AS(invert_bijective(standard_projection(3, 2)), RankMismatchError);
  CHECK_THROWS_AS(invert_bijective(make_map(2, 2, {w({a1, a1}), Word::generator(2)})),
                  NotSurjectiveError);

  Rng rng(89);
  for (int round = 0; round < 200; ++round) {
    const std::uint32_t rank = 1 + static_cast<std::uint32_t>(rng() % 4);
    testing::RandomAutomorphism aut = testing::random_automorphism(rng, rank, 7, 8);
    FreeMap inverse = invert_bijective(aut.forward);
    CHECK(compose(aut.forward, inverse) == identity_map(rank));
    CHECK(compose(inverse, aut.forward) == identity_map(rank));
  }
}

TEST_CASE("split of the standard projection") {
  BasisSplit split = split_basis(standard_projection(3, 2));
  CHECK(split.preimage_part ==
        std::vector<Word>{Word::generator(1), Word::generator(2)});
  CHECK(split.kernel_part == std::vector<Word>{Word::generator(3)});
  CHECK(compose(split.section, standard_projection(3, 2)) == identity_map(2));
}

TEST_CASE("split follows a generator swap") {
  FreeMap f = make_map(3, 2, {Word::generator(2), Word::generator(1), Word()});
  BasisSplit split = split_basis(f);
  CHECK(split.preimage_part ==
        std::vector<Word>{Word::generator(2), Word::generator(1)});
  CHECK(split.kernel_part == std::vector<Word>{Word::generator(3)});
}

TEST_CASE("equal-rank splits have no kernel part") {
  Rng rng(97);
  for (int round = 0; round < 100; ++round) {
    const std::uint32_t rank = 1 + static_cast<std::uint32_t>(rng() % 4);
    testing::RandomAutomorphism aut = testing::random_automorphism(rng, rank, 6, 8);
    BasisSplit split = split_basis(aut.forward);
    CHECK(split.kernel_part.empty());
    CHECK(split.preimage_part.size() == rank);
  }
}

TEST_CASE("splits satisfy the basis contract") {
  CHECK_THROWS_AS(split_basis(make_map(1, 2, {Word::generator(1)})), NotSurjectiveError);

  Rng rng(103);
  for (int round = 0; round < 60; ++round) {
    const std::uint32_t high = 2 + static_cast<std::uint32_t>(rng() % 3);
    const std::uint32_t low = 1 + static_cast<std::uint32_t>(rng() % high);
    testing::RandomAutomorphism upper = testing::random_automorphism(rng, high, 5, 6);
    testing::RandomAutomorphism lower = testing::random_automorphism(rng, low, 5, 6);
    FreeMap f = compose(compose(upper.forward, standard_projection(high, low)),
                        lower.forward);
    BasisSplit split = split_basis(f);

    REQUIRE(split.preimage_part.size() == low);
    REQUIRE(split.kernel_part.size() == high - low);
    for (std::uint32_t j = 1; j <= low; ++j)
      CHECK(apply(f, split.preimage_part[j - 1]) == Word::generator(j));
    for (const Word& k : split.kernel_part) CHECK(apply(f, k).is_identity());
    CHECK(compose(split.section, f) == identity_map(low));

    // The combined tuple really is a basis of the domain: every standard
    // generator is expressible over it.
    std::vector<Word> combined = split.preimage_part;
    combined.insert(combined.end(), split.kernel_part.begin(), split.kernel_part.end());
    for (std::uint32_t i = 1; i <= high; ++i) {
      auto expr = express_in_basis(combined, Word::generator(i), high);
      REQUIRE(expr.has_value());
      CHECK(substitute(combined, *expr) == Word::generator(i));
    }
  }
}
