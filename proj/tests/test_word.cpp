#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "testutil.hpp"
#include "word.hpp"

using namespace higlim;
using higlim::testing::cancellation_results;
using higlim::testing::RawSeq;
using higlim::testing::Rng;

namespace {

Word w(std::initializer_list<Letter> raw) { return Word(raw); }

constexpr Letter a1{1, 1}, A1{1, -1}, a2{2, 1}, A2{2, -1}, a3{3, 1}, A3{3, -1};

}  // namespace

TEST_CASE("construction reduces cancelling pairs") {
  CHECK(w({a1, A1}).is_identity());
  CHECK(w({a1, a2, A2, a1}) == w({a1, a1}));
  CHECK(w({a1, a2}) == w({a1, a2}));
  CHECK(w({a1, a2, A2, A1}).is_identity());
  CHECK(w({A2, a1, A1, a2}).is_identity());
}

TEST_CASE("construction rejects bad letters") {
  CHECK_THROWS_AS(Word({Letter{0, 1}}), ArgumentError);
  CHECK_THROWS_AS(Word({Letter{kMaxGeneratorIndex + 1, 1}}), ArgumentError);
  CHECK_THROWS_AS(Word({Letter{1, 0}}), ArgumentError);
  CHECK_THROWS_AS(Word::generator(0), ArgumentError);
  CHECK_NOTHROW(Word::generator(kMaxGeneratorIndex));
}

TEST_CASE("multiplication reduces at the seam") {
  CHECK((Word::generator(1) * Word::generator(1, -1)).is_identity());
  CHECK(w({a1, a2}) * w({A2, a3}) == w({a1, a3}));
  CHECK(Word() * w({a1, a2}) == w({a1, a2}));
  CHECK(w({a1, a2}) * Word() == w({a1, a2}));
  CHECK(w({a1, a2}) * w({A2, A1}) == Word());
}

TEST_CASE("inverse reverses and flips") {
  CHECK(w({a1, a2}).inverse() == w({A2, A1}));
  CHECK(Word().inverse() == Word());
  CHECK(w({a1, a1}).inverse() == w({A1, A1}));
}

TEST_CASE("occurrences counts both signs") {
  CHECK(w({a1, a2, A1}).occurrences(1) == 2);
  CHECK(Word().occurrences(5) == 0);
  CHECK(w({a3, a3, a3}).occurrences(3) == 3);
  CHECK(w({a3, a3, a3}).occurrences(1) == 0);
}

TEST_CASE("length, max_index, identity flags") {
  CHECK(Word().length() == 0);
  CHECK(Word().max_index() == 0);
  CHECK(Word().is_identity());
  Word u = w({a1, a3, A2});
  CHECK(u.length() == 3);
  CHECK(u.max_index() == 3);
  CHECK_FALSE(u.is_identity());
}

TEST_CASE("reduction is idempotent") {
  Rng rng(20260819);
  for (int i = 0; i < 500; ++i) {
    Word once = testing::random_word(rng, 4, 10);
    Word again(std::span<const Letter>(once.letters()));
    CHECK(again == once);
  }
}

TEST_CASE("reduction agrees with every cancellation order") {
  Rng rng(424242);
  std::map<RawSeq, std::set<RawSeq>> memo;
  for (int i = 0; i < 2000; ++i) {
    std::vector<Letter> raw = testing::random_letters(rng, 3, 6);
    std::set<RawSeq> oracle = cancellation_results(testing::to_raw(raw), memo);
    REQUIRE(oracle.size() == 1);
    Word reduced((std::span<const Letter>(raw)));
    CHECK(testing::to_raw(reduced.letters()) == *oracle.begin());
  }
}

TEST_CASE("multiplication is associative") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    Word a = testing::random_word(rng, 4, 6);
    Word b = testing::random_word(rng, 4, 6);
    Word c = testing::random_word(rng, 4, 6);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("inverse is an involution and a two-sided inverse") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    Word u = testing::random_word(rng, 4, 8);
    CHECK(u.inverse().inverse() == u);
    CHECK((u * u.inverse()).is_identity());
    CHECK((u.inverse() * u).is_identity());
  }
}

TEST_CASE("letter order runs a1, A1, a2, A2") {
  CHECK(letter_less(a1, A1));
  CHECK(letter_less(A1, a2));
  CHECK(letter_less(a2, A2));
  CHECK_FALSE(letter_less(A1, a1));
  CHECK_FALSE(letter_less(a1, a1));
}

TEST_CASE("shortlex orders by length first") {
  CHECK(shortlex_less(Word(), Word::generator(1)));
  CHECK(shortlex_less(Word::generator(2), w({a1, a1})));
  CHECK(shortlex_less(w({a1, a2}), w({A1, a2})));
  CHECK_FALSE(shortlex_less(w({a1, a2}), w({a1, a2})));
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    Word a = testing::random_word(rng, 3, 5);
    Word b = testing::random_word(rng, 3, 5);
    if (a == b) {
      CHECK_FALSE(shortlex_less(a, b));
      CHECK_FALSE(shortlex_less(b, a));
    } else {
      CHECK(shortlex_less(a, b) != shortlex_less(b, a));
    }
  }
}

TEST_CASE("projection kills high generators and reduces") {
  CHECK(project_to_rank(w({a1, a3, a2}), 2) == w({a1, a2}));
  CHECK(project_to_rank(Word::generator(3), 2) == Word());
  CHECK(project_to_rank(w({a1, a3, A1, a3}), 2).is_identity());
  CHECK(project_to_rank(w({a2, a3, A2}), 2).is_identity());
  CHECK(project_to_rank(w({a1, a2}), 0) == Word());
}

TEST_CASE("projections compose downward") {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    Word u = testing::random_word(rng, 5, 10);
    for (std::uint32_t j = 0; j <= 5; ++j) {
      for (std::uint32_t k = 0; k <= j; ++k) {
        CHECK(project_to_rank(project_to_rank(u, j), k) == project_to_rank(u, k));
      }
    }
  }
}

TEST_CASE("word text rendering") {
  CHECK(to_text(Word()) == "1");
  CHECK(to_text(w({a1, A2, a3})) == "a1 A2 a3");
  CHECK(to_text(Letter{4, -1}) == "A4");
  CHECK(to_text(Letter{4, 1}) == "a4");
}
