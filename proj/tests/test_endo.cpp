#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "endo.hpp"
#include "prolimit.hpp"
#include "testutil.hpp"
#include "word.hpp"

using namespace higlim;
using higlim::testing::Rng;

namespace {

Word conj_by_a1(const Word& w) {
  return Word::generator(1) * w * Word::generator(1, -1);
}

EndoTable identity_table(std::uint32_t depth) {
  std::vector<StableElement> images;
  for (std::uint32_t j = 1; j <= depth; ++j) images.push_back(embed(Word::generator(j)));
  return make_endo_table(std::move(images), 0);
}

Word high_word(Rng& rng, std::uint32_t low, std::uint32_t high, std::size_t max_length) {
  std::vector<Letter> letters;
  const std::size_t length = rng() % (max_length + 1);
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint32_t index = low + static_cast<std::uint32_t>(rng() % (high - low + 1));
    letters.push_back(Letter{index, rng() % 2 == 0 ? std::int8_t{1} : std::int8_t{-1}});
  }
  return Word(std::span<const Letter>(letters));
}

}  // namespace

TEST_CASE("first nontrivial coordinate of stable elements") {
  CHECK(first_nontrivial(embed(Word::generator(1) * Word::generator(6) *
                               Word::generator(1, -1))) == 6);
  CHECK(first_nontrivial(embed(Word::generator(3))) == 3);
  CHECK_FALSE(first_nontrivial(embed(Word())).has_value());
  CHECK(first_nontrivial(embed(Word::generator(2) * Word::generator(5))) == 2);
}

TEST_CASE("table construction validates shape") {
  CHECK_THROWS_AS(make_endo_table({}, 0), ArgumentError);
  EndoTable t = make_endo_table({embed(Word::generator(1))}, 3);
  CHECK(t.table_depth == 1);
  CHECK(t.shift_bound == 3);
}

TEST_CASE("shift certificate verification") {
  NullConvergenceCertificate good = verify_null_convergence(counterexample_table(12));
  CHECK(good.ok);
  REQUIRE(good.coordinate_bounds.size() == 12);
  for (std::uint32_t n = 1; n <= 12; ++n) CHECK(good.coordinate_bounds[n - 1] == n + 2);

  EndoTable broken = counterexample_table(8);
  broken.images[4] = embed(Word::generator(1));
  NullConvergenceCertificate bad = verify_null_convergence(broken);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violating_index == 5);

  NullConvergenceCertificate ident = verify_null_convergence(identity_table(6));
  CHECK(ident.ok);
  for (std::uint32_t n = 1; n <= 6; ++n) CHECK(ident.coordinate_bounds[n - 1] == n);
}

TEST_CASE("certified tables are close to the identity map in the tail") {
  EndoTable t = counterexample_table(12);
  for (std::uint32_t j = 1; j <= t.table_depth; ++j) {
    Dyadic distance = metric(t.images[j - 1], StableElement());
    if (j >= t.shift_bound + 1) {
      CHECK(distance <= Dyadic::two_to_minus(
                            static_cast<std::int32_t>(j - t.shift_bound - 1)));
    } else {
      CHECK(distance <= Dyadic::one());
    }
  }
}

TEST_CASE("coordinate evaluation substitutes table images") {
  EndoTable ident = identity_table(8);
  Truncation g = truncate(embed(Word::generator(2) * Word::generator(5)), 8);
  for (std::uint32_t n = 1; n <= 8; ++n)
    CHECK(eval_coordinate(ident, g, n) == g.coordinate(n));

  EndoTable t = counterexample_table(12);
  CHECK(eval_coordinate(t, truncate(embed(Word::generator(6)), 8), 6) ==
        conj_by_a1(Word::generator(6)));
  CHECK(eval_coordinate(t, truncate(embed(Word::generator(8)), 10), 7) ==
        Word::generator(6));
}

TEST_CASE("evaluation needs enough depth") {
  EndoTable t = counterexample_table(12);
  Truncation shallow = truncate(embed(Word::generator(3)), 5);
  CHECK_NOTHROW(eval_coordinate(t, shallow, 3));
  CHECK_THROWS_AS(eval_coordinate(t, shallow, 4), InsufficientDepthError);
  try {
    eval_coordinate(t, shallow, 4);
  } catch (const InsufficientDepthError& e) {
    CHECK(e.required_depth == 6);
  }
  CHECK_THROWS_AS(eval(t, truncate(embed(Word::generator(1)), 12), 11),
                  InsufficientDepthError);
  CHECK_THROWS_AS(eval_coordinate(t, shallow, 0), ArgumentError);
}

TEST_CASE("evaluated truncations match direct substitution") {
  EndoTable t = counterexample_table(12);
  CHECK(eval(t, truncate(embed(Word::generator(3)), 12), 10) ==
        truncate(embed(Word::generator(3)), 10));
  Word expected = conj_by_a1(Word::generator(2)) * Word::generator(2);
  CHECK(eval(t, truncate(embed(Word::generator(2) * Word::generator(4)), 12), 10) ==
        truncate(embed(expected), 10));

  EndoTable ident = identity_table(9);
  Truncation g = truncate(embed(Word::generator(4) * Word::generator(7, -1)), 9);
  CHECK(eval(ident, g, 9) == g);
}

TEST_CASE("evaluation is a homomorphism") {
  EndoTable t = counterexample_table(12);
  Rng rng(139);
  for (int round = 0; round < 300; ++round) {
    Word u = testing::random_word(rng, 12, 6);
    Word v = testing::random_word(rng, 12, 6);
    Truncation gu = truncate(embed(u), 12);
    Truncation gv = truncate(embed(v), 12);
    Truncation product = truncate(embed(u * v), 12);
    CHECK(eval(t, product, 10) == group_op(eval(t, gu, 10), eval(t, gv, 10)));
    CHECK(eval(t, group_inv(gu), 10) == group_inv(eval(t, gu, 10)));
  }
}

TEST_CASE("factoring depths locate the deepest acting generator") {
  EndoTable ident = identity_table(8);
  for (std::uint32_t i = 1; i <= 8; ++i) CHECK(factoring_depth(ident, i) == i);

  EndoTable t = counterexample_table(12);
  CHECK(factoring_depth(t, 6) == 8);
  const std::vector<std::uint32_t> expected{1, 4, 4, 4, 5, 8, 8, 8, 9, 12};
  for (std::uint32_t i = 1; i <= 10; ++i) CHECK(factoring_depth(t, i) == expected[i - 1]);
  CHECK_THROWS_AS(factoring_depth(t, 11), InsufficientDepthError);

  EndoTable silent = make_endo_table({embed(Word::generator(3)), embed(Word::generator(3))}, 0);
  CHECK(factoring_depth(silent, 1) == 0);
  CHECK(factoring_depth(silent, 2) == 0);
}

TEST_CASE("images beyond the factoring depth are silent at that coordinate") {
  EndoTable t = counterexample_table(12);
  for (std::uint32_t i = 1; i <= 10; ++i) {
    const std::uint32_t cut = factoring_depth(t, i);
    for (std::uint32_t j = cut + 1; j <= t.table_depth; ++j)
      CHECK(t.images[j - 1].coordinate(i).is_identity());
    if (cut >= 1) CHECK_FALSE(t.images[cut - 1].coordinate(i).is_identity());
  }
}

TEST_CASE("inputs agreeing through the factoring depth evaluate alike") {
  EndoTable t = counterexample_table(12);
  Rng rng(149);
  for (int round = 0; round < 300; ++round) {
    const std::uint32_t i = 1 + static_cast<std::uint32_t>(rng() % 10);
    const std::uint32_t cut = factoring_depth(t, i);
    Word base = cut == 0 ? Word() : testing::random_word(rng, cut, 5);
    Word tail = cut >= 12 ? Word() : high_word(rng, cut + 1, 12, 5);
    Truncation g = truncate(embed(base), 12);
    Truncation h = truncate(embed(base * tail), 12);
    if (cut >= 1) REQUIRE(truncate(g, cut) == truncate(h, cut));
    CHECK(eval(t, g, i) == eval(t, h, i));
  }
}

TEST_CASE("the three-case table") {
  EndoTable t = counterexample_table(8);
  CHECK(t.shift_bound == 2);
  CHECK(t.table_depth == 8);
  CHECK(t.images[4] == embed(Word::generator(5)));
  CHECK(t.images[5] == embed(conj_by_a1(Word::generator(6))));
  CHECK(t.images[7] == embed(Word::generator(6)));
  CHECK_THROWS_AS(counterexample_table(0), ArgumentError);
}

TEST_CASE("the counterexample verifies at depth 12") {
  CounterexampleReport report = verify_counterexample(12);
  CHECK(report.ok);
  CHECK(report.table_depth == 12);
  CHECK(report.shift_bound == 2);
  CHECK(report.out_depth == 10);
  CHECK(report.null_convergence_ok);
  CHECK(report.first_nontrivial_ok);
  CHECK(report.relations_ok);
  CHECK(report.coherence_ok);
  CHECK(report.relation_indices == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(report.factoring_depths == std::vector<std::uint32_t>{1, 4, 4, 4, 5, 8, 8, 8, 9, 12});
}

TEST_CASE("the counterexample verifies at depth 8") {
  CounterexampleReport report = verify_counterexample(8);
  CHECK(report.ok);
  CHECK(report.out_depth == 6);
  CHECK(report.relation_indices == std::vector<std::uint32_t>{1, 2});
  CHECK_THROWS_AS(verify_counterexample(7), ArgumentError);
}

TEST_CASE("a tampered table is rejected with the failure located") {
  EndoTable t = counterexample_table(12);
  std::swap(t.images[5], t.images[7]);
  CounterexampleReport report = verify_counterexample_table(t);
  CHECK_FALSE(report.ok);
  CHECK(report.null_convergence_ok);
  CHECK(report.first_nontrivial_ok);
  CHECK_FALSE(report.relations_ok);
  CHECK(report.relation_violation_i == 2);
  CHECK(report.relation_violation_coordinate == 6);
}

TEST_CASE("a flattened conjugation is caught in the profile") {
  EndoTable t = counterexample_table(12);
  t.images[5] = embed(Word::generator(6));
  CounterexampleReport report = verify_counterexample_table(t);
  CHECK_FALSE(report.ok);
  CHECK(report.null_convergence_ok);
  CHECK(report.first_nontrivial_ok);
  CHECK_FALSE(report.relations_ok);
  CHECK(report.relation_violation_i == 2);
}

TEST_CASE("a table violating the certificate skips evaluation checks") {
  EndoTable t = counterexample_table(12);
  t.images[8] = embed(Word::generator(2));
  CounterexampleReport report = verify_counterexample_table(t);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.null_convergence_ok);
  CHECK(report.null_violation_index == 9);
  CHECK(report.relation_indices.empty());
  CHECK(report.factoring_depths.empty());
}
