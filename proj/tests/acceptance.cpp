// Acceptance gate: eight independent checks, one verdict line each, with a
// wall-clock budget enforced per line.  Exit status 0 only when every line
// passes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dyadic.hpp"
#include "endo.hpp"
#include "fmap.hpp"
#include "invsystem.hpp"
#include "prolimit.hpp"
#include "stallings.hpp"
#include "testutil.hpp"
#include "word.hpp"

namespace {

using namespace higlim;
using testing::Rng;

// Every letter sequence of length <= 6 over rank 3 reduces to the unique
// result of cancelling adjacent inverse pairs in every possible order.
bool reduction_oracle(std::string& detail) {
  std::map<testing::RawSeq, std::set<testing::RawSeq>> memo;
  std::size_t checked = 0;
  for (std::size_t length = 0; length <= 6; ++length) {
    std::vector<int> digits(length, 0);
    for (;;) {
      std::vector<Letter> letters;
      letters.reserve(length);
      for (int d : digits)
        letters.push_back(Letter{static_cast<std::uint32_t>(d / 2 + 1),
                                 d % 2 == 0 ? std::int8_t{1} : std::int8_t{-1}});
      const Word reduced{std::span<const Letter>(letters)};
      const std::set<testing::RawSeq> outcomes =
          testing::cancellation_results(testing::to_raw(letters), memo);
      if (outcomes.size() != 1 ||
          *outcomes.begin() != testing::to_raw(reduced.letters())) {
        detail = "mismatch at sequence " + std::to_string(checked);
        return false;
      }
      ++checked;
      std::size_t pos = 0;
      while (pos < length && ++digits[pos] == 6) digits[pos++] = 0;
      if (pos == length) break;
    }
  }
  if (checked != 55987) {
    detail = "enumerated " + std::to_string(checked) + " sequences, expected 55987";
    return false;
  }
  return true;
}

// Composing standard projections is again a standard projection, exactly.
bool projection_coherence(std::string& detail) {
  for (std::uint32_t i = 1; i <= 8; ++i)
    for (std::uint32_t j = 1; j <= i; ++j)
      for (std::uint32_t k = 1; k <= j; ++k)
        if (compose(standard_projection(i, j), standard_projection(j, k)) !=
            standard_projection(i, k)) {
          detail = "failed at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")";
          return false;
        }
  return true;
}

// Exact dyadic metric: symmetry, identity of indiscernibles, triangle
// inequality, and bi-invariance on random stable elements, plus the two
// closed-form spot values.
bool metric_axioms(std::string& detail) {
  if (metric(embed(Word::generator(1)), StableElement()) != Dyadic::one()) {
    detail = "d(a1, 1) is not 1";
    return false;
  }
  if (metric(embed(Word::generator(2)), StableElement()) != Dyadic::two_to_minus(1)) {
    detail = "d(a2, 1) is not 1/2";
    return false;
  }

  Rng rng(20260819);
  std::uniform_int_distribution<std::uint32_t> pick_rank(1, 5);
  for (int round = 0; round < 10000; ++round) {
    const std::uint32_t rank = pick_rank(rng);
    const StableElement x = embed(testing::random_word(rng, rank, 6));
    const StableElement y = embed(testing::random_word(rng, rank, 6));
    const StableElement z = embed(testing::random_word(rng, rank, 6));
    const StableElement g = embed(testing::random_word(rng, rank, 6));

    const Dyadic dxy = metric(x, y);
    if (dxy != metric(y, x)) {
      detail = "symmetry failed in round " + std::to_string(round);
      return false;
    }
    if (dxy.is_zero() != (x == y)) {
      detail = "identity of indiscernibles failed in round " + std::to_string(round);
      return false;
    }
    if (!(metric(x, z) <= dxy + metric(y, z))) {
      detail = "triangle inequality failed in round " + std::to_string(round);
      return false;
    }
    if (metric(group_op(g, x), group_op(g, y)) != dxy ||
        metric(group_op(x, g), group_op(y, g)) != dxy) {
      detail = "bi-invariance failed in round " + std::to_string(round);
      return false;
    }
  }
  return true;
}

// Random surjective systems (standard projections dressed with random
// automorphisms) all normalize; every commuting square holds exactly and
// every kernel part has exactly the rank-jump size.
bool normalization_fuzz(std::string& detail) {
  Rng rng(77001);
  for (int round = 0; round < 200; ++round) {
    const SystemDescription s = testing::random_conjugated_system(rng, 6, 8, 12);
    const Normalization n = normalize(s);
    if (n.signature.size() != s.levels ||
        n.signature[0] != std::make_pair(s.ranks[0], 0u)) {
      detail = "level-1 signature wrong in round " + std::to_string(round);
      return false;
    }
    for (std::uint32_t lvl = 2; lvl <= s.levels; ++lvl) {
      const FreeMap& theta_low = n.level_isos[lvl - 2];
      const FreeMap& theta_high = n.level_isos[lvl - 1];
      const FreeMap standard = standard_projection(s.ranks[lvl - 1], s.ranks[lvl - 2]);
      if (compose(s.maps[lvl - 2], theta_low) != compose(theta_high, standard)) {
        detail = "square at level " + std::to_string(lvl) + " in round " +
                 std::to_string(round);
        return false;
      }
      const std::uint32_t jump = s.ranks[lvl - 1] - s.ranks[lvl - 2];
      if (n.splits[lvl - 2].kernel_part.size() != jump ||
          n.signature[lvl - 1] != std::make_pair(s.ranks[lvl - 2], jump)) {
        detail = "kernel size at level " + std::to_string(lvl) + " in round " +
                 std::to_string(round);
        return false;
      }
    }
  }
  return true;
}

// The standard prefix classifies as the universal limit; constant-rank
// automorphism towers classify as free of that rank, with every connecting
// map invertible.
bool classification_dichotomy(std::string& detail) {
  if (classify(standard_system(8)).verdict != SystemVerdict::universal_limit) {
    detail = "standard prefix did not classify as the universal limit";
    return false;
  }

  Rng rng(5150);
  for (int round = 0; round < 25; ++round) {
    const std::uint32_t rank = 2 + static_cast<std::uint32_t>(round % 4);
    const std::uint32_t levels = 4 + static_cast<std::uint32_t>(round % 3);
    std::vector<std::uint32_t> ranks(levels, rank);
    std::vector<FreeMap> maps;
    for (std::uint32_t lvl = 2; lvl <= levels; ++lvl)
      maps.push_back(testing::random_automorphism(rng, rank, 6, 10).forward);
    const SystemDescription tower = make_system(std::move(ranks), std::move(maps));

    const Classification c = classify(tower, 3);
    if (c.verdict != SystemVerdict::free_of_rank || c.rank != rank) {
      detail = "tower of rank " + std::to_string(rank) + " misclassified in round " +
               std::to_string(round);
      return false;
    }
    for (const FreeMap& m : tower.maps) {
      const FreeMap inverse = invert_bijective(m);
      if (compose(m, inverse) != identity_map(rank) ||
          compose(inverse, m) != identity_map(rank)) {
        detail = "connecting map not inverted in round " + std::to_string(round);
        return false;
      }
    }
  }
  return true;
}

std::vector<Letter> letters_in_range(Rng& rng, std::uint32_t low, std::uint32_t high,
                                     std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> pick_length(0, max_length);
  std::uniform_int_distribution<std::uint32_t> pick_index(low, high);
  std::uniform_int_distribution<int> pick_sign(0, 1);
  std::vector<Letter> out;
  const std::size_t length = pick_length(rng);
  for (std::size_t i = 0; i < length; ++i)
    out.push_back(Letter{pick_index(rng),
                         pick_sign(rng) == 0 ? std::int8_t{1} : std::int8_t{-1}});
  return out;
}

// The depth-24 table: shift certificate, first-nontrivial floor, the
// conjugation relations, factoring-depth bounds with the continuity they
// promise, and two tampered negative controls that must fail by name.
bool counterexample_verification(std::string& detail) {
  const EndoTable table = counterexample_table(24);

  const NullConvergenceCertificate cert = verify_null_convergence(table);
  if (!cert.ok || table.shift_bound != 2) {
    detail = "shift certificate rejected";
    return false;
  }

  for (std::uint32_t j = 1; j <= 24; ++j) {
    const auto first = first_nontrivial(table.images[j - 1]);
    if (!first || static_cast<int>(*first) < static_cast<int>(j) - 2) {
      detail = "first nontrivial coordinate below the floor at j " + std::to_string(j);
      return false;
    }
  }

  const StableElement conjugator = embed(Word::generator(1));
  for (std::uint32_t i = 1; i <= 5; ++i) {
    const StableElement& lhs = table.images[4 * i - 3];
    const StableElement rhs =
        group_op(conjugator, group_op(table.images[4 * i - 1], group_inv(conjugator)));
    if (lhs != rhs || truncate(lhs, 24) != truncate(rhs, 24)) {
      detail = "conjugation relation failed at i " + std::to_string(i);
      return false;
    }
  }

  for (std::uint32_t i = 1; i <= 20; ++i)
    if (factoring_depth(table, i) > i + 2) {
      detail = "factoring depth above i + 2 at i " + std::to_string(i);
      return false;
    }

  Rng rng(998877);
  std::uniform_int_distribution<std::uint32_t> pick_i(1, 12);
  for (int round = 0; round < 1000; ++round) {
    const std::uint32_t i = pick_i(rng);
    const std::uint32_t cut = factoring_depth(table, i);
    const Word base = testing::random_word(rng, std::max(cut, 1u), 6);
    const Word left = base * Word(std::span<const Letter>(
                                 letters_in_range(rng, cut + 1, 24, 5)));
    const Word right = base * Word(std::span<const Letter>(
                                  letters_in_range(rng, cut + 1, 24, 5)));
    const Truncation g = truncate(embed(left), 24);
    const Truncation h = truncate(embed(right), 24);
    for (std::uint32_t t = 1; t <= i; ++t)
      if (eval_coordinate(table, g, t) != eval_coordinate(table, h, t)) {
        detail = "continuity failed at coordinate " + std::to_string(t) + " in round " +
                 std::to_string(round);
        return false;
      }
  }

  if (!verify_counterexample(24).ok) {
    detail = "full verification of the depth-24 table failed";
    return false;
  }

  std::vector<StableElement> flattened = table.images;
  flattened[8] = embed(Word::generator(2));
  const CounterexampleReport broken =
      verify_counterexample_table(make_endo_table(std::move(flattened), 2));
  if (broken.ok || broken.null_convergence_ok || broken.null_violation_index != 9) {
    detail = "tampered image was not caught by the shift certificate";
    return false;
  }

  std::vector<StableElement> swapped = table.images;
  std::swap(swapped[5], swapped[7]);
  const CounterexampleReport crossed =
      verify_counterexample_table(make_endo_table(std::move(swapped), 2));
  if (crossed.ok || crossed.relations_ok || crossed.relation_violation_i != 2) {
    detail = "swapped images were not caught by the conjugation relations";
    return false;
  }
  return true;
}

// Table evaluation preserves products and inverses coordinatewise.
bool extension_homomorphism(std::string& detail) {
  const EndoTable table = counterexample_table(24);
  Rng rng(31337);
  std::uniform_int_distribution<std::uint32_t> pick_rank(1, 12);
  for (int round = 0; round < 500; ++round) {
    const std::uint32_t rank = pick_rank(rng);
    const Truncation g = truncate(embed(testing::random_word(rng, rank, 8)), 24);
    const Truncation h = truncate(embed(testing::random_word(rng, rank, 8)), 24);
    if (eval(table, group_op(g, h), 10) !=
        group_op(eval(table, g, 10), eval(table, h, 10))) {
      detail = "product not preserved in round " + std::to_string(round);
      return false;
    }
    if (eval(table, group_inv(g), 10) != group_inv(eval(table, g, 10))) {
      detail = "inverse not preserved in round " + std::to_string(round);
      return false;
    }
  }
  return true;
}

std::vector<Word> reduced_words_up_to(std::size_t max_length, bool include_identity) {
  static const Letter alphabet[4] = {Letter{1, 1}, Letter{1, -1}, Letter{2, 1},
                                     Letter{2, -1}};
  std::vector<Word> out;
  if (include_identity) out.push_back(Word());
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t length = 1; length <= max_length; ++length) {
    std::vector<std::vector<Letter>> next;
    for (const std::vector<Letter>& seq : layer)
      for (const Letter& x : alphabet) {
        if (!seq.empty() && seq.back().index == x.index && seq.back().sign == -x.sign)
          continue;
        std::vector<Letter> child = seq;
        child.push_back(x);
        out.push_back(Word(std::span<const Letter>(child)));
        next.push_back(std::move(child));
      }
    layer = std::move(next);
  }
  return out;
}

// Folding-based membership agrees with a naive, independently implemented
// fold on an enumerated corpus: the empty set, every single generator of
// length <= 3 over rank 2, and every pair of them, probed with every
// bounded product of the generators and every reduced target of length
// <= 6.
bool membership_oracle(std::string& detail) {
  const std::vector<Word> generator_pool = reduced_words_up_to(3, false);
  const std::vector<Word> targets = reduced_words_up_to(6, true);

  std::vector<std::vector<Word>> generator_sets;
  generator_sets.push_back({});
  for (std::size_t i = 0; i < generator_pool.size(); ++i)
    generator_sets.push_back({generator_pool[i]});
  for (std::size_t i = 0; i < generator_pool.size(); ++i)
    for (std::size_t j = i + 1; j < generator_pool.size(); ++j)
      generator_sets.push_back({generator_pool[i], generator_pool[j]});

  std::size_t cases = 0;
  for (const std::vector<Word>& generators : generator_sets) {
    const SubgroupGraph graph = SubgroupGraph::fold(generators, 2);
    const testing::NaiveSubgroup naive(generators);
    for (const Word& product : testing::bounded_products(generators, 4)) {
      if (!graph.contains(product) || !naive.contains(product)) {
        detail = "a bounded product was rejected";
        return false;
      }
      ++cases;
    }
    for (const Word& target : targets) {
      if (graph.contains(target) != naive.contains(target)) {
        detail = "fold and naive fold disagree on a target";
        return false;
      }
      ++cases;
    }
  }
  if (cases < 10000) {
    detail = "corpus too small: " + std::to_string(cases) + " cases";
    return false;
  }
  return true;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "reduction matches any-order cancellation", 5.0, reduction_oracle},
      {2, "projection coherence law", 1.0, projection_coherence},
      {3, "metric axioms and spot values", 10.0, metric_axioms},
      {4, "normalization of random conjugated systems", 30.0, normalization_fuzz},
      {5, "classification dichotomy", 2.0, classification_dichotomy},
      {6, "counterexample table verification", 10.0, counterexample_verification},
      {7, "table evaluation is a homomorphism", 10.0, extension_homomorphism},
      {8, "membership matches naive folding", 30.0, membership_oracle},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("threw: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = ok && seconds < c.budget_seconds;
    all = all && pass;
    std::printf("criterion %d: %-44s %s  %6.2fs (budget %2.0fs)%s%s\n", c.number, c.name,
                pass ? "pass" : "FAIL", seconds, c.budget_seconds,
                detail.empty() ? "" : "  ", detail.c_str());
  }
  return all ? 0 : 1;
}
