#include "endo.hpp"

#include <algorithm>

namespace higlim {

namespace {

// Substitutes the coordinate-n value of each table image into w.
Word substitute_coordinate(const EndoTable& t, const Word& w, std::uint32_t n) {
  Word out;
  for (Letter x : w.letters()) {
    detail::check(x.index <= t.table_depth, "letter index escapes the table");
    Word img = t.images[x.index - 1].coordinate(n);
    out = out * (x.sign > 0 ? img : img.inverse());
  }
  return out;
}

}  // namespace

EndoTable make_endo_table(std::vector<StableElement> images, std::uint32_t shift_bound) {
  if (images.empty()) throw ArgumentError("an endomorphism table needs at least one image");
  if (images.size() > kMaxGeneratorIndex)
    throw ArgumentError("table depth exceeds the supported maximum");
  EndoTable t;
  t.table_depth = static_cast<std::uint32_t>(images.size());
  t.images = std::move(images);
  t.shift_bound = shift_bound;
  return t;
}

std::optional<std::uint32_t> first_nontrivial(const StableElement& e) {
  std::uint32_t r = e.word().max_index();
  for (std::uint32_t n = 1; n <= r; ++n) {
    if (!e.coordinate(n).is_identity()) return n;
  }
  return std::nullopt;  // identity: trivial in every coordinate
}

NullConvergenceCertificate verify_null_convergence(const EndoTable& t) {
  NullConvergenceCertificate cert;
  for (std::uint32_t j = 1; j <= t.table_depth; ++j) {
    std::optional<std::uint32_t> fn = first_nontrivial(t.images[j - 1]);
    if (fn && static_cast<std::int64_t>(*fn) <
                  static_cast<std::int64_t>(j) - static_cast<std::int64_t>(t.shift_bound)) {
      cert.ok = false;
      cert.violating_index = j;
      return cert;
    }
  }
  cert.ok = true;
  cert.coordinate_bounds.resize(t.table_depth);
  for (std::uint32_t n = 1; n <= t.table_depth; ++n)
    cert.coordinate_bounds[n - 1] = n + t.shift_bound;
  return cert;
}

Word eval_coordinate(const EndoTable& t, const Truncation& g, std::uint32_t n) {
  if (n < 1) throw ArgumentError("coordinate index must be at least 1");
  const std::uint64_t need = static_cast<std::uint64_t>(n) + t.shift_bound;
  const std::uint32_t available = std::min(t.table_depth, g.depth());
  if (need > available)
    throw InsufficientDepthError(
        "evaluating coordinate " + std::to_string(n) + " needs table and input depth " +
            std::to_string(need),
        static_cast<std::uint32_t>(need));
  const std::uint32_t cut = static_cast<std::uint32_t>(need);
  Word out = substitute_coordinate(t, g.coordinate(cut), n);
  if (available > cut) {
    detail::check(substitute_coordinate(t, g.coordinate(available), n) == out,
                  "coordinate evaluation depends on the cut depth");
  }
  return out;
}

Truncation eval(const EndoTable& t, const Truncation& g, std::uint32_t out_depth) {
  if (out_depth < 1) throw ArgumentError("output depth must be at least 1");
  std::vector<Word> coords;
  coords.reserve(out_depth);
  for (std::uint32_t n = 1; n <= out_depth; ++n) coords.push_back(eval_coordinate(t, g, n));
  return Truncation(std::move(coords));
}

std::uint32_t factoring_depth(const EndoTable& t, std::uint32_t i) {
  if (i < 1) throw ArgumentError("coordinate index must be at least 1");
  const std::uint64_t need = static_cast<std::uint64_t>(i) + t.shift_bound;
  if (need > t.table_depth)
    throw InsufficientDepthError(
        "the certificate only covers indices beyond the table for i + shift <= depth",
        static_cast<std::uint32_t>(need));
  std::uint32_t cut = 0;
  for (std::uint32_t j = 1; j <= t.table_depth; ++j) {
    if (!t.images[j - 1].coordinate(i).is_identity()) cut = j;
  }
  return cut;
}

EndoTable counterexample_table(std::uint32_t depth) {
  if (depth < 1) throw ArgumentError("table depth must be at least 1");
  std::vector<StableElement> images;
  images.reserve(depth);
  for (std::uint32_t j = 1; j <= depth; ++j) {
    if (j % 2 == 1) {
      images.push_back(embed(Word::generator(j)));
    } else if (j % 4 == 2) {
      images.push_back(embed(Word::generator(1) * Word::generator(j) *
                             Word::generator(1, -1)));
    } else {
      images.push_back(embed(Word::generator(j - 2)));
    }
  }
  return make_endo_table(std::move(images), 2);
}

CounterexampleReport verify_counterexample_table(const EndoTable& t) {
  if (t.table_depth < 8)
    throw ArgumentError("verification needs table depth at least 8");
  if (t.shift_bound >= t.table_depth)
    throw ArgumentError("shift bound must be smaller than the table depth");

  CounterexampleReport report;
  report.table_depth = t.table_depth;
  report.shift_bound = t.shift_bound;
  report.out_depth = t.table_depth - t.shift_bound;

  NullConvergenceCertificate cert = verify_null_convergence(t);
  report.null_convergence_ok = cert.ok;
  report.null_violation_index = cert.violating_index;

  report.first_nontrivial_ok = true;
  for (std::uint32_t j = 1; j <= t.table_depth; ++j) {
    std::optional<std::uint32_t> fn = first_nontrivial(t.images[j - 1]);
    const std::int64_t floor = static_cast<std::int64_t>(j) - 2;
    const bool meets_floor = fn && static_cast<std::int64_t>(*fn) >= floor;
    const bool at_floor = fn && static_cast<std::int64_t>(*fn) == floor;
    if (!meets_floor || at_floor != (j % 4 == 0)) {
      report.first_nontrivial_ok = false;
      report.first_nontrivial_violation_index = j;
      break;
    }
  }

  // The remaining checks evaluate through the table, which is only
  // meaningful (and only guaranteed not to trip the evaluator's own
  // well-definedness assertions) once the shift certificate holds.
  if (report.null_convergence_ok) {
    // Conjugation relation between the two even image subsequences,
    // compared coordinatewise on evaluated truncations.
    report.relations_ok = true;
    const StableElement conjugator = embed(Word::generator(1));
    for (std::uint32_t i = 1; 4 * i <= t.table_depth; ++i) {
      report.relation_indices.push_back(i);
      if (!report.relations_ok) continue;
      Truncation lhs = eval(t, truncate(embed(Word::generator(4 * i - 2)), t.table_depth),
                            report.out_depth);
      Truncation rhs_core = eval(t, truncate(embed(Word::generator(4 * i)), t.table_depth),
                                 report.out_depth);
      Truncation rhs = group_op(group_op(truncate(conjugator, report.out_depth), rhs_core),
                                truncate(group_inv(conjugator), report.out_depth));
      for (std::uint32_t n = 1; n <= report.out_depth; ++n) {
        if (lhs.coordinate(n) != rhs.coordinate(n)) {
          report.relations_ok = false;
          report.relation_violation_i = i;
          report.relation_violation_coordinate = n;
          break;
        }
      }
    }

    // Every evaluated generator image must itself be a coherent stack.
    report.coherence_ok = true;
    for (std::uint32_t j = 1; j <= t.table_depth && report.coherence_ok; ++j) {
      Truncation image = eval(t, truncate(embed(Word::generator(j)), t.table_depth),
                              report.out_depth);
      for (std::uint32_t n = 2; n <= report.out_depth; ++n) {
        if (project_to_rank(image.coordinate(n), n - 1) != image.coordinate(n - 1)) {
          report.coherence_ok = false;
          report.coherence_violation_index = j;
          break;
        }
      }
    }

    for (std::uint32_t i = 1; i <= report.out_depth; ++i)
      report.factoring_depths.push_back(factoring_depth(t, i));
  }

  report.ok = report.null_convergence_ok && report.first_nontrivial_ok &&
              report.relations_ok && report.coherence_ok;
  return report;
}

CounterexampleReport verify_counterexample(std::uint32_t depth) {
  if (depth < 8) throw ArgumentError("counterexample verification needs depth at least 8");
  return verify_counterexample_table(counterexample_table(depth));
}

}  // namespace higlim
