#ifndef HIGLIM_ENDO_HPP
#define HIGLIM_ENDO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "prolimit.hpp"
#include "word.hpp"

namespace higlim {

// An endomorphism of the limit group, described on the generators a_1 ...
// a_table_depth by stable images, together with a shift bound c certifying
// that the image of a_j is trivial in every coordinate below j - c (for all
// j, including generators beyond the table).  The bound is what makes
// coordinatewise evaluation decidable from finitely much data.
//
// The constructor checks shapes only; whether the table really satisfies
// its certificate is the job of verify_null_convergence, so deliberately
// broken tables can be built and examined.
struct EndoTable {
  std::uint32_t table_depth = 0;  // J
  std::vector<StableElement> images;
  std::uint32_t shift_bound = 0;  // c
};

EndoTable make_endo_table(std::vector<StableElement> images, std::uint32_t shift_bound);

// Least n with a nontrivial projection P_n(word), or nullopt for the
// identity element (every projection trivial).  The distance to the
// identity is at most 2^-(first_nontrivial - 1).
std::optional<std::uint32_t> first_nontrivial(const StableElement& e);

// Outcome of checking the shift certificate over the whole table.  When the
// check passes, coordinate_bounds[n-1] = n + c is a valid cut: every image
// with index j > n + c is trivial at coordinate n, in and beyond the table.
struct NullConvergenceCertificate {
  bool ok = false;
  std::uint32_t violating_index = 0;  // least offending j when !ok
  std::vector<std::uint32_t> coordinate_bounds;
};

NullConvergenceCertificate verify_null_convergence(const EndoTable& t);

// Coordinate n of the image of g: cut g at level K = n + c, substitute the
// coordinate-n values of the table images letterwise, reduce.  Letters with
// index above n + c cannot contribute at coordinate n (that is the shift
// certificate), which makes the cut depth immaterial; when g and the table
// extend beyond K the implementation recomputes at the deepest available
// cut and insists on the same answer.
Word eval_coordinate(const EndoTable& t, const Truncation& g, std::uint32_t n);

// Coordinates 1 ... out_depth of the image of g, as a coherent Truncation.
Truncation eval(const EndoTable& t, const Truncation& g, std::uint32_t out_depth);

// The least in-table cut n(i) <= i + c such that every image with index
// j > n(i) is trivial at coordinate i.  Inputs agreeing through depth n(i)
// evaluate to the same coordinate i, which is the continuity contract.
// Requires i + c <= table_depth so the certificate covers every index
// beyond the table.
std::uint32_t factoring_depth(const EndoTable& t, std::uint32_t i);

// The three-case generator table: a_j for odd j, a1 a_j a1^-1 for
// j = 2 mod 4, a_{j-2} for j = 0 mod 4, with shift bound 2.  Its image
// subsequences satisfy the conjugation relation checked below, which is the
// algebraic heart of the distinguishing example.
EndoTable counterexample_table(std::uint32_t depth);

// Everything verify_counterexample_table establishes, with the location of
// the first failure when a check is violated.
struct CounterexampleReport {
  std::uint32_t table_depth = 0;
  std::uint32_t shift_bound = 0;
  std::uint32_t out_depth = 0;  // coordinates compared: 1 ... table_depth - shift
  bool null_convergence_ok = false;
  std::uint32_t null_violation_index = 0;
  bool first_nontrivial_ok = false;
  std::uint32_t first_nontrivial_violation_index = 0;
  std::vector<std::uint32_t> relation_indices;  // the i with 4i <= table_depth
  bool relations_ok = false;
  std::uint32_t relation_violation_i = 0;
  std::uint32_t relation_violation_coordinate = 0;
  bool coherence_ok = false;
  std::uint32_t coherence_violation_index = 0;
  std::vector<std::uint32_t> factoring_depths;  // n(i) for i <= out_depth
  bool ok = false;
};

// Checks a table of the counterexample's shape: the shift certificate with
// the table's own bound, the first-nontrivial profile (>= j - 2, equality
// exactly at j = 0 mod 4), the conjugation relation
// image(a_{4i-2}) == embed(a1) * image(a_{4i}) * embed(a1)^-1 evaluated
// coordinatewise through out_depth, and coherence of every evaluated image.
CounterexampleReport verify_counterexample_table(const EndoTable& t);

// Builds counterexample_table(depth) and verifies it.  Requires depth >= 8
// so at least two relation instances exist.
CounterexampleReport verify_counterexample(std::uint32_t depth);

}  // namespace higlim

#endif
