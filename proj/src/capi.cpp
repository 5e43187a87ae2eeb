#include "higlim/higlim.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "endo.hpp"
#include "errors.hpp"
#include "fmap.hpp"
#include "invsystem.hpp"
#include "nielsen.hpp"
#include "prolimit.hpp"
#include "reports.hpp"
#include "stallings.hpp"
#include "textio.hpp"
#include "word.hpp"

struct hig_word {
  higlim::Word value;
};
struct hig_map {
  higlim::FreeMap value;
};
struct hig_graph {
  higlim::SubgroupGraph value;
};
struct hig_split {
  higlim::BasisSplit value;
};
struct hig_trunc {
  higlim::Truncation value;
};
struct hig_stable {
  higlim::StableElement value;
};
struct hig_endo {
  higlim::EndoTable value;
};
struct hig_system {
  higlim::SystemDescription value;
};
struct hig_norm {
  higlim::Normalization value;
  higlim::SystemDescription system;
};

namespace {

thread_local std::string tl_error;

void set_error(std::string msg) { tl_error = std::move(msg); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hig_status status_from_current_exception() {
  try {
    throw;
  } catch (const higlim::ParseError& e) {
    set_error(e.what());
    return HIG_ERR_PARSE;
  } catch (const higlim::RankMismatchError& e) {
    set_error(e.what());
    return HIG_ERR_RANK;
  } catch (const higlim::InsufficientDepthError& e) {
    set_error(e.what());
    return HIG_ERR_DEPTH;
  } catch (const higlim::NotSurjectiveError& e) {
    set_error(e.what());
    return HIG_ERR_NOT_SURJECTIVE;
  } catch (const higlim::ArgumentError& e) {
    set_error(e.what());
    return HIG_ERR_ARG;
  } catch (const higlim::InternalError& e) {
    set_error(e.what());
    return HIG_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return HIG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return HIG_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return HIG_ERR_INTERNAL;
  }
}

template <typename Fn>
hig_status wrap(Fn&& fn) {
  try {
    fn();
    return HIG_OK;
  } catch (...) {
    return status_from_current_exception();
  }
}

// True when any argument is null; reports through the thread-local message.
template <typename... Ptr>
bool missing(const Ptr*... ptr) {
  if (((ptr == nullptr) || ...)) {
    set_error("null argument");
    return true;
  }
  return false;
}

// Collects a C handle array into word values, rejecting null entries.
bool gather_words(const hig_word* const* items, std::size_t count,
                  std::vector<higlim::Word>& out) {
  if (count > 0 && items == nullptr) {
    set_error("null argument");
    return false;
  }
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (items[i] == nullptr) {
      set_error("null argument");
      return false;
    }
    out.push_back(items[i]->value);
  }
  return true;
}

bool gather_truncations(const hig_trunc* const* items, std::size_t count,
                        std::vector<higlim::Truncation>& out) {
  if (count > 0 && items == nullptr) {
    set_error("null argument");
    return false;
  }
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (items[i] == nullptr) {
      set_error("null argument");
      return false;
    }
    out.push_back(items[i]->value);
  }
  return true;
}

}  // namespace

extern "C" {

const char* hig_version(void) { return "0.1.0"; }

const char* hig_last_error(void) { return tl_error.c_str(); }

void hig_string_free(char* s) { std::free(s); }

void hig_word_free(hig_word* w) { delete w; }
void hig_map_free(hig_map* f) { delete f; }
void hig_graph_free(hig_graph* g) { delete g; }
void hig_split_free(hig_split* s) { delete s; }
void hig_trunc_free(hig_trunc* t) { delete t; }
void hig_stable_free(hig_stable* e) { delete e; }
void hig_endo_free(hig_endo* t) { delete t; }
void hig_system_free(hig_system* s) { delete s; }
void hig_norm_free(hig_norm* n) { delete n; }

/* ------------------------------------------------------------------ */
/* words                                                               */

hig_status hig_word_parse(const char* text, hig_word** out) {
  if (missing(text, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_word{higlim::parse_word(text)}; });
}

hig_status hig_word_to_text(const hig_word* w, char** out) {
  if (missing(w, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = dup_string(higlim::print_word(w->value)); });
}

hig_status hig_word_multiply(const hig_word* lhs, const hig_word* rhs, hig_word** out) {
  if (missing(lhs, rhs, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_word{lhs->value * rhs->value}; });
}

hig_status hig_word_invert(const hig_word* w, hig_word** out) {
  if (missing(w, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_word{w->value.inverse()}; });
}

hig_status hig_word_project(const hig_word* w, uint32_t rank, hig_word** out) {
  if (missing(w, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_word{higlim::project_to_rank(w->value, rank)}; });
}

hig_status hig_word_length(const hig_word* w, size_t* out) {
  if (missing(w, out)) return HIG_ERR_NULL;
  *out = w->value.length();
  return HIG_OK;
}

hig_status hig_word_max_index(const hig_word* w, uint32_t* out) {
  if (missing(w, out)) return HIG_ERR_NULL;
  *out = w->value.max_index();
  return HIG_OK;
}

hig_status hig_word_occurrences(const hig_word* w, uint32_t index, size_t* out) {
  if (missing(w, out)) return HIG_ERR_NULL;
  *out = w->value.occurrences(index);
  return HIG_OK;
}

hig_status hig_word_equal(const hig_word* lhs, const hig_word* rhs, int* equal) {
  if (missing(lhs, rhs, equal)) return HIG_ERR_NULL;
  *equal = lhs->value == rhs->value ? 1 : 0;
  return HIG_OK;
}

hig_status hig_word_list_parse(const char* text, hig_word*** items, size_t* count) {
  if (missing(text, items, count)) return HIG_ERR_NULL;
  return wrap([&] {
    std::vector<higlim::Word> words = higlim::parse_word_list(text);
    const std::size_t cells = words.empty() ? 1 : words.size();
    hig_word** arr = static_cast<hig_word**>(std::malloc(sizeof(hig_word*) * cells));
    if (arr == nullptr) throw std::bad_alloc();
    std::size_t built = 0;
    try {
      for (; built < words.size(); ++built) arr[built] = new hig_word{std::move(words[built])};
    } catch (...) {
      while (built > 0) delete arr[--built];
      std::free(arr);
      throw;
    }
    *items = arr;
    *count = words.size();
  });
}

void hig_word_list_free(hig_word** items, size_t count) {
  if (items == nullptr) return;
  for (size_t i = 0; i < count; ++i) delete items[i];
  std::free(items);
}

/* ------------------------------------------------------------------ */
/* maps                                                                */

hig_status hig_map_parse(const char* text, hig_map** out) {
  if (missing(text, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_map{higlim::parse_map(text)}; });
}

hig_status hig_map_to_text(const hig_map* f, char** out) {
  if (missing(f, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = dup_string(higlim::print_map(f->value)); });
}

hig_status hig_map_identity(uint32_t rank, hig_map** out) {
  if (missing(out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_map{higlim::identity_map(rank)}; });
}

hig_status hig_map_standard_projection(uint32_t source_rank, uint32_t target_rank,
                                       hig_map** out) {
  if (missing(out)) return HIG_ERR_NULL;
  return wrap(
      [&] { *out = new hig_map{higlim::standard_projection(source_rank, target_rank)}; });
}

hig_status hig_map_domain_rank(const hig_map* f, uint32_t* out) {
  if (missing(f, out)) return HIG_ERR_NULL;
  *out = f->value.domain_rank;
  return HIG_OK;
}

hig_status hig_map_codomain_rank(const hig_map* f, uint32_t* out) {
  if (missing(f, out)) return HIG_ERR_NULL;
  *out = f->value.codomain_rank;
  return HIG_OK;
}

hig_status hig_map_apply(const hig_map* f, const hig_word* w, hig_word** out) {
  if (missing(f, w, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_word{higlim::apply(f->value, w->value)}; });
}

hig_status hig_map_compose(const hig_map* f, const hig_map* g, hig_map** out) {
  if (missing(f, g, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_map{higlim::compose(f->value, g->value)}; });
}

hig_status hig_map_is_surjective(const hig_map* f, int* surjective) {
  if (missing(f, surjective)) return HIG_ERR_NULL;
  return wrap([&] { *surjective = higlim::is_surjective(f->value) ? 1 : 0; });
}

hig_status hig_map_invert_bijective(const hig_map* f, hig_map** out) {
  if (missing(f, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_map{higlim::invert_bijective(f->value)}; });
}

hig_status hig_map_section(const hig_map* f, hig_map** out) {
  if (missing(f, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_map{higlim::section_of_surjection(f->value)}; });
}

hig_status hig_map_split_basis(const hig_map* f, hig_split** out) {
  if (missing(f, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_split{higlim::split_basis(f->value)}; });
}

hig_status hig_split_preimage_count(const hig_split* s, uint32_t* out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  *out = static_cast<uint32_t>(s->value.preimage_part.size());
  return HIG_OK;
}

hig_status hig_split_kernel_count(const hig_split* s, uint32_t* out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  *out = static_cast<uint32_t>(s->value.kernel_part.size());
  return HIG_OK;
}

hig_status hig_split_preimage_word(const hig_split* s, uint32_t index, hig_word** out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  if (index < 1 || index > s->value.preimage_part.size()) {
    set_error("preimage index out of range");
    return HIG_ERR_ARG;
  }
  return wrap([&] { *out = new hig_word{s->value.preimage_part[index - 1]}; });
}

hig_status hig_split_kernel_word(const hig_split* s, uint32_t index, hig_word** out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  if (index < 1 || index > s->value.kernel_part.size()) {
    set_error("kernel index out of range");
    return HIG_ERR_ARG;
  }
  return wrap([&] { *out = new hig_word{s->value.kernel_part[index - 1]}; });
}

hig_status hig_split_section(const hig_split* s, hig_map** out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_map{s->value.section}; });
}

hig_status hig_split_move_count(const hig_split* s, size_t* out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  *out = s->value.trace.moves.size();
  return HIG_OK;
}

hig_status hig_split_report(const hig_split* s, char** out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = dup_string(higlim::split_report(s->value)); });
}

/* ------------------------------------------------------------------ */
/* subgroup graphs                                                     */

hig_status hig_graph_fold(const hig_word* const* generators, size_t count,
                          uint32_t ambient_rank, hig_graph** out) {
  if (missing(out)) return HIG_ERR_NULL;
  std::vector<higlim::Word> words;
  if (!gather_words(generators, count, words)) return HIG_ERR_NULL;
  return wrap(
      [&] { *out = new hig_graph{higlim::SubgroupGraph::fold(words, ambient_rank)}; });
}

hig_status hig_graph_contains(const hig_graph* g, const hig_word* w, int* member) {
  if (missing(g, w, member)) return HIG_ERR_NULL;
  return wrap([&] { *member = g->value.contains(w->value) ? 1 : 0; });
}

hig_status hig_graph_vertex_count(const hig_graph* g, size_t* out) {
  if (missing(g, out)) return HIG_ERR_NULL;
  *out = g->value.vertex_count();
  return HIG_OK;
}

hig_status hig_graph_edge_count(const hig_graph* g, size_t* out) {
  if (missing(g, out)) return HIG_ERR_NULL;
  *out = g->value.edge_count();
  return HIG_OK;
}

hig_status hig_graph_subgroup_rank(const hig_graph* g, size_t* out) {
  if (missing(g, out)) return HIG_ERR_NULL;
  *out = g->value.subgroup_rank();
  return HIG_OK;
}

hig_status hig_graph_report(const hig_graph* g, char** out) {
  if (missing(g, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = dup_string(higlim::fold_report(g->value)); });
}

hig_status hig_express_in_basis(const hig_word* const* basis, size_t count,
                                const hig_word* target, uint32_t ambient_rank,
                                hig_word** out) {
  if (missing(target, out)) return HIG_ERR_NULL;
  std::vector<higlim::Word> words;
  if (!gather_words(basis, count, words)) return HIG_ERR_NULL;
  try {
    auto expr = higlim::express_in_basis(words, target->value, ambient_rank);
    if (!expr.has_value()) {
      set_error("word is not in the subgroup generated by the given words");
      return HIG_ERR_NOT_MEMBER;
    }
    *out = new hig_word{std::move(*expr)};
    return HIG_OK;
  } catch (...) {
    return status_from_current_exception();
  }
}

/* ------------------------------------------------------------------ */
/* truncations and stable elements                                     */

hig_status hig_trunc_parse(const char* text, hig_trunc** out) {
  if (missing(text, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_trunc{higlim::parse_element(text)}; });
}

hig_status hig_trunc_to_text(const hig_trunc* t, char** out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = dup_string(higlim::print_element(t->value)); });
}

hig_status hig_stable_parse(const char* text, hig_stable** out) {
  if (missing(text, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_stable{higlim::parse_stable(text)}; });
}

hig_status hig_stable_to_text(const hig_stable* e, char** out) {
  if (missing(e, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = dup_string(higlim::print_stable(e->value)); });
}

hig_status hig_stable_from_word(const hig_word* w, hig_stable** out) {
  if (missing(w, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_stable{higlim::embed(w->value)}; });
}

hig_status hig_stable_word(const hig_stable* e, hig_word** out) {
  if (missing(e, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_word{e->value.word()}; });
}

hig_status hig_stable_truncate(const hig_stable* e, uint32_t depth, hig_trunc** out) {
  if (missing(e, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_trunc{higlim::truncate(e->value, depth)}; });
}

hig_status hig_stable_multiply(const hig_stable* a, const hig_stable* b, hig_stable** out) {
  if (missing(a, b, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_stable{higlim::group_op(a->value, b->value)}; });
}

hig_status hig_stable_invert(const hig_stable* e, hig_stable** out) {
  if (missing(e, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_stable{higlim::group_inv(e->value)}; });
}

hig_status hig_stable_first_nontrivial(const hig_stable* e, uint32_t* coordinate,
                                       int* infinite) {
  if (missing(e, coordinate, infinite)) return HIG_ERR_NULL;
  return wrap([&] {
    auto first = higlim::first_nontrivial(e->value);
    *infinite = first.has_value() ? 0 : 1;
    if (first.has_value()) *coordinate = *first;
  });
}

hig_status hig_trunc_depth(const hig_trunc* t, uint32_t* out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  *out = t->value.depth();
  return HIG_OK;
}

hig_status hig_trunc_coordinate(const hig_trunc* t, uint32_t n, hig_word** out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_word{t->value.coordinate(n)}; });
}

hig_status hig_trunc_multiply(const hig_trunc* a, const hig_trunc* b, hig_trunc** out) {
  if (missing(a, b, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_trunc{higlim::group_op(a->value, b->value)}; });
}

hig_status hig_trunc_invert(const hig_trunc* t, hig_trunc** out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_trunc{higlim::group_inv(t->value)}; });
}

hig_status hig_trunc_prefix(const hig_trunc* t, uint32_t depth, hig_trunc** out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_trunc{higlim::truncate(t->value, depth)}; });
}

hig_status hig_trunc_approximate(const hig_trunc* t, hig_stable** out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_stable{higlim::approximate_by_stable(t->value)}; });
}

hig_status hig_trunc_metric_bounds(const hig_trunc* a, const hig_trunc* b, uint32_t depth,
                                   int64_t* lower_num, uint32_t* lower_exp,
                                   int64_t* upper_num, uint32_t* upper_exp) {
  if (missing(a, b, lower_num, lower_exp)) return HIG_ERR_NULL;
  if (missing(upper_num, upper_exp)) return HIG_ERR_NULL;
  return wrap([&] {
    higlim::MetricBounds bounds = higlim::metric_bounds(a->value, b->value, depth);
    *lower_num = bounds.lower.numerator();
    *lower_exp = bounds.lower.exponent();
    *upper_num = bounds.upper.numerator();
    *upper_exp = bounds.upper.exponent();
  });
}

hig_status hig_stable_metric(const hig_stable* a, const hig_stable* b, int64_t* num,
                             uint32_t* exp) {
  if (missing(a, b, num, exp)) return HIG_ERR_NULL;
  return wrap([&] {
    higlim::Dyadic d = higlim::metric(a->value, b->value);
    *num = d.numerator();
    *exp = d.exponent();
  });
}

hig_status hig_trunc_converges_report(const hig_trunc* const* seq, size_t count,
                                      uint32_t depth, char** report, int* all_stable) {
  if (missing(report, all_stable)) return HIG_ERR_NULL;
  std::vector<higlim::Truncation> items;
  if (!gather_truncations(seq, count, items)) return HIG_ERR_NULL;
  return wrap([&] {
    higlim::ConvergenceReport result = higlim::converges(items, depth);
    *report = dup_string(higlim::convergence_report_text(result));
    *all_stable = result.all_stable ? 1 : 0;
  });
}

hig_status hig_trunc_limit(const hig_trunc* const* seq, size_t count, uint32_t depth,
                           hig_trunc** out) {
  if (missing(out)) return HIG_ERR_NULL;
  std::vector<higlim::Truncation> items;
  if (!gather_truncations(seq, count, items)) return HIG_ERR_NULL;
  try {
    auto limit = higlim::limit_of_stable_sequence(items, depth);
    if (!limit.has_value()) {
      set_error("no limit: some coordinate has not settled within the sequence");
      return HIG_ERR_NOT_STABLE;
    }
    *out = new hig_trunc{std::move(*limit)};
    return HIG_OK;
  } catch (...) {
    return status_from_current_exception();
  }
}

hig_status hig_trunc_profile_report(const hig_trunc* t, char** out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  return wrap([&] {
    *out = dup_string(
        higlim::occurrence_profile_text(higlim::hawaiian_occurrence_profile(t->value)));
  });
}

/* ------------------------------------------------------------------ */
/* endomorphism tables                                                 */

hig_status hig_endo_parse(const char* text, hig_endo** out) {
  if (missing(text, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_endo{higlim::parse_endo(text)}; });
}

hig_status hig_endo_to_text(const hig_endo* t, char** out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = dup_string(higlim::print_endo(t->value)); });
}

hig_status hig_endo_counterexample(uint32_t depth, hig_endo** out) {
  if (missing(out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_endo{higlim::counterexample_table(depth)}; });
}

hig_status hig_endo_depth(const hig_endo* t, uint32_t* out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  *out = t->value.table_depth;
  return HIG_OK;
}

hig_status hig_endo_shift_bound(const hig_endo* t, uint32_t* out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  *out = t->value.shift_bound;
  return HIG_OK;
}

hig_status hig_endo_image(const hig_endo* t, uint32_t index, hig_stable** out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  if (index < 1 || index > t->value.images.size()) {
    set_error("generator index outside the table");
    return HIG_ERR_ARG;
  }
  return wrap([&] { *out = new hig_stable{t->value.images[index - 1]}; });
}

hig_status hig_endo_verify_null_convergence(const hig_endo* t, char** report, int* ok) {
  if (missing(t, report, ok)) return HIG_ERR_NULL;
  return wrap([&] {
    higlim::NullConvergenceCertificate cert = higlim::verify_null_convergence(t->value);
    std::string text = cert.ok ? "null-convergence ok\n"
                               : "null-convergence violation at j " +
                                     std::to_string(cert.violating_index) + "\n";
    *report = dup_string(text);
    *ok = cert.ok ? 1 : 0;
  });
}

hig_status hig_endo_eval_coordinate(const hig_endo* t, const hig_trunc* g, uint32_t n,
                                    hig_word** out) {
  if (missing(t, g, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_word{higlim::eval_coordinate(t->value, g->value, n)}; });
}

hig_status hig_endo_eval(const hig_endo* t, const hig_trunc* g, uint32_t out_depth,
                         hig_trunc** out) {
  if (missing(t, g, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_trunc{higlim::eval(t->value, g->value, out_depth)}; });
}

hig_status hig_endo_factoring_depth(const hig_endo* t, uint32_t i, uint32_t* out) {
  if (missing(t, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = higlim::factoring_depth(t->value, i); });
}

hig_status hig_endo_verify_table(const hig_endo* t, char** report, int* ok) {
  if (missing(t, report, ok)) return HIG_ERR_NULL;
  return wrap([&] {
    higlim::CounterexampleReport result = higlim::verify_counterexample_table(t->value);
    *report = dup_string(higlim::counterexample_report_text(result));
    *ok = result.ok ? 1 : 0;
  });
}

/* ------------------------------------------------------------------ */
/* inverse systems                                                     */

hig_status hig_system_parse(const char* text, hig_system** out) {
  if (missing(text, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_system{higlim::parse_system(text)}; });
}

hig_status hig_system_to_text(const hig_system* s, char** out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = dup_string(higlim::print_system(s->value)); });
}

hig_status hig_system_standard(uint32_t levels, hig_system** out) {
  if (missing(out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_system{higlim::standard_system(levels)}; });
}

hig_status hig_system_levels(const hig_system* s, uint32_t* out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  *out = s->value.levels;
  return HIG_OK;
}

hig_status hig_system_rank(const hig_system* s, uint32_t level, uint32_t* out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  if (level < 1 || level > s->value.levels) {
    set_error("level out of range");
    return HIG_ERR_ARG;
  }
  *out = s->value.ranks[level - 1];
  return HIG_OK;
}

hig_status hig_system_map(const hig_system* s, uint32_t level, hig_map** out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_map{s->value.map_into(level)}; });
}

hig_status hig_system_validate(const hig_system* s, char** report, int* ok) {
  if (missing(s, report, ok)) return HIG_ERR_NULL;
  return wrap([&] {
    higlim::ValidationReport result = higlim::validate(s->value);
    *report = dup_string(higlim::validation_report_text(result));
    *ok = result.ok ? 1 : 0;
  });
}

hig_status hig_system_restrict(const hig_system* s, const uint32_t* levels, size_t count,
                               hig_system** out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  if (count > 0 && levels == nullptr) {
    set_error("null argument");
    return HIG_ERR_NULL;
  }
  return wrap([&] {
    std::vector<uint32_t> selected(levels, levels + count);
    *out = new hig_system{higlim::restrict_cofinal(s->value, selected)};
  });
}

hig_status hig_system_normalize(const hig_system* s, hig_norm** out) {
  if (missing(s, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = new hig_norm{higlim::normalize(s->value), s->value}; });
}

hig_status hig_norm_level_iso(const hig_norm* n, uint32_t level, hig_map** out) {
  if (missing(n, out)) return HIG_ERR_NULL;
  if (level < 1 || level > n->value.level_isos.size()) {
    set_error("level out of range");
    return HIG_ERR_ARG;
  }
  return wrap([&] { *out = new hig_map{n->value.level_isos[level - 1]}; });
}

hig_status hig_norm_signature(const hig_norm* n, uint32_t level, uint32_t* preimage_count,
                              uint32_t* kernel_count) {
  if (missing(n, preimage_count, kernel_count)) return HIG_ERR_NULL;
  if (level < 1 || level > n->value.signature.size()) {
    set_error("level out of range");
    return HIG_ERR_ARG;
  }
  *preimage_count = n->value.signature[level - 1].first;
  *kernel_count = n->value.signature[level - 1].second;
  return HIG_OK;
}

hig_status hig_norm_report(const hig_norm* n, const char* section, char** out) {
  if (missing(n, section, out)) return HIG_ERR_NULL;
  std::string_view wanted(section);
  if (wanted != "all" && wanted != "signature" && wanted != "isos" && wanted != "squares") {
    set_error("unknown report section: " + std::string(section));
    return HIG_ERR_ARG;
  }
  return wrap(
      [&] { *out = dup_string(higlim::normalize_report(n->value, n->system, wanted)); });
}

hig_status hig_system_classify(const hig_system* s, uint32_t window, char** report,
                               int* verdict_kind, uint32_t* free_rank) {
  if (missing(s, report, verdict_kind, free_rank)) return HIG_ERR_NULL;
  return wrap([&] {
    higlim::Classification c = higlim::classify(s->value, window);
    *report = dup_string(higlim::classification_report(c));
    switch (c.verdict) {
      case higlim::SystemVerdict::free_of_rank:
        *verdict_kind = 0;
        break;
      case higlim::SystemVerdict::universal_limit:
        *verdict_kind = 1;
        break;
      case higlim::SystemVerdict::undetermined:
        *verdict_kind = 2;
        break;
    }
    *free_rank = c.rank;
  });
}

/* ------------------------------------------------------------------ */
/* text round-trip                                                     */

hig_status hig_convert_text(const char* text, char** out) {
  if (missing(text, out)) return HIG_ERR_NULL;
  return wrap([&] { *out = dup_string(higlim::convert_text(text)); });
}

}  // extern "C"
