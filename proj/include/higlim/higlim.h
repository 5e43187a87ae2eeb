/* higlim: computing with inverse systems of finite-rank free groups.
 *
 * C interface to the higlim core.  All objects are opaque handles created
 * and destroyed by the library; every fallible function returns a
 * hig_status, writes its result through out-parameters on HIG_OK, and
 * leaves a human-readable message for the calling thread retrievable via
 * hig_last_error().  Strings returned through char** out-parameters are
 * heap-allocated and must be released with hig_string_free().
 *
 * Handles are immutable once created, so sharing them across threads is
 * safe; the error message buffer is thread-local.
 */

#ifndef HIGLIM_H
#define HIGLIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hig_status {
  HIG_OK = 0,
  HIG_ERR_NULL = 1,           /* a required argument was NULL */
  HIG_ERR_PARSE = 2,          /* malformed text; message has line:col */
  HIG_ERR_ARG = 3,            /* out-of-range or ill-typed argument */
  HIG_ERR_RANK = 4,           /* rank mismatch between operands */
  HIG_ERR_NOT_SURJECTIVE = 5, /* operation requires a surjective map */
  HIG_ERR_NOT_MEMBER = 6,     /* word lies outside the subgroup */
  HIG_ERR_NOT_STABLE = 7,     /* sequence has not settled coordinatewise */
  HIG_ERR_DEPTH = 8,          /* inputs are too shallow for the request */
  HIG_ERR_INTERNAL = 9        /* internal consistency check failed */
} hig_status;

typedef struct hig_word hig_word;     /* reduced word in a free group */
typedef struct hig_map hig_map;       /* homomorphism by generator images */
typedef struct hig_graph hig_graph;   /* folded subgroup graph */
typedef struct hig_split hig_split;   /* basis split of a surjection */
typedef struct hig_trunc hig_trunc;   /* truncated limit element */
typedef struct hig_stable hig_stable; /* stable (finitely supported) element */
typedef struct hig_endo hig_endo;     /* endomorphism table */
typedef struct hig_system hig_system; /* inverse system description */
typedef struct hig_norm hig_norm;     /* normalization of a system */

/* ------------------------------------------------------------------ */
/* library                                                             */

const char* hig_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* hig_last_error(void);

void hig_string_free(char* s);

void hig_word_free(hig_word* w);
void hig_map_free(hig_map* f);
void hig_graph_free(hig_graph* g);
void hig_split_free(hig_split* s);
void hig_trunc_free(hig_trunc* t);
void hig_stable_free(hig_stable* e);
void hig_endo_free(hig_endo* t);
void hig_system_free(hig_system* s);
void hig_norm_free(hig_norm* n);

/* ------------------------------------------------------------------ */
/* words                                                               */

/* Text formats throughout: letters a3 / A3 (inverse), words space
 * separated, "1" for the identity; '#' starts a comment. */
hig_status hig_word_parse(const char* text, hig_word** out);
hig_status hig_word_to_text(const hig_word* w, char** out);
hig_status hig_word_multiply(const hig_word* lhs, const hig_word* rhs, hig_word** out);
hig_status hig_word_invert(const hig_word* w, hig_word** out);
/* Kill generators above `rank` and reduce (the standard projection). */
hig_status hig_word_project(const hig_word* w, uint32_t rank, hig_word** out);
hig_status hig_word_length(const hig_word* w, size_t* out);
hig_status hig_word_max_index(const hig_word* w, uint32_t* out);
hig_status hig_word_occurrences(const hig_word* w, uint32_t index, size_t* out);
/* equal: 1 yes, 0 no */
hig_status hig_word_equal(const hig_word* lhs, const hig_word* rhs, int* equal);

/* One word per line.  The returned array and every entry belong to the
 * caller; release both with hig_word_list_free. */
hig_status hig_word_list_parse(const char* text, hig_word*** items, size_t* count);
void hig_word_list_free(hig_word** items, size_t count);

/* ------------------------------------------------------------------ */
/* maps                                                                */

hig_status hig_map_parse(const char* text, hig_map** out);
hig_status hig_map_to_text(const hig_map* f, char** out);
hig_status hig_map_identity(uint32_t rank, hig_map** out);
/* a_k -> a_k for k <= target_rank, a_k -> 1 above. */
hig_status hig_map_standard_projection(uint32_t source_rank, uint32_t target_rank,
                                       hig_map** out);
hig_status hig_map_domain_rank(const hig_map* f, uint32_t* out);
hig_status hig_map_codomain_rank(const hig_map* f, uint32_t* out);
hig_status hig_map_apply(const hig_map* f, const hig_word* w, hig_word** out);
/* The composite "f then g". */
hig_status hig_map_compose(const hig_map* f, const hig_map* g, hig_map** out);
hig_status hig_map_is_surjective(const hig_map* f, int* surjective);
/* Inverse of a bijective map; HIG_ERR_RANK / HIG_ERR_NOT_SURJECTIVE. */
hig_status hig_map_invert_bijective(const hig_map* f, hig_map** out);
/* Section s of a surjection: compose(s, f) == identity. */
hig_status hig_map_section(const hig_map* f, hig_map** out);

/* Basis of the domain adapted to a surjection: m preimage words mapping to
 * a1 ... am, the rest mapping to 1, together a free basis. */
hig_status hig_map_split_basis(const hig_map* f, hig_split** out);
hig_status hig_split_preimage_count(const hig_split* s, uint32_t* out);
hig_status hig_split_kernel_count(const hig_split* s, uint32_t* out);
hig_status hig_split_preimage_word(const hig_split* s, uint32_t index, hig_word** out);
hig_status hig_split_kernel_word(const hig_split* s, uint32_t index, hig_word** out);
hig_status hig_split_section(const hig_split* s, hig_map** out);
hig_status hig_split_move_count(const hig_split* s, size_t* out);
hig_status hig_split_report(const hig_split* s, char** out);

/* ------------------------------------------------------------------ */
/* subgroup graphs                                                     */

/* Fold the subgroup graph of the given generators inside the free group of
 * the given rank. */
hig_status hig_graph_fold(const hig_word* const* generators, size_t count,
                          uint32_t ambient_rank, hig_graph** out);
hig_status hig_graph_contains(const hig_graph* g, const hig_word* w, int* member);
hig_status hig_graph_vertex_count(const hig_graph* g, size_t* out);
hig_status hig_graph_edge_count(const hig_graph* g, size_t* out);
hig_status hig_graph_subgroup_rank(const hig_graph* g, size_t* out);
/* Adjacency text plus the subgroup rank line; canonical and diffable. */
hig_status hig_graph_report(const hig_graph* g, char** out);

/* Word over the generator tuple that substitutes back to target;
 * HIG_ERR_NOT_MEMBER when target is outside the subgroup. */
hig_status hig_express_in_basis(const hig_word* const* basis, size_t count,
                                const hig_word* target, uint32_t ambient_rank,
                                hig_word** out);

/* ------------------------------------------------------------------ */
/* truncations and stable elements                                     */

hig_status hig_trunc_parse(const char* text, hig_trunc** out);
hig_status hig_trunc_to_text(const hig_trunc* t, char** out);
hig_status hig_stable_parse(const char* text, hig_stable** out);
hig_status hig_stable_to_text(const hig_stable* e, char** out);

/* The dense embedding: the stable element with the given eventual word. */
hig_status hig_stable_from_word(const hig_word* w, hig_stable** out);
hig_status hig_stable_word(const hig_stable* e, hig_word** out);
hig_status hig_stable_truncate(const hig_stable* e, uint32_t depth, hig_trunc** out);
hig_status hig_stable_multiply(const hig_stable* a, const hig_stable* b, hig_stable** out);
hig_status hig_stable_invert(const hig_stable* e, hig_stable** out);
/* Least coordinate with a nontrivial projection; infinite = 1 and
 * coordinate untouched for the identity element. */
hig_status hig_stable_first_nontrivial(const hig_stable* e, uint32_t* coordinate,
                                       int* infinite);

hig_status hig_trunc_depth(const hig_trunc* t, uint32_t* out);
hig_status hig_trunc_coordinate(const hig_trunc* t, uint32_t n, hig_word** out);
hig_status hig_trunc_multiply(const hig_trunc* a, const hig_trunc* b, hig_trunc** out);
hig_status hig_trunc_invert(const hig_trunc* t, hig_trunc** out);
hig_status hig_trunc_prefix(const hig_trunc* t, uint32_t depth, hig_trunc** out);
/* Stable element agreeing with t through its whole depth. */
hig_status hig_trunc_approximate(const hig_trunc* t, hig_stable** out);

/* Dyadic values are returned as numerator / 2^exponent in canonical form
 * (numerator odd or zero). */
hig_status hig_trunc_metric_bounds(const hig_trunc* a, const hig_trunc* b, uint32_t depth,
                                   int64_t* lower_num, uint32_t* lower_exp,
                                   int64_t* upper_num, uint32_t* upper_exp);
hig_status hig_stable_metric(const hig_stable* a, const hig_stable* b, int64_t* num,
                             uint32_t* exp);

/* Coordinatewise stabilization of a finite sequence, judged within the
 * sequence; the report lists, per coordinate, where the constant tail
 * starts.  hig_trunc_limit additionally returns the settled value and
 * fails with HIG_ERR_NOT_STABLE when any coordinate still moves. */
hig_status hig_trunc_converges_report(const hig_trunc* const* seq, size_t count,
                                      uint32_t depth, char** report, int* all_stable);
hig_status hig_trunc_limit(const hig_trunc* const* seq, size_t count, uint32_t depth,
                           hig_trunc** out);

/* Occurrence counts of each generator per coordinate, with a growth flag
 * per generator. */
hig_status hig_trunc_profile_report(const hig_trunc* t, char** out);

/* ------------------------------------------------------------------ */
/* endomorphism tables                                                 */

hig_status hig_endo_parse(const char* text, hig_endo** out);
hig_status hig_endo_to_text(const hig_endo* t, char** out);
/* The three-case table (a_j | a1 a_j A1 | a_{j-2}) with shift bound 2. */
hig_status hig_endo_counterexample(uint32_t depth, hig_endo** out);
hig_status hig_endo_depth(const hig_endo* t, uint32_t* out);
hig_status hig_endo_shift_bound(const hig_endo* t, uint32_t* out);
hig_status hig_endo_image(const hig_endo* t, uint32_t index, hig_stable** out);

/* Shift certificate over the whole table: *ok reports the verdict and the
 * report names the first offending index on failure. */
hig_status hig_endo_verify_null_convergence(const hig_endo* t, char** report, int* ok);

/* Coordinate n of the image of g; HIG_ERR_DEPTH when the table or g is too
 * shallow (the message names the required depth). */
hig_status hig_endo_eval_coordinate(const hig_endo* t, const hig_trunc* g, uint32_t n,
                                    hig_word** out);
hig_status hig_endo_eval(const hig_endo* t, const hig_trunc* g, uint32_t out_depth,
                         hig_trunc** out);
/* Least cut depth n(i) covering every image nontrivial at coordinate i. */
hig_status hig_endo_factoring_depth(const hig_endo* t, uint32_t i, uint32_t* out);

/* Full counterexample-shape verification; *ok is the verdict, the report
 * is the stable-grammar section text. */
hig_status hig_endo_verify_table(const hig_endo* t, char** report, int* ok);

/* ------------------------------------------------------------------ */
/* inverse systems                                                     */

hig_status hig_system_parse(const char* text, hig_system** out);
hig_status hig_system_to_text(const hig_system* s, char** out);
/* Levels 1 ... n of the full system: rank k at level k, standard
 * projections between. */
hig_status hig_system_standard(uint32_t levels, hig_system** out);
hig_status hig_system_levels(const hig_system* s, uint32_t* out);
hig_status hig_system_rank(const hig_system* s, uint32_t level, uint32_t* out);
hig_status hig_system_map(const hig_system* s, uint32_t level, hig_map** out);

/* Rank wiring and surjectivity of every connecting map; *ok is the
 * verdict, the report lists every violation. */
hig_status hig_system_validate(const hig_system* s, char** report, int* ok);

/* Subsystem on the selected 1-based, strictly increasing levels. */
hig_status hig_system_restrict(const hig_system* s, const uint32_t* levels, size_t count,
                               hig_system** out);

hig_status hig_system_normalize(const hig_system* s, hig_norm** out);
hig_status hig_norm_level_iso(const hig_norm* n, uint32_t level, hig_map** out);
/* Pair (preimage count, kernel count) at the given level. */
hig_status hig_norm_signature(const hig_norm* n, uint32_t level, uint32_t* preimage_count,
                              uint32_t* kernel_count);
/* section: "all", "signature", "isos", or "squares". */
hig_status hig_norm_report(const hig_norm* n, const char* section, char** out);

/* Verdict text "UniversalG (prefix verdict)" etc.; verdict_kind is 0 for
 * FreeOfRank, 1 for UniversalG, 2 for Undetermined. */
hig_status hig_system_classify(const hig_system* s, uint32_t window, char** report,
                               int* verdict_kind, uint32_t* free_rank);

/* ------------------------------------------------------------------ */
/* text round-trip                                                     */

/* Detect the format of `text` (word list, map, element, stable, endo,
 * system) and reprint it canonically. */
hig_status hig_convert_text(const char* text, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HIGLIM_H */
