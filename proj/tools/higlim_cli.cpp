// higlim command-line tool.  Every computation goes through the public C
// API in higlim/higlim.h; this file only reads files, wires flags, and
// prints the reports the library hands back.
//
// Exit status: 0 on success or a verified verdict, 1 on a soft verdict
// failure (violation, not stable, undetermined), 2 on malformed input or
// arguments.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "higlim/higlim.h"

namespace {

struct StringFree {
  void operator()(char* p) const { hig_string_free(p); }
};
using ApiString = std::unique_ptr<char, StringFree>;

struct WordFree {
  void operator()(hig_word* p) const { hig_word_free(p); }
};
using WordHandle = std::unique_ptr<hig_word, WordFree>;

struct MapFree {
  void operator()(hig_map* p) const { hig_map_free(p); }
};
using MapHandle = std::unique_ptr<hig_map, MapFree>;

struct GraphFree {
  void operator()(hig_graph* p) const { hig_graph_free(p); }
};
using GraphHandle = std::unique_ptr<hig_graph, GraphFree>;

struct SplitFree {
  void operator()(hig_split* p) const { hig_split_free(p); }
};
using SplitHandle = std::unique_ptr<hig_split, SplitFree>;

struct TruncFree {
  void operator()(hig_trunc* p) const { hig_trunc_free(p); }
};
using TruncHandle = std::unique_ptr<hig_trunc, TruncFree>;

struct StableFree {
  void operator()(hig_stable* p) const { hig_stable_free(p); }
};
using StableHandle = std::unique_ptr<hig_stable, StableFree>;

struct EndoFree {
  void operator()(hig_endo* p) const { hig_endo_free(p); }
};
using EndoHandle = std::unique_ptr<hig_endo, EndoFree>;

struct SystemFree {
  void operator()(hig_system* p) const { hig_system_free(p); }
};
using SystemHandle = std::unique_ptr<hig_system, SystemFree>;

struct NormFree {
  void operator()(hig_norm* p) const { hig_norm_free(p); }
};
using NormHandle = std::unique_ptr<hig_norm, NormFree>;

int exit_for(hig_status status) {
  switch (status) {
    case HIG_OK:
      return 0;
    case HIG_ERR_NOT_SURJECTIVE:
    case HIG_ERR_NOT_MEMBER:
    case HIG_ERR_NOT_STABLE:
      return 1;
    default:
      return 2;
  }
}

int fail(const std::string& context, hig_status status) {
  std::cerr << "higlim: " << context << ": " << hig_last_error() << '\n';
  return exit_for(status);
}

std::string input_label(const std::string& path) {
  return path == "-" ? "<stdin>" : path;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "higlim: cannot read " << path << '\n';
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

std::string join_args(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& part : parts) {
    if (!out.empty()) out += ' ';
    out += part;
  }
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// First token of the first non-blank, non-comment line; empty when the
// input has none.  Used to pick the reader for files that may hold either
// a stable element or a truncated one.
std::string first_keyword(const std::string& text) {
  for (const std::string& raw : lines_of(text)) {
    const std::string line = raw.substr(0, raw.find('#'));
    const std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const std::size_t end = line.find_first_of(" \t\r", begin);
    return line.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
  }
  return "";
}

std::string dyadic_text(int64_t num, uint32_t exp) {
  return std::to_string(num) + "/2^" + std::to_string(exp);
}

void print_line_with_prefix(const std::string& report, const std::string& prefix) {
  for (const std::string& line : lines_of(report)) {
    if (line.rfind(prefix, 0) == 0) {
      std::cout << line << '\n';
      return;
    }
  }
}

void print_last_line(const std::string& report) {
  const std::vector<std::string> lines = lines_of(report);
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    if (!it->empty()) {
      std::cout << *it << '\n';
      return;
    }
  }
}

int run_reduce(const std::vector<std::string>& parts) {
  hig_word* raw = nullptr;
  hig_status st = hig_word_parse(join_args(parts).c_str(), &raw);
  WordHandle word(raw);
  if (st != HIG_OK) return fail("argument", st);
  char* text = nullptr;
  st = hig_word_to_text(word.get(), &text);
  ApiString out(text);
  if (st != HIG_OK) return fail("argument", st);
  std::cout << out.get();
  return 0;
}

int run_project(uint32_t source_rank, uint32_t target_rank,
                const std::vector<std::string>& parts) {
  hig_map* raw_map = nullptr;
  hig_status st = hig_map_standard_projection(source_rank, target_rank, &raw_map);
  MapHandle projection(raw_map);
  if (st != HIG_OK) return fail("argument", st);

  hig_word* raw_word = nullptr;
  st = hig_word_parse(join_args(parts).c_str(), &raw_word);
  WordHandle word(raw_word);
  if (st != HIG_OK) return fail("argument", st);

  hig_word* raw_image = nullptr;
  st = hig_map_apply(projection.get(), word.get(), &raw_image);
  WordHandle image(raw_image);
  if (st != HIG_OK) return fail("argument", st);

  char* text = nullptr;
  st = hig_word_to_text(image.get(), &text);
  ApiString out(text);
  if (st != HIG_OK) return fail("argument", st);
  std::cout << out.get();
  return 0;
}

// Reads a stable or element file and lands on a truncation either way; a
// stable element is cut at `stable_depth`.
int load_truncation(const std::string& path, uint32_t stable_depth, TruncHandle& out) {
  std::string text;
  if (!read_input(path, text)) return 2;
  const std::string keyword = first_keyword(text);
  if (keyword == "element") {
    hig_trunc* raw = nullptr;
    hig_status st = hig_trunc_parse(text.c_str(), &raw);
    out.reset(raw);
    return st == HIG_OK ? 0 : fail(input_label(path), st);
  }
  if (keyword == "stable") {
    hig_stable* raw_stable = nullptr;
    hig_status st = hig_stable_parse(text.c_str(), &raw_stable);
    StableHandle stable(raw_stable);
    if (st != HIG_OK) return fail(input_label(path), st);
    hig_trunc* raw = nullptr;
    st = hig_stable_truncate(stable.get(), stable_depth, &raw);
    out.reset(raw);
    return st == HIG_OK ? 0 : fail(input_label(path), st);
  }
  std::cerr << "higlim: " << input_label(path)
            << ": expected a stable or element file\n";
  return 2;
}

int run_metric(const std::string& path_a, const std::string& path_b, uint32_t depth,
               bool quiet) {
  std::string text_a, text_b;
  if (!read_input(path_a, text_a) || !read_input(path_b, text_b)) return 2;
  const std::string kind_a = first_keyword(text_a);
  const std::string kind_b = first_keyword(text_b);

  if (kind_a == "stable" && kind_b == "stable" && depth == 0) {
    hig_stable* raw_a = nullptr;
    hig_status st = hig_stable_parse(text_a.c_str(), &raw_a);
    StableHandle a(raw_a);
    if (st != HIG_OK) return fail(input_label(path_a), st);
    hig_stable* raw_b = nullptr;
    st = hig_stable_parse(text_b.c_str(), &raw_b);
    StableHandle b(raw_b);
    if (st != HIG_OK) return fail(input_label(path_b), st);
    int64_t num = 0;
    uint32_t exp = 0;
    st = hig_stable_metric(a.get(), b.get(), &num, &exp);
    if (st != HIG_OK) return fail("metric", st);
    if (quiet)
      std::cout << dyadic_text(num, exp) << '\n';
    else
      std::cout << "distance " << dyadic_text(num, exp) << '\n';
    return 0;
  }

  // At least one truncated input (or an explicit depth): compare as
  // truncations and report the interval the true distance lies in.  A
  // stable file is cut at the requested depth, or at the other side's
  // depth when no flag was given.
  uint32_t cut = depth;
  if (cut == 0) {
    uint32_t best = 0;
    for (const auto* pair : {&text_a, &text_b}) {
      if (first_keyword(*pair) != "element") continue;
      hig_trunc* raw = nullptr;
      hig_status st = hig_trunc_parse(pair->c_str(), &raw);
      TruncHandle probe(raw);
      if (st != HIG_OK)
        return fail(input_label(pair == &text_a ? path_a : path_b), st);
      uint32_t d = 0;
      hig_trunc_depth(probe.get(), &d);
      best = best == 0 ? d : std::min(best, d);
    }
    if (best == 0) {
      std::cerr << "higlim: metric on two stable files needs --depth for bounds\n";
      return 2;
    }
    cut = best;
  }

  TruncHandle a, b;
  if (int code = load_truncation(path_a, cut, a); code != 0) return code;
  if (int code = load_truncation(path_b, cut, b); code != 0) return code;

  int64_t lower_num = 0, upper_num = 0;
  uint32_t lower_exp = 0, upper_exp = 0;
  hig_status st = hig_trunc_metric_bounds(a.get(), b.get(), cut, &lower_num, &lower_exp,
                                          &upper_num, &upper_exp);
  if (st != HIG_OK) return fail("metric", st);
  if (quiet) {
    std::cout << dyadic_text(lower_num, lower_exp) << ' '
              << dyadic_text(upper_num, upper_exp) << '\n';
  } else {
    std::cout << "lower " << dyadic_text(lower_num, lower_exp) << '\n'
              << "upper " << dyadic_text(upper_num, upper_exp) << '\n';
  }
  return 0;
}

int run_fold(const std::string& path, uint32_t rank_flag, bool quiet) {
  std::string text;
  if (!read_input(path, text)) return 2;
  hig_word** items = nullptr;
  size_t count = 0;
  hig_status st = hig_word_list_parse(text.c_str(), &items, &count);
  if (st != HIG_OK) return fail(input_label(path), st);

  uint32_t rank = rank_flag;
  if (rank == 0) {
    for (size_t i = 0; i < count; ++i) {
      uint32_t top = 0;
      hig_word_max_index(items[i], &top);
      rank = std::max(rank, top);
    }
  }

  hig_graph* raw_graph = nullptr;
  st = hig_graph_fold(items, count, rank, &raw_graph);
  GraphHandle graph(raw_graph);
  hig_word_list_free(items, count);
  if (st != HIG_OK) return fail(input_label(path), st);

  char* text_out = nullptr;
  st = hig_graph_report(graph.get(), &text_out);
  ApiString report(text_out);
  if (st != HIG_OK) return fail("fold", st);
  if (quiet)
    print_last_line(report.get());
  else
    std::cout << report.get();
  return 0;
}

int run_split(const std::string& path, bool quiet) {
  std::string text;
  if (!read_input(path, text)) return 2;
  hig_map* raw_map = nullptr;
  hig_status st = hig_map_parse(text.c_str(), &raw_map);
  MapHandle map(raw_map);
  if (st != HIG_OK) return fail(input_label(path), st);

  hig_split* raw_split = nullptr;
  st = hig_map_split_basis(map.get(), &raw_split);
  SplitHandle split(raw_split);
  if (st != HIG_OK) return fail(input_label(path), st);

  char* text_out = nullptr;
  st = hig_split_report(split.get(), &text_out);
  ApiString report(text_out);
  if (st != HIG_OK) return fail("split", st);
  if (quiet) {
    const std::vector<std::string> lines = lines_of(report.get());
    if (!lines.empty()) std::cout << lines.front() << '\n';
  } else {
    std::cout << report.get();
  }
  return 0;
}

int load_system(const std::string& path, SystemHandle& out) {
  std::string text;
  if (!read_input(path, text)) return 2;
  hig_system* raw = nullptr;
  hig_status st = hig_system_parse(text.c_str(), &raw);
  out.reset(raw);
  return st == HIG_OK ? 0 : fail(input_label(path), st);
}

// Prints the validation report and signals exit 1 when the system's
// declared ranks or surjectivity fail; normalize and classify both gate on
// this so a defective file is a verdict, not a crash.
int check_system(const hig_system* system) {
  char* text_out = nullptr;
  int ok = 0;
  hig_status st = hig_system_validate(system, &text_out, &ok);
  ApiString report(text_out);
  if (st != HIG_OK) return fail("validate", st);
  if (ok == 0) {
    std::cout << report.get();
    return 1;
  }
  return 0;
}

int run_normalize(const std::string& path, const std::string& section, bool quiet) {
  SystemHandle system;
  if (int code = load_system(path, system); code != 0) return code;
  if (int code = check_system(system.get()); code != 0) return code;

  hig_norm* raw_norm = nullptr;
  hig_status st = hig_system_normalize(system.get(), &raw_norm);
  NormHandle norm(raw_norm);
  if (st != HIG_OK) return fail(input_label(path), st);

  char* text_out = nullptr;
  st = hig_norm_report(norm.get(), quiet ? "signature" : section.c_str(), &text_out);
  ApiString report(text_out);
  if (st != HIG_OK) return fail("normalize", st);
  if (quiet)
    print_line_with_prefix(report.get(), "signature");
  else
    std::cout << report.get();
  return 0;
}

int run_classify(const std::string& path, uint32_t window, bool quiet) {
  SystemHandle system;
  if (int code = load_system(path, system); code != 0) return code;
  if (int code = check_system(system.get()); code != 0) return code;

  char* text_out = nullptr;
  int verdict_kind = 0;
  uint32_t rank = 0;
  hig_status st = hig_system_classify(system.get(), window, &text_out, &verdict_kind, &rank);
  ApiString report(text_out);
  if (st != HIG_OK) return fail(input_label(path), st);
  if (quiet) {
    const std::vector<std::string> lines = lines_of(report.get());
    if (!lines.empty()) std::cout << lines.front() << '\n';
  } else {
    std::cout << report.get();
  }
  return verdict_kind == 2 ? 1 : 0;
}

int load_endo(const std::string& path, uint32_t counterexample_depth, EndoHandle& out) {
  if (counterexample_depth > 0) {
    hig_endo* raw = nullptr;
    hig_status st = hig_endo_counterexample(counterexample_depth, &raw);
    out.reset(raw);
    return st == HIG_OK ? 0 : fail("--counterexample", st);
  }
  std::string text;
  if (!read_input(path, text)) return 2;
  hig_endo* raw = nullptr;
  hig_status st = hig_endo_parse(text.c_str(), &raw);
  out.reset(raw);
  return st == HIG_OK ? 0 : fail(input_label(path), st);
}

int run_endo_eval(const std::string& endo_path, uint32_t counterexample_depth,
                  const std::string& element_path, uint32_t out_depth) {
  EndoHandle table;
  if (int code = load_endo(endo_path, counterexample_depth, table); code != 0) return code;

  std::string text;
  if (!read_input(element_path, text)) return 2;
  hig_trunc* raw_elem = nullptr;
  hig_status st = hig_trunc_parse(text.c_str(), &raw_elem);
  TruncHandle element(raw_elem);
  if (st != HIG_OK) return fail(input_label(element_path), st);

  uint32_t depth = out_depth;
  if (depth == 0) {
    uint32_t table_depth = 0, shift = 0, element_depth = 0;
    hig_endo_depth(table.get(), &table_depth);
    hig_endo_shift_bound(table.get(), &shift);
    hig_trunc_depth(element.get(), &element_depth);
    const uint32_t available = std::min(table_depth, element_depth);
    if (available <= shift) {
      std::cerr << "higlim: inputs too shallow: no coordinate clears the shift bound "
                << shift << '\n';
      return 2;
    }
    depth = available - shift;
  }

  hig_trunc* raw_image = nullptr;
  st = hig_endo_eval(table.get(), element.get(), depth, &raw_image);
  TruncHandle image(raw_image);
  if (st != HIG_OK) return fail("endo-eval", st);

  char* text_out = nullptr;
  st = hig_trunc_to_text(image.get(), &text_out);
  ApiString out(text_out);
  if (st != HIG_OK) return fail("endo-eval", st);
  std::cout << out.get();
  return 0;
}

int run_endo_verify(const std::string& endo_path, uint32_t counterexample_depth,
                    bool quiet) {
  EndoHandle table;
  if (int code = load_endo(endo_path, counterexample_depth, table); code != 0) return code;

  char* text_out = nullptr;
  int ok = 0;
  hig_status st = hig_endo_verify_table(table.get(), &text_out, &ok);
  ApiString report(text_out);
  if (st != HIG_OK) return fail("endo-verify", st);
  if (quiet)
    print_line_with_prefix(report.get(), "verdict");
  else
    std::cout << report.get();
  return ok != 0 ? 0 : 1;
}

int run_convert(const std::string& path) {
  std::string text;
  if (!read_input(path, text)) return 2;
  char* text_out = nullptr;
  hig_status st = hig_convert_text(text.c_str(), &text_out);
  ApiString out(text_out);
  if (st != HIG_OK) return fail(input_label(path), st);
  std::cout << out.get();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"words, subgroup foldings, and inverse systems of free groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hig_version()));
  bool quiet = false;
  app.add_flag("--quiet", quiet, "verdict-only output");

  auto* reduce = app.add_subcommand("reduce", "freely reduce a word");
  std::vector<std::string> reduce_word;
  reduce->add_option("word", reduce_word, "letters, e.g. \"a1 a2 A1\"")->required();

  auto* project = app.add_subcommand("project", "apply the standard projection to a word");
  uint32_t project_source = 0, project_target = 0;
  std::vector<std::string> project_word;
  project->add_option("i", project_source, "source rank")->required();
  project->add_option("j", project_target, "target rank")->required();
  project->add_option("word", project_word, "word over rank i")->required();

  auto* metric = app.add_subcommand("metric", "distance between two limit elements");
  std::string metric_a, metric_b;
  uint32_t metric_depth = 0;
  metric->add_option("fileA", metric_a, "stable or element file")->required();
  metric->add_option("fileB", metric_b, "stable or element file")->required();
  metric->add_option("--depth", metric_depth, "compare as truncations at this depth");

  auto* fold = app.add_subcommand("fold", "fold the subgroup graph of a word list");
  std::string fold_path;
  uint32_t fold_rank = 0;
  fold->add_option("file", fold_path, "one generator word per line")->required();
  fold->add_option("--rank", fold_rank, "ambient rank (default: largest index used)");

  auto* split = app.add_subcommand("split", "basis split of a surjective map");
  std::string split_path;
  split->add_option("mapfile", split_path, "map file")->required();

  auto* normalize = app.add_subcommand("normalize", "align a system with the standard one");
  std::string normalize_path, normalize_section = "all";
  normalize->add_option("systemfile", normalize_path, "system file")->required();
  normalize->add_option("--report", normalize_section, "section to print")
      ->check(CLI::IsMember({"all", "signature", "isos", "squares"}));

  auto* classify = app.add_subcommand("classify", "verdict on a finite system prefix");
  std::string classify_path;
  uint32_t classify_window = 3;
  classify->add_option("systemfile", classify_path, "system file")->required();
  classify->add_option("--window", classify_window, "constant-rank window size");

  auto* endo_eval = app.add_subcommand("endo-eval", "apply an endomorphism table");
  std::vector<std::string> endo_eval_files;
  uint32_t endo_eval_counterexample = 0, endo_eval_depth = 0;
  endo_eval->add_option("files", endo_eval_files,
                        "endo file (omit with --counterexample) and element file");
  endo_eval->add_option("--counterexample", endo_eval_counterexample,
                        "use the built-in table of this depth");
  endo_eval->add_option("--depth", endo_eval_depth, "output depth (default: deepest)");

  auto* endo_verify = app.add_subcommand("endo-verify", "check a counterexample-shape table");
  std::string endo_verify_path;
  uint32_t endo_verify_counterexample = 0;
  endo_verify->add_option("endofile", endo_verify_path, "endo file");
  endo_verify->add_option("--counterexample", endo_verify_counterexample,
                          "use the built-in table of this depth");

  auto* convert = app.add_subcommand("convert", "reprint a file in canonical form");
  std::string convert_path;
  convert->add_option("file", convert_path, "any higlim text file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(reduce)) return run_reduce(reduce_word);
  if (app.got_subcommand(project))
    return run_project(project_source, project_target, project_word);
  if (app.got_subcommand(metric)) return run_metric(metric_a, metric_b, metric_depth, quiet);
  if (app.got_subcommand(fold)) return run_fold(fold_path, fold_rank, quiet);
  if (app.got_subcommand(split)) return run_split(split_path, quiet);
  if (app.got_subcommand(normalize))
    return run_normalize(normalize_path, normalize_section, quiet);
  if (app.got_subcommand(classify)) return run_classify(classify_path, classify_window, quiet);
  if (app.got_subcommand(endo_eval)) {
    const bool built_in = endo_eval_counterexample > 0;
    const size_t expected = built_in ? 1 : 2;
    if (endo_eval_files.size() != expected) {
      std::cerr << "higlim: endo-eval expects "
                << (built_in ? "an element file" : "an endo file and an element file")
                << '\n';
      return 2;
    }
    const std::string endo_path = built_in ? "" : endo_eval_files.front();
    return run_endo_eval(endo_path, endo_eval_counterexample, endo_eval_files.back(),
                         endo_eval_depth);
  }
  if (app.got_subcommand(endo_verify)) {
    if ((endo_verify_counterexample > 0) == !endo_verify_path.empty()) {
      std::cerr << "higlim: endo-verify expects an endo file or --counterexample, not both\n";
      return 2;
    }
    return run_endo_verify(endo_verify_path, endo_verify_counterexample, quiet);
  }
  if (app.got_subcommand(convert)) return run_convert(convert_path);
  return 2;
}
