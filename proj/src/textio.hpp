#ifndef HIGLIM_TEXTIO_HPP
#define HIGLIM_TEXTIO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "endo.hpp"
#include "errors.hpp"
#include "fmap.hpp"
#include "invsystem.hpp"
#include "prolimit.hpp"
#include "word.hpp"

namespace higlim {

// Parse failure with a 1-based position; what() is formatted as
// "line:col: error: message" so callers can prefix a file name.
struct ParseError : Error {
  std::uint32_t line;
  std::uint32_t column;
  ParseError(std::uint32_t line, std::uint32_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": error: " + message),
        line(line),
        column(column) {}
};

// Everywhere below, blank lines and '#' comments are skipped, letters are
// written a3 / A3 (inverse), and a lone 1 denotes the identity.

// One word; extra lines are an error.
Word parse_word(std::string_view text);

// One word per line, in file order.  The list may be empty.
std::vector<Word> parse_word_list(std::string_view text);

// "map <domain_rank> <codomain_rank>" followed by domain_rank image lines.
FreeMap parse_map(std::string_view text);

// "element <N>" followed by coordinate lines 1 ... N.
Truncation parse_element(std::string_view text);

// "stable" followed by one word line.
StableElement parse_stable(std::string_view text);

// "endo <J> shift <c>" followed by J stable word lines.
EndoTable parse_endo(std::string_view text);

// "system <N>", "ranks r1 ... rN", then blocks "map <n>" with the images of
// level n's connecting map (r_n lines over rank r_{n-1}) for n = 2 ... N.
SystemDescription parse_system(std::string_view text);

std::string print_word(const Word& w);
std::string print_map(const FreeMap& f);
std::string print_element(const Truncation& x);
std::string print_stable(const StableElement& g);
std::string print_endo(const EndoTable& t);
std::string print_system(const SystemDescription& s);

enum class TextFormat : std::uint8_t { word_list, map, element, stable, endo, system };

// Format from the leading keyword; headerless content that scans as words
// is a word_list.
TextFormat detect_format(std::string_view text);

// Parse by detected format and reprint canonically.  Fixed point on
// canonical files.
std::string convert_text(std::string_view text);

}  // namespace higlim

#endif
