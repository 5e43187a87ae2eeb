#include "textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace higlim {

namespace {

struct Token {
  std::string text;
  std::uint32_t line = 1;
  std::uint32_t column = 1;
};

// Tokens grouped by physical line, blank and comment-only lines dropped.
struct TokenLine {
  std::uint32_t number = 1;
  std::vector<Token> tokens;
};

std::vector<TokenLine> tokenize(std::string_view text) {
  std::vector<TokenLine> lines;
  std::uint32_t line_number = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    TokenLine out;
    out.number = line_number;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (line[i] == '#') break;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '#')
        ++i;
      out.tokens.push_back(Token{std::string(line.substr(start, i - start)), line_number,
                                 static_cast<std::uint32_t>(start + 1)});
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_number;
  }
  return lines;
}

// Sequential reader over token lines, with a position for "ran out of
// input" errors one line past the end.
class Cursor {
 public:
  explicit Cursor(std::vector<TokenLine> lines, std::uint32_t end_line)
      : lines_(std::move(lines)), end_line_(end_line) {}

  bool at_end() const { return index_ >= lines_.size(); }

  const TokenLine& take_line(const std::string& expectation) {
    if (at_end()) throw ParseError(end_line_, 1, "unexpected end of input, expected " + expectation);
    return lines_[index_++];
  }

  void expect_end() const {
    if (!at_end()) {
      const Token& t = lines_[index_].tokens.front();
      throw ParseError(t.line, t.column, "unexpected trailing content '" + t.text + "'");
    }
  }

 private:
  std::vector<TokenLine> lines_;
  std::size_t index_ = 0;
  std::uint32_t end_line_;
};

Cursor make_cursor(std::string_view text) {
  std::uint32_t total_lines =
      static_cast<std::uint32_t>(1 + std::count(text.begin(), text.end(), '\n'));
  return Cursor(tokenize(text), total_lines + 1);
}

std::uint64_t parse_number(const Token& t, const std::string& what, std::uint64_t max_value) {
  if (t.text.empty() || t.text.size() > 10)
    throw ParseError(t.line, t.column, "malformed " + what + " '" + t.text + "'");
  std::uint64_t value = 0;
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(t.line, t.column, "malformed " + what + " '" + t.text + "'");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (t.text.size() > 1 && t.text[0] == '0')
    throw ParseError(t.line, t.column, what + " must not have leading zeros");
  if (value > max_value)
    throw ParseError(t.line, t.column, what + " " + t.text + " is out of range");
  return value;
}

Letter parse_letter(const Token& t) {
  char head = t.text[0];
  std::int8_t sign = head == 'a' ? std::int8_t{+1} : std::int8_t{-1};
  Token index_part{t.text.substr(1), t.line, t.column};
  std::uint64_t index = parse_number(index_part, "generator index", kMaxGeneratorIndex);
  if (index == 0)
    throw ParseError(t.line, t.column, "generator index must be at least 1");
  return Letter{static_cast<std::uint32_t>(index), sign};
}

Word parse_word_tokens(const std::vector<Token>& tokens, std::size_t from = 0) {
  std::vector<Letter> letters;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.text == "1") continue;  // identity factor
    if (t.text[0] != 'a' && t.text[0] != 'A')
      throw ParseError(t.line, t.column, "unknown token '" + t.text + "'");
    letters.push_back(parse_letter(t));
  }
  return Word(std::span<const Letter>(letters));
}

void expect_keyword(const TokenLine& line, std::size_t i, const std::string& keyword) {
  if (i >= line.tokens.size())
    throw ParseError(line.number, 1, "expected '" + keyword + "'");
  const Token& t = line.tokens[i];
  if (t.text != keyword)
    throw ParseError(t.line, t.column, "expected '" + keyword + "', found '" + t.text + "'");
}

void expect_line_length(const TokenLine& line, std::size_t count) {
  if (line.tokens.size() > count) {
    const Token& t = line.tokens[count];
    throw ParseError(t.line, t.column, "unexpected token '" + t.text + "'");
  }
  if (line.tokens.size() < count)
    throw ParseError(line.number, 1, "line has too few tokens");
}

// A word line whose letters must stay within `rank`; the error names the
// line so rank problems in larger files point at the offending word.
Word parse_ranked_word_line(const TokenLine& line, std::uint32_t rank,
                            const std::string& what) {
  Word w = parse_word_tokens(line.tokens);
  if (w.max_index() > rank)
    throw ParseError(line.number, 1,
                     what + " uses generator a" + std::to_string(w.max_index()) +
                         " beyond rank " + std::to_string(rank));
  return w;
}

}  // namespace

Word parse_word(std::string_view text) {
  Cursor cursor = make_cursor(text);
  const TokenLine& line = cursor.take_line("a word");
  Word w = parse_word_tokens(line.tokens);
  cursor.expect_end();
  return w;
}

std::vector<Word> parse_word_list(std::string_view text) {
  std::vector<Word> words;
  for (const TokenLine& line : tokenize(text)) words.push_back(parse_word_tokens(line.tokens));
  return words;
}

FreeMap parse_map(std::string_view text) {
  Cursor cursor = make_cursor(text);
  const TokenLine& header = cursor.take_line("'map <domain-rank> <codomain-rank>'");
  expect_keyword(header, 0, "map");
  expect_line_length(header, 3);
  auto domain_rank = static_cast<std::uint32_t>(
      parse_number(header.tokens[1], "domain rank", kMaxGeneratorIndex));
  auto codomain_rank = static_cast<std::uint32_t>(
      parse_number(header.tokens[2], "codomain rank", kMaxGeneratorIndex));
  std::vector<Word> images;
  images.reserve(domain_rank);
  for (std::uint32_t k = 1; k <= domain_rank; ++k) {
    const TokenLine& line = cursor.take_line("image of a" + std::to_string(k));
    images.push_back(
        parse_ranked_word_line(line, codomain_rank, "image of a" + std::to_string(k)));
  }
  cursor.expect_end();
  return make_map(domain_rank, codomain_rank, std::move(images));
}

Truncation parse_element(std::string_view text) {
  Cursor cursor = make_cursor(text);
  const TokenLine& header = cursor.take_line("'element <depth>'");
  expect_keyword(header, 0, "element");
  expect_line_length(header, 2);
  auto depth =
      static_cast<std::uint32_t>(parse_number(header.tokens[1], "depth", kMaxGeneratorIndex));
  if (depth < 1) throw ParseError(header.number, 1, "depth must be at least 1");
  std::vector<Word> coords;
  coords.reserve(depth);
  std::vector<std::uint32_t> line_numbers;
  for (std::uint32_t n = 1; n <= depth; ++n) {
    const TokenLine& line = cursor.take_line("coordinate " + std::to_string(n));
    coords.push_back(parse_ranked_word_line(line, n, "coordinate " + std::to_string(n)));
    line_numbers.push_back(line.number);
  }
  cursor.expect_end();
  for (std::uint32_t n = 2; n <= depth; ++n) {
    if (project_to_rank(coords[n - 1], n - 1) != coords[n - 2])
      throw ParseError(line_numbers[n - 1], 1,
                       "coordinate " + std::to_string(n) + " does not project to coordinate " +
                           std::to_string(n - 1));
  }
  return Truncation(std::move(coords));
}

StableElement parse_stable(std::string_view text) {
  Cursor cursor = make_cursor(text);
  const TokenLine& header = cursor.take_line("'stable'");
  expect_keyword(header, 0, "stable");
  expect_line_length(header, 1);
  const TokenLine& line = cursor.take_line("the stable word");
  Word w = parse_word_tokens(line.tokens);
  cursor.expect_end();
  return StableElement(std::move(w));
}

EndoTable parse_endo(std::string_view text) {
  Cursor cursor = make_cursor(text);
  const TokenLine& header = cursor.take_line("'endo <depth> shift <bound>'");
  expect_keyword(header, 0, "endo");
  expect_line_length(header, 4);
  auto depth =
      static_cast<std::uint32_t>(parse_number(header.tokens[1], "table depth", kMaxGeneratorIndex));
  expect_keyword(header, 2, "shift");
  auto shift = static_cast<std::uint32_t>(
      parse_number(header.tokens[3], "shift bound", kMaxGeneratorIndex));
  if (depth < 1) throw ParseError(header.number, 1, "table depth must be at least 1");
  std::vector<StableElement> images;
  images.reserve(depth);
  for (std::uint32_t j = 1; j <= depth; ++j) {
    const TokenLine& line = cursor.take_line("image of a" + std::to_string(j));
    images.push_back(StableElement(parse_word_tokens(line.tokens)));
  }
  cursor.expect_end();
  return make_endo_table(std::move(images), shift);
}

SystemDescription parse_system(std::string_view text) {
  Cursor cursor = make_cursor(text);
  const TokenLine& header = cursor.take_line("'system <levels>'");
  expect_keyword(header, 0, "system");
  expect_line_length(header, 2);
  auto levels =
      static_cast<std::uint32_t>(parse_number(header.tokens[1], "level count", kMaxGeneratorIndex));
  if (levels < 1) throw ParseError(header.number, 1, "a system needs at least one level");

  const TokenLine& rank_line = cursor.take_line("'ranks r1 ... rN'");
  expect_keyword(rank_line, 0, "ranks");
  expect_line_length(rank_line, 1 + levels);
  std::vector<std::uint32_t> ranks;
  ranks.reserve(levels);
  for (std::uint32_t n = 1; n <= levels; ++n)
    ranks.push_back(static_cast<std::uint32_t>(
        parse_number(rank_line.tokens[n], "rank", kMaxGeneratorIndex)));

  std::vector<FreeMap> maps;
  maps.reserve(levels - 1);
  for (std::uint32_t n = 2; n <= levels; ++n) {
    const TokenLine& map_header = cursor.take_line("'map " + std::to_string(n) + "'");
    expect_keyword(map_header, 0, "map");
    expect_line_length(map_header, 2);
    auto declared =
        static_cast<std::uint32_t>(parse_number(map_header.tokens[1], "level", kMaxGeneratorIndex));
    if (declared != n)
      throw ParseError(map_header.number, 1,
                       "expected the map into level " + std::to_string(n - 1) +
                           " introduced by 'map " + std::to_string(n) + "'");
    std::vector<Word> images;
    images.reserve(ranks[n - 1]);
    for (std::uint32_t k = 1; k <= ranks[n - 1]; ++k) {
      const TokenLine& line = cursor.take_line("image of a" + std::to_string(k));
      images.push_back(
          parse_ranked_word_line(line, ranks[n - 2], "image of a" + std::to_string(k)));
    }
    maps.push_back(make_map(ranks[n - 1], ranks[n - 2], std::move(images)));
  }
  cursor.expect_end();
  return make_system(std::move(ranks), std::move(maps));
}

std::string print_word(const Word& w) { return to_text(w) + "\n"; }

std::string print_map(const FreeMap& f) { return to_text(f); }

std::string print_element(const Truncation& x) {
  std::ostringstream os;
  os << "element " << x.depth() << '\n';
  for (std::uint32_t n = 1; n <= x.depth(); ++n) os << to_text(x.coordinate(n)) << '\n';
  return os.str();
}

std::string print_stable(const StableElement& g) {
  return "stable\n" + to_text(g.word()) + "\n";
}

std::string print_endo(const EndoTable& t) {
  std::ostringstream os;
  os << "endo " << t.table_depth << " shift " << t.shift_bound << '\n';
  for (const StableElement& e : t.images) os << to_text(e.word()) << '\n';
  return os.str();
}

std::string print_system(const SystemDescription& s) {
  std::ostringstream os;
  os << "system " << s.levels << '\n' << "ranks";
  for (std::uint32_t r : s.ranks) os << ' ' << r;
  os << '\n';
  for (std::uint32_t n = 2; n <= s.levels; ++n) {
    os << "map " << n << '\n';
    for (const Word& w : s.maps[n - 2].images) os << to_text(w) << '\n';
  }
  return os.str();
}

TextFormat detect_format(std::string_view text) {
  std::vector<TokenLine> lines = tokenize(text);
  if (lines.empty()) return TextFormat::word_list;
  const Token& first = lines.front().tokens.front();
  if (first.text == "map") return TextFormat::map;
  if (first.text == "element") return TextFormat::element;
  if (first.text == "stable") return TextFormat::stable;
  if (first.text == "endo") return TextFormat::endo;
  if (first.text == "system") return TextFormat::system;
  if (first.text == "1" || first.text[0] == 'a' || first.text[0] == 'A')
    return TextFormat::word_list;
  throw ParseError(first.line, first.column,
                   "unrecognized file format starting with '" + first.text + "'");
}

std::string convert_text(std::string_view text) {
  switch (detect_format(text)) {
    case TextFormat::map:
      return print_map(parse_map(text));
    case TextFormat::element:
      return print_element(parse_element(text));
    case TextFormat::stable:
      return print_stable(parse_stable(text));
    case TextFormat::endo:
      return print_endo(parse_endo(text));
    case TextFormat::system:
      return print_system(parse_system(text));
    case TextFormat::word_list: {
      std::string out;
      for (const Word& w : parse_word_list(text)) out += to_text(w) + "\n";
      return out;
    }
  }
  throw InternalError("unhandled text format");
}

}  // namespace higlim
