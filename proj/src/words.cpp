#include "stralg/words.hpp"

#include <algorithm>
#include <set>

#include "stralg/errors.hpp"

namespace stralg {

std::vector<Letter> parse_letters(const AlgebraSpec& spec, std::string_view text) {
  std::vector<Letter> out;
  if (text.empty()) throw ParseError("empty word");
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    bool inv = false;
    if (piece.size() > 3 && piece.substr(piece.size() - 3) == "^-1") {
      inv = true;
      piece.remove_suffix(3);
    }
    auto a = spec.find_arrow(piece);
    if (!a) throw ParseError("unknown arrow '" + std::string(piece) + "'");
    out.push_back({*a, inv});
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

Word parse_word(const AlgebraSpec& spec, std::string_view text) {
  if (text.rfind("1_", 0) == 0) {
    auto v = spec.find_vertex(text.substr(2));
    if (!v) throw ParseError("unknown vertex in '" + std::string(text) + "'");
    return Word::trivial(*v);
  }
  return Word::from_letters(parse_letters(spec, text));
}

std::string format_letters(const AlgebraSpec& spec, std::span<const Letter> letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += '.';
    out += spec.arrow(letters[i].arrow).name;
    if (letters[i].inverse) out += "^-1";
  }
  return out;
}

std::string format_word(const AlgebraSpec& spec, const Word& word) {
  if (word.is_trivial()) return "1_" + spec.vertex_name(word.trivial_vertex());
  return format_letters(spec, word.letters());
}

VertexId word_source(const AlgebraSpec& spec, const Word& word) {
  return word.is_trivial() ? word.trivial_vertex() : spec.source(word.source_end());
}

VertexId word_target(const AlgebraSpec& spec, const Word& word) {
  return word.is_trivial() ? word.trivial_vertex() : spec.target(word.target_end());
}

VertexId vertex_at(const AlgebraSpec& spec, const Word& word, std::size_t position) {
  if (word.is_trivial()) return word.trivial_vertex();
  if (position == 0) return spec.target(word[0]);
  return spec.source(word[position - 1]);
}

bool is_walk(const AlgebraSpec& spec, std::span<const Letter> letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (spec.source(letters[i]) != spec.target(letters[i + 1])) return false;
    if (letters[i + 1] == letters[i].inverted()) return false;
  }
  return true;
}

namespace {

// Path read off a same-direction run letters[begin, end).
Path run_path(std::span<const Letter> letters, std::size_t begin, std::size_t end) {
  Path p;
  for (std::size_t i = begin; i < end; ++i) p.push_back(letters[i].arrow);
  if (letters[begin].inverse) std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

bool runs_avoid_relations(const AlgebraSpec& spec, std::span<const Letter> letters) {
  std::size_t begin = 0;
  while (begin < letters.size()) {
    std::size_t end = begin + 1;
    while (end < letters.size() && letters[end].inverse == letters[begin].inverse) ++end;
    if (spec.contains_relation(run_path(letters, begin, end))) return false;
    begin = end;
  }
  return true;
}

bool is_string(const AlgebraSpec& spec, std::span<const Letter> letters) {
  for (const auto& l : letters)
    if (l.arrow >= spec.arrow_count()) throw ParseError("letter refers to an unknown arrow");
  return is_walk(spec, letters) && runs_avoid_relations(spec, letters);
}

bool is_string(const AlgebraSpec& spec, const Word& word) {
  if (word.is_trivial()) return word.trivial_vertex() < spec.vertex_count();
  return is_string(spec, word.letters());
}

bool extends_string(const AlgebraSpec& spec, std::span<const Letter> letters, Letter x) {
  if (letters.empty()) return true;
  const Letter& last = letters.back();
  if (spec.source(last) != spec.target(x) || x == last.inverted()) return false;
  std::size_t begin = letters.size();
  while (begin > 0 && letters[begin - 1].inverse == x.inverse) --begin;
  Path p;
  for (std::size_t i = begin; i < letters.size(); ++i) p.push_back(letters[i].arrow);
  p.push_back(x.arrow);
  if (x.inverse) std::reverse(p.begin(), p.end());
  return !spec.contains_relation(p);
}

Word canonical_string(const Word& word) {
  Word inv = word.inverse();
  return inv < word ? inv : word;
}

Word subword(const AlgebraSpec& spec, const Word& word, std::size_t begin, std::size_t len) {
  if (len == 0) return Word::trivial(vertex_at(spec, word, begin));
  auto l = word.letters().subspan(begin, len);
  return Word::from_letters({l.begin(), l.end()});
}

std::vector<Word> left_divisors(const AlgebraSpec& spec, const Word& word) {
  std::vector<Word> out;
  for (std::size_t i = 0; i <= word.length(); ++i) out.push_back(subword(spec, word, 0, i));
  return out;
}

namespace {

enum class Flanks { Sub, Fac };

bool middle_matches(const AlgebraSpec& spec, const Word& c, std::size_t at, const Word& d, const Word& d_inv) {
  if (d.is_trivial()) return vertex_at(spec, c, at) == d.trivial_vertex();
  auto window = c.letters().subspan(at, d.length());
  return std::equal(window.begin(), window.end(), d.letters().begin()) ||
         std::equal(window.begin(), window.end(), d_inv.letters().begin());
}

bool flanks_ok(const Word& c, std::size_t at, std::size_t len, Flanks kind) {
  const std::size_t n = c.length();
  // Sub: left neighbour inverse, right neighbour arrow. Fac: the reverse.
  const bool left_inverse_wanted = kind == Flanks::Sub;
  bool left = at == 0 || c[at - 1].inverse == left_inverse_wanted;
  bool right = at + len == n || c[at + len].inverse != left_inverse_wanted;
  return left && right;
}

std::vector<WordTriple> triples(const AlgebraSpec& spec, const Word& d, const Word& c, Flanks kind) {
  std::vector<WordTriple> out;
  if (d.length() > c.length()) return out;
  Word d_inv = d.inverse();
  for (std::size_t at = 0; at + d.length() <= c.length(); ++at) {
    if (!middle_matches(spec, c, at, d, d_inv) || !flanks_ok(c, at, d.length(), kind)) continue;
    out.push_back({subword(spec, c, 0, at), subword(spec, c, at, d.length()),
                   subword(spec, c, at + d.length(), c.length() - at - d.length())});
  }
  return out;
}

std::size_t count_triples(const AlgebraSpec& spec, const Word& d, const Word& c, Flanks kind) {
  if (d.length() > c.length()) return 0;
  Word d_inv = d.inverse();
  std::size_t count = 0;
  for (std::size_t at = 0; at + d.length() <= c.length(); ++at)
    if (middle_matches(spec, c, at, d, d_inv) && flanks_ok(c, at, d.length(), kind)) ++count;
  return count;
}

}  // namespace

std::vector<SubTriple> sub_triples(const AlgebraSpec& spec, const Word& d, const Word& c) {
  return triples(spec, d, c, Flanks::Sub);
}

std::size_t count_sub(const AlgebraSpec& spec, const Word& d, const Word& c) {
  return count_triples(spec, d, c, Flanks::Sub);
}

std::vector<FacTriple> fac_triples(const AlgebraSpec& spec, const Word& d, const Word& c) {
  return triples(spec, d, c, Flanks::Fac);
}

std::size_t count_fac(const AlgebraSpec& spec, const Word& d, const Word& c) {
  return count_triples(spec, d, c, Flanks::Fac);
}

namespace {

void grow(const AlgebraSpec& spec, std::vector<Letter>& prefix, std::size_t length, std::vector<Word>& out) {
  if (prefix.size() == length) {
    out.push_back(Word::from_letters(prefix));
    return;
  }
  for (ArrowId a = 0; a < spec.arrow_count(); ++a) {
    for (bool inv : {false, true}) {
      Letter x{a, inv};
      if (!extends_string(spec, prefix, x)) continue;
      prefix.push_back(x);
      grow(spec, prefix, length, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> strings_of_length(const AlgebraSpec& spec, std::size_t length) {
  std::vector<Word> out;
  if (length == 0) {
    for (VertexId v = 0; v < spec.vertex_count(); ++v) out.push_back(Word::trivial(v));
    return out;
  }
  std::vector<Letter> prefix;
  grow(spec, prefix, length, out);
  return out;
}

std::vector<Word> enumerate_strings(const AlgebraSpec& spec, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (auto& w : strings_of_length(spec, len))
      if (!(w.inverse() < w)) out.push_back(std::move(w));
  return out;
}

std::vector<Word> factor_classes(const AlgebraSpec& spec, const Word& word, std::size_t max_len) {
  std::set<Word> seen;
  const std::size_t n = word.length();
  for (std::size_t len = 0; len <= std::min(n, max_len); ++len)
    for (std::size_t at = 0; at + len <= n; ++at) seen.insert(canonical_string(subword(spec, word, at, len)));
  return {seen.begin(), seen.end()};
}

}  // namespace stralg
