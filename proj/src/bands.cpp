#include "stralg/bands.hpp"

#include <algorithm>
#include <set>

#include "stralg/errors.hpp"

namespace stralg {

std::vector<Letter> QuasiBand::window(std::ptrdiff_t start, std::size_t len) const {
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(letter(start + static_cast<std::ptrdiff_t>(k)));
  return out;
}

QuasiBand QuasiBand::rotated(std::size_t shift) const {
  return QuasiBand(window(static_cast<std::ptrdiff_t>(shift), period()));
}

QuasiBand QuasiBand::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = l.inverted();
  return QuasiBand(std::move(out));
}

QuasiBand parse_cyclic(const AlgebraSpec& spec, std::string_view text) {
  if (text.rfind("1_", 0) == 0) throw ParseError("a band cannot be a trivial word");
  return QuasiBand(parse_letters(spec, text));
}

std::string format_cyclic(const AlgebraSpec& spec, const QuasiBand& qb) { return format_letters(spec, qb.letters()); }

bool is_quasi_band(const AlgebraSpec& spec, std::span<const Letter> letters) {
  const std::size_t m = letters.size();
  if (m == 0) return false;
  for (const auto& l : letters)
    if (l.arrow >= spec.arrow_count()) throw ParseError("letter refers to an unknown arrow");
  // An all-arrow (or all-inverse) cycle is a path power, eventually in I.
  bool mixed = std::any_of(letters.begin(), letters.end(), [&](Letter l) { return l.inverse != letters[0].inverse; });
  if (!mixed) return false;
  QuasiBand qb(std::vector<Letter>(letters.begin(), letters.end()));
  const std::size_t width = std::max<std::size_t>(spec.max_relation_length(), 2);
  for (std::size_t i = 0; i < m; ++i)
    if (!is_string(spec, qb.window(static_cast<std::ptrdiff_t>(i), width))) return false;
  return true;
}

bool is_primitive(std::span<const Letter> letters) {
  const std::size_t m = letters.size();
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < m && periodic; ++i) periodic = letters[i] == letters[i + p];
    if (periodic) return false;
  }
  return true;
}

bool is_band(const AlgebraSpec& spec, std::span<const Letter> letters) {
  if (!is_quasi_band(spec, letters))
    throw DomainError(ErrorCode::NotQuasiBand, format_letters(spec, letters) + " is not a quasi-band");
  return is_primitive(letters);
}

std::vector<QuasiBand> representatives(const QuasiBand& qb) {
  std::vector<QuasiBand> out;
  out.reserve(2 * qb.period());
  for (std::size_t k = 0; k < qb.period(); ++k) out.push_back(qb.rotated(k));
  QuasiBand inv = qb.inverse();
  for (std::size_t k = 0; k < qb.period(); ++k) out.push_back(inv.rotated(k));
  return out;
}

QuasiBand canonical_rotation(const QuasiBand& qb) {
  auto reps = representatives(qb);
  return *std::min_element(reps.begin(), reps.end());
}

BandClass canonical_class(const AlgebraSpec& spec, std::span<const Letter> letters) {
  bool band = false;
  try {
    band = is_band(spec, letters);
  } catch (const DomainError&) {
    band = false;
  }
  if (!band) throw DomainError(ErrorCode::NotBand, format_letters(spec, letters) + " is not a band");
  return {canonical_rotation(QuasiBand(std::vector<Letter>(letters.begin(), letters.end())))};
}

bool are_equivalent(const AlgebraSpec& spec, const QuasiBand& a, const QuasiBand& b) {
  return canonical_class(spec, a) == canonical_class(spec, b);
}

namespace {

bool window_is(const QuasiBand& qb, std::ptrdiff_t start, std::span<const Letter> word) {
  for (std::size_t k = 0; k < word.size(); ++k)
    if (qb.letter(start + static_cast<std::ptrdiff_t>(k)) != word[k]) return false;
  return true;
}

enum class Flanks { Sub, Fac };

// Positions p (0-based) where letter(p) is the left flank, the window
// letter(p+1..p+l) is c or c^{-1}, and letter(p+l+1) the right flank.
std::size_t flanked_count(const AlgebraSpec& spec, const Word& c, const QuasiBand& qb, Flanks kind) {
  const auto m = static_cast<std::ptrdiff_t>(qb.period());
  const auto l = static_cast<std::ptrdiff_t>(c.length());
  const bool left_inverse_wanted = kind == Flanks::Sub;
  Word c_inv = c.inverse();
  std::size_t count = 0;
  for (std::ptrdiff_t p = 0; p < m; ++p) {
    if (qb.letter(p).inverse != left_inverse_wanted) continue;
    if (qb.letter(p + l + 1).inverse == left_inverse_wanted) continue;
    bool hit = c.is_trivial() ? spec.source(qb.letter(p)) == c.trivial_vertex()
                              : window_is(qb, p + 1, c.letters()) || window_is(qb, p + 1, c_inv.letters());
    if (hit) ++count;
  }
  return count;
}

}  // namespace

PartiCounts parti_counts(const AlgebraSpec& spec, const Word& c, const QuasiBand& qb) {
  if (c.is_trivial()) throw DomainError(ErrorCode::TrivialWord, "parti is defined for nontrivial strings only");
  (void)spec;
  PartiCounts out;
  Word c_inv = c.inverse();
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(qb.period()); ++p) {
    if (window_is(qb, p, c.letters())) ++out.direct;
    if (window_is(qb, p, c_inv.letters())) ++out.inverse;
  }
  return out;
}

std::size_t sub_count(const AlgebraSpec& spec, const Word& c, const QuasiBand& qb) {
  return flanked_count(spec, c, qb, Flanks::Sub);
}

std::size_t fac_count(const AlgebraSpec& spec, const Word& c, const QuasiBand& qb) {
  return flanked_count(spec, c, qb, Flanks::Fac);
}

namespace {

void grow_cyclic(const AlgebraSpec& spec, std::vector<Letter>& prefix, std::size_t max_len, std::set<BandClass>& out) {
  if (prefix.size() >= 2 && is_quasi_band(spec, prefix) && is_primitive(prefix))
    out.insert({canonical_rotation(QuasiBand(prefix))});
  if (prefix.size() == max_len) return;
  for (ArrowId a = 0; a < spec.arrow_count(); ++a) {
    for (bool inv : {false, true}) {
      Letter x{a, inv};
      if (!extends_string(spec, prefix, x)) continue;
      prefix.push_back(x);
      grow_cyclic(spec, prefix, max_len, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<BandClass> enumerate_bands(const AlgebraSpec& spec, std::size_t max_len) {
  std::set<BandClass> found;
  std::vector<Letter> prefix;
  grow_cyclic(spec, prefix, max_len, found);
  return {found.begin(), found.end()};
}

std::size_t band_dimension(const QuasiBand& qb) { return qb.period(); }

std::vector<std::size_t> dimension_vector(const AlgebraSpec& spec, const QuasiBand& qb) {
  std::vector<std::size_t> out(spec.vertex_count(), 0);
  for (const auto& l : qb.letters()) ++out[spec.source(l)];
  return out;
}

std::vector<Word> window_classes(const AlgebraSpec& spec, const QuasiBand& qb, std::size_t max_len) {
  std::set<Word> seen;
  const auto m = static_cast<std::ptrdiff_t>(qb.period());
  for (std::ptrdiff_t p = 0; p < m; ++p) {
    seen.insert(Word::trivial(spec.target(qb.letter(p))));
    for (std::size_t len = 1; len <= max_len; ++len)
      seen.insert(canonical_string(Word::from_letters(qb.window(p, len))));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace stralg
