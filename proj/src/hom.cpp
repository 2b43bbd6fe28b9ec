#include "stralg/hom.hpp"

#include <algorithm>

#include "stralg/errors.hpp"

namespace stralg {

std::size_t BandSequence::total_dim() const noexcept {
  std::size_t d = 0;
  for (const auto& b : classes) d += b.period();
  return d;
}

BandSequence BandSequence::sorted() const {
  BandSequence out = *this;
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

// Each sum below runs over classes {d, d^-1}, drawn from the factors of the
// first argument (the only d with nonzero fac count).

std::size_t hom_string_string(const AlgebraSpec& spec, const Word& c, const Word& c2) {
  std::size_t total = 0;
  for (const auto& d : factor_classes(spec, c, std::min(c.length(), c2.length())))
    if (auto f = count_fac(spec, d, c)) total += f * count_sub(spec, d, c2);
  return total;
}

std::size_t hom_band_string(const AlgebraSpec& spec, const BandClass& b, const Word& c) {
  std::size_t total = 0;
  for (const auto& d : window_classes(spec, b.canonical, c.length()))
    if (auto f = fac_count(spec, d, b.canonical)) total += f * count_sub(spec, d, c);
  return total;
}

std::size_t hom_string_band(const AlgebraSpec& spec, const Word& c, const BandClass& b) {
  std::size_t total = 0;
  for (const auto& d : factor_classes(spec, c, c.length()))
    if (auto f = count_fac(spec, d, c)) total += f * sub_count(spec, d, b.canonical);
  return total;
}

std::size_t hom_band_band(const AlgebraSpec& spec, const BandClass& b, const BandClass& c, bool same_module,
                          std::optional<std::size_t> bound) {
  if (same_module && !(b == c))
    throw DomainError(ErrorCode::SameModuleMismatch, "a shared parameter needs equal band classes");
  const std::size_t limit = bound.value_or(2 * (b.period() + c.period()));
  std::size_t total = same_module ? 1 : 0;
  for (const auto& d : window_classes(spec, b.canonical, limit))
    if (auto f = fac_count(spec, d, b.canonical)) total += f * sub_count(spec, d, c.canonical);
  return total;
}

std::size_t seq_count_into(const AlgebraSpec& spec, const Word& c, const BandSequence& s) {
  std::size_t total = 0;
  for (const auto& b : s.classes) total += hom_string_band(spec, c, b);
  return total;
}

std::size_t seq_count_from(const AlgebraSpec& spec, const BandSequence& s, const Word& c) {
  std::size_t total = 0;
  for (const auto& b : s.classes) total += hom_band_string(spec, b, c);
  return total;
}

std::size_t family_rank(const AlgebraSpec& spec, ArrowId alpha, const BandSequence& s) {
  Word a = Word::from_letters({Letter{alpha, false}});
  std::size_t total = 0;
  for (const auto& b : s.classes) total += parti_counts(spec, a, b.canonical).total();
  return total;
}

std::optional<Separation> find_separating_string(const AlgebraSpec& spec, const BandSequence& s,
                                                 const BandSequence& t, std::size_t max_len) {
  if (s.total_dim() != t.total_dim())
    throw DomainError(ErrorCode::DimensionMismatch, "sequences of total dimension " + std::to_string(s.total_dim()) +
                                                        " and " + std::to_string(t.total_dim()));
  if (s.sorted().classes == t.sorted().classes) return std::nullopt;
  for (const auto& c : enumerate_strings(spec, max_len)) {
    Separation sep{c, seq_count_into(spec, c, s), seq_count_into(spec, c, t), seq_count_from(spec, s, c),
                   seq_count_from(spec, t, c)};
    if (sep.into_s != sep.into_t || sep.from_s != sep.from_t) return sep;
  }
  return std::nullopt;
}

}  // namespace stralg
