#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stralg/algebra.hpp"
#include "stralg/bands.hpp"
#include "stralg/words.hpp"

namespace stralg {

// The multiset S = (b1, ..., bn) indexing the family F(S).
struct BandSequence {
  std::vector<BandClass> classes;

  std::size_t total_dim() const noexcept;
  std::size_t size() const noexcept { return classes.size(); }
  bool empty() const noexcept { return classes.empty(); }
  // Classes sorted, so that equal multisets compare equal.
  BandSequence sorted() const;
};

// dim Hom(M(c), M(c')).
std::size_t hom_string_string(const AlgebraSpec& spec, const Word& c, const Word& c2);
// dim Hom(M(b,m,λ), M(c)), for any λ.
std::size_t hom_band_string(const AlgebraSpec& spec, const BandClass& b, const Word& c);
// dim Hom(M(c), M(b,m,λ)).
std::size_t hom_string_band(const AlgebraSpec& spec, const Word& c, const BandClass& b);

// dim Hom(M(b,m,λ), M(c,n,μ)) for generic λ, μ, or for λ = μ when
// `same_module` (then b and c must be the same class). The sum over d stops at
// l(d) ≤ `bound`, 2(m+n) by default.
std::size_t hom_band_band(const AlgebraSpec& spec, const BandClass& b, const BandClass& c, bool same_module,
                          std::optional<std::size_t> bound = std::nullopt);

// [c, S] and [S, c].
std::size_t seq_count_into(const AlgebraSpec& spec, const Word& c, const BandSequence& s);
std::size_t seq_count_from(const AlgebraSpec& spec, const BandSequence& s, const Word& c);

// rank X(α) for X ∈ F(S).
std::size_t family_rank(const AlgebraSpec& spec, ArrowId alpha, const BandSequence& s);

struct Separation {
  Word witness;
  std::size_t into_s = 0;
  std::size_t into_t = 0;
  std::size_t from_s = 0;
  std::size_t from_t = 0;
};

// First canonical string (length-lex, l ≤ max_len) on which [c, ·] or [·, c]
// tells S and T apart. Throws DimensionMismatch for unequal total dimensions.
std::optional<Separation> find_separating_string(const AlgebraSpec& spec, const BandSequence& s,
                                                 const BandSequence& t, std::size_t max_len);

}  // namespace stralg
