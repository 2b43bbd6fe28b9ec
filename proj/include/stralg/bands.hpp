#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stralg/algebra.hpp"
#include "stralg/words.hpp"

namespace stralg {

// A cyclic word b(1)⋯b(m), read periodically: letter(i) = b(i mod m).
// Positions are 0-based, so letter(0) is b(1).
class QuasiBand {
 public:
  QuasiBand() = default;
  explicit QuasiBand(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t period() const noexcept { return letters_.size(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  const Letter& letter(std::ptrdiff_t i) const {
    auto m = static_cast<std::ptrdiff_t>(letters_.size());
    return letters_[static_cast<std::size_t>(((i % m) + m) % m)];
  }

  // letter(start) ⋯ letter(start + len - 1), wrapping as often as needed.
  std::vector<Letter> window(std::ptrdiff_t start, std::size_t len) const;

  // The quasi-band whose b(1) is our letter(shift).
  QuasiBand rotated(std::size_t shift) const;
  // Inverse-reversal b(-j)^{-1}.
  QuasiBand inverse() const;

  friend bool operator==(const QuasiBand&, const QuasiBand&) = default;
  friend auto operator<=>(const QuasiBand& a, const QuasiBand& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

// Equivalence class of a band under rotation and inverse-reversal, held by its
// least representative.
struct BandClass {
  QuasiBand canonical;

  std::size_t period() const noexcept { return canonical.period(); }

  friend bool operator==(const BandClass&, const BandClass&) = default;
  friend auto operator<=>(const BandClass& a, const BandClass& b) {
    if (auto c = a.period() <=> b.period(); c != 0) return c;
    return a.canonical <=> b.canonical;
  }
};

// Band syntax is word syntax read cyclically.
QuasiBand parse_cyclic(const AlgebraSpec& spec, std::string_view text);
std::string format_cyclic(const AlgebraSpec& spec, const QuasiBand& qb);

bool is_quasi_band(const AlgebraSpec& spec, std::span<const Letter> letters);
inline bool is_quasi_band(const AlgebraSpec& spec, const QuasiBand& qb) { return is_quasi_band(spec, qb.letters()); }

// Primitivity; throws NotQuasiBand when the word is not a quasi-band.
bool is_band(const AlgebraSpec& spec, std::span<const Letter> letters);
bool is_primitive(std::span<const Letter> letters);

// Least of the 2m rotations of the word and of its inverse-reversal. No
// validity check, so also usable for quasi-bands.
QuasiBand canonical_rotation(const QuasiBand& qb);

// Throws NotBand.
BandClass canonical_class(const AlgebraSpec& spec, std::span<const Letter> letters);
inline BandClass canonical_class(const AlgebraSpec& spec, const QuasiBand& qb) {
  return canonical_class(spec, qb.letters());
}
bool are_equivalent(const AlgebraSpec& spec, const QuasiBand& a, const QuasiBand& b);

// All m rotations of the word followed by all m rotations of its inverse.
std::vector<QuasiBand> representatives(const QuasiBand& qb);

struct PartiCounts {
  std::size_t direct = 0;
  std::size_t inverse = 0;
  std::size_t total() const noexcept { return direct + inverse; }
};

// Positions 1 ≤ i ≤ m with b(i)⋯b(i+l(c)-1) = c (direct) or = c^{-1}
// (inverse). Throws TrivialWord for trivial c.
PartiCounts parti_counts(const AlgebraSpec& spec, const Word& c, const QuasiBand& qb);

// ♯(sub_1 ∪ sub_{-1}): c (or c^{-1}) flanked by an inverse letter before and
// an arrow after.
std::size_t sub_count(const AlgebraSpec& spec, const Word& c, const QuasiBand& qb);
// ♯(fac_1 ∪ fac_{-1}): flanked by an arrow before and an inverse letter after.
std::size_t fac_count(const AlgebraSpec& spec, const Word& c, const QuasiBand& qb);

std::vector<BandClass> enumerate_bands(const AlgebraSpec& spec, std::size_t max_len);

std::size_t band_dimension(const QuasiBand& qb);
// Indexed by vertex: number of positions i with s(b(i)) = u.
std::vector<std::size_t> dimension_vector(const AlgebraSpec& spec, const QuasiBand& qb);

// Canonical classes of all windows of the periodic word up to `max_len`,
// including the trivial words at every position.
std::vector<Word> window_classes(const AlgebraSpec& spec, const QuasiBand& qb, std::size_t max_len);

}  // namespace stralg
