#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace stralg {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

// One letter of Q1 ∪ Q1^{-1}.
struct Letter {
  ArrowId arrow = 0;
  bool inverse = false;

  Letter inverted() const noexcept { return {arrow, !inverse}; }
  bool is_arrow() const noexcept { return !inverse; }

  // Arrows in declaration order, plain before inverted.
  std::uint32_t order_key() const noexcept { return arrow * 2u + (inverse ? 1u : 0u); }

  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter a, Letter b) noexcept { return a.order_key() <=> b.order_key(); }
};

// A walk α1⋯αn written right to left (αn is traversed first) or the trivial word 1_u.
//
// Letters are stored left to right, so letters()[0] is α1 (the target end) and
// letters().back() is αn (the source end).
class Word {
 public:
  Word() = default;

  static Word trivial(VertexId vertex) {
    Word w;
    w.vertex_ = vertex;
    return w;
  }

  // `letters` must be nonempty; composability is not checked here.
  static Word from_letters(std::vector<Letter> letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
  }

  bool is_trivial() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  // Only meaningful for trivial words.
  VertexId trivial_vertex() const noexcept { return vertex_; }

  // αn, the letter at the source end ("starts with" in the usual reading).
  const Letter& source_end() const { return letters_.back(); }
  // α1, the letter at the target end ("ends with").
  const Letter& target_end() const { return letters_.front(); }

  Word inverse() const {
    if (is_trivial()) return *this;
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l = l.inverted();
    return from_letters(std::move(out));
  }

  friend bool operator==(const Word& a, const Word& b) {
    if (a.is_trivial() != b.is_trivial()) return false;
    if (a.is_trivial()) return a.vertex_ == b.vertex_;
    return a.letters_ == b.letters_;
  }

  // Length first, then letter order; trivial words by vertex.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (a.is_trivial()) return a.vertex_ <=> b.vertex_;
    for (std::size_t i = 0; i < a.letters_.size(); ++i) {
      if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Letter> letters_;
  VertexId vertex_ = 0;
};

}  // namespace stralg
