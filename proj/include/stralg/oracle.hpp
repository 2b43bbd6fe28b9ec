#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stralg/algebra.hpp"
#include "stralg/bands.hpp"
#include "stralg/words.hpp"

namespace stralg {

using Rational = mpq_class;

// "p/q" or "p"; throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  QMatrix operator*(const QMatrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Incrementally maintained echelon basis of a row space.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}
  // Reduces `row` against the basis; keeps it and returns true if independent.
  bool insert(std::vector<Rational> row);
  bool contains(std::vector<Rational> row) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  void reduce(std::vector<Rational>& row) const;

  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const QMatrix& m);
// Basis of {x : m·x = 0}, one vector per free column in increasing order.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);
// Coefficients x with Σ x_j basis[j] = v; nullopt when v is outside the span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& basis,
                                                   const std::vector<Rational>& v);

// A point of mod(A, d): each basis vector lies at a vertex, and X(α) maps the
// s(α)-part to the t(α)-part.
class MatrixModule {
 public:
  // Validates the grading support of every arrow matrix and the vanishing of
  // every relation; throws InvariantError.
  MatrixModule(const AlgebraSpec& spec, std::vector<VertexId> grading, std::vector<QMatrix> arrows,
               std::vector<std::string> labels = {});

  const AlgebraSpec& spec() const noexcept { return *spec_; }
  std::size_t dim() const noexcept { return grading_.size(); }
  VertexId vertex_of(std::size_t i) const { return grading_.at(i); }
  const std::vector<VertexId>& grading() const noexcept { return grading_; }
  std::vector<std::size_t> basis_at(VertexId u) const;
  const QMatrix& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // X(α1)⋯X(αn).
  QMatrix path_matrix(const Path& path) const;

 private:
  const AlgebraSpec* spec_;
  std::vector<VertexId> grading_;
  std::vector<QMatrix> arrows_;
  std::vector<std::string> labels_;
};

// Basis e_{c'} over the left divisors c' of c. Throws NotAString.
MatrixModule realize_string(const AlgebraSpec& spec, const Word& c);
// Basis ē_0, …, ē_{m-1}; the letter b(m) closing the cycle carries λ.
// Throws ZeroParameter or NotQuasiBand.
MatrixModule realize_band(const AlgebraSpec& spec, const QuasiBand& qb, const Rational& lambda);

// Each throws SpecMismatch for modules over different algebras.
std::size_t dim_hom(const MatrixModule& x, const MatrixModule& y);
std::size_t dim_ext1(const MatrixModule& x, const MatrixModule& y);
MatrixModule direct_sum(const MatrixModule& x, const MatrixModule& y);

struct Syzygy {
  MatrixModule p0;
  MatrixModule omega;
  // dim top(X) at each vertex.
  std::vector<std::size_t> top;
};

// 0 → ΩX → P0 → X → 0 with P0 → X a projective cover.
Syzygy syzygy(const MatrixModule& x);

std::size_t rank_sum(const MatrixModule& x);
bool is_regular(const MatrixModule& x);
// d² − dim End(X).
std::size_t orbit_dimension(const MatrixModule& x);

}  // namespace stralg
