#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stralg/word.hpp"

namespace stralg {

struct ArrowDecl {
  std::string name;
  VertexId source = 0;
  VertexId target = 0;
};

// A path α1⋯αn of arrows with s(αi) = t(αi+1); the rightmost arrow is applied
// first.
using Path = std::vector<ArrowId>;

// A quiver with a set of monomial relations: the presentation kQ/I.
//
// Construction validates names and composability; the string-algebra axioms
// are checked separately by validate_algebra().
class AlgebraSpec {
 public:
  VertexId add_vertex(std::string name);
  ArrowId add_arrow(std::string name, VertexId source, VertexId target);
  void add_relation(Path relation);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const ArrowDecl& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Path>& relations() const noexcept { return relations_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  // Longest generator length, 0 without relations.
  std::size_t max_relation_length() const noexcept { return max_relation_length_; }
  bool is_quadratic() const noexcept;

  bool is_composable(std::span<const ArrowId> path) const;
  // True iff some generator occurs as a contiguous factor of `path`.
  bool contains_relation(std::span<const ArrowId> path) const;

  std::vector<ArrowId> arrows_from(VertexId v) const;
  std::vector<ArrowId> arrows_into(VertexId v) const;

  VertexId source(Letter l) const { return l.inverse ? arrow(l.arrow).target : arrow(l.arrow).source; }
  VertexId target(Letter l) const { return l.inverse ? arrow(l.arrow).source : arrow(l.arrow).target; }

 private:
  void check_new_name(const std::string& name) const;

  std::vector<std::string> vertex_names_;
  std::vector<ArrowDecl> arrows_;
  std::vector<Path> relations_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
  std::size_t max_relation_length_ = 0;
};

// Line-oriented format:
//   vertex <name> [<name>...]
//   arrow <name> : <src> -> <tgt>
//   relation <a1>.<a2>[.<a3>...]
// `#` starts a comment. Throws ParseError with the offending line number.
AlgebraSpec parse_algebra(std::string_view text);
AlgebraSpec load_algebra(const std::filesystem::path& file);

Path parse_path(const AlgebraSpec& spec, std::string_view text);
std::string format_path(const AlgebraSpec& spec, std::span<const ArrowId> path);

struct Violation {
  std::string axiom;
  std::string witness;
};

struct ValidationReport {
  bool valid = false;
  std::vector<Violation> violations;
  bool quadratic = false;
  // Least N such that every path of length N lies in I; absent when I is not
  // admissible.
  std::optional<std::size_t> admissibility_bound;
  // Generators containing another generator as a proper factor.
  std::vector<Path> redundant_relations;
};

ValidationReport validate_algebra(const AlgebraSpec& spec);

bool is_member_monomial_ideal(const AlgebraSpec& spec, const Path& path);

std::vector<VertexId> gentle_vertices(const AlgebraSpec& spec);
bool is_gentle_algebra(const AlgebraSpec& spec);

// The string w1·w2^{-1} whose string module is the indecomposable projective
// at `u`; w1 and w2 are the maximal relation-free paths leaving u through its
// (at most two) outgoing arrows.
Word projective_word(const AlgebraSpec& spec, VertexId u);

// Number of relation-free paths with source `u`, including 1_u.
std::size_t count_paths_from(const AlgebraSpec& spec, VertexId u);

}  // namespace stralg
