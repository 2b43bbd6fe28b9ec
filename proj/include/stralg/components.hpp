#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stralg/algebra.hpp"
#include "stralg/bands.hpp"
#include "stralg/hom.hpp"

namespace stralg {

// rot_b = w·β·…·α^{-1} and rot_c = w·δ^{-1}·…·γ read periodically, with
// d = rot_c·rot_b a quasi-band.
struct ExtendabilityWitness {
  QuasiBand rot_b;
  QuasiBand rot_c;
  Word w;
  ArrowId beta = 0;
  ArrowId delta = 0;
  QuasiBand d;
};

// rot = u·γ·v·α^{-1} split after position n into the quasi-bands u·γ and v·α^{-1};
// periodic(rot) begins w·β and its shift by n begins w·δ^{-1}.
struct SplitWitness {
  QuasiBand rot;
  std::size_t n = 0;
  Word w;
  std::pair<QuasiBand, QuasiBand> pieces;
};

// rot = w·u·w^{-1}·v with reversed = w·u^{-1}·w^{-1}·v a quasi-band.
struct ReversalWitness {
  QuasiBand rot;
  Word w;
  Word u;
  Word v;
  QuasiBand reversed;
};

using NegligibilityWitness = std::variant<SplitWitness, ReversalWitness>;

// A string d with α^{-1}·d·β occurring in one band, γ·d·δ^{-1} in the other,
// and α^{-1}·d·δ^{-1}, γ·d·β strings.
struct QuadraticWitness {
  Word d;
  ArrowId alpha = 0;
  ArrowId beta = 0;
  ArrowId gamma = 0;
  ArrowId delta = 0;
};

std::optional<ExtendabilityWitness> extendable(const AlgebraSpec& spec, const BandClass& b, const BandClass& c);
// The search over d stops at l(d) ≤ `bound`, 2(m+n) by default. Throws NotQuadratic.
std::optional<QuadraticWitness> extendable_quadratic(const AlgebraSpec& spec, const BandClass& b, const BandClass& c,
                                                     std::optional<std::size_t> bound = std::nullopt);

std::optional<NegligibilityWitness> negligible(const AlgebraSpec& spec, const BandClass& b);
std::optional<QuadraticWitness> negligible_quadratic(const AlgebraSpec& spec, const BandClass& b,
                                                     std::optional<std::size_t> bound = std::nullopt);

enum class ComponentStatus { IsComponent, NotComponent, Unknown };
const char* to_string(ComponentStatus status) noexcept;

struct PairReason {
  std::size_t i = 0;
  std::size_t j = 0;
  ExtendabilityWitness witness;
};

struct NegligibleReason {
  std::size_t i = 0;
  NegligibilityWitness witness;
};

using ComponentReason = std::variant<PairReason, NegligibleReason, std::string>;

struct ComponentVerdict {
  ComponentStatus status = ComponentStatus::Unknown;
  std::vector<ComponentReason> reasons;
  std::optional<std::size_t> dimension;
};

// Throws std::invalid_argument for an empty sequence.
ComponentVerdict decide_component(const AlgebraSpec& spec, const BandSequence& s);

// Throws NotQuadratic or NotAComponent.
std::size_t component_dimension(const AlgebraSpec& spec, const BandSequence& s);

// w·u·w^{-1}·v^{-1} for rot = w·u·w^{-1}·v. Throws BadDecomposition or
// NotQuasiBand.
QuasiBand reverse_piece(const AlgebraSpec& spec, const QuasiBand& rot, const Word& w, const Word& u, const Word& v);

// Throws InvalidWitness.
std::pair<QuasiBand, QuasiBand> split_band(const AlgebraSpec& spec, const SplitWitness& witness);
// Builds and checks the split witness for `rot` at position n.
SplitWitness split_witness(const AlgebraSpec& spec, const QuasiBand& rot, std::size_t n);

// Throws InvalidWitness.
QuasiBand concat_extension(const AlgebraSpec& spec, const ExtendabilityWitness& witness);

}  // namespace stralg
