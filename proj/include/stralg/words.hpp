#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stralg/algebra.hpp"
#include "stralg/word.hpp"

namespace stralg {

// `a.b^-1` or `1_u`.
Word parse_word(const AlgebraSpec& spec, std::string_view text);
std::vector<Letter> parse_letters(const AlgebraSpec& spec, std::string_view text);
std::string format_letters(const AlgebraSpec& spec, std::span<const Letter> letters);
std::string format_word(const AlgebraSpec& spec, const Word& word);

VertexId word_source(const AlgebraSpec& spec, const Word& word);
VertexId word_target(const AlgebraSpec& spec, const Word& word);

// Vertex sitting between letters i-1 and i; position 0 is t(c), position l(c)
// is s(c).
VertexId vertex_at(const AlgebraSpec& spec, const Word& word, std::size_t position);

// Composability and no immediate backtracking, ignoring relations.
bool is_walk(const AlgebraSpec& spec, std::span<const Letter> letters);

// No maximal run of same-direction letters, read as a path, contains a
// generator.
bool runs_avoid_relations(const AlgebraSpec& spec, std::span<const Letter> letters);

bool is_string(const AlgebraSpec& spec, std::span<const Letter> letters);
bool is_string(const AlgebraSpec& spec, const Word& word);

// True iff `letters`·x is still a string, given that `letters` is one.
bool extends_string(const AlgebraSpec& spec, std::span<const Letter> letters, Letter x);

inline Word inverse(const Word& word) { return word.inverse(); }

// The smaller of {c, c^-1}.
Word canonical_string(const Word& word);

// Factor of `word` of length `len` starting after `begin` letters; a trivial
// factor keeps the vertex at that position.
Word subword(const AlgebraSpec& spec, const Word& word, std::size_t begin, std::size_t len);

std::vector<Word> left_divisors(const AlgebraSpec& spec, const Word& word);

struct WordTriple {
  Word first;
  Word middle;
  Word last;
};
using SubTriple = WordTriple;
using FacTriple = WordTriple;

// Substring triples (c1, c2, c3) of c with c2 ∈ {d, d^-1}: c1 trivial or its
// source end inverse, c3 trivial or its target end an arrow.
std::vector<SubTriple> sub_triples(const AlgebraSpec& spec, const Word& d, const Word& c);
std::size_t count_sub(const AlgebraSpec& spec, const Word& d, const Word& c);

// Factorstring triples: c1 trivial or its source end an arrow, c3 trivial or
// its target end inverse.
std::vector<FacTriple> fac_triples(const AlgebraSpec& spec, const Word& d, const Word& c);
std::size_t count_fac(const AlgebraSpec& spec, const Word& d, const Word& c);

// Every string of length exactly `length`, in letter order, both orientations.
std::vector<Word> strings_of_length(const AlgebraSpec& spec, std::size_t length);

// One representative (the canonical one) per {c, c^-1}, length ≤ max_len,
// ordered by length then letters.
std::vector<Word> enumerate_strings(const AlgebraSpec& spec, std::size_t max_len);

// Canonical classes of all factors of `word` up to length `max_len`,
// including the trivial factors at every position.
std::vector<Word> factor_classes(const AlgebraSpec& spec, const Word& word, std::size_t max_len);

}  // namespace stralg
