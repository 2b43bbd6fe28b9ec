#include "stralg/components.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "stralg/errors.hpp"

namespace stralg {

namespace {

// Length of the common prefix of x read from xs and y read from ys, at most cap.
std::size_t common_prefix(const QuasiBand& x, std::ptrdiff_t xs, const QuasiBand& y, std::ptrdiff_t ys,
                          std::size_t cap) {
  std::size_t l = 0;
  while (l < cap && x.letter(xs + static_cast<std::ptrdiff_t>(l)) == y.letter(ys + static_cast<std::ptrdiff_t>(l))) ++l;
  return l;
}

Word prefix_word(const AlgebraSpec& spec, const QuasiBand& qb, std::ptrdiff_t start, std::size_t len) {
  if (len == 0) return Word::trivial(spec.target(qb.letter(start)));
  return Word::from_letters(qb.window(start, len));
}

std::vector<Letter> concat(std::initializer_list<std::span<const Letter>> parts) {
  std::vector<Letter> out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::optional<ExtendabilityWitness> check_pair(const AlgebraSpec& spec, const QuasiBand& rb, const QuasiBand& rc) {
  const std::size_t m = rb.period();
  const std::size_t n = rc.period();
  if (!rb.letter(-1).inverse || rc.letter(-1).inverse) return std::nullopt;
  const std::size_t l = common_prefix(rb, 0, rc, 0, n + m);
  if (l == n + m) return std::nullopt;
  const Letter beta = rb.letter(static_cast<std::ptrdiff_t>(l));
  const Letter delta = rc.letter(static_cast<std::ptrdiff_t>(l));
  if (beta.inverse || !delta.inverse) return std::nullopt;
  QuasiBand d(concat({rc.letters(), rb.letters()}));
  if (!is_quasi_band(spec, d)) return std::nullopt;
  return ExtendabilityWitness{rb, rc, prefix_word(spec, rb, 0, l), beta.arrow, delta.arrow, std::move(d)};
}

std::optional<SplitWitness> check_split(const AlgebraSpec& spec, const QuasiBand& rot, std::size_t n) {
  const std::size_t m = rot.period();
  if (n == 0 || n >= m) return std::nullopt;
  if (!rot.letter(-1).inverse || rot.letter(static_cast<std::ptrdiff_t>(n) - 1).inverse) return std::nullopt;
  QuasiBand first(rot.window(0, n));
  QuasiBand second(rot.window(static_cast<std::ptrdiff_t>(n), m - n));
  if (!is_quasi_band(spec, first) || !is_quasi_band(spec, second)) return std::nullopt;
  const std::size_t l = common_prefix(rot, 0, rot, static_cast<std::ptrdiff_t>(n), m);
  if (l == m) return std::nullopt;
  if (rot.letter(static_cast<std::ptrdiff_t>(l)).inverse || !rot.letter(static_cast<std::ptrdiff_t>(n + l)).inverse)
    return std::nullopt;
  return SplitWitness{rot, n, prefix_word(spec, rot, 0, l), {std::move(first), std::move(second)}};
}

bool all_arrows_at_ends(std::span<const Letter> x, bool inverse) {
  return !x.empty() && x.front().inverse == inverse && x.back().inverse == inverse;
}

std::optional<ReversalWitness> check_reversal(const AlgebraSpec& spec, const QuasiBand& rot, std::size_t p,
                                              std::size_t lu) {
  const std::size_t m = rot.period();
  if (2 * p + lu >= m || lu == 0) return std::nullopt;
  auto letters = rot.letters();
  auto w = letters.subspan(0, p);
  auto u = letters.subspan(p, lu);
  auto w_back = letters.subspan(p + lu, p);
  auto v = letters.subspan(2 * p + lu);
  if (!all_arrows_at_ends(u, false) || !all_arrows_at_ends(v, true)) return std::nullopt;
  for (std::size_t k = 0; k < p; ++k)
    if (w_back[k] != w[p - 1 - k].inverted()) return std::nullopt;
  Word u_word = Word::from_letters({u.begin(), u.end()});
  Word u_inv = u_word.inverse();
  QuasiBand reversed(concat({w, u_inv.letters(), w_back, v}));
  if (!is_quasi_band(spec, reversed)) return std::nullopt;
  return ReversalWitness{rot, prefix_word(spec, rot, 0, p), std::move(u_word), Word::from_letters({v.begin(), v.end()}),
                         std::move(reversed)};
}

using FlankMap = std::map<Word, std::set<std::pair<ArrowId, ArrowId>>>;

// Windows x·d·y of either orientation of qb with l(d) ≤ bound, x inverse and
// y an arrow when `inverse_first`, the other way round otherwise.
FlankMap flanked_windows(const AlgebraSpec& spec, const QuasiBand& qb, bool inverse_first, std::size_t bound) {
  FlankMap out;
  for (const QuasiBand& rep : {qb, qb.inverse()}) {
    for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(rep.period()); ++p) {
      const Letter x = rep.letter(p);
      if (x.inverse != inverse_first) continue;
      for (std::size_t len = 0; len <= bound; ++len) {
        const Letter y = rep.letter(p + static_cast<std::ptrdiff_t>(len) + 1);
        if (y.inverse == inverse_first) continue;
        Word d = len == 0 ? Word::trivial(spec.source(x)) : Word::from_letters(rep.window(p + 1, len));
        out[std::move(d)].insert({x.arrow, y.arrow});
      }
    }
  }
  return out;
}

bool flanked_is_string(const AlgebraSpec& spec, Letter left, const Word& d, Letter right) {
  std::vector<Letter> word{left};
  word.insert(word.end(), d.letters().begin(), d.letters().end());
  word.push_back(right);
  return is_string(spec, word);
}

std::optional<QuadraticWitness> quadratic_search(const AlgebraSpec& spec, const QuasiBand& b, const QuasiBand& c,
                                                 std::size_t bound) {
  if (!spec.is_quadratic()) throw DomainError(ErrorCode::NotQuadratic, "the relations are not all of length two");
  FlankMap from_b = flanked_windows(spec, b, true, bound);
  FlankMap from_c = flanked_windows(spec, c, false, bound);
  for (const auto& [d, ab] : from_b) {
    auto it = from_c.find(d);
    if (it == from_c.end()) continue;
    for (auto [alpha, beta] : ab)
      for (auto [gamma, delta] : it->second)
        if (flanked_is_string(spec, {alpha, true}, d, {delta, true}) &&
            flanked_is_string(spec, {gamma, false}, d, {beta, false}))
          return QuadraticWitness{d, alpha, beta, gamma, delta};
  }
  return std::nullopt;
}

std::size_t dimension_of(const AlgebraSpec& spec, const BandSequence& s) {
  const std::size_t d = s.total_dim();
  std::size_t drop = 0;
  auto gentle = gentle_vertices(spec);
  for (VertexId u = 0; u < spec.vertex_count(); ++u) {
    if (std::find(gentle.begin(), gentle.end(), u) != gentle.end()) continue;
    Word simple = Word::trivial(u);
    drop += seq_count_from(spec, s, simple) * seq_count_into(spec, simple, s);
  }
  return d * d - drop;
}

}  // namespace

std::optional<ExtendabilityWitness> extendable(const AlgebraSpec& spec, const BandClass& b, const BandClass& c) {
  canonical_class(spec, b.canonical);
  canonical_class(spec, c.canonical);
  auto reps_c = representatives(c.canonical);
  for (const auto& rb : representatives(b.canonical))
    for (const auto& rc : reps_c)
      if (auto wit = check_pair(spec, rb, rc)) return wit;
  return std::nullopt;
}

std::optional<QuadraticWitness> extendable_quadratic(const AlgebraSpec& spec, const BandClass& b, const BandClass& c,
                                                     std::optional<std::size_t> bound) {
  return quadratic_search(spec, b.canonical, c.canonical, bound.value_or(2 * (b.period() + c.period())));
}

std::optional<NegligibilityWitness> negligible(const AlgebraSpec& spec, const BandClass& b) {
  canonical_class(spec, b.canonical);
  const auto reps = representatives(b.canonical);
  const std::size_t m = b.period();
  for (const auto& rot : reps)
    for (std::size_t n = 1; n < m; ++n)
      if (auto wit = check_split(spec, rot, n)) return *wit;
  for (const auto& rot : reps)
    for (std::size_t p = 0; 2 * p + 2 <= m; ++p)
      for (std::size_t lu = 1; 2 * p + lu < m; ++lu)
        if (auto wit = check_reversal(spec, rot, p, lu)) return *wit;
  return std::nullopt;
}

std::optional<QuadraticWitness> negligible_quadratic(const AlgebraSpec& spec, const BandClass& b,
                                                     std::optional<std::size_t> bound) {
  return quadratic_search(spec, b.canonical, b.canonical, bound.value_or(4 * b.period()));
}

const char* to_string(ComponentStatus status) noexcept {
  switch (status) {
    case ComponentStatus::IsComponent: return "IsComponent";
    case ComponentStatus::NotComponent: return "NotComponent";
    case ComponentStatus::Unknown: return "Unknown";
  }
  return "?";
}

ComponentVerdict decide_component(const AlgebraSpec& spec, const BandSequence& s) {
  if (s.empty()) throw std::invalid_argument("empty band sequence");
  ComponentVerdict verdict;
  const auto& cls = s.classes;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j)
      if (i != j)
        if (auto wit = extendable(spec, cls[i], cls[j])) verdict.reasons.push_back(PairReason{i, j, std::move(*wit)});
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (std::find(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(i), cls[i]) != cls.begin() + static_cast<std::ptrdiff_t>(i))
      continue;
    if (auto wit = negligible(spec, cls[i])) verdict.reasons.push_back(NegligibleReason{i, std::move(*wit)});
  }
  if (!verdict.reasons.empty()) {
    verdict.status = ComponentStatus::NotComponent;
    return verdict;
  }
  verdict.reasons.emplace_back(std::string("no pair of distinct indices is extendable"));
  verdict.reasons.emplace_back(std::string("no class is negligible"));
  if (spec.is_quadratic()) {
    verdict.status = ComponentStatus::IsComponent;
    verdict.reasons.emplace_back(std::string("relations of length two: the criterion is sufficient"));
    verdict.dimension = dimension_of(spec, s);
  } else {
    verdict.status = ComponentStatus::Unknown;
    verdict.reasons.emplace_back(std::string("relations longer than two: the criterion is only necessary"));
  }
  return verdict;
}

std::size_t component_dimension(const AlgebraSpec& spec, const BandSequence& s) {
  if (!spec.is_quadratic()) throw DomainError(ErrorCode::NotQuadratic, "the relations are not all of length two");
  if (decide_component(spec, s).status != ComponentStatus::IsComponent)
    throw DomainError(ErrorCode::NotAComponent, "the family closure is not a component");
  return dimension_of(spec, s);
}

QuasiBand reverse_piece(const AlgebraSpec& spec, const QuasiBand& rot, const Word& w, const Word& u, const Word& v) {
  auto wl = w.letters();
  Word w_inv = w.inverse();
  std::vector<Letter> expected = concat({wl, u.letters(), w_inv.letters(), v.letters()});
  if (u.is_trivial() || v.is_trivial() || !all_arrows_at_ends(u.letters(), false) ||
      !all_arrows_at_ends(v.letters(), true) || !std::ranges::equal(expected, rot.letters()))
    throw DomainError(ErrorCode::BadDecomposition, "the band is not w.u.w^-1.v with u from arrow to arrow and v "
                                                   "from inverse to inverse");
  Word v_inv = v.inverse();
  QuasiBand c(concat({wl, u.letters(), w_inv.letters(), v_inv.letters()}));
  if (!is_quasi_band(spec, c))
    throw DomainError(ErrorCode::NotQuasiBand, format_cyclic(spec, c) + " is not a quasi-band");
  return c;
}

SplitWitness split_witness(const AlgebraSpec& spec, const QuasiBand& rot, std::size_t n) {
  auto wit = check_split(spec, rot, n);
  if (!wit)
    throw DomainError(ErrorCode::InvalidWitness,
                      "no admissible split of " + format_cyclic(spec, rot) + " at " + std::to_string(n));
  return *wit;
}

std::pair<QuasiBand, QuasiBand> split_band(const AlgebraSpec& spec, const SplitWitness& witness) {
  auto wit = check_split(spec, witness.rot, witness.n);
  if (!wit || !(wit->w == witness.w) || wit->pieces != witness.pieces)
    throw DomainError(ErrorCode::InvalidWitness, "not a split witness");
  return wit->pieces;
}

QuasiBand concat_extension(const AlgebraSpec& spec, const ExtendabilityWitness& witness) {
  if (witness.rot_b.period() == 0 || witness.rot_c.period() == 0)
    throw DomainError(ErrorCode::InvalidWitness, "empty band in witness");
  auto wit = check_pair(spec, witness.rot_b, witness.rot_c);
  if (!wit || !(wit->w == witness.w) || wit->beta != witness.beta || wit->delta != witness.delta || !(wit->d == witness.d))
    throw DomainError(ErrorCode::InvalidWitness, "not an extendability witness");
  return wit->d;
}

}  // namespace stralg
