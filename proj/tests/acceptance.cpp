// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stralg/components.hpp"
#include "stralg/errors.hpp"
#include "stralg/oracle.hpp"
#include "support.hpp"

using namespace stralg;
using support::fixture;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what;
    ok = ok && cond;
  }
};

const Rational kParams[] = {2, 3, 5};

std::vector<Word> all_strings(const AlgebraSpec& spec, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= max_len; ++l)
    for (auto& c : strings_of_length(spec, l)) out.push_back(std::move(c));
  return out;
}

bool quadratic(const AlgebraSpec& spec) { return spec.is_quadratic(); }

MatrixModule zero_module(const AlgebraSpec& spec) {
  return MatrixModule(spec, {}, std::vector<QMatrix>(spec.arrow_count()));
}

// 1. Combinatorial hom counts against the oracle.
void hom_counts(Check& chk) {
  std::size_t queries = 0;
  for (auto name : support::kFixtures) {
    const auto& spec = fixture(name);
    auto strings = all_strings(spec, 6);
    auto bands = enumerate_bands(spec, 6);
    std::vector<MatrixModule> sm;
    for (const auto& c : strings) sm.push_back(realize_string(spec, c));
    for (std::size_t i = 0; i < strings.size(); ++i)
      for (std::size_t j = 0; j < strings.size(); ++j, ++queries)
        chk.expect(hom_string_string(spec, strings[i], strings[j]) == dim_hom(sm[i], sm[j]),
                   std::string(name) + " string " + format_word(spec, strings[i]) + " -> " + format_word(spec, strings[j]));
    for (const auto& b : bands) {
      for (const auto& lambda : kParams) {
        auto x = realize_band(spec, b.canonical, lambda);
        for (std::size_t i = 0; i < strings.size(); ++i, queries += 2) {
          chk.expect(hom_band_string(spec, b, strings[i]) == dim_hom(x, sm[i]),
                     std::string(name) + " band-string " + format_cyclic(spec, b.canonical));
          chk.expect(hom_string_band(spec, strings[i], b) == dim_hom(sm[i], x),
                     std::string(name) + " string-band " + format_cyclic(spec, b.canonical));
        }
      }
      for (const auto& c : bands)
        for (const auto& lambda : kParams)
          for (const auto& mu : kParams) {
            bool same = b == c && lambda == mu;
            ++queries;
            chk.expect(hom_band_band(spec, b, c, same) ==
                           dim_hom(realize_band(spec, b.canonical, lambda), realize_band(spec, c.canonical, mu)),
                       std::string(name) + " band-band " + format_cyclic(spec, b.canonical) + " " +
                           format_cyclic(spec, c.canonical));
          }
    }
  }
  chk.detail << (chk.ok ? "" : "; ") << queries << " queries";
}

// 2. Extendability against Ext¹ at distinct parameters.
void prop_one(Check& chk) {
  std::size_t pairs = 0;
  for (auto name : support::kFixtures) {
    const auto& spec = fixture(name);
    auto bands = enumerate_bands(spec, 6);
    for (const auto& b : bands)
      for (const auto& c : bands) {
        ++pairs;
        bool ext = extendable(spec, b, c).has_value();
        for (const auto& lambda : kParams)
          for (const auto& mu : kParams) {
            if (lambda == mu) continue;
            std::size_t e = dim_ext1(realize_band(spec, b.canonical, lambda), realize_band(spec, c.canonical, mu));
            chk.expect(ext == (e > 0), std::string(name) + " " + format_cyclic(spec, b.canonical) + " vs " +
                                           format_cyclic(spec, c.canonical));
          }
      }
  }
  chk.detail << (chk.ok ? "" : "; ") << pairs << " band pairs";
}

// 3. The non-quadratic example.
void counterexample(Check& chk) {
  const auto& spec = fixture("gp33");
  auto b = support::band(spec, "a^-1.b");
  auto wit = extendable(spec, b, b);
  chk.expect(wit.has_value(), "extendable(B,B) is none");
  if (wit) chk.expect(canonical_class(spec, wit->d) == support::band(spec, "a^-1.a^-1.b.b"), "concatenation class");
  for (const auto& lambda : kParams)
    for (const auto& mu : kParams)
      if (lambda != mu)
        chk.expect(dim_ext1(realize_band(spec, b.canonical, lambda), realize_band(spec, b.canonical, mu)) >= 1,
                   "Ext1 vanishes");
  chk.expect(decide_component(spec, support::sequence({b, b})).status == ComponentStatus::NotComponent, "[B,B]");
  chk.expect(decide_component(spec, support::sequence({b})).status == ComponentStatus::Unknown, "[B]");
}

// 4. Quadratic criteria against the definitions, and bound stability.
void quadratic_agreement(Check& chk) {
  std::size_t queries = 0;
  for (auto name : support::kFixtures) {
    const auto& spec = fixture(name);
    if (!quadratic(spec)) continue;
    auto bands = enumerate_bands(spec, 6);
    for (const auto& b : bands) {
      auto m = b.period();
      bool neg = negligible(spec, b).has_value();
      chk.expect(neg == negligible_quadratic(spec, b).has_value(), std::string(name) + " negligible");
      chk.expect(neg == negligible_quadratic(spec, b, 8 * m).has_value(), std::string(name) + " negligible, raised");
      for (const auto& c : bands) {
        auto n = c.period();
        bool ext = extendable(spec, b, c).has_value();
        chk.expect(ext == extendable_quadratic(spec, b, c).has_value(), std::string(name) + " extendable");
        chk.expect(ext == extendable_quadratic(spec, b, c, 4 * (m + n)).has_value(),
                   std::string(name) + " extendable, raised");
        ++queries;
      }
    }
  }
  chk.detail << (chk.ok ? "" : "; ") << queries << " pairs";
}

std::size_t oracle_dimension(const AlgebraSpec& spec, const BandSequence& s) {
  MatrixModule sum = zero_module(spec);
  for (std::size_t i = 0; i < s.size(); ++i) sum = direct_sum(sum, realize_band(spec, s.classes[i].canonical, kParams[i % 3]));
  return orbit_dimension(sum) + s.size();
}

// 5. Decisions and dimensions.
void decisions(Check& chk) {
  const auto& loop = fixture("loop");
  chk.expect(decide_component(loop, support::sequence({support::band(loop, "a.x.a^-1.y^-1")})).status ==
                 ComponentStatus::NotComponent,
             "LOOP negligible band");
  struct Case {
    const char* algebra;
    std::vector<const char*> bands;
    std::size_t dimension;
  };
  const Case cases[] = {{"loop", {"a.x^-1.a^-1.y^-1"}, 16}, {"gp22", {"a.b^-1"}, 3}, {"gp22", {"a.b^-1", "a.b^-1"}, 12}};
  for (const auto& c : cases) {
    const auto& spec = fixture(c.algebra);
    BandSequence s;
    for (auto w : c.bands) s.classes.push_back(support::band(spec, w));
    auto v = decide_component(spec, s);
    std::string label = std::string(c.algebra) + " " + std::to_string(c.bands.size()) + " classes";
    chk.expect(v.status == ComponentStatus::IsComponent, label + " status");
    chk.expect(v.dimension == c.dimension, label + " dimension");
    chk.expect(oracle_dimension(spec, s) == c.dimension, label + " orbit dimension");
  }
  chk.expect(is_gentle_algebra(loop), "LOOP gentle");
}

// Hom counts from every string of length ≤ 6 into a module.
std::vector<std::size_t> profile(const AlgebraSpec& spec, const MatrixModule& x) {
  std::vector<std::size_t> out;
  for (const auto& c : enumerate_strings(spec, 6)) out.push_back(dim_hom(realize_string(spec, c), x));
  return out;
}

void dominates(Check& chk, const std::vector<std::size_t>& dominant, const std::vector<std::size_t>& dominated,
               const std::string& label) {
  bool le = true, strict = false;
  for (std::size_t i = 0; i < dominant.size(); ++i) {
    le = le && dominant[i] <= dominated[i];
    strict = strict || dominant[i] < dominated[i];
  }
  chk.expect(le, label + ": dominant count exceeds dominated");
  chk.expect(strict, label + ": no strict inequality");
}

// 6. Semicontinuity along the rewrites.
void semicontinuity(Check& chk) {
  const auto& loop = fixture("loop");
  auto rot = support::cyclic(loop, "a.x.a^-1.y^-1");
  auto c = reverse_piece(loop, rot, support::word(loop, "a"), support::word(loop, "x"), support::word(loop, "y^-1"));
  for (const auto& lambda : kParams)
    dominates(chk, profile(loop, realize_band(loop, c, lambda)), profile(loop, realize_band(loop, rot, lambda)),
              "LOOP reverse");

  const auto& gp33 = fixture("gp33");
  auto whole = support::cyclic(gp33, "b.a^-1.b.b.a^-1");
  auto pieces = split_band(gp33, split_witness(gp33, whole, 3));
  auto pair = direct_sum(realize_band(gp33, pieces.first, 3), realize_band(gp33, pieces.second, 5));
  dominates(chk, profile(gp33, pair), profile(gp33, realize_band(gp33, whole, 2)), "GP33 split");

  auto b = support::band(gp33, "a^-1.b");
  auto wit = extendable(gp33, b, b);
  chk.expect(wit.has_value(), "GP33 pair not extendable");
  if (wit) {
    auto d = concat_extension(gp33, *wit);
    chk.expect(sub_count(gp33, wit->w, wit->rot_c) + sub_count(gp33, wit->w, wit->rot_b) > sub_count(gp33, wit->w, d),
               "sub-count inequality");
  }
}

struct Invariants {
  std::size_t total = 0;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;
  bool operator==(const Invariants&) const = default;
};

// 7. Separation of sequences with equal coarse invariants.
void separation(Check& chk) {
  std::size_t pairs = 0;
  for (auto name : support::kFixtures) {
    const auto& spec = fixture(name);
    auto seqs = support::sequences_up_to(spec, 6, 6);
    std::vector<Invariants> inv;
    for (const auto& s : seqs) {
      Invariants v{s.total_dim(), std::vector<std::size_t>(spec.vertex_count()), {}};
      for (const auto& cls : s.classes) {
        auto dv = dimension_vector(spec, cls.canonical);
        for (std::size_t u = 0; u < dv.size(); ++u) v.dims[u] += dv[u];
      }
      for (ArrowId a = 0; a < spec.arrow_count(); ++a) v.ranks.push_back(family_rank(spec, a, s));
      inv.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < seqs.size(); ++i)
      for (std::size_t j = i + 1; j < seqs.size(); ++j) {
        if (!(inv[i] == inv[j])) continue;
        ++pairs;
        auto sep = find_separating_string(spec, seqs[i], seqs[j], 3 * seqs[i].total_dim());
        chk.expect(sep.has_value(), std::string(name) + " inseparable pair");
      }
  }
  chk.detail << (chk.ok ? "" : "; ") << pairs << " pairs";
}

// 8. Structural properties.
void structure(Check& chk) {
  for (auto name : support::kFixtures) {
    const auto& spec = fixture(name);
    auto bands = enumerate_bands(spec, 6);
    auto strings = enumerate_strings(spec, 6);
    for (const auto& b : bands) {
      const auto m = b.period();
      std::size_t total = 0;
      for (ArrowId a = 0; a < spec.arrow_count(); ++a)
        total += parti_counts(spec, Word::from_letters({{a, false}}), b.canonical).total();
      chk.expect(total == m, std::string(name) + " parti sum");
      for (std::size_t l = 1; l < 2 * m; ++l)
        for (const auto& w : strings_of_length(spec, l)) {
          std::size_t split = 0;
          for (ArrowId a = 0; a < spec.arrow_count(); ++a)
            for (bool inv : {false, true})
              if (extends_string(spec, w.letters(), {a, inv})) {
                auto letters = std::vector<Letter>(w.letters().begin(), w.letters().end());
                letters.push_back({a, inv});
                split += parti_counts(spec, Word::from_letters(letters), b.canonical).total();
              }
          chk.expect(split == parti_counts(spec, w, b.canonical).total(), std::string(name) + " parti additivity");
        }
      for (const auto& lambda : kParams) chk.expect(is_regular(realize_band(spec, b.canonical, lambda)), "band regular");
    }
    for (const auto& c : strings) {
      auto x = realize_string(spec, c);
      chk.expect(rank_sum(x) + 1 == x.dim(), std::string(name) + " string rank");
    }
    std::vector<MatrixModule> corpus;
    for (const auto& c : strings) corpus.push_back(realize_string(spec, c));
    for (const auto& b : bands)
      for (const auto& lambda : kParams) corpus.push_back(realize_band(spec, b.canonical, lambda));
    for (VertexId u = 0; u < spec.vertex_count(); ++u) {
      auto p = realize_string(spec, projective_word(spec, u));
      for (const auto& y : corpus) chk.expect(dim_ext1(p, y) == 0, std::string(name) + " projective Ext1");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"hom counts match the oracle", hom_counts},
      {"extendability iff non-vanishing Ext1", prop_one},
      {"non-quadratic example", counterexample},
      {"quadratic criteria agreement", quadratic_agreement},
      {"component decisions and dimensions", decisions},
      {"degeneration semicontinuity", semicontinuity},
      {"separation by strings", separation},
      {"structural properties", structure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check chk;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(chk);
    } catch (const std::exception& e) {
      chk.ok = false;
      chk.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!chk.ok) ++failed;
    std::cout << (chk.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    auto detail = chk.detail.str();
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << " [" << static_cast<int>(secs * 1000) / 1000.0 << "s]\n";
  }
  return failed == 0 ? 0 : 1;
}
