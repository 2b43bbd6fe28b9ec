#pragma once

#include <map>
#include <memory>
#include <string>

#include "stralg/algebra.hpp"
#include "stralg/bands.hpp"
#include "stralg/hom.hpp"
#include "stralg/words.hpp"

namespace support {

// Fixture algebras live for the whole test run; modules keep pointers to them.
inline const stralg::AlgebraSpec& fixture(const std::string& name) {
  static std::map<std::string, std::unique_ptr<stralg::AlgebraSpec>> cache;
  auto& slot = cache[name];
  if (!slot)
    slot = std::make_unique<stralg::AlgebraSpec>(stralg::load_algebra(std::string(STRALG_FIXTURE_DIR) + "/" + name + ".alg"));
  return *slot;
}

inline stralg::Word word(const stralg::AlgebraSpec& spec, const std::string& text) {
  return stralg::parse_word(spec, text);
}

inline stralg::QuasiBand cyclic(const stralg::AlgebraSpec& spec, const std::string& text) {
  return stralg::parse_cyclic(spec, text);
}

inline stralg::BandClass band(const stralg::AlgebraSpec& spec, const std::string& text) {
  return stralg::canonical_class(spec, stralg::parse_cyclic(spec, text));
}

inline stralg::BandSequence sequence(std::initializer_list<stralg::BandClass> classes) {
  return stralg::BandSequence{std::vector<stralg::BandClass>(classes)};
}

// Every multiset of band classes with period ≤ max_len and total dimension
// ≤ max_dim, as sorted sequences.
inline std::vector<stralg::BandSequence> sequences_up_to(const stralg::AlgebraSpec& spec, std::size_t max_len,
                                                         std::size_t max_dim) {
  auto classes = stralg::enumerate_bands(spec, max_len);
  std::vector<stralg::BandSequence> out;
  stralg::BandSequence current;
  auto grow = [&](auto&& self, std::size_t from, std::size_t dim) -> void {
    if (!current.empty()) out.push_back(current);
    for (std::size_t k = from; k < classes.size(); ++k) {
      if (dim + classes[k].period() > max_dim) continue;
      current.classes.push_back(classes[k]);
      self(self, k, dim + classes[k].period());
      current.classes.pop_back();
    }
  };
  grow(grow, 0, 0);
  return out;
}

inline const char* const kFixtures[] = {"kron", "gp22", "gp33", "loop"};

}  // namespace support
