#include "stralg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "stralg/errors.hpp"

namespace stralg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAString: return "NotAString";
    case ErrorCode::NotQuasiBand: return "NotQuasiBand";
    case ErrorCode::NotBand: return "NotBand";
    case ErrorCode::TrivialWord: return "TrivialWord";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SameModuleMismatch: return "SameModuleMismatch";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::NotAComponent: return "NotAComponent";
    case ErrorCode::BadDecomposition: return "BadDecomposition";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
  }
  return "Unknown";
}

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    if (std::isspace(static_cast<unsigned char>(ch))) return false;
    if (ch == '.' || ch == ':' || ch == '^' || ch == ',' || ch == '#') return false;
  }
  return name != "->";
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool is_prefix_of(std::span<const ArrowId> needle, std::span<const ArrowId> hay, std::size_t at) {
  if (at + needle.size() > hay.size()) return false;
  for (std::size_t k = 0; k < needle.size(); ++k)
    if (needle[k] != hay[at + k]) return false;
  return true;
}

}  // namespace

void AlgebraSpec::check_new_name(const std::string& name) const {
  if (!valid_name(name)) throw ParseError("invalid name '" + name + "'");
  if (vertex_index_.count(name) || arrow_index_.count(name))
    throw ParseError("duplicate name '" + name + "'");
}

VertexId AlgebraSpec::add_vertex(std::string name) {
  check_new_name(name);
  auto id = static_cast<VertexId>(vertex_names_.size());
  vertex_index_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  return id;
}

ArrowId AlgebraSpec::add_arrow(std::string name, VertexId source, VertexId target) {
  check_new_name(name);
  if (name.rfind("1_", 0) == 0) throw ParseError("arrow name '" + name + "' clashes with trivial-word syntax");
  if (source >= vertex_count() || target >= vertex_count()) throw ParseError("arrow '" + name + "' has an unknown endpoint");
  auto id = static_cast<ArrowId>(arrows_.size());
  arrow_index_.emplace(name, id);
  arrows_.push_back({std::move(name), source, target});
  return id;
}

void AlgebraSpec::add_relation(Path relation) {
  if (relation.size() < 2) throw ParseError("relations must have length at least 2");
  for (ArrowId a : relation)
    if (a >= arrow_count()) throw ParseError("relation uses an unknown arrow");
  if (!is_composable(relation)) throw ParseError("relation " + format_path(*this, relation) + " is not a composable path");
  if (std::find(relations_.begin(), relations_.end(), relation) != relations_.end())
    throw ParseError("duplicate relation " + format_path(*this, relation));
  max_relation_length_ = std::max(max_relation_length_, relation.size());
  relations_.push_back(std::move(relation));
}

std::optional<VertexId> AlgebraSpec::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> AlgebraSpec::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

bool AlgebraSpec::is_quadratic() const noexcept {
  return std::all_of(relations_.begin(), relations_.end(), [](const Path& p) { return p.size() == 2; });
}

bool AlgebraSpec::is_composable(std::span<const ArrowId> path) const {
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (arrow(path[i]).source != arrow(path[i + 1]).target) return false;
  return true;
}

bool AlgebraSpec::contains_relation(std::span<const ArrowId> path) const {
  for (const auto& rel : relations_)
    for (std::size_t at = 0; at + rel.size() <= path.size(); ++at)
      if (is_prefix_of(rel, path, at)) return true;
  return false;
}

std::vector<ArrowId> AlgebraSpec::arrows_from(VertexId v) const {
  std::vector<ArrowId> out;
  for (ArrowId a = 0; a < arrow_count(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<ArrowId> AlgebraSpec::arrows_into(VertexId v) const {
  std::vector<ArrowId> out;
  for (ArrowId a = 0; a < arrow_count(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

AlgebraSpec parse_algebra(std::string_view text) {
  AlgebraSpec spec;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "vertex") {
        if (tok.size() < 2) throw ParseError("'vertex' needs at least one name");
        for (std::size_t i = 1; i < tok.size(); ++i) spec.add_vertex(tok[i]);
      } else if (tok[0] == "arrow") {
        if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->")
          throw ParseError("expected 'arrow <name> : <src> -> <tgt>'");
        auto s = spec.find_vertex(tok[3]);
        auto t = spec.find_vertex(tok[5]);
        if (!s) throw ParseError("unknown vertex '" + tok[3] + "'");
        if (!t) throw ParseError("unknown vertex '" + tok[5] + "'");
        spec.add_arrow(tok[1], *s, *t);
      } else if (tok[0] == "relation") {
        if (tok.size() != 2) throw ParseError("expected 'relation <a1>.<a2>[...]'");
        spec.add_relation(parse_path(spec, tok[1]));
      } else {
        throw ParseError("unknown directive '" + tok[0] + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return spec;
}

AlgebraSpec load_algebra(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

Path parse_path(const AlgebraSpec& spec, std::string_view text) {
  Path out;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    auto a = spec.find_arrow(piece);
    if (!a) throw ParseError("unknown arrow '" + std::string(piece) + "'");
    out.push_back(*a);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (!spec.is_composable(out)) throw ParseError("path '" + std::string(text) + "' is not composable");
  return out;
}

std::string format_path(const AlgebraSpec& spec, std::span<const ArrowId> path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += spec.arrow(path[i]).name;
  }
  return out;
}

namespace {

// Relation-free paths grown at the target end. A node is the leftmost
// `window` arrows of a relation-free path; prepending an arrow can only create
// a generator occurrence inside the first max(R, 2) arrows, so the node
// determines every future extension.
class PathAutomaton {
 public:
  explicit PathAutomaton(const AlgebraSpec& spec)
      : spec_(spec), window_(std::max<std::size_t>(spec.max_relation_length(), 2) - 1) {}

  // Longest relation-free path length, or nullopt if unbounded; on failure
  // `cycle` holds a node on a relation-free cycle.
  std::optional<std::size_t> longest(Path* cycle) {
    std::size_t best = 0;
    for (ArrowId a = 0; a < spec_.arrow_count(); ++a) {
      auto r = extend_depth(Path{a}, cycle);
      if (!r) return std::nullopt;
      best = std::max(best, 1 + *r);
    }
    return best;
  }

 private:
  enum class Mark { Open, Done };

  std::optional<std::size_t> extend_depth(const Path& node, Path* cycle) {
    if (auto it = marks_.find(node); it != marks_.end()) {
      if (it->second == Mark::Open) {
        if (cycle) *cycle = node;
        return std::nullopt;
      }
      return depth_[node];
    }
    marks_[node] = Mark::Open;
    std::size_t best = 0;
    VertexId at = spec_.arrow(node.front()).target;
    for (ArrowId g : spec_.arrows_from(at)) {
      Path grown;
      grown.reserve(node.size() + 1);
      grown.push_back(g);
      grown.insert(grown.end(), node.begin(), node.end());
      if (spec_.contains_relation(grown)) continue;
      if (grown.size() > window_) grown.resize(window_);
      auto r = extend_depth(grown, cycle);
      if (!r) return std::nullopt;
      best = std::max(best, 1 + *r);
    }
    marks_[node] = Mark::Done;
    depth_[node] = best;
    return best;
  }

  const AlgebraSpec& spec_;
  std::size_t window_;
  std::map<Path, Mark> marks_;
  std::map<Path, std::size_t> depth_;
};

bool is_proper_factor(const Path& small, const Path& big) {
  if (small.size() >= big.size()) return false;
  for (std::size_t at = 0; at + small.size() <= big.size(); ++at)
    if (is_prefix_of(small, big, at)) return true;
  return false;
}

}  // namespace

ValidationReport validate_algebra(const AlgebraSpec& spec) {
  ValidationReport report;
  report.quadratic = spec.is_quadratic();

  Path cycle;
  PathAutomaton automaton(spec);
  if (auto longest = automaton.longest(&cycle)) {
    report.admissibility_bound = *longest + 1;
  } else {
    report.violations.push_back(
        {"admissible", "relation-free paths of unbounded length through " + format_path(spec, cycle)});
  }

  for (VertexId v = 0; v < spec.vertex_count(); ++v) {
    if (spec.arrows_from(v).size() > 2)
      report.violations.push_back({"out-degree", "vertex " + spec.vertex_name(v) + " has more than two outgoing arrows"});
    if (spec.arrows_into(v).size() > 2)
      report.violations.push_back({"in-degree", "vertex " + spec.vertex_name(v) + " has more than two incoming arrows"});
  }

  for (ArrowId a = 0; a < spec.arrow_count(); ++a) {
    std::vector<std::string> free;
    for (ArrowId b : spec.arrows_into(spec.arrow(a).source))
      if (!spec.contains_relation(Path{a, b})) free.push_back(format_path(spec, Path{a, b}));
    if (free.size() > 1)
      report.violations.push_back({"unique-continuation", "relation-free compositions " + free[0] + " and " + free[1]});
  }
  for (ArrowId b = 0; b < spec.arrow_count(); ++b) {
    std::vector<std::string> free;
    for (ArrowId a : spec.arrows_from(spec.arrow(b).target))
      if (!spec.contains_relation(Path{a, b})) free.push_back(format_path(spec, Path{a, b}));
    if (free.size() > 1)
      report.violations.push_back({"unique-precursor", "relation-free compositions " + free[0] + " and " + free[1]});
  }

  for (const auto& rel : spec.relations())
    for (const auto& other : spec.relations())
      if (is_proper_factor(other, rel)) {
        report.redundant_relations.push_back(rel);
        break;
      }

  report.valid = report.violations.empty();
  return report;
}

bool is_member_monomial_ideal(const AlgebraSpec& spec, const Path& path) { return spec.contains_relation(path); }

std::vector<VertexId> gentle_vertices(const AlgebraSpec& spec) {
  std::vector<VertexId> out;
  for (VertexId u = 0; u < spec.vertex_count(); ++u) {
    bool gentle = true;
    for (ArrowId a : spec.arrows_from(u)) {
      std::size_t partners = 0;
      for (ArrowId b : spec.arrows_into(u))
        if (spec.contains_relation(Path{a, b})) ++partners;
      gentle = gentle && partners <= 1;
    }
    for (ArrowId b : spec.arrows_into(u)) {
      std::size_t partners = 0;
      for (ArrowId a : spec.arrows_from(u))
        if (spec.contains_relation(Path{a, b})) ++partners;
      gentle = gentle && partners <= 1;
    }
    if (gentle) out.push_back(u);
  }
  return out;
}

bool is_gentle_algebra(const AlgebraSpec& spec) {
  return spec.is_quadratic() && gentle_vertices(spec).size() == spec.vertex_count();
}

namespace {

Path maximal_path_through(const AlgebraSpec& spec, ArrowId first, std::size_t cap) {
  Path p{first};
  while (p.size() <= cap) {
    bool grown = false;
    for (ArrowId g : spec.arrows_from(spec.arrow(p.front()).target)) {
      Path candidate{g};
      candidate.insert(candidate.end(), p.begin(), p.end());
      if (!spec.contains_relation(candidate)) {
        p = std::move(candidate);
        grown = true;
        break;
      }
    }
    if (!grown) return p;
  }
  throw DomainError(ErrorCode::InvalidAlgebra, "relation-free paths are unbounded");
}

}  // namespace

Word projective_word(const AlgebraSpec& spec, VertexId u) {
  auto bound = validate_algebra(spec).admissibility_bound;
  if (!bound) throw DomainError(ErrorCode::InvalidAlgebra, "ideal is not admissible");
  auto out = spec.arrows_from(u);
  if (out.empty()) return Word::trivial(u);
  std::vector<Letter> letters;
  for (ArrowId a : maximal_path_through(spec, out[0], *bound)) letters.push_back({a, false});
  if (out.size() > 1) {
    auto second = maximal_path_through(spec, out[1], *bound);
    for (auto it = second.rbegin(); it != second.rend(); ++it) letters.push_back({*it, true});
  }
  return Word::from_letters(std::move(letters));
}

std::size_t count_paths_from(const AlgebraSpec& spec, VertexId u) {
  std::size_t count = 1;
  std::vector<Path> frontier;
  for (ArrowId a : spec.arrows_from(u)) frontier.push_back({a});
  std::size_t guard = 0;
  while (!frontier.empty()) {
    if (++guard > 4096) throw DomainError(ErrorCode::InvalidAlgebra, "relation-free paths are unbounded");
    std::vector<Path> next;
    for (auto& p : frontier) {
      ++count;
      for (ArrowId g : spec.arrows_from(spec.arrow(p.front()).target)) {
        Path q{g};
        q.insert(q.end(), p.begin(), p.end());
        if (!spec.contains_relation(q)) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return count;
}

}  // namespace stralg
