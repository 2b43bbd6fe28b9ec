#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "stralg/algebra.hpp"
#include "stralg/bands.hpp"
#include "stralg/components.hpp"
#include "stralg/errors.hpp"
#include "stralg/hom.hpp"
#include "stralg/oracle.hpp"
#include "stralg/words.hpp"

namespace stralg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  // enumerate
  std::string kind;
  std::size_t max_len = 0;
  // hom
  std::string from, to;
  bool oracle = false;
  std::string lambda = "2", mu = "3";
  // component
  std::vector<std::string> bands;
  std::uint64_t seed = 1;
  // degenerate
  std::string band, mode, with;
  std::optional<std::string> w, u, v;
  std::optional<std::size_t> n;
};

AlgebraSpec load_valid(const std::string& file) {
  AlgebraSpec spec = load_algebra(file);
  auto report = validate_algebra(spec);
  if (!report.valid) {
    std::string what = "not a string algebra";
    if (!report.violations.empty())
      what += " (" + report.violations.front().axiom + ": " + report.violations.front().witness + ")";
    throw DomainError(ErrorCode::InvalidAlgebra, what);
  }
  return spec;
}

Word string_arg(const AlgebraSpec& spec, std::string_view text) {
  Word c = parse_word(spec, text);
  if (!is_string(spec, c)) throw DomainError(ErrorCode::NotAString, std::string(text) + " is not a string");
  return c;
}

BandClass band_arg(const AlgebraSpec& spec, std::string_view text) { return canonical_class(spec, parse_cyclic(spec, text)); }

std::string fmt(const AlgebraSpec& spec, const Word& w) { return format_word(spec, w); }
std::string fmt(const AlgebraSpec& spec, const QuasiBand& qb) { return format_cyclic(spec, qb); }
std::string fmt(const AlgebraSpec& spec, const BandClass& b) { return format_cyclic(spec, b.canonical); }
std::string class_of(const AlgebraSpec& spec, const QuasiBand& qb) { return fmt(spec, canonical_rotation(qb)); }

Json envelope(const std::string& command, Json inputs) {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = Json::object();
  doc["witnesses"] = Json::array();
  return doc;
}

Json cmd_validate(const Options& o) {
  AlgebraSpec spec = load_algebra(o.file);
  auto report = validate_algebra(spec);
  Json doc = envelope("validate", {{"file", o.file}});
  auto& r = doc["result"];
  r["valid"] = report.valid;
  r["vertices"] = spec.vertex_count();
  r["arrows"] = spec.arrow_count();
  r["relations"] = spec.relations().size();
  r["quadratic"] = report.quadratic;
  r["admissibility_bound"] = report.admissibility_bound ? Json(*report.admissibility_bound) : Json(nullptr);
  r["gentle"] = report.valid && is_gentle_algebra(spec);
  Json gentle = Json::array();
  for (VertexId u : gentle_vertices(spec)) gentle.push_back(spec.vertex_name(u));
  r["gentle_vertices"] = gentle;
  Json redundant = Json::array();
  for (const auto& p : report.redundant_relations) redundant.push_back(format_path(spec, p));
  r["redundant_relations"] = redundant;
  for (const auto& v : report.violations) doc["witnesses"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return doc;
}

Json cmd_enumerate(const Options& o) {
  AlgebraSpec spec = load_valid(o.file);
  Json doc = envelope("enumerate", {{"file", o.file}, {"kind", o.kind}, {"max_len", o.max_len}});
  Json entries = Json::array();
  if (o.kind == "strings") {
    for (const auto& c : enumerate_strings(spec, o.max_len)) entries.push_back(fmt(spec, c));
  } else {
    for (const auto& b : enumerate_bands(spec, o.max_len)) entries.push_back(fmt(spec, b));
  }
  doc["result"]["count"] = entries.size();
  doc["result"]["entries"] = entries;
  return doc;
}

using ModuleArg = std::variant<Word, BandClass>;

ModuleArg module_arg(const AlgebraSpec& spec, const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("module must be string:<word> or band:<word>, got '" + text + "'");
  auto kind = text.substr(0, colon);
  auto body = std::string_view(text).substr(colon + 1);
  if (kind == "string") return canonical_string(string_arg(spec, body));
  if (kind == "band") return band_arg(spec, body);
  throw ParseError("unknown module kind '" + kind + "'");
}

std::string echo(const AlgebraSpec& spec, const ModuleArg& m) {
  if (auto c = std::get_if<Word>(&m)) return "string:" + fmt(spec, *c);
  return "band:" + fmt(spec, std::get<BandClass>(m));
}

MatrixModule realize(const AlgebraSpec& spec, const ModuleArg& m, const Rational& param) {
  if (auto c = std::get_if<Word>(&m)) return realize_string(spec, *c);
  return realize_band(spec, std::get<BandClass>(m).canonical, param);
}

Rational nonzero(const std::string& text) {
  Rational q = parse_rational(text);
  if (sgn(q) == 0) throw DomainError(ErrorCode::ZeroParameter, "band parameter must be nonzero");
  return q;
}

Json cmd_hom(const Options& o) {
  AlgebraSpec spec = load_valid(o.file);
  ModuleArg from = module_arg(spec, o.from);
  ModuleArg to = module_arg(spec, o.to);
  Rational lambda = nonzero(o.lambda);
  Rational mu = nonzero(o.mu);
  Json inputs = {{"file", o.file}, {"from", echo(spec, from)}, {"to", echo(spec, to)},
                 {"backend", o.oracle ? "oracle" : "combinatorial"}};
  if (std::holds_alternative<BandClass>(from)) inputs["lambda"] = format_rational(lambda);
  if (std::holds_alternative<BandClass>(to)) inputs["mu"] = format_rational(mu);
  Json doc = envelope("hom", std::move(inputs));

  std::size_t dim = 0;
  if (o.oracle) {
    dim = dim_hom(realize(spec, from, lambda), realize(spec, to, mu));
  } else {
    auto fs = std::get_if<Word>(&from);
    auto ts = std::get_if<Word>(&to);
    if (fs && ts) {
      dim = hom_string_string(spec, *fs, *ts);
    } else if (fs) {
      dim = hom_string_band(spec, *fs, std::get<BandClass>(to));
    } else if (ts) {
      dim = hom_band_string(spec, std::get<BandClass>(from), *ts);
    } else {
      const auto& b = std::get<BandClass>(from);
      const auto& c = std::get<BandClass>(to);
      dim = hom_band_band(spec, b, c, b == c && lambda == mu);
    }
  }
  doc["result"]["dim"] = dim;
  return doc;
}

Json extendability_json(const AlgebraSpec& spec, const ExtendabilityWitness& w) {
  return {{"rot_b", fmt(spec, w.rot_b)},
          {"rot_c", fmt(spec, w.rot_c)},
          {"w", fmt(spec, w.w)},
          {"beta", spec.arrow(w.beta).name},
          {"delta", spec.arrow(w.delta).name},
          {"d", fmt(spec, w.d)},
          {"d_class", class_of(spec, w.d)}};
}

Json negligibility_json(const AlgebraSpec& spec, const NegligibilityWitness& w) {
  if (auto s = std::get_if<SplitWitness>(&w))
    return {{"case", 1},
            {"rot", fmt(spec, s->rot)},
            {"n", s->n},
            {"w", fmt(spec, s->w)},
            {"pieces", {fmt(spec, s->pieces.first), fmt(spec, s->pieces.second)}}};
  const auto& r = std::get<ReversalWitness>(w);
  return {{"case", 2},
          {"rot", fmt(spec, r.rot)},
          {"w", fmt(spec, r.w)},
          {"u", fmt(spec, r.u)},
          {"v", fmt(spec, r.v)},
          {"reversed", fmt(spec, r.reversed)},
          {"reversed_class", class_of(spec, r.reversed)}};
}

// Distinct parameters drawn from a fixed pool of primes.
std::vector<Rational> sample_parameters(std::size_t count, std::uint64_t seed) {
  std::vector<long> pool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  std::mt19937_64 gen(seed);
  std::vector<Rational> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (pool.empty()) pool.push_back(59 + static_cast<long>(k));
    auto at = static_cast<std::size_t>(gen() % pool.size());
    out.emplace_back(pool[at]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return out;
}

Json cmd_component(const Options& o) {
  AlgebraSpec spec = load_valid(o.file);
  if (o.bands.empty()) throw ParseError("--bands needs at least one band");
  BandSequence s;
  Json echoed = Json::array();
  for (const auto& text : o.bands) {
    s.classes.push_back(band_arg(spec, text));
    echoed.push_back(fmt(spec, s.classes.back()));
  }
  Json inputs = {{"file", o.file}, {"bands", echoed}};
  if (o.oracle) inputs["seed"] = o.seed;
  Json doc = envelope("component", std::move(inputs));

  auto verdict = decide_component(spec, s);
  auto& r = doc["result"];
  r["status"] = to_string(verdict.status);
  r["dimension"] = verdict.dimension ? Json(*verdict.dimension) : Json(nullptr);
  r["total_dim"] = s.total_dim();
  r["classes"] = s.size();

  for (const auto& reason : verdict.reasons) {
    if (auto p = std::get_if<PairReason>(&reason)) {
      Json w = {{"kind", "extendable"}, {"i", p->i}, {"j", p->j}};
      w.update(extendability_json(spec, p->witness));
      doc["witnesses"].push_back(w);
    } else if (auto n = std::get_if<NegligibleReason>(&reason)) {
      Json w = {{"kind", "negligible"}, {"i", n->i}};
      w.update(negligibility_json(spec, n->witness));
      doc["witnesses"].push_back(w);
    } else {
      doc["witnesses"].push_back({{"kind", "note"}, {"text", std::get<std::string>(reason)}});
    }
  }

  if (o.oracle) {
    auto params = sample_parameters(s.size(), o.seed);
    std::vector<MatrixModule> mods;
    MatrixModule sum(spec, {}, std::vector<QMatrix>(spec.arrow_count()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      mods.push_back(realize_band(spec, s.classes[i].canonical, params[i]));
      sum = direct_sum(sum, mods.back());
    }
    Json oracle;
    Json ps = Json::array();
    for (const auto& q : params) ps.push_back(format_rational(q));
    oracle["parameters"] = ps;
    Json ext = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        if (i != j) ext.push_back({{"i", i}, {"j", j}, {"ext1", dim_ext1(mods[i], mods[j])}});
    oracle["ext1"] = ext;
    oracle["orbit_dimension"] = orbit_dimension(sum);
    oracle["orbit_dimension_plus_classes"] = orbit_dimension(sum) + s.size();
    r["oracle"] = oracle;
  }
  return doc;
}

Json cmd_degenerate(const Options& o) {
  AlgebraSpec spec = load_valid(o.file);
  QuasiBand given = parse_cyclic(spec, o.band);
  BandClass cls = canonical_class(spec, given);
  Json inputs = {{"file", o.file}, {"band", fmt(spec, cls)}, {"mode", o.mode}};
  const bool explicit_reverse = o.w || o.u || o.v;

  if (o.mode == "reverse") {
    if (explicit_reverse) {
      if (!(o.w && o.u && o.v)) throw ParseError("--w, --u and --v go together");
      inputs["rot"] = fmt(spec, given);
      inputs["w"] = *o.w;
      inputs["u"] = *o.u;
      inputs["v"] = *o.v;
    }
  } else if (o.mode == "split") {
    if (o.n) {
      inputs["rot"] = fmt(spec, given);
      inputs["n"] = *o.n;
    }
  } else {
    if (o.with.empty()) throw ParseError("concat needs --with");
    inputs["with"] = fmt(spec, band_arg(spec, o.with));
  }
  Json doc = envelope("degenerate", std::move(inputs));
  auto& r = doc["result"];

  if (o.mode == "reverse") {
    ReversalWitness wit;
    if (explicit_reverse) {
      wit.rot = given;
      wit.w = parse_word(spec, *o.w);
      wit.u = parse_word(spec, *o.u);
      wit.v = parse_word(spec, *o.v);
    } else {
      auto found = negligible(spec, cls);
      if (!found || !std::holds_alternative<ReversalWitness>(*found))
        throw DomainError(ErrorCode::BadDecomposition, fmt(spec, cls) + " has no reversible decomposition");
      wit = std::get<ReversalWitness>(*found);
    }
    QuasiBand c = reverse_piece(spec, wit.rot, wit.w, wit.u, wit.v);
    r["dominated"] = fmt(spec, cls);
    r["dominating"] = fmt(spec, c);
    r["dominating_class"] = class_of(spec, c);
    doc["witnesses"].push_back({{"rot", fmt(spec, wit.rot)},
                                {"w", fmt(spec, wit.w)},
                                {"u", fmt(spec, wit.u)},
                                {"v", fmt(spec, wit.v)}});
  } else if (o.mode == "split") {
    SplitWitness wit;
    if (o.n) {
      wit = split_witness(spec, given, *o.n);
    } else {
      auto found = negligible(spec, cls);
      if (!found || !std::holds_alternative<SplitWitness>(*found))
        throw DomainError(ErrorCode::InvalidWitness, fmt(spec, cls) + " has no split witness");
      wit = std::get<SplitWitness>(*found);
    }
    auto pieces = split_band(spec, wit);
    r["dominated"] = fmt(spec, cls);
    r["pieces"] = {fmt(spec, pieces.first), fmt(spec, pieces.second)};
    r["piece_classes"] = {class_of(spec, pieces.first), class_of(spec, pieces.second)};
    doc["witnesses"].push_back({{"rot", fmt(spec, wit.rot)}, {"n", wit.n}, {"w", fmt(spec, wit.w)}});
  } else {
    BandClass other = band_arg(spec, o.with);
    auto wit = extendable(spec, cls, other);
    if (!wit) throw DomainError(ErrorCode::InvalidWitness, "the pair is not extendable");
    QuasiBand d = concat_extension(spec, *wit);
    r["concatenation"] = fmt(spec, d);
    r["concatenation_class"] = class_of(spec, d);
    r["sub_counts"] = {{"w", fmt(spec, wit->w)},
                       {"in_b", sub_count(spec, wit->w, wit->rot_b)},
                       {"in_c", sub_count(spec, wit->w, wit->rot_c)},
                       {"in_d", sub_count(spec, wit->w, d)}};
    doc["witnesses"].push_back(extendability_json(spec, *wit));
  }
  return doc;
}

Json error_doc(const std::string& command, const std::string& kind, const std::string& code,
               const std::string& message) {
  Json doc;
  doc["command"] = command;
  doc["error"] = {{"kind", kind}, {"code", code}, {"message", message}};
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"String algebra toolkit: strings, bands, hom counts and band components"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check the string algebra axioms");
  validate->add_option("file", o.file, "Algebra file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List strings or band classes");
  enumerate->add_option("file", o.file, "Algebra file")->required();
  enumerate->add_option("kind", o.kind, "strings or bands")->required()->check(CLI::IsMember({"strings", "bands"}));
  enumerate->add_option("--max-len", o.max_len, "Maximal length or period")->required();

  auto* hom = app.add_subcommand("hom", "Dimension of a hom space");
  hom->add_option("file", o.file, "Algebra file")->required();
  hom->add_option("--from", o.from, "string:<word> or band:<word>")->required();
  hom->add_option("--to", o.to, "string:<word> or band:<word>")->required();
  hom->add_flag("--oracle", o.oracle, "Use explicit matrices");
  hom->add_option("--lambda", o.lambda, "Parameter of the source band");
  hom->add_option("--mu", o.mu, "Parameter of the target band");

  auto* component = app.add_subcommand("component", "Decide whether a band sequence gives a component");
  component->add_option("file", o.file, "Algebra file")->required();
  component->add_option("--bands", o.bands, "Comma separated bands")->required()->delimiter(',');
  component->add_flag("--oracle", o.oracle, "Cross-check with explicit matrices");
  component->add_option("--seed", o.seed, "Seed for parameter sampling");

  auto* degenerate = app.add_subcommand("degenerate", "Apply a degeneration rewrite");
  degenerate->add_option("file", o.file, "Algebra file")->required();
  degenerate->add_option("--band", o.band, "Band word")->required();
  degenerate->add_option("--mode", o.mode, "reverse, split or concat")
      ->required()
      ->check(CLI::IsMember({"reverse", "split", "concat"}));
  degenerate->add_option("--w", o.w, "reverse: the word w");
  degenerate->add_option("--u", o.u, "reverse: the word u");
  degenerate->add_option("--v", o.v, "reverse: the word v");
  degenerate->add_option("--n", o.n, "split: split position");
  degenerate->add_option("--with", o.with, "concat: the second band");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return ParseFailure;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    Json doc;
    if (command == "validate") doc = cmd_validate(o);
    else if (command == "enumerate") doc = cmd_enumerate(o);
    else if (command == "hom") doc = cmd_hom(o);
    else if (command == "component") doc = cmd_component(o);
    else doc = cmd_degenerate(o);
    out << doc.dump(2) << '\n';
    return Ok;
  } catch (const ParseError& e) {
    out << error_doc(command, "parse", "ParseError", e.what()).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return ParseFailure;
  } catch (const DomainError& e) {
    out << error_doc(command, "domain", to_string(e.code()), e.what()).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return DomainFailure;
  } catch (const std::invalid_argument& e) {
    out << error_doc(command, "domain", "InvalidArgument", e.what()).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return DomainFailure;
  } catch (const std::exception& e) {
    out << error_doc(command, "internal", "Internal", e.what()).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return InternalFailure;
  }
}

}  // namespace stralg::cli
