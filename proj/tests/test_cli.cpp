#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

std::string fixture_path(const std::string& name) { return std::string(STRALG_FIXTURE_DIR) + "/" + name + ".alg"; }

struct Outcome {
  int code;
  std::string text;
  Json doc;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = stralg::cli::run(args, out, err);
  Outcome o{code, out.str(), {}};
  if (!o.text.empty() && o.text.front() == '{') o.doc = Json::parse(o.text);
  return o;
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("validate") {
  auto gp22 = run({"validate", fixture_path("gp22")});
  CHECK(gp22.code == 0);
  CHECK(keys(gp22.doc) == std::vector<std::string>{"command", "inputs", "result", "witnesses"});
  CHECK(gp22.doc["result"]["valid"] == true);
  CHECK(gp22.doc["result"]["gentle"] == false);
  CHECK(run({"validate", fixture_path("kron")}).doc["result"]["gentle"] == true);

  std::string bad = "/tmp/stralg_cli_bad.alg";
  std::ofstream(bad) << "vertex 1\nbogus line\n";
  CHECK(run({"validate", bad}).code == 2);
  CHECK(run({"validate", "/nonexistent/file.alg"}).code == 2);

  std::string open = "/tmp/stralg_cli_open.alg";
  std::ofstream(open) << "vertex 1\narrow a : 1 -> 1\n";
  auto rep = run({"validate", open});
  CHECK(rep.code == 0);
  CHECK(rep.doc["result"]["valid"] == false);
  CHECK_FALSE(rep.doc["witnesses"].empty());
  CHECK(run({"enumerate", open, "strings", "--max-len", "1"}).code == 3);
}

TEST_CASE("enumerate") {
  auto strings = run({"enumerate", fixture_path("gp22"), "strings", "--max-len", "2"});
  CHECK(strings.doc["result"]["count"] == 5);
  auto bands = run({"enumerate", fixture_path("gp22"), "bands", "--max-len", "4"});
  CHECK(bands.doc["result"]["count"] == 1);
  auto trivial = run({"enumerate", fixture_path("loop"), "strings", "--max-len", "0"});
  CHECK(trivial.doc["result"]["entries"] == Json::array({"1_1", "1_2"}));
  CHECK(run({"enumerate", fixture_path("gp22"), "words", "--max-len", "2"}).code == 2);
}

TEST_CASE("hom") {
  auto f = fixture_path("gp22");
  auto comb = run({"hom", f, "--from", "band:a.b^-1", "--to", "string:a"});
  CHECK(comb.code == 0);
  CHECK(comb.doc["result"]["dim"] == 1);
  auto oracle = run({"hom", f, "--from", "band:a.b^-1", "--to", "string:a", "--oracle"});
  CHECK(oracle.doc["result"]["dim"] == 1);
  CHECK(oracle.doc["inputs"]["backend"] == "oracle");
  CHECK(run({"hom", f, "--from", "band:a.b^-1", "--to", "string:a", "--lambda", "0"}).code == 3);
  CHECK(run({"hom", f, "--from", "band:a.b^-1", "--to", "string:a", "--lambda", "1/0"}).code == 2);
  CHECK(run({"hom", f, "--from", "string:a.b", "--to", "string:a"}).code == 3);
  CHECK(run({"hom", f, "--from", "module:a", "--to", "string:a"}).code == 2);

  auto same = run({"hom", f, "--from", "band:a.b^-1", "--to", "band:b^-1.a", "--lambda", "2", "--mu", "2"});
  auto same_oracle =
      run({"hom", f, "--from", "band:a.b^-1", "--to", "band:b^-1.a", "--lambda", "2", "--mu", "2", "--oracle"});
  CHECK(same.doc["result"]["dim"] == same_oracle.doc["result"]["dim"]);
  auto generic = run({"hom", f, "--from", "band:a.b^-1", "--to", "band:a.b^-1"});
  auto generic_oracle = run({"hom", f, "--from", "band:a.b^-1", "--to", "band:a.b^-1", "--oracle"});
  CHECK(generic.doc["result"]["dim"] == generic_oracle.doc["result"]["dim"]);
  CHECK(same.doc["result"]["dim"].get<int>() > generic.doc["result"]["dim"].get<int>());
}

TEST_CASE("component") {
  auto loop = run({"component", fixture_path("loop"), "--bands", "a.x.a^-1.y^-1"});
  CHECK(loop.code == 0);
  CHECK(loop.doc["result"]["status"] == "NotComponent");
  REQUIRE(loop.doc["witnesses"].size() == 1);
  CHECK(loop.doc["witnesses"][0]["kind"] == "negligible");
  CHECK(loop.doc["witnesses"][0]["case"] == 2);

  auto gp22 = run({"component", fixture_path("gp22"), "--bands", "a.b^-1,a.b^-1"});
  CHECK(gp22.doc["result"]["status"] == "IsComponent");
  CHECK(gp22.doc["result"]["dimension"] == 12);

  auto gp33 = run({"component", fixture_path("gp33"), "--bands", "a^-1.b"});
  CHECK(gp33.doc["result"]["status"] == "Unknown");
  CHECK(gp33.doc["result"]["dimension"].is_null());

  auto oracle = run({"component", fixture_path("gp22"), "--bands", "a.b^-1,a.b^-1", "--oracle", "--seed", "7"});
  CHECK(oracle.doc["result"]["oracle"]["orbit_dimension_plus_classes"] == 12);
  CHECK(oracle.text == run({"component", fixture_path("gp22"), "--bands", "b^-1.a,a.b^-1", "--oracle", "--seed", "7"}).text);

  auto pair = run({"component", fixture_path("gp33"), "--bands", "a^-1.b,a^-1.b", "--oracle"});
  CHECK(pair.doc["result"]["status"] == "NotComponent");
  for (const auto& e : pair.doc["result"]["oracle"]["ext1"]) CHECK(e["ext1"].get<int>() >= 1);

  CHECK(run({"component", fixture_path("gp22"), "--bands", "a.b^-1.a.b^-1"}).code == 3);
  CHECK(run({"component", fixture_path("gp22"), "--bands", "a.q"}).code == 2);
}

TEST_CASE("rotated input gives identical output") {
  auto f = fixture_path("loop");
  auto a = run({"component", f, "--bands", "a.x.a^-1.y^-1"});
  auto b = run({"component", f, "--bands", "a^-1.y^-1.a.x"});
  auto c = run({"component", f, "--bands", "y.a.x^-1.a^-1"});
  CHECK(a.text == b.text);
  CHECK(a.text == c.text);
  auto h1 = run({"hom", f, "--from", "string:a.x", "--to", "band:a.x^-1.a^-1.y^-1"});
  auto h2 = run({"hom", f, "--from", "string:x^-1.a^-1", "--to", "band:a^-1.y^-1.a.x^-1"});
  CHECK(h1.text == h2.text);
}

TEST_CASE("degenerate") {
  auto loop = fixture_path("loop");
  auto rev = run({"degenerate", loop, "--band", "a.x.a^-1.y^-1", "--mode", "reverse"});
  CHECK(rev.code == 0);
  CHECK(rev.doc["result"]["dominating_class"] ==
        run({"enumerate", loop, "bands", "--max-len", "4"}).doc["result"]["entries"][0]);
  auto explicit_rev = run({"degenerate", loop, "--band", "a.x.a^-1.y^-1", "--mode", "reverse", "--w", "a", "--u", "x",
                           "--v", "y^-1"});
  CHECK(explicit_rev.doc["result"]["dominating"] == "a.x.a^-1.y");
  CHECK(run({"degenerate", loop, "--band", "a.x.a^-1.y^-1", "--mode", "reverse", "--w", "1_1", "--u", "a.x.a^-1",
             "--v", "y^-1"})
            .code == 3);
  CHECK(run({"degenerate", loop, "--band", "a.x^-1.a^-1.y^-1", "--mode", "reverse"}).code == 3);
  CHECK(run({"degenerate", loop, "--band", "a.x.a^-1.y^-1", "--mode", "reverse", "--w", "a"}).code == 2);

  auto gp33 = fixture_path("gp33");
  auto split = run({"degenerate", gp33, "--band", "b.a^-1.b.b.a^-1", "--mode", "split", "--n", "3"});
  CHECK(split.doc["result"]["pieces"] == Json::array({"b.a^-1.b", "b.a^-1"}));
  auto searched = run({"degenerate", gp33, "--band", "b.a^-1.b.b.a^-1", "--mode", "split"});
  CHECK(searched.doc["result"]["piece_classes"].size() == 2);
  CHECK(run({"degenerate", gp33, "--band", "b.a^-1.b.b.a^-1", "--mode", "split", "--n", "4"}).code == 3);

  auto concat = run({"degenerate", gp33, "--band", "a^-1.b", "--mode", "concat", "--with", "a^-1.b"});
  CHECK(concat.doc["result"]["concatenation_class"] == "a.a.b^-1.b^-1");
  const auto& sc = concat.doc["result"]["sub_counts"];
  CHECK(sc["in_b"].get<int>() + sc["in_c"].get<int>() > sc["in_d"].get<int>());
  CHECK(run({"degenerate", fixture_path("kron"), "--band", "a.b^-1", "--mode", "concat", "--with", "a.b^-1"}).code == 3);
  CHECK(run({"degenerate", gp33, "--band", "a^-1.b", "--mode", "bend"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
