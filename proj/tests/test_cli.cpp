#include <doctest.h>
#include <json.hpp>

#include <random>
#include <sstream>

#include "fga/cli.hpp"
#include "fixtures.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(FGA_DATA_DIR) + "/" + name; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fga::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result on(const std::string& grp, std::vector<std::string> rest) {
  std::vector<std::string> args{"-g", data(grp)};
  args.insert(args.end(), rest.begin(), rest.end());
  return run(args);
}

std::string word_of(std::mt19937& rng, int len, int rank) {
  std::string w;
  for (int i = 0; i < len; ++i) w += static_cast<char>('a' + rng() % static_cast<unsigned>(rank));
  return w;
}

}  // namespace

TEST_CASE("examples") {
  CHECK(on("a2.grp", {"nf", "aab"}).out == "a.ab\n");
  CHECK(on("a2.grp", {"nf", ""}).out == "1\n");
  CHECK(on("a2.grp", {"order", "aD"}).out == "3\n");
  CHECK(on("a2.grp", {"order", "a.a"}).out == "infinite\n");
  CHECK(on("a2.grp", {"mul", "a", "D"}).out == "D.b\n");
  CHECK(on("a2.grp", {"inv", "a"}).out == "D^-1.ab\n");
  CHECK(on("a2.grp", {"act", "ab", "--prefix", "a..."}).out.starts_with("image: b.b.b\n"));
  CHECK(on("a2.grp", {"witness", "a.ab", "b"}).out == "a.ab\n");
}

TEST_CASE("info") {
  auto r = on("a2.grp", {"info"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("order: 6\n") != std::string::npos);
  CHECK(r.out.find("delta: aba\n") != std::string::npos);
  CHECK(r.out.find("atoms: 4\n") != std::string::npos);
  CHECK(r.out.find("irreducible: yes\n") != std::string::npos);
  r = on("z2.grp", {"info"});
  CHECK(r.out.find("irreducible: no\n") != std::string::npos);
  r = on("h3.grp", {"info"});
  CHECK(r.out.find("order: 120\n") != std::string::npos);
}

TEST_CASE("distances and balls") {
  CHECK(on("a2.grp", {"dist", "a", "b"}).out == "d_at: 2\nd_wd_vw: 3\nd_wd_wv: 3\n");
  CHECK(on("a2.grp", {"geodesic", "1", "a.ab"}).out == "length: 2\npath: * a a.ab\n");
  CHECK(on("a2.grp", {"ball", "2"}).out.find("size: 13\n") != std::string::npos);
  const auto csv = on("a2.grp", {"--format", "csv", "ball", "1"});
  CHECK(csv.out.starts_with("from,to,d_at,d_wd\n"));
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 26);
  CHECK(on("a2.grp", {"--format", "dot", "ball", "1"}).out.starts_with("digraph"));
}

TEST_CASE("links, charney, torsion") {
  auto r = on("a2.grp", {"links", "1"});
  CHECK(r.out.find("ascending.homology.betti: 1 0\n") != std::string::npos);
  CHECK(r.out.find("descending.homology.empty: yes\n") != std::string::npos);
  r = on("a2.grp", {"charney"});
  CHECK(r.out.find("strongly_connected: yes\n") != std::string::npos);
  CHECK(on("z2.grp", {"charney"}).out.find("strongly_connected: no\n") != std::string::npos);
  r = on("a2.grp", {"torsion", "aD"});
  CHECK(r.out.find("kind: type2\n") != std::string::npos);
  CHECK(r.out.find("order: 3\n") != std::string::npos);
  r = on("a2.grp", {"torsion", "D"});
  CHECK(r.out.find("kind: type1\n") != std::string::npos);
  CHECK(on("a2.grp", {"translation", "a.a", "--n", "3"}).out == "a: 2 4 6\ninf: 2/1\n");
  r = on("a2.grp", {"center", "a,b", "--radius", "2"});
  CHECK(r.out.find("centers: *\n") != std::string::npos);
  r = on("a2.grp", {"minset", "aD", "--radius", "2"});
  CHECK(r.out.find("vertices: * a ab\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto r = run({"nf", "a"});
  CHECK(r.code == fga::cli::kUsage);
  CHECK(r.err.starts_with("error: Usage: "));
  CHECK(on("a2.grp", {"bogus"}).code == fga::cli::kUsage);
  CHECK(on("a2.grp", {"nf", "a(("}).code == fga::cli::kUsage);
  CHECK(on("a2.grp", {"nf", "q"}).code == fga::cli::kUsage);
  CHECK(on("a2.grp", {"--format", "dot", "nf", "a"}).code == fga::cli::kUsage);
  CHECK(on("missing.grp", {"info"}).code == fga::cli::kGroupFile);
  r = on("affine_a2.grp", {"info"});
  CHECK(r.code == fga::cli::kGroupFile);
  CHECK(r.err.starts_with("error: NotFiniteType: "));
  r = on("a2.grp", {"torsion", "a.a"});
  CHECK(r.code == fga::cli::kDomain);
  CHECK(r.err.starts_with("error: NotTorsion: "));
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK(on("a2.grp", {"center", "", "--radius", "1"}).code == fga::cli::kDomain);
  CHECK(on("a2.grp", {"--vertex-cap", "10", "ball", "3"}).code == fga::cli::kCap);
  CHECK(on("a2.grp", {"--help"}).code == 0);
}

TEST_CASE("determinism") {
  const std::vector<std::vector<std::string>> cmds{
      {"info"}, {"ball", "2"}, {"links", "a.ab"}, {"charney"}, {"torsion", "ab.ac.ba"}, {"--format", "csv", "ball", "1"}};
  for (const auto& c : cmds) {
    const auto a = on("a3.grp", c), b = on("a3.grp", c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("nf round trip") {
  std::mt19937 rng(7);
  for (const char* grp : {"a2.grp", "a3.grp", "i2_5.grp", "b3.grp"}) {
    const int rank = std::string(grp).starts_with("a2") || std::string(grp).starts_with("i2") ? 2 : 3;
    for (int i = 0; i < 40; ++i) {
      std::string w = word_of(rng, 1 + static_cast<int>(rng() % 10), rank);
      if (rng() % 3 == 0) w = "D^-1." + w;
      if (rng() % 4 == 0) w += "^-1";
      const auto first = on(grp, {"nf", w});
      REQUIRE(first.code == 0);
      const std::string canon = first.out.substr(0, first.out.size() - 1);
      CHECK(on(grp, {"nf", canon}).out == first.out);
      CHECK(on(grp, {"mul", canon, "1"}).out == first.out);
    }
  }
}

TEST_CASE("json-lines mirrors text") {
  using nlohmann::ordered_json;
  const std::vector<std::vector<std::string>> cmds{
      {"info"}, {"dist", "a", "b"}, {"torsion", "aD"}, {"charney"}, {"translation", "a.a", "--n", "4"}, {"minset", "aD", "--radius", "1"}};
  for (const auto& c : cmds) {
    auto args = c;
    args.insert(args.begin(), {"--format", "json-lines"});
    const auto js = on("a2.grp", args);
    const auto tx = on("a2.grp", c);
    REQUIRE(js.code == 0);
    CHECK(std::count(js.out.begin(), js.out.end(), '\n') == 1);
    const auto j = ordered_json::parse(js.out);
    std::string keys;
    for (const auto& [k, v] : j.items()) {
      keys += k;
      CHECK(tx.out.find(k + ":") != std::string::npos);
    }
    CHECK(!keys.empty());
  }
  const auto j = ordered_json::parse(on("a2.grp", {"--format", "json-lines", "links", "a"}).out);
  CHECK(j["pivot"] == "ba");
  CHECK(j["ascending"]["members"].size() == 3);
}
