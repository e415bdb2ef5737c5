#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "qlc/cli/run.hpp"
#include "qlc/error.hpp"

using namespace qlc;
using namespace qlc::cli;
namespace fs = std::filesystem;

namespace {

RunResult run_args(const std::vector<std::string>& args) { return run(parse_args(args)); }

fs::path temp_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("qlc_cli_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string identity_rows(long scale) {
  std::string s = "[";
  for (int i = 0; i < 6; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < 6; ++j) s += (j ? "," : "") + std::to_string(i == j ? scale : 0);
    s += "]";
  }
  return s + "]";
}

}  // namespace

TEST_CASE("segre on a table case") {
  auto r = run_args({"segre", "--case", "20"});
  CHECK(r.status == 0);
  CHECK(r.document["symbol"] == "[(111)111]");
  auto all = run_args({"segre", "--case", "18", "--method", "all"});
  CHECK(all.document["agree"] == true);
}

TEST_CASE("degenerate pencil exits with status 2") {
  fs::path d = temp_dir("degenerate");
  write(d / "p.json", "{\"F\": " + identity_rows(1) + ", \"G\": " + identity_rows(1) + "}");
  auto r = run_args({"segre", "--pencil", (d / "p.json").string()});
  CHECK(r.status == 2);
  CHECK(r.document["error"]["code"] == "pencil.degenerate");
  CHECK(r.document["error"]["message"].get<std::string>().find("degenerate pencil") != std::string::npos);
}

TEST_CASE("input errors exit with status 1 and a code") {
  fs::path d = temp_dir("errors");
  write(d / "broken.json", "{\"F\": [[1, 2");
  auto r = run_args({"segre", "--pencil", (d / "broken.json").string()});
  CHECK(r.status == 1);
  CHECK(r.document["error"]["code"] == "json.parse");
  CHECK(r.document["error"]["message"].get<std::string>().find("byte") != std::string::npos);

  write(d / "shape.json", "{\"F\": [[1]], \"G\": [[1]]}");
  auto s = run_args({"segre", "--pencil", (d / "shape.json").string()});
  CHECK(s.status == 1);
  CHECK(s.document["error"]["code"] == "pencil.shape");

  auto missing = run_args({"segre", "--pencil", (d / "nope.json").string()});
  CHECK(missing.status == 1);
  CHECK(missing.document["error"]["code"] == "io.open");

  CHECK(run_args({"segre", "--case", "99"}).document["error"]["code"] == "paper_case.range");
  CHECK(run_args({"moduli", "--symbol", "[(12)111]"}).status == 1);
  CHECK(run_args({"stability", "quadric", "--case", "1", "--weights", "1,2,3"}).document["error"]["code"] == "weights.order");
  CHECK_THROWS_AS(parse_args({"frobnicate"}), Error);
  CHECK_THROWS_AS(parse_args({"segre", "--bogus", "1"}), Error);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"surface", "--case", "11"}, {"table73"}, {"cosingular", "--lambdas", "0,1,2,3,4,5", "--rho", "6", "--verify-phi"}}) {
    auto a = render(run_args(args).document, "json");
    auto b = render(run_args(args).document, "json");
    CHECK(a == b);
  }
}

TEST_CASE("command documents") {
  auto t = run_args({"table73"});
  CHECK(t.document["rows"].size() == 23);
  CHECK(t.document["all_match"] == true);

  auto st = run_args({"stabilizer", "--case", "15"});
  CHECK(st.document["dim"] == 2);
  CHECK(st.document["agrees"] == true);

  auto nf = run_args({"normal-form", "--symbol", "[(21)(11)1]", "--roots", "0,1/2,-3"});
  CHECK(nf.document["symbol"] == "[(21)(11)1]");

  auto q = run_args({"stability", "quadric", "--case", "1"});
  CHECK(q.document["semistable"] == true);
  CHECK(q.document["witness"].empty());

  auto quartic = run_args({"stability", "quartic", "--case", "23"});
  CHECK(quartic.document["pattern"] == true);
  CHECK(quartic.document["mu"].get<int>() < 0);

  auto cs = run_args({"cosingular", "--lambdas", "0,1,2,3,4,5", "--rho", "6", "--verify-phi", "--limit", "7"});
  CHECK(cs.document["symbol"] == "[111111]");
  CHECK(cs.document["phi"]["valid"] == true);
  CHECK(cs.document["isomorphic_to_base"]["isomorphic"] == false);
  CHECK(cs.document["mobius_to_base"]["equivalent"] == true);
  CHECK(cs.document["reference_witness"]["valid"] == true);
  CHECK(cs.document["limit"]["equals_F_plus_rho0_G"] == true);

  auto iso = run_args({"isomorphic", "--case-a", "3", "--case-b", "3"});
  CHECK(iso.document["isomorphic"] == true);

  auto surf = run_args({"surface", "--case", "19"});
  CHECK(surf.document["structure"]["kind"] == "product-of-planes");
  CHECK(surf.document["certificate"] == true);
}

TEST_CASE("text output flattens the document") {
  auto r = run_args({"moduli", "--symbol", "[(22)11]"});
  std::string text = render(r.document, "text");
  CHECK(text.find("dim_stab: 2\n") != std::string::npos);
  CHECK(text.find("symbol: [(22)11]\n") != std::string::npos);
}

TEST_CASE("corpus runner") {
  fs::path d = temp_dir("corpus");
  write(d / "manifest.json", R"({"checks": [
    {"name": "segre-case-20", "module": "segre", "origin": "reference", "args": ["segre", "--case", "20"], "golden": "golden/a.json"},
    {"name": "moduli-22-11", "module": "moduli", "origin": "derived", "args": ["moduli", "--symbol", "[(22)11]"], "golden": "golden/b.json"},
    {"name": "degenerate", "module": "segre", "origin": "precondition", "args": ["segre", "--pencil", "corpus:deg.json"], "golden": "golden/c.json"}
  ]})");
  write(d / "deg.json", "{\"F\": " + identity_rows(2) + ", \"G\": " + identity_rows(1) + "}");

  auto up = run_args({"corpus", "--dir", d.string(), "--update"});
  CHECK(up.status == 0);
  auto ok = run_args({"corpus", "--dir", d.string()});
  CHECK(ok.status == 0);
  CHECK(ok.document["passed"] == 3);
  CHECK(ok.document["checks"][2]["origin"] == "precondition");

  auto filtered = run_args({"corpus", "--dir", d.string(), "--filter", "moduli"});
  CHECK(filtered.document["total"] == 1);

  write(d / "golden" / "b.json", "{\"symbol\": \"[(22)11]\"}");
  auto bad = run_args({"corpus", "--dir", d.string()});
  CHECK(bad.status == 1);
  CHECK(bad.document["failed"] == 1);
  CHECK(bad.document["checks"][1]["name"] == "moduli-22-11");
  CHECK(bad.document["checks"][1]["result"] == "fail");

  auto none = run_args({"corpus", "--dir", (d / "missing").string()});
  CHECK(none.status == 1);
  CHECK(none.document["error"]["code"] == "corpus.manifest");
}
