#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stern/cli.hpp"
#include "stern/serialize.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "stern");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = stern::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

stern::Json parse(const std::string& text) { return stern::Json::parse(text); }

void check_error(const Run& r, const std::string& kind) {
  INFO(r.out, r.err);
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  REQUIRE(!r.err.empty());
  CHECK(r.err.find('\n') == r.err.size() - 1);
  const stern::Json j = parse(r.err);
  CHECK(j["error"]["kind"] == kind);
  CHECK(j["error"]["message"].is_string());
}

}  // namespace

TEST_CASE("row") {
  const Run r = run({"row", "--n", "2"});
  REQUIRE(r.code == 0);
  const stern::Json j = parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["entries"] == stern::Json({"1", "1", "2", "1", "2", "1", "1"}));
  CHECK(run({"row", "--n", "2", "--method", "product"}).out == r.out);
  const Run d = run({"row", "--n", "3", "--kind", "diatomic"});
  CHECK(parse(d.out)["entries"] == stern::Json({"1", "4", "3", "5", "2", "5", "3", "4", "1"}));
  const Run c = run({"--csv", "row", "--n", "1"});
  CHECK(c.out == "k,entry\n0,1\n1,1\n2,1\n");
  CHECK(run({"row", "--n", "1", "--csv"}).out == c.out);
}

TEST_CASE("usum") {
  const Run b = run({"usum", "--alpha", "2", "--n-max", "4"});
  REQUIRE(b.code == 0);
  const stern::Json j = parse(b.out);
  CHECK(j["values"] == stern::Json({"1", "3", "13", "59", "269"}));
  const Run t = run({"usum", "--alpha", "2", "--n-max", "4", "--method", "transfer"});
  CHECK(parse(t.out)["values"] == j["values"]);
  // Diatomic sums by brute force and by the affine transfer update.
  const Run db = run({"usum", "--spec", "diatomic", "--alpha", "2", "--n-max", "6"});
  const Run dt = run({"usum", "--spec", "diatomic", "--alpha", "2", "--n-max", "6", "--method", "transfer"});
  REQUIRE(db.code == 0);
  REQUIRE(dt.code == 0);
  CHECK(parse(db.out)["values"] == parse(dt.out)["values"]);
  CHECK(parse(db.out)["values"][3] == "106");
  const Run m = run({"usum", "--spec", "custom", "--p", "(1+x1+x2)^2", "--b", "2,3", "--alpha", "0,0=2", "--n-max", "2"});
  REQUIRE(m.code == 0);
  CHECK(parse(m.out)["values"].size() == 3);
  // A monomial factor of the kernel only translates the rows.
  const Run shifted = run({"usum", "--spec", "custom", "--p", "x+x^2", "--alpha", "2", "--n-max", "5"});
  const Run plain = run({"usum", "--spec", "custom", "--p", "1+x", "--alpha", "2", "--n-max", "5"});
  REQUIRE(shifted.code == 0);
  CHECK(parse(shifted.out)["values"] == parse(plain.out)["values"]);
}

TEST_CASE("transfer and analyze") {
  const Run t = run({"transfer", "--alpha", "2"});
  REQUIRE(t.code == 0);
  const stern::Json j = parse(t.out);
  CHECK(j["schema"] == 1);
  CHECK(j["symmetry"] == true);
  CHECK(j["closure"].size() == 2);
  CHECK(j.contains("matrix"));
  CHECK(j.contains("v0"));
  CHECK(parse(run({"transfer", "--alpha", "2,1"}).out)["closure"].size() == 2);
  CHECK(parse(run({"transfer", "--alpha", "2,1", "--no-symmetry"}).out)["closure"].size() == 3);
  check_error(run({"transfer", "--alpha", "1,1,1,1", "--budget", "3"}), "ClosureBudgetExceeded");

  const Run a = run({"analyze", "--alpha", "3"});
  REQUIRE(a.code == 0);
  const stern::Json k = parse(a.out);
  CHECK(k["n0"] == 1);
  CHECK(k["divisibility_ok"] == true);
  CHECK(k["decomposition"]["ok"] == true);
  const Run d = run({"analyze", "--spec", "diatomic", "--alpha", "2"});
  REQUIRE(d.code == 0);
  CHECK(parse(d.out)["divisibility_ok"] == true);
}

TEST_CASE("conjectures, fit, vrur, speyer") {
  const Run c = run({"conjectures", "--r-max", "6"});
  REQUIRE(c.code == 0);
  const stern::Json j = parse(c.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["rows"].size() == 6);
  const Run csv = run({"--csv", "conjectures", "--r-max", "3"});
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);

  const Run f = run({"fit", "--d", "3", "--b", "2", "--r", "1"});
  REQUIRE(f.code == 0);
  CHECK(parse(f.out)["coeffs"] == stern::Json({"0", "0", "0", "1"}));
  const Run v = run({"vrur", "--r", "2", "--order", "12"});
  REQUIRE(v.code == 0);
  CHECK(parse(v.out)["series_ok"] == true);
  const Run s = run({"speyer", "--r", "4"});
  REQUIRE(s.code == 0);
  CHECK(parse(s.out)["symmetrizer"] == stern::Json({"1", "1/4", "1/6", "1/4", "1"}));
  CHECK(parse(s.out)["squarefree"] == true);
}

TEST_CASE("errors are single JSON lines") {
  check_error(run({}), "ParseError");
  check_error(run({"frobnicate"}), "ParseError");
  check_error(run({"row"}), "ParseError");
  check_error(run({"row", "--n", "-1"}), "InvalidArgument");
  check_error(run({"row", "--n", "2", "--kind", "square"}), "InvalidArgument");
  check_error(run({"usum", "--alpha", "0,0"}), "EmptyPattern");
  check_error(run({"usum", "--alpha", "x"}), "ParseError");
  check_error(run({"row", "--n", "3", "--kind", "diatomic", "--method", "product"}), "InvalidArgument");
  check_error(run({"usum", "--spec", "custom", "--alpha", "1"}), "InvalidArgument");
  check_error(run({"--csv", "speyer", "--r", "2"}), "InvalidArgument");
  check_error(run({"verify-paper", "--profile", "huge"}), "InvalidArgument");
}

TEST_CASE("--out writes the document to a file") {
  const auto path = std::filesystem::temp_directory_path() / "stern_cli_out_test.json";
  const Run r = run({"--out", path.string(), "row", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  CHECK(parse(text.str())["entries"].size() == 3);
  std::filesystem::remove(path);
}

TEST_CASE("verify-paper output is deterministic") {
  const Run a = run({"verify-paper"});
  const Run b = run({"verify-paper"});
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  CHECK(a.code != 2);
  const stern::Json j = parse(a.out);
  CHECK(j["schema"] == 1);
  CHECK(j["profile"] == "quick");
  CHECK(j["criteria"].size() == 14);
  CHECK_FALSE(j.contains("runtime_ms"));
  CHECK(j["ok"] == (a.code == 0));
}

TEST_CASE("the installed binary") {
  const char* bin = std::getenv("STERN_BIN");
  if (!bin) return;
  const std::string cmd = std::string(bin) + " row --n 0 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string text;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) text += buf;
  CHECK(pclose(pipe) == 0);
  CHECK(parse(text)["entries"] == stern::Json({"1"}));
}
