#include "oracles.hpp"

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef NLF_BINARY
#error "NLF_BINARY must point at the nlf executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NLF_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("nlf_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

std::string ones_csv(int N) {
  std::string s;
  for (int n = 1; n <= N; ++n) s += std::to_string(n) + ",1\n";
  return s;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("--tol 0.5 delta").code == 2);
  CHECK(run("delta --bogus").code == 2);
}

TEST_CASE("delta and seed header") {
  const auto r = run("-N 5 delta");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# {", 0) == 0);
  CHECK(r.out.find("\n2,-24\n") != std::string::npos);
  CHECK(r.out.find("\"N\":5") != std::string::npos);
  const auto quiet = run("-N 3 --no-emit-seed-header delta");
  CHECK(quiet.out == "1,1\n2,-24\n3,252\n");
  const auto js = run("-N 3 --format json delta");
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.contains("header"));
}

TEST_CASE("series commands") {
  TempDir t;
  const auto ones = t.write("ones.csv", ones_csv(12));
  const auto conv = run("--no-emit-seed-header series dconv " + ones + " " + ones);
  REQUIRE(conv.code == 0);
  CHECK(conv.out.find("\n6,4\n") != std::string::npos);
  const auto rp = run("--no-emit-seed-header series rpconv " + ones + " " + ones);
  CHECK(rp.out.find("\n12,4\n") != std::string::npos);
  const auto inv = run("--no-emit-seed-header series dinv " + ones);
  CHECK(inv.out.find("\n6,1\n") != std::string::npos);
  CHECK(inv.out.find("\n4,0\n") != std::string::npos);
  const auto poly = run("--no-emit-seed-header -N 4 series polylog -s 2");
  CHECK(poly.out.find("4,1/16") != std::string::npos);
  const auto zero = t.write("zero.csv", "1,0\n2,1\n");
  CHECK(run("series dinv " + zero).code == 2);
  CHECK(run("series dinv " + (t.path / "missing.csv").string()).code == 2);
  const auto short_ = t.write("short.csv", ones_csv(5));
  CHECK(run("series dconv " + ones + " " + short_).code == 2);
}

TEST_CASE("characters") {
  const auto list = run("--no-emit-seed-header char list 5");
  REQUIRE(list.code == 0);
  const auto j = nlohmann::json::parse(list.out);
  const auto& chars = j.is_array() ? j : j.at("characters");
  CHECK(chars.size() == 4);
  CHECK(run("char list 1001").code == 2);
  TempDir t;
  const auto ones = t.write("ones.csv", ones_csv(8));
  const auto app = run("--no-emit-seed-header char apply --modulus 4 --index 1 " + ones);
  REQUIRE(app.code == 0);
  CHECK(app.out.find("\n3,-1\n") != std::string::npos);
  CHECK(app.out.find("\n2,0\n") != std::string::npos);
}

TEST_CASE("hecke") {
  const auto paper = run("--no-emit-seed-header -N 20 hecke -p 2 --variant paper");
  REQUIRE(paper.code == 0);
  CHECK(paper.out.rfind("1,-49152\n", 0) == 0);
  const auto classical = run("--no-emit-seed-header -N 20 hecke -p 2 --variant classical");
  CHECK(classical.out.rfind("1,-24\n2,576\n", 0) == 0);
  CHECK(run("-N 20 hecke -p 4").code == 2);
}

TEST_CASE("algebra") {
  TempDir t;
  const auto f = t.write("f.json", R"({"terms": [[2, "1"], [3, "1"]]})");
  const auto r = run("--no-emit-seed-header algebra mul --op dirichlet " + f + " " + f);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& el = j.contains("result") ? j.at("result") : j;
  CHECK(el.at("terms").size() == 3);
  CHECK(run("--no-emit-seed-header algebra trace " + f).out.find('2') != std::string::npos);
  const auto bad = t.write("bad.json", "{not json");
  CHECK(run("algebra trace " + bad).code == 2);
}

TEST_CASE("verify") {
  const auto ok = run("verify mobius");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("[PASS] mobius") != std::string::npos);
  CHECK(run("verify no-such-suite").code == 2);
}

TEST_CASE("config file") {
  TempDir t;
  const auto cfg = t.write("nlf.ini", "truncation=4\nemit-seed-header=false\n");
  const auto r = run("--config " + cfg + " delta");
  CHECK(r.code == 0);
  CHECK(r.out == "1,1\n2,-24\n3,252\n4,-1472\n");
  CHECK(run("--config " + cfg + " -N 2 delta").out == "1,1\n2,-24\n");
}
