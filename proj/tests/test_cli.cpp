#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dic/cli.hpp"
#include "temp_dir.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  std::map<std::string, std::string> kv;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r{dic::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err), out.str(), err.str(), {}};
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) r.kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return r;
}

}  // namespace

TEST_CASE("keygen, upload and audit") {
  TempDir tmp;
  const auto store = (tmp.path / "store").string();
  const auto file = tmp.path / "data.bin";
  std::ofstream(file, std::ios::binary) << std::string(100, 'x');
  for (const char* s : {"mht", "blinded", "gs"}) {
    const auto st = store + "-" + s;
    REQUIRE(invoke({"--store", st, "keygen", "--scheme", s, "--seed", "1"}).code == dic::cli::kExitOk);
    CHECK(invoke({"--store", st, "keygen", "--scheme", s, "--seed", "1"}).code != dic::cli::kExitOk);
    CHECK(invoke({"--store", st, "keygen", "--scheme", s, "--seed", "1", "--force"}).code == dic::cli::kExitOk);
    const auto up = invoke({"--store", st, "upload", file.string(), "--scheme", s, "--seed", "2"});
    REQUIRE(up.code == dic::cli::kExitOk);
    CHECK(up.kv.at("name") == "data.bin");
    CHECK(up.kv.at("blocks") == "5");
    const auto au = invoke({"--store", st, "audit", "data.bin", "--scheme", s, "--seed", "3"});
    REQUIRE(au.code == dic::cli::kExitOk);
    CHECK(au.kv.at("verdict") == "True");
    CHECK(au.kv.at("c") == "5");
    const auto missing = invoke({"--store", st, "audit", "nope", "--scheme", s, "--seed", "3"});
    CHECK(missing.code == dic::cli::kExitFalse);
    CHECK(missing.kv.at("verdict") == "tag_invalid");
  }
  CHECK(invoke({"--store", store + "-none", "audit", "data.bin", "--scheme", "gs"}).code == dic::cli::kExitFailure);
}

TEST_CASE("store location precedence") {
  TempDir tmp;
  const auto env = (tmp.path / "env").string();
  ::setenv(dic::cli::kStoreEnv, env.c_str(), 1);
  CHECK(dic::cli::resolve_store("") == env);
  CHECK(dic::cli::resolve_store("flag") == "flag");
  REQUIRE(invoke({"keygen", "--scheme", "mht", "--seed", "4"}).code == 0);
  CHECK(std::filesystem::exists(tmp.path / "env" / "keys" / "mht.sk"));
  ::unsetenv(dic::cli::kStoreEnv);
  CHECK(dic::cli::resolve_store("") == dic::cli::kDefaultStore);
}

TEST_CASE("attack and soundness reports") {
  const auto a = invoke({"attack", "--target", "blinded", "--trials", "200", "--seed", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.kv.at("adversary") == "fig4");
  CHECK(std::stod(a.kv.at("advantage")) >= 0.45);
  CHECK(a.out == invoke({"attack", "--target", "blinded", "--trials", "200", "--seed", "7"}).out);
  CHECK(invoke({"attack", "--target", "mht", "--trials", "20", "--seed", "7"}).kv.at("adversary") == "fig2");

  const auto s = invoke({"soundness", "--scheme", "gs", "--trials", "200", "--seed", "8"});
  REQUIRE(s.code == 0);
  CHECK(s.kv.at("accepted") == "0");
  CHECK(s.kv.at("extraction_mismatches") == "0");
  CHECK(s.kv.at("seed") == "8");
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == dic::cli::kExitUsage);
  CHECK(invoke({"--bogus"}).code == dic::cli::kExitUsage);
  CHECK(invoke({"keygen", "--scheme", "rsa"}).code == dic::cli::kExitUsage);
  CHECK(invoke({"attack"}).code == dic::cli::kExitUsage);
  CHECK(invoke({"attack", "--target", "gs", "--adversary", "fig9"}).code == dic::cli::kExitUsage);
  CHECK(invoke({"audit", "x", "-c", "0"}).code == dic::cli::kExitUsage);
}

TEST_CASE("bench report") {
  const auto b = invoke({"bench", "--scheme", "gs", "--blocks", "8", "--reps", "1", "--seed", "9"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("proof_bytes") != std::string::npos);
}
