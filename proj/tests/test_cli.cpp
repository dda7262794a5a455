#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

// End-to-end checks of the binary: exit codes, JSON fields, cache behavior.

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("HESS_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int rc = ::pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string tmpdir() {
  auto d = std::filesystem::temp_directory_path() / "hesscoh-cli-test";
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d.string();
}

}  // namespace

TEST_CASE("analyze reports the lollipop parameters") {
  const auto r = run("--no-cache analyze 2,3,4,4");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"lollipop\":{\"a\":1,\"b\":3}") != std::string::npos);
  CHECK(r.out.find("\"dimension\":3") != std::string::npos);
  CHECK(r.out.find("\"connected\":true") != std::string::npos);
}

TEST_CASE("poincare agrees across methods") {
  const auto r = run("--no-cache poincare 2,3,3");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"pretty\":\"1+4q+q^2\"") != std::string::npos);
  CHECK(r.out.find("\"methods_agree\":true") != std::string::npos);
}

TEST_CASE("check-gen2 emits the graded report") {
  const auto r = run("--no-cache check-gen2 3,4,4,4");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"generated_in_degree_2\":false") != std::string::npos);
  CHECK(r.out.find("\"ok\":false") != std::string::npos);
}

TEST_CASE("classify at n = 4") {
  const auto r = run("--no-cache classify -n 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"connected_count\":5") != std::string::npos);
  CHECK(r.out.find("\"generated_count\":4") != std::string::npos);
  CHECK(r.out.find("\"all_agree\":true") != std::string::npos);
  CHECK(r.out.find("{\"h\":\"3,4,4,4\",\"lollipop\":null,\"generated\":false,\"agree\":true}") !=
        std::string::npos);
}

TEST_CASE("invalid input yields a JSON error and exit 1") {
  const auto r = run("--no-cache analyze 3,2,3");
  CHECK(r.status == 1);
  CHECK(r.out.find("\"kind\":\"NotMonotone\"") != std::string::npos);
}

TEST_CASE("resource gate yields exit 2") {
  const auto r = run("--no-cache graph 9,9,9,9,9,9,9,9,9");
  CHECK(r.status == 2);
  CHECK(r.out.find("\"kind\":\"TooLarge\"") != std::string::npos);
}

TEST_CASE("graph exports") {
  auto r = run("--no-cache graph 2,3,3 --dot");
  CHECK(r.status == 0);
  CHECK(r.out.find("graph gkm {") != std::string::npos);
  CHECK(r.out.find("\"123\" -- ") != std::string::npos);

  r = run("--no-cache graph 2,3,3 --json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"vertices\":[\"123\"") != std::string::npos);

  r = run("--no-cache graph 2,3,4,4 --json -r 2");
  CHECK(r.status == 0);
}

TEST_CASE("cache returns byte-identical output") {
  const std::string dir = tmpdir();
  const std::string flags = "--cache-dir " + dir + " ";
  const auto cold = run(flags + "check-gen2 2,3,4,4");
  CHECK(cold.status == 0);
  const auto warm = run(flags + "check-gen2 2,3,4,4");
  CHECK(warm.status == 0);
  CHECK(cold.out == warm.out);
  // the cache directory now holds exactly one entry
  std::size_t files = 0;
  for (auto& p : std::filesystem::directory_iterator(dir)) {
    (void)p;
    ++files;
  }
  CHECK(files == 1);
  // pretty-printing a cached result keeps the same data
  const auto pretty = run(flags + "--pretty check-gen2 2,3,4,4");
  CHECK(pretty.status == 0);
  CHECK(pretty.out.find("\"generated_in_degree_2\": true") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify bundle at n = 3") {
  const auto r = run("--no-cache verify -n 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"all_pass\":true") != std::string::npos);
}

TEST_CASE("hilbert output for the n = 5 double tail") {
  const auto r = run("--no-cache hilbert 2,4,4,5,5 --max-degree 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"poincare\":\"1,12,47,47,12,1\"") != std::string::npos);
  CHECK(r.out.find("\"subring\":\"1,12,42\"") != std::string::npos);
  CHECK(r.out.find("\"subring_upper_bound\":\"1,12,42,61,50,20\"") != std::string::npos);
}
