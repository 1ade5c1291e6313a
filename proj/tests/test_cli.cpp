#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
  const std::string cmd = env + std::string(STRONGLIE_CLI) + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_SUITE("cli") {
  TEST_CASE("expected failure in characteristic 2") {
    CHECK(run("check --variant I --k 4 --p 2 --which short --expect-fail").code == 2);
    CHECK(run("check --variant I --k 4 --p 2 --which short").code == 1);
    CHECK(run("check --variant I --k 4 --p 2 --expect-fail").code == 1);
  }

  TEST_CASE("variant II at k=5") {
    const auto r = run("check --variant II --k 5 --p 7 --no-timings");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"].size() == 35);
    for (const auto &x : j["results"])
      CHECK(x["reduces_to_zero"] == true);
  }

  TEST_CASE("sweeps and determinism") {
    const auto a = run("check --variant II --k 4 --p 2,3,5,7 --no-timings --certificates");
    const auto b = run("check --variant II --k 4 --p 2,3,5,7 --no-timings --certificates --serial");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["reports"].size() == 4);
  }

  TEST_CASE("replay") {
    const auto r = run("replay-appendix --p 5");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["targets"].size() == 10);
    CHECK(r.out.find("⋆1") != std::string::npos);
    CHECK(r.out.find("🎃10") != std::string::npos);
    CHECK(run("replay-appendix --p 2").code == 1);
  }

  TEST_CASE("sigma, oracle, quotient dims, golden") {
    CHECK(run("sigma --k 4 --p 3 --operator swap").code == 0);
    CHECK(run("sigma --k 4 --p 2 --which short").code == 1);
    CHECK(run("oracle --ring heisenberg --p 3 --k 2").code == 0);
    CHECK(run("oracle --ring class3 --p 3 --k 2").code == 1);
    CHECK(run("oracle --ring " + std::string(STRONGLIE_DATA_DIR) + "/rings/class3.lie --k 3").code == 0);
    CHECK(run("oracle --ring heisenberg --p 3 --k 2 --extend 2").code == 0);
    const auto d = run("quotient-dims --k 5 --p 3 --max-degree 8");
    REQUIRE(d.code == 0);
    bool saw = false;
    const auto dims = nlohmann::json::parse(d.out);
    for (const auto &e : dims["dims"])
      if (e["multiweight"] == nlohmann::json::array({4, 4})) {
        CHECK(e["dim"] == 0);
        saw = true;
      }
    CHECK(saw);
    CHECK(run("golden").code == 0);
    CHECK(run("golden", "STRONGLIE_DATA=/nonexistent ").code != 0);
  }

  TEST_CASE("relation files and generation") {
    const auto tmp = std::filesystem::temp_directory_path() / "stronglie_cli_k4.rel";
    CHECK(run("gen-relations --k 4 --p 3 --with-swaps --out " + tmp.string()).code == 0);
    CHECK(run("check --variant II --relations " + tmp.string()).code == 0);
    CHECK(run("check --variant I --relations " + tmp.string() + " --p 5").code == 0);
    std::filesystem::remove(tmp);
    CHECK(run("gen-relations --k 3 --pool 1,b --max-degree 4").code == 0);
  }

  TEST_CASE("variant III") {
    CHECK(run("check --variant III --k 4 --p 3 --pattern a^3*b^3").code == 0);
    CHECK(run("check --variant III --k 4 --p 3").code == 1);
  }

  TEST_CASE("usage errors name the flag") {
    auto r = run("check --variant I --k 4 --p 4");
    CHECK(r.code == 1);
    CHECK(r.out.find("--p") != std::string::npos);
    r = run("check --variant V --k 4 --p 3");
    CHECK(r.code == 1);
    CHECK(r.out.find("--variant") != std::string::npos);
    r = run("check --variant I --k 7 --p 3");
    CHECK(r.code == 1);
    CHECK(r.out.find("--k") != std::string::npos);
    r = run("sigma --k 4 --p 3 --operator flip");
    CHECK(r.out.find("--operator") != std::string::npos);
    CHECK(run("").code == 1);
    CHECK(run("--help").code == 0);
  }

  TEST_CASE("computational errors are passed through") {
    const auto tmp = std::filesystem::temp_directory_path() / "stronglie_cli_bad.lie";
    std::ofstream(tmp) << "p=3 dim=3\ne1,e2 -> e1\ne1,e3 -> e1\ne2,e3 -> e2\n";
    const auto r = run("oracle --ring " + tmp.string() + " --k 2");
    CHECK(r.code == 1);
    CHECK(r.out.find("Jacobi identity fails for basis triple (1,2,3)") != std::string::npos);
    std::filesystem::remove(tmp);
  }
}
