#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome cli(const std::string& args) {
  const std::string cmd = std::string(OLSS_CLI) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) o.out += buf.data();
  const int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

nlohmann::json body(const std::string& args) { return nlohmann::json::parse(cli("--json " + args).out)["body"]; }

const fs::path& workdir() {
  static const fs::path dir = [] {
    const auto d = fs::temp_directory_path() / "olss_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string gen(const std::string& name, const std::string& family) {
  const auto path = (workdir() / (name + ".txt")).string();
  REQUIRE(cli("gen " + family + " -o " + path).status == 0);
  return path;
}

}  // namespace

TEST_CASE("gen writes structure files") {
  CHECK(cli("gen path 6").out == "n 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
  const auto petersen = cli("gen petersen").out;
  CHECK(petersen.rfind("n 10\n", 0) == 0);
  CHECK(std::count(petersen.begin(), petersen.end(), 'e') == 15);
  const auto t16 = cli("gen tree-tn 16").out;
  CHECK(t16.rfind("n 16\n", 0) == 0);
  CHECK(std::count(t16.begin(), t16.end(), 'e') == 15);
  CHECK(t16.find("e 0 4\n") != std::string::npos);
  CHECK(t16.find("e 0 5\n") == std::string::npos);
  CHECK(cli("gen path").status == 2);
  CHECK(cli("gen nosuch 3").status == 2);
}

TEST_CASE("verify reports verdicts and exit codes") {
  const auto c6 = gen("c6", "cycle 6");
  const auto v = body("verify " + c6 + " --scheme c6-optimal --mode all");
  CHECK(v["perfect"] == true);
  CHECK(v["orderings"] == 720);
  CHECK(v["worst_complexity"]["fraction"] == "3/2");

  const auto p3 = gen("p3", "path 3");
  const auto ff = body("verify " + p3 + " --scheme first-fit-general --d 2 --mode all");
  CHECK(ff["worst_complexity"]["fraction"] == "2");

  const auto c4 = gen("c4", "cycle 4");
  const auto sampled = body("verify " + c4 + " --scheme first-fit-graph --mode sample 10 --seed 7");
  CHECK(sampled["perfect"] == true);
  CHECK(sampled["orderings"] == 10);
  CHECK(sampled["seed"] == 7);
  CHECK(sampled["runs"].size() == 10);
  CHECK(body("verify " + c4 + " --scheme first-fit-graph --mode sample 10 --seed 7") == sampled);

  CHECK(cli("verify " + c4 + " --scheme first-fit-graph --d 2").status == 2);

  const auto c7 = gen("c7", "cycle 7");
  const auto lifted = cli("verify " + c7 + " --scheme symmetric-lift --offline stinson-cover --mode sample 30 --seed 2");
  CHECK(lifted.status == 1);
  CHECK(lifted.out.find("offending_permutations: [\"") != std::string::npos);

  const auto off = body("verify " + c6 + " --scheme c6-pi");
  CHECK(off["mode"] == "offline");
  CHECK(off["complexity"]["fraction"] == "3/2");
}

TEST_CASE("lp, bounds and fullsym") {
  CHECK(body("lp " + gen("p4", "path 4"))["kappa"]["fraction"] == "3/2");
  CHECK(body("lp " + gen("k2", "path 2"))["kappa"]["fraction"] == "1");
  const auto p6 = body("lp " + gen("p6", "path 6") + " --symmetrize 0,1,3,4 --witness");
  CHECK(p6["kappa"]["fraction"] == "7/4");
  CHECK(p6["witness"].size() == 64);

  CHECK(body("bounds star-lower --d 2 --m 3")["value"]["fraction"] == "12/7");
  CHECK(body("bounds thm15 --n 4 --d 2 --r 2")["value"]["fraction"] == "167/84");
  CHECK(body("bounds stinson --d 3")["value"]["fraction"] == "2");

  CHECK(body("fullsym " + gen("c5", "cycle 5"))["fully_symmetric"] == true);
  const auto cube = body("fullsym " + gen("cube", "cube 3"));
  CHECK(cube["fully_symmetric"] == false);
  CHECK(cube["witness"].is_string());
  CHECK(body("fullsym " + gen("c7b", "cycle 7"))["fully_symmetric"] == false);
}

TEST_CASE("sample mode accepts one or two tokens") {
  const auto c5 = gen("c5_modes", "cycle 5");
  const auto split = body("verify " + c5 + " --scheme first-fit-graph --mode sample 12 --seed 9");
  const auto joined = body("verify " + c5 + " --scheme first-fit-graph --mode \"sample 12\" --seed 9");
  CHECK(split["mode"] == "sample 12");
  CHECK(split == joined);
  CHECK(cli("verify " + c5 + " --scheme first-fit-graph --mode some").status == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli("verify /nonexistent/file.txt --scheme c6-sigma").status == 2);
  CHECK(cli("frobnicate").status == 2);
  CHECK(cli("--help").status == 0);
}
