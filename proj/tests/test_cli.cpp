#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COMPRES_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("reduce") {
  auto r = run("reduce 'T[ts]'");
  CHECK(r.status == 0);
  CHECK(r.out == "[E(1)]\n");
  r = run("reduce 'T[sts]'");
  CHECK(r.out == "(-1 + q)*[E(1)] + q*[Tt]\n");
  r = run("reduce 'T[s]*T[t] - T[t]*T[s]'");
  CHECK(r.out == "0\n");
  CHECK(run("reduce 'T[ss]'").status == 2);
  CHECK(run("reduce 'T[s] +'").status == 2);
}

TEST_CASE("verify") {
  auto r = run("verify clozel --nmax 5");
  CHECK(r.status == 0);
  CHECK(r.out.find("8/8 passed") != std::string::npos);
  r = run("verify commutator --nmax 3 --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "commutator");
  CHECK(j["pass"] == true);
  r = run("verify rpoly --lmax 3 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("suite,seed,id,paper_anchor,params,expected,actual,pass", 0) == 0);
}

TEST_CASE("determinism") {
  const auto a = run("verify hh0 --oracle-cutoff 4 --seed 5 --format json");
  const auto b = run("verify hh0 --oracle-cutoff 4 --seed 5 --format json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("tables and output files") {
  const std::string path = "compres_cli_table.csv";
  std::remove(path.c_str());
  CHECK(run("table rpoly 0..4 --format csv --out " + path).status == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(!header.empty());
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 5);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("spec files") {
  const std::string path = "compres_cli_spec.json";
  {
    std::ofstream out(path);
    out << R"({"name": "dual", "dim": 2, "unit": [1, 0],
      "products": [{"i": 0, "j": 0, "value": [1, 0]}, {"i": 0, "j": 1, "value": [0, 1]},
                   {"i": 1, "j": 0, "value": [0, 1]}]})";
  }
  CHECK(run("verify engine --spec " + path).status == 0);
  {
    std::ofstream out(path);
    out << R"({"name": "broken", "dim": 2, "unit": [1, 0],
      "products": [{"i": 0, "j": 0, "value": [1, 0]}, {"i": 0, "j": 1, "value": [0, 1]},
                   {"i": 1, "j": 1, "value": [1, 0]}]})";
  }
  CHECK(run("verify engine --spec " + path).status == 2);
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("verify").status == 2);
  CHECK(run("verify nonsense").status == 2);
  CHECK(run("verify clozel --format yaml").status == 2);
  CHECK(run("table rpoly 5..1").status == 2);
  CHECK(run("verify torus --rank 7").status == 2);
  CHECK(run("verify torus --rank 3 --window 1 --degree 3").status == 2);
}
