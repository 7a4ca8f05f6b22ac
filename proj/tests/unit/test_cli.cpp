#include <doctest.h>
#include "braidwalk/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "braidwalk");
  std::ostringstream out;
  std::ostringstream err;
  const int code = braidwalk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string kS3 = R"({"family": "coxeter_a", "rank": 2})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented invocations") {
  CHECK(run({"limits", "coxeter", "--type", "B3"}).out == "9/2\n");
  CHECK(run({"braid", "closure", "--word", "[1,2]", "--strands", "3"}).out == "1\n");
  CHECK(run({"ldp", "kappa", "--n", "2", "--j", "2", "--k", "3"}).out == "3\n");
  CHECK(run({"limits", "cyclic", "--m", "6"}).out == "(4/3, 5/3)\n");
  CHECK(run({"limits", "cyclic-product", "--moduli", "2,4"}).out == "3/2\n");
  CHECK(run({"limits", "components", "--n", "4"}).out == "(13/6, 2)\n");
  CHECK(run({"limits", "coxeter", "--type", "A1xB3"}).out == "5\n");
  CHECK(run({"braid", "reduce", "--word", "[1,-2,2,1]", "--strands", "3"}).out == "[1, 1]\n");
  CHECK(run({"braid", "compose", "--word", "[1,-2]", "--strands", "3", "--word", "[1,1]", "--strands", "2", "--word",
             "[1]", "--strands", "2"})
            .out == "[1, -2, 4, 4, 6]\n");
  CHECK(run({"braid", "lift", "--group", kS3, "--element", "[3,2,1]"}).out == "[1, 2, 1]\n");
}

TEST_CASE("csv headers") {
  CHECK(first_line(run({"walk", "--group", kS3, "--steps", "10", "--trials", "50"}).out) ==
        "step,parity,empirical_mean,exact_limit,tv_distance,standard_error,exact_tv");
  CHECK(first_line(run({"braid", "lift", "--group", kS3, "--all"}).out) == "vertex,element,length,braid,components");
  CHECK(first_line(run({"ldp", "prob", "--n", "3", "--N", "2", "--target", "2"}).out) == "model,probability,log_prob");
  CHECK(first_line(run({"ldp", "report", "--n", "4", "--x", "3/2", "--N", "2,4"}).out) ==
        "n,N,x,model,log_prob,neg_log_prob_over_N,I_x,kappa_asymptotic_log,delta_previous");
}

TEST_CASE("probabilities under both models") {
  const Run r = run({"ldp", "prob", "--n", "3", "--N", "2", "--target", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("composition,2/9,") != std::string::npos);
  CHECK(r.out.find("true_length,4/9,") != std::string::npos);
}

TEST_CASE("json output") {
  const auto limit = nlohmann::json::parse(run({"--format", "json", "limits", "cyclic", "--m", "6"}).out);
  CHECK(limit["even"] == "4/3");
  CHECK(limit["odd"] == "5/3");
  const auto walk = nlohmann::json::parse(
      run({"--format", "json", "walk", "--group", kS3, "--steps", "8", "--trials", "40"}).out);
  CHECK(walk["rows"].size() == 3);
  CHECK(walk["trials"] == 40);
  CHECK(walk["order"] == 6);
  const auto report =
      nlohmann::json::parse(run({"--format", "json", "ldp", "report", "--n", "4", "--x", "4", "--N", "1"}).out);
  CHECK(report[0]["log_prob"] == "-inf");
  CHECK(report[0]["I_x"] == "inf");
}

TEST_CASE("runs are reproducible") {
  const std::vector<std::string> args = {"--seed", "0x1234", "walk", "--group", kS3, "--steps", "30", "--trials", "2000"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.out == b.out);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "3"});
  CHECK(run(threaded).out == a.out);
  CHECK(run({"--seed", "4660", "walk", "--group", kS3, "--steps", "30", "--trials", "2000"}).out == a.out);
  CHECK(run({"--seed", "7", "walk", "--group", kS3, "--steps", "30", "--trials", "2000"}).out != a.out);
}

TEST_CASE("output files") {
  const auto dir = std::filesystem::temp_directory_path() / "braidwalk_cli_test";
  std::filesystem::create_directories(dir);
  const auto first = dir / "a.csv";
  const auto second = dir / "b.csv";
  const std::vector<std::string> tail = {"walk", "--group", kS3, "--steps", "12", "--trials", "500"};
  std::vector<std::string> a = {"--output", first.string()};
  a.insert(a.end(), tail.begin(), tail.end());
  std::vector<std::string> b = {"--output", second.string()};
  b.insert(b.end(), tail.begin(), tail.end());
  const Run ra = run(a);
  CHECK(ra.code == 0);
  CHECK(ra.out.empty());
  CHECK(run(b).code == 0);
  CHECK_FALSE(slurp(first).empty());
  CHECK(slurp(first) == slurp(second));
  std::filesystem::remove_all(dir);
  CHECK(run({"--output", "/nonexistent/dir/x.csv", "limits", "cyclic", "--m", "5"}).code == braidwalk::cli::kUsageError);
}

TEST_CASE("group files") {
  const auto path = std::filesystem::temp_directory_path() / "braidwalk_cli_group.json";
  {
    std::ofstream out(path);
    out << R"({"family": "cyclic", "m": 4})";
  }
  const Run r = run({"graph", "--group-file", path.string()});
  std::filesystem::remove(path);
  CHECK(r.code == 0);
  CHECK(r.out.find("# distances") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"limits", "cyclic", "--m", "1"}).code == braidwalk::cli::kUsageError);
  CHECK(run({"limits", "coxeter", "--type", "Q7"}).code == braidwalk::cli::kUsageError);
  CHECK(run({"limits"}).code == braidwalk::cli::kUsageError);
  CHECK(run({"nonsense"}).code == braidwalk::cli::kUsageError);
  CHECK(run({"--format", "xml", "limits", "cyclic", "--m", "5"}).code == braidwalk::cli::kUsageError);
  CHECK(run({"walk", "--group", R"({"family": "cyclic", "m": 5, "extra": 1})"}).code == braidwalk::cli::kUsageError);
  CHECK(run({"walk", "--group", kS3, "--trials", "0"}).code == braidwalk::cli::kUsageError);
  CHECK(run({"ldp", "prob", "--n", "3", "--N", "2", "--target", "3"}).code == braidwalk::cli::kUsageError);
  CHECK(run({"braid", "closure", "--word", "[5]", "--strands", "3"}).code == braidwalk::cli::kUsageError);
  const Run bad = run({"limits", "cyclic", "--m", "1"});
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(bad.out.empty());
  CHECK(run({"--help"}).code == braidwalk::cli::kSuccess);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--criterion", "1,5"});
  CHECK(r.code == braidwalk::cli::kSuccess);
  CHECK(r.out.find("PASS  1") != std::string::npos);
  CHECK(r.out.find("PASS  5") != std::string::npos);
  CHECK(run({"verify", "--criterion", "11"}).code == braidwalk::cli::kUsageError);
}

}
