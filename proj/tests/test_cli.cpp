#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "huffman");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = huffman::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("huffman_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("generate") {
  auto r = call({"generate", "--family", "fib", "--length", "15", "--scale", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["elements"] == json{"1", "2", "2", "4", "6", "10", "16", "-3", "-16", "10", "-6", "4", "-2", "2", "-1"});
  CHECK(j["report"]["canonical"] == true);

  r = call({"generate", "--family", "int", "--length", "4", "--scale", "3"});
  CHECK(json::parse(r.out)["elements"] == json{"3", "8", "24", "-9"});

  r = call({"--format", "csv", "generate", "--family", "three", "--length", "5"});
  CHECK(r.out == "index,value\n0,3\n1,8\n2,-8/3\n3,8/9\n4,-1/3\n");

  r = call({"generate", "--family", "fib", "--length", "9"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"] == "invalid-length");
  r = call({"generate", "--family", "int", "--length", "5", "--scale", "0"});
  CHECK(json::parse(r.err)["error"] == "degenerate-scale");
}

TEST_CASE("verify") {
  auto r = call({"verify", "--family", "fib", "--length", "11", "--scale", "1"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["canonical"] == true);
  CHECK(j["peak"] == "123");

  r = call({"verify", "--fixture", "H_non_11"});
  j = json::parse(r.out);
  CHECK(j["peak"] == "123");
  CHECK(j["merit_factor"] == "15129/2");

  const auto plot = std::filesystem::temp_directory_path() / "huffman_test_acorr.dat";
  r = call({"verify", "--family", "fib", "--length", "7", "--emit-plot-data", plot.string()});
  std::ifstream acorr(plot);
  std::stringstream text;
  text << acorr.rdbuf();
  CHECK(text.str() == "-6 -1\n-5 0\n-4 0\n-3 0\n-2 0\n-1 0\n0 18\n1 0\n2 0\n3 0\n4 0\n5 0\n6 -1\n");

  const auto ones = temp_file("ones.csv", "1\n1\n1\n");
  r = call({"verify", "--input", ones.string()});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["canonical"] == false);

  const auto js = temp_file("seq.json", R"({"elements": ["1", "2", "2", "0", "-2", "2", "-1"]})");
  r = call({"verify", "--input", js.string()});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["peak"] == "18");

  const auto bad = temp_file("bad.json", "{not json");
  r = call({"verify", "--input", bad.string()});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"] == "parse-error");
}

TEST_CASE("spectrum") {
  auto r = call({"spectrum", "--family", "fib", "--length", "7", "--scale", "1"});
  REQUIRE(r.code == 0);
  const auto rows = json::parse(r.out);
  CHECK(rows[0]["power"].get<double>() == doctest::Approx(16.0));
  CHECK(rows[0]["closed_form_power"].get<double>() == doctest::Approx(16.0));
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row["abs_rel_diff"].get<double>());
  CHECK(worst <= 1e-9);

  r = call({"spectrum", "--family", "tangent", "--length", "9", "--scale", "2"});
  CHECK(r.code != 0);
  CHECK(json::parse(r.err)["error"] == "pole-singularity");

  const auto plot = std::filesystem::temp_directory_path() / "huffman_test_plot.dat";
  r = call({"--format", "csv", "spectrum", "--family", "fib-cyclic", "--length", "11", "--closed-form", "--emit-plot-data",
            plot.string()});
  CHECK(r.code == 0);
  std::ifstream in(plot);
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 11);
}

TEST_CASE("zeros") {
  auto r = call({"zeros", "--family", "fib", "--length", "11", "--scale", "1"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["radii_clusters"][0]["radius"].get<double>() == doctest::Approx(0.618034).epsilon(1e-6));
  CHECK(j["radii_clusters"][1]["radius"].get<double>() == doctest::Approx(1.618034).epsilon(1e-6));

  r = call({"zeros", "--family", "three", "--length", "5"});
  j = json::parse(r.out);
  CHECK(j["radii_clusters"][0]["radius"].get<double>() == doctest::Approx(1.0 / 3));
  CHECK(j["radii_clusters"][1]["radius"].get<double>() == doctest::Approx(3.0));

  const auto delta = temp_file("delta.csv", "1,0,0\n");
  r = call({"zeros", "--input", delta.string()});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"] == "degenerate-polynomial");
}

TEST_CASE("sweep") {
  auto r = call({"--format", "csv", "sweep", "--family", "fib", "--lengths", "7:43:4", "--scales", "-2:2:0.1"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 10 * 41);
  CHECK(r.out.find(",false,") == std::string::npos);

  r = call({"--format", "csv", "sweep", "--family", "int", "--lengths", "3:20:1", "--scales", "-5:5:1", "--exclude-scales",
            "0", "--jobs", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find(",false,") == std::string::npos);

  // Output does not depend on the number of workers.
  const auto one = call({"--format", "csv", "sweep", "--family", "tangent", "--lengths", "5:21:4", "--scales", "-3,1,3"});
  const auto many = call({"--format", "csv", "sweep", "--family", "tangent", "--lengths", "5:21:4", "--scales", "-3,1,3", "--jobs", "4"});
  CHECK(one.out == many.out);

  r = call({"--format", "csv", "sweep", "--family", "tangent", "--lengths", "9", "--scales", "1,2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("pole-singularity") != std::string::npos);

  r = call({"sweep", "--family", "fib", "--lengths", "7:12:1"});
  CHECK(r.code == 2);
}

TEST_CASE("scale ranges") {
  const auto exact = huffman::cli::parse_scale_range("-1:1:1/2");
  REQUIRE(exact.size() == 5);
  CHECK(exact[1].is_exact());
  CHECK(exact[1].to_string() == "-1/2");
  const auto fl = huffman::cli::parse_scale_range("-2:2:0.1");
  CHECK(fl.size() == 41);
  CHECK(fl[23].value() == 0.3);
  CHECK(huffman::cli::parse_length_range("5:45:4").size() == 11);
  CHECK_THROWS(huffman::cli::parse_length_range("5:x:4"));
}

TEST_CASE("fixtures and identities") {
  auto r = call({"fixtures"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).size() == 3);

  r = call({"--seed", "5", "identities", "--cases", "100"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["kinds"].size() == 8);

  r = call({"identities", "--kind", "bogus"});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--format", "xml", "fixtures"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "huffman_test_out.json";
  const auto r = call({"--out", path.string(), "generate", "--family", "fib", "--length", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  json j;
  in >> j;
  CHECK(j["length"] == 7);
}
