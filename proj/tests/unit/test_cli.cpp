#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cevia/cli.hpp"
#include "cevia/plot.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "cevia");
  std::ostringstream out, err;
  const int code = cevia::run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("construct") {
  const Run r = run({"construct", "1", "2", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"a\":\"-11\"") != std::string::npos);
  CHECK(r.out.find("\"k\":\"-2/5\"") != std::string::npos);
  CHECK(r.out.find("\"cross_gvsz\":\"-3\"") != std::string::npos);
  CHECK(run({"construct", "1", "2", "3"}).out == r.out);
  const auto j = json_of(r);
  CHECK(j["V"] == nlohmann::json::array({"19", "26", "21"}));
  CHECK(j["O"] == nlohmann::json::array({"125", "112", "27"}));

  const Run g = run({"construct", "1", "1", "1"});
  CHECK(g.code == 2);
  CHECK(json_of(g)["flags"].dump().find("on_median") != std::string::npos);
  const Run side = run({"construct", "0", "1", "2"});
  CHECK(side.code == 2);
  CHECK(json_of(side)["flags"].dump().find("on_sideline") != std::string::npos);

  CHECK(run({"construct", "1", "x", "2"}).code == 64);
  CHECK(run({"construct", "1", "2"}).code == 64);
  CHECK(run({"construct", "0", "0", "0"}).code == 64);
  CHECK(run({"construct", "1/2", "-1/3", "3/4"}).code == 0);
}

TEST_CASE("curve-info") {
  const auto m3 = json_of(run({"curve-info", "-3"}));
  CHECK(m3["j"] == "0");
  CHECK(m3["weierstrass"]["torsion_images"][4]["image"] == nlohmann::json::array({"2", "3"}));
  const auto m1 = json_of(run({"curve-info", "-1"}));
  CHECK(m1["is_elliptic"] == false);
  CHECK(m1["singular_points"].size() == 3);
  CHECK(json_of(run({"curve-info", "1"}))["j"] == "16384/5");
  CHECK(run({"curve-info", "one"}).code == 64);
}

TEST_CASE("j-invert") {
  const auto j = json_of(run({"j-invert", "1728"}));
  CHECK(j["roots"].size() == 4);
  const auto z = json_of(run({"j-invert", "0"}));
  bool exact = false;
  for (const auto& r : z["roots"]) exact = exact || (r.contains("exact") && r["exact"] == "-3");
  CHECK(exact);
  const auto one = json_of(run({"j-invert", "16384/5", "--prec", "1/1000"}));
  bool has_one = false;
  for (const auto& r : one["roots"]) has_one = has_one || (r.contains("exact") && r["exact"] == "1");
  CHECK(has_one);
  CHECK(run({"j-invert", "1728", "--prec", "0"}).code == 64);
}

TEST_CASE("plot sampling") {
  const auto ys = cevia::solve_for_y(cevia::Rational(-3), cevia::Rational(0));
  REQUIRE(ys.size() == 2);
  CHECK(ys[0] == 0.0);
  CHECK(ys[1] == 1.0);
  CHECK(cevia::solve_for_y(cevia::Rational(-3), cevia::Rational(1, 2)).empty());  // D(1/2) < 0

  const Run csv = run({"plot", "1", "--xmin", "-2", "--xmax", "0", "--samples", "5", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "x,y1,y2\n-2,-1.3722813232690143,4.372281323269014\n"
                   "-3/2,-1.760398644698074,4.260398644698074\n-1/2,,\n0,0,1\n");

  const std::string path = "cevia_test_plot.svg";
  const Run svg = run({"plot", "1", "--xmin", "-2", "--xmax", "0", "--samples", "5", "-o", path.c_str()});
  CHECK(svg.code == 0);
  CHECK(json_of(svg)["poles"] == 1);
  std::ifstream in(path);
  const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body.rfind("<svg", 0) == 0);
  CHECK(body.find("<polyline") != std::string::npos);
  std::remove(path.c_str());

  CHECK(run({"plot", "1", "-o", "/nonexistent-dir/x.svg"}).code == 73);
  CHECK(run({"plot", "1", "--xmin", "1", "--xmax", "0"}).code == 64);
  CHECK(run({"plot", "1", "--format", "png"}).code == 64);
}

TEST_CASE("group-table") {
  const auto j = json_of(run({"group-table", "2"}));
  CHECK(j["identity"] == "A_inf");
  CHECK(j["cyclic"] == true);
  CHECK(j["table"][0][0] == "A_inf");
  const Run text = run({"group-table", "2", "--text"});
  CHECK(text.out.find("cyclic of order 6") != std::string::npos);
  CHECK(run({"group-table", "-1"}).code == 2);
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--samples", "2", "--seed", "3"});
  CHECK(ok.code == 0);
  CHECK(json_of(ok)["seed"] == 3);
  CHECK(json_of(ok)["ok"] == true);
  const Run bad = run({"verify", "--samples", "2", "--inject-fault"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("matrix_M_proportional") != std::string::npos);
  CHECK(run({"verify", "--samples", "0"}).code == 64);
  CHECK(run({}).code == 64);
}
