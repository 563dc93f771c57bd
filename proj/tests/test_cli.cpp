#include <doctest.h>

#include <filesystem>

#include "spencerlab/commands.hpp"
#include "spencerlab/errors.hpp"
#include "support.hpp"

using namespace spencerlab;

TEST_CASE("scene files round trip") {
  for (const auto& entry : std::filesystem::directory_iterator(SPENCERLAB_SCENES)) {
    if (entry.path().extension() != ".scene") continue;
    const AffineScene s = load_scene(entry.path());
    const AffineScene again = parse_scene(format_scene(s));
    CHECK(*again.ring() == *s.ring());
    CHECK(again.ideal().generators() == s.ideal().generators());
    CHECK(again.name() == s.name());
    CHECK(s.name() == entry.path().stem().string());
  }
}

TEST_CASE("scene file diagnostics") {
  CHECK_THROWS_WITH_AS(parse_scene("[ring]\nvariables = x\n[ideal]\nx + y\n"), doctest::Contains("line 4"), InputError);
  CHECK_THROWS_WITH_AS(parse_scene("[ring]\nvariables = x, y\n[ideal]\nx + y^2\n"),
                       doctest::Contains("homogeneous"), InputError);
  CHECK_THROWS_AS(parse_scene("[ring]\nvariables = x\nweights = 1, 2\n"), InputError);
  CHECK_THROWS_AS(parse_scene("[ring]\nvariables = x\nweights = a\n"), InputError);
  CHECK_THROWS_AS(parse_scene("[rings]\n"), InputError);
  CHECK_THROWS_AS(parse_scene("x\n"), InputError);
  CHECK_THROWS_AS(parse_scene("[ideal]\nx\n"), InputError);
  CHECK_THROWS_AS(load_scene("/nonexistent.scene"), InputError);
  const AffineScene s = parse_scene("# c\n[ring]\nvariables = x,y # trailing\n\n[ideal]\n x*y \n", "fallback");
  CHECK(s.name() == "fallback");
  CHECK(s.ring()->weight(1) == 1);
  CHECK(parse_ideal_text("x\ny^2\n", s.ring()).size() == 2);
}

TEST_CASE("command examples") {
  const AffineScene cusp = testing::corpus("cusp");
  CommandOptions o;
  o.command = "milnor";
  const Json m = run_command(o, cusp);
  CHECK(m["mu"] == 2);
  CHECK(m["tau"] == 2);
  CHECK(m["basis"] == Json::array({"1", "x"}));

  o.command = "derham";
  const Json dr = run_command(o, testing::corpus("a2"));
  CHECK(dr["tables"] == Json::parse(R"({"0": {"0": 1}})"));

  o.command = "smooth";
  CHECK(run_command(o, testing::corpus("a2"))["smooth"] == true);

  o.command = "koszul";
  o.elements = {"x", "x"};
  CHECK(run_command(o, testing::corpus("a2"))["tables"]["1"]["1"] == 1);

  o.command = "nonsense";
  CHECK_THROWS_AS(run_command(o, cusp), InputError);
  o.command = "milnor";
  CHECK_THROWS_AS(run_command(o, testing::corpus("a2")), InputError);
}

TEST_CASE("JSON output is deterministic and uses string keys") {
  for (const char* cmd : {"derham", "euler-certify", "complete", "spencer-h0"}) {
    CommandOptions o;
    o.command = cmd;
    o.degree_bound = 6;
    const std::string a = run_command(o, testing::corpus("cusp")).dump(2);
    const std::string b = run_command(o, testing::corpus("cusp")).dump(2);
    CHECK(a == b);
    CHECK(Json::parse(a)["degree_bound"] == 6);
  }
}
