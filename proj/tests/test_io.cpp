#include <catch2/catch_amalgamated.hpp>

#include "spinacc/acceptability.hpp"
#include "spinacc/classify.hpp"
#include "spinacc/constructions.hpp"
#include "spinacc/io.hpp"

using namespace spinacc;

namespace {

void require_rejects(const std::string& text, const std::string& needle) {
  try {
    load_instance_file(text);
    FAIL("expected rejection mentioning '" << needle << "'");
  } catch (const input_error& e) {
    REQUIRE_THAT(std::string(e.what()), Catch::Matchers::ContainsSubstring(needle));
  }
}

Json minimal_instance() {
  return Json{{"name", "tiny"},
              {"n", 3},
              {"M", 4},
              {"generators", Json::array({Json{{"rotation", Json{{"plane", Json::array({0, 1})}, {"num", 1}, {"den", 4}}}}})}};
}

}  // namespace

TEST_CASE("rational literals round-trip and bad ones are named") {
  REQUIRE(parse_rat_field("3/4", "t") == Rat(3, 4));
  REQUIRE(parse_rat_field("-7", "t") == Rat(-7));
  REQUIRE(spinacc::rat_to_string(Rat(-22, 7)) == "-22/7");
  REQUIRE_THROWS_AS(parse_rat_field("1.5", "field"), input_error);
  REQUIRE_THROWS_AS(parse_rat_field("", "field"), input_error);
  REQUIRE_THROWS_AS(parse_rat_field("3/0", "field"), input_error);
  REQUIRE_THROWS_AS(parse_rat_field("a/b", "field"), input_error);
  try {
    parse_rat_field("x", "some.path");
  } catch (const input_error& e) {
    REQUIRE_THAT(std::string(e.what()), Catch::Matchers::ContainsSubstring("some.path"));
  }
}

TEST_CASE("cyclotomic values survive the JSON form") {
  CycNum z = root_of_unity(12, 1);
  CycNum mixed = z * z + CycNum(Rat(3, 2)) * z + CycNum(7);
  Json j = cyc_to_json(mixed);
  CycNum back = cyc_from_json(j, 12, "t");
  REQUIRE(back == mixed);

  CycNum plain(Rat(-5, 3));
  Json jp = cyc_to_json(plain);
  REQUIRE(jp.is_string());
  REQUIRE(cyc_from_json(jp, 12, "t") == plain);

  REQUIRE(cyc_from_json(Json(4), 12, "t") == CycNum(4));

  // submodulus coefficients embed into the ambient order
  Json sub{{"M", 4}, {"c", Json::array({0, 1})}};
  REQUIRE(cyc_from_json(sub, 12, "t") == root_of_unity(12, 3));

  REQUIRE_THROWS_AS(cyc_from_json(Json{{"M", 5}, {"c", Json::array({1})}}, 12, "t"), input_error);
  REQUIRE_THROWS_AS(cyc_from_json(Json{{"M", 4}, {"c", Json::array()}}, 12, "t"), input_error);
  REQUIRE_THROWS_AS(cyc_from_json(Json{{"M", 4}, {"c", Json::array({1, 2, 3, 4, 5})}}, 12, "t"), input_error);
}

TEST_CASE("a rotation entry builds the expected matrix") {
  InstanceFile f = load_instance_file(minimal_instance().dump());
  REQUIRE(f.name == "tiny");
  REQUIRE(f.instance.gens.size() == 1);
  REQUIRE(f.instance.gens[0] == rotation_block(3, 0, 1, 4, 1, 4));
  REQUIRE(f.options.max_order == 20000);
  REQUIRE_FALSE(f.has_scalar_tags());
  ClosedGroup G(f.instance, f.options.max_order);
  REQUIRE(G.size() == 4);
}

TEST_CASE("a reflection pair lands in the rotation group") {
  Json j{{"name", "refl"},
         {"n", 3},
         {"M", 4},
         {"generators",
          Json::array({Json{{"reflection_pair",
                             Json::array({Json::array({1, 0, 0}), Json::array({0, "1/2", 0})})}}})}};
  InstanceFile f = load_instance_file(j.dump());
  Mat<CycNum> expect = Mat<CycNum>::eye(3);
  expect.at(0, 0) = CycNum(-1);
  expect.at(1, 1) = CycNum(-1);
  REQUIRE(f.instance.gens[0] == expect);
}

TEST_CASE("matrix entries are checked for orthogonality") {
  Json good = minimal_instance();
  good["generators"] = Json::array({Json{{"matrix", Json::array({0, -1, 0, 1, 0, 0, 0, 0, 1})}}});
  InstanceFile f = load_instance_file(good.dump());
  REQUIRE(f.instance.gens[0] == rotation_block(3, 0, 1, 4, 1, 4));

  Json bad = good;
  bad["generators"][0]["matrix"][0] = 2;
  require_rejects(bad.dump(), "not orthogonal");
}

TEST_CASE("construct entries expand a named builder") {
  GroupInstance direct = parse_instance("hcal:3");
  Json j{{"name", "wrapped"},
         {"n", direct.n},
         {"M", direct.M},
         {"generators", Json::array({Json{{"construct", "hcal:3"}}})}};
  InstanceFile f = load_instance_file(j.dump());
  REQUIRE(f.instance.gens.size() == direct.gens.size());
  for (std::size_t i = 0; i < direct.gens.size(); ++i) REQUIRE(f.instance.gens[i] == direct.gens[i]);
  REQUIRE(ClosedGroup(f.instance).size() == ClosedGroup(direct).size());

  // the same builder lifts into a larger cyclotomic field
  Json big = j;
  big["M"] = direct.M * 2;
  InstanceFile fb = load_instance_file(big.dump());
  REQUIRE(fb.instance.M == direct.M * 2);
  REQUIRE(ClosedGroup(fb.instance).size() == ClosedGroup(direct).size());

  Json wrong = j;
  wrong["n"] = direct.n + 2;
  require_rejects(wrong.dump(), "does not match instance dimension");
}

TEST_CASE("a lone construct entry keeps the double cover data") {
  GroupInstance direct = parse_instance("example1");
  Json j{{"name", "e1"},
         {"n", direct.n},
         {"M", direct.M},
         {"generators", Json::array({Json{{"construct", "example1"}}})}};
  InstanceFile f = load_instance_file(j.dump());
  REQUIRE(f.instance.lifts.size() == direct.lifts.size());

  Json two = j;
  two["generators"].push_back(Json{{"rotation", Json{{"plane", Json::array({0, 1})}, {"num", 0}, {"den", 1}}}});
  InstanceFile f2 = load_instance_file(two.dump());
  REQUIRE(f2.instance.lifts.empty());
}

TEST_CASE("scalar tags are parsed per generator") {
  Json j = minimal_instance();
  j["generators"][0]["zeta_pow"] = 3;
  InstanceFile f = load_instance_file(j.dump());
  REQUIRE(f.has_scalar_tags());
  REQUIRE(f.zeta_pow == std::vector<long>{3});
}

TEST_CASE("malformed instance files are rejected with the offending field") {
  Json base = minimal_instance();

  Json j = base;
  j.erase("name");
  require_rejects(j.dump(), "missing field 'name'");

  j = base;
  j["mystery"] = 1;
  require_rejects(j.dump(), "unknown field 'mystery'");

  j = base;
  j["generators"][0]["rotation"]["plane"] = Json::array({0, 5});
  require_rejects(j.dump(), "rotation.plane");

  j = base;
  j["generators"][0]["rotation"]["den"] = 8;
  require_rejects(j.dump(), "rotation.den");

  j = base;
  j["generators"] = Json::array({Json{{"spin", 1}}});
  require_rejects(j.dump(), "needs one of");

  j = base;
  j["generators"] = Json::array({Json{{"matrix", Json::array({1, 0, 0, 1})}}});
  require_rejects(j.dump(), "9 row-major entries");

  j = base;
  j["generators"] = Json::array(
      {Json{{"reflection_pair", Json::array({Json::array({0, 0, 0}), Json::array({0, 1, 0})})}}});
  require_rejects(j.dump(), "zero length");

  j = base;
  j["options"] = Json{{"prime_count", 1}};
  require_rejects(j.dump(), "at least two primes");

  require_rejects("{ not json", "instance:");
  require_rejects("[1,2]", "expected a JSON object");
}

TEST_CASE("canonical emission reloads to the same generators") {
  GroupInstance built = parse_instance("gcal:3");
  InstanceFile f;
  f.name = "gcal3";
  f.instance = built;
  f.zeta_pow.assign(built.gens.size(), 0);
  Json j = instance_to_json(f);
  InstanceFile f2 = load_instance_file(j.dump(2));
  REQUIRE(f2.name == f.name);
  REQUIRE(f2.instance.n == built.n);
  REQUIRE(f2.instance.M == built.M);
  REQUIRE(f2.instance.gens.size() == built.gens.size());
  for (std::size_t i = 0; i < built.gens.size(); ++i) REQUIRE(f2.instance.gens[i] == built.gens[i]);
  REQUIRE(instance_to_json(f2).dump(2) == j.dump(2));
}

TEST_CASE("reports survive serialization exactly") {
  GroupInstance inst = parse_instance("example1");
  ClosedGroup G(inst);
  Acceptability acc(G);
  Classifier cls(acc);
  ClassificationReport crep = cls.report();
  ParsedReport r = make_report("example1", G, acc, &crep, 1);

  REQUIRE_FALSE(r.acceptable);
  REQUIRE(r.x.size() == 2);
  REQUIRE(r.e.size() == 2);

  // obstruction certificates multiply back to the claimed sign vectors
  for (const auto& xe : r.x) {
    std::vector<int> prod(xe.signs.size(), 1);
    for (long ci : xe.constituents) {
      REQUIRE(r.constituents[static_cast<std::size_t>(ci)].fs == 1);
      const auto& ds = r.constituents[static_cast<std::size_t>(ci)].det_signs;
      for (std::size_t k = 0; k < prod.size(); ++k) prod[k] *= ds[k];
    }
    REQUIRE(prod == xe.signs);
  }

  Json j = report_to_json(r);
  std::string text = j.dump(2);
  ParsedReport r2 = report_from_json(Json::parse(text));
  REQUIRE(r2 == r);
  REQUIRE(report_to_json(r2).dump(2) == text);

  std::string rendered = render_report_text(r);
  REQUIRE_THAT(rendered, Catch::Matchers::ContainsSubstring("unacceptable"));
  REQUIRE_THAT(rendered, Catch::Matchers::ContainsSubstring("type I"));
}

TEST_CASE("acceptable reports carry empty obstruction data") {
  GroupInstance inst = parse_instance("h1:4");
  ClosedGroup G(inst);
  Acceptability acc(G);
  ParsedReport r = make_report("h1:4", G, acc, nullptr, 1);
  REQUIRE(r.acceptable);
  REQUIRE(r.e.empty());
  REQUIRE(r.x.size() == 4);
  Json j = report_to_json(r);
  ParsedReport r2 = report_from_json(j);
  REQUIRE(r2 == r);
  for (const auto& re : r2.etas) REQUIRE_FALSE(re.classified);
}

TEST_CASE("report serialization is deterministic across rebuilds") {
  GroupInstance inst = parse_instance("d8mu2");
  std::string a, b;
  for (std::string* out : {&a, &b}) {
    ClosedGroup G(inst);
    Acceptability acc(G, 9);
    Classifier cls(acc, 9);
    ClassificationReport crep = cls.report();
    *out = report_to_json(make_report("d8mu2", G, acc, &crep, 9)).dump(2);
  }
  REQUIRE(a == b);
}

TEST_CASE("sign vectors render compactly") {
  REQUIRE(render_signs({1, -1, 1}) == "(+,-,+)");
  REQUIRE(render_signs({}) == "()");
}
