#include <catch2/catch_amalgamated.hpp>

#include "spinacc/classify.hpp"
#include "spinacc/constructions.hpp"

using namespace spinacc;

namespace {

const ChiVerdict* verdict_for(const EtaClassification& ec, const std::vector<int>& chi_signs) {
  for (const auto& v : ec.chi_verdicts)
    if (v.chi.gen_signs == chi_signs) return &v;
  return nullptr;
}

}  // namespace

TEST_CASE("a stable trivial line classifies every unacceptable character directly") {
  for (const char* spec : {"example1", "gcal:3", "gcal:4", "h3:4"}) {
    INFO(spec);
    ClosedGroup g(parse_instance(spec));
    Acceptability acc(g);
    Classifier cls(acc);
    const auto& rep = cls.report();
    REQUIRE_FALSE(rep.etas.empty());
    for (const auto& ec : rep.etas) {
      CHECK(ec.type_i);
      for (const auto& v : ec.chi_verdicts) CHECK_FALSE(v.type_iii);
    }
  }
}

TEST_CASE("three-plane involution instances split as a plane plus an induced plane") {
  {
    ClosedGroup g(hcal_instance(3));
    Acceptability acc(g);
    Classifier cls(acc);
    const auto& rep = cls.report();
    REQUIRE(rep.etas.size() == 2);
    for (const auto& ec : rep.etas) {
      CHECK_FALSE(ec.type_i);
      const ChiVerdict* v = verdict_for(ec, {1, 1, 1, 1, -1});
      REQUIRE(v != nullptr);
      CHECK(v->type_iii);
      CHECK(v->type_iiia);
      CHECK_FALSE(v->type_iiib);
    }
  }
  {
    ClosedGroup g(weil_type_iiia_core(3, 3, 4));
    Acceptability acc(g);
    Classifier cls(acc);
    for (const auto& ec : cls.report().etas) {
      const ChiVerdict* v = verdict_for(ec, {1, 1, 1, 1, -1});
      REQUIRE(v != nullptr);
      CHECK(v->type_iii);
      CHECK(v->type_iiia);
    }
  }
}

TEST_CASE("paired tetrahedral blocks split as an induced three-dimensional piece") {
  ClosedGroup g(ical_instance("a4"));
  Acceptability acc(g);
  Classifier cls(acc);
  const auto& rep = cls.report();
  REQUIRE(rep.etas.size() == 2);
  for (const auto& ec : rep.etas) {
    CHECK_FALSE(ec.type_i);
    const ChiVerdict* v = verdict_for(ec, {1, 1, 1, 1, 1, -1});
    REQUIRE(v != nullptr);
    CHECK(v->type_iii);
    CHECK(v->type_iiib);
    CHECK_FALSE(v->type_iiia);
  }
}

TEST_CASE("paired octahedral blocks also split as an induced three-dimensional piece") {
  ClosedGroup g(ical_instance("s4"));
  Acceptability acc(g);
  Classifier cls(acc);
  const auto& rep = cls.report();
  REQUIRE(rep.etas.size() == 2);
  for (const auto& ec : rep.etas) {
    const ChiVerdict* v = verdict_for(ec, {1, 1, 1, 1, 1, -1});
    REQUIRE(v != nullptr);
    CHECK(v->type_iii);
    CHECK(v->type_iiib);
    CHECK_FALSE(v->type_iiia);
  }
}

TEST_CASE("one instance can realize both induced-split shapes") {
  ClosedGroup g(d8mu2_instance());
  Acceptability acc(g);
  Classifier cls(acc);
  const auto& rep = cls.report();
  REQUIRE(rep.etas.size() == 4);
  for (const auto& ec : rep.etas) {
    CHECK_FALSE(ec.type_i);
    REQUIRE(ec.chi_verdicts.size() == 3);
    const ChiVerdict* va = verdict_for(ec, {-1, 1, 1});
    const ChiVerdict* vb = verdict_for(ec, {-1, -1, 1});
    const ChiVerdict* vc = verdict_for(ec, {1, -1, 1});
    REQUIRE(va != nullptr);
    REQUIRE(vb != nullptr);
    REQUIRE(vc != nullptr);
    CHECK(va->type_iii);
    CHECK(va->type_iiia);
    CHECK(va->type_iiib);
    CHECK(vb->type_iii);
    CHECK(vb->type_iiia);
    CHECK(vb->type_iiib);
    CHECK(vc->type_ii);
    CHECK_FALSE(vc->type_iii);
  }
}

TEST_CASE("restrictions that escape the kernel obstruction subgroup") {
  for (int sign : {1, -1}) {
    INFO("last-block sign = " << sign);
    ClosedGroup g(gprime_instance(4, sign));
    Acceptability acc(g);
    Classifier cls(acc);
    const auto& rep = cls.report();
    REQUIRE(rep.etas.size() == 4);
    for (const auto& ec : rep.etas) {
      CHECK_FALSE(ec.type_i);
      const ChiVerdict* v = verdict_for(ec, {1, 1, 1, 1, -1});
      REQUIRE(v != nullptr);
      CHECK(v->type_ii);
      CHECK_FALSE(v->type_iii);
    }
  }
}

TEST_CASE("every obstructed restriction admits an induced split") {
  for (const char* spec :
       {"hcal:3", "ical:a4", "d8mu2", "gprime:4,+1", "gprime:4,-1", "weil3a:3,3,4", "ical:dihedral,3"}) {
    INFO(spec);
    ClosedGroup g(parse_instance(spec));
    Acceptability acc(g);
    Classifier cls(acc);
    for (const auto& ec : cls.report().etas)
      for (const auto& v : ec.chi_verdicts) {
        CHECK((v.type_ii || v.type_iii));
        if (v.type_iii) CHECK((v.type_iiia || v.type_iiib));
      }
  }
}
