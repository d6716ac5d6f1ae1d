#include <algorithm>
#include <map>

#include <catch2/catch_amalgamated.hpp>

#include "spinacc/acceptability.hpp"
#include "spinacc/constructions.hpp"

using namespace spinacc;

namespace {

std::vector<std::vector<int>> sign_vectors(const std::vector<ClosedGroup::Mu2Char>& chars) {
  std::vector<std::vector<int>> out;
  for (const auto& c : chars) out.push_back(c.gen_signs);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> sorted(std::vector<std::vector<int>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::map<std::vector<int>, long> y_multiplicities(const AcceptabilityReport& rep) {
  std::map<std::vector<int>, long> out;
  for (const auto& line : rep.y_set) out[line.chi.gen_signs] = line.mult;
  return out;
}

}  // namespace

TEST_CASE("two commuting quarter-turn generators produce a two-element obstruction orbit") {
  ClosedGroup g(example1_instance());
  Acceptability acc(g);
  const auto& rep = acc.report();
  CHECK_FALSE(rep.acceptable);
  CHECK(sign_vectors(rep.x_set) == sorted({{1, 1}, {-1, -1}}));
  CHECK(sign_vectors(rep.e_set) == sorted({{-1, 1}, {1, -1}}));
  auto y = y_multiplicities(rep);
  REQUIRE(y.size() == 2);
  CHECK(y[{1, 1}] == 1);
  CHECK(y[{-1, -1}] == 2);
  CHECK_FALSE(rep.discrete);
  CHECK_FALSE(rep.stable);
  verify_acceptability(g, rep);
}

TEST_CASE("diagonal torus family is unacceptable with the swap-sign obstruction subgroup") {
  for (long d : {3L, 4L}) {
    INFO("d = " << d);
    ClosedGroup g(gcal_instance(d));
    Acceptability acc(g);
    const auto& rep = acc.report();
    CHECK_FALSE(rep.acceptable);
    CHECK(sign_vectors(rep.x_set) == sorted({{1, 1, 1, 1}, {1, 1, 1, -1}}));
    CHECK(sign_vectors(rep.e_set) == sorted({{1, 1, -1, 1}, {1, 1, -1, -1}}));
    auto y = y_multiplicities(rep);
    REQUIRE(y.size() == 2);
    CHECK(y[{1, 1, 1, 1}] == 1);
    CHECK(y[{1, 1, 1, -1}] == 2);
    verify_acceptability(g, rep);
  }
}

TEST_CASE("independent torus orders keep the diagonal-family verdict") {
  ClosedGroup g(weil_type_i_core(3, 4));
  Acceptability acc(g);
  const auto& rep = acc.report();
  CHECK_FALSE(rep.acceptable);
  CHECK(sign_vectors(rep.x_set) == sorted({{1, 1, 1, 1}, {1, 1, 1, -1}}));
  CHECK(sign_vectors(rep.e_set) == sorted({{1, 1, -1, 1}, {1, 1, -1, -1}}));
  auto y = y_multiplicities(rep);
  CHECK(y[{1, 1, 1, 1}] == 1);
  CHECK(y[{1, 1, 1, -1}] == 2);
}

TEST_CASE("wreath-subgroup trichotomy: two acceptable members and one unacceptable") {
  {
    ClosedGroup g(h1_instance(4));
    Acceptability acc(g);
    CHECK(acc.report().acceptable);
    CHECK(acc.report().x_set.size() == 4);  // every sign character is a determinant pattern
  }
  {
    ClosedGroup g(h2_instance(4));
    Acceptability acc(g);
    CHECK(acc.report().acceptable);
    CHECK(acc.report().x_set.size() == 4);
  }
  for (long d : {3L, 4L}) {
    INFO("d = " << d);
    ClosedGroup g(h3_instance(d));
    Acceptability acc(g);
    const auto& rep = acc.report();
    CHECK_FALSE(rep.acceptable);
    CHECK(sign_vectors(rep.x_set) == sorted({{1, 1, 1}, {1, 1, -1}}));
    CHECK(sign_vectors(rep.e_set) == sorted({{1, -1, 1}, {1, -1, -1}}));
    auto y = y_multiplicities(rep);
    CHECK(y[{1, 1, 1}] == 1);
    CHECK(y[{1, 1, -1}] == 2);
    verify_acceptability(g, rep);
  }
}

TEST_CASE("outer involution extension is unacceptable with a four-element obstruction subgroup") {
  for (int sign : {1, -1}) {
    INFO("last-block sign = " << sign);
    ClosedGroup g(gprime_instance(4, sign));
    Acceptability acc(g);
    const auto& rep = acc.report();
    CHECK_FALSE(rep.acceptable);
    CHECK(sign_vectors(rep.x_set) ==
          sorted({{1, 1, 1, 1, 1}, {1, 1, 1, -1, 1}, {1, 1, 1, 1, -1}, {1, 1, 1, -1, -1}}));
    CHECK(sign_vectors(rep.e_set) ==
          sorted({{1, 1, -1, 1, 1}, {1, 1, -1, -1, 1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, -1}}));
    auto y = y_multiplicities(rep);
    REQUIRE(y.size() == 3);
    CHECK(y[{1, 1, 1, 1, -1}] == 1);
    CHECK(y[{1, 1, 1, -1, 1}] == 1);
    CHECK(y[{1, 1, 1, -1, -1}] == 1);
    CHECK(rep.discrete);
  }
}

TEST_CASE("three-plane involution family has no stable trivial line") {
  for (const char* spec : {"hcal:3", "weil3a:3,3,4"}) {
    INFO(spec);
    ClosedGroup g(parse_instance(spec));
    Acceptability acc(g);
    const auto& rep = acc.report();
    CHECK_FALSE(rep.acceptable);
    CHECK(sign_vectors(rep.x_set) == sorted({{1, 1, 1, 1, 1}, {1, 1, 1, 1, -1}}));
    CHECK(sign_vectors(rep.e_set) == sorted({{1, 1, 1, -1, 1}, {1, 1, 1, -1, -1}}));
    auto y = y_multiplicities(rep);
    REQUIRE(y.size() == 1);
    CHECK(y[{1, 1, 1, 1, -1}] == 1);
    verify_acceptability(g, rep);
  }
}

TEST_CASE("paired rotation blocks with a swap are unacceptable off the swap sign") {
  ClosedGroup g(ical_instance("a4"));
  Acceptability acc(g);
  const auto& rep = acc.report();
  CHECK_FALSE(rep.acceptable);
  CHECK(sign_vectors(rep.x_set) == sorted({{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, -1}}));
  CHECK(sign_vectors(rep.e_set) == sorted({{1, 1, 1, 1, -1, 1}, {1, 1, 1, 1, -1, -1}}));
  auto y = y_multiplicities(rep);
  REQUIRE(y.size() == 1);
  CHECK(y[{1, 1, 1, 1, 1, -1}] == 1);
}

TEST_CASE("dihedral paired blocks get a four-element obstruction subgroup") {
  ClosedGroup g(ical_instance("dihedral", 3));
  Acceptability acc(g);
  const auto& rep = acc.report();
  CHECK_FALSE(rep.acceptable);
  CHECK(sign_vectors(rep.x_set) == sorted({{1, 1, 1, 1, 1, 1},
                                           {1, -1, 1, -1, 1, 1},
                                           {1, 1, 1, 1, 1, -1},
                                           {1, -1, 1, -1, 1, -1}}));
  CHECK(sign_vectors(rep.e_set) == sorted({{1, 1, 1, 1, -1, 1},
                                           {1, 1, 1, 1, -1, -1},
                                           {1, -1, 1, -1, -1, 1},
                                           {1, -1, 1, -1, -1, -1}}));
  auto y = y_multiplicities(rep);
  REQUIRE(y.size() == 1);
  CHECK(y[{1, 1, 1, 1, 1, -1}] == 1);
}

TEST_CASE("dihedral-times-center instance is unacceptable at every central sign") {
  ClosedGroup g(d8mu2_instance());
  Acceptability acc(g);
  const auto& rep = acc.report();
  CHECK_FALSE(rep.acceptable);
  CHECK(sign_vectors(rep.x_set) ==
        sorted({{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}}));
  CHECK(sign_vectors(rep.e_set) ==
        sorted({{1, 1, -1}, {-1, 1, -1}, {1, -1, -1}, {-1, -1, -1}}));
  auto y = y_multiplicities(rep);
  REQUIRE(y.size() == 3);
  CHECK(y[{-1, 1, 1}] == 1);
  CHECK(y[{1, -1, 1}] == 1);
  CHECK(y[{-1, -1, 1}] == 1);
  verify_acceptability(g, rep);
}

TEST_CASE("irreducible signed-cycle instance is acceptable, regular, and has no even split") {
  ClosedGroup g(signed_cycle_instance());
  Acceptability acc(g);
  const auto& rep = acc.report();
  CHECK(rep.acceptable);
  CHECK(rep.x_set.size() == 1);
  CHECK(rep.discrete);
  CHECK(rep.stable);
  REQUIRE(acc.modrep().constituents().size() == 1);
  CHECK(acc.modrep().constituents()[0].dim == 7);
  verify_acceptability(g, rep);
}

TEST_CASE("identity padding preserves the verdict and the obstruction subgroup") {
  ClosedGroup g(standard_embed(example1_instance(), 9));
  Acceptability acc(g);
  const auto& rep = acc.report();
  CHECK_FALSE(rep.acceptable);
  CHECK(sign_vectors(rep.x_set) == sorted({{1, 1}, {-1, -1}}));
  CHECK(sign_vectors(rep.e_set) == sorted({{-1, 1}, {1, -1}}));
  auto y = y_multiplicities(rep);
  CHECK(y[{1, 1}] == 3);  // the two new fixed coordinates join the invariant line
  CHECK(y[{-1, -1}] == 2);

  ClosedGroup t(standard_embed(trivial_instance(7), 9));
  Acceptability tacc(t);
  CHECK(tacc.report().acceptable);
}

TEST_CASE("all three obstruction routes agree on representative instances") {
  for (const char* spec : {"example1", "gcal:4", "h3:4", "d8mu2", "signed_cycle", "hcal:3"}) {
    INFO(spec);
    ClosedGroup g(parse_instance(spec));
    U1Context ctx(g);
    for (const auto& eta : g.mu2_characters()) {
      bool a = ctx.route_eigen(eta);
      bool b = ctx.route_exterior(eta);
      bool c = ctx.route_spin(eta);
      CHECK(a == b);
      CHECK(b == c);
    }
  }
}

TEST_CASE("tampered reports are rejected by the verifier") {
  ClosedGroup g(example1_instance());
  Acceptability acc(g);
  AcceptabilityReport rep = acc.report();

  SECTION("flipping a verdict") {
    rep.verdicts[1].u1 = !rep.verdicts[1].u1;
    if (rep.verdicts[1].u1) rep.verdicts[1].failure.reset();
    CHECK_THROWS_AS(verify_acceptability(g, rep), certificate_error);
  }
  SECTION("dropping a line witness") {
    REQUIRE_FALSE(rep.y_set.empty());
    rep.y_set[0].witness.assign(rep.y_set[0].witness.size(), CycNum(0));
    CHECK_THROWS_AS(verify_acceptability(g, rep), certificate_error);
  }
  SECTION("inflating the obstruction subgroup") {
    rep.x_set.push_back(rep.e_set[0]);
    CHECK_THROWS_AS(verify_acceptability(g, rep), certificate_error);
  }
  SECTION("shrinking the unacceptable set") {
    rep.e_set.pop_back();
    CHECK_THROWS_AS(verify_acceptability(g, rep), certificate_error);
  }
}

TEST_CASE("acceptable small-dimension instances stay acceptable") {
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    GroupInstance inst = random_small_n(3, 7, idx);
    ClosedGroup g(inst);
    Acceptability acc(g);
    INFO(inst.name << " order " << g.size());
    CHECK(acc.report().acceptable);
  }
}
