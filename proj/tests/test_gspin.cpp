#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "spinacc/constructions.hpp"
#include "spinacc/gspin.hpp"

using namespace spinacc;

namespace {

// direct closure of tagged generators, by exact products and a linear scan
std::vector<GSpinElement> brute_closure(const ClosedGroup& g, const std::vector<long>& tag) {
  std::vector<GSpinElement> gens;
  for (long i = 0; i < g.num_gens(); ++i)
    gens.emplace_back(root_of_unity(g.M(), tag[static_cast<std::size_t>(i)]),
                      g.lift(g.gen_index(i)));
  std::vector<GSpinElement> els{GSpinElement(CycNum(1), Clif::one(g.n()))};
  std::size_t head = 0;
  while (head < els.size()) {
    GSpinElement cur = els[head++];
    for (const auto& x : gens) {
      GSpinElement next = cur * x;
      bool found = false;
      for (const auto& e : els)
        if (e == next) {
          found = true;
          break;
        }
      if (!found) els.push_back(next);
    }
  }
  return els;
}

}  // namespace

TEST_CASE("scalar-spin pairs have a canonical representative") {
  long n = 7, M = 8;
  CycNum i4 = root_of_unity(M, M / 4);
  Clif e0 = Clif::basis_vector(n, 0);
  GSpinElement a(i4, e0);
  GSpinElement b(-i4, -e0);
  CHECK(a == b);

  GSpinElement one(CycNum(1), Clif::one(n));
  CHECK(a * a.inverse() == one);
  CHECK(a * a == GSpinElement(CycNum(-1), Clif::one(n)));
}

TEST_CASE("scalar characters match the dedicated sign and fourth-root enumerations") {
  for (const char* spec : {"example1", "gcal:4", "d8mu2", "h3:4"}) {
    INFO(spec);
    ClosedGroup g(parse_instance(spec));
    CHECK(scalar_characters(g, 2).size() == g.mu2_characters().size());
    CHECK(scalar_characters(g, 4).size() == g.mu4_characters().size());
  }
}

TEST_CASE("index-encoded covers agree with direct closures in the extended group") {
  for (const char* spec : {"example1", "d8mu2"}) {
    INFO(spec);
    ClosedGroup g(parse_instance(spec));
    GSpinCover cb(g);
    std::vector<std::vector<long>> tags;
    tags.emplace_back(static_cast<std::size_t>(g.num_gens()), 0L);
    for (auto& t : sample_scalar_twists(g, 3, 19)) tags.push_back(std::move(t));
    std::vector<long> adhoc(static_cast<std::size_t>(g.num_gens()), 0L);
    adhoc[0] = g.M() / 4;
    tags.push_back(adhoc);
    for (const auto& tag : tags) {
      GammaRData d = cb.build(tag);
      CHECK(d.two_to_one);
      CHECK(d.cover_order == 2 * d.image_order);
      CHECK(static_cast<long>(brute_closure(g, tag).size()) == d.image_order);
    }
  }
}

TEST_CASE("a quarter-turn scalar on one generator lands the scalar image in mu4") {
  ClosedGroup g(example1_instance());
  GSpinCover cb(g);
  std::vector<long> tag(static_cast<std::size_t>(g.num_gens()), 0L);
  tag[0] = g.M() / 4;
  GammaRData d = cb.build(tag);
  CHECK(d.two_to_one);
  CHECK(d.scalar_image_order == 4);
}

TEST_CASE("scalar-free covers project the scalars onto a sign") {
  ClosedGroup g(example1_instance());
  GSpinCover cb(g);
  GammaRData d = cb.build({0, 0});
  CHECK(d.two_to_one);
  CHECK(d.scalar_image_order == 2);
}

TEST_CASE("scalar twists never move the verdict") {
  struct Row {
    const char* spec;
    bool acceptable;
  };
  for (const Row& row : {Row{"example1", false}, Row{"h1:4", true}, Row{"gcal:4", false}}) {
    INFO(row.spec);
    ClosedGroup g(parse_instance(row.spec));
    GSpinEngine eng(g);
    std::vector<long> zeros(static_cast<std::size_t>(g.num_gens()), 0L);
    GSpinVerdict v0 = eng.run(zeros);
    CHECK(v0.spin_acceptable == row.acceptable);
    CHECK(v0.gspin_acceptable == row.acceptable);
    for (const auto& tag : sample_scalar_twists(g, 6, 123)) {
      GSpinVerdict v = eng.run(tag);
      CHECK(v.cover.two_to_one);
      CHECK(v.gspin_acceptable == v.spin_acceptable);
    }
  }
}

TEST_CASE("twist sampling is deterministic in the seed") {
  ClosedGroup g(gcal_instance(4));
  auto a = sample_scalar_twists(g, 10, 7);
  auto b = sample_scalar_twists(g, 10, 7);
  CHECK(a == b);
  CHECK(a.size() == 10);
}
