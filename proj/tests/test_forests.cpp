#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "rrp/forests.hpp"

using namespace rrp;

namespace {

const BphzMember* find_member(const std::vector<BphzMember>& ms, std::vector<int> verts) {
  for (const auto& m : ms)
    if (m.verts == verts) return &m;
  return nullptr;
}

const ForestTerm* find_term(const AmplitudeExpression& e,
                            std::vector<std::vector<int>> forest_verts) {
  for (const auto& t : e.terms) {
    std::vector<std::vector<int>> got;
    for (int mi : t.members) got.push_back(e.members[mi].verts);
    std::sort(got.begin(), got.end());
    std::sort(forest_verts.begin(), forest_verts.end());
    if (got == forest_verts) return &t;
  }
  return nullptr;
}

MomentumForm arg_of(const ForestTerm& t, LineId line) {
  for (const auto& f : t.factors)
    if (f.line == line) return f.arg;
  FAIL("factor not found");
  return {};
}

}  // namespace

TEST_CASE("divergent member family of the published example") {
  auto d = fixtures::example_half();
  auto ms = divergent_members(d);

  // {2,3}: subtract at zeta2 = 0
  auto* n1 = find_member(ms, {1, 2});
  REQUIRE(n1);
  CHECK(n1->zeroed == std::vector<int>{1});

  // {1,4} with the root leg inside: subtract at zeta2 = 0 only
  auto* n2 = find_member(ms, {0, 3});
  REQUIRE(n2);
  CHECK(n2->zeroed == std::vector<int>{1});

  // the four-vertex line set without the root leg: subtract at zeta1 = 0
  auto* gc = find_member(ms, {0, 1, 2, 3});
  REQUIRE(gc);
  CHECK(gc->zeroed == std::vector<int>{0});

  // singleton leaves die (their xi is forced to zero), singleton root stays
  CHECK(find_member(ms, {1}) == nullptr);
  CHECK(find_member(ms, {2}) == nullptr);
  CHECK(find_member(ms, {3}) == nullptr);
  REQUIRE(find_member(ms, {0}));
  CHECK(ms.size() == 7);
}

TEST_CASE("published subtractions of example 1") {
  auto d = fixtures::example_half();
  auto e = bphz_renormalize(d);

  // base term: |xi1| arg = zeta1 - zeta2 - zeta4 (0-based: z0 - z1 - z3)
  auto* base = find_term(e, {});
  REQUIRE(base);
  CHECK(base->sign == 1);
  MomentumForm xi1{{0, Rational(1)}, {1, Rational(-1)}, {3, Rational(-1)}};
  CHECK(arg_of(*base, {LineId::PhiLeg, 0}) == xi1);

  // tau_{2,3}: |zeta2 - zeta3| -> |zeta3|
  auto* t23 = find_term(e, {{1, 2}});
  REQUIRE(t23);
  CHECK(t23->sign == -1);
  CHECK(arg_of(*t23, {LineId::PhiLeg, 1}) == MomentumForm{{2, Rational(-1)}});
  CHECK(arg_of(*t23, {LineId::PhiLeg, 0}) == xi1);  // untouched

  // tau_{1,4}: |zeta1 - zeta2 - zeta4| -> |zeta1 - zeta4|
  auto* t14 = find_term(e, {{0, 3}});
  REQUIRE(t14);
  CHECK(arg_of(*t14, {LineId::PhiLeg, 0}) ==
        MomentumForm{{0, Rational(1)}, {3, Rational(-1)}});

  // tau_{full}: -> |zeta2 + zeta4|
  auto* tc = find_term(e, {{0, 1, 2, 3}});
  REQUIRE(tc);
  CHECK(arg_of(*tc, {LineId::PhiLeg, 0}) ==
        MomentumForm{{1, Rational(-1)}, {3, Rational(-1)}});

  // the double subtraction: -> |zeta4|, sign +
  auto* tdouble = find_term(e, {{0, 3}, {0, 1, 2, 3}});
  REQUIRE(tdouble);
  CHECK(tdouble->sign == 1);
  CHECK(arg_of(*tdouble, {LineId::PhiLeg, 0}) == MomentumForm{{3, Rational(-1)}});

  // sigma-line factors are never rewritten
  for (const auto& t : e.terms)
    for (const auto& f : t.factors)
      if (f.kind == Factor::InvZeta) CHECK(f.arg.size() == 1);
}

TEST_CASE("forest enumeration matches a brute-force oracle") {
  for (const HalfDiagram& d : {fixtures::example_half(), fixtures::contracted_half()}) {
    auto ms = divergent_members(d);
    auto forests = enumerate_forests(ms);

    // oracle: filter all subsets by pairwise compatibility
    REQUIRE(ms.size() < 20);
    std::size_t count = 0;
    for (unsigned long mask = 0; mask < (1UL << ms.size()); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < ms.size() && ok; ++i)
        for (std::size_t j = i + 1; j < ms.size() && ok; ++j)
          if ((mask >> i & 1) && (mask >> j & 1) && !members_compatible(ms[i], ms[j]))
            ok = false;
      count += ok;
    }
    CHECK(forests.size() == count);
    CHECK(enumerate_divergent_forests(d).size() == count);
  }
}

TEST_CASE("term count is 2^members exactly when members are pairwise compatible") {
  auto d = fixtures::example_half();
  auto ms = divergent_members(d);
  bool all_compatible = true;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      all_compatible = all_compatible && members_compatible(ms[i], ms[j]);
  CHECK(!all_compatible);  // {1} and {1,4}-style members overlap
  CHECK(bphz_renormalize(d).terms.size() < (1u << ms.size()));

  // a single uncontracted vertex has no surviving divergent subgraph at
  // all: the forest formula is the identity
  auto single = build_half_diagram(HeapForest{{-1}}, {});
  CHECK(divergent_members(single).empty());
  CHECK(bphz_renormalize(single).terms.size() == 1);
  CHECK(bphz_renormalize(single).terms[0].sign == 1);
}

TEST_CASE("contractions restrict the member family") {
  auto d = fixtures::contracted_half();
  for (const auto& m : divergent_members(d)) {
    // no member may cut a contraction pair
    std::vector<char> in(d.n(), 0);
    for (int v : m.verts) in[v] = 1;
    for (const auto& [a, b] : d.contractions) CHECK(in[a] == in[b]);
  }
}
