#include "doctest.h"

#include <algorithm>

#include "oracle_quadrature.hpp"
#include "rrp/errors.hpp"
#include "rrp/iterated.hpp"
#include "rrp/sector.hpp"
#include "rrp/skeleton.hpp"

using namespace rrp;

namespace {

const PathModel& fixture() {
  static PathModel p = PathModel::generic(2, 2, 7);
  return p;
}

}  // namespace

TEST_CASE("generic fixture passes genericity validation") {
  CHECK_NOTHROW(fixture().validate_genericity(6));
}

TEST_CASE("real path reproduces a real signal and fails sector genericity") {
  auto p = PathModel::real_path(2, 2, 3);
  for (double t : {0.0, 0.3, 0.7})
    CHECK(std::abs(p.gamma(1, t).imag()) < 1e-14);
  CHECK_THROWS_AS(p.validate_genericity(2), TieError);
}

TEST_CASE("split_measure at n = 1 is a single full sector") {
  auto sectors = split_measure(fixture(), Word{1});
  REQUIRE(sectors.size() == 1);
  CHECK(sectors.begin()->second.atoms.size() == 2);
}

TEST_CASE("split_measure partitions the atoms and reconstructs the measure") {
  for (const Word& w : {Word{1, 2}, Word{1, 2, 1}, Word{2, 2}}) {
    auto full = tensor_atoms(fixture(), w);
    auto sectors = split_measure(fixture(), w);
    std::size_t total = 0;
    for (const auto& [sigma, sec] : sectors) {
      total += sec.atoms.size();
      // stored atoms respect the sector ordering
      for (const auto& a : sec.atoms)
        for (std::size_t i = 0; i + 1 < a.freq.size(); ++i)
          CHECK(std::abs(fixture().freq_value(a.freq[i])) <=
                std::abs(fixture().freq_value(a.freq[i + 1])) + 1e-15);
    }
    // diagonal atoms are shared between sectors, all others assigned once
    CHECK(total >= full.size());

    auto back = unsplit(sectors);
    auto key = [](const SpectralAtom& a) { return a.freq; };
    std::sort(back.begin(), back.end(),
              [&](const SpectralAtom& a, const SpectralAtom& b) { return key(a) < key(b); });
    std::sort(full.begin(), full.end(),
              [&](const SpectralAtom& a, const SpectralAtom& b) { return key(a) < key(b); });
    REQUIRE(back.size() == full.size());
    for (std::size_t i = 0; i < full.size(); ++i) {
      CHECK(back[i].freq == full[i].freq);
      CHECK(std::abs(back[i].weight - full[i].weight) < 1e-14);
    }
  }
}

TEST_CASE("sector ties between distinct modes are rejected") {
  // two coordinates sharing the same |omega|
  std::vector<std::vector<Mode>> modes{{{1.5, cplx(1.0, 0.2)}}, {{-1.5, cplx(0.4, 0.0)}}};
  PathModel bad(2, 1.0, std::move(modes));
  CHECK_THROWS_AS(split_measure(bad, Word{1, 2}), TieError);
}

TEST_CASE("exp-poly iterated integrals match nested quadrature") {
  const auto& p = fixture();
  for (const Word& w : {Word{1}, Word{1, 2}, Word{2, 1, 1}}) {
    const int n = (int)w.size();
    cplx via_atoms(0.0, 0.0);
    for (const auto& atom : tensor_atoms(p, w))
      via_atoms += atom.weight * iterated_integral_atom(p, trunk_chain(n), atom.freq, 0.1, 0.9);
    cplx via_quad = oracle::nested_iterated(p, w, 0.1, 0.9);
    CHECK(std::abs(via_atoms - via_quad) < 1e-10);
  }
}

TEST_CASE("skeleton of a single vertex is the path value") {
  const auto& p = fixture();
  for (int i : {1, 2})
    for (double t : {0.2, 0.8})
      CHECK(std::abs(skeleton_word(p, Word{(int)i}, t) - p.gamma(i, t)) < 1e-12);
}

TEST_CASE("skeleton ladder matches the closed-form double antiderivative") {
  // two modes c1 e^{iw1 x1}, c2 e^{iw2 x2}: int^t (i w1 c1) e^{i w1 x1}
  // int^{x1} (i w2 c2) e^{i w2 x2} = c1 c2 w1/(w1+w2) e^{i(w1+w2)t}
  std::vector<std::vector<Mode>> modes{{{1.3, cplx(0.7, -0.1)}}, {{2.9, cplx(-0.3, 0.5)}}};
  PathModel p(2, 1.0, std::move(modes));
  double t = 0.63;
  cplx expect = cplx(0.7, -0.1) * cplx(-0.3, 0.5) * (1.3 / (1.3 + 2.9)) *
                std::exp(cplx(0.0, (1.3 + 2.9) * t));
  CHECK(std::abs(skeleton_word(p, Word{1, 2}, t) - expect) < 1e-12);
}

TEST_CASE("skeleton integrals form a character of the shuffle algebra") {
  const auto& p = fixture();
  double t = 0.42;
  std::vector<std::pair<Word, Word>> pairs{
      {{1}, {2}}, {{1}, {1}}, {{1, 2}, {2}}, {{2, 1}, {1}}};
  for (const auto& [u, v] : pairs) {
    cplx lhs = skeleton_word(p, u, t) * skeleton_word(p, v, t);
    cplx rhs(0.0, 0.0);
    for (const auto& [w, c] : shuffle_product(u, v))
      rhs += c.to_double() * skeleton_word(p, w, t);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("degenerate skeleton denominators are reported") {
  std::vector<std::vector<Mode>> modes{{{1.0, cplx(1.0, 0.0)}}, {{-1.0, cplx(1.0, 0.0)}}};
  PathModel p(2, 1.0, std::move(modes));
  CHECK_THROWS_AS(skeleton_word(p, Word{1, 2}, 0.5), DegenerateDenominator);
}

TEST_CASE("Fourier normal ordering reconstructs trunk integrals, n <= 4") {
  const auto& p = fixture();
  const double s = 0.15, t = 0.85;
  std::vector<Word> words{{1}, {1, 2}, {1, 2, 1}, {1, 2, 2, 1}};
  for (const auto& w : words) {
    const int n = (int)w.size();
    cplx oracle_val = oracle::nested_iterated(p, w, s, t);
    cplx sum(0.0, 0.0);
    for (const auto& [sigma, sec] : split_measure(p, w)) {
      auto pg = permutation_graph(n, sigma);
      for (const auto& atom : sec.atoms)
        for (const auto& [forest, coef] : pg)
          sum += coef.to_double() * atom.weight *
                 iterated_integral_atom(p, forest, atom.freq, s, t);
    }
    CHECK(std::abs(sum - oracle_val) < 1e-8);
  }
}

TEST_CASE("per-sector reordered integrals match sector-restricted quadrature, n = 3") {
  // every permutation graph separately: I_{mu^sigma}(T^sigma) equals the
  // trunk integral of the pushed-back sector measure
  const auto& p = fixture();
  const double s = 0.2, t = 0.75;
  const Word w{1, 2, 1};
  for (const auto& [sigma, sec] : split_measure(p, w)) {
    auto pg = permutation_graph(3, sigma);
    cplx lhs(0.0, 0.0);
    for (const auto& atom : sec.atoms)
      for (const auto& [forest, coef] : pg)
        lhs += coef.to_double() * atom.weight *
               iterated_integral_atom(p, forest, atom.freq, s, t);
    // push the sector measure back and integrate over the trunk domain
    cplx rhs(0.0, 0.0);
    for (const auto& atom : sec.atoms) {
      std::vector<int> orig(3);
      for (int j = 0; j < 3; ++j) orig[sigma[j]] = atom.freq[j];
      rhs += atom.weight * iterated_integral_atom(p, trunk_chain(3), orig, s, t);
    }
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}
