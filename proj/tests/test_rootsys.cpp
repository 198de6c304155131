#include <doctest.h>

#include <algorithm>
#include <set>

#include "flagorient/parse.hpp"
#include "flagorient/rootsys.hpp"
#include "oracle.hpp"

using namespace flagorient;

namespace {

RootSystem make(std::string const &token) {
  return build_root_system(parse_type_token(token));
}

std::vector<std::pair<Family, int>> small_systems() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
          {Family::B, 2}, {Family::B, 3}, {Family::B, 4},
          {Family::C, 3}, {Family::C, 4},
          {Family::D, 4}, {Family::D, 5},
          {Family::G, 2}, {Family::F, 4},
          {Family::BC, 1}, {Family::BC, 2}, {Family::BC, 3}};
}

long long expected_count(Family f, int l) {
  switch (f) {
    case Family::A: return 1LL * l * (l + 1) / 2;
    case Family::B:
    case Family::C: return 1LL * l * l;
    case Family::D: return 1LL * l * (l - 1);
    case Family::G: return 6;
    case Family::F: return 24;
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::BC: return 1LL * l * l + l;
  }
  return -1;
}

}  // namespace

TEST_CASE("positive root counts match the closed forms for all ranks <= 8") {
  std::vector<std::pair<Family, int>> all;
  for (int l = 1; l <= 8; ++l) all.push_back({Family::A, l});
  for (int l = 2; l <= 8; ++l) all.push_back({Family::B, l});
  for (int l = 3; l <= 8; ++l) all.push_back({Family::C, l});
  for (int l = 4; l <= 8; ++l) all.push_back({Family::D, l});
  for (int l = 1; l <= 8; ++l) all.push_back({Family::BC, l});
  all.push_back({Family::G, 2});
  all.push_back({Family::F, 4});
  all.push_back({Family::E, 6});
  all.push_back({Family::E, 7});
  all.push_back({Family::E, 8});
  for (auto [f, l] : all) {
    RootSystemSpec spec;
    spec.family = f;
    spec.rank = l;
    auto rs = build_root_system(spec);
    CAPTURE(rs.type_token());
    CHECK(static_cast<long long>(rs.positive_roots.size()) == expected_count(f, l));
  }
}

TEST_CASE("root sets agree with the reflection-orbit oracle") {
  std::vector<std::pair<Family, int>> systems = small_systems();
  systems.push_back({Family::E, 6});
  systems.push_back({Family::E, 7});
  systems.push_back({Family::E, 8});
  for (auto [f, l] : systems) {
    RootSystemSpec spec;
    spec.family = f;
    spec.rank = l;
    auto rs = build_root_system(spec);
    CAPTURE(rs.type_token());
    std::set<std::vector<int>> got;
    for (auto const &r : rs.positive_roots) got.insert(r.coeffs);
    CHECK(got == oracle::positive_roots(f, l));
  }
}

TEST_CASE("Cartan matrix invariants and root ordering") {
  for (auto [f, l] : small_systems()) {
    RootSystemSpec spec;
    spec.family = f;
    spec.rank = l;
    auto rs = build_root_system(spec);
    CAPTURE(rs.type_token());
    for (int i = 0; i < l; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      for (int j = 0; j < l; ++j) {
        if (i == j) continue;
        CHECK(rs.cartan[i][j] <= 0);
        CHECK((rs.cartan[i][j] == 0) == (rs.cartan[j][i] == 0));
      }
    }
    // height-then-lex: the first l roots are the simple roots, lex ascending
    for (int i = 0; i < l; ++i) {
      std::vector<int> e(l, 0);
      e[l - 1 - i] = 1;
      CHECK(rs.positive_roots[i].coeffs == e);
    }
  }
}

TEST_CASE("trivial and derived build examples") {
  auto a1 = make("A1");
  CHECK(a1.positive_roots.size() == 1);
  CHECK(a1.positive_roots[0].coeffs == std::vector<int>{1});
  CHECK(a1.positive_roots[0].mult == 1);

  CHECK(make("G2").positive_roots.size() == 6);

  auto b3c = make("B3:complex");
  CHECK(b3c.positive_roots.size() == 9);
  for (auto const &r : b3c.positive_roots) CHECK(r.mult == 2);

  auto bc2 = make("BC2");
  CHECK(bc2.positive_roots.size() == 6);
  CHECK_FALSE(bc2.reduced);
  std::set<std::vector<int>> coeffs;
  for (auto const &r : bc2.positive_roots) coeffs.insert(r.coeffs);
  CHECK(coeffs.count({2, 2}));  // 2 lambda_1
  CHECK(coeffs.count({0, 2}));  // 2 lambda_2

  CHECK_THROWS_AS(make("D3"), std::invalid_argument);
  CHECK_THROWS_AS(make("E5"), std::invalid_argument);
  CHECK_THROWS_AS(make("G3"), std::invalid_argument);
}

TEST_CASE("custom multiplicities attach to length classes") {
  auto bc2 = make("BC2:mult=4,6,3");
  // BC2 length classes: short lambda_i, long lambda_i +- lambda_j, double 2 lambda_i
  std::map<std::vector<int>, int> mult;
  for (auto const &r : bc2.positive_roots) mult[r.coeffs] = r.mult;
  CHECK(mult[{0, 1}] == 4);   // lambda_2, short
  CHECK(mult[{1, 1}] == 4);   // lambda_1, short
  CHECK(mult[{1, 0}] == 6);   // lambda_1 - lambda_2, long
  CHECK(mult[{1, 2}] == 6);   // lambda_1 + lambda_2, long
  CHECK(mult[{0, 2}] == 3);   // 2 lambda_2
  CHECK(mult[{2, 2}] == 3);   // 2 lambda_1

  // missing double-of-short class for BC must be rejected
  CHECK_THROWS_AS(make("BC2:mult=4,6"), std::invalid_argument);
  // simply-laced systems only use the "long" class
  auto a2 = make("A2:mult=7,5");
  for (auto const &r : a2.positive_roots) CHECK(r.mult == 5);
}

TEST_CASE("cartan_integer: paper values and integrality") {
  auto g2 = make("G2");
  CHECK(cartan_integer(g2, g2.simple_root(1), g2.simple_root(2)) == -1);
  CHECK(cartan_integer(g2, g2.simple_root(2), g2.simple_root(1)) == -3);

  auto a2 = make("A2");
  CHECK(cartan_integer(a2, a2.simple_root(1), a2.make_root({1, 1})) == 1);

  for (auto [f, l] : small_systems()) {
    RootSystemSpec spec;
    spec.family = f;
    spec.rank = l;
    auto rs = build_root_system(spec);
    for (auto const &a : rs.positive_roots) {
      CHECK(cartan_integer(rs, a, a) == 2);
      for (auto const &b : rs.positive_roots)
        CHECK_NOTHROW(cartan_integer(rs, a, b));  // asserts integrality inside
    }
  }

  Root fake;
  fake.coeffs = {3, 1};  // not a G2 root
  CHECK_THROWS_AS(cartan_integer(g2, fake, g2.simple_root(1)), std::invalid_argument);
}

TEST_CASE("reflect: examples and involutivity") {
  auto a2 = make("A2");
  CHECK(reflect(a2, 1, a2.simple_root(1)).coeffs == std::vector<int>{-1, 0});
  CHECK(reflect(a2, 1, a2.simple_root(2)).coeffs == std::vector<int>{1, 1});

  for (auto [f, l] : small_systems()) {
    RootSystemSpec spec;
    spec.family = f;
    spec.rank = l;
    auto rs = build_root_system(spec);
    CAPTURE(rs.type_token());
    for (auto const &b : rs.positive_roots)
      for (int i = 1; i <= l; ++i) {
        auto once = reflect(rs, i, b);
        CHECK(rs.is_root(once.coeffs));
        CHECK(reflect(rs, i, once).coeffs == b.coeffs);
        CHECK(once.mult == b.mult);  // reflections preserve multiplicity
      }
  }
}

TEST_CASE("weyl_apply composes right-to-left") {
  auto a2 = make("A2");
  CHECK(weyl_apply(a2, WeylWord{}, a2.simple_root(1)).coeffs == std::vector<int>{1, 0});
  // (1,2) on alpha_1: s_1(s_2(alpha_1)) = s_1(alpha_1+alpha_2) = alpha_2
  CHECK(weyl_apply(a2, WeylWord{{1, 2}}, a2.simple_root(1)).coeffs ==
        std::vector<int>{0, 1});
  WeylWord w{{1, 2, 1, 2}};
  for (auto const &b : a2.positive_roots) {
    auto there = weyl_apply(a2, w, b);
    CHECK(weyl_apply(a2, w.reversed(), there).coeffs == b.coeffs);
  }
}

TEST_CASE("weyl_enumerate: orders, reduced words, signed permutations") {
  std::vector<std::pair<std::string, unsigned long long>> expect{
      {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"D4", 192},
      {"BC2", 8}, {"F4", 1152}};
  for (auto const &[tok, order] : expect) {
    auto rs = make(tok);
    CAPTURE(tok);
    auto ws = weyl_enumerate(rs, 1000000);
    CHECK(ws.size() == order);
    CHECK(ws[0].word.letters.empty());  // identity first

    std::set<std::vector<int>> perms;
    for (auto const &e : ws) {
      // signed permutation is a bijection on root indices
      std::set<int> images;
      for (int p : e.signed_perm) {
        CHECK(p != 0);
        images.insert(std::abs(p));
        // multiplicity is Weyl-invariant
        CHECK(rs.positive_roots[std::abs(p) - 1].mult > 0);
      }
      CHECK(images.size() == rs.positive_roots.size());
      perms.insert(e.signed_perm);
      // the stored word reproduces the matrix
      auto rebuilt = weyl_element_from_word(rs, e.word);
      CHECK(rebuilt.mat == e.mat);
    }
    CHECK(perms.size() == order);  // all distinct as root permutations
  }

  for (auto const &[tok, order] : expect) {
    auto rs = make(tok);
    auto ws = weyl_enumerate(rs, 1000000);
    for (size_t i = 0; i < ws.size(); i += 7) {
      for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        int p = ws[i].signed_perm[r];
        CHECK(rs.positive_roots[std::abs(p) - 1].mult == rs.positive_roots[r].mult);
      }
    }
  }
}

TEST_CASE("weyl_enumerate guard names the required bound") {
  auto g2 = make("G2");
  CHECK_THROWS_AS(weyl_enumerate(g2, 11), WeylLimitError);
  try {
    weyl_enumerate(g2, 11);
  } catch (WeylLimitError const &e) {
    CHECK(e.order == 12);
    CHECK(std::string(e.what()).find("12") != std::string::npos);
  }
  CHECK(weyl_order(Family::E, 7) == 2903040ULL);
  CHECK(weyl_order(Family::E, 8) == 696729600ULL);
  auto e7 = make("E7");
  CHECK_THROWS_AS(weyl_enumerate(e7, 1000000), WeylLimitError);  // default desk guard
}

TEST_CASE("longest_element inverts every positive root") {
  CHECK(longest_element(make("A1")).letters == std::vector<int>{1});

  auto a2 = make("A2");
  auto w0 = longest_element(a2);
  CHECK(w0.letters.size() == 3);

  auto b2 = make("B2");
  auto wb = longest_element(b2);
  CHECK(wb.letters.size() == 4);
  for (auto const &b : b2.positive_roots) {
    auto img = weyl_apply(b2, wb, b);
    std::vector<int> neg(b.coeffs);
    for (auto &x : neg) x = -x;
    CHECK(img.coeffs == neg);  // w- = -1 for B2
  }

  for (auto [f, l] : small_systems()) {
    RootSystemSpec spec;
    spec.family = f;
    spec.rank = l;
    auto rs = build_root_system(spec);
    CAPTURE(rs.type_token());
    auto w = longest_element(rs);
    CHECK(w.letters.size() == rs.positive_roots.size() -
                                  (rs.reduced ? 0 : rs.rank));  // l(w-) = |reduced Pi+|
    for (auto const &b : rs.positive_roots) {
      auto img = weyl_apply(rs, w, b);
      bool negative = true;
      for (int x : img.coeffs) negative = negative && x <= 0;
      CHECK(negative);
    }
  }
}

TEST_CASE("span_subset") {
  auto a3 = make("A3");
  CHECK(span_subset(a3, ParabolicSubset{}).empty());
  CHECK(span_subset(a3, ParabolicSubset{{1, 2, 3}}).size() == a3.positive_roots.size());
  auto two = span_subset(a3, ParabolicSubset{{1, 3}});
  REQUIRE(two.size() == 2);
  CHECK(two[0].coeffs == std::vector<int>{0, 0, 1});
  CHECK(two[1].coeffs == std::vector<int>{1, 0, 0});
  CHECK_THROWS_AS(span_subset(a3, ParabolicSubset{{4}}), std::invalid_argument);
}

TEST_CASE("type token grammar") {
  auto s = parse_type_token("BC3:complex");
  CHECK(s.family == Family::BC);
  CHECK(s.rank == 3);
  CHECK(s.preset == MultPreset::Complex);

  auto m = parse_type_token("B2:mult=2,3");
  CHECK(m.preset == MultPreset::Custom);
  CHECK(m.custom_mult.at(LengthClass::Short) == 2);
  CHECK(m.custom_mult.at(LengthClass::Long) == 3);

  CHECK_THROWS_AS(parse_type_token("H4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_token("B"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_token("B2:weird"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_token("B2:mult=1"), std::invalid_argument);
}
