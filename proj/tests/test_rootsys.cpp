#include <algorithm>
#include <set>

#include "d4cr/rootsys.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace d4cr;
using testsupport::dot;
using testsupport::euclid;

namespace {

Coweight cw(int a, int b, int c, int d) { return Coweight(Vec4{a, b, c, d}); }

// every element of W x| <sigma>, by closure under the generators
std::vector<TwistedAction> twisted_group(bool with_sigma) {
  std::vector<TwistedAction> gens;
  for (const Root& s : simple_roots()) gens.push_back(TwistedAction::reflection(s));
  if (with_sigma) gens.push_back(TwistedAction::sigma());
  std::vector<TwistedAction> elems{TwistedAction{}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      TwistedAction h = elems[i] * g;
      if (std::find(elems.begin(), elems.end(), h) == elems.end()) elems.push_back(h);
    }
  return elems;
}

}  // namespace

TEST_CASE("root labels follow the table") {
  CHECK(Root::from_label(1).coords() == Vec4{1, 0, 0, 0});
  CHECK(Root::from_label(2).coords() == Vec4{0, 0, 1, 0});
  CHECK(Root::from_label(3).coords() == Vec4{0, 0, 0, 1});
  CHECK(Root::from_label(4).coords() == Vec4{0, 1, 0, 0});
  CHECK(Root::from_label(6).coords() == Vec4{0, 1, 1, 0});
  CHECK(Root::from_label(7).coords() == Vec4{0, 1, 0, 1});
  CHECK(Root::from_label(11).coords() == Vec4{1, 1, 1, 1});
  CHECK(Root::from_label(12).coords() == Vec4{1, 2, 1, 1});
  CHECK((-Root::from_label(12)).label() == -12);
  CHECK_THROWS_AS(Root::from_label(0), RootSystemError);
  CHECK_THROWS_AS(Root::from_label(13), RootSystemError);
  CHECK_THROWS_AS(Root::from_coords(Vec4{1, 0, 1, 0}), RootSystemError);
}

TEST_CASE("roots agree with the Euclidean model") {
  auto roots = all_roots();
  REQUIRE(roots.size() == 24);
  std::set<std::array<int, 4>> seen;
  for (const Root& z : roots) {
    auto v = euclid(z.coords());
    CHECK(dot(v, v) == 2);
    CHECK(testsupport::is_euclid_root(v));
    seen.insert(v);
  }
  CHECK(seen.size() == 24);
  CHECK(positive_roots().size() == 12);
  for (const Root& z : positive_roots()) CHECK(z.is_positive());
  CHECK(std::is_sorted(positive_roots().begin(), positive_roots().end(),
                       [](const Root& x, const Root& y) { return x.height() < y.height(); }));
}

TEST_CASE("pairing, sums and reflections against the Euclidean oracle") {
  for (const Root& z : all_roots()) {
    for (const Root& y : all_roots()) {
      auto ez = euclid(z.coords()), ey = euclid(y.coords());
      CHECK(pairing(z, y.coroot()) == dot(ez, ey));
      auto sum = root_sum(z, y);
      CHECK(sum.has_value() == testsupport::is_euclid_root(testsupport::add(ez, ey)));
      if (sum) CHECK(euclid(sum->coords()) == testsupport::add(ez, ey));
      Root ry = reflect(z, y);
      auto expect = ey;
      int d = dot(ez, ey);
      for (int i = 0; i < 4; ++i) expect[i] -= d * ez[i];
      CHECK(euclid(ry.coords()) == expect);
    }
  }
}

TEST_CASE("cartan matrix is the Gram matrix of the simple roots") {
  const auto& a = cartan_matrix();
  auto simple = simple_roots();
  REQUIRE(simple.size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(a[i][j] == dot(euclid(simple[i].coords()), euclid(simple[j].coords())));
}

TEST_CASE("triality permutes the outer nodes and preserves pairings") {
  CHECK(sigma_act(Root::alpha()) == Root::gamma());
  CHECK(sigma_act(Root::gamma()) == Root::delta());
  CHECK(sigma_act(Root::delta()) == Root::alpha());
  CHECK(sigma_act(Root::beta()) == Root::beta());
  CHECK(sigma_act(Root::from_label(6)) == Root::from_label(7));
  for (const Root& z : all_roots()) {
    CHECK(sigma_act(sigma_act(sigma_act(z))) == z);
    for (const Root& y : all_roots())
      CHECK(pairing(sigma_act(z), sigma_act(y).coroot()) == pairing(z, y.coroot()));
  }
  CHECK(sigma_act(cw(1, 0, 1, 0)) == cw(0, 0, 1, 1));
}

TEST_CASE("twisted Weyl group has the expected order") {
  CHECK(twisted_group(false).size() == 192);
  CHECK(twisted_group(true).size() == 576);
}

TEST_CASE("reduced words rebuild their element and have minimal length") {
  for (const TwistedAction& w : twisted_group(false)) {
    auto word = w.reduced_word();
    CHECK(static_cast<int>(word.size()) == w.weyl_length());
    TwistedAction rebuilt;
    for (const Root& s : word) rebuilt = rebuilt * TwistedAction::reflection(s);
    CHECK(rebuilt == w);
  }
}

TEST_CASE("longest word acts as -1") {
  TwistedAction w0 = longest_word().action();
  CHECK(longest_word().gens.size() == 12);
  CHECK(w0.weyl_length() == 12);
  for (const Root& z : all_roots()) CHECK(w0.apply(z) == -z);
  CHECK(word_act(longest_word(), Root::from_label(11)).label() == -11);
  CHECK(word_act(longest_word(), Root::from_label(2)).label() == -2);
}

TEST_CASE("parabolic partition for lambda") {
  Coweight lam = highest_coroot();
  CHECK(lam == cw(1, 2, 1, 1));
  for (const Root& z : all_roots()) CHECK(pairing(z, lam) == z.coords()[1]);
  auto part = parabolic_partition(lam);
  CHECK(part.levi == std::vector<int>{-3, -2, -1, 1, 2, 3});
  CHECK(part.radical == std::vector<int>{4, 5, 6, 7, 8, 9, 10, 11, 12});
  CHECK(part.opposite == std::vector<int>{-12, -11, -10, -9, -8, -7, -6, -5, -4});
  auto table = root_table(lam);
  REQUIRE(table.size() == 12);
  CHECK(table.back().label == 12);
  CHECK(table.back().pairing == 2);
}

TEST_CASE("n_alpha sigma on the radical") {
  TwistedAction w = TwistedAction::reflection(Root::alpha()) * TwistedAction::sigma();
  Coweight lam = highest_coroot();
  CHECK(radical_permutation(w, lam).to_string() == "(4 5 8 11 10 7)(6 9)(12)");
  TwistedWeylWord word{{TwistedGenerator::s(Root::alpha()), TwistedGenerator::sigma()}};
  CHECK(radical_permutation(word, lam) == radical_permutation(w, lam));
  CHECK(radical_permutation(TwistedAction{}, lam).to_string() ==
        "(4)(5)(6)(7)(8)(9)(10)(11)(12)");
  CHECK_THROWS_AS(radical_permutation(TwistedAction::reflection(Root::beta()), lam), NotStable);
  CHECK(w.apply(cw(1, 0, 1, 0)) == cw(0, 0, 1, 1));
}

TEST_CASE("fixed cocharacters") {
  TwistedAction w = TwistedAction::reflection(Root::alpha()) * TwistedAction::sigma();
  CHECK(fixed_cocharacters(w) == std::vector<Coweight>{highest_coroot()});
  CHECK(fixed_cocharacters(TwistedAction{}).size() == 4);
  CHECK(fixed_cocharacters(longest_word().action()).empty());
  auto sig = fixed_cocharacters(TwistedAction::sigma());
  REQUIRE(sig.size() == 2);
  for (const Coweight& mu : sig) CHECK(sigma_act(mu) == mu);
  // every fixed vector of a random element is fixed, and the basis is a lattice basis of the kernel
  for (const TwistedAction& g : twisted_group(true)) {
    for (const Coweight& mu : fixed_cocharacters(g)) CHECK(g.apply(mu) == mu);
  }
}
