#include <catch_amalgamated.hpp>

#include <set>

#include "munn/elements.hpp"
#include "munn/monoid.hpp"

using namespace munn;

namespace {
  // Every partial bijection of [n], built directly from injective partial
  // image assignments.
  std::vector<PartialBijection> all_partial_bijections(std::size_t n) {
    std::vector<PartialBijection> out;
    std::vector<point_t>          images(n, kUndefined);
    auto rec = [&](auto&& self, std::size_t i, std::vector<bool>& used) -> void {
      if (i == n) {
        out.push_back(PartialBijection::from_images(images));
        return;
      }
      images[i] = kUndefined;
      self(self, i + 1, used);
      for (std::size_t j = 0; j < n; ++j) {
        if (!used[j]) {
          used[j]   = true;
          images[i] = static_cast<point_t>(j);
          self(self, i + 1, used);
          used[j]   = false;
          images[i] = kUndefined;
        }
      }
    };
    std::vector<bool> used(n, false);
    rec(rec, 0, used);
    return out;
  }

  std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }
}  // namespace

TEST_CASE("partial bijection composition", "[elements]") {
  auto s = PartialBijection::from_pairs(3, {{1, 2}});
  auto t = PartialBijection::from_pairs(3, {{0, 1}});
  CHECK(compose(s, t) == PartialBijection::from_pairs(3, {{0, 2}}));

  auto a = PartialBijection::from_pairs(2, {{0, 0}});
  auto b = PartialBijection::from_pairs(2, {{1, 1}});
  CHECK(compose(a, b) == PartialBijection(2));
  CHECK(compose(a, b).rank() == 0);

  auto u = PartialBijection::from_pairs(3, {{0, 1}, {2, 0}});
  CHECK(compose(PartialBijection::identity(3), u) == u);
  CHECK(compose(u, PartialBijection::identity(3)) == u);

  CHECK_THROWS_AS(compose(a, u), std::invalid_argument);
}

TEST_CASE("partial bijection inverse laws and uniqueness in I_3", "[elements]") {
  auto all = all_partial_bijections(3);
  REQUIRE(all.size() == 34);
  for (auto const& s : all) {
    auto si = inverse(s);
    CHECK(compose(compose(s, si), s) == s);
    CHECK(compose(compose(si, s), si) == si);
    CHECK(si.domain() == s.image());
    std::size_t count = 0;
    for (auto const& t : all) {
      if (compose(compose(s, t), s) == s && compose(compose(t, s), t) == t) {
        ++count;
        CHECK(t == si);
      }
    }
    CHECK(count == 1);
  }
  auto x = PartialBijection::partial_identity(3, {0, 2});
  CHECK(inverse(x) == x);
}

TEST_CASE("transformation composition", "[elements]") {
  Transformation s({1, 0, 2}), t({0, 0, 0});
  CHECK(compose(s, t) == Transformation({1, 1, 1}));
  Transformation e({0, 0, 2});
  CHECK(e.is_idempotent());
  CHECK(compose(e, e) == e);
  Transformation u({2, 2, 0});
  CHECK(compose(u, Transformation::identity(3)) == u);
  CHECK(e.kernel() == std::vector<std::vector<point_t>>{{0, 1}, {2}});
  CHECK(e.image() == std::vector<point_t>{0, 2});
}

TEST_CASE("closure orders", "[elements]") {
  SECTION("I_2 from (12) and id_{1}") {
    auto m = closure(
        std::vector{PartialBijection::from_pairs(2, {{0, 1}, {1, 0}}),
                    PartialBijection::partial_identity(2, {0})},
        PartialBijection::identity(2),
        [](auto const& a, auto const& b) { return compose(a, b); },
        [](auto const& a) { return cycle_link_format(a); });
    CHECK(m.size() == 7);
    CHECK(m.size() == all_partial_bijections(2).size());
  }
  SECTION("T_3 from (123), (12), [1,1,2]") {
    auto m = closure(
        std::vector{Transformation({1, 2, 0}),
                    Transformation({1, 0, 2}),
                    Transformation({0, 0, 1})},
        Transformation::identity(3),
        [](auto const& a, auto const& b) { return compose(a, b); },
        [](auto const& a) { return transformation_format(a); });
    CHECK(m.size() == 27);
  }
  SECTION("identity only") {
    auto m = closure(
        std::vector{Permutation::identity(3)},
        Permutation::identity(3),
        [](auto const& a, auto const& b) { return compose(a, b); },
        [](auto const& a) { return permutation_format(a); });
    CHECK(m.size() == 1);
  }
  SECTION("cap") {
    CHECK_THROWS_AS(
        closure(
            symmetric_group_generators(5),
            Permutation::identity(5),
            [](auto const& a, auto const& b) { return compose(a, b); },
            [](auto const& a) { return permutation_format(a); },
            50),
        CapExceeded);
  }
}

TEST_CASE("|I_n| matches direct enumeration and the binomial sum", "[elements]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t formula = 0;
    for (std::size_t m = 0; m <= n; ++m) {
      formula += binomial(n, m) * binomial(n, m) * factorial(m);
    }
    auto direct = all_partial_bijections(n);
    auto in     = symmetric_inverse_monoid(n);
    CHECK(in.size() == formula);
    CHECK(in.size() == direct.size());
    std::sort(direct.begin(), direct.end());
    CHECK(in.elements == direct);
  }
  CHECK(full_transformation_monoid(3).size() == 27);
  CHECK(symmetric_group(4).size() == 24);
}

TEST_CASE("closure is deterministic and validated", "[elements]") {
  auto a = symmetric_inverse_monoid(3);
  auto b = symmetric_inverse_monoid(3);
  CHECK(a.elements == b.elements);
  CHECK(a.monoid->same_structure(*b.monoid));
  CHECK_NOTHROW(a.monoid->validate());
  for (index_t x = 0; x < a.size(); ++x) {
    for (index_t y = 0; y < a.size(); ++y) {
      CHECK(a[a.monoid->multiply(x, y)] == compose(a[x], a[y]));
    }
  }
}

TEST_CASE("serial and parallel table fill agree", "[elements][kernels]") {
  auto t3 = full_transformation_monoid(3);
  // Rebuilding the table through the serial kernel must give the same
  // table as the one stored by closure.
  std::vector<index_t> direct(t3.size() * t3.size());
  for (index_t x = 0; x < t3.size(); ++x) {
    for (index_t y = 0; y < t3.size(); ++y) {
      direct[x * t3.size() + y] = t3.index_of(compose(t3[x], t3[y]));
    }
  }
  CHECK(t3.monoid->table() == direct);
}

TEST_CASE("T_3 is regular", "[elements]") {
  auto t3 = full_transformation_monoid(3);
  for (auto const& s : t3.elements) {
    bool found = false;
    for (auto const& t : t3.elements) {
      if (compose(compose(s, t), s) == s && compose(compose(t, s), t) == t) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("cycle-link notation", "[elements][codec]") {
  CHECK(cycle_link_format(PartialBijection::from_pairs(3, {{0, 1}, {1, 2}}))
        == "[1,2,3]");
  CHECK(cycle_link_format(PartialBijection::from_pairs(4, {{3, 1}})) == "[4,2]");
  CHECK(cycle_link_format(PartialBijection::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}))
        == "(1,2,3)");
  CHECK(cycle_link_format(PartialBijection(3)) == "0");
  CHECK(cycle_link_parse("0", 3) == PartialBijection(3));
  CHECK(cycle_link_parse("(1,3)[4,2]", 4)
        == PartialBijection::from_pairs(4, {{0, 2}, {2, 0}, {3, 1}}));

  for (auto const& s : symmetric_inverse_monoid(3).elements) {
    CHECK(cycle_link_parse(cycle_link_format(s), 3) == s);
  }

  CHECK_THROWS_AS(cycle_link_parse("(1,1)", 3), ParseError);
  CHECK_THROWS_AS(cycle_link_parse("(1,2)[2,3]", 3), ParseError);
  CHECK_THROWS_AS(cycle_link_parse("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(cycle_link_parse("(1,2", 3), ParseError);
  CHECK_THROWS_AS(cycle_link_parse("[1", 3), ParseError);
  CHECK_THROWS_AS(cycle_link_parse("x", 3), ParseError);
}

TEST_CASE("transformation and permutation notation", "[elements][codec]") {
  CHECK(transformation_format(Transformation({0, 0, 2})) == "[1,1,3]");
  CHECK(transformation_parse("[1,1,3]") == Transformation({0, 0, 2}));
  CHECK_THROWS_AS(transformation_parse("[1,4,3]"), ParseError);
  CHECK_THROWS_AS(transformation_parse("1,2"), ParseError);
  for (auto const& p : symmetric_group(4).elements) {
    CHECK(permutation_parse(permutation_format(p), 4) == p);
  }
  CHECK(permutation_parse("(1,2)", 3) == Permutation::transposition(3, 0, 1));
  CHECK(permutation_parse("[2,1,3]", 3) == Permutation::transposition(3, 0, 1));
  CHECK(Permutation::transposition(4, 1, 3).sign() == -1);
  CHECK(Permutation::long_cycle(3).sign() == 1);
}
