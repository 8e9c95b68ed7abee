#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "tauenum/tau.hpp"

using namespace tauenum;

namespace {

std::vector<std::int64_t> raw(std::initializer_list<std::int64_t> v) {
  return {v};
}

}  // namespace

TEST_CASE("ord follows the orbit to zero") {
  CHECK(ord(TauFunction{0}, 1) == 1);
  CHECK(ord(TauFunction{0, 0, 1, 2}, 4) == 2);
  CHECK(ord(TauFunction{0, 1, 2, 3}, 4) == 4);
  CHECK(ord(TauFunction{0, 1, 2, 3}, 0) == 0);
  CHECK_THROWS_AS(ord(TauFunction{0, 1}, 3), std::domain_error);
}

TEST_CASE("orbit view") {
  const TauFunction tau{0, 0, 1, 2};
  const auto view = orbit(tau, 4);
  CHECK(view.start == 4);
  CHECK(view.chain == std::vector<Level>{4, 2, 0});
  CHECK(view.chain.size() - 1 == tau.ord(4));
}

TEST_CASE("construction enforces tau(n) < n") {
  CHECK_THROWS_AS(TauFunction({1}), std::invalid_argument);
  CHECK_THROWS_AS(TauFunction({0, 2}), std::invalid_argument);
  TauFunction tau{0, 1};
  tau.push_back(2);
  CHECK(tau.size() == 3);
  tau.pop_back();
  CHECK(tau == TauFunction{0, 1});
}

TEST_CASE("admissibility examples") {
  CHECK(check_admissible(raw({0})).admissible);

  auto r = check_admissible(raw({0, 2}));
  CHECK_FALSE(r.admissible);
  CHECK(r.violated == Property::kB);
  CHECK(r.index == 1);

  r = check_admissible(raw({0, 1, 1}));
  CHECK(r.violated == Property::kD);
  CHECK(r.index == 2);

  CHECK(check_admissible(raw({0, 0, 1, 1, 1})).admissible);

  CHECK(check_admissible(raw({0, -1})).violated == Property::kRange);
  CHECK(check_admissible(raw({1})).violated == Property::kA);
  CHECK(check_admissible(raw({})).violated == Property::kRange);
}

TEST_CASE("violations are reported in property order") {
  // B fails at n=3 and A fails at n=1; A wins.
  CHECK(check_admissible(raw({1, 2, 5})).violated == Property::kA);
  // Orbit of 4 is 4->2->0; tau(5) = 2 lies strictly between 0+1 and 2+1.
  auto r = check_admissible(raw({0, 0, 1, 2, 2}));
  CHECK(r.violated == Property::kC);
  CHECK(r.index == 4);
  r = check_admissible(raw({0, 1, 2, 3, 1}));
  CHECK(r.violated == Property::kD);
  CHECK(r.index == 4);
}

TEST_CASE("property E rejects a return to zero") {
  // n=3 has orbit 3->1->0, tau^{ord-1}(3)+1 = 2 with ord(2)=1.
  const auto r = check_admissible(raw({0, 0, 1, 0}));
  CHECK(r.violated == Property::kE);
  CHECK(r.index == 3);
}

TEST_CASE("markers") {
  CHECK(markers(TauFunction{0, 1, 2, 3}).empty());
  CHECK(markers(TauFunction{0, 1, 0, 1, 0}) == std::vector<Level>{2, 4});
  CHECK(markers(TauFunction{0, 0, 1, 1}) == std::vector<Level>{1, 3});
}

TEST_CASE("marked levels") {
  CHECK(marked_levels(TauFunction{0, 1, 2, 3}) == std::vector<Level>{0});
  CHECK(marked_levels(TauFunction{0, 1, 0, 1, 0}) == std::vector<Level>{0, 1});
  CHECK(marked_levels(TauFunction{0, 0, 1, 2, 0}) == std::vector<Level>{0, 2});
  // Marker 3 has tau(3) = 1, so level 1 is marked here.
  CHECK(marked_levels(TauFunction{0, 0, 1, 1}) == std::vector<Level>{0, 1});
}

TEST_CASE("a marker need not be a marked level") {
  const TauFunction tau{0, 1, 0, 1, 0};
  const auto table = marked_level_table(tau);
  for (Level m : markers(tau)) CHECK_FALSE(table[m]);
}

TEST_CASE("check_admissible agrees with the literal oracle up to length 8") {
  for (int n = 1; n <= 8; ++n) {
    std::size_t admissible = 0;
    oracle::for_each_candidate(n, [&](const oracle::Seq& s) {
      std::vector<std::int64_t> cand(s.begin(), s.end());
      const bool got = check_admissible(cand).admissible;
      REQUIRE(got == oracle::admissible(s));
      admissible += got;
    });
    if (n == 8) CHECK(admissible == 144);
  }
}

TEST_CASE("orbit invariants over admissible tau") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& s : oracle::admissible_of_length(n)) {
      const TauFunction tau(std::vector<Level>(s.begin(), s.end()));
      for (Level m = 1; m <= tau.size(); ++m) {
        REQUIRE(tau.ord(m) >= 1);
        REQUIRE(tau.iterate(m, tau.ord(m)) == 0);
        REQUIRE(tau.iterate(m, tau.ord(m) - 1) != 0);
      }
      const auto ms = markers(tau);
      for (Level m : ms) REQUIRE((m >= 1 && m < tau.size()));
      const auto table = marked_level_table(tau);
      for (Level l : marked_levels(tau)) {
        REQUIRE(l < tau.size());
        bool reached = l == 0;
        for (Level m : ms) {
          for (Level x = tau[m];; x = tau[x]) {
            reached |= x == l;
            if (x == 0) break;
          }
        }
        REQUIRE(reached);
        REQUIRE(table[l]);
      }
    }
  }
}

TEST_CASE("tau text format") {
  CHECK(format_tau(parse_tau("0,1,0,1,0")) == "0,1,0,1,0");
  CHECK(format_tau(parse_tau(" 0, 0 ,1 ")) == "0,0,1");
  CHECK(parse_tau_text("0,-3") == raw({0, -3}));
  CHECK_THROWS_AS(parse_tau_text("0,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tau_text("0,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tau_text("0,1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tau("0,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tau(""), std::invalid_argument);
}
