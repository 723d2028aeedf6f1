#include "doctest.h"

#include <regex>

#include "agol/export.hpp"

using namespace agol;

namespace {

using X = std::array<int, 4>;

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

// Hand traced: strand from bottom position 0 passes over at crossing 1,
// under at 2, over at 3, then returns at position 1.
TEST_CASE("trefoil codes") {
  const auto d = diagram_from_word(2, {1, 1, 1});
  const auto g = to_gauss(d);
  CHECK(g.signs == std::vector<int>{1, 1, 1});
  REQUIRE(g.components.size() == 1);
  CHECK(g.components[0] == std::vector<int>{1, -2, 3, -1, 2, -3});
  CHECK(to_pd(d).crossings == std::vector<X>{{4, 2, 5, 1}, {2, 6, 3, 5}, {6, 4, 1, 3}});
  CHECK(to_dt(d) == std::vector<int>{4, 6, 2});

  // Mirror: the standard left-handed trefoil PD.
  const auto m = diagram_from_word(2, {-1, -1, -1});
  CHECK(to_pd(m).crossings == std::vector<X>{{1, 4, 2, 5}, {5, 2, 6, 3}, {3, 6, 4, 1}});
  CHECK(to_dt(m) == std::vector<int>{-4, -6, -2});
  CHECK(format_pd(to_pd(m)) == "X(1,4,2,5)\nX(5,2,6,3)\nX(3,6,4,1)\n");
  CHECK(format_dt({4, 6, 2}) == "4,6,2\n");
}

TEST_CASE("unknot and Hopf link") {
  const auto u = diagram_from_word(1, {});
  CHECK(to_pd(u).crossings.empty());
  CHECK(to_dt(u).empty());

  const auto hopf = diagram_from_word(2, {1, 1});
  const auto g = to_gauss(hopf);
  CHECK(g.components == std::vector<std::vector<int>>{{1, -2}, {-1, 2}});
  CHECK_FALSE(check_pd(to_pd(hopf)).has_value());
  try {
    (void)to_dt(hopf);
    FAIL("DT accepted a link");
  } catch (const NotAKnotError& e) {
    CHECK(e.components() == 2);
    CHECK(e.code() == Errc::not_a_knot);
  }
  CHECK(format_gauss(g) == "crossings=2 components=2\nsigns 1 1\n1 -2\n-1 2\n");
}

TEST_CASE("checks reject broken codes") {
  PDCode pd{{{1, 2, 3, 4}, {1, 2, 3, 3}}};
  CHECK(check_pd(pd).has_value());
  GaussCode g{{1, 1}, {{1, 2, -1, -1}}};
  CHECK(check_gauss(g).has_value());
  CHECK_THROWS_AS(pd_from_gauss(g), Error);
}

TEST_CASE("generated diagrams export consistently") {
  for (auto [n, l] : {std::pair{4, 1}, {4, 2}, {4, 4}, {6, 1}, {6, 3}}) {
    CAPTURE(n);
    CAPTURE(l);
    const auto t = build_template(n, l);
    const auto d = fill(t, uniform_slopes(t, 1));
    const auto g = to_gauss(d);
    const auto pd = to_pd(d);
    CHECK_FALSE(check_gauss(g).has_value());
    CHECK_FALSE(check_pd(pd).has_value());
    CHECK(pd_from_gauss(g) == pd);
    CHECK(g.components.size() == static_cast<std::size_t>(l));
    if (l == 1) {
      CHECK(to_dt(d).size() == d.word.size());
    } else {
      CHECK_THROWS_AS(to_dt(d), NotAKnotError);
    }
    const auto back = parse_braid(format_braid(d, l));
    CHECK(back.n == n);
    CHECK(back.l == l);
    CHECK(back.diagram.word == d.word);
  }
}

TEST_CASE("braid parsing") {
  CHECK(format_braid(diagram_from_word(3, {1, -2}), 1) == "n=3 l=1 components=1\n1 -2\n");
  CHECK_THROWS_AS(parse_braid("n=3 l=1\n1\n"), Error);
  CHECK_THROWS_AS(parse_braid("n=3 l=1 components=2\n1 -2\n"), Error);
  CHECK_THROWS_AS(parse_braid("n=3 l=1 components=1\n1 x\n"), Error);
  CHECK_THROWS_AS(parse_braid("n=3 l=1 components=1\n4\n"), Error);
}

TEST_CASE("svg") {
  const auto t = build_template(6, 1);
  const auto d = fill(t, default_slopes(t));
  const std::string a = render_svg(d, &t);
  CHECK(a == render_svg(d, &t));
  CHECK(count_of(a, "<rect class=\"twist\"") == 44);
  CHECK(count_of(a, "<rect class=\"monodromy\"") == 1);
  CHECK(count_of(a, "<rect class=\"augmentation\"") == 1);
  CHECK(count_of(a, "<line class=\"strand\"") == 6);
  CHECK(a.find("crossings=32955 components=1") != std::string::npos);
  CHECK_THROWS_AS(render_svg(d, &t, SvgOptions{true}), Error);

  const auto empty = render_svg(diagram_from_word(3, {}), nullptr);
  CHECK(count_of(empty, "<rect") == 0);
  CHECK(count_of(empty, "<line class=\"strand\"") == 3);

  const auto small = diagram_from_word(2, {1, 1, 1});
  const auto e = render_svg(small, nullptr, SvgOptions{true});
  CHECK(count_of(e, "<line class=\"over\"") == 3);
  CHECK(count_of(e, "<polyline class=\"under\"") == 6);
}
