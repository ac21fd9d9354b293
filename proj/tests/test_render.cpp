#include <gtest/gtest.h>

#include <regex>

#include "gdifs/render.hpp"
#include "support.hpp"

using namespace gdifs;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

// The <g> block for one vertex.
std::string vertex_block(const std::string& svg, const std::string& name) {
  const auto start = svg.find("<g id=\"vertex-" + name + "\"");
  return svg.substr(start, svg.find("</g>", start) - start);
}

}  // namespace

TEST(Render, GoldenLevelCounts) {
  const std::string svg = render_svg(figure1_graph(golden_params()));
  for (const char* v : {"u", "v"}) {
    const std::string block = vertex_block(svg, v);
    for (unsigned k = 0; k <= 5; ++k) {
      EXPECT_EQ(count(block, "class=\"level-" + std::to_string(k) + "\""), 1u << k) << v << k;
    }
  }
}

TEST(Render, Deterministic) {
  const GraphIFS g = figure1_graph(golden_params());
  EXPECT_EQ(render_svg(g), render_svg(g));
}

TEST(Render, LevelZeroIsFullWidth) {
  RenderSpec spec;
  spec.levels = 0;
  const std::string svg = render_svg(subset_graph(subset_example_params()), spec);
  EXPECT_EQ(count(svg, "<rect"), 2u);
  EXPECT_EQ(count(svg, "x=\"0.000\" y="), 2u);
  EXPECT_EQ(count(svg, "width=\"1000.000\" height"), 2u);
}

TEST(Render, GoldenLevelOnePositions) {
  RenderSpec spec;
  spec.levels = 1;
  const std::string block = vertex_block(render_svg(figure1_graph(golden_params()), spec), "u");
  EXPECT_NE(block.find("class=\"level-1\" x=\"0.000\" y=\"24.000\" width=\"250.000\""),
            std::string::npos);
  EXPECT_NE(block.find("class=\"level-1\" x=\"500.000\" y=\"24.000\" width=\"500.000\""),
            std::string::npos);
}

TEST(Render, CoordinatesHaveThreeDecimalsProperty) {
  std::mt19937_64 rng(gen::kSeed + 70);
  const std::regex num("(x|y|width|height)=\"(-?[0-9]+)\\.([0-9]*)\"");
  for (int i = 0; i < 200; ++i) {
    const GraphIFS g = gen::random_graph(rng, 2, 3);
    RenderSpec spec;
    spec.levels = 3;
    const std::string svg = render_svg(g, spec);
    ASSERT_EQ(svg, render_svg(g, spec));
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), num); it != std::sregex_iterator();
         ++it) {
      ASSERT_EQ((*it)[3].length(), 3);
    }
  }
}
