#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shg/diagram.hpp"

#include <fstream>
#include <sstream>
#include <string>

using namespace shg;

namespace {

ProcessVector pv(std::vector<int> blocks) {
  return ProcessVector(std::move(blocks));
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SHG_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t count_occurrences(const std::string& haystack,
                              const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("ascii render of the worked pair matches the golden file") {
  const DiagramPair pair(pv({2, 1, 4, 1}), pv({4}));
  CHECK(render_ascii(pair) == read_golden("ascii_R12_2-1-4-1__4.txt"));
  CHECK(render_ascii(pair) == render_ascii(pair));  // deterministic
}

TEST_CASE("latex render of the worked pair matches the golden file") {
  const DiagramPair pair(pv({2, 1, 4, 1}), pv({4}));
  CHECK(render_latex(pair) == read_golden("latex_R12_2-1-4-1__4.tex"));
}

TEST_CASE("ascii render structure") {
  const std::string second = render_ascii(DiagramPair(pv({1}), pv({1})));
  CHECK(second.find("|n-2,1>") != std::string::npos);
  CHECK(second.find("<n-2,1|") != std::string::npos);
  CHECK(count_occurrences(second, "*") == 2);

  // identity ket side runs a bare line, the two-vertex bra side is labeled
  const std::string cross = render_ascii(DiagramPair(ProcessVector{}, pv({1, 1})));
  CHECK(cross.find("mult = 2") != std::string::npos);
  CHECK(cross.find("<n-2,1|") != std::string::npos);
  CHECK(cross.find("|n-2,1>") == std::string::npos);
  CHECK(count_occurrences(cross, "*") == 2);
}

TEST_CASE("latex render structure") {
  const std::string second = render_latex(DiagramPair(pv({1}), pv({1})));
  CHECK(count_occurrences(second, "\\vertex [dot]") == 2);
  CHECK(count_occurrences(second, "\\propag") == 8);  // four lines per side
  CHECK(count_occurrences(second, "\\begin{feynhand}") == 1);
  CHECK(count_occurrences(second, "\\end{feynhand}") == 1);
  CHECK(second.find("\\documentclass{standalone}") != std::string::npos);

  // identity pair: two straight-through line pairs, no vertex
  const std::string identity =
      render_latex(DiagramPair(ProcessVector{}, ProcessVector{}));
  CHECK(count_occurrences(identity, "[dot]") == 0);
  CHECK(count_occurrences(identity, "\\propag") == 4);
  CHECK(count_occurrences(identity, "[chabos]") == 2);
  CHECK(count_occurrences(identity, "[fer]") == 2);
}

TEST_CASE("environments stay balanced across shapes") {
  for (int total : {0, 2, 4, 6}) {
    for (const auto& pair : enumerate_pairs(total)) {
      const std::string tex = render_latex(pair);
      CHECK(count_occurrences(tex, "\\begin{") ==
            count_occurrences(tex, "\\end{"));
      CHECK(tex.find("\\end{document}") != std::string::npos);
      const std::string ascii = render_ascii(pair);
      CHECK(ascii.find(pair.left().to_string()) != std::string::npos);
    }
  }
}
