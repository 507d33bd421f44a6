#include "shg/diagram.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace shg {

namespace {

std::string state_text(int net_v, bool bra) {
  std::string inner = (net_v == 0)
                          ? "n,0"
                          : "n-" + std::to_string(2 * net_v) + "," +
                                std::to_string(net_v);
  return bra ? "<" + inner + "|" : "|" + inner + ">";
}

// Rows bottom to top: 0 = input state, odd = vertex, even = state. A side
// shorter than the common height runs its field line straight to the top.
std::vector<std::string> side_rows(const ProcessVector& k, bool bra,
                                   int common_blocks) {
  const auto sums = partial_sums(k);
  const int l = k.block_count();
  std::vector<std::string> rows(static_cast<std::size_t>(2 * common_blocks + 1));
  rows[0] = state_text(0, bra);
  for (int j = 1; j <= l; ++j) {
    const int kj = k.blocks()[static_cast<std::size_t>(j - 1)];
    rows[static_cast<std::size_t>(2 * j - 1)] =
        kj > 1 ? "  * " + std::to_string(kj) : "  *";
    if (j < l)  // intermediate state after block j is K_j
      rows[static_cast<std::size_t>(2 * j)] =
          state_text(sums[static_cast<std::size_t>(j - 1)], bra);
  }
  for (int row = 2 * l + (l > 0 ? 0 : 1); row < 2 * common_blocks; ++row)
    if (rows[static_cast<std::size_t>(row)].empty())
      rows[static_cast<std::size_t>(row)] = "  |";
  rows[static_cast<std::size_t>(2 * common_blocks)] =
      state_text(net_sh_photons(k), bra);
  return rows;
}

std::string format_coord(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5g", value);
  return buf;
}

std::string latex_state(int net_v, bool bra) {
  std::string inner = (net_v == 0)
                          ? "n,0"
                          : "n-" + std::to_string(2 * net_v) + "," +
                                std::to_string(net_v);
  return bra ? "$\\langle " + inner + "|$" : "$|" + inner + "\\rangle$";
}

// One column of the double-sided diagram. The ket side keeps the field on
// the left of the vertex column with atom arcs bulging right; the bra side
// mirrors both, with arrows reversed.
void emit_latex_side(std::ostream& os, const ProcessVector& k, bool bra,
                     double column_x, double height, const char* prefix) {
  const auto sums = partial_sums(k);
  const int l = k.block_count();
  const double field_x = bra ? column_x + 1.0 : column_x - 1.0;
  const double label_x = bra ? column_x + 2.4 : column_x - 2.4;
  const double mult_x = bra ? column_x + 0.3 : column_x - 0.3;
  const char* arc = bra ? "[out=180, in=180]" : "[out=0, in=0]";

  os << "\\vertex (" << prefix << "f0) at (" << format_coord(field_x)
     << ",0);\n";
  os << "\\vertex (" << prefix << "a0) at (" << format_coord(column_x)
     << ",0);\n";
  os << "\\vertex (" << prefix << "ft) at (" << format_coord(field_x) << ","
     << format_coord(height) << ");\n";
  os << "\\vertex (" << prefix << "at) at (" << format_coord(column_x) << ","
     << format_coord(height) << ");\n";
  for (int j = 1; j <= l; ++j)
    os << "\\vertex [dot] (" << prefix << "v" << j << ") at ("
       << format_coord(column_x) << ","
       << format_coord(height * j / (l + 1.0)) << ") {};\n";

  if (l == 0) {
    // straight-through line pair; bra arrows run against temporal order
    if (bra) {
      os << "\\propag [fer] (" << prefix << "at) to (" << prefix << "a0);\n";
      os << "\\propag [chabos] (" << prefix << "ft) to (" << prefix
         << "f0);\n";
    } else {
      os << "\\propag [chabos] (" << prefix << "f0) to (" << prefix
         << "ft);\n";
      os << "\\propag [fer] (" << prefix << "a0) to (" << prefix << "at);\n";
    }
  } else {
    if (bra) {
      os << "\\propag [fer] (" << prefix << "v1) to (" << prefix << "a0);\n";
      os << "\\propag [chabos] (" << prefix << "v1) to (" << prefix
         << "f0);\n";
    } else {
      os << "\\propag [chabos] (" << prefix << "f0) to (" << prefix
         << "v1);\n";
      os << "\\propag [fer] (" << prefix << "a0) to (" << prefix << "v1);\n";
    }
    for (int j = 1; j < l; ++j) {
      const std::string lo = std::string(prefix) + "v" + std::to_string(j);
      const std::string hi = std::string(prefix) + "v" + std::to_string(j + 1);
      if (bra) {
        os << "\\propag [chabos] (" << hi << ") to (" << lo << ");\n";
        os << "\\propag [fer] (" << hi << ") to " << arc << " (" << lo
           << ");\n";
      } else {
        os << "\\propag [chabos] (" << lo << ") to (" << hi << ");\n";
        os << "\\propag [fer] (" << lo << ") to " << arc << " (" << hi
           << ");\n";
      }
    }
    const std::string top = std::string(prefix) + "v" + std::to_string(l);
    if (bra) {
      os << "\\propag [fer] (" << top << ") to (" << prefix << "at);\n";
      os << "\\propag [chabos] (" << top << ") to (" << prefix << "ft);\n";
    } else {
      os << "\\propag [fer] (" << prefix << "at) to (" << top << ");\n";
      os << "\\propag [chabos] (" << prefix << "ft) to (" << top << ");\n";
    }
  }

  os << "\\node at (" << format_coord(label_x) << ",0) {"
     << latex_state(0, bra) << "};\n";
  for (int j = 1; j < l; ++j) {
    const double y = height * (j + 0.5) / (l + 1.0);
    os << "\\node at (" << format_coord(label_x) << "," << format_coord(y)
       << ") {" << latex_state(sums[static_cast<std::size_t>(j - 1)], bra)
       << "};\n";
  }
  os << "\\node at (" << format_coord(label_x) << "," << format_coord(height)
     << ") {" << latex_state(net_sh_photons(k), bra) << "};\n";
  for (int j = 1; j <= l; ++j) {
    const int kj = k.blocks()[static_cast<std::size_t>(j - 1)];
    if (kj > 1)
      os << "\\node at (" << format_coord(mult_x) << ","
         << format_coord(height * j / (l + 1.0)) << ") {" << kj << "};\n";
  }
}

std::string blocks_slug(const ProcessVector& k) {
  if (k.is_identity()) return "id";
  std::string out;
  for (std::size_t i = 0; i < k.blocks().size(); ++i) {
    if (i) out += '-';
    out += std::to_string(k.blocks()[i]);
  }
  return out;
}

}  // namespace

std::string render_ascii(const DiagramPair& pair) {
  std::ostringstream os;
  os << "k = " << pair.left().to_string()
     << "   k' = " << pair.right().to_string() << "   r = " << pair.left_order()
     << "   r' = " << pair.right_order() << "   R = " << pair.total_order()
     << "   v = " << net_sh_photons(pair.left())
     << "   mult = " << pair.multiplicity() << "\n";

  const int common =
      std::max({pair.left().block_count(), pair.right().block_count(), 1});
  const auto ket = side_rows(pair.left(), false, common);
  const auto bra = side_rows(pair.right(), true, common);
  std::size_t width = 0;
  for (const auto& cell : ket) width = std::max(width, cell.size());
  for (int row = 2 * common; row >= 0; --row) {
    std::string line = ket[static_cast<std::size_t>(row)];
    line.resize(width + 4, ' ');
    line += bra[static_cast<std::size_t>(row)];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string render_latex(const DiagramPair& pair) {
  const int slots =
      std::max({pair.left().block_count(), pair.right().block_count(), 1});
  const double height = slots + 1.0;
  std::ostringstream os;
  os << "% " << pair_slug(pair) << "\n"
     << "\\documentclass{standalone}\n"
     << "\\usepackage{tikz}\n"
     << "\\usepackage[compat=1.1.0]{tikz-feynhand}\n"
     << "\\begin{document}\n"
     << "\\begin{tikzpicture}\n"
     << "\\begin{feynhand}\n";
  emit_latex_side(os, pair.left(), false, 1.0, height, "l");
  emit_latex_side(os, pair.right(), true, 5.0, height, "r");
  os << "\\end{feynhand}\n"
     << "\\end{tikzpicture}\n"
     << "\\end{document}\n";
  return os.str();
}

std::string pair_slug(const DiagramPair& pair) {
  return "R" + std::to_string(pair.total_order()) + "_" +
         blocks_slug(pair.left()) + "__" + blocks_slug(pair.right());
}

}  // namespace shg
