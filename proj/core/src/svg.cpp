#include "cox/svg.hpp"

#include <map>
#include <string>
#include <vector>

#include "cox/ruin.hpp"

namespace cox {
namespace {

const char* kFills[] = {"#7fc7e0", "#f2b34c", "#9bd58a", "#d99ae0",
                        "#e0907f", "#b4b8ec", "#c9c9c9", "#e6de7a"};

std::string attr_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_ruin_strips(const BallComplex& B, Gen t) {
  const CoxeterMatrix& M = B.matrix();
  if (M.rank() != 3)
    throw DomainError("strip diagram is drawn for rank-3 systems only");
  std::vector<RuinComponent> comps = ruin_components(B, t);
  const RuinComponent& comp0 = comps.front();
  std::vector<Collar> cs = collars(B, comp0);
  Coloring col = color_vertices(B, comp0);

  // One fill per distinct color key, assigned in sorted key order.
  std::map<std::string, int> fill_of;
  for (const Collar& c : cs) fill_of.emplace(col.color_at(c.vertices.front()), 0);
  int next = 0;
  for (auto& [key, idx] : fill_of) idx = next++;

  const int strip_w = 64, strip_h = 260, gap = 6, margin = 24, caption = 46;
  int n = static_cast<int>(cs.size());
  int width = 2 * margin + (n > 0 ? n * strip_w + (n - 1) * gap : strip_w);
  int height = 2 * margin + strip_h + caption;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "  <title>collar strips of the " + attr_escape(M.name(t)) + "-ruin, radius " +
         std::to_string(B.radius()) + "</title>\n";
  svg += "  <desc>" + std::to_string(n) +
         " collars on the identity component; filled strips carry even colors, hollow "
         "strips odd colors; a bold right edge marks a nonempty inner rim</desc>\n";
  for (int i = 0; i < n; ++i) {
    const Collar& c = cs[i];
    const std::string& key = col.color_at(c.vertices.front());
    bool even = col.parity.at(key) == 0;
    std::string fill = even ? kFills[fill_of.at(key) % 8] : std::string("none");
    int x = margin + i * (strip_w + gap);
    svg += "  <rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(margin) +
           "\" width=\"" + std::to_string(strip_w) + "\" height=\"" + std::to_string(strip_h) +
           "\" fill=\"" + fill + "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
    if (!c.inner.empty()) {
      int bx = x + strip_w;
      svg += "  <line x1=\"" + std::to_string(bx) + "\" y1=\"" + std::to_string(margin) +
             "\" x2=\"" + std::to_string(bx) + "\" y2=\"" +
             std::to_string(margin + strip_h) + "\" stroke=\"#000000\" stroke-width=\"4\"/>\n";
    }
    const Element& rep = B.ball().element(c.vertices.front());
    std::string label = rep.is_identity() ? std::string("e") : M.format_word(rep.word);
    svg += "  <text x=\"" + std::to_string(x + strip_w / 2) + "\" y=\"" +
           std::to_string(margin + strip_h + 18) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
           attr_escape(label) + "</text>\n";
    svg += "  <text x=\"" + std::to_string(x + strip_w / 2) + "\" y=\"" +
           std::to_string(margin + strip_h + 34) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
           (even ? "even" : "odd") + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cox
