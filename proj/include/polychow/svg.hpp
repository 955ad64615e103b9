#ifndef POLYCHOW_SVG_HPP
#define POLYCHOW_SVG_HPP

// SVG 1.1 drawing of a polytope of dimension at most 2, projected onto its
// local coordinates. Pixel positions are computed with integer arithmetic.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polychow/polytope.hpp"

namespace polychow {

struct SvgLabel {
  Vec point;
  std::string text;
};

namespace detail {

inline std::vector<size_t> boundary_cycle(const Polytope& P) {
  const size_t nv = P.vertices().size();
  if (nv <= 2) {
    std::vector<size_t> out;
    for (size_t i = 0; i < nv; ++i) out.push_back(i);
    return out;
  }
  std::vector<std::vector<size_t>> adj(nv);
  for (const auto& e : edges(P)) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<size_t> cycle{0};
  size_t prev = nv, cur = 0;
  while (cycle.size() < nv) {
    const size_t next = adj[cur].at(0) != prev ? adj[cur][0] : adj[cur].at(1);
    if (next == 0) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  return cycle;
}

}  // namespace detail

inline std::string render_svg(const Polytope& P, const std::vector<SvgLabel>& labels, const std::string& title = "") {
  if (P.is_empty() || P.affine_dim() > 2) throw std::invalid_argument("render_svg: needs a nonempty polytope of dimension <= 2");
  const auto& local = P.local_coordinates();
  auto chart = [&](const Vec& p) {
    Rat x = local.size() > 0 ? p[local[0]] : Rat(0);
    Rat y = local.size() > 1 ? p[local[1]] : Rat(0);
    return std::pair<Rat, Rat>{x, y};
  };
  std::vector<Vec> all = P.vertices();
  for (const auto& l : labels) all.push_back(l.point);
  Rat minx = chart(all[0]).first, maxx = minx, miny = chart(all[0]).second, maxy = miny;
  for (const auto& p : all) {
    auto [x, y] = chart(p);
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  const long size = 400, margin = 60;
  const Rat span = std::max<Rat>({maxx - minx, maxy - miny, Rat(1)});
  const Rat scale = Rat(size) / span;
  auto px = [&](const Vec& p) {
    auto [x, y] = chart(p);
    Rat fx = Rat(margin) + (x - minx) * scale;
    Rat fy = Rat(margin + size) - (y - miny) * scale;  // y grows upward
    Int ix = fx.get_num() / fx.get_den(), iy = fy.get_num() / fy.get_den();
    return std::pair<std::string, std::string>{ix.get_str(), iy.get_str()};
  };

  std::ostringstream s;
  const long W = size + 2 * margin;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << W
    << "\" viewBox=\"0 0 " << W << " " << W << "\">\n";
  if (!title.empty()) s << "  <title>" << title << "</title>\n";
  s << "  <polygon points=\"";
  bool first = true;
  for (size_t i : detail::boundary_cycle(P)) {
    auto [x, y] = px(P.vertices()[i]);
    s << (first ? "" : " ") << x << "," << y;
    first = false;
  }
  s << "\" fill=\"#dde8f5\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  for (const auto& l : labels) {
    auto [x, y] = px(l.point);
    s << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#1f4e79\"/>\n";
    s << "  <text x=\"" << x << "\" y=\"" << y << "\" dx=\"6\" dy=\"-6\" font-family=\"monospace\" font-size=\"12\">"
      << l.text << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace polychow

#endif  // POLYCHOW_SVG_HPP
