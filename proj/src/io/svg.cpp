/*
   Copyright 2026 The fewnomial authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fewnomial/io/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace fewnomial::io {

using polyhedra::Point;
using polyhedra::Rational;

namespace {

constexpr long kUnit = 40;
constexpr long kMargin = 40;
constexpr const char* kMixedFill = "#f4b6c2";

using P2 = std::pair<long, long>;

long cross(const P2& o, const P2& a, const P2& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Counter-clockwise hull without collinear points (monotone chain).
std::vector<P2> hull(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<P2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

class Canvas {
public:
    explicit Canvas(const std::vector<P2>& extent) {
        if (extent.empty()) throw InputError("nothing to draw");
        xmin_ = xmax_ = extent[0].first;
        ymin_ = ymax_ = extent[0].second;
        for (const auto& [x, y] : extent) {
            xmin_ = std::min(xmin_, x);
            xmax_ = std::max(xmax_, x);
            ymin_ = std::min(ymin_, y);
            ymax_ = std::max(ymax_, y);
        }
        const long w = (xmax_ - xmin_) * kUnit + 2 * kMargin;
        const long h = (ymax_ - ymin_) * kUnit + 2 * kMargin;
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
             << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
             << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    }

    std::string x(const Rational& v) const { return fmt(Rational(kUnit) * (v - xmin_) + kMargin); }
    std::string y(const Rational& v) const { return fmt(Rational(kUnit) * (Rational(ymax_) - v) + kMargin); }

    void polygon(const std::vector<P2>& pts, const char* fill, const char* cls) {
        out_ << "<polygon class=\"" << cls << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            out_ << (i ? " " : "") << x(pts[i].first) << ',' << y(pts[i].second);
        out_ << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    void line(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2, const char* cls,
              const char* colour, double width) {
        char w[16];
        std::snprintf(w, sizeof w, "%.1f", width);
        out_ << "<line class=\"" << cls << "\" x1=\"" << x(x1) << "\" y1=\"" << y(y1) << "\" x2=\"" << x(x2)
             << "\" y2=\"" << y(y2) << "\" stroke=\"" << colour << "\" stroke-width=\"" << w << "\"/>\n";
    }
    void dot(long px, long py) {
        out_ << "<circle cx=\"" << x(px) << "\" cy=\"" << y(py) << "\" r=\"3\" fill=\"black\"/>\n";
    }
    void label(long px, long py, const std::string& text) {
        out_ << "<text class=\"sign\" x=\"" << x(Rational(px) + Rational(1, 8)) << "\" y=\""
             << y(Rational(py) + Rational(1, 8)) << "\" font-family=\"sans-serif\" font-size=\"16\">" << text
             << "</text>\n";
    }
    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    static std::string fmt(const Rational& v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v.get_d());
        return buf;
    }

    long xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0;
    std::ostringstream out_;
};

P2 as_p2(const Point& p) { return {p[0], p[1]}; }

void require_plane(std::size_t n) {
    if (n != 2) throw DimensionError("pictures are only drawn for n = 2");
}

}  // namespace

std::string subdivision_svg(const polyhedra::Subdivision& sub) {
    if (sub.lifted.empty()) throw InputError("empty subdivision");
    require_plane(sub.lifted[0].base.dim());
    // Cells are Minkowski sums of the minimising faces.
    std::vector<std::vector<P2>> cells;
    std::vector<P2> extent;
    for (const auto& f : sub.cells) {
        std::vector<P2> sums{{0, 0}};
        for (std::size_t i = 0; i < f.faces.size(); ++i) {
            std::vector<P2> next;
            for (const auto& s : sums)
                for (auto idx : f.faces[i]) {
                    const auto& q = sub.lifted[i].base[idx];
                    next.push_back({s.first + q[0], s.second + q[1]});
                }
            sums = hull(next);
        }
        extent.insert(extent.end(), sums.begin(), sums.end());
        cells.push_back(std::move(sums));
    }
    Canvas c(extent);
    for (std::size_t i = 0; i < cells.size(); ++i)
        c.polygon(cells[i], sub.cells[i].is_mixed ? kMixedFill : "none", sub.cells[i].is_mixed ? "mixed" : "cell");
    return c.finish();
}

std::string triangulation_svg(const polyhedra::Triangulation& tri, const std::optional<viro::SignDistribution>& signs) {
    require_plane(tri.support.dim());
    std::vector<P2> pts;
    for (const auto& p : tri.support.points()) pts.push_back(as_p2(p));
    Canvas c(pts);
    for (const auto& s : tri.canonical()) {
        std::vector<P2> tri_pts;
        for (auto i : s) tri_pts.push_back(pts[i]);
        c.polygon(hull(tri_pts), "none", "simplex");
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        c.dot(pts[i].first, pts[i].second);
        if (signs) c.label(pts[i].first, pts[i].second, (*signs)[i] > 0 ? "+" : "&#8722;");
    }
    return c.finish();
}

std::string viro_svg(const viro::ViroDiagram& d) {
    require_plane(d.triangulation.support.dim());
    std::vector<P2> pts;
    for (const auto& p : d.triangulation.support.points()) pts.push_back(as_p2(p));
    Canvas c(pts);
    c.polygon(hull(pts), "none", "hull");
    for (const auto& s : d.segments)
        c.line(s.from.first, s.from.second, s.to.first, s.to.second, "segment", "#1f4e9c", 2.5);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        c.dot(pts[i].first, pts[i].second);
        c.label(pts[i].first, pts[i].second, d.signs[i] > 0 ? "+" : "&#8722;");
    }
    return c.finish();
}

}  // namespace fewnomial::io
