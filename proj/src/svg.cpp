#include "schur/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schur {

std::string_view to_string(RenderModel m) {
    switch (m) {
        case RenderModel::lozenge: return "lozenge";
        case RenderModel::domino: return "domino";
        case RenderModel::maya_particles: return "maya-particles";
    }
    return "?";
}

RenderModel parse_render_model(std::string_view text) {
    if (text == "lozenge") return RenderModel::lozenge;
    if (text == "domino") return RenderModel::domino;
    if (text == "maya-particles" || text == "maya") return RenderModel::maya_particles;
    throw std::invalid_argument("unknown render model '" + std::string(text) + "'");
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string color(const RenderStyle& st, std::size_t k, const std::vector<std::string>& defaults) {
    if (k < st.palette.size()) return st.palette[k];
    return defaults[k % defaults.size()];
}

void check(const RenderStyle& st) {
    if (!(st.scale > 0.0) || !std::isfinite(st.scale)) throw std::invalid_argument("render scale must be positive");
}

struct Box {
    double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
    void add(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
};

std::string document(const Box& b, double pad, const RenderStyle& st, const std::string& body) {
    double x0 = std::isfinite(b.x0) ? b.x0 - pad : 0, y0 = std::isfinite(b.y0) ? b.y0 - pad : 0;
    double w = std::isfinite(b.x0) ? b.x1 - b.x0 + 2 * pad : 2 * pad;
    double h = std::isfinite(b.y0) ? b.y1 - b.y0 + 2 * pad : 2 * pad;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
       << "\" viewBox=\"" << num(x0) << " " << num(y0) << " " << num(w) << " " << num(h) << "\">\n";
    if (st.rotation != 0.0)
        os << "<g transform=\"rotate(" << num(st.rotation) << " " << num(x0 + w / 2) << " " << num(y0 + h / 2)
           << ")\">\n";
    else
        os << "<g>\n";
    os << body << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace

std::string render_svg(const HeightMatrix& h, const RenderStyle& st) {
    check(st);
    static const std::vector<std::string> defaults{"#f2c14e", "#5b8e7d", "#bc4b51"};
    const double c30 = std::sqrt(3.0) / 2.0;
    Box box;
    auto proj = [&](double x, double y, double z) {
        double X = (x - y) * c30 * st.scale;
        double Y = ((x + y) * 0.5 - z) * -st.scale;
        box.add(X, Y);
        return std::pair<double, double>(X, Y);
    };
    std::ostringstream body;
    auto poly = [&](std::initializer_list<std::array<double, 3>> pts, const std::string& fill) {
        body << "<polygon points=\"";
        bool first = true;
        for (auto& p : pts) {
            auto [X, Y] = proj(p[0], p[1], p[2]);
            body << (first ? "" : " ") << num(X) << "," << num(Y);
            first = false;
        }
        body << "\" fill=\"" << fill << "\" stroke=\"#222\" stroke-width=\"" << num(st.scale * 0.04) << "\"/>\n";
    };
    // back to front by decreasing i + j
    std::vector<std::pair<int, int>> cells;
    for (std::size_t j = 1; j <= h.shape.length(); ++j)
        for (int i = 1; i <= h.shape.part(j); ++i) cells.emplace_back(i, static_cast<int>(j));
    std::stable_sort(cells.begin(), cells.end(),
                     [](auto a, auto b) { return a.first + a.second > b.first + b.second; });
    for (auto [i, j] : cells) {
        double z = static_cast<double>(h.at(i, j));
        double zl = i > 1 ? static_cast<double>(h.at(i - 1, j)) : 0.0;
        double zb = j > 1 ? static_cast<double>(h.at(i, j - 1)) : 0.0;
        double x0 = i - 1, x1 = i, y0 = j - 1, y1 = j;
        if (z > zl) poly({{x0, y0, zl}, {x0, y1, zl}, {x0, y1, z}, {x0, y0, z}}, color(st, 1, defaults));
        if (z > zb) poly({{x0, y0, zb}, {x1, y0, zb}, {x1, y0, z}, {x0, y0, z}}, color(st, 2, defaults));
        poly({{x0, y0, z}, {x1, y0, z}, {x1, y1, z}, {x0, y1, z}}, color(st, 0, defaults));
    }
    return document(box, st.scale, st, body.str());
}

std::string render_svg(const DominoTiling& t, const RenderStyle& st) {
    check(st);
    static const std::vector<std::string> defaults{"#d7263d", "#1b998b", "#f46036", "#2e294e"};
    const double s = st.scale;
    Box box;
    std::ostringstream body;
    auto sx = [&](double x) { return x * s; };
    auto sy = [&](double y) { return -y * s; };

    // region squares
    std::set<std::pair<long, long>> region;
    if (t.aztec_order) {
        int n = *t.aztec_order;
        for (long y = 1 - n; y <= n; ++y)
            for (long x = -2L * n; x <= 1; ++x)
                if (in_aztec_diamond(n, x, y)) region.insert({x, y});
    } else {
        for (std::size_t k = 0; k <= t.word.size(); ++k)
            for (long y = t.ymin; y <= t.ymax; ++y) region.insert({y - static_cast<long>(k), y});
    }
    for (auto [x, y] : region) {
        box.add(sx(x), sy(y + 1));
        box.add(sx(x + 1), sy(y));
    }
    for (const auto& d : t.dominoes) {
        double w = d.vertical ? 1 : 2, hgt = d.vertical ? 2 : 1;
        std::size_t k = (d.vertical ? 2 : 0) + (d.positive ? 0 : 1);
        box.add(sx(d.x), sy(d.y + hgt));
        box.add(sx(d.x + w), sy(d.y));
        body << "<rect x=\"" << num(sx(d.x)) << "\" y=\"" << num(sy(d.y + hgt)) << "\" width=\"" << num(w * s)
             << "\" height=\"" << num(hgt * s) << "\" fill=\"" << color(st, k, defaults)
             << "\" stroke=\"#111\" stroke-width=\"" << num(s * 0.05) << "\"/>\n";
    }
    if (st.outline) {
        body << "<path fill=\"none\" stroke=\"#000\" stroke-width=\"" << num(s * 0.12) << "\" d=\"";
        for (auto [x, y] : region) {
            auto edge = [&](double ax, double ay, double bx, double by) {
                body << "M" << num(sx(ax)) << " " << num(sy(ay)) << "L" << num(sx(bx)) << " " << num(sy(by));
            };
            if (!region.count({x - 1, y})) edge(x, y, x, y + 1);
            if (!region.count({x + 1, y})) edge(x + 1, y, x + 1, y + 1);
            if (!region.count({x, y - 1})) edge(x, y, x + 1, y);
            if (!region.count({x, y + 1})) edge(x, y + 1, x + 1, y + 1);
        }
        body << "\"/>\n";
    }
    return document(box, s, st, body.str());
}

std::string render_maya_svg(const std::vector<Partition>& lambdas, const RenderStyle& st) {
    check(st);
    static const std::vector<std::string> defaults{"#222222", "#ffffff"};
    long L = 0;
    for (const auto& p : lambdas) L = std::max<long>(L, std::max<long>(p.largest(), static_cast<long>(p.length())));
    long lo = -L - 1, hi = L + 1;
    const double s = st.scale;
    Box box;
    std::ostringstream body;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        MayaWindow w = to_maya(lambdas[k], 0, lo, hi);
        for (std::size_t c = 0; c < w.cells.size(); ++c) {
            double X = static_cast<double>(k) * s;
            double Y = -(static_cast<double>(lo) + static_cast<double>(c) + 0.5) * s;
            bool particle = w.cells[c] == MayaCell::particle;
            box.add(X - s / 2, Y - s / 2);
            box.add(X + s / 2, Y + s / 2);
            body << "<circle cx=\"" << num(X) << "\" cy=\"" << num(Y) << "\" r=\"" << num(s * 0.35) << "\" fill=\""
                 << color(st, particle ? 0 : 1, defaults) << "\" stroke=\"#222\" stroke-width=\"" << num(s * 0.05)
                 << "\"/>\n";
        }
    }
    return document(box, s, st, body.str());
}

}  // namespace schur
