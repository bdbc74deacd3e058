#include "vfcomb/render.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <vector>

#include "vfcomb/bracketing.hpp"

namespace vfcomb {

namespace {

constexpr double kSize = 400.0;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 160.0;

struct Point {
    double x;
    double y;
};

// Unit-disk coordinates to SVG coordinates (y axis points down).
Point to_canvas(double ux, double uy) { return {kCenter + kRadius * ux, kCenter - kRadius * uy}; }

Point on_circle(double position, int n, double scale = 1.0) {
    const double angle = 2 * std::numbers::pi * position / n;
    return to_canvas(scale * std::cos(angle), scale * std::sin(angle));
}

Point separatrix_point(int l, int n, double scale = 1.0) { return on_circle(l, n, scale); }
Point end_point(int l, int n, double scale = 1.0) { return on_circle(l - 0.5, n, scale); }

// Quadratic chord bowed toward the center; straight through diameters.
std::string chord_path(Point a, Point b) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    const Point control{(mid.x + kCenter) / 2, (mid.y + kCenter) / 2};
    os << "M " << a.x << ' ' << a.y << " Q " << control.x << ' ' << control.y << ' ' << b.x << ' '
       << b.y;
    return os.str();
}

struct LandingClass {
    std::vector<int> members;
    Point equilibrium;
};

std::vector<LandingClass> landing_classes(const PairingConfig& config) {
    const int n = config.size();
    const auto separatrix = to_separatrix(to_transversal_data(config));
    std::vector<LandingClass> out;
    for (const auto& block : separatrix.classes) {
        const bool homoclinic = std::find(separatrix.homoclinic.begin(), separatrix.homoclinic.end(),
                                          block.front()) != separatrix.homoclinic.end();
        if (homoclinic) continue;
        double sx = 0, sy = 0;
        for (int l : block) {
            const double angle = 2 * std::numbers::pi * l / n;
            sx += std::cos(angle);
            sy += std::sin(angle);
        }
        const double norm = std::hypot(sx, sy);
        const double scale = block.size() == 1 ? 0.7 : 0.55;
        const Point eq = norm < 1e-9 ? to_canvas(0, 0) : to_canvas(scale * sx / norm, scale * sy / norm);
        out.push_back({block, eq});
    }
    return out;
}

}  // namespace

std::string_view to_string(DiskModel model) {
    return model == DiskModel::Separatrix ? "separatrix" : "transversal";
}

std::string render_svg(const PairingConfig& config, DiskModel model) {
    const int n = config.size();
    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize
       << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
       << "  <title>" << to_string(model) << " disk model, degree " << config.degree() << ": "
       << render(config) << "</title>\n"
       << "  <circle class=\"boundary\" cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\""
       << kRadius << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    for (const auto& p : config.pairs()) {
        if (p.kind == PairKind::Round) {
            os << "  <path class=\"chord homoclinic\" d=\""
               << chord_path(separatrix_point(p.low, n), separatrix_point(p.high, n))
               << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
        } else {
            os << "  <path class=\"chord transversal\" d=\""
               << chord_path(end_point(p.low, n), end_point(p.high, n))
               << "\" fill=\"none\" stroke=\"#b3401a\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
        }
    }

    if (model == DiskModel::Separatrix && n > 0) {
        for (const auto& cls : landing_classes(config)) {
            for (int l : cls.members) {
                const Point s = separatrix_point(l, n);
                os << "  <line class=\"landing\" x1=\"" << s.x << "\" y1=\"" << s.y << "\" x2=\""
                   << cls.equilibrium.x << "\" y2=\"" << cls.equilibrium.y
                   << "\" stroke=\"#2e7d32\" stroke-width=\"1.5\"/>\n";
            }
            os << "  <circle class=\"equilibrium\" cx=\"" << cls.equilibrium.x << "\" cy=\""
               << cls.equilibrium.y << "\" r=\"4\" fill=\"#2e7d32\"/>\n";
        }
    }

    for (int l = 0; l < n; ++l) {
        const Point s = separatrix_point(l, n);
        const Point label = separatrix_point(l, n, 1.12);
        os << "  <circle class=\"separatrix\" cx=\"" << s.x << "\" cy=\"" << s.y
           << "\" r=\"3\" fill=\"black\"/>\n"
           << "  <text x=\"" << label.x << "\" y=\"" << label.y
           << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">s" << l
           << "</text>\n";
        if (model == DiskModel::Transversal) {
            const Point e = end_point(l, n);
            const Point elabel = end_point(l, n, 1.12);
            os << "  <circle class=\"end\" cx=\"" << e.x << "\" cy=\"" << e.y
               << "\" r=\"2\" fill=\"white\" stroke=\"black\"/>\n"
               << "  <text x=\"" << elabel.x << "\" y=\"" << elabel.y
               << "\" font-size=\"10\" fill=\"#555\" text-anchor=\"middle\" "
                  "dominant-baseline=\"middle\">e"
               << l << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_dot(const PairingConfig& config, DiskModel model) {
    const int n = config.size();
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "graph disk_model {\n"
       << "  label=\"" << to_string(model) << " disk model, degree " << config.degree() << ": "
       << render(config) << "\";\n"
       << "  node [shape=point];\n";
    auto pos = [](Point p) {
        std::ostringstream ps;
        ps << std::fixed << std::setprecision(2) << p.x << ',' << (kSize - p.y) << '!';
        return ps.str();
    };
    for (int l = 0; l < n; ++l) {
        os << "  s" << l << " [xlabel=\"s" << l << "\", pos=\"" << pos(separatrix_point(l, n))
           << "\"];\n";
        os << "  e" << l << " [shape=circle, width=0.05, label=\"\", pos=\"" << pos(end_point(l, n))
           << "\"];\n";
    }
    for (const auto& p : config.pairs()) {
        if (p.kind == PairKind::Round) {
            os << "  s" << p.low << " -- s" << p.high << " [class=\"chord homoclinic\"];\n";
        } else {
            os << "  e" << p.low << " -- e" << p.high
               << " [class=\"chord transversal\", style=dashed];\n";
        }
    }
    if (model == DiskModel::Separatrix && n > 0) {
        int index = 0;
        for (const auto& cls : landing_classes(config)) {
            os << "  z" << index << " [shape=point, width=0.08, pos=\"" << pos(cls.equilibrium)
               << "\"];\n";
            for (int l : cls.members) os << "  s" << l << " -- z" << index << " [class=landing];\n";
            ++index;
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace vfcomb
