#include "clband/render.hpp"

#include <cmath>
#include <sstream>

namespace clband {

namespace {

struct Box {
    double x0 = -3, x1 = 3, y0 = -3, y1 = 3;
};

// y-values of the curve at x (float)
std::vector<double> curve_ys(const Curve& c, double x) {
    double a = to_double(c.C);
    double b = to_double(c.B) * x + to_double(c.E);
    double q = to_double(c.A) * x * x + to_double(c.D) * x + to_double(c.F);
    std::vector<double> out;
    if (std::abs(a) < 1e-14) {
        if (std::abs(b) > 1e-14) out.push_back(-q / b);
        return out;
    }
    double disc = b * b - 4 * a * q;
    if (disc < 0) return out;
    double s = std::sqrt(disc);
    out.push_back((-b - s) / (2 * a));
    out.push_back((-b + s) / (2 * a));
    return out;
}

}  // namespace

std::string render_svg(const FaceComplex& fc) {
    const Arrangement& arr = fc.arrangement();
    Box box;
    for (const Face& f : fc.faces()) {
        auto [x, y] = f.sample.approx();
        box.x0 = std::min(box.x0, x - 1);
        box.x1 = std::max(box.x1, x + 1);
        box.y0 = std::min(box.y0, y - 1);
        box.y1 = std::max(box.y1, y + 1);
    }
    const double W = 640, H = 640;
    auto X = [&](double x) { return (x - box.x0) / (box.x1 - box.x0) * W; };
    auto Y = [&](double y) { return H - (y - box.y0) / (box.y1 - box.y0) * H; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    for (int k = 0; k < arr.size(); ++k) {
        const Curve& c = arr[k];
        const char* col = colors[static_cast<size_t>(k) % 6];
        if (c.kind == CurveKind::Line && c.is_vertical_line()) {
            double x = to_double(-c.F / c.D);
            os << "<line x1=\"" << X(x) << "\" y1=\"0\" x2=\"" << X(x) << "\" y2=\"" << H
               << "\" stroke=\"" << col << "\" stroke-width=\"1.5\"/>\n";
            continue;
        }
        // sample both branches as polylines
        const int N = 400;
        for (int branch = 0; branch < 2; ++branch) {
            std::ostringstream pts;
            bool active = false;
            for (int i = 0; i <= N; ++i) {
                double x = box.x0 + (box.x1 - box.x0) * i / N;
                auto ys = curve_ys(c, x);
                if (static_cast<int>(ys.size()) > branch) {
                    pts << (active ? " " : "") << X(x) << "," << Y(ys[static_cast<size_t>(branch)]);
                    active = true;
                } else if (active) {
                    os << "<polyline fill=\"none\" stroke=\"" << col
                       << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
                    pts.str("");
                    active = false;
                }
            }
            if (active)
                os << "<polyline fill=\"none\" stroke=\"" << col
                   << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
        }
    }
    for (const Face& f : fc.faces()) {
        auto [x, y] = f.sample.approx();
        if (f.dim == 0)
            os << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
               << "\" r=\"3\" fill=\"black\"/>\n";
        os << "<text x=\"" << X(x) + 4 << "\" y=\"" << Y(y) - 4
           << "\" font-size=\"11\" font-family=\"monospace\">" << f.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace clband
