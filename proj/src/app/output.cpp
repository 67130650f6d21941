#include "app/output.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

namespace vortexfield::app {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kSentinel = "#ff00ff";

// Piecewise-linear blue-to-yellow ramp, u in [0, 1].
std::string ramp(double u)
{
    static constexpr double stops[][3] = {
        {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
    u = std::clamp(u, 0.0, 1.0) * 4.0;
    const int k = std::min(3, static_cast<int>(u));
    const double w = u - k;
    int rgb[3];
    for (int c = 0; c < 3; ++c) rgb[c] = static_cast<int>(std::lround((1 - w) * stops[k][c] + w * stops[k + 1][c]));
    return fmt::format("#{:02x}{:02x}{:02x}", rgb[0], rgb[1], rgb[2]);
}

std::string svg_number(double v) { return fmt::format("{:.4f}", v); }

}  // namespace

std::string format_number(double v)
{
    if (std::isnan(v)) throw OutputError("refusing to write NaN");
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{}", v);
}

nlohmann::ordered_json json_number(double v)
{
    if (std::isnan(v)) throw OutputError("refusing to write NaN");
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

void prepare_output_dir(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw OutputError("cannot create output directory " + dir.string());
    }
    const auto probe = dir / ".vortexfield-write-test";
    {
        std::ofstream f(probe);
        if (!f) throw OutputError("output directory is not writable: " + dir.string());
    }
    std::filesystem::remove(probe, ec);
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    f << text;
    f.close();
    if (!f) throw OutputError("failed to write " + path.string());
}

std::string landscape_csv(const LandscapeGrid& g)
{
    std::string out = "s1,s2,W\n";
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            out += fmt::format("{},{},{}\n", format_number(g.angle(i)), format_number(g.angle(j)),
                               format_number(g.at(i, j)));
        }
    }
    return out;
}

std::string field_csv(const std::vector<VectorFieldSample>& samples)
{
    std::string out = "x,y,mx,my\n";
    for (const auto& s : samples) {
        out += fmt::format("{},{},{},{}\n", format_number(s.x), format_number(s.y), format_number(s.mx),
                           format_number(s.my));
    }
    return out;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string landscape_svg(const LandscapeGrid& g)
{
    constexpr double size = 512.0;
    constexpr double margin = 48.0;
    const double cell = size / g.n;
    // Colour range: min to the 90th percentile of the finite values, so the
    // log blow-up next to the diagonal does not wash out the rest.
    std::vector<double> finite;
    for (double v : g.energy) {
        if (std::isfinite(v)) finite.push_back(v);
    }
    std::sort(finite.begin(), finite.end());
    const double lo = finite.empty() ? 0.0 : finite.front();
    const double hi = finite.empty() ? 1.0 : finite[finite.size() * 9 / 10];
    const double span = hi > lo ? hi - lo : 1.0;

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        size + 2 * margin);
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            const double v = g.at(i, j);
            const std::string colour = std::isfinite(v) ? ramp((v - lo) / span) : kSentinel;
            // s1 along x, s2 upward
            out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
                               svg_number(margin + i * cell), svg_number(margin + size - (j + 1) * cell),
                               svg_number(cell), svg_number(cell), colour);
        }
    }
    if (g.argmin_i >= 0) {
        out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n",
                           svg_number(margin + (g.argmin_i + 0.5) * cell),
                           svg_number(margin + size - (g.argmin_j + 0.5) * cell));
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">s1 (0 to 2pi)</text>\n",
                       svg_number(margin + size / 2), svg_number(size + 1.6 * margin));
    out += fmt::format("<text x=\"14\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 14 {})\">s2 (0 to 2pi)</text>\n",
                       svg_number(margin + size / 2), svg_number(margin + size / 2));
    out += "</svg>\n";
    return out;
}

std::string field_svg(const ConformalDomain& domain, const std::vector<VectorFieldSample>& samples,
                      const std::vector<Marker>& vortices)
{
    constexpr double size = 560.0;
    const double extent = std::abs(domain.phi(1.0)) * 1.1;
    const double scale = size / (2.0 * extent);
    auto px = [&](double x) { return svg_number(size / 2 + x * scale); };
    auto py = [&](double y) { return svg_number(size / 2 - y * scale); };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n", size);
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::string outline = "<path d=\"";
    for (int k = 0; k <= 256; ++k) {
        const Complex w = domain.phi(std::polar(1.0, 2.0 * kPi * k / 256));
        outline += fmt::format("{}{} {} ", k == 0 ? "M" : "L", px(w.real()), py(w.imag()));
    }
    out += outline + "Z\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    const double arrow = 0.06 * extent;
    for (const auto& s : samples) {
        const double angle = std::atan2(s.my, s.mx);
        const int grey = static_cast<int>(std::lround(40 + 180 * (angle + kPi) / (2 * kPi)));
        out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#{:02x}{:02x}{:02x}\" fill-opacity=\"0.5\"/>\n",
                           px(s.x), py(s.y), svg_number(0.5 * arrow * scale), grey, grey, grey);
        const double x0 = s.x - 0.5 * arrow * s.mx, y0 = s.y - 0.5 * arrow * s.my;
        const double x1 = s.x + 0.5 * arrow * s.mx, y1 = s.y + 0.5 * arrow * s.my;
        const double hx = 0.35 * arrow, hw = 0.18 * arrow;
        const double bx = x1 - hx * s.mx, by = y1 - hx * s.my;
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1\"/>\n",
                           px(x0), py(y0), px(bx), py(by));
        out += fmt::format("<polygon points=\"{},{} {},{} {},{}\" fill=\"black\"/>\n", px(x1), py(y1),
                           px(bx - hw * s.my), py(by + hw * s.mx), px(bx + hw * s.my), py(by - hw * s.mx));
    }
    for (const auto& v : vortices) {
        out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"7\" fill=\"red\" stroke=\"black\"/>\n", px(v.x), py(v.y));
    }
    out += "</svg>\n";
    return out;
}

}  // namespace vortexfield::app
