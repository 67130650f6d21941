#include "vortexfield/quadrature.hpp"

#include "vortexfield/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace vortexfield {

namespace {

// Boost stores the non-negative abscissae only; expand to the full rule once.
template <int N>
struct FullRule {
    std::array<double, N> x{};
    std::array<double, N> w{};

    FullRule()
    {
        using Gauss = boost::math::quadrature::gauss<double, N>;
        const auto& ax = Gauss::abscissa();
        const auto& wt = Gauss::weights();
        int k = 0;
        for (int i = static_cast<int>(ax.size()) - 1; i >= 0; --i) {
            if (ax[i] == 0.0) continue;
            x[k] = -ax[i];
            w[k] = wt[i];
            ++k;
        }
        for (std::size_t i = 0; i < ax.size(); ++i) {
            x[k] = ax[i];
            w[k] = wt[i];
            ++k;
        }
    }
};

template <int N>
GaussRule rule()
{
    static const FullRule<N> r;
    return {r.x, r.w};
}

double panel(const std::function<double(double)>& f, double a, double b, const GaussRule& g)
{
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f(mid + half * g.nodes[i]);
    return s * half;
}

}  // namespace

GaussRule gauss_legendre(int order)
{
    switch (order) {
    case 8: return rule<8>();
    case 16: return rule<16>();
    case 24: return rule<24>();
    case 32: return rule<32>();
    default: throw DomainError("unsupported Gauss-Legendre order " + std::to_string(order));
    }
}

double integrate_gauss(const std::function<double(double)>& f, double a, double b, int panels,
                       int order)
{
    const GaussRule g = gauss_legendre(order);
    const double h = (b - a) / panels;
    double s = 0.0;
    for (int p = 0; p < panels; ++p) s += panel(f, a + p * h, a + (p + 1) * h, g);
    return s;
}

double integrate_graded(const std::function<double(double)>& f, double a, double b, int levels,
                        double ratio, int order)
{
    const GaussRule g = gauss_legendre(order);
    // Breakpoints a + (b - a) ratio^k, k = 0..levels; the innermost piece
    // [a, a + (b - a) ratio^levels] is dropped (its contribution is below
    // rounding for the singularities this is meant for).
    std::vector<double> pieces;
    pieces.reserve(levels);
    double hi = b;
    for (int k = 0; k < levels; ++k) {
        const double lo = a + (hi - a) * ratio;
        pieces.push_back(panel(f, lo, hi, g));
        hi = lo;
    }
    double s = 0.0;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) s += *it;  // small to large
    return s;
}

double singular_quadrature_1d(LogSinIntegral kind)
{
    constexpr double half_pi = 0.5 * std::numbers::pi;
    auto smooth = [](double x) { return x < 1e-8 ? -x * x / 6.0 : std::log(std::sin(x) / x); };
    switch (kind) {
    case LogSinIntegral::log_sin: {
        // int_0^{pi/2} log x dx = (pi/2)(log(pi/2) - 1)
        const double singular = half_pi * (std::log(half_pi) - 1.0);
        return integrate_gauss(smooth, 0.0, half_pi, 2, 16) + singular;
    }
    case LogSinIntegral::log_sin_squared: {
        auto f = [](double x) {
            const double l = std::log(std::sin(x));
            return l * l;
        };
        return integrate_graded(f, 0.0, half_pi);
    }
    }
    return 0.0;
}

}  // namespace vortexfield
