#include "biharm/quadrature.hpp"

#include "biharm/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace biharm {

std::vector<Node> gauss_legendre_panels(double a, double b, int panels, double grading) {
    if (panels < 1 || !(b > a) || grading < 1.0)
        throw BadQuadrature("need panels >= 1, b > a and grading >= 1");
    using Rule = boost::math::quadrature::gauss<double, 16>;
    const auto& abscissa = Rule::abscissa();
    const auto& weights = Rule::weights();

    // Panel widths w0 * grading^p summing to b - a.
    double total = 0.0;
    for (int p = 0; p < panels; ++p) total += std::pow(grading, p);
    const double w0 = (b - a) / total;

    std::vector<Node> out;
    out.reserve(std::size_t(panels) * 16);
    double left = a;
    for (int p = 0; p < panels; ++p) {
        const double right = (p == panels - 1) ? b : left + w0 * std::pow(grading, p);
        const double mid = 0.5 * (left + right);
        const double half = 0.5 * (right - left);
        for (std::size_t i = 0; i < abscissa.size(); ++i) {
            out.push_back({mid - half * abscissa[i], half * weights[i]});
            out.push_back({mid + half * abscissa[i], half * weights[i]});
        }
        left = right;
    }
    return out;
}

LogGrid LogGrid::with_step(double s_min, double s_max, double step) {
    if (!(s_min > 0.0) || !(s_max > s_min) || !(step > 0.0))
        throw BadQuadrature("log grid needs 0 < s_min < s_max and step > 0");
    const double span = std::log(s_max / s_min);
    return {s_min, s_max, int(std::ceil(span / step)) + 1};
}

double LogGrid::log_step() const { return std::log(s_max / s_min) / (nodes - 1); }

std::vector<Node> log_trapezoid(const LogGrid& grid) {
    if (grid.nodes < 2 || !(grid.s_min > 0.0) || !(grid.s_max > grid.s_min))
        throw BadQuadrature("log grid needs >= 2 nodes and 0 < s_min < s_max, got nodes=" +
                            std::to_string(grid.nodes));
    const double v0 = std::log(grid.s_min);
    const double h = grid.log_step();
    std::vector<Node> out(std::size_t(grid.nodes));
    for (int i = 0; i < grid.nodes; ++i) {
        const double s = std::exp(v0 + i * h);
        const double end = (i == 0 || i == grid.nodes - 1) ? 0.5 : 1.0;
        out[std::size_t(i)] = {s, end * h * s};
    }
    return out;
}

std::vector<Node> periodic_trapezoid(int count) {
    if (count < 1) throw BadQuadrature("periodic trapezoid needs count >= 1");
    const double h = 2.0 * std::numbers::pi / count;
    std::vector<Node> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out[std::size_t(i)] = {i * h, h};
    return out;
}

} // namespace biharm
