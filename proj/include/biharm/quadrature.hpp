#pragma once

#include <vector>

namespace biharm {

struct Node {
    double x;
    double w;
};

/// Composite 16-point Gauss-Legendre on [a, b]. Panel widths grow
/// geometrically by `grading` (>= 1) away from `a`; grading = 1 gives equal panels.
std::vector<Node> gauss_legendre_panels(double a, double b, int panels, double grading = 1.0);

/// Nodes equally spaced in log s on [s_min, s_max] (trapezoid in log s, with
/// the Jacobian folded into the weights). Integrands s*F(s) that decay at both
/// ends in log s converge geometrically in the node count.
struct LogGrid {
    double s_min;
    double s_max;
    int nodes;

    /// Grid covering [s_min, s_max] with log-spacing at most `step`.
    static LogGrid with_step(double s_min, double s_max, double step);
    double log_step() const;
};

/// Throws BadQuadrature for nodes < 2 or an empty/negative range.
std::vector<Node> log_trapezoid(const LogGrid& grid);

/// Equal-weight trapezoid on the full period [0, 2*pi).
std::vector<Node> periodic_trapezoid(int count);

} // namespace biharm
