#include "kuhnnet/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "kuhnnet/errors.hpp"
#include "kuhnnet/grid.hpp"

namespace kuhnnet {

void Modulus::validate() const {
    if (!(T > 0.0) || !std::isfinite(T)) throw input_error("modulus requires T > 0");
    if (!(jump >= 0.0) || !std::isfinite(jump)) throw input_error("modulus jump must be >= 0");
    double prev_t = 0.0, prev_w = jump;
    double prev_slope = std::numeric_limits<double>::infinity();
    for (const auto& [t, w] : knots) {
        if (!(t > prev_t) || t > T * (1 + 1e-12)) throw input_error("modulus knots must increase within (0, T]");
        if (w + 1e-12 < prev_w) throw input_error("modulus must be monotone increasing");
        const double slope = (w - prev_w) / (t - prev_t);
        if (slope > prev_slope + 1e-9) throw input_error("modulus must be concave");
        prev_slope = slope;
        prev_t = t;
        prev_w = w;
    }
}

double Modulus::eval(double t) const {
    if (!(t >= 0.0)) throw domain_error("modulus evaluated at t < 0");
    if (t == 0.0) return 0.0;
    if (t > T) {
        if (extension == Extension::clamped) return knots.empty() ? jump : knots.back().second;
        throw domain_error("modulus evaluated beyond T = " + std::to_string(T));
    }
    double t0 = 0.0, w0 = jump;
    for (const auto& [t1, w1] : knots) {
        if (t <= t1) return w0 + (w1 - w0) * ((t - t0) / (t1 - t0));
        t0 = t1;
        w0 = w1;
    }
    return w0; // t == T within rounding of the last knot
}

Modulus lipschitz_modulus(double L, double T) {
    if (!(L >= 0.0) || !std::isfinite(L)) throw input_error("Lipschitz constant must be >= 0");
    if (!(T > 0.0)) throw input_error("modulus requires T > 0");
    Modulus m;
    m.T = T;
    m.jump = 0.0;
    m.knots = {{T, L * T}};
    m.validate();
    return m;
}

Modulus holder_modulus(double nu, double alpha, double T, std::size_t knot_count) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw input_error("Holder coefficient must be >= 0");
    if (!(alpha > 0.0) || !(alpha <= 1.0)) throw domain_error("Holder exponent must lie in (0, 1]");
    if (!(T > 0.0)) throw input_error("modulus requires T > 0");
    if (knot_count < 1) throw input_error("need at least one knot");
    Modulus m;
    m.T = T;
    m.jump = 0.0;
    m.exact_at_knots_only = alpha < 1.0;
    m.knots.reserve(knot_count);
    for (std::size_t k = 1; k <= knot_count; ++k) {
        const double t = T * static_cast<double>(k) / static_cast<double>(knot_count);
        m.knots.emplace_back(t, nu * std::pow(t, alpha));
    }
    m.validate();
    return m;
}

namespace {

// Upper convex hull by monotone chain; collinear middle points are merged.
std::vector<std::pair<double, double>> upper_hull(const std::vector<std::pair<double, double>>& pts) {
    std::vector<std::pair<double, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            const double cross = (b.first - a.first) * (p.second - a.second) -
                                 (b.second - a.second) * (p.first - a.first);
            if (cross >= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

} // namespace

GridModulus min_concave_from_grid(const SampleGrid& grid) {
    grid.validate();
    const int nd = grid.n * grid.d;
    std::vector<double> m(static_cast<std::size_t>(nd) + 1, 0.0);

    const std::size_t total = grid.point_count();
    std::vector<std::vector<int>> idx(total);
    for (std::size_t i = 0; i < total; ++i) idx[i] = grid.multi_index(i);
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = i + 1; j < total; ++j) {
            int dist = 0;
            for (int k = 0; k < grid.d; ++k) dist += std::abs(idx[i][k] - idx[j][k]);
            const double diff = std::abs(grid.values[i] - grid.values[j]);
            if (diff > m[dist]) m[dist] = diff;
        }
    }

    std::vector<std::pair<double, double>> pts;
    pts.reserve(m.size());
    pts.emplace_back(0.0, 0.0);
    for (int i = 1; i <= nd; ++i) pts.emplace_back(static_cast<double>(i) / grid.n, m[i]);
    auto hull = upper_hull(pts);

    // Concavity pushes any decrease to the tail; flatten it so the result is
    // monotone (still the least concave monotone majorant).
    double peak = 0.0;
    for (auto& [t, w] : hull) {
        if (w < peak)
            w = peak;
        else
            peak = w;
    }
    // Flattening can introduce collinear runs; re-merge.
    std::vector<std::pair<double, double>> knots;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        if (i + 1 < hull.size()) {
            const double s0 = (hull[i].second - hull[i - 1].second) / (hull[i].first - hull[i - 1].first);
            const double s1 = (hull[i + 1].second - hull[i].second) / (hull[i + 1].first - hull[i].first);
            if (s0 == s1) continue;
        }
        knots.push_back(hull[i]);
    }

    GridModulus out;
    out.modulus.T = static_cast<double>(nd) / grid.n;
    out.modulus.jump = 0.0;
    out.modulus.knots = std::move(knots);
    if (out.modulus.knots.empty())
        out.modulus.knots.emplace_back(out.modulus.T, 0.0); // constant grid
    out.modulus.extension = Modulus::Extension::clamped;
    out.modulus.validate();

    out.pair_maxima.assign(m.begin() + 1, m.end());
    out.equality_at.resize(out.pair_maxima.size());
    for (int i = 1; i <= nd; ++i) {
        const double w = out.modulus.eval(static_cast<double>(i) / grid.n);
        out.equality_at[i - 1] = std::abs(w - m[i]) <= 1e-12 * std::max(1.0, std::abs(w));
    }
    return out;
}

} // namespace kuhnnet
