#pragma once

#include <vector>

namespace kuhnnet {

// Continuous piecewise-linear function on R: breakpoints with values plus
// tail slopes. Used to stage the explicit memorizer constructions before
// they are written into layers.
class Cpwl {
public:
    Cpwl() = default; // constant 0
    static Cpwl constant(double c);
    static Cpwl affine(double slope, double intercept);
    // Interpolant through (xs[i], ys[i]) with the given tail slopes.
    static Cpwl from_points(std::vector<double> xs, std::vector<double> ys,
                            double left_slope = 0.0, double right_slope = 0.0);

    double eval(double x) const;
    double slope_left_of(double x) const;
    double slope_right_of(double x) const;
    // f'_+(x) - f'_-(x).
    double derivative_jump(double x) const;
    double max_abs_slope() const;

    Cpwl operator+(const Cpwl& o) const;
    Cpwl operator-(const Cpwl& o) const;
    Cpwl scaled(double s) const;
    Cpwl plus_affine(double slope, double intercept) const;
    // sigma(f): zero crossings become breakpoints.
    Cpwl relu() const;

    const std::vector<double>& breakpoints() const { return xs_; }
    const std::vector<double>& values() const { return ys_; }
    double left_tail_slope() const { return left_; }
    double right_tail_slope() const { return right_; }

private:
    void normalize();
    std::vector<double> xs_;
    std::vector<double> ys_;
    double left_ = 0.0;
    double right_ = 0.0;
    double base_ = 0.0; // value when there are no breakpoints
};

} // namespace kuhnnet
