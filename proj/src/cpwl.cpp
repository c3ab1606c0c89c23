#include "kuhnnet/cpwl.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "kuhnnet/errors.hpp"

namespace kuhnnet {

Cpwl Cpwl::constant(double c) {
    Cpwl f;
    f.base_ = c;
    return f;
}

Cpwl Cpwl::affine(double slope, double intercept) {
    Cpwl f;
    if (slope == 0.0) {
        f.base_ = intercept;
        return f;
    }
    f.xs_ = {0.0};
    f.ys_ = {intercept};
    f.left_ = slope;
    f.right_ = slope;
    return f;
}

Cpwl Cpwl::from_points(std::vector<double> xs, std::vector<double> ys, double left_slope,
                       double right_slope) {
    if (xs.size() != ys.size() || xs.empty()) throw input_error("cpwl points mismatch");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw input_error("cpwl breakpoints must strictly increase");
    Cpwl f;
    f.xs_ = std::move(xs);
    f.ys_ = std::move(ys);
    f.left_ = left_slope;
    f.right_ = right_slope;
    f.normalize();
    return f;
}

void Cpwl::normalize() {
    if (xs_.empty()) return;
    // Drop interior breakpoints with no slope change.
    std::vector<double> xs, ys;
    xs.reserve(xs_.size());
    ys.reserve(ys_.size());
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        const double before = (i == 0) ? left_ : (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
        const double after =
            (i + 1 == xs_.size()) ? right_ : (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
        if (before != after) {
            xs.push_back(xs_[i]);
            ys.push_back(ys_[i]);
        }
    }
    if (xs.empty()) {
        base_ = ys_[0] - left_ * 0.0 - (xs_[0] * left_); // globally affine
        if (left_ != 0.0) {
            xs.push_back(xs_[0]);
            ys.push_back(ys_[0]);
        } else {
            base_ = ys_[0];
        }
    }
    xs_ = std::move(xs);
    ys_ = std::move(ys);
}

double Cpwl::eval(double x) const {
    if (xs_.empty()) return base_;
    if (x <= xs_.front()) return ys_.front() + left_ * (x - xs_.front());
    if (x >= xs_.back()) return ys_.back() + right_ * (x - xs_.back());
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return ys_[i - 1] + t * (ys_[i] - ys_[i - 1]);
}

double Cpwl::slope_left_of(double x) const {
    if (xs_.empty()) return 0.0;
    if (x <= xs_.front()) return left_;
    if (x > xs_.back()) return right_;
    const auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == 0) return left_;
    if (i == xs_.size()) return right_;
    // slope on (xs_[i-1], xs_[i]] if x in that interval, else on segment ending at x
    if (xs_[i] == x)
        return i == 0 ? left_ : (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
}

double Cpwl::slope_right_of(double x) const {
    if (xs_.empty()) return 0.0;
    if (x < xs_.front()) return left_;
    if (x >= xs_.back()) return right_;
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == xs_.size()) return right_;
    return (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
}

double Cpwl::derivative_jump(double x) const { return slope_right_of(x) - slope_left_of(x); }

double Cpwl::max_abs_slope() const {
    double m = std::max(std::abs(left_), std::abs(right_));
    for (std::size_t i = 1; i < xs_.size(); ++i)
        m = std::max(m, std::abs((ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1])));
    return m;
}

Cpwl Cpwl::operator+(const Cpwl& o) const {
    std::set<double> breaks(xs_.begin(), xs_.end());
    breaks.insert(o.xs_.begin(), o.xs_.end());
    if (breaks.empty()) return constant(base_ + o.base_);
    std::vector<double> xs(breaks.begin(), breaks.end());
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (double x : xs) ys.push_back(eval(x) + o.eval(x));
    return from_points(std::move(xs), std::move(ys), left_ + o.left_, right_ + o.right_);
}

Cpwl Cpwl::operator-(const Cpwl& o) const { return *this + o.scaled(-1.0); }

Cpwl Cpwl::scaled(double s) const {
    Cpwl f = *this;
    f.base_ *= s;
    f.left_ *= s;
    f.right_ *= s;
    for (double& y : f.ys_) y *= s;
    return f;
}

Cpwl Cpwl::plus_affine(double slope, double intercept) const { return *this + affine(slope, intercept); }

Cpwl Cpwl::relu() const {
    if (xs_.empty()) return constant(base_ > 0.0 ? base_ : 0.0);
    // Insert zero crossings as breakpoints, then clip.
    std::vector<double> xs;
    std::vector<double> ys;
    auto push = [&](double x, double y) {
        if (!xs.empty() && xs.back() == x) return;
        xs.push_back(x);
        ys.push_back(y);
    };
    // Left tail crossing.
    if (left_ != 0.0) {
        const double y0 = ys_.front();
        if ((y0 > 0.0 && left_ > 0.0) || (y0 < 0.0 && left_ < 0.0)) {
            const double xc = xs_.front() - y0 / left_;
            push(xc, 0.0);
        }
    }
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (i > 0) {
            const double ya = ys_[i - 1], yb = ys_[i];
            if ((ya < 0.0 && yb > 0.0) || (ya > 0.0 && yb < 0.0)) {
                const double t = ya / (ya - yb);
                push(xs_[i - 1] + t * (xs_[i] - xs_[i - 1]), 0.0);
            }
        }
        push(xs_[i], ys_[i]);
    }
    if (right_ != 0.0) {
        const double y1 = ys_.back();
        if ((y1 > 0.0 && right_ < 0.0) || (y1 < 0.0 && right_ > 0.0)) {
            const double xc = xs_.back() - y1 / right_;
            push(xc, 0.0);
        }
    }
    for (double& y : ys) y = y > 0.0 ? y : 0.0;
    double lt = left_, rt = right_;
    // Tail slopes clip to zero when the tail is below zero.
    const double far_left = ys.front() + lt * -1.0;
    if (ys.front() == 0.0 && lt > 0.0) lt = 0.0; // tail heads negative going left
    else if (ys.front() <= 0.0 && far_left <= 0.0) lt = 0.0;
    const double far_right = ys.back() + rt * 1.0;
    if (ys.back() == 0.0 && rt < 0.0) rt = 0.0;
    else if (ys.back() <= 0.0 && far_right <= 0.0) rt = 0.0;
    return from_points(std::move(xs), std::move(ys), lt, rt);
}

} // namespace kuhnnet
