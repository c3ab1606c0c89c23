#include "kuhnnet/kuhn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "kuhnnet/errors.hpp"

namespace kuhnnet {

double hat_value(const std::vector<int>& y, const std::vector<double>& x) {
    if (y.size() != x.size()) throw input_error("hat_value dimension mismatch");
    double even_max = 0.0, odd_max = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!std::isfinite(x[i])) throw input_error("non-finite point in hat_value");
        const double a = std::abs(x[i] - y[i]);
        if (y[i] % 2 == 0) {
            if (a > even_max) even_max = a;
        } else {
            if (a > odd_max) odd_max = a;
        }
    }
    const double s = 1.0 - even_max - odd_max;
    return s > 0.0 ? s : 0.0;
}

KuhnSimplexRef locate_simplex(const std::vector<double>& x, int n) {
    const int d = static_cast<int>(x.size());
    if (d < 1 || n < 1) throw input_error("locate_simplex requires d >= 1 and n >= 1");
    KuhnSimplexRef ref;
    ref.cell.resize(d);
    ref.reflection.resize(d);
    std::vector<double> u(d);
    for (int i = 0; i < d; ++i) {
        if (!(x[i] >= 0.0) || !(x[i] <= static_cast<double>(n)))
            throw domain_error("point outside [0,n]^d in coordinate " + std::to_string(i));
        int c = static_cast<int>(std::floor(x[i]));
        if (c >= n) c = n - 1; // coordinate exactly n maps into the top cell
        ref.cell[i] = c;
        const bool mirrored = (c % 2) == 1;
        ref.reflection[i] = mirrored;
        u[i] = mirrored ? static_cast<double>(c + 1) - x[i] : x[i] - static_cast<double>(c);
    }
    ref.perm.resize(d);
    std::iota(ref.perm.begin(), ref.perm.end(), 0);
    std::stable_sort(ref.perm.begin(), ref.perm.end(), [&](int a, int b) { return u[a] > u[b]; });
    return ref;
}

std::vector<std::vector<int>> simplex_vertices(const KuhnSimplexRef& ref) {
    const int d = static_cast<int>(ref.cell.size());
    if (static_cast<int>(ref.perm.size()) != d || static_cast<int>(ref.reflection.size()) != d)
        throw input_error("inconsistent simplex reference");
    std::vector<std::vector<int>> verts;
    verts.reserve(d + 1);
    std::vector<int> local(d, 0);
    for (int k = 0; k <= d; ++k) {
        if (k > 0) local[ref.perm[k - 1]] = 1;
        std::vector<int> global(d);
        for (int i = 0; i < d; ++i)
            global[i] = ref.reflection[i] ? ref.cell[i] + 1 - local[i] : ref.cell[i] + local[i];
        verts.push_back(std::move(global));
    }
    return verts;
}

namespace {

// Barycentric interpolation on the containing simplex, x in lattice units.
double interpolate_lattice(const SampleGrid& grid, const std::vector<double>& x) {
    const int d = grid.d;
    const KuhnSimplexRef ref = locate_simplex(x, grid.n);
    std::vector<double> u(d);
    for (int i = 0; i < d; ++i) {
        const double v = x[i] - ref.cell[i];
        u[i] = ref.reflection[i] ? 1.0 - v : v;
    }
    const auto verts = simplex_vertices(ref);
    // Chain coordinates: lambda_0 = 1 - u_(1), lambda_k = u_(k) - u_(k+1),
    // lambda_d = u_(d) with u_(k) sorted non-increasing.
    double acc = 0.0;
    double prev = 1.0;
    for (int k = 0; k <= d; ++k) {
        const double uk = (k < d) ? u[ref.perm[k]] : 0.0;
        const double lambda = prev - uk;
        acc += lambda * grid.values[grid.flat_index(verts[k])];
        prev = uk;
    }
    return acc;
}

} // namespace

double cpwl_eval(const SampleGrid& grid, const std::vector<double>& x) {
    grid.validate();
    if (static_cast<int>(x.size()) != grid.d) throw input_error("cpwl_eval dimension mismatch");
    std::vector<double> lattice(grid.d);
    for (int i = 0; i < grid.d; ++i) {
        if (!(x[i] >= 0.0) || !(x[i] <= 1.0)) throw domain_error("cpwl_eval point outside [0,1]^d");
        lattice[i] = x[i] * grid.n;
    }
    return interpolate_lattice(grid, lattice);
}

double cpwl_eval_hatsum(const SampleGrid& grid, const std::vector<double>& x) {
    grid.validate();
    if (static_cast<int>(x.size()) != grid.d) throw input_error("cpwl_eval dimension mismatch");
    std::vector<double> lattice(grid.d);
    for (int i = 0; i < grid.d; ++i) lattice[i] = x[i] * grid.n;
    double acc = 0.0;
    std::vector<int> idx(grid.d, 0);
    std::size_t flat = 0;
    do {
        acc += grid.values[flat++] * hat_value(idx, lattice);
    } while (next_multi_index(idx, grid.n));
    return acc;
}

double exact_lipschitz_l1(const SampleGrid& grid) {
    grid.validate();
    double best = 0.0;
    std::vector<int> idx(grid.d, 0);
    std::size_t flat = 0;
    // Stride of axis i in the lexicographic layout.
    std::vector<std::size_t> stride(grid.d, 1);
    for (int i = grid.d - 2; i >= 0; --i) stride[i] = stride[i + 1] * (grid.n + 1);
    do {
        for (int i = 0; i < grid.d; ++i) {
            if (idx[i] >= grid.n) continue;
            const double slope =
                grid.n * std::abs(grid.values[flat + stride[i]] - grid.values[flat]);
            if (slope > best) best = slope;
        }
        ++flat;
    } while (next_multi_index(idx, grid.n));
    return best;
}

} // namespace kuhnnet
