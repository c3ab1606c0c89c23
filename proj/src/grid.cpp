#include "kuhnnet/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "kuhnnet/errors.hpp"

namespace kuhnnet {

std::size_t max_lattice_points() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("KUHNNET_MAX_LATTICE")) {
            const long long v = std::atoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1000000);
    }();
    return cap;
}

std::size_t SampleGrid::flat_index(const std::vector<int>& multi) const {
    if (multi.size() != static_cast<std::size_t>(d)) throw input_error("multi-index dimension mismatch");
    std::size_t flat = 0;
    for (int i = 0; i < d; ++i) {
        if (multi[i] < 0 || multi[i] > n) throw input_error("multi-index out of range");
        flat = flat * (n + 1) + static_cast<std::size_t>(multi[i]);
    }
    return flat;
}

std::vector<int> SampleGrid::multi_index(std::size_t flat) const {
    std::vector<int> multi(d);
    for (int i = d - 1; i >= 0; --i) {
        multi[i] = static_cast<int>(flat % (n + 1));
        flat /= (n + 1);
    }
    return multi;
}

std::vector<double> SampleGrid::point(std::size_t flat) const {
    const std::vector<int> multi = multi_index(flat);
    std::vector<double> x(d);
    for (int i = 0; i < d; ++i) x[i] = static_cast<double>(multi[i]) / n;
    return x;
}

void SampleGrid::validate() const {
    if (d < 1 || n < 1) throw input_error("grid requires d >= 1 and n >= 1");
    std::size_t expect = 1;
    for (int i = 0; i < d; ++i) {
        expect *= static_cast<std::size_t>(n + 1);
        if (expect > max_lattice_points())
            throw resource_error("lattice (n+1)^d exceeds cap of " + std::to_string(max_lattice_points()));
    }
    if (values.size() != expect)
        throw input_error("grid has " + std::to_string(values.size()) + " values, expected " +
                          std::to_string(expect));
    for (double v : values)
        if (!std::isfinite(v)) throw input_error("non-finite grid value");
}

bool next_multi_index(std::vector<int>& idx, int n) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (idx[i] < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = 0;
            return true;
        }
    }
    return false;
}

SampleGrid encode(const TargetFn& f, int d, int n) {
    if (d < 1 || n < 1) throw input_error("encode requires d >= 1 and n >= 1");
    SampleGrid grid;
    grid.d = d;
    grid.n = n;
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) {
        total *= static_cast<std::size_t>(n + 1);
        if (total > max_lattice_points())
            throw resource_error("lattice (n+1)^d exceeds cap of " + std::to_string(max_lattice_points()));
    }
    grid.values.resize(total);
    std::vector<int> idx(d, 0);
    std::vector<double> x(d);
    std::size_t flat = 0;
    do {
        for (int i = 0; i < d; ++i) x[i] = static_cast<double>(idx[i]) / n;
        const double v = f(x);
        if (!std::isfinite(v)) throw input_error("target produced a non-finite sample");
        grid.values[flat++] = v;
    } while (next_multi_index(idx, n));
    return grid;
}

SampleGrid grid_from_values(int d, int n, std::vector<double> values) {
    SampleGrid grid;
    grid.d = d;
    grid.n = n;
    grid.values = std::move(values);
    grid.validate();
    return grid;
}

} // namespace kuhnnet
