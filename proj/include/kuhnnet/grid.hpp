#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace kuhnnet {

// Lattice cap for (n+1)^d; overridable via KUHNNET_MAX_LATTICE.
std::size_t max_lattice_points();

// Samples of a target at the lattice {j/n}^d, stored lexicographically
// (last coordinate fastest). This is the encoder output E_n(f).
struct SampleGrid {
    int d = 0;
    int n = 0;
    std::vector<double> values; // (n+1)^d entries

    std::size_t point_count() const { return values.size(); }
    std::size_t flat_index(const std::vector<int>& multi) const;
    std::vector<int> multi_index(std::size_t flat) const;
    // Lattice point in [0,1]^d units for a flat index.
    std::vector<double> point(std::size_t flat) const;
    double value_at(const std::vector<int>& multi) const { return values[flat_index(multi)]; }

    void validate() const;
};

using TargetFn = std::function<double(const std::vector<double>&)>;

// Sampling-based encoder: evaluates f at all (n+1)^d lattice points.
SampleGrid encode(const TargetFn& f, int d, int n);
SampleGrid grid_from_values(int d, int n, std::vector<double> values);

// Iterates multi-indices in {0..n}^d lexicographically.
bool next_multi_index(std::vector<int>& idx, int n);

} // namespace kuhnnet
