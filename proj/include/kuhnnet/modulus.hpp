#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace kuhnnet {

struct SampleGrid;

// Concave, monotone, piecewise-linear modulus of regularity on [0, T].
// eval(0) = 0 by definition; for t -> 0+ the value tends to `jump` (omega*),
// which is nonzero for discontinuous targets.
struct Modulus {
    enum class Extension { clamped, undefined };

    double T = 1.0;
    double jump = 0.0;                           // omega* = lim_{t->0+} omega(t)
    std::vector<std::pair<double, double>> knots; // (t, omega(t)), 0 < t <= T, increasing t
    Extension extension = Extension::undefined;
    // Holder moduli are stored as chordal interpolants; their guarantees are
    // stated at knot arguments only.
    bool exact_at_knots_only = false;

    // Throws domain_error on invalid t. Monotone and concave by invariant.
    double eval(double t) const;
    void validate() const;
};

Modulus lipschitz_modulus(double L, double T);
Modulus holder_modulus(double nu, double alpha, double T, std::size_t knot_count = 64);

// Least concave monotone majorant of the pairwise grid increments
// {(i/n, m_i)}, m_i = max |f(x) - f(y)| over lattice pairs at l1 lattice
// distance i. equality_at[i] (i = 1..n*d) reports whether the majorant is
// exact at i/n; it can fail when the m_i sequence is not concave-compatible.
struct GridModulus {
    Modulus modulus;
    std::vector<double> pair_maxima;  // m_1..m_{n*d}
    std::vector<bool> equality_at;    // same indexing as pair_maxima
};

GridModulus min_concave_from_grid(const SampleGrid& grid);

} // namespace kuhnnet
