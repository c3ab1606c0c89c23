#pragma once

#include <vector>

#include "kuhnnet/grid.hpp"

namespace kuhnnet {

// One simplex of the reflected Kuhn triangulation of [0,n]^d: the cell's
// lower corner, the mirrored axes (forced by cell-coordinate parity), and
// the permutation ordering the local coordinates.
struct KuhnSimplexRef {
    std::vector<int> cell;       // in {0..n-1}^d
    std::vector<int> perm;       // 0-based axis order, local u[perm[0]] >= u[perm[1]] >= ...
    std::vector<bool> reflection; // reflection[i] == (cell[i] % 2 == 1)
};

// Hat function T_y centred at lattice point y, evaluated at x in lattice
// units: sigma(1 - max{|x_i-y_i| : y_i even} - max{|x_i-y_i| : y_i odd}),
// max over an empty index set being 0.
double hat_value(const std::vector<int>& y, const std::vector<double>& x);

// A simplex of the triangulation of [0,n]^d containing x (lattice units).
// Ties broken by stable sort preferring smaller axis index; coordinates
// equal to n map into the top cell.
KuhnSimplexRef locate_simplex(const std::vector<double>& x, int n);

// The d+1 chain vertices of the simplex, as global lattice points.
std::vector<std::vector<int>> simplex_vertices(const KuhnSimplexRef& ref);

// Reference CPWL interpolant of the grid at x in [0,1]^d: barycentric
// interpolation on the containing simplex. Agrees with the hat-function sum.
double cpwl_eval(const SampleGrid& grid, const std::vector<double>& x);

// Same value computed as sum_y f(y) T_y(n x); the independent route used by
// the oracle tests.
double cpwl_eval_hatsum(const SampleGrid& grid, const std::vector<double>& x);

// Exact l1->R Lipschitz constant of the interpolant: max over axis-parallel
// lattice edges of n * |value difference|.
double exact_lipschitz_l1(const SampleGrid& grid);

} // namespace kuhnnet
