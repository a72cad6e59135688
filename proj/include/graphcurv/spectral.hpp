#pragma once

#include <vector>

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

// Random-walk normalized Laplacian I - D^{-1} A, dense row-major.
std::vector<double> normalized_laplacian(const Graph& g);

// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
// ascending. Raises ConvergenceFailure if the off-diagonal mass does not
// decay within the sweep budget (it always does for symmetric input).
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

struct LaplacianSpectrum {
    std::vector<double> eigenvalues; // ascending, n values in [0, 2]
    double lambda1;                  // smallest eigenvalue > tol
};

// Spectrum of the normalized Laplacian, computed from the symmetric
// similarity I - D^{-1/2} A D^{-1/2}.
LaplacianSpectrum spectrum(const Graph& g, double tol = 1e-9);

// Checks spec(alpha I + (1 - alpha) D^{-1} A) == {1 - (1-alpha) lambda}
// with both sides diagonalized independently. The identity ties the lazy
// walk operator to the Laplacian spectrum.
bool mixing_operator_check(const Graph& g, const Rational& alpha, double tol = 1e-9);

} // namespace graphcurv
