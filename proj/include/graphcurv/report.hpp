#pragma once

#include <optional>
#include <string>

#include "graphcurv/bounds.hpp"
#include "graphcurv/curvature.hpp"
#include "graphcurv/graph.hpp"
#include "graphcurv/spectral.hpp"

namespace graphcurv {

// All reports are JSON with deterministic key order and sorted edges.
// Rationals appear as "p/q" strings; floats only in spectrum fields, rounded
// to 12 significant digits.

std::string curvature_report_json(const Graph& g, const CurvatureProfile& profile,
                                  const std::optional<Rational>& alpha);

std::string spectrum_report_json(const Graph& g, const LaplacianSpectrum& spec);

std::string bounds_report_json(const Graph& g, const std::vector<BoundReport>& reports);

std::string audit_report_json(const Graph& g, const std::optional<Rational>& kappa0,
                              const std::optional<Rational>& alpha, double tol);

} // namespace graphcurv
