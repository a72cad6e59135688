#pragma once

#include <vector>

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"
#include "graphcurv/transport.hpp"

namespace graphcurv {

// alpha-Ricci curvature: 1 - W(m_x^alpha, m_y^alpha) / d(x, y).
Rational kappa_alpha(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                     const Rational& alpha);

// Idleness samples h(alpha) = kappa_alpha / (1 - alpha) at the given alphas.
std::vector<std::pair<Rational, Rational>> idleness_function(const Graph& g,
                                                             const DistanceMatrix& dm, Vertex x,
                                                             Vertex y,
                                                             const std::vector<Rational>& alphas);

// Lin-Lu-Yau curvature: the limit of h(alpha) as alpha -> 1. h is constant on
// the terminal linear piece of alpha -> kappa_alpha, so two equal consecutive
// samples pin the limit; probing starts at alpha = d/(d+1), d = max degree of
// the pair, and refines by halving 1 - alpha.
Rational kappa_lly(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y);

struct CurvatureProfile {
    std::vector<std::pair<Edge, Rational>> values; // canonical edge order
    Rational min;
    Rational max;

    const Rational& at(Vertex u, Vertex v) const;
    std::vector<Rational> distinct() const; // ascending
};

// kappa_lly on every edge.
CurvatureProfile curvature_profile(const Graph& g, const DistanceMatrix& dm);

// kappa_alpha on every edge.
CurvatureProfile curvature_profile_alpha(const Graph& g, const DistanceMatrix& dm,
                                         const Rational& alpha);

// Edge deficits against a curvature threshold kappa0.
Rational rho(const Rational& kappa0, const Rational& kappa_lly_value);
Rational rho_alpha(const Rational& kappa0, const Rational& alpha,
                   const Rational& kappa_alpha_value);

struct IntegralCurvature {
    Rational kappa0;
    bool has_alpha = false;
    Rational alpha; // meaningful only when has_alpha
    Rational value; // >= 0; 0 iff every edge clears the threshold
};

IntegralCurvature integral_curvature(const Graph& g, const CurvatureProfile& profile,
                                     const Rational& kappa0);
IntegralCurvature integral_curvature_alpha(const Graph& g, const DistanceMatrix& dm,
                                           const Rational& kappa0, const Rational& alpha);

} // namespace graphcurv
