#pragma once

#include <optional>
#include <vector>

#include "graphcurv/curvature.hpp"
#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

// Diameter bound floor((2 + I) / kappa0) from the integral curvature I at
// threshold kappa0 > 0.
mpz_class diameter_bound_lly(const Rational& kappa0, const Rational& integral);

// Same bound through the alpha route: floor((2 + I_alpha / (1-alpha)) / kappa0).
mpz_class diameter_bound_alpha(const Rational& kappa0, const Rational& alpha,
                               const Rational& integral_alpha);

// Pairwise bound d(x, y) <= floor(2 / kappa) for a positively curved pair;
// empty when kappa <= 0.
std::optional<mpz_class> local_diameter_bound(const Rational& kappa);

// Vertex-count bound 1 + sum_{k=1}^{D} d_M^k prod_{i=1}^{k-1} (1 + (I - i kappa0)/2).
// Valid for any real kappa0 when D is the actual diameter.
Rational moore_bound(long long d_max, long long diam, const Rational& kappa0,
                     const Rational& integral);

// Individual summands [1, t_1, ..., t_D]; moore_bound is their sum.
std::vector<Rational> moore_bound_terms(long long d_max, long long diam, const Rational& kappa0,
                                        const Rational& integral);

// moore_bound with D = diameter_bound_lly(kappa0, I); needs kappa0 > 0.
Rational moore_bound_auto(long long d_max, const Rational& kappa0, const Rational& integral);

// Eigenvalue bound lambda_1 >= kappa0 - I for kappa0 > 0.
Rational lichnerowicz_bound(const Rational& kappa0, const Rational& integral);
Rational lichnerowicz_bound_alpha(const Rational& kappa0, const Rational& alpha,
                                  const Rational& integral_alpha);

// Curvature threshold that a diameter-2 Moore graph of max degree d_max would
// have to clear: kappa0 - I <= 2 / d_max.
Rational moore_obstruction(long long d_max);

// Chain kappa(x,y) >= (sum of kappa over a shortest path) / d >= kappa0 - I/d,
// evaluated exactly for one pair.
bool key_lemma_check(const Graph& g, const DistanceMatrix& dm, const CurvatureProfile& profile,
                     Vertex x, Vertex y, const Rational& kappa0);

struct TheoremCheck {
    bool applicable = false; // kappa0 > 0 required by the theorem
    Rational bound;          // meaningful only when applicable
    bool holds = true;       // trivially true when not applicable
    bool vacuous = false;    // weaker than the trivial bound
};

struct BoundReport {
    Rational kappa0;
    bool has_alpha = false;
    Rational alpha;
    Rational integral;       // I_kappa0
    Rational integral_alpha; // I^alpha_kappa0, valid when has_alpha
    long long n = 0;
    int diameter = 0;
    int max_degree = 0;
    double lambda1 = 0.0;
    TheoremCheck diam;
    TheoremCheck diam_alpha;
    TheoremCheck moore; // always applicable; uses actual diameter when kappa0 <= 0
    TheoremCheck lich;
    TheoremCheck lich_alpha;
};

BoundReport bound_report(const Graph& g, const DistanceMatrix& dm,
                         const CurvatureProfile& profile, double lambda1, const Rational& kappa0,
                         const Rational* alpha, double tol = 1e-9);

// One report per threshold; defaults to the distinct edge curvature values.
std::vector<BoundReport> audit(const Graph& g, const std::optional<Rational>& kappa0,
                               const std::optional<Rational>& alpha, double tol = 1e-9);

} // namespace graphcurv
