#include "graphcurv/bounds.hpp"

#include <algorithm>

#include "graphcurv/spectral.hpp"

namespace graphcurv {

namespace {

void need_positive_threshold(const Rational& kappa0) {
    if (kappa0.sign() <= 0)
        raise(errc::nonpositive_threshold, "threshold kappa0 = " + kappa0.str() + " must be > 0");
}

Rational fold_alpha_integral(const Rational& alpha, const Rational& integral_alpha) {
    if (alpha.sign() < 0 || alpha >= Rational(1))
        raise(errc::alpha_out_of_range, "alpha = " + alpha.str() + " outside [0, 1)");
    return integral_alpha / (Rational(1) - alpha);
}

} // namespace

mpz_class diameter_bound_lly(const Rational& kappa0, const Rational& integral) {
    need_positive_threshold(kappa0);
    return ((Rational(2) + integral) / kappa0).floor();
}

mpz_class diameter_bound_alpha(const Rational& kappa0, const Rational& alpha,
                               const Rational& integral_alpha) {
    need_positive_threshold(kappa0);
    return ((Rational(2) + fold_alpha_integral(alpha, integral_alpha)) / kappa0).floor();
}

std::optional<mpz_class> local_diameter_bound(const Rational& kappa) {
    if (kappa.sign() <= 0) return std::nullopt;
    return (Rational(2) / kappa).floor();
}

std::vector<Rational> moore_bound_terms(long long d_max, long long diam, const Rational& kappa0,
                                        const Rational& integral) {
    if (d_max < 1) raise(errc::invalid_parameter, "max degree must be >= 1");
    if (diam < 0) raise(errc::invalid_parameter, "diameter must be >= 0");
    if (diam > 200000)
        raise(errc::too_large, "vertex bound with " + std::to_string(diam) + " terms");

    std::vector<Rational> terms{Rational(1)};
    Rational term(1);
    const Rational dM(d_max);
    const Rational half(1, 2);
    for (long long k = 1; k <= diam; ++k) {
        term *= dM;
        if (k >= 2) term *= Rational(1) + (integral - Rational(k - 1) * kappa0) * half;
        terms.push_back(term);
    }
    return terms;
}

Rational moore_bound(long long d_max, long long diam, const Rational& kappa0,
                     const Rational& integral) {
    Rational total;
    for (const Rational& t : moore_bound_terms(d_max, diam, kappa0, integral)) total += t;
    return total;
}

Rational moore_bound_auto(long long d_max, const Rational& kappa0, const Rational& integral) {
    mpz_class d = diameter_bound_lly(kappa0, integral);
    if (!d.fits_slong_p()) raise(errc::too_large, "diameter bound does not fit a machine word");
    return moore_bound(d_max, d.get_si(), kappa0, integral);
}

Rational lichnerowicz_bound(const Rational& kappa0, const Rational& integral) {
    need_positive_threshold(kappa0);
    return kappa0 - integral;
}

Rational lichnerowicz_bound_alpha(const Rational& kappa0, const Rational& alpha,
                                  const Rational& integral_alpha) {
    need_positive_threshold(kappa0);
    return kappa0 - fold_alpha_integral(alpha, integral_alpha);
}

Rational moore_obstruction(long long d_max) {
    if (d_max < 1) raise(errc::invalid_parameter, "max degree must be >= 1");
    return Rational(2, d_max);
}

bool key_lemma_check(const Graph& g, const DistanceMatrix& dm, const CurvatureProfile& profile,
                     Vertex x, Vertex y, const Rational& kappa0) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) raise(errc::same_vertex, "key lemma needs two distinct vertices");

    const Rational d(dm.at(x, y));
    std::vector<Vertex> path = shortest_path(g, dm, x, y);
    Rational path_sum;
    for (size_t i = 0; i + 1 < path.size(); ++i) path_sum += profile.at(path[i], path[i + 1]);
    const Rational path_avg = path_sum / d;

    Rational pair_kappa = kappa_lly(g, dm, x, y);
    Rational integral = integral_curvature(g, profile, kappa0).value;

    return pair_kappa >= path_avg && path_avg >= kappa0 - integral / d;
}

BoundReport bound_report(const Graph& g, const DistanceMatrix& dm,
                         const CurvatureProfile& profile, double lambda1, const Rational& kappa0,
                         const Rational* alpha, double tol) {
    BoundReport r;
    r.kappa0 = kappa0;
    r.n = g.vertex_count();
    r.diameter = dm.diameter();
    r.max_degree = g.max_degree();
    r.lambda1 = lambda1;
    r.integral = integral_curvature(g, profile, kappa0).value;
    if (alpha) {
        r.has_alpha = true;
        r.alpha = *alpha;
        r.integral_alpha = integral_curvature_alpha(g, dm, kappa0, *alpha).value;
    }

    const bool positive = kappa0.sign() > 0;
    const Rational trivial_diam(r.n - 1);

    if (positive) {
        r.diam.applicable = true;
        r.diam.bound = Rational(diameter_bound_lly(kappa0, r.integral));
        r.diam.holds = r.diam.bound >= Rational(r.diameter);
        r.diam.vacuous = r.diam.bound > trivial_diam;

        r.lich.applicable = true;
        r.lich.bound = lichnerowicz_bound(kappa0, r.integral);
        r.lich.holds = lambda1 >= r.lich.bound.to_double() - tol;
        r.lich.vacuous = r.lich.bound.sign() <= 0;

        r.moore.applicable = true;
        r.moore.bound = moore_bound_auto(r.max_degree, kappa0, r.integral);
        r.moore.holds = r.moore.bound >= Rational(r.n);

        if (r.has_alpha) {
            r.diam_alpha.applicable = true;
            r.diam_alpha.bound = Rational(diameter_bound_alpha(kappa0, r.alpha, r.integral_alpha));
            r.diam_alpha.holds = r.diam_alpha.bound >= Rational(r.diameter);
            r.diam_alpha.vacuous = r.diam_alpha.bound > trivial_diam;

            r.lich_alpha.applicable = true;
            r.lich_alpha.bound = lichnerowicz_bound_alpha(kappa0, r.alpha, r.integral_alpha);
            r.lich_alpha.holds = lambda1 >= r.lich_alpha.bound.to_double() - tol;
            r.lich_alpha.vacuous = r.lich_alpha.bound.sign() <= 0;
        }
    } else {
        // Only the vertex bound survives kappa0 <= 0, anchored at the actual
        // diameter instead of the (undefined) diameter bound.
        r.moore.applicable = true;
        r.moore.bound = moore_bound(r.max_degree, r.diameter, kappa0, r.integral);
        r.moore.holds = r.moore.bound >= Rational(r.n);
    }
    return r;
}

std::vector<BoundReport> audit(const Graph& g, const std::optional<Rational>& kappa0,
                               const std::optional<Rational>& alpha, double tol) {
    DistanceMatrix dm(g);
    CurvatureProfile profile = curvature_profile(g, dm);
    double lambda1 = spectrum(g, tol).lambda1;

    std::vector<Rational> thresholds =
        kappa0 ? std::vector<Rational>{*kappa0} : profile.distinct();

    std::vector<BoundReport> reports;
    reports.reserve(thresholds.size());
    for (const Rational& k0 : thresholds)
        reports.push_back(bound_report(g, dm, profile, lambda1, k0, alpha ? &*alpha : nullptr, tol));
    return reports;
}

} // namespace graphcurv
