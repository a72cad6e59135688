#include "graphcurv/curvature.hpp"

#include <algorithm>

namespace graphcurv {

Rational kappa_alpha(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                     const Rational& alpha) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) raise(errc::same_vertex, "curvature needs two distinct vertices");
    TransportSolution t = wasserstein(g, dm, lazy_walk_measure(g, x, alpha),
                                      lazy_walk_measure(g, y, alpha));
    return Rational(1) - t.value / Rational(dm.at(x, y));
}

std::vector<std::pair<Rational, Rational>> idleness_function(
    const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
    const std::vector<Rational>& alphas) {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(alphas.size());
    for (const Rational& a : alphas)
        out.emplace_back(a, kappa_alpha(g, dm, x, y, a) / (Rational(1) - a));
    return out;
}

Rational kappa_lly(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) raise(errc::same_vertex, "curvature needs two distinct vertices");

    auto h = [&](const Rational& a) {
        return kappa_alpha(g, dm, x, y, a) / (Rational(1) - a);
    };

    long d = std::max(g.degree(x), g.degree(y));
    Rational a2(2 * d + 1, 2 * d + 2);
    Rational h1 = h(Rational(d, d + 1));
    Rational h2 = h(a2);
    if (h1 == h2) return h1;
    for (int step = 0; step < 20; ++step) {
        a2 = Rational(1) - (Rational(1) - a2) / Rational(2);
        h1 = h2;
        h2 = h(a2);
        if (h1 == h2) return h1;
    }
    raise(errc::no_stabilization, "idleness did not stabilize for pair " + std::to_string(x) +
                                      ", " + std::to_string(y));
}

const Rational& CurvatureProfile::at(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(values.begin(), values.end(), key,
                               [](const auto& e, const Edge& k) { return e.first < k; });
    if (it == values.end() || !(it->first == key))
        raise(errc::invalid_parameter,
              "no edge " + std::to_string(u) + " " + std::to_string(v) + " in profile");
    return it->second;
}

std::vector<Rational> CurvatureProfile::distinct() const {
    std::vector<Rational> vals;
    vals.reserve(values.size());
    for (const auto& e : values) vals.push_back(e.second);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

namespace {

template <typename F>
CurvatureProfile profile_with(const Graph& g, F&& edge_kappa) {
    CurvatureProfile p;
    p.values.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        Rational k = edge_kappa(e);
        if (p.values.empty()) {
            p.min = k;
            p.max = k;
        } else {
            if (k < p.min) p.min = k;
            if (k > p.max) p.max = k;
        }
        p.values.emplace_back(e, std::move(k));
    }
    return p;
}

} // namespace

CurvatureProfile curvature_profile(const Graph& g, const DistanceMatrix& dm) {
    return profile_with(g, [&](const Edge& e) { return kappa_lly(g, dm, e.u, e.v); });
}

CurvatureProfile curvature_profile_alpha(const Graph& g, const DistanceMatrix& dm,
                                         const Rational& alpha) {
    return profile_with(g, [&](const Edge& e) { return kappa_alpha(g, dm, e.u, e.v, alpha); });
}

Rational rho(const Rational& kappa0, const Rational& kappa_lly_value) {
    Rational gap = kappa0 - kappa_lly_value;
    return gap.sign() > 0 ? gap : Rational(0);
}

Rational rho_alpha(const Rational& kappa0, const Rational& alpha,
                   const Rational& kappa_alpha_value) {
    if (alpha.sign() < 0 || alpha >= Rational(1))
        raise(errc::alpha_out_of_range, "alpha = " + alpha.str() + " outside [0, 1)");
    Rational gap = (Rational(1) - alpha) * kappa0 - kappa_alpha_value;
    return gap.sign() > 0 ? gap : Rational(0);
}

IntegralCurvature integral_curvature(const Graph& g, const CurvatureProfile& profile,
                                     const Rational& kappa0) {
    if (profile.values.size() != g.edges().size())
        raise(errc::invalid_parameter, "profile does not cover the graph's edge set");
    IntegralCurvature ic;
    ic.kappa0 = kappa0;
    for (size_t i = 0; i < profile.values.size(); ++i) {
        if (!(profile.values[i].first == g.edges()[i]))
            raise(errc::invalid_parameter, "profile does not cover the graph's edge set");
        ic.value += rho(kappa0, profile.values[i].second);
    }
    return ic;
}

IntegralCurvature integral_curvature_alpha(const Graph& g, const DistanceMatrix& dm,
                                           const Rational& kappa0, const Rational& alpha) {
    IntegralCurvature ic;
    ic.kappa0 = kappa0;
    ic.has_alpha = true;
    ic.alpha = alpha;
    for (const Edge& e : g.edges())
        ic.value += rho_alpha(kappa0, alpha, kappa_alpha(g, dm, e.u, e.v, alpha));
    return ic;
}

} // namespace graphcurv
