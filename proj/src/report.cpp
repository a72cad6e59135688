#include "graphcurv/report.hpp"

#include <cstdio>
#include <cstdlib>

#include <nlohmann/json.hpp>

namespace graphcurv {

namespace {

using json = nlohmann::ordered_json;

// Rounding to 12 significant digits keeps the serialized token short and
// stable; nlohmann then prints the shortest representation that round-trips.
double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json rational_json(const Rational& r) { return json(r.str()); }

json integer_bound_json(const Rational& bound) {
    mpz_class z = bound.num();
    if (z.fits_slong_p()) return json(static_cast<long long>(z.get_si()));
    return json(z.get_str());
}

json theorem_bound_json(const TheoremCheck& check, bool as_integer) {
    if (!check.applicable) return json("inapplicable");
    return as_integer ? integer_bound_json(check.bound) : rational_json(check.bound);
}

json bound_report_entry(const BoundReport& r) {
    json j;
    j["kappa0"] = r.kappa0.str();
    if (r.has_alpha) j["alpha"] = r.alpha.str();
    j["integral"] = r.integral.str();
    if (r.has_alpha) j["integral_alpha"] = r.integral_alpha.str();
    j["actual_n"] = r.n;
    j["actual_diameter"] = r.diameter;
    j["max_degree"] = r.max_degree;
    j["actual_lambda1"] = round12(r.lambda1);
    j["diameter_bound"] = theorem_bound_json(r.diam, true);
    if (r.has_alpha) j["diameter_bound_alpha"] = theorem_bound_json(r.diam_alpha, true);
    j["moore_bound"] = theorem_bound_json(r.moore, false);
    j["lichnerowicz_bound"] = theorem_bound_json(r.lich, false);
    if (r.has_alpha) j["lichnerowicz_bound_alpha"] = theorem_bound_json(r.lich_alpha, false);

    json holds;
    holds["diameter"] = r.diam.holds;
    holds["moore"] = r.moore.holds;
    holds["lichnerowicz"] = r.lich.holds;
    if (r.has_alpha) {
        holds["diameter_alpha"] = r.diam_alpha.holds;
        holds["lichnerowicz_alpha"] = r.lich_alpha.holds;
    }
    j["holds"] = holds;

    json vac;
    vac["diameter"] = r.diam.vacuous;
    vac["lichnerowicz"] = r.lich.vacuous;
    if (r.has_alpha) {
        vac["diameter_alpha"] = r.diam_alpha.vacuous;
        vac["lichnerowicz_alpha"] = r.lich_alpha.vacuous;
    }
    j["vacuous"] = vac;
    return j;
}

json graph_summary(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    return j;
}

json curvature_body(const Graph& g, const CurvatureProfile& profile,
                    const std::optional<Rational>& alpha) {
    json j = graph_summary(g);
    j["kind"] = alpha ? "alpha" : "lly";
    if (alpha) j["alpha"] = alpha->str();
    json edges = json::array();
    for (const auto& [e, kappa] : profile.values) {
        json row;
        row["u"] = e.u;
        row["v"] = e.v;
        row["kappa"] = kappa.str();
        edges.push_back(row);
    }
    j["edges"] = edges;
    j["min"] = profile.min.str();
    j["max"] = profile.max.str();
    json distinct = json::array();
    for (const Rational& v : profile.distinct()) distinct.push_back(v.str());
    j["distinct"] = distinct;
    return j;
}

json spectrum_body(const Graph& g, const LaplacianSpectrum& spec) {
    json j = graph_summary(g);
    json eigs = json::array();
    for (double ev : spec.eigenvalues) eigs.push_back(round12(ev));
    j["eigenvalues"] = eigs;
    j["lambda1"] = round12(spec.lambda1);
    return j;
}

json bounds_body(const Graph& g, const std::vector<BoundReport>& reports) {
    json j = graph_summary(g);
    json arr = json::array();
    for (const BoundReport& r : reports) arr.push_back(bound_report_entry(r));
    j["thresholds"] = arr;
    return j;
}

} // namespace

std::string curvature_report_json(const Graph& g, const CurvatureProfile& profile,
                                  const std::optional<Rational>& alpha) {
    json j;
    j["report"] = "curvature";
    j.update(curvature_body(g, profile, alpha));
    return j.dump();
}

std::string spectrum_report_json(const Graph& g, const LaplacianSpectrum& spec) {
    json j;
    j["report"] = "spectrum";
    j.update(spectrum_body(g, spec));
    return j.dump();
}

std::string bounds_report_json(const Graph& g, const std::vector<BoundReport>& reports) {
    json j;
    j["report"] = "bounds";
    j.update(bounds_body(g, reports));
    return j.dump();
}

std::string audit_report_json(const Graph& g, const std::optional<Rational>& kappa0,
                              const std::optional<Rational>& alpha, double tol) {
    DistanceMatrix dm(g);
    CurvatureProfile profile = curvature_profile(g, dm);
    LaplacianSpectrum spec = spectrum(g, tol);

    std::vector<Rational> thresholds =
        kappa0 ? std::vector<Rational>{*kappa0} : profile.distinct();
    std::vector<BoundReport> reports;
    for (const Rational& k0 : thresholds)
        reports.push_back(
            bound_report(g, dm, profile, spec.lambda1, k0, alpha ? &*alpha : nullptr, tol));

    json j;
    j["report"] = "audit";
    j["graph"] = json::parse(g.to_json());
    j["curvature"] = curvature_body(g, profile, std::nullopt);
    j["spectrum"] = spectrum_body(g, spec);
    j["bounds"] = bounds_body(g, reports);
    return j.dump();
}

} // namespace graphcurv
