#include "graphcurv/graphcurv.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "graphcurv/bounds.hpp"
#include "graphcurv/curvature.hpp"
#include "graphcurv/error.hpp"
#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"
#include "graphcurv/report.hpp"
#include "graphcurv/spectral.hpp"
#include "graphcurv/verify.hpp"

using graphcurv::DistanceMatrix;
using graphcurv::Graph;
using graphcurv::Rational;

// The distance matrix is computed eagerly so handles are immutable and
// safe to share across threads.
struct gcv_graph {
    Graph g;
    DistanceMatrix dm;

    explicit gcv_graph(Graph graph) : g(std::move(graph)), dm(g) {}
};

namespace {

thread_local std::string t_last_error;

gcv_status map_errc(graphcurv::errc c) {
    using graphcurv::errc;
    switch (c) {
    case errc::parse_error: return GCV_PARSE_ERROR;
    case errc::self_loop: return GCV_SELF_LOOP;
    case errc::duplicate_edge: return GCV_DUPLICATE_EDGE;
    case errc::disconnected: return GCV_DISCONNECTED;
    case errc::invalid_parameter: return GCV_INVALID_PARAMETER;
    case errc::alpha_out_of_range: return GCV_ALPHA_OUT_OF_RANGE;
    case errc::same_vertex: return GCV_SAME_VERTEX;
    case errc::too_large: return GCV_TOO_LARGE;
    case errc::no_stabilization: return GCV_NO_STABILIZATION;
    case errc::nonpositive_threshold: return GCV_NONPOSITIVE_THRESHOLD;
    case errc::convergence_failure: return GCV_CONVERGENCE_FAILURE;
    }
    return GCV_INTERNAL_ERROR;
}

template <typename F>
gcv_status guarded(F&& body) {
    try {
        body();
        t_last_error.clear();
        return GCV_OK;
    } catch (const graphcurv::error& e) {
        t_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GCV_INTERNAL_ERROR;
    } catch (...) {
        t_last_error = "unknown error";
        return GCV_INTERNAL_ERROR;
    }
}

gcv_status bad_argument(const char* msg) {
    t_last_error = msg;
    return GCV_BAD_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gcv_status emit_string(const std::string& s, char** out) {
    *out = copy_string(s);
    if (*out == nullptr) {
        t_last_error = "out of memory";
        return GCV_INTERNAL_ERROR;
    }
    return GCV_OK;
}

// Vertex ids cross the boundary as int64 but the library uses int.
int checked_vertex(const Graph& g, int64_t v) {
    if (v < 0 || v >= g.vertex_count())
        graphcurv::raise(graphcurv::errc::invalid_parameter,
                         "vertex id " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

std::optional<Rational> parse_optional(const char* text) {
    if (text == nullptr) return std::nullopt;
    return Rational::parse(text);
}

double effective_tol(double tol) { return tol == 0.0 ? 1e-9 : tol; }

} // namespace

extern "C" {

const char* gcv_status_name(gcv_status status) {
    switch (status) {
    case GCV_OK: return "Ok";
    case GCV_PARSE_ERROR: return "ParseError";
    case GCV_SELF_LOOP: return "SelfLoop";
    case GCV_DUPLICATE_EDGE: return "DuplicateEdge";
    case GCV_DISCONNECTED: return "Disconnected";
    case GCV_INVALID_PARAMETER: return "InvalidParameter";
    case GCV_ALPHA_OUT_OF_RANGE: return "AlphaOutOfRange";
    case GCV_SAME_VERTEX: return "SameVertex";
    case GCV_TOO_LARGE: return "TooLarge";
    case GCV_NO_STABILIZATION: return "NoStabilization";
    case GCV_NONPOSITIVE_THRESHOLD: return "NonpositiveThreshold";
    case GCV_CONVERGENCE_FAILURE: return "ConvergenceFailure";
    case GCV_BAD_ARGUMENT: return "BadArgument";
    case GCV_INTERNAL_ERROR: return "InternalError";
    }
    return "InternalError";
}

const char* gcv_last_error(void) { return t_last_error.c_str(); }

void gcv_string_free(char* s) { std::free(s); }

gcv_status gcv_graph_from_edge_list(const char* text, gcv_graph** out) {
    if (text == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] { *out = new gcv_graph(Graph::from_edge_list_text(text)); });
}

gcv_status gcv_graph_from_json(const char* text, gcv_graph** out) {
    if (text == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] { *out = new gcv_graph(Graph::from_json(text)); });
}

gcv_status gcv_graph_generate(const char* family, int64_t param, gcv_graph** out) {
    if (family == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        *out = new gcv_graph(Graph::generate(graphcurv::family_from_name(family), param));
    });
}

void gcv_graph_free(gcv_graph* g) { delete g; }

gcv_status gcv_graph_vertex_count(const gcv_graph* g, int64_t* out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    *out = g->g.vertex_count();
    return GCV_OK;
}

gcv_status gcv_graph_edge_count(const gcv_graph* g, int64_t* out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    *out = g->g.edge_count();
    return GCV_OK;
}

gcv_status gcv_graph_edge(const gcv_graph* g, int64_t index, int64_t* u, int64_t* v) {
    if (g == nullptr || u == nullptr || v == nullptr) return bad_argument("null argument");
    return guarded([&] {
        if (index < 0 || index >= g->g.edge_count())
            graphcurv::raise(graphcurv::errc::invalid_parameter,
                             "edge index " + std::to_string(index) + " out of range");
        const graphcurv::Edge& e = g->g.edges()[static_cast<size_t>(index)];
        *u = e.u;
        *v = e.v;
    });
}

gcv_status gcv_graph_degree(const gcv_graph* g, int64_t vertex, int64_t* out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] { *out = g->g.degree(checked_vertex(g->g, vertex)); });
}

gcv_status gcv_graph_distance(const gcv_graph* g, int64_t u, int64_t v, int64_t* out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded(
        [&] { *out = g->dm.at(checked_vertex(g->g, u), checked_vertex(g->g, v)); });
}

gcv_status gcv_graph_diameter(const gcv_graph* g, int64_t* out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    *out = g->dm.diameter();
    return GCV_OK;
}

gcv_status gcv_graph_to_edge_list(const gcv_graph* g, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        std::string s = g->g.to_edge_list_text();
        gcv_status rc = emit_string(s, out);
        if (rc != GCV_OK) throw std::bad_alloc();
    });
}

gcv_status gcv_graph_to_json(const gcv_graph* g, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        if (emit_string(g->g.to_json(), out) != GCV_OK) throw std::bad_alloc();
    });
}

gcv_status gcv_kappa_alpha(const gcv_graph* g, int64_t u, int64_t v, const char* alpha,
                           char** out) {
    if (g == nullptr || alpha == nullptr || out == nullptr)
        return bad_argument("null argument");
    return guarded([&] {
        Rational k = graphcurv::kappa_alpha(g->g, g->dm, checked_vertex(g->g, u),
                                            checked_vertex(g->g, v), Rational::parse(alpha));
        if (emit_string(k.str(), out) != GCV_OK) throw std::bad_alloc();
    });
}

gcv_status gcv_kappa_lly(const gcv_graph* g, int64_t u, int64_t v, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        Rational k = graphcurv::kappa_lly(g->g, g->dm, checked_vertex(g->g, u),
                                          checked_vertex(g->g, v));
        if (emit_string(k.str(), out) != GCV_OK) throw std::bad_alloc();
    });
}

gcv_status gcv_curvature_json(const gcv_graph* g, const char* alpha, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        std::optional<Rational> a = parse_optional(alpha);
        graphcurv::CurvatureProfile prof =
            a ? graphcurv::curvature_profile_alpha(g->g, g->dm, *a)
              : graphcurv::curvature_profile(g->g, g->dm);
        if (emit_string(graphcurv::curvature_report_json(g->g, prof, a), out) != GCV_OK)
            throw std::bad_alloc();
    });
}

gcv_status gcv_integral_curvature(const gcv_graph* g, const char* kappa0, const char* alpha,
                                  char** out) {
    if (g == nullptr || kappa0 == nullptr || out == nullptr)
        return bad_argument("null argument");
    return guarded([&] {
        Rational k0 = Rational::parse(kappa0);
        std::optional<Rational> a = parse_optional(alpha);
        graphcurv::IntegralCurvature ic =
            a ? graphcurv::integral_curvature_alpha(g->g, g->dm, k0, *a)
              : graphcurv::integral_curvature(g->g, graphcurv::curvature_profile(g->g, g->dm),
                                              k0);
        if (emit_string(ic.value.str(), out) != GCV_OK) throw std::bad_alloc();
    });
}

gcv_status gcv_bounds_json(const gcv_graph* g, const char* kappa0, const char* alpha,
                           double tol, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        std::vector<graphcurv::BoundReport> reports = graphcurv::audit(
            g->g, parse_optional(kappa0), parse_optional(alpha), effective_tol(tol));
        if (emit_string(graphcurv::bounds_report_json(g->g, reports), out) != GCV_OK)
            throw std::bad_alloc();
    });
}

gcv_status gcv_spectrum_json(const gcv_graph* g, double tol, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        graphcurv::LaplacianSpectrum spec = graphcurv::spectrum(g->g, effective_tol(tol));
        if (emit_string(graphcurv::spectrum_report_json(g->g, spec), out) != GCV_OK)
            throw std::bad_alloc();
    });
}

gcv_status gcv_audit_json(const gcv_graph* g, const char* kappa0, const char* alpha,
                          double tol, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        std::string s = graphcurv::audit_report_json(
            g->g, parse_optional(kappa0), parse_optional(alpha), effective_tol(tol));
        if (emit_string(s, out) != GCV_OK) throw std::bad_alloc();
    });
}

gcv_status gcv_verify_paper_json(char** out, int* all_passed) {
    if (out == nullptr || all_passed == nullptr) return bad_argument("null argument");
    return guarded([&] {
        std::vector<graphcurv::verify::CheckResult> results =
            graphcurv::verify::run_paper_checks();
        int ok = 1;
        for (const auto& r : results)
            if (!r.pass) ok = 0;
        *all_passed = ok;
        if (emit_string(graphcurv::verify::verify_report_json(results), out) != GCV_OK)
            throw std::bad_alloc();
    });
}

} // extern "C"
