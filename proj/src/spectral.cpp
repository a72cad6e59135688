#include "graphcurv/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace graphcurv {

std::vector<double> normalized_laplacian(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
    for (Vertex v = 0; v < n; ++v) {
        m[static_cast<size_t>(v) * n + v] = 1.0;
        double share = 1.0 / g.degree(v);
        for (Vertex w : g.neighbors(v)) m[static_cast<size_t>(v) * n + w] = -share;
    }
    return m;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double fro = 0.0;
    for (double x : a) fro += x * x;
    const double stop = 1e-30 * std::max(fro, 1.0);

    const int max_sweeps = 64;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (off <= stop) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    if (sweep == max_sweeps)
        raise(errc::convergence_failure, "Jacobi sweeps exhausted without convergence");

    std::vector<double> eig(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

namespace {

// alpha I + (1 - alpha) D^{-1/2} A D^{-1/2}; similar to the lazy walk
// operator alpha I + (1 - alpha) D^{-1} A, so the spectra coincide.
std::vector<double> sym_lazy_walk(const Graph& g, double alpha) {
    const int n = g.vertex_count();
    std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
    for (Vertex v = 0; v < n; ++v) {
        m[static_cast<size_t>(v) * n + v] = alpha;
        for (Vertex w : g.neighbors(v))
            m[static_cast<size_t>(v) * n + w] =
                (1.0 - alpha) / std::sqrt(static_cast<double>(g.degree(v)) * g.degree(w));
    }
    return m;
}

} // namespace

LaplacianSpectrum spectrum(const Graph& g, double tol) {
    if (!(tol > 0.0)) raise(errc::invalid_parameter, "spectrum tolerance must be positive");
    const int n = g.vertex_count();

    // I - D^{-1/2} A D^{-1/2} is alpha = 0 of the symmetric lazy walk family,
    // negated around the identity.
    std::vector<double> s = sym_lazy_walk(g, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double& e = s[static_cast<size_t>(i) * n + j];
            e = (i == j ? 1.0 : 0.0) - e;
        }

    LaplacianSpectrum out;
    out.eigenvalues = jacobi_eigenvalues(std::move(s), n);
    out.lambda1 = 0.0;
    bool found = false;
    for (double ev : out.eigenvalues)
        if (ev > tol) {
            out.lambda1 = ev;
            found = true;
            break;
        }
    if (!found)
        raise(errc::convergence_failure, "no eigenvalue above tolerance; graph not connected?");
    return out;
}

bool mixing_operator_check(const Graph& g, const Rational& alpha, double tol) {
    if (alpha.sign() < 0 || alpha >= Rational(1))
        raise(errc::alpha_out_of_range, "alpha = " + alpha.str() + " outside [0, 1)");
    if (!(tol > 0.0)) raise(errc::invalid_parameter, "tolerance must be positive");

    const int n = g.vertex_count();
    const double a = alpha.to_double();

    std::vector<double> walk_eigs = jacobi_eigenvalues(sym_lazy_walk(g, a), n);

    std::vector<double> lap_eigs = spectrum(g).eigenvalues;
    std::vector<double> expected(lap_eigs.size());
    for (size_t i = 0; i < lap_eigs.size(); ++i)
        expected[i] = 1.0 - (1.0 - a) * lap_eigs[i];
    std::sort(expected.begin(), expected.end());

    for (size_t i = 0; i < expected.size(); ++i)
        if (std::abs(expected[i] - walk_eigs[i]) > tol) return false;
    return true;
}

} // namespace graphcurv
