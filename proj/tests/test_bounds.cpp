#include "doctest.h"

#include <optional>
#include <vector>

#include "graphcurv/bounds.hpp"
#include "graphcurv/corpus.hpp"
#include "graphcurv/curvature.hpp"
#include "graphcurv/error.hpp"
#include "graphcurv/graph.hpp"
#include "graphcurv/spectral.hpp"

using namespace graphcurv;

namespace {

template <typename F>
errc code_of(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected graphcurv::error");
    return errc::parse_error;
}

} // namespace

TEST_CASE("diameter bound floor((2 + I) / kappa0)") {
    CHECK(diameter_bound_lly(Rational(1), Rational(4)) == 6);       // P_7
    CHECK(diameter_bound_lly(Rational(2, 3), Rational(8)) == 15);   // pendant hexagon
    CHECK(diameter_bound_lly(Rational(5, 6), Rational(3, 2)) == 4); // dumbbell m=3
    CHECK(diameter_bound_lly(Rational(2), Rational(0)) == 1);       // two-point graph
    CHECK(diameter_bound_lly(Rational(3), Rational(0)) == 0);       // floor can reach 0

    CHECK(code_of([] { diameter_bound_lly(Rational(0), Rational(1)); }) ==
          errc::nonpositive_threshold);
    CHECK(code_of([] { diameter_bound_lly(Rational(-1), Rational(1)); }) ==
          errc::nonpositive_threshold);
}

TEST_CASE("alpha-route diameter bound") {
    // floor((2 + I_alpha / (1 - alpha)) / kappa0).
    CHECK(diameter_bound_alpha(Rational(1), Rational(1, 2), Rational(0)) == 2);
    // Two-point graph at alpha = 1/2: kappa_alpha = 1 = (1 - alpha) * 2, so
    // I^alpha vanishes at kappa0 = 2 and the bound collapses to the diameter.
    CHECK(diameter_bound_alpha(Rational(2), Rational(1, 2), Rational(0)) == 1);
    // P_7 at alpha = 3/4, kappa0 = 1: I^alpha = 1 scales back to I = 4.
    CHECK(diameter_bound_alpha(Rational(1), Rational(3, 4), Rational(1)) == 6);

    CHECK(code_of([] {
              diameter_bound_alpha(Rational(1), Rational(1), Rational(0));
          }) == errc::alpha_out_of_range);
    CHECK(code_of([] {
              diameter_bound_alpha(Rational(0), Rational(1, 2), Rational(0));
          }) == errc::nonpositive_threshold);
}

TEST_CASE("pairwise diameter bound floor(2 / kappa)") {
    REQUIRE(local_diameter_bound(Rational(2)).has_value());
    CHECK(*local_diameter_bound(Rational(2)) == 1);
    CHECK(*local_diameter_bound(Rational(1)) == 2);
    CHECK(*local_diameter_bound(Rational(2, 3)) == 3);
    CHECK(*local_diameter_bound(Rational(5, 4)) == 1);
    CHECK(!local_diameter_bound(Rational(0)).has_value());
    CHECK(!local_diameter_bound(Rational(-1, 2)).has_value());
}

TEST_CASE("vertex count bound") {
    SUBCASE("complete graph at its uniform curvature is sharp") {
        // K_5: d_M = 4, D = 1, any kappa0: 1 + 4 = 5 = n.
        CHECK(moore_bound(4, 1, Rational(5, 4), Rational(0)) == Rational(5));
    }
    SUBCASE("terms multiply cleanly on a path") {
        // P_3 with kappa0 = 1, I = 0: terms 1, 2, 2*2*(1 - 1/2) = 2; total 5 >= 3.
        std::vector<Rational> terms = moore_bound_terms(2, 2, Rational(1), Rational(0));
        REQUIRE(terms.size() == 3);
        CHECK(terms[0] == Rational(1));
        CHECK(terms[1] == Rational(2));
        CHECK(terms[2] == Rational(2));
        CHECK(moore_bound(2, 2, Rational(1), Rational(0)) == Rational(5));
    }
    SUBCASE("kappa0 = 0 gives classical d_M^k growth") {
        std::vector<Rational> terms = moore_bound_terms(3, 3, Rational(0), Rational(0));
        REQUIRE(terms.size() == 4);
        CHECK(terms[1] == Rational(3));
        CHECK(terms[2] == Rational(9));
        CHECK(terms[3] == Rational(27));
    }
    SUBCASE("negative kappa0 is allowed with the actual diameter") {
        // Step factors 1 + (I - (k-1) kappa0)/2 grow when kappa0 < 0:
        // terms 1, 2, 2*2*(1 + 1) = 8.
        CHECK(moore_bound(2, 2, Rational(-2), Rational(0)) == Rational(11));
    }
    SUBCASE("auto route: P_7 at kappa0 = 1") {
        // D' = 6; terms 1, 2, 2*3, 2*3*3, ... with factors 1 + (4 - i)/2.
        CHECK(moore_bound_auto(2, Rational(1), Rational(4)) == Rational(653));
    }
    SUBCASE("input validation") {
        CHECK(code_of([] { moore_bound(0, 2, Rational(1), Rational(0)); }) ==
              errc::invalid_parameter);
        CHECK(code_of([] { moore_bound(2, -1, Rational(1), Rational(0)); }) ==
              errc::invalid_parameter);
        CHECK(code_of([] { moore_bound_auto(2, Rational(0), Rational(0)); }) ==
              errc::nonpositive_threshold);
        // Astronomically long expansions are refused, not attempted.
        CHECK(code_of([] { moore_bound(2, 300000, Rational(1), Rational(0)); }) ==
              errc::too_large);
        CHECK(code_of([] { moore_bound_auto(2, Rational(1, 1000000000), Rational(5)); }) ==
              errc::too_large);
    }
}

TEST_CASE("eigenvalue bound kappa0 - I") {
    CHECK(lichnerowicz_bound(Rational(2), Rational(0)) == Rational(2));    // K_2 equality
    CHECK(lichnerowicz_bound(Rational(5, 4), Rational(0)) == Rational(5, 4)); // K_5 equality
    CHECK(lichnerowicz_bound(Rational(1), Rational(4)) == Rational(-3));
    CHECK(lichnerowicz_bound_alpha(Rational(1), Rational(1, 2), Rational(3, 2)) ==
          Rational(-2));
    CHECK(code_of([] { lichnerowicz_bound(Rational(0), Rational(0)); }) ==
          errc::nonpositive_threshold);
    CHECK(code_of([] {
              lichnerowicz_bound_alpha(Rational(1), Rational(3, 2), Rational(0));
          }) == errc::alpha_out_of_range);
}

TEST_CASE("moore obstruction threshold 2 / d_M") {
    CHECK(moore_obstruction(57) == Rational(2, 57));
    CHECK(moore_obstruction(2) == Rational(1));
    CHECK(moore_obstruction(4) == Rational(1, 2));
    CHECK(code_of([] { moore_obstruction(0); }) == errc::invalid_parameter);
}

TEST_CASE("key lemma chain on worked pairs") {
    SUBCASE("path endpoints at kappa0 = 1") {
        Graph g = Graph::generate(Family::path, 7);
        DistanceMatrix dm(g);
        CurvatureProfile prof = curvature_profile(g, dm);
        CHECK(key_lemma_check(g, dm, prof, 0, 6, Rational(1)));
        CHECK(key_lemma_check(g, dm, prof, 0, 3, Rational(1)));
    }
    SUBCASE("dumbbell across the bridge") {
        Graph g = Graph::generate(Family::dumbbell, 3);
        DistanceMatrix dm(g);
        CurvatureProfile prof = curvature_profile(g, dm);
        // Far-clique pair through the negatively curved bridge.
        CHECK(key_lemma_check(g, dm, prof, 1, 4, Rational(5, 6)));
        CHECK(key_lemma_check(g, dm, prof, 1, 4, Rational(-1)));
    }
    SUBCASE("same vertex is rejected") {
        Graph g = Graph::generate(Family::path, 3);
        DistanceMatrix dm(g);
        CurvatureProfile prof = curvature_profile(g, dm);
        CHECK(code_of([&] { key_lemma_check(g, dm, prof, 1, 1, Rational(0)); }) ==
              errc::same_vertex);
    }
}

TEST_CASE("bound reports") {
    SUBCASE("positive threshold fills every theorem") {
        Graph g = Graph::generate(Family::path, 7);
        DistanceMatrix dm(g);
        CurvatureProfile prof = curvature_profile(g, dm);
        double l1 = spectrum(g).lambda1;
        Rational alpha(1, 2);
        BoundReport r = bound_report(g, dm, prof, l1, Rational(1), &alpha);

        CHECK(r.kappa0 == Rational(1));
        CHECK(r.integral == Rational(4));
        CHECK(r.has_alpha);
        CHECK(r.diam.applicable);
        CHECK(r.diam.bound == Rational(6));
        CHECK(r.diam.holds);
        CHECK(!r.diam.vacuous); // 6 == n - 1 exactly, not beyond it
        CHECK(r.diam_alpha.applicable);
        CHECK(r.diam_alpha.bound == Rational(6));
        CHECK(r.moore.applicable);
        CHECK(r.moore.bound == Rational(653));
        CHECK(r.moore.holds);
        CHECK(r.lich.applicable);
        CHECK(r.lich.bound == Rational(-3));
        CHECK(r.lich.holds);
        CHECK(r.lich.vacuous); // nonpositive eigenvalue bound carries no content
        CHECK(r.n == 7);
        CHECK(r.diameter == 6);
        CHECK(r.max_degree == 2);
    }
    SUBCASE("pendant hexagon diameter bound is flagged vacuous") {
        Graph g = Graph::generate(Family::pendant_hexagon, 0);
        DistanceMatrix dm(g);
        CurvatureProfile prof = curvature_profile(g, dm);
        double l1 = spectrum(g).lambda1;
        BoundReport r = bound_report(g, dm, prof, l1, Rational(2, 3), nullptr);
        CHECK(r.integral == Rational(8));
        CHECK(r.diam.bound == Rational(15));
        CHECK(r.diam.holds);
        CHECK(r.diam.vacuous); // 15 > n - 1 = 11
        CHECK(!r.has_alpha);
    }
    SUBCASE("nonpositive threshold keeps only the vertex-count theorem") {
        Graph g = Graph::generate(Family::dumbbell, 3);
        DistanceMatrix dm(g);
        CurvatureProfile prof = curvature_profile(g, dm);
        double l1 = spectrum(g).lambda1;
        BoundReport r = bound_report(g, dm, prof, l1, Rational(-2, 3), nullptr);
        CHECK(!r.diam.applicable);
        CHECK(!r.lich.applicable);
        CHECK(r.diam.holds); // trivially
        CHECK(r.moore.applicable);
        CHECK(r.moore.holds);
        CHECK(r.moore.bound >= Rational(6));
    }
    SUBCASE("default sweep covers each distinct curvature value") {
        Graph g = Graph::generate(Family::dumbbell, 3);
        std::vector<BoundReport> reports = audit(g, std::nullopt, std::nullopt);
        DistanceMatrix dm(g);
        std::vector<Rational> want = curvature_profile(g, dm).distinct();
        REQUIRE(reports.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i) CHECK(reports[i].kappa0 == want[i]);
    }
    SUBCASE("explicit threshold gives exactly one report") {
        Graph g = Graph::generate(Family::path, 5);
        std::vector<BoundReport> reports = audit(g, Rational(1), Rational(1, 2));
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].kappa0 == Rational(1));
        CHECK(reports[0].has_alpha);
        CHECK(reports[0].alpha == Rational(1, 2));
    }
}

TEST_CASE("bounds are sound on a random corpus") {
    corpus::Rng rng(0xB0B0B0B0ULL);
    int positive_thresholds = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = corpus::random_connected_graph(rng, 2, 9);
        DistanceMatrix dm(g);
        CurvatureProfile prof = curvature_profile(g, dm);
        double l1 = spectrum(g).lambda1;
        CAPTURE(trial);
        for (const Rational& kappa0 : prof.distinct()) {
            if (kappa0.sign() <= 0) continue;
            ++positive_thresholds;
            Rational I = integral_curvature(g, prof, kappa0).value;
            CHECK(diameter_bound_lly(kappa0, I) >= dm.diameter());
            CHECK(moore_bound_auto(g.max_degree(), kappa0, I) >=
                  Rational(g.vertex_count()));
            CHECK(lichnerowicz_bound(kappa0, I).to_double() <= l1 + 1e-9);

            // Alpha route at a generic sample point.
            Rational alpha(1, 3);
            Rational Ia = integral_curvature_alpha(g, dm, kappa0, alpha).value;
            CHECK(diameter_bound_alpha(kappa0, alpha, Ia) >= dm.diameter());
            CHECK(lichnerowicz_bound_alpha(kappa0, alpha, Ia).to_double() <= l1 + 1e-9);
        }
    }
    CHECK(positive_thresholds > 60); // the corpus exercises the theorems
}

TEST_CASE("key lemma holds for random pairs and thresholds") {
    corpus::Rng rng(0xD1D1D1D1ULL);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = corpus::random_connected_graph(rng, 2, 9);
        DistanceMatrix dm(g);
        CurvatureProfile prof = curvature_profile(g, dm);
        const int n = g.vertex_count();
        for (int draw = 0; draw < 3; ++draw) {
            Vertex x = static_cast<Vertex>(rng.uniform(0, n - 1));
            Vertex y = static_cast<Vertex>(rng.uniform(0, n - 2));
            if (y >= x) ++y;
            Rational kappa0(rng.uniform(-24, 24), 12);
            CAPTURE(trial);
            CAPTURE(draw);
            CHECK(key_lemma_check(g, dm, prof, x, y, kappa0));
        }
    }
}
