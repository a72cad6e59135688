#include "doctest.h"

#include <utility>
#include <vector>

#include "graphcurv/corpus.hpp"
#include "graphcurv/error.hpp"
#include "graphcurv/graph.hpp"
#include "graphcurv/transport.hpp"

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

ProbabilityMeasure dirac(Vertex v) {
    return ProbabilityMeasure::from_weights({{v, Rational(1)}});
}

} // namespace

TEST_CASE("probability measures validate their entries") {
    ProbabilityMeasure m =
        ProbabilityMeasure::from_weights({{0, Rational(1, 4)}, {2, Rational(3, 4)}});
    CHECK(m.support_size() == 2);
    CHECK(m.at(0) == Rational(1, 4));
    CHECK(m.at(1) == Rational(0));
    CHECK(m.at(2) == Rational(3, 4));

    // Entry order is normalized, not rejected.
    ProbabilityMeasure swapped =
        ProbabilityMeasure::from_weights({{2, Rational(3, 4)}, {0, Rational(1, 4)}});
    CHECK(swapped == m);

    CHECK(code_of([] {
              ProbabilityMeasure::from_weights({{0, Rational(1, 2)}});
          }) == errc::invalid_parameter); // does not sum to 1
    CHECK(code_of([] {
              ProbabilityMeasure::from_weights({{0, Rational(0)}, {1, Rational(1)}});
          }) == errc::invalid_parameter); // zero mass entry
    CHECK(code_of([] {
              ProbabilityMeasure::from_weights(
                  {{0, Rational(1, 2)}, {0, Rational(1, 2)}});
          }) == errc::invalid_parameter); // duplicate vertex
    CHECK(code_of([] {
              ProbabilityMeasure::from_weights({{0, Rational(3, 2)}, {1, Rational(-1, 2)}});
          }) == errc::invalid_parameter); // negative mass
}

TEST_CASE("lazy walk measures") {
    Graph p3 = Graph::generate(Family::path, 3);

    SUBCASE("interior vertex at alpha = 2/3") {
        ProbabilityMeasure m = lazy_walk_measure(p3, 1, Rational(2, 3));
        CHECK(m == ProbabilityMeasure::from_weights(
                       {{0, Rational(1, 6)}, {1, Rational(2, 3)}, {2, Rational(1, 6)}}));
    }
    SUBCASE("alpha = 0 drops the center from the support") {
        ProbabilityMeasure m = lazy_walk_measure(p3, 1, Rational(0));
        CHECK(m == ProbabilityMeasure::from_weights(
                       {{0, Rational(1, 2)}, {2, Rational(1, 2)}}));
        CHECK(m.at(1) == Rational(0));
    }
    SUBCASE("leaf vertex") {
        ProbabilityMeasure m = lazy_walk_measure(p3, 0, Rational(1, 4));
        CHECK(m == ProbabilityMeasure::from_weights(
                       {{0, Rational(1, 4)}, {1, Rational(3, 4)}}));
    }
    SUBCASE("alpha outside [0, 1) is rejected") {
        CHECK(code_of([&] { lazy_walk_measure(p3, 0, Rational(1)); }) ==
              errc::alpha_out_of_range);
        CHECK(code_of([&] { lazy_walk_measure(p3, 0, Rational(-1, 8)); }) ==
              errc::alpha_out_of_range);
        CHECK(code_of([&] { lazy_walk_measure(p3, 0, Rational(9, 8)); }) ==
              errc::alpha_out_of_range);
    }
}

TEST_CASE("wasserstein on worked examples") {
    SUBCASE("identical measures cost 0 and Diracs cost the distance") {
        Graph g = Graph::generate(Family::cycle, 6);
        DistanceMatrix dm(g);
        ProbabilityMeasure m = lazy_walk_measure(g, 2, Rational(1, 2));
        TransportSolution same = wasserstein(g, dm, m, m);
        CHECK(same.value == Rational(0));
        CHECK(verify_certificate(g, dm, m, m, same));

        TransportSolution across = wasserstein(g, dm, dirac(0), dirac(3));
        CHECK(across.value == Rational(3));
        CHECK(across.plan.size() == 1);
        CHECK(across.plan[0].mass == Rational(1));
        CHECK(verify_certificate(g, dm, dirac(0), dirac(3), across));
    }
    SUBCASE("two-point graph lazy walks: W = |2 alpha - 1|") {
        Graph k2 = Graph::generate(Family::path, 2);
        DistanceMatrix dm(k2);
        for (auto [alpha, want] :
             {std::pair{Rational(3, 4), Rational(1, 2)}, {Rational(0), Rational(1)},
              {Rational(1, 2), Rational(0)}, {Rational(1, 4), Rational(1, 2)}}) {
            ProbabilityMeasure mx = lazy_walk_measure(k2, 0, alpha);
            ProbabilityMeasure my = lazy_walk_measure(k2, 1, alpha);
            TransportSolution sol = wasserstein(k2, dm, mx, my);
            CHECK(sol.value == want);
            CHECK(verify_certificate(k2, dm, mx, my, sol));
        }
    }
    SUBCASE("path interior pair at alpha = 0") {
        // m_1 = (1/2, 0, 1/2, 0), m_2 = (0, 1/2, 0, 1/2) on P_4: shift
        // everything one step to the right.
        Graph p4 = Graph::generate(Family::path, 4);
        DistanceMatrix dm(p4);
        ProbabilityMeasure m1 = lazy_walk_measure(p4, 1, Rational(0));
        ProbabilityMeasure m2 = lazy_walk_measure(p4, 2, Rational(0));
        TransportSolution sol = wasserstein(p4, dm, m1, m2);
        CHECK(sol.value == Rational(1));
        CHECK(verify_certificate(p4, dm, m1, m2, sol));
    }
}

TEST_CASE("brute force dual oracle") {
    SUBCASE("matches hand values") {
        Graph p3 = Graph::generate(Family::path, 3);
        DistanceMatrix dm(p3);
        CHECK(brute_force_dual(p3, dm, dirac(0), dirac(2)) == Rational(2));
        // Both leaves step to the center at alpha = 0, so the walk measures
        // coincide and the cost vanishes.
        ProbabilityMeasure m1 = lazy_walk_measure(p3, 0, Rational(0));
        ProbabilityMeasure m2 = lazy_walk_measure(p3, 2, Rational(0));
        CHECK(m1 == m2);
        CHECK(brute_force_dual(p3, dm, m1, m2) == Rational(0));
        // Spreading the center's mass to both leaves costs one full unit.
        CHECK(brute_force_dual(p3, dm, lazy_walk_measure(p3, 1, Rational(0)), dirac(1)) ==
              Rational(1));
    }
    SUBCASE("guards against large graphs") {
        Graph big = Graph::generate(Family::path, 11);
        DistanceMatrix dm(big);
        CHECK(code_of([&] { brute_force_dual(big, dm, dirac(0), dirac(1)); }) ==
              errc::too_large);
    }
}

TEST_CASE("transport properties on random instances") {
    corpus::Rng rng(0xA5A5A5A5ULL);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = corpus::random_connected_graph(rng, 2, 8);
        DistanceMatrix dm(g);
        ProbabilityMeasure m1 = corpus::random_measure(rng, g);
        ProbabilityMeasure m2 = corpus::random_measure(rng, g);

        TransportSolution fwd = wasserstein(g, dm, m1, m2);
        TransportSolution bwd = wasserstein(g, dm, m2, m1);

        CAPTURE(trial);
        // Primal value == independent dual search, both directions.
        CHECK(fwd.value == brute_force_dual(g, dm, m1, m2));
        CHECK(fwd.value == bwd.value); // symmetry
        CHECK(verify_certificate(g, dm, m1, m2, fwd));
        CHECK(verify_certificate(g, dm, m2, m1, bwd));
        CHECK(fwd.value.sign() >= 0);
        CHECK((fwd.value.sign() == 0) == (m1 == m2)); // nondegeneracy

        // Triangle inequality through a third measure.
        ProbabilityMeasure m3 = corpus::random_measure(rng, g);
        Rational direct = fwd.value;
        Rational via = wasserstein(g, dm, m1, m3).value + wasserstein(g, dm, m3, m2).value;
        CHECK(direct <= via);
    }
}

TEST_CASE("certificate verifier rejects corrupted evidence") {
    Graph g = Graph::generate(Family::cycle, 5);
    DistanceMatrix dm(g);
    ProbabilityMeasure m1 = lazy_walk_measure(g, 0, Rational(1, 3));
    ProbabilityMeasure m2 = lazy_walk_measure(g, 2, Rational(1, 3));
    TransportSolution sol = wasserstein(g, dm, m1, m2);
    REQUIRE(verify_certificate(g, dm, m1, m2, sol));

    SUBCASE("wrong value") {
        TransportSolution bad = sol;
        bad.value += Rational(1, 7);
        CHECK(!verify_certificate(g, dm, m1, m2, bad));
    }
    SUBCASE("tampered plan mass breaks the marginals") {
        TransportSolution bad = sol;
        REQUIRE(!bad.plan.empty());
        bad.plan[0].mass += Rational(1, 100);
        CHECK(!verify_certificate(g, dm, m1, m2, bad));
    }
    SUBCASE("potential violating the Lipschitz condition") {
        TransportSolution bad = sol;
        REQUIRE(!bad.potential.empty());
        bad.potential[0].second += Rational(10);
        CHECK(!verify_certificate(g, dm, m1, m2, bad));
    }
    SUBCASE("swapped marginals do not validate") {
        CHECK(!verify_certificate(g, dm, m2, m1, sol));
    }
}
