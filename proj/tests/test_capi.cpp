#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>

#include "graphcurv/graphcurv.h"
#include "json.hpp"

using json = nlohmann::ordered_json; // reports keep insertion order

namespace {

struct GraphHandle {
    gcv_graph* g = nullptr;
    ~GraphHandle() {
        gcv_graph_free(g);
    }
};

struct CString {
    char* s = nullptr;
    ~CString() {
        gcv_string_free(s);
    }
    std::string str() const {
        return s ? std::string(s) : std::string();
    }
};

gcv_graph* must_generate(const char* family, int64_t param) {
    gcv_graph* g = nullptr;
    REQUIRE(gcv_graph_generate(family, param, &g) == GCV_OK);
    REQUIRE(g != nullptr);
    return g;
}

} // namespace

TEST_CASE("generate and inspect through the C interface") {
    GraphHandle h{must_generate("dumbbell", 3)};

    int64_t count = -1;
    CHECK(gcv_graph_vertex_count(h.g, &count) == GCV_OK);
    CHECK(count == 6);
    CHECK(gcv_graph_edge_count(h.g, &count) == GCV_OK);
    CHECK(count == 7);

    int64_t d = -1;
    CHECK(gcv_graph_degree(h.g, 0, &d) == GCV_OK);
    CHECK(d == 3);
    CHECK(gcv_graph_degree(h.g, 1, &d) == GCV_OK);
    CHECK(d == 2);
    CHECK(gcv_graph_degree(h.g, 6, &d) == GCV_INVALID_PARAMETER);

    int64_t dist = -1;
    CHECK(gcv_graph_distance(h.g, 1, 4, &dist) == GCV_OK);
    CHECK(dist == 3);
    int64_t diam = -1;
    CHECK(gcv_graph_diameter(h.g, &diam) == GCV_OK);
    CHECK(diam == 3);

    int64_t u = -1, v = -1;
    CHECK(gcv_graph_edge(h.g, 0, &u, &v) == GCV_OK);
    CHECK(u == 0);
    CHECK(v == 1);
    CHECK(gcv_graph_edge(h.g, 99, &u, &v) == GCV_INVALID_PARAMETER);
}

TEST_CASE("edge list text round-trips") {
    GraphHandle h;
    REQUIRE(gcv_graph_from_edge_list("10 30\n30 20\n20 10\n", &h.g) == GCV_OK);
    int64_t n = 0;
    CHECK(gcv_graph_vertex_count(h.g, &n) == GCV_OK);
    CHECK(n == 3);

    CString text;
    REQUIRE(gcv_graph_to_edge_list(h.g, &text.s) == GCV_OK);
    CHECK(text.str() == "10 30\n10 20\n30 20\n");

    GraphHandle again;
    REQUIRE(gcv_graph_from_edge_list(text.s, &again.g) == GCV_OK);
    int64_t m = 0;
    CHECK(gcv_graph_edge_count(again.g, &m) == GCV_OK);
    CHECK(m == 3);
}

TEST_CASE("json graph round-trips") {
    GraphHandle h{must_generate("cycle", 5)};
    CString text;
    REQUIRE(gcv_graph_to_json(h.g, &text.s) == GCV_OK);

    json doc = json::parse(text.str());
    CHECK(doc.at("n") == 5);
    CHECK(doc.at("edges").size() == 5);

    GraphHandle again;
    REQUIRE(gcv_graph_from_json(text.s, &again.g) == GCV_OK);
    CString back;
    REQUIRE(gcv_graph_to_json(again.g, &back.s) == GCV_OK);
    CHECK(back.str() == text.str());
}

TEST_CASE("curvature values come back as exact rational strings") {
    GraphHandle k2{must_generate("path", 2)};
    CString kappa;
    REQUIRE(gcv_kappa_lly(k2.g, 0, 1, &kappa.s) == GCV_OK);
    CHECK(kappa.str() == "2");

    CString at_alpha;
    REQUIRE(gcv_kappa_alpha(k2.g, 0, 1, "3/4", &at_alpha.s) == GCV_OK);
    CHECK(at_alpha.str() == "1/2");

    GraphHandle db{must_generate("dumbbell", 3)};
    CString bridge;
    REQUIRE(gcv_kappa_lly(db.g, 0, 3, &bridge.s) == GCV_OK);
    CHECK(bridge.str() == "-2/3");
}

TEST_CASE("curvature report json") {
    GraphHandle h{must_generate("path", 4)};

    CString lly;
    REQUIRE(gcv_curvature_json(h.g, nullptr, &lly.s) == GCV_OK);
    json doc = json::parse(lly.str());
    CHECK(doc.at("kind") == "lly");
    CHECK(doc.at("n") == 4);
    CHECK(doc.at("edges").size() == 3);
    CHECK(doc.at("min") == "0");
    CHECK(doc.at("max") == "1");
    // Serialization is canonical: parsing and re-dumping is the identity.
    CHECK(doc.dump() == lly.str());

    CString at_zero;
    REQUIRE(gcv_curvature_json(h.g, "0", &at_zero.s) == GCV_OK);
    json zero = json::parse(at_zero.str());
    CHECK(zero.at("kind") == "alpha");
    CHECK(zero.at("alpha") == "0");
    CHECK(zero.at("edges")[0].at("kappa") == "0");
    CHECK(zero.dump() == at_zero.str());
}

TEST_CASE("integral curvature through the C interface") {
    GraphHandle h{must_generate("path", 7)};
    CString lly;
    REQUIRE(gcv_integral_curvature(h.g, "1", nullptr, &lly.s) == GCV_OK);
    CHECK(lly.str() == "4");

    CString at_alpha;
    REQUIRE(gcv_integral_curvature(h.g, "1", "3/4", &at_alpha.s) == GCV_OK);
    CHECK(at_alpha.str() == "1");
}

TEST_CASE("bounds and spectrum and audit reports parse and round-trip") {
    GraphHandle h{must_generate("dumbbell", 3)};

    CString bounds;
    REQUIRE(gcv_bounds_json(h.g, nullptr, nullptr, 0.0, &bounds.s) == GCV_OK);
    json b = json::parse(bounds.str());
    CHECK(b.at("thresholds").size() == 3); // distinct curvature values
    CHECK(b.at("thresholds")[1].at("kappa0") == "5/6");
    CHECK(b.at("thresholds")[1].at("diameter_bound") == 4);
    CHECK(b.dump() == bounds.str());

    CString one;
    REQUIRE(gcv_bounds_json(h.g, "5/6", "1/2", 0.0, &one.s) == GCV_OK);
    json o = json::parse(one.str());
    CHECK(o.at("thresholds").size() == 1);
    CHECK(o.at("thresholds")[0].contains("integral_alpha"));

    CString spec;
    REQUIRE(gcv_spectrum_json(h.g, 0.0, &spec.s) == GCV_OK);
    json s = json::parse(spec.str());
    CHECK(s.at("eigenvalues").size() == 6);
    CHECK(std::abs(s.at("eigenvalues")[0].get<double>()) < 1e-9);
    CHECK(s.at("lambda1").get<double>() == doctest::Approx(0.204666354557).epsilon(1e-9));
    CHECK(s.dump() == spec.str());

    CString audit;
    REQUIRE(gcv_audit_json(h.g, "5/6", nullptr, 0.0, &audit.s) == GCV_OK);
    json a = json::parse(audit.str());
    CHECK(a.at("report") == "audit");
    CHECK(a.at("graph").at("n") == 6);
    CHECK(a.at("curvature").at("kind") == "lly");
    CHECK(a.at("bounds").at("thresholds").size() == 1);
    CHECK(a.dump() == audit.str());
}

TEST_CASE("error codes map one to one") {
    gcv_graph* g = nullptr;

    CHECK(gcv_graph_generate("path", 1, &g) == GCV_INVALID_PARAMETER);
    CHECK(g == nullptr);
    CHECK(std::strlen(gcv_last_error()) > 0);

    CHECK(gcv_graph_generate("no_such_family", 3, &g) == GCV_INVALID_PARAMETER);
    CHECK(gcv_graph_from_edge_list("0 0\n", &g) == GCV_SELF_LOOP);
    CHECK(gcv_graph_from_edge_list("0 1\n1 0\n", &g) == GCV_DUPLICATE_EDGE);
    CHECK(gcv_graph_from_edge_list("0 1\n2 3\n", &g) == GCV_DISCONNECTED);
    CHECK(gcv_graph_from_edge_list("zebra\n", &g) == GCV_PARSE_ERROR);
    CHECK(gcv_graph_from_json("{not json", &g) == GCV_PARSE_ERROR);
    CHECK(g == nullptr);

    GraphHandle h{must_generate("path", 3)};
    char* out = nullptr;
    CHECK(gcv_kappa_alpha(h.g, 0, 1, "3/2", &out) == GCV_ALPHA_OUT_OF_RANGE);
    CHECK(gcv_kappa_alpha(h.g, 0, 1, "oops", &out) == GCV_PARSE_ERROR);
    CHECK(gcv_kappa_lly(h.g, 1, 1, &out) == GCV_SAME_VERTEX);
    CHECK(gcv_kappa_lly(h.g, 0, 9, &out) == GCV_INVALID_PARAMETER);
    CHECK(gcv_integral_curvature(h.g, "bad", nullptr, &out) == GCV_PARSE_ERROR);
    CHECK(gcv_spectrum_json(h.g, -1.0, &out) == GCV_INVALID_PARAMETER);
    CHECK(out == nullptr); // failed calls never hand back a string
}

TEST_CASE("null arguments are rejected, not dereferenced") {
    GraphHandle h{must_generate("path", 3)};
    char* out = nullptr;
    int64_t ival = 0;

    CHECK(gcv_graph_generate(nullptr, 3, nullptr) == GCV_BAD_ARGUMENT);
    CHECK(gcv_graph_from_edge_list(nullptr, nullptr) == GCV_BAD_ARGUMENT);
    CHECK(gcv_graph_vertex_count(nullptr, &ival) == GCV_BAD_ARGUMENT);
    CHECK(gcv_graph_degree(nullptr, 0, &ival) == GCV_BAD_ARGUMENT);
    CHECK(gcv_graph_degree(h.g, 0, nullptr) == GCV_BAD_ARGUMENT);
    CHECK(gcv_kappa_lly(nullptr, 0, 1, &out) == GCV_BAD_ARGUMENT);
    CHECK(gcv_kappa_lly(h.g, 0, 1, nullptr) == GCV_BAD_ARGUMENT);
    CHECK(gcv_kappa_alpha(h.g, 0, 1, nullptr, &out) == GCV_BAD_ARGUMENT);
    CHECK(gcv_curvature_json(h.g, "1/2", nullptr) == GCV_BAD_ARGUMENT);
    CHECK(std::strlen(gcv_last_error()) > 0);
    gcv_graph_free(nullptr); // must be a no-op
    gcv_string_free(nullptr);
}

TEST_CASE("status names are stable strings") {
    CHECK(std::string(gcv_status_name(GCV_OK)) == "Ok");
    CHECK(std::string(gcv_status_name(GCV_PARSE_ERROR)) == "ParseError");
    CHECK(std::string(gcv_status_name(GCV_SELF_LOOP)) == "SelfLoop");
    CHECK(std::string(gcv_status_name(GCV_DUPLICATE_EDGE)) == "DuplicateEdge");
    CHECK(std::string(gcv_status_name(GCV_DISCONNECTED)) == "Disconnected");
    CHECK(std::string(gcv_status_name(GCV_INVALID_PARAMETER)) == "InvalidParameter");
    CHECK(std::string(gcv_status_name(GCV_ALPHA_OUT_OF_RANGE)) == "AlphaOutOfRange");
    CHECK(std::string(gcv_status_name(GCV_SAME_VERTEX)) == "SameVertex");
    CHECK(std::string(gcv_status_name(GCV_TOO_LARGE)) == "TooLarge");
    CHECK(std::string(gcv_status_name(GCV_NO_STABILIZATION)) == "NoStabilization");
    CHECK(std::string(gcv_status_name(GCV_NONPOSITIVE_THRESHOLD)) == "NonpositiveThreshold");
    CHECK(std::string(gcv_status_name(GCV_CONVERGENCE_FAILURE)) == "ConvergenceFailure");
    CHECK(std::string(gcv_status_name(GCV_BAD_ARGUMENT)) == "BadArgument");
    CHECK(std::string(gcv_status_name(GCV_INTERNAL_ERROR)) == "InternalError");
}
