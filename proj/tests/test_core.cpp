#include <doctest.h>

#include <vector>

#include "kecore/cli.hpp"
#include "kecore/core_solver.hpp"
#include "kecore/errors.hpp"
#include "kecore/ke_test.hpp"
#include "kecore/oracle.hpp"
#include "support.hpp"

using namespace kecore;
using namespace kecore::tests;

namespace {

std::vector<CoreMode> applicable_modes(const FixtureInfo& info) {
    std::vector<CoreMode> modes{CoreMode::Auto, CoreMode::General};
    if (info.bipartite) modes.push_back(CoreMode::Bipartite);
    if (info.perfect_matching) modes.push_back(CoreMode::Perfect);
    return modes;
}

} // namespace

TEST_CASE("fixture cores in every applicable mode") {
    for (const auto& info : fixtures()) {
        Graph g = load_fixture(info.name);
        if (!info.ke) {
            CHECK_THROWS_AS(compute_core(g), NotKEError);
            continue;
        }
        for (CoreMode mode : applicable_modes(info)) {
            CoreResult result = compute_core(g, mode);
            CAPTURE(info.name);
            CHECK(result.core.members() == info.core);
            CHECK(result.mu == info.mu);
            CHECK(result.alpha == info.n - info.mu);
            for (int v = 0; v < info.n; ++v)
                CHECK(result.c[v] == (result.core.contains(v) ? 1 : 0));
        }
    }
}

TEST_CASE("general algorithm branch trace on fig4_g1") {
    CoreResult r = compute_core(load_fixture("fig4_g1"), CoreMode::General);
    CHECK(r.algorithm == CoreAlgorithm::General);
    CHECK(r.mu == 3);

    // mu-equality branch: exactly the two rightmost vertices, no KE test run.
    for (int v : {5, 6}) {
        CHECK(r.c[v] == 1);
        CHECK(!r.ke_defined(v));
    }
    // mu drops elsewhere; deletion keeps the property except at vertex 4.
    for (int v : {0, 1, 2, 3}) {
        CHECK(r.ke[v] == 1);
        CHECK(r.c[v] == 0);
    }
    CHECK(r.ke[4] == 0);
    CHECK(r.c[4] == 1);
}

TEST_CASE("bipartite algorithm trace on fig4_g2") {
    CoreResult r = compute_core(load_fixture("fig4_g2"), CoreMode::Bipartite);
    CHECK(r.algorithm == CoreAlgorithm::Bipartite);
    CHECK(r.core.members() == std::vector<int>{5, 6});
    for (int v = 0; v < 7; ++v) CHECK(!r.ke_defined(v)); // no KE sub-tests at all
}

TEST_CASE("perfect-matching algorithm traces") {
    CoreResult g1 = compute_core(load_fixture("fig5_g1"), CoreMode::Perfect);
    CHECK(g1.algorithm == CoreAlgorithm::PerfectMatching);
    std::vector<std::int8_t> expected{0, 1, 0, 1, 1, 1};
    CHECK(g1.ke == expected);
    CHECK(g1.core.members() == std::vector<int>{0, 2});

    CoreResult g2 = compute_core(load_fixture("fig5_g2"), CoreMode::Perfect);
    for (int v = 0; v < 6; ++v) CHECK(g2.ke[v] == 1);
    CHECK(g2.core.empty());
}

TEST_CASE("auto mode picks the cheapest applicable algorithm") {
    CHECK(compute_core(load_fixture("fig5_g2")).algorithm == CoreAlgorithm::Bipartite);
    CHECK(compute_core(load_fixture("fig3_g2")).algorithm == CoreAlgorithm::PerfectMatching);
    CHECK(compute_core(load_fixture("fig4_g1")).algorithm == CoreAlgorithm::General);
    CHECK_THROWS_AS(compute_core(load_fixture("fig1_h3")), NotKEError);
}

TEST_CASE("explicit mode gates") {
    Graph g1 = load_fixture("fig4_g1");
    CHECK_THROWS_AS(compute_core(g1, CoreMode::Bipartite), NotBipartiteError);
    CHECK_THROWS_AS(compute_core(g1, CoreMode::Perfect), NoPerfectMatchingError);
    CHECK_THROWS_AS(compute_core(load_fixture("fig1_h3"), CoreMode::General), NotKEError);
    CHECK_THROWS_AS(compute_core(g1, CoreMode::Auto, 0), std::invalid_argument);
}

TEST_CASE("alpha for KE graphs") {
    CHECK(alpha_ke(load_fixture("fig3_g1")) == 4);
    CHECK(alpha_ke(load_fixture("fig3_g2")) == 3);
    CHECK_THROWS_AS(alpha_ke(load_fixture("fig1_h3")), NotKEError);
}

TEST_CASE("unique maximum independent set recognition") {
    UniqueMISResult g2 = unique_mis(load_fixture("fig3_g2"));
    CHECK(g2.unique);
    CHECK(g2.mis.members() == std::vector<int>{3, 4, 5});
    CHECK(oracle::enumerate_mis(load_fixture("fig3_g2")).count() == 1);

    UniqueMISResult g1 = unique_mis(load_fixture("fig4_g1"));
    CHECK(!g1.unique);
    CHECK(oracle::enumerate_mis(load_fixture("fig4_g1")).count() >= 2);

    UniqueMISResult k1 = unique_mis(Graph(1, {}));
    CHECK(k1.unique);
    CHECK(k1.mis.members() == std::vector<int>{0});

    CHECK_THROWS_AS(unique_mis(load_fixture("fig1_h3")), NotKEError);
}

TEST_CASE("uniqueness agrees with oracle enumeration across the corpus") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = gen_ke(corpus_spec(seed, 12));
        CHECK(unique_mis(g).unique == (oracle::enumerate_mis(g).count() == 1));
    }
}

TEST_CASE("K1 core") {
    CoreResult r = compute_core(Graph(1, {}));
    CHECK(r.core.members() == std::vector<int>{0});
}

TEST_CASE("empty graph core") {
    CoreResult r = compute_core(Graph(0, {}));
    CHECK(r.core.empty());
    CHECK(r.mu == 0);
    CHECK(r.alpha == 0);
}

TEST_CASE("isolated vertices always land in the core") {
    // Path 2-3 plus isolated 0, 1.
    Graph g(4, {{2, 3}});
    CoreResult r = compute_core(g);
    CHECK(r.core.contains(0));
    CHECK(r.core.contains(1));
    CHECK(!r.core.contains(2));
    CHECK(!r.core.contains(3));
}

TEST_CASE("oracle equivalence across the corpus, all applicable modes") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        Graph g = gen_ke(corpus_spec(seed, 14));
        auto expected = oracle::brute_core(g).members();
        CAPTURE(seed);
        CoreResult r = compute_core(g, CoreMode::Auto);
        CHECK(r.core.members() == expected);
        CHECK(r.core.size() <= r.alpha);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (r.ke_defined(v)) CHECK(r.c[v] == (r.ke[v] ? 0 : 1));
        CHECK(compute_core(g, CoreMode::General).core.members() == expected);
        if (bipartition(g).is_bipartite())
            CHECK(compute_core(g, CoreMode::Bipartite).core.members() == expected);
        Matching m = maximum_matching(g);
        if (has_perfect_matching(g, m))
            CHECK(compute_core(g, CoreMode::Perfect).core.members() == expected);
    }
}

TEST_CASE("all three algorithms agree on bipartite perfect-matching inputs") {
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 400 && covered < 25; ++seed) {
        GenSpec spec = corpus_spec(seed, 12);
        if (spec.n == 0 || spec.n % 2 != 0) continue;
        spec.flavor = GenFlavor::BipartiteKe;
        spec.mu = spec.n / 2;
        Graph g = gen_ke(spec);
        Matching m = maximum_matching(g);
        if (!has_perfect_matching(g, m)) continue; // optional edges cannot break this, but be safe
        ++covered;
        auto a = compute_core(g, CoreMode::General).core;
        auto b = compute_core(g, CoreMode::Bipartite).core;
        auto c = compute_core(g, CoreMode::Perfect).core;
        CHECK(a == b);
        CHECK(b == c);
    }
    CHECK(covered >= 25);
}

TEST_CASE("parallel map is deterministic and matches the serial reference") {
    std::vector<Graph> graphs;
    for (const auto& info : fixtures())
        if (info.ke) graphs.push_back(load_fixture(info.name));
    graphs.push_back(gen_ke({60, 18, 0.15, 1234, GenFlavor::Ke}));

    for (const Graph& g : graphs) {
        CoreResult serial = compute_core_serial(g);
        std::string reference = cli::core_result_to_json(g, serial).dump();
        for (int workers : {1, 2, 3, 8}) {
            CoreResult parallel = compute_core(g, CoreMode::Auto, workers);
            CHECK(cli::core_result_to_json(g, parallel).dump() == reference);
            CHECK(parallel.core == serial.core);
            CHECK(parallel.c == serial.c);
            CHECK(parallel.ke == serial.ke);
        }
    }
}
