#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "support.hpp"

using namespace dpg;
using support::Rng;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

Metric two_points() { return make_metric({{R(0), R(1)}, {R(1), R(0)}}); }

} // namespace

TEST_CASE("poa clique: the anti-preference consensus is stuck", "[constructions]") {
    auto g23 = gen_poa_clique(R(2, 3));
    CHECK(g23.instance.node_count() == 3);
    CHECK(is_equilibrium(g23.instance, g23.designated).equilibrium);
    CHECK(social_cost(g23.instance, g23.designated) > R(0));
    CHECK(brute_force_optimum(g23.instance).cost == R(0));

    auto g12 = gen_poa_clique(R(1, 2));
    CHECK(g12.instance.node_count() == 2);
    CHECK(is_equilibrium(g12.instance, g12.designated).equilibrium);

    CHECK_THROWS_AS(gen_poa_clique(R(0)), OutOfRange); // the ring covers alpha = 0
    CHECK_THROWS_AS(gen_poa_clique(R(1)), OutOfRange);
}

TEST_CASE("fig1_ring holds a positive-cost equilibrium at alpha 0", "[constructions]") {
    auto ring = gen_fig1_ring();
    CHECK(ring.instance.node_count() == 8);
    CHECK(ring.instance.alpha() == R(0));

    StrategyVector allA(8, 0);
    CHECK(social_cost(ring.instance, allA) == R(0));
    CHECK(is_equilibrium(ring.instance, allA).equilibrium);

    CHECK(is_equilibrium(ring.instance, ring.designated).equilibrium);
    CHECK(social_cost(ring.instance, ring.designated) == R(8));

    int cut = 0;
    for (auto [a, b] : ring.instance.graph().edges())
        if (ring.designated[a] != ring.designated[b]) ++cut;
    CHECK(cut == 4);
}

TEST_CASE("two-strategy star meets the PoS bound exactly", "[constructions]") {
    Instance s34 = gen_two_strategy_star(R(3, 4));
    CHECK(s34.node_count() == 3); // two peripherals and the center
    CHECK(analyze(s34).pos == R(4, 3));
    CHECK(analyze(s34).pos == pos_upper_bound_two(R(3, 4)));

    Instance s45 = gen_two_strategy_star(R(4, 5));
    CHECK(s45.node_count() == 4);
    CHECK(analyze(s45).pos == R(3, 2));

    // along alpha = (n-1)/n the star PoS climbs toward 2 (n = 3 is the
    // rejected alpha = 2/3 notch)
    Rational prev(0);
    for (long long n = 4; n <= 8; ++n) {
        Instance st = gen_two_strategy_star(R(n - 1, n));
        Rational pos = analyze(st).pos;
        CHECK(pos == pos_upper_bound_two(R(n - 1, n)));
        CHECK(pos >= prev);
        prev = pos;
    }

    CHECK_THROWS_AS(gen_two_strategy_star(R(2, 3)), OutOfRange);
    CHECK_THROWS_AS(gen_two_strategy_star(R(1, 2)), OutOfRange);
}

TEST_CASE("cycle gadget: costs and the 4/3 trend", "[constructions]") {
    Instance g3 = gen_cycle_gadget(3);
    CHECK(g3.node_count() == 19);
    CHECK(g3.strategy_count() == 10);

    StrategyVector preferred = g3.preferred_vector();
    CHECK(is_equilibrium(g3, preferred).equilibrium);
    CHECK(social_cost(g3, preferred) == R(6)); // 2k

    StrategyVector center_to_b = preferred;
    center_to_b[0] = g3.preferred(1); // central node adopts the B-clique strategy
    CHECK(social_cost(g3, center_to_b) == R(11, 2)); // (3/2)k + 1

    // cost ratio 2k / ((3/2)k + 1) approaches 4/3 from below
    Rational prev(0);
    for (long long k = 1; k <= 200; ++k) {
        Rational ratio = R(2 * k) / (R(3 * k, 2) + R(1));
        CHECK(ratio >= prev);
        CHECK(ratio < R(4, 3));
        prev = ratio;
    }
    CHECK(prev > R(132, 100));

    // k = 1 keeps the all-preferred vector optimal: full certification at the
    // faithful clique size 3 is brute-forceable
    Instance g1 = gen_cycle_gadget(1);
    CHECK(g1.node_count() == 7);
    auto rep = analyze(g1);
    CHECK(rep.best_eq_cost == R(2)); // 2k
    CHECK(rep.opt_cost == R(2));
    CHECK(rep.pos == R(1));
    CHECK(social_cost(g1, g1.preferred_vector()) == R(2));

    CHECK_THROWS_AS(gen_cycle_gadget(0), OutOfRange);
}

TEST_CASE("path-cliques: all-preferred is an equilibrium of cost n+1", "[constructions]") {
    for (Rational alpha : {R(1, 2), R(2, 5)}) {
        Instance inst = gen_path_cliques(alpha, 4, R(1, 100));
        StrategyVector preferred = inst.preferred_vector();
        CHECK(is_equilibrium(inst, preferred).equilibrium);
        if (alpha == R(1, 2)) CHECK(social_cost(inst, preferred) == R(5));

        // per-node check: neighbors at s_a and s_b with a <= i <= b make s_i
        // the unique best response (path node p prefers strategy p+1)
        const int n = 4;
        for (int p = 0; p < n; ++p) {
            auto nbrs = inst.graph().neighbors(p);
            REQUIRE(nbrs.size() == 2);
            for (int a = 0; a <= p + 1; ++a)
                for (int b = p + 1; b <= n + 1; ++b) {
                    StrategyVector z = preferred;
                    z[nbrs[0]] = a;
                    z[nbrs[1]] = b;
                    CHECK(best_responses(inst, z, p) == std::vector<int>{p + 1});
                }
        }
    }
}

TEST_CASE("path-cliques: bi-consensus stays below the closed-form bound", "[constructions]") {
    for (long long n : {3LL, 4LL, 5LL}) {
        for (Rational eps : {R(1, 100), R(1, 1000)}) {
            Instance inst = gen_path_cliques(R(1, 2), n, eps, 1); // tiny cliques, same metric
            // split at floor(n/2): left side joins s_0, right side joins s_{n+1}
            StrategyVector z = inst.preferred_vector();
            const int half = static_cast<int>(n / 2);
            for (int p = 0; p < static_cast<int>(n); ++p) z[p] = p < half ? 0 : static_cast<int>(n) + 1;
            Rational cost = social_cost(inst, z);
            Rational bound = R(n + 2, 2) + R(n) * eps * R(n + 2);
            CHECK(cost <= bound);
        }
    }

    // below alpha = 1/2 the same split stays under the closed-form cost bound
    // (path preference terms plus the single stretched cut edge)
    for (Rational alpha : {R(2, 5), R(9, 20)}) {
        const long long n = 4;
        const Rational eps = R(1, 100);
        Instance inst = gen_path_cliques(alpha, n, eps, 1);
        StrategyVector z = inst.preferred_vector();
        for (int p = 0; p < static_cast<int>(n); ++p)
            z[p] = p < static_cast<int>(n / 2) ? 0 : static_cast<int>(n) + 1;
        const Rational stretch =
            (R(1) - R(2) * alpha) / (R(1) - alpha) * (R(1) + eps);
        const Rational bound = alpha * R(n) + alpha * R(n - 1) * R(n - 1) / R(4) * stretch +
                               R(2) * (R(1) - alpha) +
                               R(2) * R(n) * (R(1) - R(2) * alpha) * (R(1) + eps);
        CHECK(social_cost(inst, z) <= bound);
    }

    // the eps guard trips when the stretch would break the triangle inequality
    CHECK_THROWS_AS(gen_path_cliques(R(1, 2), 3, R(2)), OutOfRange);
    CHECK_THROWS_AS(gen_path_cliques(R(3, 4), 3, R(1, 100)), OutOfRange);
    CHECK_THROWS_AS(gen_path_cliques(R(1, 2), 1, R(1, 100)), OutOfRange);
}

TEST_CASE("anchored star is tight for the 2(k-1)/k bound", "[constructions]") {
    AnchoredInstance star3 = gen_anchored_star(3);
    CHECK(star3.max_fixed_neighbors() == 3);
    auto rep3 = anchored_analyze(star3);
    CHECK(rep3.opt_cost == R(3));      // k
    CHECK(rep3.best_eq_cost == R(4));  // 2(k-1)
    CHECK(rep3.pos == R(4, 3));
    CHECK(rep3.pos == anchored_pos_bound(3));

    auto rep4 = anchored_analyze(gen_anchored_star(4));
    CHECK(rep4.pos == R(3, 2));
    CHECK(rep4.pos == anchored_pos_bound(4));

    CHECK_THROWS_AS(gen_anchored_star(2), OutOfRange);
}

TEST_CASE("discrete-to-anchored reduction doubles costs, keeps equilibria", "[constructions]") {
    Instance edge(Graph(2, {{0, 1}}), two_points(), {0, 1}, R(1, 2));
    AnchoredInstance anch = discrete_to_anchored(edge);
    CHECK(anch.strategic_count() == 2);
    CHECK(anch.max_fixed_neighbors() == 1);
    CHECK(anchored_social_cost(anch, {0, 0}) == R(1)); // 2 * 1/2

    Instance lonely(Graph(2, {}), two_points(), {0, 1}, R(1, 2));
    CHECK(anchored_social_cost(discrete_to_anchored(lonely), {0, 1}) == R(0));

    Rng rng(20250110);
    for (int t = 0; t < 15; ++t) {
        const int L = static_cast<int>(rng.range(2, 3));
        Metric m = support::random_metric_mixed(rng, L);
        Instance inst = support::random_instance(rng, m, 5, R(1, 2));
        AnchoredInstance image = discrete_to_anchored(inst);

        StrategyVector z(inst.node_count(), 0);
        while (true) {
            CHECK(anchored_social_cost(image, z) == R(2) * social_cost(inst, z));
            CHECK(anchored_is_equilibrium(image, z).equilibrium ==
                  is_equilibrium(inst, z).equilibrium);
            int t2 = inst.node_count() - 1;
            while (t2 >= 0 && ++z[t2] == inst.strategy_count()) z[t2--] = 0;
            if (t2 < 0) break;
        }
    }

    Instance off(Graph(2, {{0, 1}}), two_points(), {0, 1}, R(1, 3));
    CHECK_THROWS_AS(discrete_to_anchored(off), WrongAlpha);
}

TEST_CASE("named construction registry drives the generators", "[constructions]") {
    NamedConstruction star{ConstructionId::TwoStrategyStar, {{"alpha", R(3, 4)}}};
    auto built = build_construction(star);
    REQUIRE(built.instance.size() == 1);
    CHECK(built.instance.front().node_count() == 3);

    NamedConstruction anchored{ConstructionId::AnchoredStar, {{"k", R(3)}}};
    CHECK(build_construction(anchored).anchored.size() == 1);

    NamedConstruction clique{ConstructionId::PoaClique, {{"alpha", R(2, 3)}}};
    CHECK(build_construction(clique).designated == StrategyVector{1, 1, 1});

    CHECK(construction_id_from_string("fig1_ring") == ConstructionId::Fig1Ring);
    CHECK_THROWS_AS(construction_id_from_string("nope"), OutOfRange);
    CHECK_THROWS_AS(build_construction({ConstructionId::TwoStrategyStar, {}}), OutOfRange);
    CHECK_THROWS_AS(build_construction({ConstructionId::CycleMetricGadget,
                                        {{"k", R(1, 2)}}}),
                    OutOfRange);
}
