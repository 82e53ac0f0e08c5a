#include <doctest.h>

#include <cmath>

#include "omt/procedures/alpha_spending.hpp"
#include "omt/procedures/engine.hpp"
#include "omt/procedures/online_graph.hpp"
#include "omt/rng.hpp"

using omt::GammaSequence;
using omt::GraphVariant;
using omt::GraphWeights;
using omt::Index;
using omt::ProcedureId;
using omt::ProcedureState;
using omt::StepRecord;

TEST_CASE("zero graph reproduces alpha-spending to the last bit") {
    const GammaSequence gamma = GammaSequence::inverse_square();
    const GraphWeights zero = GraphWeights::zero();
    for (GraphVariant variant : {GraphVariant::scaled, GraphVariant::direct}) {
        ProcedureState graph_state{ProcedureId::online_graph, 0.2};
        ProcedureState plain_state{ProcedureId::alpha_spending, 0.2};
        omt::CounterRng rng{21, 0, omt::CounterRng::Role::stream};
        for (Index i = 1; i <= 1000; ++i) {
            const double level = omt::online_graph_next(graph_state, gamma, zero, variant);
            const double want = omt::alpha_spending_next(plain_state, gamma);
            CHECK(level == want); // bitwise, not approximate
            const double p = rng.uniform01() < 0.3 ? rng.uniform(0.0, 0.2) : rng.uniform01();
            StepRecord r;
            r.index = i;
            r.p_value = p;
            r.alpha_i = level;
            r.rejected = p <= level;
            r.below_tau = true;
            graph_state.append(r);
            plain_state.append(r);
        }
    }
}

TEST_CASE("successor graph hands rejected levels forward") {
    // gamma = (1/2, 1/2), g_{j,j+1} = 1, alpha = 0.2. After rejecting H_1 at
    // level 0.1, the scaled variant grants H_2 0.2*(0.5 + 0.1) = 0.12, the
    // direct variant 0.2*0.5 + 0.1 = 0.2.
    const GammaSequence gamma = GammaSequence::from_list({0.5, 0.5});
    const GraphWeights succ = GraphWeights::lag(1, 1.0);

    ProcedureState s{ProcedureId::online_graph, 0.2};
    const double level1 = omt::online_graph_next(s, gamma, succ, GraphVariant::scaled);
    CHECK(level1 == doctest::Approx(0.1).epsilon(1e-15));
    StepRecord r;
    r.index = 1;
    r.p_value = 0.05;
    r.alpha_i = level1;
    r.rejected = true;
    r.below_tau = true;
    s.append(r);
    CHECK(omt::online_graph_next(s, gamma, succ, GraphVariant::scaled) ==
          doctest::Approx(0.12).epsilon(1e-15));
    CHECK(omt::online_graph_next(s, gamma, succ, GraphVariant::direct) ==
          doctest::Approx(0.2).epsilon(1e-15));

    // An accepted H_1 hands nothing forward in either variant.
    ProcedureState s2{ProcedureId::online_graph, 0.2};
    StepRecord r2 = r;
    r2.p_value = 0.5;
    r2.rejected = false;
    s2.append(r2);
    CHECK(omt::online_graph_next(s2, gamma, succ, GraphVariant::scaled) ==
          doctest::Approx(0.1).epsilon(1e-15));
    CHECK(omt::online_graph_next(s2, gamma, succ, GraphVariant::direct) ==
          doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("graph engine matches the free function on both variants") {
    const GammaSequence gamma = GammaSequence::inverse_square();
    const GraphWeights g = GraphWeights::lag(2, 0.8);
    for (GraphVariant variant : {GraphVariant::scaled, GraphVariant::direct}) {
        omt::OnlineGraphEngine engine{0.2, gamma, g, variant};
        ProcedureState replay{ProcedureId::online_graph, 0.2};
        omt::CounterRng rng{31, 0, omt::CounterRng::Role::stream};
        for (Index i = 1; i <= 400; ++i) {
            const double p =
                rng.uniform01() < 0.4 ? rng.uniform(0.0, 0.15) : rng.uniform01();
            const double want = omt::online_graph_next(replay, gamma, g, variant);
            const StepRecord& got = engine.step(p);
            CHECK(got.alpha_i == want);
            replay.append(got);
        }
    }
}

TEST_CASE("offline graph walks a fixed-sequence chain") {
    // gamma = (1, 0, 0) with a 1 -> 2 -> 3 chain is fixed-sequence testing:
    // every rejection passes the full level 0.2 to the next hypothesis.
    const std::vector<std::vector<double>> chain{
        {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}};
    const std::vector<double> gammas{1.0, 0.0, 0.0};

    CHECK(omt::offline_graph(std::vector<double>{0.1, 0.15, 0.19}, gammas, chain, 0.2) ==
          std::vector<Index>{1, 2, 3});
    // 0.25 > 0.2 stops the chain before H_3's level ever becomes positive.
    CHECK(omt::offline_graph(std::vector<double>{0.1, 0.25, 0.19}, gammas, chain, 0.2) ==
          std::vector<Index>{1});
    CHECK(omt::offline_graph(std::vector<double>{0.5, 0.01, 0.01}, gammas, chain, 0.2)
              .empty());
}

TEST_CASE("offline graph survives a fully reciprocal pair") {
    // g_{1,2} = g_{2,1} = 1 makes the rewiring denominator 0; the convention
    // g_{2,3} := 0 applies and no NaN leaks into the levels.
    const std::vector<std::vector<double>> g{
        {0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    const std::vector<double> gammas{0.5, 0.5, 0.0};
    const std::vector<double> p{0.01, 0.02, 0.0};
    const std::vector<Index> rejected = omt::offline_graph(p, gammas, g, 0.2);
    // P_3 = 0 on a level of exactly 0 rejects inclusively, and the 0/0 ratio
    // convention ranks it ahead of the positive ratios.
    CHECK(rejected == std::vector<Index>{3, 1, 2});

    const std::vector<double> p2{0.01, 0.02, 0.5};
    CHECK(omt::offline_graph(p2, gammas, g, 0.2) == std::vector<Index>{1, 2});
}

TEST_CASE("offline graph breaks ratio ties toward the lowest index") {
    const std::vector<std::vector<double>> none{{0.0, 0.0}, {0.0, 0.0}};
    const std::vector<double> gammas{0.5, 0.5};
    const std::vector<double> p{0.1, 0.1};
    CHECK(omt::offline_graph(p, gammas, none, 0.2) == std::vector<Index>{1, 2});
}

TEST_CASE("offline graph validates its inputs") {
    const std::vector<std::vector<double>> ok{{0.0, 0.5}, {0.0, 0.0}};
    const std::vector<double> gammas{0.5, 0.5};
    const std::vector<double> p{0.1, 0.1};
    CHECK_THROWS_AS((void)omt::offline_graph(p, std::vector<double>{0.5}, ok, 0.2),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)omt::offline_graph(p, gammas,
                                             {{0.0, 0.5}, {0.0, 0.1}}, 0.2),
                    std::invalid_argument); // nonzero diagonal
    CHECK_THROWS_AS((void)omt::offline_graph(p, gammas,
                                             {{0.0, 1.5}, {0.0, 0.0}}, 0.2),
                    std::invalid_argument); // row sum over 1
    CHECK_THROWS_AS((void)omt::offline_graph(p, std::vector<double>{0.9, 0.2}, ok, 0.2),
                    std::invalid_argument); // initial weights sum over 1
    CHECK_THROWS_AS((void)omt::offline_graph(std::vector<double>{0.1, 1.5}, gammas, ok, 0.2),
                    std::invalid_argument);
}

TEST_CASE("backward-allocating family inflates the first index") {
    const omt::BackwardGraphFamily family{0.2, GammaSequence::inverse_square(), 2};
    // Level of H_1 inside {1}: alpha (gamma_1 + gamma_2) = 0.15198...; inside
    // {1,2} only alpha gamma_1 = 0.12158...
    const std::vector<double> p{0.13, 0.9};
    CHECK(family.evaluate({1}, omt::PValuePrefix{p}));
    CHECK_FALSE(family.evaluate({1, 2}, omt::PValuePrefix{p}));
    CHECK_FALSE(family.evaluate({2}, omt::PValuePrefix{p}));
    CHECK_FALSE(family.has_levels());
}
