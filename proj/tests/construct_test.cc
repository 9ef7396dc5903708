// Copyright 2026 The graphsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphsym/construct.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "graphsym/errors.h"
#include "graphsym/symmetry.h"
#include "test_util.h"

using namespace graphsym;
using graphsym::testing::expect_states_near;
using graphsym::testing::signed_kets;

namespace {

const double kInv2 = 1.0 / std::numbers::sqrt2;
const double kInv6 = 1.0 / std::sqrt(6.0);
const double kInv8 = 1.0 / std::sqrt(8.0);

StateVector complete_gamma3() {
    return signed_kets(3, kInv6, {"+210", "+021", "+102", "-120", "-201", "-012"});
}

}  // namespace

// ---- CZ graph states ----

TEST(CzGraphState, PathOnThreeVertices) {
    StateVector got = cz_graph_state(UndirectedGraph(3, {{1, 2}, {2, 3}}));
    StateVector want =
        signed_kets(2, kInv8, {"+000", "+001", "+010", "-011", "+100", "+101", "-110", "+111"});
    expect_states_near(got, want, 1e-12);
}

TEST(CzGraphState, SingleEdgePlusIsolatedVertex) {
    StateVector got = cz_graph_state(UndirectedGraph(3, {{1, 2}}));
    StateVector want =
        signed_kets(2, kInv8, {"+000", "+001", "+010", "+011", "+100", "+101", "-110", "-111"});
    expect_states_near(got, want, 1e-12);
}

TEST(CzGraphState, EdgelessIsUniform) {
    StateVector got = cz_graph_state(UndirectedGraph(2, {}));
    for (const auto &a : got.amplitudes()) {
        EXPECT_NEAR(a.real(), 0.5, 1e-15);
        EXPECT_EQ(a.imag(), 0.0);
    }
}

TEST(CzGraphState, EdgeOrderIrrelevant) {
    std::mt19937_64 rng(7);
    for (const auto &g : enumerate_undirected(4)) {
        auto order = g.edges();
        std::shuffle(order.begin(), order.end(), rng);
        EXPECT_TRUE(equal_exact(cz_graph_state(g), cz_graph_state(g, order), 1e-15));
    }
}

TEST(CzGraphState, EdgeOrderMustCoverEdges) {
    UndirectedGraph g(3, {{1, 2}, {2, 3}});
    EXPECT_THROW(cz_graph_state(g, {{1, 2}}), DomainError);
    EXPECT_THROW(cz_graph_state(g, {{1, 2}, {1, 3}}), DomainError);
}

TEST(CzGraphState, FullSupportAndPositiveZeroAmplitude) {
    for (int n = 1; n <= 4; n++) {
        for (const auto &g : enumerate_undirected(n)) {
            StateVector s = cz_graph_state(g);
            const double mag = std::pow(2.0, -n / 2.0);
            for (const auto &a : s.amplitudes()) {
                EXPECT_NEAR(std::abs(a), mag, 1e-12);
            }
            EXPECT_NEAR(s[0].real(), mag, 1e-12);
        }
    }
}

// ---- recursive antisymmetric state ----

TEST(AntisymmetricState, TwoQudits) {
    expect_states_near(antisymmetric_state(2, 2), signed_kets(2, kInv2, {"+01", "-10"}), 1e-15);
    expect_states_near(antisymmetric_state(2, 4), signed_kets(4, kInv2, {"+01", "-10"}), 1e-15);
}

TEST(AntisymmetricState, ThreeQutrits) {
    StateVector a3 = antisymmetric_state(3, 3);
    expect_states_near(a3, complete_gamma3(), 1e-12);
    EXPECT_TRUE(is_antisymmetric(a3));
}

TEST(AntisymmetricState, FourQuditsIsNegatedCombinatorialSum) {
    StateVector a4 = antisymmetric_state(4, 4);
    StateVector comb = oracle_antisymmetric_state(4, 4);
    expect_states_near(a4, apply_global_phase(comb, -1.0), 1e-12);
    EXPECT_FALSE(equal_exact(a4, comb, 1e-9));
    EXPECT_TRUE(equal_up_to_global_phase(a4, comb, 1e-9));
}

TEST(AntisymmetricState, Normalized) {
    for (int n = 2; n <= 5; n++) {
        EXPECT_NEAR(antisymmetric_state(n, n).norm(), 1.0, 1e-12) << n;
    }
}

TEST(AntisymmetricState, Errors) {
    EXPECT_THROW(antisymmetric_state(3, 2), DomainError);
    EXPECT_THROW(antisymmetric_state(1, 2), DomainError);
}

// ---- combinatorial oracle and alternator ----

TEST(OracleState, TwoQubitsHandEvaluated) {
    // k = 0 gives |1 0>, k = 1 gives |0 1>, both with the identity's sign.
    expect_states_near(oracle_antisymmetric_state(2, 2), signed_kets(2, kInv2, {"+01", "+10"}), 1e-15);
}

TEST(OracleState, ThreeQutritsMatchesRecursion) {
    expect_states_near(oracle_antisymmetric_state(3, 3), complete_gamma3(), 1e-12);
}

TEST(OracleState, FiveQuditsSupportsAlternator) {
    StateVector s = oracle_antisymmetric_state(5, 5);
    const double mag = 1.0 / std::sqrt(120.0);
    int support = 0;
    for (const auto &a : s.amplitudes()) {
        if (std::abs(a) > 1e-12) {
            support++;
            EXPECT_NEAR(std::abs(a), mag, 1e-12);
        }
    }
    EXPECT_EQ(support, 120);
    EXPECT_NEAR(fidelity(s, alternator_state(5, 5)), 1.0, 1e-12);
}

TEST(OracleState, RequiresMatchingLevels) {
    EXPECT_THROW(oracle_antisymmetric_state(3, 4), DomainError);
}

TEST(AlternatorState, Examples) {
    expect_states_near(alternator_state(2, 2), signed_kets(2, kInv2, {"+01", "-10"}), 1e-15);
    StateVector alt3 = alternator_state(3, 3);
    EXPECT_TRUE(equal_up_to_global_phase(alt3, complete_gamma3(), 1e-12));
    EXPECT_TRUE(is_antisymmetric(alt3));

    StateVector wide = alternator_state(3, 4);
    int support = 0;
    for (std::size_t i = 0; i < wide.size(); i++) {
        if (std::abs(wide[i]) > 0) {
            support++;
            for (int digit : wide.label_of(i).digits) {
                EXPECT_LT(digit, 3);
            }
        }
    }
    EXPECT_EQ(support, 6);
    EXPECT_THROW(alternator_state(4, 3), DomainError);
}

// ---- GR graph states ----

TEST(GrGraphState, TwoVerticesDownwardEdge) {
    auto r = gr_graph_state(OrientedGraph(2, {{2, 1}}), 3);
    expect_states_near(r.state, signed_kets(3, kInv2, {"+01", "-10"}), 1e-12);
    EXPECT_TRUE(r.warnings.empty());
}

TEST(GrGraphState, TwoVerticesUpwardEdge) {
    auto r = gr_graph_state(OrientedGraph(2, {{1, 2}}), 2);
    expect_states_near(r.state, signed_kets(2, kInv2, {"+10", "-11"}), 1e-12);
}

TEST(GrGraphState, EdgelessPairIsZeroKet) {
    auto r = gr_graph_state(OrientedGraph(2, {}), 2);
    EXPECT_EQ(r.state[0], Amplitude(1.0));
    EXPECT_NEAR(r.state.norm(), 1.0, 1e-15);
}

TEST(GrGraphState, IsolatedVertexAppendsZero) {
    auto r = gr_graph_state(OrientedGraph(3, {{2, 1}}), 3);
    expect_states_near(r.state, signed_kets(3, kInv2, {"+010", "-100"}), 1e-12);
}

TEST(GrGraphState, OneEdgeGammaThree) {
    auto r = gr_graph_state(OrientedGraph(3, {{2, 1}, {3, 1}}), 3);
    StateVector want = signed_kets(3, kInv6, {"+210", "+011", "+112", "-100", "-201", "-002"});
    expect_states_near(r.state, want, 1e-9);
    EXPECT_EQ(classify(r.state), SymmetryClass::none());
}

TEST(GrGraphState, CompleteGammaThree) {
    auto r = gr_graph_state(OrientedGraph(3, {{2, 1}, {3, 1}, {3, 2}}), 3);
    expect_states_near(r.state, complete_gamma3(), 1e-9);
    EXPECT_EQ(classify(r.state), SymmetryClass::fully_antisymmetric());
}

TEST(GrGraphState, CompleteHierarchicalRecoversRecursion) {
    for (int n = 3; n <= 5; n++) {
        auto r = gr_graph_state(hierarchical_complete_graph(n), n);
        EXPECT_TRUE(equal_exact(r.state, antisymmetric_state(n, n), 1e-12)) << n;
    }
}

TEST(GrGraphState, TraceReplaysToState) {
    std::vector<OrientedGraph> graphs{
        OrientedGraph(3, {{2, 1}, {3, 1}}),
        OrientedGraph(4, {{1, 2}, {3, 2}, {4, 1}, {2, 4}}),
        hierarchical_complete_graph(4),
        OrientedGraph(4, {{3, 1}, {4, 3}}),
    };
    for (const auto &g : graphs) {
        auto r = gr_graph_state(g, 4);
        EXPECT_TRUE(equal_exact(r.trace.replay(), r.state, 1e-12));
        EXPECT_EQ(r.trace.num_qudits, g.num_vertices());
        EXPECT_EQ(r.trace.levels, 4);
    }
}

TEST(GrGraphState, EdgeInsertionOrderIrrelevant) {
    OrientedGraph a(4, {{2, 1}, {3, 1}, {4, 2}, {4, 3}});
    OrientedGraph b(4, {{4, 3}, {4, 2}, {3, 1}, {2, 1}});
    EXPECT_TRUE(equal_exact(gr_graph_state(a, 4).state, gr_graph_state(b, 4).state, 1e-15));
}

TEST(GrGraphState, WarnsWhenLevelsBelowCompleteSize) {
    auto r = gr_graph_state(hierarchical_complete_graph(4), 3);
    EXPECT_FALSE(r.warnings.empty());
    EXPECT_NEAR(r.state.norm(), 1.0, 1e-12);
    EXPECT_TRUE(gr_graph_state(hierarchical_complete_graph(4), 4).warnings.empty());
}

TEST(GrGraphState, Normalized) {
    OrientedGraph g(5, {{1, 2}, {3, 2}, {4, 1}, {5, 4}, {5, 2}});
    EXPECT_NEAR(gr_graph_state(g, 5).state.norm(), 1.0, 1e-12);
}

TEST(GrGraphState, RejectsTooFewLevels) {
    EXPECT_THROW(gr_graph_state(OrientedGraph(2, {{2, 1}}), 1), DomainError);
}

TEST(ConstructionTrace, GateNames) {
    EXPECT_EQ(to_string(GateKind::kShift), "X");
    EXPECT_EQ(to_string(GateKind::kHadamard), "H");
    EXPECT_EQ(to_string(GateKind::kGr), "GR");
    EXPECT_EQ(to_string(GateKind::kPhase), "PHASE");
}
