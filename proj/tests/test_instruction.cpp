#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace qce;
using std::numbers::pi;

namespace {

CMatrix ideal_unitary(const QuantumProgram& p, int n)
{
    Executor ex(MachineModel{"ideal", n, {}, {}, {}, Frame::laboratory, 0.0, {}}, std::nullopt, {}, full_library());
    return ex.unitary(p, Mode::ideal).matrix();
}

StateVector run_ideal(const QuantumProgram& p, const StateVector& s)
{
    return StateVector(CVector(ideal_unitary(p, s.n_qubits()) * s.amplitudes()));
}

}  // namespace

TEST(Gate, XRotationMatrix)
{
    const double c = std::sqrt(0.5);
    const cplx i(0, 1);
    CMatrix want(4, 4);
    // exp(i pi/2 S^x) on qubit 1 (the low bit)
    want << c, i * c, 0, 0, i * c, c, 0, 0, 0, 0, c, i * c, 0, 0, i * c, c;
    EXPECT_LT(test::max_abs(ideal_gate_matrix(X(1), 2).matrix() - want), 1e-15);
}

TEST(Gate, YRotationOnSecondQubit)
{
    const double c = std::sqrt(0.5);
    CMatrix want(4, 4);
    want << c, 0, c, 0, 0, c, 0, c, -c, 0, c, 0, 0, -c, 0, c;
    EXPECT_LT(test::max_abs(ideal_gate_matrix(Y(2), 2).matrix() - want), 1e-15);
}

TEST(Gate, ExchangeAtPiSwapsWithPhase)
{
    const cplx i(0, 1);
    CMatrix want = CMatrix::Zero(4, 4);
    want(0, 0) = want(3, 3) = 1;
    want(1, 2) = want(2, 1) = i;
    EXPECT_LT(test::max_abs(ideal_gate_matrix(I_xy(1, 2, pi), 2).matrix() - want), 1e-15);
}

TEST(Gate, PhaseGateIsDiagonal)
{
    const CMatrix u = ideal_gate_matrix(I_phase(1, 2, pi), 2).matrix();
    const cplx a = std::polar(1.0, -pi / 4), b = std::polar(1.0, pi / 4);
    EXPECT_LT(test::max_abs(u - CMatrix(CVector((CVector(4) << a, b, b, a).finished()).asDiagonal())), 1e-15);
}

TEST(Gate, AllGatesUnitary)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ang(-2 * pi, 2 * pi);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = ang(rng);
        for (const Gate& g : {rot(Axis(rng() % 3), 1 + int(rng() % 3), a), I_phase(1, 3, a), I_xy(2, 3, a),
                              rot(Axis::z, {1, 2}, {1, -1}, a)})
            EXPECT_TRUE(ideal_gate_matrix(g, 3).is_unitary(1e-12));
    }
    for (const auto& name : sequence_names()) {
        const auto p = sequence_library(name);
        const int n = std::max(2, max_qubit(flatten(p, full_library())));
        EXPECT_TRUE(Operator(ideal_unitary(p, n)).is_unitary(1e-12)) << name;
    }
}

TEST(Gate, InversePairsCancel)
{
    for (int j = 1; j <= 2; ++j)
        for (auto make : {X, Y}) {
            const Gate g = make(j, false), gi = make(j, true);
            EXPECT_TRUE(is_inverse_pair(g, gi));
            const CMatrix p = ideal_gate_matrix(g, 2).matrix() * ideal_gate_matrix(gi, 2).matrix();
            EXPECT_LT(test::max_abs(p - CMatrix::Identity(4, 4)), 1e-12);
        }
    EXPECT_FALSE(is_inverse_pair(X(1), Y(1, true)));
    EXPECT_FALSE(is_inverse_pair(X(1), X(2, true)));
}

TEST(Gate, DisjointGatesCommuteIdeally)
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ang(-pi, pi);
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix a = ideal_gate_matrix(I_phase(1, 2, ang(rng)), 4).matrix() *
                          ideal_gate_matrix(rot(Axis::x, 1, ang(rng)), 4).matrix();
        const CMatrix b = ideal_gate_matrix(I_xy(3, 4, ang(rng)), 4).matrix() *
                          ideal_gate_matrix(rot(Axis::y, 4, ang(rng)), 4).matrix();
        EXPECT_LT(test::max_abs(a * b - b * a), 1e-12);
    }
}

TEST(Program, RemapAndFlatten)
{
    const auto p = remap(cnot(1, 2), {{1, 3}, {2, 4}}, "cnot-3-4");
    EXPECT_EQ(max_qubit(p), 4);
    EXPECT_THROW(remap(cnot(1, 2), {{1, 3}}, "partial"), std::invalid_argument);

    ProgramLibrary lib{{"a", QuantumProgram{"a", {Call{"b"}}}}, {"b", QuantumProgram{"b", {Call{"a"}}}}};
    EXPECT_THROW(flatten(QuantumProgram{"top", {Call{"a"}}}, lib), std::invalid_argument);
    EXPECT_THROW(flatten(QuantumProgram{"top", {Call{"missing"}}}, lib), std::invalid_argument);

    lib["b"] = QuantumProgram{"b", {X(1), Y(2)}};
    const auto flat = flatten(QuantumProgram{"top", {Call{"a"}, Call{"b"}}}, lib);
    EXPECT_EQ(flat.size(), 4u);
}

TEST(Library, ProductNotationRunsRightmostFirst)
{
    const auto p = from_product("X1 -Y2 I(pi)", "p");
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(std::get<Gate>(p.body[0]).kind, GateKind::zz_phase);
    EXPECT_EQ(std::get<Gate>(p.body[1]), Y(2, true));
    EXPECT_EQ(std::get<Gate>(p.body[2]), X(1));
}

TEST(Library, PreparationsGiveUniformState)
{
    for (const auto& p : {prepare_u(), prepare_u_alt()})
        EXPECT_LT(distance_up_to_phase(run_ideal(p, StateVector(2)), uniform_state(2)), 1e-12) << p.name;
}

TEST(Library, OracleMarksNeedle)
{
    for (int n = 0; n < 4; ++n)
        EXPECT_LT(distance_up_to_phase(run_ideal(oracle(n), uniform_state(2)), marked_state(2, n)), 1e-12);
}

TEST(Library, QueryVariantsAgree)
{
    const CMatrix g = ideal_unitary(grover_query(), 2);
    EXPECT_LT(distance_up_to_phase(g, ideal_unitary(grover_query_hat(), 2)), 1e-12);
    EXPECT_LT(distance_up_to_phase(g, ideal_unitary(grover_query_tilde(), 2)), 1e-12);
    EXPECT_LT(distance_up_to_phase(g, inversion_about_mean(2).matrix() * 1.0), 1e-12);
}

TEST(Library, SearchFindsEveryNeedle)
{
    for (int n = 0; n < 4; ++n) {
        const auto want = StateVector::basis(2, std::size_t(n));
        for (const auto& prep : {prepare_u(), prepare_u_alt()}) {
            QuantumProgram p = prep;
            p.then(grover_optimized(n));
            EXPECT_LT(distance_up_to_phase(run_ideal(p, StateVector(2)), want), 1e-12);
        }
        QuantumProgram full = oracle(n);
        full.then(grover_query());
        EXPECT_LT(distance_up_to_phase(run_ideal(full, uniform_state(2)), want), 1e-12);
    }
}

TEST(Library, CnotTruthTable)
{
    for (auto [s, t] : {std::pair{1, 2}, std::pair{2, 1}}) {
        const CMatrix u = ideal_unitary(cnot(s, t), 2);
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t out = qubit_bit(b, s) ? b ^ (std::size_t(1) << (t - 1)) : b;
            EXPECT_NEAR(std::abs(u(Eigen::Index(out), Eigen::Index(b))), 1.0, 1e-12) << s << t << b;
        }
    }
}

TEST(Library, CopiesMoveArbitraryQubit)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto one = test::random_state(rng, 1);
        const cplx a = one[0], b = one[1];
        CVector in = CVector::Zero(16), want = CVector::Zero(16);
        in(0) = a;
        in(1) = b;  // qubit 1
        want(0) = a;
        want(4) = b;  // qubit 3
        for (const auto& p : {copy_cnot(1, 3), copy_xy(1, 3)})
            EXPECT_LT(distance_up_to_phase(run_ideal(p, StateVector(in)), StateVector(want)), 1e-12) << p.name;
    }
}

TEST(Library, HardCompositesEqualTargetGate)
{
    const std::vector<std::pair<std::string, Gate>> cases{{"X1", X(1)}, {"-X1", X(1, true)}, {"X2", X(2)},
                                                          {"-X2", X(2, true)}, {"Y1", Y(1)}, {"-Y1", Y(1, true)},
                                                          {"Y2", Y(2)}, {"-Y2", Y(2, true)}};
    for (const auto& [name, g] : cases)
        EXPECT_LT(distance_up_to_phase(ideal_unitary(hard_composite(name), 2), ideal_gate_matrix(g, 2).matrix()),
                  1e-12)
            << name;
}

TEST(Library, FourQubitSearch)
{
    for (auto copy : {CopyKind::xy, CopyKind::cnot})
        for (int n = 0; n < 4; ++n) {
            const auto r = measure(run_ideal(grover4(copy, n), StateVector(4)));
            EXPECT_NEAR(r.q[0], 0.0, 1e-10);
            EXPECT_NEAR(r.q[1], 0.0, 1e-10);
            EXPECT_NEAR(r.q[2], double(n & 1), 1e-10);
            EXPECT_NEAR(r.q[3], double((n >> 1) & 1), 1e-10);
        }
}

TEST(Library, UnknownNamesRejected)
{
    EXPECT_THROW(sequence_library("U4"), std::invalid_argument);
    EXPECT_THROW(sequence_library("cnot-1-1"), std::invalid_argument);
    EXPECT_THROW(hard_composite("Z1"), std::invalid_argument);
    EXPECT_THROW(oracle(-1), std::invalid_argument);
}

TEST(Mode, NamesRoundTrip)
{
    EXPECT_EQ(mode_from_name(mode_name(Mode::physical)), Mode::physical);
    EXPECT_THROW(mode_from_name("quantum"), std::invalid_argument);
}
