#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace qce;

namespace {

BathSpec bath(int n, double lambda, double beta = 100.0)
{
    BathSpec b;
    b.lambda = lambda;
    b.beta = beta;
    b.C = default_bath_coupling(n);
    return b;
}

CMatrix random_rho(std::mt19937_64& rng, int n)
{
    const auto s1 = test::random_state(rng, n), s2 = test::random_state(rng, n);
    return 0.7 * DensityMatrix::pure(s1).matrix() + 0.3 * DensityMatrix::pure(s2).matrix();
}

}  // namespace

TEST(BathWeight, Limits)
{
    EXPECT_EQ(bath_weight(0.0, 100.0, 1.0), 0.0);
    // detailed balance: w(E) - w(-E) = -I0 E^2
    const double e = 0.3, beta = 2.0;
    EXPECT_NEAR(bath_weight(e, beta, 1.0) - bath_weight(-e, beta, 1.0), -e * e, 1e-12);
}

TEST(BuildR, ZeroCouplingGivesZero)
{
    BathSpec b = bath(2, 1e-3);
    b.C = Operator(CMatrix::Zero(4, 4));
    EXPECT_EQ(test::max_abs(build_R(assemble(chloroform2(), 0.0), b).matrix()), 0.0);
}

TEST(BuildR, SingleSpinByHand)
{
    // eigenvalues -w/4 on |0>, +w/4 on |1>
    const double w = 1.0, beta = 3.0;
    const Operator h(-(w / 2) * spin_matrix(1, Axis::z, 1));
    BathSpec b;
    b.lambda = 1.0;
    b.beta = beta;
    b.C = spin_operator(1, Axis::x, 1);
    const CMatrix r = build_R(h, b).matrix();
    // diagonal of C vanishes; off-diagonals pick up the transition weight
    const double e10 = -(w / 4) - (w / 4);  // E_0 - E_1
    EXPECT_NEAR(std::abs(r(0, 0)), 0.0, 1e-15);
    EXPECT_NEAR(r(0, 1).real(), 0.5 * bath_weight(e10, beta, 1.0), 1e-14);
    EXPECT_NEAR(r(1, 0).real(), 0.5 * bath_weight(-e10, beta, 1.0), 1e-14);
}

TEST(MasterRhs, TraceFreeAndHermitian)
{
    std::mt19937_64 rng(21);
    const auto m = chloroform2();
    const auto h = assemble(m, 0.0);
    const auto b = bath(2, 0.1, 5.0);
    const CMatrix r = build_R(h, b).matrix();
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix rho = random_rho(rng, 2);
        const CMatrix d = master_rhs(h.matrix(), rho, b.C.matrix(), r, b.lambda);
        EXPECT_LT(std::abs(d.trace()), 1e-14);
        EXPECT_LT(test::max_abs(d - d.adjoint()), 1e-14);
    }
}

TEST(MasterRhs, LiouvillianAgrees)
{
    std::mt19937_64 rng(22);
    const CMatrix h = test::random_hermitian(rng, 4);
    const auto b = bath(2, 0.05);
    const CMatrix r = build_R(Operator(h), b).matrix();
    const CMatrix rho = random_rho(rng, 2);
    const CMatrix d = master_rhs(h, rho, b.C.matrix(), r, b.lambda);
    const CVector v = liouvillian(h, b.C.matrix(), r, b.lambda) * rho.reshaped();
    EXPECT_LT(test::max_abs(d.reshaped() - v), 1e-13);
}

TEST(Master, ZeroCouplingMatchesSchrodinger)
{
    auto m = chloroform2();
    m.terms.push_back(sinusoidal_drive(1, 0.05, Axis::y, 1.0, 0.0));
    std::mt19937_64 rng(5);
    const auto psi = test::random_state(rng, 2);
    PropagationPlan plan;
    plan.step = 0.0025;
    const auto rho = propagate_master(DensityMatrix::pure(psi), DrivenHamiltonian(m), bath(2, 0.0), 0.0, 40.0, plan);
    const auto s = propagate_timedep(psi, m, 0.0, 40.0, plan);
    EXPECT_LT(test::max_abs(rho.matrix() - DensityMatrix::pure(s).matrix()), 1e-6);
}

TEST(Master, TracePreservedPerStep)
{
    auto m = chloroform2();
    m.terms.push_back(sinusoidal_drive(2, 0.0125, Axis::y, 0.25, 0.0));
    const auto b = bath(2, 0.01, 10.0);
    PropagationPlan plan;
    plan.step = 0.01;
    double worst = 0.0;
    propagate_master(DensityMatrix::pure(uniform_state(2)), DrivenHamiltonian(m), b, 0.0, 50.0, plan,
                     [&](double, const CMatrix& rho) { worst = std::max(worst, std::abs(rho.trace() - 1.0)); },
                     200);
    EXPECT_LT(worst, 1e-12);
}

TEST(Master, RelaxesToGibbsState)
{
    const auto m = chloroform2();
    const auto h = assemble(m, 0.0);
    const double beta = 2.0;
    const auto b = bath(2, 0.05, beta);
    PropagationPlan plan;
    const auto rho =
        propagate_master(DensityMatrix::pure(uniform_state(2)), DrivenHamiltonian(m), b, 0.0, 20000.0, plan);
    EXPECT_TRUE(rho.is_hermitian());
    EXPECT_LT(test::max_abs(rho.matrix() - gibbs_state(h, beta).matrix()), 1e-3);
}

TEST(Master, StrongerCouplingDecaysFaster)
{
    const auto m = chloroform2();
    PropagationPlan plan;
    auto coherence = [&](double lambda) {
        const auto rho = propagate_master(DensityMatrix::pure(uniform_state(2)), DrivenHamiltonian(m),
                                          bath(2, lambda), 0.0, 500.0, plan);
        return std::abs(rho.matrix()(0, 1));
    };
    EXPECT_LT(coherence(1e-3), coherence(1e-5));
}

TEST(Master, RejectsNegativeCoupling)
{
    EXPECT_THROW(bath(2, -1.0).validate(), std::invalid_argument);
}
