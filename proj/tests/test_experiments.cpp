#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "support.hpp"

using namespace qce;

namespace {

ExperimentConfig cfg(Mode mode, int samples = 20000, std::uint64_t seed = 1)
{
    ExperimentConfig c;
    c.mode = mode;
    c.samples = samples;
    c.seed = seed;
    return c;
}

}  // namespace

TEST(Sampling, NormalizedAndReferenceOverlapIsAlpha0)
{
    for (std::uint64_t i = 0; i < 500; ++i) {
        const auto s = sample_random_input(1, i, int(i % 4));
        EXPECT_NEAR(s.psi.norm(), 1.0, 1e-12);
        EXPECT_NEAR(s.x, s.alpha0, 1e-12);
        EXPECT_GE(s.alpha0, -1.0);
        EXPECT_LE(s.alpha0, 1.0);
    }
}

TEST(Sampling, DeterministicPerSeedAndIndex)
{
    const auto a = sample_random_input(42, 17, 0), b = sample_random_input(42, 17, 0);
    EXPECT_EQ(a.psi.amplitudes(), b.psi.amplitudes());
    EXPECT_NE(sample_random_input(42, 18, 0).alpha0, a.alpha0);
}

TEST(Sampling, Alpha0IsUniform)
{
    const int n = 20000;
    double mean = 0.0, high = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = sample_random_input(7, std::uint64_t(i), 0).x;
        mean += x;
        high += x * x > 0.9 ? 1.0 : 0.0;
    }
    EXPECT_LT(std::abs(mean / n), 0.02);
    EXPECT_NEAR(high / n, 1.0 - std::sqrt(0.9), 0.005);
}

TEST(Sampling, EdgeCoefficients)
{
    const auto exact = input_from_coefficients(1.0, {}, 2);
    EXPECT_LT(distance_up_to_phase(exact.psi, marked_state(2, 2)), 1e-15);
    const auto orth = input_from_coefficients(0.0, {cplx(1, 0), 0.0, 0.0}, 2);
    EXPECT_NEAR(orth.x, 0.0, 1e-15);
    EXPECT_THROW(input_from_coefficients(1.0, {}, 4), std::invalid_argument);
}

TEST(Scatter, BoundFormula)
{
    EXPECT_DOUBLE_EQ(stability_bound(1.0, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(stability_bound(0.99, 0.9), 1.0);
    EXPECT_NEAR(stability_bound(0.847, std::sqrt(0.9)), std::cos(std::acos(0.847) - std::acos(std::sqrt(0.9))),
                1e-15);
    EXPECT_LT(stability_bound(0.847, std::sqrt(0.9)), 0.98);
}

TEST(Scatter, IdealQueryReturnsOverlap)
{
    const auto res = run_stability_scatter(cfg(Mode::ideal, 2000));
    for (const auto& p : res.points)
        EXPECT_NEAR(p.y, std::abs(p.x), 1e-12);
    EXPECT_NEAR(res.exact_input_y, 1.0, 1e-12);
}

TEST(Scatter, PhysicalPointsRespectBound)
{
    for (int n = 0; n < 4; ++n) {
        const auto res = run_stability_scatter(cfg(Mode::physical, 5000), n);
        EXPECT_LE(res.max_y_high_x, res.high_x_bound + 1e-12) << n;
        EXPECT_LT(res.high_x_bound, 1.0) << n;
    }
}

TEST(Scatter, DeterministicAndSeedStable)
{
    const auto a = run_stability_scatter(cfg(Mode::physical));
    const auto b = run_stability_scatter(cfg(Mode::physical));
    EXPECT_EQ(scatter_csv(a), scatter_csv(b));
    const double f1 = double(a.good) / a.points.size();
    for (std::uint64_t seed : {2u, 99u, 12345u}) {
        const auto c = run_stability_scatter(cfg(Mode::physical, 20000, seed));
        EXPECT_NEAR(double(c.good) / c.points.size(), f1, 0.02) << seed;
    }
}

TEST(Tables, IdealRowsExact)
{
    for (int id : {1, 3}) {
        const auto t = run_table(id, cfg(Mode::ideal));
        ASSERT_FALSE(t.rows.empty());
        for (const auto& r : t.rows) {
            EXPECT_EQ(r.mode, Mode::ideal);
            EXPECT_TRUE(r.argmax_ok()) << r.run_id;
            EXPECT_NEAR(r.q[0], double(r.n & 1), 1e-10) << r.run_id;
            EXPECT_NEAR(r.q[1], double((r.n >> 1) & 1), 1e-10) << r.run_id;
        }
    }
    EXPECT_THROW(run_table(6), std::invalid_argument);
}

TEST(Tables, HardPulseRowsIdentifyNeedle)
{
    const auto t = run_table(3, cfg(Mode::physical));
    EXPECT_EQ(t.rows.size(), 8u);
    for (const auto& r : t.rows) {
        EXPECT_TRUE(r.argmax_ok()) << r.run_id;
        EXPECT_LE(r.published_deviation(), 0.01) << r.run_id;
    }
}

TEST(Tables, CsvSchema)
{
    const auto t = run_table(1, cfg(Mode::ideal));
    std::istringstream in(table_csv(t));
    std::string header, row;
    std::getline(in, header);
    EXPECT_EQ(header, "run_id,mode,n,Q_1,Q_2,published_Q_1,published_Q_2");
    std::getline(in, row);
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 6);
}

TEST(Grover4, IdealRowsExact)
{
    for (auto copy : {CopyKind::xy, CopyKind::cnot}) {
        const auto rep = run_grover4(copy, "rotating", cfg(Mode::ideal));
        ASSERT_EQ(rep.rows.size(), 4u);
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& r = rep.rows[i];
            EXPECT_NEAR(r.q[0], double(r.n & 1), 1e-10);
            EXPECT_NEAR(r.q[1], double((r.n >> 1) & 1), 1e-10);
            EXPECT_NEAR(rep.database[i][0], 0.0, 1e-10);
            EXPECT_NEAR(rep.database[i][1], 0.0, 1e-10);
        }
    }
    EXPECT_THROW(run_grover4(CopyKind::xy, "no-such-table", cfg(Mode::physical)), std::invalid_argument);
}

TEST(Dissipation, ZeroCouplingMatchesPureState)
{
    DissipationConfig c;
    c.lambda = 0.0;
    c.samples = 2;
    const auto res = run_dissipation(c);
    for (std::size_t j = 0; j < 2; ++j)
        EXPECT_NEAR(res.final_q[j], res.pure_q[j], 1e-6);
    EXPECT_FALSE(res.t.empty());
    EXPECT_EQ(res.t.size(), res.q.size());
    for (std::size_t i = 1; i < res.t.size(); ++i)
        EXPECT_GE(res.t[i], res.t[i - 1]);
}

TEST(Oracle, Deterministic)
{
    const auto a = run_oracle_check(5, 50), b = run_oracle_check(5, 50);
    EXPECT_EQ(oracle_csv(a), oracle_csv(b));
}
