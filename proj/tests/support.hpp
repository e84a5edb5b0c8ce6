#pragma once

#include <random>

#include "qce/qce.hpp"

namespace qce::test {

inline CMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index d, double scale = 1.0)
{
    std::normal_distribution<double> g;
    CMatrix a(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            a(i, j) = cplx(g(rng), g(rng));
    return scale * (a + a.adjoint()) / 2.0;
}

inline StateVector random_state(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> g;
    CVector v(Eigen::Index(1) << n);
    for (auto& x : v)
        x = cplx(g(rng), g(rng));
    return StateVector(CVector(v / v.norm()));
}

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qce::test
