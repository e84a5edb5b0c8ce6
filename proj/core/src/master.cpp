#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "qce/evolution.hpp"

namespace qce {

void BathSpec::validate() const
{
    if (!(lambda >= 0.0) || !(beta > 0.0) || !(I0 > 0.0))
        throw std::invalid_argument("bath needs lambda >= 0, beta > 0, I0 > 0");
    if (C.dim() == 0 || !C.is_hermitian(1e-12))
        throw std::invalid_argument("bath coupling operator must be Hermitian");
}

Operator default_bath_coupling(int n)
{
    const Eigen::Index d = Eigen::Index(1) << n;
    CMatrix c = CMatrix::Zero(d, d);
    for (int j = 1; j <= n; ++j)
        c += 0.5 * (spin_matrix(j, Axis::x, n) + spin_matrix(j, Axis::z, n));
    return Operator(std::move(c));
}

double bath_weight(double e, double beta, double I0)
{
    if (e == 0.0)
        return 0.0;
    const double x = beta * e;
    if (x > 700.0)
        return 0.0;
    // zeta(E) = I0 E^2 sign(E); N(E) = 1/(e^{beta E} - 1)
    return I0 * e * std::abs(e) / std::expm1(x);
}

Operator build_R(const Operator& h, const BathSpec& bath)
{
    bath.validate();
    if (h.dim() != bath.C.dim())
        throw std::invalid_argument("bath coupling/Hamiltonian dimension mismatch");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix());
    const CMatrix& v = es.eigenvectors();
    const auto& e = es.eigenvalues();
    CMatrix r = v.adjoint() * bath.C.matrix() * v;
    const double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
    for (Eigen::Index k = 0; k < r.rows(); ++k)
        for (Eigen::Index m = 0; m < r.cols(); ++m) {
            double de = e(k) - e(m);
            if (std::abs(de) <= 1e-12 * scale)
                de = 0.0;
            r(k, m) *= bath_weight(de, bath.beta, bath.I0);
        }
    return Operator(CMatrix(v * r * v.adjoint()));
}

CMatrix master_rhs(const CMatrix& h, const CMatrix& rho, const CMatrix& c, const CMatrix& r, double lambda)
{
    const cplx mi(0.0, -1.0);
    CMatrix out = mi * (h * rho - rho * h);
    if (lambda != 0.0) {
        const CMatrix rrho = r * rho;
        const CMatrix k = c * rrho - rrho * c;
        out -= lambda * (k + k.adjoint());
    }
    return out;
}

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return k;
}

CMatrix unvec(const CVector& v, Eigen::Index d) { return Eigen::Map<const CMatrix>(v.data(), d, d); }

CVector vec(const CMatrix& m) { return Eigen::Map<const CVector>(m.data(), m.size()); }

}  // namespace

CMatrix liouvillian(const CMatrix& h, const CMatrix& c, const CMatrix& r, double lambda)
{
    const Eigen::Index d = h.rows();
    const CMatrix id = CMatrix::Identity(d, d);
    const cplx mi(0.0, -1.0);
    CMatrix l = mi * (kron(id, h) - kron(h.transpose(), id));
    if (lambda != 0.0) {
        const CMatrix rd = r.adjoint();
        l -= lambda * (kron(id, c * r) - kron(c.transpose(), r) + kron((rd * c).transpose(), id) -
                       kron(r.conjugate(), c));
    }
    return l;
}

DensityMatrix propagate_master(const DensityMatrix& rho0, const DrivenHamiltonian& h, const BathSpec& bath,
                               double t0, double t1, const PropagationPlan& plan, const RhoObserver& observer,
                               int samples)
{
    bath.validate();
    if (h.dim() != rho0.dim())
        throw std::invalid_argument("density matrix/Hamiltonian dimension mismatch");
    if (!(t1 > t0))
        throw std::invalid_argument("propagate_master needs t1 > t0");
    const Eigen::Index d = rho0.dim();
    const CMatrix& c = bath.C.matrix();
    const CMatrix r = build_R(Operator(h.static_part()), bath).matrix();

    if (h.is_static()) {
        const CMatrix l = liouvillian(h.static_part(), c, r, bath.lambda);
        const int pieces = std::max(1, samples + 1);
        const double dt = (t1 - t0) / pieces;
        const CMatrix e = (l * dt).exp();
        CVector v = vec(rho0.matrix());
        for (int i = 1; i <= pieces; ++i) {
            v = e * v;
            if (observer)
                observer(t0 + i * dt, unvec(v, d));
        }
        return DensityMatrix(unvec(v, d));
    }

    const double rate = h.row_sum_bound() + bath.lambda * max_row_sum(c) * max_row_sum(r);
    const StepGrid g = make_step_grid(t1 - t0, rate, plan);
    const long every = samples > 0 ? std::max(1L, g.count / (samples + 1)) : g.count;
    CMatrix rho = rho0.matrix();
    auto f = [&](double t, const CMatrix& x) { return master_rhs(h.at(t), x, c, r, bath.lambda); };
    for (long i = 0; i < g.count; ++i) {
        const double t = t0 + static_cast<double>(i) * g.dt;
        const CMatrix k1 = f(t, rho);
        const CMatrix k2 = f(t + g.dt / 2, rho + (g.dt / 2) * k1);
        const CMatrix k3 = f(t + g.dt / 2, rho + (g.dt / 2) * k2);
        const CMatrix k4 = f(t + g.dt, rho + g.dt * k3);
        rho += (g.dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
        if (observer && ((i + 1) % every == 0 || i + 1 == g.count))
            observer(t + g.dt, rho);
    }
    return DensityMatrix(std::move(rho));
}

DensityMatrix gibbs_state(const Operator& h, double beta)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix());
    const auto& e = es.eigenvalues();
    const double emin = e.minCoeff();
    CVector w(e.size());
    for (Eigen::Index i = 0; i < e.size(); ++i)
        w(i) = std::exp(-beta * (e(i) - emin));
    w /= w.sum();
    return DensityMatrix(CMatrix(es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint()));
}

}  // namespace qce
