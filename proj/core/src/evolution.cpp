#include "qce/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace qce {

DrivenHamiltonian::DrivenHamiltonian(CMatrix h0) : h0_(std::move(h0)) {}

DrivenHamiltonian::DrivenHamiltonian(const MachineModel& m, const std::set<std::string>& active)
{
    const Eigen::Index d = Eigen::Index(1) << m.n_qubits;
    h0_ = CMatrix::Zero(d, d);
    for (const auto& t : m.terms)
        if (t.group.empty() || active.count(t.group))
            add(t, m.n_qubits);
}

void DrivenHamiltonian::add(const Term& t, int n)
{
    const Eigen::Index d = Eigen::Index(1) << n;
    if (h0_.size() == 0)
        h0_ = CMatrix::Zero(d, d);
    if (h0_.rows() != d)
        throw std::invalid_argument("term dimension does not match the Hamiltonian");
    if (!t.time_dependent()) {
        h0_ += t.matrix(n, 0.0);
        return;
    }
    for (auto& dr : drives_) {
        if (dr.f == t.frequency && dr.p == t.phase) {
            dr.c += t.cos_part(n);
            dr.s += t.sin_part(n);
            return;
        }
    }
    drives_.push_back({t.cos_part(n), t.sin_part(n), t.frequency, t.phase});
}

CMatrix DrivenHamiltonian::at(double t) const
{
    CMatrix h = h0_;
    for (const auto& dr : drives_) {
        const double a = dr.f * t + dr.p;
        h += std::cos(a) * dr.c + std::sin(a) * dr.s;
    }
    return h;
}

double max_row_sum(const CMatrix& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

double DrivenHamiltonian::row_sum_bound() const
{
    double r = max_row_sum(h0_);
    for (const auto& dr : drives_)
        r += max_row_sum(dr.c) + max_row_sum(dr.s);
    return r;
}

StepGrid make_step_grid(double span, double rate, const PropagationPlan& plan)
{
    if (!(span > 0.0))
        throw std::invalid_argument("propagation interval must be positive");
    if (!(plan.max_phase > 0.0))
        throw std::invalid_argument("plan max_phase must be positive");
    double limit = rate > 0.0 ? plan.max_phase / rate : span;
    double step = limit;
    if (plan.step > 0.0) {
        if (plan.step * rate > plan.max_phase * (1 + 1e-12))
            throw std::invalid_argument("step " + std::to_string(plan.step) + " violates step*max_row_sum <= " +
                                        std::to_string(plan.max_phase) + " (max_row_sum " +
                                        std::to_string(rate) + ")");
        step = plan.step;
    }
    StepGrid g;
    g.count = std::max(1L, static_cast<long>(std::ceil(span / step - 1e-9)));
    g.dt = span / static_cast<double>(g.count);
    return g;
}

CMatrix propagator_static(const CMatrix& h, double t)
{
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("propagator_static needs a Hermitian Hamiltonian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const auto& v = es.eigenvectors();
    CVector ph(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < ph.size(); ++i)
        ph(i) = std::polar(1.0, -es.eigenvalues()(i) * t);
    return v * ph.asDiagonal() * v.adjoint();
}

Operator propagator_static(const Operator& h, double t) { return Operator(propagator_static(h.matrix(), t)); }

StateVector propagate_static(const StateVector& s, const Operator& h, double t)
{
    return apply(propagator_static(h, t), s);
}

CMatrix propagator_timedep(const DrivenHamiltonian& h, double t0, double t1, const PropagationPlan& plan)
{
    if (!(t1 > t0))
        throw std::invalid_argument("propagator_timedep needs t1 > t0");
    if (h.is_static())
        return propagator_static(h.static_part(), t1 - t0);
    const StepGrid g = make_step_grid(t1 - t0, h.row_sum_bound(), plan);
    CMatrix u = CMatrix::Identity(h.dim(), h.dim());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.dim());
    CVector ph(h.dim());
    for (long i = 0; i < g.count; ++i) {
        es.compute(h.at(t0 + (static_cast<double>(i) + 0.5) * g.dt));
        for (Eigen::Index k = 0; k < ph.size(); ++k)
            ph(k) = std::polar(1.0, -es.eigenvalues()(k) * g.dt);
        u = es.eigenvectors() * (ph.asDiagonal() * (es.eigenvectors().adjoint() * u));
    }
    return u;
}

StateVector propagate_timedep(const StateVector& s, const DrivenHamiltonian& h, double t0, double t1,
                              const PropagationPlan& plan)
{
    if (h.dim() != s.dim())
        throw std::invalid_argument("state/Hamiltonian dimension mismatch");
    if (h.is_static())
        return StateVector(CVector(propagator_static(h.static_part(), t1 - t0) * s.amplitudes()));
    const StepGrid g = make_step_grid(t1 - t0, h.row_sum_bound(), plan);
    CVector v = s.amplitudes();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.dim());
    CVector ph(h.dim());
    for (long i = 0; i < g.count; ++i) {
        es.compute(h.at(t0 + (static_cast<double>(i) + 0.5) * g.dt));
        for (Eigen::Index k = 0; k < ph.size(); ++k)
            ph(k) = std::polar(1.0, -es.eigenvalues()(k) * g.dt);
        v = es.eigenvectors() * (ph.asDiagonal() * (es.eigenvectors().adjoint() * v));
    }
    return StateVector(std::move(v));
}

StateVector propagate_timedep(const StateVector& s, const MachineModel& m, double t0, double t1,
                              const PropagationPlan& plan, const std::set<std::string>& active)
{
    if (m.n_qubits != s.n_qubits())
        throw std::invalid_argument("machine/state qubit count mismatch");
    return propagate_timedep(s, DrivenHamiltonian(m, active), t0, t1, plan);
}

double analytic_hard_pulse(double omega, double hx, double g, double t)
{
    const double a = omega / 2;
    const double hg = hx * g;
    const double lam = std::sqrt(a * a + hg * hg);
    const double num = 2 * hg * (a + lam);
    const double den = (a + lam) * (a + lam) + hg * hg;
    if (den == 0.0)
        return 0.0;
    const double s = std::sin(lam * t / 2);
    return (num * num) / (den * den) * s * s;
}

}  // namespace qce
