#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qce/hamiltonian.hpp"
#include "qce/state.hpp"

namespace qce {

struct PropagationPlan {
    double step = 0.0;        // 0 picks the largest step allowed by max_phase
    double max_phase = 0.01;  // bound on step * max_row_sum(H)
};

// H(t) = H0 + sum_i [cos(f_i t + p_i) C_i + sin(f_i t + p_i) S_i]
class DrivenHamiltonian {
public:
    DrivenHamiltonian() = default;
    explicit DrivenHamiltonian(CMatrix h0);
    DrivenHamiltonian(const MachineModel& m, const std::set<std::string>& active = {});

    void add(const Term& t, int n_qubits);

    CMatrix at(double t) const;
    const CMatrix& static_part() const { return h0_; }
    bool is_static() const { return drives_.empty(); }
    Eigen::Index dim() const { return h0_.rows(); }
    // upper bound of max_row_sum(|H(t)|) over all t
    double row_sum_bound() const;

private:
    struct Drive {
        CMatrix c, s;
        double f = 0.0, p = 0.0;
    };
    CMatrix h0_;
    std::vector<Drive> drives_;
};

double max_row_sum(const CMatrix& m);

// Number of steps and step length covering [t0, t1]; throws when an explicit
// plan step violates the phase bound.
struct StepGrid {
    long count = 0;
    double dt = 0.0;
};
StepGrid make_step_grid(double span, double rate, const PropagationPlan& plan);

CMatrix propagator_static(const CMatrix& h, double t);
Operator propagator_static(const Operator& h, double t);
StateVector propagate_static(const StateVector& s, const Operator& h, double t);

CMatrix propagator_timedep(const DrivenHamiltonian& h, double t0, double t1, const PropagationPlan& plan);
StateVector propagate_timedep(const StateVector& s, const DrivenHamiltonian& h, double t0, double t1,
                              const PropagationPlan& plan);
StateVector propagate_timedep(const StateVector& s, const MachineModel& m, double t0, double t1,
                              const PropagationPlan& plan, const std::set<std::string>& active = {});

// Q_j after a static x field pulse on a single spin starting in |0>.
double analytic_hard_pulse(double omega, double hx, double g, double t);

struct BathSpec {
    double lambda = 0.0;
    double beta = 100.0;
    double I0 = 1.0;
    Operator C;

    void validate() const;
};

// sum_j (S_j^x + S_j^z) / 2
Operator default_bath_coupling(int n_qubits);
// zeta(E) N_beta(E) with the E = 0 limit set to 0
double bath_weight(double e, double beta, double I0);
Operator build_R(const Operator& h, const BathSpec& bath);

CMatrix master_rhs(const CMatrix& h, const CMatrix& rho, const CMatrix& c, const CMatrix& r, double lambda);
// superoperator acting on column-major vec(rho)
CMatrix liouvillian(const CMatrix& h, const CMatrix& c, const CMatrix& r, double lambda);

using RhoObserver = std::function<void(double t, const CMatrix& rho)>;

// R is built from the drive-free part of h. Static h uses the exact
// exponential of the Liouvillian; driven h uses fourth-order Runge-Kutta.
// The observer, when set, is called at `samples` evenly spaced interior
// points and at t1.
DensityMatrix propagate_master(const DensityMatrix& rho, const DrivenHamiltonian& h, const BathSpec& bath,
                               double t0, double t1, const PropagationPlan& plan,
                               const RhoObserver& observer = {}, int samples = 0);

DensityMatrix gibbs_state(const Operator& h, double beta);

}  // namespace qce
