#include "qce/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qce {

char axis_letter(Axis a)
{
    switch (a) {
    case Axis::x: return 'x';
    case Axis::y: return 'y';
    case Axis::z: return 'z';
    }
    return '?';
}

Axis axis_from_letter(char c)
{
    switch (c) {
    case 'x': case 'X': return Axis::x;
    case 'y': case 'Y': return Axis::y;
    case 'z': case 'Z': return Axis::z;
    }
    throw std::invalid_argument(std::string("unknown axis '") + c + "'");
}

int qubits_for_dim(Eigen::Index dim)
{
    if (dim < 2)
        throw std::invalid_argument("dimension must be a power of two >= 2");
    int n = 0;
    Eigen::Index d = dim;
    while (d > 1) {
        if (d & 1)
            throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
        d >>= 1;
        ++n;
    }
    return n;
}

Operator::Operator(CMatrix m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("operator matrix must be square");
    n_ = qubits_for_dim(m_.rows());
}

Operator Operator::identity(int n)
{
    Eigen::Index d = Eigen::Index(1) << n;
    return Operator(CMatrix::Identity(d, d));
}

bool Operator::is_hermitian(double tol) const
{
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_unitary(double tol) const
{
    CMatrix d = m_.adjoint() * m_ - CMatrix::Identity(dim(), dim());
    return d.cwiseAbs().maxCoeff() <= tol;
}

Operator Operator::adjoint() const { return Operator(m_.adjoint()); }

static void check_same(const Operator& a, const Operator& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("operator dimension mismatch");
}

Operator Operator::operator*(const Operator& o) const
{
    check_same(*this, o);
    return Operator(m_ * o.m_);
}

Operator Operator::operator+(const Operator& o) const
{
    check_same(*this, o);
    return Operator(m_ + o.m_);
}

Operator Operator::operator-(const Operator& o) const
{
    check_same(*this, o);
    return Operator(m_ - o.m_);
}

Operator Operator::operator*(cplx s) const { return Operator(m_ * s); }

StateVector::StateVector(int n) : n_(n)
{
    if (n < 1)
        throw std::invalid_argument("need at least one qubit");
    a_ = CVector::Zero(Eigen::Index(1) << n);
    a_(0) = 1.0;
}

StateVector::StateVector(CVector amplitudes) : a_(std::move(amplitudes))
{
    n_ = qubits_for_dim(a_.size());
}

StateVector StateVector::basis(int n, std::size_t index)
{
    if (index >= (std::size_t(1) << n))
        throw std::out_of_range("basis index out of range");
    CVector v = CVector::Zero(Eigen::Index(1) << n);
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
}

DensityMatrix::DensityMatrix(CMatrix rho) : r_(std::move(rho))
{
    if (r_.rows() != r_.cols())
        throw std::invalid_argument("density matrix must be square");
    n_ = qubits_for_dim(r_.rows());
}

DensityMatrix DensityMatrix::pure(const StateVector& s)
{
    return DensityMatrix(s.amplitudes() * s.amplitudes().adjoint());
}

bool DensityMatrix::is_hermitian(double tol) const
{
    return (r_ - r_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

std::size_t MeasurementRecord::argmax() const
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < probabilities.size(); ++i)
        if (probabilities[i] > probabilities[best])
            best = i;
    return best;
}

CMatrix spin_matrix(int j, Axis axis, int n)
{
    if (n < 1 || j < 1 || j > n)
        throw std::out_of_range("qubit index " + std::to_string(j) + " out of range for " +
                                std::to_string(n) + " qubits");
    const Eigen::Index d = Eigen::Index(1) << n;
    const std::size_t mask = std::size_t(1) << (j - 1);
    CMatrix m = CMatrix::Zero(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
        const bool down = static_cast<std::size_t>(b) & mask;
        const Eigen::Index f = static_cast<Eigen::Index>(static_cast<std::size_t>(b) ^ mask);
        switch (axis) {
        case Axis::z:
            m(b, b) = down ? -0.5 : 0.5;
            break;
        case Axis::x:
            m(f, b) = 0.5;
            break;
        case Axis::y:
            // S^y|up> = (i/2)|down>, S^y|down> = (-i/2)|up>
            m(f, b) = down ? cplx(0, -0.5) : cplx(0, 0.5);
            break;
        }
    }
    return m;
}

Operator spin_operator(int j, Axis axis, int n) { return Operator(spin_matrix(j, axis, n)); }

StateVector apply(const Operator& op, const StateVector& s)
{
    if (op.dim() != s.dim())
        throw std::invalid_argument("operator/state dimension mismatch");
    return StateVector(CVector(op.matrix() * s.amplitudes()));
}

static void fill_record(MeasurementRecord& r, int n, const CMatrix* rho, const CVector* psi)
{
    const Eigen::Index d = Eigen::Index(1) << n;
    r.probabilities.resize(static_cast<std::size_t>(d));
    for (Eigen::Index b = 0; b < d; ++b)
        r.probabilities[static_cast<std::size_t>(b)] =
            rho ? (*rho)(b, b).real() : std::norm((*psi)(b));
    r.q.assign(static_cast<std::size_t>(n), 0.0);
    r.spin.assign(static_cast<std::size_t>(n), {0.0, 0.0, 0.0});
    for (int j = 1; j <= n; ++j) {
        auto& s = r.spin[static_cast<std::size_t>(j - 1)];
        const std::size_t mask = std::size_t(1) << (j - 1);
        cplx minus(0.0, 0.0);  // <S^-> = <S^x> - i<S^y>
        double sz = 0.0;
        for (Eigen::Index b = 0; b < d; ++b) {
            const bool down = static_cast<std::size_t>(b) & mask;
            sz += (down ? -0.5 : 0.5) * r.probabilities[static_cast<std::size_t>(b)];
            if (!down) {
                // S^- maps |up> to |down>: <S^-> = sum conj(a_down) a_up = rho(up, down)
                const Eigen::Index f = static_cast<Eigen::Index>(static_cast<std::size_t>(b) | mask);
                minus += rho ? (*rho)(b, f) : std::conj((*psi)(f)) * (*psi)(b);
            }
        }
        s = {minus.real(), -minus.imag(), sz};
        r.q[static_cast<std::size_t>(j - 1)] = 0.5 - sz;
    }
}

MeasurementRecord measure(const StateVector& s)
{
    if (std::abs(s.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("state is not normalized (norm " + std::to_string(s.norm()) + ")");
    MeasurementRecord r;
    fill_record(r, s.n_qubits(), nullptr, &s.amplitudes());
    return r;
}

MeasurementRecord measure(const DensityMatrix& rho)
{
    if (std::abs(rho.trace() - 1.0) > 1e-8)
        throw std::invalid_argument("density matrix trace is not 1");
    MeasurementRecord r;
    fill_record(r, rho.n_qubits(), &rho.matrix(), nullptr);
    return r;
}

cplx inner(const StateVector& a, const StateVector& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("state dimension mismatch");
    return a.amplitudes().dot(b.amplitudes());
}

double distance_up_to_phase(const CMatrix& a, const CMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("shape mismatch");
    const cplx ov = (b.adjoint() * a).trace();
    const cplx ph = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx(1.0, 0.0);
    return (a - ph * b).cwiseAbs().maxCoeff();
}

double distance_up_to_phase(const StateVector& a, const StateVector& b)
{
    return distance_up_to_phase(CMatrix(a.amplitudes()), CMatrix(b.amplitudes()));
}

StateVector uniform_state(int n)
{
    const Eigen::Index d = Eigen::Index(1) << n;
    return StateVector(CVector(CVector::Constant(d, 1.0 / std::sqrt(double(d)))));
}

StateVector marked_state(int n, std::size_t k)
{
    CVector v = uniform_state(n).amplitudes();
    if (static_cast<Eigen::Index>(k) >= v.size())
        throw std::out_of_range("marked index out of range");
    v(static_cast<Eigen::Index>(k)) *= -1.0;
    return StateVector(std::move(v));
}

}  // namespace qce
