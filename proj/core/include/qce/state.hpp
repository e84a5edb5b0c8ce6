#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qce {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Axis { x, y, z };

char axis_letter(Axis a);
Axis axis_from_letter(char c);

// Basis index b has bit (j-1) set when qubit j is |1> (spin down).
inline bool qubit_bit(std::size_t b, int j) { return (b >> (j - 1)) & 1u; }

class Operator {
public:
    Operator() = default;
    explicit Operator(CMatrix m);

    static Operator identity(int n_qubits);

    int n_qubits() const { return n_; }
    Eigen::Index dim() const { return m_.rows(); }
    const CMatrix& matrix() const { return m_; }

    bool is_hermitian(double tol = 1e-12) const;
    bool is_unitary(double tol = 1e-12) const;
    Operator adjoint() const;

    Operator operator*(const Operator& o) const;
    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator operator*(cplx s) const;

private:
    int n_ = 0;
    CMatrix m_;
};

class StateVector {
public:
    StateVector() = default;
    explicit StateVector(int n_qubits);  // |0...0>
    explicit StateVector(CVector amplitudes);

    static StateVector basis(int n_qubits, std::size_t index);

    int n_qubits() const { return n_; }
    Eigen::Index dim() const { return a_.size(); }
    const CVector& amplitudes() const { return a_; }
    cplx operator[](std::size_t i) const { return a_(static_cast<Eigen::Index>(i)); }
    double norm() const { return a_.norm(); }

private:
    int n_ = 0;
    CVector a_;
};

class DensityMatrix {
public:
    DensityMatrix() = default;
    explicit DensityMatrix(CMatrix rho);

    static DensityMatrix pure(const StateVector& s);

    int n_qubits() const { return n_; }
    Eigen::Index dim() const { return r_.rows(); }
    const CMatrix& matrix() const { return r_; }
    cplx trace() const { return r_.trace(); }
    bool is_hermitian(double tol = 1e-10) const;

private:
    int n_ = 0;
    CMatrix r_;
};

struct MeasurementRecord {
    std::vector<double> q;
    std::vector<double> probabilities;
    std::vector<std::array<double, 3>> spin;  // <S^x>, <S^y>, <S^z> per qubit

    std::size_t argmax() const;
};

int qubits_for_dim(Eigen::Index dim);

Operator spin_operator(int j, Axis axis, int n_qubits);
CMatrix spin_matrix(int j, Axis axis, int n_qubits);

StateVector apply(const Operator& op, const StateVector& s);

MeasurementRecord measure(const StateVector& s);
MeasurementRecord measure(const DensityMatrix& rho);

cplx inner(const StateVector& a, const StateVector& b);

// max |a - e^{i theta} b| over entries, theta chosen from the trace overlap
double distance_up_to_phase(const CMatrix& a, const CMatrix& b);
double distance_up_to_phase(const StateVector& a, const StateVector& b);

// Uniform superposition and the sign-flipped database states.
StateVector uniform_state(int n_qubits);
StateVector marked_state(int n_qubits, std::size_t n);

}  // namespace qce
