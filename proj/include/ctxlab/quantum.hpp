// quantum.hpp
// Quantum states on qubit registers and the empirical models they induce
// under per-party measurement menus. Party 0 is the leftmost tensor factor
// (most significant bit of the amplitude index); outcome index 0 is "+", the
// +1 eigenvalue.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "model.hpp"

namespace ctxlab {

using Complex = std::complex<double>;
using DensityMatrix = Eigen::MatrixXcd;

struct QuantumState {
    int n = 0;                       // number of qubits
    Eigen::VectorXcd amplitudes;     // length 2^n

    void validate(double eps_norm = 1e-9) const;  // throws input_error
};

// A dichotomic local observable given by its +1 and -1 eigenvectors.
struct LocalObservable {
    Eigen::Vector2cd plus;
    Eigen::Vector2cd minus;
    std::string label;
};

// XOR of AND-monomials over boolean inputs q1..q_arity (1-based indices in
// each monomial; an empty monomial is the constant 1).
struct BooleanFunction {
    int arity = 0;
    std::vector<std::vector<int>> monomials;

    int eval(const std::vector<int>& bits) const;
    void validate() const;  // throws input_error
};

// cos t |0><0| + e^{-i f} sin t |0><1| + e^{i f} sin t |1><0| - cos t |1><1|,
// eigendecomposed.
LocalObservable observable_from_angles(double theta, double phi,
                                       const std::string& label);
LocalObservable pauli_observable(char which);  // 'X', 'Y', 'Z'
LocalObservable observable_from_basis(const Eigen::Vector2cd& plus,
                                      const Eigen::Vector2cd& minus,
                                      const std::string& label);

QuantumState ghz_state(int n);
QuantumState dicke_state(int n, int k);  // k zeros among n qubits
QuantumState w_state();                  // dicke_state(3, 2)
QuantumState bell_state(const std::string& which);  // phi+ phi- psi+ psi-
QuantumState balanced_state(const BooleanFunction& f);  // arity+1 qubits
QuantumState tensor(const QuantumState& a, const QuantumState& b);
QuantumState random_state(int n, std::uint64_t seed);

QuantumState apply_local_unitaries(const QuantumState& s,
                                   const std::vector<Eigen::Matrix2cd>& u);

// Density matrix of the kept qubits (0-based, strictly increasing).
DensityMatrix partial_trace(const QuantumState& s, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, int n,
                            const std::vector<int>& keep);

double purity(const DensityMatrix& rho);

// One menu of observables per party. Contexts are the menu-choice tuples in
// lexicographic order (party 0 most significant); each table row assigns
// |<section|state>|^2 to every section. Measurement labels are
// "<observable label><party+1>", disambiguated when that collides.
EmpiricalModel empirical_model(const QuantumState& s,
                               const std::vector<std::vector<LocalObservable>>& menus);

// Concatenated observable labels per context, in the same context order.
std::vector<std::string> context_menu_labels(
    const std::vector<std::vector<LocalObservable>>& menus);

}  // namespace ctxlab
