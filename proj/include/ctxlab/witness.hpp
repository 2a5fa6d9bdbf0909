// witness.hpp
// Logical non-locality witness for n-qubit pure states: either the state
// factors into single qubits and entangled pairs, or the algorithm produces
// per-party measurement menus whose empirical model is logically contextual.

#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "quantum.hpp"

namespace ctxlab {

inline constexpr double kWitnessTol = 1e-6;

enum class EntanglementType { FullyProduct, PairwiseEntangled, GenuinelyMultipartite };

// A factorization into single-qubit states and two-qubit entangled pairs.
struct PnDecomposition {
    std::map<int, Eigen::Vector2cd> singles;                    // qubit -> state
    std::vector<std::tuple<int, int, Eigen::Vector4cd>> pairs;  // (i, j, state)

    EntanglementType type() const;
    QuantumState assemble(int n) const;
};

// amp = alpha |b1 col0>|b2 col0> + beta |b1 col1>|b2 col1>, alpha >= beta >= 0.
struct SchmidtDecomposition {
    double alpha = 0.0;
    double beta = 0.0;
    Eigen::Matrix2cd basis1;
    Eigen::Matrix2cd basis2;
};

struct HardyObservables {
    LocalObservable u1, d1;  // first party
    LocalObservable u2, d2;  // second party
};

struct WitnessResult {
    bool in_pn = false;
    PnDecomposition components;                        // when in_pn
    std::vector<std::vector<LocalObservable>> menus;   // when !in_pn
    bool verified = false;

    EntanglementType type() const;
};

// Factorization test: every single-qubit marginal must be pure or maximally
// mixed, and the maximally mixed ones must pair up into pure two-qubit
// marginals (first available partner). nullopt when the state fails either.
std::optional<PnDecomposition> test_P_n(const QuantumState& s,
                                        double tol = kWitnessTol);

SchmidtDecomposition schmidt_2q(const Eigen::Vector4cd& amp);

// Hardy-type menus for a two-qubit state written as
// alpha |+>|+> - beta |->|-> in the given bases (column 0 = "+").
// Requires 0 < beta and beta < alpha within tol; throws input_error.
HardyObservables hardy_observables(double alpha, double beta,
                                   const Eigen::Matrix2cd& basis1,
                                   const Eigen::Matrix2cd& basis2,
                                   double tol = kWitnessTol);

// Single observable used when joining a new qubit to a sub-witness.
LocalObservable going_up_B(Complex x, Complex y);

// Split over the last qubit: amp = alpha psi |0> + beta phi |1>.
struct LastQubitSplit {
    double alpha = 0.0;
    double beta = 0.0;
    QuantumState psi;
    QuantumState phi;
};
LastQubitSplit decompose_last(const QuantumState& s);

// Normalized a*psi + sqrt(1-a^2)*phi.
QuantumState tau(double a, const QuantumState& psi, const QuantumState& phi);

// Full pipeline. For states outside P_n the menus give every party one
// observable except two parties with two (n+2 in total); with verify set the
// induced empirical model is checked to be logically contextual.
WitnessResult hardy_witness(const QuantumState& s, double tol = kWitnessTol,
                            bool verify = true);

}  // namespace ctxlab
