// entropy.hpp
// Contextual entropy of quantum states over projective contexts, state
// reconstruction from an entropy oracle, and the subadditivity
// counterexample family.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quantum.hpp"

namespace ctxlab {

inline constexpr double kLn2 = 0.6931471805599453;

// A projective context: orthogonal projections summing to the identity
// (rank-1 for a maximal context).
using ProjectiveContext = std::vector<Eigen::MatrixXcd>;

double shannon_entropy(const std::vector<double>& p);
// q = 0: support size; q = 1: Shannon; otherwise log(sum p^q)/(1-q).
// Throws input_error for q < 0.
double renyi_entropy(const std::vector<double>& p, double q);

// (Tr rho P_i)_i, clamped at 0 from below.
std::vector<double> context_distribution(const DensityMatrix& rho,
                                         const ProjectiveContext& ctx);

double contextual_shannon(const DensityMatrix& rho,
                          const ProjectiveContext& ctx);
double contextual_renyi(const DensityMatrix& rho, const ProjectiveContext& ctx,
                        double q);

double von_neumann_entropy(const DensityMatrix& rho);

// The eigenbasis context: the maximal context minimizing contextual Shannon
// entropy (its value equals the von Neumann entropy).
ProjectiveContext eigencontext(const DensityMatrix& rho);

// Schur-Horn majorization: every descending prefix sum of the context
// distribution is bounded by the matching eigenvalue prefix sum.
bool schur_horn_check(const DensityMatrix& rho, const ProjectiveContext& ctx,
                      double slack = 1e-9);

// p in [0, 1/2] with binary entropy k (natural log); throws input_error when
// k exceeds ln 2 beyond 1e-12.
double solve_binary_entropy(double k);

Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng);
ProjectiveContext random_maximal_context(int n, std::mt19937_64& rng);

// An entropy oracle: answers contextual Shannon entropy queries about a
// hidden state and exposes one minimizing maximal context.
struct EntropyOracle {
    int n = 0;
    std::function<double(const ProjectiveContext&)> query;
    ProjectiveContext minimizing_maximal;
};

EntropyOracle state_backed_oracle(const DensityMatrix& rho);

enum class ReconstructionKind { Unique, Pair, NotInImage };

struct ReconstructionOutcome {
    ReconstructionKind kind = ReconstructionKind::NotInImage;
    DensityMatrix rho;      // Unique, or first of the Pair
    DensityMatrix rho_alt;  // second of the Pair
    std::string reason;     // NotInImage
    int queries = 0;
};

// Recover the state behind the oracle: unique for n >= 3 (an unordered pair
// for n = 2), or NotInImage when the answers are inconsistent with any state.
ReconstructionOutcome reconstruct(const EntropyOracle& oracle,
                                  std::uint64_t seed = 12345);

// rho = diag(1/2, 0, ..., 0, 1/2) on dimension n1*n2 (even, >= 6): the
// four-column context makes the contextual entropy of the marginal product
// exceed that bound, with a = log n at the top.
struct SubadditivityCounterexample {
    double a = 0.0;  // contextual entropy bound for rho
    double b = 0.0;  // contextual entropy of the marginal product
    std::vector<Eigen::VectorXd> columns;  // the four context vectors
    DensityMatrix rho;
    DensityMatrix rho_product;
};

SubadditivityCounterexample subadditivity_counterexample(int n1, int n2);

// One seeded 4-dimensional sample: a random two-qubit state, its marginal
// product, and both contextual entropies in a shared random maximal context.
struct ViolationSample {
    double a = 0.0;
    double b = 0.0;
    double gap() const { return a - b; }
};

ViolationSample random_violation_4d(std::uint64_t seed);

// Marginals over a bipartition of dimension n1*n2.
DensityMatrix trace_out_second(const DensityMatrix& rho, int n1, int n2);
DensityMatrix trace_out_first(const DensityMatrix& rho, int n1, int n2);
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace ctxlab
