#include "ctxlab/witness.hpp"

#include <algorithm>
#include <cmath>

#include "ctxlab/errors.hpp"
#include "ctxlab/hierarchy.hpp"

namespace ctxlab {

namespace {

Eigen::Vector2cd orthogonal_2(const Eigen::Vector2cd& v) {
    Eigen::Vector2cd out;
    out << -std::conj(v[1]), std::conj(v[0]);
    return out;
}

// Largest-eigenvalue eigenvector of a Hermitian matrix.
Eigen::VectorXcd top_eigenvector(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho);
    return solver.eigenvectors().col(rho.rows() - 1);
}

}  // namespace

EntanglementType PnDecomposition::type() const {
    return pairs.empty() ? EntanglementType::FullyProduct
                         : EntanglementType::PairwiseEntangled;
}

QuantumState PnDecomposition::assemble(int n) const {
    QuantumState s;
    s.n = n;
    const std::int64_t dim = std::int64_t(1) << n;
    s.amplitudes.resize(dim);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        Complex val(1.0, 0.0);
        for (const auto& [i, v] : singles) {
            val *= v[(idx >> (n - 1 - i)) & 1];
        }
        for (const auto& [i, j, v4] : pairs) {
            const int bi = static_cast<int>((idx >> (n - 1 - i)) & 1);
            const int bj = static_cast<int>((idx >> (n - 1 - j)) & 1);
            val *= v4[bi * 2 + bj];
        }
        s.amplitudes[idx] = val;
    }
    return s;
}

EntanglementType WitnessResult::type() const {
    return in_pn ? components.type() : EntanglementType::GenuinelyMultipartite;
}

std::optional<PnDecomposition> test_P_n(const QuantumState& s, double tol) {
    const int n = s.n;
    PnDecomposition d;
    if (n == 1) {
        d.singles[0] = s.amplitudes.head<2>();
        return d;
    }
    enum Kind { Pure, Mixed };
    std::vector<Kind> kind(n);
    std::vector<DensityMatrix> rho1(n);
    for (int i = 0; i < n; ++i) {
        rho1[i] = partial_trace(s, {i});
        const double pu = purity(rho1[i]);
        if (std::abs(pu - 1.0) < tol) {
            kind[i] = Pure;
        } else if ((rho1[i] - 0.5 * DensityMatrix::Identity(2, 2))
                       .cwiseAbs()
                       .maxCoeff() < tol) {
            kind[i] = Mixed;
        } else {
            return std::nullopt;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (kind[i] == Pure) d.singles[i] = top_eigenvector(rho1[i]);
    }
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (kind[i] != Mixed || used[i]) continue;
        bool found = false;
        for (int j = i + 1; j < n && !found; ++j) {
            if (kind[j] != Mixed || used[j]) continue;
            DensityMatrix rho2 = partial_trace(s, {i, j});
            if (std::abs(purity(rho2) - 1.0) < tol) {
                d.pairs.emplace_back(i, j, Eigen::Vector4cd(top_eigenvector(rho2)));
                used[i] = used[j] = true;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return d;
}

SchmidtDecomposition schmidt_2q(const Eigen::Vector4cd& amp) {
    Eigen::Matrix2cd m;
    m << amp[0], amp[1], amp[2], amp[3];
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(
        m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SchmidtDecomposition out;
    out.alpha = svd.singularValues()[0];
    out.beta = svd.singularValues()[1];
    out.basis1 = svd.matrixU();
    // m = U S V^adj, so amp = sum_k S_k U[:,k] (x) conj(V)[:,k].
    out.basis2 = svd.matrixV().conjugate();
    return out;
}

HardyObservables hardy_observables(double alpha, double beta,
                                   const Eigen::Matrix2cd& basis1,
                                   const Eigen::Matrix2cd& basis2,
                                   double tol) {
    if (beta < tol) throw input_error("hardy observables need an entangled state");
    if (alpha - beta < tol) {
        throw input_error(
            "hardy observables are undefined for maximally entangled states");
    }
    const double sa = std::sqrt(alpha), sb = std::sqrt(beta);
    const double sa3 = std::pow(alpha, 1.5), sb3 = std::pow(beta, 1.5);
    const double nu = std::sqrt(alpha + beta);
    const double nd = std::sqrt(alpha * alpha * alpha + beta * beta * beta);
    HardyObservables out;
    LocalObservable* us[2] = {&out.u1, &out.u2};
    LocalObservable* ds[2] = {&out.d1, &out.d2};
    const Eigen::Matrix2cd* bases[2] = {&basis1, &basis2};
    for (int p = 0; p < 2; ++p) {
        const Eigen::Vector2cd plus_v = bases[p]->col(0);
        const Eigen::Vector2cd minus_v = bases[p]->col(1);
        const Eigen::Vector2cd u = (sb * plus_v + sa * minus_v) / nu;
        const Eigen::Vector2cd dvec = (sb3 * plus_v - sa3 * minus_v) / nd;
        *us[p] = observable_from_basis(u, orthogonal_2(u), "u");
        *ds[p] = observable_from_basis(dvec, orthogonal_2(dvec), "d");
    }
    return out;
}

LocalObservable going_up_B(Complex x, Complex y) {
    Eigen::Vector2cd bp, bm;
    bp << std::conj(y), std::conj(x);
    bm << x, -y;
    bp.normalize();
    bm.normalize();
    return observable_from_basis(bp, bm, "B");
}

LastQubitSplit decompose_last(const QuantumState& s) {
    const std::int64_t half = s.amplitudes.size() / 2;
    LastQubitSplit out;
    out.psi.n = s.n - 1;
    out.phi.n = s.n - 1;
    out.psi.amplitudes.resize(half);
    out.phi.amplitudes.resize(half);
    for (std::int64_t i = 0; i < half; ++i) {
        out.psi.amplitudes[i] = s.amplitudes[2 * i];      // last bit 0
        out.phi.amplitudes[i] = s.amplitudes[2 * i + 1];  // last bit 1
    }
    out.alpha = out.psi.amplitudes.norm();
    out.beta = out.phi.amplitudes.norm();
    if (out.alpha > 0) out.psi.amplitudes /= out.alpha;
    if (out.beta > 0) out.phi.amplitudes /= out.beta;
    return out;
}

QuantumState tau(double a, const QuantumState& psi, const QuantumState& phi) {
    QuantumState out;
    out.n = psi.n;
    out.amplitudes =
        a * psi.amplitudes + std::sqrt(1.0 - a * a) * phi.amplitudes;
    out.amplitudes /= out.amplitudes.norm();
    return out;
}

namespace {

struct MenusOrFactors {
    bool in_pn = false;
    PnDecomposition factors;
    std::vector<std::vector<LocalObservable>> menus;
};

std::vector<std::vector<LocalObservable>> require_menus(MenusOrFactors&& sub) {
    if (sub.in_pn) {
        throw verification_error(
            "sub-state unexpectedly factored during witness construction");
    }
    return std::move(sub.menus);
}

MenusOrFactors witness_menus(const QuantumState& s, double tol) {
    const int n = s.n;
    MenusOrFactors out;
    if (n == 1) {
        out.in_pn = true;
        out.factors.singles[0] = s.amplitudes.head<2>();
        return out;
    }
    if (n == 2) {
        SchmidtDecomposition sd = schmidt_2q(Eigen::Vector4cd(s.amplitudes));
        if (sd.beta < tol) {
            out.in_pn = true;
            out.factors.singles[0] = sd.basis1.col(0);
            out.factors.singles[1] = sd.basis2.col(0);
            return out;
        }
        if (sd.alpha - sd.beta < tol) {
            out.in_pn = true;
            out.factors.pairs.emplace_back(0, 1,
                                           Eigen::Vector4cd(s.amplitudes));
            return out;
        }
        // The Hardy construction expects alpha |+>|+> - beta |->|->; fold the
        // relative sign into the second basis.
        Eigen::Matrix2cd b2 = sd.basis2;
        b2.col(1) = -b2.col(1);
        HardyObservables h = hardy_observables(sd.alpha, sd.beta, sd.basis1, b2, tol);
        out.menus = {{h.u1, h.d1}, {h.u2, h.d2}};
        return out;
    }

    if (auto factors = test_P_n(s, tol)) {
        out.in_pn = true;
        out.factors = std::move(*factors);
        return out;
    }

    const LocalObservable z = pauli_observable('Z');
    LastQubitSplit split = decompose_last(s);
    if (split.alpha < tol) {
        out.menus = require_menus(witness_menus(split.phi, tol));
        out.menus.push_back({z});
        return out;
    }
    if (split.beta < tol) {
        out.menus = require_menus(witness_menus(split.psi, tol));
        out.menus.push_back({z});
        return out;
    }
    if (!test_P_n(split.psi, tol)) {
        out.menus = require_menus(witness_menus(split.psi, tol));
        out.menus.push_back({z});
        return out;
    }
    if (!test_P_n(split.phi, tol)) {
        out.menus = require_menus(witness_menus(split.phi, tol));
        out.menus.push_back({z});
        return out;
    }
    for (int i = 1; i < 20; ++i) {
        const double a = i / 20.0;
        QuantumState t = tau(a, split.psi, split.phi);
        if (!test_P_n(t, tol)) {
            out.menus = require_menus(witness_menus(t, tol));
            const Complex x = split.alpha / a;
            const Complex y = split.beta / std::sqrt(1.0 - a * a);
            out.menus.push_back({going_up_B(x, y)});
            return out;
        }
    }

    // psi and phi both factor and agree except on one qubit t: the state is a
    // product of a Hardy pair on (t, last) with single-qubit factors.
    auto psi_factors = test_P_n(split.psi, tol);
    for (const auto& [t_idx, v] : psi_factors->singles) {
        DensityMatrix rho2 = partial_trace(s, {t_idx, n - 1});
        if (std::abs(purity(rho2) - 1.0) >= 1e-7) continue;
        Eigen::Vector4cd xi(top_eigenvector(rho2));
        SchmidtDecomposition sd = schmidt_2q(xi);
        if (sd.beta < tol || sd.alpha - sd.beta < tol) continue;
        Eigen::Matrix2cd b2 = sd.basis2;
        b2.col(1) = -b2.col(1);
        HardyObservables h = hardy_observables(sd.alpha, sd.beta, sd.basis1, b2, tol);
        out.menus.clear();
        for (int p = 0; p < n; ++p) {
            if (p == t_idx) {
                out.menus.push_back({h.u1, h.d1});
            } else if (p == n - 1) {
                out.menus.push_back({h.u2, h.d2});
            } else {
                out.menus.push_back({z});
            }
        }
        return out;
    }
    throw verification_error("witness construction found no Hardy pair");
}

}  // namespace

WitnessResult hardy_witness(const QuantumState& s, double tol, bool verify) {
    MenusOrFactors res = witness_menus(s, tol);
    WitnessResult out;
    out.in_pn = res.in_pn;
    if (res.in_pn) {
        out.components = std::move(res.factors);
        if (verify) {
            QuantumState rebuilt = out.components.assemble(s.n);
            const double overlap =
                std::abs(rebuilt.amplitudes.dot(s.amplitudes));
            out.verified = overlap > 1.0 - 1e-9;
        }
        return out;
    }
    out.menus = std::move(res.menus);
    if (verify) {
        EmpiricalModel model = empirical_model(s, out.menus);
        const auto poss = decide_possibilistic_extendability(model);
        out.verified = poss.logically_contextual();
        if (!out.verified) {
            throw verification_error(
                "constructed witness menus are not logically contextual");
        }
    }
    return out;
}

}  // namespace ctxlab
