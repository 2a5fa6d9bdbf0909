#include "ctxlab/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "ctxlab/errors.hpp"

namespace ctxlab {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Bisection inverse of the binary entropy on [0, 1/2]; k outside [0, ln 2]
// is clamped.
double binary_entropy_inverse(double k) {
    if (k <= 0.0) return 0.0;
    if (k >= kLn2) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double h = shannon_entropy({mid, 1.0 - mid});
        if (h < k) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Eigen::MatrixXcd projection_of(const Eigen::VectorXcd& v) {
    return v * v.adjoint();
}

Eigen::VectorXcd top_unit_vector(const Eigen::MatrixXcd& p) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(p);
    return solver.eigenvectors().col(p.rows() - 1);
}

// Unitary that fixes e_fixed and acts Haar-randomly on its orthocomplement.
Eigen::MatrixXcd su_on_orthocomplement(int n, int fixed,
                                       std::mt19937_64& rng) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
    std::vector<int> rest;
    for (int j = 0; j < n; ++j) {
        if (j != fixed) rest.push_back(j);
    }
    Eigen::MatrixXcd h = haar_unitary(n - 1, rng);
    for (int a = 0; a < n - 1; ++a) {
        for (int b = 0; b < n - 1; ++b) {
            u(rest[a], rest[b]) = h(a, b);
        }
    }
    return u;
}

}  // namespace

double shannon_entropy(const std::vector<double>& p) {
    double acc = 0.0;
    for (double x : p) {
        const double y = clamp01(x);
        if (y > 1e-300) acc -= y * std::log(y);
    }
    return acc;
}

double renyi_entropy(const std::vector<double>& p, double q) {
    if (q < 0.0) throw input_error("Renyi order must be non-negative");
    if (std::abs(q - 1.0) < 1e-12) return shannon_entropy(p);
    if (std::abs(q) < 1e-12) {
        int count = 0;
        for (double x : p) {
            if (clamp01(x) > 1e-12) ++count;
        }
        return std::log(static_cast<double>(count));
    }
    double acc = 0.0;
    for (double x : p) acc += std::pow(clamp01(x), q);
    return std::log(acc) / (1.0 - q);
}

std::vector<double> context_distribution(const DensityMatrix& rho,
                                         const ProjectiveContext& ctx) {
    std::vector<double> out;
    out.reserve(ctx.size());
    for (const auto& p : ctx) {
        out.push_back(std::max(0.0, (rho * p).trace().real()));
    }
    return out;
}

double contextual_shannon(const DensityMatrix& rho,
                          const ProjectiveContext& ctx) {
    return shannon_entropy(context_distribution(rho, ctx));
}

double contextual_renyi(const DensityMatrix& rho, const ProjectiveContext& ctx,
                        double q) {
    return renyi_entropy(context_distribution(rho, ctx), q);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    std::vector<double> w;
    for (int i = 0; i < rho.rows(); ++i) {
        w.push_back(clamp01(solver.eigenvalues()[i]));
    }
    return shannon_entropy(w);
}

ProjectiveContext eigencontext(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    ProjectiveContext ctx;
    for (int i = 0; i < rho.rows(); ++i) {
        ctx.push_back(projection_of(solver.eigenvectors().col(i)));
    }
    return ctx;
}

bool schur_horn_check(const DensityMatrix& rho, const ProjectiveContext& ctx,
                      double slack) {
    std::vector<double> d = context_distribution(rho, ctx);
    std::sort(d.begin(), d.end(), std::greater<double>());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    std::vector<double> lam;
    for (int i = 0; i < rho.rows(); ++i) {
        lam.push_back(clamp01(solver.eigenvalues()[i]));
    }
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    double ds = 0.0, ls = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        ds += d[k];
        ls += k < lam.size() ? lam[k] : 0.0;
        if (ds > ls + slack) return false;
    }
    return true;
}

double solve_binary_entropy(double k) {
    if (k > kLn2 + 1e-12) {
        throw input_error("binary entropy value exceeds ln 2");
    }
    return binary_entropy_inverse(k);
}

Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) z(i, j) = gauss(rng);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) z(i, j) += Complex(0, gauss(rng));
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= a > 1e-300 ? d / a : Complex(1, 0);
    }
    return q;
}

ProjectiveContext random_maximal_context(int n, std::mt19937_64& rng) {
    Eigen::MatrixXcd u = haar_unitary(n, rng);
    ProjectiveContext ctx;
    for (int i = 0; i < n; ++i) ctx.push_back(projection_of(u.col(i)));
    return ctx;
}

EntropyOracle state_backed_oracle(const DensityMatrix& rho) {
    EntropyOracle oracle;
    oracle.n = static_cast<int>(rho.rows());
    oracle.query = [rho](const ProjectiveContext& ctx) {
        return contextual_shannon(rho, ctx);
    };
    oracle.minimizing_maximal = eigencontext(rho);
    return oracle;
}

ReconstructionOutcome reconstruct(const EntropyOracle& oracle,
                                  std::uint64_t seed) {
    const int n = oracle.n;
    ReconstructionOutcome out;
    auto query = [&](const ProjectiveContext& ctx) {
        ++out.queries;
        return oracle.query(ctx);
    };
    auto not_in_image = [&](const std::string& why) {
        out.kind = ReconstructionKind::NotInImage;
        out.reason = why;
        return out;
    };

    const ProjectiveContext& v = oracle.minimizing_maximal;
    const double vn = query(v);
    std::mt19937_64 rng(seed);

    Eigen::MatrixXcd basis(n, n);
    for (int i = 0; i < n; ++i) basis.col(i) = top_unit_vector(v[i]);

    if (n == 2) {
        if (vn > kLn2 + 1e-9) {
            return not_in_image("binary entropy above ln 2");
        }
        const double p = binary_entropy_inverse(vn);
        out.kind = ReconstructionKind::Pair;
        out.rho = p * v[0] + (1.0 - p) * v[1];
        out.rho_alt = (1.0 - p) * v[0] + p * v[1];
        return out;
    }

    if (vn < 1e-9) {
        // Pure state: it must be one of the context's rays; rotating the
        // orthocomplement of each candidate keeps the entropy at zero only
        // for the actual one.
        std::vector<int> hits;
        for (int i = 0; i < n; ++i) {
            Eigen::MatrixXcd u = su_on_orthocomplement(n, i, rng);
            Eigen::MatrixXcd ub = basis * u;
            ProjectiveContext ctx;
            for (int j = 0; j < n; ++j) ctx.push_back(projection_of(ub.col(j)));
            if (query(ctx) < 1e-6) hits.push_back(i);
        }
        if (hits.size() != 1) return not_in_image("pure branch ambiguous");
        out.kind = ReconstructionKind::Unique;
        out.rho = v[hits[0]];
        return out;
    }

    // Mixed: binary queries give min(lambda_i, 1 - lambda_i) per ray.
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
    std::vector<double> ps;
    for (int i = 0; i < n; ++i) {
        const double k = query({v[i], eye - v[i]});
        if (k > kLn2 + 1e-9) {
            return not_in_image("binary entropy above ln 2");
        }
        ps.push_back(binary_entropy_inverse(k));
    }
    double s = 0.0;
    for (double p : ps) s += p;
    const double tol_s = 1e-7;
    std::vector<double> lam;
    if (s > 1.0 + tol_s) return not_in_image("sum exceeds one");
    if (std::abs(s - 1.0) <= tol_s) {
        lam = ps;
    } else {
        const double target = s / 2.0;
        std::vector<int> flippable;
        for (int i = 0; i < n; ++i) {
            if (std::abs(ps[i] - target) <= 1e-7) flippable.push_back(i);
        }
        if (flippable.empty()) return not_in_image("no flippable entry");
        if (flippable.size() == 1) {
            lam = ps;
            lam[flippable[0]] = 1.0 - ps[flippable[0]];
        } else {
            double rest_sum = 0.0;
            for (int i = 0; i < n; ++i) {
                if (i != flippable[0] && i != flippable[1]) rest_sum += ps[i];
            }
            if (flippable.size() != 2 || rest_sum > tol_s) {
                return not_in_image("ambiguous case with no valid resolution");
            }
            // Two candidates share the flip locus; probing a context that
            // keeps P_{j1} but scrambles the rest separates them.
            const int j1 = flippable[0], j2 = flippable[1];
            const double p = ps[j1];
            Eigen::MatrixXcd u = su_on_orthocomplement(n, j1, rng);
            Eigen::MatrixXcd ub = basis * u;
            std::vector<double> qs;
            for (int i = 0; i < n; ++i) {
                Eigen::MatrixXcd pi = projection_of(ub.col(i));
                const double k = query({pi, eye - pi});
                if (k > kLn2 + 1e-9) {
                    return not_in_image("rotated binary entropy above ln 2");
                }
                qs.push_back(binary_entropy_inverse(k));
            }
            double s2 = 0.0;
            for (double x : qs) s2 += x;
            std::vector<double> delta;
            if (std::abs(s2 - 1.0) <= tol_s) {
                delta = qs;
            } else {
                const double t2 = s2 / 2.0;
                std::vector<int> j2nd;
                for (int i = 0; i < n; ++i) {
                    if (std::abs(qs[i] - t2) <= 1e-7) j2nd.push_back(i);
                }
                if (j2nd.size() != 1) {
                    return not_in_image("rotated probe still ambiguous");
                }
                delta = qs;
                delta[j2nd[0]] = 1.0 - qs[j2nd[0]];
            }
            lam = ps;
            if (std::abs(delta[j1] - p) <= 1e-5) {
                lam[j1] = p;
                lam[j2] = 1.0 - p;
            } else if (std::abs(delta[j1] - (1.0 - p)) <= 1e-5) {
                lam[j1] = 1.0 - p;
                lam[j2] = p;
            } else {
                return not_in_image("rotated probe inconsistent");
            }
        }
    }

    DensityMatrix rho = DensityMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) rho += lam[i] * v[i];

    // Replay random contexts against the oracle before accepting the state.
    std::mt19937_64 replay_rng(seed + 999);
    for (int t = 0; t < 50; ++t) {
        ProjectiveContext ctx = random_maximal_context(n, replay_rng);
        if (std::abs(query(ctx) - contextual_shannon(rho, ctx)) > 1e-6) {
            return not_in_image("replay mismatch");
        }
    }
    out.kind = ReconstructionKind::Unique;
    out.rho = std::move(rho);
    return out;
}

SubadditivityCounterexample subadditivity_counterexample(int n1, int n2) {
    if (n1 < 2 || n2 < 2) throw input_error("both factors must be at least 2");
    const int n = n1 * n2;
    if (n % 2 != 0 || n < 6) {
        throw input_error("construction needs an even product of at least 6");
    }
    SubadditivityCounterexample out;
    const double rn = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::VectorXd u1 = Eigen::VectorXd::Constant(n, rn);
    Eigen::VectorXd un(n);
    for (int i = 0; i < n; ++i) un[i] = i < n / 2 ? rn : -rn;
    Eigen::VectorXd un2 = Eigen::VectorXd::Zero(n);
    un2[0] = -0.5;
    un2[1] = 0.5;
    un2[n - 2] = -0.5;
    un2[n - 1] = 0.5;
    Eigen::VectorXd unn2 = Eigen::VectorXd::Zero(n);
    unn2[0] = 0.5;
    unn2[1] = -0.5;
    unn2[n - 2] = -0.5;
    unn2[n - 1] = 0.5;

    std::vector<double> pa(n), pb(n);
    for (int i = 0; i < n; ++i) {
        pa[i] = 0.5 * (u1[i] * u1[i] + un[i] * un[i]);
        pb[i] = 0.25 * (u1[i] * u1[i] + un[i] * un[i] + un2[i] * un2[i] +
                        unn2[i] * unn2[i]);
    }
    out.a = shannon_entropy(pa);
    out.b = shannon_entropy(pb);
    out.columns = {u1, un, un2, unn2};

    out.rho = DensityMatrix::Zero(n, n);
    out.rho(0, 0) = 0.5;
    out.rho(n - 1, n - 1) = 0.5;
    out.rho_product = DensityMatrix::Zero(n, n);
    for (int pos : {0, n2 - 1, n - n2, n - 1}) {
        out.rho_product(pos, pos) = 0.25;
    }
    return out;
}

ViolationSample random_violation_4d(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) g(i, j) = gauss(rng);
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) g(i, j) += Complex(0, gauss(rng));
    }
    DensityMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    DensityMatrix rho1 = trace_out_second(rho, 2, 2);
    DensityMatrix rho2 = trace_out_first(rho, 2, 2);
    DensityMatrix prod = kron(rho1, rho2);
    Eigen::MatrixXcd u = haar_unitary(4, rng);
    std::vector<double> da(4), db(4);
    const DensityMatrix ra = u * rho * u.adjoint();
    const DensityMatrix rb = u * prod * u.adjoint();
    for (int i = 0; i < 4; ++i) {
        da[i] = ra(i, i).real();
        db[i] = rb(i, i).real();
    }
    ViolationSample out;
    out.a = shannon_entropy(da);
    out.b = shannon_entropy(db);
    return out;
}

DensityMatrix trace_out_second(const DensityMatrix& rho, int n1, int n2) {
    DensityMatrix out = DensityMatrix::Zero(n1, n1);
    for (int a = 0; a < n1; ++a) {
        for (int b = 0; b < n1; ++b) {
            Complex acc(0, 0);
            for (int j = 0; j < n2; ++j) acc += rho(a * n2 + j, b * n2 + j);
            out(a, b) = acc;
        }
    }
    return out;
}

DensityMatrix trace_out_first(const DensityMatrix& rho, int n1, int n2) {
    DensityMatrix out = DensityMatrix::Zero(n2, n2);
    for (int i = 0; i < n2; ++i) {
        for (int j = 0; j < n2; ++j) {
            Complex acc(0, 0);
            for (int a = 0; a < n1; ++a) acc += rho(a * n2 + i, a * n2 + j);
            out(i, j) = acc;
        }
    }
    return out;
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
    DensityMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

}  // namespace ctxlab
