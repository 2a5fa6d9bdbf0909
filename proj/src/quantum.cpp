#include "ctxlab/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "ctxlab/errors.hpp"

namespace ctxlab {

namespace {

std::int64_t dim_of(int n) { return std::int64_t(1) << n; }

int popcount64(std::uint64_t v) {
    int c = 0;
    while (v) {
        c += static_cast<int>(v & 1);
        v >>= 1;
    }
    return c;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Apply a 2x2 matrix to qubit p (0-based from the most significant bit).
Eigen::VectorXcd apply_single_qubit(const Eigen::VectorXcd& v, int n, int p,
                                    const Eigen::Matrix2cd& m) {
    Eigen::VectorXcd out(v.size());
    const std::int64_t bit = std::int64_t(1) << (n - 1 - p);
    for (std::int64_t i = 0; i < v.size(); ++i) {
        if (i & bit) continue;
        const Complex v0 = v[i], v1 = v[i | bit];
        out[i] = m(0, 0) * v0 + m(0, 1) * v1;
        out[i | bit] = m(1, 0) * v0 + m(1, 1) * v1;
    }
    return out;
}

}  // namespace

void QuantumState::validate(double eps_norm) const {
    if (n < 1 || n > 30) throw input_error("qubit count out of range");
    if (amplitudes.size() != dim_of(n)) {
        throw input_error("amplitude vector length is not 2^n");
    }
    if (std::abs(amplitudes.norm() - 1.0) > eps_norm) {
        throw input_error("state is not normalized");
    }
}

int BooleanFunction::eval(const std::vector<int>& bits) const {
    int acc = 0;
    for (const auto& mono : monomials) {
        int prod = 1;
        for (int v : mono) prod &= bits[v - 1];
        acc ^= prod;
    }
    return acc;
}

void BooleanFunction::validate() const {
    if (arity < 1) throw input_error("boolean function arity must be >= 1");
    for (const auto& mono : monomials) {
        for (int v : mono) {
            if (v < 1 || v > arity) {
                throw input_error("monomial variable out of range");
            }
        }
    }
}

LocalObservable observable_from_angles(double theta, double phi,
                                       const std::string& label) {
    Eigen::Matrix2cd m;
    const double ct = std::cos(theta), st = std::sin(theta);
    m(0, 0) = ct;
    m(0, 1) = std::exp(Complex(0, -phi)) * st;
    m(1, 0) = std::exp(Complex(0, phi)) * st;
    m(1, 1) = -ct;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(m);
    LocalObservable obs;
    obs.plus = solver.eigenvectors().col(1);   // ascending order: col 1 <-> +1
    obs.minus = solver.eigenvectors().col(0);
    obs.label = label;
    return obs;
}

LocalObservable pauli_observable(char which) {
    const double s2 = 1.0 / std::sqrt(2.0);
    LocalObservable obs;
    switch (which) {
        case 'X':
            obs.plus << s2, s2;
            obs.minus << s2, -s2;
            break;
        case 'Y':
            obs.plus << s2, Complex(0, s2);
            obs.minus << s2, Complex(0, -s2);
            break;
        case 'Z':
            obs.plus << 1, 0;
            obs.minus << 0, 1;
            break;
        default:
            throw input_error(std::string("unknown Pauli label: ") + which);
    }
    obs.label = std::string(1, which);
    return obs;
}

LocalObservable observable_from_basis(const Eigen::Vector2cd& plus,
                                      const Eigen::Vector2cd& minus,
                                      const std::string& label) {
    constexpr double eps = 1e-6;
    if (std::abs(plus.norm() - 1.0) > eps || std::abs(minus.norm() - 1.0) > eps ||
        std::abs(plus.dot(minus)) > eps) {
        throw input_error("observable eigenvectors must be orthonormal");
    }
    return LocalObservable{plus, minus, label};
}

QuantumState ghz_state(int n) {
    if (n < 2) throw input_error("GHZ needs at least 2 qubits");
    QuantumState s;
    s.n = n;
    s.amplitudes = Eigen::VectorXcd::Zero(dim_of(n));
    const double s2 = 1.0 / std::sqrt(2.0);
    s.amplitudes[0] = s2;
    s.amplitudes[dim_of(n) - 1] = s2;
    return s;
}

QuantumState dicke_state(int n, int k) {
    if (n < 2 || k < 0 || k > n) throw input_error("bad Dicke parameters");
    QuantumState s;
    s.n = n;
    s.amplitudes = Eigen::VectorXcd::Zero(dim_of(n));
    const double norm = 1.0 / std::sqrt(binomial(n, k));
    for (std::int64_t idx = 0; idx < dim_of(n); ++idx) {
        if (popcount64(static_cast<std::uint64_t>(idx)) == n - k) {
            s.amplitudes[idx] = norm;
        }
    }
    return s;
}

QuantumState w_state() { return dicke_state(3, 2); }

QuantumState bell_state(const std::string& which) {
    QuantumState s;
    s.n = 2;
    s.amplitudes = Eigen::VectorXcd::Zero(4);
    const double s2 = 1.0 / std::sqrt(2.0);
    if (which == "phi+") {
        s.amplitudes[0b00] = s2;
        s.amplitudes[0b11] = s2;
    } else if (which == "phi-") {
        s.amplitudes[0b00] = s2;
        s.amplitudes[0b11] = -s2;
    } else if (which == "psi+") {
        s.amplitudes[0b01] = s2;
        s.amplitudes[0b10] = s2;
    } else if (which == "psi-") {
        s.amplitudes[0b01] = s2;
        s.amplitudes[0b10] = -s2;
    } else {
        throw input_error("unknown Bell state: " + which);
    }
    return s;
}

QuantumState balanced_state(const BooleanFunction& f) {
    f.validate();
    const int n = f.arity;
    QuantumState s;
    s.n = n + 1;
    s.amplitudes = Eigen::VectorXcd::Zero(dim_of(n + 1));
    const double amp = std::pow(2.0, -n / 2.0);
    std::vector<int> bits(n);
    for (std::int64_t q = 0; q < dim_of(n); ++q) {
        for (int i = 0; i < n; ++i) bits[i] = static_cast<int>((q >> (n - 1 - i)) & 1);
        s.amplitudes[(q << 1) | f.eval(bits)] = amp;
    }
    return s;
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
    QuantumState s;
    s.n = a.n + b.n;
    s.amplitudes.resize(a.amplitudes.size() * b.amplitudes.size());
    for (std::int64_t i = 0; i < a.amplitudes.size(); ++i) {
        for (std::int64_t j = 0; j < b.amplitudes.size(); ++j) {
            s.amplitudes[i * b.amplitudes.size() + j] =
                a.amplitudes[i] * b.amplitudes[j];
        }
    }
    return s;
}

QuantumState random_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    QuantumState s;
    s.n = n;
    s.amplitudes.resize(dim_of(n));
    for (std::int64_t i = 0; i < dim_of(n); ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        s.amplitudes[i] = Complex(re, im);
    }
    s.amplitudes /= s.amplitudes.norm();
    return s;
}

QuantumState apply_local_unitaries(const QuantumState& s,
                                   const std::vector<Eigen::Matrix2cd>& u) {
    if (static_cast<int>(u.size()) != s.n) {
        throw input_error("need one unitary per qubit");
    }
    QuantumState out = s;
    for (int p = 0; p < s.n; ++p) {
        out.amplitudes = apply_single_qubit(out.amplitudes, s.n, p, u[p]);
    }
    return out;
}

DensityMatrix partial_trace(const QuantumState& s,
                            const std::vector<int>& keep) {
    const int n = s.n;
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) {
            rest.push_back(i);
        }
    }
    const int k = static_cast<int>(keep.size());
    const int r = static_cast<int>(rest.size());
    DensityMatrix rho = DensityMatrix::Zero(dim_of(k), dim_of(k));
    Eigen::VectorXcd v(dim_of(k));
    for (std::int64_t rest_bits = 0; rest_bits < dim_of(r); ++rest_bits) {
        for (std::int64_t keep_bits = 0; keep_bits < dim_of(k); ++keep_bits) {
            std::int64_t idx = 0;
            for (int a = 0; a < k; ++a) {
                if ((keep_bits >> (k - 1 - a)) & 1) idx |= std::int64_t(1) << (n - 1 - keep[a]);
            }
            for (int a = 0; a < r; ++a) {
                if ((rest_bits >> (r - 1 - a)) & 1) idx |= std::int64_t(1) << (n - 1 - rest[a]);
            }
            v[keep_bits] = s.amplitudes[idx];
        }
        rho += v * v.adjoint();
    }
    return rho;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int n,
                            const std::vector<int>& keep) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) {
            rest.push_back(i);
        }
    }
    const int k = static_cast<int>(keep.size());
    const int r = static_cast<int>(rest.size());
    auto full_index = [&](std::int64_t keep_bits, std::int64_t rest_bits) {
        std::int64_t idx = 0;
        for (int a = 0; a < k; ++a) {
            if ((keep_bits >> (k - 1 - a)) & 1) idx |= std::int64_t(1) << (n - 1 - keep[a]);
        }
        for (int a = 0; a < r; ++a) {
            if ((rest_bits >> (r - 1 - a)) & 1) idx |= std::int64_t(1) << (n - 1 - rest[a]);
        }
        return idx;
    };
    DensityMatrix out = DensityMatrix::Zero(dim_of(k), dim_of(k));
    for (std::int64_t a = 0; a < dim_of(k); ++a) {
        for (std::int64_t b = 0; b < dim_of(k); ++b) {
            Complex acc(0, 0);
            for (std::int64_t t = 0; t < dim_of(r); ++t) {
                acc += rho(full_index(a, t), full_index(b, t));
            }
            out(a, b) = acc;
        }
    }
    return out;
}

double purity(const DensityMatrix& rho) {
    return (rho * rho).trace().real();
}

std::vector<std::string> context_menu_labels(
    const std::vector<std::vector<LocalObservable>>& menus) {
    std::vector<std::string> out;
    std::vector<int> choice(menus.size(), 0);
    while (true) {
        std::string key;
        for (std::size_t p = 0; p < menus.size(); ++p) {
            key += menus[p][choice[p]].label;
        }
        out.push_back(key);
        int p = static_cast<int>(menus.size()) - 1;
        while (p >= 0 && ++choice[p] == static_cast<int>(menus[p].size())) {
            choice[p] = 0;
            --p;
        }
        if (p < 0) break;
    }
    return out;
}

EmpiricalModel empirical_model(
    const QuantumState& s,
    const std::vector<std::vector<LocalObservable>>& menus) {
    if (static_cast<int>(menus.size()) != s.n) {
        throw input_error("need one measurement menu per party");
    }
    for (const auto& menu : menus) {
        if (menu.empty()) throw input_error("empty measurement menu");
    }

    MeasurementScenario sc;
    sc.outcomes = {"+", "-"};
    std::set<std::string> used;
    std::vector<int> offsets = {0};
    for (std::size_t p = 0; p < menus.size(); ++p) {
        for (const auto& obs : menus[p]) {
            std::string base = obs.label + std::to_string(p + 1);
            std::string label = base;
            int suffix = 2;
            while (used.count(label)) label = base + "_" + std::to_string(suffix++);
            used.insert(label);
            sc.measurements.push_back(label);
            sc.party.push_back(static_cast<int>(p));
        }
        offsets.push_back(static_cast<int>(sc.measurements.size()));
    }

    EmpiricalModel model;
    model.semiring = Semiring::Probability;
    std::vector<int> choice(menus.size(), 0);
    while (true) {
        std::vector<int> ctx;
        for (std::size_t p = 0; p < menus.size(); ++p) {
            ctx.push_back(offsets[p] + choice[p]);
        }
        sc.cover.push_back(ctx);

        // Rotate into the chosen product eigenbasis: rows of each per-party
        // 2x2 are the outcome bras.
        Eigen::VectorXcd psi = s.amplitudes;
        for (std::size_t p = 0; p < menus.size(); ++p) {
            const auto& obs = menus[p][choice[p]];
            Eigen::Matrix2cd w;
            w.row(0) = obs.plus.adjoint();
            w.row(1) = obs.minus.adjoint();
            psi = apply_single_qubit(psi, s.n, static_cast<int>(p), w);
        }
        Row row;
        for (std::int64_t idx = 0; idx < psi.size(); ++idx) {
            Section sec(s.n);
            for (int i = 0; i < s.n; ++i) {
                sec[i] = static_cast<int>((idx >> (s.n - 1 - i)) & 1);
            }
            row[sec] = Weight::approx(std::norm(psi[idx]));
        }
        model.rows.push_back(std::move(row));

        int p = static_cast<int>(menus.size()) - 1;
        while (p >= 0 && ++choice[p] == static_cast<int>(menus[p].size())) {
            choice[p] = 0;
            --p;
        }
        if (p < 0) break;
    }
    model.scenario = std::move(sc);
    model.scenario.validate();
    return model;
}

}  // namespace ctxlab
