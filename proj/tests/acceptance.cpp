// Acceptance suite: ten end-to-end product requirements, one verdict line
// each. Exits nonzero when any criterion fails its checks or its budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ctxlab/chapter3.hpp"
#include "ctxlab/entropy.hpp"
#include "ctxlab/errors.hpp"
#include "ctxlab/hierarchy.hpp"
#include "ctxlab/incidence.hpp"
#include "ctxlab/model.hpp"
#include "ctxlab/quantum.hpp"
#include "ctxlab/witness.hpp"

using namespace ctxlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<void(std::vector<std::string>&)>& body) {
    std::vector<std::string> problems;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(problems);
    } catch (const std::exception& e) {
        problems.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "over budget: %.2fs > %.0fs", elapsed,
                      budget_seconds);
        problems.push_back(buf);
    }
    if (problems.empty()) {
        std::printf("PASS  criterion %2d: %s (%.2fs)\n", number, name.c_str(),
                    elapsed);
    } else {
        ++g_failures;
        std::printf("FAIL  criterion %2d: %s (%.2fs)\n", number, name.c_str(),
                    elapsed);
        for (const auto& p : problems) {
            std::printf("      - %s\n", p.c_str());
        }
    }
    std::fflush(stdout);
}

void expect(std::vector<std::string>& problems, bool ok, const std::string& msg) {
    if (!ok) problems.push_back(msg);
}

// ---------------------------------------------------------------------------
// Shared builders.

MeasurementScenario bell_scenario() {
    MeasurementScenario sc;
    sc.measurements = {"a", "b", "a'", "b'"};
    sc.outcomes = {"+", "-"};
    sc.cover = {{0, 1}, {0, 3}, {2, 1}, {2, 3}};
    sc.party = {0, 1, 0, 1};
    return sc;
}

std::vector<std::vector<LocalObservable>> tilted_menus() {
    const double c = std::cos(kPi / 6.0), s = std::sin(kPi / 6.0);
    LocalObservable a = pauli_observable('Z');
    a.label = "a";
    LocalObservable b = pauli_observable('Z');
    b.label = "b";
    const LocalObservable ap = observable_from_basis({c, s}, {-s, c}, "a'");
    const LocalObservable bp = observable_from_basis({c, -s}, {s, c}, "b'");
    return {{a, ap}, {b, bp}};
}

std::vector<std::vector<LocalObservable>> uniform_menus(
    int parties, const LocalObservable& first, const LocalObservable& second) {
    return std::vector<std::vector<LocalObservable>>(
        parties, std::vector<LocalObservable>{first, second});
}

EmpiricalModel hardy_support_model() {
    EmpiricalModel m;
    m.scenario = bell_scenario();
    m.semiring = Semiring::Boolean;
    const std::vector<std::vector<std::string>> rows = {
        {"++", "+-", "-+", "--"},
        {"+-", "-+", "--"},
        {"+-", "-+", "--"},
        {"++", "+-", "-+"},
    };
    m.rows.resize(rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c) {
        for (const auto& label : rows[c]) {
            m.rows[c][m.scenario.section_from_label(static_cast<int>(c), label)] =
                Weight::exact(1);
        }
    }
    return m;
}

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

DensityMatrix random_density(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            g(i, j) = Complex(nd(rng), nd(rng));
        }
    }
    DensityMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

double state_overlap(const QuantumState& a, const QuantumState& b) {
    return std::abs(a.amplitudes.dot(b.amplitudes));
}

// ---------------------------------------------------------------------------
// Criterion 10 oracle: exhaustive rational vertex enumeration for the global
// distribution system, written independently of the library's linear algebra.
// Globals are encoded as 4-bit words (bit i = outcome of measurement i); the
// system rows are every (context, section) pair plus normalization, scaled to
// integers, and every full-rank column subset is solved exactly.

struct RationalTable {
    // weights[c][s]: contexts in bell cover order, sections 0..3 (first
    // measurement most significant).
    std::array<std::array<Rational, 4>, 4> weights{};
};

const std::array<std::pair<int, int>, 4> kOracleContexts = {
    std::make_pair(0, 1), std::make_pair(0, 3), std::make_pair(2, 1),
    std::make_pair(2, 3)};

int oracle_section(int global, int ctx) {
    const auto [m1, m2] = kOracleContexts[ctx];
    return ((global >> m1) & 1) * 2 + ((global >> m2) & 1);
}

EmpiricalModel model_of_table(const RationalTable& t) {
    EmpiricalModel m;
    m.scenario = bell_scenario();
    m.semiring = Semiring::Probability;
    m.rows.resize(4);
    for (int c = 0; c < 4; ++c) {
        for (int s = 0; s < 4; ++s) {
            m.rows[c][{(s >> 1) & 1, s & 1}] = Weight::exact(t.weights[c][s]);
        }
    }
    return m;
}

long long lcm_ll(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

// Feasibility of {x >= 0 : sum_g x_g [section match] = weight, sum x = 1} by
// exhaustive enumeration of candidate bases with fraction-free elimination.
bool vertex_enumeration_feasible(const RationalTable& t) {
    long long scale = 1;
    for (int c = 0; c < 4; ++c) {
        for (int s = 0; s < 4; ++s) {
            scale = lcm_ll(
                scale,
                static_cast<long long>(denominator(t.weights[c][s])));
        }
    }

    // 17 integer equations over 16 global-assignment unknowns.
    constexpr int kRows = 17, kCols = 16;
    std::array<std::array<long long, kCols>, kRows> a{};
    std::array<long long, kRows> b{};
    for (int c = 0; c < 4; ++c) {
        for (int s = 0; s < 4; ++s) {
            const int row = 4 * c + s;
            for (int g = 0; g < 16; ++g) {
                a[row][g] = (oracle_section(g, c) == s) ? 1 : 0;
            }
            const Rational scaled = t.weights[c][s] * scale;
            b[row] = static_cast<long long>(numerator(scaled));
        }
    }
    for (int g = 0; g < 16; ++g) a[16][g] = 1;
    b[16] = scale;

    // Rank of the coefficient matrix by fraction-free elimination.
    int rank = 0;
    {
        auto m = a;
        __int128 prev = 1;
        int row = 0;
        for (int col = 0; col < kCols && row < kRows; ++col) {
            int pivot = -1;
            for (int r = row; r < kRows; ++r) {
                if (m[r][col] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) continue;
            std::swap(m[row], m[pivot]);
            for (int r = row + 1; r < kRows; ++r) {
                for (int cc = col + 1; cc < kCols; ++cc) {
                    const __int128 v =
                        (__int128)m[row][col] * m[r][cc] -
                        (__int128)m[r][col] * m[row][cc];
                    m[r][cc] = static_cast<long long>(v / prev);
                }
                m[r][col] = 0;
            }
            prev = m[row][col];
            ++row;
        }
        rank = row;
    }

    // Walk all rank-sized column subsets; solve each exactly.
    std::vector<int> subset(rank);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        // Eliminate the augmented 17 x (rank+1) system for this subset.
        std::vector<std::array<long long, 18>> m(kRows);
        for (int r = 0; r < kRows; ++r) {
            for (int j = 0; j < rank; ++j) m[r][j] = a[r][subset[j]];
            m[r][rank] = b[r];
        }
        const int width = rank + 1;
        bool singular = false;
        __int128 prev = 1;
        for (int col = 0; col < rank; ++col) {
            int pivot = -1;
            for (int r = col; r < kRows; ++r) {
                if (m[r][col] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) {
                singular = true;
                break;
            }
            std::swap(m[col], m[pivot]);
            for (int r = col + 1; r < kRows; ++r) {
                for (int cc = col + 1; cc < width; ++cc) {
                    const __int128 v = (__int128)m[col][col] * m[r][cc] -
                                       (__int128)m[r][col] * m[col][cc];
                    m[r][cc] = static_cast<long long>(v / prev);
                }
                m[r][col] = 0;
            }
            prev = m[col][col];
        }
        bool candidate = !singular;
        if (candidate) {
            // Rows below the triangle must have vanished entirely.
            for (int r = rank; r < kRows && candidate; ++r) {
                if (m[r][rank] != 0) candidate = false;
            }
        }
        if (candidate) {
            // Back-substitute over rationals and check non-negativity.
            std::vector<Rational> x(rank);
            bool nonneg = true;
            for (int i = rank - 1; i >= 0 && nonneg; --i) {
                Rational acc = m[i][rank];
                for (int j = i + 1; j < rank; ++j) {
                    acc -= Rational(m[i][j]) * x[j];
                }
                x[i] = acc / Rational(m[i][i]);
                if (x[i] < 0) nonneg = false;
            }
            if (nonneg) return true;
        }
        // Next combination.
        int i = rank - 1;
        while (i >= 0 && subset[i] == kCols - rank + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < rank; ++j) subset[j] = subset[j - 1] + 1;
    }
    return false;
}

// Independent possibilistic oracle for boolean tables on the same scenario.
struct BooleanOracleVerdict {
    bool satisfiable = false;
    // non_extendable[c] lists section codes with no consistent global.
    std::array<std::vector<int>, 4> non_extendable;
};

BooleanOracleVerdict boolean_oracle(
    const std::array<std::array<bool, 4>, 4>& possible) {
    BooleanOracleVerdict out;
    std::vector<int> consistent;
    for (int g = 0; g < 16; ++g) {
        bool ok = true;
        for (int c = 0; c < 4 && ok; ++c) {
            if (!possible[c][oracle_section(g, c)]) ok = false;
        }
        if (ok) consistent.push_back(g);
    }
    out.satisfiable = !consistent.empty();
    for (int c = 0; c < 4; ++c) {
        for (int s = 0; s < 4; ++s) {
            if (!possible[c][s]) continue;
            bool extends = false;
            for (const int g : consistent) {
                if (oracle_section(g, c) == s) {
                    extends = true;
                    break;
                }
            }
            if (!extends) out.non_extendable[c].push_back(s);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criteria.

void criterion_bell(std::vector<std::string>& problems) {
    const EmpiricalModel m = empirical_model(bell_state("phi+"), tilted_menus());
    const std::vector<std::vector<double>> expected = {
        {0.5, 0.0, 0.0, 0.5},
        {0.375, 0.125, 0.125, 0.375},
        {0.375, 0.125, 0.125, 0.375},
        {0.125, 0.375, 0.375, 0.125},
    };
    for (int c = 0; c < 4; ++c) {
        for (int s = 0; s < 4; ++s) {
            const Section sec = {(s >> 1) & 1, s & 1};
            const double got = m.weight(c, sec).value();
            if (std::abs(got - expected[c][s]) > 1e-9) {
                problems.push_back("table entry off at context " +
                                   std::to_string(c) + ", section " +
                                   std::to_string(s));
            }
        }
    }
    expect(problems, classify(m) == ContextualityClass::Weakly,
           "verdict is not weak");

    const EmpiricalModel exact = snap_model_to_rational(m);
    const Rational combo = exact.weight(0, {0, 0}).rational() -
                           exact.weight(1, {0, 1}).rational() +
                           exact.weight(2, {0, 0}).rational() +
                           exact.weight(3, {0, 1}).rational();
    expect(problems, combo == Rational(9) / 8,
           "agreement combination is not exactly 9/8");
}

void criterion_hardy(std::vector<std::string>& problems) {
    const EmpiricalModel m = hardy_support_model();
    expect(problems, classify(m) == ContextualityClass::Logically,
           "verdict is not logical");
    const auto strong = decide_strong_contextuality(m);
    expect(problems, strong.satisfiable, "support unexpectedly unsatisfiable");
    expect(problems,
           strong.witness.has_value() &&
               *strong.witness == GlobalAssignment{1, 1, 0, 0},
           "satisfying assignment is not (1,1,0,0)");
}

void criterion_ghz(std::vector<std::string>& problems) {
    const auto x = pauli_observable('X');
    const auto y = pauli_observable('Y');
    for (int n = 3; n <= 6; ++n) {
        const EmpiricalModel m =
            empirical_model(ghz_state(n), uniform_menus(n, x, y));
        if (classify(m) != ContextualityClass::Strongly) {
            problems.push_back("n=" + std::to_string(n) + " is not strong");
        }
    }
}

void criterion_dicke(std::vector<std::string>& problems) {
    const auto x = pauli_observable('X');
    const auto z = pauli_observable('Z');
    for (int n = 3; n <= 5; ++n) {
        for (int k = 1; k < n; ++k) {
            const EmpiricalModel m =
                empirical_model(dicke_state(n, k), uniform_menus(n, x, z));
            const auto poss = decide_possibilistic_extendability(m);
            if (!poss.logically_contextual()) {
                problems.push_back("S(" + std::to_string(n) + "," +
                                   std::to_string(k) + ") is not logical");
            }
            // Context 0 measures X everywhere; both constant sections carry
            // C(n,k)/2^n.
            const double want = binomial(n, k) / std::pow(2.0, n);
            const Section plus(n, 0), minus(n, 1);
            if (std::abs(m.weight(0, plus).value() - want) > 1e-9 ||
                std::abs(m.weight(0, minus).value() - want) > 1e-9) {
                problems.push_back("S(" + std::to_string(n) + "," +
                                   std::to_string(k) +
                                   ") all-X constant outcome off");
            }
        }
    }
    const EmpiricalModel bell =
        empirical_model(dicke_state(2, 1), uniform_menus(2, x, z));
    expect(problems,
           !decide_possibilistic_extendability(bell).logically_contextual(),
           "S(2,1) unexpectedly logical");
}

void criterion_chapter3(std::vector<std::string>& problems) {
    const auto reports = run_chapter3_suite();
    expect(problems, reports.size() == 10, "expected ten table entries");
    for (const auto& r : reports) {
        if (!r.table_match) problems.push_back(r.name + ": table mismatch");
        if (!r.verdict_match) problems.push_back(r.name + ": verdict mismatch");
    }

    std::vector<QuantumState> states;
    for (int i = 1; i <= 2; ++i) {
        for (const bool plus : {true, false}) {
            const QuantumState s = dictatorship_state(i, plus);
            states.push_back(s);
            const EmpiricalModel m = empirical_model(s, dictatorship_menu(plus));
            if (classify(m) != ContextualityClass::Weakly) {
                problems.push_back("dictatorship state (" + std::to_string(i) +
                                   (plus ? ",+" : ",-") + ") is not weak");
            }
        }
    }

    // Property-based stand-in for the universal claim: across random
    // same-menu dichotomic measurements these states never turn logical.
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> theta(0.0, kPi);
    std::uniform_real_distribution<double> phi(0.0, 2.0 * kPi);
    for (int t = 0; t < 500; ++t) {
        const LocalObservable o1 =
            observable_from_angles(theta(rng), phi(rng), "A");
        const LocalObservable o2 =
            observable_from_angles(theta(rng), phi(rng), "B");
        const EmpiricalModel m =
            empirical_model(states[t % 4], uniform_menus(3, o1, o2));
        if (decide_possibilistic_extendability(m).logically_contextual()) {
            problems.push_back("random menu sample " + std::to_string(t) +
                               " became logical");
            break;
        }
    }
}

QuantumState planted_product(int n, std::mt19937_64& rng,
                             PnDecomposition& dec) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const int max_pairs = n / 2;
    const int npairs =
        (max_pairs > 0) ? static_cast<int>(rng() % (max_pairs + 1)) : 0;
    std::normal_distribution<double> nd(0.0, 1.0);
    dec = PnDecomposition{};
    int used = 0;
    for (int p = 0; p < npairs; ++p) {
        int i = order[used], j = order[used + 1];
        used += 2;
        if (i > j) std::swap(i, j);
        const Eigen::MatrixXcd u = haar_unitary(2, rng);
        const Eigen::MatrixXcd v = haar_unitary(2, rng);
        const double h = 1 / std::sqrt(2.0);
        Eigen::Vector4cd base;
        base << h, 0, 0, h;
        Eigen::Vector4cd amp = Eigen::Vector4cd::Zero();
        for (int aa = 0; aa < 2; ++aa) {
            for (int bb = 0; bb < 2; ++bb) {
                for (int cc = 0; cc < 2; ++cc) {
                    for (int dd = 0; dd < 2; ++dd) {
                        amp(2 * aa + bb) += u(aa, cc) * v(bb, dd) * base(2 * cc + dd);
                    }
                }
            }
        }
        dec.pairs.emplace_back(i, j, amp);
    }
    for (; used < n; ++used) {
        Eigen::Vector2cd s(Complex(nd(rng), nd(rng)), Complex(nd(rng), nd(rng)));
        s.normalize();
        dec.singles[order[used]] = s;
    }
    return dec.assemble(n);
}

void criterion_witness(std::vector<std::string>& problems) {
    std::mt19937_64 rng(606);
    for (int t = 0; t < 1000 && problems.empty(); ++t) {
        if (t % 2 == 1) {
            const int n = 1 + (t / 2) % 6;
            PnDecomposition dec;
            const QuantumState s = planted_product(n, rng, dec);
            const WitnessResult w = hardy_witness(s);
            if (!w.in_pn) {
                problems.push_back("planted product " + std::to_string(t) +
                                   " not recognized");
            } else if (state_overlap(w.components.assemble(n), s) <
                       1.0 - 1e-8) {
                problems.push_back("planted product " + std::to_string(t) +
                                   " recovered factors mismatch");
            }
        } else {
            const int n = 2 + t % 5;
            const QuantumState s = random_state(n, 60000 + t);
            const WitnessResult w = hardy_witness(s);
            if (w.in_pn) {
                problems.push_back("generic state " + std::to_string(t) +
                                   " misclassified as a product");
            } else if (!w.verified) {
                problems.push_back("generic state " + std::to_string(t) +
                                   " witness unverified");
            }
        }
    }

    const auto start = std::chrono::steady_clock::now();
    const WitnessResult w8 = hardy_witness(random_state(8, 99991));
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    expect(problems, !w8.in_pn && w8.verified, "8-qubit witness failed");
    if (elapsed >= 10.0) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "8-qubit witness took %.2fs (>= 10s)",
                      elapsed);
        problems.push_back(buf);
    }
}

void criterion_entropy(std::vector<std::string>& problems) {
    std::mt19937_64 rng(707);
    for (int t = 0; t < 200; ++t) {
        const int d = 2 + t % 7;
        const DensityMatrix rho = random_density(d, rng);
        const double vn = von_neumann_entropy(rho);
        const double ctx = contextual_shannon(rho, eigencontext(rho));
        if (std::abs(vn - ctx) > 1e-9) {
            problems.push_back("minimizing context off at sample " +
                               std::to_string(t));
            break;
        }
    }
    for (int t = 0; t < 1000; ++t) {
        const int d = 2 + t % 7;
        const DensityMatrix rho = random_density(d, rng);
        const ProjectiveContext ctx = random_maximal_context(d, rng);
        if (!schur_horn_check(rho, ctx)) {
            problems.push_back("majorization failed at sample " +
                               std::to_string(t));
            break;
        }
    }
    for (int t = 0; t < 50; ++t) {
        const int d = 2 + t % 7;
        const DensityMatrix rho = random_density(d, rng);
        const ProjectiveContext ctx = random_maximal_context(d, rng);
        const auto dist = context_distribution(rho, ctx);
        double prev = renyi_entropy(dist, 0.0);
        for (double q = 0.25; q <= 5.01; q += 0.25) {
            const double cur = renyi_entropy(dist, q);
            if (cur > prev + 1e-10) {
                problems.push_back("order-parameter monotonicity failed at sample " +
                                   std::to_string(t));
                break;
            }
            prev = cur;
        }
    }
}

void criterion_reconstruction(std::vector<std::string>& problems) {
    std::mt19937_64 rng(808);
    std::exponential_distribution<double> expdist(1.0);
    for (int t = 0; t < 100 && problems.empty(); ++t) {
        const int d = 2 + t % 5;
        std::vector<double> lam(d, 0.0);
        switch (t % 4) {
            case 0: {  // generic simplex point
                double total = 0.0;
                for (double& v : lam) {
                    v = expdist(rng);
                    total += v;
                }
                for (double& v : lam) v /= total;
                break;
            }
            case 1:  // pure
                lam[0] = 1.0;
                break;
            case 2:  // degenerate pair of equal eigenvalues
                if (d == 2) {
                    lam = {0.5, 0.5};
                } else {
                    lam.assign(d, 0.0);
                    lam[0] = 0.25;
                    lam[1] = 0.25;
                    lam[2] = 0.5;
                }
                break;
            default:  // spectra hitting the flip / complementary-pair cases
                lam.assign(d, 0.0);
                if ((t / 4) % 2 == 0 && d >= 3) {
                    lam[0] = 0.6;
                    lam[1] = 0.3;
                    lam[2] = 0.1;
                } else {
                    lam[0] = 0.75;
                    lam[1] = 0.25;
                }
                break;
        }
        const Eigen::MatrixXcd u = haar_unitary(d, rng);
        DensityMatrix hidden = DensityMatrix::Zero(d, d);
        for (int i = 0; i < d; ++i) {
            hidden += lam[i] * (u.col(i) * u.col(i).adjoint());
        }
        const auto out = reconstruct(state_backed_oracle(hidden));
        if (d == 2) {
            if (out.kind != ReconstructionKind::Pair) {
                problems.push_back("dimension-2 sample " + std::to_string(t) +
                                   " did not return a pair");
                break;
            }
            const double best = std::min((out.rho - hidden).norm(),
                                         (out.rho_alt - hidden).norm());
            if (best > 1e-6) {
                problems.push_back("dimension-2 sample " + std::to_string(t) +
                                   " outside tolerance");
            }
            const DensityMatrix complement =
                DensityMatrix::Identity(2, 2) - out.rho;
            if ((out.rho_alt - complement).norm() > 1e-6) {
                problems.push_back("dimension-2 pair is not {rho, I - rho} at " +
                                   std::to_string(t));
            }
        } else {
            if (out.kind != ReconstructionKind::Unique) {
                problems.push_back("sample " + std::to_string(t) +
                                   " (dim " + std::to_string(d) +
                                   ") not uniquely reconstructed: " + out.reason);
                break;
            }
            if ((out.rho - hidden).norm() > 1e-6) {
                problems.push_back("sample " + std::to_string(t) +
                                   " outside Frobenius tolerance");
            }
        }
    }
}

void criterion_counterexample(std::vector<std::string>& problems) {
    for (const auto& [n1, n2] :
         std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {2, 5}}) {
        const int n = n1 * n2;
        const auto ce = subadditivity_counterexample(n1, n2);
        if (std::abs(ce.a - std::log(double(n))) > 1e-9) {
            problems.push_back("dimension " + std::to_string(n) +
                               ": first value is not log n");
        }
        std::vector<double> dist(n, 1.0 / (2.0 * n));
        for (const int i : {0, 1, n - 2, n - 1}) dist[i] += 0.125;
        if (std::abs(ce.b - shannon_entropy(dist)) > 1e-9) {
            problems.push_back("dimension " + std::to_string(n) +
                               ": second value off the analytic form");
        }
        if (ce.a - ce.b < 1e-3) {
            problems.push_back("dimension " + std::to_string(n) +
                               ": gap below 1e-3");
        }
    }

    bool found = false;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const ViolationSample v = random_violation_4d(seed);
        if (v.gap() > 1e-3) {
            std::printf(
                "      [info] 4-dim violation at seed %llu: a=%.6f b=%.6f "
                "gap=%.6f\n",
                static_cast<unsigned long long>(seed), v.a, v.b, v.gap());
            found = true;
            break;
        }
    }
    expect(problems, found, "no 4-dim violation found in 500 seeds");
}

void criterion_oracle_equivalence(std::vector<std::string>& problems) {
    std::mt19937_64 rng(1);

    // Probabilistic half: 50 exact rational tables, half straight mixtures of
    // global assignments, half mixtures of the anti-correlated box with a
    // deterministic behavior.
    for (int t = 0; t < 50 && problems.empty(); ++t) {
        RationalTable table;
        if (t % 2 == 0) {
            std::array<long long, 16> wts{};
            long long total = 0;
            for (auto& w : wts) {
                w = static_cast<long long>(rng() % 10);
                total += w;
            }
            if (total == 0) {
                wts[rng() % 16] = 1;
                total = 1;
            }
            for (int g = 0; g < 16; ++g) {
                if (wts[g] == 0) continue;
                const Rational x(wts[g], total);
                for (int c = 0; c < 4; ++c) {
                    table.weights[c][oracle_section(g, c)] += x;
                }
            }
        } else {
            const Rational mu(static_cast<long long>(t % 17), 16);
            const int g = static_cast<int>(rng() % 16);
            for (int c = 0; c < 4; ++c) {
                // The box: perfectly correlated except in the last context.
                const bool anti = (c == 3);
                for (int s = 0; s < 4; ++s) {
                    const bool corr = (s == 0 || s == 3);
                    if (anti != corr) table.weights[c][s] += mu / 2;
                }
                table.weights[c][oracle_section(g, c)] += 1 - mu;
            }
        }

        const bool oracle_feasible = vertex_enumeration_feasible(table);
        const auto lp = decide_probabilistic_extendability(model_of_table(table));
        if (!lp.exact) {
            problems.push_back("table " + std::to_string(t) +
                               " did not take the exact path");
        }
        if (lp.feasible != oracle_feasible) {
            problems.push_back(
                "table " + std::to_string(t) + ": linear program says " +
                (lp.feasible ? "feasible" : "infeasible") +
                ", enumeration says " +
                (oracle_feasible ? "feasible" : "infeasible"));
        }
    }

    // Boolean half: random supports, checked against direct enumeration of
    // all global assignments, through both the enumerating and the capped
    // search paths.
    for (int t = 0; t < 50 && problems.empty(); ++t) {
        std::array<std::array<bool, 4>, 4> possible{};
        EmpiricalModel m;
        m.scenario = bell_scenario();
        m.semiring = Semiring::Boolean;
        m.rows.resize(4);
        for (int c = 0; c < 4; ++c) {
            int count = 0;
            for (int s = 0; s < 4; ++s) {
                possible[c][s] = (rng() % 2 == 0);
                if (possible[c][s]) ++count;
            }
            if (count == 0) {
                possible[c][rng() % 4] = true;
            }
            for (int s = 0; s < 4; ++s) {
                if (possible[c][s]) {
                    m.rows[c][{(s >> 1) & 1, s & 1}] = Weight::exact(1);
                }
            }
        }

        const BooleanOracleVerdict want = boolean_oracle(possible);
        for (const std::uint64_t cap : {kDefaultEnumerationCap, std::uint64_t(1)}) {
            const auto strong = decide_strong_contextuality(m, cap);
            if (strong.satisfiable != want.satisfiable) {
                problems.push_back("boolean table " + std::to_string(t) +
                                   ": satisfiability mismatch");
                break;
            }
            const auto poss = decide_possibilistic_extendability(m, cap);
            for (int c = 0; c < 4; ++c) {
                std::vector<int> got;
                for (const auto& sec : poss.non_extendable[c]) {
                    got.push_back(sec[0] * 2 + sec[1]);
                }
                if (got != want.non_extendable[c]) {
                    problems.push_back("boolean table " + std::to_string(t) +
                                       ": non-extendable set mismatch");
                    break;
                }
            }
            if (!problems.empty()) break;

            const ContextualityClass verdict = classify(m, 1e-7, cap);
            ContextualityClass expected = ContextualityClass::NonContextual;
            if (!want.satisfiable) {
                expected = ContextualityClass::Strongly;
            } else {
                for (int c = 0; c < 4; ++c) {
                    if (!want.non_extendable[c].empty()) {
                        expected = ContextualityClass::Logically;
                        break;
                    }
                }
            }
            if (verdict != expected) {
                problems.push_back("boolean table " + std::to_string(t) +
                                   ": verdict mismatch");
                break;
            }
        }
    }
}

}  // namespace

int main() {
    run_criterion(1, "two-party table, verdict, and agreement bound", 1.0,
                  criterion_bell);
    run_criterion(2, "logical paradox placement and witness", 1.0,
                  criterion_hardy);
    run_criterion(3, "cat states are strongly contextual", 10.0, criterion_ghz);
    run_criterion(4, "symmetric states are logically contextual", 30.0,
                  criterion_dicke);
    run_criterion(5, "balanced-function tables and dictatorship states", 60.0,
                  criterion_chapter3);
    run_criterion(6, "witness dichotomy on random and planted states", 0.0,
                  criterion_witness);
    run_criterion(7, "entropy identities and majorization", 60.0,
                  criterion_entropy);
    run_criterion(8, "reconstruction round trips", 60.0,
                  criterion_reconstruction);
    run_criterion(9, "subadditivity counterexample family", 0.0,
                  criterion_counterexample);
    run_criterion(10, "solver agreement with exhaustive enumeration", 30.0,
                  criterion_oracle_equivalence);

    if (g_failures == 0) {
        std::printf("All acceptance criteria passed.\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed.\n", g_failures);
    return 1;
}
