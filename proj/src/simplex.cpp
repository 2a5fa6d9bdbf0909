#include "ctxlab/simplex.hpp"

#include <cstddef>

namespace ctxlab {

namespace {

template <typename T>
struct Arith {
    static bool positive(const T& x);
    static bool optimum_is_zero(const T& w, double tol);
};

template <>
struct Arith<Rational> {
    static bool positive(const Rational& x) { return x > 0; }
    static bool optimum_is_zero(const Rational& w, double) { return w == 0; }
};

template <>
struct Arith<double> {
    static constexpr double kPivotTol = 1e-9;
    static bool positive(const double& x) { return x > kPivotTol; }
    static bool optimum_is_zero(const double& w, double tol) {
        return w <= tol && w >= -tol;
    }
};

}  // namespace

template <typename T>
std::optional<std::vector<T>> simplex_feasible(
    const std::vector<std::vector<T>>& A, const std::vector<T>& b,
    double tol) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    const std::size_t width = n + m + 1;  // structural | artificial | rhs

    // Tableau with artificial identity and non-negative right-hand sides.
    std::vector<std::vector<T>> t(m, std::vector<T>(width, T(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = Arith<T>::positive(T(-b[i]));
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = flip ? T(-A[i][j]) : A[i][j];
        }
        t[i][n + i] = T(1);
        t[i][width - 1] = flip ? T(-b[i]) : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Phase-1 objective row: w = sum of artificials, expressed in nonbasic
    // variables; entering candidates are structural columns with positive
    // coefficient.
    std::vector<T> obj(width, T(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) obj[j] += t[i][j];
        obj[width - 1] += t[i][width - 1];
    }

    const std::size_t max_iters = 1000 + 50 * (m + n) * (m + n);
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        // Bland: smallest structural index with positive objective coefficient.
        std::size_t enter = width;
        for (std::size_t j = 0; j < n; ++j) {
            if (Arith<T>::positive(obj[j])) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;  // optimal

        // Ratio test; ties broken by smallest basis index (Bland).
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (!Arith<T>::positive(t[i][enter])) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            const T lhs = t[i][width - 1] * t[leave][enter];
            const T rhs = t[leave][width - 1] * t[i][enter];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) {
                leave = i;
            }
        }
        if (leave == m) {
            // Unbounded descent cannot happen for a bounded phase-1 objective;
            // treat defensively as optimal.
            break;
        }

        // Pivot on (leave, enter).
        const T piv = t[leave][enter];
        for (std::size_t j = 0; j < width; ++j) t[leave][j] = t[leave][j] / piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const T f = t[i][enter];
            if (f == T(0)) continue;
            for (std::size_t j = 0; j < width; ++j) {
                t[i][j] = t[i][j] - f * t[leave][j];
            }
        }
        const T f = obj[enter];
        if (f != T(0)) {
            for (std::size_t j = 0; j < width; ++j) {
                obj[j] = obj[j] - f * t[leave][j];
            }
        }
        basis[leave] = enter;
    }

    if (!Arith<T>::optimum_is_zero(obj[width - 1], tol)) {
        return std::nullopt;
    }
    std::vector<T> x(n, T(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
            x[basis[i]] = t[i][width - 1];
        }
    }
    return x;
}

template std::optional<std::vector<Rational>> simplex_feasible<Rational>(
    const std::vector<std::vector<Rational>>&, const std::vector<Rational>&,
    double);
template std::optional<std::vector<double>> simplex_feasible<double>(
    const std::vector<std::vector<double>>&, const std::vector<double>&,
    double);

}  // namespace ctxlab
