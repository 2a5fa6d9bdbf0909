#include "ctxlab/rational.hpp"

#include <cmath>

#include "ctxlab/errors.hpp"

namespace ctxlab {

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(boost::multiprecision::cpp_int(text));
        }
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) {
            throw input_error("rational with zero denominator: " + text);
        }
        return Rational(num, den);
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("malformed rational: " + text);
    }
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

std::optional<Rational> snap_to_rational(double x, long max_den, double eps) {
    if (!std::isfinite(x)) {
        return std::nullopt;
    }
    for (long den = 1; den <= max_den; ++den) {
        const double scaled = x * static_cast<double>(den);
        const double num = std::round(scaled);
        if (std::abs(scaled - num) <= eps * static_cast<double>(den)) {
            if (std::abs(x - num / static_cast<double>(den)) <= eps) {
                return Rational(static_cast<long long>(num), den);
            }
        }
    }
    return std::nullopt;
}

}  // namespace ctxlab
