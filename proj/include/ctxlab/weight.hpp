// weight.hpp
// Table weight: an exact rational (hand-written tables) or a double
// (quantum-generated tables). Sums stay exact only when both operands are.

#pragma once

#include <stdexcept>

#include "rational.hpp"

namespace ctxlab {

class Weight {
public:
    Weight() : exact_(true), r_(0), f_(0.0) {}

    static Weight exact(Rational r) {
        Weight w;
        w.exact_ = true;
        w.f_ = rational_to_double(r);
        w.r_ = std::move(r);
        return w;
    }

    static Weight approx(double v) {
        Weight w;
        w.exact_ = false;
        w.r_ = 0;
        w.f_ = v;
        return w;
    }

    bool is_exact() const { return exact_; }
    double value() const { return f_; }

    const Rational& rational() const {
        if (!exact_) {
            throw std::logic_error("Weight::rational() on an inexact weight");
        }
        return r_;
    }

    Weight operator+(const Weight& o) const {
        if (exact_ && o.exact_) {
            return exact(r_ + o.r_);
        }
        return approx(f_ + o.f_);
    }

    bool is_zero() const { return exact_ ? r_.is_zero() : f_ == 0.0; }

private:
    bool exact_;
    Rational r_;
    double f_;
};

}  // namespace ctxlab
