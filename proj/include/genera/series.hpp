#pragma once

#include "genera/rational.hpp"

#include <string>
#include <vector>

namespace genera {

/// Truncated power series in one variable over the rationals. The order is
/// the truncation degree: coefficients 0..order are stored exactly.
class PowerSeries1 {
public:
    PowerSeries1() : coeffs_(1, Rational(0)) {}
    explicit PowerSeries1(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Rational(0)) {}

    static PowerSeries1 constant(const Rational& c, int order);
    static PowerSeries1 one(int order) { return constant(1, order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

    /// Copy truncated or zero-extended to the given order.
    PowerSeries1 to_order(int order) const;

    PowerSeries1 operator-() const;
    friend PowerSeries1 operator+(const PowerSeries1& a, const PowerSeries1& b);
    friend PowerSeries1 operator-(const PowerSeries1& a, const PowerSeries1& b);
    /// Product truncated to min(order a, order b).
    friend PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b);
    friend PowerSeries1 operator*(const PowerSeries1& a, const Rational& s);
    friend bool operator==(const PowerSeries1& a, const PowerSeries1& b);
    friend bool operator!=(const PowerSeries1& a, const PowerSeries1& b) { return !(a == b); }

    /// Multiplicative inverse; requires a nonzero constant term.
    PowerSeries1 inverse() const;

    bool is_even() const;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// log of a series with constant term 1; throws SeriesNotUnital otherwise.
PowerSeries1 series_log(const PowerSeries1& s);

/// exp of a series with constant term 0; throws SeriesNotNilpotent otherwise.
PowerSeries1 series_exp(const PowerSeries1& s);

/// x / (1 - e^{-x}), truncated to the given order.
PowerSeries1 todd_series(int order);

/// x / tanh(x); even.
PowerSeries1 l_series(int order);

/// (x/2) / sinh(x/2); even.
PowerSeries1 ahat_series(int order);

} // namespace genera
