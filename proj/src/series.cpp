#include "genera/series.hpp"

#include "genera/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genera {

namespace {

// k! as an exact integer
mpz_class factorial(int k) {
    mpz_class f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

PowerSeries1 PowerSeries1::constant(const Rational& c, int order) {
    PowerSeries1 s(order);
    s[0] = c;
    return s;
}

PowerSeries1 PowerSeries1::to_order(int order) const {
    PowerSeries1 out(order);
    int n = std::min(order, this->order());
    for (int k = 0; k <= n; ++k) out[k] = coeffs_[static_cast<std::size_t>(k)];
    return out;
}

PowerSeries1 PowerSeries1::operator-() const {
    PowerSeries1 out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

PowerSeries1 operator+(const PowerSeries1& a, const PowerSeries1& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries1 out(n);
    for (int k = 0; k <= n; ++k) out[k] = a[k] + b[k];
    return out;
}

PowerSeries1 operator-(const PowerSeries1& a, const PowerSeries1& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries1 out(n);
    for (int k = 0; k <= n; ++k) out[k] = a[k] - b[k];
    return out;
}

PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries1 out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

PowerSeries1 operator*(const PowerSeries1& a, const Rational& s) {
    PowerSeries1 out = a;
    for (int k = 0; k <= out.order(); ++k) out[k] *= s;
    return out;
}

bool operator==(const PowerSeries1& a, const PowerSeries1& b) {
    return a.coeffs_ == b.coeffs_;
}

PowerSeries1 PowerSeries1::inverse() const {
    if (coeffs_[0] == 0) {
        throw std::invalid_argument("series with zero constant term has no inverse");
    }
    int n = order();
    PowerSeries1 out(n);
    Rational c0 = 1 / coeffs_[0];
    out[0] = c0;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += coeffs_[static_cast<std::size_t>(j)] * out[k - j];
        out[k] = -c0 * acc;
    }
    return out;
}

bool PowerSeries1::is_even() const {
    for (int k = 1; k <= order(); k += 2) {
        if (coeffs_[static_cast<std::size_t>(k)] != 0) return false;
    }
    return true;
}

std::string PowerSeries1::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << " + ";
        os << c.get_str();
        if (k >= 1) os << "*x";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

PowerSeries1 series_log(const PowerSeries1& s) {
    if (s[0] != 1) {
        fail(ErrorKind::SeriesNotUnital, "series log requires constant term 1");
    }
    int n = s.order();
    // log(s)' = s'/s, integrated term by term
    PowerSeries1 ratio(n);
    PowerSeries1 inv = s.inverse();
    for (int k = 0; k <= n; ++k) {
        // (s')_k = (k+1) s_{k+1}
        Rational d = (k + 1 <= n) ? s[k + 1] * (k + 1) : Rational(0);
        if (d == 0) continue;
        for (int j = 0; k + j <= n; ++j) ratio[k + j] += d * inv[j];
    }
    PowerSeries1 out(n);
    for (int k = 1; k <= n; ++k) out[k] = ratio[k - 1] / k;
    return out;
}

PowerSeries1 series_exp(const PowerSeries1& s) {
    if (s[0] != 0) {
        fail(ErrorKind::SeriesNotNilpotent, "series exp requires constant term 0");
    }
    int n = s.order();
    PowerSeries1 out(n);
    out[0] = 1;
    // out' = s' * out  =>  k*out_k = sum_{j=1}^{k} j*s_j*out_{k-j}
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += s[j] * j * out[k - j];
        out[k] = acc / k;
    }
    return out;
}

PowerSeries1 todd_series(int order) {
    // (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!
    PowerSeries1 g(order);
    for (int k = 0; k <= order; ++k) {
        Rational c(((k % 2 == 0) ? 1 : -1), factorial(k + 1));
        c.canonicalize();
        g[k] = c;
    }
    return g.inverse();
}

PowerSeries1 l_series(int order) {
    // cosh(x) * (sinh(x)/x)^{-1}
    PowerSeries1 ch(order);
    PowerSeries1 sh(order);
    for (int k = 0; k <= order; k += 2) {
        Rational a(1, factorial(k));
        a.canonicalize();
        ch[k] = a;
        Rational b(1, factorial(k + 1));
        b.canonicalize();
        sh[k] = b;
    }
    return ch * sh.inverse();
}

PowerSeries1 ahat_series(int order) {
    // ((sinh(x/2))/(x/2))^{-1}; sinh(x/2)/(x/2) = sum_m (x^{2m}/4^m) / (2m+1)!
    PowerSeries1 sh(order);
    for (int k = 0; k <= order; k += 2) {
        mpz_class den = factorial(k + 1);
        mpz_class pow4 = 1;
        for (int i = 0; i < k / 2; ++i) pow4 *= 4;
        Rational c(1, den * pow4);
        c.canonicalize();
        sh[k] = c;
    }
    return sh.inverse();
}

} // namespace genera
