#ifndef EXTHYP_LOGVAL_HPP
#define EXTHYP_LOGVAL_HPP

#include <cmath>
#include <limits>

namespace exthyp {

// Signed magnitude kept in log space so products of thousands of factors
// (rising factorials, z^n, n!) never overflow.  sign is -1, 0 or +1;
// when sign == 0 the log field is ignored.
struct LogVal {
    double log = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogVal from_double(double v) {
        if (v == 0.0 || std::isnan(v)) return {-std::numeric_limits<double>::infinity(), 0};
        return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
    }
    static LogVal one() { return {0.0, 1}; }
    static LogVal zero() { return {}; }
    static LogVal positive(double log_magnitude) { return {log_magnitude, 1}; }

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log);
    }

    LogVal operator*(const LogVal& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {log + o.log, sign * o.sign};
    }
    LogVal operator/(const LogVal& o) const {
        if (sign == 0) return zero();
        return {log - o.log, sign * o.sign};
    }
    void mul_by(double v) {
        if (sign == 0) return;
        if (v == 0.0) { *this = zero(); return; }
        log += std::log(std::fabs(v));
        if (v < 0.0) sign = -sign;
    }
    void div_by(double v) {
        if (sign == 0) return;
        log -= std::log(std::fabs(v));
        if (v < 0.0) sign = -sign;
    }
};

// log(exp(a) + exp(b)) for magnitudes of like sign.
inline double log_add(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

// Compensated sum of LogVal terms on a sliding log scale; the sheet is
// re-based whenever a term outgrows it, so sums whose true magnitude
// exceeds double range still accumulate correctly.
struct LogAccumulator {
    double scale = 0.0;
    double acc = 0.0;
    double comp = 0.0;

    void add(const LogVal& t) {
        if (t.sign == 0) return;
        if (t.log - scale > 600.0) {
            const double f = std::exp(scale - t.log);
            acc *= f;
            comp *= f;
            scale = t.log;
        }
        const double v = t.sign * std::exp(t.log - scale);
        const double y = v - comp;
        const double s = acc + y;
        comp = (s - acc) - y;
        acc = s;
    }
    double scaled_mag(const LogVal& t) const {
        return t.sign == 0 ? 0.0 : std::exp(t.log - scale);
    }
    LogVal total() const {
        if (acc == 0.0) return LogVal::zero();
        return {scale + std::log(std::fabs(acc)), acc > 0.0 ? 1 : -1};
    }
};

} // namespace exthyp

#endif
