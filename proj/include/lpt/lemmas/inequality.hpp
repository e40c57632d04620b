#ifndef LPT_LEMMAS_INEQUALITY_HPP
#define LPT_LEMMAS_INEQUALITY_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "lpt/checks.hpp"
#include "lpt/errors.hpp"

namespace lpt {

inline constexpr double kInequalityExponent = 0.8;

struct InequalityResult {
    double lhs = 0.0;  // max{0.9 x^r + c y_i^r, c sum y_i^r}
    double rhs = 0.0;  // c (x + sum y_i)^r
    bool holds = true;
};

inline InequalityResult inequality_check(double c, double x, const std::vector<double>& ys) {
    const double r = kInequalityExponent;
    if (!(c > 0.0 && c <= 0.18)) throw InputError("c must lie in (0, 0.18]");
    if (!(x >= 0.0) || !std::isfinite(x)) throw InputError("x must be a finite nonnegative real");
    if (ys.empty()) throw InputError("at least one y_i is required");
    for (double y : ys)
        if (!(y >= 0.0) || !std::isfinite(y)) throw InputError("every y_i must be a finite nonnegative real");
    InequalityResult res;
    double sum_pow = 0.0, total = x;
    for (double y : ys) {
        res.lhs = std::max(res.lhs, 0.9 * std::pow(x, r) + c * std::pow(y, r));
        sum_pow += std::pow(y, r);
        total += y;
    }
    res.lhs = std::max(res.lhs, c * sum_pow);
    res.rhs = c * std::pow(total, r);
    res.holds = ge_with_slack(res.lhs, res.rhs);
    check_ge("inequality", res.lhs, res.rhs, [&] {
        std::string w = "c=" + std::to_string(c) + " x=" + std::to_string(x) + " y=";
        for (double y : ys) w += std::to_string(y) + ",";
        return w;
    });
    return res;
}

}  // namespace lpt

#endif  // LPT_LEMMAS_INEQUALITY_HPP
