#pragma once

#include <utility>

namespace wrange::detail {

inline constexpr double golden_inv = 0.61803398874989484820;  // 1/phi

/// Golden-section maximization of f on [a, b], contracting until
/// b - a <= width. Every evaluation updates (best_x, best_f), so the caller
/// keeps the best point seen even when f is not unimodal on the bracket.
template <class F>
void golden_max(F&& f, double a, double b, double width, double& best_x, double& best_f) {
    auto consider = [&](double x, double fx) {
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    };
    double c = b - (b - a) * golden_inv;
    double d = a + (b - a) * golden_inv;
    double fc = f(c);
    consider(c, fc);
    double fd = f(d);
    consider(d, fd);
    while (b - a > width) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * golden_inv;
            fc = f(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * golden_inv;
            fd = f(d);
            consider(d, fd);
        }
    }
}

/// Golden-section minimization with the same best-seen tracking.
template <class F>
void golden_min(F&& f, double a, double b, double width, double& best_x, double& best_f) {
    auto consider = [&](double x, double fx) {
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    };
    double c = b - (b - a) * golden_inv;
    double d = a + (b - a) * golden_inv;
    double fc = f(c);
    consider(c, fc);
    double fd = f(d);
    consider(d, fd);
    while (b - a > width) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * golden_inv;
            fc = f(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * golden_inv;
            fd = f(d);
            consider(d, fd);
        }
    }
}

}  // namespace wrange::detail
