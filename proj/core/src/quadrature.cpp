// SPDX-License-Identifier: Apache-2.0
#include "jsl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace jsl {

namespace {

// Gauss-Kronrod 15-point pair on [-1, 1]. Abscissae/weights from the
// standard QUADPACK tables; Gauss-7 nodes are the odd-indexed Kronrod nodes.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double a, b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate_segment(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double kronrod = kKronrodWeights[7] * f(center);
    double gauss = kGaussWeights[3] * f(center);
    for (int i = 0; i < 7; ++i) {
        const double offset = half * kKronrodNodes[i];
        const double pair_sum = f(center - offset) + f(center + offset);
        kronrod += kKronrodWeights[i] * pair_sum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair_sum;
    }
    kronrod *= half;
    gauss *= half;

    const double diff = std::abs(kronrod - gauss);
    // QUADPACK-style sharpened error estimate.
    const double error = diff > 0.0 ? diff * std::min(1.0, std::pow(200.0 * diff, 1.5))
                                    : 0.0;
    return {a, b, kronrod, std::max(error, diff * 1e-12)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol, int max_segments) {
    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }

    std::priority_queue<Segment> queue;
    Segment first = evaluate_segment(f, a, b);
    result.evaluations = 15;
    double total_value = first.value;
    double total_error = first.error;
    queue.push(first);

    int segments = 1;
    while (segments < max_segments) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total_value));
        if (total_error <= tol) break;

        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = evaluate_segment(f, worst.a, mid);
        Segment right = evaluate_segment(f, mid, worst.b);
        result.evaluations += 30;

        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++segments;
    }

    result.value = total_value;
    result.error_estimate = total_error;
    result.converged =
        total_error <= std::max(abs_tol, rel_tol * std::abs(total_value));
    return result;
}

double integrate_value(const std::function<double(double)>& f, double a, double b,
                       double abs_tol, double rel_tol) {
    return integrate(f, a, b, abs_tol, rel_tol).value;
}

}  // namespace jsl
