#include "ylat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace ylat {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1] (QUADPACK dqk15).
constexpr double kronrod_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kronrod_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double fc = f(center);
    double gauss = gauss_weights[3] * fc;
    double kron = kronrod_weights[7] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = half * kronrod_nodes[i];
        double fsum = f(center - dx) + f(center + dx);
        kron += kronrod_weights[i] * fsum;
        if (i % 2 == 1) gauss += gauss_weights[i / 2] * fsum;
    }
    gauss *= half;
    kron *= half;
    return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_segments) {
    std::priority_queue<Segment> queue;
    queue.push(evaluate(f, a, b));
    int segments = 1;
    double total_value = queue.top().value;
    double total_error = queue.top().error;
    while (total_error > abs_tol && segments < max_segments) {
        Segment worst = queue.top();
        queue.pop();
        total_value -= worst.value;
        total_error -= worst.error;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureError("quadrature did not converge: interval exhausted");
        Segment left = evaluate(f, worst.a, mid);
        Segment right = evaluate(f, mid, worst.b);
        queue.push(left);
        queue.push(right);
        ++segments;
        total_value += left.value + right.value;
        total_error += left.error + right.error;
    }
    if (total_error > abs_tol)
        throw QuadratureError("quadrature did not converge within the segment budget");
    return {total_value, total_error, segments};
}

}  // namespace ylat
