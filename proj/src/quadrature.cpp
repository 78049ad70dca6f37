#include "cqed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "cqed/errors.hpp"

namespace cqed {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK constants)
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - hw * kXgk[i]);
        fv[14 - i] = f(c + hw * kXgk[i]);
    }
    fv[7] = f(c);
    double kron = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kron *= hw;
    gauss *= hw;
    return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals) {
    if (a == b) return {0.0, 0.0, 0};
    std::priority_queue<Segment> queue;
    queue.push(gauss_kronrod(f, a, b));
    double total = queue.top().value;
    double total_err = queue.top().error;
    int n = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (n >= max_intervals)
            throw convergence_error("adaptive_integrate: interval budget exhausted with error " +
                                    std::to_string(total_err));
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gauss_kronrod(f, worst.a, mid);
        Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++n;
    }
    return {total, total_err, n};
}

}  // namespace cqed
