#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace entloc {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int evals = 0;
};

// Derivative-free simplex maximization. Stops when the simplex value spread
// drops below `tol` or after `max_evals` objective evaluations. The returned
// value is always one the objective actually produced at the returned point.
inline NelderMeadResult nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                                             std::vector<double> x0, double step, int max_evals,
                                             double tol) {
    const std::size_t d = x0.size();
    struct Vertex {
        std::vector<double> x;
        double v;
    };
    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };

    std::vector<Vertex> simplex;
    simplex.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> x = x0;
        x[i] += step;
        simplex.push_back({x, eval(x)});
    }

    auto by_value_desc = [](const Vertex& a, const Vertex& b) { return a.v > b.v; };
    while (evals < max_evals) {
        std::sort(simplex.begin(), simplex.end(), by_value_desc);
        if (simplex.front().v - simplex.back().v < tol) break;

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[i].x[k];
        }
        for (double& c : centroid) c /= static_cast<double>(d);

        auto affine = [&](double t) {
            std::vector<double> x(d);
            for (std::size_t k = 0; k < d; ++k)
                x[k] = centroid[k] + t * (simplex.back().x[k] - centroid[k]);
            return x;
        };

        const std::vector<double> xr = affine(-1.0);
        const double vr = eval(xr);
        if (vr > simplex.front().v) {
            const std::vector<double> xe = affine(-2.0);
            const double ve = eval(xe);
            if (ve > vr)
                simplex.back() = {xe, ve};
            else
                simplex.back() = {xr, vr};
        } else if (vr > simplex[d - 1].v) {
            simplex.back() = {xr, vr};
        } else {
            const std::vector<double> xc = affine(0.5);
            const double vc = eval(xc);
            if (vc > simplex.back().v) {
                simplex.back() = {xc, vc};
            } else {
                for (std::size_t i = 1; i <= d; ++i) {
                    for (std::size_t k = 0; k < d; ++k)
                        simplex[i].x[k] = simplex[0].x[k] + 0.5 * (simplex[i].x[k] - simplex[0].x[k]);
                    simplex[i].v = eval(simplex[i].x);
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_value_desc);
    return {simplex.front().x, simplex.front().v, evals};
}

}  // namespace entloc
