#pragma once

#include <functional>
#include <stdexcept>

namespace insider {

// Raised when the subdivision budget is exhausted before the requested
// tolerance is met; carries the best available estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

// Adaptive Simpson quadrature of f over [a,b] to absolute tolerance abs_tol.
// With singular_endpoint the right endpoint is never evaluated (the interval
// is clipped just inside b) and refinement may recurse much deeper there,
// accommodating integrable log-type blowups.
double adaptive_integral(const std::function<double(double)>& f, double a, double b,
                         double abs_tol = 1e-8, bool singular_endpoint = false);

}  // namespace insider
