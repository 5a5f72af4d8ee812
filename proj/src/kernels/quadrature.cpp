#include "insider/kernels/quadrature.hpp"

#include <cmath>

namespace insider {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    long evals = 0;
    long max_evals = 2000000;
    bool converged = true;

    double eval(double x) {
        ++evals;
        return f(x);
    }
};

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(SimpsonState& st, double a, double b, double fa, double fm, double fb, double whole,
               double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = st.eval(lm), frm = st.eval(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || m <= a || m >= b)
        return left + right + delta / 15.0;
    if (depth <= 0 || st.evals > st.max_evals) {
        st.converged = false;
        return left + right + delta / 15.0;
    }
    return recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_integral(const std::function<double(double)>& f, double a, double b,
                         double abs_tol, bool singular_endpoint) {
    if (!(abs_tol > 0.0)) throw std::domain_error("adaptive_integral: abs_tol must be > 0");
    if (a == b) return 0.0;
    double bb = b;
    if (singular_endpoint) {
        // Step just inside; the missed sliver is O(width * |f|) at scale 1e-14.
        const double width = std::abs(b - a);
        bb = b - 1e-14 * width;
        if (bb <= a) return 0.0;
    }
    SimpsonState st{f};
    const double fa = st.eval(a);
    const double fb = st.eval(bb);
    const double fm = st.eval(0.5 * (a + bb));
    const double whole = simpson(fa, fm, fb, a, bb);
    const int max_depth = singular_endpoint ? 72 : 48;
    const double result = recurse(st, a, bb, fa, fm, fb, whole, abs_tol, max_depth);
    if (!st.converged)
        throw ConvergenceError("adaptive_integral: tolerance not met within subdivision budget", result);
    return result;
}

}  // namespace insider
