#pragma once

namespace insider {

// Integer order for the modified Bessel function I_n. Negative orders are
// folded with I_{-n} = I_n before evaluation, so the stored order is >= 0.
struct BesselOrder {
    unsigned n;

    static BesselOrder of(int m) { return BesselOrder{m < 0 ? unsigned(-long(m)) : unsigned(m)}; }
};

// log I_n(x) for x >= 0. Power series below x = 15, a normalized downward
// recurrence (I_0 + 2 sum_k I_k = e^x) above. Does not overflow for x <= 1e4.
double bessel_log_i(BesselOrder order, double x);
double bessel_log_i(int order, double x);

// I_n(x). Relative accuracy ~1e-13 for x <= 100.
double bessel_i(BesselOrder order, double x);
double bessel_i(int order, double x);

// I_a(x) / I_b(x), evaluated as exp(log I_a - log I_b).
double bessel_ratio(int a, int b, double x);

}  // namespace insider
