#pragma once

namespace insider {

double norm_pdf(double x);

// Phi(x) = erfc(-x/sqrt(2))/2; relative error of the erfc kernel is a few ulp.
double norm_cdf(double x);

// Inverse of norm_cdf on (0,1). Acklam's rational initial guess polished by
// two Halley steps against norm_cdf, giving ~1e-15 relative accuracy.
double norm_quantile(double p);

}  // namespace insider
