#ifndef OMT_SIM_NORMAL_HPP
#define OMT_SIM_NORMAL_HPP

namespace omt {

// Standard normal CDF Phi(x).
double normal_cdf(double x);

// Standard normal quantile Phi^{-1}(p) for p in (0,1); Wichura's AS 241
// (PPND16), accurate to about 1e-15 relative error. Throws
// std::invalid_argument outside (0,1).
double normal_quantile(double p);

} // namespace omt

#endif // OMT_SIM_NORMAL_HPP
