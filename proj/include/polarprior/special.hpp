#pragma once

namespace polarprior {

/// Modified Bessel function of the second kind K_nu(x), nu > 0, x > 0.
/// Throws DomainError for invalid arguments, Overflow / Underflow when the
/// value is not representable as a normal double.
double bessel_k(double nu, double x);

/// log K_nu(x); finite wherever the arguments are valid, including regions
/// where K_nu(x) itself over- or underflows.
double log_bessel_k(double nu, double x);

double normal_cdf(double x);
double log_normal_cdf(double x);
/// phi(x) / Phi(x), stable in both tails.
double normal_mills_ratio(double x);

double log_gamma_fn(double x);
double digamma(double x);
double log_beta_fn(double a, double b);

}  // namespace polarprior
