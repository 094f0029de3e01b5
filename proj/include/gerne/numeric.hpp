#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gerne {

// log(sum(exp(v))) with max-shift.
double log_sum_exp(std::span<const double> v);

double mean(std::span<const double> v);

// Unbiased sample variance.
double variance(std::span<const double> v);

// Standard error of the sample variance, using the fourth central moment:
//   SE(s^2) = sqrt((m4 - s^4 (n-3)/(n-1)) / n)
double variance_standard_error(std::span<const double> v);

// Regularized lower incomplete gamma P(a, x); Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_p_value(double statistic, double df);

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

// Little-endian doubles <-> base64, used by model checkpoints.
std::string doubles_to_base64(std::span<const double> values);
std::vector<double> base64_to_doubles(const std::string& text);

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace gerne
