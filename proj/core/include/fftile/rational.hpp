#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "fftile/error.hpp"

namespace fftile {

/// Exact rational arithmetic. All analytic quantities in the library
/// (spectra, densities, variances) are rationals or cyclotomic numbers
/// with rational coefficients; nothing is ever rounded.
using BigRational = mpq_class;

/// Parses "a/b" or "a" with optional sign. Throws ParseError on anything
/// else, including a zero denominator.
BigRational parse_rational(std::string_view text);

/// Lowest terms with positive denominator. GMP arithmetic presumes
/// canonical operands, so values built from raw numerator/denominator
/// pairs pass through here at library entry points.
BigRational canonical_rational(BigRational q);

/// Always renders as "num/den" in lowest terms with den > 0.
std::string format_rational(const BigRational& q);

bool is_integral(const BigRational& q);

}  // namespace fftile
