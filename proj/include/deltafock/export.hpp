#ifndef DELTAFOCK_EXPORT_HPP
#define DELTAFOCK_EXPORT_HPP

#include "deltafock/deformation.hpp"
#include "deltafock/verify.hpp"

#include <span>
#include <string>

namespace deltafock {

enum class Format { text, csv, json };

enum class GramChoice { exact, recurrence, both };

enum class LimitQuantity { hermite, kernel, vacuum_norm, gaussian };

/// "%.17g"
std::string format_double(double value);

/// Coefficients of H_s by recurrence and closed form next to the classical H_s.
std::string export_hermite(const DeformationParam& params, int s, Format format);

/// Gram entries as coeff * sqrt(radicand) * sqrt(s_max/pi). With GramChoice::both,
/// *all_match reports whether the two routes agree entrywise.
std::string export_gram(const DeformationParam& params, GramChoice choice, Format format, bool* all_match = nullptr);

/// Wavefunction samples on sample_count equispaced points of [-pi/delta, pi/delta].
std::string export_states(const DeformationParam& params, int sample_count, Format format);

/// hermite_power is only used by LimitQuantity::hermite.
std::string export_limit(LimitQuantity quantity, std::span<const int> s_max_list, Format format, int hermite_power = 4);

std::string export_report(const RunReport& report, Format format);

} // namespace deltafock

#endif // DELTAFOCK_EXPORT_HPP
