#pragma once

// Spectra as multisets of (value, multiplicity), and the numeric pipeline
// that produces them from a symmetric matrix.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "distspec/distance.hpp"
#include "distspec/quadratic.hpp"

namespace distspec {

struct SpectrumEntry {
  double value = 0.0;
  std::optional<QuadraticNumber> exact;
  std::int64_t multiplicity = 1;

  static SpectrumEntry of(const QuadraticNumber& exact_value, std::int64_t multiplicity) {
    return {exact_value.to_double(), exact_value, multiplicity};
  }
};

/// Eigenvalue multiset sorted by value, strictly decreasing.
class Spectrum {
 public:
  Spectrum() = default;

  /// Entries must already be strictly decreasing with positive
  /// multiplicities; throws InvalidArgument otherwise.
  explicit Spectrum(std::vector<SpectrumEntry> entries);

  /// Sorts, drops zero multiplicities and merges equal values. Two exact
  /// values merge only when equal; a float merges with a neighbour within
  /// 1e-12 relative distance.
  static Spectrum from_multiset(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::size_t distinct_count() const { return entries_.size(); }
  std::int64_t dimension() const;
  const SpectrumEntry& largest() const { return entries_.front(); }
  bool all_exact() const;

  /// Sum of value * multiplicity; exact when every value is exact.
  std::optional<QuadraticNumber> exact_trace() const;
  double trace() const;

  /// One value per eigenvalue, descending (multiplicities expanded).
  std::vector<double> expanded() const;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Merges adjacent values of a descending list that lie within cluster_tol
/// of their neighbour; the representative is the cluster mean.
Spectrum cluster_to_spectrum(const std::vector<double>& descending, double cluster_tol);

/// Same dimension, same multiplicity sequence, and value differences < tol.
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol);

/// Largest |a_i - b_i| over aligned entries, or +inf when the multiplicity
/// structure differs.
double max_value_deviation(const Spectrum& a, const Spectrum& b);

/// {"n": int, "eigs": [{"value": float, "exact": "a+b*sqrt(d)" | null, "mult": int}]}
/// Values are rounded to 12 significant digits.
nlohmann::json to_json(const Spectrum& s);
/// Reads the JSON form; exact strings are parsed back into QuadraticNumber.
Spectrum spectrum_from_json(const nlohmann::json& j);

/// Parses the to_string() form of a QuadraticNumber.
QuadraticNumber parse_quadratic(const std::string& text);

}  // namespace distspec
