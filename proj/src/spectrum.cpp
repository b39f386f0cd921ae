#include "distspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "distspec/errors.hpp"

namespace distspec {

namespace {

bool strictly_greater(const SpectrumEntry& x, const SpectrumEntry& y) {
  if (x.exact && y.exact) return *x.exact > *y.exact;
  return x.value > y.value;
}

bool same_value(const SpectrumEntry& x, const SpectrumEntry& y) {
  if (x.exact && y.exact) return *x.exact == *y.exact;
  const double scale = std::max({1.0, std::abs(x.value), std::abs(y.value)});
  return std::abs(x.value - y.value) <= 1e-12 * scale;
}

double round_to_12_digits(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  double out = std::strtod(buffer, nullptr);
  return out == 0.0 ? 0.0 : out;  // no "-0"
}

}  // namespace

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].multiplicity <= 0) {
      throw InvalidArgument("spectrum entry " + std::to_string(i) + " has non-positive multiplicity");
    }
    if (entries_[i].exact) entries_[i].value = entries_[i].exact->to_double();
    if (i > 0 && !strictly_greater(entries_[i - 1], entries_[i])) {
      throw InvalidArgument("spectrum values must be strictly decreasing (entry " + std::to_string(i) + ")");
    }
  }
}

Spectrum Spectrum::from_multiset(std::vector<SpectrumEntry> entries) {
  std::erase_if(entries, [](const SpectrumEntry& e) { return e.multiplicity == 0; });
  for (auto& e : entries) {
    if (e.multiplicity < 0) throw InvalidArgument("negative multiplicity in spectrum");
    if (e.exact) e.value = e.exact->to_double();
  }
  std::stable_sort(entries.begin(), entries.end(), strictly_greater);
  std::vector<SpectrumEntry> merged;
  for (auto& e : entries) {
    if (!merged.empty() && same_value(merged.back(), e)) {
      merged.back().multiplicity += e.multiplicity;
      if (!merged.back().exact && e.exact) {
        merged.back().exact = e.exact;
        merged.back().value = e.value;
      }
    } else {
      merged.push_back(std::move(e));
    }
  }
  return Spectrum(std::move(merged));
}

std::int64_t Spectrum::dimension() const {
  std::int64_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

bool Spectrum::all_exact() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.exact.has_value(); });
}

std::optional<QuadraticNumber> Spectrum::exact_trace() const {
  if (!all_exact()) return std::nullopt;
  // Mixed radicands cannot be summed in one QuadraticNumber.
  try {
    QuadraticNumber sum;
    for (const auto& e : entries_) sum += *e.exact * QuadraticNumber(e.multiplicity);
    return sum;
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

double Spectrum::trace() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.value * static_cast<double>(e.multiplicity);
  return sum;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  return out;
}

Spectrum cluster_to_spectrum(const std::vector<double>& descending, double cluster_tol) {
  if (!(cluster_tol > 0.0)) throw InvalidArgument("cluster tolerance must be positive");
  std::vector<SpectrumEntry> entries;
  double sum = 0.0;
  std::int64_t count = 0;
  for (std::size_t i = 0; i < descending.size(); ++i) {
    if (i > 0 && descending[i] > descending[i - 1]) {
      throw InvalidArgument("eigenvalues must be sorted in descending order");
    }
    if (count > 0 && descending[i - 1] - descending[i] > cluster_tol) {
      entries.push_back({sum / static_cast<double>(count), std::nullopt, count});
      sum = 0.0;
      count = 0;
    }
    sum += descending[i];
    ++count;
  }
  if (count > 0) entries.push_back({sum / static_cast<double>(count), std::nullopt, count});
  return Spectrum(std::move(entries));
}

double max_value_deviation(const Spectrum& a, const Spectrum& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].multiplicity != y[i].multiplicity) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(x[i].value - y[i].value));
  }
  return worst;
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
  return a.dimension() == b.dimension() && max_value_deviation(a, b) < tol;
}

nlohmann::json to_json(const Spectrum& s) {
  nlohmann::json eigs = nlohmann::json::array();
  for (const auto& e : s.entries()) {
    eigs.push_back({{"value", round_to_12_digits(e.value)},
                    {"exact", e.exact ? nlohmann::json(e.exact->to_string()) : nlohmann::json(nullptr)},
                    {"mult", e.multiplicity}});
  }
  return {{"n", s.dimension()}, {"eigs", eigs}};
}

QuadraticNumber parse_quadratic(const std::string& text) {
  auto rational = [&text](const std::string& part) {
    try {
      return BigRational(part);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse exact value \"" + text + "\"");
    }
  };
  const auto surd = text.find("*sqrt(");
  if (surd == std::string::npos) return QuadraticNumber(rational(text));
  if (text.back() != ')') throw InvalidArgument("cannot parse exact value \"" + text + "\"");
  const auto split = text.find_last_of("+-", surd);
  if (split == std::string::npos || split == 0) throw InvalidArgument("cannot parse exact value \"" + text + "\"");
  const BigRational a = rational(text.substr(0, split));
  BigRational b = rational(text.substr(split + 1, surd - split - 1));
  if (text[split] == '-') b = -b;
  const std::string radicand = text.substr(surd + 6, text.size() - surd - 7);
  try {
    return QuadraticNumber::make(a, b, BigInt(radicand));
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse exact value \"" + text + "\"");
  }
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
  std::vector<SpectrumEntry> entries;
  try {
    for (const auto& e : j.at("eigs")) {
      SpectrumEntry entry;
      entry.value = e.at("value").get<double>();
      entry.multiplicity = e.at("mult").get<std::int64_t>();
      if (e.contains("exact") && !e.at("exact").is_null()) {
        entry.exact = parse_quadratic(e.at("exact").get<std::string>());
      }
      entries.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed spectrum JSON: ") + ex.what());
  }
  Spectrum out(std::move(entries));
  if (j.contains("n") && j.at("n").get<std::int64_t>() != out.dimension()) {
    throw InvalidArgument("spectrum JSON: \"n\" does not match the multiplicity sum");
  }
  return out;
}

}  // namespace distspec
