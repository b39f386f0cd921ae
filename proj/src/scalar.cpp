#include "distspec/scalar.hpp"

#include <limits>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "distspec/errors.hpp"

namespace distspec {

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Small arguments come from a shared Pascal triangle.
  constexpr std::int64_t kCachedRows = 256;
  if (n < kCachedRows) {
    static std::mutex guard;
    static std::vector<std::vector<BigInt>> rows;
    std::lock_guard lock(guard);
    while (static_cast<std::int64_t>(rows.size()) <= n) {
      const std::size_t m = rows.size();
      std::vector<BigInt> row(m + 1, BigInt(1));
      for (std::size_t j = 1; j < m; ++j) row[j] = rows[m - 1][j - 1] + rows[m - 1][j];
      rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt pow_int(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

}  // namespace distspec
