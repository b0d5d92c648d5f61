#pragma once

// Exact counts of partitions p(N) and plane partitions pp(N) with big
// integers, brute-force enumerators used as oracles, and the log-count vs.
// leading-exponent reports.

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wulffnt/special_fns.hpp"

namespace wulffnt {

using BigInt = boost::multiprecision::cpp_int;

enum class CountKind { young, skyscraper };

inline std::string to_string(CountKind k) { return k == CountKind::young ? "young" : "skyscraper"; }

struct CountTable {
  CountKind kind;
  std::vector<BigInt> values;  // values[n] for n = 0..Nmax

  std::size_t max_n() const { return values.empty() ? 0 : values.size() - 1; }
};

/// p(0..nmax) by Euler's pentagonal recurrence.
inline CountTable partition_table(std::size_t nmax) {
  CountTable t{CountKind::young, std::vector<BigInt>(nmax + 1)};
  t.values[0] = 1;
  for (std::size_t n = 1; n <= nmax; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      BigInt term = t.values[n - g1];
      if (g2 <= n) term += t.values[n - g2];
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    t.values[n] = std::move(acc);
  }
  return t;
}

/// pp(0..nmax) from n pp(n) = sum_{k=1..n} sigma2(k) pp(n - k). Every
/// division by n is checked to be exact.
inline CountTable plane_partition_table(std::size_t nmax) {
  CountTable t{CountKind::skyscraper, std::vector<BigInt>(nmax + 1)};
  t.values[0] = 1;
  std::vector<std::uint64_t> s2(nmax + 1, 0);
  for (std::size_t k = 1; k <= nmax; ++k) s2[k] = sigma2(k);
  for (std::size_t n = 1; n <= nmax; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += t.values[n - k] * s2[k];
    BigInt q, r;
    boost::multiprecision::divide_qr(acc, BigInt(n), q, r);
    if (r != 0) throw std::logic_error("plane_partition_table: inexact division at n = " + std::to_string(n));
    t.values[n] = std::move(q);
  }
  return t;
}

/// Counts nonincreasing sequences summing to n by explicit enumeration.
inline BigInt brute_force_partitions(int n) {
  if (n < 0 || n > 60) throw std::domain_error("brute_force_partitions: n must lie in [0, 60]");
  std::uint64_t count = 0;
  std::function<void(int, int)> walk = [&](int remaining, int largest) {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) walk(remaining - part, part);
  };
  walk(n, n);
  return count;
}

/// Counts arrays nonincreasing along rows and columns summing to n. Rows are
/// built one at a time, each bounded entrywise by the row above.
inline BigInt brute_force_plane_partitions(int n) {
  if (n < 0 || n > 12) throw std::domain_error("brute_force_plane_partitions: n must lie in [0, 12]");
  std::uint64_t count = 0;
  std::function<void(int, const std::vector<int>&)> next_row;
  std::function<void(int, const std::vector<int>&, std::vector<int>&, int)> fill;
  next_row = [&](int remaining, const std::vector<int>& above) {
    if (remaining == 0) {
      ++count;
      return;
    }
    std::vector<int> row;
    fill(remaining, above, row, 0);
  };
  // Extend `row` at position `pos`; every nonempty row is a candidate.
  fill = [&](int remaining, const std::vector<int>& above, std::vector<int>& row, int used) {
    const std::size_t pos = row.size();
    if (!row.empty()) next_row(remaining - used, row);
    if (pos >= above.size()) return;
    const int cap = std::min({above[pos], remaining - used, pos == 0 ? remaining : row.back()});
    for (int v = 1; v <= cap; ++v) {
      row.push_back(v);
      fill(remaining, above, row, used + v);
      row.pop_back();
    }
  };
  next_row(n, std::vector<int>(static_cast<std::size_t>(n), n));
  return count;
}

/// Natural log of a positive big integer from its bit length and top 64 bits.
inline double log_bigint(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_bigint: argument must be positive");
  const std::size_t msb = boost::multiprecision::msb(x);
  if (msb < 64) return std::log(x.convert_to<double>());
  const std::size_t shift = msb - 63;
  const std::uint64_t top = static_cast<std::uint64_t>(x >> shift);
  return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::log(2.0);
}

struct AsymptoticsRow {
  std::size_t n;
  double log_count;
  double predicted;
  double ratio;
};

struct AsymptoticsReport {
  CountKind kind;
  std::vector<AsymptoticsRow> rows;
};

/// Leading exponent pi sqrt(2/3) N^(1/2) or 3 (zeta(3)/4)^(1/3) N^(2/3).
inline double predicted_exponent(CountKind kind, std::size_t n) {
  const double x = static_cast<double>(n);
  return kind == CountKind::young ? constants::young_exponent * std::sqrt(x)
                                  : constants::skyscraper_exponent * std::cbrt(x * x);
}

inline AsymptoticsReport asymptotic_report(CountKind kind, const std::vector<std::size_t>& ns,
                                           const CountTable& table) {
  if (table.kind != kind) throw std::domain_error("asymptotic_report: table kind does not match");
  AsymptoticsReport report{kind, {}};
  for (std::size_t n : ns) {
    if (n == 0) throw std::out_of_range("asymptotic_report: N must be positive");
    if (n > table.max_n()) throw std::out_of_range("asymptotic_report: N beyond the table");
    const double lc = log_bigint(table.values[n]);
    const double pred = predicted_exponent(kind, n);
    report.rows.push_back({n, lc, pred, lc / pred});
  }
  return report;
}

}  // namespace wulffnt
