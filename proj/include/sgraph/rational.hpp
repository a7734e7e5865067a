#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sgraph {

/// Non-negative rational number extended with a distinguished infinity.
///
/// Carrier of the tropical and bandwidth semirings. Arithmetic is exact so
/// that law checks can compare values with `==`.
class ExtRational {
public:
  constexpr ExtRational() = default;
  ExtRational(std::int64_t numerator, std::int64_t denominator = 1);

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);

  friend bool operator==(const ExtRational& a, const ExtRational& b) = default;
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  /// Parses `inf`, a non-negative decimal (`3`, `1.25`) or a fraction (`7/3`).
  static std::optional<ExtRational> parse(std::string_view text);

  /// Integers print bare, terminating fractions as decimals, others as `p/q`.
  std::string to_string() const;

private:
  bool infinite_ = false;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace sgraph
