#include "sgraph/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sgraph {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("ExtRational: overflow");
  return static_cast<std::int64_t>(v);
}

std::optional<std::int64_t> parse_digits(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

}  // namespace

ExtRational::ExtRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("ExtRational: zero denominator");
  if (numerator < 0 || denominator < 0) throw std::invalid_argument("ExtRational: negative value");
  const auto g = std::gcd(numerator, denominator);
  num_ = g == 0 ? 0 : numerator / g;
  den_ = g == 0 ? 1 : denominator / g;
  if (num_ == 0) den_ = 1;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return ExtRational::infinity();
  const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  const __int128 d = static_cast<__int128>(a.den_) * b.den_;
  // Reduce in 128 bits before narrowing.
  __int128 x = n, y = d;
  while (y != 0) {
    const __int128 t = x % y;
    x = y;
    y = t;
  }
  if (x == 0) x = 1;
  return ExtRational(checked(n / x), checked(d / x));
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::optional<ExtRational> ExtRational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = parse_digits(text.substr(0, slash));
    auto q = parse_digits(text.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return ExtRational(*p, *q);
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    auto p = parse_digits(text);
    if (!p) return std::nullopt;
    return ExtRational(*p);
  }
  auto whole = parse_digits(text.substr(0, dot));
  auto frac_text = text.substr(dot + 1);
  auto frac = parse_digits(frac_text);
  if (!whole || !frac || frac_text.size() > 18) return std::nullopt;
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_text.size(); ++i) scale *= 10;
  return ExtRational(checked(static_cast<__int128>(*whole) * scale + *frac), scale);
}

std::string ExtRational::to_string() const {
  if (infinite_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  // Terminating iff the reduced denominator has no prime factors besides 2 and 5.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  const int digits = std::max(twos, fives);
  __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const __int128 scaled = static_cast<__int128>(num_) * (scale / den_);
  const auto whole = static_cast<std::int64_t>(scaled / scale);
  auto frac = std::to_string(static_cast<std::int64_t>(scaled % scale));
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return std::to_string(whole) + "." + frac;
}

}  // namespace sgraph
