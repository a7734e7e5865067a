#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgraph/rational.hpp"

namespace sgraph {

/// A semiring is described by a stateless policy type: the carrier is
/// `value_type` and the operations are static members. `idempotent` is a
/// declared attribute, checked by sampling in the tests.
template <typename S>
concept Semiring = requires(const typename S::value_type& a, std::string_view text) {
  typename S::value_type;
  { S::name } -> std::convertible_to<std::string_view>;
  { S::idempotent } -> std::convertible_to<bool>;
  { S::zero() } -> std::same_as<typename S::value_type>;
  { S::one() } -> std::same_as<typename S::value_type>;
  { S::plus(a, a) } -> std::same_as<typename S::value_type>;
  { S::times(a, a) } -> std::same_as<typename S::value_type>;
  { S::is_zero(a) } -> std::same_as<bool>;
  { S::parse_label(text) } -> std::same_as<std::optional<typename S::value_type>>;
  { S::render(a) } -> std::same_as<std::string>;
  { S::to_json(a) } -> std::same_as<nlohmann::json>;
  { S::label_pool() } -> std::same_as<std::vector<typename S::value_type>>;
} && std::equality_comparable<typename S::value_type>;

/// Semiring with a closure operation satisfying star(a) = 1 + a * star(a).
template <typename S>
concept StarSemiring = Semiring<S> && requires(const typename S::value_type& a) {
  { S::star(a) } -> std::same_as<typename S::value_type>;
};

template <Semiring S>
using label_t = typename S::value_type;

/// Carrier of the trivial semiring.
struct Unit {
  friend constexpr bool operator==(Unit, Unit) = default;
  friend constexpr auto operator<=>(Unit, Unit) = default;
};

/// Trivial semiring, zero = one = ().
struct UnitSemiring {
  using value_type = Unit;
  static constexpr std::string_view name = "unit";
  static constexpr bool idempotent = true;

  static Unit zero() { return {}; }
  static Unit one() { return {}; }
  static Unit plus(Unit, Unit) { return {}; }
  static Unit times(Unit, Unit) { return {}; }
  static bool is_zero(Unit) { return true; }

  static std::optional<Unit> parse_label(std::string_view text) {
    if (text == "()") return Unit{};
    return std::nullopt;
  }
  static std::string render(Unit) { return "()"; }
  static nlohmann::json to_json(Unit) { return "()"; }
  static std::vector<Unit> label_pool() { return {Unit{}}; }
};

/// Boolean semiring: or, and, false, true.
struct BoolSemiring {
  using value_type = bool;
  static constexpr std::string_view name = "bool";
  static constexpr bool idempotent = true;

  static bool zero() { return false; }
  static bool one() { return true; }
  static bool plus(bool a, bool b) { return a || b; }
  static bool times(bool a, bool b) { return a && b; }
  static bool is_zero(bool a) { return !a; }
  static bool star(bool) { return true; }

  static std::optional<bool> parse_label(std::string_view text) {
    if (text == "true") return true;
    if (text == "false") return false;
    return std::nullopt;
  }
  static std::string render(bool a) { return a ? "true" : "false"; }
  static nlohmann::json to_json(bool a) { return a; }
  static std::vector<bool> label_pool() { return {false, true}; }
};

namespace detail {

inline nlohmann::json ext_rational_json(const ExtRational& a) {
  if (!a.is_infinite() && a.denominator() == 1) return a.numerator();
  return a.to_string();
}

inline std::vector<ExtRational> small_weight_pool() {
  return {ExtRational(0), ExtRational(1), ExtRational(2), ExtRational::infinity()};
}

}  // namespace detail

/// Min-plus semiring over non-negative rationals with infinity.
struct TropicalSemiring {
  using value_type = ExtRational;
  static constexpr std::string_view name = "tropical";
  static constexpr bool idempotent = true;

  static ExtRational zero() { return ExtRational::infinity(); }
  static ExtRational one() { return ExtRational(0); }
  static ExtRational plus(const ExtRational& a, const ExtRational& b) { return std::min(a, b); }
  static ExtRational times(const ExtRational& a, const ExtRational& b) { return a + b; }
  static bool is_zero(const ExtRational& a) { return a.is_infinite(); }
  // Weights are non-negative, so no loop ever shortens a path.
  static ExtRational star(const ExtRational&) { return one(); }

  static std::optional<ExtRational> parse_label(std::string_view text) { return ExtRational::parse(text); }
  static std::string render(const ExtRational& a) { return a.to_string(); }
  static nlohmann::json to_json(const ExtRational& a) { return detail::ext_rational_json(a); }
  static std::vector<ExtRational> label_pool() { return detail::small_weight_pool(); }
};

/// Max-min (bandwidth) semiring over non-negative rationals with infinity.
struct MaxMinSemiring {
  using value_type = ExtRational;
  static constexpr std::string_view name = "maxmin";
  static constexpr bool idempotent = true;

  static ExtRational zero() { return ExtRational(0); }
  static ExtRational one() { return ExtRational::infinity(); }
  static ExtRational plus(const ExtRational& a, const ExtRational& b) { return std::max(a, b); }
  static ExtRational times(const ExtRational& a, const ExtRational& b) { return std::min(a, b); }
  static bool is_zero(const ExtRational& a) { return !a.is_infinite() && a.numerator() == 0; }
  static ExtRational star(const ExtRational&) { return one(); }

  static std::optional<ExtRational> parse_label(std::string_view text) { return ExtRational::parse(text); }
  static std::string render(const ExtRational& a) { return a.to_string(); }
  static nlohmann::json to_json(const ExtRational& a) { return detail::ext_rational_json(a); }
  static std::vector<ExtRational> label_pool() { return detail::small_weight_pool(); }
};

/// Natural numbers under + and *. Not idempotent and has no star.
struct CountingSemiring {
  using value_type = std::uint64_t;
  static constexpr std::string_view name = "count";
  static constexpr bool idempotent = false;

  static std::uint64_t zero() { return 0; }
  static std::uint64_t one() { return 1; }
  static std::uint64_t plus(std::uint64_t a, std::uint64_t b) { return a + b; }
  static std::uint64_t times(std::uint64_t a, std::uint64_t b) { return a * b; }
  static bool is_zero(std::uint64_t a) { return a == 0; }

  static std::optional<std::uint64_t> parse_label(std::string_view text);
  static std::string render(std::uint64_t a) { return std::to_string(a); }
  static nlohmann::json to_json(std::uint64_t a) { return a; }
  static std::vector<std::uint64_t> label_pool() { return {0, 1, 2}; }
};

static_assert(StarSemiring<BoolSemiring>);
static_assert(StarSemiring<TropicalSemiring>);
static_assert(StarSemiring<MaxMinSemiring>);
static_assert(Semiring<UnitSemiring> && !StarSemiring<UnitSemiring>);
static_assert(Semiring<CountingSemiring> && !StarSemiring<CountingSemiring>);

template <Semiring S>
bool is_zero(const label_t<S>& x) {
  return S::is_zero(x);
}

template <StarSemiring S>
label_t<S> star(const label_t<S>& x) {
  return S::star(x);
}

/// Runtime name of a catalog semiring, as used on the command line.
enum class SemiringId { unit, boolean, tropical, maxmin, count };

inline constexpr SemiringId all_semirings[] = {SemiringId::unit, SemiringId::boolean, SemiringId::tropical,
                                               SemiringId::maxmin, SemiringId::count};

std::optional<SemiringId> semiring_from_name(std::string_view name);
std::string_view semiring_name(SemiringId id);
bool has_star(SemiringId id);
bool is_idempotent(SemiringId id);

/// Calls `f(std::type_identity<S>{})` with the policy type named by `id`.
template <typename F>
decltype(auto) dispatch(SemiringId id, F&& f) {
  switch (id) {
    case SemiringId::unit: return f(std::type_identity<UnitSemiring>{});
    case SemiringId::boolean: return f(std::type_identity<BoolSemiring>{});
    case SemiringId::tropical: return f(std::type_identity<TropicalSemiring>{});
    case SemiringId::maxmin: return f(std::type_identity<MaxMinSemiring>{});
    case SemiringId::count: break;
  }
  return f(std::type_identity<CountingSemiring>{});
}

}  // namespace sgraph
