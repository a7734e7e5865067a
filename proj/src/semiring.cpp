#include "sgraph/semiring.hpp"

#include <charconv>

namespace sgraph {

std::optional<std::uint64_t> CountingSemiring::parse_label(std::string_view text) {
  std::uint64_t v = 0;
  if (text.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::optional<SemiringId> semiring_from_name(std::string_view name) {
  for (auto id : all_semirings)
    if (semiring_name(id) == name) return id;
  return std::nullopt;
}

std::string_view semiring_name(SemiringId id) {
  return dispatch(id, []<typename S>(std::type_identity<S>) { return std::string_view(S::name); });
}

bool has_star(SemiringId id) {
  return dispatch(id, []<typename S>(std::type_identity<S>) { return StarSemiring<S>; });
}

bool is_idempotent(SemiringId id) {
  return dispatch(id, []<typename S>(std::type_identity<S>) { return S::idempotent; });
}

}  // namespace sgraph
