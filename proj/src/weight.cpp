#include "bbapsp/weight.hpp"

#include <algorithm>
#include <charconv>
#include <system_error>

#include "bbapsp/errors.hpp"

namespace bbapsp {

std::string to_string(Weight w) {
  if (!w.is_finite()) return "inf";
  if (w.value() == 0.0) return "0";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w.value());
  return std::string(buf, ptr);
}

std::optional<Weight> parse_weight(std::string_view text) {
  if (text == "inf" || text == "+inf") return Weight::infinity();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  if (std::isnan(value) || std::isinf(value)) return std::nullopt;
  return Weight(value);
}

bool weights_match(Weight a, Weight b) noexcept {
  if (!a.is_finite() || !b.is_finite()) return a.is_finite() == b.is_finite();
  if (a.is_integral() && b.is_integral()) return a.value() == b.value();
  const double scale = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
  return std::abs(a.value() - b.value()) <= 1e-9 * scale;
}

std::string format_cycle(const std::vector<VertexId>& cycle) {
  std::string out;
  for (VertexId v : cycle) {
    out += std::to_string(v + 1);
    out += " -> ";
  }
  if (!cycle.empty()) out += std::to_string(cycle.front() + 1);
  return out;
}

}  // namespace bbapsp
