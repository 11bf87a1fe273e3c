#pragma once

#include <optional>

#include "wordmorph/words.hpp"

namespace wordmorph {

/// The ultimately periodic sequence u v v v ...
struct PeriodicForm {
  Word preperiod;  // u
  Word period;     // v, nonempty

  friend bool operator==(const PeriodicForm&, const PeriodicForm&) = default;
};

/// Finds the lexicographically least (|u|, |v|) with |u| <= max_preperiod and
/// 1 <= |v| <= max_period such that w = u v^m (prefix of v) exactly; absent if
/// none. A hit certifies only consistency with this finite prefix, never
/// periodicity of the underlying infinite sequence.
inline std::optional<PeriodicForm> bounded_period_check(const Word& w,
                                                        std::size_t max_preperiod,
                                                        std::size_t max_period) {
  std::optional<std::pair<std::size_t, std::size_t>> best;  // (|u|, |v|)
  for (std::size_t v_len = 1; v_len <= max_period; ++v_len) {
    // minimal preperiod for this period: everything past the last mismatch
    // at distance v_len must repeat
    std::size_t u_min = 0;
    for (std::size_t i = w.size(); i-- > v_len;) {
      if (!(w[i] == w[i - v_len])) {
        u_min = i - v_len + 1;
        break;
      }
    }
    if (u_min > max_preperiod) continue;
    if (u_min + v_len > w.size()) continue;  // cannot exhibit a full period
    if (!best || u_min < best->first) best = {u_min, v_len};
  }
  if (!best) return std::nullopt;
  return PeriodicForm{w.subword(0, best->first),
                      w.subword(best->first, best->first + best->second)};
}

}  // namespace wordmorph
