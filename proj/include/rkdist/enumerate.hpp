#pragma once

// Enumeration, up to isomorphism, of admissible profiles with a given
// number of countable models.
//
// A profile with total I has n <= I vertices split into k classes. The
// class poset is bounded (least and greatest class), so it is a poset on
// k - 2 middle classes with a bottom and a top attached. Middle posets are
// generated level by level: every poset on m + 1 points arises from one on
// m points by adding a maximal point over an order ideal, and each level is
// reduced by canonical form. Class sizes and limit counts are then
// distributed subject to V2, V4 and V5, and results are deduplicated by
// canonical text.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rkdist/canonical.hpp"
#include "rkdist/core.hpp"

namespace rkdist {

struct EnumerationResult {
  Count total = 0;
  std::vector<CanonicalProfile> profiles;  // sorted by canonical_text
};

inline constexpr Count kDefaultMaxTotal = 12;

namespace detail {

/// Strict order on m points, row-major m*m.
struct PlainPoset {
  std::size_t size = 0;
  std::vector<std::uint8_t> below;

  bool less(std::size_t x, std::size_t y) const { return below[x * size + y] != 0; }
};

inline PlainPoset canonical_poset(const PlainPoset& p) {
  ColoredOrder g;
  g.colors.assign(p.size, {0, 0});
  g.below = p.below;
  const auto seq = canonical_sequence(g);
  PlainPoset out{p.size, std::vector<std::uint8_t>(p.size * p.size, 0)};
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j) out.below[i * p.size + j] = p.below[seq[i] * p.size + seq[j]];
  return out;
}

/// All posets on 0..max_size points up to isomorphism, indexed by size.
inline std::vector<std::vector<PlainPoset>> posets_up_to(std::size_t max_size) {
  std::vector<std::vector<PlainPoset>> levels{{PlainPoset{}}};
  for (std::size_t m = 0; m < max_size; ++m) {
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<PlainPoset> next;
    for (const auto& p : levels[m]) {
      for (std::uint64_t ideal = 0; ideal < (std::uint64_t{1} << m); ++ideal) {
        bool closed = true;
        for (std::size_t x = 0; x < m && closed; ++x)
          if (ideal >> x & 1)
            for (std::size_t y = 0; y < m && closed; ++y)
              if (p.less(y, x) && !(ideal >> y & 1)) closed = false;
        if (!closed) continue;

        PlainPoset q{m + 1, std::vector<std::uint8_t>((m + 1) * (m + 1), 0)};
        for (std::size_t x = 0; x < m; ++x) {
          for (std::size_t y = 0; y < m; ++y) q.below[x * (m + 1) + y] = p.below[x * m + y];
          q.below[x * (m + 1) + m] = (ideal >> x & 1) ? 1 : 0;
        }
        auto c = canonical_poset(q);
        if (seen.insert(c.below).second) next.push_back(std::move(c));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

/// Calls `emit` with every vector of `parts` values, each at least its
/// lower bound, summing to `sum`.
template <typename T, typename Emit>
void for_each_composition(std::size_t parts, T sum, const std::vector<T>& lower, Emit&& emit) {
  std::vector<T> current(parts);
  auto rec = [&](auto&& self, std::size_t i, T remaining) -> void {
    if (i == parts) {
      if (remaining == 0) emit(current);
      return;
    }
    if (remaining < lower[i]) return;
    if (i + 1 == parts) {
      current[i] = remaining;
      emit(current);
      return;
    }
    for (T v = lower[i]; v <= remaining; ++v) {
      current[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, sum);
}

}  // namespace detail

/// All admissible profiles (V1-V5) with `total` countable models, up to
/// isomorphism. `max_vertices` defaults to `total`; totals above
/// `max_total` are refused.
inline EnumerationResult enumerate_profiles(Count total, std::optional<std::size_t> max_vertices = std::nullopt,
                                            Count max_total = kDefaultMaxTotal) {
  if (total < 2) throw Error(ErrorKind::InvalidTotal, "total must be at least 2");
  if (total > max_total)
    throw Error(ErrorKind::InvalidTotal,
                "total " + std::to_string(total) + " exceeds the cap of " + std::to_string(max_total));
  const std::size_t vertex_budget =
      std::min<std::size_t>(static_cast<std::size_t>(total), max_vertices.value_or(total));

  const auto middles = detail::posets_up_to(vertex_budget >= 2 ? vertex_budget - 2 : 0);
  std::set<CanonicalProfile> found;

  for (std::size_t n = 1; n <= vertex_budget; ++n) {
    const Count limit_budget = total - n;
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<detail::PlainPoset> shapes;
      if (k == 1) {
        shapes.push_back({1, {0}});
      } else {
        for (const auto& mid : middles[k - 2]) {
          detail::PlainPoset s{k, std::vector<std::uint8_t>(k * k, 0)};
          for (std::size_t x = 0; x < k - 2; ++x)
            for (std::size_t y = 0; y < k - 2; ++y) s.below[(x + 1) * k + (y + 1)] = mid.below[x * (k - 2) + y];
          for (std::size_t x = 1; x < k; ++x) s.below[0 * k + x] = 1;
          for (std::size_t x = 0; x + 1 < k; ++x) s.below[x * k + (k - 1)] = 1;
          shapes.push_back(std::move(s));
        }
      }

      for (const auto& shape : shapes) {
        // Class 0 is the least class and must be a singleton.
        std::vector<std::size_t> size_lower(k, 1);
        detail::for_each_composition<std::size_t>(k, n, size_lower, [&](const std::vector<std::size_t>& sizes) {
          if (sizes[0] != 1) return;
          std::vector<Count> il_lower(k, 0);
          for (std::size_t c = 1; c < k; ++c)
            if (sizes[c] > 1 || c == k - 1) il_lower[c] = 1;
          detail::for_each_composition<Count>(k, limit_budget, il_lower, [&](const std::vector<Count>& il) {
            if (il[0] != 0) return;
            std::vector<std::string> names;
            std::vector<std::size_t> cls;
            std::vector<Count> vertex_il;
            for (std::size_t c = 0; c < k; ++c)
              for (std::size_t m = 0; m < sizes[c]; ++m) {
                names.push_back("v" + std::to_string(names.size()));
                cls.push_back(c);
                vertex_il.push_back(il[c]);
              }
            std::vector<std::uint8_t> rel(n * n, 0);
            for (std::size_t a = 0; a < n; ++a)
              for (std::size_t b = 0; b < n; ++b)
                rel[a * n + b] = (cls[a] == cls[b] || shape.less(cls[a], cls[b])) ? 1 : 0;
            auto order = Preorder::from_relation(names, rel);
            std::vector<Count> sorted_il(n);
            for (std::size_t v = 0; v < n; ++v) sorted_il[*order.find(names[v])] = vertex_il[v];
            found.insert(canonical_form(RkProfile(std::move(order), std::move(sorted_il))));
          });
        });
      }
    }
  }
  return EnumerationResult{total, {found.begin(), found.end()}};
}

}  // namespace rkdist
