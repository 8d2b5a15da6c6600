#pragma once

// Canonical labeling of IL-labeled preorders.
//
// Classes are colored by (size, IL) and the strict order between them is
// refined to an equitable ordered partition; remaining ties are broken by
// individualizing each member of the first non-singleton cell in turn. Every
// leaf of the search yields a certificate and the least one wins. Twin
// classes (same color, same strict up- and down-sets) are interchangeable,
// so only one twin per cell is branched on.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rkdist/core.hpp"
#include "rkdist/io.hpp"

namespace rkdist {

struct CanonicalProfile {
  std::string canonical_text;

  friend auto operator<=>(const CanonicalProfile&, const CanonicalProfile&) = default;
};

namespace detail {

/// A strict order on colored points; `below` is row-major k*k.
struct ColoredOrder {
  std::vector<std::pair<Count, Count>> colors;
  std::vector<std::uint8_t> below;

  std::size_t size() const { return colors.size(); }
  bool less(std::size_t x, std::size_t y) const { return below[x * size() + y] != 0; }

  static ColoredOrder of(const QuotientPoset& q) {
    ColoredOrder g;
    const std::size_t k = q.size();
    g.colors.reserve(k);
    for (const auto& c : q.classes()) g.colors.emplace_back(c.size, c.limit_count);
    g.below.assign(k * k, 0);
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) g.below[x * k + y] = q.below(x, y) ? 1 : 0;
    return g;
  }
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ColoredOrder& g) : g_(g), k_(g.size()), twin_(k_) {
    for (std::size_t x = 0; x < k_; ++x) {
      twin_[x] = x;
      for (std::size_t y = 0; y < x; ++y)
        if (twin_[y] == y && are_twins(x, y)) {
          twin_[x] = y;
          break;
        }
    }
  }

  /// result[p] is the point placed at canonical position p.
  std::vector<std::size_t> run() {
    if (k_ == 0) return {};
    std::vector<std::pair<Count, Count>> palette = g_.colors;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<std::size_t> rank(k_);
    for (std::size_t x = 0; x < k_; ++x)
      rank[x] = static_cast<std::size_t>(
          std::lower_bound(palette.begin(), palette.end(), g_.colors[x]) - palette.begin());
    search(std::move(rank));
    return best_sequence_;
  }

  const std::vector<std::uint64_t>& certificate() const { return best_certificate_; }

 private:
  bool are_twins(std::size_t x, std::size_t y) const {
    if (g_.colors[x] != g_.colors[y] || g_.less(x, y) || g_.less(y, x)) return false;
    for (std::size_t z = 0; z < k_; ++z) {
      if (z == x || z == y) continue;
      if (g_.less(x, z) != g_.less(y, z) || g_.less(z, x) != g_.less(z, y)) return false;
    }
    return true;
  }

  static std::size_t compress(std::vector<std::size_t>& rank,
                              const std::vector<std::vector<std::size_t>>& keys) {
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::size_t cells = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++cells;
      rank[order[i]] = cells;
    }
    return order.empty() ? 0 : cells + 1;
  }

  void refine(std::vector<std::size_t>& rank) const {
    constexpr auto separator = std::numeric_limits<std::size_t>::max();
    std::size_t cells = 0;
    {
      auto sorted = rank;
      std::sort(sorted.begin(), sorted.end());
      cells = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }
    std::vector<std::vector<std::size_t>> keys(k_);
    while (true) {
      for (std::size_t x = 0; x < k_; ++x) {
        auto& key = keys[x];
        key.clear();
        key.push_back(rank[x]);
        const auto lower_start = key.size();
        for (std::size_t y = 0; y < k_; ++y)
          if (g_.less(y, x)) key.push_back(rank[y]);
        std::sort(key.begin() + static_cast<std::ptrdiff_t>(lower_start), key.end());
        key.push_back(separator);
        const auto upper_start = key.size();
        for (std::size_t y = 0; y < k_; ++y)
          if (g_.less(x, y)) key.push_back(rank[y]);
        std::sort(key.begin() + static_cast<std::ptrdiff_t>(upper_start), key.end());
      }
      const auto next = compress(rank, keys);
      if (next == cells) return;
      cells = next;
    }
  }

  void search(std::vector<std::size_t> rank) {
    refine(rank);

    std::vector<std::size_t> cell_size(k_, 0);
    for (auto r : rank) ++cell_size[r];
    std::size_t target = k_;
    for (std::size_t r = 0; r < k_; ++r)
      if (cell_size[r] > 1) {
        target = r;
        break;
      }
    if (target == k_) {
      leaf(rank);
      return;
    }

    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < k_; ++v) {
      if (rank[v] != target) continue;
      if (std::find(tried.begin(), tried.end(), twin_[v]) != tried.end()) continue;
      tried.push_back(twin_[v]);
      std::vector<std::vector<std::size_t>> keys(k_);
      for (std::size_t x = 0; x < k_; ++x) keys[x] = {rank[x], (rank[x] == target && x != v) ? 1u : 0u};
      auto child = rank;
      compress(child, keys);
      search(std::move(child));
    }
  }

  void leaf(const std::vector<std::size_t>& rank) {
    std::vector<std::size_t> sequence(k_);
    for (std::size_t x = 0; x < k_; ++x) sequence[rank[x]] = x;

    std::vector<std::uint64_t> cert;
    cert.reserve(2 * k_ + (k_ * k_ + 63) / 64);
    for (auto x : sequence) {
      cert.push_back(g_.colors[x].first);
      cert.push_back(g_.colors[x].second);
    }
    std::uint64_t word = 0;
    std::size_t bits = 0;
    for (auto x : sequence)
      for (auto y : sequence) {
        word = (word << 1) | (g_.less(x, y) ? 1u : 0u);
        if (++bits == 64) {
          cert.push_back(word);
          word = 0;
          bits = 0;
        }
      }
    if (bits > 0) cert.push_back(word << (64 - bits));

    if (best_sequence_.empty() || cert < best_certificate_) {
      best_certificate_ = std::move(cert);
      best_sequence_ = std::move(sequence);
    }
  }

  const ColoredOrder& g_;
  std::size_t k_;
  std::vector<std::size_t> twin_;  // least twin of each point
  std::vector<std::uint64_t> best_certificate_;
  std::vector<std::size_t> best_sequence_;
};

inline std::vector<std::size_t> canonical_sequence(const ColoredOrder& g) {
  return CanonicalSearch(g).run();
}

/// Relabels vertices "v0", "v1", ... (zero-padded) following the canonical
/// class sequence. Does not check admissibility.
inline RkProfile canonical_relabel(const RkProfile& profile) {
  const auto& q = profile.quotient();
  const auto sequence = canonical_sequence(ColoredOrder::of(q));
  const std::size_t n = profile.size();
  const std::size_t width = std::to_string(n - 1).size();

  std::vector<std::string> names;
  std::vector<std::size_t> position_of_vertex;  // canonical class position per new vertex
  std::vector<Count> il;
  names.reserve(n);
  for (std::size_t p = 0; p < sequence.size(); ++p) {
    const auto& cls = q[sequence[p]];
    for (std::size_t m = 0; m < cls.size; ++m) {
      auto digits = std::to_string(names.size());
      names.push_back("v" + std::string(width - digits.size(), '0') + digits);
      position_of_vertex.push_back(p);
      il.push_back(cls.limit_count);
    }
  }
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto pa = position_of_vertex[a], pb = position_of_vertex[b];
      rel[a * n + b] = (pa == pb || q.below(sequence[pa], sequence[pb])) ? 1 : 0;
    }
  return RkProfile(Preorder::from_relation(std::move(names), rel), std::move(il));
}

}  // namespace detail

inline CanonicalProfile canonical_form(const RkProfile& profile) {
  require_admissible(profile);
  return CanonicalProfile{serialize(detail::canonical_relabel(profile))};
}

inline bool is_isomorphic(const RkProfile& a, const RkProfile& b) {
  if (a.size() != b.size()) {
    require_admissible(a);
    require_admissible(b);
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace rkdist
