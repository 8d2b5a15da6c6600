#pragma once

// Profiles of disjoint unions of theories. The domination preorder of a
// union is the componentwise (Pareto) order on pairs, and the class built
// from classes x, y carries
//
//   IL(x, y) = IL(x)|y| + |x|IL(y) + IL(x)IL(y)
//
// limit models, since a model of the union is limit iff one of its
// restrictions is.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rkdist/canonical.hpp"
#include "rkdist/core.hpp"

namespace rkdist {

/// Limit count of the product class generated by classes of the given
/// sizes and limit counts.
constexpr Count combined_limit(Count size_x, Count il_x, Count size_y, Count il_y) {
  return il_x * size_y + size_x * il_y + il_x * il_y;
}

inline RkProfile pareto_product(const RkProfile& a, const RkProfile& b) {
  require_admissible(a);
  require_admissible(b);
  const auto& qa = a.quotient();
  const auto& qb = b.quotient();
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;

  std::vector<std::string> names;
  std::vector<Count> il;
  names.reserve(n);
  il.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      names.push_back(a.order().name(i) + "*" + b.order().name(j));
      const auto& x = qa[qa.class_of(i)];
      const auto& y = qb[qb.class_of(j)];
      il.push_back(combined_limit(x.size, x.limit_count, y.size, y.limit_count));
    }
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r)
      rel[p * n + r] = (a.order().leq(p / nb, r / nb) && b.order().leq(p % nb, r % nb)) ? 1 : 0;

  // from_relation re-sorts names; carry the limit counts along by name.
  auto order = Preorder::from_relation(names, rel);
  std::vector<Count> sorted_il(n);
  for (std::size_t p = 0; p < n; ++p) sorted_il[*order.find(names[p])] = il[p];
  return RkProfile(std::move(order), std::move(sorted_il));
}

/// Left fold of pareto_product.
inline RkProfile product_many(const std::vector<RkProfile>& factors) {
  if (factors.empty()) throw Error(ErrorKind::EmptyFactorList, "no factors given");
  require_admissible(factors.front());
  RkProfile acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = pareto_product(acc, factors[i]);
  return acc;
}

/// Product computed by materializing models: each factor class x
/// contributes |x| prime tokens and IL(x) limit tokens, every token pair is
/// a model of the union, and a pair is prime only when both tokens are.
/// Limit counts are tallied pair by pair, never from the closed formula.
inline RkProfile oracle_product(const RkProfile& a, const RkProfile& b) {
  require_admissible(a);
  require_admissible(b);

  struct Token {
    std::size_t cls;
    std::optional<std::size_t> vertex;  // set for prime tokens
  };
  auto tokens_of = [](const RkProfile& p) {
    std::vector<Token> out;
    for (std::size_t v = 0; v < p.size(); ++v) out.push_back({p.quotient().class_of(v), v});
    for (std::size_t c = 0; c < p.quotient().size(); ++c)
      for (Count t = 0; t < p.quotient()[c].limit_count; ++t) out.push_back({c, std::nullopt});
    return out;
  };
  const auto ta = tokens_of(a);
  const auto tb = tokens_of(b);

  std::vector<std::pair<std::size_t, std::size_t>> prime_pairs;
  std::map<std::pair<std::size_t, std::size_t>, Count> limit_tally;
  for (const auto& x : ta)
    for (const auto& y : tb) {
      if (x.vertex && y.vertex) prime_pairs.emplace_back(*x.vertex, *y.vertex);
      else ++limit_tally[{x.cls, y.cls}];
    }

  const std::size_t n = prime_pairs.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& [i, j] : prime_pairs) names.push_back(a.order().name(i) + "*" + b.order().name(j));
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r)
      rel[p * n + r] = (a.order().leq(prime_pairs[p].first, prime_pairs[r].first) &&
                        b.order().leq(prime_pairs[p].second, prime_pairs[r].second))
                           ? 1
                           : 0;
  auto order = Preorder::from_relation(names, rel);
  std::vector<Count> il(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const auto key = std::pair{a.quotient().class_of(prime_pairs[p].first),
                               b.quotient().class_of(prime_pairs[p].second)};
    auto it = limit_tally.find(key);
    il[*order.find(names[p])] = it == limit_tally.end() ? 0 : it->second;
  }
  return RkProfile(std::move(order), std::move(il));
}

/// One product class: the factor classes generating it and its terms in
/// the decomposition formula.
struct TermRow {
  std::vector<std::string> factor_classes;  // representatives, one per factor
  std::vector<std::size_t> factor_sizes;
  std::vector<Count> factor_limits;
  std::size_t size = 0;
  Count limit_count = 0;

  friend bool operator==(const TermRow&, const TermRow&) = default;
};

struct ProductDecomposition {
  std::vector<DecompositionReport> factor_reports;
  DecompositionReport product_report;
  std::vector<TermRow> term_table;  // sorted by factor_classes
};

/// Decomposition of `profile` into per-class terms. With factors, the terms
/// are indexed by tuples of factor classes and the totals are checked
/// against the product identities for I, I_p and I_l.
inline ProductDecomposition decomposition(const RkProfile& profile,
                                          const std::optional<std::vector<RkProfile>>& factors = std::nullopt) {
  ProductDecomposition d;
  d.product_report = counts(profile);

  if (!factors) {
    for (const auto& c : d.product_report.class_terms)
      d.term_table.push_back({{c.representative}, {c.size}, {c.limit_count}, c.size, c.limit_count});
  } else {
    const auto product = product_many(*factors);
    if (!is_isomorphic(product, profile))
      throw Error(ErrorKind::FactorMismatch, "product of the factors is not isomorphic to the profile");
    for (const auto& f : *factors) d.factor_reports.push_back(counts(f));

    d.term_table.push_back({});
    for (const auto& report : d.factor_reports) {
      std::vector<TermRow> next;
      for (const auto& row : d.term_table)
        for (const auto& c : report.class_terms) {
          TermRow r = row;
          r.factor_classes.push_back(c.representative);
          r.factor_sizes.push_back(c.size);
          r.factor_limits.push_back(c.limit_count);
          if (row.factor_classes.empty()) {
            r.size = c.size;
            r.limit_count = c.limit_count;
          } else {
            r.size = row.size * c.size;
            r.limit_count = combined_limit(row.size, row.limit_count, c.size, c.limit_count);
          }
          next.push_back(std::move(r));
        }
      d.term_table = std::move(next);
    }

    Count total = 1, prime = 1, limit = 0;
    for (const auto& f : d.factor_reports) {
      limit = limit * f.prime_count + prime * f.limit_count + limit * f.limit_count;
      total *= f.total;
      prime *= f.prime_count;
    }
    Count row_prime = 0, row_limit = 0;
    for (const auto& r : d.term_table) {
      row_prime += r.size;
      row_limit += r.limit_count;
    }
    const auto& pr = d.product_report;
    if (pr.total != total || pr.prime_count != prime || pr.limit_count != limit ||
        row_prime != prime || row_limit != limit || prime + limit != total)
      throw std::logic_error("decomposition totals disagree with the product identities");
  }
  std::sort(d.term_table.begin(), d.term_table.end(),
            [](const TermRow& x, const TermRow& y) { return x.factor_classes < y.factor_classes; });
  return d;
}

namespace detail {

inline std::optional<std::size_t> least_upper_bound(const QuotientPoset& q, std::size_t x, std::size_t y) {
  std::vector<std::size_t> upper;
  for (std::size_t z = 0; z < q.size(); ++z)
    if (q.below_or_equal(x, z) && q.below_or_equal(y, z)) upper.push_back(z);
  for (auto z : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](std::size_t u) { return q.below_or_equal(z, u); }))
      return z;
  return std::nullopt;
}

inline std::optional<std::size_t> greatest_lower_bound(const QuotientPoset& q, std::size_t x, std::size_t y) {
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < q.size(); ++z)
    if (q.below_or_equal(z, x) && q.below_or_equal(z, y)) lower.push_back(z);
  for (auto z : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t u) { return q.below_or_equal(u, z); }))
      return z;
  return std::nullopt;
}

}  // namespace detail

inline bool is_lattice(const QuotientPoset& q) {
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = x + 1; y < q.size(); ++y)
      if (!detail::least_upper_bound(q, x, y) || !detail::greatest_lower_bound(q, x, y)) return false;
  return q.size() > 0;
}

/// Distributive and complemented, checked exhaustively.
inline bool is_boolean_lattice(const QuotientPoset& q) {
  if (!is_lattice(q)) throw Error(ErrorKind::NotALattice, "quotient is not a lattice");
  const std::size_t k = q.size();
  std::vector<std::size_t> join(k * k), meet(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      join[x * k + y] = x == y ? x : *detail::least_upper_bound(q, x, y);
      meet[x * k + y] = x == y ? x : *detail::greatest_lower_bound(q, x, y);
    }
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z)
        if (meet[x * k + join[y * k + z]] != join[meet[x * k + y] * k + meet[x * k + z]]) return false;

  const auto bottom = *q.least();
  const auto top = *q.greatest();
  for (std::size_t x = 0; x < k; ++x) {
    bool complemented = false;
    for (std::size_t y = 0; y < k && !complemented; ++y)
      complemented = meet[x * k + y] == bottom && join[x * k + y] == top;
    if (!complemented) return false;
  }
  return true;
}

enum class Trend { none, weak, strict };

inline std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::none: return "none";
    case Trend::weak: return "weak";
    case Trend::strict: return "strict";
  }
  return "none";
}

struct Monotonicity {
  Trend size = Trend::strict;
  Trend limit = Trend::strict;

  friend bool operator==(const Monotonicity&, const Monotonicity&) = default;
};

/// How class sizes and limit counts grow along the strict order of classes.
/// Incomparable classes impose nothing.
inline Monotonicity monotonicity(const RkProfile& profile) {
  require_admissible(profile);
  const auto& q = profile.quotient();
  auto trend = [&](auto value) {
    bool strict = true, weak = true;
    for (std::size_t x = 0; x < q.size(); ++x)
      for (std::size_t y = 0; y < q.size(); ++y) {
        if (!q.below(x, y)) continue;
        if (!(value(x) < value(y))) strict = false;
        if (!(value(x) <= value(y))) weak = false;
      }
    return strict ? Trend::strict : weak ? Trend::weak : Trend::none;
  };
  return Monotonicity{trend([&](std::size_t c) { return static_cast<Count>(q[c].size); }),
                      trend([&](std::size_t c) { return q[c].limit_count; })};
}

}  // namespace rkdist
