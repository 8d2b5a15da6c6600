#pragma once

// Labeled Rudin-Keisler preorders: vertices are isomorphism types of prime
// models, the preorder is domination, and every mutual-domination class
// carries the number of limit models over it.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rkdist/error.hpp"

namespace rkdist {

using Count = std::uint64_t;

/// [A-Za-z0-9_]+
inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

/// One or more identifiers joined by '*'. The '*' form only arises from
/// product naming ("a*b"), but such names must survive a file round trip.
inline bool is_vertex_name(std::string_view s) {
  std::size_t start = 0;
  while (true) {
    const auto star = s.find('*', start);
    const auto segment = s.substr(start, star == std::string_view::npos ? s.npos : star - start);
    if (!is_identifier(segment)) return false;
    if (star == std::string_view::npos) return true;
    start = star + 1;
  }
}

/// A finite reflexive, transitive relation. `leq(a, b)` reads "a is
/// dominated by b". Vertices are kept sorted by name so that index order is
/// the lexicographic order of names.
class Preorder {
 public:
  using IndexPair = std::pair<std::size_t, std::size_t>;

  Preorder() = default;

  /// Least preorder on `names` containing `pairs` (indices into `names`
  /// as given, before sorting).
  static Preorder generate(std::vector<std::string> names, std::span<const IndexPair> pairs) {
    const std::size_t n = names.size();
    std::vector<std::uint8_t> rel(n * n, 0);
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n) throw Error(ErrorKind::UnknownVertex, "pair index out of range");
      rel[a * n + b] = 1;
    }
    return from_relation(std::move(names), rel);
  }

  /// Reflexive-transitive closure of a row-major n*n relation over `names`.
  static Preorder from_relation(std::vector<std::string> names,
                                const std::vector<std::uint8_t>& relation) {
    const std::size_t n = names.size();
    if (relation.size() != n * n)
      throw Error(ErrorKind::InvalidProfile, "relation size does not match vertex count");
    for (const auto& name : names)
      if (!is_vertex_name(name))
        throw Error(ErrorKind::InvalidIdentifier, "bad vertex name '" + name + "'");

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    for (std::size_t i = 1; i < n; ++i)
      if (names[perm[i - 1]] == names[perm[i]])
        throw Error(ErrorKind::DuplicateVertex, "vertex '" + names[perm[i]] + "' declared twice");

    Preorder p;
    p.names_.reserve(n);
    for (auto i : perm) p.names_.push_back(std::move(names[i]));
    p.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p.leq_[i * n + j] = relation[perm[i] * n + perm[j]];
    p.close();
    return p;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool equivalent(std::size_t a, std::size_t b) const { return leq(a, b) && leq(b, a); }

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  void close() {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k * n + j]) leq_[i * n + j] = 1;
  }

  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
};

/// Builds the preorder generated by named pairs over the declared vertices.
inline Preorder close_preorder(std::vector<std::string> vertices,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto index_of = [&](const std::string& name) {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'");
    return static_cast<std::size_t>(it - vertices.begin());
  };
  std::vector<Preorder::IndexPair> index_pairs;
  index_pairs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) index_pairs.emplace_back(index_of(a), index_of(b));
  return Preorder::generate(std::move(vertices), index_pairs);
}

struct ClassSummary {
  std::string representative;  // least member name
  std::size_t size = 0;
  Count limit_count = 0;
  std::vector<std::size_t> members;  // vertex indices, ascending

  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

/// The partial order of mutual-domination classes. Classes are stored in a
/// topological order of `below`, ties broken by representative name.
class QuotientPoset {
 public:
  using IndexPair = std::pair<std::size_t, std::size_t>;

  QuotientPoset() = default;

  /// `vertex_il` gives each vertex the count of its class; empty means all 0.
  static QuotientPoset of(const Preorder& order, std::span<const Count> vertex_il = {}) {
    const std::size_t n = order.size();
    std::vector<std::size_t> raw_class(n, n);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < n; ++v) {
      if (raw_class[v] != n) continue;
      std::vector<std::size_t> members;
      for (std::size_t w = v; w < n; ++w)
        if (raw_class[w] == n && order.equivalent(v, w)) {
          raw_class[w] = groups.size();
          members.push_back(w);
        }
      groups.push_back(std::move(members));
    }

    // Kahn's algorithm; groups are already indexed by least member, so the
    // smallest ready index is the lexicographically least representative.
    const std::size_t k = groups.size();
    auto raw_below = [&](std::size_t x, std::size_t y) {
      return x != y && order.leq(groups[x][0], groups[y][0]);
    };
    std::vector<std::size_t> topo;
    std::vector<bool> placed(k, false);
    while (topo.size() < k) {
      for (std::size_t x = 0; x < k; ++x) {
        if (placed[x]) continue;
        bool ready = true;
        for (std::size_t y = 0; y < k && ready; ++y)
          if (!placed[y] && raw_below(y, x)) ready = false;
        if (ready) {
          placed[x] = true;
          topo.push_back(x);
          break;
        }
      }
    }

    QuotientPoset q;
    std::vector<std::size_t> position(k);
    for (std::size_t i = 0; i < k; ++i) position[topo[i]] = i;
    q.class_of_.resize(n);
    for (std::size_t v = 0; v < n; ++v) q.class_of_[v] = position[raw_class[v]];
    q.classes_.reserve(k);
    for (auto x : topo) {
      ClassSummary c;
      c.representative = order.name(groups[x][0]);
      c.size = groups[x].size();
      c.limit_count = vertex_il.empty() ? 0 : vertex_il[groups[x][0]];
      c.members = groups[x];
      q.classes_.push_back(std::move(c));
    }
    q.below_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) q.below_[i * k + j] = raw_below(topo[i], topo[j]) ? 1 : 0;
    return q;
  }

  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<ClassSummary>& classes() const noexcept { return classes_; }
  const ClassSummary& operator[](std::size_t i) const { return classes_.at(i); }
  std::size_t class_of(std::size_t vertex) const { return class_of_.at(vertex); }

  bool below(std::size_t x, std::size_t y) const { return below_[x * size() + y] != 0; }
  bool below_or_equal(std::size_t x, std::size_t y) const { return x == y || below(x, y); }

  std::vector<std::size_t> minimal() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x) {
      bool is_min = true;
      for (std::size_t y = 0; y < size() && is_min; ++y) is_min = !below(y, x);
      if (is_min) out.push_back(x);
    }
    return out;
  }

  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x) {
      bool is_max = true;
      for (std::size_t y = 0; y < size() && is_max; ++y) is_max = !below(x, y);
      if (is_max) out.push_back(x);
    }
    return out;
  }

  std::optional<std::size_t> least() const {
    auto m = minimal();
    if (m.size() != 1) return std::nullopt;
    return m.front();
  }

  std::optional<std::size_t> greatest() const {
    auto m = maximal();
    if (m.size() != 1) return std::nullopt;
    return m.front();
  }

  /// Hasse cover pairs (lower, upper), sorted by index.
  std::vector<IndexPair> covers() const {
    std::vector<IndexPair> out;
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y) {
        if (!below(x, y)) continue;
        bool direct = true;
        for (std::size_t z = 0; z < size() && direct; ++z)
          if (below(x, z) && below(z, y)) direct = false;
        if (direct) out.emplace_back(x, y);
      }
    return out;
  }

  /// Length of the longest chain ending at each class.
  std::vector<std::size_t> depths() const {
    std::vector<std::size_t> d(size(), 0);
    // Topological indexing lets a single forward pass suffice.
    for (std::size_t y = 0; y < size(); ++y)
      for (std::size_t x = 0; x < y; ++x)
        if (below(x, y)) d[y] = std::max(d[y], d[x] + 1);
    return d;
  }

  friend bool operator==(const QuotientPoset&, const QuotientPoset&) = default;

 private:
  std::vector<ClassSummary> classes_;
  std::vector<std::uint8_t> below_;
  std::vector<std::size_t> class_of_;
};

/// A preorder together with the limit-model count of each class.
class RkProfile {
 public:
  /// `vertex_il[v]` is the count of v's class; it must agree across members.
  RkProfile(Preorder order, std::vector<Count> vertex_il) : order_(std::move(order)) {
    if (order_.size() == 0) throw Error(ErrorKind::InvalidProfile, "profile has no vertices");
    if (vertex_il.size() != order_.size())
      throw Error(ErrorKind::InvalidProfile, "limit counts do not cover every vertex");
    quotient_ = QuotientPoset::of(order_, vertex_il);
    for (std::size_t v = 0; v < order_.size(); ++v)
      if (vertex_il[v] != quotient_[quotient_.class_of(v)].limit_count)
        throw Error(ErrorKind::InvalidProfile,
                    "class of '" + order_.name(v) + "' has conflicting limit counts");
  }

  const Preorder& order() const noexcept { return order_; }
  const QuotientPoset& quotient() const noexcept { return quotient_; }
  std::size_t size() const noexcept { return order_.size(); }
  Count il_of(std::size_t vertex) const { return quotient_[quotient_.class_of(vertex)].limit_count; }

  std::vector<Count> vertex_il() const {
    std::vector<Count> out(size());
    for (std::size_t v = 0; v < size(); ++v) out[v] = il_of(v);
    return out;
  }

  friend bool operator==(const RkProfile& a, const RkProfile& b) {
    return a.order_ == b.order_ && a.quotient_ == b.quotient_;
  }

 private:
  Preorder order_;
  QuotientPoset quotient_;
};

inline const QuotientPoset& quotient(const RkProfile& profile) { return profile.quotient(); }

enum class Condition { V1, V2, V3, V4, V5, V6 };

inline std::string_view to_string(Condition c) {
  static constexpr std::array<std::string_view, 6> names{"V1", "V2", "V3", "V4", "V5", "V6"};
  return names[static_cast<std::size_t>(c)];
}

struct ConditionStatus {
  Condition id;
  bool passed = false;
  bool informational = false;
  std::string description;
  std::string detail;  // names the failing class, if any
};

/// Status of each admissibility condition. V1-V5 are the necessary
/// conditions on the distribution of an Ehrenfeucht theory; V6 is reported
/// only.
struct ValidationReport {
  std::array<ConditionStatus, 6> conditions;

  const ConditionStatus& operator[](Condition c) const {
    return conditions[static_cast<std::size_t>(c)];
  }

  bool admissible() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionStatus& s) { return s.informational || s.passed; });
  }

  std::vector<Condition> failures() const {
    std::vector<Condition> out;
    for (const auto& s : conditions)
      if (!s.informational && !s.passed) out.push_back(s.id);
    return out;
  }
};

namespace detail {

inline std::string class_list(const QuotientPoset& q, const std::vector<std::size_t>& ids) {
  std::string out;
  for (auto id : ids) {
    if (!out.empty()) out += ", ";
    out += q[id].representative;
  }
  return out;
}

inline Count total_limit(const QuotientPoset& q) {
  Count sum = 0;
  for (const auto& c : q.classes()) sum += c.limit_count;
  return sum;
}

}  // namespace detail

inline ValidationReport validate_profile(const RkProfile& profile) {
  const auto& q = profile.quotient();
  ValidationReport r;
  auto set = [&](Condition id, std::string description, bool passed, std::string detail,
                 bool informational = false) {
    r.conditions[static_cast<std::size_t>(id)] =
        ConditionStatus{id, passed, informational, std::move(description), std::move(detail)};
  };

  const auto minimal = q.minimal();
  const auto maximal = q.maximal();
  const auto least = q.least();
  const auto greatest = q.greatest();

  set(Condition::V1, "unique least class", least.has_value(),
      least ? "" : "minimal classes: " + detail::class_list(q, minimal));

  if (!least) {
    set(Condition::V2, "least class is a singleton with IL = 0", false, "no least class");
  } else {
    const auto& c = q[*least];
    std::string why;
    if (c.size != 1) why = "least class " + c.representative + " has size " + std::to_string(c.size);
    else if (c.limit_count != 0)
      why = "least class " + c.representative + " has IL = " + std::to_string(c.limit_count);
    set(Condition::V2, "least class is a singleton with IL = 0", why.empty(), why);
  }

  set(Condition::V3, "unique greatest class", greatest.has_value(),
      greatest ? "" : "maximal classes: " + detail::class_list(q, maximal));

  if (profile.size() <= 1) {
    set(Condition::V4, "greatest class has IL >= 1 when there are several vertices", true, "");
  } else if (!greatest) {
    set(Condition::V4, "greatest class has IL >= 1 when there are several vertices", false,
        "no greatest class");
  } else {
    const auto& c = q[*greatest];
    set(Condition::V4, "greatest class has IL >= 1 when there are several vertices",
        c.limit_count >= 1, c.limit_count >= 1 ? "" : "greatest class " + c.representative + " has IL = 0");
  }

  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i].size > 1 && q[i].limit_count == 0) bad.push_back(i);
  set(Condition::V5, "every class of size > 1 has IL >= 1", bad.empty(),
      bad.empty() ? "" : "classes with IL = 0: " + detail::class_list(q, bad));

  const Count total = profile.size() + detail::total_limit(q);
  set(Condition::V6, "Ehrenfeucht range: total >= 2", total >= 2,
      total >= 2 ? "" : "total = " + std::to_string(total), true);
  return r;
}

/// Throws InvalidProfile naming the failed conditions unless V1-V5 hold.
inline void require_admissible(const RkProfile& profile) {
  const auto report = validate_profile(profile);
  if (report.admissible()) return;
  std::string msg = "profile fails";
  for (auto c : report.failures()) {
    msg += ' ';
    msg += to_string(c);
    const auto& detail = report[c].detail;
    if (!detail.empty()) msg += " (" + detail + ")";
  }
  throw Error(ErrorKind::InvalidProfile, msg);
}

/// Totals of the decomposition I = I_p + I_l.
struct DecompositionReport {
  Count prime_count = 0;
  Count limit_count = 0;
  Count total = 0;
  std::vector<ClassSummary> class_terms;  // topological, ties by representative

  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

inline DecompositionReport counts(const RkProfile& profile) {
  require_admissible(profile);
  DecompositionReport r;
  r.prime_count = profile.size();
  r.limit_count = detail::total_limit(profile.quotient());
  r.total = r.prime_count + r.limit_count;
  r.class_terms = profile.quotient().classes();
  return r;
}

}  // namespace rkdist
