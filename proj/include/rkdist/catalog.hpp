#pragma once

// Named profiles: the Hasse diagrams for three, four and five countable
// models, plus parametric families obtained by raising limit counts.
//
// Figure entries are numbered in reading order: fig1b.1-.3 left to right;
// fig2.1-.4 the top row (chains), fig2.5-.8 the bottom row.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rkdist/core.hpp"
#include "rkdist/product.hpp"

namespace rkdist {

using Parameters = std::map<std::string, Count, std::less<>>;

namespace detail {

/// a, b, ..., z, then v26, v27, ...
inline std::string vertex_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "v" + std::to_string(i);
}

/// Classes given as (size, IL) in order; vertices are named consecutively.
inline RkProfile from_classes(const std::vector<std::pair<std::size_t, Count>>& classes,
                              const std::vector<std::pair<std::size_t, std::size_t>>& class_edges) {
  std::vector<std::string> names;
  std::vector<std::size_t> class_of;
  std::vector<Count> il;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t m = 0; m < classes[c].first; ++m) {
      names.push_back(vertex_label(names.size()));
      class_of.push_back(c);
      il.push_back(classes[c].second);
    }
  std::vector<Preorder::IndexPair> pairs;
  for (std::size_t v = 0; v < names.size(); ++v)
    for (std::size_t w = 0; w < names.size(); ++w) {
      if (class_of[v] == class_of[w]) pairs.emplace_back(v, w);
      for (const auto& [lo, hi] : class_edges)
        if (class_of[v] == lo && class_of[w] == hi) pairs.emplace_back(v, w);
    }
  // Names are generated in sorted order for up to 26 vertices, so `il`
  // lines up with the sorted preorder; re-map anyway for longer profiles.
  auto order = Preorder::generate(names, pairs);
  std::vector<Count> sorted_il(names.size());
  for (std::size_t v = 0; v < names.size(); ++v) sorted_il[*order.find(names[v])] = il[v];
  return RkProfile(std::move(order), std::move(sorted_il));
}

}  // namespace detail

/// A linear order of singleton classes, listed bottom to top.
inline RkProfile chain_profile(const std::vector<Count>& limit_counts) {
  if (limit_counts.empty()) throw Error(ErrorKind::AdmissibilityViolation, "chain needs at least one class");
  if (limit_counts.front() != 0)
    throw Error(ErrorKind::AdmissibilityViolation, "least class must have IL = 0");
  if (limit_counts.size() > 1 && limit_counts.back() == 0)
    throw Error(ErrorKind::AdmissibilityViolation, "greatest class must have IL >= 1");
  std::vector<std::pair<std::size_t, Count>> classes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < limit_counts.size(); ++i) {
    classes.emplace_back(1, limit_counts[i]);
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return detail::from_classes(classes, edges);
}

/// A least vertex below one class of `class_size` mutually dominated
/// vertices.
inline RkProfile least_plus_class(std::size_t class_size, Count class_limit) {
  if (class_size < 2) throw Error(ErrorKind::AdmissibilityViolation, "class size must be at least 2");
  if (class_limit < 1) throw Error(ErrorKind::AdmissibilityViolation, "class IL must be at least 1");
  return detail::from_classes({{1, 0}, {class_size, class_limit}}, {{0, 1}});
}

struct CatalogEntry {
  std::string name;
  std::vector<std::string> parameters;
  std::string description;
  std::function<RkProfile(const Parameters&)> builder;
};

namespace detail {

inline RkProfile diamond() {
  return from_classes({{1, 0}, {1, 0}, {1, 0}, {1, 1}}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    auto fixed = [](RkProfile (*make)()) {
      return [make](const Parameters&) { return make(); };
    };
    std::vector<CatalogEntry> e;
    e.push_back({"fig1a", {}, "chain 0 < 1 (I = 3)", fixed([] { return chain_profile({0, 1}); })});
    e.push_back({"fig1b.1", {}, "chain 0 < 2 (I = 4)", fixed([] { return chain_profile({0, 2}); })});
    e.push_back({"fig1b.2", {}, "least vertex below a 2-class with IL 1 (I = 4)",
                 fixed([] { return least_plus_class(2, 1); })});
    e.push_back({"fig1b.3", {}, "chain 0 < 0 < 1 (I = 4)", fixed([] { return chain_profile({0, 0, 1}); })});
    e.push_back({"fig2.1", {}, "chain 0 < 3 (I = 5)", fixed([] { return chain_profile({0, 3}); })});
    e.push_back({"fig2.2", {}, "chain 0 < 1 < 1 (I = 5)", fixed([] { return chain_profile({0, 1, 1}); })});
    e.push_back({"fig2.3", {}, "chain 0 < 0 < 2 (I = 5)", fixed([] { return chain_profile({0, 0, 2}); })});
    e.push_back({"fig2.4", {}, "chain 0 < 0 < 0 < 1 (I = 5)",
                 fixed([] { return chain_profile({0, 0, 0, 1}); })});
    e.push_back({"fig2.5", {}, "least vertex below a 2-class with IL 2 (I = 5)",
                 fixed([] { return least_plus_class(2, 2); })});
    e.push_back({"fig2.6", {}, "least vertex below a 3-class with IL 1 (I = 5)",
                 fixed([] { return least_plus_class(3, 1); })});
    e.push_back({"fig2.7", {}, "chain 0 < 0 below a 2-class with IL 1 (I = 5)", fixed([] {
                   return detail::from_classes({{1, 0}, {1, 0}, {2, 1}}, {{0, 1}, {1, 2}});
                 })});
    e.push_back({"fig2.8", {}, "diamond 0 < 0, 0 < 1 (I = 5)", fixed(&detail::diamond)});
    e.push_back({"diamond4", {}, "same as fig2.8", fixed(&detail::diamond)});
    e.push_back({"param.chain2", {"k"}, "chain 0 < k",
                 [](const Parameters& p) { return chain_profile({0, p.at("k")}); }});
    e.push_back({"param.chain3end", {"k"}, "chain 0 < 0 < k",
                 [](const Parameters& p) { return chain_profile({0, 0, p.at("k")}); }});
    e.push_back({"param.ex11", {"k", "m"}, "(least below a 2-class with IL k) x (chain 0 < m)",
                 [](const Parameters& p) {
                   return pareto_product(least_plus_class(2, p.at("k")), chain_profile({0, p.at("m")}));
                 }});
    e.push_back({"param.ex12", {"k", "m"}, "(least below a 2-class with IL k) x (least below a 2-class with IL m)",
                 [](const Parameters& p) {
                   return pareto_product(least_plus_class(2, p.at("k")), least_plus_class(2, p.at("m")));
                 }});
    return e;
  }();
  return entries;
}

/// The twelve figure profiles: fig1a, fig1b.1-.3, fig2.1-.8.
inline std::vector<std::string> figure_entry_names() {
  return {"fig1a",  "fig1b.1", "fig1b.2", "fig1b.3", "fig2.1", "fig2.2",
          "fig2.3", "fig2.4",  "fig2.5",  "fig2.6",  "fig2.7", "fig2.8"};
}

inline const CatalogEntry& find_entry(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw Error(ErrorKind::UnknownEntry, "no catalog entry named '" + std::string(name) + "'");
}

inline RkProfile get(std::string_view name, const Parameters& parameters = {}) {
  const auto& entry = find_entry(name);
  for (const auto& [key, value] : parameters) {
    if (std::find(entry.parameters.begin(), entry.parameters.end(), key) == entry.parameters.end())
      throw Error(ErrorKind::UnknownParameter, entry.name + " takes no parameter '" + key + "'");
    if (value < 1) throw Error(ErrorKind::AdmissibilityViolation, "parameter " + key + " must be >= 1");
  }
  for (const auto& key : entry.parameters)
    if (!parameters.contains(key))
      throw Error(ErrorKind::MissingParameter, entry.name + " needs parameter '" + key + "'");
  return entry.builder(parameters);
}

}  // namespace rkdist
