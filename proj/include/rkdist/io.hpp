#pragma once

// The "rkp 1" text format and Hasse-diagram renderers.
//
//   rkp 1
//   vertex NAME
//   le NAME NAME      # left is dominated by right
//   il NAME COUNT     # limit count of NAME's class
//
// '#' starts a comment; blank lines are ignored; statements after the
// header may come in any order.

#include <algorithm>
#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rkdist/core.hpp"

namespace rkdist {

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

inline std::vector<std::size_t> classes_by_representative(const QuotientPoset& q) {
  std::vector<std::size_t> ids(q.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    return q[a].representative < q[b].representative;
  });
  return ids;
}

inline std::vector<std::pair<std::string, std::string>> named_covers(const QuotientPoset& q) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [lo, hi] : q.covers()) edges.emplace_back(q[lo].representative, q[hi].representative);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace detail

/// Parses an "rkp 1" document. Admissibility is not checked here.
inline RkProfile parse(std::string_view text) {
  struct Statement {
    std::size_t line;
    std::string a, b;
    Count count = 0;
  };
  std::vector<Statement> vertices, les, ils;
  bool have_header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto words = detail::split_words(line);
    if (words.empty()) continue;

    if (!have_header) {
      if (words.size() != 2 || words[0] != "rkp" || words[1] != "1")
        throw Error(ErrorKind::BadHeader, "expected 'rkp 1'", line_no);
      have_header = true;
      continue;
    }

    auto check_name = [&](std::string_view name) {
      if (!is_vertex_name(name))
        throw Error(ErrorKind::MalformedLine, "bad identifier '" + std::string(name) + "'", line_no);
      return std::string(name);
    };

    if (words[0] == "vertex" && words.size() == 2) {
      vertices.push_back({line_no, check_name(words[1]), {}, 0});
    } else if (words[0] == "le" && words.size() == 3) {
      les.push_back({line_no, check_name(words[1]), check_name(words[2]), 0});
    } else if (words[0] == "il" && words.size() == 3) {
      Count value = 0;
      const auto w = words[2];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
      if (ec != std::errc{} || ptr != w.data() + w.size())
        throw Error(ErrorKind::MalformedLine, "bad count '" + std::string(w) + "'", line_no);
      ils.push_back({line_no, check_name(words[1]), {}, value});
    } else {
      throw Error(ErrorKind::MalformedLine, "unrecognized statement '" + std::string(line) + "'",
                  line_no);
    }
  }
  if (!have_header) throw Error(ErrorKind::BadHeader, "missing 'rkp 1' header");

  std::map<std::string, std::size_t> index;
  std::vector<std::string> names;
  for (const auto& v : vertices) {
    if (!index.emplace(v.a, names.size()).second)
      throw Error(ErrorKind::DuplicateVertex, "vertex '" + v.a + "' declared twice", v.line);
    names.push_back(v.a);
  }
  auto lookup = [&](const std::string& name, std::size_t line) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'", line);
    return it->second;
  };

  std::vector<Preorder::IndexPair> pairs;
  for (const auto& s : les) pairs.emplace_back(lookup(s.a, s.line), lookup(s.b, s.line));
  std::vector<std::size_t> il_targets;
  for (const auto& s : ils) il_targets.push_back(lookup(s.a, s.line));

  if (names.empty()) throw Error(ErrorKind::InvalidProfile, "document declares no vertices");
  const auto order = Preorder::generate(names, pairs);
  const auto bare = QuotientPoset::of(order);

  std::vector<std::optional<Count>> class_il(bare.size());
  for (std::size_t i = 0; i < ils.size(); ++i) {
    const auto vertex = *order.find(names[il_targets[i]]);
    auto& slot = class_il[bare.class_of(vertex)];
    if (slot)
      throw Error(ErrorKind::DuplicateIl,
                  "class of '" + ils[i].a + "' already has an il declaration", ils[i].line);
    slot = ils[i].count;
  }
  for (std::size_t c = 0; c < bare.size(); ++c)
    if (!class_il[c])
      throw Error(ErrorKind::MissingIl, "class of '" + bare[c].representative + "' has no il");

  std::vector<Count> vertex_il(order.size());
  for (std::size_t v = 0; v < order.size(); ++v) vertex_il[v] = *class_il[bare.class_of(v)];
  return RkProfile(order, std::move(vertex_il));
}

/// Deterministic document: sorted vertices, a directed cycle per
/// multi-member class, Hasse covers between representatives, il lines on
/// representatives.
inline std::string serialize(const RkProfile& profile) {
  require_admissible(profile);
  const auto& order = profile.order();
  const auto& q = profile.quotient();
  const auto by_rep = detail::classes_by_representative(q);

  std::string out = "rkp 1\n";
  for (const auto& name : order.names()) out += "vertex " + name + "\n";
  for (auto c : by_rep) {
    const auto& members = q[c].members;
    if (members.size() < 2) continue;
    for (std::size_t i = 0; i < members.size(); ++i)
      out += "le " + order.name(members[i]) + " " + order.name(members[(i + 1) % members.size()]) + "\n";
  }
  for (const auto& [lo, hi] : detail::named_covers(q)) out += "le " + lo + " " + hi + "\n";
  for (auto c : by_rep) out += "il " + q[c].representative + " " + std::to_string(q[c].limit_count) + "\n";
  return out;
}

/// Graphviz digraph of the quotient, least class at the bottom.
inline std::string render_dot(const RkProfile& profile) {
  require_admissible(profile);
  const auto& q = profile.quotient();
  std::string out = "digraph rk {\n  rankdir=BT;\n  node [shape=box];\n";
  for (auto c : detail::classes_by_representative(q)) {
    const auto& cls = q[c];
    out += "  \"" + cls.representative + "\" [label=\"" + cls.representative +
           " | size=" + std::to_string(cls.size) + " | IL=" + std::to_string(cls.limit_count) +
           "\"];\n";
  }
  for (const auto& [lo, hi] : detail::named_covers(q)) out += "  \"" + lo + "\" -> \"" + hi + "\";\n";
  out += "}\n";
  return out;
}

/// One line per level of longest-chain depth, top level first; each class
/// printed as REP(size,IL).
inline std::string render_ascii(const RkProfile& profile) {
  require_admissible(profile);
  const auto& q = profile.quotient();
  const auto depth = q.depths();
  const std::size_t levels = q.size() == 0 ? 0 : *std::max_element(depth.begin(), depth.end()) + 1;
  std::vector<std::vector<std::size_t>> rows(levels);
  for (auto c : detail::classes_by_representative(q)) rows[depth[c]].push_back(c);

  std::string out;
  for (std::size_t level = levels; level-- > 0;) {
    out += std::to_string(level) + ":";
    for (auto c : rows[level])
      out += " " + q[c].representative + "(" + std::to_string(q[c].size) + "," +
             std::to_string(q[c].limit_count) + ")";
    out += "\n";
  }
  return out;
}

}  // namespace rkdist
