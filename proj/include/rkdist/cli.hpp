#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the exit status: 0 success, 1 validation or check failure,
// 2 usage or input error.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rkdist/canonical.hpp"
#include "rkdist/catalog.hpp"
#include "rkdist/core.hpp"
#include "rkdist/enumerate.hpp"
#include "rkdist/io.hpp"
#include "rkdist/product.hpp"

namespace rkdist::cli {

enum ExitStatus : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

namespace detail {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline RkProfile load(const std::string& path, std::istream& in) {
  try {
    return parse(read_input(path, in));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

inline void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write '" + output + "'");
}

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidProfile:
    case ErrorKind::NotALattice:
    case ErrorKind::FactorMismatch:
      return kCheckFailed;
    default:
      return kUsageError;
  }
}

inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace detail

/// Equation in the style "3·4=4+8=2·2+(0+1+2+5)"; without factors
/// "3=2+(0+1)".
inline std::string decomposition_equation(const ProductDecomposition& d) {
  const auto& r = d.product_report;
  std::vector<Count> limits;
  for (const auto& row : d.term_table) limits.push_back(row.limit_count);
  std::sort(limits.begin(), limits.end());
  std::vector<std::string> limit_terms;
  for (auto v : limits) limit_terms.push_back(std::to_string(v));
  const std::string sum = "(" + detail::join(limit_terms, "+") + ")";

  if (d.factor_reports.empty())
    return std::to_string(r.total) + "=" + std::to_string(r.prime_count) + "+" + sum;
  std::vector<std::string> totals, primes;
  for (const auto& f : d.factor_reports) {
    totals.push_back(std::to_string(f.total));
    primes.push_back(std::to_string(f.prime_count));
  }
  return detail::join(totals, "·") + "=" + std::to_string(r.prime_count) + "+" +
         std::to_string(r.limit_count) + "=" + detail::join(primes, "·") + "+" + sum;
}

inline std::string format_report(const ProductDecomposition& d) {
  const auto& r = d.product_report;
  std::string out = "I = I_p + I_l\n";
  out += std::to_string(r.total) + " = " + std::to_string(r.prime_count) + " + " +
         std::to_string(r.limit_count) + "\n";
  out += "formula: " + decomposition_equation(d) + "\n";
  std::vector<std::vector<std::string>> rows;
  if (d.factor_reports.empty()) {
    rows.push_back({"class", "size", "IL"});
    for (const auto& c : r.class_terms)
      rows.push_back({c.representative, std::to_string(c.size), std::to_string(c.limit_count)});
  } else {
    rows.push_back({"factor classes", "size", "IL"});
    for (const auto& t : d.term_table)
      rows.push_back({"(" + detail::join(t.factor_classes, ", ") + ")", std::to_string(t.size),
                      std::to_string(t.limit_count)});
  }
  out += detail::table(rows);
  return out;
}

inline std::string format_validation(const ValidationReport& report) {
  std::string out;
  for (const auto& s : report.conditions) {
    out += std::string(to_string(s.id)) + (s.passed ? " pass  " : " FAIL  ") + s.description;
    if (s.informational) out += " (informational)";
    if (!s.detail.empty()) out += ": " + s.detail;
    out += "\n";
  }
  out += std::string("admissible: ") + (report.admissible() ? "yes" : "no") + "\n";
  return out;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Countable-model distributions of Ehrenfeucht theories", "rkdist"};
  app.require_subcommand(1);

  std::string file, file2, output, format;
  std::vector<std::string> files, factor_files, params;

  auto* validate = app.add_subcommand("validate", "check admissibility conditions V1-V6");
  validate->add_option("FILE", file, "profile ('-' for stdin)")->required();

  auto* report = app.add_subcommand("report", "print the decomposition I = I_p + I_l");
  report->add_option("FILE", file, "profile ('-' for stdin)")->required();
  report->add_option("--factor", factor_files, "factor profiles whose product is FILE");

  auto* product = app.add_subcommand("product", "Pareto product of profiles");
  product->add_option("FILES", files, "factor profiles")->required()->expected(1, -1);
  product->add_option("-o,--output", output, "output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "compare the product against token enumeration");
  oracle->add_option("FILE1", file, "first factor")->required();
  oracle->add_option("FILE2", file2, "second factor")->required();

  auto* render = app.add_subcommand("render", "draw the Hasse diagram");
  render->add_option("FILE", file, "profile ('-' for stdin)")->required();
  render->add_option("--format", format, "dot or ascii")->required()->check(CLI::IsMember({"dot", "ascii"}));

  auto* catalog = app.add_subcommand("catalog", "named profiles");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "list catalog entries");
  auto* catalog_show = catalog->add_subcommand("show", "print a catalog profile");
  std::string entry_name;
  catalog_show->add_option("NAME", entry_name, "entry name")->required();
  catalog_show->add_option("--param", params, "parameter as NAME=VALUE");
  catalog_show->add_option("-o,--output", output, "output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "admissible profiles with a given total");
  Count total = 0;
  std::size_t max_vertices = 0;
  Count max_total = kDefaultMaxTotal;
  enumerate->add_option("--total", total, "number of countable models")->required();
  enumerate->add_option("--max-vertices", max_vertices, "limit on prime models");
  enumerate->add_option("--max-total", max_total, "refuse totals above this")->capture_default_str();

  auto* check = app.add_subcommand("check", "lattice and monotonicity predicates");
  check->add_option("FILE", file, "profile ('-' for stdin)")->required();
  bool want_lattice = false, want_boolean = false, want_monotone = false;
  check->add_flag("--lattice", want_lattice, "quotient is a lattice");
  check->add_flag("--boolean", want_boolean, "quotient is a Boolean lattice");
  check->add_flag("--monotone", want_monotone, "size and IL trends along the order");

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("FILE1", file, "first profile")->required();
  iso->add_option("FILE2", file2, "second profile")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "rkdist: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (validate->parsed()) {
      const auto r = validate_profile(detail::load(file, in));
      out << format_validation(r);
      return r.admissible() ? kSuccess : kCheckFailed;
    }
    if (report->parsed()) {
      const auto profile = detail::load(file, in);
      std::optional<std::vector<RkProfile>> factors;
      if (!factor_files.empty()) {
        factors.emplace();
        for (const auto& f : factor_files) factors->push_back(detail::load(f, in));
      }
      out << format_report(decomposition(profile, factors));
      return kSuccess;
    }
    if (product->parsed()) {
      std::vector<RkProfile> factors;
      for (const auto& f : files) factors.push_back(detail::load(f, in));
      detail::emit(serialize(product_many(factors)), output, out);
      return kSuccess;
    }
    if (oracle->parsed()) {
      const auto a = detail::load(file, in);
      const auto b = detail::load(file2, in);
      const auto fast = pareto_product(a, b);
      const auto slow = oracle_product(a, b);
      const auto fast_report = decomposition(fast);
      const auto slow_report = decomposition(slow);
      out << "== pareto product\n" << format_report(fast_report);
      out << "== token enumeration\n" << format_report(slow_report);
      const bool same = is_isomorphic(fast, slow) && fast_report.product_report == slow_report.product_report;
      out << "agree: " << (same ? "yes" : "no") << "\n";
      return same ? kSuccess : kCheckFailed;
    }
    if (render->parsed()) {
      const auto profile = detail::load(file, in);
      out << (format == "dot" ? render_dot(profile) : render_ascii(profile));
      return kSuccess;
    }
    if (catalog_list->parsed()) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& e : catalog_entries()) {
        std::string name = e.name;
        if (!e.parameters.empty()) name += "(" + detail::join(e.parameters, ",") + ")";
        rows.push_back({name, e.description});
      }
      out << detail::table(rows);
      return kSuccess;
    }
    if (catalog_show->parsed()) {
      Parameters parameters;
      for (const auto& p : params) {
        const auto eq = p.find('=');
        Count value = 0;
        const char* first = p.data() + (eq == std::string::npos ? 0 : eq + 1);
        const char* last = p.data() + p.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (eq == std::string::npos || eq == 0 || ec != std::errc{} || ptr != last || first == last) {
          err << "rkdist: --param expects NAME=VALUE, got '" << p << "'\n";
          return kUsageError;
        }
        parameters[p.substr(0, eq)] = value;
      }
      detail::emit(serialize(get(entry_name, parameters)), output, out);
      return kSuccess;
    }
    if (enumerate->parsed()) {
      const auto result = enumerate_profiles(
          total, enumerate->count("--max-vertices") ? std::optional<std::size_t>(max_vertices) : std::nullopt,
          max_total);
      out << result.profiles.size() << "\n";
      out << "# admissible profiles with " << total << " countable models\n";
      for (const auto& p : result.profiles) out << "---\n" << p.canonical_text;
      return kSuccess;
    }
    if (check->parsed()) {
      if (int(want_lattice) + int(want_boolean) + int(want_monotone) != 1) {
        err << "rkdist: check needs exactly one of --lattice, --boolean, --monotone\n";
        return kUsageError;
      }
      const auto profile = detail::load(file, in);
      require_admissible(profile);
      if (want_monotone) {
        const auto m = monotonicity(profile);
        out << "size: " << to_string(m.size) << "\nlimit: " << to_string(m.limit) << "\n";
        return kSuccess;
      }
      const auto& q = quotient(profile);
      if (want_lattice) {
        const bool ok = is_lattice(q);
        out << "lattice: " << (ok ? "true" : "false") << "\n";
        return ok ? kSuccess : kCheckFailed;
      }
      if (!is_lattice(q)) {
        out << "boolean lattice: false (not a lattice)\n";
        return kCheckFailed;
      }
      const bool ok = is_boolean_lattice(q);
      out << "boolean lattice: " << (ok ? "true" : "false") << "\n";
      return ok ? kSuccess : kCheckFailed;
    }
    if (iso->parsed()) {
      const bool same = is_isomorphic(detail::load(file, in), detail::load(file2, in));
      out << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? kSuccess : kCheckFailed;
    }
  } catch (const Error& e) {
    err << "rkdist: " << e.what() << "\n";
    return detail::exit_code(e.kind());
  } catch (const detail::InputError& e) {
    err << "rkdist: " << e.what() << "\n";
    return kUsageError;
  }
  err << "rkdist: no command\n";
  return kUsageError;
}

}  // namespace rkdist::cli
