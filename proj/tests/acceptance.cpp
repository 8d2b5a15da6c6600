// Acceptance suite: one PASS/FAIL line per criterion, exact integer checks.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "rkdist/rkdist.hpp"
#include "support/oracles.hpp"

using namespace rkdist;

namespace {

/// Collects mismatches for one criterion.
struct Check {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (++failed <= 10) failures.push_back(what);
  }
};

std::vector<Count> limit_multiset(const RkProfile& p) {
  std::vector<Count> out;
  for (const auto& c : p.quotient().classes()) out.push_back(c.limit_count);
  std::sort(out.begin(), out.end());
  return out;
}

/// Expands "value x multiplicity" pairs, padding with zeros to `classes`.
std::vector<Count> histogram(std::size_t classes, std::vector<std::pair<Count, std::size_t>> counts) {
  std::vector<Count> out;
  for (auto [value, times] : counts) out.insert(out.end(), times, value);
  while (out.size() < classes) out.push_back(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string show(const std::vector<Count>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::vector<RkProfile> figures() {
  std::vector<RkProfile> out;
  for (const auto& name : figure_entry_names()) out.push_back(get(name));
  return out;
}

void figure_regression(Check& c) {
  const auto fig1a = counts(get("fig1a"));
  c.expect(fig1a.total == 3 && fig1a.prime_count == 2 && fig1a.limit_count == 1, "fig1a is not 3 = 2 + 1");
  const std::vector<std::pair<Count, Count>> fig1b{{2, 2}, {3, 1}, {3, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto name = "fig1b." + std::to_string(i + 1);
    const auto r = counts(get(name));
    c.expect(r.total == 4 && r.prime_count == fig1b[i].first && r.limit_count == fig1b[i].second,
             name + " reports " + std::to_string(r.prime_count) + "+" + std::to_string(r.limit_count));
  }
  for (int i = 1; i <= 8; ++i) {
    const auto name = "fig2." + std::to_string(i);
    c.expect(counts(get(name)).total == 5, name + " total is not 5");
  }
}

void example_suite(Check& c) {
  struct Example {
    std::string label;
    std::vector<std::string> factors;
    Count prime, limit, total;
    std::vector<Count> multiset;
  };
  const std::vector<Example> examples{
      {"Ex1", {"fig1a", "fig1b.1"}, 4, 8, 12, {0, 1, 2, 5}},
      {"Ex2", {"fig1a", "fig1b.1", "fig2.1"}, 8, 52, 60, {0, 1, 2, 3, 5, 7, 11, 23}},
      {"Ex3", {"fig1b.3", "fig2.2"}, 9, 11, 20, {0, 0, 1, 1, 1, 1, 1, 3, 3}},
      {"Ex4", {"fig1b.3", "fig2.2", "fig2.3"}, 27, 73, 100,
       histogram(27, {{1, 10}, {2, 2}, {3, 4}, {5, 5}, {11, 2}})},
      {"Ex5", {"fig1b.1", "fig2.2"}, 6, 14, 20, {0, 1, 1, 2, 5, 5}},
      {"Ex6", {"fig1b.1", "fig2.2", "fig2.1"}, 12, 88, 100,
       histogram(12, {{1, 2}, {2, 1}, {3, 1}, {5, 2}, {7, 2}, {11, 1}, {23, 2}})},
      {"Ex7", {"fig1b.1", "fig2.3"}, 6, 14, 20, {0, 0, 2, 2, 2, 8}},
      {"Ex8", {"fig1b.1", "fig2.3", "fig2.1"}, 12, 88, 100,
       histogram(12, {{2, 3}, {3, 2}, {8, 1}, {11, 3}, {35, 1}})},
      {"Ex9", {"fig1b.3", "fig2.2", "fig1b.1"}, 18, 62, 80,
       histogram(18, {{1, 5}, {2, 2}, {3, 2}, {5, 5}, {11, 2}})},
      {"Ex10", {"fig1b.3", "fig2.1", "fig2.3"}, 18, 82, 100,
       histogram(18, {{1, 2}, {2, 2}, {3, 4}, {5, 1}, {7, 2}, {11, 2}, {23, 1}})},
  };
  for (const auto& ex : examples) {
    std::vector<RkProfile> factors;
    for (const auto& f : ex.factors) factors.push_back(get(f));
    const auto product = product_many(factors);
    const auto r = counts(product);
    c.expect(r.prime_count == ex.prime && r.limit_count == ex.limit && r.total == ex.total,
             ex.label + " totals " + std::to_string(r.prime_count) + "+" + std::to_string(r.limit_count) + "=" +
                 std::to_string(r.total));
    const auto got = limit_multiset(product);
    c.expect(got == ex.multiset, ex.label + " multiset " + show(got) + " expected " + show(ex.multiset));
  }
}

void parametric_identities(Check& c) {
  for (Count k = 1; k <= 10; ++k)
    for (Count m = 1; m <= 10; ++m) {
      const auto tag = " k=" + std::to_string(k) + " m=" + std::to_string(m);
      const auto ex11 = counts(get("param.ex11", {{"k", k}, {"m", m}}));
      c.expect(ex11.total == (k + 3) * (m + 2) && ex11.limit_count == k + m + (k + 2 * m + k * m), "ex11" + tag);
      const auto ex12 = counts(get("param.ex12", {{"k", k}, {"m", m}}));
      c.expect(ex12.total == (k + 3) * (m + 3) && ex12.limit_count == k + m + (2 * k + 2 * m + k * m),
               "ex12" + tag);
      const auto ex1 = counts(pareto_product(chain_profile({0, k}), chain_profile({0, m})));
      c.expect(ex1.total == (k + 2) * (m + 2) && ex1.limit_count == 0 + k + m + (k + m + k * m), "ex1" + tag);
    }
}

void oracle_equivalence(Check& c) {
  const auto base = figures();
  const auto names = figure_entry_names();
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) {
      const auto fast = pareto_product(base[i], base[j]);
      const auto slow = oracle_product(base[i], base[j]);
      c.expect(is_isomorphic(fast, slow) && counts(fast) == counts(slow), names[i] + " x " + names[j]);
    }
}

void algebraic_laws(Check& c) {
  const auto base = figures();
  const auto names = figure_entry_names();
  const auto identity = chain_profile({0});
  for (std::size_t i = 0; i < base.size(); ++i) {
    c.expect(is_isomorphic(pareto_product(base[i], identity), base[i]), names[i] + " x point");
    c.expect(is_isomorphic(pareto_product(identity, base[i]), base[i]), "point x " + names[i]);
    for (std::size_t j = 0; j < base.size(); ++j)
      c.expect(is_isomorphic(pareto_product(base[i], base[j]), pareto_product(base[j], base[i])),
               names[i] + " x " + names[j] + " commutes");
  }
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  for (int t = 0; t < 30; ++t) {
    const auto a = pick(rng), b = pick(rng), d = pick(rng);
    c.expect(is_isomorphic(pareto_product(pareto_product(base[a], base[b]), base[d]),
                           pareto_product(base[a], pareto_product(base[b], base[d]))),
             "(" + names[a] + " x " + names[b] + ") x " + names[d] + " associates");
  }
}

bool boolean(const QuotientPoset& q) { return is_lattice(q) && is_boolean_lattice(q); }

void lattice_preservation(Check& c) {
  const auto base = figures();
  const auto names = figure_entry_names();
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) {
      const auto& qa = base[i].quotient();
      const auto& qb = base[j].quotient();
      const auto product = pareto_product(base[i], base[j]);
      const auto& q = product.quotient();
      c.expect(is_lattice(q) == (is_lattice(qa) && is_lattice(qb)), names[i] + " x " + names[j] + " lattice");
      c.expect(boolean(q) == (boolean(qa) && boolean(qb)), names[i] + " x " + names[j] + " boolean");
    }
  const auto ex1 = pareto_product(get("fig1a"), get("fig1b.1"));
  c.expect(is_boolean_lattice(ex1.quotient()), "Ex1 is not Boolean");
  const auto ex2 = pareto_product(ex1, get("fig2.1"));
  c.expect(ex2.quotient().size() == 8 && is_boolean_lattice(ex2.quotient()), "Ex2 is not a Boolean cube");
  const auto ex3 = pareto_product(get("fig1b.3"), get("fig2.2"));
  c.expect(is_lattice(ex3.quotient()) && !is_boolean_lattice(ex3.quotient()), "Ex3 is not a non-Boolean lattice");
}

void enumeration_counts(Check& c) {
  const std::vector<std::pair<Count, std::vector<std::string>>> anchors{
      {3, {"fig1a"}},
      {4, {"fig1b.1", "fig1b.2", "fig1b.3"}},
      {5, {"fig2.1", "fig2.2", "fig2.3", "fig2.4", "fig2.5", "fig2.6", "fig2.7", "fig2.8"}},
  };
  for (const auto& [total, entries] : anchors) {
    const auto result = enumerate_profiles(total);
    c.expect(result.profiles.size() == entries.size(),
             "total " + std::to_string(total) + " gives " + std::to_string(result.profiles.size()));
    std::vector<CanonicalProfile> expected;
    for (const auto& e : entries) expected.push_back(canonical_form(get(e)));
    std::sort(expected.begin(), expected.end());
    c.expect(expected == result.profiles, "total " + std::to_string(total) + " differs from the figures");
  }
  for (Count total = 2; total <= 7; ++total) {
    const auto fast = enumerate_profiles(total).profiles.size();
    const auto slow = test_support::naive_admissible_count(total);
    c.expect(fast == slow, "total " + std::to_string(total) + ": " + std::to_string(fast) + " vs naive " +
                               std::to_string(slow));
  }
}

void format_round_trip(Check& c) {
  for (const auto& entry : catalog_entries()) {
    Parameters params;
    for (const auto& key : entry.parameters) params[key] = 3;
    const auto profile = get(entry.name, params);
    const auto text = serialize(profile);
    const auto back = parse(text);
    c.expect(serialize(back) == text, entry.name + " serialization is not stable");
    c.expect(is_isomorphic(back, profile) && back == profile, entry.name + " parse changes the profile");
  }
}

bool at_least(Trend have, Trend need) { return static_cast<int>(have) >= static_cast<int>(need); }

void monotonicity_transfer(Check& c) {
  const auto base = figures();
  const auto names = figure_entry_names();
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) {
      const auto pair = names[i] + " x " + names[j];
      const auto fa = monotonicity(base[i]);
      const auto fb = monotonicity(base[j]);
      const auto fp = monotonicity(pareto_product(base[i], base[j]));
      auto factors_at_least = [&](Trend size, Trend limit) {
        return at_least(fa.size, size) && at_least(fa.limit, limit) && at_least(fb.size, size) &&
               at_least(fb.limit, limit);
      };
      if (factors_at_least(Trend::weak, Trend::strict))
        c.expect(fp.limit == Trend::strict, pair + " limit flag not strict");
      if (factors_at_least(Trend::weak, Trend::weak))
        c.expect(at_least(fp.limit, Trend::weak), pair + " limit flag not weak");
      for (const auto& f : {fa, fb}) {
        c.expect(at_least(f.size, fp.size), pair + " factor size flag weaker than product");
        c.expect(at_least(f.limit, fp.limit), pair + " factor limit flag weaker than product");
      }
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 figure regression", figure_regression},
      {"2 example suite", example_suite},
      {"3 parametric identities", parametric_identities},
      {"4 oracle equivalence", oracle_equivalence},
      {"5 algebraic laws", algebraic_laws},
      {"6 lattice preservation", lattice_preservation},
      {"7 enumeration counts", enumeration_counts},
      {"8 format round-trip", format_round_trip},
      {"9 monotonicity transfer", monotonicity_transfer},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failed == 0;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS " : "FAIL ") << label << " (" << c.checks << " checks)\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    if (c.failed > c.failures.size()) std::cout << "    ... " << c.failed - c.failures.size() << " more\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
