#include "experiments.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "dminor/canonical.hpp"
#include "dminor/minor.hpp"
#include "dminor/oracle/brute_force.hpp"
#include "dminor/pathwidth.hpp"

namespace dminor::experiments {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `body(i)` for every instance in parallel and collects the records in
// index order; each record gets its wall-clock time.
template <class F>
Json fan_out(int count, F&& body) {
  std::vector<Json> records(count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    const auto start = Clock::now();
    Json r = body(i);
    r["seconds"] = seconds_since(start);
    records[i] = std::move(r);
  }
  return Json(records);
}

Json report(const std::string& name, Json params, Json instances, Json summary,
            bool passed) {
  return {{"schema", schema::experiment}, {"experiment", name},  {"parameters", params},
          {"instances", instances},      {"summary", summary},  {"passed", passed}};
}

std::vector<Digraph> distinct(const std::vector<Digraph>& graphs) {
  std::map<std::string, Digraph> seen;
  for (const Digraph& g : graphs) seen.emplace(canonical_key(g), canonical_form(g));
  std::vector<Digraph> out;
  for (auto& [key, g] : seen) out.push_back(g);
  return out;
}

Json counterexample_super(const Params& p) {
  if (p.n < 3 || p.n > 8) throw std::invalid_argument("counterexample-super needs 3 <= n <= 8");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 3; i <= p.n; ++i)
    for (int j = i; j <= p.n; ++j) pairs.emplace_back(i, j);
  Json instances = fan_out(static_cast<int>(pairs.size()), [&](int idx) {
    auto [i, j] = pairs[idx];
    const MinorSearchResult res = find_minor(super_tournament(i), super_tournament(j));
    const bool expected = i == j;
    bool ok = (res.status == SearchStatus::found) == expected &&
              res.status != SearchStatus::budget_exceeded;
    if (res.mapping) ok = ok && verify_mapping(super_tournament(i), super_tournament(j), *res.mapping).valid();
    return Json{{"i", i}, {"j", j}, {"status", to_string(res.status)},
                {"nodes", res.nodes}, {"ok", ok}};
  });
  int failures = 0;
  for (const Json& r : instances) failures += !r["ok"].get<bool>();
  return report("counterexample-super", {{"n", p.n}}, instances,
                {{"pairs", pairs.size()}, {"failures", failures}}, failures == 0);
}

Json counterexample_stability(const Params& p) {
  if (p.n < 3 || p.n > 4) throw std::invalid_argument("counterexample-stability needs n in 3..4");
  const Digraph small = stability_two(2);
  const Digraph g = stability_two(p.n);
  const auto start = Clock::now();
  const MinorSearchResult sub = find_subdigraph(small, g);
  const double sub_seconds = seconds_since(start);

  std::vector<Mask> sets;
  const auto out = g.out_masks(), in = g.in_masks();
  for (Mask s = 1; s < (Mask{1} << g.vertex_count()); ++s)
    if (std::popcount(s) >= 2 && mask_strongly_connected(out, in, s)) sets.push_back(s);
  Json contractions = fan_out(static_cast<int>(sets.size()), [&](int idx) {
    const Contraction c = contract_vertices(g, VertexSet::from_mask(sets[idx]));
    const bool two = oracle::has_two_disjoint_cycles(c.graph);
    return Json{{"contracted", VertexSet::from_mask(sets[idx]).items()}, {"two_disjoint_cycles", two}};
  });
  int bad = 0;
  for (const Json& r : contractions) bad += r["two_disjoint_cycles"].get<bool>();
  const bool sub_ok = sub.status == SearchStatus::absent;
  Json instances = Json::array();
  instances.push_back({{"check", "subdigraph"},
                       {"status", to_string(sub.status)},
                       {"nodes", sub.nodes},
                       {"seconds", sub_seconds},
                       {"ok", sub_ok}});
  for (Json& r : contractions) {
    r["check"] = "contraction";
    r["ok"] = !r["two_disjoint_cycles"].get<bool>();
    instances.push_back(std::move(r));
  }
  Json summary{{"stability_number_small", stability_number(small)},
               {"stability_number", stability_number(g)},
               {"two_disjoint_cycles_in_host", oracle::has_two_disjoint_cycles(g)},
               {"subdigraph", to_string(sub.status)},
               {"contractions", sets.size()},
               {"contractions_with_two_disjoint_cycles", bad}};
  return report("counterexample-stability", {{"n", p.n}}, instances, summary, sub_ok && bad == 0);
}

Json oracle_equivalence(const Params& p) {
  if (p.n < 1 || p.n > 4) throw std::invalid_argument("oracle-equivalence needs 1 <= n <= 4");
  if (p.count < 0 || p.random_size < 1 || p.random_size > 5)
    throw std::invalid_argument("oracle-equivalence needs count >= 0 and random size in 1..5");
  std::vector<Digraph> hosts;
  for (int n = 1; n <= p.n; ++n)
    for (const Digraph& t : distinct(oracle::all_tournaments(n))) hosts.push_back(t);
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < p.count; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p.random_size));
    hosts.push_back(random_digraph(n, rng()));
  }
  const auto start = Clock::now();
  const EquivalenceOutcome o = check_minor_equivalence(hosts);
  Json summary{{"hosts", o.hosts},
               {"candidates", o.candidates},
               {"searches", o.searches},
               {"mismatches", o.mismatches},
               {"seconds", seconds_since(start)}};
  return report("oracle-equivalence",
                {{"n", p.n}, {"count", p.count}, {"random_size", p.random_size}, {"seed", p.seed}},
                Json::array(), summary, o.mismatches == 0);
}

Json pathwidth_oracle(const Params& p) {
  if (p.n < 1 || p.n > 9 || p.count < 0)
    throw std::invalid_argument("pathwidth-oracle needs 1 <= n <= 9 and count >= 0");
  Json instances = fan_out(p.count, [&](int i) {
    std::mt19937_64 rng(p.seed + static_cast<std::uint64_t>(i));
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p.n));
    const bool tournament = i % 2 == 0;
    const Digraph g = tournament ? random_tournament(n, rng()) : random_digraph(n, rng());
    const PathwidthResult fast = exact_pathwidth(g);
    const int serial = exact_pathwidth_serial(g).width;
    const int brute = oracle::pathwidth(g);
    const bool ok = fast.width == serial && serial == brute &&
                    is_path_decomposition(g, fast.decomposition) &&
                    fast.decomposition.width() == fast.width;
    return Json{{"family", tournament ? "random_tournament" : "random_digraph"},
                {"n", n}, {"parallel", fast.width}, {"serial", serial}, {"oracle", brute}, {"ok", ok}};
  });
  int failures = 0;
  for (const Json& r : instances) failures += !r["ok"].get<bool>();
  return report("pathwidth-oracle", {{"n", p.n}, {"count", p.count}, {"seed", p.seed}}, instances,
                {{"failures", failures}}, failures == 0);
}

Json wqo_sample(const Params& p) {
  if (p.n < 3 || p.n > 8 || p.count < 2)
    throw std::invalid_argument("wqo-sample needs 3 <= n <= 8 and count >= 2");
  std::mt19937_64 rng(p.seed);
  std::vector<Digraph> seq;
  for (int i = 0; i < p.count; ++i) {
    const int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(p.n - 2));
    seq.push_back(random_tournament(n, rng()));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p.count; ++i)
    for (int j = i + 1; j < p.count; ++j) pairs.emplace_back(i, j);
  Json instances = fan_out(static_cast<int>(pairs.size()), [&](int idx) {
    auto [i, j] = pairs[idx];
    const MinorSearchResult res = find_minor(seq[i], seq[j], p.budget);
    bool valid = true;
    if (res.mapping) valid = verify_mapping(seq[i], seq[j], *res.mapping).valid();
    return Json{{"i", i}, {"j", j}, {"n_i", seq[i].vertex_count()}, {"n_j", seq[j].vertex_count()},
                {"status", to_string(res.status)}, {"nodes", res.nodes}, {"valid", valid}};
  });
  int found = 0, budget = 0, invalid = 0;
  Json first_good = nullptr;
  for (const Json& r : instances) {
    const std::string s = r["status"];
    found += s == "found";
    budget += s == "budget";
    invalid += !r["valid"].get<bool>();
    if (s == "found" && first_good.is_null()) first_good = {r["i"], r["j"]};
  }
  Json summary{{"sequence_length", p.count},
               {"pairs", pairs.size()},
               {"comparable", found},
               {"budget_exits", budget},
               {"invalid_mappings", invalid},
               {"comparable_fraction", pairs.empty() ? 0.0 : double(found) / double(pairs.size())},
               {"first_good_pair", first_good}};
  return report("wqo-sample",
                {{"n", p.n}, {"count", p.count}, {"seed", p.seed}, {"budget", p.budget}}, instances,
                summary, invalid == 0);
}

}  // namespace

std::vector<std::string> names() {
  return {"counterexample-super", "counterexample-stability", "oracle-equivalence",
          "pathwidth-oracle", "wqo-sample"};
}

Json run(const std::string& name, const Params& params) {
  if (name == "counterexample-super") return counterexample_super(params);
  if (name == "counterexample-stability") return counterexample_stability(params);
  if (name == "oracle-equivalence") return oracle_equivalence(params);
  if (name == "pathwidth-oracle") return pathwidth_oracle(params);
  if (name == "wqo-sample") return wqo_sample(params);
  throw std::invalid_argument("unknown experiment: " + name);
}

EquivalenceOutcome check_minor_equivalence(const std::vector<Digraph>& hosts) {
  const int count = static_cast<int>(hosts.size());
  std::vector<std::vector<Digraph>> closures(count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) closures[i] = closure_oracle(hosts[i]);

  std::map<std::string, Digraph> universe;
  for (const auto& c : closures)
    for (const Digraph& d : c) universe.emplace(canonical_key(d), d);
  for (int n = 0; n <= 3; ++n)
    for (const Digraph& d : oracle::all_simple_digraphs(n))
      universe.emplace(canonical_key(d), canonical_form(d));
  std::vector<std::pair<std::string, Digraph>> candidates(universe.begin(), universe.end());

  EquivalenceOutcome out;
  out.hosts = count;
  out.candidates = static_cast<int>(candidates.size());
  std::vector<char> bad(count, 0);
  std::vector<std::int64_t> searches(count, 0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    std::set<std::string> expected;
    for (const Digraph& d : closures[i]) expected.insert(canonical_key(d));
    std::set<std::string> positive;
    for (const auto& [key, h] : candidates) {
      if (h.vertex_count() > hosts[i].vertex_count()) continue;
      ++searches[i];
      const MinorSearchResult res = find_minor(h, hosts[i]);
      if (res.status == SearchStatus::budget_exceeded) bad[i] = 1;
      if (res.status != SearchStatus::found) continue;
      if (!verify_mapping(h, hosts[i], *res.mapping).valid()) bad[i] = 1;
      positive.insert(key);
    }
    if (positive != expected) bad[i] = 1;
  }
  for (int i = 0; i < count; ++i) {
    out.mismatches += bad[i];
    out.searches += searches[i];
  }
  return out;
}

}  // namespace dminor::experiments
