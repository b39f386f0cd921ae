// distspec: distance spectra of graphs from the command line.
//
// Exit status: 0 on success, 1 when a verification finds a mismatch, 2 on
// usage errors (bad flags, rejected parameters, exceeded budgets).

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "distspec/bounds.hpp"
#include "distspec/closed_forms.hpp"
#include "distspec/distance.hpp"
#include "distspec/errors.hpp"
#include "distspec/exact_linalg.hpp"
#include "distspec/families.hpp"
#include "distspec/jacobi.hpp"
#include "distspec/srg.hpp"

namespace {

using namespace distspec;
using nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Family {
  std::size_t arity;
  std::string usage;
  std::function<Graph(const std::vector<int>&)> graph;
  /// Empty when the family has no closed form.
  std::function<ClosedFormSpectrum(const std::vector<int>&)> closed;
};

const std::map<std::string, Family>& families() {
  static const std::map<std::string, Family> table{
      {"cycle", {1, "n", [](auto& p) { return cycle(p[0]); }, [](auto& p) { return cycle_spectrum(p[0]); }}},
      {"path", {1, "n", [](auto& p) { return path(p[0]); }, {}}},
      {"complete",
       {1, "n", [](auto& p) { return complete(p[0]); }, [](auto& p) { return johnson_spectrum(p[0], 1); }}},
      {"hypercube",
       {1, "d", [](auto& p) { return hypercube(p[0]); }, [](auto& p) { return hamming_spectrum(p[0], 2); }}},
      {"hamming",
       {2, "d n", [](auto& p) { return hamming(p[0], p[1]); }, [](auto& p) { return hamming_spectrum(p[0], p[1]); }}},
      {"shrikhande",
       {0, "", [](auto&) { return shrikhande(); }, [](auto&) { return shrikhande_power_spectrum(1); }}},
      {"shrikhande-power",
       {1, "m", [](auto& p) { return doob(p[0], 0); }, [](auto& p) { return shrikhande_power_spectrum(p[0]); }}},
      {"doob", {2, "m d", [](auto& p) { return doob(p[0], p[1]); }, [](auto& p) { return doob_spectrum(p[0], p[1]); }}},
      {"johnson",
       {2, "n r", [](auto& p) { return johnson(p[0], p[1]); }, [](auto& p) { return johnson_spectrum(p[0], p[1]); }}},
      {"kneser",
       {2, "n r", [](auto& p) { return kneser(p[0], p[1]); }, [](auto& p) { return kneser_spectrum(p[0], p[1]); }}},
      {"odd",
       {1, "r", [](auto& p) { return odd_graph(p[0]); }, [](auto& p) { return kneser_spectrum(2 * p[0] + 1, p[0]); }}},
      {"double-odd",
       {1, "r", [](auto& p) { return double_odd(p[0]); }, [](auto& p) { return double_odd_spectrum(p[0]); }}},
      {"halved-cube",
       {1, "d", [](auto& p) { return halved_cube(p[0]); }, [](auto& p) { return halved_cube_spectrum(p[0]); }}},
      {"cocktail-party",
       {1, "m", [](auto& p) { return cocktail_party(p[0]); }, [](auto& p) { return cocktail_party_spectrum(p[0]); }}},
      {"petersen", {0, "", [](auto&) { return petersen(); }, [](auto&) { return kneser_spectrum(5, 2); }}},
      {"icosahedron", {0, "", [](auto&) { return icosahedron(); }, [](auto&) { return icosahedron_spectrum(); }}},
      {"dodecahedron", {0, "", [](auto&) { return dodecahedron(); }, [](auto&) { return dodecahedron_spectrum(); }}},
      {"lollipop", {2, "k l", [](auto& p) { return lollipop(p[0], p[1]); }, {}}},
      {"barbell", {3, "k m l", [](auto& p) { return generalized_barbell(p[0], p[1], p[2]); }, {}}},
      {"hypercube-leaf", {1, "d", [](auto& p) { return hypercube_with_leaf(p[0]); }, {}}},
  };
  return table;
}

const Family& lookup(const std::string& name) {
  const auto& table = families();
  const auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& [key, f] : table) known += (known.empty() ? "" : ", ") + key;
    throw InvalidArgument("unknown family \"" + name + "\"; known families: " + known);
  }
  return it->second;
}

std::vector<int> to_ints(const std::vector<std::string>& words) {
  std::vector<int> out;
  for (const auto& w : words) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(w, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != w.size() || w.empty()) throw InvalidArgument("expected an integer parameter, got \"" + w + "\"");
    out.push_back(v);
  }
  return out;
}

void check_arity(const std::string& name, const Family& f, const std::vector<int>& params) {
  if (params.size() != f.arity) {
    throw InvalidArgument("family " + name + " takes " + std::to_string(f.arity) + " parameter(s)" +
                          (f.usage.empty() ? "" : " (" + f.usage + ")") + ", got " + std::to_string(params.size()));
  }
}

Graph read_graph_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot open graph file " + file);
  return read_edge_list(in);
}

/// A graph named either by --graph FILE or by FAMILY PARAMS...
struct GraphSource {
  std::string file;
  std::vector<std::string> words;

  void attach(CLI::App* cmd) {
    cmd->add_option("family", words, "family name followed by its integer parameters");
    cmd->add_option("--graph", file, "edge-list file (header \"n m\", then one edge per line)");
  }

  Graph build() const {
    if (!file.empty()) {
      if (!words.empty()) throw InvalidArgument("give either --graph or a family, not both");
      return read_graph_file(file);
    }
    if (words.empty()) throw InvalidArgument("missing family (or --graph FILE)");
    const Family& f = lookup(words.front());
    const auto params = to_ints({words.begin() + 1, words.end()});
    check_arity(words.front(), f, params);
    return f.graph(params);
  }
};

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", v == 0.0 ? 0.0 : v);
  return buffer;
}

double round12(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

json inertia_json(const Inertia& in) { return {{"positive", in.positive}, {"zero", in.zero}, {"negative", in.negative}}; }

unsigned worker_count(unsigned flag) {
  if (const char* env = std::getenv("DISTSPEC_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("DISTSPEC_WORKERS must be a positive integer, got \"") + env + "\"");
  }
  return std::max(1u, flag);
}

/// Runs jobs on up to `workers` threads; results keep job order.
template <typename Result>
std::vector<Result> run_all(const std::vector<std::function<Result()>>& jobs, unsigned workers) {
  std::vector<Result> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < jobs.size(); i = cursor++) {
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1 || jobs.size() <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, jobs.size()); ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

/// "a..b" or "a".
std::pair<int, int> parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = to_ints({text}).front();
      return {v, v};
    }
    const auto ends = to_ints({text.substr(0, dots), text.substr(dots + 2)});
    if (ends[0] > ends[1]) throw InvalidArgument("empty range");
    return {ends[0], ends[1]};
  } catch (const InvalidArgument&) {
    throw InvalidArgument(std::string("bad range for ") + flag + ": \"" + text + "\" (expected a..b or a)");
  }
}

std::vector<int> range_values(const std::string& text, const char* flag) {
  const auto [lo, hi] = parse_range(text, flag);
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOptions {
  GraphSource source;
  bool verify = false;
  bool numeric = false;
  double tol = 1e-8;
  double eigen_tol = kDefaultEigenTolerance;
};

int cmd_spectrum(const SpectrumOptions& o) {
  if (!(o.tol > 0.0) || !(o.eigen_tol > 0.0)) throw InvalidArgument("tolerances must be positive");
  json out;
  std::optional<ClosedFormSpectrum> closed;
  Graph g = o.source.build();
  if (o.source.file.empty()) {
    const std::string& name = o.source.words.front();
    const Family& f = lookup(name);
    const auto params = to_ints({o.source.words.begin() + 1, o.source.words.end()});
    out["family"] = name;
    out["params"] = params;
    if (!f.closed) {
      out["note"] = "no closed form for this family; numeric spectrum only";
    } else {
      try {
        closed = f.closed(params);
      } catch (const InvalidArgument& e) {
        out["note"] = std::string("closed form unavailable: ") + e.what() + "; numeric spectrum only";
      }
    }
  } else {
    out["graph"] = o.source.file;
  }
  out["order"] = g.order();
  const bool want_numeric = o.verify || o.numeric || !closed;
  if (closed) {
    out["closed_form"] = to_json(closed->spectrum);
    out["provenance"] = closed->provenance;
  }
  std::optional<Spectrum> numeric;
  if (want_numeric) {
    numeric = numeric_spectrum(distance_matrix(g), o.eigen_tol);
    out["numeric"] = to_json(*numeric);
  }
  int status = 0;
  if (o.verify && closed) {
    const bool match = spectra_match(closed->spectrum, *numeric, o.tol);
    out["match"] = match;
    const double deviation = max_value_deviation(closed->spectrum, *numeric);
    out["max_deviation"] = std::isfinite(deviation) ? json(round12(deviation)) : json(nullptr);
    if (!match) status = kExitMismatch;
  }
  std::cout << out.dump(2) << "\n";
  return status;
}

// ------------------------------------------------------------------ verify

struct InstanceResult {
  std::string label;
  std::size_t order = 0;
  bool ok = false;
  /// Field name to value, printed in insertion order.
  std::vector<std::pair<std::string, std::string>> fields;
};

struct VerifyOptions {
  std::string family;
  std::string n, r, d, m, k, l;
  int max = 20;
  std::string format = "text";
  double tol = 1e-8;
  unsigned workers = 1;
};

std::string yes(bool b) { return b ? "true" : "false"; }

std::function<InstanceResult()> spectrum_job(std::string label, std::function<Graph()> graph,
                                             std::function<Spectrum()> closed, double tol) {
  return [=] {
    const Graph g = graph();
    const Spectrum expected = closed();
    const Spectrum actual = numeric_spectrum(distance_matrix(g));
    InstanceResult r;
    r.label = label;
    r.order = g.order();
    r.ok = spectra_match(expected, actual, tol);
    const double deviation = max_value_deviation(expected, actual);
    r.fields = {{"match", yes(r.ok)}, {"max_deviation", std::isfinite(deviation) ? format_double(deviation) : "inf"}};
    return r;
  };
}

std::vector<std::function<InstanceResult()>> verify_jobs(const VerifyOptions& o) {
  std::vector<std::function<InstanceResult()>> jobs;
  auto grid = [](const std::string& text, const char* flag, const std::string& fallback) {
    return range_values(text.empty() ? fallback : text, flag);
  };
  const std::string& f = o.family;
  const double tol = o.tol;
  if (f == "barbell" || f == "lollipop") {
    const bool lolli = f == "lollipop";
    for (int k : grid(o.k, "--k", "2..6"))
      for (int m : lolli ? std::vector<int>{2} : grid(o.m, "--m", "2..6"))
        for (int l : grid(o.l, "--l", "0..6")) {
          jobs.push_back([=] {
            InstanceResult r;
            const Graph g = lolli ? lollipop(k, l) : generalized_barbell(k, m, l);
            const IntSymMatrix d = distance_matrix(g);
            const BigInt formula = lolli ? lollipop_determinant(k, l) : barbell_determinant(k, m, l);
            const BigInt exact = det_exact(d);
            const Inertia in = inertia_exact(d);
            const Inertia expected{1, 0, g.order() - 1};
            r.label = lolli ? "k=" + std::to_string(k) + " l=" + std::to_string(l)
                            : "k=" + std::to_string(k) + " m=" + std::to_string(m) + " l=" + std::to_string(l);
            r.order = g.order();
            r.ok = formula == exact && in == expected;
            r.fields = {{"det_formula", formula.str()},
                        {"det_exact", exact.str()},
                        {"det_match", yes(formula == exact)},
                        {"inertia_match", yes(in == expected)}};
            return r;
          });
        }
  } else if (f == "johnson") {
    for (int n : grid(o.n, "--n", "3..9"))
      for (int r : o.r.empty() ? range_values("1.." + std::to_string(n - 1), "--r") : grid(o.r, "--r", ""))
        jobs.push_back(spectrum_job("n=" + std::to_string(n) + " r=" + std::to_string(r), [=] { return johnson(n, r); },
                                    [=] { return johnson_spectrum(n, r).spectrum; }, tol));
  } else if (f == "kneser") {
    for (int n : grid(o.n, "--n", "3..9"))
      for (int r = 1; 2 * r < n; ++r) {
        if (!o.r.empty()) {
          const auto [lo, hi] = parse_range(o.r, "--r");
          if (r < lo || r > hi) continue;
        }
        jobs.push_back(spectrum_job("n=" + std::to_string(n) + " r=" + std::to_string(r), [=] { return kneser(n, r); },
                                    [=] { return kneser_spectrum(n, r).spectrum; }, tol));
      }
  } else if (f == "hamming") {
    for (int d : grid(o.d, "--d", "1..4"))
      for (int n : grid(o.n, "--n", "2..4"))
        jobs.push_back(spectrum_job("d=" + std::to_string(d) + " n=" + std::to_string(n), [=] { return hamming(d, n); },
                                    [=] { return hamming_spectrum(d, n).spectrum; }, tol));
  } else if (f == "doob") {
    for (int m : grid(o.m, "--m", "1..2"))
      for (int d : grid(o.d, "--d", "0..1"))
        jobs.push_back(spectrum_job("m=" + std::to_string(m) + " d=" + std::to_string(d), [=] { return doob(m, d); },
                                    [=] { return doob_spectrum(m, d).spectrum; }, tol));
  } else if (f == "halved-cube") {
    for (int d : grid(o.d, "--d", "4..9"))
      jobs.push_back(spectrum_job("d=" + std::to_string(d), [=] { return halved_cube(d); },
                                  [=] { return halved_cube_spectrum(d).spectrum; }, tol));
  } else if (f == "cycle") {
    for (int n : grid(o.n, "--n", "3..40"))
      jobs.push_back(spectrum_job("n=" + std::to_string(n), [=] { return cycle(n); },
                                  [=] { return cycle_spectrum(n).spectrum; }, tol));
  } else if (f == "double-odd") {
    for (int r : grid(o.r, "--r", "2..3"))
      jobs.push_back(spectrum_job("r=" + std::to_string(r), [=] { return double_odd(r); },
                                  [=] { return double_odd_spectrum(r).spectrum; }, tol));
  } else if (f == "cocktail-party") {
    for (int m : grid(o.m, "--m", "2..8"))
      jobs.push_back(spectrum_job("m=" + std::to_string(m), [=] { return cocktail_party(m); },
                                  [=] { return cocktail_party_spectrum(m).spectrum; }, tol));
  } else if (f == "srg") {
    // Realized strongly regular families against the parameter formulas.
    std::vector<std::tuple<std::string, SrgParams, std::function<Graph()>>> cases{
        {"shrikhande", {16, 6, 2, 2}, [] { return shrikhande(); }},
        {"petersen", {10, 3, 0, 1}, [] { return petersen(); }}};
    for (int m : grid(o.m, "--m", "2..8")) {
      cases.push_back({"cocktail-party m=" + std::to_string(m), {2 * m, 2 * m - 2, 2 * m - 4, 2 * m - 2},
                       [m] { return cocktail_party(m); }});
      if (m >= 4)
        cases.push_back({"line-complete m=" + std::to_string(m), {m * (m - 1) / 2, 2 * (m - 2), m - 2, 4},
                         [m] { return johnson(m, 2); }});
      cases.push_back({"hamming-square m=" + std::to_string(m), {m * m, 2 * (m - 1), m - 2, 2},
                       [m] { return hamming(2, m); }});
    }
    for (const auto& [label, params, graph] : cases) {
      jobs.push_back([=] {
        const Graph g = graph();
        const IntSymMatrix d = distance_matrix(g);
        const Spectrum expected = srg_distance_spectrum(params);
        const Spectrum actual = numeric_spectrum(d);
        const Inertia in = inertia_exact(d);
        InstanceResult r;
        r.label = label + " " + params.to_string();
        r.order = g.order();
        const bool match = spectra_match(expected, actual, tol);
        const bool optimism = is_optimistic(params) == (in.positive > in.negative);
        r.ok = match && optimism;
        r.fields = {{"match", yes(match)},
                    {"max_deviation", format_double(max_value_deviation(expected, actual))},
                    {"optimism_agrees", yes(optimism)}};
        return r;
      });
    }
  } else if (f == "lemma-identities") {
    if (o.max < 2) throw InvalidArgument("--max must be at least 2");
    for (int selector = 1; selector <= 6; ++selector) {
      const int lowest = selector == 1 ? 1 : 2;
      for (int p = lowest; p <= o.max; ++p)
        for (int q = 0; q <= (selector == 6 ? o.max / 2 : 0); ++q) {
          jobs.push_back([=] {
            const auto [lhs, rhs] = lemma_identities(selector, p, q);
            InstanceResult r;
            r.label = "identity=" + std::to_string(selector) + " p=" + std::to_string(p) +
                      (selector == 6 ? " q=" + std::to_string(q) : "");
            r.ok = lhs == rhs;
            r.fields = {{"lhs", lhs.str()}, {"rhs", rhs.str()}, {"match", yes(r.ok)}};
            return r;
          });
        }
    }
  } else {
    throw InvalidArgument("verify: unknown family \"" + f +
                          "\"; expected barbell, lollipop, johnson, kneser, hamming, doob, halved-cube, cycle, "
                          "double-odd, cocktail-party, srg or lemma-identities");
  }
  return jobs;
}

int cmd_verify(const VerifyOptions& o) {
  if (o.format != "text" && o.format != "csv" && o.format != "json") {
    throw InvalidArgument("--format must be text, csv or json");
  }
  if (!(o.tol > 0.0)) throw InvalidArgument("--tol must be positive");
  const auto results = run_all(verify_jobs(o), worker_count(o.workers));
  std::size_t failures = 0;
  for (const auto& r : results) failures += !r.ok;

  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      json row{{"instance", r.label}, {"order", r.order}, {"ok", r.ok}};
      for (const auto& [key, value] : r.fields) row[key] = value;
      rows.push_back(row);
    }
    std::cout << json{{"family", o.family}, {"instances", results.size()}, {"failures", failures}, {"results", rows}}.dump(2)
              << "\n";
  } else if (o.format == "csv") {
    std::cout << "instance,order,ok";
    if (!results.empty())
      for (const auto& field : results.front().fields) std::cout << "," << field.first;
    std::cout << "\n";
    for (const auto& r : results) {
      std::cout << '"' << r.label << "\"," << r.order << "," << yes(r.ok);
      for (const auto& field : r.fields) std::cout << "," << field.second;
      std::cout << "\n";
    }
  } else {
    for (const auto& r : results) {
      std::cout << o.family << " " << r.label;
      if (r.order > 0) std::cout << " order=" << r.order;
      for (const auto& [key, value] : r.fields) std::cout << " " << key << "=" << value;
      std::cout << "\n";
    }
    std::cout << o.family << ": " << results.size() - failures << "/" << results.size() << " instances passed\n";
  }
  return failures == 0 ? 0 : kExitMismatch;
}

// ------------------------------------------------------------- srg / trees

int cmd_srg(const std::vector<std::int64_t>& values) {
  const SrgParams p{values[0], values[1], values[2], values[3]};
  const SrgFeasibility f = check_feasibility(p);
  json out{{"params", {p.n, p.k, p.lambda, p.mu}}};
  if (f.status == SrgStatus::Complete) {
    out["feasible"] = true;
    out["complete"] = true;
    out["one_positive"] = classify_one_positive(p);
  } else if (f.status == SrgStatus::Infeasible) {
    out["feasible"] = false;
    out["reason"] = f.reason;
  } else {
    const SrgEigenData e = srg_eigen_data(p);
    const SrgParams c = complement_params(p);
    out["feasible"] = true;
    out["conference"] = is_conference(p);
    out["optimistic"] = is_optimistic(p);
    out["one_positive"] = classify_one_positive(p);
    out["complement"] = {c.n, c.k, c.lambda, c.mu};
    out["complement_optimistic"] = is_feasible(c) ? json(is_optimistic(c)) : json(nullptr);
    out["eigen_data"] = {{"theta", e.theta.to_string()},     {"tau", e.tau.to_string()},
                         {"theta_D", e.theta_d.to_string()}, {"tau_D", e.tau_d.to_string()},
                         {"rho_D", e.rho_d},                 {"m_theta", e.m_theta},
                         {"m_tau", e.m_tau}};
    out["distance_spectrum"] = to_json(srg_distance_spectrum(p));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify_trees(int max_order, unsigned workers) {
  const auto summaries = verify_trees(max_order, worker_count(workers));
  json rows = json::array();
  std::size_t violations = 0;
  for (const auto& s : summaries) {
    json counterexamples = json::array();
    for (const Graph& t : s.counterexamples) {
      std::ostringstream text;
      write_edge_list(text, t);
      counterexamples.push_back(text.str());
    }
    rows.push_back({{"order", s.order},
                    {"trees", s.trees},
                    {"strong_violations", s.strong_violations},
                    {"weak_violations", s.weak_violations},
                    {"ceiling_violations", s.ceiling_violations},
                    {"counterexamples", counterexamples}});
    violations += s.strong_violations + s.weak_violations;
  }
  std::cout << rows.dump(2) << "\n";
  return violations == 0 ? 0 : kExitMismatch;
}

int cmd_zf_bound(const GraphSource& source) {
  const Graph g = source.build();
  const std::size_t z = zero_forcing_number(complement(g));
  const BigRational bound = zf_eigenvalue_bound(g);
  BigInt ceiling = numerator_of(bound) / denominator_of(bound);
  if (ceiling * denominator_of(bound) < numerator_of(bound)) ++ceiling;
  const std::size_t q = distinct_eigenvalue_count(distance_matrix(g));
  const bool holds = BigInt(q) >= ceiling;
  std::cout << json{{"order", g.order()},
                    {"zero_forcing_complement", z},
                    {"bound", bound.str()},
                    {"bound_ceiling", ceiling.str()},
                    {"distinct_eigenvalues", q},
                    {"holds", holds}}
                   .dump(2)
            << "\n";
  return holds ? 0 : kExitMismatch;
}

int cmd_matrix(const GraphSource& source) {
  write_matrix(std::cout, distance_matrix(source.build()));
  return 0;
}

int cmd_det(const GraphSource& source) {
  const IntSymMatrix d = distance_matrix(source.build());
  std::cout << json{{"order", d.size()}, {"det", det_exact(d).str()}, {"rank", rank_exact(d)},
                    {"inertia", inertia_json(inertia_exact(d))}}
                   .dump(2)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance spectra of graphs: closed forms, exact oracles and bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "distspec 1.0");

  SpectrumOptions spec;
  auto* spectrum = app.add_subcommand("spectrum", "closed-form and/or numeric distance spectrum as JSON");
  spec.source.attach(spectrum);
  spectrum->add_flag("--verify", spec.verify, "compute both spectra and compare; exit 1 on mismatch");
  spectrum->add_flag("--numeric", spec.numeric, "also emit the numeric spectrum");
  spectrum->add_option("--tol", spec.tol, "spectrum match tolerance")->capture_default_str();
  spectrum->add_option("--eigen-tol", spec.eigen_tol, "Jacobi convergence tolerance")->capture_default_str();

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "check a closed form against exact or numeric oracles over a grid");
  verify->add_option("family", ver.family, "family to verify")->required();
  for (auto [flag, target] : {std::pair{"--n", &ver.n}, {"--r", &ver.r}, {"--d", &ver.d}, {"--m", &ver.m},
                              {"--k", &ver.k}, {"--l", &ver.l}})
    verify->add_option(flag, *target, "parameter range a..b");
  verify->add_option("--max", ver.max, "largest parameter for lemma-identities")->capture_default_str();
  verify->add_option("--format", ver.format, "text, csv or json")->capture_default_str();
  verify->add_option("--tol", ver.tol, "spectrum match tolerance")->capture_default_str();
  verify->add_option("--workers", ver.workers, "parallel instances (DISTSPEC_WORKERS overrides)");

  std::vector<std::int64_t> srg_values;
  auto* srg = app.add_subcommand("srg", "feasibility, eigenvalues and optimism of SRG parameters");
  srg->add_option("params", srg_values, "n k lambda mu")->required()->expected(4);

  int max_order = 10;
  unsigned tree_workers = 1;
  auto* trees = app.add_subcommand("verify-trees", "check diameter bounds on all trees up to an order");
  trees->add_option("--max-order", max_order, "largest tree order (2..12)")->capture_default_str();
  trees->add_option("--workers", tree_workers, "worker threads (DISTSPEC_WORKERS overrides)");

  GraphSource zf_source, matrix_source, det_source;
  auto* zf = app.add_subcommand("zf-bound", "zero forcing lower bound on the number of distinct eigenvalues");
  zf_source.attach(zf);
  auto* matrix = app.add_subcommand("matrix", "print the distance matrix");
  matrix_source.attach(matrix);
  auto* det = app.add_subcommand("det", "exact determinant, rank and inertia of the distance matrix");
  det_source.attach(det);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spec);
    if (verify->parsed()) return cmd_verify(ver);
    if (srg->parsed()) return cmd_srg(srg_values);
    if (trees->parsed()) return cmd_verify_trees(max_order, tree_workers);
    if (zf->parsed()) return cmd_zf_bound(zf_source);
    if (matrix->parsed()) return cmd_matrix(matrix_source);
    if (det->parsed()) return cmd_det(det_source);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DisconnectedGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
