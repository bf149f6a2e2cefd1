// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hwm/hwm.hpp"
#include "test_util.hpp"

using namespace hwm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed checks with a short note each.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (failures_++ < 5) notes_ << (notes_.tellp() ? "; " : "") << what;
    }
  }
  void note(const std::string& s) { info_ << (info_.tellp() ? "; " : "") << s; }
  Outcome outcome() const {
    Outcome o;
    o.pass = pass_;
    o.detail = pass_ ? info_.str() : notes_.str();
    return o;
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::ostringstream notes_, info_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::size_t> random_even_symbol(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> s;
  while (s.empty())
    for (std::size_t p = 2; p <= n; p += 2)
      if (rng() % 2) s.push_back(p);
  return s;
}

SearchSpec spec_of(std::size_t n, std::size_t k, Structure s) {
  SearchSpec spec;
  spec.order = n;
  spec.weight = k;
  spec.structure = s;
  return spec;
}

std::size_t pow3(std::size_t e) {
  std::size_t p = 1;
  while (e--) p *= 3;
  return p;
}

std::vector<int> digits3(std::size_t code, std::size_t len) {
  std::vector<int> out(len);
  for (auto& x : out) {
    x = static_cast<int>(code % 3) - 1;
    code /= 3;
  }
  return out;
}

bool components_all(const SimpleGraph& g, const SimpleGraph& shape) {
  for (const auto& c : connected_components(g))
    if (!are_isomorphic(induced_subgraph(g, c), shape)) return false;
  return true;
}

Outcome ac1(Checker& c) {
  const std::pair<FamilyDescriptor, const char*> cases[] = {{{Family::AW44, {}}, "M44"},
                                                           {{Family::CW64, {}}, "CW64"},
                                                           {{Family::AW64, {}}, "M64"},
                                                           {{Family::AW74, {}}, "M74"},
                                                           {{Family::M44_interlaced, {2}}, "AW84"}};
  for (const auto& [d, name] : cases) {
    const auto m = construct(d);
    c.expect(format_matrix(m) == test::read_text(test::fixture_path(name)), std::string(name) + " text differs");
    c.expect(is_weighing(parse_matrix(format_matrix(m))) == 4, std::string(name) + " weight is not 4");
  }
  return c.outcome();
}

Outcome ac2(Checker& c) {
  auto timed = [&](const SearchSpec& spec) {
    const auto t0 = Clock::now();
    const auto r = run_search(spec);
    c.expect(seconds_since(t0) < 10.0, "order " + std::to_string(spec.order) + " took >= 10 s");
    return r.count();
  };
  c.expect(timed(spec_of(5, 4, Structure::anticirculant)) == 0, "AW(5,4) found");
  for (std::size_t n : {2u, 6u, 10u, 14u, 18u})
    c.expect(timed(spec_of(n, 2, Structure::hankel_hollow)) == 0, "HW(" + std::to_string(n) + ",2) found");
  for (std::size_t n : {4u, 8u, 12u, 16u}) {
    const auto count = timed(spec_of(n, 2, Structure::hankel_hollow));
    c.expect(count > 0, "HW(" + std::to_string(n) + ",2) missing");
    c.note("HW(" + std::to_string(n) + ",2)=" + std::to_string(count));
  }
  return c.outcome();
}

Outcome ac3(Checker& c) {
  const auto c4 = cycle_graph(4);
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 16; n += 2)
    for (const auto& p : search_hankel_hollow(spec_of(n, 2, Structure::hankel_hollow)).solutions) {
      const auto g = graph_of_matrix(SkewProfile(n, p).to_matrix());
      c.expect(connected_components(g).size() == n / 4 && components_all(g, c4),
               "HW(" + std::to_string(n) + ",2) graph is not a union of n/4 C4");
      ++checked;
    }
  c.note(std::to_string(checked) + " matrices checked");
  return c.outcome();
}

Outcome ac4(Checker& c) {
  for (std::size_t n = 2; n <= 12; ++n) {
    // Distinct adjacency matrices among all symbols with 1 <= #S <= n-1, by degree.
    std::vector<std::set<std::vector<bool>>> by_degree(n + 1);
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t p = 0; p < n; ++p)
        if (mask >> p & 1) s.push_back(p + 1);
      const auto g = anticirculant_graph(n, s);
      std::vector<bool> key;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) key.push_back(g.adjacent(u, v));
      by_degree[*is_regular(g)].insert(std::move(key));
    }
    const auto counted = count_anticirculant_graphs(n);
    std::uint64_t total = 0, binom = 1;
    for (std::size_t d = 1; d < n; ++d) {
      binom = binom * (n - d + 1) / d;
      c.expect(by_degree[d].size() == binom && counted.per_degree[d] == binom,
               "n=" + std::to_string(n) + " d=" + std::to_string(d));
      total += by_degree[d].size();
    }
    c.expect(total == (std::uint64_t{1} << n) - 2 && counted.total == total, "total at n=" + std::to_string(n));
  }
  return c.outcome();
}

Outcome ac5(Checker& c) {
  std::mt19937 rng(20240501);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 * (1 + rng() % 16);
    const auto s = random_even_symbol(rng, n);
    const auto g = anticirculant_graph(n, s);
    c.expect(g.loopless(), "generated graph has a loop");
    c.expect(is_regular(g) == s.size(), "degree differs from #S");
    for (std::size_t x : graph_symbol(g)) c.expect(x % 2 == 0, "odd symbol element");
    c.expect(is_bipartite(g).has_value(), "not bipartite");
    bool parity_split = true;
    for (auto [u, v] : g.edges()) parity_split = parity_split && (u % 2 != v % 2);
    c.expect(parity_split, "edge inside a parity class");
  }
  return c.outcome();
}

Outcome ac6(Checker& c) {
  std::mt19937 rng(20240502);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 * (1 + rng() % 16);
    const auto s = random_even_symbol(rng, n);
    c.expect(cayley_dihedral(n / 2, reflection_exponents(s)).adjacency() == anticirculant_graph(n, s).adjacency(),
             "adjacency differs at n=" + std::to_string(n));
  }
  return c.outcome();
}

Outcome ac7(Checker& c) {
  const auto k44 = complete_bipartite(4, 4);
  c.expect(are_isomorphic(graph_of_matrix(m44_interlaced(2)), k44).has_value(), "G(M441) is not K4,4");

  const auto g4 = graph_of_matrix(m44_interlaced(4));
  const auto comps = connected_components(g4).size();
  c.expect(comps == 2 && components_all(g4, k44), "interlace(M44,4) is not K4,4 + K4,4");
  c.note("interlace(M44,4): " + std::to_string(comps) + " components");

  const auto g641 = graph_of_matrix(interlace(base_matrix(Family::AW64), 2));
  c.expect(is_connected(g641) && g641.order() == 12 && is_regular(g641) == 4, "G(M641) signature");

  for (std::size_t m = 3; m <= 8; ++m)
    c.expect(are_isomorphic(graph_of_matrix(m64_block_member(m)),
                            tensor_product(complete_graph(2, true), cycle_graph(2 * m)))
                 .has_value(),
             "block member m=" + std::to_string(m));

  const auto g741 = graph_of_matrix(interlace(base_matrix(Family::AW74), 2));
  c.expect(is_connected(g741) && g741.order() == 14, "G(M741) signature");
  return c.outcome();
}

Outcome ac8(Checker& c) {
  const std::pair<SimpleGraph, const char*> graphs[] = {
      {tensor_product(complete_graph(2, true), cycle_graph(8)), "K2+ x C8"},
      {graph_of_matrix(interlace(base_matrix(Family::AW74), 2)), "G(M741)"}};
  for (const auto& [g, name] : graphs) {
    const auto t0 = Clock::now();
    const auto cycle = hamiltonian_cycle(g);
    c.expect(seconds_since(t0) < 10.0, std::string(name) + " took >= 10 s");
    c.expect(cycle && is_hamiltonian_cycle(g, *cycle), std::string(name) + " has no valid cycle");
  }
  return c.outcome();
}

Outcome ac9(Checker& c) {
  // Connected 4-regular members, loopless so that they are cluster-state candidates.
  std::vector<std::pair<TernaryMatrix, std::string>> members{
      {m44_interlaced(2), "M441"},
      {interlace(base_matrix(Family::AW64), 2), "M641"},
      {interlace(base_matrix(Family::AW74), 2), "M741"}};
  for (std::size_t m = 3; m <= 8; ++m) members.emplace_back(m64_block_member(m), "B" + std::to_string(m));
  std::ostringstream raw;
  for (const auto& [w, name] : members) {
    const auto g = graph_of_matrix(w);
    c.expect(is_connected(g) && is_regular(g) == 4, name + " is not connected 4-regular");
    c.expect(minimal_pump_count(w) == 7, name + " needs " + std::to_string(minimal_pump_count(w)) + " pumps");
    raw << (raw.tellp() ? "," : "") << name << "=" << pump_spectrum(w).count();
  }
  c.note("printed-labelling counts " + raw.str());
  for (std::size_t h : {2u, 4u, 6u, 8u})
    c.expect(pump_spectrum(weight2_block(h)).count() == 3, "weight-2 block n_half=" + std::to_string(h));
  return c.outcome();
}

Outcome ac10(Checker& c) {
  const std::vector<double> rs{0.5, 1.0, 1.5, 2.0};
  const std::pair<TernaryMatrix, const char*> inputs[] = {
      {test::fixture("AW84"), "AW(8,4)/2"}, {weight2_block(4), "U(8)/sqrt2"}, {m64_block_member(3), "M(12,4)/2"}};
  std::ostringstream slopes;
  for (const auto& [w, name] : inputs) {
    const auto cm = CouplingMatrix::from_weighing(w);
    const auto cert = certify_cluster(cm, rs);
    c.expect(cert.pass && std::abs(cert.slope + 2.0) <= 0.05, std::string(name) + " did not pass");
    slopes << (slopes.tellp() ? "," : "") << name << " slope " << cert.slope;

    const CouplingMatrix a = cert.sign > 0 ? cm : cm.negated();
    const auto n = static_cast<std::size_t>(w.order());
    const auto v0 = nullifier_variances(evolve_vacuum(cm, 0.0), a, cert.mask);
    for (std::size_t i = 0; i < n; ++i)
      c.expect(std::abs(v0[i] - (1.0 + cm.m.row(static_cast<Eigen::Index>(i)).squaredNorm())) <= 1e-9,
               std::string(name) + " r=0 variance");

    const auto omega = symplectic_form(n);
    for (double r : rs) {
      const auto s = evolution_map(cm, r);
      c.expect((s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() <= 1e-10, std::string(name) + " symplectic");
      c.expect(std::abs(evolve_vacuum(cm, r).covariance.determinant() - 1.0) <= 1e-8, std::string(name) + " purity");
    }
  }
  c.note(slopes.str());
  return c.outcome();
}

Outcome ac11(Checker& c) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Coordinates> ac, hh;
      for (std::size_t code = 0; code < pow3(n); ++code) {
        const auto row = digits3(code, n);
        if (is_weighing(from_first_row(row, Layout::anticirculant)) == static_cast<int>(k)) ac.push_back(row);
      }
      for (std::size_t code = 0; code < pow3(n - 1); ++code) {
        const auto odd = digits3(code, n - 1);
        Coordinates p(2 * n - 1, 0);
        for (std::size_t v = 0; v + 1 < n; ++v) p[2 * v + 1] = odd[v];
        if (is_weighing(SkewProfile(n, p).to_matrix()) == static_cast<int>(k)) hh.push_back(p);
      }
      std::sort(ac.begin(), ac.end());
      std::sort(hh.begin(), hh.end());
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      c.expect(search_anticirculant(spec_of(n, k, Structure::anticirculant)).solutions == ac, "anticirculant " + tag);
      c.expect(search_hankel_hollow(spec_of(n, k, Structure::hankel_hollow)).solutions == hh, "hankel_hollow " + tag);
    }
  return c.outcome();
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // <= 0: no runtime bound
  std::function<Outcome(Checker&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "fixture exactness", 1.0, ac1},
      {"AC2", "nonexistence and existence", 0.0, ac2},
      {"AC3", "weight-2 classification", 0.0, ac3},
      {"AC4", "anticirculant graph counts", 0.0, ac4},
      {"AC5", "anticirculant graph properties", 0.0, ac5},
      {"AC6", "dihedral Cayley adjacency equality", 0.0, ac6},
      {"AC7", "graph identifications", 30.0, ac7},
      {"AC8", "Hamiltonian cycles", 0.0, ac8},
      {"AC9", "pump counts", 0.0, ac9},
      {"AC10", "cluster certification", 5.0, ac10},
      {"AC11", "pruned search equals brute force", 0.0, ac11},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Checker checker;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = crit.run(checker);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(t0);
    if (crit.limit_seconds > 0 && secs >= crit.limit_seconds) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << crit.id << " " << (o.pass ? "PASS" : "FAIL") << " " << crit.title << " [" << timing << "]"
              << (o.detail.empty() ? "" : " " + o.detail) << "\n";
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
