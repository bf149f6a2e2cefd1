#pragma once

// Runs a search either in one pass or split into subtrees by fixing the first
// few variables. Subtrees can run on several threads and can be journaled so
// an interrupted run resumes by skipping completed prefixes. Results are
// merged in prefix order, which is lexicographic, so the output does not
// depend on the number of threads.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "hwm/error.hpp"
#include "hwm/search.hpp"

namespace hwm {

struct RunOptions {
  unsigned jobs = 1;
  /// Number of leading variables fixed per subtree; 0 picks one from `jobs`.
  std::size_t split_depth = 0;
  /// JSON Lines journal of completed subtrees; empty disables journaling.
  std::string journal_path;
  bool resume = false;
};

namespace detail {

inline std::vector<std::vector<int>> all_prefixes(std::size_t depth) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::vector<int>> next;
    next.reserve(out.size() * 3);
    for (const auto& p : out)
      for (int x : {-1, 0, 1}) {
        auto q = p;
        q.push_back(x);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

inline nlohmann::json journal_header(const SearchSpec& spec, std::size_t depth) {
  nlohmann::json h;
  h["journal"] = "hwm-search";
  h["order"] = spec.order;
  h["weight"] = spec.weight;
  h["structure"] = std::string(to_string(spec.structure));
  h["split_depth"] = depth;
  h["subtree_limit"] = spec.limit && !spec.canonicalize ? nlohmann::json(*spec.limit) : nlohmann::json(nullptr);
  return h;
}

struct SubtreeOutcome {
  bool done = false;
  std::vector<Coordinates> solutions;
  SearchStats stats;
};

inline std::map<std::vector<int>, SubtreeOutcome> load_journal(const std::string& path,
                                                               const nlohmann::json& expected_header,
                                                               bool& header_seen) {
  std::map<std::vector<int>, SubtreeOutcome> done;
  header_seen = false;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      continue;  // a torn line from an interrupted run
    }
    if (!header_seen) {
      if (j != expected_header)
        throw Error(ErrorKind::InvalidArgument, "journal " + path + " belongs to a different search");
      header_seen = true;
      continue;
    }
    SubtreeOutcome o;
    o.done = true;
    o.solutions = j.at("solutions").get<std::vector<Coordinates>>();
    o.stats.nodes = j.at("nodes").get<std::uint64_t>();
    o.stats.pruned = j.at("pruned").get<std::uint64_t>();
    o.stats.leaves = j.at("leaves").get<std::uint64_t>();
    done[j.at("prefix").get<std::vector<int>>()] = std::move(o);
  }
  return done;
}

inline std::size_t auto_depth(std::size_t variables, unsigned jobs, bool journaled) {
  std::size_t depth = 0, subtrees = 1;
  const std::size_t want = std::max<std::size_t>(journaled ? 27 : 1, 8 * static_cast<std::size_t>(jobs));
  while (subtrees < want && depth < std::min<std::size_t>(variables, 8)) {
    ++depth;
    subtrees *= 3;
  }
  return depth;
}

inline void finalize(SearchResult& r) {
  std::sort(r.solutions.begin(), r.solutions.end());
  if (r.spec.canonicalize) {
    for (auto& s : r.solutions) s = canonical_form(r.spec.structure, s);
    std::sort(r.solutions.begin(), r.solutions.end());
    r.solutions.erase(std::unique(r.solutions.begin(), r.solutions.end()), r.solutions.end());
  }
  if (r.spec.limit && r.solutions.size() > *r.spec.limit) r.solutions.resize(*r.spec.limit);
}

}  // namespace detail

inline SearchResult run_search(const SearchSpec& spec, const RunOptions& opts = {}) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.spec = spec;

  // A subtree may stop early at the limit only when results are not canonicalised:
  // a later raw solution could have a smaller canonical form.
  const bool early_stop = spec.limit.has_value() && !spec.canonicalize;

  const bool split = opts.jobs > 1 || !opts.journal_path.empty();
  if (!split) {
    SolutionSink sink = [&](const Coordinates& c) {
      result.solutions.push_back(c);
      return !(early_stop && result.solutions.size() >= *spec.limit);
    };
    search_subtree(spec, {}, sink, result.stats);
    result.stats.subtrees = 1;
  } else {
    const std::size_t vars = search_variables(spec);
    const std::size_t depth = opts.split_depth ? std::min(opts.split_depth, vars)
                                               : detail::auto_depth(vars, opts.jobs, !opts.journal_path.empty());
    const auto prefixes = detail::all_prefixes(depth);
    std::vector<detail::SubtreeOutcome> outcomes(prefixes.size());

    std::ofstream journal;
    const auto header = detail::journal_header(spec, depth);
    if (!opts.journal_path.empty()) {
      if (opts.resume) {
        bool header_seen = false;
        auto done = detail::load_journal(opts.journal_path, header, header_seen);
        for (std::size_t i = 0; i < prefixes.size(); ++i) {
          auto it = done.find(prefixes[i]);
          if (it != done.end()) {
            outcomes[i] = std::move(it->second);
            ++result.stats.resumed_subtrees;
          }
        }
        std::string existing;
        {
          std::ifstream in(opts.journal_path, std::ios::binary);
          existing.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        if (!header_seen) {
          journal.open(opts.journal_path, std::ios::trunc);
          journal << header.dump() << '\n';
        } else {
          journal.open(opts.journal_path, std::ios::app);
          if (existing.back() != '\n') journal << '\n';
        }
      } else {
        journal.open(opts.journal_path, std::ios::trunc);
        journal << header.dump() << '\n';
      }
      if (!journal) throw Error(ErrorKind::InvalidArgument, "cannot write journal " + opts.journal_path);
      journal.flush();
    }

    std::mutex journal_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) return;
        auto& out = outcomes[i];
        if (out.done) continue;
        SolutionSink sink = [&](const Coordinates& c) {
          out.solutions.push_back(c);
          return !(early_stop && out.solutions.size() >= *spec.limit);
        };
        search_subtree(spec, prefixes[i], sink, out.stats);
        out.done = true;
        if (journal.is_open()) {
          nlohmann::json line;
          line["prefix"] = prefixes[i];
          line["solutions"] = out.solutions;
          line["nodes"] = out.stats.nodes;
          line["pruned"] = out.stats.pruned;
          line["leaves"] = out.stats.leaves;
          std::lock_guard lock(journal_mutex);
          journal << line.dump() << '\n';
          journal.flush();
        }
      }
    };
    const unsigned threads = std::max(1u, opts.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (auto& o : outcomes) {
      result.solutions.insert(result.solutions.end(), o.solutions.begin(), o.solutions.end());
      result.stats.nodes += o.stats.nodes;
      result.stats.pruned += o.stats.pruned;
      result.stats.leaves += o.stats.leaves;
    }
    result.stats.subtrees = prefixes.size();
  }

  detail::finalize(result);
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline SearchResult search_anticirculant(SearchSpec spec, const RunOptions& opts = {}) {
  if (spec.structure != Structure::anticirculant)
    throw Error(ErrorKind::InvalidArgument, "search_anticirculant needs structure anticirculant");
  return run_search(spec, opts);
}

inline SearchResult search_hankel_hollow(SearchSpec spec, const RunOptions& opts = {}) {
  if (spec.structure != Structure::hankel_hollow)
    throw Error(ErrorKind::InvalidArgument, "search_hankel_hollow needs structure hankel_hollow");
  return run_search(spec, opts);
}

}  // namespace hwm
