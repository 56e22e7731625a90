#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "cubix/parallel.hpp"
#include "cubix/types.hpp"

// Shared driver for the law suites: per-chunk accumulators merged in chunk
// order, so a report never depends on the thread count.

namespace cubix::detail {

constexpr Severity kViol = Severity::violation;
constexpr Severity kThm = Severity::theorem_violation;

struct Ctx {
  const std::vector<std::string>* names = nullptr;
  std::map<std::string, std::size_t> counts;
  std::vector<Violation> viols;

  void count(const char* id) { ++counts[id]; }

  void bind(std::ostream&, std::vector<Cell>&) {}
  template <class T, class... Rest>
  void bind(std::ostream& os, std::vector<Cell>& cells, const char* name,
            const T& val, Rest&&... rest) {
    if (os.tellp() > 0) os << ' ';
    os << name << '=';
    if constexpr (std::is_same_v<T, Cell>) {
      os << (*names)[val];
      cells.push_back(val);
    } else if constexpr (std::is_same_v<T, Sign>) {
      os << sign_char(val);
    } else if constexpr (std::is_same_v<T, std::optional<Cell>>) {
      if (val) {
        os << (*names)[*val];
        cells.push_back(*val);
      } else {
        os << "undef";
      }
    } else {
      os << val;
    }
    bind(os, cells, rest...);
  }

  template <class... Args>
  void fail(const char* id, Severity sev, Args&&... args) {
    Violation v;
    v.axiom_id = id;
    v.severity = sev;
    std::ostringstream os;
    bind(os, v.cells, args...);
    v.detail = os.str();
    viols.push_back(std::move(v));
  }

  /// Counts the instance and checks lhs == rhs; an undefined side compares
  /// unequal to everything (an instance in the guard's domain must have both
  /// sides defined).
  template <class... Args>
  void instance(const char* id, Severity sev, std::optional<Cell> lhs,
                std::optional<Cell> rhs, Args&&... args) {
    count(id);
    if (!lhs || !rhs || *lhs != *rhs)
      fail(id, sev, args..., "lhs", lhs, "rhs", rhs);
  }
};

template <class Body>
void run_items(const std::vector<std::string>& names, std::size_t n_items,
               int threads, CheckReport& rep, Body&& body) {
  if (n_items == 0) return;
  int T = resolve_threads(threads);
  if (std::size_t(T) > n_items) T = int(n_items);
  std::vector<Ctx> ctxs(static_cast<std::size_t>(T));
  for (auto& c : ctxs) c.names = &names;
  for_chunks(n_items, T, [&](std::size_t b, std::size_t e, int chunk) {
    for (std::size_t k = b; k < e; ++k) body(ctxs[chunk], k);
  });
  for (auto& c : ctxs) {
    rep.violations.insert(rep.violations.end(),
                          std::make_move_iterator(c.viols.begin()),
                          std::make_move_iterator(c.viols.end()));
    for (const auto& [k, n] : c.counts) rep.instance_counts[k] += n;
  }
}

inline void finalize(CheckReport& rep) {
  rep.checked_count = 0;
  for (const auto& [k, n] : rep.instance_counts) rep.checked_count += n;
  rep.sort_violations();
}

}  // namespace cubix::detail
