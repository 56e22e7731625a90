#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubix {

/// Cells are ordinals into a structure's carrier; the value no_cell marks
/// "absent" in partial tables and lookups.
using Cell = std::uint32_t;
inline constexpr Cell no_cell = 0xffffffffu;

enum class Sign : std::uint8_t { minus = 0, plus = 1 };

constexpr Sign opposite(Sign a) { return a == Sign::minus ? Sign::plus : Sign::minus; }
constexpr int sign_index(Sign a) { return a == Sign::plus ? 1 : 0; }
constexpr char sign_char(Sign a) { return a == Sign::plus ? '+' : '-'; }

/// Structural misuse of an operation: out-of-range indices, missing tables,
/// violated preconditions, or internally inconsistent data.
class StructureError : public std::runtime_error {
public:
  enum class Kind { range, domain, config, inconsistency };

  StructureError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Malformed or self-inconsistent serialized document.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Severity : std::uint8_t {
  violation,          // an axiom instance failed
  theorem_violation,  // a derived law failed: checker or model bug
};

/// One failed ground instance. detail holds the canonical binding string
/// ("i=1 alpha=+ x=..."), cells the witness cells in binding order, so the
/// instance can be re-evaluated from the violation alone.
struct Violation {
  std::string axiom_id;
  Severity severity = Severity::violation;
  std::string detail;
  std::vector<Cell> cells;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a law suite. checked_count totals the ground instances that
/// were actually instantiated (guards already applied); instance_counts
/// breaks the total down per axiom identifier.
struct CheckReport {
  std::vector<Violation> violations;
  std::size_t checked_count = 0;
  std::map<std::string, std::size_t> instance_counts;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }

  std::size_t count_for(const std::string& axiom_id) const {
    auto it = instance_counts.find(axiom_id);
    return it == instance_counts.end() ? 0 : it->second;
  }

  std::size_t violations_for(const std::string& axiom_id) const {
    std::size_t n = 0;
    for (const auto& v : violations)
      if (v.axiom_id == axiom_id) ++n;
    return n;
  }

  void merge(CheckReport&& other) {
    violations.insert(violations.end(),
                      std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
    checked_count += other.checked_count;
    for (auto& [k, n] : other.instance_counts) instance_counts[k] += n;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  /// Canonical order, independent of how instances were partitioned.
  void sort_violations();
};

inline void CheckReport::sort_violations() {
  std::sort(violations.begin(), violations.end(),
            [](const Violation& a, const Violation& b) {
              if (a.axiom_id != b.axiom_id) return a.axiom_id < b.axiom_id;
              if (a.detail != b.detail) return a.detail < b.detail;
              return a.cells < b.cells;
            });
}

}  // namespace cubix
