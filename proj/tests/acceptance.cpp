// Acceptance gate: one line per criterion, FAIL anywhere exits nonzero.
// Everything here re-derives its expectations from scratch so a regression
// in any module surfaces as a red line rather than a changed baseline.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "cubix/equivalence.hpp"
#include "cubix/inverses.hpp"
#include "cubix/laws.hpp"
#include "cubix/models.hpp"
#include "cubix/normalizer.hpp"

using namespace cubix;

namespace {

constexpr int kThreads = 4;

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

struct Gate {
  int failed = 0;
  void line(bool ok, const std::string& text) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << text << "\n";
    if (!ok) ++failed;
  }
};

std::size_t suite_violations(const SingleSetStructure& s) {
  return check_category_axioms(s, kThreads).violations.size() +
         check_cubical_axioms(s, kThreads).violations.size() +
         check_connection_axioms(s, kThreads).violations.size() +
         check_derived_lemmas(s, kThreads).violations.size();
}

}  // namespace

int main() {
  Gate gate;

  auto t0 = std::chrono::steady_clock::now();
  const auto pair2 = cube_nerve(BaseKind::pair_groupoid, 2, 2, true);
  const auto pair3 = cube_nerve(BaseKind::pair_groupoid, 2, 3, true);
  const auto chain2 = cube_nerve(BaseKind::chain_poset, 2, 2, true);
  const auto discrete2 = cube_nerve(BaseKind::discrete, 2, 2, true);
  const auto terminal = cube_nerve(BaseKind::discrete, 1, 3, true);
  const std::vector<const SingleSetStructure*> fixtures = {
      &pair2, &pair3, &chain2, &discrete2, &terminal};
  std::cout << "fixtures built in " << secs(since(t0)) << "\n";

  // 1: every single-set axiom suite, exhaustively instantiated
  {
    t0 = std::chrono::steady_clock::now();
    std::size_t v2 = suite_violations(pair2);
    double s2 = since(t0);
    t0 = std::chrono::steady_clock::now();
    std::size_t v3 = suite_violations(pair3);
    double s3 = since(t0);
    gate.line(v2 == 0 && v3 == 0 && s2 < 10.0 && s3 < 120.0,
              "axiom suites on the pair nerves: n=2 " + std::to_string(v2) +
                  " violations in " + secs(s2) + " (limit 10s), n=3 " +
                  std::to_string(v3) + " violations in " + secs(s3) +
                  " (limit 120s)");
  }

  // 2: the derived-lemma families on the whole fixture set
  {
    std::size_t v = 0;
    for (const auto* s : fixtures)
      v += check_derived_lemmas(*s, kThreads).violations.size() +
           check_inverse_lemmas(*s, kThreads).violations.size();
    gate.line(v == 0, "derived and inverse lemmas on all five fixtures: " +
                          std::to_string(v) + " violations");
  }

  // 3: divisibility above 0 separates groupoid bases from the chain
  {
    bool groupoids_clean = check_np(pair2, 0, kThreads).passed() &&
                           check_np(pair3, 0, kThreads).passed() &&
                           check_np(discrete2, 0, kThreads).passed() &&
                           check_np(terminal, 0, kThreads).passed();
    auto chain_rep = check_np(chain2, 0, kThreads);
    gate.line(groupoids_clean && chain_rep.violations.size() >= 1,
              "divisibility above 0: clean on groupoid nerves, " +
                  std::to_string(chain_rep.violations.size()) +
                  " witness(es) on the chain nerve");
  }

  // 4: constructive inverses match the brute-force scan
  {
    std::size_t disagreements = 0, cases = 0;
    auto sweep = [&](const SingleSetStructure& s) {
      for (int i = 1; i <= s.dim; ++i)
        for (Cell x = 0; x < s.size(); ++x) {
          ++cases;
          auto scanned = ri_inverse(s, i, x);
          if (!scanned ||
              synthesize_inverse_dim0(s, i, x).inverse != scanned->inverse)
            ++disagreements;
        }
    };
    sweep(pair2);
    t0 = std::chrono::steady_clock::now();
    sweep(pair3);
    double s3 = since(t0);
    gate.line(disagreements == 0 && cases == 16 * 2 + 256 * 3 && s3 < 60.0,
              "inverse synthesis equals the scan on " + std::to_string(cases) +
                  " cases, n=3 in " + secs(s3) + " (limit 60s)");
  }

  // 5: translation round trips and cross-suite images
  {
    std::size_t v = 0;
    for (const auto* s : fixtures) {
      v += check_mu(*s, kThreads).violations.size();
      auto c = fc(*s, kThreads);
      v += check_eta(c, kThreads).violations.size();
      v += check_classical_axioms(c, kThreads).violations.size();
      auto back = fs(c, kThreads);
      v += suite_violations(back);
    }
    gate.line(v == 0,
              "translation round trips and translated images on all five "
              "fixtures: " +
                  std::to_string(v) + " violations");
  }

  // 6: invertibility transport, including the negative side
  {
    auto clean = check_inverse_transport(pair2, 0, kThreads);
    auto single_np = check_np(chain2, 0, kThreads);
    auto graded_np = check_classical_np(fc(chain2, kThreads), 0, kThreads);
    bool correspond =
        single_np.violations.size() == 1 && graded_np.violations.size() == 1 &&
        single_np.violations[0].detail == "k=1 i=1 x=(a,a,b,b)" &&
        graded_np.violations[0].detail == "k=1 i=1 a=C1:(a,a,b,b)";
    gate.line(clean.passed() && correspond,
              "inverse transport clean on the pair nerve; chain divisibility "
              "fails on corresponding cells in both presentations");
  }

  // 7: the rewriting system is sound and confluent at desk scale
  {
    t0 = std::chrono::steady_clock::now();
    const std::vector<ClassicalStructure> oracles = {fc(pair3, kThreads),
                                                     fc(chain2, kThreads)};
    std::size_t mismatches = 0, evaluated = 0;
    for (const auto& [word, level] : enumerate_words(4, 3)) {
      auto nf = normalize(word, level);
      for (const auto& c : oracles) {
        if (level > c.dim || level_trace(word, level).max_level > c.dim ||
            level_trace(nf, level).max_level > c.dim)
          continue;
        for (Cell a = 0; a < c.size(level); ++a) {
          ++evaluated;
          if (eval_word(c, word, level, {level, a}) !=
              eval_word(c, nf, level, {level, a}))
            ++mismatches;
        }
      }
    }
    auto conf = check_confluence(default_rules(), 4, 3, kThreads);
    bool no_bugs = conf.violations_for("NORM.confluence-bug") == 0;
    gate.line(mismatches == 0 && evaluated > 0 && conf.passed() && no_bugs,
              "normalization sound on " + std::to_string(evaluated) +
                  " evaluations, bounded confluence " +
                  std::to_string(conf.violations.size()) + " violations, in " +
                  secs(since(t0)));
  }

  // 8: every sampled corruption is detected
  {
    auto mutations = sample_mutations(pair2, 50, 1);
    std::size_t detected = 0;
    for (const auto& m : mutations) {
      auto broken = mutate(pair2, m.loc, m.value);
      if (suite_violations(broken) +
              check_inverse_lemmas(broken, kThreads).violations.size() >
          0)
        ++detected;
    }
    gate.line(detected == mutations.size() && mutations.size() == 50,
              "mutation detection: " + std::to_string(detected) + " of " +
                  std::to_string(mutations.size()) +
                  " corrupted tables flagged");
  }

  // 9: carrier counts, truncations and the fixed-point lattice
  {
    bool counts = pair2.size() == 16 && pair3.size() == 256 &&
                  discrete2.size() == 2 && truncate(pair2, 0).size() == 2 &&
                  truncate(pair2, 1).size() == 4;
    bool lattice_ok = true;
    for (const auto* sp : {&pair2, &pair3}) {
      const auto& s = *sp;
      const unsigned top = 1u << s.dim;
      std::vector<std::vector<Cell>> sets(top);
      for (unsigned mask = 0; mask < top; ++mask) {
        std::vector<int> dirs;
        for (int i = 1; i <= s.dim; ++i)
          if (mask & (1u << (i - 1))) dirs.push_back(i);
        sets[mask] = fixed_set(s, dirs);
      }
      for (unsigned a = 0; a < top; ++a)
        for (unsigned b = 0; b < top; ++b) {
          bool contained = std::includes(sets[b].begin(), sets[b].end(),
                                         sets[a].begin(), sets[a].end());
          lattice_ok = lattice_ok && (contained == ((a & b) == b));
        }
    }
    gate.line(counts && lattice_ok,
              "carrier counts 16/256/2, truncations 2 and 4, fixed-point "
              "lattice is the reversed subset order");
  }

  std::cout << "acceptance: " << (9 - gate.failed) << " of 9 criteria passed\n";
  return gate.failed == 0 ? 0 : 1;
}
