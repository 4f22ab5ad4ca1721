// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive sweeps that compare the greedy definition against the
// augmentation axiom on every small family.
//
// A family is identified by a bitmask over its universe of candidate sets
// in canonical order: bit i set means the i-th candidate is a member.

#ifndef SYMPLECTIC_ENUMERATION_HPP_
#define SYMPLECTIC_ENUMERATION_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "symplectic/axioms.hpp"
#include "symplectic/family_io.hpp"
#include "symplectic/greedy.hpp"
#include "symplectic/signed_set.hpp"
#include "symplectic/witness.hpp"

namespace symplectic {

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// All admissible k-subsets of E(n), canonical order. There are C(n,k) 2^k.
inline std::vector<SignedSubset> admissible_k_subsets(GroundSize n, int k) {
  if (k < 0 || k > n.value()) {
    throw InputError("rank " + std::to_string(k) + " outside 0.." +
                     std::to_string(n.value()));
  }
  std::vector<SignedSubset> out;
  // Choose magnitudes, then signs.
  for (std::uint32_t magnitudes = 0; magnitudes < (1u << n.value());
       ++magnitudes) {
    if (std::popcount(magnitudes) != k) continue;
    std::vector<int> chosen;
    for (int m = 0; m < n.value(); ++m) {
      if ((magnitudes >> m) & 1u) chosen.push_back(m);
    }
    for (std::uint32_t signs = 0; signs < (1u << k); ++signs) {
      std::uint32_t mask = 0;
      for (int i = 0; i < k; ++i) {
        mask |= 1u << (2 * chosen[i] + ((signs >> i) & 1u));
      }
      out.emplace_back(mask);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// All admissible subsets of E(n), canonical order.
inline std::vector<SignedSubset> admissible_subsets(GroundSize n) {
  std::vector<SignedSubset> out;
  for (int k = 0; k <= n.value(); ++k) {
    const auto layer = admissible_k_subsets(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline std::vector<SignedSubset> family_from_id(
    std::span<const SignedSubset> universe, std::uint64_t id) {
  std::vector<SignedSubset> sets;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if ((id >> i) & 1u) sets.push_back(universe[i]);
  }
  return sets;
}

struct EnumerationReport {
  int n = 0;
  std::optional<int> k;  // absent for the downset sweep
  std::uint64_t total_families = 0;
  // Basis sweep: families passing the definition. Downset sweep: families
  // satisfying the axiom.
  std::uint64_t matroid_count = 0;
  std::vector<std::uint64_t> mismatches;
};

inline std::string format_report(const EnumerationReport& r) {
  std::string out;
  out += "n: " + std::to_string(r.n) + "\n";
  if (r.k) {
    out += "k: " + std::to_string(*r.k) + "\n";
    out += "mode: bases\n";
  } else {
    out += "mode: downsets\n";
  }
  out += "total_families: " + std::to_string(r.total_families) + "\n";
  out += std::string(r.k ? "matroid_count: " : "axiom_count: ") +
         std::to_string(r.matroid_count) + "\n";
  out += "mismatch_count: " + std::to_string(r.mismatches.size()) + "\n";
  out += "mismatches:";
  for (std::uint64_t id : r.mismatches) out += " " + std::to_string(id);
  out += "\n";
  return out;
}

namespace detail {

struct PartialReport {
  std::uint64_t total = 0;
  std::uint64_t positive = 0;
  std::vector<std::uint64_t> mismatches;
};

// Runs `classify(id, partial)` for ids in [first, last) across workers and
// merges by summation; the mismatch list is sorted afterwards so the result
// does not depend on scheduling.
template <typename Classify>
PartialReport ParallelSweep(std::uint64_t first, std::uint64_t last,
                            Classify classify, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t span = last - first;
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(span, 1)));
  std::vector<PartialReport> partials(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = first + span * w / workers;
    const std::uint64_t hi = first + span * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] {
      try {
        for (std::uint64_t id = lo; id < hi; ++id) classify(id, partials[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  PartialReport merged;
  for (auto& p : partials) {
    merged.total += p.total;
    merged.positive += p.positive;
    merged.mismatches.insert(merged.mismatches.end(), p.mismatches.begin(),
                             p.mismatches.end());
  }
  std::sort(merged.mismatches.begin(), merged.mismatches.end());
  return merged;
}

inline void CheckBasisBudget(GroundSize n, int k) {
  if (n.value() <= 3 || (n.value() == 4 && k == 1)) return;
  throw BudgetExceeded("sweep (n=" + std::to_string(n.value()) +
                       ", k=" + std::to_string(k) +
                       ") exceeds the exhaustive budget (n <= 3 or n=4, k=1)");
}

}  // namespace detail

// Definition versus axiom on every nonempty family of admissible k-subsets.
inline EnumerationReport sweep_basis_families(GroundSize n, int k,
                                              unsigned workers = 0) {
  detail::CheckBasisBudget(n, k);
  const std::vector<SignedSubset> universe = admissible_k_subsets(n, k);
  const std::uint64_t limit = std::uint64_t{1} << universe.size();
  const auto partial = detail::ParallelSweep(
      1, limit,
      [&](std::uint64_t id, detail::PartialReport& out) {
        const BasisFamily family(n, family_from_id(universe, id));
        const bool by_definition = is_symplectic_matroid_by_definition(family);
        const bool by_axiom = axiom_holds(downward_closure(family)).holds;
        ++out.total;
        if (by_definition) ++out.positive;
        if (by_definition != by_axiom) out.mismatches.push_back(id);
      },
      workers);
  return {n.value(), k, partial.total, partial.positive, partial.mismatches};
}

// Outcome of classifying one subset-closed family.
struct DownsetVerdict {
  bool axiom = false;
  bool equicardinal = false;
  bool definition = false;  // meaningful only when equicardinal
  bool witness_verified = false;  // meaningful only when the axiom fails
};

inline DownsetVerdict classify_downset(const IndependenceFamily& family) {
  DownsetVerdict v;
  v.axiom = axiom_holds(family).holds;
  const std::vector<SignedSubset> tops = maximal_sets(family);
  v.equicardinal = std::all_of(tops.begin(), tops.end(), [&](SignedSubset s) {
    return s.size() == tops.front().size();
  });
  if (v.equicardinal) {
    v.definition = is_symplectic_matroid_by_definition(
        BasisFamily(family.ground_size(), tops));
  }
  if (!v.axiom) {
    if (auto w = find_greedy_failure(family.ground_size(), tops)) {
      const WeightFunction weight = threshold_weight(w->ordering, w->threshold);
      v.witness_verified =
          weight_of(w->beating, weight) > weight_of(w->greedy, weight);
    }
  }
  return v;
}

inline bool downset_consistent(const DownsetVerdict& v) {
  if (v.axiom) return v.equicardinal && v.definition;
  return !(v.equicardinal && v.definition) && v.witness_verified;
}

// Every nonempty subset-closed family of admissible subsets of E(n).
inline EnumerationReport sweep_downsets(GroundSize n, unsigned workers = 0) {
  if (n.value() > 2) {
    throw BudgetExceeded("downset sweep needs n <= 2, got n=" +
                         std::to_string(n.value()));
  }
  const std::vector<SignedSubset> universe = admissible_subsets(n);
  const std::uint64_t limit = std::uint64_t{1} << universe.size();
  const auto partial = detail::ParallelSweep(
      1, limit,
      [&](std::uint64_t id, detail::PartialReport& out) {
        std::vector<SignedSubset> sets = family_from_id(universe, id);
        // Subset-closed iff every one-element deletion stays inside.
        const auto in_family = [&](SignedSubset s) {
          return std::find(sets.begin(), sets.end(), s) != sets.end();
        };
        for (SignedSubset s : sets) {
          for (SignedElement e : s.elements()) {
            SignedSubset smaller = s;
            smaller.erase(e);
            if (!in_family(smaller)) return;
          }
        }
        const IndependenceFamily family(n, std::move(sets));
        const DownsetVerdict v = classify_downset(family);
        ++out.total;
        if (v.axiom) ++out.positive;
        if (!downset_consistent(v)) out.mismatches.push_back(id);
      },
      workers);
  return {n.value(), std::nullopt, partial.total, partial.positive,
          partial.mismatches};
}

// Writes every matroid of the (n, k) sweep as a block in family-file format,
// blocks separated by "---" lines, ascending family id. Returns the count.
inline std::uint64_t catalog(GroundSize n, int k, std::ostream& out) {
  detail::CheckBasisBudget(n, k);
  const std::vector<SignedSubset> universe = admissible_k_subsets(n, k);
  const std::uint64_t limit = std::uint64_t{1} << universe.size();
  std::uint64_t count = 0;
  for (std::uint64_t id = 1; id < limit; ++id) {
    const BasisFamily family(n, family_from_id(universe, id));
    if (!is_symplectic_matroid_by_definition(family)) continue;
    std::string block = count > 0 ? "---\n" : "";
    block += format_family(family);
    out << block;
    if (!out) throw std::runtime_error("catalog write failed");
    ++count;
  }
  out.flush();
  if (!out) throw std::runtime_error("catalog write failed");
  return count;
}

}  // namespace symplectic

#endif  // SYMPLECTIC_ENUMERATION_HPP_
