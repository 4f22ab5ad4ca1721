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

// Command-line front end. Exit codes: 0 the property holds (or the command
// succeeded), 1 it fails, 2 bad input or usage. Data goes to `out`,
// diagnostics to `err`.

#ifndef SYMPLECTIC_TOOLS_CLI_HPP_
#define SYMPLECTIC_TOOLS_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symplectic/symplectic.hpp"

namespace symplectic::cli {

inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kBadInput = 2;

namespace detail {

struct Options {
  std::string file;
  int n = 0;  // 0: infer from the file
  std::string ordering;
  std::optional<std::uint64_t> seed;
  int samples = 1000;
  bool wxyz = false;
  int enumerate_n = 0;
  std::optional<int> enumerate_k;
  std::string catalog_path;
  bool downsets = false;
};

inline ParsedFamily ReadFamily(const Options& opts) {
  return read_family_file(
      opts.file, opts.n > 0 ? std::optional<GroundSize>(GroundSize(opts.n))
                            : std::nullopt);
}

inline void PrintWitness(const Witness& w, std::ostream& out) {
  const WeightFunction weight = threshold_weight(w.ordering, w.threshold);
  out << "ordering: " << format_ordering(w.ordering) << "\n"
      << "threshold: " << w.threshold << "\n"
      << "greedy: " << format_set(w.greedy) << "\n"
      << "greedy_weight: " << format_weight(weight_of(w.greedy, weight)) << "\n"
      << "beating: " << format_set(w.beating) << "\n"
      << "beating_weight: " << format_weight(weight_of(w.beating, weight)) << "\n"
      << "route: " << to_string(w.route) << "\n";
  if (w.violation) {
    out << "traced_I: " << format_set(w.violation->smaller) << "\n"
        << "traced_J: " << format_set(w.violation->larger) << "\n";
  }
}

inline int CheckBases(const Options& opts, std::ostream& out) {
  const ParsedFamily parsed = ReadFamily(opts);
  const BasisFamily family(parsed.n, parsed.sets);
  const bool holds = is_symplectic_matroid_by_definition(family);
  out << "symplectic_matroid: " << (holds ? "true" : "false") << "\n"
      << "n: " << family.ground_size().value() << "\n"
      << "rank: " << family.rank() << "\n"
      << "bases: " << family.size() << "\n"
      << "lagrangian: " << (family.is_lagrangian() ? "true" : "false") << "\n";
  if (opts.seed) {
    // Threshold optimality must agree with sampled-weight optimality.
    bool agree = true;
    const GroundSize n = family.ground_size();
    for (std::uint64_t i = 0; i < admissible_ordering_count(n); ++i) {
      const AdmissibleOrdering o = nth_admissible_ordering(n, i);
      const SignedSubset chosen = greedy_choice(family.sets(), o);
      if (optimal_for_all_thresholds(family, chosen, o) !=
          optimal_for_sampled_weights(family, chosen, o, *opts.seed,
                                      opts.samples)) {
        agree = false;
      }
    }
    out << "sampled_weights: " << opts.samples << "\n"
        << "sampled_agreement: " << (agree ? "true" : "false") << "\n";
  }
  if (!holds) {
    const auto witness = find_counterexample(family);
    out << "witness_ordering: " << format_ordering(witness->ordering) << "\n"
        << "witness_threshold: " << witness->threshold << "\n";
  }
  return holds ? kHolds : kFails;
}

inline int CheckIndependent(const Options& opts, std::ostream& out) {
  const ParsedFamily parsed = ReadFamily(opts);
  const IndependenceFamily family(parsed.n, parsed.sets);
  const AxiomCheckResult result = axiom_holds(family);
  const std::vector<SignedSubset> tops = maximal_sets(family);
  out << "axiom_holds: " << (result.holds ? "true" : "false") << "\n"
      << "n: " << family.ground_size().value() << "\n"
      << "independent_sets: " << family.size() << "\n"
      << "maximal_members: " << tops.size() << "\n";
  if (result.holds && !tops.empty()) {
    out << "rank: " << tops.front().size() << "\n"
        << "lagrangian: "
        << (tops.front().size() == family.ground_size().value() ? "true"
                                                                : "false")
        << "\n";
  }
  if (result.violation) {
    out << "violation_I: " << format_set(result.violation->smaller) << "\n"
        << "violation_J: " << format_set(result.violation->larger) << "\n"
        << "violation_kind: " << to_string(result.violation->kind) << "\n";
  }
  return result.holds ? kHolds : kFails;
}

inline int IndependentSets(const Options& opts, std::ostream& out) {
  const ParsedFamily parsed = ReadFamily(opts);
  const IndependenceFamily closure =
      downward_closure(BasisFamily(parsed.n, parsed.sets));
  out << format_family({closure.sets().begin(), closure.sets().end()});
  return kHolds;
}

inline int Bases(const Options& opts, std::ostream& out) {
  const ParsedFamily parsed = ReadFamily(opts);
  const IndependenceFamily family(parsed.n, parsed.sets);
  if (family.empty()) throw InputError("an empty family has no maximal members");
  out << format_family(maximal_sets(family));
  return kHolds;
}

inline int Greedy(const Options& opts, std::ostream& out) {
  const ParsedFamily parsed = ReadFamily(opts);
  const BasisFamily family(parsed.n, parsed.sets);
  const AdmissibleOrdering o = parse_ordering(opts.ordering, parsed.n);
  const GreedyTrace trace = greedy_solution(family, o);
  for (const GreedyStep& step : trace.steps) {
    out << format_element(step.element) << " "
        << (step.accepted ? "ACCEPT" : "SKIP") << " " << step.reason << "\n";
  }
  out << "chosen: " << format_set(trace.chosen) << "\n";
  return kHolds;
}

inline int WitnessCommand(const Options& opts, std::ostream& out) {
  const ParsedFamily parsed = ReadFamily(opts);
  const BasisFamily family(parsed.n, parsed.sets);
  CounterexampleOptions search;
  search.wxyz = opts.wxyz;
  if (!opts.ordering.empty()) {
    search.ordering = parse_ordering(opts.ordering, parsed.n);
  }
  const auto witness = find_counterexample(family, search);
  if (!witness) {
    out << "witness: none\n";
    return kFails;
  }
  PrintWitness(*witness, out);
  return kHolds;
}

inline int Enumerate(const Options& opts, std::ostream& out) {
  const GroundSize n(opts.enumerate_n);
  if (opts.downsets) {
    const EnumerationReport report = sweep_downsets(n);
    out << format_report(report);
    return report.mismatches.empty() ? kHolds : kFails;
  }
  if (!opts.enumerate_k) throw InputError("enumerate needs K unless --downsets");
  const EnumerationReport report = sweep_basis_families(n, *opts.enumerate_k);
  out << format_report(report);
  if (!opts.catalog_path.empty()) {
    std::ofstream file(opts.catalog_path, std::ios::binary);
    if (!file) throw InputError("cannot write " + opts.catalog_path);
    out << "catalog_count: " << catalog(n, *opts.enumerate_k, file) << "\n";
  }
  return report.mismatches.empty() ? kHolds : kFails;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  detail::Options opts;
  CLI::App app{"Symplectic matroids: greedy definition and independent-set axiom"};
  app.require_subcommand(1);

  const auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", opts.file, "family file")->required();
    sub->add_option("--n", opts.n, "ground size (default: largest magnitude)")
        ->check(CLI::Range(1, kMaxGroundSize));
  };

  auto* check_bases = app.add_subcommand("check-bases", "test the greedy definition");
  add_file(check_bases);
  check_bases->add_option("--seed", opts.seed,
                          "also compare against sampled compatible weights");
  check_bases->add_option("--samples", opts.samples, "sampled weights per ordering")
      ->check(CLI::PositiveNumber);

  auto* check_independent =
      app.add_subcommand("check-independent", "test the independent-set axiom");
  add_file(check_independent);

  auto* independent_sets =
      app.add_subcommand("independent-sets", "print all subsets of the bases");
  add_file(independent_sets);

  auto* bases = app.add_subcommand("bases", "print the maximal independent sets");
  add_file(bases);

  auto* greedy = app.add_subcommand("greedy", "trace the greedy pass");
  add_file(greedy);
  greedy->add_option("--ordering", opts.ordering, "top row, largest first")
      ->required();

  auto* witness = app.add_subcommand("witness", "find an ordering defeating greedy");
  add_file(witness);
  witness->add_option("--ordering", opts.ordering, "search only this ordering");
  witness->add_flag("--wxyz", opts.wxyz, "trace the WXYZ construction first");

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive definition/axiom sweep");
  enumerate->add_option("N", opts.enumerate_n, "ground size")->required();
  enumerate->add_option("K", opts.enumerate_k, "rank");
  enumerate->add_option("--catalog", opts.catalog_path, "write the matroids here");
  enumerate->add_flag("--downsets", opts.downsets,
                      "sweep subset-closed families instead (n <= 2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kBadInput;
  }

  try {
    if (*check_bases) return detail::CheckBases(opts, out);
    if (*check_independent) return detail::CheckIndependent(opts, out);
    if (*independent_sets) return detail::IndependentSets(opts, out);
    if (*bases) return detail::Bases(opts, out);
    if (*greedy) return detail::Greedy(opts, out);
    if (*witness) return detail::WitnessCommand(opts, out);
    if (*enumerate) return detail::Enumerate(opts, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace symplectic::cli

#endif  // SYMPLECTIC_TOOLS_CLI_HPP_
