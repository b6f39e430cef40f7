// Copyright (c) the branchcut developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef BRANCHCUT_COMB_HPP
#define BRANCHCUT_COMB_HPP

#include "branchcut/cauchy.hpp"

namespace branchcut {

// Signed integer combination of the branch slots at a base point, with its
// evaluated jet.  The integer vector is exact; orbit identity goes through
// the evaluated jet (distinct vectors may define one analytic germ).
struct FormalBranchSum {
  cplx base{};
  std::vector<long long> coef;
  Jet evaluated;

  bool is_zero(double eps_rel) const {
    return evaluated.is_zero(eps_rel * (1.0 + evaluated.max_abs()));
  }
};

// Word over the generator basis; letters applied left to right, exponent +-1.
struct LoopWord {
  std::vector<std::pair<int, int>> letters;
  std::string str() const;
};

struct CombGenerator {
  cplx puncture{};
  std::string kind;             // "endpoint" | "jump" | "crossing" | "ramification" | "off-curve"
  PiecewisePath loop;
  std::vector<int> perm;        // slot permutation under continuation along the loop
  std::vector<long long> bvec;  // sum of branches along the loop
  Jet bjet;
};

// Base-point calculus: branch slots and the generator loops of pi_1 of the
// punctured plane (punctures = Sigma plus Sigma_1).
struct CombContext {
  cplx base{};
  std::vector<BranchGerm> slots;
  std::vector<CombGenerator> generators;
  const IntegrandAssignment* assignment = nullptr;

  Jet jet_of(const std::vector<long long>& coef) const;
  FormalBranchSum make_sum(std::vector<long long> coef) const;
};

CombContext build_comb_context(const IntegrandAssignment& a, cplx base);

// Sum of branches of the assignment along an admissible auxiliary curve,
// evaluated at the end of S.
FormalBranchSum sum_of_branches(const IntegrandAssignment& a, const PiecewisePath& S);

// The affine action of a word on a formal sum based at the context point.
FormalBranchSum word_action(const CombContext& ctx, const LoopWord& word,
                            const FormalBranchSum& x);
FormalBranchSum word_value(const CombContext& ctx, const LoopWord& word);

struct MonodromyVerdict {
  enum Kind { Trivial, Finite, Infinite, Inconclusive };
  Kind kind = Inconclusive;
  long long orbit_size = 0;
  LoopWord witness;             // growth witness for the infinite verdict
  std::vector<Jet> orbit;       // distinct evaluated jets reached
  int word_bound = 0;
  double eps_jet = 0.0;
};

MonodromyVerdict classify_monodromy(const IntegrandAssignment& a, cplx base, int word_bound);
MonodromyVerdict classify_monodromy(const CombContext& ctx, int word_bound);

struct LocalConditionEntry {
  cplx point{};
  std::string kind;       // which local condition applies at this puncture
  bool holds = false;
  double residual = 0.0;  // jet magnitude of the loop's branch sum
};

struct LocalConditionReport {
  std::vector<LocalConditionEntry> entries;
  bool all_pass = false;  // together they certify rationality of I_i
};

LocalConditionReport local_condition_report(const CombContext& ctx);

struct VanishingVerdict {
  bool vanishes_on_D0 = false;
  bool monodromy_trivial = false;
  bool pole_shortcut = false;   // all poles of g in D_0
  struct PoleCheck {
    cplx pole{};
    int region = 0;
    double laurent_norm = 0.0;
    bool regular = false;
  };
  std::vector<PoleCheck> checks;
};

VanishingVerdict vanishing_test(const IntegrandAssignment& a);

struct ContinuationCheck {
  cplx continued{};      // Taylor-stepped continuation of I_i at the end of S
  cplx expected{};       // I_j - g(S, gamma) at the same point
  double max_deviation = 0.0;
  int steps = 0;
};

ContinuationCheck continue_integral(const IntegrandAssignment& a, const PiecewisePath& S,
                                    int extra_samples = 4);

}  // namespace branchcut

#endif
