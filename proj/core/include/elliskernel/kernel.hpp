#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elliskernel/rees.hpp"
#include "elliskernel/substitution.hpp"
#include "elliskernel/transformation_semigroup.hpp"

namespace elliskernel {

/// Descriptor of the maximal equicontinuous factor: the prime divisors of the
/// substitution length together with the height.  Two descriptors are equal
/// iff prime sets and heights agree.
struct MefDescriptor {
  std::vector<unsigned long long> primes;
  unsigned height = 1;

  bool operator==(const MefDescriptor&) const = default;
};

MefDescriptor mef_descriptor(const Substitution& s);

/// The data of the fixed-point-fibre kernel presentation of a simplified
/// quasi-bijective substitution.
struct KernelData {
  Substitution substitution;  // the simplified form the data was built from
  TransformationSemigroup semigroup;
  FiniteMap e_plus, e_minus, e_pm, e_mp;
  FiniteMap phi;  // fixed choice e_plus ∘ e_minus
  HClassGroup h_plus;
  std::vector<FiniteMap> h_minus_plus;
  std::vector<std::pair<FiniteMap, FiniteMap>> s2;  // consecutive pairs in H-+ x H+
  std::vector<FiniteMap> index_set;                 // I = { L R^{-1} }
  ReesPresentation presentation;                    // Lambda = {+,-}
};

KernelData build_kernel(const Substitution& simplified);

/// Realization of the presentation on the fixed-point seeds; maps are
/// self-maps of the seed list, aligned with enumerate(presentation).
struct FibreAction {
  std::vector<Seed> seeds;
  std::vector<FiniteMap> maps;
};

FibreAction fibre_action(const KernelData& k, const std::vector<Seed>& seeds);

/// Independent brute-force oracle: enumerates the column pairs of every
/// power up to `depth` and collects the seed self-maps their one-sided limits
/// induce on the fixed-point fibre (forward windows act through the right
/// seed letter, backward windows through the left one).  Returns the sorted
/// set of maps over seed indices.
std::vector<FiniteMap> window_oracle(const Substitution& s, unsigned depth);

struct NesFlags {
  bool nes_finite = false;
  bool full_symmetric = false;
};

/// Gamma = little structure group of the presentation; nes_finite iff its
/// normal closure is the whole structure group, full_symmetric iff that
/// closure is the full symmetric group on the action degree.
NesFlags nes_check(const ReesPresentation& p, std::size_t action_degree);
NesFlags nes_check(const KernelData& k);

/// Rees decomposition of a finite completely simple transformation
/// semigroup.  Errors with not_completely_simple otherwise.
ReesPresentation rees_decompose(
    const TransformationSemigroup& m,
    const std::function<std::string(const FiniteMap&)>& name);

struct AnalyzeOptions {
  unsigned max_power = 64;
  std::optional<std::size_t> complexity_bound;
  std::string aut_eq_orbit = "T-orbit of 0";
  unsigned oracle_depth_limit = 8;
  std::size_t iso_budget = 10'000'000;
};

struct KernelReport {
  MefDescriptor mef;
  ReesPresentation presentation;
  std::vector<std::string> gamma;
  bool nes_finite = false;
  bool full_symmetric = false;
  std::size_t fibre_size = 0;
  std::vector<std::string> seeds;
  std::string aut_eq_orbit;
  std::string full_kernel;
  std::vector<std::string> notes;
  std::string phi;
  unsigned exponent = 1;
  std::string method;
};

/// Full analysis pipeline for a primitive aperiodic constant-length
/// substitution.  Quasi-bijective inputs go through simplify + build_kernel;
/// other inputs of column rank >= 2 fall back to the window oracle and a
/// direct Rees decomposition of the resulting fibre semigroup.
KernelReport kernel_report(const Substitution& s, const AnalyzeOptions& opt = {});

enum class KernelVerdict {
  algebraically_isomorphic,
  not_isomorphic,
  inconclusive,
};

const char* verdict_name(KernelVerdict v);

struct KernelComparison {
  KernelVerdict verdict;
  std::string reason;
};

KernelComparison compare_kernels(const KernelReport& a, const KernelReport& b,
                                 std::size_t budget = 10'000'000);

}  // namespace elliskernel
