#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "divinv/invariants.hpp"
#include "divinv/plancherel.hpp"

namespace divinv {

struct CheckCount {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

/// Outcome of one verification suite, split into named properties.
struct SuiteOutcome {
  static constexpr std::size_t kMaxWitnesses = 20;

  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::map<std::string, CheckCount> parts;
  std::vector<std::string> witnesses;
  /// Free-form numeric summaries (e.g. worst oracle error), kept sorted.
  std::map<std::string, std::string> notes;

  explicit SuiteOutcome(std::string n = {}) : name(std::move(n)) {}

  void check(const std::string& part, bool ok, const std::function<std::string()>& witness);
  /// Adds counts, witnesses and notes of `other`, naming its parts prefix + part.
  void merge(const SuiteOutcome& other, const std::string& prefix = {});
  bool passed() const noexcept { return violations == 0; }
};

/// Everything the suites share: records for all irreps and unordered pairs.
struct Analysis {
  const GroupModel* model = nullptr;
  std::vector<IrrepRecord> irreps;
  PairTable pairs;
};

Analysis analyze(const GroupModel& model, unsigned threads = 1);

/// Sum of squared degrees, both orthogonality relations, twist bijectivity,
/// degrees dividing |G|.
SuiteOutcome check_table(const CharacterTable& table);

/// Trivial representation: t = 1, r = n, f = n^2 - n.
SuiteOutcome check_steinberg(const Analysis& a);

/// inv = t^2 q^{-rt}/(1-q^{-rt})^2 exactly and r | n/t, for every irrep.
SuiteOutcome check_r_integrality(const Analysis& a);

/// q^{-f~} = v_n^2 inv/(d1 d2), f = f~ - r1 t_pair, f >= 0, for every pair.
SuiteOutcome check_conductor_integrality(const Analysis& a);

/// Conductor and inv forms of the ultrametric inequality.
SuiteOutcome check_ultrametric_suite(const Analysis& a, const std::vector<Triple>& triples);

/// Equivalence of k >= dist, Hom_{U_k} != 0 and d2 chi1 = d1 chi2 on U_k;
/// hom_k/(d1 d2) = 1/(#constituents d_sigma^2) with the same constituent
/// data for both sides; equal degrees and multiplicities of constituents;
/// dist ultrametric and equal normalized Homs on triples; dist = 0 iff a
/// twist matches.
SuiteOutcome check_cliff(const Analysis& a, const std::vector<Triple>& triples);

/// Hom dimensions monotone with hom_m = d1 d2; inv(pi,pi)/d^2 bounds every
/// normalized pairing; dist, inv and f~ unchanged under twists.
SuiteOutcome check_invariant_properties(const Analysis& a);

/// Representations of G_M inflated to G_m (M < m) keep dist, inv, t, r, f.
SuiteOutcome check_level_consistency(const Analysis& a, std::uint64_t seed);

/// Norm over U_0, shell vanishing, the length of the restriction to U_1 and
/// the restriction to U_0 for every irrep; the norm over U_1 and the
/// identity for inv when the restriction to U_1 is multiplicity free.
SuiteOutcome check_norms(const Analysis& a);

/// Factorized and definitional forms of mu, symmetry in Y, pole order at 1.
SuiteOutcome check_plancherel(const Analysis& a);

struct OracleConfig {
  std::size_t samples = 5;
  std::uint64_t seed = 1;
  double re_min = -1.5, re_max = -0.3;
  double im_min = -1.0, im_max = 1.0;
  double tolerance = 1e-9;
  OracleOptions series;
};

/// Relative error of the shell series against the closed form.
SuiteOutcome check_oracle(const Analysis& a, const OracleConfig& config);

/// Seeded sample points for the oracle.
std::vector<std::complex<double>> oracle_samples(const OracleConfig& config);

}  // namespace divinv
