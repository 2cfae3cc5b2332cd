#pragma once

#include "norden/curvature.hpp"
#include "norden/manifold_io.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace norden {

enum class CheckStatus { pass, fail, erratum };

std::string to_string(CheckStatus status);

/// One verification line. ERRATUM means the computation is internally
/// consistent and oracle-backed but disagrees with a printed table entry;
/// the details name every such component.
struct CheckResult {
  std::string id;
  std::string description;
  std::string paper_location;
  CheckStatus status = CheckStatus::fail;
  std::vector<std::string> details;  // defects or erratum component lines
  std::string note;                  // commentary on misprints that do not alter results
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  int count(CheckStatus status) const;
  bool has_failures() const { return count(CheckStatus::fail) > 0; }
  std::string to_text() const;
  std::string to_json() const;
};

/// Builds the symbolic 4-parameter family and verifies every displayed
/// result of the source text against the engine, in source order.
VerificationReport run_paper_suite();

/// Structured analysis of one manifold, renderable as text or JSON.
struct PlaneCurvature {
  std::string name;     // alpha_ij
  std::string type;     // holomorphic | totally_real | neither
  std::string value;    // exact value, or (num)/(den) when the ratio is not polynomial
};

struct Analysis {
  int dim = 0;
  bool norden_ok = false;
  std::vector<std::string> norden_violations;

  std::string principal_class;
  bool w0 = false, w1 = false, w2 = false, w3 = false, theta_zero = false;

  std::vector<std::string> f_nonzero;      // "F(i,j,k) = value"
  std::vector<std::string> theta_nonzero;  // "theta(k) = value"
  std::vector<std::string> nijenhuis_nonzero;
  std::string nabla_j_norm;
  std::string nijenhuis_norm;
  std::string isotropic_condition;  // polynomial whose vanishing is the condition
  bool isotropic_kahler = false;    // exact vanishing of the norm

  std::vector<std::string> r_nonzero;
  std::vector<std::string> ricci_nonzero;
  std::string scalar_curvature;
  bool weyl_zero = false;
  std::optional<std::string> weyl_note;  // set when Weyl is not applicable
  std::vector<std::string> weyl_nonzero;
  bool locally_symmetric = false;

  std::vector<PlaneCurvature> basis_planes;
  std::optional<std::string> bisectional;  // h on the first holomorphic pair
  std::optional<std::string> bisectional_note;
};

Analysis analyze(const NordenManifold& m, const NordenCheckReport& check);
std::string analysis_to_text(const Analysis& a);
std::string analysis_to_json(const Analysis& a);

/// Deterministic parameter sampling for the 4-parameter family. The
/// generator is the multiplicative congruential sequence
///   state <- state * 6364136223846793005 mod 2^64, seeded with 2*seed+1,
/// and each parameter is drawn on the rational grid lo + (hi-lo)*k/1000
/// with k = (state >> 11) mod 1001.
struct SampleOptions {
  long count = 0;
  std::uint64_t seed = 0;
  Rational lo;
  Rational hi;
  std::optional<std::array<Rational, 4>> include_point;  // evaluated first, counts toward count
};

struct SampleSummary {
  long total = 0;
  long isotropic = 0;
  Rational tau_min;
  Rational tau_max;
  std::vector<std::array<Rational, 4>> isotropic_points;
};

SampleSummary run_sample(const SampleOptions& options);
std::string sample_to_text(const SampleOptions& options, const SampleSummary& summary);
std::string sample_to_json(const SampleOptions& options, const SampleSummary& summary);

}  // namespace norden
