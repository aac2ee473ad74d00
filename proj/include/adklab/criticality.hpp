#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adklab/domain_model.hpp"
#include "adklab/extnat.hpp"
#include "adklab/ideal_function.hpp"

namespace adklab {

struct CritConfig {
  std::uint64_t max_n = 16;         // finite levels reported
  std::uint64_t chain_stage_cap = 64;
};

// m_p: the least sup of a finitely generated family element inside the
// maximal ideal at p. p is n-critical iff m_p > n, omega-critical iff
// m_p is infinite. The certificate is an actual family element realizing it.
struct BoundedSup {
  ExtNat value;
  std::optional<IdealFunction> certificate;
};

BoundedSup bounded_sup_at(const DomainModel& model, const Ordinal& p);
// Same, with the supremum taken over a restricted spectrum (the overring
// stage view): the restricted family is {g|_window}, and positivity at p is
// unchanged for p in the window.
BoundedSup bounded_sup_at(const DomainModel& model, const Ordinal& p,
                          const PointSet& window);

struct ClassValue {
  ProfileClass cls;
  ExtNat m;
};

struct CritReport {
  std::vector<ClassValue> m_values;
  std::vector<std::pair<std::uint64_t, PointSet>> crit;  // n -> Crit^n
  PointSet crit_omega;
  // All Crit^n with n >= stable_from coincide with Crit^omega (symbolic
  // certificate: finite class invariants are bounded by it).
  std::uint64_t stable_from = 0;
  PointSet noncritical;
  bool noncritical_dense = false;

  CritReport(const SpectrumSpace& s) : crit_omega(s), noncritical(s) {}
};

PointSet crit_set(const DomainModel& model, std::uint64_t n);
PointSet crit_set_omega(const DomainModel& model);

CritReport compute_crit_report(const DomainModel& model, const CritConfig& cfg = {});

struct ChainStage {
  Ordinal alpha;
  PointSet set;
  std::string restricted_model_id;
  std::optional<Ordinal> restricted_top;  // order type of the stage set
};

struct ChainReport {
  std::vector<ChainStage> stages;
  Ordinal sp_rank_stabilization;
  std::optional<Ordinal> sp_rank_emptiness;
  // layers[i]: points of SP-height alpha_i
  std::vector<std::pair<Ordinal, PointSet>> height_layers;
  bool model_contradiction = false;
  std::optional<Ordinal> contradiction_point;
  std::string contradiction_note;

  bool scattered() const { return sp_rank_emptiness.has_value(); }
};

ChainReport compute_crit_chain(const DomainModel& model, const CritConfig& cfg = {});

Ordinal sp_height(const DomainModel& model, const Ordinal& p, const CritConfig& cfg = {});

struct NoncriticalDensity {
  PointSet noncritical;
  bool dense = false;
};
NoncriticalDensity noncritical_density(const DomainModel& model);

struct LevelDiagnostic {
  std::uint64_t n;
  PointSet level;  // Y_n = {nu > n}
  bool open = false;
  bool dense = false;
};
std::vector<LevelDiagnostic> unbounded_level_diagnostics(const DomainModel& model,
                                                         const IdealFunction& f,
                                                         std::uint64_t max_n);

struct BoundednessWitness {
  enum class Status { Witness, NotApplicable, NoneFound } status;
  std::optional<IdealFunction> element;
  std::optional<std::uint64_t> bound;
  std::string note;
};
// Existence of a bounded principal element when the omega-restricted
// overring has nonzero Jacobson radical.
BoundednessWitness completely_unbounded_check(const DomainModel& model);

}  // namespace adklab
