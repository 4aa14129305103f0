#pragma once

#include "czr/checker.hpp"
#include "czr/constructions.hpp"
#include "czr/realizers.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace czr {

struct UnknownAxiom : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A realizer construction together with the instances it must pass.
///
/// `realizer` is fixed when the package is built and reused for every
/// instance of `suite`. `verify` never consults anything but the realizer it
/// is handed and the instance.
struct AxiomPackage {
  std::string name;
  std::string statement;            // instantiated body, for reports
  Nat realizer;
  std::vector<std::string> inputs;  // parameters each instance binds
  /// Whether Unknown at imp-bound or hf-bound is expected (implications or
  /// unbounded quantifiers survive instantiation).
  bool open_ended = false;
  std::function<Environment(const Environment&)> witness_builder;
  std::function<CheckResult(const Nat& realizer, const Environment& instance, const CheckBudget&)> verify;
  std::vector<Environment> suite;
};

struct SuiteOptions {
  unsigned rank = 2;   // instances range over enumerate_hf(rank, width)
  unsigned width = 2;
  unsigned infinity_truncation = 3;
};

enum class SeparationPreset { SelfEqual, Bot, Nonempty };

/// Every package name accepted by make_axiom_package, in catalogue order.
std::vector<std::string> axiom_names();

/// Names accepted on the command line; "separation" expands to its presets.
std::vector<std::string> axiom_families();
std::vector<std::string> expand_family(const std::string& family);

AxiomPackage make_axiom_package(Pca& pca, const std::string& name, const SuiteOptions& options = {});

AxiomPackage equality_package(Pca& pca, const SuiteOptions& options = {});
AxiomPackage extensionality_package(Pca& pca, const SuiteOptions& options = {});
AxiomPackage induction_package(Pca& pca, const SuiteOptions& options = {});
AxiomPackage pairing_package(Pca& pca, const SuiteOptions& options = {});
AxiomPackage union_package(Pca& pca, const SuiteOptions& options = {});
AxiomPackage infinity_package(Pca& pca, const SuiteOptions& options = {});
AxiomPackage separation_package(Pca& pca, SeparationPreset preset, const SuiteOptions& options = {});
AxiomPackage fullness_package(Pca& pca, const SuiteOptions& options = {});
AxiomPackage collection_package(Pca& pca, const SuiteOptions& options = {});

/// The set-induction builder λe.h(e) with h(e) = {e}(λx.h(e)).
Nat induction_builder(Pca& pca);
Nat induction_realizer(Pca& pca, const Nat& e);

/// Pieces exposed for tests.
FormulaPtr separation_formula(SeparationPreset preset);
Finder canonical_finder(Pca& pca, SeparationPreset preset);
Nat infinity_iteration(Pca& pca);  // the third conjunct's realizer
Nat collection_realizer(Pca& pca, const FormulaPtr& phi);

struct InstanceReport {
  std::string label;
  CheckResult result;
};

struct SuiteReport {
  std::string name;
  Nat realizer;
  bool open_ended = false;
  std::vector<InstanceReport> instances;
  std::size_t realized = 0, refuted = 0, unknown = 0;

  bool passed() const { return refuted == 0; }
};

SuiteReport run_suite(const AxiomPackage& package, const CheckBudget& budget);

/// Checks one instance of the named package with the given realizer.
CheckResult check_axiom_instance(Pca& pca, const std::string& name, const Nat& realizer, const Environment& instance,
                                 const CheckBudget& budget);

std::string describe_instance(const Environment& instance);

}  // namespace czr
