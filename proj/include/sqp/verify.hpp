#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sqp/corpus.hpp"
#include "sqp/limits.hpp"
#include "sqp/monomial_ideal.hpp"

namespace sqp {

enum class TheoremId {
  betti_scaling,
  reg_formula,
  pd_equal,
  depth_equal,
  cm_transfer,
  gorenstein_transfer,
  extremal_transfer,
  power_commute,
  intersect_commute,
  membership_transfer,
  primary_transfer,
  ass_equal,
  min_equal,
  ntf_transfer,
  stability_equal,
  closure_equal,
  symbolic_commute,
  symbolic_depth,
  mu_equal,
  extremal_power_stab,
};

const std::vector<TheoremId>& all_theorems();
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
/// One-line statement of the identity the check executes.
std::string_view theorem_statement(TheoremId id);

enum class CaseStatus { pass, fail, resource_skipped, not_applicable };
std::string_view case_status_name(CaseStatus s);

struct CheckOutcome {
  CaseStatus status = CaseStatus::pass;
  std::string witness;  // offending values on failure, reason when skipped, else an optional note
};

struct VerifyOptions {
  Limits limits = Limits::for_verification();
  std::vector<FieldSpec> fields{FieldSpec(0), FieldSpec(2)};
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CheckContext {
  const CorpusSpec& spec;
  const VerifyOptions& options;
  std::size_t index;
};

using CaseCheck = std::function<CheckOutcome(const MonomialIdeal&, const CheckContext&)>;

struct CaseResult {
  std::size_t index = 0;
  MonomialIdeal ideal;
  CheckOutcome outcome;
  double millis = 0;
};

struct VerificationReport {
  std::string theorem;
  CorpusSpec corpus;
  std::vector<CaseResult> cases;  // ordered by corpus index
  double millis = 0;

  std::size_t count(CaseStatus s) const;
  bool passed() const { return count(CaseStatus::fail) == 0; }
};

CaseCheck theorem_check(TheoremId id);

/// Runs `check` on every ideal; cases run in parallel, results keep corpus
/// order. A ResourceError inside a case marks only that case as skipped.
VerificationReport verify_with(std::string theorem, const CaseCheck& check, const std::vector<MonomialIdeal>& corpus,
                               const CorpusSpec& spec, const VerifyOptions& options = {});

VerificationReport verify(TheoremId id, const std::vector<MonomialIdeal>& corpus, const CorpusSpec& spec,
                          const VerifyOptions& options = {});

/// Generates the corpus from `spec` and verifies it.
VerificationReport verify(TheoremId id, const CorpusSpec& spec, const VerifyOptions& options = {});

/// `include_timing` adds wall-clock fields, which makes the output differ
/// between runs.
nlohmann::json report_to_json(const VerificationReport& report, bool include_timing);
std::string render_report_text(const VerificationReport& report);

/// Writes <dir>/verify-<theorem>-seed<seed>.json and returns its path.
std::string persist_report(const VerificationReport& report, const std::string& dir);

}  // namespace sqp
