#pragma once

// Registry of hand-computed index values published for Γ_3, Γ_4 and Γ_5,
// and a comparator that checks each one against the definition-level
// computation. A mismatch is data for the report, not an error.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphlab/exact_arith.hpp"
#include "graphlab/indices.hpp"

namespace graphlab {

struct Claim {
  std::string id;       // "gamma4.harmonic"
  unsigned k = 0;
  IndexId index = IndexId::wiener;
  std::string printed;  // the equality as published, symbolic constants included
  std::optional<IndexValue> claimed;  // empty when the printed form has no exact reading
  std::string source;   // citation with verbatim anchor
  std::string note;

  friend bool operator==(const Claim&, const Claim&) = default;
};

enum class Verdict { match, mismatch, unevaluable };

std::string_view verdict_name(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);

struct ClaimReport {
  Claim claim;
  std::optional<IndexValue> oracle;
  Verdict verdict = Verdict::unevaluable;
  std::string note;

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t unevaluable = 0;
};

/// Registry order: k = 3, 4, 5; within each k the order of publication.
const std::vector<Claim>& builtin_claims();

/// Builds Γ_k and evaluates the claimed index from its definition.
ClaimReport evaluate_claim(const Claim& c);

/// One report per registered claim (restricted to `k` when given), in
/// registry order. Claims are evaluated on up to `threads` workers; the
/// output does not depend on the thread count.
std::vector<ClaimReport> run_all(std::optional<unsigned> k = std::nullopt, unsigned threads = 1);

ReportSummary summarize(const std::vector<ClaimReport>& reports);

enum class ReportFormat { markdown, json };

std::string render_report(const std::vector<ClaimReport>& reports, ReportFormat format);

/// Inverse of render_report(..., ReportFormat::json). Throws
/// std::invalid_argument on malformed documents.
std::vector<ClaimReport> parse_report_json(std::string_view text);

}  // namespace graphlab
