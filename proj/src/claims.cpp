#include "graphlab/claims.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "graphlab/graph_core.hpp"
#include "graphlab/serialize.hpp"

namespace graphlab {

using nlohmann::ordered_json;

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::match:
      return "match";
    case Verdict::mismatch:
      return "mismatch";
    case Verdict::unevaluable:
      return "unevaluable";
  }
  return "unknown";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  for (const Verdict v : {Verdict::match, Verdict::mismatch, Verdict::unevaluable}) {
    if (verdict_name(v) == name) {
      return v;
    }
  }
  return std::nullopt;
}

namespace {

std::string join_notes(const std::string& a, const std::string& b) {
  if (a.empty()) {
    return b;
  }
  return b.empty() ? a : a + "; " + b;
}

ClaimReport compare(const Claim& c, const IndexValue& oracle) {
  ClaimReport report{c, oracle, Verdict::unevaluable, c.note};
  if (!c.claimed) {
    report.note = join_notes(report.note, "printed form has no exact reading");
    return report;
  }
  if (*c.claimed == oracle) {
    report.verdict = Verdict::match;
    return report;
  }
  report.verdict = Verdict::mismatch;
  if (c.claimed->kind() == IndexValue::Kind::integer && oracle.kind() == IndexValue::Kind::integer) {
    const BigInt difference = oracle.as_integer() - c.claimed->as_integer();
    report.note = join_notes(report.note, "oracle - claimed = " + difference.get_str());
  } else {
    report.note = join_notes(report.note, "claimed approx " + to_decimal(*c.claimed, kApproxDigits) +
                                              ", oracle approx " + to_decimal(oracle, kApproxDigits));
  }
  return report;
}

ordered_json optional_value_json(const std::optional<IndexValue>& value) {
  return value ? to_json(*value) : ordered_json(nullptr);
}

std::optional<IndexValue> optional_value_from_json(const ordered_json& doc) {
  if (doc.is_null()) {
    return std::nullopt;
  }
  return index_value_from_json(doc);
}

std::string markdown_cell(std::string text) {
  std::string out;
  for (const char c : text) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

ClaimReport evaluate_claim(const Claim& c) {
  const IndexEngine engine(build_gamma(c.k));
  return compare(c, compute_index(engine, c.index));
}

std::vector<ClaimReport> run_all(std::optional<unsigned> k, unsigned threads) {
  std::vector<const Claim*> selected;
  for (const Claim& c : builtin_claims()) {
    if (!k || c.k == *k) {
      selected.push_back(&c);
    }
  }

  // One engine per graph, shared read-only by the workers.
  std::map<unsigned, std::unique_ptr<IndexEngine>> engines;
  for (const Claim* c : selected) {
    if (!engines.contains(c->k)) {
      engines.emplace(c->k, std::make_unique<IndexEngine>(build_gamma(c->k)));
    }
  }

  std::vector<std::optional<ClaimReport>> slots(selected.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      const Claim& c = *selected[i];
      slots[i] = compare(c, compute_index(*engines.at(c.k), c.index));
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(selected.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back(work);
    }
  }

  std::vector<ClaimReport> reports;
  reports.reserve(slots.size());
  for (auto& slot : slots) {
    reports.push_back(std::move(*slot));
  }
  return reports;
}

ReportSummary summarize(const std::vector<ClaimReport>& reports) {
  ReportSummary summary;
  summary.total = reports.size();
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::match:
        ++summary.match;
        break;
      case Verdict::mismatch:
        ++summary.mismatch;
        break;
      case Verdict::unevaluable:
        ++summary.unevaluable;
        break;
    }
  }
  return summary;
}

std::string render_report(const std::vector<ClaimReport>& reports, ReportFormat format) {
  const ReportSummary summary = summarize(reports);
  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["summary"] = {{"total", summary.total},
                      {"match", summary.match},
                      {"mismatch", summary.mismatch},
                      {"unevaluable", summary.unevaluable}};
    ordered_json list = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json entry;
      entry["id"] = r.claim.id;
      entry["k"] = r.claim.k;
      entry["index"] = std::string(index_name(r.claim.index));
      entry["printed"] = r.claim.printed;
      entry["claimed"] = optional_value_json(r.claim.claimed);
      entry["oracle"] = optional_value_json(r.oracle);
      entry["verdict"] = std::string(verdict_name(r.verdict));
      entry["source"] = r.claim.source;
      entry["claim_note"] = r.claim.note;
      entry["note"] = r.note;
      list.push_back(std::move(entry));
    }
    doc["reports"] = std::move(list);
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "| id | k | index | claimed | oracle | verdict | source | note |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    out << "| " << r.claim.id << " | " << r.claim.k << " | " << index_name(r.claim.index) << " | "
        << markdown_cell(r.claim.claimed ? r.claim.claimed->to_string() : "n/a") << " | "
        << markdown_cell(r.oracle ? r.oracle->to_string() : "n/a") << " | " << verdict_name(r.verdict) << " | "
        << markdown_cell(r.claim.source) << " | " << markdown_cell(r.note) << " |\n";
  }
  out << "\nSummary: " << summary.total << " claims, " << summary.match << " match, " << summary.mismatch
      << " mismatch, " << summary.unevaluable << " unevaluable\n";
  return out.str();
}

std::vector<ClaimReport> parse_report_json(std::string_view text) {
  try {
    const ordered_json doc = ordered_json::parse(text);
    std::vector<ClaimReport> reports;
    for (const auto& entry : doc.at("reports")) {
      ClaimReport r;
      r.claim.id = entry.at("id").get<std::string>();
      r.claim.k = entry.at("k").get<unsigned>();
      const auto index = parse_index_name(entry.at("index").get<std::string>());
      if (!index) {
        throw std::invalid_argument("unknown index " + entry.at("index").dump());
      }
      r.claim.index = *index;
      r.claim.printed = entry.at("printed").get<std::string>();
      r.claim.claimed = optional_value_from_json(entry.at("claimed"));
      r.claim.source = entry.at("source").get<std::string>();
      r.claim.note = entry.at("claim_note").get<std::string>();
      r.oracle = optional_value_from_json(entry.at("oracle"));
      const auto verdict = parse_verdict(entry.at("verdict").get<std::string>());
      if (!verdict) {
        throw std::invalid_argument("unknown verdict " + entry.at("verdict").dump());
      }
      r.verdict = *verdict;
      r.note = entry.at("note").get<std::string>();
      reports.push_back(std::move(r));
    }
    return reports;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed claims report: ") + e.what());
  }
}

}  // namespace graphlab
