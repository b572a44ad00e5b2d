#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "schurbound/apps.hpp"
#include "schurbound/certify.hpp"

namespace schurbound::cli {

using ordered_json = nlohmann::ordered_json;

/// Output of one CLI invocation. Keys keep insertion order, so identical
/// inputs produce byte-identical documents.
struct ReportDocument {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();
  int exit_code = 0;
  double timing_ms = 0.0;

  ordered_json to_json() const;
};

/// Pretty-printed with two-space indent and a trailing newline.
void emit_report(const ReportDocument& doc, std::ostream& out);
/// Throws std::runtime_error when the path cannot be written.
void emit_report(const ReportDocument& doc, const std::filesystem::path& path);

ordered_json to_json(const MuResult& r);
ordered_json to_json(const BoundReport& r);
ordered_json to_json(const NonsingularityVerdict& v);
ordered_json to_json(const CertificateVerdict& v);
ordered_json to_json(const ProjectionResiduals& r);
ordered_json to_json(const DoaBoundReport& r);
ordered_json to_json(const RankIdentity& r);
ordered_json to_json(const CpBoundReport& r);

}  // namespace schurbound::cli
