#pragma once
// JSON I/O: structure spec files (versioned "spec_version": 1) and 1-form
// files, plus the machine-readable mirror of check reports.
#include "loopalg/fmanifold.hpp"

#include <json.hpp>

namespace loopalg {

// Keys: spec_version, n, coords; optional metric (contravariant matrix of
// expression strings), connection (Gamma^i_{jk}), product (c^i_{jk}), map,
// eta, forms ({label: [expr, ...]}).
struct SpecFile {
  StructureSpec spec;
  std::vector<HierarchyForm> forms;
};

SpecFile load_spec(const std::string& path);
nlohmann::json spec_to_json(const SpecFile& sf, const std::vector<std::string>& names);
void save_spec(const SpecFile& sf, const std::string& path);

// Form files: {"coords": [...], "reduced": [expr, ...]} or
// {"coords": [...], "general": [{"i": 1, "t": 0, "expr": "..."}, ...]}
// (1-based coordinate index i, jet order t >= 0).
OneForm load_form(const std::string& path, const std::vector<std::string>& coords,
                  std::vector<std::string>* names_out = nullptr);
nlohmann::json form_to_json(const OneForm& reduced, const std::vector<std::string>& coords);

nlohmann::json report_to_json(const CheckReport& r);

}  // namespace loopalg
