#pragma once

#include <fairco/report.hpp>
#include <fairco/verification.hpp>

#include <json.hpp>

namespace fairco {

using json = nlohmann::ordered_json;

auto to_json(const VertexSet & s) -> json;
auto to_json(const Partition & p) -> json;
auto to_json(const PartitionCertificate & cert) -> json;
auto to_json(const Violation & violation) -> json;
auto to_json(const Bound & bound) -> json;
auto to_json(const BoundsReport & bounds) -> json;
auto to_json(const SolveReport & report) -> json;
auto to_json(const Witness & witness) -> json;
auto to_json(const CensusReport & report) -> json;

auto vertex_set_from_json(const json & j) -> VertexSet;
auto partition_from_json(const json & j) -> Partition;
auto certificate_from_json(const json & j) -> PartitionCertificate;
auto bound_from_json(const json & j) -> Bound;
auto solve_report_from_json(const json & j) -> SolveReport;
auto census_report_from_json(const json & j) -> CensusReport;

/// Two-space indented dump with a trailing newline.
auto dump(const json & j) -> std::string;

} // namespace fairco
