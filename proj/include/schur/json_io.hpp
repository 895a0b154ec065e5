#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "schur/growth.hpp"
#include "schur/symmetric.hpp"
#include "schur/tilings.hpp"
#include "schur/unbounded.hpp"

namespace schur::io {

using nlohmann::json;

inline constexpr std::string_view process_sample_format = "schur/process-sample/1";
inline constexpr std::string_view symmetric_sample_format = "schur/symmetric-sample/1";
inline constexpr std::string_view pyramidal_sample_format = "schur/pyramidal-sample/1";
inline constexpr std::string_view partition_format = "schur/partition/1";
inline constexpr std::string_view plane_partition_format = "schur/plane-partition/1";
inline constexpr std::string_view steep_tiling_format = "schur/steep-tiling/1";
inline constexpr std::string_view overpartition_format = "schur/overpartition/1";

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const ProcessSample& s);
json to_json(const SymmetricSample& s);
json to_json(const PyramidalSample& s, const std::string& convention);
json to_json(const HeightMatrix& h);
json to_json(const DominoTiling& t);
json to_json(const OverpartitionTableau& t);

// All readers check the "format" field and throw std::invalid_argument on mismatch or malformed input.
ProcessSample process_sample_from_json(const json& j);
SymmetricSample symmetric_sample_from_json(const json& j);
PyramidalSample pyramidal_sample_from_json(const json& j);
HeightMatrix plane_partition_from_json(const json& j);
DominoTiling steep_tiling_from_json(const json& j);
OverpartitionTableau overpartition_from_json(const json& j);

std::string format_of(const json& j);

}  // namespace schur::io
