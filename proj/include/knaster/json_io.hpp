#pragma once

#include "knaster/distinguish.hpp"
#include "knaster/natmap.hpp"
#include "knaster/plmap.hpp"
#include "knaster/seqspec.hpp"
#include "knaster/thread.hpp"
#include "knaster/tower.hpp"

#include <json.hpp>

#include <filesystem>

namespace knaster::io {

using json = nlohmann::json;

// All rationals are written as canonical "p/q" strings and parsed strictly.
// Every *_from_json throws InvalidInput on malformed documents.

json to_json(const PLMap& f);
PLMap plmap_from_json(const json& j);

json to_json(const SeqSpec& s);
SeqSpec seqspec_from_json(const json& j);

json to_json(const Thread& x);
Thread thread_from_json(const json& j);

json to_json(const NaturalMapSpec& spec);
NaturalMapSpec natmap_from_json(const json& j);

json to_json(const Tower& tower);
/// Re-verifies every level against a fresh build (VerificationFailure on
/// mismatch).
Tower tower_from_json(const json& j);

json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
/// Pretty-printed, two-space indent, trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);

} // namespace knaster::io
