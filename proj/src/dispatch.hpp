#pragma once

#include <string>

#include "json_io.hpp"

namespace hs {

inline const char* kVersion = "1.0.0";

struct DispatchResult {
    json response;
    int status = 0; // 0 success, 1 check failure, 2 domain/usage error
};

/// Routes a request {"subcommand": name, "payload": {...}, "seed": n,
/// "abs_tol": f, "rel_tol": f} to the module operations. The response
/// envelope is {"version", "result", "diagnostics"} on success and
/// {"version", "error": {"type", "message"}} otherwise.
DispatchResult dispatch(const json& request);

/// String-level entry point; malformed JSON yields status 2 with a
/// machine-readable error object.
std::string dispatch_json(const std::string& request_json, int& status);

} // namespace hs
