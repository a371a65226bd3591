#pragma once

#include <stdexcept>
#include <string>

namespace mw {

// Error taxonomy shared by the C API and the CLI exit codes:
// 2 = bad parameter / usage, 3 = capacity limit, 4 = corrupt cache,
// 5 = internal contract violation.
enum class ErrorCode : int {
    Param = 2,
    Capacity = 3,
    Cache = 4,
    Internal = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct ParamError : Error {
    explicit ParamError(const std::string& w) : Error(ErrorCode::Param, w) {}
};

struct CapacityError : Error {
    explicit CapacityError(const std::string& w) : Error(ErrorCode::Capacity, w) {}
};

struct CacheError : Error {
    explicit CacheError(const std::string& w) : Error(ErrorCode::Cache, w) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error(ErrorCode::Internal, w) {}
};

}  // namespace mw
