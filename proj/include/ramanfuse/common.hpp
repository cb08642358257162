#pragma once

#include <stdexcept>
#include <string>

namespace rmf {

// Error category, mapped to process exit codes at the CLI boundary.
enum class error_kind {
    config,    // bad configuration / invalid arguments (exit 2)
    data,      // malformed or inconsistent input data (exit 3)
    training,  // optimisation failure, divergence (exit 4)
    internal,  // everything else (exit 5)
};

class error : public std::runtime_error {
public:
    error(error_kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    error_kind kind() const { return kind_; }

private:
    error_kind kind_;
};

[[noreturn]] inline void fail_config(const std::string& msg)   { throw error(error_kind::config, msg); }
[[noreturn]] inline void fail_data(const std::string& msg)     { throw error(error_kind::data, msg); }
[[noreturn]] inline void fail_training(const std::string& msg) { throw error(error_kind::training, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw error(error_kind::internal, msg); }

}  // namespace rmf
