#pragma once

#include <stdexcept>
#include <string>

namespace wicdis {

// Malformed or inconsistent input data (bad file formats, span violations,
// id mismatches). The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wicdis
