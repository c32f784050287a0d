#pragma once

#include <stdexcept>
#include <string>

namespace lpmln {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error with 1-based source position.
struct ParseError : Error {
    ParseError(int line, int column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line(line),
          column(column) {}

    int line;
    int column;
};

// Enumeration universe larger than the configured cap.
struct CapExceeded : Error {
    CapExceeded(std::size_t universe_size, std::size_t cap)
        : Error("universe of " + std::to_string(universe_size) +
                " literals exceeds the enumeration cap of " + std::to_string(cap)),
          universe_size(universe_size),
          cap(cap) {}

    std::size_t universe_size;
    std::size_t cap;
};

struct NoStableModels : Error {
    using Error::Error;
};

}  // namespace lpmln
