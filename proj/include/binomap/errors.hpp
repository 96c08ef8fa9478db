#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binomap {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// lexical/grammatical failure with 1-based source position
struct parse_error : error {
    parse_error(const std::string& msg, int line, int column)
        : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct not_binomial_error : error {
    explicit not_binomial_error(const std::string& msg) : error(msg) {}
};

// a selection referenced a dropped variable or a Mixed equation survived
struct invalid_selection_error : error {
    explicit invalid_selection_error(const std::string& msg) : error(msg) {}
};

struct branch_limit_error : error {
    branch_limit_error(const std::string& count, std::int64_t limit)
        : error("toric branch count " + count + " exceeds branch limit " + std::to_string(limit)),
          count(count) {}
    std::string count;
};

}  // namespace binomap
