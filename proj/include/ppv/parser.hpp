#pragma once

#include "ppv/parser_core.hpp"
#include "ppv/rat.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppv {

/// Parse a rational function in the variables of `ring`.
Rat parse_expr(std::string_view src, const RingPtr& ring);
/// Convenience overload: main variable "x" plus the given parameters.
Rat parse_expr(std::string_view src, const std::vector<std::string>& params);

/// Structural problem in a system description.
class SchemaError : public std::runtime_error {
public:
    enum class Kind { Json, Schema, DimensionMismatch, DuplicateDerivation, Expression };
    SchemaError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Textual description of a parametrized linear system dY = A Y.
/// Matrices are keyed by derivation name (the main variable or a parameter).
struct SystemSpec {
    std::vector<std::string> params;
    std::string var = "x";
    std::size_t n = 0;
    std::map<std::string, std::vector<std::vector<std::string>>> matrices;

    RingPtr ring() const { return make_ring(var, params); }
};

/// Parse and validate the JSON form of a system. Every matrix entry is
/// checked to parse in the declared variables.
SystemSpec parse_system(std::string_view json_text);
std::string to_json(const SystemSpec& spec);

} // namespace ppv
