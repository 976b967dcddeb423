#include "ppv/ring.hpp"

#include "ppv/poly.hpp"

#include <algorithm>
#include <cctype>

namespace ppv {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Ring::Ring(std::string main_var, std::vector<std::string> params) {
    names_.reserve(params.size() + 1);
    names_.push_back(std::move(main_var));
    for (auto& p : params) names_.push_back(std::move(p));
    if (names_.size() > kMaxVars)
        throw std::invalid_argument("at most " + std::to_string(kMaxVars - 1) + " parameters are supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i]))
            throw std::invalid_argument("invalid variable name '" + names_[i] + "'");
        if (names_[i] == "D")
            throw std::invalid_argument("'D' is reserved for the operator symbol");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
    }
}

std::vector<std::string> Ring::params() const {
    return {names_.begin() + 1, names_.end()};
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(std::string main_var, std::vector<std::string> params) {
    return std::make_shared<const Ring>(std::move(main_var), std::move(params));
}

} // namespace ppv
