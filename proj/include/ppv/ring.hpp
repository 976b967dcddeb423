#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppv {

/// Variable names of a field Q(t1..tm)(x). Index 0 is always the main
/// variable x; parameters follow in declaration order.
class Ring {
public:
    Ring(std::string main_var, std::vector<std::string> params);

    std::size_t size() const { return names_.size(); }
    std::size_t param_count() const { return names_.size() - 1; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::string& main_var() const { return names_.front(); }
    const std::vector<std::string>& names() const { return names_; }
    std::vector<std::string> params() const;

    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Throws std::invalid_argument for names not in the ring.
    std::size_t require(std::string_view name) const;

    bool operator==(const Ring& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::string main_var, std::vector<std::string> params);
inline RingPtr make_ring(std::vector<std::string> params) {
    return make_ring("x", std::move(params));
}

bool is_identifier(std::string_view s);

} // namespace ppv
