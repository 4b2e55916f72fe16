#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace parmreach {

/// Interned parameter symbol. Ids are dense and their order is the
/// variable order used by every monomial comparison in a session.
struct Variable {
    std::uint32_t id = 0;

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

class VariableTable {
public:
    Variable intern(std::string_view name);
    std::optional<Variable> find(std::string_view name) const;
    const std::string& name(Variable v) const;
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::deque<std::string> names_;  // stable references
    std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace parmreach

template <>
struct std::hash<parmreach::Variable> {
    std::size_t operator()(parmreach::Variable v) const noexcept { return v.id; }
};
