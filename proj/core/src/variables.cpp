#include "parmreach/variables.hpp"

#include <mutex>
#include <stdexcept>

namespace parmreach {

Variable VariableTable::intern(std::string_view name) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = index_.find(std::string(name)); it != index_.end()) return Variable{it->second};
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = index_.try_emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return Variable{it->second};
}

std::optional<Variable> VariableTable::find(std::string_view name) const {
    std::shared_lock lock(mutex_);
    if (auto it = index_.find(std::string(name)); it != index_.end()) return Variable{it->second};
    return std::nullopt;
}

const std::string& VariableTable::name(Variable v) const {
    std::shared_lock lock(mutex_);
    if (v.id >= names_.size()) throw std::out_of_range("unknown variable id " + std::to_string(v.id));
    return names_[v.id];
}

std::size_t VariableTable::size() const {
    std::shared_lock lock(mutex_);
    return names_.size();
}

}  // namespace parmreach
