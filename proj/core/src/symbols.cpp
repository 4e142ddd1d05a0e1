#include "asprl/symbols.hpp"

#include "asprl/errors.hpp"

namespace asprl {

SymbolTable::SymbolTable(const SymbolTable& other) : names_(other.names_) {
    index_.reserve(names_.size());
    for (Id id = 0; id < names_.size(); ++id) {
        index_.emplace(std::string_view(names_[id]), id);
    }
}

SymbolTable& SymbolTable::operator=(const SymbolTable& other) {
    if (this != &other) {
        SymbolTable copy(other);
        names_ = std::move(copy.names_);
        index_ = std::move(copy.index_);
    }
    return *this;
}

SymbolTable::Id SymbolTable::intern(std::string_view name) {
    auto it = index_.find(name);
    if (it != index_.end()) {
        return it->second;
    }
    Id id = static_cast<Id>(names_.size());
    names_.emplace_back(name);
    index_.emplace(std::string_view(names_.back()), id);
    return id;
}

std::optional<SymbolTable::Id> SymbolTable::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const std::string& SymbolTable::name(Id id) const {
    if (id >= names_.size()) {
        throw Error("symbol id out of range");
    }
    return names_[id];
}

} // namespace asprl
