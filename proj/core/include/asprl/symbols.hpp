#ifndef ASPRL_SYMBOLS_HPP
#define ASPRL_SYMBOLS_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace asprl {

/// Bidirectional string interner. Ids are dense and assigned in insertion
/// order; references returned by name() stay valid for the table's lifetime.
class SymbolTable {
public:
    using Id = std::uint32_t;

    SymbolTable() = default;
    // The index keys view into names_, so copies must rebuild the index.
    SymbolTable(const SymbolTable& other);
    SymbolTable& operator=(const SymbolTable& other);
    SymbolTable(SymbolTable&&) = default;
    SymbolTable& operator=(SymbolTable&&) = default;

    /// Returns the id of `name`, inserting it if not present.
    Id intern(std::string_view name);

    /// Looks up `name` without inserting.
    std::optional<Id> find(std::string_view name) const;

    const std::string& name(Id id) const;
    std::size_t size() const { return names_.size(); }

private:
    std::deque<std::string> names_;
    std::unordered_map<std::string_view, Id> index_;
};

} // namespace asprl

#endif
