#ifndef ALFORGE_SPECIES_HPP
#define ALFORGE_SPECIES_HPP

#include <string>
#include <vector>

#include "alforge/errors.hpp"

namespace alforge {

struct SpeciesInfo {
    int id = 0;
    std::string symbol;
    double mass = 0.0; // amu
};

class SpeciesTable {
public:
    SpeciesTable() = default;

    explicit SpeciesTable(std::vector<SpeciesInfo> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (e.id != static_cast<int>(i))
                throw ConfigError("species ids must be contiguous from 0, got id " + std::to_string(e.id));
            if (e.mass <= 0.0)
                throw ConfigError("species '" + e.symbol + "' has non-positive mass");
            for (std::size_t j = 0; j < i; ++j)
                if (entries_[j].symbol == e.symbol)
                    throw ConfigError("duplicate species symbol '" + e.symbol + "'");
        }
    }

    static SpeciesTable aluminum_oxygen() {
        return SpeciesTable({{0, "Al", 26.9815}, {1, "O", 15.999}});
    }

    std::size_t size() const { return entries_.size(); }
    const std::vector<SpeciesInfo>& entries() const { return entries_; }

    const SpeciesInfo& by_id(int id) const {
        if (id < 0 || id >= static_cast<int>(entries_.size()))
            throw DataError("unknown species id " + std::to_string(id));
        return entries_[static_cast<std::size_t>(id)];
    }

    double mass_of(int id) const { return by_id(id).mass; }
    const std::string& symbol_of(int id) const { return by_id(id).symbol; }

    int id_of(const std::string& symbol) const {
        for (const auto& e : entries_)
            if (e.symbol == symbol) return e.id;
        throw DataError("unknown species symbol '" + symbol + "'");
    }

    bool has_symbol(const std::string& symbol) const {
        for (const auto& e : entries_)
            if (e.symbol == symbol) return true;
        return false;
    }

private:
    std::vector<SpeciesInfo> entries_;
};

} // namespace alforge

#endif
