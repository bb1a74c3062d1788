#include "alforge/structure.hpp"

#include <cmath>

#include "alforge/errors.hpp"

namespace alforge {

void Structure::validate(const SpeciesTable& table) const {
    if (species_ids.size() != positions.size())
        throw DataError("structure: species_ids and positions length mismatch");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (!positions[i].allFinite())
            throw DataError("structure: non-finite position at atom " + std::to_string(i));
        table.by_id(species_ids[i]); // throws on invalid id
    }
    if (cell.any_periodic()) cell.inverse(); // throws on singular periodic cell
}

void Frame::validate(const SpeciesTable& table) const {
    structure.validate(table);
    if (velocities && velocities->size() != structure.natoms())
        throw DataError("frame: velocity array length does not match atom count");
    if (velocities)
        for (std::size_t i = 0; i < velocities->size(); ++i)
            if (!(*velocities)[i].allFinite())
                throw DataError("frame: non-finite velocity at atom " + std::to_string(i));
}

void LabeledFrame::validate(const SpeciesTable& table) const {
    frame.validate(table);
    if (forces.size() != frame.natoms())
        throw DataError("labeled frame: force array length does not match atom count");
    for (std::size_t i = 0; i < forces.size(); ++i)
        if (!forces[i].allFinite())
            throw DataError("labeled frame: non-finite force at atom " + std::to_string(i));
    if (!std::isfinite(energy)) throw DataError("labeled frame: non-finite energy");
}

} // namespace alforge
