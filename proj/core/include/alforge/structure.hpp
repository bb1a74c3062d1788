#ifndef ALFORGE_STRUCTURE_HPP
#define ALFORGE_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "alforge/geometry.hpp"
#include "alforge/species.hpp"

namespace alforge {

struct Structure {
    Cell cell;
    std::vector<int> species_ids;
    std::vector<Vec3> positions; // A

    std::size_t natoms() const { return positions.size(); }

    // Finite positions, matching array lengths, ids valid for `table`.
    void validate(const SpeciesTable& table) const;

    std::size_t count_species(int id) const {
        std::size_t n = 0;
        for (int s : species_ids)
            if (s == id) ++n;
        return n;
    }
};

// The unit of simulation and labeling.
struct Frame {
    Structure structure;
    std::optional<std::vector<Vec3>> velocities; // A/fs
    double time_fs = 0.0;
    std::string tag; // provenance, e.g. "iter=2;T=1500;engine=md;step=120"

    std::size_t natoms() const { return structure.natoms(); }
    void validate(const SpeciesTable& table) const;
};

struct LabeledFrame {
    Frame frame;
    double energy = 0.0;      // eV, total
    std::vector<Vec3> forces; // eV/A

    std::size_t natoms() const { return frame.natoms(); }
    void validate(const SpeciesTable& table) const;
};

} // namespace alforge

#endif
