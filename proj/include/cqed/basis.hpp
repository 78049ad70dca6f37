#pragma once

#include <vector>

#include "cqed/fock.hpp"
#include "cqed/grid.hpp"

namespace cqed {

// Electron grid tensored with one truncated Fock space per photon mode.
// Slot 0 is the grid, slots 1..M the modes; the flat index is row-major
// with the grid index slowest.
struct CompositeBasis {
    GridSpec grid;
    std::vector<FockSpec> focks;

    int n_slots() const { return 1 + static_cast<int>(focks.size()); }

    long slot_dim(int slot) const {
        if (slot < 0 || slot >= n_slots()) throw config_error("CompositeBasis: slot out of range");
        return slot == 0 ? grid.n_points : focks[slot - 1].dim();
    }

    long dim() const {
        long d = grid.n_points;
        for (const auto& f : focks) d *= f.dim();
        return d;
    }

    long flatten(const std::vector<long>& idx) const;
    std::vector<long> unflatten(long index) const;

    void validate() const {
        grid.validate();
        for (const auto& f : focks) f.validate();
    }
};

}  // namespace cqed
