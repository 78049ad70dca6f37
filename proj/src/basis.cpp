#include "cqed/basis.hpp"

namespace cqed {

long CompositeBasis::flatten(const std::vector<long>& idx) const {
    if (static_cast<int>(idx.size()) != n_slots())
        throw config_error("CompositeBasis::flatten: wrong number of indices");
    long flat = 0;
    for (int s = 0; s < n_slots(); ++s) {
        const long d = slot_dim(s);
        if (idx[s] < 0 || idx[s] >= d) throw config_error("CompositeBasis::flatten: index out of range");
        flat = flat * d + idx[s];
    }
    return flat;
}

std::vector<long> CompositeBasis::unflatten(long index) const {
    if (index < 0 || index >= dim()) throw config_error("CompositeBasis::unflatten: index out of range");
    std::vector<long> idx(n_slots());
    for (int s = n_slots() - 1; s >= 0; --s) {
        const long d = slot_dim(s);
        idx[s] = index % d;
        index /= d;
    }
    return idx;
}

}  // namespace cqed
