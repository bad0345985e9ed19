#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace pdw::detail {

/// Low-point bookkeeping shared by the run engine, the segment tracer and
/// the game solver.
///
/// A time is a low point of the explored prefix when its stack height is
/// less than or equal to the height at every later explored time. Low
/// points form a stack of candidates with non-decreasing heights; a new
/// arrival first evicts every candidate strictly taller than itself.
/// Between a surviving candidate t1 and the current time the run never
/// dipped below height(t1), so the stack below that height is frozen and
/// the deterministic future depends only on the candidate key (state, top
/// symbol, and where applicable the position in the input cycle). A key
/// repeat therefore certifies that the stretch between the two times
/// replays forever, shifted upward by the net stack gain.
struct LowPointStore {
    struct Entry {
        uint64_t time;
        uint64_t key;
        size_t height;
        uint64_t consumed;
    };

    std::vector<Entry> entries;
    std::unordered_map<uint64_t, size_t> by_key;

    void clear() {
        entries.clear();
        by_key.clear();
    }

    void evict_taller(size_t height) {
        while (!entries.empty() && entries.back().height > height) {
            by_key.erase(entries.back().key);
            entries.pop_back();
        }
    }

    /// Returns the surviving entry with the same key, if any; otherwise
    /// records the arrival. Surviving keys are distinct, because a
    /// duplicate would have produced a certificate when it arrived.
    const Entry* match_or_insert(uint64_t time, uint64_t key, size_t height, uint64_t consumed) {
        evict_taller(height);
        auto it = by_key.find(key);
        if (it != by_key.end()) return &entries[it->second];
        by_key.emplace(key, entries.size());
        entries.push_back(Entry{time, key, height, consumed});
        return nullptr;
    }
};

/// Packs (state, phase, symbol id) into one word. Fields stay disjoint for
/// the sizes this workbench handles.
inline uint64_t pack_key(uint32_t state, uint64_t phase, uint32_t symbol_id) {
    return (static_cast<uint64_t>(state) << 40) ^ (phase << 20) ^ symbol_id;
}

} // namespace pdw::detail
