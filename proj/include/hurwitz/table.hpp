#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <utility>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Memo store mapping (genus, canonical partition) -> G^g_alpha. A fresh table
// holds exactly the two degree-1 seeds G^0_[1] = 1 and G^1_[1] = 0; every
// other entry is inserted once its value is final.
class HurwitzTable {
public:
    using Key = std::pair<int, Partition>;

    HurwitzTable();

    std::optional<Rational> lookup(int genus, const Partition& alpha);
    void insert(int genus, const Partition& alpha, const Rational& value);
    bool contains(int genus, const Partition& alpha) const;

    const std::map<Key, Rational>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }

private:
    std::map<Key, Rational> entries_;
    std::uint64_t hits_ = 0;
    std::uint64_t misses_ = 0;
};

// Versioned text format, one "<genus> <partition> <num>/<den>" line per entry
// after a "hurwitz-table <version>" header. Round-trips exactly.
void save_table(const HurwitzTable& table, const std::filesystem::path& path);
HurwitzTable load_table(const std::filesystem::path& path);

}  // namespace hurwitz
