#include "hurwitz/table.hpp"

#include <fstream>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {
constexpr const char* kMagic = "hurwitz-table";
constexpr int kVersion = 1;
}  // namespace

HurwitzTable::HurwitzTable() {
    entries_.emplace(Key{0, ones_partition(1)}, Rational(1));
    entries_.emplace(Key{1, ones_partition(1)}, Rational(0));
}

std::optional<Rational> HurwitzTable::lookup(int genus, const Partition& alpha) {
    auto it = entries_.find(Key{genus, alpha});
    if (it == entries_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void HurwitzTable::insert(int genus, const Partition& alpha, const Rational& value) {
    auto [it, inserted] = entries_.emplace(Key{genus, alpha}, value);
    if (!inserted && it->second != value) {
        throw InternalConsistencyError("HurwitzTable: conflicting value for g=" +
                                       std::to_string(genus) + " alpha=" + alpha.to_string());
    }
}

bool HurwitzTable::contains(int genus, const Partition& alpha) const {
    return entries_.count(Key{genus, alpha}) > 0;
}

void save_table(const HurwitzTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_table: cannot open " + path.string());
    out << kMagic << ' ' << kVersion << '\n';
    for (const auto& [key, value] : table.entries()) {
        out << key.first << ' ' << key.second.to_string() << ' ' << to_string(value) << '\n';
    }
    if (!out) throw std::runtime_error("save_table: write failed for " + path.string());
}

HurwitzTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_table: cannot open " + path.string());

    std::string header;
    if (!std::getline(in, header)) throw TableFormatError("load_table: empty file");
    std::istringstream head(header);
    std::string magic;
    int version = -1;
    head >> magic >> version;
    if (magic != kMagic) throw TableFormatError("load_table: bad magic header '" + magic + "'");
    if (version != kVersion) {
        throw TableFormatError("load_table: unsupported version " + std::to_string(version) +
                               " (expected " + std::to_string(kVersion) + ")");
    }

    HurwitzTable table;
    std::string line;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        int genus = -1;
        std::string partition_text, value_text;
        if (!(fields >> genus >> partition_text >> value_text) || genus < 0) {
            throw TableFormatError("load_table: malformed entry at line " + std::to_string(line_no));
        }
        std::string extra;
        if (fields >> extra) {
            throw TableFormatError("load_table: trailing junk at line " + std::to_string(line_no));
        }
        try {
            table.insert(genus, Partition::from_string(partition_text), parse_rational(value_text));
        } catch (const std::invalid_argument& e) {
            throw TableFormatError("load_table: line " + std::to_string(line_no) + ": " + e.what());
        } catch (const InternalConsistencyError& e) {
            throw TableFormatError("load_table: line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return table;
}

}  // namespace hurwitz
