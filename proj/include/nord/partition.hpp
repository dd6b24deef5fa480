#pragma once

#include <compare>
#include <string>
#include <vector>

namespace nord {

// Integer partition: weakly decreasing sequence of positive parts.
// The empty partition is valid and compares least.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const;                    // sum of parts
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    unsigned multiplicity(unsigned j) const;  // number of parts equal to j
    bool empty() const { return parts_.empty(); }

    // Partition with every part multiplied by d (d >= 1).
    Partition scaled(unsigned d) const;
    // Partition with every part divided by d; requires d | part for all parts.
    Partition unscaled(unsigned d) const;
    bool all_parts_divisible_by(unsigned d) const;

    // One part of size i replaced by i-1 (dropped when i = 1).
    // Requires multiplicity(i) > 0.
    Partition with_part_decremented(unsigned i) const;

    // Distinct part sizes, descending.
    std::vector<unsigned> distinct_parts() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string to_string() const;  // "(2,1)"; "()" when empty

private:
    std::vector<unsigned> parts_;
};

// Display/serialization order: lexicographically larger partitions first.
bool partition_display_less(const Partition& a, const Partition& b);

// All partitions of m, optionally with at most max_len parts.
std::vector<Partition> partitions_of(unsigned m);
std::vector<Partition> partitions_of(unsigned m, unsigned max_len);

// Number of partitions of m.
unsigned long long partition_count(unsigned m);

Partition parse_partition(const std::string& text);  // "2,1" or "" for empty

}  // namespace nord
