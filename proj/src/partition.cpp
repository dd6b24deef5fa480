#include "nord/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nord {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_)
        if (p == 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

unsigned Partition::multiplicity(unsigned j) const {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), j));
}

Partition Partition::scaled(unsigned d) const {
    std::vector<unsigned> p = parts_;
    for (unsigned& x : p) x *= d;
    Partition r;
    r.parts_ = std::move(p);  // scaling preserves the descending order
    return r;
}

bool Partition::all_parts_divisible_by(unsigned d) const {
    return std::all_of(parts_.begin(), parts_.end(), [d](unsigned p) { return p % d == 0; });
}

Partition Partition::unscaled(unsigned d) const {
    if (!all_parts_divisible_by(d))
        throw std::invalid_argument("partition part not divisible by " + std::to_string(d));
    std::vector<unsigned> p = parts_;
    for (unsigned& x : p) x /= d;
    Partition r;
    r.parts_ = std::move(p);
    return r;
}

Partition Partition::with_part_decremented(unsigned i) const {
    auto it = std::find(parts_.begin(), parts_.end(), i);
    if (it == parts_.end())
        throw std::invalid_argument("no part of size " + std::to_string(i));
    std::vector<unsigned> p = parts_;
    p.erase(p.begin() + (it - parts_.begin()));
    if (i > 1) p.push_back(i - 1);
    return Partition(std::move(p));
}

std::vector<unsigned> Partition::distinct_parts() const {
    std::vector<unsigned> out;
    for (unsigned p : parts_)
        if (out.empty() || out.back() != p) out.push_back(p);
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool partition_display_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

static void gen_partitions(unsigned m, unsigned max_part, unsigned max_len,
                           std::vector<unsigned>& cur, std::vector<Partition>& out) {
    if (m == 0) {
        Partition p;
        p = Partition(cur);
        out.push_back(std::move(p));
        return;
    }
    if (cur.size() >= max_len) return;
    for (unsigned p = std::min(m, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(m - p, p, max_len, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(unsigned m, unsigned max_len) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    gen_partitions(m, m, max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_of(unsigned m) { return partitions_of(m, m); }

unsigned long long partition_count(unsigned m) {
    // p(m) via the parts-up-to-i table
    std::vector<unsigned long long> p(m + 1, 0);
    p[0] = 1;
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = i; j <= m; ++j) p[j] += p[j - i];
    return p[m];
}

Partition parse_partition(const std::string& text) {
    std::vector<unsigned> parts;
    std::string t = text;
    if (t.empty() || t == "()" || t == "0") return Partition{};
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        long v = std::stol(tok);
        if (v <= 0) throw std::invalid_argument("partition parts must be positive: " + text);
        parts.push_back(static_cast<unsigned>(v));
    }
    return Partition(std::move(parts));
}

}  // namespace nord
