#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schurlab {

// Integer partition stored in normal form: parts weakly decreasing, all >= 1,
// never any trailing zeros. The empty partition is the default value.
class partition {
public:
    partition() = default;

    partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

    explicit partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 0)
                throw std::invalid_argument("partition: negative part");
        parts_.erase(std::remove(parts_.begin(), parts_.end(), 0), parts_.end());
        std::sort(parts_.rbegin(), parts_.rend());
        for (int p : parts_)
            weight_ += p;
    }

    const std::vector<int>& parts() const { return parts_; }
    long weight() const { return weight_; }
    long rows() const { return static_cast<long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(long i) const { return i >= 0 && i < rows() ? parts_[i] : 0; }

    friend bool operator==(const partition& a, const partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const partition& a, const partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
    long weight_ = 0;
};

// Canonical total order: weight ascending, then reverse-lexicographic on part
// sequences (lexicographically larger sequence first). All iteration and
// serialization in the library follows this order.
inline int canonical_compare(const partition& a, const partition& b)
{
    if (a.weight() != b.weight())
        return a.weight() < b.weight() ? -1 : 1;
    const auto& x = a.parts();
    const auto& y = b.parts();
    const std::size_t m = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < m; ++i)
        if (x[i] != y[i])
            return x[i] > y[i] ? -1 : 1;
    if (x.size() != y.size())
        return x.size() < y.size() ? -1 : 1;
    return 0;
}

struct canonical_less {
    bool operator()(const partition& a, const partition& b) const
    {
        return canonical_compare(a, b) < 0;
    }
};

inline partition conjugate(const partition& lam)
{
    std::vector<int> out;
    const long n = lam.rows() ? lam.parts()[0] : 0;
    for (long col = 1; col <= n; ++col) {
        int count = 0;
        for (int p : lam.parts())
            if (p >= col)
                ++count;
        out.push_back(count);
    }
    return partition(std::move(out));
}

// Multiset union of parts.
inline partition union_parts(const partition& a, const partition& b)
{
    std::vector<int> out(a.parts());
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    return partition(std::move(out));
}

// Young-diagram containment: inner_i <= outer_i for all rows.
inline bool contains(const partition& outer, const partition& inner)
{
    if (inner.rows() > outer.rows())
        return false;
    for (long i = 0; i < inner.rows(); ++i)
        if (inner.parts()[i] > outer.parts()[i])
            return false;
    return true;
}

// lam/mu is a vertical strip: contained and at most one square added per row.
inline bool is_vertical_strip(const partition& lam, const partition& mu)
{
    if (!contains(lam, mu))
        return false;
    for (long i = 0; i < lam.rows(); ++i)
        if (lam.parts()[i] - mu.part(i) > 1)
            return false;
    return true;
}

namespace detail {
inline void partitions_of_rec(long n, long maxpart, std::vector<int>& cur,
                              std::vector<partition>& out)
{
    if (n == 0) {
        out.push_back(partition(cur));
        return;
    }
    for (long p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(static_cast<int>(p));
        partitions_of_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

// All partitions of n in canonical order.
inline std::vector<partition> partitions_of(long n)
{
    if (n < 0)
        return {};
    std::vector<partition> out;
    std::vector<int> cur;
    detail::partitions_of_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

// All partitions of n with every part in {3,4}, canonical order.
inline std::vector<partition> partitions_34(long n)
{
    std::vector<partition> out;
    if (n < 0)
        return out;
    for (long c4 = n / 4; c4 >= 0; --c4) {
        const long rem = n - 4 * c4;
        if (rem % 3 != 0)
            continue;
        const long c3 = rem / 3;
        std::vector<int> parts(static_cast<std::size_t>(c4), 4);
        parts.insert(parts.end(), static_cast<std::size_t>(c3), 3);
        out.push_back(partition(std::move(parts)));
    }
    return out;
}

// Partitions of 2r-2 of the form (4^{i4}, 3^{2 i3}, 2^{2 i2}, 1^{2 i1}):
// even multiplicity of 3, 2 and 1, any multiplicity of 4. Canonical order.
inline std::vector<partition> r_shapes(long r)
{
    std::set<partition, canonical_less> out;
    const long n = 2 * r - 2;
    if (n < 0)
        return {};
    for (long i4 = 0; 4 * i4 <= n; ++i4)
        for (long i3 = 0; 4 * i4 + 6 * i3 <= n; ++i3)
            for (long i2 = 0; 4 * i4 + 6 * i3 + 4 * i2 <= n; ++i2) {
                const long rem = n - 4 * i4 - 6 * i3 - 4 * i2;
                if (rem % 2 != 0)
                    continue;
                const long i1 = rem / 2;
                std::vector<int> parts;
                parts.insert(parts.end(), static_cast<std::size_t>(i4), 4);
                parts.insert(parts.end(), static_cast<std::size_t>(2 * i3), 3);
                parts.insert(parts.end(), static_cast<std::size_t>(2 * i2), 2);
                parts.insert(parts.end(), static_cast<std::size_t>(2 * i1), 1);
                out.insert(partition(std::move(parts)));
            }
    return std::vector<partition>(out.begin(), out.end());
}

// Multiplicities of the parts 4,3,2,1 before validity filtering. Any negative
// value marks the zero Schur term (sums over family shapes rely on this).
struct shape_multiplicities {
    long m4 = 0;
    long m3 = 0;
    long m2 = 0;
    long m1 = 0;
    bool valid() const { return m4 >= 0 && m3 >= 0 && m2 >= 0 && m1 >= 0; }
};

inline std::optional<partition> shape_from_multiplicities(const shape_multiplicities& s)
{
    if (!s.valid())
        return std::nullopt;
    std::vector<int> parts;
    parts.insert(parts.end(), static_cast<std::size_t>(s.m4), 4);
    parts.insert(parts.end(), static_cast<std::size_t>(s.m3), 3);
    parts.insert(parts.end(), static_cast<std::size_t>(s.m2), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(s.m1), 1);
    return partition(std::move(parts));
}

inline std::string to_string(const partition& p)
{
    std::string out = "[";
    for (long i = 0; i < p.rows(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    out += ']';
    return out;
}

inline partition parse_partition(std::string_view s)
{
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    skip_ws();
    if (i >= s.size() || s[i] != '[')
        throw std::invalid_argument("partition: expected '['");
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < s.size() && s[i] == ']') {
        ++i;
    } else {
        for (;;) {
            skip_ws();
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (i == start)
                throw std::invalid_argument("partition: expected digit");
            parts.push_back(std::stoi(std::string(s.substr(start, i - start))));
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ']') {
                ++i;
                break;
            }
            throw std::invalid_argument("partition: expected ',' or ']'");
        }
    }
    skip_ws();
    if (i != s.size())
        throw std::invalid_argument("partition: trailing input");
    for (std::size_t j = 0; j + 1 < parts.size(); ++j)
        if (parts[j] < parts[j + 1])
            throw std::invalid_argument("partition: parts not weakly decreasing");
    for (int p : parts)
        if (p <= 0)
            throw std::invalid_argument("partition: parts must be positive");
    return partition(std::move(parts));
}

} // namespace schurlab
