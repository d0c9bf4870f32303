#pragma once

#include "q6/core.hpp"
#include "q6/numbers.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace q6 {

// A partition: positive parts kept in nonincreasing order, multiset
// semantics.  The empty partition has weight 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p <= 0) throw Error("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }

    long long weight() const
    {
        long long w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    int multiplicity(int v) const
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
    }

    bool contains(int v) const
    {
        return std::find(parts_.begin(), parts_.end(), v) != parts_.end();
    }

    bool operator==(const Partition&) const = default;

    // lexicographic order on the part sequences
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

enum class Parity { even, odd };

struct ResidueClass {
    int residue;
    int modulus;
};

// Declarative part-level and shape-level predicate.  forbidden and allowed
// are mutually exclusive encodings of the same residue filter.
struct PartitionConstraint {
    std::vector<ResidueClass> forbidden;
    std::vector<ResidueClass> allowed;
    bool distinct = false;
    std::optional<int> max_multiplicity;
    std::vector<ResidueClass> repeatable; // residue classes exempt from distinctness
    std::optional<Parity> length_parity;
    std::optional<Parity> even_part_count_parity;

    void validate() const
    {
        if (!forbidden.empty() && !allowed.empty())
            throw Error("PartitionConstraint: forbidden and allowed residue forms are "
                        "mutually exclusive");
        for (const auto& r : forbidden)
            if (r.modulus < 1) throw Error("PartitionConstraint: modulus must be >= 1");
        for (const auto& r : allowed)
            if (r.modulus < 1) throw Error("PartitionConstraint: modulus must be >= 1");
        if (max_multiplicity && *max_multiplicity < 1)
            throw Error("PartitionConstraint: max_multiplicity must be >= 1");
    }

    bool part_ok(int v) const
    {
        if (!allowed.empty()) {
            for (const auto& r : allowed)
                if (imod(v, r.modulus) == imod(r.residue, r.modulus)) return true;
            return false;
        }
        for (const auto& r : forbidden)
            if (imod(v, r.modulus) == imod(r.residue, r.modulus)) return false;
        return true;
    }

    bool is_repeatable(int v) const
    {
        for (const auto& r : repeatable)
            if (imod(v, r.modulus) == imod(r.residue, r.modulus)) return true;
        return false;
    }

    // multiplicity cap for part v given a weight budget
    int multiplicity_cap(int v, int budget) const
    {
        int cap = budget / v;
        if (distinct && !is_repeatable(v)) cap = std::min(cap, 1);
        if (max_multiplicity) cap = std::min(cap, *max_multiplicity);
        return cap;
    }

    bool shape_ok(int length, int even_parts) const
    {
        if (length_parity && (length % 2 == 0) != (*length_parity == Parity::even))
            return false;
        if (even_part_count_parity &&
            (even_parts % 2 == 0) != (*even_part_count_parity == Parity::even))
            return false;
        return true;
    }

    bool satisfied_by(const Partition& p) const
    {
        int evens = 0;
        const auto& parts = p.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            int v = parts[i];
            if (!part_ok(v)) return false;
            if (v % 2 == 0) ++evens;
            int run = 1;
            while (i + 1 < parts.size() && parts[i + 1] == v) { ++run; ++i; }
            if (run > multiplicity_cap(v, static_cast<int>(p.weight()))) return false;
        }
        return shape_ok(p.length(), evens);
    }
};

// All partitions of n satisfying c, emitted in lexicographically decreasing
// order of their part sequences.
inline std::vector<Partition> enumerate(int n, const PartitionConstraint& c = {})
{
    if (n < 0) throw Error("enumerate: n must be nonnegative");
    c.validate();
    std::vector<Partition> out;
    std::vector<int> cur;
    int evens = 0;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            if (c.shape_ok(static_cast<int>(cur.size()), evens))
                out.push_back(Partition(cur));
            return;
        }
        for (int v = std::min(remaining, maxpart); v >= 1; --v) {
            if (!c.part_ok(v)) continue;
            int run = 0;
            for (auto it = cur.rbegin(); it != cur.rend() && *it == v; ++it) ++run;
            if (run + 1 > c.multiplicity_cap(v, remaining + run * v)) continue;
            cur.push_back(v);
            if (v % 2 == 0) ++evens;
            rec(remaining - v, v);
            if (v % 2 == 0) --evens;
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Cardinality of enumerate(n, c) by memoized counting on
// (max part, remaining weight, required suffix parities).
inline Int count(int n, const PartitionConstraint& c = {})
{
    if (n < 0) throw Error("count: n must be nonnegative");
    c.validate();
    std::unordered_map<uint64_t, Int> memo;
    // parity codes: 0 even needed, 1 odd needed, 2 unconstrained
    std::function<Int(int, int, int, int)> f = [&](int v, int rem, int lp, int ep) -> Int {
        if (rem == 0) return ((lp == 2 || lp == 0) && (ep == 2 || ep == 0)) ? 1 : 0;
        if (v <= 0) return 0;
        if (v > rem) v = rem;
        uint64_t key = ((static_cast<uint64_t>(rem) << 24) | (static_cast<uint64_t>(v) << 4) |
                        static_cast<uint64_t>(lp << 2) | static_cast<uint64_t>(ep));
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int total = 0;
        int cap = c.part_ok(v) ? c.multiplicity_cap(v, rem) : 0;
        for (int m = 0; m <= cap; ++m) {
            int nlp = (lp == 2) ? 2 : (lp ^ (m & 1));
            int nep = (ep == 2 || v % 2 == 1) ? ep : (ep ^ (m & 1));
            total += f(v - 1, rem - m * v, nlp, nep);
        }
        memo.emplace(key, total);
        return total;
    };
    int lp = c.length_parity ? (*c.length_parity == Parity::odd ? 1 : 0) : 2;
    int ep = c.even_part_count_parity ? (*c.even_part_count_parity == Parity::odd ? 1 : 0) : 2;
    return f(n, n, lp, ep);
}

// Named constraint presets for the partition families in play.
inline PartitionConstraint preset_constraint(std::string_view name)
{
    PartitionConstraint c;
    if (name == "p" || name == "all") return c;
    if (name == "b6") {
        c.forbidden = {{0, 6}};
        return c;
    }
    if (name == "b6e" || name == "b6o") {
        c.forbidden = {{0, 6}};
        c.length_parity = (name == "b6e") ? Parity::even : Parity::odd;
        return c;
    }
    if (name == "b6ee" || name == "b6eo") {
        c.forbidden = {{0, 6}};
        c.even_part_count_parity = (name == "b6ee") ? Parity::even : Parity::odd;
        return c;
    }
    if (name == "q2") {
        c.distinct = true;
        c.forbidden = {{2, 6}, {-2, 6}};
        return c;
    }
    if (name == "q2prime") {
        // odd parts; only parts = 3 (mod 6) may repeat
        c.allowed = {{1, 2}};
        c.distinct = true;
        c.repeatable = {{3, 6}};
        return c;
    }
    if (name == "c") {
        c.forbidden = {{0, 48}, {2, 48}, {-2, 48}, {20, 48}, {-20, 48}, {22, 48}, {-22, 48}, {24, 48}};
        return c;
    }
    if (name == "d") {
        c.forbidden = {{0, 48}, {4, 48}, {-4, 48}, {10, 48}, {-10, 48}, {14, 48}, {-14, 48}, {24, 48}};
        return c;
    }
    if (name == "q61") {
        c.distinct = true;
        c.allowed = {{1, 6}, {-1, 6}};
        return c;
    }
    if (name == "div6") {
        c.allowed = {{0, 6}};
        return c;
    }
    if (name == "distinct") {
        c.distinct = true;
        return c;
    }
    if (name == "odd") {
        c.allowed = {{1, 2}};
        return c;
    }
    throw Error("preset_constraint: unknown constraint '" + std::string(name) + "'");
}

// Direct-definition predicate for M_k: k is the least positive integer that
// is not a part, and parts > k outnumber parts < k (with multiplicity).
inline bool mk_member(const Partition& p, int k)
{
    for (int i = 1; i < k; ++i)
        if (!p.contains(i)) return false;
    if (p.contains(k)) return false;
    int above = 0, below = 0;
    for (int v : p.parts()) {
        if (v > k) ++above;
        if (v < k) ++below;
    }
    return above > below;
}

// Direct-definition predicate for P~_k: every part <= k appears, some part
// exceeds k, and the least part > k appears at least k+1 times.
inline bool pk_member(const Partition& p, int k)
{
    for (int i = 1; i <= k; ++i)
        if (!p.contains(i)) return false;
    int least_above = 0;
    for (int v : p.parts())
        if (v > k && (least_above == 0 || v < least_above)) least_above = v;
    if (least_above == 0) return false;
    return p.multiplicity(least_above) >= k + 1;
}

inline std::vector<Partition> enumerate_mk(int k, int n)
{
    if (k < 1) throw Error("enumerate_mk: k must be positive");
    std::vector<Partition> out;
    for (const Partition& p : enumerate(n))
        if (mk_member(p, k)) out.push_back(p);
    return out;
}

inline std::vector<Partition> enumerate_pk(int k, int n)
{
    if (k < 1) throw Error("enumerate_pk: k must be positive");
    std::vector<Partition> out;
    for (const Partition& p : enumerate(n))
        if (pk_member(p, k)) out.push_back(p);
    return out;
}

inline Int count_mk(int k, int n) { return Int(enumerate_mk(k, n).size()); }
inline Int count_pk(int k, int n) { return Int(enumerate_pk(k, n).size()); }

// |Q_{6,1}(n)|: distinct parts = +-1 (mod 6).  |W_{6,1}(n)|: pairs
// (mu, k(3k-2)) with mu a partition into parts divisible by 6, k in Z, and
// |mu| + k(3k-2) = n.  Both counted directly.
inline std::pair<Int, Int> cardinality_q61_w61(int n)
{
    if (n < 0) throw Error("cardinality_q61_w61: n must be nonnegative");
    Int q_side = count(n, preset_constraint("q61"));
    Int w_side = 0;
    PartitionConstraint div6 = preset_constraint("div6");
    for (long long k = 0;; k = (k > 0 ? -k : -k + 1)) {
        long long o = k * (3 * k - 2);
        if (o > n) {
            if (k < 0) break; // both arms exhausted
            continue;
        }
        w_side += count(static_cast<int>(n - o), div6);
    }
    return {q_side, w_side};
}

} // namespace q6
