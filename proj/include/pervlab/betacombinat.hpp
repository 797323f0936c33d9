/*
   Copyright 2026 the pervlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PERVLAB_BETACOMBINAT_HPP
#define PERVLAB_BETACOMBINAT_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pervlab {

// ===========================================================================
// Partitions
// ===========================================================================

/// Weakly decreasing list of positive integers.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::domain_error("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::domain_error("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<long long>& parts() const { return parts_; }
    size_t length() const { return parts_.size(); }
    long long part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    long long size() const {
        long long n = 0;
        for (long long p : parts_) n += p;
        return n;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    /// "[3,1,1]"; the empty partition prints as "[]".
    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

    static Partition parse(const std::string& s) {
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
            throw std::invalid_argument("Partition::parse: expected [..], got '" + s + "'");
        std::vector<long long> parts;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (!tok.empty()) parts.push_back(std::stoll(tok));
        }
        return Partition(std::move(parts));
    }

    /// All partitions of n, in a fixed (lexicographic, largest part first) order.
    static std::vector<Partition> all_of(long long n) {
        std::vector<Partition> out;
        std::vector<long long> cur;
        enumerate(n, n, cur, out);
        return out;
    }

   private:
    static void enumerate(long long n, long long maxpart, std::vector<long long>& cur, std::vector<Partition>& out) {
        if (n == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (long long p = std::min(n, maxpart); p >= 1; --p) {
            cur.push_back(p);
            enumerate(n - p, p, cur, out);
            cur.pop_back();
        }
    }

    std::vector<long long> parts_;
};

// ===========================================================================
// Beta-sets
// ===========================================================================

/// Finite set of distinct non-negative integers, stored descending. Two
/// beta-sets are equivalent when one arises from the other by the shift
/// X -> {0} u {x+1 : x in X}; rank is a class invariant.
class BetaSet {
   public:
    BetaSet() = default;
    explicit BetaSet(std::vector<long long> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end(), std::greater<>());
        for (size_t i = 0; i < elems_.size(); ++i) {
            if (elems_[i] < 0) throw std::domain_error("BetaSet: elements must be non-negative");
            if (i > 0 && elems_[i] == elems_[i - 1]) throw std::domain_error("BetaSet: elements must be distinct");
        }
    }

    const std::vector<long long>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }
    bool contains(long long x) const { return std::binary_search(elems_.rbegin(), elems_.rend(), x); }

    long long rank() const {
        long long s = static_cast<long long>(elems_.size());
        long long sum = 0;
        for (long long x : elems_) sum += x;
        return sum - s * (s - 1) / 2;
    }

    /// First-column hook lengths x_i = lambda_i + s - i for a padded partition.
    static BetaSet from_partition(const Partition& p, size_t s) {
        if (s < p.length()) throw std::domain_error("BetaSet::from_partition: requested size smaller than number of parts");
        std::vector<long long> v;
        v.reserve(s);
        for (size_t i = 0; i < s; ++i) v.push_back(p.part(i) + static_cast<long long>(s - i) - 1);
        return BetaSet(std::move(v));
    }

    /// Inverse of from_partition; independent of the representative.
    Partition to_partition() const {
        std::vector<long long> parts;
        long long s = static_cast<long long>(elems_.size());
        for (size_t i = 0; i < elems_.size(); ++i) {
            long long p = elems_[i] - (s - 1 - static_cast<long long>(i));
            if (p > 0) parts.push_back(p);
        }
        return Partition(std::move(parts));
    }

    /// One forward shift (k times): X -> {0} u {x+k}.
    BetaSet shifted(long long k) const {
        std::vector<long long> v;
        v.reserve(elems_.size() + static_cast<size_t>(k));
        for (long long x : elems_) v.push_back(x + k);
        for (long long j = k - 1; j >= 0; --j) v.push_back(j);
        return BetaSet(std::move(v));
    }

    /// The minimal representative, with 0 not an element.
    BetaSet canonical() const {
        std::vector<long long> v = elems_;  // descending, so a zero sits at the back
        while (!v.empty() && v.back() == 0) {
            v.pop_back();
            for (auto& x : v) --x;
        }
        return BetaSet(std::move(v));
    }

    /// Replace x by x+d; requires x present and x+d free.
    BetaSet add_hook(long long x, long long d) const {
        if (!contains(x)) throw std::domain_error("add_hook: " + std::to_string(x) + " not in beta-set");
        if (contains(x + d)) throw std::domain_error("add_hook: target position " + std::to_string(x + d) + " occupied");
        std::vector<long long> v = elems_;
        std::replace(v.begin(), v.end(), x, x + d);
        return BetaSet(std::move(v));
    }

    /// Replace x by x-d; requires x present, x-d >= 0 and free.
    BetaSet remove_hook(long long x, long long d) const {
        if (!contains(x)) throw std::domain_error("remove_hook: " + std::to_string(x) + " not in beta-set");
        if (x - d < 0) throw std::domain_error("remove_hook: target position negative");
        if (contains(x - d)) throw std::domain_error("remove_hook: target position occupied");
        std::vector<long long> v = elems_;
        std::replace(v.begin(), v.end(), x, x - d);
        return BetaSet(std::move(v));
    }

    /// Positions on the d-abacus: element x sits at (runner x mod d, row x div d).
    /// Beads per runner, rows ascending.
    std::vector<std::vector<long long>> runners(long long d) const {
        std::vector<std::vector<long long>> rs(static_cast<size_t>(d));
        for (auto it = elems_.rbegin(); it != elems_.rend(); ++it) rs[static_cast<size_t>(*it % d)].push_back(*it / d);
        return rs;
    }

    /// d-core: every bead moved as far up its runner as possible. Keeps |X|.
    BetaSet core(long long d) const {
        if (d < 1) throw std::domain_error("core: d must be positive");
        auto rs = runners(d);
        std::vector<long long> v;
        v.reserve(elems_.size());
        for (long long r = 0; r < d; ++r)
            for (size_t i = 0; i < rs[static_cast<size_t>(r)].size(); ++i)
                v.push_back(r + d * static_cast<long long>(i));
        return BetaSet(std::move(v));
    }

    bool is_core(long long d) const { return core(d).elements() == elems_; }

    /// Elements x with x+d not in the set (beads free to move one row down);
    /// descending.
    std::vector<long long> hookable_positions(long long d) const {
        std::vector<long long> out;
        for (long long x : elems_)
            if (!contains(x + d)) out.push_back(x);
        return out;
    }

    /// Shifts until every runner of the d-abacus carries a bead, so that a
    /// d-core has exactly d hookable positions.
    BetaSet padded_for_hooks(long long d) const {
        BetaSet b = *this;
        for (int guard = 0; guard < 4 * static_cast<int>(d) + 4; ++guard) {
            auto rs = b.runners(d);
            bool full = true;
            for (auto& r : rs)
                if (r.empty()) full = false;
            if (full) return b;
            b = b.shifted(1);
        }
        throw std::logic_error("padded_for_hooks: failed to normalize");
    }

    friend bool operator==(const BetaSet& a, const BetaSet& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const BetaSet& a, const BetaSet& b) { return !(a == b); }
    friend bool operator<(const BetaSet& a, const BetaSet& b) { return a.elems_ < b.elems_; }

    /// "{5,2,0}"; empty set prints "{}".
    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        for (size_t i = 0; i < elems_.size(); ++i) {
            if (i) os << ',';
            os << elems_[i];
        }
        os << '}';
        return os.str();
    }

    static BetaSet parse(const std::string& s) {
        if (s.size() < 2 || s.front() != '{' || s.back() != '}')
            throw std::invalid_argument("BetaSet::parse: expected {..}, got '" + s + "'");
        std::vector<long long> v;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) v.push_back(std::stoll(tok));
        return BetaSet(std::move(v));
    }

    /// Multi-line abacus picture, for docs and the CLI.
    std::string abacus_picture(long long d) const {
        auto rs = runners(d);
        long long rows = 1;
        for (auto& r : rs)
            for (long long row : r) rows = std::max(rows, row + 1);
        std::ostringstream os;
        for (long long row = 0; row < rows; ++row) {
            for (long long r = 0; r < d; ++r) {
                bool bead = false;
                for (long long b : rs[static_cast<size_t>(r)])
                    if (b == row) bead = true;
                os << (bead ? " o" : " .");
            }
            os << '\n';
        }
        return os.str();
    }

   private:
    std::vector<long long> elems_;  // descending
};

// ===========================================================================
// Symbols
// ===========================================================================

enum class Side { X, Y };

/// Unordered pair of beta-sets. Canonical storage puts the larger row first
/// (ties broken lexicographically), and strips simultaneous zero shifts.
class Symbol {
   public:
    Symbol() = default;
    Symbol(BetaSet x, BetaSet y) : x_(std::move(x)), y_(std::move(y)) { canonicalize(); }

    const BetaSet& X() const { return x_; }
    const BetaSet& Y() const { return y_; }
    const BetaSet& row(Side s) const { return s == Side::X ? x_ : y_; }

    bool degenerate() const { return x_ == y_; }

    long long defect() const {
        return std::llabs(static_cast<long long>(x_.size()) - static_cast<long long>(y_.size()));
    }

    long long rank() const {
        long long total = 0;
        for (long long v : x_.elements()) total += v;
        for (long long v : y_.elements()) total += v;
        long long st = static_cast<long long>(x_.size() + y_.size());
        return total - ((st - 1) * (st - 1)) / 4;
    }

    /// Simultaneous shift of both rows, k times.
    Symbol shifted(long long k) const { return Symbol(x_.shifted(k), y_.shifted(k)); }

    /// d-hook on one row (bead moves down its runner); defect unchanged.
    Symbol add_hook(Side s, long long x, long long d) const {
        return s == Side::X ? Symbol(x_.add_hook(x, d), y_) : Symbol(x_, y_.add_hook(x, d));
    }
    Symbol remove_hook(Side s, long long x, long long d) const {
        return s == Side::X ? Symbol(x_.remove_hook(x, d), y_) : Symbol(x_, y_.remove_hook(x, d));
    }

    /// d-cohook: x + d crosses to the other row. Rank changes by d, the
    /// signed row-size difference by 2.
    Symbol add_cohook(Side s, long long x, long long d) const {
        const BetaSet& from = row(s);
        const BetaSet& to = row(s == Side::X ? Side::Y : Side::X);
        if (!from.contains(x)) throw std::domain_error("add_cohook: " + std::to_string(x) + " not in row");
        if (to.contains(x + d)) throw std::domain_error("add_cohook: target position occupied");
        std::vector<long long> f = from.elements(), t = to.elements();
        f.erase(std::find(f.begin(), f.end(), x));
        t.push_back(x + d);
        return s == Side::X ? Symbol(BetaSet(f), BetaSet(t)) : Symbol(BetaSet(t), BetaSet(f));
    }

    Symbol remove_cohook(Side s, long long x, long long d) const {
        const BetaSet& from = row(s);
        const BetaSet& to = row(s == Side::X ? Side::Y : Side::X);
        if (!from.contains(x)) throw std::domain_error("remove_cohook: " + std::to_string(x) + " not in row");
        if (x - d < 0) throw std::domain_error("remove_cohook: target position negative");
        if (to.contains(x - d)) throw std::domain_error("remove_cohook: target position occupied");
        std::vector<long long> f = from.elements(), t = to.elements();
        f.erase(std::find(f.begin(), f.end(), x));
        t.push_back(x - d);
        return s == Side::X ? Symbol(BetaSet(f), BetaSet(t)) : Symbol(BetaSet(t), BetaSet(f));
    }

    /// d-core: all hooks removed from both rows (row sizes kept).
    Symbol core(long long d) const { return Symbol(x_.core(d), y_.core(d)); }

    bool is_core(long long d) const { return x_.is_core(d) && y_.is_core(d); }

    /// d-cocore: all cohooks removed (fixed point; order-independent).
    Symbol cocore(long long d) const {
        Symbol cur = *this;
        bool moved = true;
        while (moved) {
            moved = false;
            for (Side s : {Side::X, Side::Y}) {
                const BetaSet& from = cur.row(s);
                const BetaSet& other = cur.row(s == Side::X ? Side::Y : Side::X);
                for (long long x : from.elements()) {
                    if (x - d >= 0 && !other.contains(x - d)) {
                        cur = cur.remove_cohook(s, x, d);
                        moved = true;
                        break;
                    }
                }
                if (moved) break;
            }
        }
        return cur;
    }

    bool is_cocore(long long d) const {
        for (Side s : {Side::X, Side::Y}) {
            const BetaSet& from = row(s);
            const BetaSet& other = row(s == Side::X ? Side::Y : Side::X);
            for (long long x : from.elements())
                if (x - d >= 0 && !other.contains(x - d)) return false;
        }
        return true;
    }

    /// Elements of a row whose cohook target is free: {x in row : x+d not in
    /// the other row}; descending.
    std::vector<long long> cohookable_positions(Side s, long long d) const {
        const BetaSet& from = row(s);
        const BetaSet& other = row(s == Side::X ? Side::Y : Side::X);
        std::vector<long long> out;
        for (long long x : from.elements())
            if (!other.contains(x + d)) out.push_back(x);
        return out;
    }

    friend bool operator==(const Symbol& a, const Symbol& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
    friend bool operator<(const Symbol& a, const Symbol& b) {
        if (!(a.x_ == b.x_)) return a.x_ < b.x_;
        return a.y_ < b.y_;
    }

    /// "{{5,2},{3}}"
    std::string to_string() const { return "{" + x_.to_string() + "," + y_.to_string() + "}"; }

    static Symbol parse(const std::string& s) {
        if (s.size() < 6 || s.front() != '{' || s.back() != '}')
            throw std::invalid_argument("Symbol::parse: expected {{..},{..}}");
        std::string body = s.substr(1, s.size() - 2);
        int depth = 0;
        size_t comma = std::string::npos;
        for (size_t i = 0; i < body.size(); ++i) {
            if (body[i] == '{') ++depth;
            if (body[i] == '}') --depth;
            if (body[i] == ',' && depth == 0) {
                comma = i;
                break;
            }
        }
        if (comma == std::string::npos) throw std::invalid_argument("Symbol::parse: missing row separator");
        return Symbol(BetaSet::parse(body.substr(0, comma)), BetaSet::parse(body.substr(comma + 1)));
    }

   private:
    void canonicalize() {
        // strip simultaneous zero shifts
        while (x_.contains(0) && y_.contains(0)) {
            auto strip = [](const BetaSet& b) {
                std::vector<long long> v;
                for (long long e : b.elements())
                    if (e != 0) v.push_back(e - 1);
                return BetaSet(v);
            };
            x_ = strip(x_);
            y_ = strip(y_);
        }
        if (x_.size() < y_.size() || (x_.size() == y_.size() && x_.elements() < y_.elements())) std::swap(x_, y_);
    }

    BetaSet x_, y_;
};

}  // namespace pervlab

#endif
