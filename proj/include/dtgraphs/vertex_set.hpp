#pragma once

#include <boost/dynamic_bitset.hpp>

#include <initializer_list>
#include <vector>

#include "dtgraphs/errors.hpp"

namespace dtg {

/// Dense set of vertex indices over a fixed universe [0, n). Thin value-type
/// wrapper around a bitset; set algebra is the workhorse of the vicinal
/// preorder and clique checks.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(static_cast<size_t>(universe)) {}
    VertexSet(int universe, std::initializer_list<int> members) : bits_(static_cast<size_t>(universe)) {
        for (int v : members) insert(v);
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        s.bits_.set();
        return s;
    }

    int universe() const { return static_cast<int>(bits_.size()); }
    int size() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }

    bool contains(int v) const {
        check(v);
        return bits_.test(static_cast<size_t>(v));
    }
    void insert(int v) {
        check(v);
        bits_.set(static_cast<size_t>(v));
    }
    void erase(int v) {
        check(v);
        bits_.reset(static_cast<size_t>(v));
    }

    bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }

    VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s = *this;
        s.bits_.flip();
        return s;
    }

    bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return bits_ != o.bits_; }

    int first() const {
        auto p = bits_.find_first();
        return p == boost::dynamic_bitset<>::npos ? -1 : static_cast<int>(p);
    }
    int next(int v) const {
        auto p = bits_.find_next(static_cast<size_t>(v));
        return p == boost::dynamic_bitset<>::npos ? -1 : static_cast<int>(p);
    }

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(size()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= universe())
            throw IndexOutOfRange("vertex " + std::to_string(v) + " outside [0, " + std::to_string(universe()) + ")");
    }
    boost::dynamic_bitset<> bits_;
};

}  // namespace dtg
