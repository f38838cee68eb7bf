#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace locdom {

// Set of vertices over a fixed universe {0, ..., n-1}, stored as a bitset.
// Ordering compares the sorted element sequences lexicographically.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);
    static VertexSet from_vector(int universe, const std::vector<int>& members);
    static VertexSet full(int universe);

    int universe() const noexcept { return universe_; }
    int size() const noexcept;
    bool empty() const noexcept;

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    void clear() noexcept;

    // Smallest member >= from, or -1.
    int next(int from) const noexcept;
    int first() const noexcept { return next(0); }

    std::vector<int> to_vector() const;
    std::string to_string() const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    friend bool operator==(const VertexSet& a, const VertexSet& b);
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
    friend bool operator<(const VertexSet& a, const VertexSet& b);

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = s_->next(v_ + 1);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
        bool operator==(const iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* s_;
        int v_;
    };
    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

private:
    void check(int v) const;
    void check_same_universe(const VertexSet& o) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace locdom
