#include "locdom/vertex_set.hpp"

#include <bit>
#include <ostream>

#include "locdom/errors.hpp"

namespace locdom {

namespace {
int word_count(int universe) { return (universe + 63) / 64; }
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
    if (universe < 0) throw Error(ErrorCode::IndexOutOfRange, "negative universe");
    words_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
}

VertexSet VertexSet::from_vector(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
}

void VertexSet::check(int v) const {
    if (v < 0 || v >= universe_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " outside universe of size " +
                        std::to_string(universe_));
}

void VertexSet::check_same_universe(const VertexSet& o) const {
    if (universe_ != o.universe_)
        throw Error(ErrorCode::IndexOutOfRange, "vertex sets over different universes");
}

int VertexSet::size() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool VertexSet::contains(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1U;
}

void VertexSet::insert(int v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() noexcept {
    for (auto& w : words_) w = 0;
}

int VertexSet::next(int from) const noexcept {
    if (from < 0) from = 0;
    if (from >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
        if (++wi >= words_.size()) return -1;
        w = words_[wi];
    }
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v : *this) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
    int x = a.first();
    int y = b.first();
    while (x >= 0 && y >= 0) {
        if (x != y) return x < y;
        x = a.next(x + 1);
        y = b.next(y + 1);
    }
    return x < 0 && y >= 0;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << s.to_string(); }

}  // namespace locdom
