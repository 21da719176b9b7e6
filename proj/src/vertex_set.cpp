#include "domlab/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace domlab {

namespace {

constexpr int kWordBits = 64;

std::size_t word_count(int n) { return static_cast<std::size_t>((n + kWordBits - 1) / kWordBits); }

}  // namespace

VertexSet::VertexSet(int host_size) : n_(host_size) {
    if (host_size < 0) {
        throw std::invalid_argument("VertexSet: negative host size");
    }
    words_.assign(word_count(host_size), 0);
}

VertexSet::VertexSet(int host_size, std::initializer_list<Vertex> members) : VertexSet(host_size) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int host_size, const std::vector<Vertex>& members) : VertexSet(host_size) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::all(int host_size) {
    VertexSet s(host_size);
    for (Vertex v = 0; v < host_size; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(int host_size, std::uint64_t mask) {
    if (host_size > kWordBits) {
        throw std::invalid_argument("VertexSet::from_mask: host size exceeds 64");
    }
    VertexSet s(host_size);
    if (host_size < kWordBits) mask &= (std::uint64_t{1} << host_size) - 1;
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

int VertexSet::size() const noexcept {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

void VertexSet::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside 0.." +
                                std::to_string(n_ - 1));
    }
}

void VertexSet::check_same_host(const VertexSet& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("VertexSet: host sizes differ");
    }
}

bool VertexSet::contains(Vertex v) const {
    check_vertex(v);
    return (words_[static_cast<std::size_t>(v / kWordBits)] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
    check_vertex(v);
    words_[static_cast<std::size_t>(v / kWordBits)] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
    check_vertex(v);
    words_[static_cast<std::size_t>(v / kWordBits)] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            int b = std::countr_zero(bits);
            out.push_back(static_cast<Vertex>(w) * kWordBits + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::uint64_t VertexSet::mask() const {
    if (n_ > kWordBits) {
        throw std::invalid_argument("VertexSet::mask: host size exceeds 64");
    }
    return words_.empty() ? 0 : words_[0];
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_host(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const { return intersection_size(other) > 0; }

int VertexSet::intersection_size(const VertexSet& other) const {
    check_same_host(other);
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) total += std::popcount(words_[i] & other.words_[i]);
    return total;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_host(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_host(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_host(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const { return all(n_) - *this; }

bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string VertexSet::to_string_one_based() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : members()) {
        if (!first) out += ",";
        out += std::to_string(v + 1);
        first = false;
    }
    return out + "}";
}

}  // namespace domlab
