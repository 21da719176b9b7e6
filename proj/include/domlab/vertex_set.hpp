#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace domlab {

using Vertex = int;

/// A subset of the vertices {0, ..., n-1} of a fixed host graph, stored as a
/// dynamic bitset. All binary operations require both operands to share the
/// same host size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int host_size);
    VertexSet(int host_size, std::initializer_list<Vertex> members);
    VertexSet(int host_size, const std::vector<Vertex>& members);

    /// The full vertex set of a graph with `host_size` vertices.
    static VertexSet all(int host_size);
    /// Builds a set from the low bits of `mask`; requires host_size <= 64.
    static VertexSet from_mask(int host_size, std::uint64_t mask);

    int host_size() const noexcept { return n_; }
    int size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    /// Sorted list of members.
    std::vector<Vertex> members() const;
    /// Low 64 bits of the membership bitset; requires host_size <= 64.
    std::uint64_t mask() const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    int intersection_size(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    /// Complement with respect to the host vertex set.
    VertexSet complement() const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic order on the sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    /// "{1,2,5}" using 1-based vertex numbers.
    std::string to_string_one_based() const;

private:
    void check_vertex(Vertex v) const;
    void check_same_host(const VertexSet& other) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace domlab
