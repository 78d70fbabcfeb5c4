#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mstsf {

class UnionFindError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Disjoint-set forest with union-by-size. Path compression on find() can be
/// switched off so the pure union-by-size height bound can be observed.
class UnionFind {
public:
    using Element = std::uint32_t;

    explicit UnionFind(bool path_compression = true) : compress_(path_compression) {}

    /// Equivalent to make_set(0), ..., make_set(n - 1).
    explicit UnionFind(std::size_t n, bool path_compression = true);

    void make_set(Element i);
    Element find(Element i);
    /// Merges the trees rooted at `a` and `b`. The root of the larger tree survives,
    /// `a` on ties; always use the returned root.
    Element unite(Element a, Element b);
    bool same_set(Element i, Element j) { return find(i) == find(j); }

    bool contains(Element i) const noexcept { return i < parent_.size() && parent_[i] != kAbsent; }
    bool is_root(Element i) const noexcept { return contains(i) && parent_[i] == i; }
    std::size_t size_of(Element root) const;
    std::size_t num_components() const noexcept { return components_; }
    std::size_t num_elements() const noexcept { return elements_; }
    bool path_compression() const noexcept { return compress_; }

    /// Number of parent hops from i to its root (no compression performed).
    std::size_t depth(Element i) const;

private:
    static constexpr Element kAbsent = static_cast<Element>(-1);

    void require(Element i) const;

    std::vector<Element> parent_;
    std::vector<std::uint32_t> size_;
    std::size_t components_ = 0;
    std::size_t elements_ = 0;
    bool compress_ = true;
};

}  // namespace mstsf
