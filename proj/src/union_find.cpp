#include "mstsf/union_find.hpp"

#include <numeric>
#include <string>

namespace mstsf {

UnionFind::UnionFind(std::size_t n, bool path_compression)
    : parent_(n), size_(n, 1), components_(n), elements_(n), compress_(path_compression) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
}

void UnionFind::make_set(Element i) {
    if (i == kAbsent) throw UnionFindError("element id reserved");
    if (contains(i)) throw UnionFindError("make_set: element " + std::to_string(i) + " already present");
    if (i >= parent_.size()) {
        parent_.resize(std::size_t{i} + 1, kAbsent);
        size_.resize(std::size_t{i} + 1, 0);
    }
    parent_[i] = i;
    size_[i] = 1;
    ++components_;
    ++elements_;
}

void UnionFind::require(Element i) const {
    if (!contains(i)) throw UnionFindError("unknown element " + std::to_string(i));
}

UnionFind::Element UnionFind::find(Element i) {
    require(i);
    Element root = i;
    while (parent_[root] != root) root = parent_[root];
    if (compress_) {
        while (parent_[i] != root) {
            const Element next = parent_[i];
            parent_[i] = root;
            i = next;
        }
    }
    return root;
}

UnionFind::Element UnionFind::unite(Element a, Element b) {
    if (!is_root(a) || !is_root(b)) throw UnionFindError("unite: arguments must be current roots");
    if (a == b) throw UnionFindError("unite: trees are identical");
    if (size_[b] > size_[a]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    size_[b] = 0;
    --components_;
    return a;
}

std::size_t UnionFind::size_of(Element root) const {
    if (!is_root(root)) throw UnionFindError("size_of: " + std::to_string(root) + " is not a root");
    return size_[root];
}

std::size_t UnionFind::depth(Element i) const {
    require(i);
    std::size_t hops = 0;
    while (parent_[i] != i) {
        i = parent_[i];
        ++hops;
    }
    return hops;
}

}  // namespace mstsf
