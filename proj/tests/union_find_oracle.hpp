#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace mstsf::testing {

/// Explicit label per element; a merge relabels every member of the smaller set.
class RelabelOracle {
public:
    explicit RelabelOracle(std::size_t n) : label_(n), members_(n) {
        std::iota(label_.begin(), label_.end(), std::size_t{0});
        for (std::size_t i = 0; i < n; ++i) members_[i] = {i};
    }

    bool same(std::size_t i, std::size_t j) const { return label_[i] == label_[j]; }
    std::size_t size_of(std::size_t i) const { return members_[label_[i]].size(); }

    std::size_t components() const {
        std::size_t c = 0;
        for (const auto& m : members_) c += m.empty() ? 0 : 1;
        return c;
    }

    void merge(std::size_t i, std::size_t j) {
        std::size_t big = label_[i], small = label_[j];
        if (big == small) return;
        if (members_[small].size() > members_[big].size()) std::swap(big, small);
        for (std::size_t x : members_[small]) {
            label_[x] = big;
            members_[big].push_back(x);
        }
        members_[small].clear();
    }

private:
    std::vector<std::size_t> label_;
    std::vector<std::vector<std::size_t>> members_;
};

}  // namespace mstsf::testing
