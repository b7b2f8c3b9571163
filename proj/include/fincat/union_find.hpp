#pragma once

#include <numeric>
#include <vector>

namespace fincat {

// Plain disjoint-set forest with path halving and union by smaller index, so
// the root of any class is its smallest member.  Keeping the minimum as the
// representative is what makes quotient enumeration canonical.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

}  // namespace fincat
