#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Pointed finite sets <n> = {0, 1, ..., n} with basepoint 0, and the
// basepoint-preserving maps between them.  Everything is dense and
// value-semantic: a set is just its size, a map is its value table.

namespace fincat {

struct PointedSet {
    int size = 0;  // number of non-basepoint elements; total cardinality is size+1

    friend bool operator==(const PointedSet&, const PointedSet&) = default;
};

inline std::string show(const PointedSet& s) { return "<" + std::to_string(s.size) + ">"; }

// A pointed map <dom> -> <cod>.  values[k-1] is the image of k for k = 1..dom;
// 0 is always sent to 0, so it is not stored.
struct PointedMap {
    int dom = 0;
    int cod = 0;
    std::vector<int> values;

    friend bool operator==(const PointedMap&, const PointedMap&) = default;
    friend auto operator<=>(const PointedMap&, const PointedMap&) = default;

    int apply(int k) const {
        if (k < 0 || k > dom) throw std::invalid_argument("PointedMap::apply: element out of range");
        return k == 0 ? 0 : values[k - 1];
    }

    // A map is zero iff it factors through <0>, i.e. every value is the basepoint.
    // Vacuously true for dom == 0: the unique map out of <0> is zero.
    bool is_zero() const {
        for (int v : values)
            if (v != 0) return false;
        return true;
    }

    bool is_bijective() const {
        if (dom != cod) return false;
        std::vector<char> seen(cod + 1, 0);
        seen[0] = 1;
        for (int v : values) {
            if (v <= 0 || v > cod || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    bool well_formed() const {
        if (dom < 0 || cod < 0 || static_cast<int>(values.size()) != dom) return false;
        for (int v : values)
            if (v < 0 || v > cod) return false;
        return true;
    }
};

inline PointedMap identity_map(int n) {
    PointedMap f{n, n, std::vector<int>(n)};
    std::iota(f.values.begin(), f.values.end(), 1);
    return f;
}

inline PointedMap zero_map(int dom, int cod) {
    return PointedMap{dom, cod, std::vector<int>(dom, 0)};
}

inline PointedMap compose(const PointedMap& g, const PointedMap& f) {
    if (f.cod != g.dom)
        throw std::invalid_argument("compose: codomain of f (" + std::to_string(f.cod) +
                                    ") != domain of g (" + std::to_string(g.dom) + ")");
    PointedMap h{f.dom, g.cod, {}};
    h.values.reserve(f.dom);
    for (int v : f.values) h.values.push_back(g.apply(v));
    return h;
}

inline std::string show(const PointedMap& f) {
    std::string s = show(PointedSet{f.dom}) + "->" + show(PointedSet{f.cod}) + "[";
    for (size_t k = 0; k < f.values.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(f.values[k]);
    }
    return s + "]";
}

// Wedge sum: one copy of each summand glued at the basepoint.  The k-th
// inclusion shifts by the sizes of the earlier summands; inclusions are
// injective off the basepoint and jointly cover the result.
struct Wedge {
    PointedSet total;
    std::vector<PointedMap> inclusions;
};

inline Wedge wedge(const std::vector<PointedSet>& summands) {
    Wedge w;
    w.total.size = 0;
    for (const auto& s : summands) w.total.size += s.size;
    int offset = 0;
    for (const auto& s : summands) {
        PointedMap inc{s.size, w.total.size, {}};
        inc.values.reserve(s.size);
        for (int k = 1; k <= s.size; ++k) inc.values.push_back(offset + k);
        offset += s.size;
        w.inclusions.push_back(std::move(inc));
    }
    return w;
}

}  // namespace fincat
