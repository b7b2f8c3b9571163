#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fincat/tuple_category.hpp"

// Cache of materialized index categories, keyed by truncation parameters.
// Instances are heap-owned so pointers into them (functors, diagrams) stay
// valid for the life of the universe.

namespace fincat {

// Materializing a category means an M x M composition table; past this many
// morphisms that stops being a desk-scale object.
inline constexpr long long kMaxDenseMorphisms = 8000;

class IndexUniverse {
public:
    const SkelCat& skel(int n) {
        auto& slot = skels_[n];
        if (!slot) {
            check_skel_size(n);
            slot = std::make_unique<SkelCat>(make_skel_cat(n));
        }
        return *slot;
    }

    const TupleCat& gstar(int n, int q) {
        auto& slot = gstars_[{n, q}];
        if (!slot) slot = materialize(skel_base(skel(n)), q, "gstar");
        return *slot;
    }

    const DeltaOpCat& delta_op(int d) {
        auto& slot = deltas_[d];
        if (!slot) slot = std::make_unique<DeltaOpCat>(make_delta_op(d));
        return *slot;
    }

    const TupleCat& estar(int d, int q) {
        auto& slot = estars_[{d, q}];
        if (!slot) slot = materialize(delta_base(delta_op(d)), q, "estar");
        return *slot;
    }

    // References look like "fskel:2", "gstar:2,2", "deltaop:3", "estar:2,2".
    const FinCategory& resolve_ref(const std::string& s) {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad index reference '" + s + "'");
        std::string kind = s.substr(0, colon);
        std::vector<int> args;
        std::stringstream ss(s.substr(colon + 1));
        for (std::string part; std::getline(ss, part, ',');) args.push_back(std::stoi(part));
        if (kind == "fskel" && args.size() == 1) return skel(args[0]).cat;
        if (kind == "gstar" && args.size() == 2) return gstar(args[0], args[1]).cat;
        if (kind == "deltaop" && args.size() == 1) return delta_op(args[0]).cat;
        if (kind == "estar" && args.size() == 2) return estar(args[0], args[1]).cat;
        throw std::invalid_argument("bad index reference '" + s + "'");
    }

    const FinCategory& adopt(FinCategory c) {
        inline_cats_.push_back(std::make_unique<FinCategory>(std::move(c)));
        return *inline_cats_.back();
    }

private:
    static void check_skel_size(int n) {
        long long total = 0;
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) {
                long long h = 1;
                for (int k = 0; k < a; ++k) h *= b + 1;
                total += h;
                if (total > kMaxDenseMorphisms)
                    throw TruncationError("fskel:" + std::to_string(n) +
                                          " is too large to materialize (over " +
                                          std::to_string(kMaxDenseMorphisms) + " morphisms)");
            }
    }

    static std::unique_ptr<TupleCat> materialize(TupleBase base, int q, const std::string& kind) {
        // Estimate the morphism count before committing to a dense table.
        std::vector<ObjectTuple> tuples = enum_truncated_tuples(base, q);
        long long total = 0;
        for (const auto& s : tuples)
            for (const auto& d : tuples) {
                total += tuple_hom_count(base, s, d) + 1;  // +1 for the zero morphism
                if (total > kMaxDenseMorphisms)
                    throw TruncationError(
                        kind + " at this truncation is too large to materialize (over " +
                        std::to_string(kMaxDenseMorphisms) + " morphisms)");
            }
        return std::make_unique<TupleCat>(make_tuple_cat(base, q));
    }

    std::map<int, std::unique_ptr<SkelCat>> skels_;
    std::map<int, std::unique_ptr<DeltaOpCat>> deltas_;
    std::map<std::pair<int, int>, std::unique_ptr<TupleCat>> gstars_, estars_;
    std::vector<std::unique_ptr<FinCategory>> inline_cats_;
};

}  // namespace fincat
