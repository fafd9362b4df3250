#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rgw/error.hpp"

namespace rgw {

// Reflexive transitive relation on a finite ground set. "Total" means every
// pair is comparable; a total quasi order is the same data as a surjective
// level function onto {1..|lambda|}.
class QuasiOrder {
public:
    QuasiOrder() = default;
    explicit QuasiOrder(std::vector<std::string> ground);

    const std::vector<std::string>& ground() const { return ground_; }
    int size() const { return static_cast<int>(ground_.size()); }
    int index_of(const std::string& id) const;

    bool le(int a, int b) const { return le_[a][b]; }
    bool le(const std::string& a, const std::string& b) const {
        return le(index_of(a), index_of(b));
    }
    bool lt(int a, int b) const { return le_[a][b] && !le_[b][a]; }
    bool equivalent(int a, int b) const { return le_[a][b] && le_[b][a]; }

    void set_le(int a, int b) { le_[a][b] = true; }
    void transitive_close();

    bool is_total() const;
    // (*) a < b implies a <' b.
    bool finer_than(const QuasiOrder& coarser) const;

    // Total quasi order -> level function with image {1..|lambda|}, in ground
    // order. Throws NotTotal.
    std::vector<int> to_levels() const;

    static QuasiOrder from_levels(const std::vector<std::string>& ground,
                                  const std::vector<int>& levels);

    // All total quasi orders finer than *this (ordered set partitions of the
    // ground set compatible with the strict part). max_levels <= 0 means no
    // bound.
    std::vector<std::vector<int>> total_refinements(int max_levels = 0) const;

    bool operator==(const QuasiOrder& o) const {
        return ground_ == o.ground_ && le_ == o.le_;
    }

private:
    std::vector<std::string> ground_;
    std::vector<std::vector<bool>> le_;
};

// Number of ordered set partitions of an n-set (oracle helper for counting
// level functions on antichains): 1, 1, 3, 13, 75, ...
long fubini_number(int n);

} // namespace rgw
