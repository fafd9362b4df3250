#include "rgw/quasi_order.hpp"

#include <algorithm>
#include <numeric>

namespace rgw {

QuasiOrder::QuasiOrder(std::vector<std::string> ground) : ground_(std::move(ground)) {
    int n = size();
    le_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le_[i][i] = true;
}

int QuasiOrder::index_of(const std::string& id) const {
    auto it = std::find(ground_.begin(), ground_.end(), id);
    if (it == ground_.end()) throw Error("UnknownElement", "'" + id + "' not in ground set");
    return static_cast<int>(it - ground_.begin());
}

void QuasiOrder::transitive_close() {
    int n = size();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (le_[i][k])
                for (int j = 0; j < n; ++j)
                    if (le_[k][j]) le_[i][j] = true;
}

bool QuasiOrder::is_total() const {
    int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!le_[i][j] && !le_[j][i]) return false;
    return true;
}

bool QuasiOrder::finer_than(const QuasiOrder& coarser) const {
    int n = size();
    if (coarser.size() != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (coarser.lt(i, j) && !lt(i, j)) return false;
    return true;
}

std::vector<int> QuasiOrder::to_levels() const {
    if (!is_total()) throw Error("NotTotal", "quasi order is not total");
    int n = size();
    // Sort representatives by the order; equivalent elements share a level.
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return lt(a, b); });
    std::vector<int> levels(n, 0);
    int level = 0;
    for (int k = 0; k < n; ++k) {
        if (k == 0 || lt(idx[k - 1], idx[k])) ++level;
        levels[idx[k]] = level;
    }
    return levels;
}

QuasiOrder QuasiOrder::from_levels(const std::vector<std::string>& ground,
                                   const std::vector<int>& levels) {
    if (ground.size() != levels.size())
        throw Error("BadLevels", "level vector size mismatch");
    QuasiOrder qo(ground);
    int n = qo.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (levels[i] <= levels[j]) qo.le_[i][j] = true;
    return qo;
}

std::vector<std::vector<int>> QuasiOrder::total_refinements(int max_levels) const {
    int n = size();
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    int cap = max_levels > 0 ? std::min(max_levels, n) : n;
    // Surjective level assignments (image {1..max} without gaps) whose
    // induced total quasi order refines *this. Strictness constraints are
    // pruned incrementally.
    std::vector<int> levels(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            int top = *std::max_element(levels.begin(), levels.end());
            std::vector<bool> seen(top + 1, false);
            for (int l : levels) seen[l] = true;
            for (int l = 1; l <= top; ++l)
                if (!seen[l]) return;
            out.push_back(levels);
            return;
        }
        for (int l = 1; l <= cap; ++l) {
            levels[pos] = l;
            bool ok = true;
            for (int j = 0; j < pos && ok; ++j) {
                if (lt(j, pos) && !(levels[j] < l)) ok = false;
                if (lt(pos, j) && !(l < levels[j])) ok = false;
            }
            if (ok) rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

long fubini_number(int n) {
    // a(n) = sum_{k=1..n} C(n,k) a(n-k)
    std::vector<long> a(n + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long binom = 1;
        for (int k = 1; k <= m; ++k) {
            binom = binom * (m - k + 1) / k;
            a[m] += binom * a[m - k];
        }
    }
    return a[n];
}

} // namespace rgw
