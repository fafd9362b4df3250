#pragma once

#include <map>
#include <string>
#include <vector>

#include "rgw/linalg.hpp"

namespace rgw {

// Finite-dimensional Z-graded rational complex with a differential split as
// d-hat = sum_k d_k, deg d_k = -1 + 2k.
struct FilteredComplex {
    std::vector<std::string> basis;
    std::vector<int> degree;
    std::map<int, Matrix> d_parts; // k -> matrix (column convention)

    int size() const { return static_cast<int>(basis.size()); }
    int min_degree() const;
    int max_degree() const;
    Matrix d_hat() const;
    Matrix d_part(int k) const; // zero matrix when absent

    // d_k respects the grading and d-hat squares to zero.
    Report validate() const;
};

// The canonical filtration: (F_l C)_d = C_d for d > l, Im d_0 cap C_d for
// d = l, 0 for d < l.
struct Filtration {
    int min_level = 0, max_level = 0; // F_l for min_level <= l <= max_level
    std::vector<Matrix> levels;       // F_l bases, levels[l - min_level]

    const Matrix& at(int l) const;
    Matrix full;  // F_l for l < min_level
    Matrix empty; // F_l for l > max_level
};

Filtration build_filtration(const FilteredComplex& fc); // throws NotAComplex

struct Page {
    int r = 0;                              // page index, first page is 2
    std::map<int, int> dims;                // degree -> dim E_r^d
    std::map<int, int> d_ranks;             // degree -> rank of d_r out of d
    int total() const {
        int s = 0;
        for (auto& [d, v] : dims) s += v;
        return s;
    }
};

// Pages E_2, ..., E_r (E_2 is the homology of the associated graded, i.e. of
// (C, d_0)).
std::vector<Page> pages(const FilteredComplex& fc, int r);

// A single page; page_at(fc, r) for r past the filtration spread gives the
// stable page E-infinity.
Page page_at(const FilteredComplex& fc, int r);
int stable_page_bound(const FilteredComplex& fc); // any r >= this is stable

struct ConvergenceReport {
    bool ok = false;
    int stable_page = 2;
    std::map<int, int> e_infinity;    // degree -> dim
    std::map<int, int> graded_target; // associated graded of H(C, d-hat)
    int total_homology = 0;
    std::vector<std::string> notes;
};

ConvergenceReport converge_check(const FilteredComplex& fc);

// Morse model: critical points with indices, the Morse differential as d_0
// and higher corrections d_k of degree -1+2k.
FilteredComplex morse_model(const std::vector<int>& indices, const Matrix& morse_d0,
                            const std::map<int, Matrix>& corrections);

} // namespace rgw
