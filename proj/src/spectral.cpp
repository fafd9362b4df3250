#include "rgw/spectral.hpp"

#include <algorithm>

#include "rgw/error.hpp"

namespace rgw {

int FilteredComplex::min_degree() const {
    int m = degree.empty() ? 0 : degree[0];
    for (int d : degree) m = std::min(m, d);
    return m;
}

int FilteredComplex::max_degree() const {
    int m = degree.empty() ? 0 : degree[0];
    for (int d : degree) m = std::max(m, d);
    return m;
}

Matrix FilteredComplex::d_part(int k) const {
    auto it = d_parts.find(k);
    if (it != d_parts.end()) return it->second;
    return Matrix(size(), Vec(size(), Rat(0)));
}

Matrix FilteredComplex::d_hat() const {
    Matrix m(size(), Vec(size(), Rat(0)));
    for (auto& [k, part] : d_parts) {
        (void)k;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) m[i][j] += part[i][j];
    }
    return m;
}

Report FilteredComplex::validate() const {
    Report rep;
    int n = size();
    if (static_cast<int>(degree.size()) != n) {
        rep.add("degree vector size mismatch");
        return rep;
    }
    for (auto& [k, part] : d_parts) {
        if (static_cast<int>(part.size()) != n) {
            rep.add("d_" + std::to_string(k) + " has wrong shape");
            continue;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (part[i][j] != 0 && degree[i] != degree[j] - 1 + 2 * k)
                    rep.add("d_" + std::to_string(k) + " entry (" + basis[i] + "," + basis[j] +
                            ") violates the degree rule");
    }
    Matrix dd = mat_mul(d_hat(), d_hat());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dd[i][j] != 0) {
                rep.add("d-hat does not square to zero");
                return rep;
            }
    return rep;
}

namespace {

Matrix degree_subspace(const FilteredComplex& fc, int d) {
    Matrix rows;
    for (int i = 0; i < fc.size(); ++i)
        if (fc.degree[i] == d) {
            Vec v(fc.size(), Rat(0));
            v[i] = 1;
            rows.push_back(v);
        }
    return rows;
}

Matrix degree_at_least(const FilteredComplex& fc, int d) {
    Matrix rows;
    for (int i = 0; i < fc.size(); ++i)
        if (fc.degree[i] >= d) {
            Vec v(fc.size(), Rat(0));
            v[i] = 1;
            rows.push_back(v);
        }
    return rows;
}

} // namespace

const Matrix& Filtration::at(int l) const {
    if (l < min_level) return full;
    if (l > max_level) return empty;
    return levels[l - min_level];
}

Filtration build_filtration(const FilteredComplex& fc) {
    Report rep = fc.validate();
    if (!rep.ok()) throw Error("NotAComplex", rep.violations.front());
    Filtration f;
    int n = fc.size();
    f.min_level = fc.min_degree() - 1;
    f.max_level = fc.max_degree();
    Matrix im_d0 = image_of(fc.d_part(0), degree_at_least(fc, f.min_level)); // image of d_0
    for (int l = f.min_level; l <= f.max_level; ++l) {
        Matrix high = degree_at_least(fc, l + 1);
        Matrix fringe = subspace_intersection(im_d0, degree_subspace(fc, l), n);
        f.levels.push_back(subspace_sum(high, fringe));
    }
    f.full = subspace_canon(degree_at_least(fc, f.min_level - 1000000));
    // identity basis of the whole space
    f.full.clear();
    for (int i = 0; i < n; ++i) {
        Vec v(n, Rat(0));
        v[i] = 1;
        f.full.push_back(v);
    }
    return f;
}

namespace {

// Z_r^l = F_l cap d^-1(F_{l+r}); page index r here is the internal one
// (first page = 1 = homology of the associated graded).
Matrix big_z(const FilteredComplex& fc, const Filtration& f, const Matrix& dhat, int l, int r) {
    int n = fc.size();
    Matrix zone = preimage(dhat, f.at(l + r), n);
    return subspace_intersection(f.at(l), zone, n);
}

} // namespace

namespace {

Page compute_page(const FilteredComplex& fc, const Filtration& f, const Matrix& dhat,
                  int r_user) {
    int n = fc.size();
    int r = r_user - 1; // internal index
    Page page;
    page.r = r_user;
    // Z_r^l = F_l cap d^-1(F_{l+r}); both indices repeat across levels, so
    // memoize the preimages (by clamped target level) and the Z spaces.
    std::map<int, Matrix> pre;
    auto preimage_at = [&](int target) -> const Matrix& {
        int c = std::clamp(target, f.min_level - 1, f.max_level + 1);
        auto it = pre.find(c);
        if (it == pre.end()) it = pre.emplace(c, preimage(dhat, f.at(c), n)).first;
        return it->second;
    };
    std::map<std::pair<int, int>, Matrix> zc;
    auto bz = [&](int l, int rr) -> const Matrix& {
        // key by the clamped filtration level and the clamped target; both
        // determine the subspace
        auto key = std::make_pair(std::clamp(l, f.min_level - 1, f.max_level + 1),
                                  std::clamp(l + rr, f.min_level - 1, f.max_level + 1));
        auto it = zc.find(key);
        if (it == zc.end())
            it = zc.emplace(key,
                            subspace_intersection(f.at(key.first), preimage_at(key.second), n))
                     .first;
        return it->second;
    };
    for (int l = f.min_level; l <= f.max_level; ++l) {
        const Matrix& Z = bz(l, r);
        const Matrix& B1 = bz(l + 1, r - 1);
        Matrix B2 = image_of(dhat, bz(l - r + 1, r - 1));
        Matrix B = subspace_sum(B1, subspace_intersection(B2, f.at(l), n));
        int dim = subspace_dim(Z) - subspace_dim(subspace_intersection(Z, B, n));
        if (dim > 0) page.dims[l + 1] = dim;
        // rank of d_r out of filtration level l:
        // d(Z_r^l) + (B at l+r) modulo (B at l+r)
        Matrix dz = image_of(dhat, Z);
        const Matrix& Bt1 = bz(l + r + 1, r - 1);
        Matrix Bt2 = image_of(dhat, bz(l + 1, r - 1));
        Matrix Bt = subspace_sum(Bt1, Bt2);
        int rank = subspace_dim(subspace_sum(dz, Bt)) - subspace_dim(Bt);
        if (rank > 0) page.d_ranks[l + 1] = rank;
    }
    return page;
}

} // namespace

std::vector<Page> pages(const FilteredComplex& fc, int r_max) {
    if (r_max < 2) throw Error("InvalidInput", "pages start at 2");
    Filtration f = build_filtration(fc);
    Matrix dhat = fc.d_hat();
    std::vector<Page> out;
    for (int r_user = 2; r_user <= r_max; ++r_user)
        out.push_back(compute_page(fc, f, dhat, r_user));
    return out;
}

Page page_at(const FilteredComplex& fc, int r) {
    if (r < 2) throw Error("InvalidInput", "pages start at 2");
    Filtration f = build_filtration(fc);
    Matrix dhat = fc.d_hat();
    return compute_page(fc, f, dhat, r);
}

int stable_page_bound(const FilteredComplex& fc) {
    return fc.max_degree() - fc.min_degree() + 4;
}

ConvergenceReport converge_check(const FilteredComplex& fc) {
    ConvergenceReport rep;
    Filtration f = build_filtration(fc);
    Matrix dhat = fc.d_hat();
    int n = fc.size();
    int spread = f.max_level - f.min_level + 2;
    std::vector<Page> pg = pages(fc, 2 + spread + 1);
    // stabilization: first page from which the dims stay constant
    rep.stable_page = pg.back().r;
    for (int i = static_cast<int>(pg.size()) - 1; i >= 0; --i) {
        if (pg[i].dims == pg.back().dims)
            rep.stable_page = pg[i].r;
        else
            break;
    }
    rep.e_infinity = pg.back().dims;
    // associated graded of H(C, d-hat)
    Matrix kernel = null_space(dhat, n);
    Matrix image = image_of(dhat, f.full);
    rep.total_homology = subspace_dim(kernel) - subspace_dim(image);
    for (int l = f.min_level; l <= f.max_level; ++l) {
        auto graded_dim = [&](int lv) {
            Matrix a = subspace_sum(subspace_intersection(f.at(lv), kernel, n), image);
            return subspace_dim(a);
        };
        int g = graded_dim(l) - graded_dim(l + 1);
        if (g > 0) rep.graded_target[l + 1] = g;
    }
    rep.ok = rep.e_infinity == rep.graded_target;
    if (!rep.ok) rep.notes.push_back("E-infinity differs from the graded homology");
    int total = 0;
    for (auto& [d, v] : rep.e_infinity) total += v;
    if (total != rep.total_homology) {
        rep.ok = false;
        rep.notes.push_back("total E-infinity dimension differs from dim H(C)");
    }
    return rep;
}

FilteredComplex morse_model(const std::vector<int>& indices, const Matrix& morse_d0,
                            const std::map<int, Matrix>& corrections) {
    FilteredComplex fc;
    for (size_t i = 0; i < indices.size(); ++i) fc.basis.push_back("p" + std::to_string(i));
    fc.degree = indices;
    fc.d_parts[0] = morse_d0;
    for (auto& [k, m] : corrections)
        if (k > 0) fc.d_parts[k] = m;
    Report rep = fc.validate();
    if (!rep.ok()) throw Error("NotAComplex", rep.violations.front());
    return fc;
}

} // namespace rgw
