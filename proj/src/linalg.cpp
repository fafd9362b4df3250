#include "rgw/linalg.hpp"

namespace rgw {

int rref(Matrix& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        // rows at or below r are zero strictly left of c
        Rat d = m[r][c];
        if (d != 1)
            for (int j = c; j < cols; ++j)
                if (m[r][j] != 0) m[r][j] /= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

int subspace_dim(const Matrix& basis) {
    Matrix m = basis;
    return rref(m);
}

Matrix subspace_canon(Matrix m) {
    int r = rref(m);
    m.resize(r);
    return m;
}

Matrix subspace_sum(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    m.insert(m.end(), b.begin(), b.end());
    return subspace_canon(std::move(m));
}

Matrix null_space(const Matrix& m_in, int width) {
    Matrix m = m_in;
    int rank = rref(m);
    m.resize(rank);
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(width, false);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < width; ++c)
            if (m[r][c] != 0) {
                pivot_col[r] = c;
                is_pivot[c] = true;
                break;
            }
    Matrix basis;
    for (int c = 0; c < width; ++c) {
        if (is_pivot[c]) continue;
        Vec v(width, Rat(0));
        v[c] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][c];
        basis.push_back(v);
    }
    return subspace_canon(std::move(basis));
}

Matrix annihilator(const Matrix& basis, int n) {
    if (basis.empty()) {
        // everything annihilates the zero space: equations are none, the
        // annihilator is all of Q^n
        Matrix id(n, Vec(n, Rat(0)));
        for (int i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    }
    return null_space(basis, n);
}

Matrix subspace_intersection(const Matrix& a, const Matrix& b, int n) {
    Matrix eq = annihilator(a, n);
    Matrix eqb = annihilator(b, n);
    eq.insert(eq.end(), eqb.begin(), eqb.end());
    return null_space(eq, n);
}

Matrix preimage(const Matrix& map, const Matrix& target, int n) {
    // x with (map x) in target: annihilator(target) * map * x = 0
    Matrix eq = annihilator(target, n);
    Matrix comp = mat_mul(eq, map);
    return null_space(comp, n);
}

Vec apply(const Matrix& map, const Vec& v) {
    int rows = static_cast<int>(map.size());
    Vec out(rows, Rat(0));
    for (int i = 0; i < rows; ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) out[i] += map[i][j] * v[j];
    return out;
}

Matrix image_of(const Matrix& map, const Matrix& basis) {
    Matrix rows;
    for (const Vec& b : basis) rows.push_back(apply(map, b));
    return subspace_canon(std::move(rows));
}

bool subspace_contains(const Matrix& basis, const Vec& v) {
    Matrix m = basis;
    m.push_back(v);
    return rref(m) == subspace_dim(basis);
}

std::vector<Rat> coordinates_in(const Matrix& basis, const Vec& v) {
    // solve sum_k x_k basis[k] = v by row reduction on the transposed system
    int k = static_cast<int>(basis.size());
    int n = k ? static_cast<int>(basis[0].size()) : static_cast<int>(v.size());
    Matrix sys(n, Vec(k + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) sys[i][j] = basis[j][i];
        sys[i][k] = v[i];
    }
    rref(sys);
    std::vector<Rat> x(k, Rat(0));
    for (int i = 0; i < n; ++i) {
        int lead = -1;
        for (int j = 0; j <= k; ++j)
            if (sys[i][j] != 0) {
                lead = j;
                break;
            }
        if (lead == k) return {}; // inconsistent
        if (lead >= 0 && lead < k) x[lead] = sys[i][k];
    }
    return x;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    int n = static_cast<int>(a.size());
    int k = n ? static_cast<int>(a[0].size()) : 0;
    int m = !b.empty() ? static_cast<int>(b[0].size()) : 0;
    Matrix out(n, Vec(m, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (int j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    return out;
}

int mat_rank(Matrix m) { return rref(m); }

} // namespace rgw
