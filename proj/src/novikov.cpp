#include "rgw/novikov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace rgw {

void NovikovScalar::normalize() {
    std::map<Rat, Rat> acc;
    for (auto& [e, c] : terms_) acc[e] += c;
    terms_.clear();
    for (auto& [e, c] : acc)
        if (c != 0) terms_.push_back({e, c});
}

NovikovScalar NovikovScalar::term(const Rat& coeff, const Rat& exponent) {
    NovikovScalar s;
    if (coeff != 0) s.terms_.push_back({exponent, coeff});
    return s;
}

std::optional<Rat> NovikovScalar::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
}

NovikovScalar NovikovScalar::operator+(const NovikovScalar& o) const {
    NovikovScalar s;
    s.terms_ = terms_;
    s.terms_.insert(s.terms_.end(), o.terms_.begin(), o.terms_.end());
    s.normalize();
    return s;
}

NovikovScalar NovikovScalar::operator-() const {
    NovikovScalar s = *this;
    for (auto& [e, c] : s.terms_) c = -c;
    return s;
}

NovikovScalar NovikovScalar::operator*(const NovikovScalar& o) const {
    NovikovScalar s;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) s.terms_.push_back({e1 + e2, c1 * c2});
    s.normalize();
    return s;
}

NovikovScalar NovikovScalar::truncated(const Rat& cut) const {
    NovikovScalar s;
    for (auto& [e, c] : terms_)
        if (e <= cut) s.terms_.push_back({e, c});
    return s;
}

Rat NovikovScalar::coefficient(const Rat& lambda) const {
    for (auto& [e, c] : terms_)
        if (e == lambda) return c;
    return 0;
}

std::string NovikovScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first && c > 0) os << "+";
        os << rat_to_string(c);
        if (e != 0) os << "*T^" << rat_to_string(e);
        first = false;
    }
    return os.str();
}

NovMatrix nov_identity(int n) {
    NovMatrix m(n, std::vector<NovikovScalar>(n));
    for (int i = 0; i < n; ++i) m[i][i] = NovikovScalar::constant(1);
    return m;
}

NovMatrix nov_mat_mul(const NovMatrix& a, const NovMatrix& b) {
    int n = static_cast<int>(a.size());
    int k = n ? static_cast<int>(a[0].size()) : 0;
    int m = k && !b.empty() ? static_cast<int>(b[0].size()) : 0;
    NovMatrix out(n, std::vector<NovikovScalar>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            NovikovScalar s;
            for (int t = 0; t < k; ++t) s = s + a[i][t] * b[t][j];
            out[i][j] = s;
        }
    return out;
}

NovMatrix nov_mat_add(const NovMatrix& a, const NovMatrix& b) {
    NovMatrix out = a;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out[i].size(); ++j) out[i][j] = out[i][j] + b[i][j];
    return out;
}

NovMatrix nov_mat_truncate(const NovMatrix& a, const Rat& cut) {
    NovMatrix out = a;
    for (auto& row : out)
        for (auto& e : row) e = e.truncated(cut);
    return out;
}

PartialComplexCheck check_partial_complex(const GappedComplex& c) {
    PartialComplexCheck res;
    NovMatrix sq = nov_mat_mul(c.d, c.d);
    for (size_t i = 0; i < sq.size(); ++i)
        for (size_t j = 0; j < sq[i].size(); ++j)
            for (auto& [e, co] : sq[i][j].terms())
                if (e < c.energy_cut_level) {
                    res.ok = false;
                    res.offenders.push_back({static_cast<int>(i), static_cast<int>(j), e, co});
                }
    return res;
}

GappedComplex energy_cut(const GappedComplex& c, const Rat& e_prime) {
    if (e_prime < 0 || e_prime > c.energy_cut_level)
        throw Error("CutAboveE", "cut " + rat_to_string(e_prime) + " outside [0, " +
                                     rat_to_string(c.energy_cut_level) + "]");
    GappedComplex out = c;
    out.energy_cut_level = e_prime;
    out.d = nov_mat_truncate(c.d, e_prime);
    return out;
}

namespace {

// Dense polynomials над Q in the uniformizer t = T^(1/N).
using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out = a;
    if (out.size() < b.size()) out.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    poly_trim(out);
    return out;
}

int poly_val(const Poly& p) { // t-adic valuation, -1 for the zero polynomial
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly poly_shift(const Poly& p, int k) { // multiply by t^k
    if (p.empty()) return p;
    Poly out(p.size() + k, Rat(0));
    for (size_t i = 0; i < p.size(); ++i) out[i + k] = p[i];
    return out;
}

// Smith reduction over the local ring: returns the t-adic valuations of the
// invariant factors (nondecreasing).
std::vector<int> local_smith(std::vector<std::vector<Poly>> m) {
    std::vector<int> vals;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<bool> row_done(rows, false), col_done(cols, false);
    while (true) {
        int best = -1;
        size_t bi = 0, bj = 0;
        for (size_t i = 0; i < rows; ++i) {
            if (row_done[i]) continue;
            for (size_t j = 0; j < cols; ++j) {
                if (col_done[j]) continue;
                int v = poly_val(m[i][j]);
                if (v >= 0 && (best < 0 || v < best)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best < 0) break;
        vals.push_back(best);
        const Poly pivot = m[bi][bj];
        int pv = best;
        // unit part u of the pivot: pivot = t^pv * u
        Poly u(pivot.begin() + pv, pivot.end());
        // clear the pivot column: row_r <- u*row_r - t^(vr-pv)*w*row_bi
        for (size_t r = 0; r < rows; ++r) {
            if (r == bi || row_done[r]) continue;
            int vr = poly_val(m[r][bj]);
            if (vr < 0) continue;
            Poly w(m[r][bj].begin() + vr, m[r][bj].end());
            Poly factor = poly_shift(w, vr - pv);
            for (size_t j = 0; j < cols; ++j) {
                if (col_done[j]) continue;
                m[r][j] = poly_sub(poly_mul(u, m[r][j]), poly_mul(factor, m[bi][j]));
            }
        }
        // clear the pivot row
        for (size_t cjj = 0; cjj < cols; ++cjj) {
            if (cjj == bj || col_done[cjj]) continue;
            int vc = poly_val(m[bi][cjj]);
            if (vc < 0) continue;
            Poly w(m[bi][cjj].begin() + vc, m[bi][cjj].end());
            Poly factor = poly_shift(w, vc - pv);
            for (size_t r = 0; r < rows; ++r) {
                if (row_done[r]) continue;
                m[r][cjj] = poly_sub(poly_mul(u, m[r][cjj]), poly_mul(factor, m[r][bj]));
            }
        }
        row_done[bi] = true;
        col_done[bj] = true;
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

long lcm_long(long a, long b) {
    long g = std::gcd(a, b);
    return a / g * b;
}

} // namespace

std::vector<Rat> smith_valuations(const NovMatrix& d) {
    // common exponent denominator, auto-refined
    long N = 1;
    for (auto& row : d)
        for (auto& e : row)
            for (auto& [ex, c] : e.terms()) {
                (void)c;
                if (ex < 0) throw Error("NegativeEnergy", "negative exponent in matrix");
                N = lcm_long(N, ex.get_den().get_si());
            }
    size_t rows = d.size(), cols = rows ? d[0].size() : 0;
    std::vector<std::vector<Poly>> m(rows, std::vector<Poly>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            Poly p;
            for (auto& [ex, c] : d[i][j].terms()) {
                Rat scaled = ex * N;
                long k = scaled.get_num().get_si(); // integer by construction
                if (static_cast<long>(p.size()) <= k) p.resize(k + 1, Rat(0));
                p[k] += c;
            }
            poly_trim(p);
            m[i][j] = p;
        }
    std::vector<Rat> out;
    for (int v : local_smith(std::move(m))) out.push_back(Rat(v, N));
    return out;
}

Decomposition homology_decomposition(const NovMatrix& d) {
    int g = static_cast<int>(d.size());
    // d must be a differential
    NovMatrix sq = nov_mat_mul(d, d);
    for (auto& row : sq)
        for (auto& e : row)
            if (!e.is_zero()) throw Error("NonzeroDefect", "d*d != 0");
    std::vector<Rat> vals = smith_valuations(d);
    Decomposition dec;
    dec.betti = g - 2 * static_cast<long>(vals.size());
    for (const Rat& v : vals)
        if (v > 0) dec.torsion.push_back(v);
    std::sort(dec.torsion.rbegin(), dec.torsion.rend());
    return dec;
}

Decomposition homology_decomposition(const GappedComplex& c) {
    return homology_decomposition(c.d);
}

DisplacementReport displacement_check(const Decomposition& a, const Decomposition& b,
                                      const Rat& hnorm) {
    DisplacementReport rep;
    rep.betti_equal = a.betti == b.betti;
    if (!rep.betti_equal) rep.notes.push_back("Betti numbers differ");
    auto one_side = [&](const Decomposition& x, const Decomposition& y, const char* name) {
        // #{i : x_i > |H|} many torsion exponents must survive with
        // y_i >= x_i - |H|
        size_t surviving = 0;
        for (const Rat& t : x.torsion)
            if (t > hnorm) ++surviving;
        if (y.torsion.size() < surviving) {
            rep.notes.push_back(std::string(name) + ": too few torsion exponents survive");
            return false;
        }
        for (size_t i = 0; i < surviving; ++i)
            if (y.torsion[i] < x.torsion[i] - hnorm) {
                rep.notes.push_back(std::string(name) + ": torsion bound fails at index " +
                                    std::to_string(i + 1));
                return false;
            }
        return true;
    };
    rep.forward_ok = one_side(a, b, "forward");
    rep.backward_ok = one_side(b, a, "backward");
    return rep;
}

namespace {

// Inverse of an invertible Novikov matrix, truncated at `cut`.
NovMatrix nov_invert(const NovMatrix& phi, const Rat& cut) {
    int n = static_cast<int>(phi.size());
    // split phi = phi0 + positive part
    std::vector<std::vector<Rat>> phi0(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) phi0[i][j] = phi[i][j].coefficient(0);
    // invert phi0 over Q by Gauss-Jordan
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    std::vector<std::vector<Rat>> a = phi0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("NotInvertible", "leading coefficient matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    NovMatrix inv0(n, std::vector<NovikovScalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv0[i][j] = NovikovScalar::constant(inv[i][j]);
    // positive part P := phi - phi0; phi^-1 = (sum (-inv0 P)^k) inv0
    NovMatrix pos = phi;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pos[i][j] = (phi[i][j] - NovikovScalar::constant(phi[i][j].coefficient(0)));
    Rat minval;
    bool any = false;
    for (auto& row : pos)
        for (auto& e : row)
            if (auto v = e.valuation()) {
                if (!any || *v < minval) minval = *v;
                any = true;
            }
    NovMatrix result = inv0;
    if (any) {
        NovMatrix step = nov_mat_truncate(nov_mat_mul(inv0, pos), cut);
        for (auto& row : step)
            for (auto& e : row) e = -e;
        NovMatrix power = step;
        while (true) {
            bool zero = true;
            for (auto& row : power)
                for (auto& e : row)
                    if (!e.is_zero()) zero = false;
            if (zero) break;
            result = nov_mat_add(result, nov_mat_mul(power, inv0));
            power = nov_mat_truncate(nov_mat_mul(power, step), cut);
        }
    }
    return nov_mat_truncate(result, cut);
}

} // namespace

Extension pullback_extend(const GappedComplex& c_small, const GappedComplex& c_big,
                          const NovMatrix& phi) {
    if (c_small.size() != c_big.size())
        throw Error("NotChainMapModE", "rank mismatch between the two complexes");
    const Rat E = c_small.energy_cut_level;
    const Rat Ep = c_big.energy_cut_level;
    if (!(Ep > E)) throw Error("CutAboveE", "target cut must exceed the source cut");
    NovMatrix inv = nov_invert(phi, Ep);
    // chain map through level E: phi d_small - d_big phi vanishes up to E
    NovMatrix lhs = nov_mat_truncate(nov_mat_mul(phi, c_small.d), E);
    NovMatrix rhs = nov_mat_truncate(nov_mat_mul(c_big.d, phi), E);
    for (size_t i = 0; i < lhs.size(); ++i)
        for (size_t j = 0; j < lhs[i].size(); ++j)
            if (!(lhs[i][j] == rhs[i][j]))
                throw Error("NotChainMapModE", "phi is not a chain map through level " +
                                                   rat_to_string(E));
    Extension ext;
    ext.extended = c_small;
    ext.extended.energy_cut_level = Ep;
    ext.extended.monoid = c_big.monoid;
    ext.extended.d =
        nov_mat_truncate(nov_mat_mul(inv, nov_mat_mul(c_big.d, phi)), Ep);
    // the cut at E must reproduce c_small entry by entry
    NovMatrix back = nov_mat_truncate(ext.extended.d, E);
    for (size_t i = 0; i < back.size(); ++i)
        for (size_t j = 0; j < back[i].size(); ++j)
            if (!(back[i][j] == c_small.d[i][j]))
                throw Error("NotChainMapModE",
                            "pulled-back differential does not restrict to the source");
    ext.phi = nov_mat_truncate(phi, Ep);
    return ext;
}

} // namespace rgw
