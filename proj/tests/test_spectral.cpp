#include <doctest.h>

#include <random>

#include "rgw/spectral.hpp"

using namespace rgw;

namespace {

// Random graded complex: canceling pairs through d_0 and d_1 conjugated by a
// random filtered automorphism (identity + degree-raising parts), which
// keeps d-hat squaring to zero.
FilteredComplex random_complex(std::mt19937& rng, int size) {
    int n = size;
    std::vector<int> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(rng() % 4);
    Matrix d0(n, Vec(n, Rat(0))), d1(n, Vec(n, Rat(0)));
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    size_t used = 0;
    while (used + 1 < pool.size()) {
        int x = pool[used], y = pool[used + 1];
        int pick = static_cast<int>(rng() % 3);
        if (pick == 0) {
            used += 1;
            continue; // leave x free
        }
        if (pick == 1) {
            // d0 pair: deg y = deg x - 1
            deg[y] = deg[x] - 1;
            d0[y][x] = Rat(static_cast<long>(rng() % 3) + 1);
        } else {
            // d1 pair: deg y = deg x + 1
            deg[y] = deg[x] + 1;
            d1[y][x] = Rat(static_cast<long>(rng() % 3) + 1);
        }
        used += 2;
    }
    FilteredComplex fc;
    for (int i = 0; i < n; ++i) fc.basis.push_back("e" + std::to_string(i));
    fc.degree = deg;
    fc.d_parts[0] = d0;
    fc.d_parts[1] = d1;
    // conjugate by P = I + (degree +2 part): d' = P d P^-1 splits into
    // degree -1+2k parts again
    Matrix p(n, Vec(n, Rat(0))), pinv(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; ++i) p[i][i] = pinv[i][i] = 1;
    for (int k = 0; k < n; ++k) {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (i == j || deg[i] != deg[j] + 2) continue;
        Rat c(static_cast<long>(rng() % 5) - 2);
        Matrix el(n, Vec(n, Rat(0))), elinv(n, Vec(n, Rat(0)));
        for (int t = 0; t < n; ++t) el[t][t] = elinv[t][t] = 1;
        el[i][j] = c;
        elinv[i][j] = -c;
        p = mat_mul(p, el);
        pinv = mat_mul(elinv, pinv);
    }
    Matrix dh = mat_mul(p, mat_mul(fc.d_hat(), pinv));
    // split by degree
    std::map<int, Matrix> parts;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (dh[i][j] == 0) continue;
            int k2 = deg[i] - deg[j] + 1; // = 2k
            REQUIRE(k2 % 2 == 0);
            int k = k2 / 2;
            if (!parts.count(k)) parts[k] = Matrix(n, Vec(n, Rat(0)));
            parts[k][i][j] = dh[i][j];
        }
    fc.d_parts = parts;
    if (fc.d_parts.empty()) fc.d_parts[0] = Matrix(n, Vec(n, Rat(0)));
    return fc;
}

std::map<int, int> homology_dims(const FilteredComplex& fc, const Matrix& d) {
    // graded dims of ker d / im d when d is homogeneous of degree -1
    std::map<int, int> out;
    int n = fc.size();
    Matrix full;
    for (int i = 0; i < n; ++i) {
        Vec v(n, Rat(0));
        v[i] = 1;
        full.push_back(v);
    }
    Matrix ker = null_space(d, n);
    Matrix im = image_of(d, full);
    for (int deg = fc.min_degree(); deg <= fc.max_degree(); ++deg) {
        Matrix cd;
        for (int i = 0; i < n; ++i)
            if (fc.degree[i] == deg) {
                Vec v(n, Rat(0));
                v[i] = 1;
                cd.push_back(v);
            }
        if (cd.empty()) continue;
        int kd = subspace_dim(subspace_intersection(ker, cd, n));
        int id = subspace_dim(subspace_intersection(im, cd, n));
        if (kd - id > 0) out[deg] = kd - id;
    }
    return out;
}

} // namespace

TEST_CASE("circle Morse model: E2 = E-infinity = (1,1)") {
    FilteredComplex fc = morse_model({0, 1}, Matrix(2, Vec(2, Rat(0))), {});
    std::vector<Page> pg = pages(fc, 3);
    CHECK(pg[0].dims == std::map<int, int>{{0, 1}, {1, 1}});
    ConvergenceReport conv = converge_check(fc);
    CHECK(conv.ok);
    CHECK(conv.stable_page == 2);
    CHECK(conv.e_infinity == std::map<int, int>{{0, 1}, {1, 1}});
    CHECK(conv.total_homology == 2);
}

TEST_CASE("two generators with a d_1 correction cancel at a later page") {
    // x in C_0, y in C_1, d_1 x = y
    FilteredComplex fc;
    fc.basis = {"x", "y"};
    fc.degree = {0, 1};
    Matrix d1(2, Vec(2, Rat(0)));
    d1[1][0] = 1;
    fc.d_parts[1] = d1;
    REQUIRE(fc.validate().ok());
    std::vector<Page> pg = pages(fc, 4);
    CHECK(pg[0].total() == 2); // E2 = H(C, d_0) = C
    ConvergenceReport conv = converge_check(fc);
    CHECK(conv.ok);
    CHECK(conv.total_homology == 0);
    CHECK(conv.e_infinity.empty());
    CHECK(conv.stable_page > 2);
}

TEST_CASE("sphere-like correction drops the total dimension by two") {
    // indices (0, 1, 2, 2): d_1 pairs the index-0 and index-1 points
    FilteredComplex fc;
    fc.basis = {"min", "mid", "top1", "top2"};
    fc.degree = {0, 1, 2, 2};
    Matrix d1(4, Vec(4, Rat(0)));
    d1[1][0] = 1; // d_1 min = mid
    fc.d_parts[1] = d1;
    REQUIRE(fc.validate().ok());
    ConvergenceReport conv = converge_check(fc);
    CHECK(conv.ok);
    std::vector<Page> pg = pages(fc, 2);
    CHECK(pg[0].total() == 4);
    int einf_total = 0;
    for (auto& [d, v] : conv.e_infinity) einf_total += v;
    CHECK(einf_total == 2);
}

TEST_CASE("filtration levels are subcomplexes") {
    std::mt19937 rng(91);
    for (int it = 0; it < 25; ++it) {
        FilteredComplex fc = random_complex(rng, 8 + static_cast<int>(rng() % 8));
        Filtration f = build_filtration(fc);
        Matrix dh = fc.d_hat();
        for (int l = f.min_level; l <= f.max_level; ++l) {
            Matrix img = image_of(dh, f.at(l));
            Matrix sum = subspace_sum(img, f.at(l));
            CHECK(subspace_dim(sum) == subspace_dim(f.at(l))); // d F_l inside F_l
            Matrix inter = subspace_intersection(f.at(l + 1), f.at(l), fc.size());
            CHECK(subspace_dim(inter) == subspace_dim(f.at(l + 1))); // nested
        }
    }
}

TEST_CASE("E2 equals the homology of d_0 and E-infinity matches H(C, d-hat)") {
    std::mt19937 rng(101);
    for (int it = 0; it < 40; ++it) {
        FilteredComplex fc = random_complex(rng, 6 + static_cast<int>(rng() % 10));
        REQUIRE(fc.validate().ok());
        std::vector<Page> pg = pages(fc, 2);
        std::map<int, int> h0 = homology_dims(fc, fc.d_part(0));
        CHECK(pg[0].dims == h0);
        ConvergenceReport conv = converge_check(fc);
        CHECK(conv.ok);
        // page dimensions never increase
        std::vector<Page> all = pages(fc, conv.stable_page + 1);
        for (size_t i = 1; i < all.size(); ++i) CHECK(all[i].total() <= all[i - 1].total());
        // successive pages are the homology of d_r
        for (size_t i = 0; i + 1 < all.size(); ++i) {
            int out_ranks = 0;
            for (auto& [deg, rk] : all[i].d_ranks) out_ranks += rk;
            CHECK(all[i + 1].total() == all[i].total() - 2 * out_ranks);
        }
    }
}

TEST_CASE("torus Morse data with admissible corrections converges") {
    std::mt19937 rng(111);
    for (int it = 0; it < 20; ++it) {
        // indices (0, 1, 1, 2) and a random d_1 from the minimum to one of
        // the saddles (degree +1)
        Matrix d0(4, Vec(4, Rat(0)));
        std::map<int, Matrix> corr;
        Matrix d1(4, Vec(4, Rat(0)));
        if (rng() % 2) d1[1][0] = Rat(static_cast<long>(rng() % 3) + 1);
        if (rng() % 2) d1[2][0] = Rat(static_cast<long>(rng() % 3) + 1);
        if (rng() % 2) d1[3][1] = Rat(static_cast<long>(rng() % 3) + 1);
        corr[1] = d1;
        FilteredComplex fc;
        try {
            fc = morse_model({0, 1, 1, 2}, d0, corr);
        } catch (const Error&) {
            continue; // the random correction failed d-hat^2 = 0
        }
        ConvergenceReport conv = converge_check(fc);
        CHECK(conv.ok);
        std::vector<Page> pg = pages(fc, 2);
        CHECK(pg[0].dims == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
    }
}

TEST_CASE("pages demand r >= 2 and a complex") {
    FilteredComplex fc;
    fc.basis = {"x"};
    fc.degree = {0};
    fc.d_parts[0] = Matrix(1, Vec(1, Rat(0)));
    CHECK_THROWS_AS(pages(fc, 1), Error);
    FilteredComplex bad;
    bad.basis = {"x", "y"};
    bad.degree = {0, 0};
    Matrix m(2, Vec(2, Rat(0)));
    m[1][0] = 1; // degree rule broken for every k
    bad.d_parts[0] = m;
    CHECK_THROWS_WITH_AS(build_filtration(bad), doctest::Contains("degree rule"), Error);
}
