#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgw/error.hpp"
#include "rgw/rational.hpp"

namespace rgw {

// Finite formal sum of rational multiples of T^lambda, canonical (sorted by
// exponent, no zero coefficients). The zero scalar has no terms and
// valuation +infinity (empty optional).
class NovikovScalar {
public:
    NovikovScalar() = default;
    static NovikovScalar term(const Rat& coeff, const Rat& exponent);
    static NovikovScalar constant(const Rat& coeff) { return term(coeff, 0); }

    const std::vector<std::pair<Rat, Rat>>& terms() const { return terms_; } // (exp, coeff)
    bool is_zero() const { return terms_.empty(); }
    std::optional<Rat> valuation() const;

    NovikovScalar operator+(const NovikovScalar& o) const;
    NovikovScalar operator-() const;
    NovikovScalar operator-(const NovikovScalar& o) const { return *this + (-o); }
    NovikovScalar operator*(const NovikovScalar& o) const;
    bool operator==(const NovikovScalar& o) const { return terms_ == o.terms_; }

    // Keep the terms with exponent <= cut.
    NovikovScalar truncated(const Rat& cut) const;
    // Coefficient of T^lambda.
    Rat coefficient(const Rat& lambda) const;

    std::string to_string() const;

private:
    std::vector<std::pair<Rat, Rat>> terms_;
    void normalize();
};

using NovMatrix = std::vector<std::vector<NovikovScalar>>;

NovMatrix nov_mat_mul(const NovMatrix& a, const NovMatrix& b);
NovMatrix nov_mat_add(const NovMatrix& a, const NovMatrix& b);
NovMatrix nov_mat_truncate(const NovMatrix& a, const Rat& cut);
NovMatrix nov_identity(int n);

// G-gapped partial chain complex of energy cut level E: the differential is
// known for exponents <= E and squares to zero modulo T^E.
struct GappedComplex {
    std::vector<std::string> generators;
    std::vector<int> degree;  // Z2 (or Z) grading
    std::vector<Rat> monoid;  // generators of G
    Rat energy_cut_level = 0; // E
    NovMatrix d;              // entry(r, c) = <d g_c, g_r>

    int size() const { return static_cast<int>(generators.size()); }
};

struct PartialComplexCheck {
    bool ok = true;
    // offending entries of d*d with valuation < E: (row, col, exponent, coeff)
    std::vector<std::tuple<int, int, Rat, Rat>> offenders;
};

PartialComplexCheck check_partial_complex(const GappedComplex& c);

// Remove the terms with exponent > E'; 0 <= E' <= E.
GappedComplex energy_cut(const GappedComplex& c, const Rat& e_prime);

struct Decomposition {
    long betti = 0;
    std::vector<Rat> torsion; // a_1 >= a_2 >= ... > 0
};

// Valuations of the Smith invariant factors of a (not necessarily square)
// Novikov matrix, nondecreasing, by minimal-valuation-pivot reduction over
// the discrete valuation ring generated by T^(1/N).
std::vector<Rat> smith_valuations(const NovMatrix& m);

// Homology of a Novikov-ring differential (d*d = 0 required) as
// Betti number plus torsion exponents.
Decomposition homology_decomposition(const GappedComplex& c);
Decomposition homology_decomposition(const NovMatrix& d);

struct DisplacementReport {
    bool betti_equal = false;
    bool forward_ok = false;  // counts and bounds a'_i >= a_i - |H|
    bool backward_ok = false; // symmetric clause
    bool pass() const { return betti_equal && forward_ok && backward_ok; }
    std::vector<std::string> notes;
};

// Verifies the algebraic displacement bounds between two decompositions for
// a Hamiltonian of norm `hnorm`.
DisplacementReport displacement_check(const Decomposition& a, const Decomposition& b,
                                      const Rat& hnorm);

struct Extension {
    GappedComplex extended; // cut E'
    NovMatrix phi;          // chain map to c_big mod T^E'
};

// Extend c_small (cut E) along an invertible partial chain map phi into
// c_big (cut E' > E): the pulled-back differential phi^-1 d phi truncated at
// E'. Its energy cut at E must reproduce c_small exactly.
Extension pullback_extend(const GappedComplex& c_small, const GappedComplex& c_big,
                          const NovMatrix& phi);

} // namespace rgw
