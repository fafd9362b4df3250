#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgw/error.hpp"
#include "rgw/rational.hpp"

namespace rgw {

// Ambient group a symbolic homology class lives in.
//   D     : spheres in the divisor
//   X     : spheres in the ambient manifold
//   XL0/1 : discs with boundary on L0 / L1
//   Strip : strips between two intersection points (carries endpoints)
enum class Space { D, X, XL0, XL1, Strip };

std::string space_name(Space s);
Space space_from_name(const std::string& name);

// A named homology class together with its numerical pairings. Classes are
// nominal: two distinct atoms may share all pairings.
struct ClassAtom {
    std::string id;
    Space space = Space::D;
    int pair_D = 0; // intersection with the divisor class
    int c1_X = 0;   // pairing with c1 of the ambient manifold
    std::optional<int> maslov_raw; // user data for XL0/XL1/Strip
    Rat area = 0;                  // symplectic area
    std::string strip_from, strip_to; // endpoints, Strip only

    // Derived pairing with c1 of the divisor (adjunction convention).
    int c1_D() const { return c1_X - pair_D; }

    // Maslov index: 2*c1_X for sphere classes in X, user data for disc and
    // strip classes, undefined for divisor classes.
    std::optional<int> maslov() const {
        if (space == Space::X) return 2 * c1_X;
        if (space == Space::D) return std::nullopt;
        return maslov_raw;
    }
};

// Integer linear combination of atoms, keyed by atom id. The zero expression
// has no terms; all pairings of it vanish.
struct ClassExpr {
    std::map<std::string, int> terms;

    static ClassExpr zero() { return {}; }
    static ClassExpr atom(const std::string& id, int coeff = 1) {
        ClassExpr e;
        if (coeff != 0) e.terms[id] = coeff;
        return e;
    }

    bool is_zero() const { return terms.empty(); }

    ClassExpr& operator+=(const ClassExpr& o);
    ClassExpr& operator-=(const ClassExpr& o) { return *this += -o; }
    ClassExpr operator+(const ClassExpr& o) const {
        ClassExpr r = *this;
        r += o;
        return r;
    }
    ClassExpr operator-() const;
    ClassExpr operator-(const ClassExpr& o) const { return *this + (-o); }
    ClassExpr operator*(int c) const;
    bool operator==(const ClassExpr& o) const { return terms == o.terms; }
    bool operator<(const ClassExpr& o) const { return terms < o.terms; }

    // Deterministic encoding, e.g. "A+2B-C"; "0" for the zero class.
    std::string to_string() const;
};

// Linear extension of the atom pairings to a class expression.
struct Pairings {
    int pair_D = 0;
    int c1_X = 0;
    int c1_D = 0;
    std::optional<int> maslov; // absent when a divisor atom contributes
    Rat area = 0;
};

class Palette {
public:
    Palette() = default;

    void add(const ClassAtom& atom);
    bool has(const std::string& id) const { return atoms_.count(id) != 0; }
    const ClassAtom& at(const std::string& id) const; // throws UnknownAtom
    const std::map<std::string, ClassAtom>& atoms() const { return atoms_; }

    Pairings pairings(const ClassExpr& e) const;

    // Maslov index of an expression; throws MaslovUndefined if any
    // contributing atom has no Maslov index.
    int maslov(const ClassExpr& e) const;

    // Lists every violated atom invariant; empty iff the palette is valid.
    Report validate() const;

private:
    std::map<std::string, ClassAtom> atoms_;
};

} // namespace rgw
