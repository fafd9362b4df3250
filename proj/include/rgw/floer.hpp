#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgw/novikov.hpp"
#include "rgw/palette.hpp"

namespace rgw {

// User-supplied virtual counts: the analytic input the algebra is built
// from. Strip counts feed the boundary operator, disc counts the potential.
struct FloerGenerator {
    std::string id;
    std::string component; // pi_0 tag o
    int degree = 0;        // Z2 degree
};

struct StripCount {
    std::string from, to;
    std::string cls; // STRIP atom
    Rat count = 0;
    std::optional<Rat> energy; // defaults to the atom's area
    std::optional<int> maslov; // defaults to the atom's Maslov index
};

struct DiscCount {
    std::string cls; // XL0/XL1 atom with Maslov index 2
    Rat count = 0;
    std::string boundary_tag; // rho-weighting tag, defaults to the class id
};

struct FloerData {
    std::vector<FloerGenerator> generators;
    std::vector<StripCount> strips;
    std::vector<DiscCount> discs_L0, discs_L1;
    Rat monotonicity_c = 0;

    int index_of(const std::string& id) const;
};

Report validate_floer_data(const FloerData& data, const Palette& palette);

enum class BoundaryMode { Rational, Novikov };

using RatMatrix = std::vector<std::vector<Rat>>;

// The boundary operator assembled from the strip counts: entry(q, p) is the
// coefficient of q in d(p). Novikov mode weights each count by T^energy.
RatMatrix assemble_boundary(const FloerData& data, const Palette& palette);
NovMatrix assemble_boundary_novikov(const FloerData& data, const Palette& palette);

struct DSquaredAudit {
    Rat expected_defect;       // PO_{L1}(1) - PO_{L0}(1)
    bool is_scalar_identity = false;
    Rat observed_scalar;       // diagonal value when scalar
    bool matches_expected = false;
    std::vector<std::string> offenders;
};

DSquaredAudit d_squared_audit(const FloerData& data, const Palette& palette);

// Weighted count of Maslov-index-2 discs; rho maps boundary tags to nonzero
// rationals, missing tags weigh 1.
Rat potential(const FloerData& data, int lagrangian,
              const std::map<std::string, Rat>& rho, const Palette& palette);

struct FloerHomology {
    long rank = 0; // over the Novikov field / dimension over Q
    std::vector<Rat> torsion;
    bool rank_bound_ok = false; // rank <= #generators
};

FloerHomology floer_homology(const FloerData& data, const Palette& palette,
                             BoundaryMode mode = BoundaryMode::Novikov);

struct MonotonicityAudit {
    bool consistent = false;
    std::map<std::pair<std::string, std::string>, Rat> offsets; // c(p,q)
    std::vector<std::string> witnesses;
};

// Solves omega(beta) = c mu(beta) - c(p,q) per ordered generator pair and
// checks consistency plus additivity of the offsets along concatenations.
MonotonicityAudit monotonicity_audit(const FloerData& data, const Palette& palette);

} // namespace rgw
