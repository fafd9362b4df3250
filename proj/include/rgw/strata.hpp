#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgw/detailed_tree.hpp"
#include "rgw/tree.hpp"

namespace rgw {

struct DimensionReport {
    std::map<std::string, int> per_vertex;
    int level0_edge_count = 0; // interior non-strip ribbon edges
    int n_gt0 = 0;             // divisor edges
    int strip_edge_count = 0;
    int sum_dimension = 0;      // pre-quotient fiber product
    int quotient_dimension = 0; // sum - 2|lambda|
    std::optional<int> closed_form;
    int ambient_n = 0;
    int num_levels = 0;
    int interior_vertices = 0;  // ribbon skeleton vertices
    int corner_codimension = 0; // interior vertices - 1
};

// Dimension of the moduli factor attached to one vertex (color-specific
// index formula). Throws MissingMaslov when a disc/strip class lacks one.
int vertex_dimension(const DetailedTree& t, int v, const Palette& palette, int n);

// Full dimension bookkeeping. For SD-ribbon trees the closed form
// mu(beta) + k0 + k1 - #{str,d0,d1} must equal the per-vertex sum; an
// IdentityViolation here signals a bug, never a soft failure.
DimensionReport stratum_dimension(const DetailedTree& t, const Palette& palette, int n);

// Divisor-only strata: report for a decorated rooted tree. sum_dimension is
// the per-level quotient (the torus action is already divided out), and the
// closed form is the dimension of the full compactified moduli of its type.
DimensionReport stratum_dimension(const DecoratedRootedTree& t, const Palette& palette, int n);

// (i,i+1) level shrinking on a detailed tree; i = 0 merges the first level
// into the disc/strip layer (recoloring isolated divisor vertices to s).
DetailedTree level_shrink(const DetailedTree& t, int i, const Palette& palette);

// Contract an interior level-0 edge (boundary or strip) of a ribbon tree.
DetailedTree level0_edge_shrink(const DetailedTree& t, int edge, const Palette& palette);

// All one-step shrinkings of t.
std::vector<DetailedTree> shrink_moves(const DetailedTree& t, const Palette& palette);

// a <= b iff a is reachable from b by finitely many shrinkings.
bool shrink_leq(const DetailedTree& a, const DetailedTree& b, const Palette& palette);

// {b} together with everything reachable from b, intersected with the
// enumerated universe (keyed by canonical form).
std::vector<std::string> closure_of(const DetailedTree& b,
                                    const std::map<std::string, DetailedTree>& universe,
                                    const Palette& palette);

// Kuratowski axioms for the closure operator A -> union of closures, checked
// on sampled subsets of the universe.
Report closure_axioms(const std::vector<DetailedTree>& universe, const Palette& palette,
                      int samples = 50, unsigned seed = 1);

struct SdType {
    std::string p, q;
    ClassExpr beta;
    int k0 = 0, k1 = 0;
};

struct SdBounds {
    int max_interior = 4;
    int max_levels = 3;
    int max_divisor_vertices = 2;
    int max_contact = 2;
    int max_absorbed = 2; // divisor summands folded into a level-0 class
    std::vector<std::string> intermediate_points;
    std::vector<std::string> strip_atoms;   // candidate strip classes
    std::vector<std::string> disc_atoms0;   // XL0 candidates
    std::vector<std::string> disc_atoms1;   // XL1 candidates
    std::vector<std::string> divisor_atoms; // divisor decorations
    long cap = 5000000;
};

// All valid SD-ribbon detailed trees of the type within the bounds, up to
// isomorphism, sorted by canonical form. Divisor decorations are searched
// over one-vertex divisor trees attached to the disc/strip layer.
std::vector<DetailedTree> enumerate_sd_ribbon(const SdType& type, const Palette& palette,
                                              const SdBounds& bounds);

// Boundary faces -----------------------------------------------------------

struct SplitEntry {
    ClassExpr beta1, beta2;
};

struct FaceData {
    int face_kind = 1; // 1, 2 or 3
    SdType type;       // type of the moduli space being bounded
    std::string r;     // kind 1: intermediate intersection point
    ClassExpr beta1, beta2;
    int k10 = 0, k11 = 0, k20 = 0, k21 = 0; // kind-1 splits
    int j = 1;                              // kind 2/3 attachment index
};

// The unique boundary SD-ribbon tree of the given kind.
DetailedTree boundary_template(const FaceData& data, const Palette& palette);

struct Face {
    FaceData data;
    DetailedTree tmpl;
    std::vector<std::string> members; // canonical forms within a universe
};

struct FaceTable {
    std::vector<std::string> intermediate_points;
    std::vector<SplitEntry> strip_splits; // beta1 # beta2 = beta, kind 1
    std::vector<SplitEntry> disc_splits1; // beta2 a disc class on L1, kind 2
    std::vector<SplitEntry> disc_splits0; // kind 3
};

std::vector<Face> boundary_faces(const SdType& type, const Palette& palette,
                                 const FaceTable& table,
                                 const std::vector<DetailedTree>& universe);

// Gluing --------------------------------------------------------------------

struct Gluing {
    DetailedTree glued;
    std::vector<int> merged_levels_left;  // new level of each old level 1..|l1|
    std::vector<int> merged_levels_right;
    int h = 0; // |l1| + |l2| - |merged|
};

// All level-merged joins of two SD-ribbon trees of types (p,r), (r,q).
std::vector<Gluing> glue(const DetailedTree& left, const DetailedTree& right,
                         const Palette& palette);

// Inverse of glue: cut at the unique strip edge labeled r whose removal
// separates the two halves; returns (left, right) with levels renormalized.
std::pair<DetailedTree, DetailedTree> split_gluing(const DetailedTree& glued,
                                                   const std::string& r,
                                                   const Palette& palette);

// Forgetful map -------------------------------------------------------------

// Forget the j-th boundary marked point of a DD-ribbon tree, 1 <= j <= k.
DetailedTree forget_boundary_mark(const DetailedTree& t, int j, const Palette& palette);

} // namespace rgw
