#include "rgw/floer.hpp"

namespace rgw {

int FloerData::index_of(const std::string& id) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].id == id) return static_cast<int>(i);
    throw Error("EndpointMismatch", "unknown generator '" + id + "'");
}

namespace {

void check_strip(const StripCount& sc, const Palette& palette) {
    const ClassAtom& a = palette.at(sc.cls);
    if (a.space != Space::Strip)
        throw Error("EndpointMismatch", "class " + sc.cls + " is not a strip class");
    if (a.strip_from != sc.from || a.strip_to != sc.to)
        throw Error("EndpointMismatch", "class " + sc.cls + " runs " + a.strip_from + " -> " +
                                            a.strip_to + ", count declared " + sc.from +
                                            " -> " + sc.to);
}

Rat strip_energy(const StripCount& sc, const Palette& palette) {
    return sc.energy ? *sc.energy : palette.at(sc.cls).area;
}

int strip_maslov(const StripCount& sc, const Palette& palette) {
    if (sc.maslov) return *sc.maslov;
    auto m = palette.at(sc.cls).maslov();
    if (!m) throw Error("MissingMaslov", "class " + sc.cls);
    return *m;
}

} // namespace

Report validate_floer_data(const FloerData& data, const Palette& palette) {
    Report rep;
    for (const StripCount& sc : data.strips) {
        try {
            check_strip(sc, palette);
        } catch (const Error& e) {
            rep.add(e.what());
            continue;
        }
        if (palette.at(sc.cls).pair_D != 0)
            rep.add("class " + sc.cls + " meets the divisor (pair_D != 0)");
        data.index_of(sc.from);
        data.index_of(sc.to);
    }
    for (const auto* side : {&data.discs_L0, &data.discs_L1})
        for (const DiscCount& dc : *side) {
            const ClassAtom& a = palette.at(dc.cls);
            if (a.pair_D != 0) rep.add("disc class " + dc.cls + " meets the divisor");
            auto m = a.maslov();
            if (!m || *m != 2) rep.add("disc class " + dc.cls + " has Maslov index != 2");
        }
    return rep;
}

RatMatrix assemble_boundary(const FloerData& data, const Palette& palette) {
    int g = static_cast<int>(data.generators.size());
    RatMatrix m(g, std::vector<Rat>(g, Rat(0)));
    for (const StripCount& sc : data.strips) {
        check_strip(sc, palette);
        m[data.index_of(sc.to)][data.index_of(sc.from)] += sc.count;
    }
    return m;
}

NovMatrix assemble_boundary_novikov(const FloerData& data, const Palette& palette) {
    int g = static_cast<int>(data.generators.size());
    NovMatrix m(g, std::vector<NovikovScalar>(g));
    for (const StripCount& sc : data.strips) {
        check_strip(sc, palette);
        Rat e = strip_energy(sc, palette);
        if (e < 0) throw Error("NegativeEnergy", "class " + sc.cls + " has negative energy");
        if (e == 0 && sc.from != sc.to)
            throw Error("NegativeEnergy", "class " + sc.cls +
                                              " has zero energy between distinct generators");
        int r = data.index_of(sc.to), c = data.index_of(sc.from);
        m[r][c] = m[r][c] + NovikovScalar::term(sc.count, e);
    }
    return m;
}

Rat potential(const FloerData& data, int lagrangian,
              const std::map<std::string, Rat>& rho, const Palette& palette) {
    const auto& side = lagrangian == 0 ? data.discs_L0 : data.discs_L1;
    Rat total = 0;
    for (const DiscCount& dc : side) {
        const ClassAtom& a = palette.at(dc.cls);
        auto m = a.maslov();
        if (!m || *m != 2)
            throw Error("WrongMaslov", "class " + dc.cls + " listed with Maslov index != 2");
        std::string tag = dc.boundary_tag.empty() ? dc.cls : dc.boundary_tag;
        auto it = rho.find(tag);
        Rat weight = it == rho.end() ? Rat(1) : it->second;
        total += weight * dc.count;
    }
    return total;
}

DSquaredAudit d_squared_audit(const FloerData& data, const Palette& palette) {
    DSquaredAudit audit;
    audit.expected_defect =
        potential(data, 1, {}, palette) - potential(data, 0, {}, palette);
    RatMatrix d = assemble_boundary(data, palette);
    int g = static_cast<int>(d.size());
    RatMatrix sq(g, std::vector<Rat>(g, Rat(0)));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k) sq[i][j] += d[i][k] * d[k][j];
    audit.is_scalar_identity = true;
    audit.observed_scalar = g > 0 ? sq[0][0] : Rat(0);
    for (int i = 0; i < g && audit.is_scalar_identity; ++i)
        for (int j = 0; j < g; ++j) {
            if (i == j && sq[i][j] != audit.observed_scalar) {
                audit.is_scalar_identity = false;
                audit.offenders.push_back("diagonal entry (" + data.generators[i].id + "," +
                                          data.generators[j].id + ") = " +
                                          rat_to_string(sq[i][j]));
                break;
            }
            if (i != j && sq[i][j] != 0) {
                audit.is_scalar_identity = false;
                audit.offenders.push_back("off-diagonal entry (" + data.generators[i].id +
                                          "," + data.generators[j].id + ") = " +
                                          rat_to_string(sq[i][j]));
                break;
            }
        }
    audit.matches_expected =
        audit.is_scalar_identity && audit.observed_scalar == audit.expected_defect;
    return audit;
}

namespace {

long rational_rank(RatMatrix m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    long rank = 0;
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
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

} // namespace

FloerHomology floer_homology(const FloerData& data, const Palette& palette,
                             BoundaryMode mode) {
    DSquaredAudit audit = d_squared_audit(data, palette);
    if (!audit.is_scalar_identity || audit.observed_scalar != 0 || !audit.matches_expected)
        throw Error("NonzeroDefect", "the obstruction audit must pass with a zero defect");
    FloerHomology hf;
    int g = static_cast<int>(data.generators.size());
    if (mode == BoundaryMode::Rational) {
        RatMatrix d = assemble_boundary(data, palette);
        hf.rank = g - 2 * rational_rank(d);
    } else {
        NovMatrix d = assemble_boundary_novikov(data, palette);
        Decomposition dec = homology_decomposition(d);
        hf.rank = dec.betti;
        hf.torsion = dec.torsion;
    }
    hf.rank_bound_ok = hf.rank <= g;
    return hf;
}

MonotonicityAudit monotonicity_audit(const FloerData& data, const Palette& palette) {
    MonotonicityAudit audit;
    audit.consistent = true;
    for (const StripCount& sc : data.strips) {
        if (palette.at(sc.cls).pair_D != 0) {
            audit.consistent = false;
            audit.witnesses.push_back("class " + sc.cls + " meets the divisor");
            continue;
        }
        Rat offset = data.monotonicity_c * strip_maslov(sc, palette) -
                     strip_energy(sc, palette);
        auto key = std::make_pair(sc.from, sc.to);
        auto it = audit.offsets.find(key);
        if (it == audit.offsets.end()) {
            audit.offsets[key] = offset;
        } else if (it->second != offset) {
            audit.consistent = false;
            audit.witnesses.push_back("classes between " + sc.from + " and " + sc.to +
                                      " give offsets " + rat_to_string(it->second) + " and " +
                                      rat_to_string(offset));
        }
    }
    // additivity under concatenation
    for (const auto& [pq, cpq] : audit.offsets)
        for (const auto& [qr, cqr] : audit.offsets) {
            if (pq.second != qr.first) continue;
            auto it = audit.offsets.find({pq.first, qr.second});
            if (it != audit.offsets.end() && it->second != cpq + cqr) {
                audit.consistent = false;
                audit.witnesses.push_back("offsets not additive along " + pq.first + " -> " +
                                          pq.second + " -> " + qr.second);
            }
        }
    return audit;
}

} // namespace rgw
