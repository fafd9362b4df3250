#include "rgw/palette.hpp"

#include <sstream>

namespace rgw {

std::string space_name(Space s) {
    switch (s) {
    case Space::D: return "D";
    case Space::X: return "X";
    case Space::XL0: return "XL0";
    case Space::XL1: return "XL1";
    case Space::Strip: return "STRIP";
    }
    return "?";
}

Space space_from_name(const std::string& name) {
    if (name == "D") return Space::D;
    if (name == "X") return Space::X;
    if (name == "XL0") return Space::XL0;
    if (name == "XL1") return Space::XL1;
    if (name == "STRIP") return Space::Strip;
    throw Error("BadSpace", "unknown space '" + name + "'");
}

ClassExpr& ClassExpr::operator+=(const ClassExpr& o) {
    for (const auto& [id, c] : o.terms) {
        int v = (terms.count(id) ? terms[id] : 0) + c;
        if (v == 0)
            terms.erase(id);
        else
            terms[id] = v;
    }
    return *this;
}

ClassExpr ClassExpr::operator-() const {
    ClassExpr r;
    for (const auto& [id, c] : terms) r.terms[id] = -c;
    return r;
}

ClassExpr ClassExpr::operator*(int c) const {
    ClassExpr r;
    if (c != 0)
        for (const auto& [id, co] : terms) r.terms[id] = c * co;
    return r;
}

std::string ClassExpr::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, c] : terms) {
        if (c >= 0 && !first) os << '+';
        if (c == -1)
            os << '-';
        else if (c != 1)
            os << c << '*';
        os << id;
        first = false;
    }
    return os.str();
}

void Palette::add(const ClassAtom& atom) {
    if (atom.id.empty()) throw Error("BadAtom", "atom with empty id");
    atoms_[atom.id] = atom;
}

const ClassAtom& Palette::at(const std::string& id) const {
    auto it = atoms_.find(id);
    if (it == atoms_.end()) throw Error("UnknownAtom", "no class '" + id + "' in palette");
    return it->second;
}

Pairings Palette::pairings(const ClassExpr& e) const {
    Pairings p;
    p.maslov = 0;
    for (const auto& [id, c] : e.terms) {
        const ClassAtom& a = at(id);
        p.pair_D += c * a.pair_D;
        p.c1_X += c * a.c1_X;
        p.area += Rat(c) * a.area;
        if (p.maslov) {
            auto m = a.maslov();
            if (m)
                *p.maslov += c * *m;
            else
                p.maslov.reset();
        }
    }
    p.c1_D = p.c1_X - p.pair_D;
    return p;
}

int Palette::maslov(const ClassExpr& e) const {
    Pairings p = pairings(e);
    if (!p.maslov)
        throw Error("MaslovUndefined",
                    "expression " + e.to_string() + " involves divisor classes");
    return *p.maslov;
}

Report Palette::validate() const {
    Report rep;
    for (const auto& [id, a] : atoms_) {
        if (a.area < 0) rep.add("atom " + id + ": negative area " + rat_to_string(a.area));
        if ((a.space == Space::XL0 || a.space == Space::XL1 || a.space == Space::Strip) &&
            !a.maslov_raw)
            rep.add("atom " + id + ": " + space_name(a.space) + " class without Maslov index");
        if (a.space == Space::Strip && (a.strip_from.empty() || a.strip_to.empty()))
            rep.add("atom " + id + ": STRIP class without endpoints");
        if (a.space != Space::Strip && (!a.strip_from.empty() || !a.strip_to.empty()))
            rep.add("atom " + id + ": endpoints on non-STRIP class");
    }
    return rep;
}

} // namespace rgw
