#include "retrokit/charact.hpp"

namespace rk {

VMap span_retro_to_lifting(const SpanInstance& Sp, const Retrocell& r) {
    const Cell& c = r.under.cell;
    VMap out;
    for (auto& x : SpanInstance::apex(c.left)) {
        // x = [a t] in A x_B T;  image = [s, sigma1 s]
        Value y = SpanInstance::cell_apply(c, x);
        out[vpair(x.list()[1], x.list()[0])] = y.list()[0];
    }
    return out;
}

Retrocell span_lifting_to_retro(const SpanInstance& Sp, const HArrow& f, const VArrow& S,
                                const VArrow& T, const HArrow& g, const VMap& beta) {
    VArrow fs = Sp.companion(f), gs = Sp.companion(g);
    VArrow l = Sp.vcomp(T, fs), rr = Sp.vcomp(gs, S);
    Boundary bd{Sp.hid(f.src), l, rr, Sp.hid(g.dst)};
    VMap m;
    for (auto& x : SpanInstance::apex(l)) {
        Value s = beta.at(vpair(x.list()[1], x.list()[0]));
        m[x] = vpair(s, SpanInstance::leg1(S, s));
    }
    return make_retrocell(Sp, f, S, T, g, Sp.cell(bd, m));
}

VMap span_coretro_to_lifting(const SpanInstance& Sp, const Coretrocell& r) {
    const Cell& c = r.under.cell;
    VMap out;
    for (auto& x : SpanInstance::apex(c.left)) {
        // x = [t c] in T x_D C;  image = [sigma0 s, s]
        Value y = SpanInstance::cell_apply(c, x);
        out[vpair(x.list()[0], x.list()[1])] = y.list()[1];
    }
    return out;
}

Coretrocell span_lifting_to_coretro(const SpanInstance& Sp, const HArrow& f, const VArrow& S,
                                    const VArrow& T, const HArrow& g, const VMap& beta) {
    VArrow fc = Sp.conjoint(f), gc = Sp.conjoint(g);
    VArrow l = Sp.vcomp(gc, T), rr = Sp.vcomp(S, fc);
    Boundary bd{Sp.hid(f.dst), l, rr, Sp.hid(g.src)};
    VMap m;
    for (auto& x : SpanInstance::apex(l)) {
        Value s = beta.at(vpair(x.list()[0], x.list()[1]));
        m[x] = vpair(SpanInstance::leg0(S, s), s);
    }
    return make_coretrocell(Sp, f, S, T, g, Sp.cell(bd, m));
}

MatCellData mat_retro_components(const MatInstance& M, const Retrocell& r) {
    const Cell& c = r.under.cell;
    MatCellData out;
    for (auto& a : c.left.src.list())
        for (auto& d : c.left.dst.list())
            for (auto& from : MatInstance::basis(c.left, a, d)) {
                std::vector<std::pair<Value, int>> img;
                for (auto& to : MatInstance::basis(c.right, a, d)) {
                    int k = MatInstance::coeff(c, a, d, from, to);
                    if (k != 0) img.push_back({to, k});
                }
                out[{a, d, from}] = img;
            }
    return out;
}

Retrocell mat_retro_from_components(const MatInstance& M, const HArrow& f, const VArrow& V,
                                    const VArrow& W, const HArrow& g,
                                    const MatCellData& comp) {
    VArrow fs = M.companion(f), gs = M.companion(g);
    Boundary bd{M.hid(f.src), M.vcomp(W, fs), M.vcomp(gs, V), M.hid(g.dst)};
    return make_retrocell(M, f, V, W, g, M.cell(bd, comp));
}

std::map<std::array<Value, 3>, Value> prof_retro_lifting(const ProfInstance& Pr,
                                                         const Retrocell& r) {
    const Cell& c = r.under.cell;
    FinCat A = FinCat::decode(c.left.src);
    FinCat D = FinCat::decode(c.left.dst);
    std::map<std::array<Value, 3>, Value> out;
    for (auto& a : A.objects)
        for (auto& d : D.objects)
            for (auto& el : ProfInstance::elements(c.left, a, d))
                out[{a, d, el}] = ProfInstance::cell_apply(c, a, d, el);
    return out;
}

}  // namespace rk
