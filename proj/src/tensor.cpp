#include "dgc/tensor.hpp"

namespace dgc {

ConcreteDgCategory tensor_product_concrete(const ConcreteDgCategory& C,
                                           const ConcreteDgCategory& D) {
    if (C.field() != D.field()) throw Error("tensor: field mismatch");
    const Field& F = C.field();
    DegreeWindow w{C.window().lo + D.window().lo, C.window().hi + D.window().hi,
                   C.window().complete && D.window().complete};
    ConcreteDgCategory T(F, w);
    auto pair_obj = [&](ObjId x, ObjId x1) { return ObjId(x * D.object_count() + x1); };
    for (ObjId x = 0; x < C.object_count(); ++x)
        for (ObjId x1 = 0; x1 < D.object_count(); ++x1)
            T.add_object(C.object_name(x) + "×" + D.object_name(x1));

    // Basis of hom((x,x1),(y,y1))^k = pairs (f: x->y, g: x1->y1), |f|+|g| = k.
    // The pair (id,id) is the implicit identity added with the object.
    std::map<std::pair<BasisRef, BasisRef>, BasisRef> pair_basis;
    auto add_pairs = [&](ObjId x, ObjId y, ObjId x1, ObjId y1) {
        for (const auto& f : C.basis_of(x, y))
            for (const auto& g : D.basis_of(x1, y1)) {
                if (C.is_identity_ref(f) && D.is_identity_ref(g)) {
                    pair_basis[{f, g}] = T.identity_ref(pair_obj(x, x1));
                    continue;
                }
                BasisRef t = T.add_basis_element(pair_obj(x, x1), pair_obj(y, y1), f.deg + g.deg,
                                                 C.label_of(f) + "⊗" + D.label_of(g));
                pair_basis[{f, g}] = t;
            }
    };
    for (ObjId x = 0; x < C.object_count(); ++x)
        for (ObjId y = 0; y < C.object_count(); ++y)
            for (ObjId x1 = 0; x1 < D.object_count(); ++x1)
                for (ObjId y1 = 0; y1 < D.object_count(); ++y1) add_pairs(x, y, x1, y1);

    auto embed = [&](const ConcMorphism& mf, const ConcMorphism& mg) {
        // Bilinear extension of (f,g) -> basis of T.
        ConcMorphism r = T.zero(pair_obj(mf.src, mg.src), pair_obj(mf.tgt, mg.tgt));
        for (const auto& [kf, vf] : mf.comps)
            for (int i = 0; i < int(vf.size()); ++i) {
                if (F.is_zero(vf[i])) continue;
                for (const auto& [kg, vg] : mg.comps)
                    for (int j = 0; j < int(vg.size()); ++j) {
                        if (F.is_zero(vg[j])) continue;
                        BasisRef t = pair_basis.at({BasisRef{mf.src, mf.tgt, kf, i},
                                                    BasisRef{mg.src, mg.tgt, kg, j}});
                        r = T.add(r, T.scale(F.mul(vf[i], vg[j]), T.basis_morphism(t)));
                    }
            }
        return r;
    };

    // Differentials: d(f⊗g) = df⊗g + (-1)^{|f|} f⊗dg.
    for (const auto& [fg, t] : pair_basis) {
        const auto& [f, g] = fg;
        if (T.is_identity_ref(t)) continue;
        ConcMorphism d1 = embed(C.diff_of_basis(f), D.basis_morphism(g));
        ConcMorphism d2 = embed(C.basis_morphism(f), D.diff_of_basis(g));
        Scalar sgn = (f.deg % 2 != 0) ? F.from_long(-1) : F.one();
        T.set_diff(t, T.add(d1, T.scale(sgn, d2)));
    }
    // Compositions: (f2⊗g2)∘(f1⊗g1) = (-1)^{|g2||f1|} (f2∘f1)⊗(g2∘g1).
    for (const auto& [fg2, t2] : pair_basis) {
        const auto& [f2, g2] = fg2;
        if (T.is_identity_ref(t2)) continue;
        for (const auto& [fg1, t1] : pair_basis) {
            const auto& [f1, g1] = fg1;
            if (T.is_identity_ref(t1)) continue;
            if (f1.tgt != f2.src || g1.tgt != g2.src) continue;
            ConcMorphism prod = embed(C.compose_basis(f2, f1), D.compose_basis(g2, g1));
            Scalar sgn = (g2.deg * f1.deg % 2 != 0) ? F.from_long(-1) : F.one();
            T.set_comp(t2, t1, T.scale(sgn, prod));
        }
    }
    return T;
}

}  // namespace dgc
