// Ordinary tensor product C⊗D. The concrete⊗concrete case materializes a
// ConcreteDgCategory; the cases with presented factors keep morphisms as
// linear combinations of pure tensors (word ⊗ right-key), where the
// interchange law (f⊗id)(id⊗g) = (-1)^{|f||g|}(id⊗g)(f⊗id) holds by
// construction.
#pragma once

#include "dgc/concrete.hpp"
#include "dgc/presentation.hpp"

#include <map>

namespace dgc {

ConcreteDgCategory tensor_product_concrete(const ConcreteDgCategory& C,
                                           const ConcreteDgCategory& D);

// Right-factor access used by the pair representation.
struct ConcreteSide {
    using Key = BasisRef;
    const ConcreteDgCategory* D;

    int degree(const Key& k) const { return k.deg; }
    ObjId src(const Key& k) const { return k.src; }
    ObjId tgt(const Key& k) const { return k.tgt; }
    bool is_identity(const Key& k) const { return D->is_identity_ref(k); }
    Key identity_key(ObjId y) const { return D->identity_ref(y); }
    std::map<Key, Scalar> expand(const ConcMorphism& m) const {
        std::map<Key, Scalar> out;
        for (const auto& [deg, v] : m.comps)
            for (int i = 0; i < int(v.size()); ++i)
                if (!D->field().is_zero(v[i])) out[Key{m.src, m.tgt, deg, i}] = v[i];
        return out;
    }
    std::map<Key, Scalar> compose(const Key& g, const Key& f) const {
        return expand(D->compose_basis(g, f));
    }
    std::map<Key, Scalar> diff(const Key& k) const { return expand(D->diff_of_basis(k)); }
    std::string to_string(const Key& k) const { return D->label_of(k); }
};

struct PresentedSide {
    using Key = Word;
    const SemiFreePresentation* P;

    int degree(const Key& w) const { return P->word_degree(w); }
    ObjId src(const Key& w) const { return P->word_src(w); }
    ObjId tgt(const Key& w) const { return P->word_tgt(w); }
    bool is_identity(const Key& w) const { return w.is_identity(); }
    Key identity_key(ObjId y) const { return Word{y, {}}; }
    std::map<Key, Scalar> expand(const FreeMorphism& m) const {
        return std::map<Key, Scalar>(m.terms.begin(), m.terms.end());
    }
    std::map<Key, Scalar> compose(const Key& g, const Key& f) const {
        return expand(P->compose(P->from_word(g, Scalar(1)), P->from_word(f, Scalar(1))));
    }
    std::map<Key, Scalar> diff(const Key& w) const {
        return expand(P->differential(P->from_word(w, Scalar(1))));
    }
    std::string to_string(const Key& w) const { return P->word_to_string(w); }
};

struct ObjPair {
    ObjId c = 0;
    ObjId d = 0;
    auto operator<=>(const ObjPair&) const = default;
};

// C presented on the left, Side on the right.
template <class Side>
class TensorOfPresentation {
public:
    struct TermKey {
        Word left;
        typename Side::Key right;
        auto operator<=>(const TermKey&) const = default;
    };
    struct Mor {
        ObjPair src, tgt;
        std::map<TermKey, Scalar> terms;
        bool is_zero() const { return terms.empty(); }
        bool operator==(const Mor& o) const {
            return src == o.src && tgt == o.tgt && terms == o.terms;
        }
    };

    TensorOfPresentation(const SemiFreePresentation& C, Side side)
        : C_(&C), side_(side), field_(C.field()) {}

    const SemiFreePresentation& left() const { return *C_; }
    const Side& right_side() const { return side_; }

    Mor zero(ObjPair s, ObjPair t) const { return Mor{s, t, {}}; }
    Mor identity(ObjPair x) const {
        Mor m = zero(x, x);
        m.terms[TermKey{Word{x.c, {}}, side_.identity_key(x.d)}] = field_.one();
        return m;
    }
    Mor pure(const Word& w, const typename Side::Key& r, const Scalar& c) const {
        Mor m = zero(ObjPair{C_->word_src(w), side_.src(r)},
                     ObjPair{C_->word_tgt(w), side_.tgt(r)});
        insert(m, TermKey{w, r}, c);
        return m;
    }

    Mor add(const Mor& a, const Mor& b) const {
        if (a.src != b.src || a.tgt != b.tgt) throw Error("tensor: add endpoint mismatch");
        Mor r = a;
        for (const auto& [k, c] : b.terms) insert(r, k, c);
        return r;
    }
    Mor sub(const Mor& a, const Mor& b) const { return add(a, scale(field_.from_long(-1), b)); }
    Mor scale(const Scalar& c, const Mor& m) const {
        Mor r = zero(m.src, m.tgt);
        if (field_.is_zero(c)) return r;
        for (const auto& [k, x] : m.terms) insert(r, k, field_.mul(c, x));
        return r;
    }

    int term_degree(const TermKey& k) const {
        return C_->word_degree(k.left) + side_.degree(k.right);
    }

    // compose(g, f) = f first; Koszul sign from the right factor of g passing
    // the left factor of f.
    Mor compose(const Mor& g, const Mor& f) const {
        if (f.tgt != g.src) throw Error("tensor: non-composable morphisms");
        Mor r = zero(f.src, g.tgt);
        for (const auto& [kf, cf] : f.terms)
            for (const auto& [kg, cg] : g.terms) {
                int sign_exp = side_.degree(kg.right) * C_->word_degree(kf.left);
                Scalar c = field_.mul(cf, cg);
                if (sign_exp % 2 != 0) c = field_.neg(c);
                FreeMorphism lw = C_->compose(C_->from_word(kg.left, Scalar(1)),
                                              C_->from_word(kf.left, Scalar(1)));
                auto rw = side_.compose(kg.right, kf.right);
                for (const auto& [wl, cl] : lw.terms)
                    for (const auto& [wr, cr] : rw)
                        insert(r, TermKey{wl, wr}, field_.mul(c, field_.mul(cl, cr)));
            }
        return r;
    }

    // d(f⊗g) = df⊗g + (-1)^{|f|} f⊗dg.
    Mor differential(const Mor& m) const {
        Mor r = zero(m.src, m.tgt);
        for (const auto& [k, c] : m.terms) {
            FreeMorphism dl = C_->differential(C_->from_word(k.left, Scalar(1)));
            for (const auto& [wl, cl] : dl.terms)
                insert(r, TermKey{wl, k.right}, field_.mul(c, cl));
            Scalar sgn = (C_->word_degree(k.left) % 2 != 0) ? field_.from_long(-1) : field_.one();
            for (const auto& [wr, cr] : side_.diff(k.right))
                insert(r, TermKey{k.left, wr}, field_.mul(c, field_.mul(sgn, cr)));
        }
        return r;
    }

    bool is_zero(const Mor& m) const { return m.is_zero(); }
    bool eq(const Mor& a, const Mor& b) const { return a == b; }

    std::string to_string(const Mor& m) const {
        if (m.is_zero()) return "0";
        std::string s;
        for (const auto& [k, c] : m.terms) {
            if (!s.empty()) s += " + ";
            s += field_.to_string(c) + "*(" + C_->word_to_string(k.left) + ")⊗(" +
                 side_.to_string(k.right) + ")";
        }
        return s;
    }

private:
    void insert(Mor& m, const TermKey& k, const Scalar& c) const {
        if (field_.is_zero(c)) return;
        auto it = m.terms.find(k);
        if (it == m.terms.end()) {
            m.terms.emplace(k, c);
        } else {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) m.terms.erase(it);
        }
    }

    const SemiFreePresentation* C_;
    Side side_;
    Field field_;
};

using PresConcTensor = TensorOfPresentation<ConcreteSide>;
using PresPresTensor = TensorOfPresentation<PresentedSide>;

}  // namespace dgc
