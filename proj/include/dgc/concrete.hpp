// Concrete dg categories: finite graded hom bases, differential and
// composition tables, exact H^0 computations and Kontsevich-style
// invertibility certificates.
//
// Every object's identity is basis element 0 of hom^0(x,x); normalized
// constructions rely on that.
#pragma once

#include "dgc/linalg.hpp"
#include "dgc/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace dgc {

struct BasisRef {
    ObjId src = 0;
    ObjId tgt = 0;
    int deg = 0;
    int idx = 0;
    auto operator<=>(const BasisRef&) const = default;
};

// Coordinates in the graded hom basis, one vector per degree; zero components absent.
struct ConcMorphism {
    ObjId src = 0;
    ObjId tgt = 0;
    std::map<int, Vec> comps;

    bool is_zero() const { return comps.empty(); }
    bool operator==(const ConcMorphism& o) const {
        return src == o.src && tgt == o.tgt && comps == o.comps;
    }
};

struct DegreeWindow {
    int lo = 0;
    int hi = 0;
    bool complete = true;  // caller-asserted: homs vanish outside [lo, hi]
    bool contains(int k) const { return lo <= k && k <= hi; }
};

struct H0IsoCertificate {
    ConcMorphism g;    // closed degree 0 inverse class
    ConcMorphism h_x;  // gf = id + d h_x
    ConcMorphism h_y;  // fg = id + d h_y
};

class ConcreteDgCategory {
public:
    ConcreteDgCategory(Field field, DegreeWindow window) : field_(field), window_(window) {}

    const Field& field() const { return field_; }
    const DegreeWindow& window() const { return window_; }

    ObjId add_object(const std::string& name);
    BasisRef add_basis_element(ObjId src, ObjId tgt, int deg, const std::string& label);

    int object_count() const { return int(object_names_.size()); }
    const std::string& object_name(ObjId x) const { return object_names_.at(x); }
    std::optional<ObjId> find_object(const std::string& name) const;

    int dim(ObjId src, ObjId tgt, int deg) const;
    const std::vector<std::string>& labels(ObjId src, ObjId tgt, int deg) const;
    std::optional<BasisRef> find_basis(ObjId src, ObjId tgt, const std::string& label) const;
    bool is_identity_ref(const BasisRef& b) const {
        return b.src == b.tgt && b.deg == 0 && b.idx == 0;
    }
    BasisRef identity_ref(ObjId x) const { return BasisRef{x, x, 0, 0}; }
    // All basis elements src -> tgt (all degrees in window), sorted.
    std::vector<BasisRef> basis_of(ObjId src, ObjId tgt) const;
    std::vector<BasisRef> all_basis() const;

    void set_diff(const BasisRef& b, ConcMorphism value);
    void set_comp(const BasisRef& g, const BasisRef& f, ConcMorphism value);  // g after f

    // --- morphism algebra ---
    ConcMorphism zero(ObjId src, ObjId tgt) const { return ConcMorphism{src, tgt, {}}; }
    ConcMorphism identity(ObjId x) const;
    ConcMorphism basis_morphism(const BasisRef& b) const;
    ConcMorphism from_component(ObjId src, ObjId tgt, int deg, Vec coords) const;
    ConcMorphism add(const ConcMorphism& a, const ConcMorphism& b) const;
    ConcMorphism sub(const ConcMorphism& a, const ConcMorphism& b) const;
    ConcMorphism scale(const Scalar& c, const ConcMorphism& m) const;
    ConcMorphism compose(const ConcMorphism& g, const ConcMorphism& f) const;
    ConcMorphism compose_basis(const BasisRef& g, const BasisRef& f) const;
    ConcMorphism differential(const ConcMorphism& m) const;
    ConcMorphism diff_of_basis(const BasisRef& b) const;
    bool is_zero(const ConcMorphism& m) const { return m.is_zero(); }
    bool eq(const ConcMorphism& a, const ConcMorphism& b) const { return a == b; }
    std::optional<int> homogeneous_degree(const ConcMorphism& m) const;
    Scalar coefficient(const ConcMorphism& m, const BasisRef& b) const;

    std::string to_string(const ConcMorphism& m) const;
    std::string label_of(const BasisRef& b) const;

    // d^2 = 0, Leibniz on basis pairs, associativity on basis triples, units.
    ValidationReport validate() const;

    // Exact invertibility test in H^0 with certificate (Kontsevich data comes
    // from kontsevich_correct applied on top of this).
    std::optional<H0IsoCertificate> is_h0_iso(const ConcMorphism& f) const;

private:
    void check_window(int deg, const std::string& what) const;
    ConcMorphism reduced(ConcMorphism m) const;

    Field field_;
    DegreeWindow window_;
    std::vector<std::string> object_names_;
    std::map<std::tuple<ObjId, ObjId, int>, std::vector<std::string>> basis_;
    std::map<BasisRef, ConcMorphism> diff_;
    std::map<std::pair<BasisRef, BasisRef>, ConcMorphism> comp_;
};

// H^0(C): representatives of cohomology classes of closed degree-0 morphisms
// per object pair, with induced composition.
class H0Category {
public:
    H0Category(const ConcreteDgCategory& C);

    int dim(ObjId x, ObjId y) const;
    // Representative closed morphisms of the H^0 basis classes.
    std::vector<ConcMorphism> basis(ObjId x, ObjId y) const;
    // Class coordinates of a closed degree-0 morphism.
    Vec class_of(const ConcMorphism& f) const;
    Vec compose_classes(ObjId x, ObjId y, ObjId z, const Vec& g, const Vec& f) const;
    Vec identity_class(ObjId x) const;

private:
    struct PairData {
        std::vector<Vec> reps;      // closed degree-0 vectors spanning H^0
        std::vector<Vec> boundary;  // image of d^{-1}
    };
    const PairData& pair(ObjId x, ObjId y) const;
    const ConcreteDgCategory& C_;
    std::map<std::pair<ObjId, ObjId>, PairData> pairs_;
};

// --- §3.3 building blocks ---

// The one-object dg category with endomorphisms k.
ConcreteDgCategory unit_category(const Field& F);
// C(n): objects a, b; C(n)(a,b) one-dimensional in degree 1-n, zero differential.
ConcreteDgCategory build_Cn(const Field& F, int n);
// P(n): objects a', b'; P(n)(a',b') = D^n, the cone of id on k[n-1].
ConcreteDgCategory build_Pn(const Field& F, int n);

// Degreewise-linear dg functor between concrete categories.
class ConcFunctor {
public:
    ConcFunctor(const ConcreteDgCategory& src, const ConcreteDgCategory& tgt)
        : src_(&src), tgt_(&tgt), obj_map_(src.object_count(), 0) {}

    const ConcreteDgCategory& source() const { return *src_; }
    const ConcreteDgCategory& target() const { return *tgt_; }

    void set_object(ObjId x, ObjId fx) { obj_map_.at(x) = fx; }
    ObjId object(ObjId x) const { return obj_map_.at(x); }
    void set_basis_image(const BasisRef& b, ConcMorphism image);

    ConcMorphism apply(const ConcMorphism& m) const;
    ConcMorphism apply_basis(const BasisRef& b) const;

    // Degree 0, chain map, multiplicative, unit-preserving — checked exactly.
    ValidationReport validate() const;

    static ConcFunctor identity_functor(const ConcreteDgCategory& C);

private:
    const ConcreteDgCategory* src_;
    const ConcreteDgCategory* tgt_;
    std::vector<ObjId> obj_map_;
    std::map<BasisRef, ConcMorphism> images_;
};

// s(n): C(n) -> P(n), generator to the closed summand of D^n.
ConcFunctor build_sn(const ConcreteDgCategory& Cn, const ConcreteDgCategory& Pn, int n);

}  // namespace dgc
