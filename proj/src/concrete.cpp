#include "dgc/concrete.hpp"

#include <algorithm>
#include <sstream>

namespace dgc {

ObjId ConcreteDgCategory::add_object(const std::string& name) {
    if (find_object(name)) throw Error("concrete: duplicate object '" + name + "'");
    object_names_.push_back(name);
    ObjId x = ObjId(object_names_.size() - 1);
    basis_[{x, x, 0}].push_back("id_" + name);
    return x;
}

std::optional<ObjId> ConcreteDgCategory::find_object(const std::string& name) const {
    for (size_t i = 0; i < object_names_.size(); ++i)
        if (object_names_[i] == name) return ObjId(i);
    return std::nullopt;
}

void ConcreteDgCategory::check_window(int deg, const std::string& what) const {
    if (!window_.contains(deg))
        throw Error("concrete: " + what + " at degree " + std::to_string(deg) +
                    " outside window [" + std::to_string(window_.lo) + "," +
                    std::to_string(window_.hi) + "]");
}

BasisRef ConcreteDgCategory::add_basis_element(ObjId src, ObjId tgt, int deg,
                                               const std::string& label) {
    check_window(deg, "basis element '" + label + "'");
    auto& labels = basis_[{src, tgt, deg}];
    for (const auto& l : labels)
        if (l == label) throw Error("concrete: duplicate basis label '" + label + "'");
    labels.push_back(label);
    return BasisRef{src, tgt, deg, int(labels.size() - 1)};
}

int ConcreteDgCategory::dim(ObjId src, ObjId tgt, int deg) const {
    auto it = basis_.find({src, tgt, deg});
    return it == basis_.end() ? 0 : int(it->second.size());
}

const std::vector<std::string>& ConcreteDgCategory::labels(ObjId src, ObjId tgt, int deg) const {
    static const std::vector<std::string> empty;
    auto it = basis_.find({src, tgt, deg});
    return it == basis_.end() ? empty : it->second;
}

std::optional<BasisRef> ConcreteDgCategory::find_basis(ObjId src, ObjId tgt,
                                                       const std::string& label) const {
    for (int deg = window_.lo; deg <= window_.hi; ++deg) {
        const auto& ls = labels(src, tgt, deg);
        for (size_t i = 0; i < ls.size(); ++i)
            if (ls[i] == label) return BasisRef{src, tgt, deg, int(i)};
    }
    return std::nullopt;
}

std::vector<BasisRef> ConcreteDgCategory::basis_of(ObjId src, ObjId tgt) const {
    std::vector<BasisRef> out;
    for (int deg = window_.lo; deg <= window_.hi; ++deg)
        for (int i = 0; i < dim(src, tgt, deg); ++i) out.push_back(BasisRef{src, tgt, deg, i});
    return out;
}

std::vector<BasisRef> ConcreteDgCategory::all_basis() const {
    std::vector<BasisRef> out;
    for (ObjId x = 0; x < object_count(); ++x)
        for (ObjId y = 0; y < object_count(); ++y) {
            auto b = basis_of(x, y);
            out.insert(out.end(), b.begin(), b.end());
        }
    return out;
}

ConcMorphism ConcreteDgCategory::reduced(ConcMorphism m) const {
    for (auto it = m.comps.begin(); it != m.comps.end();) {
        if (vec_is_zero(it->second))
            it = m.comps.erase(it);
        else
            ++it;
    }
    return m;
}

void ConcreteDgCategory::set_diff(const BasisRef& b, ConcMorphism value) {
    if (value.src != b.src || value.tgt != b.tgt) throw Error("concrete: diff endpoint mismatch");
    for (const auto& [k, v] : value.comps)
        if (k != b.deg + 1) throw Error("concrete: diff of degree-" + std::to_string(b.deg) +
                                        " element must be homogeneous of degree " +
                                        std::to_string(b.deg + 1));
    if (is_identity_ref(b) && !value.is_zero()) throw Error("concrete: d(id) must vanish");
    diff_[b] = reduced(std::move(value));
}

void ConcreteDgCategory::set_comp(const BasisRef& g, const BasisRef& f, ConcMorphism value) {
    if (f.tgt != g.src) throw Error("concrete: set_comp of non-composable pair");
    if (value.src != f.src || value.tgt != g.tgt) throw Error("concrete: comp endpoint mismatch");
    if (is_identity_ref(g) || is_identity_ref(f))
        throw Error("concrete: compositions with identities are implicit");
    comp_[{g, f}] = reduced(std::move(value));
}

ConcMorphism ConcreteDgCategory::identity(ObjId x) const {
    return basis_morphism(identity_ref(x));
}

ConcMorphism ConcreteDgCategory::basis_morphism(const BasisRef& b) const {
    if (b.idx >= dim(b.src, b.tgt, b.deg)) throw Error("concrete: basis index out of range");
    ConcMorphism m = zero(b.src, b.tgt);
    Vec v(dim(b.src, b.tgt, b.deg), field_.zero());
    v[b.idx] = field_.one();
    m.comps[b.deg] = std::move(v);
    return m;
}

ConcMorphism ConcreteDgCategory::from_component(ObjId src, ObjId tgt, int deg, Vec coords) const {
    if (int(coords.size()) != dim(src, tgt, deg)) throw Error("concrete: component size mismatch");
    ConcMorphism m = zero(src, tgt);
    m.comps[deg] = std::move(coords);
    return reduced(std::move(m));
}

ConcMorphism ConcreteDgCategory::add(const ConcMorphism& a, const ConcMorphism& b) const {
    if (a.src != b.src || a.tgt != b.tgt) throw Error("concrete: add endpoint mismatch");
    ConcMorphism r = a;
    for (const auto& [k, v] : b.comps) {
        auto it = r.comps.find(k);
        if (it == r.comps.end())
            r.comps[k] = v;
        else
            it->second = vec_add(field_, it->second, v);
    }
    return reduced(std::move(r));
}

ConcMorphism ConcreteDgCategory::sub(const ConcMorphism& a, const ConcMorphism& b) const {
    return add(a, scale(field_.from_long(-1), b));
}

ConcMorphism ConcreteDgCategory::scale(const Scalar& c, const ConcMorphism& m) const {
    ConcMorphism r = zero(m.src, m.tgt);
    if (field_.is_zero(c)) return r;
    for (const auto& [k, v] : m.comps) r.comps[k] = vec_scale(field_, c, v);
    return reduced(std::move(r));
}

Scalar ConcreteDgCategory::coefficient(const ConcMorphism& m, const BasisRef& b) const {
    auto it = m.comps.find(b.deg);
    if (it == m.comps.end()) return field_.zero();
    return it->second.at(b.idx);
}

ConcMorphism ConcreteDgCategory::compose_basis(const BasisRef& g, const BasisRef& f) const {
    if (f.tgt != g.src) throw Error("concrete: non-composable basis pair");
    if (is_identity_ref(f)) return basis_morphism(g);
    if (is_identity_ref(g)) return basis_morphism(f);
    auto it = comp_.find({g, f});
    if (it == comp_.end()) return zero(f.src, g.tgt);
    return it->second;
}

ConcMorphism ConcreteDgCategory::compose(const ConcMorphism& g, const ConcMorphism& f) const {
    if (f.tgt != g.src) throw Error("concrete: non-composable morphisms");
    ConcMorphism r = zero(f.src, g.tgt);
    for (const auto& [kf, vf] : f.comps)
        for (const auto& [kg, vg] : g.comps)
            for (int i = 0; i < int(vf.size()); ++i) {
                if (field_.is_zero(vf[i])) continue;
                for (int j = 0; j < int(vg.size()); ++j) {
                    if (field_.is_zero(vg[j])) continue;
                    ConcMorphism prod = compose_basis(BasisRef{g.src, g.tgt, kg, j},
                                                      BasisRef{f.src, f.tgt, kf, i});
                    r = add(r, scale(field_.mul(vg[j], vf[i]), prod));
                }
            }
    return r;
}

ConcMorphism ConcreteDgCategory::diff_of_basis(const BasisRef& b) const {
    auto it = diff_.find(b);
    if (it == diff_.end()) return zero(b.src, b.tgt);
    return it->second;
}

ConcMorphism ConcreteDgCategory::differential(const ConcMorphism& m) const {
    ConcMorphism r = zero(m.src, m.tgt);
    for (const auto& [k, v] : m.comps)
        for (int i = 0; i < int(v.size()); ++i) {
            if (field_.is_zero(v[i])) continue;
            r = add(r, scale(v[i], diff_of_basis(BasisRef{m.src, m.tgt, k, i})));
        }
    return r;
}

std::optional<int> ConcreteDgCategory::homogeneous_degree(const ConcMorphism& m) const {
    if (m.comps.empty()) return std::nullopt;
    if (m.comps.size() > 1) throw Error("concrete: morphism is not homogeneous");
    return m.comps.begin()->first;
}

std::string ConcreteDgCategory::label_of(const BasisRef& b) const {
    return labels(b.src, b.tgt, b.deg).at(b.idx);
}

std::string ConcreteDgCategory::to_string(const ConcMorphism& m) const {
    if (m.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : m.comps)
        for (size_t i = 0; i < v.size(); ++i) {
            if (field_.is_zero(v[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << field_.to_string(v[i]) << "*" << labels(m.src, m.tgt, k)[i] << "@" << k;
        }
    return os.str();
}

ValidationReport ConcreteDgCategory::validate() const {
    ValidationReport rep;
    auto all = all_basis();
    for (const auto& b : all) {
        ConcMorphism dd = differential(diff_of_basis(b));
        if (!dd.is_zero())
            rep.violations.push_back("d^2 != 0 on '" + label_of(b) + "': " + to_string(dd));
        // Differentials leaving a complete window must vanish at the edge.
        if (b.deg == window_.hi && !diff_of_basis(b).is_zero())
            rep.violations.push_back("diff of '" + label_of(b) + "' exits the window");
    }
    // Leibniz: d(g∘f) = dg∘f + (-1)^{|g|} g∘df on all composable basis pairs.
    for (const auto& g : all)
        for (const auto& f : all) {
            if (f.tgt != g.src) continue;
            ConcMorphism lhs = differential(compose_basis(g, f));
            ConcMorphism rhs = compose(diff_of_basis(g), basis_morphism(f));
            Scalar sign = (g.deg % 2 != 0) ? field_.from_long(-1) : field_.one();
            rhs = add(rhs, scale(sign, compose(basis_morphism(g), diff_of_basis(f))));
            if (!eq(lhs, rhs))
                rep.violations.push_back("Leibniz fails on " + label_of(g) + " ∘ " + label_of(f) +
                                         ": d(gf) = " + to_string(lhs) + " vs " + to_string(rhs));
        }
    // Associativity on composable basis triples.
    for (const auto& h : all)
        for (const auto& g : all) {
            if (g.tgt != h.src) continue;
            ConcMorphism hg = compose_basis(h, g);
            for (const auto& f : all) {
                if (f.tgt != g.src) continue;
                ConcMorphism lhs = compose(hg, basis_morphism(f));
                ConcMorphism rhs = compose(basis_morphism(h), compose_basis(g, f));
                if (!eq(lhs, rhs))
                    rep.violations.push_back("associativity fails on " + label_of(h) + ", " +
                                             label_of(g) + ", " + label_of(f));
            }
        }
    return rep;
}

std::optional<H0IsoCertificate> ConcreteDgCategory::is_h0_iso(const ConcMorphism& f) const {
    if (!differential(f).is_zero()) throw Error("is_h0_iso: morphism is not closed");
    auto deg = homogeneous_degree(f);
    if (deg && *deg != 0) throw Error("is_h0_iso: morphism is not of degree 0");
    ObjId x = f.src, y = f.tgt;
    // Unknowns: g in hom^0(y,x), h_x in hom^{-1}(x,x), h_y in hom^{-1}(y,y).
    // Equations: dg = 0, g∘f - d(h_x) = id_x, f∘g - d(h_y) = id_y.
    int ng = dim(y, x, 0), nhx = dim(x, x, -1), nhy = dim(y, y, -1);
    int ndg = dim(y, x, 1), nx0 = dim(x, x, 0), ny0 = dim(y, y, 0);
    int rows = ndg + nx0 + ny0, cols = ng + nhx + nhy;
    Mat A(rows, cols);
    Vec b(rows, field_.zero());
    auto put = [&](int row0, const ConcMorphism& m, int deg_sel, int col) {
        auto it = m.comps.find(deg_sel);
        if (it == m.comps.end()) return;
        for (int r = 0; r < int(it->second.size()); ++r)
            A.at(row0 + r, col) = field_.add(A.at(row0 + r, col), it->second[r]);
    };
    for (int j = 0; j < ng; ++j) {
        ConcMorphism e = basis_morphism(BasisRef{y, x, 0, j});
        put(0, differential(e), 1, j);
        put(ndg, compose(e, f), 0, j);
        put(ndg + nx0, compose(f, e), 0, j);
    }
    for (int j = 0; j < nhx; ++j) {
        ConcMorphism e = basis_morphism(BasisRef{x, x, -1, j});
        ConcMorphism de = scale(field_.from_long(-1), differential(e));
        put(ndg, de, 0, ng + j);
    }
    for (int j = 0; j < nhy; ++j) {
        ConcMorphism e = basis_morphism(BasisRef{y, y, -1, j});
        ConcMorphism de = scale(field_.from_long(-1), differential(e));
        put(ndg + nx0, de, 0, ng + nhx + j);
    }
    ConcMorphism idx = identity(x), idy = identity(y);
    for (int r = 0; r < nx0; ++r) b[ndg + r] = idx.comps.at(0)[r];
    for (int r = 0; r < ny0; ++r) b[ndg + nx0 + r] = idy.comps.at(0)[r];
    auto sol = solve(field_, A, b);
    if (!sol) return std::nullopt;
    H0IsoCertificate cert;
    cert.g = from_component(y, x, 0, Vec(sol->begin(), sol->begin() + ng));
    cert.h_x = nhx ? from_component(x, x, -1, Vec(sol->begin() + ng, sol->begin() + ng + nhx))
                   : zero(x, x);
    cert.h_y = nhy ? from_component(y, y, -1, Vec(sol->begin() + ng + nhx, sol->end()))
                   : zero(y, y);
    return cert;
}

// --- H0Category ---

H0Category::H0Category(const ConcreteDgCategory& C) : C_(C) {
    if (!C.window().contains(-1) || !C.window().contains(1))
        throw Error("h0_category: window must cover degrees -1..1");
    if (!C.window().complete)
        throw Error("h0_category: window completeness not asserted");
    const Field& F = C.field();
    for (ObjId x = 0; x < C.object_count(); ++x)
        for (ObjId y = 0; y < C.object_count(); ++y) {
            int n0 = C.dim(x, y, 0), nm1 = C.dim(x, y, -1), n1 = C.dim(x, y, 1);
            Mat d0(n1, n0), dm1(n0, nm1);
            for (int j = 0; j < n0; ++j) {
                ConcMorphism de = C.diff_of_basis(BasisRef{x, y, 0, j});
                auto it = de.comps.find(1);
                if (it != de.comps.end())
                    for (int r = 0; r < n1; ++r) d0.at(r, j) = it->second[r];
            }
            for (int j = 0; j < nm1; ++j) {
                ConcMorphism de = C.diff_of_basis(BasisRef{x, y, -1, j});
                auto it = de.comps.find(0);
                if (it != de.comps.end())
                    for (int r = 0; r < n0; ++r) dm1.at(r, j) = it->second[r];
            }
            PairData pd;
            pd.boundary = image_basis(F, dm1);
            // Extend the boundary to a basis of ker d0 by elimination.
            std::vector<Vec> ker = kernel_basis(F, d0);
            std::vector<Vec> span = pd.boundary;
            for (const auto& v : ker) {
                std::vector<Vec> trial = span;
                trial.push_back(v);
                Mat m(n0, int(trial.size()));
                for (size_t c = 0; c < trial.size(); ++c)
                    for (int r = 0; r < n0; ++r) m.at(r, int(c)) = trial[c][r];
                if (rank(F, m) == int(trial.size())) {
                    span.push_back(v);
                    pd.reps.push_back(v);
                }
            }
            pairs_[{x, y}] = std::move(pd);
        }
}

const H0Category::PairData& H0Category::pair(ObjId x, ObjId y) const {
    return pairs_.at({x, y});
}

int H0Category::dim(ObjId x, ObjId y) const { return int(pair(x, y).reps.size()); }

std::vector<ConcMorphism> H0Category::basis(ObjId x, ObjId y) const {
    std::vector<ConcMorphism> out;
    for (const auto& v : pair(x, y).reps) out.push_back(C_.from_component(x, y, 0, v));
    return out;
}

Vec H0Category::class_of(const ConcMorphism& f) const {
    if (!C_.differential(f).is_zero()) throw Error("h0: morphism is not closed");
    const PairData& pd = pair(f.src, f.tgt);
    int n0 = C_.dim(f.src, f.tgt, 0);
    Vec v(n0, C_.field().zero());
    auto it = f.comps.find(0);
    if (it != f.comps.end()) v = it->second;
    std::vector<Vec> span = pd.boundary;
    span.insert(span.end(), pd.reps.begin(), pd.reps.end());
    auto coords = coordinates_in_span(C_.field(), span, v);
    if (!coords) throw Error("h0: closed morphism not in ker+im span (inconsistent data)");
    return Vec(coords->begin() + pd.boundary.size(), coords->end());
}

Vec H0Category::compose_classes(ObjId x, ObjId y, ObjId z, const Vec& g, const Vec& f) const {
    const Field& F = C_.field();
    ConcMorphism acc = C_.zero(x, z);
    auto fb = basis(x, y);
    auto gb = basis(y, z);
    for (size_t i = 0; i < fb.size(); ++i)
        for (size_t j = 0; j < gb.size(); ++j) {
            Scalar c = F.mul(g[j], f[i]);
            if (F.is_zero(c)) continue;
            acc = C_.add(acc, C_.scale(c, C_.compose(gb[j], fb[i])));
        }
    return class_of(acc);
}

Vec H0Category::identity_class(ObjId x) const { return class_of(C_.identity(x)); }

// --- builders ---

ConcreteDgCategory unit_category(const Field& F) {
    ConcreteDgCategory C(F, DegreeWindow{0, 0, true});
    C.add_object("e");
    return C;
}

ConcreteDgCategory build_Cn(const Field& F, int n) {
    int d = 1 - n;
    DegreeWindow w{std::min({-1, d - 1}), std::max({1, d + 1}), true};
    ConcreteDgCategory C(F, w);
    ObjId a = C.add_object("a");
    ObjId b = C.add_object("b");
    C.add_basis_element(a, b, d, "u");
    return C;
}

ConcreteDgCategory build_Pn(const Field& F, int n) {
    // P(n)(a',b') = D^n: k in degree -n mapping identically onto k in degree 1-n.
    DegreeWindow w{std::min({-1, -n - 1}), std::max({1, 2 - n}), true};
    ConcreteDgCategory C(F, w);
    ObjId a = C.add_object("a'");
    ObjId b = C.add_object("b'");
    BasisRef lo = C.add_basis_element(a, b, -n, "v");
    C.add_basis_element(a, b, 1 - n, "dv");
    C.set_diff(lo, C.from_component(a, b, 1 - n, {F.one()}));
    return C;
}

ConcFunctor build_sn(const ConcreteDgCategory& Cn, const ConcreteDgCategory& Pn, int n) {
    ConcFunctor s(Cn, Pn);
    s.set_object(0, 0);
    s.set_object(1, 1);
    // The generator goes to the closed summand k[n-1] of D^n, i.e. degree 1-n.
    s.set_basis_image(BasisRef{0, 1, 1 - n, 0},
                      Pn.basis_morphism(*Pn.find_basis(0, 1, "dv")));
    return s;
}

// --- ConcFunctor ---

void ConcFunctor::set_basis_image(const BasisRef& b, ConcMorphism image) {
    if (image.src != object(b.src) || image.tgt != object(b.tgt))
        throw Error("functor: image endpoint mismatch");
    for (const auto& [k, v] : image.comps)
        if (k != b.deg) throw Error("functor: image must preserve degree");
    images_[b] = std::move(image);
}

ConcMorphism ConcFunctor::apply_basis(const BasisRef& b) const {
    if (src_->is_identity_ref(b)) return tgt_->identity(object(b.src));
    auto it = images_.find(b);
    if (it == images_.end()) return tgt_->zero(object(b.src), object(b.tgt));
    return it->second;
}

ConcMorphism ConcFunctor::apply(const ConcMorphism& m) const {
    ConcMorphism r = tgt_->zero(object(m.src), object(m.tgt));
    for (const auto& [k, v] : m.comps)
        for (int i = 0; i < int(v.size()); ++i) {
            if (src_->field().is_zero(v[i])) continue;
            r = tgt_->add(r, tgt_->scale(v[i], apply_basis(BasisRef{m.src, m.tgt, k, i})));
        }
    return r;
}

ValidationReport ConcFunctor::validate() const {
    ValidationReport rep;
    auto all = src_->all_basis();
    for (const auto& b : all) {
        ConcMorphism lhs = apply(src_->diff_of_basis(b));
        ConcMorphism rhs = tgt_->differential(apply_basis(b));
        if (!tgt_->eq(lhs, rhs))
            rep.violations.push_back("functor not a chain map on '" + src_->label_of(b) + "'");
    }
    for (const auto& g : all)
        for (const auto& f : all) {
            if (f.tgt != g.src) continue;
            ConcMorphism lhs = apply(src_->compose_basis(g, f));
            ConcMorphism rhs = tgt_->compose(apply_basis(g), apply_basis(f));
            if (!tgt_->eq(lhs, rhs))
                rep.violations.push_back("functor not multiplicative on " + src_->label_of(g) +
                                         " ∘ " + src_->label_of(f));
        }
    return rep;
}

ConcFunctor ConcFunctor::identity_functor(const ConcreteDgCategory& C) {
    ConcFunctor f(C, C);
    for (ObjId x = 0; x < C.object_count(); ++x) f.set_object(x, x);
    for (const auto& b : C.all_basis())
        if (!C.is_identity_ref(b)) f.set_basis_image(b, C.basis_morphism(b));
    return f;
}

}  // namespace dgc
