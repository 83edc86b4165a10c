#include "dgc/homology.hpp"

#include <functional>

namespace dgc {

ComplexWindow::ComplexWindow(Field field, int lo, int hi) : field_(field), lo_(lo), hi_(hi) {
    if (hi < lo) throw Error("complex: empty window");
    dims_.assign(hi - lo + 1, 0);
    labels_.assign(hi - lo + 1, {});
    d_.assign(hi - lo, Mat(0, 0));
}

void ComplexWindow::set_dim(int k, int dim, std::vector<std::string> labels) {
    if (!in_range(k)) throw Error("complex: degree outside window");
    dims_[k - lo_] = dim;
    if (!labels.empty() && int(labels.size()) != dim)
        throw Error("complex: label count mismatch");
    labels_[k - lo_] = std::move(labels);
    if (k < hi_) d_[k - lo_] = Mat(dims_[k + 1 - lo_], dim);
    if (k > lo_) d_[k - 1 - lo_] = Mat(dim, dims_[k - 1 - lo_]);
}

const Mat& ComplexWindow::d(int k) const {
    if (k < lo_ || k >= hi_) {
        zero_ = Mat(dim(k + 1), dim(k));
        return zero_;
    }
    return d_[k - lo_];
}

void ComplexWindow::set_d(int k, Mat m) {
    if (k < lo_ || k >= hi_) throw Error("complex: differential outside window");
    if (m.rows() != dim(k + 1) || m.cols() != dim(k))
        throw Error("complex: differential shape mismatch at degree " + std::to_string(k));
    d_[k - lo_] = std::move(m);
}

const std::vector<std::string>& ComplexWindow::labels(int k) const {
    static const std::vector<std::string> empty;
    return in_range(k) ? labels_[k - lo_] : empty;
}

ValidationReport ComplexWindow::validate() const {
    ValidationReport rep;
    for (int k = lo_; k + 1 < hi_; ++k) {
        if (!d(k + 1).mul(field_, d(k)).is_zero())
            rep.violations.push_back("d∘d != 0 at degree " + std::to_string(k));
    }
    return rep;
}

static std::vector<Vec> quotient_reps(const Field& F, const std::vector<Vec>& kernel,
                                      const std::vector<Vec>& image, int ambient_dim) {
    std::vector<Vec> span = image;
    std::vector<Vec> reps;
    for (const auto& v : kernel) {
        std::vector<Vec> trial = span;
        trial.push_back(v);
        Mat m(ambient_dim, int(trial.size()));
        for (size_t c = 0; c < trial.size(); ++c)
            for (int r = 0; r < ambient_dim; ++r) m.at(r, int(c)) = trial[c][r];
        if (rank(F, m) == int(trial.size())) {
            span.push_back(v);
            reps.push_back(v);
        }
    }
    return reps;
}

CohomologyData cohomology(const ComplexWindow& X, int k) {
    if (!(X.lo() < k && k < X.hi()))
        throw Error("cohomology: degree " + std::to_string(k) +
                    " needs both neighbors inside the window");
    const Field& F = X.field();
    CohomologyData out;
    out.boundary = image_basis(F, X.d(k - 1));
    std::vector<Vec> ker = kernel_basis(F, X.d(k));
    out.reps = quotient_reps(F, ker, out.boundary, X.dim(k));
    out.dim = int(out.reps.size());
    return out;
}

Vec class_in(const Field& F, const CohomologyData& H, const Vec& v) {
    std::vector<Vec> span = H.boundary;
    span.insert(span.end(), H.reps.begin(), H.reps.end());
    auto coords = coordinates_in_span(F, span, v);
    if (!coords) throw Error("cohomology: vector is not closed modulo boundaries");
    return Vec(coords->begin() + H.boundary.size(), coords->end());
}

ChainMapWindow::ChainMapWindow(const ComplexWindow& src, const ComplexWindow& tgt)
    : src_(&src), tgt_(&tgt) {
    lo_ = std::min(src.lo(), tgt.lo());
    hi_ = std::max(src.hi(), tgt.hi());
    maps_.reserve(hi_ - lo_ + 1);
    for (int k = lo_; k <= hi_; ++k) maps_.push_back(Mat(tgt.dim(k), src.dim(k)));
}

const Mat& ChainMapWindow::at(int k) const {
    if (k < lo_ || k > hi_) {
        zero_ = Mat(tgt_->dim(k), src_->dim(k));
        return zero_;
    }
    return maps_[k - lo_];
}

void ChainMapWindow::set(int k, Mat m) {
    if (k < lo_ || k > hi_) throw Error("chain map: degree outside window");
    if (m.rows() != tgt_->dim(k) || m.cols() != src_->dim(k))
        throw Error("chain map: shape mismatch at degree " + std::to_string(k));
    maps_[k - lo_] = std::move(m);
}

ValidationReport ChainMapWindow::validate() const {
    ValidationReport rep;
    const Field& F = src_->field();
    for (int k = lo_; k < hi_; ++k) {
        Mat lhs = tgt_->d(k).mul(F, at(k));
        Mat rhs = at(k + 1).mul(F, src_->d(k));
        if (!(lhs == rhs))
            rep.violations.push_back("chain map does not commute with d at degree " +
                                     std::to_string(k));
    }
    return rep;
}

Mat induced_on_cohomology(const ChainMapWindow& phi, int k) {
    const Field& F = phi.source().field();
    CohomologyData Hs = cohomology(phi.source(), k);
    CohomologyData Ht = cohomology(phi.target(), k);
    Mat m(Ht.dim, Hs.dim);
    for (int j = 0; j < Hs.dim; ++j) {
        Vec img = phi.at(k).apply(F, Hs.reps[j]);
        Vec cls = class_in(F, Ht, img);
        for (int r = 0; r < Ht.dim; ++r) m.at(r, j) = cls[r];
    }
    return m;
}

bool is_quasi_iso(const ChainMapWindow& phi, const std::vector<int>& ks) {
    if (!phi.validate().ok()) throw Error("is_quasi_iso: not a chain map");
    const Field& F = phi.source().field();
    for (int k : ks) {
        Mat m = induced_on_cohomology(phi, k);
        if (m.rows() != m.cols() || rank(F, m) != m.rows()) return false;
    }
    return true;
}

ComplexWindow hom_complex(const ConcreteDgCategory& C, ObjId x, ObjId y) {
    const DegreeWindow& w = C.window();
    ComplexWindow X(C.field(), w.lo, w.hi);
    for (int k = w.lo; k <= w.hi; ++k) X.set_dim(k, C.dim(x, y, k), C.labels(x, y, k));
    for (int k = w.lo; k < w.hi; ++k) {
        Mat m(C.dim(x, y, k + 1), C.dim(x, y, k));
        for (int j = 0; j < C.dim(x, y, k); ++j) {
            ConcMorphism de = C.diff_of_basis(BasisRef{x, y, k, j});
            auto it = de.comps.find(k + 1);
            if (it != de.comps.end())
                for (int r = 0; r < m.rows(); ++r) m.at(r, j) = it->second[r];
        }
        X.set_d(k, std::move(m));
    }
    return X;
}

ChainMapWindow functor_hom_map(const ConcFunctor& F, ObjId x, ObjId y, const ComplexWindow& src,
                               const ComplexWindow& tgt) {
    ChainMapWindow phi(src, tgt);
    for (int k = src.lo(); k <= src.hi(); ++k) {
        Mat m(tgt.dim(k), src.dim(k));
        for (int j = 0; j < src.dim(k); ++j) {
            ConcMorphism img = F.apply_basis(BasisRef{x, y, k, j});
            auto it = img.comps.find(k);
            if (it != img.comps.end())
                for (int r = 0; r < m.rows(); ++r) m.at(r, j) = it->second[r];
        }
        phi.set(k, std::move(m));
    }
    return phi;
}

QuasiEquivalenceReport is_quasi_equivalence(const ConcFunctor& F,
                                            const QuasiEquivalenceParams& params) {
    const ConcreteDgCategory& C = F.source();
    const ConcreteDgCategory& D = F.target();
    if (!C.window().complete || !D.window().complete)
        throw Error("is_quasi_equivalence: windows must be asserted complete");
    QuasiEquivalenceReport rep;
    rep.hom_quasi_iso = true;
    for (ObjId x = 0; x < C.object_count(); ++x)
        for (ObjId y = 0; y < C.object_count(); ++y) {
            ComplexWindow src = hom_complex(C, x, y);
            ComplexWindow tgt = hom_complex(D, F.object(x), F.object(y));
            ChainMapWindow phi = functor_hom_map(F, x, y, src, tgt);
            std::vector<int> ks;
            for (int k = std::max(src.lo(), tgt.lo()) + 1; k < std::min(src.hi(), tgt.hi()); ++k)
                ks.push_back(k);
            if (!is_quasi_iso(phi, ks)) {
                rep.hom_quasi_iso = false;
                rep.notes.push_back("hom map not a quasi-iso on (" + C.object_name(x) + "," +
                                    C.object_name(y) + ")");
            }
        }
    // Essential surjectivity of H^0(F): every object of D receives an
    // H^0-isomorphism from some F(x). Candidates are bounded-support
    // combinations of H^0 classes (semi-decision over Q).
    const Field& k = D.field();
    H0Category H0D(D);
    rep.essentially_surjective = true;
    for (ObjId d = 0; d < D.object_count(); ++d) {
        bool hit = false;
        for (ObjId x = 0; x < C.object_count() && !hit; ++x) {
            ObjId fx = F.object(x);
            if (fx == d) { hit = true; break; }  // identity witnesses
            int n = H0D.dim(fx, d);
            if (n == 0) continue;
            auto reps = H0D.basis(fx, d);
            // Enumerate class vectors with bounded support and coefficients.
            std::vector<Scalar> coeffs;
            if (k.kind() == Field::Kind::Prime) {
                for (long c = 1; c < k.characteristic(); ++c) coeffs.push_back(k.from_long(c));
            } else {
                for (long c = 1; c <= params.coeff_bound; ++c) {
                    coeffs.push_back(k.from_long(c));
                    coeffs.push_back(k.from_long(-c));
                }
            }
            std::vector<int> support;
            std::function<void(int, ConcMorphism)> go = [&](int start, ConcMorphism acc) {
                if (hit) return;
                if (!acc.is_zero() && D.is_h0_iso(acc)) {
                    hit = true;
                    return;
                }
                if (int(support.size()) >= params.support_bound) return;
                for (int i = start; i < n && !hit; ++i) {
                    support.push_back(i);
                    for (const auto& c : coeffs) {
                        go(i + 1, D.add(acc, D.scale(c, reps[i])));
                        if (hit) break;
                    }
                    support.pop_back();
                }
            };
            go(0, D.zero(fx, d));
        }
        if (!hit) {
            rep.essentially_surjective = false;
            rep.notes.push_back("no H^0 iso onto object '" + D.object_name(d) +
                                "' found within search bounds");
        }
    }
    return rep;
}

}  // namespace dgc
