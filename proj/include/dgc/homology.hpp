// Exact cochain-complex linear algebra on finite degree windows.
#pragma once

#include "dgc/concrete.hpp"
#include "dgc/linalg.hpp"

#include <vector>

namespace dgc {

class ComplexWindow {
public:
    ComplexWindow(Field field, int lo, int hi);

    const Field& field() const { return field_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int dim(int k) const { return in_range(k) ? dims_[k - lo_] : 0; }
    void set_dim(int k, int dim, std::vector<std::string> labels = {});
    // d_k : hom^k -> hom^{k+1}; defaults to zero.
    const Mat& d(int k) const;
    void set_d(int k, Mat m);
    const std::vector<std::string>& labels(int k) const;

    bool in_range(int k) const { return lo_ <= k && k <= hi_; }
    ValidationReport validate() const;  // d∘d = 0 everywhere in range

private:
    Field field_;
    int lo_, hi_;
    std::vector<int> dims_;
    std::vector<Mat> d_;  // d_[k-lo]: dim(k+1) x dim(k), k in [lo, hi-1]
    std::vector<std::vector<std::string>> labels_;
    mutable Mat zero_;
};

struct CohomologyData {
    int dim = 0;
    std::vector<Vec> reps;      // closed representatives of a basis of H^k
    std::vector<Vec> boundary;  // basis of im d_{k-1}
};

// Requires lo < k < hi so both neighboring differentials are in the window.
CohomologyData cohomology(const ComplexWindow& X, int k);

// Class coordinates of a closed degree-k vector in the computed basis.
Vec class_in(const Field& F, const CohomologyData& H, const Vec& v);

class ChainMapWindow {
public:
    ChainMapWindow(const ComplexWindow& src, const ComplexWindow& tgt);
    const Mat& at(int k) const;
    void set(int k, Mat m);
    const ComplexWindow& source() const { return *src_; }
    const ComplexWindow& target() const { return *tgt_; }
    ValidationReport validate() const;  // commutes with differentials

private:
    const ComplexWindow* src_;
    const ComplexWindow* tgt_;
    int lo_, hi_;
    std::vector<Mat> maps_;
    mutable Mat zero_;
};

// Matrix of the induced map H^k(src) -> H^k(tgt).
Mat induced_on_cohomology(const ChainMapWindow& phi, int k);
bool is_quasi_iso(const ChainMapWindow& phi, const std::vector<int>& ks);

// The hom complex C(x,y) of a concrete category as a window.
ComplexWindow hom_complex(const ConcreteDgCategory& C, ObjId x, ObjId y);
// The window-restricted chain map C(x,y) -> D(F(x),F(y)); src and tgt must be
// the hom complexes of the two sides and stay alive with the returned map.
ChainMapWindow functor_hom_map(const ConcFunctor& F, ObjId x, ObjId y, const ComplexWindow& src,
                               const ComplexWindow& tgt);

struct QuasiEquivalenceParams {
    // Essential-surjectivity candidate search: H^0-class vectors with at most
    // support_bound nonzero entries, coefficients in [-coeff_bound, coeff_bound]
    // (all residues over F_p). A failed search is a semi-decision over Q.
    int coeff_bound = 2;
    int support_bound = 3;
};

struct QuasiEquivalenceReport {
    bool hom_quasi_iso = false;
    bool essentially_surjective = false;
    std::vector<std::string> notes;
    bool ok() const { return hom_quasi_iso && essentially_surjective; }
};

QuasiEquivalenceReport is_quasi_equivalence(const ConcFunctor& F,
                                            const QuasiEquivalenceParams& params = {});

}  // namespace dgc
