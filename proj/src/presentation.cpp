#include "dgc/presentation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dgc {

std::string ValidationReport::to_string() const {
    if (violations.empty()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) os << v << "\n";
    return os.str();
}

ObjId SemiFreePresentation::add_object(const std::string& name) {
    if (find_object(name)) throw Error("presentation: duplicate object '" + name + "'");
    object_names_.push_back(name);
    return ObjId(object_names_.size() - 1);
}

GenId SemiFreePresentation::add_generator(const std::string& name, ObjId src, ObjId tgt, int degree,
                                          int stage) {
    check_object(src);
    check_object(tgt);
    if (find_gen(name)) throw Error("presentation: duplicate generator '" + name + "'");
    if (stage < 0) throw Error("presentation: negative stage for '" + name + "'");
    gens_.push_back(GenArrow{name, src, tgt, degree, stage});
    diffs_.push_back(zero(src, tgt));
    return GenId(gens_.size() - 1);
}

void SemiFreePresentation::set_diff(GenId g, FreeMorphism d) {
    const GenArrow& a = gen(g);
    if (d.src != a.src || d.tgt != a.tgt)
        throw Error("presentation: diff endpoints mismatch for '" + a.name + "'");
    diffs_.at(g) = std::move(d);
}

std::optional<ObjId> SemiFreePresentation::find_object(const std::string& name) const {
    for (size_t i = 0; i < object_names_.size(); ++i)
        if (object_names_[i] == name) return ObjId(i);
    return std::nullopt;
}

std::optional<GenId> SemiFreePresentation::find_gen(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return GenId(i);
    return std::nullopt;
}

void SemiFreePresentation::check_object(ObjId x) const {
    if (x < 0 || x >= object_count()) throw Error("presentation: unknown object id");
}

bool SemiFreePresentation::word_composable(const Word& w) const {
    for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (gen(w.letters[i]).tgt != gen(w.letters[i + 1]).src) return false;
    return true;
}

ObjId SemiFreePresentation::word_src(const Word& w) const {
    return w.is_identity() ? w.at : gen(w.letters.front()).src;
}

ObjId SemiFreePresentation::word_tgt(const Word& w) const {
    return w.is_identity() ? w.at : gen(w.letters.back()).tgt;
}

int SemiFreePresentation::word_degree(const Word& w) const {
    int d = 0;
    for (GenId g : w.letters) d += gen(g).degree;
    return d;
}

FreeMorphism SemiFreePresentation::zero(ObjId src, ObjId tgt) const {
    check_object(src);
    check_object(tgt);
    return FreeMorphism{src, tgt, {}};
}

FreeMorphism SemiFreePresentation::identity(ObjId x) const {
    FreeMorphism m = zero(x, x);
    m.terms[Word{x, {}}] = field_.one();
    return m;
}

FreeMorphism SemiFreePresentation::gen_morphism(GenId g) const {
    const GenArrow& a = gen(g);
    FreeMorphism m = zero(a.src, a.tgt);
    m.terms[Word{0, {g}}] = field_.one();
    return m;
}

FreeMorphism SemiFreePresentation::from_word(const Word& w, const Scalar& c) const {
    if (!word_composable(w)) throw Error("presentation: word not composable");
    FreeMorphism m = zero(word_src(w), word_tgt(w));
    insert_term(m, w, field_.reduce(c));
    return m;
}

void SemiFreePresentation::insert_term(FreeMorphism& m, const Word& w, const Scalar& c) const {
    if (field_.is_zero(c)) return;
    auto it = m.terms.find(w);
    if (it == m.terms.end()) {
        m.terms.emplace(w, c);
    } else {
        it->second = field_.add(it->second, c);
        if (field_.is_zero(it->second)) m.terms.erase(it);
    }
}

FreeMorphism SemiFreePresentation::add(const FreeMorphism& a, const FreeMorphism& b) const {
    if (a.src != b.src || a.tgt != b.tgt) throw Error("presentation: add endpoint mismatch");
    FreeMorphism m = a;
    for (const auto& [w, c] : b.terms) insert_term(m, w, c);
    return m;
}

FreeMorphism SemiFreePresentation::sub(const FreeMorphism& a, const FreeMorphism& b) const {
    return add(a, scale(field_.from_long(-1), b));
}

FreeMorphism SemiFreePresentation::scale(const Scalar& c, const FreeMorphism& m) const {
    FreeMorphism r = zero(m.src, m.tgt);
    if (field_.is_zero(c)) return r;
    for (const auto& [w, x] : m.terms) insert_term(r, w, field_.mul(c, x));
    return r;
}

FreeMorphism SemiFreePresentation::compose(const FreeMorphism& g, const FreeMorphism& f) const {
    if (f.tgt != g.src) throw Error("presentation: non-composable morphisms");
    FreeMorphism r = zero(f.src, g.tgt);
    for (const auto& [wf, cf] : f.terms)
        for (const auto& [wg, cg] : g.terms) {
            Word w;
            if (wf.is_identity() && wg.is_identity()) {
                w = Word{wf.at, {}};
            } else {
                w.letters = wf.letters;
                w.letters.insert(w.letters.end(), wg.letters.begin(), wg.letters.end());
            }
            insert_term(r, w, field_.mul(cf, cg));
        }
    return r;
}

FreeMorphism SemiFreePresentation::differential(const FreeMorphism& m) const {
    FreeMorphism r = zero(m.src, m.tgt);
    for (const auto& [w, c] : m.terms) {
        if (w.is_identity()) continue;
        // d(l_k ∘ ... ∘ l_1) = sum_i ± l_k ... d(l_i) ... l_1, the sign being
        // the parity of the letters applied after l_i.
        int suffix_deg = 0;
        for (size_t j = 0; j < w.letters.size(); ++j) suffix_deg += gen(w.letters[j]).degree;
        for (size_t i = 0; i < w.letters.size(); ++i) {
            suffix_deg -= gen(w.letters[i]).degree;
            const FreeMorphism& dg = diffs_.at(w.letters[i]);
            if (dg.is_zero()) continue;
            Scalar sign = (suffix_deg % 2 != 0) ? field_.from_long(-1) : field_.one();
            for (const auto& [dw, dc] : dg.terms) {
                Word nw;
                nw.letters.assign(w.letters.begin(), w.letters.begin() + i);
                nw.letters.insert(nw.letters.end(), dw.letters.begin(), dw.letters.end());
                nw.letters.insert(nw.letters.end(), w.letters.begin() + i + 1, w.letters.end());
                if (nw.letters.empty()) nw.at = m.src;
                insert_term(r, nw, field_.mul(c, field_.mul(sign, dc)));
            }
        }
    }
    return r;
}

std::optional<int> SemiFreePresentation::homogeneous_degree(const FreeMorphism& m) const {
    std::optional<int> deg;
    for (const auto& [w, c] : m.terms) {
        int d = word_degree(w);
        if (deg && *deg != d) throw Error("presentation: morphism is not homogeneous");
        deg = d;
    }
    return deg;
}

std::string SemiFreePresentation::word_to_string(const Word& w) const {
    if (w.is_identity()) return "id(" + object_name(w.at) + ")";
    std::string s;
    // Composition-order rendering: last-applied letter first.
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (!s.empty()) s += ".";
        s += gen(*it).name;
    }
    return s;
}

std::string SemiFreePresentation::to_string(const FreeMorphism& m) const {
    if (m.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : m.terms) {
        if (!first) os << " + ";
        first = false;
        os << field_.to_string(c) << "*" << word_to_string(w);
    }
    return os.str();
}

ValidationReport SemiFreePresentation::validate() const {
    ValidationReport rep;
    for (GenId g = 0; g < gen_count(); ++g) {
        const GenArrow& a = gen(g);
        const FreeMorphism& d = diffs_.at(g);
        if (d.is_zero()) continue;
        if (a.stage == 0 && !standard_cofibration_) {
            rep.violations.push_back("stage-0 generator '" + a.name + "' has nonzero differential");
            continue;
        }
        for (const auto& [w, c] : d.terms) {
            if (!word_composable(w) || word_src(w) != a.src || word_tgt(w) != a.tgt) {
                rep.violations.push_back("diff of '" + a.name + "' has mismatched word " +
                                         word_to_string(w));
                continue;
            }
            if (word_degree(w) != a.degree + 1)
                rep.violations.push_back("diff of '" + a.name + "' has degree " +
                                         std::to_string(word_degree(w)) + ", want " +
                                         std::to_string(a.degree + 1));
            for (GenId l : w.letters) {
                bool ok = (a.stage == 0 && standard_cofibration_) ? gen(l).stage == 0
                                                                  : gen(l).stage < a.stage;
                if (!ok)
                    rep.violations.push_back("diff of '" + a.name + "' uses generator '" +
                                             gen(l).name + "' of stage >= " +
                                             std::to_string(a.stage));
            }
        }
    }
    for (GenId g = 0; g < gen_count(); ++g) {
        FreeMorphism dd = differential(diffs_.at(g));
        if (!dd.is_zero())
            rep.violations.push_back("d^2 != 0 on generator '" + gen(g).name +
                                     "': d(d " + gen(g).name + ") = " + to_string(dd));
    }
    return rep;
}

GenId SemiFreePresentation::attach_cell(const std::string& name, ObjId x, ObjId y,
                                        const FreeMorphism& m, std::optional<int> zero_degree) {
    if (m.src != x || m.tgt != y) throw Error("attach_cell: endpoint mismatch");
    std::optional<int> deg = homogeneous_degree(m);
    if (!differential(m).is_zero())
        throw Error("attach_cell: morphism is not closed: d(m) = " + to_string(differential(m)));
    if (!deg && !zero_degree) throw Error("attach_cell: degree of cell with zero boundary unspecified");
    int max_stage = 0;
    for (const auto& [w, c] : m.terms)
        for (GenId l : w.letters) max_stage = std::max(max_stage, gen(l).stage + 1);
    int gen_degree = deg ? *deg - 1 : *zero_degree;
    GenId u = add_generator(name, x, y, gen_degree, std::max(max_stage, 1));
    set_diff(u, m);
    return u;
}

std::vector<Word> SemiFreePresentation::enumerate_words(ObjId x, ObjId y, int degree,
                                                        int max_len) const {
    std::vector<Word> out;
    if (x == y && degree == 0) out.push_back(Word{x, {}});
    std::vector<GenId> stack;
    std::function<void(ObjId, int)> dfs = [&](ObjId cur, int deg) {
        if (int(stack.size()) >= max_len) return;
        for (GenId g = 0; g < gen_count(); ++g) {
            if (gen(g).src != cur) continue;
            stack.push_back(g);
            int nd = deg + gen(g).degree;
            if (gen(g).tgt == y && nd == degree) out.push_back(Word{0, stack});
            dfs(gen(g).tgt, nd);
            stack.pop_back();
        }
    };
    dfs(x, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dgc
