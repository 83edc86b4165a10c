// Semi-free dg categories: free graded quivers with a staged differential.
//
// Words store their letters in application order (letters[0] acts first), so
// the word (f, g) is the composite g∘f. Algebraic juxtaposition in comments
// follows composition order: gf means f first, then g.
#pragma once

#include "dgc/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgc {

using ObjId = int;
using GenId = int;

struct GenArrow {
    std::string name;
    ObjId src = 0;
    ObjId tgt = 0;
    int degree = 0;
    int stage = 0;
};

struct Word {
    ObjId at = 0;                // object of the identity word; ignored when letters nonempty
    std::vector<GenId> letters;  // application order

    bool is_identity() const { return letters.empty(); }
    auto operator<=>(const Word&) const = default;
};

// Finite formal linear combination of composable words with common endpoints.
struct FreeMorphism {
    ObjId src = 0;
    ObjId tgt = 0;
    std::map<Word, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const FreeMorphism& o) const {
        return src == o.src && tgt == o.tgt && terms == o.terms;
    }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

class SemiFreePresentation {
public:
    explicit SemiFreePresentation(Field field) : field_(field) {}

    const Field& field() const { return field_; }

    ObjId add_object(const std::string& name);
    GenId add_generator(const std::string& name, ObjId src, ObjId tgt, int degree, int stage = 0);
    void set_diff(GenId g, FreeMorphism d);

    // Marks the stage-0 part as an arbitrary base dg category, so stage-0
    // generators may carry nonzero differentials (standard cofibration).
    void mark_standard_cofibration() { standard_cofibration_ = true; }
    bool is_standard_cofibration() const { return standard_cofibration_; }

    int object_count() const { return int(object_names_.size()); }
    const std::string& object_name(ObjId x) const { return object_names_.at(x); }
    std::optional<ObjId> find_object(const std::string& name) const;

    int gen_count() const { return int(gens_.size()); }
    const GenArrow& gen(GenId g) const { return gens_.at(g); }
    std::optional<GenId> find_gen(const std::string& name) const;
    const FreeMorphism& diff_of(GenId g) const { return diffs_.at(g); }

    // --- word and morphism algebra ---
    bool word_composable(const Word& w) const;
    ObjId word_src(const Word& w) const;
    ObjId word_tgt(const Word& w) const;
    int word_degree(const Word& w) const;

    FreeMorphism zero(ObjId src, ObjId tgt) const;
    FreeMorphism identity(ObjId x) const;
    FreeMorphism gen_morphism(GenId g) const;
    FreeMorphism from_word(const Word& w, const Scalar& c) const;

    FreeMorphism add(const FreeMorphism& a, const FreeMorphism& b) const;
    FreeMorphism sub(const FreeMorphism& a, const FreeMorphism& b) const;
    FreeMorphism scale(const Scalar& c, const FreeMorphism& m) const;
    // compose(g, f): f first, then g.
    FreeMorphism compose(const FreeMorphism& g, const FreeMorphism& f) const;
    FreeMorphism differential(const FreeMorphism& m) const;

    // Homogeneous degree of m, if all words agree (zero morphism: nullopt).
    std::optional<int> homogeneous_degree(const FreeMorphism& m) const;

    std::string to_string(const FreeMorphism& m) const;
    std::string word_to_string(const Word& w) const;

    // Degree/stage/d^2 discipline for the whole presentation.
    ValidationReport validate() const;

    // Operation (ii) of the I-cell construction: one new generator u: x -> y
    // with du = m, for m closed homogeneous. Throws when m is not closed.
    // zero_degree fixes deg(u) when m = 0 (otherwise deg(u) = deg(m) - 1).
    GenId attach_cell(const std::string& name, ObjId x, ObjId y, const FreeMorphism& m,
                      std::optional<int> zero_degree = std::nullopt);

    // All composable words x -> y of the given degree with at most max_len letters.
    std::vector<Word> enumerate_words(ObjId x, ObjId y, int degree, int max_len) const;

private:
    void check_object(ObjId x) const;
    void insert_term(FreeMorphism& m, const Word& w, const Scalar& c) const;

    Field field_;
    std::vector<std::string> object_names_;
    std::vector<GenArrow> gens_;
    std::vector<FreeMorphism> diffs_;
    bool standard_cofibration_ = false;
};

}  // namespace dgc
