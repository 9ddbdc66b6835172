// End-to-end checks for the full computation pipeline. Each criterion prints
// one line; the exit status is nonzero when any of them fails.

#include <functional>
#include <iostream>
#include <string>

#include "equiloc/errors.hpp"
#include "equiloc/gv.hpp"
#include "equiloc/ideals.hpp"

using namespace equiloc;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    std::cout << (ok ? "pass" : "FAIL") << ": " << name;
    if (!ok && !note.empty()) std::cout << " [" << note << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

LaurentPoly lp(std::initializer_list<std::pair<int, Rational>> terms) { return LaurentPoly(terms); }

const Catalog& cat() { return Catalog::standard(); }

LaurentPoly self(const std::string& label) { return chi_self(cat(), cat().sheaf(label)); }

constexpr std::pair<int, Insertion> kDiagonal[] = {
    {0, Insertion::H2}, {1, Insertion::H1}, {2, Insertion::H0}};

bool euler_pairing_tables() {
    bool ok = self("L2") == lp({{0, 1}, {2, -1}, {4, -1}, {8, 1}});
    ok = ok && self("L-2") == lp({{0, 1}, {-2, -1}, {-4, -1}, {-8, 1}});
    ok = ok && self("Q") == lp({{-2, -1}, {0, 2}, {2, -1}});
    ok = ok && self("C4") ==
                   lp({{-6, 1}, {-4, -1}, {-2, -1}, {0, 2}, {2, -1}, {4, -1}, {6, 1}});
    ok = ok && self("D1") == lp({{0, 1}, {2, -1}, {4, -1}, {8, 1}});
    ok = ok && self("D2") == lp({{0, 1}, {2, -1}, {4, -1}, {14, 1}});
    ok = ok && self("D3") == lp({{0, 1}, {2, -1}, {4, -1}, {6, -1}, {14, 1}, {16, 1}});
    ok = ok &&
         self("D4") == lp({{0, 1}, {2, -1}, {4, -2}, {6, -1}, {14, 1}, {16, 1}, {18, 1}});
    for (const char* k : {"1", "2", "3", "4"})
        ok = ok && self(std::string("D-") + k) == dual(self(std::string("D") + k));
    return ok;
}

bool cross_pairings() {
    KClass q = structure_class(ComponentId::Q);
    KClass tl = twisted_class(ComponentId::L2);
    const KClass& d3 = cat().sheaf("D3").entries;
    bool ok = chi_pair(cat(), q, tl) == lp({{-12, -1}, {-10, 1}});
    ok = ok && chi_pair(cat(), tl, q) == lp({{20, -1}, {22, 1}});
    ok = ok && chi_pair(cat(), tl, d3) == lp({{6, 1}, {10, -1}, {12, -1}, {22, 1}});
    ok = ok && chi_pair(cat(), d3, tl) == lp({{-4, -1}, {2, 1}});
    return ok;
}

bool reducible_pairings() {
    bool ok = self("L2^2uQ") == lp({{-2, -1}, {0, 2}, {2, -2}, {6, -1}, {10, 1}, {14, 1}});
    ok = ok && self("L2uL-2uQ") ==
                   lp({{-10, 1}, {-4, -1}, {-2, -1}, {0, 2}, {2, -1}, {4, -1}, {10, 1}});
    ok = ok && self("L2uQ") == lp({{-2, -1}, {0, 2}, {2, -1}, {4, -1}, {10, 1}});
    return ok;
}

bool virtual_euler_classes() {
    auto e4 = euler_of_virtual(self("D4") - LaurentPoly::one());
    bool ok = e4.has_value() && *e4 == EulerMonomial{rat(21), -1};
    for (const char* label : {"Q", "C4", "L2uQ", "L-2uQ", "L2^2uQ", "L-2^2uQ", "L2uL-2uQ"})
        ok = ok && !euler_of_virtual(self(label) - LaurentPoly::one()).has_value();
    return ok;
}

bool invariant_table() {
    const Rational expected[4][3] = {
        {rat(2), rat(22), rat(-1, 3)},
        {rat(7), rat(28), rat(-7, 6)},
        {rat(28), rat(28), rat(-14, 3)},
        {rat(168), rat(-168), rat(-28)},
    };
    bool ok = true;
    for (int d = 1; d <= 4; ++d) {
        int col = 0;
        for (auto [i, g] : kDiagonal) ok = ok && invariant(cat(), d, i, g).value == expected[d - 1][col++];
        ok = ok && ratio_check(cat(), d) == rat(-1, 6);
    }
    return ok;
}

bool gv_pipeline() {
    bool ok = n0(cat(), 1) == 2 && n0(cat(), 2) == -7 && n0(cat(), 3) == 28 &&
              n0(cat(), 4) == -168;
    MeetingTable table(standard_gv_inputs(cat()));
    ok = ok && table.meeting(1, 1) == -84 && table.meeting(1, 2) == 224 &&
         table.meeting(1, 3) == -1008 && table.meeting(2, 2) == -1008;
    GvInputs in = standard_gv_inputs(cat());
    for (int d = 1; d <= 4; ++d) {
        ConjectureRecord rec = conjecture_check(cat(), d, in);
        ok = ok && rec.holds;
        if (d == 4) ok = ok && rec.lhs == 168 && rec.rhs == 168;
    }
    return ok;
}

bool property_sweep() {
    bool ok = true;
    for (const FixedSheaf& s : cat().sheaves()) {
        ok = ok && chi_global(cat(), s.entries) == LaurentPoly::one();
        ok = ok && virtual_dimension(virtual_tangent(cat(), s)) == 1;
    }
    ok = ok && chi_global(cat(), twisted_class(ComponentId::L2)).is_zero();
    for (int d = 1; d <= 4; ++d)
        for (auto [i, g] : kDiagonal) invariant(cat(), d, i, g);  // must not throw
    for (const FixedSheaf& s : cat().sheaves())
        for (auto [i, g] : kDiagonal)
            ok = ok && sheaf_contribution(cat(), mirror(cat(), s), i, g) ==
                           sheaf_contribution(cat(), s, i, g);
    for (int order : {6, 12})
        for (int d = 1; d <= 4; ++d)
            for (auto [i, g] : kDiagonal)
                ok = ok && invariant(cat(), d, i, g, order).value ==
                               invariant(cat(), d, i, g).value;
    const KClass& d3 = cat().sheaf("D3").entries;
    KClass step = twist_kclass(twisted_class(ComponentId::L2), 4);
    ok = ok && chi_pair(cat(), d3, d3) + chi_pair(cat(), step, step) +
                       chi_pair(cat(), d3, step) + chi_pair(cat(), step, d3) ==
                   self("D4");
    return ok;
}

bool ideal_suite() {
    IdealCorpus corpus = corpus_from_text(embedded_corpus_text());
    bool ok = verify_all(corpus, cat()).all_pass();
    const char* classes[] = {"a5", "a1", "a12"};
    for (int k = 1; k <= 3; ++k) {
        auto w = weight_of(parse_poly(classes[k - 1], Chart::V12), Chart::V12);
        ok = ok && w.has_value() && *w + 12 == 10 - 2 * k;
    }
    return ok;
}

bool negative_controls() {
    GvInputs in = standard_gv_inputs(cat());
    Rational clean = conjecture_check(cat(), 4, in).rhs;
    in.n1[4] = rat(5, 2);
    ConjectureRecord rec = conjecture_check(cat(), 4, in);
    bool ok = !rec.holds && clean - rec.rhs == rat(4) * rat(5, 2);

    IdealCorpus corpus = corpus_from_text(embedded_corpus_text());
    ok = ok && !verify_filtration_step(corpus.ideal("D4"), corpus.ideal("D3"),
                                       parse_poly("a11", Chart::V12));

    bool threw = false;
    try {
        euler_of_virtual(lp({{0, -1}, {2, -1}, {8, 1}}));
    } catch (const ZeroDeformationWeightError&) {
        threw = true;
    }
    return ok && threw;
}

}  // namespace

int main() {
    criterion("self pairings of the fixed curves and their mirrors", euler_pairing_tables);
    criterion("cross pairings against the twisted line", cross_pairings);
    criterion("self pairings of the reducible fixed curves", reducible_pairings);
    criterion("virtual Euler classes: 21/lambda for the quadruple line, vanishing otherwise",
              virtual_euler_classes);
    criterion("descendent invariant table and the constant ratio -1/6", invariant_table);
    criterion("genus-0 counts, meeting numbers and the degree identity", gv_pipeline);
    criterion("structural property sweep", property_sweep);
    criterion("ideal chains, filtration quotients and twist consistency", ideal_suite);
    criterion("negative controls", negative_controls);
    if (failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
