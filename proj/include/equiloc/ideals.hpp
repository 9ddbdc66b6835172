#pragma once

#include <optional>

#include "equiloc/geometry.hpp"
#include "equiloc/groebner.hpp"

namespace equiloc {

// Scheme-theoretic side of the story: the fixed curves as ideals in the two
// relevant affine chart rings, the inclusion chains between them, and the
// weight bookkeeping that ties the chart coordinates to the twists used by
// the sheaf recipes. All ideal computations happen in the plain polynomial
// ring of the chart.

const std::array<int, kNumVars>& chart_weights(Chart c);

// torus weight of a weight-homogeneous polynomial; nullopt when terms mix
std::optional<int> weight_of(const MultiPoly& f, Chart chart);

struct Ideal {
    std::string name;
    Chart chart;
    std::vector<MultiPoly> gens;
};

// ideal(sub) inside ideal(sup) with cyclic quotient generated by cls
struct QuotientStep {
    std::string sub;
    std::string sup;
    MultiPoly cls;
    std::string cls_text;
};

struct IdealCorpus {
    std::vector<MultiPoly> relations_v12;
    std::vector<MultiPoly> relations_v10;
    std::vector<Ideal> ideals;
    std::vector<QuotientStep> steps;

    const Ideal& ideal(const std::string& name) const;  // UnknownLabelError
};

IdealCorpus corpus_from_text(const std::string& text);
const std::string& embedded_corpus_text();

// ideal(sub) inside ideal(sup), ideal(sup) inside ideal(sub) + <cls>, and
// cls outside ideal(sub); all three via reduced Groebner bases
bool verify_filtration_step(const Ideal& sub, const Ideal& sup, const MultiPoly& cls);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// homogeneity of every generator and relation, inclusion chains, filtration
// steps, and the match between shifted class weights and the catalog twists
VerifyReport verify_all(const IdealCorpus& corpus, const Catalog& cat);

}  // namespace equiloc
