#include "equiloc/ideals.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "equiloc/errors.hpp"

namespace equiloc {

const std::array<int, kNumVars>& chart_weights(Chart c) {
    static const std::array<int, kNumVars> w12 = {-6, -8, -10, -12, -4, -6,
                                                  -8, -10, -2, -4, -6, -8};
    static const std::array<int, kNumVars> w10 = {-4, -8, -10, -12, -2, -6,
                                                  -8, -10, 2, -2, -4, -6};
    return c == Chart::V12 ? w12 : w10;
}

std::optional<int> weight_of(const MultiPoly& f, Chart chart) {
    if (f.is_zero()) throw Error("weight of the zero polynomial");
    const auto& w = chart_weights(chart);
    std::optional<int> out;
    for (const auto& [e, c] : f.terms()) {
        int tw = 0;
        for (int i = 0; i < kNumVars; ++i) tw += e[i] * w[i];
        if (!out)
            out = tw;
        else if (*out != tw)
            return std::nullopt;
    }
    return out;
}

const Ideal& IdealCorpus::ideal(const std::string& name) const {
    for (const auto& i : ideals)
        if (i.name == name) return i;
    throw UnknownLabelError("unknown ideal '" + name + "'");
}

IdealCorpus corpus_from_text(const std::string& text) {
    IdealCorpus corpus;
    std::optional<Chart> chart;
    struct RawStep {
        std::string sub, sup, cls;
    };
    std::vector<RawStep> raw_steps;

    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw[0] == '#') continue;
        auto rest = [&] {
            std::string r;
            std::getline(ls, r);
            const auto a = r.find_first_not_of(" \t");
            if (a == std::string::npos) throw ParseError("corpus: '" + kw + "' needs a body");
            const auto b = r.find_last_not_of(" \t");
            return r.substr(a, b - a + 1);
        };
        if (kw == "chart") {
            std::string name;
            ls >> name;
            if (name == "V12")
                chart = Chart::V12;
            else if (name == "V10")
                chart = Chart::V10;
            else
                throw ParseError("corpus: unknown chart '" + name + "'");
        } else if (kw == "relation") {
            if (!chart) throw ParseError("corpus: relation before chart");
            auto& dst = *chart == Chart::V12 ? corpus.relations_v12 : corpus.relations_v10;
            dst.push_back(parse_poly(rest(), *chart));
        } else if (kw == "ideal") {
            if (!chart) throw ParseError("corpus: ideal before chart");
            std::string name;
            if (!(ls >> name)) throw ParseError("corpus: ideal needs a name");
            corpus.ideals.push_back({name, *chart, {}});
        } else if (kw == "gen") {
            if (corpus.ideals.empty()) throw ParseError("corpus: gen outside ideal");
            Ideal& i = corpus.ideals.back();
            i.gens.push_back(parse_poly(rest(), i.chart));
        } else if (kw == "quotient") {
            RawStep s;
            std::string marker;
            if (!(ls >> s.sub >> s.sup >> marker) || marker != "class")
                throw ParseError("corpus: quotient needs '<sub> <sup> class <poly>'");
            s.cls = rest();
            raw_steps.push_back(std::move(s));
        } else {
            throw ParseError("corpus: unknown keyword '" + kw + "'");
        }
    }

    for (const auto& s : raw_steps) {
        const Ideal& sub = corpus.ideal(s.sub);
        const Ideal& sup = corpus.ideal(s.sup);
        if (sub.chart != sup.chart) throw ParseError("corpus: quotient across charts");
        corpus.steps.push_back({s.sub, s.sup, parse_poly(s.cls, sub.chart), s.cls});
    }
    return corpus;
}

bool verify_filtration_step(const Ideal& sub, const Ideal& sup, const MultiPoly& cls) {
    if (sub.chart != sup.chart) return false;
    const Basis gb_sup = buchberger(sup.gens);
    for (const MultiPoly& f : sub.gens)
        if (!ideal_contains(gb_sup, f)) return false;
    Basis augmented = sub.gens;
    augmented.push_back(cls);
    const Basis gb_aug = buchberger(augmented);
    for (const MultiPoly& f : sup.gens)
        if (!ideal_contains(gb_aug, f)) return false;
    const Basis gb_sub = buchberger(sub.gens);
    return !ideal_contains(gb_sub, cls);
}

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

CheckResult check_homogeneous(const std::string& name, const std::vector<MultiPoly>& polys,
                              Chart chart) {
    for (std::size_t k = 0; k < polys.size(); ++k) {
        if (!weight_of(polys[k], chart))
            return {name, false,
                    "generator " + std::to_string(k + 1) + " mixes torus weights: " +
                        to_string(polys[k], chart)};
    }
    return {name, true, std::to_string(polys.size()) + " generators, single weight each"};
}

// exponents of the twisted part supported on the first line component
std::set<int> twisted_exponents(const Catalog& cat, const std::string& label) {
    std::set<int> out;
    for (const auto& entry : cat.sheaf(label).entries) {
        if (!entry.twisted || entry.base != ComponentId::L2) continue;
        for (const auto& [e, c] : entry.prefactor.terms()) out.insert(e);
    }
    return out;
}

std::string render_set(const std::set<int>& s) {
    std::string out = "{";
    for (int e : s) out += (out.size() > 1 ? "," : "") + std::to_string(e);
    return out + "}";
}

}  // namespace

VerifyReport verify_all(const IdealCorpus& corpus, const Catalog& cat) {
    VerifyReport report;

    report.checks.push_back(
        check_homogeneous("homogeneous: V12 relations", corpus.relations_v12, Chart::V12));
    report.checks.push_back(
        check_homogeneous("homogeneous: V10 relations", corpus.relations_v10, Chart::V10));
    for (const auto& ideal : corpus.ideals)
        report.checks.push_back(
            check_homogeneous("homogeneous: ideal " + ideal.name, ideal.gens, ideal.chart));

    for (const auto& step : corpus.steps) {
        const Ideal& sub = corpus.ideal(step.sub);
        const Ideal& sup = corpus.ideal(step.sup);
        {
            const Basis gb_sup = buchberger(sup.gens);
            bool pass = true;
            std::string detail = "all generators reduce to zero";
            for (const MultiPoly& f : sub.gens) {
                if (!ideal_contains(gb_sup, f)) {
                    pass = false;
                    detail = "generator survives reduction: " + to_string(f, sub.chart);
                    break;
                }
            }
            report.checks.push_back(
                {"containment: " + step.sub + " in " + step.sup, pass, detail});
        }
        report.checks.push_back({"quotient: " + step.sup + "/" + step.sub + " = <" +
                                     step.cls_text + ">",
                                 verify_filtration_step(sub, sup, step.cls),
                                 "inclusion, generation and properness checks"});
    }

    // shifted class weights against the catalog prefactor exponents
    {
        const int twist12 = *cat.component(ComponentId::L2).at(PointId::P12)->twist;
        bool pass = true;
        std::string detail;
        for (const auto& step : corpus.steps) {
            if (corpus.ideal(step.sub).chart != Chart::V12) continue;
            auto w = weight_of(step.cls, Chart::V12);
            std::set<int> sub_e = twisted_exponents(cat, step.sub);
            std::set<int> sup_e = twisted_exponents(cat, step.sup);
            std::set<int> diff;
            for (int e : sub_e)
                if (!sup_e.count(e)) diff.insert(e);
            bool ok = w && std::includes(sub_e.begin(), sub_e.end(), sup_e.begin(), sup_e.end()) &&
                      diff == std::set<int>{*w - twist12};
            if (!detail.empty()) detail += "; ";
            detail += step.sub + " adds " + render_set(diff) + ", class weight shifts to " +
                      (w ? std::to_string(*w - twist12) : std::string("mixed"));
            pass = pass && ok;
        }
        report.checks.push_back({"twist match: thickened chain vs catalog", pass, detail});
    }
    {
        const int twist10 = *cat.component(ComponentId::L2).at(PointId::P10)->twist;
        std::optional<int> m, n;
        for (const auto& step : corpus.steps) {
            if (corpus.ideal(step.sub).chart != Chart::V10) continue;
            auto w = weight_of(step.cls, Chart::V10);
            if (!w) continue;
            if (step.sup == "Q")
                n = *w - twist10;
            else
                m = *w - twist10;
        }
        bool pass = m && n && twisted_exponents(cat, "L2uQ") == std::set<int>{*n} &&
                    twisted_exponents(cat, "L2^2uQ") == std::set<int>{*m, *n};
        std::string detail = "shifted weights";
        if (m && n)
            detail += " " + render_set({*m, *n}) + " vs catalog " +
                      render_set(twisted_exponents(cat, "L2^2uQ"));
        report.checks.push_back({"twist match: quadric chain vs catalog", pass, detail});
    }

    return report;
}

}  // namespace equiloc
