#include <algorithm>
#include <sstream>

#include "equiloc/errors.hpp"
#include "equiloc/geometry.hpp"

namespace equiloc {

namespace {

std::string render_terms(const LaurentPoly& p) {
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += " ";
        out += "[" + to_string(c) + "," + std::to_string(e) + "]";
    }
    return out;
}

}  // namespace

std::string catalog_to_text(const Catalog& cat) {
    std::ostringstream os;
    os << "# torus fixed-locus catalog\n";
    for (const auto& p : cat.points()) {
        os << "point " << label_of(p.id) << " tangent " << p.tangent[0] << " " << p.tangent[1]
           << " " << p.tangent[2] << " m " << p.m << "\n";
    }
    for (const auto& c : cat.components()) {
        os << "component " << label_of(c.id) << "\n";
        for (const auto& e : c.ends) {
            os << "  end " << label_of(e.point) << " tangent " << e.tangent << " conormal "
               << e.conormal[0] << " " << e.conormal[1];
            if (e.twist) os << " twist " << *e.twist;
            os << "\n";
        }
    }
    for (const auto& s : cat.sheaves()) {
        os << "sheaf " << s.label << " degree " << s.degree << "\n";
        for (const auto& entry : s.entries) {
            os << "  part " << label_of(entry.base) << " " << (entry.twisted ? "twisted" : "plain")
               << " " << render_terms(entry.prefactor) << "\n";
        }
    }
    return os.str();
}

namespace {

struct Tokens {
    std::vector<std::string> v;
    std::size_t i = 0;
    bool done() const { return i >= v.size(); }
    const std::string& next(const char* what) {
        if (done()) throw ParseError(std::string("catalog: missing ") + what);
        return v[i++];
    }
    int next_int(const char* what) {
        const std::string& s = next(what);
        try {
            std::size_t pos = 0;
            int n = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return n;
        } catch (const std::exception&) {
            throw ParseError("catalog: bad integer '" + s + "' for " + what);
        }
    }
    void expect(const char* word) {
        if (next(word) != word) throw ParseError(std::string("catalog: expected '") + word + "'");
    }
};

Tokens tokenize(const std::string& line) {
    Tokens t;
    std::istringstream is(line);
    std::string w;
    while (is >> w) t.v.push_back(w);
    return t;
}

LaurentPoly parse_terms(Tokens& t) {
    LaurentPoly p;
    bool any = false;
    while (!t.done()) {
        std::string tok = t.next("term");
        if (tok.size() < 5 || tok.front() != '[' || tok.back() != ']')
            throw ParseError("catalog: bad term '" + tok + "'");
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw ParseError("catalog: bad term '" + tok + "'");
        Rational c = parse_rational(tok.substr(1, comma - 1));
        std::string es = tok.substr(comma + 1, tok.size() - comma - 2);
        Tokens et;
        et.v.push_back(es);
        p += LaurentPoly::term(c, et.next_int("exponent"));
        any = true;
    }
    if (!any) throw ParseError("catalog: part without prefactor terms");
    return p;
}

}  // namespace

Catalog catalog_from_text(const std::string& text) {
    std::vector<FixedPoint> points;
    std::vector<BaseComponent> components;
    std::vector<ComponentEnd> ends;  // of the open component
    bool in_component = false;
    std::vector<FixedSheaf> sheaves;

    auto close_component = [&] {
        if (!in_component) return;
        if (ends.size() != 2) throw ParseError("catalog: component needs exactly two ends");
        components.back().ends = {ends[0], ends[1]};
        ends.clear();
        in_component = false;
    };

    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        Tokens t = tokenize(line);
        if (t.done()) continue;
        const std::string& kw = t.next("keyword");
        if (kw[0] == '#') continue;
        if (kw == "point") {
            close_component();
            FixedPoint p;
            p.id = point_from_label(t.next("point label"));
            t.expect("tangent");
            for (int& w : p.tangent) w = t.next_int("tangent weight");
            t.expect("m");
            p.m = t.next_int("m");
            if (!t.done()) throw ParseError("catalog: trailing tokens on point line");
            points.push_back(p);
        } else if (kw == "component") {
            close_component();
            BaseComponent c{};
            c.id = component_from_label(t.next("component label"));
            if (!t.done()) throw ParseError("catalog: trailing tokens on component line");
            components.push_back(c);
            in_component = true;
        } else if (kw == "end") {
            if (!in_component) throw ParseError("catalog: 'end' outside component");
            ComponentEnd e{};
            e.point = point_from_label(t.next("end point"));
            t.expect("tangent");
            e.tangent = t.next_int("end tangent");
            t.expect("conormal");
            e.conormal[0] = t.next_int("conormal weight");
            e.conormal[1] = t.next_int("conormal weight");
            if (!t.done()) {
                t.expect("twist");
                e.twist = t.next_int("twist");
                if (!t.done()) throw ParseError("catalog: trailing tokens on end line");
            }
            ends.push_back(e);
        } else if (kw == "sheaf") {
            close_component();
            FixedSheaf s;
            s.label = t.next("sheaf label");
            t.expect("degree");
            s.degree = t.next_int("degree");
            if (!t.done()) throw ParseError("catalog: trailing tokens on sheaf line");
            sheaves.push_back(std::move(s));
        } else if (kw == "part") {
            if (sheaves.empty()) throw ParseError("catalog: 'part' outside sheaf");
            RecipeEntry entry;
            entry.base = component_from_label(t.next("part base"));
            const std::string& kind = t.next("part kind");
            if (kind == "twisted")
                entry.twisted = true;
            else if (kind == "plain")
                entry.twisted = false;
            else
                throw ParseError("catalog: bad part kind '" + kind + "'");
            entry.prefactor = parse_terms(t);
            sheaves.back().entries.push_back(std::move(entry));
        } else {
            throw ParseError("catalog: unknown keyword '" + kw + "'");
        }
    }
    close_component();

    if (points.size() != 4) throw ParseError("catalog: expected four points");
    if (components.size() != 4) throw ParseError("catalog: expected four components");
    std::array<FixedPoint, 4> pa;
    std::array<BaseComponent, 4> ca;
    std::copy(points.begin(), points.end(), pa.begin());
    std::copy(components.begin(), components.end(), ca.begin());
    return Catalog(pa, ca, std::move(sheaves));
}

const std::string& embedded_catalog_text() {
    static const std::string text = catalog_to_text(Catalog::standard());
    return text;
}

}  // namespace equiloc
