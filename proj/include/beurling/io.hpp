#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "beurling/algebra.hpp"
#include "beurling/cancellation.hpp"
#include "beurling/grigorchuk.hpp"
#include "beurling/lift.hpp"
#include "beurling/separation.hpp"
#include "beurling/telescope.hpp"
#include "beurling/weight.hpp"

namespace beurling {

using nlohmann::json;

// ---------- scalars ----------

inline json gaussian_to_json(const Gaussian& c) {
    return json{{"re", c.re.str()}, {"im", c.im.str()}};
}

inline Gaussian gaussian_from_json(const json& j) {
    if (j.is_string()) return Gaussian(parse_rational(j.get<std::string>()));
    if (!j.is_object()) throw ParseError("coefficient must be a string or {re, im} object");
    Gaussian c;
    if (j.contains("re")) c.re = parse_rational(j.at("re").get<std::string>());
    if (j.contains("im")) c.im = parse_rational(j.at("im").get<std::string>());
    return c;
}

// ---------- elements ----------

inline json element_to_json(const FreeElement& f) {
    json terms = json::array();
    for (const auto& [w, c] : f.terms())
        terms.push_back(json{{"word", w.str()}, {"coeff", gaussian_to_json(c)}});
    return json{{"terms", std::move(terms)}};
}

inline json element_to_json(const QuotientElement& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.terms())
        terms.push_back(json{{"perm", p.images()}, {"coeff", gaussian_to_json(c)}});
    return json{{"terms", std::move(terms)}};
}

inline FreeElement free_element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms"))
        throw ParseError("element JSON must be an object with a 'terms' array");
    FreeElement f;
    for (const auto& t : j.at("terms")) {
        if (!t.contains("word")) throw ParseError("free element term needs a 'word'");
        f.add_term(FreeWord::parse(t.at("word").get<std::string>()),
                   gaussian_from_json(t.at("coeff")));
    }
    return f;
}

inline QuotientElement quotient_element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms"))
        throw ParseError("element JSON must be an object with a 'terms' array");
    QuotientElement f;
    for (const auto& t : j.at("terms")) {
        if (!t.contains("perm")) throw ParseError("quotient element term needs a 'perm'");
        f.add_term(Permutation(t.at("perm").get<std::vector<std::uint32_t>>()),
                   gaussian_from_json(t.at("coeff")));
    }
    return f;
}

// Inline sugar: terms joined by + or -, each term an optional rational
// coefficient (with optional trailing i) and an optional point mass "t:WORD".
//   "1 - t:ab"        -> delta_e - delta_{ab}
//   "1/2i t:a + 2"    -> (i/2) delta_a + 2 delta_e
inline FreeElement parse_element_text(const std::string& text) {
    FreeElement f;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    bool negative = false;
    bool expect_term = true;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    while (true) {
        skip_ws();
        if (pos >= text.size()) {
            if (expect_term) throw ParseError("expected a term", pos);
            break;
        }
        std::size_t term_start = pos;
        // coefficient
        Rational coeff = 1;
        bool imaginary = false;
        bool saw_number = false;
        std::size_t num_start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos > num_start) {
            coeff = parse_rational(text.substr(num_start, pos - num_start));
            saw_number = true;
        }
        if (pos < text.size() && text[pos] == 'i' &&
            (pos + 1 >= text.size() || text[pos + 1] == ' ' || text[pos + 1] == '+' ||
             text[pos + 1] == '-' || text[pos + 1] == 't')) {
            imaginary = true;
            ++pos;
        }
        skip_ws();
        // point mass
        FreeWord word;
        bool saw_word = false;
        if (pos + 1 < text.size() && text[pos] == 't' && text[pos + 1] == ':') {
            pos += 2;
            std::size_t w_start = pos;
            while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
            word = FreeWord::parse(text.substr(w_start, pos - w_start));
            saw_word = true;
        }
        if (!saw_number && !imaginary && !saw_word)
            throw ParseError("expected a coefficient or point mass", term_start);
        Gaussian c = imaginary ? Gaussian(Rational(0), coeff) : Gaussian(coeff);
        if (negative) c = -c;
        f.add_term(word, c);
        expect_term = false;
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
            expect_term = true;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    return f;
}

// Accepts either the JSON object form or the inline sugar.
inline FreeElement parse_free_element(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{')
        return free_element_from_json(json::parse(text));
    return parse_element_text(text);
}

// ---------- groups ----------

struct GroupSpec {
    GroupHom hom;
    SubgroupMode mode = SubgroupMode::kernel();
    std::optional<unsigned> r;   // explicit ball radius for Y, if given
    std::string name;
};

inline GroupSpec group_spec_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.rfind("grigorchuk:", 0) == 0) {
            unsigned level = unsigned(std::stoul(s.substr(11)));
            return {grigorchuk_level_hom(level), SubgroupMode::kernel(), std::nullopt, s};
        }
        throw ParseError("unknown named group '" + s + "'");
    }
    if (!j.is_object()) throw ParseError("group spec must be an object or a family name");
    unsigned rank = j.at("rank").get<unsigned>();
    std::size_t degree = j.at("degree").get<std::size_t>();
    std::vector<Permutation> images;
    for (const auto& im : j.at("images"))
        images.push_back(Permutation(im.get<std::vector<std::uint32_t>>()));
    GroupSpec spec{GroupHom(rank, degree, std::move(images)), SubgroupMode::kernel(), std::nullopt, ""};
    if (j.contains("mode")) {
        const auto& m = j.at("mode");
        if (m.is_string()) {
            if (m.get<std::string>() != "kernel")
                throw ParseError("mode must be \"kernel\" or {\"stabilizer\": point}");
        } else {
            spec.mode = SubgroupMode::stabilizer(m.at("stabilizer").get<std::uint32_t>());
        }
    }
    if (j.contains("r")) spec.r = j.at("r").get<unsigned>();
    return spec;
}

inline GroupSpec parse_group_spec(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{')
        return group_spec_from_json(json::parse(text));
    return group_spec_from_json(json(text));
}

// ---------- weights ----------

struct WeightSpec {
    enum class Kind { radial, table, induced } kind = Kind::radial;
    Rational base = 2;                       // radial / induced
    std::optional<GroupSpec> group;          // table / induced
    std::vector<Rational> values;            // table, indexed by table element
};

inline WeightSpec weight_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("weight spec needs a 'kind'");
    WeightSpec spec;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "radial") {
        spec.kind = WeightSpec::Kind::radial;
        spec.base = parse_rational(j.at("base").get<std::string>());
    } else if (kind == "table") {
        spec.kind = WeightSpec::Kind::table;
        spec.group = group_spec_from_json(j.at("group"));
        const auto& values = j.at("values");
        if (values.is_array()) {
            for (const auto& v : values) spec.values.push_back(parse_rational(v.get<std::string>()));
        } else {
            // object keyed by element index
            spec.values.assign(values.size(), Rational(1));
            for (const auto& [key, v] : values.items()) {
                std::size_t idx = std::stoul(key);
                if (idx >= spec.values.size()) spec.values.resize(idx + 1, Rational(1));
                spec.values[idx] = parse_rational(v.get<std::string>());
            }
        }
    } else if (kind == "induced") {
        spec.kind = WeightSpec::Kind::induced;
        const auto& parent = j.at("parent");
        if (parent.at("kind").get<std::string>() != "radial")
            throw ParseError("induced weight: only radial parents are computable");
        spec.base = parse_rational(parent.at("base").get<std::string>());
        spec.group = group_spec_from_json(j.at("group"));
    } else {
        throw ParseError("unknown weight kind '" + kind + "'");
    }
    return spec;
}

// ---------- reports ----------

inline json norm_bound_to_json(const NormBound& n) {
    return json{{"lower", n.lower.str()}, {"upper", n.upper.str()}};
}

inline json factorization_to_json(const YFactorization& f) {
    json factors = json::array();
    for (const auto& y : f.factors) factors.push_back(y.str());
    return json{{"u", f.u.str()}, {"n", f.factors.size()}, {"factors", std::move(factors)}};
}

inline json certificate_to_json(const TelescopeCertificate& cert) {
    json gens = json::array();
    for (const auto& [y, gy] : cert.g) {
        json g{{"y", y.str()}, {"g_y", element_to_json(gy)}};
        if (cert.eq2) g["norm"] = cert.eq2->g_norms.at(y).str();
        gens.push_back(std::move(g));
    }
    json out{{"u", cert.u.str()},
             {"factorization", factorization_to_json(cert.factorization)},
             {"gens", std::move(gens)},
             {"geodesic", cert.geodesic},
             {"identity_checked", cert.identity_checked}};
    if (cert.eq2) {
        json prefix_norms = json::array();
        for (const auto& r : cert.eq2->prefix_norms) prefix_norms.push_back(r.str());
        Rational max_norm = 0;
        for (const auto& [y, n] : cert.eq2->g_norms) max_norm = std::max(max_norm, n);
        out["eq2_bound"] = json{{"base", cert.eq2->base.str()},
                                {"norm", max_norm.str()},
                                {"bound", cert.eq2->bound.str()},
                                {"prefix_norms", std::move(prefix_norms)},
                                {"strictly_increasing", cert.eq2->strictly_increasing},
                                {"holds", cert.eq2->bounds_hold}};
    }
    return out;
}

inline json decomposition_to_json(const AugmentationDecomposition& dec) {
    json phis = json::array();
    for (const auto& [y, p] : dec.phi) {
        json e{{"y", y.str()}, {"phi_y", element_to_json(p)}};
        if (dec.f_norm_upper) e["norm_upper"] = dec.phi_norm_upper.at(y).str();
        phis.push_back(std::move(e));
    }
    json out{{"f", element_to_json(dec.f)},
             {"phi", std::move(phis)},
             {"identity_checked", dec.identity_checked}};
    if (dec.f_norm_upper) {
        out["f_norm_upper"] = dec.f_norm_upper->str();
        out["norms_hold"] = dec.norms_hold;
    }
    return out;
}

inline json expression_to_json(const JGeneratorExpression& ex) {
    json psis = json::array();
    for (const auto& [y, p] : ex.psi)
        psis.push_back(json{{"y", y.str()}, {"psi_y", element_to_json(p)}});
    return json{{"f", element_to_json(ex.f)},
                {"psi", std::move(psis)},
                {"identity_checked", ex.identity_checked}};
}

inline json cancellation_report_to_json(const CancellationReport& rep) {
    return json{{"factorization", factorization_to_json(rep.factorization)},
                {"pair_cancellations", rep.pair_cancellations},
                {"pair_bounds", rep.pair_bounds},
                {"pair_ok", rep.pair_ok},
                {"survival_ok", rep.survival_ok},
                {"growth_ok", rep.growth_ok},
                {"pass", rep.pass}};
}

inline json weight_report_to_json(const WeightCheckReport& rep) {
    json viols = json::array();
    for (const auto& v : rep.violations)
        viols.push_back(json{{"s", v.s},
                             {"t", v.t},
                             {"value", v.product_value.str()},
                             {"bound", v.bound.str()}});
    return json{{"checked_pairs", rep.checked_pairs},
                {"violations", rep.violation_count},
                {"witnesses", std::move(viols)},
                {"pass", rep.pass()}};
}

inline json separation_to_json(const SeparationResult& res) {
    json F = json::array();
    for (const auto& w : res.finite_set) F.push_back(w.str());
    return json{{"level", res.level},
                {"identity_sum", gaussian_to_json(res.identity_sum)},
                {"translated_by", res.translated_by.str()},
                {"F", std::move(F)},
                {"tail_upper", res.tail_upper.str()},
                {"kernel_meets_F_only_at_e", res.kernel_meets_F_only_at_e},
                {"bound_applicable", res.bound_applicable},
                {"bound_holds", res.bound_holds}};
}

} // namespace beurling
