// Command-line workbench for exact computation in weighted group algebras of
// finitely supported elements: word arithmetic, coset machinery, convolution,
// certificates, and the named property suites.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "beurling/suites.hpp"

using namespace beurling;

namespace {

// Specs may be given inline (JSON or a family name) or as a file path.
std::string slurp_spec(const std::string& arg) {
    std::size_t first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg.find(':') != std::string::npos))
        return arg;
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open spec file '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string slurp_element(const std::string& arg) {
    if (arg.find(".json") != std::string::npos) {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open element file '" + arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

struct Output {
    std::string format = "text";
    std::string out_path;

    void emit(const json& doc, const std::string& text) const {
        std::string payload = format == "json" ? doc.dump(2) + "\n" : text;
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(out_path);
            out << payload;
        }
    }
};

FiniteIndexSubgroup subgroup_from_spec(const GroupSpec& spec, std::size_t order_cap) {
    return make_subgroup(spec.hom, spec.mode, spec.r, order_cap);
}

std::string render_words(const std::vector<FreeWord>& ws) {
    std::string s;
    for (const auto& w : ws) {
        if (!s.empty()) s += " ";
        s += w.str();
    }
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"exact workbench for weighted group algebras l1(G, w)"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out.out_path, "write output to a file");

    std::size_t cap_ball = 5'000'000;
    std::size_t cap_order = 100'000;
    std::uint64_t seed = 1;
    app.add_option("--cap-ball", cap_ball, "ball enumeration cap");
    app.add_option("--cap-order", cap_order, "quotient order cap");
    app.add_option("--seed", seed, "seed for randomized suites");

    int exit_code = 0;

    // ---- word arithmetic ----
    std::string word_arg, word_arg2;
    auto* c_reduce = app.add_subcommand("reduce", "freely reduce a word");
    c_reduce->add_option("word", word_arg)->required();
    c_reduce->callback([&] {
        FreeWord w = FreeWord::parse(word_arg);
        out.emit(json{{"word", w.str()}, {"length", w.size()}},
                 w.str() + "  (length " + std::to_string(w.size()) + ")\n");
    });

    auto* c_mul = app.add_subcommand("mul", "multiply two words");
    c_mul->add_option("u", word_arg)->required();
    c_mul->add_option("v", word_arg2)->required();
    c_mul->callback([&] {
        FreeWord w = FreeWord::parse(word_arg) * FreeWord::parse(word_arg2);
        out.emit(json{{"word", w.str()}, {"length", w.size()}},
                 w.str() + "  (length " + std::to_string(w.size()) + ")\n");
    });

    unsigned ball_rank = 2, ball_radius = 2;
    auto* c_ball = app.add_subcommand("ball", "enumerate B_r of a free group");
    c_ball->add_option("--rank", ball_rank)->required();
    c_ball->add_option("--radius", ball_radius)->required();
    c_ball->callback([&] {
        Ball b = enumerate_ball(ball_rank, ball_radius, cap_ball);
        json words = json::array();
        for (const auto& w : b.elements) words.push_back(w.str());
        std::string text = "|B_" + std::to_string(ball_radius) + "| = " +
                           std::to_string(b.elements.size()) + "\n";
        if (b.elements.size() <= 64) text += render_words(b.elements) + "\n";
        out.emit(json{{"rank", ball_rank},
                      {"radius", ball_radius},
                      {"size", b.elements.size()},
                      {"elements", std::move(words)}},
                 text);
    });

    // ---- group machinery ----
    std::string group_arg;
    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", group_arg, "group spec (file, JSON, or grigorchuk:L)")->required();
    };

    auto* c_info = app.add_subcommand("group-info", "quotient table summary");
    add_group(c_info);
    c_info->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteGroupTable t = quotient_table(spec.hom, cap_order);
        unsigned diameter = 0;
        for (std::size_t i = 0; i < t.order(); ++i) diameter = std::max(diameter, t.length(i));
        out.emit(json{{"rank", spec.hom.rank()},
                      {"degree", spec.hom.degree()},
                      {"order", t.order()},
                      {"diameter", diameter},
                      {"mode", spec.mode.str()}},
                 "order " + std::to_string(t.order()) + ", degree " +
                     std::to_string(spec.hom.degree()) + ", diameter " + std::to_string(diameter) +
                     "\n");
    });

    auto* c_trans = app.add_subcommand("transversal", "left-coset transversal");
    add_group(c_trans);
    c_trans->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteIndexSubgroup s =
            FiniteIndexSubgroup::coset_transversal(spec.hom, spec.mode, cap_order);
        json reps = json::array();
        for (const auto& t : s.transversal()) reps.push_back(t.str());
        out.emit(json{{"index", s.index()}, {"mode", spec.mode.str()}, {"transversal", reps}},
                 "index " + std::to_string(s.index()) + ": " + render_words(s.transversal()) + "\n");
    });

    std::optional<unsigned> ygens_r;
    auto* c_ygens = app.add_subcommand("ygens", "Schreier generators and the ball generating set Y");
    add_group(c_ygens);
    c_ygens->add_option("--r", ygens_r, "explicit ball radius (default: auto)");
    c_ygens->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteIndexSubgroup s =
            FiniteIndexSubgroup::coset_transversal(spec.hom, spec.mode, cap_order);
        json sch = json::array();
        for (const auto& g : s.schreier_generators()) sch.push_back(g.str());
        s.ball_generating_set(ygens_r ? ygens_r : spec.r, cap_ball);
        json ys = json::array();
        for (const auto& y : s.y()) ys.push_back(y.str());
        out.emit(json{{"index", s.index()},
                      {"r", s.ball_radius()},
                      {"schreier_generators", sch},
                      {"Y", ys}},
                 "r = " + std::to_string(s.ball_radius()) + ", |Y| = " + std::to_string(s.y().size()) +
                     "\nY: " + render_words(s.y()) + "\n");
    });

    // ---- weights ----
    std::string weight_arg{R"({"kind":"radial","base":"2"})"};
    auto* c_weval = app.add_subcommand("weight-eval", "evaluate a weight at a word");
    c_weval->add_option("--weight", weight_arg, "weight spec (file or JSON)");
    c_weval->add_option("word", word_arg)->required();
    c_weval->callback([&] {
        WeightSpec spec = weight_spec_from_json(json::parse(slurp_spec(weight_arg)));
        FreeWord w = FreeWord::parse(word_arg);
        Rational value;
        if (spec.kind == WeightSpec::Kind::radial) {
            value = RadialWeight(spec.base).eval(w);
        } else {
            FiniteGroupTable table = quotient_table(spec.group->hom, cap_order);
            Permutation p = spec.group->hom.apply(w);
            value = spec.kind == WeightSpec::Kind::induced
                        ? induced_eval(spec.base, table, p)
                        : TableWeight(&table, spec.values).eval(p);
        }
        out.emit(json{{"word", w.str()}, {"value", value.str()}}, value.str() + "\n");
    });

    unsigned sm_rank = 2, sm_radius = 4;
    auto* c_sm = app.add_subcommand("submult-check", "exhaustive submultiplicativity check");
    c_sm->add_option("--weight", weight_arg, "weight spec (file or JSON)");
    c_sm->add_option("--ball-rank", sm_rank);
    c_sm->add_option("--ball-radius", sm_radius);
    c_sm->callback([&] {
        WeightSpec spec = weight_spec_from_json(json::parse(slurp_spec(weight_arg)));
        WeightCheckReport rep;
        if (spec.kind == WeightSpec::Kind::radial) {
            rep = check_submultiplicative(RadialWeight(spec.base), enumerate_ball(sm_rank, sm_radius, cap_ball));
        } else {
            FiniteGroupTable table = quotient_table(spec.group->hom, cap_order);
            rep = spec.kind == WeightSpec::Kind::induced
                      ? check_submultiplicative(InducedWeight(spec.base, &table), table)
                      : check_submultiplicative(TableWeight(&table, spec.values), table);
        }
        out.emit(weight_report_to_json(rep),
                 (rep.pass() ? "pass" : "FAIL") + std::string(": ") +
                     std::to_string(rep.checked_pairs) + " pairs, " +
                     std::to_string(rep.violation_count) + " violations\n");
        if (!rep.pass()) exit_code = 1;
    });

    // ---- algebra ----
    std::string elem_arg, elem_arg2;
    auto* c_conv = app.add_subcommand("conv", "convolve two elements");
    c_conv->add_option("f", elem_arg)->required();
    c_conv->add_option("g", elem_arg2)->required();
    c_conv->callback([&] {
        FreeElement f = parse_free_element(slurp_element(elem_arg));
        FreeElement g = parse_free_element(slurp_element(elem_arg2));
        FreeElement fg = convolve(f, g);
        out.emit(element_to_json(fg), element_str(fg) + "\n");
    });

    auto* c_norm = app.add_subcommand("norm", "weighted l1 norm bracket");
    c_norm->add_option("f", elem_arg)->required();
    c_norm->add_option("--weight", weight_arg, "weight spec (radial only here)");
    c_norm->callback([&] {
        WeightSpec spec = weight_spec_from_json(json::parse(slurp_spec(weight_arg)));
        if (spec.kind != WeightSpec::Kind::radial)
            throw ParseError("norm: only radial weights apply to free elements");
        FreeElement f = parse_free_element(slurp_element(elem_arg));
        NormBound n = weighted_norm(f, RadialWeight(spec.base));
        out.emit(norm_bound_to_json(n),
                 n.exact() ? n.lower.str() + "\n"
                           : "[" + n.lower.str() + ", " + n.upper.str() + "]\n");
    });

    auto* c_aug = app.add_subcommand("aug", "augmentation (coefficient sum)");
    c_aug->add_option("f", elem_arg)->required();
    c_aug->callback([&] {
        FreeElement f = parse_free_element(slurp_element(elem_arg));
        out.emit(gaussian_to_json(augmentation(f)), gaussian_str(augmentation(f)) + "\n");
    });

    auto* c_cosets = app.add_subcommand("coset-sums", "sums over the left cosets of H");
    c_cosets->add_option("f", elem_arg)->required();
    add_group(c_cosets);
    c_cosets->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteIndexSubgroup sub = subgroup_from_spec(spec, cap_order);
        FreeElement f = parse_free_element(slurp_element(elem_arg));
        auto sums = coset_sums(f, sub);
        json arr = json::array();
        std::string text;
        bool all_zero = true;
        for (std::size_t i = 0; i < sums.size(); ++i) {
            arr.push_back(json{{"coset", sub.transversal()[i].str()},
                               {"sum", gaussian_to_json(sums[i])}});
            text += sub.transversal()[i].str() + "H: " + gaussian_str(sums[i]) + "\n";
            all_zero = all_zero && sums[i].is_zero();
        }
        out.emit(json{{"sums", arr}, {"in_ideal", all_zero}}, text);
    });

    auto* c_push = app.add_subcommand("push", "pushforward along the quotient map");
    c_push->add_option("f", elem_arg)->required();
    add_group(c_push);
    c_push->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FreeElement f = parse_free_element(slurp_element(elem_arg));
        QuotientElement q = push_forward(f, spec.hom);
        out.emit(element_to_json(q), element_str(q) + "\n");
    });

    // ---- certificates ----
    std::string u_arg;
    std::string base_arg = "2";
    auto* c_cert = app.add_subcommand("certificate", "telescope certificate for delta_e - delta_u");
    add_group(c_cert);
    c_cert->add_option("--u", u_arg)->required();
    c_cert->add_option("--base", base_arg, "radial weight base");
    c_cert->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteIndexSubgroup sub = subgroup_from_spec(spec, cap_order);
        YGraph graph(sub);
        TelescopeCertificate cert =
            telescope_certificate(sub, graph, FreeWord::parse(u_arg), parse_rational(base_arg));
        out.emit(certificate_to_json(cert),
                 "|u|_Y = " + std::to_string(cert.factorization.length()) +
                     ", identity checked, " + std::to_string(cert.g.size()) + " generators used\n");
    });

    auto* c_dec = app.add_subcommand("decompose", "augmentation-ideal decomposition on H");
    add_group(c_dec);
    c_dec->add_option("--elem", elem_arg)->required();
    c_dec->add_option("--base", base_arg, "radial weight base");
    c_dec->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteIndexSubgroup sub = subgroup_from_spec(spec, cap_order);
        YGraph graph(sub);
        AugmentationDecomposition dec = decompose_augmentation(
            sub, graph, parse_free_element(slurp_element(elem_arg)), parse_rational(base_arg));
        out.emit(decomposition_to_json(dec),
                 "decomposed over " + std::to_string(dec.phi.size()) + " generators\n");
    });

    auto* c_expr = app.add_subcommand("express", "expression in the J-ideal generators");
    add_group(c_expr);
    c_expr->add_option("--elem", elem_arg)->required();
    c_expr->add_option("--base", base_arg, "radial weight base");
    c_expr->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteIndexSubgroup sub = subgroup_from_spec(spec, cap_order);
        YGraph graph(sub);
        JGeneratorExpression ex = express_in_J_generators(
            sub, graph, parse_free_element(slurp_element(elem_arg)), parse_rational(base_arg));
        out.emit(expression_to_json(ex),
                 "expressed through " + std::to_string(ex.psi.size()) + " generators\n");
    });

    // ---- finite models ----
    std::string sub_arg, ideal_arg;
    auto* c_lift = app.add_subcommand("lift", "lift an ideal along a finite-index subgroup");
    add_group(c_lift);
    c_lift->add_option("--sub", sub_arg, "comma-separated subgroup generator words")->required();
    c_lift->add_option("--ideal", ideal_arg, "semicolon-separated ideal generators (free elements)")
        ->required();
    c_lift->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteGroupTable table = quotient_table(spec.hom, cap_order);
        std::vector<std::size_t> gens;
        std::stringstream ss(sub_arg);
        std::string tok;
        while (std::getline(ss, tok, ','))
            gens.push_back(table.index_of(spec.hom.apply(FreeWord::parse(tok))));
        FiniteSubgroup sub = FiniteSubgroup::generated_by(table, gens);
        std::vector<QuotientElement> basis;
        std::stringstream is(ideal_arg);
        while (std::getline(is, tok, ';'))
            basis.push_back(push_forward(parse_free_element(tok), spec.hom));
        LiftedIdeal lift = lift_ideal(table, sub, basis);
        RowSpace ispace(table.order());
        for (const auto& b : basis)
            for (std::size_t h : sub.elements())
                ispace.insert(to_vector(convolve(table_delta(table, h), b), table));
        RowSpace jspace = left_ideal_span(table, lift.j_generators);
        std::size_t codim_i = sub.order() - ispace.rank();
        json jg = json::array();
        for (const auto& g : lift.j_generators) jg.push_back(element_to_json(g));
        out.emit(json{{"index", sub.index()},
                      {"normal", sub.is_normal()},
                      {"codim_I", codim_i},
                      {"codim_J", jspace.codim()},
                      {"codim_identity", jspace.codim() == sub.index() * codim_i},
                      {"j_generators", jg},
                      {"witnesses", lift.witnesses.size()}},
                 "codim J = " + std::to_string(jspace.codim()) + " = " +
                     std::to_string(sub.index()) + " * " + std::to_string(codim_i) + "\n");
        if (jspace.codim() != sub.index() * codim_i) exit_code = 1;
    });

    std::string file_arg;
    auto* c_extract = app.add_subcommand("extract", "re-derive a subgroup element from a J-expression");
    add_group(c_extract);
    c_extract->add_option("--sub", sub_arg, "comma-separated subgroup generator words")->required();
    c_extract->add_option("--file", file_arg, "JSON file: {g, expression: [{h, f}]}")->required();
    c_extract->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteGroupTable table = quotient_table(spec.hom, cap_order);
        std::vector<std::size_t> gens;
        std::stringstream ss(sub_arg);
        std::string tok;
        while (std::getline(ss, tok, ','))
            gens.push_back(table.index_of(spec.hom.apply(FreeWord::parse(tok))));
        FiniteSubgroup sub = FiniteSubgroup::generated_by(table, gens);
        std::ifstream in(file_arg);
        if (!in) throw ParseError("cannot open '" + file_arg + "'");
        json doc = json::parse(in);
        auto elem = [&](const json& e) {
            if (e.is_string()) return push_forward(parse_free_element(e.get<std::string>()), spec.hom);
            if (e.contains("terms") && !e.at("terms").empty() && e.at("terms")[0].contains("perm"))
                return quotient_element_from_json(e);
            return push_forward(free_element_from_json(e), spec.hom);
        };
        QuotientElement g = elem(doc.at("g"));
        std::vector<std::pair<QuotientElement, QuotientElement>> expression;
        for (const auto& pair : doc.at("expression"))
            expression.emplace_back(elem(pair.at("h")), elem(pair.at("f")));
        ExtractedExpression ex = extract_subgroup_expression(table, sub, g, expression);
        json terms = json::array();
        for (const auto& t : ex.terms)
            terms.push_back(json{{"i", t.i},
                                 {"k", t.k},
                                 {"k_prime", t.k_prime},
                                 {"coefficient", element_to_json(t.coefficient)},
                                 {"component", element_to_json(t.component)}});
        out.emit(json{{"verified", ex.verified}, {"terms", std::move(terms)}},
                 "extraction verified with " + std::to_string(ex.terms.size()) + " terms\n");
    });

    // ---- separation ----
    unsigned lmax = 8;
    auto* c_sep = app.add_subcommand("separate", "find a separating finite quotient");
    c_sep->add_option("--elem", elem_arg)->required();
    c_sep->add_option("--lmax", lmax, "maximal family level");
    c_sep->callback([&] {
        FreeElement f = parse_free_element(slurp_element(elem_arg));
        SeparationResult res = separate(f, QuotientFamily::grigorchuk(), lmax);
        out.emit(separation_to_json(res),
                 "separated at level " + std::to_string(res.level) + ", q(f)(e) = " +
                     gaussian_str(res.identity_sum) + "\n");
    });

    auto* c_l23 = app.add_subcommand("lemma23", "cancellation checks for one subgroup word");
    add_group(c_l23);
    c_l23->add_option("--u", u_arg)->required();
    std::size_t fact_cap = 10'000;
    c_l23->add_option("--cap", fact_cap, "factorization cap");
    c_l23->callback([&] {
        GroupSpec spec = parse_group_spec(slurp_spec(group_arg));
        FiniteIndexSubgroup sub = subgroup_from_spec(spec, cap_order);
        YGraph graph(sub);
        FreeWord u = FreeWord::parse(u_arg);
        bool truncated = false;
        json reports = json::array();
        bool all_pass = true;
        for (const YFactorization& fact : graph.all_geodesics(u, fact_cap, &truncated)) {
            CancellationReport rep = check_lemma_2_3(sub, graph, fact);
            all_pass = all_pass && rep.pass;
            reports.push_back(cancellation_report_to_json(rep));
        }
        out.emit(json{{"u", u.str()},
                      {"factorizations", reports.size()},
                      {"truncated", truncated},
                      {"pass", all_pass},
                      {"reports", std::move(reports)}},
                 std::to_string(reports.size()) + " geodesic factorizations, " +
                     (all_pass ? "all pass" : "VIOLATIONS FOUND") + "\n");
        if (!all_pass) exit_code = 1;
    });

    // ---- suites ----
    std::string suite_arg;
    auto* c_suite = app.add_subcommand("suite", "run a named property suite");
    c_suite->add_option("name", suite_arg)->required();
    c_suite->callback([&] {
        SuiteReport rep = run_suite(suite_arg, seed);
        std::string text = rep.suite + " (seed " + std::to_string(seed) + "): " +
                           (rep.pass ? "pass" : "FAIL") + ", " + std::to_string(rep.checks) +
                           " checks\n";
        for (const auto& c : rep.cases)
            text += "  [" + std::string(c.pass ? "ok" : "FAIL") + "] " + c.name +
                    (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
        out.emit(suite_report_to_json(rep), text);
        if (!rep.pass) exit_code = 1;
    });

    // global flags (--format, --seed, caps) may follow the subcommand
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what();
        if (e.offset != std::string::npos) std::cerr << " (offset " << e.offset << ")";
        std::cerr << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const RankError& e) {
        std::cerr << "rank mismatch: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
