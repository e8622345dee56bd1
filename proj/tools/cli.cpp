#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "primegraph/arith.hpp"
#include "primegraph/data.hpp"
#include "primegraph/graph.hpp"
#include "primegraph/liedeg.hpp"
#include "primegraph/odpipeline.hpp"
#include "primegraph/spectra.hpp"

namespace primegraph::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Group token parsing

std::vector<std::string> family_suggestions() {
    return {"L4(19)", "U4(7)",  "S4(19)", "O7(23)", "O8+(23)", "O8-(5)", "A3(19)", "2A3(7)",
            "B3(23)", "C2(19)", "D4(23)", "2D4(5)", "G2(27)",  "F4(5)",  "E6(3)",  "E7(3)",
            "E8(2)",  "2E6(3)", "3D4(7)", "2B2(8)", "2G2(27)", "2F4(8)", "Sz(8)",  "R(27)",
            "Alt(13)"};
}

Nat parse_field_size(const std::string& text) {
    std::size_t caret = text.find('^');
    if (caret == std::string::npos) return nat_from_string(text);
    Nat base = nat_from_string(text.substr(0, caret));
    Nat exp = nat_from_string(text.substr(caret + 1));
    return pow_nat(base, to_ulong_checked(exp, "field exponent"));
}

[[noreturn]] void unknown_token(const std::string& token, const std::string& why) {
    throw UnknownGroupToken("cannot parse group token '" + token + "': " + why,
                            family_suggestions());
}

}  // namespace

catalog::GroupId parse_group_token(const std::string& token) {
    using namespace catalog;
    std::string t;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '{' && c != '}')
            t.push_back(c);
    if (t.empty()) unknown_token(token, "empty");

    // Sporadic names resolve directly ("HS" as a spelling of HiS).
    if (sporadic_orders().count(t)) return Named{t};
    if (t == "HS") return Named{"HiS"};

    std::size_t open = t.find('(');
    if (open == std::string::npos || t.back() != ')') unknown_token(token, "expected 'name(q)'");
    std::string head = t.substr(0, open);
    std::string qtext = t.substr(open + 1, t.size() - open - 2);
    if (head.empty() || qtext.empty()) unknown_token(token, "expected 'name(q)'");

    Nat q;
    try {
        q = parse_field_size(qtext);
    } catch (const std::exception& e) {
        unknown_token(token, e.what());
    }

    auto validated = [&](GroupId g) {
        try {
            validate(g);
        } catch (const UnsupportedGroup& e) {
            unknown_token(token, e.what());
        }
        return g;
    };

    // Trailing +/- select the two orthogonal families of even dimension.
    bool plus = head.back() == '+';
    bool minus = head.back() == '-';
    std::string stem = plus || minus ? head.substr(0, head.size() - 1) : head;

    std::size_t digits = 0;
    while (digits < stem.size() &&
           std::isdigit(static_cast<unsigned char>(stem[stem.size() - 1 - digits])))
        ++digits;
    std::string fam = stem.substr(0, stem.size() - digits);
    unsigned sub = 0;
    if (digits) sub = static_cast<unsigned>(std::stoul(stem.substr(stem.size() - digits)));

    // Whole-stem names whose digits belong to the family symbol.
    if (!plus && !minus) {
        if (stem == "G2") return validated(Exceptional{ExceptionalFamily::G2, q});
        if (stem == "F4") return validated(Exceptional{ExceptionalFamily::F4, q});
        if (stem == "E6") return validated(Exceptional{ExceptionalFamily::E6, q});
        if (stem == "E7") return validated(Exceptional{ExceptionalFamily::E7, q});
        if (stem == "E8") return validated(Exceptional{ExceptionalFamily::E8, q});
        if (stem == "2E6") return validated(Exceptional{ExceptionalFamily::TwoE6, q});
        if (stem == "3D4") return validated(Exceptional{ExceptionalFamily::ThreeD4, q});
        if (stem == "2B2" || stem == "Sz")
            return validated(SuzukiRee{SuzukiReeFamily::TwoB2, q});
        if (stem == "2G2" || stem == "R") return validated(SuzukiRee{SuzukiReeFamily::TwoG2, q});
        if (stem == "2F4") return validated(SuzukiRee{SuzukiReeFamily::TwoF4, q});
        if (stem == "Alt") {
            if (!q.fits_ulong_p()) unknown_token(token, "alternating degree too large");
            return validated(Alternating{static_cast<unsigned>(q.get_ui())});
        }
    }

    if (digits == 0) unknown_token(token, "missing rank subscript");

    if (plus || minus) {
        if (fam != "O" || sub % 2 != 0 || sub < 6)
            unknown_token(token, "O+/O- require an even dimension >= 6");
        return validated(Classical{plus ? ClassicalFamily::D : ClassicalFamily::TwoD, sub / 2, q});
    }
    if (fam == "L") return validated(Classical{ClassicalFamily::A, sub, q});
    if (fam == "U") return validated(Classical{ClassicalFamily::TwoA, sub, q});
    if (fam == "S") {
        if (sub % 2 != 0) unknown_token(token, "S requires an even dimension");
        return validated(Classical{ClassicalFamily::C, sub / 2, q});
    }
    if (fam == "O") {
        if (sub % 2 == 0) unknown_token(token, "O with even dimension needs a +/- sign");
        return validated(Classical{ClassicalFamily::B, (sub - 1) / 2, q});
    }
    if (fam == "A") return validated(Classical{ClassicalFamily::A, sub + 1, q});
    if (fam == "2A") return validated(Classical{ClassicalFamily::TwoA, sub + 1, q});
    if (fam == "B") return validated(Classical{ClassicalFamily::B, sub, q});
    if (fam == "C") return validated(Classical{ClassicalFamily::C, sub, q});
    if (fam == "D") return validated(Classical{ClassicalFamily::D, sub, q});
    if (fam == "2D") {
        // 2D2(q) is isomorphic to A1(q^2); resolved at parse time.
        if (sub == 2) return validated(Classical{ClassicalFamily::A, 2, q * q});
        return validated(Classical{ClassicalFamily::TwoD, sub, q});
    }
    unknown_token(token, "unknown family '" + fam + "'");
}

namespace {

// ---------------------------------------------------------------------------
// Shared command state

struct CliState {
    std::string data_dir;
    std::string factor_table_path;
    std::string format = "text";
    arith::FactorTable ftable;
    arith::FactorConfig config;
    std::optional<data::DataContext> data;
    std::string data_error;

    const data::DataContext* data_or_null() {
        if (!data && data_error.empty()) {
            try {
                data = data::DataContext::load(data_dir);
            } catch (const std::exception& e) {
                data_error = e.what();
            }
        }
        return data ? &*data : nullptr;
    }
};

graph::PrimeGraph graph_for(CliState& st, const catalog::GroupId& g) {
    if (const auto* alt = std::get_if<catalog::Alternating>(&g))
        return spectra::gk_alternating(alt->n);
    if (const auto* named = std::get_if<catalog::Named>(&g))
        if (auto comps = catalog::clique_components(named->name))
            return graph::PrimeGraph::from_clique_components(*comps);
    const data::DataContext* d = st.data_or_null();
    return spectra::prime_graph_from_spectrum(
        spectra::spectrum_of(g, d ? &d->l4_spectra : nullptr), st.config);
}

std::string graph_text(const graph::PrimeGraph& g) {
    std::ostringstream os;
    os << "vertices: ";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? " " : "") << g.vertices()[i].get_str();
    os << "\nedges:";
    for (const auto& [a, b] : g.edges()) os << " {" << a.get_str() << "," << b.get_str() << "}";
    os << "\ndegree pattern: " << graph::degree_pattern(g).str();
    os << "\nvartheta: " << graph::vartheta(g);
    auto cd = graph::components(g);
    os << "\ncomponents:";
    for (const auto& comp : cd.components) {
        os << " {";
        for (std::size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i].get_str();
        os << "}";
    }
    os << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Verification sections

struct Section {
    std::string name;
    bool pass = true;
    std::vector<std::string> known;  // surfaced discrepancies that do not fail the run
    std::string body;
};

Section section_from_report(const std::string& name, const odpipeline::Report& rep) {
    Section s;
    s.name = name;
    s.pass = rep.passed();
    s.body = rep.text();
    // Surfaced source-table findings ride along as known discrepancies so
    // --strict can promote them.
    for (const auto& n : rep.notes)
        if (n.find("discrepancy") != std::string::npos ||
            n.find("misprint") != std::string::npos ||
            n.find("absent from the companion list") != std::string::npos)
            s.known.push_back(n);
    return s;
}

Section run_zsigmondy_section() {
    Section s;
    s.name = "zsigmondy";
    std::ostringstream os;
    std::set<std::pair<unsigned long, unsigned long>> empties;
    for (unsigned long a = 2; a <= 30; ++a)
        for (unsigned long m = 1; m <= 12; ++m)
            if (arith::primitive_prime_divisors(Nat(a), m).empty()) empties.insert({a, m});
    std::set<std::pair<unsigned long, unsigned long>> expected{{2, 1}, {3, 1}, {2, 6}};
    bool sweep_ok = empties == expected;
    os << "  [" << (sweep_ok ? "pass" : "FAIL")
       << "] sweep 2<=a<=30, 1<=m<=12: empty exactly at (2,1), (3,1), (2,6)\n";
    auto r61 = arith::primitive_prime_divisors(Nat(61), 6);
    bool r61_ok = r61.primes == std::vector<Nat>{Nat(7), Nat(523)};
    os << "  [" << (r61_ok ? "pass" : "FAIL") << "] R_6(61) = {7, 523}\n";
    s.pass = sweep_ok && r61_ok;
    s.body = os.str();
    return s;
}

Section run_table5_section(const data::DataContext& d) {
    Section s;
    s.name = "table5";
    std::ostringstream os;
    std::size_t n = d.candidates.records().size();
    bool ok = n == 102;
    for (const auto& rec : d.candidates.records()) {
        if (rec.order.empty() || rec.order.max_prime() != rec.max_prime) ok = false;
        for (const auto& fe : rec.order.entries())
            if (!arith::is_prime(fe.prime)) ok = false;
    }
    os << "  [" << (ok ? "pass" : "FAIL") << "] " << n
       << " records validated (primality, max prime, uniqueness)\n";
    s.pass = ok;
    s.body = os.str();
    return s;
}

Section run_crosscheck_section(const data::DataContext& d, const arith::FactorConfig& config) {
    using catalog::Classical;
    using catalog::ClassicalFamily;
    using catalog::GroupId;
    using catalog::SuzukiRee;
    using catalog::SuzukiReeFamily;
    Section s;
    s.name = "crosscheck";
    std::ostringstream os;
    std::vector<GroupId> groups;
    for (unsigned long q = 5; q <= 200; ++q)
        if (arith::is_prime_power(Nat(q))) groups.push_back(Classical{ClassicalFamily::A, 2, Nat(q)});
    for (unsigned long q : {5ul, 7ul, 13ul, 19ul, 25ul})
        groups.push_back(Classical{ClassicalFamily::A, 3, Nat(q)});
    for (unsigned long q : {8ul, 32ul, 128ul})
        groups.push_back(SuzukiRee{SuzukiReeFamily::TwoB2, Nat(q)});
    for (unsigned long q : {8ul, 32ul}) groups.push_back(SuzukiRee{SuzukiReeFamily::TwoF4, Nat(q)});
    for (unsigned long q : {27ul, 243ul}) groups.push_back(SuzukiRee{SuzukiReeFamily::TwoG2, Nat(q)});
    for (unsigned q : {19u, 23u, 25u, 27u, 29u, 31u, 37u})
        groups.push_back(Classical{ClassicalFamily::A, 4, Nat(static_cast<unsigned long>(q))});

    unsigned agreed = 0;
    for (const auto& g : groups) {
        liedeg::CrossCheck cc = liedeg::cross_check_degree(g, &d.l4_spectra, config);
        bool is_2g2 = std::holds_alternative<SuzukiRee>(g) &&
                      std::get<SuzukiRee>(g).family == SuzukiReeFamily::TwoG2;
        if (cc.clean()) {
            ++agreed;
        } else if (is_2g2 && cc.agree_p && !cc.agree_2) {
            s.known.push_back(cc.group + ": deg(2) closed form " +
                              std::to_string(cc.formula_2.value) + " vs spectrum " +
                              std::to_string(cc.spectrum_2));
        } else {
            s.pass = false;
            os << "  [FAIL] " << cc.group << ": formula (" << cc.formula_2.value << ", "
               << cc.formula_p.value << ") vs spectrum (" << cc.spectrum_2 << ", "
               << cc.spectrum_p << ")\n";
        }
    }
    os << "  [" << (s.pass ? "pass" : "FAIL") << "] " << agreed << "/" << groups.size()
       << " groups: closed-form deg(2)/deg(p) equal the spectrum-derived degrees\n";
    s.body = os.str();
    return s;
}

Section run_candidate_lists_section(const data::DataContext& d) {
    Section s;
    s.name = "candidate-lists";
    std::ostringstream os;
    for (const auto& cs : odpipeline::cases_expected()) {
        Factorization orderG;
        for (const auto& row : odpipeline::l4_rows_expected())
            if (row.q == cs.q) orderG = Factorization::parse(row.order);
        auto computed = odpipeline::candidate_simple_groups(orderG.max_prime(), orderG.primes(),
                                                            &d.candidates);
        std::set<std::string> got;
        for (const auto& r : computed) got.insert(r.name);
        std::set<std::string> want(cs.printed_candidates.begin(), cs.printed_candidates.end());
        if (got == want) {
            os << "  [pass] q=" << cs.q << ": computed list equals the printed statement\n";
            continue;
        }
        std::set<std::string> extra, missing;
        std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                            std::inserter(extra, extra.end()));
        std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                            std::inserter(missing, missing.end()));
        if (missing.empty() && extra == std::set<std::string>{"S8(5)"}) {
            s.known.push_back(
                "q=25: the packaged S8(5) row satisfies the printed statement's own filter "
                "(313 in pi = {2,3,5,7,13,31,313} = allowed) but is absent from the printed "
                "list; its order does not divide |L4(25)|, so the case analysis is unaffected");
            os << "  [known-discrepancy] q=25: computed list = printed + {S8(5)}\n";
        } else {
            s.pass = false;
            os << "  [FAIL] q=" << cs.q << ": computed and printed lists differ\n";
        }
    }
    s.body = os.str();
    return s;
}

std::vector<Section> run_verify_sections(CliState& st, const std::string& only, int q_filter,
                                         bool parallel) {
    struct Job {
        std::string name;
        std::function<Section()> fn;
    };
    std::vector<Job> jobs;
    const data::DataContext* d = st.data_or_null();

    auto data_section = [&](const std::string& name) {
        Section s;
        s.name = name;
        s.pass = false;
        s.body = "  [FAIL] dataset missing: " + st.data_error + "\n";
        return s;
    };

    for (const auto& row : odpipeline::l4_rows_expected()) {
        if (q_filter > 0 && static_cast<unsigned>(q_filter) != row.q) continue;
        std::string name = "table2/q=" + std::to_string(row.q);
        unsigned q = row.q;
        jobs.push_back({name, [&st, d, name, q, data_section] {
                            if (!d) return data_section(name);
                            return section_from_report(name, odpipeline::verify_table2(q, *d));
                        }});
    }
    for (const auto& cs : odpipeline::cases_expected()) {
        if (q_filter > 0 && static_cast<unsigned>(q_filter) != cs.q) continue;
        std::string name = "cases/q=" + std::to_string(cs.q);
        unsigned q = cs.q;
        jobs.push_back({name, [&st, d, name, q, data_section] {
                            if (!d) return data_section(name);
                            return section_from_report(name,
                                                       odpipeline::verify_characterization_case(q, *d));
                        }});
    }
    if (q_filter <= 0) {
        jobs.push_back({"table5", [d, data_section] {
                            return d ? run_table5_section(*d) : data_section("table5");
                        }});
        jobs.push_back({"zsigmondy", [] { return run_zsigmondy_section(); }});
        jobs.push_back({"crosscheck", [&st, d, data_section] {
                            return d ? run_crosscheck_section(*d, st.config)
                                     : data_section("crosscheck");
                        }});
        jobs.push_back({"candidate-lists", [d, data_section] {
                            return d ? run_candidate_lists_section(*d) : data_section("candidate-lists");
                        }});
    }

    std::vector<Job> selected;
    for (auto& j : jobs)
        if (only.empty() || j.name.rfind(only, 0) == 0) selected.push_back(std::move(j));

    std::vector<Section> out(selected.size());
    if (parallel) {
        std::vector<std::future<Section>> futs;
        futs.reserve(selected.size());
        for (auto& j : selected) futs.push_back(std::async(std::launch::async, j.fn));
        for (std::size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < selected.size(); ++i) out[i] = selected[i].fn();
    }
    return out;
}

int print_sections(const std::vector<Section>& sections, bool strict, const std::string& format,
                   std::ostream& out) {
    bool any_fail = false;
    bool any_known = false;
    for (const auto& s : sections) {
        if (!s.pass) any_fail = true;
        if (!s.known.empty()) any_known = true;
    }
    bool verdict_fail = any_fail || (strict && any_known);

    if (format == "json") {
        json j;
        j["sections"] = json::array();
        for (const auto& s : sections) {
            json js;
            js["name"] = s.name;
            js["verdict"] = s.pass ? (s.known.empty() ? "pass" : "pass-with-known-discrepancy")
                                   : "fail";
            js["known_discrepancies"] = s.known;
            js["detail"] = s.body;
            j["sections"].push_back(std::move(js));
        }
        j["verdict"] = verdict_fail ? "fail" : "pass";
        out << j.dump(2) << "\n";
    } else {
        for (const auto& s : sections) {
            out << "== " << s.name << ": "
                << (s.pass ? (s.known.empty() ? "pass" : "pass (known discrepancy)") : "FAIL")
                << "\n";
            out << s.body;
            for (const auto& k : s.known) out << "  known-discrepancy: " << k << "\n";
        }
        std::size_t fails = 0;
        for (const auto& s : sections)
            if (!s.pass) ++fails;
        out << "== summary: " << sections.size() << " sections, " << fails << " failed"
            << (any_known ? ", known discrepancies present" : "") << "\n";
    }
    if (sections.empty()) return 2;
    return verdict_fail ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Verb handlers

int cmd_factor(CliState& st, const std::string& value, std::ostream& out) {
    Nat n = nat_from_string(value);
    try {
        Factorization f = arith::factor(n, st.config);
        // Factors at or above 2^64 pass the fixed witness schedule, not a
        // deterministic test; surface their status.
        std::vector<std::string> probable;
        for (const auto& fe : f.entries())
            if (arith::classify(fe.prime) == arith::Primality::probable_prime)
                probable.push_back(fe.prime.get_str());
        if (st.format == "json") {
            json j;
            j["value"] = n.get_str();
            j["factorization"] = f.str();
            j["complete"] = true;
            j["strong_probable_primes"] = probable;
            out << j.dump(2) << "\n";
        } else {
            out << n.get_str() << " = " << f.str() << "\n";
            for (const auto& p : probable)
                out << "note: " << p << " is a strong probable prime (above the deterministic "
                    << "witness range)\n";
        }
        return 0;
    } catch (const arith::FactorizationIncomplete& inc) {
        if (st.format == "json") {
            json j;
            j["value"] = n.get_str();
            j["partial"] = inc.partial.str();
            j["cofactor"] = inc.cofactor.get_str();
            j["complete"] = false;
            out << j.dump(2) << "\n";
        } else {
            out << n.get_str() << " = " << inc.partial.str() << " * [composite "
                << inc.cofactor.get_str() << "]\n";
        }
        return 1;
    }
}

int cmd_order(CliState& st, const std::string& token, std::ostream& out) {
    catalog::GroupId g = parse_group_token(token);
    const data::DataContext* d = st.data_or_null();
    Factorization f = catalog::order(g, st.config, d ? &d->candidates : nullptr);
    if (st.format == "json") {
        json j;
        j["group"] = token;
        j["canonical"] = catalog::display_name(g);
        j["order"] = f.str();
        json ps = json::array();
        for (const Nat& p : f.primes()) ps.push_back(p.get_str());
        j["pi"] = std::move(ps);
        out << j.dump(2) << "\n";
    } else {
        out << "|" << token << "| = " << f.str() << "\n";
    }
    return 0;
}

int cmd_graph(CliState& st, const std::string& token, std::ostream& out) {
    catalog::GroupId g = parse_group_token(token);
    graph::PrimeGraph gk = graph_for(st, g);
    if (st.format == "json") {
        out << graph::export_graph(gk, graph::ExportFormat::structured);
    } else if (st.format == "dot") {
        // The published drawings keep the defining characteristic as its own
        // node even when it is a twin; pin it when the group supplies one.
        std::vector<Nat> pinned;
        const Nat* q = nullptr;
        if (const auto* c = std::get_if<catalog::Classical>(&g)) q = &c->q;
        if (const auto* e = std::get_if<catalog::Exceptional>(&g)) q = &e->q;
        if (const auto* s = std::get_if<catalog::SuzukiRee>(&g)) q = &s->q;
        if (q) pinned.push_back(catalog::field_of(*q).p);
        out << graph::render_dot(graph::compact_form(gk, pinned));
    } else {
        out << graph_text(gk);
    }
    return 0;
}

int cmd_degrees(CliState& st, const std::string& token, std::ostream& out) {
    catalog::GroupId g = parse_group_token(token);
    liedeg::DegreeResult dp = liedeg::deg_p(g, st.config);
    liedeg::DegreeResult d2 = liedeg::deg_2(g, st.config);

    std::optional<liedeg::CrossCheck> cc;
    const data::DataContext* d = st.data_or_null();
    try {
        cc = liedeg::cross_check_degree(g, d ? &d->l4_spectra : nullptr, st.config);
    } catch (const catalog::UnsupportedGroup&) {
        // no spectrum available: formulas stand alone
    }

    if (st.format == "json") {
        json j;
        j["group"] = token;
        auto emit = [](const liedeg::DegreeResult& r) {
            json jr;
            jr["vertex"] = r.vertex.get_str();
            jr["value"] = r.value;
            jr["branch"] = r.branch;
            json removed = json::array();
            for (const auto& rs : r.removed) {
                json e;
                e["m"] = rs.m;
                json ps = json::array();
                for (const Nat& p : rs.primes) ps.push_back(p.get_str());
                e["primes"] = std::move(ps);
                removed.push_back(std::move(e));
            }
            jr["removed_sets"] = std::move(removed);
            if (r.warning) jr["warning"] = *r.warning;
            return jr;
        };
        j["deg_p"] = emit(dp);
        j["deg_2"] = emit(d2);
        if (cc) {
            j["spectrum_deg_p"] = cc->spectrum_p;
            j["spectrum_deg_2"] = cc->spectrum_2;
            j["agree"] = cc->clean();
        }
        out << j.dump(2) << "\n";
    } else {
        out << "deg(" << dp.vertex.get_str() << ") = " << dp.value << "   [" << dp.branch << "]\n";
        out << "deg(2) = " << d2.value << "   [" << d2.branch << "]\n";
        if (dp.warning) out << "warning: " << *dp.warning << "\n";
        if (d2.warning) out << "warning: " << *d2.warning << "\n";
        if (cc) {
            out << "spectrum cross-check: deg(" << dp.vertex.get_str() << ") = " << cc->spectrum_p
                << ", deg(2) = " << cc->spectrum_2 << " -> "
                << (cc->clean() ? "agree" : "MISMATCH") << "\n";
        }
    }
    return 0;
}

int cmd_bounds(CliState& st, const std::string& token, const std::string& sizes_csv,
               std::ostream& out) {
    std::vector<std::size_t> sizes;
    std::optional<unsigned long long> actual;
    bool principal_complete = false;
    if (!sizes_csv.empty()) {
        std::stringstream ss(sizes_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            sizes.push_back(static_cast<std::size_t>(std::stoull(item)));
    } else {
        catalog::GroupId g = parse_group_token(token);
        graph::PrimeGraph gk = graph_for(st, g);
        graph::ThetaEqualityReport rep = graph::check_theta_equality(gk);
        sizes = rep.component_sizes;
        actual = rep.theta;
        principal_complete = rep.principal_complete;
    }
    auto [lo, hi] = graph::theta_bounds(sizes, true);
    if (st.format == "json") {
        json j;
        j["component_sizes"] = sizes;
        j["lower"] = lo;
        j["upper"] = hi;
        if (actual) {
            j["vartheta"] = *actual;
            j["principal_complete"] = principal_complete;
            j["within_bounds"] = lo <= *actual && *actual <= hi;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "component sizes:";
        for (auto s : sizes) out << " " << s;
        out << "\nbounds: " << lo << " <= vartheta <= " << hi << "\n";
        if (actual)
            out << "vartheta = " << *actual << " (principal component "
                << (principal_complete ? "complete; attains the upper bound" : "not complete")
                << ")\n";
    }
    return 0;
}

int cmd_zsig(CliState& st, const std::string& a_text, const std::string& m_text,
             std::ostream& out) {
    Nat a = nat_from_string(a_text);
    unsigned long m = to_ulong_checked(nat_from_string(m_text), "exponent m");
    arith::ZsigmondySet zs = arith::primitive_prime_divisors(a, m, st.config);
    if (st.format == "json") {
        json j;
        j["base"] = a.get_str();
        j["exponent"] = m;
        json ps = json::array();
        for (const Nat& p : zs.primes) ps.push_back(p.get_str());
        j["primes"] = std::move(ps);
        out << j.dump(2) << "\n";
    } else {
        out << "R_" << m << "(" << a.get_str() << ") = {";
        for (std::size_t i = 0; i < zs.primes.size(); ++i)
            out << (i ? ", " : "") << zs.primes[i].get_str();
        out << "}\n";
    }
    return 0;
}

int cmd_candidates(CliState& st, const std::string& token, const std::string& p_text,
                   const std::string& allowed_csv, std::ostream& out, std::ostream& err) {
    Nat max_prime;
    std::vector<Nat> allowed;
    if (!token.empty()) {
        catalog::GroupId g = parse_group_token(token);
        const data::DataContext* d = st.data_or_null();
        Factorization f = catalog::order(g, st.config, d ? &d->candidates : nullptr);
        allowed = f.primes();
        max_prime = f.max_prime();
    } else if (!p_text.empty() && !allowed_csv.empty()) {
        max_prime = nat_from_string(p_text);
        std::stringstream ss(allowed_csv);
        std::string item;
        while (std::getline(ss, item, ',')) allowed.push_back(nat_from_string(item));
        std::sort(allowed.begin(), allowed.end());
    } else {
        err << "candidates: give a group token or both --p and --allowed\n";
        return 2;
    }
    const data::DataContext* d = st.data_or_null();
    auto records =
        odpipeline::candidate_simple_groups(max_prime, allowed, d ? &d->candidates : nullptr);
    if (st.format == "json") {
        json j = json::array();
        for (const auto& r : records) {
            json e;
            e["name"] = r.name;
            e["order"] = r.order.str();
            e["source"] = r.source;
            j.push_back(std::move(e));
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : records)
            out << r.name << "  |S| = " << r.order.str() << "  (" << r.source << ")\n";
        if (records.empty()) out << "(no candidates)\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prime graphs, degree patterns and order arithmetic for finite simple groups"};
    app.require_subcommand(0, 1);
    // Global flags remain usable after a subcommand name.
    app.fallthrough();

    CliState st;
    st.data_dir = data::default_data_dir();
    app.add_option("--data", st.data_dir, "data directory (default: PRIMEGRAPH_DATA or built-in)");
    app.add_option("--factor-table", st.factor_table_path, "auxiliary factor table file");
    app.add_option("--format", st.format, "output format: text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    std::string arg_value, arg_group, arg_a, arg_m, arg_sizes, arg_p, arg_allowed, arg_only,
        arg_section = "all";
    int arg_q = -1;
    bool arg_strict = false, arg_parallel = false;

    CLI::App* c_factor = app.add_subcommand("factor", "factor a natural number");
    c_factor->add_option("n", arg_value, "decimal value")->required();

    CLI::App* c_order = app.add_subcommand("order", "factored order of a simple group");
    c_order->add_option("group", arg_group, "group token, e.g. L4(19)")->required();

    CLI::App* c_graph = app.add_subcommand("graph", "prime graph of a simple group");
    c_graph->add_option("group", arg_group, "group token")->required();

    CLI::App* c_degrees =
        app.add_subcommand("degrees", "closed-form deg(2) and deg(p) with branch labels");
    c_degrees->add_option("group", arg_group, "group token")->required();

    CLI::App* c_bounds = app.add_subcommand("bounds", "degree-sum bounds from component sizes");
    c_bounds->add_option("group", arg_group, "group token");
    c_bounds->add_option("--sizes", arg_sizes, "comma-separated component sizes (principal first)");

    CLI::App* c_zsig = app.add_subcommand("zsig", "primitive prime divisors R_m(a)");
    c_zsig->add_option("a", arg_a, "base")->required();
    c_zsig->add_option("m", arg_m, "exponent")->required();

    CLI::App* c_cand = app.add_subcommand("candidates", "simple-group candidates by max prime");
    c_cand->add_option("group", arg_group, "group token supplying pi and max prime");
    c_cand->add_option("--p", arg_p, "max prime");
    c_cand->add_option("--allowed", arg_allowed, "comma-separated allowed primes");

    CLI::App* c_verify = app.add_subcommand("verify", "run the verification sections");
    c_verify->add_option("section", arg_section,
                         "all, table2, cases, table5, zsigmondy, crosscheck or candidate-lists");
    c_verify->add_option("--q", arg_q, "restrict table2/cases to one field size");
    c_verify->add_option("--only", arg_only, "run sections whose name starts with this prefix");
    c_verify->add_flag("--strict", arg_strict, "fail on known discrepancies too");
    c_verify->add_flag("--parallel", arg_parallel, "run sections concurrently");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (!st.factor_table_path.empty()) {
            st.ftable = arith::FactorTable::load(st.factor_table_path);
            st.config.table = &st.ftable;
        }
        if (c_factor->parsed()) return cmd_factor(st, arg_value, out);
        if (c_order->parsed()) return cmd_order(st, arg_group, out);
        if (c_graph->parsed()) return cmd_graph(st, arg_group, out);
        if (c_degrees->parsed()) return cmd_degrees(st, arg_group, out);
        if (c_bounds->parsed()) {
            if (arg_group.empty() && arg_sizes.empty()) {
                err << "bounds: give a group token or --sizes\n";
                return 2;
            }
            return cmd_bounds(st, arg_group, arg_sizes, out);
        }
        if (c_zsig->parsed()) return cmd_zsig(st, arg_a, arg_m, out);
        if (c_cand->parsed()) return cmd_candidates(st, arg_group, arg_p, arg_allowed, out, err);
        if (c_verify->parsed()) {
            std::string only = arg_only;
            if (only.empty() && arg_section != "all") only = arg_section;
            auto sections = run_verify_sections(st, only, arg_q, arg_parallel);
            if (sections.empty()) {
                err << "verify: no sections match\n";
                return 2;
            }
            return print_sections(sections, arg_strict, st.format, out);
        }
        err << app.help();
        return 2;
    } catch (const UnknownGroupToken& e) {
        err << e.what() << "\n  try one of:";
        for (const auto& s : e.suggestions) err << " " << s;
        err << "\n";
        return 2;
    } catch (const arith::FactorizationIncomplete& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace primegraph::cli
