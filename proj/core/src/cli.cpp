#include "folcalc/cli.hpp"

#include <chrono>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "folcalc/foliation.hpp"
#include "folcalc/graded.hpp"
#include "folcalc/parse.hpp"
#include "json.hpp"

namespace folcalc {

namespace {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// input documents

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

[[noreturn]] void doc_error(const std::string& msg) { throw std::invalid_argument(msg); }

InputDocument parse_key_value_document(const std::string& text) {
    InputDocument doc;
    bool saw_vars = false, saw_omega = false, saw_map = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t colon = t.find(':');
        if (colon == std::string::npos) {
            doc_error("line " + std::to_string(lineno) + ": expected 'key: value'");
        }
        const std::string key = trim(t.substr(0, colon));
        const std::string value = trim(t.substr(colon + 1));
        if (key == "vars") {
            if (saw_vars) doc_error("duplicate key 'vars'");
            saw_vars = true;
            doc.vars = split_ws(value);
        } else if (key == "omega") {
            if (saw_omega) doc_error("duplicate key 'omega'");
            saw_omega = true;
            doc.omega = value;
        } else if (key == "map") {
            if (saw_map) doc_error("duplicate key 'map'");
            saw_map = true;
            std::string entry;
            std::istringstream parts(value);
            while (std::getline(parts, entry, ';')) doc.map.push_back(trim(entry));
        } else {
            const std::vector<std::string> words = split_ws(key);
            if (words.size() == 2 && words[0] == "field") {
                if (doc.fields.count(words[1])) doc_error("duplicate field '" + words[1] + "'");
                doc.fields[words[1]] = value;
            } else {
                doc_error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
            }
        }
    }
    return doc;
}

InputDocument parse_json_document(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        doc_error(std::string("invalid JSON document: ") + e.what());
    }
    InputDocument doc;
    try {
        if (!j.is_object()) doc_error("JSON document must be an object");
        for (const auto& [key, value] : j.items()) {
            if (key == "vars") {
                for (const auto& v : value) doc.vars.push_back(v.get<std::string>());
            } else if (key == "omega") {
                doc.omega = value.get<std::string>();
            } else if (key == "map") {
                for (const auto& v : value) doc.map.push_back(v.get<std::string>());
            } else if (key == "fields") {
                for (const auto& [name, expr] : value.items()) {
                    doc.fields[name] = expr.get<std::string>();
                }
            } else {
                doc_error("unknown key '" + key + "' in JSON document");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        doc_error(std::string("invalid JSON document: ") + e.what());
    }
    return doc;
}

void validate_document(const InputDocument& doc) {
    if (doc.vars.empty()) doc_error("document declares no variables ('vars' key)");
    for (const std::string& v : doc.vars) {
        if (!is_identifier(v)) doc_error("variable name '" + v + "' is not an identifier");
    }
    for (std::size_t i = 0; i < doc.vars.size(); ++i) {
        for (std::size_t k = i + 1; k < doc.vars.size(); ++k) {
            if (doc.vars[i] == doc.vars[k]) doc_error("duplicate variable '" + doc.vars[i] + "'");
        }
    }
    if (!doc.omega.empty()) parse_form(doc.omega, doc.vars);
    if (!doc.map.empty()) {
        if (doc.map.size() != 3) {
            doc_error("'map' must list exactly 3 polynomials separated by ';'");
        }
        for (const std::string& p : doc.map) parse_polynomial(p, doc.vars);
    }
    for (const auto& [name, expr] : doc.fields) {
        if (!is_identifier(name)) doc_error("field name '" + name + "' is not an identifier");
        parse_vector_field(expr, doc.vars);
    }
}

// ---------------------------------------------------------------------------
// command helpers

std::string read_input(const std::string& path, std::istream* in) {
    if (path == "-") {
        if (in == nullptr) throw std::runtime_error("no standard input is connected");
        std::ostringstream buf;
        buf << in->rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

InputDocument load_document(const std::string& path, std::istream* in) {
    const std::string text = read_input(path, in);
    return parse_input_document(text);
}

Foliation document_foliation(const InputDocument& doc) {
    if (doc.omega.empty()) doc_error("document has no 'omega' expression");
    return new_foliation(parse_form(doc.omega, doc.vars));
}

std::optional<int> resolve_d_max(const std::optional<int>& flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("FOLCALC_MAX_DEGREE")) {
        const std::string s = trim(env);
        if (s.empty()) return std::nullopt;
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size()) {
            doc_error("FOLCALC_MAX_DEGREE must be an integer, got '" + s + "'");
        }
        return v;
    }
    return std::nullopt;
}

// Reports print ideals smallest leading monomial first (the order the
// presentations are usually written in), i.e. the reversed reduced GB.
std::vector<std::string> ideal_strings(const Ideal& i, const std::vector<std::string>& names) {
    const std::vector<Polynomial> gb = i.canonical_generators();
    std::vector<std::string> out;
    for (auto it = gb.rbegin(); it != gb.rend(); ++it) out.push_back(to_string(*it, names));
    return out;
}

void print_ideal_block(std::ostream& out, const std::string& header,
                       const std::vector<std::string>& gens) {
    out << header << ":\n";
    if (gens.empty()) out << "  0\n";
    for (const std::string& g : gens) out << "  " << g << "\n";
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", ms);
    return buf;
}

class StageClock {
  public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

  private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// subcommands

int cmd_check(const InputDocument& doc, const std::string& format, std::ostream& out) {
    const Foliation f = document_foliation(doc);
    const std::string omega = to_string(f.omega(), doc.vars);
    if (format == "json") {
        ojson j;
        j["ok"] = true;
        j["nvars"] = f.nvars();
        j["n"] = f.n();
        j["e"] = f.e();
        j["omega"] = omega;
        out << j.dump(2) << "\n";
    } else {
        out << "ok: foliation on P^" << f.n() << " (" << f.nvars() << " variables), degree e = "
            << f.e() << "\n";
        out << "omega = " << omega << "\n";
    }
    return exit_ok;
}

int cmd_ideal(const InputDocument& doc, const std::string& which, std::optional<int> d_max,
              const std::string& format, std::ostream& out) {
    const Foliation f = document_foliation(doc);
    Ideal i;
    if (which == "J") {
        i = singular_ideal(f);
    } else if (which == "I") {
        i = unfolding_ideal(f, resolve_d_max(d_max));
    } else if (which == "K") {
        i = kupka_ideal(f);
    } else if (which == "L") {
        i = non_kupka_ideal(f);
    } else {
        i = dw_coefficient_ideal(f);
    }
    const std::vector<std::string> gens = ideal_strings(i, doc.vars);
    if (format == "json") {
        ojson j;
        j["which"] = which;
        j["generators"] = gens;
        out << j.dump(2) << "\n";
    } else {
        for (const std::string& g : gens) out << g << "\n";
    }
    return exit_ok;
}

int cmd_report(const InputDocument& doc, std::optional<int> d_max_flag,
               const std::string& format, std::ostream& out) {
    StageClock clock;
    const Foliation f = document_foliation(doc);
    const double t_validate = clock.lap();
    const std::optional<int> d_max = resolve_d_max(d_max_flag);
    const int resolved_d_max = d_max.value_or(2 * f.e());

    const Ideal j = singular_ideal(f);
    const double t_j = clock.lap();
    const Ideal i = unfolding_ideal(f, d_max);
    const double t_i = clock.lap();
    const Ideal k = kupka_ideal(f);
    const double t_k = clock.lap();
    const Ideal l = non_kupka_ideal(f);
    const double t_l = clock.lap();
    const Ideal cdw = dw_coefficient_ideal(f);
    const FoliationReport rep = make_report(f, d_max);
    const double t_pred = clock.lap();

    const auto& names = doc.vars;
    const std::vector<std::string> js = ideal_strings(j, names);
    const std::vector<std::string> is = ideal_strings(i, names);
    const std::vector<std::string> ks = ideal_strings(k, names);
    const std::vector<std::string> ls = ideal_strings(l, names);
    const std::vector<std::string> cs = ideal_strings(cdw, names);

    if (format == "json") {
        ojson r;
        r["schema_version"] = 1;
        ojson input;
        input["vars"] = doc.vars;
        input["omega"] = doc.omega;
        if (!doc.map.empty()) input["map"] = doc.map;
        if (!doc.fields.empty()) {
            ojson fields = ojson::object();
            for (const auto& [name, expr] : doc.fields) fields[name] = expr;
            input["fields"] = fields;
        }
        r["input"] = input;
        r["canonical_omega"] = to_string(f.omega(), names);
        r["nvars"] = f.nvars();
        r["n"] = f.n();
        r["e"] = f.e();
        r["d_max"] = resolved_d_max;
        ojson ideals;
        ideals["J"] = js;
        ideals["I"] = is;
        ideals["K"] = ks;
        ideals["L"] = ls;
        ideals["CdOmega"] = cs;
        r["ideals"] = ideals;
        ojson preds;
        preds["in_u"] = rep.predicates.in_u;
        preds["kupka_scheme_nonempty"] = rep.predicates.kupka_nonempty;
        preds["i_equals_k"] = rep.predicates.i_equals_k;
        preds["j_radical"] = to_string(rep.predicates.j_radical);
        preds["k_comaximal_with_cdomega"] = rep.predicates.k_comaximal_with_cdomega;
        preds["ij_iso_sl_hilbert"] = rep.predicates.ij_iso_sl_hilbert;
        r["predicates"] = preds;
        ojson hil;
        hil["I/J"] = ojson{{"binomial", rep.p_ij.binomial_string()},
                           {"expanded", rep.p_ij.expanded_string()}};
        hil["S/L"] = ojson{{"binomial", rep.p_sl.binomial_string()},
                           {"expanded", rep.p_sl.expanded_string()}};
        r["hilbert"] = hil;
        ojson times;
        times["validate"] = t_validate;
        times["J"] = t_j;
        times["I"] = t_i;
        times["K"] = t_k;
        times["L"] = t_l;
        times["predicates"] = t_pred;
        r["timings_ms"] = times;
        out << r.dump(2) << "\n";
        return exit_ok;
    }

    std::ostringstream os;
    os << "foliation on P^" << f.n() << " (" << f.nvars() << " variables), degree e = " << f.e()
       << ", d_max = " << resolved_d_max << "\n";
    os << "omega = " << to_string(f.omega(), names) << "\n\n";
    print_ideal_block(os, "J (singular ideal)", js);
    print_ideal_block(os, "I (unfolding ideal)", is);
    print_ideal_block(os, "K (Kupka ideal)", ks);
    print_ideal_block(os, "L (non-Kupka ideal)", ls);
    print_ideal_block(os, "CdOmega (coefficient ideal of d(omega))", cs);
    os << "\npredicates:\n";
    os << "  in_U = " << (rep.predicates.in_u ? "true" : "false") << "\n";
    os << "  kupka_scheme_nonempty = " << (rep.predicates.kupka_nonempty ? "true" : "false")
       << "\n";
    os << "  i_equals_k = " << (rep.predicates.i_equals_k ? "true" : "false") << "\n";
    os << "  j_radical = " << to_string(rep.predicates.j_radical) << "\n";
    os << "  k_comaximal_with_cdomega = "
       << (rep.predicates.k_comaximal_with_cdomega ? "true" : "false") << "\n";
    os << "  ij_iso_sl_hilbert = " << (rep.predicates.ij_iso_sl_hilbert ? "true" : "false")
       << "\n";
    os << "\nhilbert:\n";
    os << "  P_{I/J} = " << rep.p_ij.binomial_string() << "  | expanded: "
       << rep.p_ij.expanded_string() << "\n";
    os << "  P_{S/L} = " << rep.p_sl.binomial_string() << "  | expanded: "
       << rep.p_sl.expanded_string() << "\n";
    os << "\ntimings_ms:\n";
    os << "  validate = " << format_ms(t_validate) << "\n";
    os << "  J = " << format_ms(t_j) << "\n";
    os << "  I = " << format_ms(t_i) << "\n";
    os << "  K = " << format_ms(t_k) << "\n";
    os << "  L = " << format_ms(t_l) << "\n";
    os << "  predicates = " << format_ms(t_pred) << "\n";
    out << os.str();
    return exit_ok;
}

int cmd_hilbert(const InputDocument& doc, const std::string& of, std::optional<int> d_max,
                const std::string& format, std::ostream& out) {
    const Foliation f = document_foliation(doc);
    const IJComparison cmp = compare_IJ_SL(f, resolve_d_max(d_max));
    const HilbertPolynomial& p = (of == "I/J") ? cmp.p_ij : cmp.p_sl;
    if (format == "json") {
        ojson j;
        j["of"] = of;
        j["binomial"] = p.binomial_string();
        j["expanded"] = p.expanded_string();
        out << j.dump(2) << "\n";
    } else {
        out << "P_{" << of << "} = " << p.binomial_string() << "\n";
        out << "expanded: " << p.expanded_string() << "\n";
    }
    return exit_ok;
}

std::vector<std::string> indexed_names(int nv) {
    std::vector<std::string> out;
    for (int i = 0; i < nv; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

int cmd_example(const std::string& name, const std::vector<std::string>& params,
                const std::string& format, std::ostream& out) {
    InputDocument doc;
    if (name == "dulac") {
        int p = 1, q = 1;
        Rational alpha(1), beta(2);
        if (params.size() > 4) doc_error("example dulac takes at most 4 parameters: p q alpha beta");
        try {
            if (params.size() > 0) p = std::stoi(params[0]);
            if (params.size() > 1) q = std::stoi(params[1]);
            if (params.size() > 2) alpha = rational_from_string(params[2]);
            if (params.size() > 3) beta = rational_from_string(params[3]);
        } catch (const std::exception&) {
            doc_error("example dulac parameters must be: integer p, integer q, rational alpha, rational beta");
        }
        const Foliation f = dulac(p, q, alpha, beta);
        doc.vars = indexed_names(f.nvars());
        doc.omega = to_string(f.omega(), doc.vars);
    } else {
        if (!params.empty()) doc_error("example " + name + " takes no parameters");
        Foliation f = [&] {
            if (name == "sl2") return sl2_example();
            if (name == "p2a") return example_p2a();
            if (name == "p2b") return example_p2b();
            if (name == "p2c") return example_p2c();
            return transverse_example();
        }();
        doc.vars = (name == "p2a") ? std::vector<std::string>{"x", "y", "z"}
                                   : indexed_names(f.nvars());
        doc.omega = to_string(f.omega(), doc.vars);
    }
    if (format == "json") {
        out << to_json_text(doc);
    } else {
        out << to_key_value(doc);
    }
    return exit_ok;
}

int cmd_pullback(const InputDocument& map_doc, const InputDocument& form_doc,
                 std::optional<int> d_max, const std::string& format, std::ostream& out) {
    if (map_doc.map.empty()) doc_error("the --map document has no 'map' key");
    std::vector<Polynomial> comps;
    for (const std::string& p : map_doc.map) comps.push_back(parse_polynomial(p, map_doc.vars));
    const Foliation omega2 = document_foliation(form_doc);
    const PullbackResult pr = pullback_foliation(comps, omega2);
    const Ideal i = unfolding_ideal(pr.foliation, resolve_d_max(d_max));
    const bool equal = i.equals(pr.predicted);

    const auto& names = map_doc.vars;
    const std::vector<std::string> predicted = ideal_strings(pr.predicted, names);
    const std::vector<std::string> unfolding = ideal_strings(i, names);

    if (format == "json") {
        ojson j;
        j["map"] = map_doc.map;
        j["omega"] = to_string(pr.foliation.omega(), names);
        j["nvars"] = pr.foliation.nvars();
        j["e"] = pr.foliation.e();
        j["predicted"] = predicted;
        j["I"] = unfolding;
        j["i_equals_predicted"] = equal;
        j["verified_generic"] = pr.verified_generic;
        j["genericity_failures"] = pr.genericity_failures;
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << "pullback along F : P^" << (map_doc.vars.size() - 1) << " -> P^"
        << (form_doc.vars.size() - 1) << "\n";
    out << "omega = " << to_string(pr.foliation.omega(), names) << "\n";
    out << "degree e = " << pr.foliation.e() << "\n\n";
    print_ideal_block(out, "predicted ideal (A0(F), A1(F), A2(F))", predicted);
    print_ideal_block(out, "unfolding ideal I", unfolding);
    out << "\nI equals predicted: " << (equal ? "true" : "false") << "\n";
    out << "verified generic: " << (pr.verified_generic ? "true" : "false") << "\n";
    for (const std::string& reason : pr.genericity_failures) {
        out << "  - " << reason << "\n";
    }
    return exit_ok;
}

// Random homogeneous polynomial with small integer coefficients.
Polynomial random_homogeneous(int nv, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    Polynomial acc = Polynomial::zero(nv);
    std::vector<int> exp(static_cast<std::size_t>(nv), 0);
    const std::function<void(int, int)> emit = [&](int var, int left) {
        if (var == nv - 1) {
            exp[static_cast<std::size_t>(var)] = left;
            const int c = coeff(rng);
            if (c != 0) {
                Polynomial m = Polynomial::constant(nv, c);
                for (int vi = 0; vi < nv; ++vi) {
                    for (int k = 0; k < exp[static_cast<std::size_t>(vi)]; ++k) {
                        m = m * Polynomial::variable(nv, vi);
                    }
                }
                acc += m;
            }
            return;
        }
        for (int take = 0; take <= left; ++take) {
            exp[static_cast<std::size_t>(var)] = take;
            emit(var + 1, left - take);
        }
    };
    emit(0, deg);
    return acc;
}

// A random integrable candidate: on P^2 every 1-form with i_R omega = 0 is
// integrable, and all of them arise as i_R of a 2-form; on higher P^n the
// pencil family q G dF - p F dG (degrees p, q) is integrable by construction.
DiffForm random_candidate(int nv, int e, std::mt19937& rng) {
    if (nv == 3) {
        DiffForm eta = DiffForm::zero(3, 2);
        const auto& tuples = index_tuples(3, 2);
        for (const auto& t : tuples) {
            eta.component_mut(t) = random_homogeneous(3, e - 2, rng);
        }
        return contract(VectorField::radial(3), eta);
    }
    const int df = 1, dg = e - 1;
    const Polynomial fpol = random_homogeneous(nv, df, rng);
    const Polynomial gpol = random_homogeneous(nv, dg, rng);
    const DiffForm dF = exterior_derivative(DiffForm::scalar(fpol));
    const DiffForm dG = exterior_derivative(DiffForm::scalar(gpol));
    return Rational(dg) * (gpol * dF) - Rational(df) * (fpol * dG);
}

int cmd_survey(int nv, int e, int count, unsigned seed, const std::string& format,
               std::ostream& out) {
    if (nv < 3) doc_error("survey needs at least 3 variables");
    if (e < 2) doc_error("survey needs degree e >= 2");
    if (count < 1) doc_error("survey needs a positive sample count");
    std::mt19937 rng(seed);
    const std::vector<std::string> names = indexed_names(nv);
    int in_u_true = 0, in_u_false = 0, invalid = 0;
    ojson samples = ojson::array();
    std::ostringstream lines;
    int found = 0;
    for (int attempt = 0; attempt < 50 * count && found < count; ++attempt) {
        const DiffForm w = random_candidate(nv, e, rng);
        std::optional<Foliation> f;
        try {
            f = new_foliation(w);
        } catch (const FoliationValidationError&) {
            ++invalid;
            continue;
        }
        ++found;
        const bool u = in_U(*f);
        (u ? in_u_true : in_u_false)++;
        lines << "sample " << found << ": in_U = " << (u ? "true" : "false") << "\n";
        samples.push_back(ojson{{"omega", to_string(f->omega(), names)}, {"in_U", u}});
    }
    if (found < count) {
        doc_error("survey could not find enough valid foliations; try another degree or seed");
    }
    if (format == "json") {
        ojson j;
        j["nvars"] = nv;
        j["e"] = e;
        j["count"] = count;
        j["seed"] = seed;
        j["in_u_true"] = in_u_true;
        j["in_u_false"] = in_u_false;
        j["invalid_skipped"] = invalid;
        j["samples"] = samples;
        out << j.dump(2) << "\n";
    } else {
        out << "survey: nvars = " << nv << ", degree e = " << e << ", count = " << count
            << ", seed = " << seed << "\n";
        out << lines.str();
        out << "in_U true: " << in_u_true << "/" << count << " (invalid candidates skipped: "
            << invalid << ")\n";
        out << "note: experimental sampling; no claim about the closure question is implied.\n";
    }
    return exit_ok;
}

}  // namespace

// ---------------------------------------------------------------------------
// public surface

InputDocument parse_input_document(const std::string& text) {
    const std::string t = trim(text);
    InputDocument doc =
        (!t.empty() && t[0] == '{') ? parse_json_document(text) : parse_key_value_document(text);
    validate_document(doc);
    return doc;
}

std::string to_key_value(const InputDocument& doc) {
    std::ostringstream out;
    out << "vars:";
    for (const std::string& v : doc.vars) out << " " << v;
    out << "\n";
    if (!doc.omega.empty()) out << "omega: " << doc.omega << "\n";
    if (!doc.map.empty()) {
        out << "map: ";
        for (std::size_t i = 0; i < doc.map.size(); ++i) {
            if (i) out << "; ";
            out << doc.map[i];
        }
        out << "\n";
    }
    for (const auto& [name, expr] : doc.fields) out << "field " << name << ": " << expr << "\n";
    return out.str();
}

std::string to_json_text(const InputDocument& doc) {
    ojson j;
    j["vars"] = doc.vars;
    if (!doc.omega.empty()) j["omega"] = doc.omega;
    if (!doc.map.empty()) j["map"] = doc.map;
    if (!doc.fields.empty()) {
        ojson fields = ojson::object();
        for (const auto& [name, expr] : doc.fields) fields[name] = expr;
        j["fields"] = fields;
    }
    return j.dump(2) + "\n";
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const UnfoldingStabilizationError& e) {
        err << "error: " << e.what() << " (failing degree " << e.failing_degree() << ")\n";
        return exit_stabilization;
    } catch (const FoliationValidationError& e) {
        err << "error: invalid foliation: " << e.what() << "\n";
        err << "reason: " << to_string(e.invariant()) << "\n";
        return exit_invalid;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream* in) {
    CLI::App app{"folcalc: unfoldings and singular schemes of foliations on projective space"};
    app.require_subcommand(1);
    app.fallthrough(true);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string file;
    std::optional<int> d_max;
    const auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input document ('-' for stdin)")->required();
    };
    const auto add_d_max = [&](CLI::App* cmd) {
        cmd->add_option("--max-degree", d_max,
                        "degree bound for the unfolding ideal (default 2e; env FOLCALC_MAX_DEGREE)");
    };

    CLI::App* check = app.add_subcommand("check", "validate a foliation document");
    add_file(check);

    CLI::App* ideal = app.add_subcommand("ideal", "print one ideal of the foliation");
    std::string which;
    ideal->add_option("--which", which, "J | I | K | L | CdOmega")
        ->required()
        ->check(CLI::IsMember({"J", "I", "K", "L", "CdOmega"}));
    add_file(ideal);
    add_d_max(ideal);

    CLI::App* report = app.add_subcommand("report", "full report: ideals, predicates, Hilbert polynomials");
    add_file(report);
    add_d_max(report);

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial of I/J or S/L");
    std::string of;
    hilbert->add_option("--of", of, "I/J | S/L")
        ->required()
        ->check(CLI::IsMember({"I/J", "S/L"}));
    add_file(hilbert);
    add_d_max(hilbert);

    CLI::App* example = app.add_subcommand("example", "print a built-in example as an input document");
    std::string name;
    std::vector<std::string> params;
    example->add_option("name", name, "dulac | sl2 | p2a | p2b | p2c | transverse")
        ->required()
        ->check(CLI::IsMember({"dulac", "sl2", "p2a", "p2b", "p2c", "transverse"}));
    example->add_option("params", params, "for dulac: p q alpha beta");

    CLI::App* pullback = app.add_subcommand("pullback", "pull back a plane foliation along a rational map");
    std::string map_file, form_file;
    pullback->add_option("--map", map_file, "document with 'vars' and 'map' (3 polynomials)")
        ->required();
    pullback->add_option("--form", form_file, "document with the plane foliation")->required();
    add_d_max(pullback);

    CLI::App* survey = app.add_subcommand(
        "survey", "sample random integrable forms and test membership in U (experimental)");
    int sv_nvars = 3, sv_degree = 3, sv_count = 20;
    unsigned sv_seed = 0;
    survey->add_option("--nvars", sv_nvars, "number of homogeneous coordinates")
        ->capture_default_str();
    survey->add_option("--degree", sv_degree, "foliation degree e")->capture_default_str();
    survey->add_option("--count", sv_count, "number of valid samples")->capture_default_str();
    survey->add_option("--seed", sv_seed, "random seed")->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("folcalc");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    return run_guarded(
        [&]() -> int {
            if (app.got_subcommand(check)) {
                return cmd_check(load_document(file, in), format, out);
            }
            if (app.got_subcommand(ideal)) {
                return cmd_ideal(load_document(file, in), which, d_max, format, out);
            }
            if (app.got_subcommand(report)) {
                return cmd_report(load_document(file, in), d_max, format, out);
            }
            if (app.got_subcommand(hilbert)) {
                return cmd_hilbert(load_document(file, in), of, d_max, format, out);
            }
            if (app.got_subcommand(example)) {
                return cmd_example(name, params, format, out);
            }
            if (app.got_subcommand(pullback)) {
                const InputDocument md = load_document(map_file, in);
                const InputDocument fd = load_document(form_file, in);
                return cmd_pullback(md, fd, d_max, format, out);
            }
            return cmd_survey(sv_nvars, sv_degree, sv_count, sv_seed, format, out);
        },
        err);
}

}  // namespace folcalc
