// specht: exact verification toolkit for shifted Specht ideals of two-rowed
// partitions. Subcommands construct tableaux, module bases and ideals, run
// Groebner computations, and replay the structural theorem checks with
// machine-readable output.
//
// Output conventions: results go to stdout and are byte-identical across
// reruns with the same arguments; timing goes to stderr so golden-file diffs
// and reproducibility checks are unaffected. JSON output follows the envelope
// documented in data/schema/cli_output.schema.json.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "specht/lefschetz.hpp"
#include "specht/theorems.hpp"

using nlohmann::json;
using namespace specht;

namespace {

constexpr const char* kSchemaVersion = "1";

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitSoftware = 70;

struct Timing {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timing()
    {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "[timing] " << ms << " ms\n";
    }
};

json envelope(const std::string& command, json params, json result)
{
    return json{{"schema_version", kSchemaVersion}, {"command", command}, {"params", std::move(params)}, {"result", std::move(result)}};
}

void emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

std::vector<Polynomial> parse_gens(const std::string& text, FieldSpec field, int nvars)
{
    std::vector<Polynomial> out;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ';')) {
        bool blank = true;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c)))
                blank = false;
        if (!blank)
            out.push_back(Polynomial::parse(cur, field, nvars));
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        raise(errc::parse_error, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json basis_json(const std::vector<Polynomial>& basis)
{
    json arr = json::array();
    for (const Polynomial& g : basis)
        arr.push_back(g.str());
    return arr;
}

struct IdealArgs {
    std::string field_str = "q";
    int nvars = 0;
    std::string gens;
    std::string gens_file;

    Ideal build() const
    {
        FieldSpec f = FieldSpec::parse(field_str);
        std::string text = gens;
        if (!gens_file.empty()) {
            std::string file_text = read_file(gens_file);
            for (char& c : file_text)
                if (c == '\n')
                    c = ';';
            text += ";" + file_text;
        }
        return Ideal(f, nvars, parse_gens(text, f, nvars));
    }

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--field", field_str, "field: q or fp:<p>")->capture_default_str();
        cmd->add_option("--nvars", nvars, "number of variables")->required();
        cmd->add_option("--gens", gens, "generators, ';'-separated, in the polynomial grammar");
        cmd->add_option("--gens-file", gens_file, "file with one generator per line");
    }
};

// ---- reproduce --------------------------------------------------------------

std::string reproduce_text(const std::string& example)
{
    std::ostringstream out;
    if (example == "513") {
        out << "# minimal generating set of a(5,1,3) over q, basis order\n";
        SpechtModuleBasis b = module_basis(ShiftedShape(5, 1, 3), FieldSpec::rationals());
        for (size_t i = 0; i < b.polynomials.size(); ++i)
            out << b.tableaux[i].str() << "  ->  " << b.polynomials[i].str() << "\n";
        out << "count " << b.dimension() << "\n";
        out << "formula " << count_standard(ShiftedShape(5, 1, 3)).str() << "\n";
    } else if (example == "i31") {
        FieldSpec q = FieldSpec::rationals();
        out << "# I(3,1) = a(3,1,1) + (x1,x2,x3)^(2) over q\n";
        Ideal i31 = specht_monomial_ideal(3, 1, q);
        out << "reduced groebner basis:\n";
        for (const Polynomial& g : i31.groebner_basis())
            out << "  " << g.str() << "\n";
        HilbertData h = hilbert_data(i31);
        out << "krull_dim " << h.krull_dim << "\n";
        out << "height " << h.height << "\n";
        out << "vector_space_dim " << h.numerator_at_one().str() << "\n";
        CmCertificate c = cm_certify(i31);
        out << "cm_certify " << (c.certified() ? "CertifiedCM" : "Inconclusive") << " lsop_size " << c.lsop.size() << "\n";
        out << "grade_matches_n_minus_k_plus_1 " << (h.height == 3 ? "yes" : "no") << "\n";
    } else if (example == "p23") {
        FieldSpec q = FieldSpec::rationals();
        FieldSpec f2 = FieldSpec::prime(2);
        out << "# I(5,2) = a(5,2,2) + (x1..x5)^(3) in characteristics 0 and 2\n";
        TheoremVerdict vq = check_thm_perfectD(5, 2, q);
        out << "perfectD q holds " << (vq.holds ? "yes" : "no") << "\n";
        TheoremVerdict v2 = check_thm_perfectD(5, 2, f2);
        out << "perfectD fp:2 holds " << (v2.holds ? "yes" : "no") << "\n";
        out << "witness " << (v2.witness ? v2.witness->str() : "none") << "\n";
        Ideal lhs = specht_monomial_ideal(5, 2, f2);
        Ideal rhs = intersect(specht_monomial_ideal(4, 1, f2).extended(5), y_ideal(5, 2, f2));
        Polynomial e2_123 = elementary_symmetric(2, {1, 2, 3}, 5, f2);
        Polynomial e2_1234 = elementary_symmetric(2, {1, 2, 3, 4}, 5, f2);
        out << "witness_in_intersection " << (v2.witness && ideal_member(*v2.witness, rhs) ? "yes" : "no") << "\n";
        out << "witness_in_I52 " << (v2.witness && ideal_member(*v2.witness, lhs) ? "yes" : "no") << "\n";
        out << "e2(x1,x2,x3)_in_intersection " << (ideal_member(e2_123, rhs) ? "yes" : "no") << "\n";
        out << "e2(x1,x2,x3)_in_I52 " << (ideal_member(e2_123, lhs) ? "yes" : "no") << "\n";
        out << "e2(x1..x4)_in_I52 " << (ideal_member(e2_1234, lhs) ? "yes" : "no") << "\n";
        out << "embedded_max_prime_fp2 "
            << (embedded_max_prime(lhs) == MaxPrimeVerdict::MaxIdealAssociated ? "MaxIdealAssociated" : "NotAssociated") << "\n";
        PerfectionReport rep = check_perfection(5, 2, f2);
        out << "grades " << rep.grades.height_first << " " << rep.grades.height_second << " " << rep.grades.height_sum << "\n";
        out << "chain_evidence " << rep.chain_evidence << "\n";
        PerfectionReport repq = check_perfection(5, 2, q);
        out << "ink_evidence_q " << repq.ink_evidence << "\n";
    } else {
        raise(errc::parameter_out_of_range, "unknown example '" + example + "'");
    }
    return out.str();
}

// ---- verify dispatch --------------------------------------------------------

struct VerifyArgs {
    std::string theorem;
    int n = 0, k = 0, d = -1, h = -1;
    std::string field_str = "q";
    bool as_json = false;
    bool allow_large = false;
    unsigned seed = 12345;
};

int run_verify(const VerifyArgs& a)
{
    if (a.allow_large)
        std::cerr << "[warn] parameter caps overridden; this can be very slow\n";
    FieldSpec f = FieldSpec::parse(a.field_str);
    json params{{"theorem", a.theorem}, {"n", a.n}, {"k", a.k}, {"field", f.str()}};
    if (a.d >= 0)
        params["d"] = a.d;
    if (a.h >= 0)
        params["h"] = a.h;

    auto finish = [&](bool holds, bool predicted, const std::optional<Polynomial>& witness,
                      const std::string& note, json extra = json::object()) {
        bool match = holds == predicted;
        json result{{"holds", holds}, {"predicted", predicted}, {"matches_prediction", match}};
        if (witness)
            result["witness"] = witness->str();
        if (!note.empty())
            result["note"] = note;
        for (auto& [key, val] : extra.items())
            result[key] = val;
        if (a.as_json) {
            emit(envelope("verify", params, result));
        } else {
            std::cout << "theorem " << a.theorem << " " << params.dump() << "\n";
            std::cout << "holds " << (holds ? "yes" : "no") << ", theorem predicts " << (predicted ? "yes" : "no")
                      << (match ? " [match]" : " [MISMATCH]") << "\n";
            if (witness)
                std::cout << "witness: " << witness->str() << "\n";
            if (!note.empty())
                std::cout << "note: " << note << "\n";
        }
        return match ? kExitMatch : kExitMismatch;
    };

    try {
        if (a.theorem == "radD") {
            if (a.d < 0)
                raise(errc::parameter_out_of_range, "radD needs --d");
            TheoremVerdict v = check_thm_radD(a.n, a.k, a.d, f, a.allow_large);
            return finish(v.holds, v.predicted, v.witness, v.note);
        }
        if (a.theorem == "rad") {
            int hh = a.h >= 0 ? a.h : a.n - a.k; // h = m-K+1 for K = k
            TheoremVerdict v = check_radical(a.n, hh, f, a.allow_large);
            return finish(v.holds, v.predicted, v.witness, v.note);
        }
        if (a.theorem == "coc") {
            TheoremVerdict v = check_coc(a.n, a.k, f, a.allow_large);
            return finish(v.holds, v.predicted, v.witness, v.note);
        }
        if (a.theorem == "perfectD") {
            TheoremVerdict v = check_thm_perfectD(a.n, a.k, f, a.allow_large);
            return finish(v.holds, v.predicted, v.witness, v.note);
        }
        if (a.theorem == "jnk") {
            TheoremVerdict v = check_lemma_jnk(a.n, a.k, f, a.allow_large);
            return finish(v.holds, v.predicted, v.witness, v.note);
        }
        if (a.theorem == "primary") {
            TheoremVerdict v = check_primary_shape(a.n, a.k, f, a.allow_large);
            return finish(v.holds, v.predicted, v.witness, v.note);
        }
        if (a.theorem == "perfect") {
            PerfectionReport r = check_perfection(a.n, a.k, f, a.allow_large, a.seed);
            json extra{{"ink_evidence", r.ink_evidence},
                       {"chain_evidence", r.chain_evidence},
                       {"heights", {r.grades.height_first, r.grades.height_second, r.grades.height_sum}}};
            if (r.outcome == Outcome::Inconclusive) {
                if (a.as_json)
                    emit(envelope("verify", params,
                                  json{{"holds", nullptr},
                                       {"predicted", r.predicted},
                                       {"inconclusive", true},
                                       {"ink_evidence", r.ink_evidence},
                                       {"chain_evidence", r.chain_evidence}}));
                else
                    std::cout << "inconclusive: the certificate search was exhausted\n";
                return kExitInconclusive;
            }
            bool holds = r.outcome == Outcome::Match ? r.predicted : !r.predicted;
            return finish(holds, r.predicted, std::nullopt, "", extra);
        }
        if (a.theorem == "hE") {
            int dd = a.d >= 0 ? a.d : a.k + 1;
            Ideal I = specht_ideal(a.n, a.k, a.k, f);
            Ideal J = squarefree_power(a.n, dd, f);
            HEGradesReport r = check_hE_grades(I, J);
            json extra{{"height_first", r.height_first}, {"height_second", r.height_second}, {"height_sum", r.height_sum}};
            return finish(r.pattern, dd == a.k + 1, std::nullopt,
                          "pattern (g, g, g+1) for a(n,k,k) and m^(d)", extra);
        }
        raise(errc::parameter_out_of_range, "unknown theorem '" + a.theorem + "'");
    } catch (const error& e) {
        if (e.code() == errc::too_large || e.code() == errc::characteristic_too_small) {
            std::cerr << e.what() << "\n";
            return kExitInconclusive;
        }
        throw;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"specht: exact Specht-ideal toolkit"};
    app.require_subcommand(1);

    // tableaux
    int t_n = 0, t_k = 0, t_d = 0;
    bool t_count_only = false, t_json = false;
    auto* c_tab = app.add_subcommand("tableaux", "enumerate standard tableaux of the shifted shape");
    c_tab->add_option("--n", t_n)->required();
    c_tab->add_option("--k", t_k)->required();
    c_tab->add_option("--d", t_d)->required();
    c_tab->add_flag("--count-only", t_count_only, "print only the count");
    c_tab->add_flag("--json", t_json);

    // basis
    int b_n = 0, b_k = 0, b_d = 0;
    std::string b_field = "q";
    bool b_json = false;
    auto* c_basis = app.add_subcommand("basis", "minimal generating set of a(n,k,d)");
    c_basis->add_option("--n", b_n)->required();
    c_basis->add_option("--k", b_k)->required();
    c_basis->add_option("--d", b_d)->required();
    c_basis->add_option("--field", b_field)->capture_default_str();
    c_basis->add_flag("--json", b_json);

    // straighten
    int s_n = 0, s_k = 0, s_d = 0;
    std::string s_field = "q", s_tab;
    bool s_json = false;
    auto* c_str = app.add_subcommand("straighten", "express F_T(d) in the standard basis");
    c_str->add_option("--n", s_n)->required();
    c_str->add_option("--k", s_k)->required();
    c_str->add_option("--d", s_d)->required();
    c_str->add_option("--tableau", s_tab, "top=i1,...;bottom=j1,...")->required();
    c_str->add_option("--field", s_field)->capture_default_str();
    c_str->add_flag("--json", s_json);

    // wlp / slp
    int w_n = 0;
    std::string w_field = "q";
    auto* c_wlp = app.add_subcommand("wlp", "weak Lefschetz rank test vs threshold predicate");
    c_wlp->add_option("--n", w_n)->required();
    c_wlp->add_option("--field", w_field)->capture_default_str();
    int sl_n = 0;
    std::string sl_field = "q";
    auto* c_slp = app.add_subcommand("slp", "strong Lefschetz rank test vs threshold predicate");
    c_slp->add_option("--n", sl_n)->required();
    c_slp->add_option("--field", sl_field)->capture_default_str();

    // decomp (the radD decomposition)
    int dc_n = 0, dc_k = 0, dc_d = 0;
    std::string dc_field = "q";
    bool dc_json = false, dc_allow_large = false;
    auto* c_dec = app.add_subcommand("decomp", "check a(n,k,d) = a(n,k,d-1) cap m^(d)");
    c_dec->add_option("--n", dc_n)->required();
    c_dec->add_option("--k", dc_k)->required();
    c_dec->add_option("--d", dc_d)->required();
    c_dec->add_option("--field", dc_field)->capture_default_str();
    c_dec->add_flag("--json", dc_json);
    c_dec->add_flag("--allow-large", dc_allow_large, "override the n <= 6 cap (slow)");

    // verify
    VerifyArgs va;
    auto* c_ver = app.add_subcommand("verify", "run a named theorem check");
    c_ver->add_option("--theorem", va.theorem, "radD|rad|coc|perfectD|jnk|primary|perfect|hE")->required();
    c_ver->add_option("--n", va.n)->required();
    c_ver->add_option("--k", va.k);
    c_ver->add_option("--d", va.d);
    c_ver->add_option("--h-equals", va.h, "h for the rad identity (defaults to n-k)");
    c_ver->add_option("--field", va.field_str)->capture_default_str();
    c_ver->add_flag("--json", va.as_json);
    c_ver->add_flag("--allow-large", va.allow_large, "override the parameter caps (slow)");
    c_ver->add_option("--seed", va.seed, "seed for the lsop search")->capture_default_str();

    // groebner-level commands
    IdealArgs gb_args;
    std::string gb_order = "grevlex";
    auto* c_gb = app.add_subcommand("gb", "reduced Groebner basis");
    gb_args.attach(c_gb);
    c_gb->add_option("--order", gb_order, "grevlex or lex")->capture_default_str();

    IdealArgs mem_args;
    std::string mem_poly;
    auto* c_mem = app.add_subcommand("member", "ideal membership via normal form");
    mem_args.attach(c_mem);
    c_mem->add_option("--poly", mem_poly)->required();

    IdealArgs col_args;
    std::string col_by;
    auto* c_col = app.add_subcommand("colon", "colon ideal (I : f)");
    col_args.attach(c_col);
    c_col->add_option("--by", col_by)->required();

    IdealArgs int_args;
    std::string int_gens2;
    auto* c_int = app.add_subcommand("intersect", "ideal intersection");
    int_args.attach(c_int);
    c_int->add_option("--gens2", int_gens2, "generators of the second ideal")->required();

    IdealArgs sat_args;
    std::string sat_by;
    bool sat_max = false;
    auto* c_sat = app.add_subcommand("saturate", "saturation (I : f^inf), or by the maximal ideal");
    sat_args.attach(c_sat);
    c_sat->add_option("--by", sat_by, "polynomial to saturate by");
    c_sat->add_flag("--max", sat_max, "saturate by (x1..xn)");

    IdealArgs hil_args;
    auto* c_hil = app.add_subcommand("hilbert", "Hilbert series numerator, dimension and height");
    hil_args.attach(c_hil);

    // reproduce
    std::string r_example, r_data_dir = "data/golden";
    bool r_write = false;
    auto* c_rep = app.add_subcommand("reproduce", "replay a worked example and diff against the golden file");
    c_rep->add_option("--example", r_example, "513|i31|p23")->required();
    c_rep->add_option("--data-dir", r_data_dir, "directory holding the golden files")->capture_default_str();
    c_rep->add_flag("--write-golden", r_write, "rewrite the golden file instead of diffing");

    // batch
    std::string batch_manifest;
    auto* c_batch = app.add_subcommand("batch", "run a manifest of independent jobs concurrently");
    c_batch->add_option("--manifest", batch_manifest, "JSON file: {\"jobs\":[{\"args\":[...]}, ...]}")->required();

    std::string self = argc > 0 ? argv[0] : "specht";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        Timing timing;

        if (*c_tab) {
            ShiftedShape shape(t_n, t_k, t_d);
            auto tabs = enumerate_standard(shape);
            if (t_count_only) {
                std::cout << tabs.size() << "\n";
            } else if (t_json) {
                json arr = json::array();
                for (const Tableau& t : tabs)
                    arr.push_back(t.str());
                emit(envelope("tableaux", {{"n", t_n}, {"k", t_k}, {"d", t_d}},
                              {{"count", tabs.size()}, {"formula", count_standard(shape).str()}, {"tableaux", arr}}));
            } else {
                for (const Tableau& t : tabs)
                    std::cout << t.str() << "\n";
            }
            return 0;
        }

        if (*c_basis) {
            FieldSpec f = FieldSpec::parse(b_field);
            SpechtModuleBasis b = module_basis(ShiftedShape(b_n, b_k, b_d), f);
            if (b_json) {
                emit(envelope("basis", {{"n", b_n}, {"k", b_k}, {"d", b_d}, {"field", f.str()}},
                              {{"dimension", b.dimension()}, {"generators", basis_json(b.polynomials)}}));
            } else {
                for (const Polynomial& g : b.polynomials)
                    std::cout << g.str() << "\n";
            }
            return 0;
        }

        if (*c_str) {
            FieldSpec f = FieldSpec::parse(s_field);
            ShiftedShape shape(s_n, s_k, s_d);
            Tableau T = Tableau::parse(s_tab, shape);
            SpechtVector v = straighten(T, f);
            if (s_json) {
                json arr = json::array();
                for (const auto& [t, c] : v.coords)
                    arr.push_back({{"coeff", c.str()}, {"tableau", t.str()}});
                emit(envelope("straighten",
                              {{"n", s_n}, {"k", s_k}, {"d", s_d}, {"field", f.str()}, {"tableau", s_tab}},
                              {{"coordinates", arr}}));
            } else {
                for (const auto& [t, c] : v.coords)
                    std::cout << c.str() << " * [" << t.str() << "]\n";
            }
            return 0;
        }

        if (*c_wlp || *c_slp) {
            bool weak = c_wlp->parsed();
            int n = weak ? w_n : sl_n;
            FieldSpec f = FieldSpec::parse(weak ? w_field : sl_field);
            bool rank_test = weak ? has_wlp(n, f) : has_slp(n, f);
            bool predicate = weak ? wlp_threshold_predicate(n, f.characteristic())
                                  : slp_threshold_predicate(n, f.characteristic());
            emit(envelope(weak ? "wlp" : "slp", {{"n", n}, {"field", f.str()}},
                          {{"n", n},
                           {"field", f.str()},
                           {"rank_test", rank_test},
                           {"threshold_predicate", predicate},
                           {"agree", rank_test == predicate}}));
            return rank_test == predicate ? kExitMatch : kExitMismatch;
        }

        if (*c_dec) {
            VerifyArgs a;
            a.theorem = "radD";
            a.n = dc_n;
            a.k = dc_k;
            a.d = dc_d;
            a.field_str = dc_field;
            a.as_json = dc_json;
            a.allow_large = dc_allow_large;
            return run_verify(a);
        }

        if (*c_ver)
            return run_verify(va);

        if (*c_gb) {
            Ideal I = gb_args.build();
            MonomialOrder ord = gb_order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
            emit(envelope("gb", {{"nvars", gb_args.nvars}, {"field", I.field().str()}, {"order", gb_order}},
                          {{"basis", basis_json(I.groebner_basis(ord))}}));
            return 0;
        }

        if (*c_mem) {
            Ideal I = mem_args.build();
            Polynomial f = Polynomial::parse(mem_poly, I.field(), I.nvars());
            Polynomial nf = normal_form(f, I);
            emit(envelope("member", {{"nvars", mem_args.nvars}, {"field", I.field().str()}, {"poly", mem_poly}},
                          {{"member", nf.is_zero()}, {"normal_form", nf.str()}}));
            return 0;
        }

        if (*c_col) {
            Ideal I = col_args.build();
            Polynomial f = Polynomial::parse(col_by, I.field(), I.nvars());
            Ideal c = colon(I, f);
            emit(envelope("colon", {{"nvars", col_args.nvars}, {"field", I.field().str()}, {"by", col_by}},
                          {{"basis", basis_json(c.groebner_basis())}}));
            return 0;
        }

        if (*c_int) {
            Ideal I = int_args.build();
            Ideal J(I.field(), I.nvars(), parse_gens(int_gens2, I.field(), I.nvars()));
            Ideal K = intersect(I, J);
            emit(envelope("intersect", {{"nvars", int_args.nvars}, {"field", I.field().str()}},
                          {{"basis", basis_json(K.groebner_basis())}}));
            return 0;
        }

        if (*c_sat) {
            Ideal I = sat_args.build();
            Ideal S = I;
            if (sat_max) {
                S = saturate_max(I);
            } else {
                if (sat_by.empty())
                    raise(errc::parameter_out_of_range, "saturate needs --by or --max");
                S = saturate(I, Polynomial::parse(sat_by, I.field(), I.nvars()));
            }
            emit(envelope("saturate", {{"nvars", sat_args.nvars}, {"field", I.field().str()}, {"max", sat_max}},
                          {{"basis", basis_json(S.groebner_basis())}, {"changed", !ideal_equal(S, I)}}));
            return 0;
        }

        if (*c_hil) {
            Ideal I = hil_args.build();
            HilbertData h = hilbert_data(I);
            json num = json::array();
            for (const Int& c : h.numerator)
                num.push_back(c.str());
            emit(envelope("hilbert", {{"nvars", hil_args.nvars}, {"field", I.field().str()}},
                          {{"numerator", num}, {"krull_dim", h.krull_dim}, {"height", h.height}}));
            return 0;
        }

        if (*c_rep) {
            std::string text = reproduce_text(r_example);
            std::string path = r_data_dir + "/" + r_example + ".txt";
            if (r_write) {
                std::ofstream out(path);
                if (!out)
                    raise(errc::parse_error, "cannot write " + path);
                out << text;
                std::cout << "wrote " << path << "\n";
                return 0;
            }
            std::cout << text;
            std::string golden = read_file(path);
            if (golden == text) {
                std::cout << "golden-diff: OK\n";
                return kExitMatch;
            }
            std::cout << "golden-diff: MISMATCH vs " << path << "\n";
            return kExitMismatch;
        }

        if (*c_batch) {
            json manifest = json::parse(read_file(batch_manifest));
            std::vector<std::string> cmds;
            for (const auto& job : manifest.at("jobs")) {
                std::string cmd = self;
                for (const auto& arg : job.at("args"))
                    cmd += " '" + arg.get<std::string>() + "'";
                cmds.push_back(cmd);
            }
            std::vector<std::future<std::pair<int, std::string>>> futures;
            futures.reserve(cmds.size());
            for (const std::string& cmd : cmds)
                futures.push_back(std::async(std::launch::async, [cmd]() {
                    std::string output;
                    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
                    if (!pipe)
                        return std::make_pair(kExitSoftware, std::string("popen failed"));
                    char buf[4096];
                    size_t got;
                    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
                        output.append(buf, got);
                    int status = pclose(pipe);
                    int code = WIFEXITED(status) ? WEXITSTATUS(status) : kExitSoftware;
                    return std::make_pair(code, output);
                }));
            json results = json::array();
            int worst = 0;
            for (size_t i = 0; i < futures.size(); ++i) {
                auto [code, output] = futures[i].get();
                worst = std::max(worst, code);
                results.push_back({{"job", i}, {"exit_code", code}, {"stdout", output}});
            }
            emit(envelope("batch", {{"manifest", batch_manifest}, {"jobs", cmds.size()}}, {{"results", results}}));
            return worst;
        }

        return kExitUsage;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
        case errc::too_large:
        case errc::characteristic_too_small:
            return kExitInconclusive;
        case errc::parse_error:
        case errc::parameter_out_of_range:
        case errc::invalid_shape:
        case errc::invalid_filling:
            return kExitData;
        default:
            return kExitSoftware;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSoftware;
    }
}
