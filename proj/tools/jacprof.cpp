#include <jacprof/jacprof.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace jacprof;

namespace {

/* exit 1 for bad input, 2 for a broken invariant */
struct Failure {
    int code;
    std::string kind;
    std::string message;
};

[[noreturn]] void invalid(const std::string& msg) { throw Failure{1, "InvalidArgument", msg}; }

json poly_json(const Poly& p)
{
    json c = json::array();
    for (const auto& x : p.coeffs())
        c.push_back(x.str());
    return {{"text", p.str()}, {"coefficients", c}};
}

json point_json(const AffinePoint& p) { return {{"x", p.x.str()}, {"y", p.y.str()}}; }

json profile_json(const MultiplicationProfile& m)
{
    auto n = m.torsion_order();
    return {{"gamma", m.gamma}, {"entries", m.entries}, {"torsion_order", n ? json(*n) : json(nullptr)}};
}

json semigroup_json(const NumericalSemigroup& S)
{
    return {{"modulus", S.modulus()}, {"standard_basis", S.basis()}, {"gaps", S.gaps()}, {"genus", S.genus()},
            {"minimal_generators", minimal_generators(S)}, {"ewt", ewt(S)}, {"wt", wt(S)}};
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        invalid("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        invalid(path + ": " + e.what());
    }
}

FieldElement scalar(const json& v)
{
    if (v.is_number_integer())
        return FieldElement(v.get<long>());
    if (v.is_string())
        return FieldElement::parse(v.get<std::string>());
    invalid("scalars must be integers or strings");
}

Poly poly_from(const json& v)
{
    if (!v.is_array())
        invalid("polynomials are coefficient lists, lowest degree first");
    std::vector<FieldElement> c;
    for (const auto& x : v)
        c.push_back(scalar(x));
    return Poly(c);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    return out;
}

std::vector<long> long_list(const std::string& s)
{
    std::vector<long> out;
    for (const auto& item : split(s, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            invalid("not an integer list: " + s);
        }
    }
    return out;
}

/* curve file: {"gamma": g, "f": [...]} or {"gamma": g, "h": [...], "F": [...]} */
HyperellipticCurve curve_from(const json& j)
{
    if (!j.contains("gamma") || !j["gamma"].is_number_integer())
        invalid("curve file needs an integer gamma");
    int g = j["gamma"].get<int>();
    if (j.contains("f"))
        return HyperellipticCurve(g, poly_from(j["f"]));
    if (j.contains("F"))
        return from_h_form(g, j.contains("h") ? poly_from(j["h"]) : Poly(), poly_from(j["F"])).first;
    invalid("curve file needs f, or F with optional h");
}

std::uint64_t effective_seed(std::uint64_t seed)
{
    if (const char* env = std::getenv("JACPROF_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            invalid("JACPROF_SEED is not an unsigned integer");
        }
    }
    return seed;
}

long fibonacci(int k)
{
    long a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        long t = a + b;
        a = b;
        b = t;
    }
    return a;
}

void render_table(std::ostream& os, const json& j, const std::string& prefix = "")
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_table(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        return;
    }
    if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            render_table(os, j[i], prefix + "[" + std::to_string(i) + "]");
        return;
    }
    os << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

struct Options {
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 0;

    std::string curve_file, point, method = "both";
    int upto = 0;

    std::string family;
    int gamma = 0, s = 0, r = 0, max_n = 0;
    std::string w = "1";

    int N = 0;
    long g = 0;
    std::string avector;
    bool realizable = false;

    std::string semigroup_file, closed_form;

    int order = 0;

    std::string point_file;
    int conjecture = 0;
};

json run_profile(const Options& o)
{
    HyperellipticCurve C = curve_from(read_json(o.curve_file));
    auto xy = split(o.point, ',');
    if (xy.size() != 2)
        invalid("--point takes X,Y");
    AffinePoint p{FieldElement::parse(xy[0]), FieldElement::parse(xy[1])};
    if (o.upto < 1)
        invalid("--upto must be >= 1");
    json out{{"gamma", C.gamma()}, {"f", poly_json(C.f())}, {"point", point_json(p)}, {"method", o.method}};
    std::optional<MultiplicationProfile> J, H;
    if (o.method == "jacobian" || o.method == "both")
        J = profile_via_jacobian(C, p, o.upto);
    if (o.method == "hankel" || o.method == "both")
        H = profile_via_hankel(C, p, o.upto);
    if (J && H && !(*J == *H))
        throw Failure{2, "InternalMismatch", "jacobian and hankel profiles disagree"};
    const auto& m = J ? *J : *H;
    out["profile"] = profile_json(m);
    if (J && H)
        out["methods_agree"] = true;
    auto viol = validate_profile(m.entries, C.gamma());
    json vs = json::array();
    for (const auto& v : viol)
        vs.push_back({{"condition", v.condition}, {"index", v.index}, {"message", v.message}});
    out["violations"] = vs;
    return out;
}

Construction build_family(const Options& o, std::uint64_t seed)
{
    Rng rng(seed);
    std::string f = o.family;
    std::transform(f.begin(), f.end(), f.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (f == "SMALL_TORSION_1" || f == "SMALL_TORSION_2" || f == "SMALL_TORSION_3")
        return sample_small_torsion(o.gamma, f.back() - '0', rng);
    if (f == "TORSION_EVEN_S")
        return torsion_even_s(o.gamma, o.s);
    if (f == "TORSION2_SR")
        return sample_torsion2(o.gamma, o.s, rng);
    if (f == "TORSION3_S")
        return sample_torsion3(o.gamma, o.s, rng);
    if (f == "TORSION4")
        return sample_torsion4(o.gamma, rng);
    if (f == "FLYNN") {
        std::vector<FieldElement> c;
        for (const auto& t : split(o.w.empty() ? std::string("1") : o.w, ','))
            c.push_back(FieldElement::parse(t));
        return flynn_curve(o.gamma, o.r, Poly(c));
    }
    if (f == "FLYNN_VARIANT")
        return flynn_variant(o.gamma);
    invalid("unknown family " + f);
}

json run_torsion(const Options& o)
{
    std::uint64_t seed = effective_seed(o.seed);
    Construction K = build_family(o, seed);
    int max_n = o.max_n > 0 ? o.max_n : K.order;
    Verification v = verify_construction(K, max_n);
    json params = json::object();
    for (const auto& [k, val] : K.params)
        params[k] = val;
    json out{{"family", K.family}, {"seed", seed}, {"params", params}, {"gamma", K.curve.gamma()},
             {"f", poly_json(K.curve.f())}, {"point", point_json(K.point)}, {"claimed_order", K.order},
             {"order", v.order ? json(*v.order) : json(nullptr)}, {"order_ok", v.order_ok},
             {"profile", profile_json(v.via_jacobian)}, {"methods_agree", v.methods_agree}};
    if (K.pattern)
        out["claimed_profile"] = expand_pattern(*K.pattern, K.order).entries;
    out["profile_ok"] = v.profile_ok;
    if (!v.methods_agree)
        throw Failure{2, "InternalMismatch", "jacobian and hankel profiles disagree"};
    if (v.order && !v.order_ok)
        throw Failure{2, "InternalMismatch", "verified order differs from the claim"};
    if (!v.profile_ok)
        throw Failure{2, "InternalMismatch", "verified profile differs from the claim"};
    return out;
}

json run_semigroup(const Options& o)
{
    if (o.gamma < 1)
        invalid("--gamma must be >= 1");
    CoverParams P(o.N, o.gamma, o.g);
    AVector a = long_list(o.avector);
    NumericalSemigroup S = semigroup_from_avector(P, a);
    json out{{"N", P.N}, {"gamma", P.gamma}, {"g", P.g}, {"d", P.d()}, {"avector", a}, {"eps", eps_from_avector(P, a)}};
    out.update(semigroup_json(S));
    out["gap_counts_mod_N"] = gap_counts_mod_N(S, P.N);
    bool ok = gap_vector_check(S, P);
    out["gap_vector_check"] = ok;
    if (!ok)
        throw Failure{2, "InternalMismatch", "gap counts disagree with the gap-vector formula"};
    return out;
}

json run_feasible(const Options& o)
{
    if (o.gamma < 1)
        invalid("--gamma must be >= 1");
    CoverParams P(o.N, o.gamma, o.g);
    FeasibleSets F = feasible_sets(P);
    json out{{"N", P.N}, {"gamma", P.gamma}, {"g", P.g}, {"d", P.d()}, {"box_size", F.box.size()}, {"feasible_size", F.feasible.size()},
             {"box", F.box}};
    json feas = json::array();
    for (const auto& a : F.feasible) {
        json row{{"a", a}, {"eps", eps_from_avector(P, a)}};
        if (o.realizable)
            row["realizability"] = realizability_name(classify_realizability(P, a));
        feas.push_back(row);
    }
    out["feasible"] = feas;
    return out;
}

json run_ewt(const Options& o)
{
    json j = read_json(o.semigroup_file);
    std::optional<NumericalSemigroup> S;
    if (j.contains("standard_basis")) {
        auto basis = j["standard_basis"].get<std::vector<long>>();
        S.emplace(static_cast<long>(basis.size()), basis);
    } else if (j.contains("generators")) {
        S = NumericalSemigroup::from_generators(j["generators"].get<std::vector<long>>());
    } else if (j.contains("N") && j.contains("gamma") && j.contains("t") && j.contains("kind")) {
        long N = j["N"], g = j["gamma"], t = j["t"];
        std::string kind = j["kind"];
        CoverParams P(static_cast<int>(N), static_cast<int>(g), staircase_genus(N, g, t));
        AVector a;
        auto eps = staircase_eps(static_cast<int>(N), static_cast<int>(g));
        for (int i = 1; i < N; ++i)
            a.push_back(i * P.d() + (kind == "staircase" ? eps[i - 1] : 0));
        if (kind != "staircase" && kind != "ct")
            invalid("kind must be ct or staircase");
        S = semigroup_from_avector(P, a);
    } else {
        invalid("semigroup file needs standard_basis, generators, or N/gamma/t/kind");
    }
    json out = semigroup_json(*S);
    if (!o.closed_form.empty()) {
        if (!j.contains("N") || !j.contains("gamma") || !j.contains("t"))
            invalid("--closed-form needs N, gamma and t in the semigroup file");
        long N = j["N"], g = j["gamma"], t = j["t"];
        long bf = out["ewt"];
        json cmp{{"formula", o.closed_form}, {"N", N}, {"gamma", g}, {"t", t}, {"brute_force", bf}};
        if (o.closed_form == "ct") {
            long v = ct_ewt_closed_form(N, g, t);
            cmp["closed_form"] = v;
            cmp["match"] = v == bf;
        } else if (o.closed_form == "staircase") {
            Rational v = staircase_ewt_closed_form(N, g, t);
            if (v.get_den() == 1)
                cmp["closed_form"] = v.get_num().get_si();
            else
                cmp["closed_form"] = v.get_str();
            cmp["match"] = v == Rational(bf);
        } else {
            invalid("--closed-form takes ct or staircase");
        }
        out["comparison"] = cmp;
    }
    return out;
}

json run_enumerate(const Options& o)
{
    auto pats = enumerate_torsion_patterns(o.gamma, o.order);
    json list = json::array();
    for (const auto& p : pats)
        list.push_back({{"window", p.window}, {"profile", expand_pattern(p).entries}});
    json out{{"gamma", o.gamma}, {"order", o.order}, {"count", pats.size()}, {"patterns", list}};
    int rel = o.order - 2 * o.gamma;
    if (rel >= 1) {
        /* even 2g+2k -> F(k+1), odd 2g+2k+1 -> F(k) */
        int k = rel / 2;
        long want = rel % 2 ? fibonacci(k) : fibonacci(k + 1);
        out["fibonacci_expected"] = want;
        out["fibonacci_match"] = static_cast<long>(pats.size()) == want;
    }
    return out;
}

json run_rspace(const Options& o)
{
    json j = read_json(o.point_file);
    if (!j.contains("gamma") || !j.contains("N") || !j.contains("a"))
        invalid("point file needs gamma, N and a");
    std::vector<FieldElement> a;
    for (const auto& x : j["a"])
        a.push_back(scalar(x));
    RPoint pt(j["gamma"].get<int>(), j["N"].get<int>(), a);
    AdmissibilityReport r = check_admissibility(pt);
    json out{{"gamma", pt.gamma}, {"N", pt.N},
             {"admissibility",
              {{"polynomiality", r.polynomiality}, {"degree", r.degree}, {"separability", r.separability}, {"torsionness", r.torsionness}}},
             {"f", poly_json(r.f)}};
    if (o.conjecture) {
        json gens = json::array();
        int zero = 0;
        for (const auto& g : eval_conjecture_generators(pt, o.conjecture)) {
            gens.push_back({{"name", g.name}, {"value", g.value.str()}, {"vanishes", g.vanishes()}});
            zero += g.vanishes();
        }
        out["conjecture"] = {{"component", o.conjecture}, {"generators", gens}, {"vanishing", zero}, {"total", gens.size()},
                             {"note", "evidence only"}};
    }
    return out;
}

int emit(const Options& o, const json& body, int code)
{
    std::ostringstream text;
    if (o.format == "table")
        render_table(text, body);
    else
        text << body.dump(2) << "\n";
    if (!o.output.empty() && code == 0) {
        std::ofstream out(o.output);
        if (!out) {
            std::cout << json{{"error", {{"kind", "InvalidArgument"}, {"message", "cannot write " + o.output}}}}.dump(2) << "\n";
            return 1;
        }
        out << text.str();
    } else {
        std::cout << text.str();
    }
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Multiplication profiles, torsion families and cover semigroups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--output", o.output, "write the result here");

    auto* prof = app.add_subcommand("profile", "multiplication profile of a point");
    prof->add_option("--curve", o.curve_file)->required();
    prof->add_option("--point", o.point, "X,Y")->required();
    prof->add_option("--upto", o.upto)->required();
    prof->add_option("--method", o.method)->check(CLI::IsMember({"jacobian", "hankel", "both"}));

    auto* tors = app.add_subcommand("torsion", "build and verify a torsion family");
    tors->add_option("--family", o.family)->required();
    tors->add_option("--gamma", o.gamma)->required();
    tors->add_option("--s", o.s);
    tors->add_option("--r", o.r);
    tors->add_option("--w", o.w, "coefficients of w, lowest first");
    tors->add_option("--seed", o.seed);
    tors->add_option("--max", o.max_n);

    auto* semi = app.add_subcommand("semigroup", "semigroup of an a-vector");
    semi->add_option("--N", o.N)->required();
    semi->add_option("--gamma", o.gamma)->required();
    semi->add_option("--g", o.g)->required();
    semi->add_option("--avector", o.avector)->required();

    auto* feas = app.add_subcommand("feasible", "feasible a-vectors");
    feas->add_option("--N", o.N)->required();
    feas->add_option("--gamma", o.gamma)->required();
    feas->add_option("--g", o.g)->required();
    feas->add_flag("--realizable", o.realizable);

    auto* ew = app.add_subcommand("ewt", "weights of a semigroup");
    ew->add_option("--semigroup", o.semigroup_file)->required();
    ew->add_option("--closed-form", o.closed_form)->check(CLI::IsMember({"ct", "staircase"}));

    auto* en = app.add_subcommand("enumerate-profiles", "candidate torsion profiles");
    en->add_option("--gamma", o.gamma)->required();
    en->add_option("--order", o.order)->required();

    auto* rs = app.add_subcommand("rspace", "admissibility of a coefficient vector");
    rs->add_option("--point", o.point_file)->required();
    rs->add_option("--conjecture", o.conjecture)->check(CLI::Range(1, 3));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit(o, {{"error", {{"kind", "InvalidArgument"}, {"message", e.what()}}}}, 1);
    }

    try {
        json out;
        if (*prof)
            out = run_profile(o);
        else if (*tors)
            out = run_torsion(o);
        else if (*semi)
            out = run_semigroup(o);
        else if (*feas)
            out = run_feasible(o);
        else if (*ew)
            out = run_ewt(o);
        else if (*en)
            out = run_enumerate(o);
        else
            out = run_rspace(o);
        return emit(o, out, 0);
    } catch (const Failure& f) {
        return emit(o, {{"error", {{"kind", f.kind}, {"message", f.message}}}}, f.code);
    } catch (const error& e) {
        return emit(o, {{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}}, e.internal() ? 2 : 1);
    } catch (const json::exception& e) {
        return emit(o, {{"error", {{"kind", "InvalidArgument"}, {"message", e.what()}}}}, 1);
    } catch (const std::exception& e) {
        return emit(o, {{"error", {{"kind", "Internal"}, {"message", e.what()}}}}, 2);
    }
}
