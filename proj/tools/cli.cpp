#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "superroot/serialize.hpp"

namespace superroot::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    int m = 1;
    int n = 1;
    std::string a = "1";
    bool affine = false;
    bool json = false;
    std::string format;
    std::optional<int> depth;
    std::optional<int> imag_mult;
    std::string config;

    std::string parity = "any";
    std::string sign = "any";
    std::vector<std::string> reflect;
    std::string fixture;
    std::string subset;
    std::string explicit_case;
    bool dedup = false;
    bool no_full = false;
    std::string check;
    std::string kind = "heisenberg";
    int rank = 1;
    std::string level = "1";
    bool lowest = false;
    std::string mu;
    int odd_limit = 1;
    std::string suite = "all";
    std::string whitelist;
};

struct Config {
    std::optional<int> depth;
    std::optional<int> imag_mult;
    std::string whitelist;
};

Config load_config(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty())
        if (const char* env = std::getenv("SUPERROOT_CONFIG")) path = env;
    Config c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw UsageError("--config: cannot read '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
        if (j.contains("depth")) c.depth = j.at("depth").get<int>();
        if (j.contains("imaginary_multiplicity")) c.imag_mult = j.at("imaginary_multiplicity").get<int>();
        if (j.contains("whitelist")) c.whitelist = j.at("whitelist").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("--config: malformed config '" + path + "': " + e.what());
    }
    return c;
}

Whitelist load_whitelist(const std::string& path) {
    Whitelist w;
    if (path.empty()) return w;
    std::ifstream in(path);
    if (!in) throw UsageError("--whitelist: cannot read '" + path + "'");
    try {
        for (const auto& item : nlohmann::json::parse(in))
            w.push_back({item.at("pattern").get<std::string>(), item.value("note", std::string("whitelisted"))});
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("--whitelist: malformed file '" + path + "': " + e.what());
    }
    return w;
}

struct Context {
    Options o;
    Config config;
    Format format = Format::Ascii;

    int depth(int fallback) const { return o.depth ? *o.depth : config.depth ? *config.depth : fallback; }
    int imag_mult() const { return o.imag_mult ? *o.imag_mult : config.imag_mult ? *config.imag_mult : 0; }

    TypeTag tag() const {
        if (o.family.empty()) throw UsageError("--family is required for this command");
        Rational a;
        try {
            a = parse_rational(o.a);
        } catch (const DomainError&) {
            throw UsageError("--a: malformed rational '" + o.a + "'");
        }
        try {
            return parse_family(o.family, o.m, o.n, a);
        } catch (const DomainError& e) {
            throw UsageError(std::string("--family: ") + e.what());
        }
    }
    bool ambient(const TypeTag& t) const { return t.family == Family::A && t.m == t.n; }
    FiniteRootSystem finite() const {
        const auto t = tag();
        return build_finite(t, ambient(t));
    }
    AffineRootSystem affine() const { return affinize(finite(), imag_mult()); }
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

// "0,2,3", "" (empty), "pi" (whole base) or "finite" (all but alpha_0).
std::vector<Root> parse_subset(const AffineRootSystem& aff, const std::string& text) {
    const auto& base = aff.distinguished_base();
    const int r = static_cast<int>(base.size());
    std::vector<int> idx;
    if (text == "pi") {
        for (int i = 0; i < r; ++i) idx.push_back(i);
    } else if (text == "finite") {
        for (int i = 1; i < r; ++i) idx.push_back(i);
    } else {
        idx = parse_int_list(text, "--subset");
    }
    std::vector<Root> s;
    for (int i : idx) {
        if (i < 0 || i >= r) throw UsageError("--subset: index " + std::to_string(i) + " outside 0.." + std::to_string(r - 1));
        s.push_back(base.roots[i]);
    }
    return s;
}

std::string squash(const std::string& s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

ExplicitFixture find_explicit(const std::string& name) {
    for (const auto& f : exceptional_explicit_fixtures())
        if (squash(f.id) == squash(name)) return f;
    throw UsageError("--explicit: unknown case '" + name + "' (G3-case3, G3-case4, G3-case6, F4-case4, F4-case5, F4-case6)");
}

// ------------------------------------------------------------------- verbs

int run_build(const Context& c, std::ostream& out) {
    if (c.o.affine)
        out << export_affine(c.affine(), c.format);
    else
        out << export_finite(c.finite(), c.format);
    return kOk;
}

int run_roots(const Context& c, std::ostream& out) {
    const ParityFilter parity =
        c.o.parity == "even" ? ParityFilter::Even : c.o.parity == "odd" ? ParityFilter::Odd : ParityFilter::Any;
    const SignFilter sign = c.o.sign == "positive"   ? SignFilter::Positive
                            : c.o.sign == "negative" ? SignFilter::Negative
                                                     : SignFilter::Any;
    if (c.o.affine) {
        const auto aff = c.affine();
        RootFilter f;
        f.parity = parity;
        f.sign = sign;
        out << export_roots(aff, roots_up_to_depth(aff, c.depth(1), f), c.format);
    } else {
        const auto sys = c.finite();
        out << export_finite_roots(sys, all_roots(sys, parity, sign), c.format);
    }
    return kOk;
}

int run_diagram(const Context& c, std::ostream& out) {
    if (c.o.affine) {
        const auto aff = c.affine();
        out << export_diagram(diagram_of(aff.finite(), aff.distinguished_base().roots),
                              aff.finite().type().name() + "^", c.format);
    } else {
        const auto sys = c.finite();
        out << export_diagram(dynkin_diagram(sys), sys.type().name(), c.format);
    }
    return kOk;
}

int run_base(const Context& c, std::ostream& out) {
    const auto aff = c.affine();
    Base base = aff.distinguished_base();
    if (!c.o.fixture.empty()) {
        const auto t = aff.finite().type();
        const std::string f = squash(c.o.fixture);
        BaseFixture fx;
        if (f.rfind("ablock", 0) == 0) {
            const auto idx = parse_int_list(c.o.fixture.substr(c.o.fixture.find(':') + 1), "--fixture");
            if (t.family != Family::A || idx.size() != 1) throw UsageError("--fixture: a-block:<i> needs --family A");
            fx = a_block_base(t.m, t.n, idx[0]);
        } else if (f == "ccase2") {
            if (t.family != Family::C) throw UsageError("--fixture: c-case2 needs --family C");
            fx = c_case2_base(t.n);
        } else if (f == "d21acase2") {
            if (t.family != Family::D21a) throw UsageError("--fixture: d21a-case2 needs --family D21a");
            fx = d21a_case2_base(t.a);
        } else {
            throw UsageError("--fixture: unknown fixture '" + c.o.fixture + "' (a-block:<i>, c-case2, d21a-case2)");
        }
        base = make_base(aff, fx.roots);
    }
    for (const auto& step : c.o.reflect) {
        if (step.size() < 2 || (step[0] != 'e' && step[0] != 'o'))
            throw UsageError("--reflect: expected e<i> or o<i>, got '" + step + "'");
        const auto idx = parse_int_list(step.substr(1), "--reflect");
        if (idx.size() != 1) throw UsageError("--reflect: expected one index in '" + step + "'");
        base = step[0] == 'e' ? even_reflection(aff, base, idx[0]) : odd_reflection(aff, base, idx[0]);
    }
    out << export_base(aff, base, is_base(aff, base, c.depth(6)), c.format);
    return kOk;
}

struct Built {
    std::optional<AffineRootSystem> aff;
    std::optional<ParabolicSubset> p;
    std::string source;
};

Built build_parabolic(const Context& c) {
    Built b;
    if (!c.o.explicit_case.empty()) {
        const auto f = find_explicit(c.o.explicit_case);
        b.aff.emplace(affinize(build_finite(f.tag), c.imag_mult()));
        b.p.emplace(explicit_parabolic_unchecked(*b.aff, b.aff->distinguished_base(), f.y, f.z));
        b.source = f.id;
        return b;
    }
    b.aff.emplace(c.affine());
    b.p.emplace(standard_parabolic(*b.aff, b.aff->distinguished_base(), parse_subset(*b.aff, c.o.subset)));
    b.source = "S={" + c.o.subset + "}";
    return b;
}

int run_parabolic(const Context& c, std::ostream& out) {
    const auto b = build_parabolic(c);
    const int depth = c.depth(6);
    out << export_decomposition(*b.p, decompose(*b.aff, *b.p, depth), is_parabolic(*b.aff, *b.p, depth), c.format);
    return kOk;
}

int run_levi(const Context& c, std::ostream& out) {
    const auto b = build_parabolic(c);
    out << export_levi_report(levi_report(*b.aff, *b.p, b.source, c.depth(6)), c.format);
    return kOk;
}

int run_census(const Context& c, std::ostream& out) {
    const auto aff = c.affine();
    CensusOptions opts;
    opts.depth = c.depth(6);
    opts.dedup = c.o.dedup;
    opts.include_full = !c.o.no_full;
    const auto reports = census(aff, opts);
    if (c.o.check.empty()) {
        out << export_census(reports, c.format);
        return kOk;
    }
    Report rep = c.o.check == "theorem-b" ? check_theorem_b(aff.finite().type(), reports)
                                          : run_corollary4(reports, aff.finite().type().name());
    apply_whitelist(rep, load_whitelist(c.o.whitelist.empty() ? c.config.whitelist : c.o.whitelist));
    out << export_report(rep, c.format);
    return kOk;
}

int run_character(const Context& c, std::ostream& out) {
    const int depth = c.depth(5);
    Rational level;
    try {
        level = parse_rational(c.o.level);
    } catch (const DomainError&) {
        throw UsageError("--level: malformed rational '" + c.o.level + "'");
    }
    if (c.o.kind == "heisenberg") {
        out << export_character(heisenberg_verma(c.o.rank, level, depth, c.o.lowest ? -1 : 1), c.format);
        return kOk;
    }
    const auto aff = c.affine();
    KostantOptions ko;
    ko.imaginary_multiplicity = c.imag_mult();
    ko.odd_limit = c.o.odd_limit;
    const auto& base = aff.distinguished_base();
    if (c.o.kind == "delta") {
        auto ch = delta_string(aff, base, depth, ko);
        ch.level = level;
        out << export_character(ch, c.format);
    } else if (c.o.kind == "verma") {
        out << export_weight_character(verma_character(aff, base, depth, ko), c.format);
    } else if (c.o.kind == "weight") {
        const auto mu = parse_int_list(c.o.mu, "--mu");
        if (static_cast<int>(mu.size()) != aff.rank())
            throw UsageError("--mu: expected " + std::to_string(aff.rank()) + " coordinates");
        const auto m = verma_weight_multiplicity(aff, base, mu, ko);
        if (c.format == Format::Json)
            out << nlohmann::ordered_json{{"offset", mu}, {"mult", m}}.dump(2) << "\n";
        else
            out << m << "\n";
    } else { // support
        const auto p = standard_parabolic(aff, base, parse_subset(aff, c.o.subset));
        const bool ok = induced_support_check(aff, p, depth, ko);
        if (c.format == Format::Json)
            out << nlohmann::ordered_json{{"subset", c.o.subset}, {"depth", depth}, {"support_ok", ok}}.dump(2) << "\n";
        else
            out << (ok ? "support ok" : "support check failed") << "\n";
    }
    return kOk;
}

std::vector<TypeTag> default_families() {
    std::vector<TypeTag> out;
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            if (m != n && m + n >= 1) out.push_back(TypeTag::A(m, n));
    for (int n = 1; n <= 5; ++n) out.push_back(TypeTag::B(0, n));
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n) out.push_back(TypeTag::B(m, n));
    for (int n = 3; n <= 5; ++n) out.push_back(TypeTag::C(n));
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 2; ++n) out.push_back(TypeTag::D(m, n));
    out.push_back(TypeTag::D21a(Rational(1, 2)));
    out.push_back(TypeTag::G3());
    out.push_back(TypeTag::F4());
    return out;
}

int run_verify(const Context& c, std::ostream& out) {
    const std::vector<TypeTag> families = c.o.family.empty() ? default_families() : std::vector<TypeTag>{c.tag()};
    const int depth = c.depth(6);
    const std::string& s = c.o.suite;
    Report rep;
    if (s == "all" || s == "delta") rep.append(run_delta_suite(families));
    if (s == "all" || s == "basechange") rep.append(run_basechange_suite(families, depth));
    if (s == "all" || s == "explicit") {
        std::vector<ExplicitFixture> fx;
        for (const auto& f : exceptional_explicit_fixtures())
            if (c.o.family.empty() || f.tag.family == families[0].family) fx.push_back(f);
        for (const auto& t : families)
            if (t.family == Family::B && t.m >= 2)
                for (const auto& f : bmn_explicit_fixtures(t.m, t.n)) fx.push_back(f);
        rep.append(run_explicit_suite(fx, depth));
    }
    if (s == "all" || s == "theorem-b" || s == "corollary4") {
        for (const auto& t : families) {
            CensusOptions opts;
            opts.depth = depth;
            const auto cen = census(affinize(build_finite(t)), opts);
            if (s != "corollary4") rep.append(check_theorem_b(t, cen));
            if (s != "theorem-b") rep.append(run_corollary4(cen, t.name()));
        }
    }
    if (s == "all" || s == "support") {
        KostantOptions ko;
        ko.imaginary_multiplicity = c.imag_mult();
        rep.append(run_support_suite(families, c.o.depth ? *c.o.depth : 4, ko));
    }
    apply_whitelist(rep, load_whitelist(c.o.whitelist.empty() ? c.config.whitelist : c.o.whitelist));
    out << export_report(rep, c.format);
    return kOk;
}

const CLI::Validator kCount(
    [](std::string& text) -> std::string {
        if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos)
            return "must be a nonnegative integer, got '" + text + "'";
        return {};
    },
    "COUNT");

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "A, B, B0, C, D, D21a, G3, F4 (or A(m,n), B(0,n), D(2,1;a), ...)");
    sub->add_option("--m", o.m, "first family parameter")->check(kCount);
    sub->add_option("--n", o.n, "second family parameter")->check(kCount);
    sub->add_option("--a", o.a, "D(2,1;a) parameter, p or p/q");
    sub->add_flag("--affine", o.affine, "use the affinization");
    sub->add_flag("--json", o.json, "JSON output (same as --format json)");
    sub->add_option("--format", o.format, "json, dot or ascii")->check(CLI::IsMember({"json", "dot", "ascii"}));
    sub->add_option("--depth", o.depth, "delta-depth window")->check(kCount);
    sub->add_option("--imag-mult", o.imag_mult, "multiplicity of k*delta (0: finite rank)")
        ->check(kCount);
    sub->add_option("--config", o.config, "JSON config file (also $SUPERROOT_CONFIG)");
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Root systems, parabolic subsets and Levi census for affine Lie superalgebras", "superroot"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all");
    Options o;

    auto* build = app.add_subcommand("build", "root system summary");
    auto* roots = app.add_subcommand("roots", "list roots");
    auto* diagram = app.add_subcommand("diagram", "Dynkin diagram");
    auto* base = app.add_subcommand("base", "check a base, optionally after reflections");
    auto* parabolic = app.add_subcommand("parabolic", "P+/P0/P- decomposition of a parabolic subset");
    auto* levi = app.add_subcommand("levi", "Levi components of a parabolic subset");
    auto* cen = app.add_subcommand("census", "Levi census over all standard parabolics");
    auto* character = app.add_subcommand("character", "truncated characters");
    auto* verify = app.add_subcommand("verify", "run the fixture audit");
    for (auto* s : {build, roots, diagram, base, parabolic, levi, cen, character, verify}) add_common(s, o);

    roots->add_option("--parity", o.parity, "even, odd or any")->check(CLI::IsMember({"even", "odd", "any"}));
    roots->add_option("--sign", o.sign, "positive, negative or any")
        ->check(CLI::IsMember({"positive", "negative", "any"}));
    base->add_option("--reflect", o.reflect, "reflections applied in order: e<i> (even) or o<i> (odd)")
        ->delimiter(',');
    base->add_option("--fixture", o.fixture, "start from a-block:<i>, c-case2 or d21a-case2");
    for (auto* s : {parabolic, levi}) {
        s->add_option("--subset", o.subset, "base indices of S: 0,2,3 or pi or finite");
        s->add_option("--explicit", o.explicit_case, "explicit (Y,Z) case, e.g. G3-case3");
    }
    cen->add_flag("--dedup", o.dedup, "one report per component multiset");
    cen->add_flag("--no-full", o.no_full, "skip S = pi");
    cen->add_option("--check", o.check, "theorem-b or corollary4")
        ->check(CLI::IsMember({"theorem-b", "corollary4"}));
    cen->add_option("--whitelist", o.whitelist, "JSON list of {pattern, note} exemptions");
    character->add_option("--kind", o.kind, "heisenberg, delta, verma, weight or support")
        ->check(CLI::IsMember({"heisenberg", "delta", "verma", "weight", "support"}));
    character->add_option("--rank", o.rank, "Heisenberg rank")->check(kCount);
    character->add_option("--level", o.level, "level, p or p/q");
    character->add_flag("--lowest", o.lowest, "lowest weight module");
    character->add_option("--mu", o.mu, "offset over the distinguished base, comma separated");
    character->add_option("--subset", o.subset, "S for --kind support");
    character->add_option("--odd-limit", o.odd_limit, "uses allowed per odd root")->check(CLI::PositiveNumber);
    verify->add_option("--suite", o.suite, "all, delta, basechange, explicit, theorem-b, corollary4, support")
        ->check(CLI::IsMember({"all", "delta", "basechange", "explicit", "theorem-b", "corollary4", "support"}));
    verify->add_option("--whitelist", o.whitelist, "JSON list of {pattern, note} exemptions");

    // CLI11 reports a missing subcommand before anything else; name the
    // offending token instead.
    if (args.empty()) {
        err << "usage error: a command is required (build, roots, diagram, base, parabolic, levi, census, character, "
               "verify)\n";
        return kUsageError;
    }
    const std::string& head = args.front();
    if (head != "-h" && head != "--help" && head != "--help-all" && !app.get_subcommand_no_throw(head)) {
        err << "usage error: " << (head.rfind("-", 0) == 0 ? "unknown flag '" : "unknown command '") << head
            << "'\n";
        return kUsageError;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        Context c;
        c.o = o;
        c.config = load_config(o.config);
        if (o.json) {
            if (!o.format.empty() && o.format != "json") throw UsageError("--json conflicts with --format " + o.format);
            c.format = Format::Json;
        } else if (!o.format.empty()) {
            c.format = parse_format(o.format);
        }
        if (!o.subset.empty() && !o.explicit_case.empty()) throw UsageError("--subset and --explicit are exclusive");
        if (build->parsed()) return run_build(c, out);
        if (roots->parsed()) return run_roots(c, out);
        if (diagram->parsed()) return run_diagram(c, out);
        if (base->parsed()) return run_base(c, out);
        if (parabolic->parsed()) return run_parabolic(c, out);
        if (levi->parsed()) return run_levi(c, out);
        if (cen->parsed()) return run_census(c, out);
        if (character->parsed()) return run_character(c, out);
        return run_verify(c, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kDomainError;
    }
}

} // namespace superroot::cli
