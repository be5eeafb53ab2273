#include "superroot/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace superroot {

using Json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "dot") return Format::Dot;
    if (name == "ascii") return Format::Ascii;
    throw DomainError("unknown format '" + name + "' (expected json, dot or ascii)");
}

std::string to_string(Format format) {
    switch (format) {
    case Format::Json: return "json";
    case Format::Dot: return "dot";
    case Format::Ascii: return "ascii";
    }
    return "?";
}

namespace {

[[noreturn]] void unsupported(Format format, const std::string& what) {
    throw DomainError("format " + to_string(format) + " is not supported for " + what);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json root_json(const Root& r) {
    Json j;
    j["coeffs"] = r.coeffs;
    j["delta"] = r.delta;
    return j;
}

Json roots_json(const std::vector<Root>& roots) {
    Json a = Json::array();
    for (const auto& r : roots) a.push_back(root_json(r));
    return a;
}

std::string value_text(const FiniteRootSystem& sys, const Scalar& s) {
    return to_string(s.evaluate(sys.type().a));
}

Json gram_json(const FiniteRootSystem& sys, const std::vector<std::vector<Scalar>>& g) {
    Json rows = Json::array();
    for (const auto& row : g) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(value_text(sys, x));
        rows.push_back(r);
    }
    return rows;
}

Json diagram_json(const DynkinDiagram& d) {
    Json j;
    j["nodes"] = Json::array();
    for (const auto& n : d.nodes)
        j["nodes"].push_back({{"index", n.index}, {"parity", n.odd ? "odd" : "even"}, {"isotropic", n.isotropic}});
    j["edges"] = Json::array();
    for (const auto& e : d.edges) {
        Json x{{"i", e.i}, {"j", e.j}, {"mult", e.multiplicity}};
        x["toward"] = e.toward >= 0 ? Json(e.toward) : Json(nullptr);
        j["edges"].push_back(x);
    }
    return j;
}

std::string root_text(const std::vector<Root>& roots) {
    std::string s;
    for (const auto& r : roots) s += "  " + r.to_string() + "\n";
    return s;
}

Json type_json(const LeviType& t) {
    Json j;
    j["label"] = t.label;
    j["params"] = t.params;
    j["a"] = t.a ? Json(to_string(*t.a)) : Json(nullptr);
    j["affine"] = t.affine;
    j["name"] = t.name();
    return j;
}

Json levi_json(const LeviReport& r) {
    Json j;
    j["source"] = r.source;
    j["subset"] = roots_json(r.subset);
    j["components"] = Json::array();
    for (const auto& c : r.components) j["components"].push_back(type_json(c));
    j["multiset"] = r.multiset();
    j["cuspidal"] = r.cuspidal;
    j["parabolic_ok"] = r.parabolic_ok;
    j["affine"] = r.affine;
    j["depth"] = r.depth;
    j["notes"] = r.notes;
    return j;
}

std::string levi_text(const LeviReport& r) {
    std::string s = r.source + ": " + r.multiset();
    if (r.affine) s += " [affine]";
    else if (r.cuspidal) s += " [cuspidal]";
    if (!r.parabolic_ok) s += " [NOT PARABOLIC]";
    return s + "\n";
}

} // namespace

std::string q_series(const std::vector<std::int64_t>& dims) {
    std::string s;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (dims[k] == 0) continue;
        if (!s.empty()) s += " + ";
        if (k == 0) {
            s += std::to_string(dims[k]);
            continue;
        }
        if (dims[k] != 1) s += std::to_string(dims[k]);
        s += "q";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

std::string export_finite(const FiniteRootSystem& sys, Format format) {
    const auto pos = sys.positive_roots();
    int even = 0, odd = 0;
    for (const auto& r : pos) (sys.odd(r) ? odd : even)++;
    if (format == Format::Json) {
        Json j;
        j["type"] = sys.type().name();
        j["affine"] = false;
        j["rank"] = sys.rank();
        j["ambient_only"] = sys.ambient_only();
        j["simple_roots"] = roots_json(sys.simple_roots());
        j["parities"] = Json::array();
        for (bool p : sys.parities()) j["parities"].push_back(p ? "odd" : "even");
        if (!sys.ambient_only()) j["gram"] = gram_json(sys, sys.simple_gram());
        j["positive_even"] = even;
        j["positive_odd"] = odd;
        j["theta"] = root_json(sys.theta());
        if (!sys.ambient_only()) j["diagram"] = diagram_json(dynkin_diagram(sys));
        return dump(j);
    }
    if (format == Format::Ascii) {
        std::ostringstream out;
        out << sys.type().name() << ": rank " << sys.rank() << ", " << even << " positive even, " << odd
            << " positive odd\n";
        out << "theta " << sys.theta().to_string() << "\n";
        return out.str();
    }
    unsupported(format, "root systems");
}

std::string export_affine(const AffineRootSystem& aff, Format format) {
    const auto& base = aff.distinguished_base();
    const auto& sys = aff.finite();
    const bool coords = !sys.ambient_only();
    if (format == Format::Json) {
        Json j;
        j["type"] = sys.type().name() + "^";
        j["affine"] = true;
        j["rank"] = aff.rank();
        j["imaginary_multiplicity"] = aff.imaginary_multiplicity();
        j["ambient_only"] = sys.ambient_only();
        j["base"] = roots_json(base.roots);
        j["parities"] = Json::array();
        for (bool p : base.parities) j["parities"].push_back(p ? "odd" : "even");
        if (coords) {
            j["delta_expansion"] = delta_expansion(aff, base);
            j["diagram"] = diagram_json(diagram_of(sys, base.roots));
        }
        return dump(j);
    }
    if (format == Format::Ascii) {
        std::ostringstream out;
        out << sys.type().name() << "^: " << aff.rank() << " base roots, imaginary multiplicity "
            << aff.imaginary_multiplicity() << "\n"
            << root_text(base.roots);
        if (coords) {
            out << "delta =";
            for (int c : delta_expansion(aff, base)) out << " " << c;
            out << "\n";
        }
        return out.str();
    }
    unsupported(format, "root systems");
}

std::string export_roots(const AffineRootSystem& aff, const std::vector<Root>& roots, Format format) {
    if (format == Format::Json) {
        Json a = Json::array();
        for (const auto& r : roots) {
            Json j = root_json(r);
            const auto k = aff.kind(r);
            j["kind"] = k == RootKind::Imaginary ? "imaginary" : k == RootKind::RealOdd ? "odd" : "even";
            a.push_back(j);
        }
        return dump(a);
    }
    if (format == Format::Ascii) return root_text(roots);
    unsupported(format, "root lists");
}

std::string export_finite_roots(const FiniteRootSystem& sys, const std::vector<Root>& roots, Format format) {
    if (format == Format::Json) {
        Json a = Json::array();
        for (const auto& r : roots) {
            Json j = root_json(r);
            j["kind"] = sys.odd(r) ? "odd" : "even";
            a.push_back(j);
        }
        return dump(a);
    }
    if (format == Format::Ascii) return root_text(roots);
    unsupported(format, "root lists");
}

std::string export_diagram(const DynkinDiagram& d, const std::string& name, Format format) {
    if (format == Format::Json) {
        Json j = diagram_json(d);
        j = Json{{"name", name}, {"nodes", j["nodes"]}, {"edges", j["edges"]}};
        return dump(j);
    }
    if (format == Format::Dot) {
        std::ostringstream out;
        out << "graph \"" << name << "\" {\n";
        for (const auto& n : d.nodes)
            out << "  n" << n.index << " [label=\"alpha_" << n.index << "\", parity=\"" << (n.odd ? "odd" : "even")
                << "\", isotropic=\"" << (n.isotropic ? "true" : "false") << "\"];\n";
        for (const auto& e : d.edges) {
            out << "  n" << e.i << " -- n" << e.j << " [mult=" << e.multiplicity;
            if (e.toward >= 0) out << ", toward=\"n" << e.toward << "\"";
            out << "];\n";
        }
        out << "}\n";
        return out.str();
    }
    std::ostringstream out;
    out << name << "\n";
    for (const auto& n : d.nodes)
        out << "  " << n.index << (n.odd ? (n.isotropic ? " (x)" : " (*)") : " (o)") << "\n";
    for (const auto& e : d.edges) {
        out << "  " << e.i << " " << std::string(e.multiplicity, '-') << " " << e.j;
        if (e.toward >= 0) out << "  > " << e.toward;
        out << "\n";
    }
    return out.str();
}

std::string export_base(const AffineRootSystem& aff, const Base& base, bool valid, Format format) {
    if (format == Format::Json) {
        Json j;
        j["base"] = roots_json(base.roots);
        j["parities"] = Json::array();
        for (bool p : base.parities) j["parities"].push_back(p ? "odd" : "even");
        j["is_base"] = valid;
        if (valid) j["delta_expansion"] = delta_expansion(aff, base);
        j["diagram"] = diagram_json(diagram_of(aff.finite(), base.roots));
        return dump(j);
    }
    if (format == Format::Ascii) return root_text(base.roots) + (valid ? "is a base\n" : "NOT a base\n");
    if (format == Format::Dot) return export_diagram(diagram_of(aff.finite(), base.roots), "base", format);
    unsupported(format, "bases");
}

std::string export_decomposition(const ParabolicSubset& p, const Decomposition& d, const ParabolicCheck& check,
                                 Format format) {
    if (format == Format::Json) {
        Json j;
        j["kind"] = to_string(p.kind());
        j["generators"] = roots_json(p.generators());
        j["z"] = roots_json(p.z());
        j["parabolic"] = check.ok;
        j["witness"] = check.witness ? Json(check.witness->describe()) : Json(nullptr);
        j["plus"] = roots_json(d.plus);
        j["zero"] = roots_json(d.zero);
        j["minus"] = roots_json(d.minus);
        return dump(j);
    }
    if (format == Format::Ascii) {
        std::ostringstream out;
        out << to_string(p.kind()) << " parabolic: " << (check.ok ? "ok" : check.witness->describe()) << "\n";
        out << "P+ " << d.plus.size() << ", P0 " << d.zero.size() << ", P- " << d.minus.size() << "\n";
        out << "P0:\n" << root_text(d.zero);
        return out.str();
    }
    unsupported(format, "parabolic subsets");
}

std::string export_levi_report(const LeviReport& r, Format format) {
    if (format == Format::Json) return dump(levi_json(r));
    if (format == Format::Ascii) return levi_text(r);
    unsupported(format, "Levi reports");
}

std::string export_census(const std::vector<LeviReport>& census, Format format) {
    std::string out;
    if (format == Format::Json) {
        for (const auto& r : census) out += levi_json(r).dump() + "\n";
        return out;
    }
    if (format == Format::Ascii) {
        for (const auto& r : census) out += levi_text(r);
        return out;
    }
    unsupported(format, "census reports");
}

std::string export_character(const GradedCharacter& ch, Format format) {
    if (format == Format::Json) {
        Json j;
        j["level"] = to_string(ch.level);
        j["sign"] = ch.sign;
        j["dims"] = ch.dims;
        return dump(j);
    }
    if (format == Format::Ascii) return q_series(ch.dims) + "\n";
    unsupported(format, "characters");
}

std::string export_weight_character(const WeightCharacter& ch, Format format) {
    if (format == Format::Json) {
        Json j;
        j["base"] = roots_json(ch.base.roots);
        j["depth"] = ch.depth;
        j["imaginary_multiplicity"] = ch.imaginary_multiplicity;
        j["multiplicities"] = Json::array();
        for (const auto& [mu, m] : ch.multiplicities) j["multiplicities"].push_back({{"offset", mu}, {"mult", m}});
        return dump(j);
    }
    if (format == Format::Ascii) {
        std::ostringstream out;
        for (const auto& [mu, m] : ch.multiplicities) {
            out << "(";
            for (std::size_t i = 0; i < mu.size(); ++i) out << (i ? "," : "") << mu[i];
            out << ") " << m << "\n";
        }
        return out.str();
    }
    unsupported(format, "characters");
}

std::string export_report(const Report& report, Format format) {
    if (format == Format::Json) {
        Json j;
        j["entries"] = Json::array();
        for (const auto& e : report.entries)
            j["entries"].push_back(
                {{"case", e.case_name}, {"locator", e.locator}, {"status", to_string(e.status)}, {"detail", e.detail}});
        j["summary"] = {{"pass", report.count(CheckStatus::Pass)},
                        {"fail", report.count(CheckStatus::Fail)},
                        {"whitelisted", report.count(CheckStatus::Whitelisted)}};
        Json cov = Json::object();
        for (const auto& [id, n] : report.coverage) cov[id] = n;
        j["coverage"] = cov;
        return dump(j);
    }
    if (format == Format::Ascii) {
        std::ostringstream out;
        for (const auto& e : report.entries)
            out << to_string(e.status) << "  " << e.case_name << "  [" << e.locator << "]  " << e.detail << "\n";
        out << report.count(CheckStatus::Pass) << " pass, " << report.count(CheckStatus::Fail) << " fail, "
            << report.count(CheckStatus::Whitelisted) << " whitelisted\n";
        return out.str();
    }
    unsupported(format, "verification reports");
}

} // namespace superroot
