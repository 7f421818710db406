/*
   Copyright 2026 The lrpencil Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lrp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "lrp/json_io.hpp"
#include "lrp/poly_io.hpp"

namespace lrp::cli {

namespace {

struct Flags {
    std::size_t rank = 0;
    std::string poly;
    std::uint64_t seed = 0;
    std::uint64_t budget = SearchOptions{}.random_trials;
    unsigned jobs = 1;
    std::uint32_t field = 2;
    std::size_t n = 0;
    std::string format = "json";
    std::uint64_t cap = SearchOptions{}.exhaustive_cap;
    std::string out;
    std::vector<std::string> files;

    SearchOptions search() const { return {cap, budget, seed, std::max(1u, jobs)}; }
    bool text() const { return format == "text"; }
};

struct Io {
    std::ostream& out;
    std::ostream& err;
};

// Prefixes a diagnostic with the input it came from.
class FileError : public InputError {
   public:
    FileError(const std::string& file, const std::string& what) : InputError(file + ": " + what) {}
};

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FileError(path, std::string("invalid JSON: ") + e.what());
    }
}

template <class Fn>
auto in_file(const std::string& path, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const FileError&) {
        throw;
    } catch (const InputError& e) {
        throw FileError(path, e.what());
    }
}

FieldSpec field_of(const json& doc, const std::string& path) {
    return in_file(path, [&] { return document_field(doc); });
}

void emit(const Flags& fl, Io& io, const json& j) {
    if (fl.out.empty()) {
        io.out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(fl.out);
    if (!f) throw FileError(fl.out, "cannot write file");
    f << j.dump(2) << "\n";
}

template <FieldElement K>
struct Operand {
    Pencil<K> pencil;
    WeierstrassStructure<K> structure;
};

template <FieldElement K>
Operand<K> operand(const json& doc, const FieldSpec& f, const std::string& path) {
    return in_file(path, [&]() -> Operand<K> {
        if (is_structure_document(doc)) {
            auto s = structure_from_json<K>(doc, f);
            return {weierstrass_canonical(s), std::move(s)};
        }
        auto p = pencil_from_json<K>(doc, f);
        auto s = try_compute_structure(p);
        if (!s) throw InputError("pencil is singular");
        return {std::move(p), std::move(*s)};
    });
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

template <FieldElement K>
std::string describe(const Route<K>& r) {
    switch (r.kind) {
        case RouteKind::Equal: return "structures already equal";
        case RouteKind::Search: return "direct search";
        case RouteKind::UnspectralPoint:
            return "unspectral point c = " + (r.point.is_infinite() ? std::string("inf") : r.point.value->to_string());
        case RouteKind::Deflation:
            return "deflation at " + (r.lambda0.is_infinite() ? std::string("inf") : to_string(*r.lambda0.factor)) +
                   ", then " + describe(*r.inner);
    }
    return "";
}

template <FieldElement K>
void print_analysis(std::ostream& os, const WeierstrassStructure<K>& s) {
    os << "field " << s.field().to_string() << ", n = " << s.n() << "\n";
    for (std::size_t i = 0; i < s.n(); ++i)
        os << "  Gamma_" << i + 1 << ": gamma = " << to_string(s[i].gamma) << ", q = " << s[i].q << "\n";
    os << "det: " << to_string(finite_product(s)) << "\n";
    for (const auto& pt : spectrum(s)) {
        const auto m = partial_multiplicities(s, pt);
        std::vector<std::size_t> mr;
        for (std::size_t r = 0; r <= s.n(); ++r) mr.push_back(M_r(s, pt, r));
        os << "point " << (pt.is_infinite() ? std::string("inf") : to_string(*pt.factor))
           << ": multiplicities " << join_sizes(m) << ", weyr " << join_sizes(weyr(m).parts())
           << ", mu_a " << mu_a(s, pt) << ", mu_g " << mu_g(s, pt) << ", M_r " << join_sizes(mr) << "\n";
    }
    std::vector<std::size_t> total;
    for (std::size_t r = 0; r <= s.n(); ++r) total.push_back(M_r_total(s, r));
    os << "M_r total: " << join_sizes(total) << "\n";
}

void need_files(const Flags& fl, std::size_t k, const char* usage) {
    if (fl.files.size() != k) throw InputError(std::string("usage: ") + usage);
}

template <FieldElement K>
int analyze(const Flags& fl, Io& io, const json& doc, const FieldSpec& f) {
    const auto a = operand<K>(doc, f, fl.files[0]);
    if (fl.text()) print_analysis(io.out, a.structure);
    else emit(fl, io, analysis_to_json(a.structure));
    return kOk;
}

template <FieldElement K>
int check(const Flags& fl, Io& io, const json& da, const json& db, const FieldSpec& f) {
    const auto a = operand<K>(da, f, fl.files[0]);
    const auto b = operand<K>(db, f, fl.files[1]);
    if (a.structure.n() != b.structure.n()) throw InputError("operands have different sizes");
    const auto v = verdict(a.structure, b.structure, fl.rank);
    if (fl.text()) {
        switch (v.kind) {
            case VerdictKind::Feasible: io.out << "feasible: " << describe(*v.route) << "\n"; break;
            case VerdictKind::Infeasible:
                io.out << "infeasible: interlacing fails at i = " << v.witness->index
                       << (v.witness->side == Side::Lower ? " (lower)" : " (upper)") << "\n";
                break;
            case VerdictKind::Unknown: io.out << "unknown: interlacing holds but no sufficiency route applies\n"; break;
        }
    } else {
        emit(fl, io, verdict_to_json(v));
    }
    switch (v.kind) {
        case VerdictKind::Feasible: return kOk;
        case VerdictKind::Infeasible: return kNegative;
        case VerdictKind::Unknown: return kUnknown;
    }
    return kInternal;
}

template <FieldElement K>
int perturb(const Flags& fl, Io& io, const json& da, const json& db, const FieldSpec& f) {
    const auto a = operand<K>(da, f, fl.files[0]);
    const auto b = operand<K>(db, f, fl.files[1]);
    if (a.structure.n() != b.structure.n()) throw InputError("operands have different sizes");
    if (auto w = interlacing_violation(a.structure, b.structure, fl.rank)) {
        io.err << "infeasible: interlacing fails at i = " << w->index << "\n";
        return kNegative;
    }
    const auto cert = synthesize(a.pencil, b.structure, fl.rank, fl.search());
    if (!cert) {
        io.err << "no perturbation found within the budget\n";
        return kNotFound;
    }
    emit(fl, io, certificate_to_json(*cert));
    io.err << "found via " << describe(cert->route) << " after " << cert->trials_used << " trials\n";
    return kOk;
}

template <FieldElement K>
int place(const Flags& fl, Io& io, const json& da, const FieldSpec& f) {
    const auto a = operand<K>(da, f, fl.files[0]);
    if (fl.poly.empty()) throw InputError("--poly: required");
    Poly<K> p(f);
    try {
        p = parse_poly<K>(f, fl.poly);
    } catch (const InputError& e) {
        throw InputError(std::string("--poly: ") + e.what());
    }
    if (p.is_zero()) throw InputError("--poly: polynomial is zero");
    if (*p.degree() > a.structure.n()) throw InputError("--poly: degree exceeds the pencil size");
    const K k = p.coeff(*p.degree());
    const Poly<K> monic = p.monic();
    if (!check_placement(a.structure, monic, fl.rank)) {
        io.err << "infeasible: the placement condition fails\n";
        return kNegative;
    }
    const auto cert = synthesize_placement(a.pencil, monic, fl.rank, fl.search());
    if (!cert) {
        io.err << "no perturbation found within the budget\n";
        return kNotFound;
    }
    json j = certificate_to_json(*cert);
    j["normalization"] = k.to_string();
    emit(fl, io, j);
    io.err << "det(A + P) is proportional to " << to_string(monic) << "; the given polynomial is " << k.to_string()
           << " times it\n";
    return kOk;
}

template <FieldElement K>
int verify(const Flags& fl, Io& io, const json& da, const json& dc, const FieldSpec& f) {
    const auto a = operand<K>(da, f, fl.files[0]);
    const auto cert = in_file(fl.files[1], [&] { return certificate_from_json<K>(dc, f); });
    const bool ok = verify_certificate(a.pencil, cert);
    if (fl.text()) io.out << (ok ? "verified" : "verification failed") << "\n";
    else emit(fl, io, json{{"verified", ok}});
    return ok ? kOk : kNegative;
}

void print_sweep(std::ostream& os, const SweepReport& rep) {
    os << "field " << rep.field.to_string() << "  n " << rep.n << "  r " << rep.r << "  structures "
       << rep.structures.size() << "\n";
    const std::pair<const char*, std::size_t> rows[] = {
        {"cases", rep.cases.size()},
        {"agreements", rep.agreements},
        {"necessity violations", rep.necessity_violations},
        {"sufficiency violations", rep.sufficiency_violations},
        {"open territory, found", rep.open_found},
        {"open territory, not found", rep.open_not_found},
        {"cascade violations", rep.cascade_violations},
        {"unverified witnesses", rep.unverified_witnesses},
    };
    for (const auto& [name, v] : rows) {
        std::string label = name;
        label.resize(28, ' ');
        os << "  " << label << v << "\n";
    }
}

int oracle(const Flags& fl, Io& io) {
    const FieldSpec f = FieldSpec::prime(fl.field);
    OracleOptions opt;
    opt.jobs = std::max(1u, fl.jobs);
    const SweepReport rep = theorem_sweep(f, fl.n, fl.rank, opt);
    if (fl.text()) {
        print_sweep(io.out, rep);
    } else {
        emit(fl, io, sweep_to_json(rep));
        print_sweep(io.err, rep);
    }
    return kOk;
}

struct Dispatcher {
    const Flags& fl;
    Io& io;

    int analyze_cmd() {
        need_files(fl, 1, "analyze FILE");
        const json d = load(fl.files[0]);
        const FieldSpec f = field_of(d, fl.files[0]);
        return f.is_finite() ? analyze<Zp>(fl, io, d, f) : analyze<Rational>(fl, io, d, f);
    }
    int two(const char* usage, int (*q)(const Flags&, Io&, const json&, const json&, const FieldSpec&),
            int (*z)(const Flags&, Io&, const json&, const json&, const FieldSpec&)) {
        need_files(fl, 2, usage);
        const json a = load(fl.files[0]);
        const json b = load(fl.files[1]);
        const FieldSpec f = field_of(a, fl.files[0]);
        if (!(field_of(b, fl.files[1]) == f)) throw FileError(fl.files[1], "field differs from " + fl.files[0]);
        return f.is_finite() ? z(fl, io, a, b, f) : q(fl, io, a, b, f);
    }
    int place_cmd() {
        need_files(fl, 1, "place --rank r --poly p A.json");
        const json d = load(fl.files[0]);
        const FieldSpec f = field_of(d, fl.files[0]);
        return f.is_finite() ? place<Zp>(fl, io, d, f) : place<Rational>(fl, io, d, f);
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Io io{out, err};
    Flags fl;
    CLI::App app{"Exact low-rank perturbation of regular matrix pencils", "lrpencil"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", fl.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", fl.out, "Write the JSON result to this file");
    };
    auto search = [&](CLI::App* sub) {
        sub->add_option("--rank", fl.rank, "Rank bound r")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", fl.seed, "Random seed");
        sub->add_option("--budget", fl.budget, "Randomized trials per search layer");
        sub->add_option("--jobs", fl.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--exhaustive-cap", fl.cap, "Largest space searched exhaustively");
    };

    auto* an = app.add_subcommand("analyze", "Weierstrass structure and multiplicity data of a pencil");
    an->add_option("file", fl.files, "Pencil or structure JSON")->required();
    common(an);

    auto* ch = app.add_subcommand("check", "Decide whether B is reachable from A by a rank-r perturbation");
    ch->add_option("--rank", fl.rank, "Rank bound r")->required();
    ch->add_option("files", fl.files, "A.json B.json")->required()->expected(2);
    common(ch);

    auto* pe = app.add_subcommand("perturb", "Construct a certified rank-r perturbation taking A to B");
    pe->add_option("files", fl.files, "A.json B.json")->required()->expected(2);
    search(pe);
    common(pe);

    auto* pl = app.add_subcommand("place", "Construct a rank-r perturbation with a prescribed determinant");
    pl->add_option("--poly", fl.poly, "Target polynomial, e.g. \"s^2 + 1\"")->required();
    pl->add_option("file", fl.files, "A.json")->required();
    search(pl);
    common(pl);

    auto* ve = app.add_subcommand("verify", "Check a certificate against a pencil");
    ve->add_option("files", fl.files, "A.json cert.json")->required()->expected(2);
    common(ve);

    auto* orc = app.add_subcommand("oracle", "Exhaustive sweep over all structure pairs over a small prime field");
    orc->add_option("--field", fl.field, "Prime p")->required();
    orc->add_option("--n", fl.n, "Pencil size")->required();
    orc->add_option("--rank", fl.rank, "Rank bound r")->required();
    orc->add_option("--jobs", fl.jobs, "Worker threads")->check(CLI::PositiveNumber);
    common(orc);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Dispatcher d{fl, io};
        if (*an) return d.analyze_cmd();
        if (*ch) return d.two("check --rank r A.json B.json", &check<Rational>, &check<Zp>);
        if (*pe) return d.two("perturb --rank r A.json B.json", &perturb<Rational>, &perturb<Zp>);
        if (*pl) return d.place_cmd();
        if (*ve) return d.two("verify A.json cert.json", &verify<Rational>, &verify<Zp>);
        if (*orc) return oracle(fl, io);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace lrp::cli
