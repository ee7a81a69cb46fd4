// lamlat: command-line front end for forms over Z[t, 1/t] and their cover lattices.
//
// Exit codes: 0 computation finished (whatever the verdict), 64 usage error,
// 65 malformed input, 1 any other failure.

#include "lamlat.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace lamlat;

constexpr int kUsage = 64;
constexpr int kMalformed = 65;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string corpus;
    std::string format = "json";
    std::string out;
    unsigned threads = 0;
    int m = 1;
    int m_max = 3;
    int window = 1;
    std::int64_t bound = 2;
    std::optional<int> spread;
    std::optional<int> stability_m_max;
    std::string poly;
    std::string vector;
    bool sweep = false;
};

/// A loaded input: either a form or a plain lattice.
struct Input {
    std::string name;
    std::optional<HermitianForm> form;
    std::optional<IntegralLattice> lattice;

    HermitianForm as_form() const {
        if (form) return *form;
        return HermitianForm::from_integer(lattice->gram());
    }
};

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Input load(const Options& o) {
    if (o.input.empty() == o.corpus.empty()) throw UsageError("give exactly one of an input path, '-' or --corpus");
    Input in;
    if (!o.corpus.empty()) {
        std::optional<corpus::CorpusEntry> found;
        try {
            found = corpus::get(o.corpus);
        } catch (const UnknownName& err) {
            throw UsageError(err.what());
        }
        const corpus::CorpusEntry& e = *found;
        in.name = e.name;
        if (e.is_form())
            in.form = e.form();
        else
            in.lattice = e.lattice();
        return in;
    }
    std::string text;
    if (o.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(o.input);
        if (!f) throw UsageError("cannot open '" + o.input + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    const Json j = parse_json_text(text);
    if (j.is_object() && j.contains("gram")) {
        in.lattice = lattice_from_json(j);
        in.name = j.value("name", "");
    } else {
        in.form = form_from_json(j);
        in.name = j.is_object() ? j.value("name", "") : "";
    }
    return in;
}

IntegralLattice lattice_for(const Input& in, const Options& o) {
    if (in.lattice && !in.form) return *in.lattice;
    return reduce_mod_m(*in.form, o.m);
}

std::string join(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string gram_text(const IntegralLattice& lat) {
    std::string s;
    for (std::size_t i = 0; i < lat.rank(); ++i) s += join(lat.gram().row(i)) + "\n";
    return s;
}

struct Output {
    Json json;
    std::string text;
};

Output cmd_validate(const Input& in) {
    if (in.lattice && !in.form) {
        const auto& lat = *in.lattice;
        const bool pd = is_positive_definite(lat);
        Json j{{"kind", "lattice"}, {"rank", lat.rank()}, {"det", big_to_json(determinant(lat))},
               {"positive_definite", pd}, {"parity", to_string(parity(lat))}};
        return {j, "lattice of rank " + std::to_string(lat.rank()) + ", det " + determinant(lat).str() +
                       (pd ? ", positive definite" : ", not positive definite") + "\n"};
    }
    const auto& a = *in.form;
    const LaurentPoly det = determinant(a);
    Json j{{"kind", "form"}, {"rank", a.rank()}, {"det", poly_to_json(det)}, {"unimodular", det.is_unit()},
           {"max_exponent", a.max_exponent()}};
    return {j, "Hermitian form of rank " + std::to_string(a.rank()) + ", det " + det.str() + "\n"};
}

Output lattice_output(const IntegralLattice& lat, Json extra) {
    Json j = lattice_to_json(lat);
    for (auto& [k, v] : extra.items()) j[k] = v;
    return {j, gram_text(lat)};
}

Output cmd_reduce(const Input& in, const Options& o) {
    return lattice_output(reduce_mod_m(in.as_form(), o.m), Json{{"m", o.m}});
}

Output cmd_window(const Input& in, const Options& o) {
    const IntegralLattice lat = window_gram(in.as_form(), o.window);
    Json extra{{"J", o.window}, {"det", big_to_json(determinant(lat))}};
    Output out = lattice_output(lat, extra);
    out.text += "det " + determinant(lat).str() + "\n";
    return out;
}

Output cmd_minvecs(const Input& in, const Options& o) {
    const IntegralLattice lat = lattice_for(in, o);
    require_definite(lat);
    const ShortVectorSet s = enumerate_up_to(lat, o.bound);
    std::string text = std::to_string(s.vectors.size()) + " vectors up to sign with norm <= " + std::to_string(o.bound) + "\n";
    for (const auto& v : s.vectors) text += std::to_string(v.norm) + " " + join(v.coords) + "\n";
    return {short_vectors_to_json(s), text};
}

Output cmd_decompose(const Input& in, const Options& o) {
    const IntegralLattice lat = lattice_for(in, o);
    const Decomposition d = decompose(lat);
    std::string text = std::to_string(d.components.size()) + " component(s), minimal vectors " +
                       std::to_string(d.minimal_vectors.size()) + " (bound " + std::to_string(d.bound) + ")\n";
    for (std::size_t k = 0; k < d.components.size(); ++k)
        text += "  component " + std::to_string(k + 1) + ": rank " + std::to_string(d.components[k].rank) + ", det " +
                d.components[k].det.str() + "\n";
    return {decomposition_to_json(d), text};
}

Output cmd_winding(const Input& in, const Options& o) {
    const HermitianForm a = in.as_form();
    const WindingReport w = o.sweep ? winding_bound_sweep(a) : winding_bound(a);
    std::string text = "max " + std::to_string(w.max_deg) + ", min " + std::to_string(w.min_deg) + ", lambda " +
                       std::to_string(w.lambda) + "\n";
    for (const auto& x : w.max_witnesses) text += "  max " + x.name + " = " + x.poly.str() + "\n";
    for (const auto& x : w.min_witnesses) text += "  min " + x.name + " = " + x.poly.str() + "\n";
    return {winding_to_json(w), text};
}

Output cmd_hsos(const Input* in, const Options& o) {
    std::vector<std::pair<std::string, LaurentPoly>> targets;
    if (!o.poly.empty()) {
        targets.emplace_back("poly", poly_from_json(parse_json_text(o.poly)));
    } else {
        const HermitianForm a = in->as_form();
        for (std::size_t i = 0; i < a.rank(); ++i) targets.emplace_back("a" + std::to_string(i + 1) + std::to_string(i + 1), a(i, i));
    }
    Json results = Json::array();
    std::string text;
    for (const auto& [name, p] : targets) {
        const int spread = o.spread.value_or(default_spread(p));
        const HsosResult h = hsos(p, spread);
        Json r{{"name", name}, {"target", poly_to_json(p)}, {"spread_bound", spread}};
        if (h.certificate) {
            Json parts = Json::array();
            std::string s;
            for (const auto& q : *h.certificate) {
                parts.push_back(poly_to_json(q));
                s += (s.empty() ? "" : ", ") + q.str();
            }
            r["certificate"] = parts;
            text += name + ": [" + s + "]\n";
        } else {
            r["certificate"] = nullptr;
            text += name + ": none up to spread " + std::to_string(spread) + "\n";
        }
        results.push_back(std::move(r));
    }
    return {Json{{"results", results}}, text};
}

Output cmd_lifts(const Input& in, const Options& o) {
    const HermitianForm a = in.as_form();
    std::vector<std::pair<std::string, LambdaVector>> vs;
    if (!o.vector.empty()) {
        const Json j = parse_json_text(o.vector);
        if (!j.is_array()) throw ParseError("--vector must be a JSON array of polynomials");
        LambdaVector v;
        for (const auto& p : j) v.push_back(poly_from_json(p));
        vs.emplace_back("v", v);
    } else {
        for (std::size_t i = 0; i < a.rank(); ++i) vs.emplace_back("e" + std::to_string(i + 1), unit_vector(a.rank(), i));
    }
    Json results = Json::array();
    std::string text;
    for (const auto& [name, v] : vs) {
        const auto rec = minimal_stability_check(a, v, {o.m}).front();
        results.push_back(Json{{"name", name},
                               {"m", rec.m},
                               {"is_minimal", rec.is_minimal},
                               {"reduced_norm", rec.reduced_norm},
                               {"min_lift_norm", rec.min_lift_norm},
                               {"inequality_holds", rec.inequality_holds},
                               {"lift_witness", rec.lift_witness}});
        text += name + ": norm " + std::to_string(rec.reduced_norm) + (rec.is_minimal ? " (minimal)" : "") +
                ", min lift norm " + std::to_string(rec.min_lift_norm) +
                (rec.inequality_holds ? ", inequality holds\n" : ", inequality fails\n");
    }
    return {Json{{"m", o.m}, {"results", results}}, text};
}

Output cmd_analyze(const Input& in, const Options& o) {
    SplitParams p;
    p.m_max = o.m_max;
    p.spread = o.spread;
    if (o.stability_m_max) p.stability_m_max = *o.stability_m_max;
    const SplitReport r = split_report(in.as_form(), p);
    return {report_to_json(r), render_text(r)};
}

void emit(const Output& out, const Options& o) {
    const std::string bytes = o.format == "json" ? render_json(out.json) : out.text;
    if (o.out.empty()) {
        std::cout << bytes << std::flush;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o.out + "'");
    f << bytes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermitian forms over Z[t, 1/t] and their cyclic-cover lattices"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_input = true) {
        if (needs_input) {
            sub->add_option("input", o.input, "form or lattice JSON file, '-' for stdin");
            sub->add_option("--corpus", o.corpus, "built-in input: HT_L, HT_A, HT_A_inv, E8, identity:<n>");
        }
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", o.out, "write output to a file");
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "check a form or lattice and print its invariants");
    common(validate);
    auto* reduce = app.add_subcommand("reduce", "Gram matrix of the m-fold cover");
    common(reduce);
    reduce->add_option("--m", o.m, "cover degree")->check(CLI::PositiveNumber);
    auto* window = app.add_subcommand("window", "Gram matrix of the degree window [-J, J]");
    common(window);
    window->add_option("--J", o.window, "window half-width")->check(CLI::NonNegativeNumber);
    auto* minvecs = app.add_subcommand("minvecs", "short vectors up to a norm bound");
    common(minvecs);
    minvecs->add_option("--bound", o.bound, "norm bound")->check(CLI::NonNegativeNumber);
    minvecs->add_option("--m", o.m, "cover degree for form input")->check(CLI::PositiveNumber);
    auto* decomp = app.add_subcommand("decompose", "orthogonal decomposition into indecomposables");
    common(decomp);
    decomp->add_option("--m", o.m, "cover degree for form input")->check(CLI::PositiveNumber);
    auto* winding = app.add_subcommand("winding", "winding-degree bound");
    common(winding);
    winding->add_flag("--sweep", o.sweep, "minimize over basis orderings");
    auto* hsos_cmd = app.add_subcommand("hsos", "Hermitian sum-of-squares search");
    common(hsos_cmd);
    hsos_cmd->add_option("--spread", o.spread, "degree spread bound")->check(CLI::NonNegativeNumber);
    hsos_cmd->add_option("--poly", o.poly, "target polynomial as JSON [[deg, coeff], ...]");
    auto* lifts = app.add_subcommand("lifts", "minimal lifts from the m-fold to the 2m-fold cover");
    common(lifts);
    lifts->add_option("--m", o.m, "cover degree")->check(CLI::PositiveNumber);
    lifts->add_option("--vector", o.vector, "vector as a JSON array of polynomials (default: basis vectors)");
    auto* analyze = app.add_subcommand("analyze", "run the splitting checks");
    common(analyze);
    analyze->add_option("--m-max", o.m_max, "largest cover degree examined")->check(CLI::PositiveNumber);
    analyze->add_option("--spread", o.spread, "spread bound for the sum-of-squares searches")->check(CLI::NonNegativeNumber);
    analyze->add_option("--stability-m-max", o.stability_m_max, "largest m for the lift checks")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (o.threads > 0) set_thread_count(o.threads);
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        Output out;
        if (name == "hsos" && !o.poly.empty()) {
            if (!o.input.empty() || !o.corpus.empty()) throw UsageError("--poly replaces the input form");
            out = cmd_hsos(nullptr, o);
        } else {
            const Input in = load(o);
            if (name == "validate") out = cmd_validate(in);
            else if (name == "reduce") out = cmd_reduce(in, o);
            else if (name == "window") out = cmd_window(in, o);
            else if (name == "minvecs") out = cmd_minvecs(in, o);
            else if (name == "decompose") out = cmd_decompose(in, o);
            else if (name == "winding") out = cmd_winding(in, o);
            else if (name == "hsos") out = cmd_hsos(&in, o);
            else if (name == "lifts") out = cmd_lifts(in, o);
            else out = cmd_analyze(in, o);
        }
        emit(out, o);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "lamlat: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "lamlat: ParseError: " << e.what() << "\n";
        return kMalformed;
    } catch (const HermitianViolation& e) {
        std::cerr << "lamlat: " << e.what() << "\n";
        return kMalformed;
    } catch (const DimensionMismatch& e) {
        std::cerr << "lamlat: DimensionMismatch: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "lamlat: " << e.what() << "\n";
        return 1;
    }
}
