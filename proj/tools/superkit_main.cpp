#include "superkit/paper_check.hpp"
#include "superkit/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace sk = superkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct OutputOpts {
    std::string out = "-";
    std::string format = "json";
};

void write_output(const OutputOpts& opts, const std::string& text) {
    if (opts.out == "-" || opts.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + opts.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += "\"\"";
        else r += c;
    }
    r += "\"";
    return r;
}

sk::Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    sk::Json j;
    f >> j;
    return j;
}

std::pair<long, long> parse_model(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--model expects k1,k2");
    return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

std::pair<long, long> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1))};
}

uint64_t scan_seed() {
    if (const char* env = std::getenv("SUPERKIT_SEED")) return std::stoull(env);
    return 20240817ull;
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
    std::string model, k1_range, k2_range;
    std::string lambda1 = "i", lambda2 = "i";
    std::string alpha_file;
    std::string policy = "fix", convention = "column";
    OutputOpts out;
};

int run_classify(const ClassifyArgs& args) {
    std::vector<std::pair<long, long>> specs;
    if (!args.model.empty()) {
        specs.push_back(parse_model(args.model));
    } else if (!args.k1_range.empty()) {
        auto [a, b] = parse_range(args.k1_range);
        for (long k1 = a; k1 <= b; ++k1) {
            if (args.k2_range.empty()) {
                specs.emplace_back(k1, 2 - k1);
            } else {
                auto [c, d] = parse_range(args.k2_range);
                for (long k2 = c; k2 <= d; ++k2) specs.emplace_back(k1, k2);
            }
        }
    }
    if (specs.empty()) {
        std::cerr << "classify: empty model range (need --model or --k1-range)\n";
        return kExitUsage;
    }

    sk::LaurentFn alpha;
    if (!args.alpha_file.empty()) alpha = sk::laurent_from_json(load_json(args.alpha_file));
    auto conv = sk::parse_convention(args.convention);

    sk::Json rows = sk::Json::array();
    for (auto [k1, k2] : specs) {
        sk::SplitModelSpec spec;
        spec.k1 = k1;
        spec.k2 = k2;
        spec.lambda1 = sk::parse_complex(args.lambda1);
        spec.lambda2 = sk::parse_complex(args.lambda2);
        spec.alpha = alpha;

        sk::MaximalityVerdict verdict = sk::classify_maximal(spec);
        sk::Atlas atlas = sk::build_projective_atlas(spec);
        sk::G2L ber = sk::berezinian(atlas.transition("V", "U"));
        sk::PushforwardResult pf = sk::pushforward_superconformal(
            atlas.transition("U", "V"), atlas.transition("V", "U"), conv);

        std::string sc_status = "superconformal";
        if (!pf.zero_residual())
            sc_status = alpha.is_zero() ? "not superconformal: residual"
                                        : "not superconformal: alpha obstruction";
        std::string reasons;
        for (const auto& r : verdict.reasons) reasons += (reasons.empty() ? "" : "; ") + r;

        sk::Json row{{"k1", k1},
                     {"k2", k2},
                     {"maximal", verdict.maximal},
                     {"reasons", reasons},
                     {"ber", sk::to_json(ber)},
                     {"superconformal", sc_status}};
        rows.push_back(std::move(row));
    }

    if (args.out.format == "csv") {
        std::ostringstream os;
        os << "k1,k2,maximal,reasons,ber_body,superconformal\n";
        for (const auto& row : rows) {
            sk::LaurentFn ber_body;  // body rendered compactly
            os << row["k1"].get<long>() << "," << row["k2"].get<long>() << ","
               << (row["maximal"].get<bool>() ? "yes" : "no") << ","
               << csv_escape(row["reasons"].get<std::string>()) << ","
               << csv_escape(row["ber"]["c0"].dump()) << ","
               << csv_escape(row["superconformal"].get<std::string>()) << "\n";
        }
        write_output(args.out, os.str());
    } else {
        write_output(args.out, sk::Json{{"rows", rows}}.dump(2));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct PaperCheckArgs {
    std::string policy = "fix", convention = "column";
    OutputOpts out;
};

int run_paper_check(const PaperCheckArgs& args) {
    sk::PaperCheckReport rep =
        sk::paper_check(sk::parse_policy(args.policy), sk::parse_convention(args.convention));
    sk::Json checks = sk::Json::array();
    for (const auto& c : rep.checks)
        checks.push_back(sk::Json{{"id", c.id}, {"match", c.match}, {"diff", c.diff}});
    sk::Json j{{"policy", sk::policy_str(rep.policy)},
               {"convention", sk::convention_str(rep.convention)},
               {"checks", checks},
               {"notes", rep.notes}};
    if (args.out.format == "csv") {
        std::ostringstream os;
        os << "id,match,detail\n";
        for (const auto& c : rep.checks) {
            std::string detail;
            for (const auto& d : c.diff) detail += (detail.empty() ? "" : " | ") + d;
            os << c.id << "," << (c.match ? "match" : "mismatch") << "," << csv_escape(detail)
               << "\n";
        }
        write_output(args.out, os.str());
    } else {
        write_output(args.out, j.dump(2));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct FieldArgs {
    std::string model;
    std::string lambda1 = "i", lambda2 = "i";
    std::string fields_file;
    std::string policy = "fix", convention = "column";
    OutputOpts out;
};

sk::SplitModelSpec spec_from(const FieldArgs& args) {
    auto [k1, k2] = parse_model(args.model);
    sk::SplitModelSpec spec;
    spec.k1 = k1;
    spec.k2 = k2;
    spec.lambda1 = sk::parse_complex(args.lambda1);
    spec.lambda2 = sk::parse_complex(args.lambda2);
    return spec;
}

sk::Json overlap_form_json(const sk::OverlapForm& form) {
    sk::Json j = sk::Json::object();
    for (const auto& [key, u] : form) j[key.first + "->" + key.second] = sk::to_json(u);
    return j;
}

int run_consistency(const FieldArgs& args) {
    sk::SplitModelSpec spec = spec_from(args);
    if (!sk::classify_maximal(spec).maximal) {
        std::cerr << "consistency: model is not maximally superconformal\n";
        return kExitPrecondition;
    }
    auto policy = sk::parse_policy(args.policy);
    auto conv = sk::parse_convention(args.convention);
    std::vector<sk::NamedField> fields = sk::fields_from_json(load_json(args.fields_file));

    sk::Json rows = sk::Json::array();
    for (const auto& nf : fields) {
        sk::Superfield global =
            nf.field.has("V") ? nf.field : nf.field;  // classify extends as needed
        sk::CircleField cf = sk::circle_field(
            nf.field.has("V") && nf.field.has("U")
                ? nf.field
                : sk::make_global(nf.field.charts.begin()->second,
                                  nf.field.charts.begin()->first,
                                  sk::build_projective_atlas(spec)));
        sk::RealityAssignment declared = nf.declared;
        sk::RealityAssignment inferred = sk::infer_reality(cf);
        for (int i = 0; i < 4; ++i) {
            sk::FieldName f = static_cast<sk::FieldName>(i);
            if (declared[f] == sk::Reality::Free) declared[f] = inferred[f];
        }

        sk::ClassificationResult res =
            sk::consistency_classify(spec, nf.field, declared, policy, conv, /*force=*/true);

        std::string must_vanish = "-";
        auto typed = [&](sk::FieldName f) {
            return res.assignment[f] == sk::Reality::Real ||
                   res.assignment[f] == sk::Reality::Imaginary ||
                   res.assignment[f] == sk::Reality::Zero;
        };
        if (typed(sk::FieldName::Psi1) && typed(sk::FieldName::Psi2)) {
            sk::RealityAssignment t = declared;
            auto fix_type = [&](sk::FieldName f) {
                if (t[f] != sk::Reality::Real && t[f] != sk::Reality::Imaginary)
                    t[f] = sk::Reality::Real;  // zero components fit either type
            };
            fix_type(sk::FieldName::Psi1);
            fix_type(sk::FieldName::Psi2);
            must_vanish =
                sk::prop46_type_analysis(spec, nf.field, t, policy, conv).must_vanish;
        }

        sk::Json residual = sk::Json::array();
        for (const auto& [k, v] : res.residual)
            residual.push_back(sk::Json{{"variation", k.str()}, {"coefficient", sk::to_json(v)}});

        sk::Json reality = sk::Json::object();
        for (int i = 0; i < 4; ++i) {
            sk::FieldName f = static_cast<sk::FieldName>(i);
            reality[sk::field_name_str(f)] = sk::reality_str(res.assignment[f]);
        }

        rows.push_back(sk::Json{{"model", sk::Json::array({spec.k1, spec.k2})},
                                {"policy", args.policy},
                                {"field", nf.name},
                                {"reality", reality},
                                {"good_residual", res.good_residual_norm},
                                {"necessary_ok", res.necessary_ok},
                                {"consistent", res.consistent},
                                {"must_vanish", must_vanish},
                                {"residual_terms", residual}});
    }

    if (args.out.format == "csv") {
        std::ostringstream os;
        os << "field,good_residual,necessary_ok,consistent,must_vanish\n";
        for (const auto& row : rows)
            os << csv_escape(row["field"].get<std::string>()) << ","
               << row["good_residual"].get<double>() << ","
               << (row["necessary_ok"].get<bool>() ? "yes" : "no") << ","
               << (row["consistent"].get<bool>() ? "yes" : "no") << ","
               << row["must_vanish"].get<std::string>() << "\n";
        write_output(args.out, os.str());
    } else {
        write_output(args.out, sk::Json{{"rows", rows}}.dump(2));
    }
    return kExitOk;
}

int run_goodfield(const FieldArgs& args) {
    sk::SplitModelSpec spec = spec_from(args);
    auto policy = sk::parse_policy(args.policy);
    sk::Atlas atlas = sk::build_projective_atlas(spec);
    std::vector<sk::NamedField> fields = sk::fields_from_json(load_json(args.fields_file));

    sk::Json rows = sk::Json::array();
    for (const auto& nf : fields) {
        sk::Superfield global = sk::make_global(nf.field.charts.begin()->second,
                                                nf.field.charts.begin()->first, atlas);
        sk::OverlapForm residual = sk::good_field_residual(global, atlas, policy);
        double norm = 0.0;
        for (const auto& [key, u] : residual) norm = std::max(norm, u.max_coeff_abs());
        rows.push_back(sk::Json{{"field", nf.name},
                                {"good", norm == 0.0},
                                {"residual_norm", norm},
                                {"residual", overlap_form_json(residual)}});
    }

    if (args.out.format == "csv") {
        std::ostringstream os;
        os << "field,good,residual_norm\n";
        for (const auto& row : rows)
            os << csv_escape(row["field"].get<std::string>()) << ","
               << (row["good"].get<bool>() ? "yes" : "no") << ","
               << row["residual_norm"].get<double>() << "\n";
        write_output(args.out, os.str());
    } else {
        write_output(args.out, sk::Json{{"rows", rows}}.dump(2));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
    FieldArgs base;
    long count = 20;
    std::string types = "re-im,im-re,re-re,im-im";
    long max_freq = 2;
};

sk::LaurentFn random_typed(std::mt19937_64& rng, sk::Reality type, long max_freq) {
    // Real or imaginary trig polynomial, presented as a Laurent function whose
    // circle restriction has the declared type.
    sk::LaurentFn u;
    for (long k = 1; k <= max_freq; ++k) {
        long a = static_cast<long>(rng() % 7) - 3;
        long b = static_cast<long>(rng() % 7) - 3;
        // c e^{ik phi} + conj for real; c e^{ik phi} - conj for imaginary.
        sk::ComplexScalar c{sk::Rational(a), sk::Rational(b)};
        u.add_term(k, 0, c);
        sk::ComplexScalar cc = c.conj();
        if (type == sk::Reality::Imaginary) cc = -cc;
        u.add_term(0, k, cc);
    }
    long a0 = static_cast<long>(rng() % 7) - 3;
    if (type == sk::Reality::Real)
        u.add_term(0, 0, sk::ComplexScalar{sk::Rational(a0), sk::Rational(0)});
    else
        u.add_term(0, 0, sk::ComplexScalar{sk::Rational(0), sk::Rational(a0)});
    return u;
}

int run_scan(const ScanArgs& args) {
    sk::SplitModelSpec spec = spec_from(args.base);
    if (!sk::classify_maximal(spec).maximal) {
        std::cerr << "scan: model is not maximally superconformal\n";
        return kExitPrecondition;
    }
    auto policy = sk::parse_policy(args.base.policy);
    auto conv = sk::parse_convention(args.base.convention);

    std::vector<std::pair<sk::Reality, sk::Reality>> types;
    std::stringstream ts(args.types);
    std::string tok;
    auto one = [](const std::string& s) {
        if (s == "re") return sk::Reality::Real;
        if (s == "im") return sk::Reality::Imaginary;
        throw std::invalid_argument("type token must be re or im");
    };
    while (std::getline(ts, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("types look like re-im");
        types.emplace_back(one(tok.substr(0, dash)), one(tok.substr(dash + 1)));
    }
    if (types.empty() || args.count <= 0) {
        std::cerr << "scan: empty field family\n";
        return kExitUsage;
    }

    std::mt19937_64 rng(scan_seed());
    std::ostringstream os;
    os << "field_id,type1,type2,good_residual,necessary_ok,consistent,must_vanish\n";
    sk::Json rows = sk::Json::array();
    long id = 0;
    for (long n = 0; n < args.count; ++n) {
        for (auto [t1, t2] : types) {
            sk::FieldComponents seed;
            seed.psi1 = random_typed(rng, t1, args.max_freq);
            seed.psi2 = random_typed(rng, t2, args.max_freq);
            sk::Superfield field;
            field.charts["V"] = seed;
            sk::RealityAssignment declared;
            declared[sk::FieldName::Psi1] = t1;
            declared[sk::FieldName::Psi2] = t2;
            declared[sk::FieldName::Phi] = sk::Reality::Zero;
            declared[sk::FieldName::F] = sk::Reality::Zero;

            sk::ClassificationResult res =
                sk::consistency_classify(spec, field, declared, policy, conv, /*force=*/true);
            std::string must_vanish =
                sk::prop46_type_analysis(spec, field, declared, policy, conv).must_vanish;

            auto tstr = [](sk::Reality r) { return r == sk::Reality::Real ? "re" : "im"; };
            os << id << "," << tstr(t1) << "," << tstr(t2) << "," << res.good_residual_norm
               << "," << (res.necessary_ok ? "yes" : "no") << ","
               << (res.consistent ? "yes" : "no") << "," << must_vanish << "\n";
            rows.push_back(sk::Json{{"field_id", id},
                                    {"type1", tstr(t1)},
                                    {"type2", tstr(t2)},
                                    {"good_residual", res.good_residual_norm},
                                    {"necessary_ok", res.necessary_ok},
                                    {"consistent", res.consistent},
                                    {"must_vanish", must_vanish}});
            ++id;
        }
    }
    if (args.base.out.format == "json")
        write_output(args.base.out, sk::Json{{"rows", rows}}.dump(2));
    else
        write_output(args.base.out, os.str());
    return kExitOk;
}

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--out", out.out, "output path, or - for stdout");
    cmd->add_option("--format", out.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of superconformal structures over the projective line"};
    app.require_subcommand(1);

    ClassifyArgs cargs;
    CLI::App* classify = app.add_subcommand("classify", "classify split models by maximality");
    classify->add_option("--model", cargs.model, "single model k1,k2");
    classify->add_option("--k1-range", cargs.k1_range, "range a:b (k2 defaults to 2-k1)");
    classify->add_option("--k2-range", cargs.k2_range, "range c:d paired with --k1-range");
    classify->add_option("--lambda1", cargs.lambda1, "frame scaling, e.g. i or 1+2i");
    classify->add_option("--lambda2", cargs.lambda2, "frame scaling");
    classify->add_option("--alpha", cargs.alpha_file, "JSON file with the mixing term");
    classify->add_option("--policy", cargs.policy, "fix or negate");
    classify->add_option("--convention", cargs.convention, "column or chain");
    add_output_opts(classify, cargs.out);

    PaperCheckArgs pargs;
    CLI::App* pcheck = app.add_subcommand("paper-check", "recompute the displayed identities");
    pcheck->add_option("--policy", pargs.policy, "fix or negate");
    pcheck->add_option("--convention", pargs.convention, "column or chain");
    add_output_opts(pcheck, pargs.out);

    FieldArgs consistency_args;
    CLI::App* consistency = app.add_subcommand("consistency", "classify fields for consistency");
    consistency->add_option("--model", consistency_args.model, "model k1,k2")->required();
    consistency->add_option("--lambda1", consistency_args.lambda1, "frame scaling");
    consistency->add_option("--lambda2", consistency_args.lambda2, "frame scaling");
    consistency->add_option("--fields", consistency_args.fields_file, "field file")->required();
    consistency->add_option("--policy", consistency_args.policy, "fix or negate");
    consistency->add_option("--convention", consistency_args.convention, "column or chain");
    add_output_opts(consistency, consistency_args.out);

    FieldArgs good_args;
    CLI::App* goodfield = app.add_subcommand("goodfield", "good-field residual per overlap");
    goodfield->add_option("--model", good_args.model, "model k1,k2")->required();
    goodfield->add_option("--lambda1", good_args.lambda1, "frame scaling");
    goodfield->add_option("--lambda2", good_args.lambda2, "frame scaling");
    goodfield->add_option("--fields", good_args.fields_file, "field file")->required();
    goodfield->add_option("--policy", good_args.policy, "fix or negate");
    add_output_opts(goodfield, good_args.out);

    ScanArgs scan_args;
    scan_args.base.out.format = "csv";
    CLI::App* scan = app.add_subcommand("scan", "classify a random family of typed fields");
    scan->add_option("--model", scan_args.base.model, "model k1,k2")->required();
    scan->add_option("--lambda1", scan_args.base.lambda1, "frame scaling");
    scan->add_option("--lambda2", scan_args.base.lambda2, "frame scaling");
    scan->add_option("--count", scan_args.count, "fields per type");
    scan->add_option("--types", scan_args.types, "comma list of re-im pairs");
    scan->add_option("--max-freq", scan_args.max_freq, "highest harmonic in random fields");
    scan->add_option("--policy", scan_args.base.policy, "fix or negate");
    scan->add_option("--convention", scan_args.base.convention, "column or chain");
    add_output_opts(scan, scan_args.base.out);

    try {
        app.parse(argc, argv);
        if (*classify) return run_classify(cargs);
        if (*pcheck) return run_paper_check(pargs);
        if (*consistency) return run_consistency(consistency_args);
        if (*goodfield) return run_goodfield(good_args);
        if (*scan) return run_scan(scan_args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
