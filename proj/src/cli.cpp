#include "ietk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ietk/acceptance.hpp"
#include "ietk/capset.hpp"
#include "ietk/preserve.hpp"

namespace ietk::cli {

namespace {

using nlohmann::json;

json quadreal_json(const QuadReal& x) {
    return json{{"a", to_string(x.rat_part())},
                {"b", to_string(x.irr_part())},
                {"d", x.field()}};
}

json matrix_report_json(const MatrixReport& r) {
    json j;
    j["det"] = to_string(r.det);
    j["symplectic_sign"] = r.symplectic_sign == 0 ? json(nullptr) : json(r.symplectic_sign);
    j["delta"] = r.delta ? json(to_string(*r.delta)) : json(nullptr);
    j["left_eigen_ok"] = r.left_eigen_ok;
    j["row_sum_ok"] = r.row_sum_ok;
    j["lattice_ok"] = r.lattice_ok;
    j["e3n_member"] = r.e3n_member;
    return j;
}

RealParam parse_real_flag(const std::string& text, bool approx_allowed) {
    try {
        return RealParam(parse_quadreal(text));
    } catch (const Error&) {
        if (!approx_allowed)
            throw;
    }
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end == nullptr || *end != '\0')
        fail(Errc::ParseError, "cannot parse '" + text + "' as a number");
    return RealParam(Approx{v, 0.0});
}

// "a,b,c" with exact entries (or floats under --approx)
std::array<RealParam, 3> parse_triple(const std::string& text, bool approx_allowed) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        parts.push_back(item);
    if (parts.size() != 3)
        fail(Errc::ParseError, "expected three comma-separated lengths");
    return {parse_real_flag(parts[0], approx_allowed), parse_real_flag(parts[1], approx_allowed),
            parse_real_flag(parts[2], approx_allowed)};
}

// "lo:hi" integer range
std::pair<long, long> parse_range(const std::string& text) {
    size_t colon = text.find(':', 1); // skip a possible leading minus
    if (colon == std::string::npos)
        fail(Errc::ParseError, "range must look like lo:hi");
    return {std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
}

// "(a,b]" / "[a,b)" with exact endpoints
Interval parse_interval(const std::string& text) {
    if (text.size() < 5)
        fail(Errc::ParseError, "interval must look like (a,b]");
    char open = text.front(), close = text.back();
    if ((open != '(' && open != '[') || (close != ')' && close != ']'))
        fail(Errc::ParseError, "interval must start with ( or [ and end with ) or ]");
    std::string body = text.substr(1, text.size() - 2);
    size_t comma = body.find(',', 1);
    if (comma == std::string::npos)
        fail(Errc::ParseError, "interval needs two endpoints");
    Interval iv;
    iv.lo = parse_quadreal(body.substr(0, comma));
    iv.hi = parse_quadreal(body.substr(comma + 1));
    iv.lo_closed = open == '[';
    iv.hi_closed = close == ']';
    return iv;
}

Closure parse_closure(const std::string& text) {
    if (text == "left")
        return Closure::LeftClosed;
    if (text == "right")
        return Closure::RightClosed;
    fail(Errc::ParseError, "closure must be 'left' or 'right'");
}

struct Sink {
    std::ostream& fallback;
    std::string path;

    void write(const std::string& payload) const {
        if (path.empty()) {
            fallback << payload;
            return;
        }
        std::ofstream f(path);
        if (!f)
            fail(Errc::ParseError, "cannot open output file " + path);
        f << payload;
    }
};

std::string svg_point_rows(const std::vector<double>& bottom, const std::string& labels,
                           const std::vector<double>& top) {
    if (bottom.empty())
        return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";
    double lo = bottom.front(), hi = bottom.back();
    for (double t : top) {
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    double span = hi - lo;
    if (span <= 0)
        span = 1;
    const double width = 900.0, margin = 20.0, y_bottom = 110.0, y_top = 40.0;
    auto sx = [&](double v) { return margin + (v - lo) / span * (width - 2 * margin); };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"150\">\n";
    auto row = [&](const std::vector<double>& pts, double y) {
        s << "  <line x1=\"" << margin << "\" y1=\"" << y << "\" x2=\"" << width - margin
          << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
        for (double v : pts)
            s << "  <circle cx=\"" << sx(v) << "\" cy=\"" << y << "\" r=\"3\"/>\n";
    };
    row(bottom, y_bottom);
    if (!top.empty())
        row(top, y_top);
    for (size_t i = 0; i + 1 < bottom.size() && i < labels.size(); ++i) {
        double mid = (sx(bottom[i]) + sx(bottom[i + 1])) / 2;
        s << "  <text x=\"" << mid << "\" y=\"" << y_bottom + 18
          << "\" text-anchor=\"middle\" font-size=\"10\">" << labels[i] << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

int falsified_exit = 0;

void cmd_iet_code(const std::string& params, const std::string& x0, const std::string& range,
                  const std::string& closure, bool approx, const std::string& format, Sink sink) {
    auto abc = parse_triple(params, approx);
    Iet3Params p{abc[0], abc[1], abc[2], parse_closure(closure)};
    auto [lo, hi] = parse_range(range);
    OrbitWindow w = t3_code(p, parse_real_flag(x0, approx), lo, hi);
    if (format == "text") {
        sink.write(w.word.to_string() + "\n");
    } else if (format == "csv") {
        std::ostringstream s;
        s << "n,letter,point,point_approx\n";
        for (long n = lo; n <= hi; ++n) {
            size_t i = static_cast<size_t>(n - lo);
            s << n << "," << w.word.at(n) << ",";
            if (w.approx)
                s << "," << w.approx_points[i];
            else
                s << w.points[i].to_string() << "," << w.points[i].to_double();
            s << "\n";
        }
        sink.write(s.str());
    } else {
        json j{{"word", w.word.to_string()},
               {"n_lo", w.n_lo},
               {"n_hi", w.n_hi},
               {"approx", w.approx}};
        if (w.approx)
            j["warning"] = "letters computed in floating point";
        sink.write(j.dump(2) + "\n");
    }
}

void cmd_iet_classify(const std::string& params, Sink sink) {
    auto abc = parse_triple(params, false);
    IetClass cls = classify(Iet3Params{abc[0], abc[1], abc[2], Closure::LeftClosed});
    json j{{"class", to_string(cls.kind)}};
    if (cls.kind != IetClass::NonDegenerate) {
        j["K"] = to_string(cls.K);
        j["L"] = to_string(cls.L);
    }
    j["minimal"] = cls.kind != IetClass::Periodic;
    sink.write(j.dump(2) + "\n");
}

PointedWord parse_word_flag(const std::string& text, const std::string& alphabet) {
    Alphabet a = alphabet == "binary" ? Alphabet::Binary : Alphabet::Ternary;
    return PointedWord::parse(text, a);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for words coding two- and three-interval exchanges"};
    app.require_subcommand(1);
    falsified_exit = 0;

    auto out_path = std::make_shared<std::string>();
    app.add_option("--out", *out_path, "write primary output to a file");

    // ---- iet ----------------------------------------------------------
    auto* iet = app.add_subcommand("iet", "interval exchange transformations");
    iet->require_subcommand(1);
    {
        auto* code = iet->add_subcommand("code", "code an orbit window");
        auto params = std::make_shared<std::string>();
        auto x0 = std::make_shared<std::string>("0");
        auto range = std::make_shared<std::string>("-20:20");
        auto closure = std::make_shared<std::string>("left");
        auto approx = std::make_shared<bool>(false);
        auto format = std::make_shared<std::string>("text");
        code->add_option("--params", *params, "lengths a,b,c (exact)")->required();
        code->add_option("--x0", *x0, "starting point");
        code->add_option("--range", *range, "index range lo:hi");
        code->add_option("--closure", *closure, "left or right");
        code->add_flag("--approx", *approx, "accept floating-point inputs");
        code->add_option("--format", *format, "text, csv or json");
        code->callback([=, &out]() {
            cmd_iet_code(*params, *x0, *range, *closure, *approx, *format, Sink{out, *out_path});
        });

        auto* cls = iet->add_subcommand("classify", "classify parameters exactly");
        auto cparams = std::make_shared<std::string>();
        cls->add_option("--params", *cparams, "lengths a,b,c (exact)")->required();
        cls->callback([=, &out]() { cmd_iet_classify(*cparams, Sink{out, *out_path}); });
    }

    // ---- word ---------------------------------------------------------
    auto* word = app.add_subcommand("word", "pointed word analysis");
    word->require_subcommand(1);
    {
        auto text = std::make_shared<std::string>();
        auto alphabet = std::make_shared<std::string>("ternary");
        auto n = std::make_shared<size_t>(5);
        auto format = std::make_shared<std::string>("text");

        auto add_common = [&](CLI::App* c, bool with_n) {
            c->add_option("--text", *text, "word as LEFT|RIGHT")->required();
            c->add_option("--alphabet", *alphabet, "ternary or binary");
            if (with_n)
                c->add_option("--n", *n, "factor length / profile bound");
        };

        auto* factors_cmd = word->add_subcommand("factors", "factors of one length");
        add_common(factors_cmd, true);
        factors_cmd->callback([=, &out]() {
            FactorSet fs = factors(parse_word_flag(*text, *alphabet), *n);
            std::ostringstream s;
            for (const std::string& f : fs.factors)
                s << f << "\n";
            Sink{out, *out_path}.write(s.str());
        });

        auto* profile_cmd = word->add_subcommand("complexity", "factor-count profile");
        add_common(profile_cmd, true);
        profile_cmd->add_option("--format", *format, "csv or json");
        profile_cmd->callback([=, &out]() {
            auto profile = complexity_profile(parse_word_flag(*text, *alphabet), *n);
            if (*format == "json") {
                Sink{out, *out_path}.write(json(profile).dump() + "\n");
            } else {
                std::ostringstream s;
                s << "n,complexity\n";
                for (size_t i = 0; i < profile.size(); ++i)
                    s << i + 1 << "," << profile[i] << "\n";
                Sink{out, *out_path}.write(s.str());
            }
        });

        auto* balance_cmd = word->add_subcommand("balance", "balance defect of a binary window");
        add_common(balance_cmd, true);
        balance_cmd->callback([=, &out]() {
            size_t defect = balance_defect(parse_word_flag(*text, "binary"), *n);
            Sink{out, *out_path}.write(json{{"balance_defect", defect}}.dump() + "\n");
        });

        auto* dens_cmd = word->add_subcommand("densities", "letter densities");
        add_common(dens_cmd, false);
        dens_cmd->callback([=, &out]() {
            PointedWord w = parse_word_flag(*text, *alphabet);
            auto d = empirical_densities(w);
            json j = json::array();
            for (size_t i = 0; i < d.size(); ++i)
                j.push_back(json{{"letter", std::string(1, letter_at_index(w.alphabet(),
                                                                           static_cast<int>(i)))},
                                 {"density", to_string(d[i])},
                                 {"approx", to_double(d[i])}});
            Sink{out, *out_path}.write(j.dump(2) + "\n");
        });

        auto* metric_cmd = word->add_subcommand("metric", "distance between two pointed words");
        auto utext = std::make_shared<std::string>();
        auto vtext = std::make_shared<std::string>();
        metric_cmd->add_option("--u", *utext, "first word")->required();
        metric_cmd->add_option("--v", *vtext, "second word")->required();
        metric_cmd->add_option("--alphabet", *alphabet, "ternary or binary");
        metric_cmd->callback([=, &out]() {
            Rational d = metric_distance(parse_word_flag(*utext, *alphabet),
                                         parse_word_flag(*vtext, *alphabet));
            Sink{out, *out_path}.write(json{{"distance", to_string(d)}}.dump() + "\n");
        });
    }

    // ---- morph --------------------------------------------------------
    auto* morph = app.add_subcommand("morph", "morphisms and incidence matrices");
    morph->require_subcommand(1);
    {
        auto mtext = std::make_shared<std::string>();

        auto* info = morph->add_subcommand("info", "images, matrix, determinant, primitivity");
        info->add_option("--morphism", *mtext, "rules like A->AC;B->BC;C->C")->required();
        info->callback([=, &out]() {
            Morphism m = Morphism::parse(*mtext);
            IntMatrix mat = incidence_matrix(m);
            PrimitivityResult prim = is_primitive(m);
            json images = json::object();
            for (size_t i = 0; i < m.images().size(); ++i)
                images[std::string(1, letter_at_index(m.alphabet(), static_cast<int>(i)))] =
                    m.images()[i];
            json j{{"morphism", m.to_string()},
                   {"images", images},
                   {"matrix", mat.to_string()},
                   {"det", to_string(mat.det())},
                   {"primitive", prim.primitive}};
            if (prim.primitive)
                j["primitivity_power"] = prim.witness_power;
            Sink{out, *out_path}.write(j.dump(2) + "\n");
        });

        auto* apply_cmd = morph->add_subcommand("apply", "apply a morphism to a pointed word");
        auto wtext = std::make_shared<std::string>();
        apply_cmd->add_option("--morphism", *mtext, "rules")->required();
        apply_cmd->add_option("--word", *wtext, "word as LEFT|RIGHT")->required();
        apply_cmd->callback([=, &out]() {
            Morphism m = Morphism::parse(*mtext);
            PointedWord w = PointedWord::parse(*wtext, m.alphabet());
            Sink{out, *out_path}.write(apply(m, w).to_string() + "\n");
        });

        auto* compose_cmd = morph->add_subcommand("compose", "compose two morphisms");
        auto first = std::make_shared<std::string>();
        auto second = std::make_shared<std::string>();
        compose_cmd->add_option("--first", *first, "outer rules")->required();
        compose_cmd->add_option("--second", *second, "inner rules")->required();
        compose_cmd->callback([=, &out]() {
            Morphism c = compose(Morphism::parse(*first), Morphism::parse(*second));
            json j{{"morphism", c.to_string()}, {"matrix", incidence_matrix(c).to_string()}};
            Sink{out, *out_path}.write(j.dump(2) + "\n");
        });

        auto* fp = morph->add_subcommand("fixedpoint", "window of a fixed point");
        auto seed_left = std::make_shared<std::string>();
        auto seed_right = std::make_shared<std::string>();
        auto min_len = std::make_shared<size_t>(100);
        fp->add_option("--morphism", *mtext, "rules")->required();
        fp->add_option("--left", *seed_left, "left seed letter")->required();
        fp->add_option("--right", *seed_right, "right seed letter")->required();
        fp->add_option("--min-len", *min_len, "minimal letters per side");
        fp->callback([=, &out]() {
            if (seed_left->size() != 1 || seed_right->size() != 1)
                fail(Errc::ParseError, "seeds are single letters");
            Morphism m = Morphism::parse(*mtext);
            PointedWord w = fixed_point_window(m, (*seed_left)[0], (*seed_right)[0], *min_len);
            Sink{out, *out_path}.write(w.to_string() + "\n");
        });
    }

    // ---- monoid -------------------------------------------------------
    auto* monoid = app.add_subcommand("monoid", "integer matrix predicates");
    monoid->require_subcommand(1);
    {
        auto mat_text = std::make_shared<std::string>();

        auto* check = monoid->add_subcommand("check", "full predicate report");
        check->add_option("--matrix", *mat_text, "rows like 0,2,1;2,3,5;3,0,5")->required();
        check->callback([=, &out]() {
            MatrixReport r = matrix_report(IntMatrix::parse(*mat_text));
            Sink{out, *out_path}.write(matrix_report_json(r).dump(2) + "\n");
        });

        auto* en = monoid->add_subcommand("enum", "enumerate members up to an entry bound");
        auto bound = std::make_shared<int>(2);
        auto naive = std::make_shared<bool>(false);
        en->add_option("--bound", *bound, "max entry value");
        en->add_flag("--naive", *naive, "use the brute-force scan");
        en->callback([=, &out]() {
            std::vector<IntMatrix> ms = *naive ? enumerate_e3n_naive(*bound) : enumerate_e3n(*bound);
            std::ostringstream s;
            s << "m11,m12,m13,m21,m22,m23,m31,m32,m33,det,sign\n";
            for (const IntMatrix& m : ms) {
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        s << to_string(m.at(i, j)) << ",";
                s << to_string(m.det()) << "," << symplectic_like_check(m) << "\n";
            }
            Sink{out, *out_path}.write(s.str());
        });

        auto* spec = monoid->add_subcommand("spectrum", "split characteristic polynomial");
        spec->add_option("--matrix", *mat_text, "rows")->required();
        spec->callback([=, &out]() {
            SpectrumReport r = spectrum_report(IntMatrix::parse(*mat_text));
            json j{{"split_eigenvalue", to_string(r.split_eigenvalue)},
                   {"quad_trace", to_string(r.quad_trace)},
                   {"quad_constant", to_string(r.quad_constant)},
                   {"discriminant", to_string(r.discriminant)}};
            j["perron"] = r.perron ? quadreal_json(*r.perron) : json(nullptr);
            json evs = json::array();
            for (const Rational& ev : r.rational_eigenvalues)
                evs.push_back(to_string(ev));
            j["rational_eigenvalues"] = evs;
            Sink{out, *out_path}.write(j.dump(2) + "\n");
        });
    }

    // ---- capset -------------------------------------------------------
    auto* capset = app.add_subcommand("capset", "cut-and-project point sets");
    capset->require_subcommand(1);
    {
        auto* gen = capset->add_subcommand("gen", "generate points and gap labels");
        auto params = std::make_shared<std::string>();
        auto x0 = std::make_shared<std::string>("0");
        auto eta = std::make_shared<std::string>("1");
        auto range = std::make_shared<std::string>("-50:50");
        auto format = std::make_shared<std::string>("csv");
        gen->add_option("--params", *params, "exchange lengths a,b,c (exact)")->required();
        gen->add_option("--x0", *x0, "starting point");
        gen->add_option("--eta", *eta, "second projection step (exact, > 0)");
        gen->add_option("--range", *range, "lattice index range lo:hi");
        gen->add_option("--format", *format, "csv, json or svg");
        gen->callback([=, &out]() {
            auto abc = parse_triple(*params, false);
            Iet3Params p{abc[0], abc[1], abc[2], Closure::LeftClosed};
            ConversionResult conv = from_iet(p, parse_real_flag(*x0, false));
            auto [lo, hi] = parse_range(*range);
            CapSet cs = generate(conv, parse_quadreal(*eta), lo, hi);
            if (*format == "svg") {
                std::vector<double> pts;
                for (const QuadReal& t : cs.points)
                    pts.push_back(t.to_double());
                Sink{out, *out_path}.write(svg_point_rows(pts, cs.gap_letters, {}));
            } else if (*format == "json") {
                json j{{"eps", quadreal_json(conv.eps)},
                       {"l", quadreal_json(conv.l)},
                       {"c", quadreal_json(conv.c)},
                       {"gap_word", cs.gap_word().to_string()},
                       {"points", cs.points.size()}};
                Sink{out, *out_path}.write(j.dump(2) + "\n");
            } else {
                std::ostringstream s;
                s << "n,t,t_approx,gap\n";
                for (size_t i = 0; i < cs.points.size(); ++i) {
                    s << cs.indices[i] << "," << cs.points[i].to_string() << ","
                      << cs.points[i].to_double() << ",";
                    if (i < cs.gap_letters.size())
                        s << cs.gap_letters[i];
                    s << "\n";
                }
                Sink{out, *out_path}.write(s.str());
            }
        });

        auto* dual = capset->add_subcommand("dualcheck", "count duality of two windows");
        auto eps_t = std::make_shared<std::string>();
        auto eta_t = std::make_shared<std::string>();
        auto o1_t = std::make_shared<std::string>();
        auto o2_t = std::make_shared<std::string>();
        dual->add_option("--eps", *eps_t)->required();
        dual->add_option("--eta", *eta_t)->required();
        dual->add_option("--omega1", *o1_t, "interval like (0,1]")->required();
        dual->add_option("--omega2", *o2_t, "interval like (0,1]")->required();
        dual->callback([=, &out]() {
            QuadReal eps = parse_quadreal(*eps_t), eta = parse_quadreal(*eta_t);
            Interval o1 = parse_interval(*o1_t), o2 = parse_interval(*o2_t);
            Int lhs = count_in(CapParams{eps, eta, o2}, o1);
            Int rhs = count_in(CapParams{eta, eps, o1}, o2);
            json j{{"forward", to_string(lhs)}, {"swapped", to_string(rhs)}, {"equal", lhs == rhs}};
            Sink{out, *out_path}.write(j.dump(2) + "\n");
        });

        auto* scale = capset->add_subcommand("scale", "unit-scaling set identity");
        auto lambda_t = std::make_shared<std::string>();
        auto omega_t = std::make_shared<std::string>();
        auto window_t = std::make_shared<std::string>("[-20,20]");
        scale->add_option("--eps", *eps_t)->required();
        scale->add_option("--lambda", *lambda_t)->required();
        scale->add_option("--omega", *omega_t, "acceptance window")->required();
        scale->add_option("--window", *window_t, "comparison window");
        scale->callback([=, &out]() {
            bool ok = unit_scaling_check(parse_quadreal(*eps_t), parse_quadreal(*lambda_t),
                                         parse_interval(*omega_t), parse_interval(*window_t));
            Sink{out, *out_path}.write(json{{"equal", ok}}.dump() + "\n");
        });

        auto* qb = capset->add_subcommand("qbound", "sliding-window count bound");
        auto trials = std::make_shared<int>(100);
        auto seed = std::make_shared<std::uint64_t>(12345);
        qb->add_option("--eps", *eps_t)->required();
        qb->add_option("--eta", *eta_t)->required();
        qb->add_option("--trials", *trials);
        qb->add_option("--seed", *seed);
        qb->callback([=, &out]() {
            QuadReal eps = parse_quadreal(*eps_t), eta = parse_quadreal(*eta_t);
            QuadReal bound = q_count_bound(eps, eta);
            std::mt19937_64 eng(*seed);
            int violations = 0;
            long max_diff = 0;
            for (int i = 0; i < *trials; ++i) {
                long lo = static_cast<long>(eng() % 61) - 30;
                long len = 1 + static_cast<long>(eng() % 25);
                Interval j = Interval::left_open(QuadReal(make_rational(lo, 2)),
                                                 QuadReal(make_rational(lo + len, 2)));
                QuadReal z = QuadReal(make_rational(static_cast<long>(eng() % 81) - 40, 4));
                QuadReal t = QuadReal(make_rational(static_cast<long>(eng() % 81) - 40, 4));
                Int qz = q_count(eps, eta, j, z), qt = q_count(eps, eta, j, t);
                Int diff = qz > qt ? qz - qt : qt - qz;
                max_diff = std::max(max_diff, diff.get_si());
                if (compare(QuadReal(Rational(diff)), bound) > 0)
                    ++violations;
            }
            json j{{"trials", *trials},
                   {"seed", *seed},
                   {"bound", bound.to_double()},
                   {"max_difference", max_diff},
                   {"violations", violations}};
            Sink{out, *out_path}.write(j.dump(2) + "\n");
        });

        auto* ss = capset->add_subcommand("selfsim", "self-similarity of a fixed-point set");
        auto mtext = std::make_shared<std::string>();
        auto gaps = std::make_shared<long>(500);
        auto svg_path = std::make_shared<std::string>();
        ss->add_option("--morphism", *mtext, "rules")->required();
        ss->add_option("--gaps", *gaps, "gaps to check");
        ss->add_option("--svg", *svg_path, "write a two-row picture to a file");
        ss->callback([=, &out]() {
            Morphism m = Morphism::parse(*mtext);
            SelfSimilarResult res = selfsimilar_check(m, *gaps);
            json j{{"lambda", quadreal_json(res.lambda)},
                   {"scaling_ok", res.scaling_ok},
                   {"gap_counts_ok", res.gap_counts_ok},
                   {"gaps_checked", res.gaps_checked}};
            json lens = json::array();
            for (const QuadReal& x : res.lengths)
                lens.push_back(quadreal_json(x));
            j["lengths"] = lens;
            Sink{out, *out_path}.write(j.dump(2) + "\n");
            if (!svg_path->empty()) {
                auto seed = find_fixed_point_seed(m, 1);
                PointedWord w = fixed_point_window(m, seed->left, seed->right, 120);
                std::vector<double> bottom, top;
                double acc = 0;
                bottom.push_back(0);
                std::string labels;
                for (long n = 0; n < w.right_size(); ++n) {
                    acc += res.lengths[static_cast<size_t>(
                                           letter_index(m.alphabet(), w.at(n)))].to_double();
                    bottom.push_back(acc);
                    labels += w.at(n);
                }
                double lambda = res.lambda.to_double();
                for (double t : bottom)
                    if (t * lambda <= acc)
                        top.push_back(t * lambda);
                std::ofstream f(*svg_path);
                if (!f)
                    fail(Errc::ParseError, "cannot open output file " + *svg_path);
                f << svg_point_rows(bottom, labels, top);
            }
        });
    }

    // ---- preserve -----------------------------------------------------
    auto* preserve = app.add_subcommand("preserve", "empirical preservation harness");
    preserve->require_subcommand(1);
    {
        auto* test = preserve->add_subcommand("test", "image-language test over sampled words");
        auto mtext = std::make_shared<std::string>();
        auto trials = std::make_shared<int>(20);
        auto window = std::make_shared<long>(50000);
        auto flen = std::make_shared<size_t>(15);
        auto seed = std::make_shared<std::uint64_t>(20240207);
        auto scale = std::make_shared<long>(3000);
        test->add_option("--morphism", *mtext, "rules")->required();
        test->add_option("--trials", *trials);
        test->add_option("--window", *window, "letters per sampled word");
        test->add_option("--flen", *flen, "checked factor length");
        test->add_option("--seed", *seed);
        test->add_option("--language-scale", *scale, "language window letters per factor length");
        test->callback([=, &out]() {
            PreservationReport rep =
                test_preservation(Morphism::parse(*mtext), *trials, *window, *flen, *seed, *scale);
            json j{{"morphism", rep.morphism_text},
                   {"matrix", matrix_report_json(rep.matrix)},
                   {"trials", rep.trials},
                   {"verdict", rep.falsified ? "Falsified" : "Consistent"},
                   {"checked_factor_length", rep.checked_factor_length},
                   {"parameter_transport", rep.parameter_transport},
                   {"seed", rep.seed}};
            if (rep.falsified) {
                j["witness"] = rep.witness;
                j["witness_trial"] = rep.witness_trial;
            }
            Sink{out, *out_path}.write(j.dump(2) + "\n");
            if (rep.falsified)
                falsified_exit = 2;
        });

        auto* thmb = preserve->add_subcommand("thmb", "determinant dichotomy on image parameters");
        auto mat_text = std::make_shared<std::string>();
        auto samples = std::make_shared<int>(8);
        auto tseed = std::make_shared<std::uint64_t>(20240211);
        thmb->add_option("--matrix", *mat_text, "rows")->required();
        thmb->add_option("--samples", *samples);
        thmb->add_option("--seed", *tseed);
        thmb->callback([=, &out]() {
            DegeneracyTransportReport rep =
                degeneracy_transport_check(IntMatrix::parse(*mat_text), *samples, *tseed);
            json j{{"det", to_string(rep.det)},
                   {"case", rep.singular_case ? "singular" : "unimodular"},
                   {"samples", rep.samples},
                   {"seed", *tseed},
                   {"ok", rep.all_ok}};
            if (rep.singular_case) {
                j["K"] = to_string(rep.K);
                j["L"] = to_string(rep.L);
            }
            if (!rep.detail.empty())
                j["detail"] = rep.detail;
            Sink{out, *out_path}.write(j.dump(2) + "\n");
            if (!rep.all_ok)
                falsified_exit = 2;
        });

        auto* fp = preserve->add_subcommand("fixedpoint", "fixed point vs eigen-language");
        auto fp_mtext = std::make_shared<std::string>();
        auto fp_flen = std::make_shared<size_t>(15);
        fp->add_option("--morphism", *fp_mtext, "rules")->required();
        fp->add_option("--flen", *fp_flen, "checked factor length");
        fp->callback([=, &out]() {
            FixedPointWordReport rep = fixed_point_3iet_check(Morphism::parse(*fp_mtext), *fp_flen);
            json params = json::array();
            for (const QuadReal& x : rep.params)
                params.push_back(quadreal_json(x));
            json j{{"power", rep.power},
                   {"seed", std::string(1, rep.seed_left) + "|" + rep.seed_right},
                   {"contained", rep.contained},
                   {"params", params},
                   {"checked_factor_length", rep.checked_factor_length}};
            if (!rep.contained)
                j["offending"] = rep.offending;
            Sink{out, *out_path}.write(j.dump(2) + "\n");
            if (!rep.contained)
                falsified_exit = 2;
        });
    }

    // ---- repro --------------------------------------------------------
    auto* repro = app.add_subcommand("repro", "run the full reproduction suite");
    repro->callback([&out, &err]() {
        auto results = ietk::acceptance::run_all();
        if (!ietk::acceptance::print_table(out, err, results))
            falsified_exit = 1;
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n" << app.help();
        return 64;
    } catch (const Error& e) {
        json j{{"error", e.code_name()}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 65;
    } catch (const std::exception& e) {
        json j{{"error", "Internal"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 65;
    }
    return falsified_exit;
}

} // namespace ietk::cli
