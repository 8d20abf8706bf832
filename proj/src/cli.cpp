#include "qnum/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "qnum/checks.hpp"
#include "qnum/errors.hpp"
#include "qnum/jsonio.hpp"
#include "qnum/knot.hpp"
#include "qnum/qcore.hpp"
#include "qnum/qreal.hpp"
#include "qnum/qseq.hpp"

namespace qnum {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string term_list(const std::vector<long>& v) {
    std::string t = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) t += ",";
        t += std::to_string(v[i]);
    }
    return t + "]";
}

std::string stream_text(const CFStream& s) {
    std::string t;
    if (!s.pre.empty() || s.per.empty()) t += "pre=" + term_list(s.pre);
    if (!s.per.empty()) {
        if (!t.empty()) t += ";";
        t += "per=" + term_list(s.per);
    }
    if (s.truncated) t += ";trunc";
    return t;
}

std::vector<long> parse_long_list(const std::string& text, const char* what) {
    std::vector<long> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            size_t used = 0;
            out.push_back(std::stol(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw error(std::string(what) + " must be a comma list of integers");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Triangulation parse_triangulation(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw error("triangulation must look like 8:0-2,0-3,...");
    Triangulation t;
    try {
        size_t used = 0;
        std::string head = text.substr(0, colon);
        t.ngon = static_cast<int>(std::stol(head, &used));
        if (used != head.size()) throw std::invalid_argument(head);
    } catch (const std::exception&) {
        throw error("triangulation polygon size must be an integer");
    }
    std::string rest = text.substr(colon + 1);
    if (rest.empty()) return t;
    size_t pos = 0;
    while (pos <= rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string piece = rest.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t dash = piece.find('-');
        if (dash == std::string::npos)
            throw error("each diagonal must look like 0-2");
        try {
            size_t ua = 0, ub = 0;
            std::string sa = piece.substr(0, dash), sb = piece.substr(dash + 1);
            int a = static_cast<int>(std::stol(sa, &ua));
            int b = static_cast<int>(std::stol(sb, &ub));
            if (ua != sa.size() || ub != sb.size())
                throw std::invalid_argument(piece);
            t.diagonals.emplace_back(std::min(a, b), std::max(a, b));
        } catch (const std::exception&) {
            throw error("each diagonal must look like 0-2");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return t;
}

// One period per row, consecutive rows offset by half a column; the closing
// zeros row is not part of the picture.
template <typename Entry, typename Text>
void frieze_band(std::ostream& out,
                 const std::vector<std::vector<Entry>>& rows, Text text) {
    const size_t shown = rows.size() - 1;
    std::vector<std::vector<std::string>> cells;
    size_t width = 1;
    for (size_t r = 0; r < shown; ++r) {
        std::vector<std::string> row;
        for (const Entry& e : rows[r]) {
            row.push_back(text(e));
            width = std::max(width, row.back().size());
        }
        cells.push_back(std::move(row));
    }
    width += 2;
    for (size_t r = 0; r < shown; ++r) {
        std::string line(r % 2 ? width / 2 : 0, ' ');
        for (std::string cell : cells[r]) {
            cell.resize(width, ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
}

void print_series(std::ostream& out, const LaurentSeries& s) {
    out << "series = " << to_text(s) << " + O(q^" << s.order() << ")\n";
}

int report_exit(const CheckReport& rep, bool json, std::ostream& out,
                std::ostream& err) {
    if (json) {
        emit(out, to_json(rep));
    } else {
        out << "name: " << rep.name << "\n";
        for (const std::string& line : rep.lines) out << line << "\n";
        for (const std::string& v : rep.violations)
            out << "violation: " << v << "\n";
        out << rep.summary() << "\n";
    }
    // Unimodality tracks an open conjecture: counterexamples are findings,
    // not failures. Violations anywhere else mean a proved identity broke.
    if (!rep.ok() && rep.name != "unimodality") {
        err << rep.name << ": " << rep.violations.size()
            << " violation(s) found\n";
        return 1;
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact q-deformed integers, rationals, reals, and friezes"};
    app.name("qnum");
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit one JSON document instead of text");

    auto* qint_cmd = app.add_subcommand("qint", "deformed integer [n]");
    long qint_n = 0;
    bool qint_fact = false;
    qint_cmd->add_option("n", qint_n, "integer to deform")->required();
    qint_cmd->add_flag("--factorial", qint_fact, "deformed factorial [n]!");

    auto* qbinom_cmd = app.add_subcommand("qbinom", "deformed binomial");
    long qb_n = 0, qb_m = 0;
    qbinom_cmd->add_option("n", qb_n, "upper index")->required();
    qbinom_cmd->add_option("m", qb_m, "lower index")->required();

    auto* qrat_cmd = app.add_subcommand("qrat", "deformed rational numbers");
    std::string qrat_x, qrat_form = "any";
    bool sb = false, check_uni = false;
    long sb_depth = 4, uni_height = 30;
    std::vector<std::string> xpoly_args;
    qrat_cmd->add_option("fraction", qrat_x, "fraction r/s to deform");
    qrat_cmd->add_option("--form", qrat_form, "evaluation route")
        ->check(CLI::IsMember({"any", "regular", "hj", "matrix"}));
    qrat_cmd->add_flag("--stern-brocot", sb, "print deformed tree rows");
    qrat_cmd->add_option("--depth", sb_depth, "tree depth (with --stern-brocot)");
    qrat_cmd->add_option("--xpoly", xpoly_args, "pairing polynomial of x > y")
        ->expected(2);
    qrat_cmd->add_flag("--check-unimodal", check_uni,
                       "sweep coefficient unimodality");
    qrat_cmd->add_option("--max-height", uni_height,
                         "sweep bound (with --check-unimodal)");

    auto* frieze_cmd = app.add_subcommand("frieze", "frieze patterns");
    std::string quiddity_text, triangulation_text;
    bool deformed = false, ascii = false;
    frieze_cmd->add_option("--quiddity", quiddity_text,
                           "second row, e.g. 1,4,2,1,3,2,2");
    frieze_cmd->add_option("--triangulation", triangulation_text,
                           "polygon triangulation, e.g. 8:0-2,0-3,0-5,3-5,5-7");
    frieze_cmd->add_flag("--q", deformed, "deformed entries");
    frieze_cmd->add_flag("--ascii", ascii, "staggered band layout (default)");

    auto* qreal_cmd = app.add_subcommand("qreal", "deformed real numbers");
    std::string cf_text, quad_text;
    long order = 12, translate = 0;
    qreal_cmd->add_option("--cf", cf_text,
                          "continued fraction stream, e.g. \"pre=[1];per=[2]\"");
    qreal_cmd->add_option("--quadratic", quad_text,
                          "quadratic surd, e.g. \"(1+sqrt5)/2\"");
    qreal_cmd->add_option("--order", order, "series truncation order");
    qreal_cmd->add_option("--translate", translate,
                          "add an integer after stabilizing (with --cf)");

    auto* qseq_cmd = app.add_subcommand("qseq", "deformed sequences");
    std::string kind_text;
    long upto = 0;
    bool triangle = false;
    qseq_cmd->add_option("--kind", kind_text, "sequence family")
        ->check(CLI::IsMember({"fibonacci", "pell"}))
        ->required();
    qseq_cmd->add_option("--upto", upto, "last index to print")->required();
    qseq_cmd->add_flag("--triangle", triangle, "coefficient rows only");

    auto* jones_cmd = app.add_subcommand("jones", "two-bridge knot polynomial");
    std::string jones_x;
    jones_cmd->add_option("fraction", jones_x, "positive fraction r/s")
        ->required();

    auto* check_cmd = app.add_subcommand("check", "exhaustive property sweeps");
    bool c_pos = false, c_coin = false, c_uni = false, c_bij = false;
    long c_height = 30, c_bound = 50, c_num = 200, c_den = 100, c_ngon = 9;
    check_cmd->add_flag("--total-positivity", c_pos,
                        "differences of deformations have no negative "
                        "coefficient");
    check_cmd->add_flag("--definition-coincidence", c_coin,
                        "the three evaluation routes agree");
    check_cmd->add_flag("--unimodality", c_uni,
                        "coefficients rise then fall (conjecture support)");
    check_cmd->add_flag("--frieze-bijection", c_bij,
                        "frieze cycles are triangulation quiddities");
    check_cmd->add_option("--max-height", c_height, "positivity bound");
    check_cmd->add_option("--bound", c_bound, "coincidence bound");
    check_cmd->add_option("--max-num", c_num, "unimodality numerator bound");
    check_cmd->add_option("--max-den", c_den, "unimodality denominator bound");
    check_cmd->add_option("--ngon", c_ngon, "largest polygon");

    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (qint_cmd->parsed()) {
            if (qint_fact) {
                const IntPoly p = q_factorial(qint_n);
                if (json)
                    emit(out, Json{{"n", qint_n},
                                   {"factorial", true},
                                   {"poly", to_json(p)}});
                else
                    out << to_text(p) << "\n";
            } else {
                const LaurentPoly p = q_int(qint_n);
                if (json)
                    emit(out, Json{{"n", qint_n},
                                   {"factorial", false},
                                   {"poly", to_json(p)}});
                else
                    out << to_text(p) << "\n";
            }
            return 0;
        }

        if (qbinom_cmd->parsed()) {
            const IntPoly p = q_binomial(qb_n, qb_m);
            if (json)
                emit(out,
                     Json{{"n", qb_n}, {"m", qb_m}, {"poly", to_json(p)}});
            else
                out << to_text(p) << "\n";
            return 0;
        }

        if (qrat_cmd->parsed()) {
            const int modes = (qrat_x.empty() ? 0 : 1) + (sb ? 1 : 0) +
                              (xpoly_args.empty() ? 0 : 1) +
                              (check_uni ? 1 : 0);
            if (modes != 1) {
                err << "qrat needs exactly one of: a fraction, "
                       "--stern-brocot, --xpoly, --check-unimodal\n";
                return 2;
            }
            if (!qrat_x.empty()) {
                const Rational x = Rational::parse(qrat_x);
                QRational v;
                if (qrat_form == "regular")
                    v = q_rational_regular(x);
                else if (qrat_form == "hj")
                    v = q_rational_hj(x);
                else if (qrat_form == "matrix")
                    v = q_rational_matrix(x);
                else
                    v = q_rational(x);
                if (json)
                    emit(out, to_json(v));
                else
                    out << to_text(v.value) << "\n";
            } else if (sb) {
                if (sb_depth < 0) throw error("negative depth");
                if (sb_depth > 20) throw SizeLimit("tree depth limited to 20");
                const auto rows = stern_brocot_enumerate(
                    static_cast<int>(sb_depth));
                if (json) {
                    Json jrows = Json::array();
                    for (size_t d = 0; d < rows.size(); ++d) {
                        Json nodes = Json::array();
                        for (const TreeNode& n : rows[d])
                            nodes.push_back(Json{{"x", n.x.str()},
                                                 {"weight", n.weight},
                                                 {"num", to_json(n.label.num())},
                                                 {"den", to_json(n.label.den())}});
                        jrows.push_back(
                            Json{{"depth", d}, {"nodes", nodes}});
                    }
                    emit(out, jrows);
                } else {
                    for (size_t d = 0; d < rows.size(); ++d)
                        for (const TreeNode& n : rows[d])
                            out << "depth " << d << ": " << n.x.str()
                                << " -> " << to_text(n.label) << " (weight "
                                << n.weight << ")\n";
                }
            } else if (!xpoly_args.empty()) {
                const QRational a = q_rational(Rational::parse(xpoly_args[0]));
                const QRational b = q_rational(Rational::parse(xpoly_args[1]));
                const IntPoly p = x_polynomial(a, b);
                if (json)
                    emit(out, Json{{"a", a.x.str()},
                                   {"b", b.x.str()},
                                   {"xpoly", to_json(p)}});
                else
                    out << to_text(p) << "\n";
            } else {
                return report_exit(check_unimodality(uni_height, uni_height),
                                   json, out, err);
            }
            return 0;
        }

        if (frieze_cmd->parsed()) {
            if (json && ascii) {
                err << "choose one of --json and --ascii\n";
                return 2;
            }
            if (quiddity_text.empty() == triangulation_text.empty()) {
                err << "frieze needs exactly one of --quiddity and "
                       "--triangulation\n";
                return 2;
            }
            Quiddity quid;
            if (!quiddity_text.empty())
                quid.cycle = parse_long_list(quiddity_text, "quiddity");
            else
                quid = quiddity_from_triangulation(
                    parse_triangulation(triangulation_text));
            if (deformed) {
                const QFrieze f = q_frieze(quid);
                if (json)
                    emit(out, to_json(f));
                else
                    frieze_band(out, f.rows(),
                                [](const IntPoly& p) { return to_text(p); });
            } else {
                const ClassicalFrieze f = classical_frieze(quid);
                if (json)
                    emit(out, to_json(f));
                else
                    frieze_band(out, f.rows(),
                                [](const Int& e) { return e.get_str(); });
            }
            return 0;
        }

        if (qreal_cmd->parsed()) {
            if (cf_text.empty() == quad_text.empty()) {
                err << "qreal needs exactly one of --cf and --quadratic\n";
                return 2;
            }
            if (order < 1) throw OutOfRange("order must be at least 1");
            if (order > 256) throw SizeLimit("order limited to 256");
            if (!cf_text.empty()) {
                QReal v = stabilize(CFStream::parse(cf_text),
                                    static_cast<int>(order));
                if (translate != 0) v = qreal_translate(v, translate);
                if (json) {
                    emit(out, to_json(v));
                } else {
                    print_series(out, v.series);
                    out << "stabilized_upto = " << v.stabilized_upto << "\n";
                }
            } else {
                const QuadraticIrrational x = quadratic_parse(quad_text);
                const CFStream cf = surd_cf(x);
                const QQuadraticForm form = quadratic_closed_form(x);
                const QuadraticEquation eq = quadratic_equation(form);
                const LaurentSeries s =
                    closed_form_series(form, static_cast<int>(order));
                const auto [rmin, rmax] = radius_of_convergence(form);
                if (json) {
                    emit(out,
                         Json{{"x", quad_text},
                              {"cf", stream_text(cf)},
                              {"A", to_json(form.A)},
                              {"B", to_json(form.B)},
                              {"C", to_json(form.C)},
                              {"equation", Json{{"e2", to_json(eq.e2)},
                                                {"e1", to_json(eq.e1)},
                                                {"e0", to_json(eq.e0)}}},
                              {"series", to_json(s)},
                              {"radius", Json::array({fmt_double(rmin),
                                                      fmt_double(rmax)})}});
                } else {
                    out << "cf = " << stream_text(cf) << "\n";
                    out << "A = " << to_text(form.A) << "\n";
                    out << "B = " << to_text(form.B) << "\n";
                    out << "C = " << to_text(form.C) << "\n";
                    out << "equation: (" << to_text(eq.e2) << ") v^2 + ("
                        << to_text(eq.e1) << ") v + (" << to_text(eq.e0)
                        << ") = 0\n";
                    print_series(out, s);
                    out << "radius = [" << fmt_double(rmin) << ", "
                        << fmt_double(rmax) << "]\n";
                }
            }
            return 0;
        }

        if (qseq_cmd->parsed()) {
            const SeqKind kind = kind_text == "fibonacci" ? SeqKind::fibonacci
                                                          : SeqKind::pell;
            const QSequence seq = q_sequence(kind, upto);
            if (json) {
                Json polys = Json::array();
                for (const IntPoly& p : seq.polys) polys.push_back(to_json(p));
                emit(out, Json{{"kind", kind_text},
                               {"upto", upto},
                               {"polys", polys}});
            } else if (triangle) {
                for (size_t n = 0; n < seq.polys.size(); ++n) {
                    out << n << ":";
                    const auto& cs = seq.polys[n].coeffs();
                    if (cs.empty()) out << " 0";
                    for (const Int& c : cs) out << " " << c.get_str();
                    out << "\n";
                }
            } else {
                for (size_t n = 0; n < seq.polys.size(); ++n)
                    out << n << ": " << to_text(seq.polys[n]) << "\n";
            }
            return 0;
        }

        if (jones_cmd->parsed()) {
            const Rational x = Rational::parse(jones_x);
            const IntPoly p = jones({x});
            if (json)
                emit(out, Json{{"fraction", x.str()}, {"jones", to_json(p)}});
            else
                out << to_text(p) << "\n";
            return 0;
        }

        if (check_cmd->parsed()) {
            const int suites = (c_pos ? 1 : 0) + (c_coin ? 1 : 0) +
                               (c_uni ? 1 : 0) + (c_bij ? 1 : 0);
            if (suites != 1) {
                err << "check needs exactly one of --total-positivity, "
                       "--definition-coincidence, --unimodality, "
                       "--frieze-bijection\n";
                return 2;
            }
            CheckReport rep;
            if (c_pos)
                rep = check_total_positivity(c_height);
            else if (c_coin)
                rep = check_definition_coincidence(c_bound);
            else if (c_uni)
                rep = check_unimodality(c_num, c_den);
            else
                rep = check_frieze_bijection(static_cast<int>(c_ngon));
            return report_exit(rep, json, out, err);
        }
    } catch (const error& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace qnum
