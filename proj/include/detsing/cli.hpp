#pragma once

#include "verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace detsing::cli {

using json = nlohmann::ordered_json;

inline json poly_json(const RingContext& ctx, const Poly& p)
{
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json ex = json::object();
        for (int v = 0; v < ctx.nvars(); ++v)
            if (it->first[v]) ex[ctx.var_name(v)] = it->first[v];
        terms.push_back({{"coeff_num", it->second.get_num().get_str()}, {"coeff_den", it->second.get_den().get_str()}, {"exponents", ex}});
    }
    return terms;
}

inline json module_json(const GradedFreeModule& mod)
{
    json gens = json::array();
    for (auto& g : mod.gens) gens.push_back({{"label", g.label}, {"twist", g.twist}});
    return gens;
}

inline json matrix_json(const PolyMatrix& mtx)
{
    json entries = json::array();
    for (auto& [rc, p] : mtx.entries) entries.push_back({{"row", rc.first}, {"col", rc.second}, {"poly", poly_json(mtx.ctx, p)}});
    return {{"rows", mtx.rows()}, {"cols", mtx.cols()}, {"entries", entries}};
}

inline json table(json params, json rows, const std::string& result)
{
    return {{"params", std::move(params)}, {"rows", std::move(rows)}, {"provenance", {{"result", result}}}};
}

inline json report_json(const CheckReport& r)
{
    return {{"suite", r.suite}, {"checks", r.checks}, {"passed", r.ok()}, {"failures", r.failures}, {"notes", r.notes}};
}

// Plain column-aligned table.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& os) const
    {
        std::vector<std::size_t> w;
        for (auto& r : rows_)
            for (std::size_t k = 0; k < r.size(); ++k) {
                if (w.size() <= k) w.push_back(0);
                w[k] = std::max(w[k], display_width(r[k]));
            }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t k = 0; k < rows_[i].size(); ++k) {
                os << rows_[i][k];
                if (k + 1 < rows_[i].size()) os << std::string(w[k] - display_width(rows_[i][k]) + 2, ' ');
            }
            os << '\n';
            if (i == 0) {
                std::size_t total = 0;
                for (auto x : w) total += x + 2;
                os << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
            }
        }
    }

private:
    static std::size_t display_width(const std::string& s)
    {
        std::size_t n = 0;
        for (unsigned char c : s) n += (c & 0xC0) != 0x80;
        return n;
    }
    std::vector<std::vector<std::string>> rows_;
};

inline QMat read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    QMat m;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Q> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_rational(tok));
        if (!row.empty()) m.push_back(std::move(row));
    }
    return m;
}

inline std::string matrix_string(const QMat& a)
{
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < a[i].size(); ++j) s += (j ? " " : "") + a[i][j].get_str();
    }
    return s + "]";
}

inline json qmat_json(const QMat& a)
{
    json rows = json::array();
    for (auto& r : a) {
        json row = json::array();
        for (auto& x : r) row.push_back(x.get_str());
        rows.push_back(row);
    }
    return rows;
}

struct Options {
    int m = 2, n = 2, a = 1, b = 1, c = 0, t = 0, tmax = 3, max_degree = 6;
    unsigned long seed = 1;
    bool json_out = false, blocks = false;
    std::string suite, alpha, beta, out;
};

inline int emit(const Options& o, const json& j, const std::function<void(std::ostream&)>& human)
{
    if (o.json_out) std::cout << j.dump(2) << '\n';
    else human(std::cout);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        f << j.dump(2) << '\n';
    }
    return 0;
}

inline int cmd_cohomology(const Options& o)
{
    CohomologyEntry e = direct_image(o.m, o.a, o.b, o.c);
    json row = e.vanishes ? json{{"nu", nullptr}, {"rank", 0}, {"descriptor", "0"}}
                          : json{{"nu", e.nu}, {"rank", e.rank.get_si()}, {"descriptor", e.descriptor}};
    json j = table({{"m", o.m}, {"a", o.a}, {"b", o.b}, {"c", o.c}}, json::array({row}), "higher direct images on P^{m-1}");
    for (auto& [k, v] : row.items()) j[k] = v;
    return emit(o, j, [&](std::ostream& os) {
        TextTable t({"nu", "rank", "descriptor"});
        if (e.vanishes) t.add({"-", "0", "all vanish"});
        else t.add({std::to_string(e.nu), e.rank.get_str(), e.descriptor});
        t.print(os);
    });
}

inline int cmd_rankpoly(const Options& o)
{
    RankPolynomial p = rank_polynomial(o.m, o.a, o.b);
    json coeffs = json::array(), rows = json::array();
    for (auto& c : p.coeffs) coeffs.push_back(c.get_str());
    for (int c = -o.m; c <= o.m; ++c) rows.push_back({{"z", c}, {"value", p(Q(c)).get_str()}});
    json j = table({{"m", o.m}, {"a", o.a}, {"b", o.b}}, rows, "rank polynomial");
    j["coefficients"] = coeffs;
    return emit(o, j, [&](std::ostream& os) {
        os << "coefficients (ascending):";
        for (auto& c : p.coeffs) os << ' ' << c.get_str();
        os << "\n";
        TextTable t({"z", "r(z)"});
        for (int c = -o.m; c <= o.m; ++c) t.add({std::to_string(c), p(Q(c)).get_str()});
        t.print(os);
    });
}

inline int cmd_betti(const Options& o)
{
    BettiTable bt = resolution_shape(o.m, o.n, o.a, o.b, o.c);
    int pd = projective_dimension(o.m, o.n, o.a, o.b, o.c);
    json rows = json::array();
    for (auto it = bt.terms.rbegin(); it != bt.terms.rend(); ++it)
        for (auto& s : it->second)
            rows.push_back({{"mu", it->first}, {"rank", s.rank.get_str()}, {"descriptor", s.descriptor},
                            {"twist", s.twist ? json(*s.twist) : json(nullptr)}, {"natural_twist", s.natural_twist}});
    json j = table({{"m", o.m}, {"n", o.n}, {"a", o.a}, {"b", o.b}, {"c", o.c}}, rows, "resolution shape of the pushed-forward module");
    j["projective_dimension"] = pd;
    j["perfect"] = perfection_check(o.m, o.n, o.a, o.b, o.c);
    return emit(o, j, [&](std::ostream& os) {
        TextTable t({"mu", "rank", "twist", "summand"});
        for (auto it = bt.terms.rbegin(); it != bt.terms.rend(); ++it)
            for (auto& s : it->second)
                t.add({std::to_string(it->first), s.rank.get_str(), s.twist ? std::to_string(*s.twist) : "unassigned (" + std::to_string(s.natural_twist) + "?)",
                       s.descriptor});
        t.print(os);
        os << "projective dimension " << pd << (perfection_check(o.m, o.n, o.a, o.b, o.c) ? ", perfect" : "") << '\n';
    });
}

inline int cmd_presentation(const Options& o)
{
    RingContext ctx(o.m, o.n);
    Presentation pr = presentation(ctx, o.a, o.b);
    json p0 = json::array(), p1 = json::array(), blocks = json::array();
    for (auto& k : pr.p0_blocks) p0.push_back({{"k", k.vertex}, {"rank", k.size}, {"g_degree", k.qg}, {"lambda_degree", k.ql}, {"twist", k.qg}});
    for (auto& l : pr.p1_blocks) p1.push_back({{"l", l.vertex}, {"rank", l.size}, {"g_degree", l.qg}, {"lambda_degree", l.ql}, {"twist", l.qg}});
    std::vector<std::vector<int>> shape;
    for (auto& k : pr.p0_blocks) {
        std::vector<int> row;
        for (auto& l : pr.p1_blocks) row.push_back(pr.ea + pr.eb - k.vertex - l.vertex);
        shape.push_back(row);
        blocks.push_back(row);
    }
    json j = table({{"m", o.m}, {"n", o.n}, {"a", o.a}, {"b", o.b}}, json::array(), "minimal presentation of C_ab");
    j["dualized"] = pr.dualized;
    j["effective"] = {{"a", pr.ea}, {"b", pr.eb}};
    j["P0"] = p0;
    j["P1"] = p1;
    j["delta_orders"] = blocks;
    j["rho"] = matrix_json(pr.rho);
    BlockDecomposition bd;
    if (o.blocks) {
        bd = block_decomposition(ctx, pr.ea, pr.eb);
        json bl = json::array();
        for (auto& b : bd.blocks) bl.push_back({{"p", b.p}, {"alpha", b.alpha}, {"beta", b.beta}, {"delta_order", b.t}});
        json D = json::array();
        for (auto& x : bd.PD.D) D.push_back(x.get_str());
        j["blocks"] = bl;
        j["D"] = D;
        j["P"] = qmat_json(bd.PD.P);
    }
    j["rows"] = j["delta_orders"];
    return emit(o, j, [&](std::ostream& os) {
        if (pr.dualized) os << "dualized to (a,b) = (" << pr.ea << "," << pr.eb << ")\n";
        TextTable t({"P0 block", "rank", "twist", "", "P1 block", "rank", "twist"});
        for (std::size_t i = 0; i < std::max(pr.p0_blocks.size(), pr.p1_blocks.size()); ++i) {
            std::vector<std::string> r(7);
            if (i < pr.p0_blocks.size()) {
                auto& k = pr.p0_blocks[i];
                r[0] = "Λ^" + std::to_string(k.qg) + "G ⊗ Λ^" + std::to_string(k.ql) + "F^∨";
                r[1] = std::to_string(k.size);
                r[2] = std::to_string(k.qg);
            }
            if (i < pr.p1_blocks.size()) {
                auto& l = pr.p1_blocks[i];
                r[4] = "Λ^" + std::to_string(l.qg) + "G ⊗ Λ^" + std::to_string(l.ql) + "F^∨";
                r[5] = std::to_string(l.size);
                r[6] = std::to_string(l.qg);
            }
            t.add(r);
        }
        t.print(os);
        os << "rho = (";
        for (std::size_t i = 0; i < shape.size(); ++i) {
            os << (i ? ", " : "") << "(";
            for (std::size_t k = 0; k < shape[i].size(); ++k)
                os << (k ? ", " : "") << (shape[i][k] >= 0 ? "Δ^(" + std::to_string(shape[i][k]) + ")" : std::string("0"));
            os << ")";
        }
        os << ")  " << pr.rho.entries.size() << " nonzero entries\n";
        if (o.blocks) {
            TextTable bt({"p", "summand", "map"});
            for (auto& b : bd.blocks)
                bt.add({std::to_string(b.p), "C^{" + std::to_string(b.alpha) + "," + std::to_string(b.beta) + "}", "Δ^(" + std::to_string(b.t) + ")"});
            bt.print(os);
            os << "D =";
            for (auto& x : bd.PD.D) os << ' ' << x.get_str();
            os << '\n';
        }
    });
}

inline json summand_json(const ExtSummand& e)
{
    return {{"alpha", e.alpha.to_string()}, {"square", {e.square.r, e.square.c}}, {"F_shape", e.col_dropped.to_string()},
            {"G_shape", e.row_dropped_conj.to_string()}, {"descriptor", descriptor(e)}, {"dim", e.dim.get_str()}, {"twist", e.twist}};
}

inline int cmd_ext(const Options& o)
{
    auto sums = ext_dims(o.m, o.n, o.t, o.a, o.b);
    json rows = json::array();
    Z total = 0;
    for (auto& e : sums) {
        rows.push_back(summand_json(e));
        total += e.dim;
    }
    json j = table({{"m", o.m}, {"n", o.n}, {"t", o.t}, {"a", o.a}, {"b", o.b}}, rows, "Ext between graded simples");
    j["total_dim"] = total.get_str();
    return emit(o, j, [&](std::ostream& os) {
        TextTable t({"alpha", "square", "summand", "dim", "twist"});
        for (auto& e : sums)
            t.add({e.alpha.to_string(), "(" + std::to_string(e.square.r) + "," + std::to_string(e.square.c) + ")", descriptor(e), e.dim.get_str(),
                   std::to_string(e.twist)});
        t.print(os);
        os << "dim Ext^" << o.t << "(S_" << o.b << ", S_" << o.a << ") = " << total.get_str() << '\n';
    });
}

inline int cmd_simples(const Options& o)
{
    auto tab = simple_resolution_table(o.m, o.n, o.a, o.tmax);
    json rows = json::array();
    for (auto& e : tab) {
        json r = summand_json(e.summand);
        r["t"] = e.t;
        r["vertex"] = e.vertex;
        rows.push_back(r);
    }
    json j = table({{"m", o.m}, {"n", o.n}, {"a", o.a}, {"tmax", o.tmax}}, rows, "resolution of a graded simple");
    return emit(o, j, [&](std::ostream& os) {
        TextTable t({"t", "term", "rank", "alpha", "square"});
        for (auto& e : tab)
            t.add({std::to_string(e.t), "P_" + std::to_string(e.vertex) + (e.summand.twist ? "(-" + std::to_string(e.summand.twist) + ")" : "") + " ⊗ " + descriptor(e.summand),
                   e.summand.dim.get_str(), e.summand.alpha.to_string(), "(" + std::to_string(e.summand.square.r) + "," + std::to_string(e.summand.square.c) + ")"});
        t.print(os);
    });
}

inline int cmd_moduli(const Options& o)
{
    ModuliPoint pt{read_matrix_file(o.alpha), read_matrix_file(o.beta)};
    check_point(pt, o.m, o.n);
    QuiverRep rep = build_rep(pt);
    auto bad = check_relations(rep);
    auto sc = scalar_action(rep);
    QMat assoc = associated_matrix(pt);
    bool simple = is_simple(rep);
    Reconstruction rc = reconstruct(rep);
    ModuliPoint norm = normalize_point(pt);
    json j = table({{"m", o.m}, {"n", o.n}}, json::array(), "representation of the doubled quiver");
    j["relations_hold"] = bad.empty();
    j["violations"] = bad;
    j["scalars"] = sc ? qmat_json(*sc) : json(nullptr);
    j["associated_matrix"] = qmat_json(assoc);
    j["associated_rank"] = rank(assoc);
    j["simple"] = simple;
    j["beta_injective"] = static_cast<int>(rank(pt.beta)) == o.m - 1;
    j["reconstructed"] = {{"alpha", qmat_json(rc.point.alpha)}, {"beta", qmat_json(rc.point.beta)}, {"isomorphic", verify_reconstruction(rep, rc)}};
    j["normalized"] = {{"alpha", qmat_json(norm.alpha)}, {"beta", qmat_json(norm.beta)}};
    j["rows"] = json::array({{{"vertex_dims", rep.dims}}});
    emit(o, j, [&](std::ostream& os) {
        os << "dimension vector:";
        for (auto d : rep.dims) os << ' ' << d;
        os << "\nrelations " << (bad.empty() ? "hold" : "FAIL") << "\n";
        os << "x_ij scalars " << (sc ? matrix_string(*sc) : "none") << "\n";
        os << "associated matrix rank " << rank(assoc) << ", simple " << (simple ? "yes" : "no") << "\n";
        os << "reconstructed alpha " << matrix_string(rc.point.alpha) << " beta " << matrix_string(rc.point.beta) << "\n";
    });
    return bad.empty() ? 0 : 1;
}

inline int cmd_verify(const Options& o)
{
    CheckReport r;
    const std::string& s = o.suite;
    if (s == "star") r = verify_star(o.m, o.n, o.seed);
    else if (s == "pbw") r = verify_pbw(o.m, o.n, o.seed);
    else if (s == "cohomology") r = verify_cohomology(o.m);
    else if (s == "hilbert") r = verify_hilbert(o.m, o.n, o.max_degree, o.seed);
    else if (s == "betti") r = verify_betti(o.m, o.n);
    else if (s == "moduli") r = verify_moduli(o.m, o.n, 500, o.seed);
    else if (s == "ext") r = verify_ext(o.m, o.n);
    else if (s == "blocks") r = verify_blocks(o.m, o.n, std::min(o.max_degree, 4));
    else throw CLI::ValidationError("--suite", "unknown suite " + s);
    json j = table({{"suite", s}, {"m", o.m}, {"n", o.n}, {"max_degree", o.max_degree}, {"seed", o.seed}}, json::array({report_json(r)}),
                   "verification report");
    emit(o, j, [&](std::ostream& os) {
        os << r.suite << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
        for (auto& f : r.failures) os << "  FAIL " << f << '\n';
        for (auto& n : r.notes) os << "  note " << n << '\n';
    });
    return r.ok() ? 0 : 1;
}

inline int run(int argc, char** argv)
{
    CLI::App app{"Exact invariants of the non-commutative desingularization of maximal-minor determinantal varieties"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub, bool need_n) {
        sub->add_option("--m", o.m, "rows")->required()->check(CLI::Range(1, 12));
        if (need_n) sub->add_option("--n", o.n, "columns")->required()->check(CLI::Range(1, 12));
        sub->add_flag("--json", o.json_out, "JSON on standard output");
        sub->add_option("--out", o.out, "also write the JSON to this file");
    };
    auto* coh = app.add_subcommand("cohomology", "higher direct image of one twisted sheaf");
    common(coh, false);
    coh->add_option("--a", o.a)->required();
    coh->add_option("--b", o.b)->required();
    coh->add_option("--c", o.c)->required();
    auto* rp = app.add_subcommand("rankpoly", "rank polynomial");
    common(rp, false);
    rp->add_option("--a", o.a)->required();
    rp->add_option("--b", o.b)->required();
    auto* be = app.add_subcommand("betti", "resolution shape and projective dimension");
    common(be, true);
    be->add_option("--a", o.a)->required();
    be->add_option("--b", o.b)->required();
    be->add_option("--c", o.c)->required();
    auto* pr = app.add_subcommand("presentation", "minimal presentation of C_ab");
    common(pr, true);
    pr->add_option("--a", o.a)->required();
    pr->add_option("--b", o.b)->required();
    pr->add_flag("--blocks", o.blocks, "characteristic-zero block decomposition");
    auto* ex = app.add_subcommand("ext", "Ext between graded simples");
    common(ex, true);
    ex->add_option("--a", o.a)->required();
    ex->add_option("--b", o.b)->required();
    ex->add_option("--t", o.t)->required()->check(CLI::NonNegativeNumber);
    auto* si = app.add_subcommand("simples", "resolution of a graded simple");
    common(si, true);
    si->add_option("--a", o.a)->required();
    si->add_option("--tmax", o.tmax)->required()->check(CLI::NonNegativeNumber);
    auto* mo = app.add_subcommand("moduli", "check a representation built from (alpha, beta)");
    common(mo, true);
    mo->add_option("--alpha", o.alpha, "(m-1) x m matrix file")->required()->check(CLI::ExistingFile);
    mo->add_option("--beta", o.beta, "(m-1) x n matrix file")->required()->check(CLI::ExistingFile);
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    common(ve, false);
    ve->add_option("--n", o.n, "columns")->check(CLI::Range(1, 12));
    ve->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"star", "pbw", "cohomology", "hilbert", "betti", "moduli", "ext", "blocks"}));
    ve->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 12));
    ve->add_option("--seed", o.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (coh->parsed()) return cmd_cohomology(o);
        if (rp->parsed()) return cmd_rankpoly(o);
        if (ve->parsed() && ve->count("--n") == 0) o.n = o.m;
        if (o.n < o.m) throw std::invalid_argument("need n >= m");
        if (be->parsed()) return cmd_betti(o);
        if (pr->parsed()) return cmd_presentation(o);
        if (ex->parsed()) return cmd_ext(o);
        if (si->parsed()) return cmd_simples(o);
        if (mo->parsed()) return cmd_moduli(o);
        if (ve->parsed()) return cmd_verify(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace detsing::cli
