#include "tl/cli.hpp"

#include <CLI11.hpp>

#include <chrono>

#include "tl/io.hpp"
#include "tl/jw.hpp"
#include "tl/repro.hpp"

namespace tl {

namespace {

struct RingOpts {
    std::string ring_tag = "Z";
    std::string a_str;
    std::string v_str;
    int theta = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--ring", ring_tag, "coefficient ring: Z, Q or Fp:<p>")->capture_default_str();
        cmd->add_option("--a", a_str, "parameter a (direct)");
        cmd->add_option("--v", v_str, "unit v with a = v + v^-1");
        cmd->add_option("--theta", theta, "theta choice (1 or 2)")->check(CLI::IsMember({1, 2}));
    }

    ParamContext context(bool need_v) const {
        RingSpec ring = RingSpec::parse_tag(ring_tag);
        ThetaChoice th = theta == 1 ? ThetaChoice::Theta1 : ThetaChoice::Theta2;
        if (!a_str.empty() && !v_str.empty())
            throw invalid_input("give exactly one of --a and --v");
        if (!v_str.empty())
            return make_context(ring, FromUnit{RingValue::parse(ring, v_str)}, th);
        if (need_v) throw invalid_input("--v is required for this subcommand");
        if (!a_str.empty())
            return make_context(ring, DirectA{RingValue::parse(ring, a_str)}, th);
        throw invalid_input("one of --a / --v is required");
    }
};

std::string context_banner(const ParamContext& ctx) {
    std::string s = ctx.ring.tag() + ", a=" + ctx.a.str();
    if (ctx.v) s += ", v=" + ctx.v->str();
    return s;
}

nlohmann::json homology_json(const std::map<int, HomologyGroup>& H) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [deg, g] : H) j[std::to_string(deg)] = group_to_json(g);
    return j;
}

void cmd_mul(std::ostream& out, const RingOpts& ropt, int n, const std::string& w1,
             const std::string& w2, bool json) {
    auto ctx = ropt.context(false);
    auto x = from_word(ctx, parse_word(n, w1));
    auto y = from_word(ctx, parse_word(n, w2));
    auto prod = multiply(ctx, x, y);
    if (json) {
        out << element_to_json(prod).dump(2) << "\n";
    } else {
        out << render_element(prod) << "\n";
    }
}

void cmd_wn(std::ostream& out, const RingOpts& ropt, int n, bool json, const std::string& save_dir) {
    auto ctx = ropt.context(true);
    auto W = build_W(ctx, n);
    if (!save_dir.empty()) save_complex(W, save_dir);
    auto H = homology_of(W);
    long long fine = static_cast<long long>(fine_number(n));
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["ring"] = ctx.ring.tag();
        j["dims"] = W.dims;
        j["degrees"] = {W.lo, W.hi};
        j["homology"] = homology_json(H);
        j["top_rank"] = n >= 1 ? H.at(n - 1).rank : 0;
        j["fine_number"] = fine;
        out << j.dump(2) << "\n";
        return;
    }
    out << "W(" << n << ") over " << context_banner(ctx) << "\n";
    out << "degree  dim  homology\n";
    for (int d = W.lo; d <= W.hi; ++d)
        out << "  " << (d >= 0 ? " " : "") << d << "     " << W.dim(d) << "    " << H.at(d).str(ctx.ring)
            << "\n";
    if (n >= 1)
        out << "top homology rank " << H.at(n - 1).rank << ", fine number " << fine
            << (H.at(n - 1).rank == fine ? " (match)" : " (MISMATCH)") << "\n";
}

LeftModule module_by_name(const ParamContext& ctx, int n, const std::string& name) {
    if (name == "trivial") return trivial_module(ctx, n);
    if (name == "fineberg") return fineberg_module(ctx, n);
    if (name.rfind("induced:", 0) == 0) {
        int m = std::stoi(name.substr(8));
        return induced_as_module(ctx, n, m);
    }
    throw invalid_input("unknown module: " + name + " (use trivial, induced:<m> or fineberg)");
}

void cmd_tor(std::ostream& out, const RingOpts& ropt, int n, int maxdeg, const std::string& module,
             bool json) {
    auto ctx = ropt.context(module == "fineberg");
    auto M = module_by_name(ctx, n, module);
    auto tor = tor_trivial(ctx, M, maxdeg);
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["ring"] = ctx.ring.tag();
        j["module"] = module;
        auto arr = nlohmann::json::array();
        for (const auto& g : tor) arr.push_back(group_to_json(g));
        j["tor"] = arr;
        out << j.dump(2) << "\n";
        return;
    }
    out << "Tor_d(t, " << module << ") over " << context_banner(ctx) << ", n=" << n << "\n";
    for (int d = 0; d < maxdeg; ++d)
        out << "  d=" << d << "  " << tor[d].str(ctx.ring)
            << (d >= 1 && !tor[d].is_zero() ? "   <- nonzero" : "") << "\n";
}

void cmd_jw(std::ostream& out, const RingOpts& ropt, int n, bool json) {
    auto ctx = ropt.context(false);
    std::optional<bool> exists;
    if (ctx.ring.is_field() && ctx.has_unit()) exists = jw_exists(ctx, n);
    auto jw = compute_jw(ctx, n);
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["ring"] = ctx.ring.tag();
        if (exists) j["exists_criterion"] = *exists;
        j["present"] = jw.has_value();
        if (jw) j["element"] = element_to_json(*jw);
        out << j.dump(2) << "\n";
        return;
    }
    if (exists)
        out << "quantum binomial criterion: " << (*exists ? "all nonzero" : "vanishing binomial") << "\n";
    if (jw)
        out << "JW_" << n << " = " << render_element(*jw) << "\n";
    else
        out << "JW_" << n << " absent\n";
}

void cmd_qbc(std::ostream& out, int n, bool delta_zero, bool json) {
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        auto arr = nlohmann::json::array();
        for (int r = 0; r <= n; ++r) {
            if (delta_zero) arr.push_back(qbc_delta_zero(n, r));
            else arr.push_back(quantum_binomial(n, r).coeffs());
        }
        j[delta_zero ? "delta_zero_row" : "coefficients"] = arr;
        out << j.dump(2) << "\n";
        return;
    }
    if (delta_zero) {
        for (int r = 0; r <= n; ++r) out << (r ? " " : "") << qbc_delta_zero(n, r);
        out << "\n";
        return;
    }
    for (int r = 0; r <= n; ++r)
        out << "[" << n << " " << r << "] = " << quantum_binomial(n, r).str() << "\n";
}

void cmd_fineberg(std::ostream& out, const RingOpts& ropt, int n, bool json) {
    auto ctx = ropt.context(true);
    auto F = fineberg_module(ctx, n);
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["ring"] = ctx.ring.tag();
        j["dim"] = F.dim;
        j["fine_number"] = static_cast<long long>(fine_number(n));
        auto arr = nlohmann::json::array();
        for (const auto& e : F.ambient_basis) arr.push_back(render_element(e));
        j["basis"] = arr;
        out << j.dump(2) << "\n";
        return;
    }
    out << "Fineberg module F_" << n << " over " << context_banner(ctx) << ": dim " << F.dim
        << " (fine number " << fine_number(n) << ")\n";
    for (const auto& e : F.ambient_basis) out << "  " << render_element(e) << "\n";
}

void cmd_resolve(std::ostream& out, const RingOpts& ropt, int n, int length, const std::string& module,
                 bool json) {
    auto ctx = ropt.context(module == "fineberg");
    auto M = module_by_name(ctx, n, module);
    auto res = free_resolution(M, length);
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["ring"] = ctx.ring.tag();
        j["module"] = module;
        j["ranks"] = res.ranks;
        out << j.dump(2) << "\n";
        return;
    }
    out << "free resolution of " << module << " over " << context_banner(ctx) << ", ranks:";
    for (int r : res.ranks) out << " " << r;
    out << "\n";
}

void cmd_filtration(std::ostream& out, const RingOpts& ropt, int n, int k, bool json) {
    auto ctx = ropt.context(true);
    auto sel = filtration_indices(n, k);
    std::vector<int> dims;
    for (const auto& s : sel) dims.push_back(static_cast<int>(s.size()));
    bool iso = k == 0 ? is_chain_iso(phi0(ctx, n)) : is_chain_iso(psik(ctx, n, k));
    std::string claim = k == 0 ? "F^0 ~ cone of W(n-1)" : "F^k/F^{k-1} ~ truncated suspension of W(n-1)";
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["k"] = k;
        j["dims"] = dims;
        j["chain_iso"] = iso;
        out << j.dump(2) << "\n";
        return;
    }
    out << "F^" << k << " of W(" << n << ") over " << context_banner(ctx) << ", dims (degree -1.."
        << n - 1 << "):";
    for (int d : dims) out << " " << d;
    out << "\n" << claim << ": " << (iso ? "chain isomorphism" : "NOT an isomorphism") << "\n";
}

void cmd_seq(std::ostream& out, const std::string& which, int upto, bool json) {
    std::vector<long long> vals;
    int start = which == "jacobsthal" ? 1 : 0;
    for (int n = start; n <= upto; ++n) {
        if (which == "catalan") vals.push_back(static_cast<long long>(catalan(n)));
        else if (which == "fine") vals.push_back(static_cast<long long>(fine_number(n)));
        else if (which == "jacobsthal") vals.push_back(static_cast<long long>(jacobsthal_number(n)));
        else throw invalid_input("unknown sequence: " + which);
    }
    if (json) {
        nlohmann::json j;
        j["sequence"] = which;
        j["first_n"] = start;
        j["values"] = vals;
        out << j.dump(2) << "\n";
        return;
    }
    out << which << ":";
    for (auto v : vals) out << " " << v;
    out << "\n";
}

int cmd_verify_tor_sequence(std::ostream& out, const RingOpts& ropt, int n, int maxdeg) {
    auto ctx = ropt.context(true);
    auto rep = verify_tor_sequence(ctx, n, maxdeg);
    nlohmann::json j;
    j["pass"] = rep.pass;
    j["n"] = n;
    j["ring"] = ctx.ring.tag();
    j["tor_n"] = group_to_json(rep.tor_n);
    j["tor_n_minus_1"] = group_to_json(rep.tor_n_minus_1);
    j["coinvariants_of_fineberg"] = group_to_json(rep.coinv_fineberg);
    j["kernel_of_middle"] = group_to_json(rep.kernel_of_middle);
    j["cokernel_of_middle"] = group_to_json(rep.cokernel_of_middle);
    j["b"] = rep.b.str();
    out << (rep.pass ? "PASS" : "FAIL") << " tor-sequence n=" << n << " over " << context_banner(ctx)
        << "\n" << j.dump(2) << "\n";
    return 0;
}

int cmd_verify_shifted_iso(std::ostream& out, const RingOpts& ropt, int n, int maxdeg) {
    auto ctx = ropt.context(true);
    auto rep = verify_shifted_iso(ctx, n, maxdeg);
    nlohmann::json j;
    j["pass"] = rep.pass;
    j["n"] = n;
    j["ring"] = ctx.ring.tag();
    j["first_degree"] = rep.first_degree;
    auto arr = nlohmann::json::array();
    for (std::size_t t = 0; t < rep.degrees.size(); ++t) {
        nlohmann::json item;
        item["i"] = rep.degrees[t];
        item["tor_i"] = group_to_json(rep.lhs[t]);
        item["tor_shifted"] = group_to_json(rep.rhs[t]);
        arr.push_back(item);
    }
    j["comparisons"] = arr;
    out << (rep.pass ? "PASS" : "FAIL") << " shifted-iso n=" << n << " over " << context_banner(ctx)
        << "\n" << j.dump(2) << "\n";
    return 0;
}

int cmd_verify_acyclicity(std::ostream& out, const RingOpts& ropt, const std::string& which, int n,
                          int m, int length) {
    auto ctx = ropt.context(which == "W");
    ChainComplex X;
    int lo_check = 0, hi_check = 0;
    if (which == "W") {
        X = build_W(ctx, n);
        lo_check = -1;
        hi_check = n - 2;
    } else if (which == "C") {
        X = build_C(ctx, n, m, length);
        lo_check = -1;
        hi_check = length - 2;
    } else if (which == "D") {
        X = build_D(ctx, n, m, length);
        lo_check = -1;
        hi_check = length - 2;
    } else {
        throw invalid_input("unknown complex: " + which + " (use W, C or D)");
    }
    auto H = homology_of(X);
    bool pass = true;
    nlohmann::json j;
    j["complex"] = which;
    j["pass"] = true;
    j["n"] = n;
    if (which != "W") j["m"] = m;
    j["ring"] = ctx.ring.tag();
    j["checked_degrees"] = {lo_check, hi_check};
    nlohmann::json groups = nlohmann::json::object();
    for (int d = lo_check; d <= hi_check; ++d) {
        groups[std::to_string(d)] = group_to_json(H.at(d));
        if (!H.at(d).is_zero()) pass = false;
    }
    j["homology"] = groups;
    j["pass"] = pass;
    out << (pass ? "PASS" : "FAIL") << " acyclicity of " << which << " over " << context_banner(ctx)
        << "\n" << j.dump(2) << "\n";
    return 0;
}

int cmd_repro(std::ostream& out) {
    int failures = 0;
    for (const auto& crit : acceptance_criteria()) {
        auto start = std::chrono::steady_clock::now();
        CriterionResult res;
        try {
            res = crit.run();
        } catch (const std::exception& e) {
            res.pass = false;
            res.details = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        out << "[" << crit.id << "/12] " << (res.pass ? "PASS" : "FAIL") << " — " << crit.name << " ("
            << ms << " ms)\n        " << res.details << "\n";
        if (!res.pass) ++failures;
    }
    out << (failures == 0 ? "OK" : "FAILURES") << ": " << (12 - failures) << "/12 criteria passed\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Exact computations in Temperley-Lieb algebras: diagram calculus,\n"
                 "planar injective words, Tor/Ext, Fineberg modules, Jones-Wenzl projectors"};
    app.require_subcommand(1);

    // mul
    auto* mul = app.add_subcommand("mul", "multiply two words, print the Jones-basis expansion");
    RingOpts mul_ring;
    mul_ring.attach(mul);
    int mul_n = 0;
    std::string word1, word2;
    bool mul_json = false;
    mul->add_option("--n", mul_n, "algebra size")->required();
    mul->add_option("word1", word1, "first word (`1` or `U<k>` tokens)")->required();
    mul->add_option("word2", word2, "second word")->required();
    mul->add_flag("--json", mul_json, "JSON output");

    // wn
    auto* wn = app.add_subcommand("wn", "build W(n) and report dims and homology");
    RingOpts wn_ring;
    wn_ring.attach(wn);
    int wn_n = 0;
    bool wn_json = false;
    std::string wn_save;
    wn->add_option("--n", wn_n, "algebra size")->required();
    wn->add_flag("--json", wn_json, "JSON output");
    wn->add_option("--save", wn_save, "directory for tlmat files and the manifest");

    // tor
    auto* tor = app.add_subcommand("tor", "Tor_d(t, M) table via a free resolution");
    RingOpts tor_ring;
    tor_ring.attach(tor);
    int tor_n = 0, tor_L = 4;
    std::string tor_module = "trivial";
    bool tor_json = false;
    tor->add_option("--n", tor_n, "algebra size")->required();
    tor->add_option("--max-degree", tor_L, "compute Tor_d for d < max-degree")->capture_default_str();
    tor->add_option("--module", tor_module, "trivial | induced:<m> | fineberg")->capture_default_str();
    tor->add_flag("--json", tor_json, "JSON output");

    // jw
    auto* jw = app.add_subcommand("jw", "Jones-Wenzl projector by linear solve");
    RingOpts jw_ring;
    jw_ring.attach(jw);
    int jw_n = 0;
    bool jw_json = false;
    jw->add_option("--n", jw_n, "algebra size")->required();
    jw->add_flag("--json", jw_json, "JSON output");

    // qbc
    auto* qbc = app.add_subcommand("qbc", "quantum binomial coefficients as delta-polynomials");
    int qbc_n = 0;
    bool qbc_zero = false, qbc_json = false;
    qbc->add_option("--n", qbc_n, "row index")->required();
    qbc->add_flag("--delta-zero", qbc_zero, "print the integer row at delta = 0");
    qbc->add_flag("--json", qbc_json, "JSON output");

    // fineberg
    auto* fin = app.add_subcommand("fineberg", "kernel of the top boundary of W(n) as a module");
    RingOpts fin_ring;
    fin_ring.attach(fin);
    int fin_n = 0;
    bool fin_json = false;
    fin->add_option("--n", fin_n, "algebra size")->required();
    fin->add_flag("--json", fin_json, "JSON output");

    // resolve
    auto* res = app.add_subcommand("resolve", "free resolution ranks for a module");
    RingOpts res_ring;
    res_ring.attach(res);
    int res_n = 0, res_len = 4;
    std::string res_module = "trivial";
    bool res_json = false;
    res->add_option("--n", res_n, "algebra size")->required();
    res->add_option("--length", res_len, "resolution length")->capture_default_str();
    res->add_option("--module", res_module, "trivial | induced:<m> | fineberg")->capture_default_str();
    res->add_flag("--json", res_json, "JSON output");

    // filtration
    auto* filt = app.add_subcommand("filtration", "filtration stage dims and identification");
    RingOpts filt_ring;
    filt_ring.attach(filt);
    int filt_n = 0, filt_k = 0;
    bool filt_json = false;
    filt->add_option("--n", filt_n, "algebra size")->required();
    filt->add_option("--k", filt_k, "filtration stage")->required();
    filt->add_flag("--json", filt_json, "JSON output");

    // seq
    auto* seq = app.add_subcommand("seq", "integer sequences");
    std::string seq_which;
    int seq_upto = 8;
    bool seq_json = false;
    seq->add_option("which", seq_which, "catalan | fine | jacobsthal")->required();
    seq->add_option("--upto", seq_upto, "largest n")->capture_default_str();
    seq->add_flag("--json", seq_json, "JSON output");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification and print PASS/FAIL + evidence");
    verify->require_subcommand(1);
    auto* vts = verify->add_subcommand("tor-sequence", "four-term exact sequence at even n");
    RingOpts vts_ring;
    vts_ring.attach(vts);
    int vts_n = 2, vts_L = 0;
    vts->add_option("--n", vts_n, "even n")->required();
    vts->add_option("--max-degree", vts_L, "resolution length (default n+2)");
    auto* vsi = verify->add_subcommand("shifted-iso", "Tor_i(t,t) vs Tor_{i-n}(t,F_n)");
    RingOpts vsi_ring;
    vsi_ring.attach(vsi);
    int vsi_n = 2, vsi_L = 6;
    vsi->add_option("--n", vsi_n, "algebra size")->required();
    vsi->add_option("--max-degree", vsi_L, "compare degrees i < max-degree")->capture_default_str();
    auto* vac = verify->add_subcommand("acyclicity", "interior homology of W, C(m) or D(m)");
    RingOpts vac_ring;
    vac_ring.attach(vac);
    std::string vac_complex = "D";
    int vac_n = 3, vac_m = 2, vac_len = 8;
    vac->add_option("--complex", vac_complex, "W | C | D")->capture_default_str();
    vac->add_option("--n", vac_n, "algebra size")->required();
    vac->add_option("--m", vac_m, "resolution parameter m")->capture_default_str();
    vac->add_option("--length", vac_len, "truncation length")->capture_default_str();

    // repro
    app.add_subcommand("repro", "run the full verification suite and print a scoreboard");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (mul->parsed()) cmd_mul(out, mul_ring, mul_n, word1, word2, mul_json);
        else if (wn->parsed()) cmd_wn(out, wn_ring, wn_n, wn_json, wn_save);
        else if (tor->parsed()) cmd_tor(out, tor_ring, tor_n, tor_L, tor_module, tor_json);
        else if (jw->parsed()) cmd_jw(out, jw_ring, jw_n, jw_json);
        else if (qbc->parsed()) cmd_qbc(out, qbc_n, qbc_zero, qbc_json);
        else if (fin->parsed()) cmd_fineberg(out, fin_ring, fin_n, fin_json);
        else if (res->parsed()) cmd_resolve(out, res_ring, res_n, res_len, res_module, res_json);
        else if (filt->parsed()) cmd_filtration(out, filt_ring, filt_n, filt_k, filt_json);
        else if (seq->parsed()) cmd_seq(out, seq_which, seq_upto, seq_json);
        else if (verify->parsed()) {
            if (vts->parsed())
                return cmd_verify_tor_sequence(out, vts_ring, vts_n, vts_L > 0 ? vts_L : vts_n + 2);
            if (vsi->parsed()) return cmd_verify_shifted_iso(out, vsi_ring, vsi_n, vsi_L);
            if (vac->parsed())
                return cmd_verify_acyclicity(out, vac_ring, vac_complex, vac_n, vac_m, vac_len);
        } else if (app.get_subcommand("repro")->parsed()) {
            return cmd_repro(out);
        }
    } catch (const internal_error& e) {
        out << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const infeasible& e) {
        out << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const invalid_input& e) {
        out << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace tl
