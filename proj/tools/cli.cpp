#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stratakit/classify.hpp"
#include "stratakit/cover.hpp"
#include "stratakit/divisor_count.hpp"
#include "stratakit/json_io.hpp"
#include "stratakit/oplus.hpp"
#include "stratakit/parity.hpp"

namespace stratakit::cli {

namespace {

unsigned default_jobs() {
    const char* env = std::getenv("STRATAKIT_JOBS");
    if (!env || !*env) return 1;
    try {
        Int v = parse_int(env);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const Error&) {
    }
    return 1;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct Options {
    std::string k, sig, mu, d, base, ops, b = "0", kmin, kmax, max_states;
    bool strict = false, include_trivial = false, normalize = false, no_axioms = false, poles = false,
         holomorphic_power = false;
    unsigned jobs = 1;
};

Stratum stratum_from(const Options& o) { return validate_stratum(parse_int(o.k), parse_orders(o.sig)); }

int cmd_classify(const Options& o, std::ostream& out) {
    emit(out, to_json(classify(stratum_from(o))));
    return kOk;
}

int cmd_parity(const Options& o, std::ostream& out, std::ostream& err) {
    Stratum s = stratum_from(o);
    const Int& k = s.k();
    Parity p;
    if (s.genus == 0) {
        p = genus0_parity(s);
    } else if (is_even(k)) {
        p = even_k_parity(s);
    } else if (s.genus == 1) {
        if (o.d.empty()) {
            err << "error: genus one needs --d (the rotation number)\n";
            return kInvalidInput;
        }
        if (!is_parity_type(s)) throw Error(ErrorKind::NotParityType, "signature is not of parity type");
        std::vector<Int> half;
        for (const auto& m : s.orders()) half.push_back(m / 2);
        p = genus1_parity(k, half, parse_int(o.d));
    } else {
        err << "error: for odd k and genus >= 2 parity is not a stratum invariant\n";
        return kInvalidInput;
    }
    emit(out, to_json(p));
    return kOk;
}

int cmd_nk(const Options& o, std::ostream& out) {
    Int k = parse_int(o.k);
    std::vector<Int> mu = parse_orders(o.mu);
    Int count = nk(k, mu);
    emit(out, Json{{"k", to_json(k)}, {"mu", to_json(mu)}, {"count", to_json(count)}, {"parity", bit_name(bit_of(count))}});
    return kOk;
}

int cmd_cover(const Options& o, std::ostream& out) {
    emit(out, to_json(cover_profile(stratum_from(o))));
    return kOk;
}

int cmd_conjecture(const Options& o, std::ostream& out, std::ostream& err) {
    SweepOptions opts;
    opts.strict = o.strict;
    opts.include_trivial = o.include_trivial;
    opts.jobs = o.jobs;
    try {
        write_sweep_tsv(out, sweep_conjecture(parse_int(o.kmin), parse_int(o.kmax), opts));
    } catch (const ConjectureCounterexample& e) {
        err << "counterexample: " << format_sweep_row(e.row()) << '\n';
        return kCounterexample;
    }
    return kOk;
}

int cmd_oplus(const Options& o, std::ostream& out) {
    Int k = parse_int(o.k);
    std::vector<Int> base = parse_orders(o.base);
    std::vector<Int> others(base.begin() + 1, base.end());
    OplusState state = make_state(k, base.front(), std::move(others), "C", o.holomorphic_power, !o.holomorphic_power);
    std::vector<Int> ops = o.ops.empty() ? std::vector<Int>{} : parse_orders(o.ops);
    OplusSequence seq{state, ops};

    Json steps = Json::array();
    steps.push_back(to_json(state));
    for (const auto& s : ops) {
        state = oplus_apply(state, s);
        steps.push_back(to_json(state));
    }
    Json j{{"k", to_json(k)}, {"sequence", format_sequence(seq)}, {"states", steps}};
    if (o.normalize) {
        NormalizeOptions nopts;
        nopts.quadratic_axioms = !o.no_axioms;
        if (!o.max_states.empty()) nopts.max_states = static_cast<std::size_t>(to_int64(parse_int(o.max_states)));
        j["normal_form"] = to_json(normalize(seq, nopts));
    }
    emit(out, j);
    return kOk;
}

int cmd_merge(const Options& o, std::ostream& out) {
    Stratum s = validate_stratum(2, parse_orders(o.sig));
    Int b = parse_int(o.b);
    emit(out, to_json(o.poles ? merge_poles(s, b) : merge_to_minimal(s, b)));
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Connected components, spin parity and bubbling of strata of k-differentials", "stratakit"};
    app.require_subcommand(1);
    Options o;
    o.jobs = default_jobs();

    auto* classify_cmd = app.add_subcommand("classify", "list the connected components of a stratum");
    classify_cmd->add_option("--k", o.k, "order of the differential")->required();
    classify_cmd->add_option("--sig", o.sig, "comma-separated orders")->required();

    auto* parity_cmd = app.add_subcommand("parity", "spin parity of a stratum (or genus-one component)");
    parity_cmd->add_option("--k", o.k)->required();
    parity_cmd->add_option("--sig", o.sig)->required();
    parity_cmd->add_option("--d", o.d, "rotation number, genus one only");

    auto* nk_cmd = app.add_subcommand("nk", "evaluate n_k on a half signature");
    nk_cmd->add_option("--k", o.k)->required();
    nk_cmd->add_option("--mu", o.mu)->required();

    auto* cover_cmd = app.add_subcommand("cover", "canonical cyclic cover profile");
    cover_cmd->add_option("--k", o.k)->required();
    cover_cmd->add_option("--sig", o.sig)->required();

    auto* conj_cmd = app.add_subcommand("conjecture", "tabulate N_k(n) against floor((k+1)/4)");
    conj_cmd->add_option("--kmin", o.kmin)->required();
    conj_cmd->add_option("--kmax", o.kmax)->required();
    conj_cmd->add_flag("--strict", o.strict, "exit 2 on the first failing row");
    conj_cmd->add_flag("--include-trivial", o.include_trivial, "also emit the n = 1 rows");
    conj_cmd->add_option("--jobs", o.jobs, "worker threads (default $STRATAKIT_JOBS or 1)")->check(CLI::Range(1u, 1024u));

    auto* oplus_cmd = app.add_subcommand("oplus", "bubble handles at a tracked zero");
    oplus_cmd->add_option("--k", o.k)->required();
    oplus_cmd->add_option("--base", o.base, "base orders, tracked zero first (may be 0)")->required();
    oplus_cmd->add_option("--ops", o.ops, "comma-separated parameters");
    oplus_cmd->add_flag("--normalize", o.normalize, "search the rewrite graph for a minimal representative");
    oplus_cmd->add_flag("--no-axioms", o.no_axioms, "disable the quadratic degeneration identities");
    oplus_cmd->add_flag("--holomorphic-power", o.holomorphic_power, "base is a k-th power of a holomorphic differential");
    oplus_cmd->add_option("--max-states", o.max_states, "cap on explored sequences");

    auto* merge_cmd = app.add_subcommand("merge", "merge singularities of a quadratic stratum");
    merge_cmd->add_option("--sig", o.sig)->required();
    merge_cmd->add_option("--b", o.b, "number of simple poles to merge");
    merge_cmd->add_flag("--poles", o.poles, "merge the poles instead of the zeros");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*classify_cmd) return cmd_classify(o, out);
        if (*parity_cmd) return cmd_parity(o, out, err);
        if (*nk_cmd) return cmd_nk(o, out);
        if (*cover_cmd) return cmd_cover(o, out);
        if (*conj_cmd) return cmd_conjecture(o, out, err);
        if (*oplus_cmd) return cmd_oplus(o, out);
        if (*merge_cmd) return cmd_merge(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"stratakit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace stratakit::cli
