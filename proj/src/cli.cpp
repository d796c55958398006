#include "ramjump/cli.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "ramjump/tower.hpp"

namespace ramjump {

Json cmd_normalize(const Problem& prob) {
    DefiningPair norm = normalize_pair(prob.pair);
    Json out = pair_to_json(norm);
    out["conditions"] = conditions_to_json(check_conditions(norm));
    out["p"] = prob.field->p();
    out["d"] = prob.field->d();
    out["n"] = norm.n;
    return out;
}

Json cmd_jumps(const Problem& prob) {
    DefiningPair norm = normalize_pair(prob.pair);
    JumpProfile prof = jump_set(norm);
    Json out;
    out["normalized"] = pair_to_json(norm);
    out["profile"] = profile_to_json(prof);
    return out;
}

Json cmd_verify(const Problem& prob) {
    DefiningPair norm = normalize_pair(prob.pair);
    JumpProfile prof = jump_set(norm);
    OracleReport oracle = oracle_all(norm);
    Json results = Json::array();
    bool all = true;
    for (int j = 2; j <= norm.n; ++j) {
        const Rat& formula = prof.r[static_cast<size_t>(j - 1)];
        const Rat& direct = oracle.r[static_cast<size_t>(j - 2)];
        bool match = formula == direct;
        all = all && match;
        results.push_back(Json{{"j", j},
                               {"formula", rat_to_json(formula)},
                               {"oracle", rat_to_json(direct)},
                               {"m_prime", oracle.m_prime[static_cast<size_t>(j - 2)]},
                               {"match", match}});
    }
    return Json{{"results", results}, {"all_match", all}};
}

namespace {

// Deterministic across platforms: mt19937_64 output reduced by modulo; the
// slight bias is irrelevant here and keeps the stream implementation-free.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    long long below(long long n) { return static_cast<long long>(gen() % static_cast<unsigned long long>(n)); }
    long long in(long long lo, long long hi) { return lo + below(hi - lo + 1); }
};

LaurentSeries random_series(Rng& rng, const FqField& k) {
    LaurentSeries s(k);
    long long terms = rng.in(1, 3);
    for (long long t = 0; t < terms; ++t) {
        long long e = rng.in(-12, -1);
        FqElem c = k.element_at(rng.below(k.order()));
        s = s + LaurentSeries::monomial(c, e);
    }
    return s;
}

} // namespace

Json cmd_selftest(const SelftestOptions& opt) {
    if (opt.p != 2 && opt.p != 3 && opt.p != 5)
        raise(ErrorCode::InvalidInput, "selftest supports p in {2, 3, 5}");
    if (opt.n < 2 || opt.n > opt.p)
        raise(ErrorCode::InvalidInput, "selftest needs 2 <= n <= p");
    FqField field(opt.p, opt.d, FqField::find_irreducible(opt.p, opt.d));
    LaurentField K{&field, opt.precision};
    Rng rng(opt.seed);

    long long pass = 0, fail = 0, rejected = 0;
    std::map<std::string, long long> reasons;
    Json first_failure = nullptr;

    for (long long i = 0; i < opt.count; ++i) {
        LaurentSeries a = random_series(rng, field);
        std::vector<LaurentSeries> b;
        for (int j = 1; j <= opt.n; ++j) {
            if (j >= 2 && rng.below(4) == 0) b.push_back(LaurentSeries(field));
            else b.push_back(random_series(rng, field));
        }
        DefiningPair raw = make_pair(K, a, b);
        Json record{{"index", i}, {"a", series_to_json(a)}};
        Json bj = Json::array();
        for (const auto& s : b) bj.push_back(series_to_json(s));
        record["b"] = bj;
        try {
            DefiningPair norm = normalize_pair(raw);
            JumpProfile prof = jump_set(norm);
            OracleReport oracle = oracle_all(norm);
            bool ok = true;
            for (int j = 2; j <= opt.n; ++j) {
                const Rat& formula = prof.r[static_cast<size_t>(j - 1)];
                if (formula != oracle.r[static_cast<size_t>(j - 2)]) ok = false;
                // the layer conductor must be a positive integer prime to p
                Rat mp = Rat(opt.p) * formula - Rat((opt.p - 1) * prof.m_a);
                if (!mp.is_integer() || !(mp > Rat(0)) || mp.num_ll() % opt.p == 0) ok = false;
            }
            if (opt.n == 2 && r2_formula(norm) != prof.r[1]) ok = false;
            for (int j = 2; j <= opt.n; ++j)
                if (s_bound(norm, j) != prof.r[static_cast<size_t>(j - 1)]) ok = false;
            if (ok) {
                ++pass;
            } else {
                ++fail;
                if (first_failure.is_null()) {
                    record["profile"] = profile_to_json(prof);
                    Json orj = Json::array();
                    for (const auto& rr : oracle.r) orj.push_back(rat_to_json(rr));
                    record["oracle_r"] = orj;
                    first_failure = record;
                }
            }
        } catch (const Error& e) {
            switch (e.code()) {
                case ErrorCode::DegenerateGroup:
                case ErrorCode::NotTotallyRamified:
                case ErrorCode::InvalidInput:
                    ++rejected;
                    ++reasons[e.code_name()];
                    break;
                default:
                    ++fail;
                    if (first_failure.is_null()) {
                        record["error"] = e.what();
                        first_failure = record;
                    }
                    break;
            }
        }
    }

    Json out{{"p", opt.p},       {"n", opt.n},           {"d", opt.d},
             {"count", opt.count}, {"seed", opt.seed},     {"pass", pass},
             {"fail", fail},     {"rejected", rejected}};
    Json rj;
    for (const auto& kv : reasons) rj[kv.first] = kv.second;
    out["rejected_reasons"] = rj;
    out["first_failure"] = first_failure;
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::ParseError, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code_for(const Error& e) {
    return e.code() == ErrorCode::ParseError ? 4 : 2;
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact upper ramification jumps of unipotent tower extensions of F_q((t))"};
    app.require_subcommand(1);
    bool pretty = false;
    std::optional<long long> precision;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_option("--precision", precision, "absolute series truncation exponent");

    std::string file_norm, file_jumps, file_verify;
    CLI::App* sub_norm = app.add_subcommand("normalize", "reduce a defining pair to normal form");
    sub_norm->add_option("file", file_norm, "problem JSON file")->required();
    CLI::App* sub_jumps = app.add_subcommand("jumps", "compute the upper jump profile");
    sub_jumps->add_option("file", file_jumps, "problem JSON file")->required();
    CLI::App* sub_verify = app.add_subcommand("verify", "cross-check the formula against the tower oracle");
    sub_verify->add_option("file", file_verify, "problem JSON file")->required();

    SelftestOptions st;
    CLI::App* sub_st = app.add_subcommand("selftest", "randomized formula-vs-oracle battery");
    sub_st->add_option("--p", st.p, "characteristic (2, 3 or 5)")->required();
    sub_st->add_option("--n", st.n, "tower order")->required();
    sub_st->add_option("--count", st.count, "number of random instances");
    sub_st->add_option("--seed", st.seed, "RNG seed");
    sub_st->add_option("--d", st.d, "residue field degree");

    CommandResult res;
    std::vector<const char*> argv;
    argv.push_back("ramjump");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        res.exit_code = 4;
        res.err = Json{{"error", {{"code", "ParseError"}, {"message", e.what()}}}}.dump() + "\n";
        return res;
    }

    auto emit = [&](const Json& j) { res.out = (pretty ? j.dump(2) : j.dump()) + "\n"; };
    try {
        if (*sub_norm) {
            emit(cmd_normalize(problem_from_string(read_file(file_norm), precision)));
        } else if (*sub_jumps) {
            emit(cmd_jumps(problem_from_string(read_file(file_jumps), precision)));
        } else if (*sub_verify) {
            Json out = cmd_verify(problem_from_string(read_file(file_verify), precision));
            emit(out);
            if (!out["all_match"].get<bool>()) res.exit_code = 3;
        } else if (*sub_st) {
            if (precision) st.precision = *precision;
            emit(cmd_selftest(st));
        }
    } catch (const Error& e) {
        res.exit_code = exit_code_for(e);
        res.err = Json{{"error", {{"code", e.code_name()}, {"message", e.message()}}}}.dump() + "\n";
    } catch (const std::exception& e) {
        res.exit_code = 1;
        res.err = Json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump() + "\n";
    }
    return res;
}

} // namespace ramjump
