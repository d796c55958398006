#include "ramjump/json_io.hpp"

namespace ramjump {

namespace {

constexpr long long kMaxAbsExponent = 1000000;

[[noreturn]] void parse_fail(const std::string& what) { raise(ErrorCode::ParseError, what); }

long long get_int(const Json& j, const char* key, bool required, long long fallback = 0) {
    if (!j.contains(key)) {
        if (required) parse_fail(std::string("missing field '") + key + "'");
        return fallback;
    }
    if (!j[key].is_number_integer()) parse_fail(std::string("field '") + key + "' must be an integer");
    return j[key].get<long long>();
}

} // namespace

Json series_to_json(const LaurentSeries& s) {
    Json out = Json::array();
    for (const auto& t : s.terms()) {
        Json coeff = Json::array();
        for (int i = 0; i < s.field().d(); ++i) coeff.push_back(t.second.coord(i));
        out.push_back(Json::array({t.first, coeff}));
    }
    return out;
}

LaurentSeries series_from_json(const Json& j, const FqField& k) {
    if (!j.is_array()) parse_fail("series must be a list of [exponent, coeff] pairs");
    LaurentSeries s(k);
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer())
            parse_fail("series term must be [exponent, coeff]");
        long long e = item[0].get<long long>();
        if (e < -kMaxAbsExponent || e > kMaxAbsExponent)
            parse_fail("series exponent out of the sane range");
        const Json& cj = item[1];
        if (!cj.is_array() || cj.size() != static_cast<size_t>(k.d()))
            parse_fail("coefficient must be a length-d vector of integers");
        std::vector<int> coords;
        for (const auto& c : cj) {
            if (!c.is_number_integer()) parse_fail("coefficient entries must be integers");
            coords.push_back(c.get<int>());
        }
        s = s + LaurentSeries::monomial(k.make(coords), e);
    }
    return s;
}

Json rat_to_json(const Rat& r) { return Json{{"num", r.num_ll()}, {"den", r.den_ll()}}; }

Json conditions_to_json(const ConditionsReport& rep) {
    Json m = Json::array();
    for (const auto& mj : rep.m) {
        if (mj) m.push_back(*mj);
        else m.push_back(nullptr);
    }
    return Json{{"i", rep.cond_i},
                {"ii", rep.cond_ii},
                {"iii", rep.cond_iii},
                {"m_a", rep.m_a},
                {"m", m}};
}

Json profile_to_json(const JumpProfile& prof) {
    Json m = Json::array();
    for (const auto& v : prof.m) m.push_back(v ? Json(*v) : Json(nullptr));
    Json ov = Json::array();
    for (const auto& v : prof.omega_val) ov.push_back(v ? Json(*v) : Json(nullptr));
    Json r = Json::array();
    for (const auto& v : prof.r) r.push_back(rat_to_json(v));
    Json U = Json::array();
    for (const auto& v : prof.U) U.push_back(rat_to_json(v));
    return Json{{"m_a", prof.m_a}, {"m", m}, {"omega_val", ov}, {"r", r}, {"U", U}};
}

Json pair_to_json(const DefiningPair& pair) {
    Json b = Json::array();
    for (const auto& bj : pair.b) b.push_back(series_to_json(bj));
    return Json{{"a", series_to_json(pair.a)}, {"b", b}};
}

Problem problem_from_json(const Json& j, std::optional<long long> precision_override) {
    if (!j.is_object()) parse_fail("problem file must be a JSON object");
    int p = static_cast<int>(get_int(j, "p", true));
    int d = static_cast<int>(get_int(j, "d", true));
    int n = static_cast<int>(get_int(j, "n", true));
    if (!j.contains("modulus") || !j["modulus"].is_array())
        parse_fail("missing or invalid 'modulus'");
    std::vector<int> modulus;
    for (const auto& c : j["modulus"]) {
        if (!c.is_number_integer()) parse_fail("modulus entries must be integers");
        modulus.push_back(c.get<int>());
    }
    Problem prob;
    try {
        prob.field = std::make_unique<FqField>(p, d, modulus);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidInput) parse_fail(e.what());
        throw;
    }
    prob.precision = get_int(j, "precision", false, 128);
    if (precision_override) prob.precision = *precision_override;
    if (prob.precision <= 0) parse_fail("precision must be positive");

    if (!j.contains("a")) parse_fail("missing field 'a'");
    if (!j.contains("b") || !j["b"].is_array()) parse_fail("missing or invalid 'b'");
    if (j["b"].size() != static_cast<size_t>(n))
        parse_fail("'b' must list exactly n series (lowest component first)");
    if (n < 2 || n > p) parse_fail("need 2 <= n <= p");

    LaurentField K{prob.field.get(), prob.precision};
    LaurentSeries a = series_from_json(j["a"], *prob.field);
    std::vector<LaurentSeries> b;
    for (const auto& bj : j["b"]) b.push_back(series_from_json(bj, *prob.field));
    prob.pair = make_pair(K, std::move(a), std::move(b));
    return prob;
}

Problem problem_from_string(const std::string& text, std::optional<long long> precision_override) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) parse_fail("malformed JSON");
    return problem_from_json(j, precision_override);
}

} // namespace ramjump
