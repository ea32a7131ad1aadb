#include "starkrankin/scenario.hpp"

#include <fstream>
#include <sstream>

namespace starkrankin {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &what)
{
    throw std::domain_error("scenario: " + what);
}

long get_long(const json &j, const std::string &key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        fail("missing or non-integer field '" + key + "'");
    return j.at(key).get<long>();
}

} // namespace

Rat parse_rational(const std::string &text)
{
    if (text.empty())
        throw std::domain_error("parse_rational: empty string");
    std::string::size_type slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(text);
            r.canonicalize();
            return r;
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument &) {
        throw std::domain_error("parse_rational: malformed rational '" + text + "'");
    }
}

std::string rational_to_string(const Rat &x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

nlohmann::json padic_to_json(const PadicNumber &x)
{
    json j;
    j["p"] = x.p;
    j["val"] = x.val;
    j["digits"] = x.digit_vector();
    j["prec"] = x.abs_prec();
    return j;
}

PadicNumber padic_from_json(const nlohmann::json &j)
{
    long p = get_long(j, "p");
    long val = get_long(j, "val");
    long prec = get_long(j, "prec");
    if (!j.contains("digits") || !j.at("digits").is_array())
        fail("p-adic literal needs a 'digits' array");
    std::vector<long> digits = j.at("digits").get<std::vector<long>>();
    if (digits.empty())
        return PadicNumber::zero(p, prec);
    Int unit = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] < 0 || digits[i] >= p)
            fail("p-adic digit out of range");
        unit = unit * p + digits[i];
    }
    return PadicNumber::from_approx(p, val, unit, prec);
}

Scenario Scenario::from_json(const nlohmann::json &j)
{
    Scenario s;
    if (!j.contains("curve") || !j.at("curve").is_array() || j.at("curve").size() != 5)
        fail("'curve' must be the five coefficients [a1,a2,a3,a4,a6]");
    s.curve = j.at("curve").get<std::vector<long>>();
    s.conductor = get_long(j, "conductor");
    s.D_K = get_long(j, "D_K");
    s.c = j.contains("c") ? get_long(j, "c") : 1;
    s.p = get_long(j, "p");
    if (!j.contains("psi") || !j.at("psi").is_object() ||
        !j.at("psi").contains("exponents"))
        fail("'psi' must be an object with an 'exponents' array");
    s.psi_exponents = j.at("psi").at("exponents").get<std::vector<long>>();
    if (j.contains("precision")) {
        const json &pr = j.at("precision");
        if (pr.contains("padic_digits"))
            s.precision.padic_digits = get_long(pr, "padic_digits");
        if (pr.contains("q_truncation"))
            s.precision.q_truncation = get_long(pr, "q_truncation");
        if (pr.contains("complex_bits"))
            s.precision.complex_bits = get_long(pr, "complex_bits");
    }
    if (s.precision.padic_digits < 1 || s.precision.q_truncation < 1 ||
        s.precision.complex_bits < 16)
        fail("precision settings out of range");
    if (j.contains("inputs")) {
        const json &in = j.at("inputs");
        if (in.contains("heegner_point")) {
            const json &hp = in.at("heegner_point");
            if (!hp.is_array() || hp.size() != 2 || !hp[0].is_string() || !hp[1].is_string())
                fail("'heegner_point' must be [x, y] as rational strings");
            s.inputs.heegner_point = {parse_rational(hp[0].get<std::string>()),
                                      parse_rational(hp[1].get<std::string>())};
        }
        if (in.contains("iterated_integral"))
            s.inputs.iterated_integral = padic_from_json(in.at("iterated_integral"));
        if (in.contains("unit_log"))
            s.inputs.unit_log = padic_from_json(in.at("unit_log"));
    }
    if (j.contains("seed"))
        s.seed = j.at("seed").get<unsigned long>();
    for (const auto *lit : {&s.inputs.iterated_integral, &s.inputs.unit_log})
        if (lit->has_value() && (*lit)->p != s.p)
            fail("p-adic input literal does not live over the scenario prime");
    return s;
}

Scenario Scenario::load_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::domain_error("scenario: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error &e) {
        throw std::domain_error("scenario: JSON parse error in '" + path + "': " + e.what());
    }
    return from_json(j);
}

nlohmann::json Scenario::echo_json() const
{
    json j;
    j["curve"] = curve;
    j["conductor"] = conductor;
    j["D_K"] = D_K;
    j["c"] = c;
    j["psi"] = {{"exponents", psi_exponents}};
    j["p"] = p;
    j["precision"] = {{"padic_digits", precision.padic_digits},
                      {"q_truncation", precision.q_truncation},
                      {"complex_bits", precision.complex_bits}};
    json in = json::object();
    if (inputs.heegner_point)
        in["heegner_point"] = {rational_to_string(inputs.heegner_point->first),
                               rational_to_string(inputs.heegner_point->second)};
    if (inputs.iterated_integral)
        in["iterated_integral"] = padic_to_json(*inputs.iterated_integral);
    if (inputs.unit_log)
        in["unit_log"] = padic_to_json(*inputs.unit_log);
    if (!in.empty())
        j["inputs"] = in;
    j["seed"] = seed;
    return j;
}

FactorScenario Scenario::build() const
{
    WeierstrassModel E = WeierstrassModel::from_list(curve);
    ImagQuadField K(D_K);
    RingClassCharacter psi(K, c, psi_exponents);
    return FactorScenario::build(E, conductor, K, c, psi, p);
}

} // namespace starkrankin
