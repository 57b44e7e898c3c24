#include "odelab/io.hpp"

#include <gmpxx.h>

#include <istream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace odelab {

std::string decimal_string(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    mpz_class num = r.numerator();
    const bool negative = num < 0;
    if (negative) num = -num;
    num *= scale;

    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), r.denominator().get_mpz_t());
    if (2 * rem >= r.denominator()) q += 1;  // round half away from zero

    mpz_class whole = q / scale;
    mpz_class frac = q % scale;
    std::string out = negative && (q != 0) ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

std::string trajectory_csv(const LatticeTrajectory& traj, int decimals) {
    std::ostringstream out;
    out << (decimals >= 0 ? "n,value,decimal\n" : "n,value\n");
    for (std::size_t n = 0; n < traj.size(); ++n) {
        out << n << ',' << traj[n].to_string();
        if (decimals >= 0) out << ',' << decimal_string(traj[n], decimals);
        out << '\n';
    }
    return out.str();
}

nlohmann::json trajectory_json(const LatticeTrajectory& traj, int decimals) {
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t n = 0; n < traj.size(); ++n) values.push_back(traj[n].to_string());
    nlohmann::json j{{"kind", traj.kind() == TrajectoryKind::borel ? "borel" : "plain"},
                     {"n_max", traj.n_max()},
                     {"values", std::move(values)}};
    if (decimals >= 0) {
        nlohmann::json dec = nlohmann::json::array();
        for (std::size_t n = 0; n < traj.size(); ++n) dec.push_back(decimal_string(traj[n], decimals));
        j["decimals"] = std::move(dec);
    }
    return j;
}

nlohmann::json sequence_json(const CoefficientSequence& seq) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t k = 0; k < seq.size(); ++k) j.push_back(seq[k].to_string());
    return j;
}

std::string residuals_csv(const std::vector<Residual>& residuals) {
    std::ostringstream out;
    out << "n,residual\n";
    for (const Residual& r : residuals) out << r.index << ',' << r.value.to_string() << '\n';
    return out.str();
}

nlohmann::json residuals_json(const std::vector<Residual>& residuals) {
    nlohmann::json j = nlohmann::json::array();
    for (const Residual& r : residuals) j.push_back(r.value.to_string());
    return j;
}

namespace {

LatticeTrajectory trajectory_from_json(const nlohmann::json& j) {
    const nlohmann::json* values = &j;
    TrajectoryKind kind = TrajectoryKind::plain;
    if (j.is_object()) {
        if (!j.contains("values")) throw std::invalid_argument("trajectory JSON lacks a \"values\" array");
        values = &j.at("values");
        if (j.contains("kind") && j.at("kind") == "borel") kind = TrajectoryKind::borel;
    }
    if (!values->is_array() || values->empty())
        throw std::invalid_argument("trajectory JSON \"values\" must be a non-empty array");
    std::vector<Rational> out;
    out.reserve(values->size());
    for (const auto& v : *values) out.push_back(Rational::from_string(v.get<std::string>()));
    return LatticeTrajectory(std::move(out), kind);
}

}  // namespace

LatticeTrajectory read_trajectory(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty trajectory input");

    if (text[first] == '{' || text[first] == '[') return trajectory_from_json(nlohmann::json::parse(text));

    std::istringstream lines(text);
    std::string line;
    std::vector<Rational> values;
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (values.empty() && row == 0 && line.rfind("n,", 0) == 0) continue;  // header
        const std::size_t c1 = line.find(',');
        if (c1 == std::string::npos) throw std::invalid_argument("trajectory CSV row lacks a value column");
        std::size_t c2 = line.find(',', c1 + 1);
        if (c2 == std::string::npos) c2 = line.size();
        const std::string index = line.substr(0, c1);
        if (index != std::to_string(row))
            throw std::invalid_argument("trajectory CSV rows must be densely indexed from 0");
        values.push_back(Rational::from_string(line.substr(c1 + 1, c2 - c1 - 1)));
        ++row;
    }
    if (values.empty()) throw std::invalid_argument("trajectory CSV has no data rows");
    return LatticeTrajectory(std::move(values));
}

}  // namespace odelab
