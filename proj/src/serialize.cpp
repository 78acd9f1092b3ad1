#include "qwz/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace qwz {

Json to_json(const RatPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_pq_string(c));
    return out;
}

Json to_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_pq_string(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const RationalFunction& f) {
    Json out = Json::object();
    out["num"] = to_json(f.num());
    out["den"] = to_json(f.den());
    return out;
}

Json to_json(const SpectrumMultiset& s) {
    Json out = Json::array();
    for (const Complex& z : s.values) {
        Json v = Json::object();
        v["re"] = z.real() + 0.0;  // drops negative zero
        v["im"] = z.imag() + 0.0;
        out.push_back(std::move(v));
    }
    return out;
}

Json to_json(const VerificationReport& report) {
    Json out = Json::object();
    out["seed"] = report.seed;
    out["weight_trials"] = report.weight_trials;
    out["all_passed"] = report.all_passed();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json entry = Json::object();
        entry["identity"] = c.name;
        entry["passed"] = c.passed();
        entry["checked"] = c.checked;
        entry["skipped"] = c.skipped;
        if (c.witness) {
            entry["witness"] = Json::object();
            entry["witness"]["graph"] = c.witness->graph;
            entry["witness"]["residual"] = c.witness->residual;
        } else {
            entry["witness"] = nullptr;
        }
        checks.push_back(std::move(entry));
    }
    out["checks"] = std::move(checks);
    return out;
}

Json to_json(const DistinguishResult& result, const std::string& first_name, const std::string& second_name) {
    Json out = Json::object();
    out["first"] = first_name;
    out["second"] = second_name;
    if (result.level) {
        out["level"] = *result.level;
    } else {
        out["level"] = "indistinct";
    }
    Json levels = Json::array();
    for (const auto& level : result.levels) {
        Json entry = Json::object();
        entry["power"] = level.power;
        entry["operator"] = level.power == 0 ? "A" : "(U^" + std::to_string(level.power) + ")+";
        entry["equal"] = level.equal;
        entry["first_charpoly"] = to_json(level.first);
        entry["second_charpoly"] = to_json(level.second);
        levels.push_back(std::move(entry));
    }
    out["levels"] = std::move(levels);
    return out;
}

RatPolynomial polynomial_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
    return RatPolynomial(std::move(coeffs));
}

RationalMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j[0].size();
    RationalMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) throw std::invalid_argument("ragged matrix in JSON");
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = parse_rational(j[r][c].get<std::string>());
    }
    return out;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "seed " << report.seed << ", weight trials " << report.weight_trials << "\n";
    os << std::left << std::setw(28) << "identity" << std::setw(8) << "result" << std::setw(9) << "checked"
       << std::setw(9) << "skipped" << "seconds\n";
    for (const auto& c : report.checks) {
        os << std::left << std::setw(28) << c.name << std::setw(8) << (c.passed() ? "pass" : "FAIL") << std::setw(9)
           << c.checked << std::setw(9) << c.skipped << std::fixed << std::setprecision(2) << c.seconds << "\n";
        if (c.witness) os << "  witness " << c.witness->graph << ": " << c.witness->residual << "\n";
    }
    return os.str();
}

}  // namespace qwz
