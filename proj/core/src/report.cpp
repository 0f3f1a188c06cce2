#include "hopfstate/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopfstate {

void Report::meta(std::string key, std::string value) {
    metadata.emplace_back(std::move(key), std::move(value));
}

void Report::check(std::string name, double residual) {
    checks.emplace_back(std::move(name), residual);
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& [k, v] : other.metadata) metadata.emplace_back(prefix + k, v);
    for (const auto& [k, r] : other.checks) checks.emplace_back(prefix + k, r);
}

double Report::max_residual() const {
    double m = 0.0;
    for (const auto& [_, r] : checks) m = std::max(m, r);
    return m;
}

bool Report::pass(double tol) const { return max_residual() <= tol; }

std::string Report::to_text(double tol) const {
    std::ostringstream os;
    os.precision(6);
    os << std::scientific;
    if (!title.empty()) os << "report = " << title << "\n";
    for (const auto& [k, v] : metadata) os << k << " = " << v << "\n";
    for (const auto& [k, r] : checks)
        os << "residual." << k << " = " << r << (r <= tol ? "" : "  [FAIL]") << "\n";
    os << "---summary---\n";
    os << "checks = " << checks.size() << "\n";
    os << "max_residual = " << max_residual() << "\n";
    os << "tolerance = " << tol << "\n";
    os << "status = " << (pass(tol) ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace hopfstate
