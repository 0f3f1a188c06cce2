#pragma once

/*
 * Line-oriented verification reports: named residual checks plus free-form
 * metadata, rendered as greppable `key = value` lines followed by a
 * machine-readable summary block.
 */

#include <string>
#include <utility>
#include <vector>

namespace hopfstate {

struct Report {
    std::string title;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::pair<std::string, double>> checks;  // name → residual

    void meta(std::string key, std::string value);
    void check(std::string name, double residual);
    void merge(const Report& other, const std::string& prefix = "");

    double max_residual() const;
    bool pass(double tol) const;

    // key = value lines, then a summary block:
    //   ---summary---
    //   checks = N
    //   max_residual = R
    //   status = pass|fail
    std::string to_text(double tol) const;
};

}  // namespace hopfstate
