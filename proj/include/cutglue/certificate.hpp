#pragma once

/**
 * @file certificate.hpp
 * @brief Machine-checkable verdict records emitted by every certifier.
 *
 * A "verified" certificate carries enough exact witnesses for recheck() (see
 * recheck.hpp) to reproduce the verdict without rerunning the pipeline.
 */

#include "cutglue/quadratic_field.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cutglue {

enum class Statement {
    admissibility,
    disjointness,
    residue,
    nonarithmeticity,
    trace_ring,
    separation,
    volume_bound,
    quadfield_integrality,
};

enum class Verdict { verified, inconclusive, failed };

inline std::string_view to_string(Statement s) {
    switch (s) {
        case Statement::admissibility: return "admissibility";
        case Statement::disjointness: return "disjointness";
        case Statement::residue: return "residue";
        case Statement::nonarithmeticity: return "nonarithmeticity";
        case Statement::trace_ring: return "trace-ring";
        case Statement::separation: return "separation";
        case Statement::volume_bound: return "volume-bound";
        case Statement::quadfield_integrality: return "quadfield-integrality";
    }
    return "?";
}

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::failed: return "failed";
    }
    return "?";
}

inline Statement parse_statement(std::string_view s) {
    for (auto k : {Statement::admissibility, Statement::disjointness, Statement::residue,
                   Statement::nonarithmeticity, Statement::trace_ring, Statement::separation,
                   Statement::volume_bound, Statement::quadfield_integrality})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown certificate statement '" + std::string(s) + "'");
}

inline Verdict parse_verdict(std::string_view s) {
    for (auto v : {Verdict::verified, Verdict::inconclusive, Verdict::failed})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

struct Certificate {
    Statement statement{};
    Verdict verdict = Verdict::inconclusive;
    /// Insertion-ordered so serialized output is deterministic.
    std::vector<std::pair<std::string, QuadFieldElement>> witnesses;
    std::vector<std::string> method_tags;
    std::string note;

    Certificate() = default;
    explicit Certificate(Statement s) : statement(s) {}

    Certificate& witness(std::string name, QuadFieldElement value) {
        witnesses.emplace_back(std::move(name), std::move(value));
        return *this;
    }

    Certificate& tag(std::string t) {
        method_tags.push_back(std::move(t));
        return *this;
    }

    bool has(std::string_view name) const {
        return std::any_of(witnesses.begin(), witnesses.end(), [&](const auto& w) { return w.first == name; });
    }

    const QuadFieldElement& at(std::string_view name) const {
        for (const auto& [k, v] : witnesses)
            if (k == name) return v;
        throw std::out_of_range("certificate " + std::string(to_string(statement)) + " has no witness '" +
                                std::string(name) + "'");
    }

    bool verified() const { return verdict == Verdict::verified; }
};

} // namespace cutglue
