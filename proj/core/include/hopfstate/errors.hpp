#pragma once

/*
 * Error taxonomy for the Hopf-algebra engine.
 *
 * Every failure mode named in the module contracts maps to one exception type
 * here.  The CLI translates these into its exit-code classes:
 *   parse = 2, axiom = 3, budget = 4, residual = 5.
 */

#include <stdexcept>
#include <string>

namespace hopfstate {

// Base class for every library error.
class HopfError : public std::runtime_error {
public:
    explicit HopfError(const std::string& msg) : std::runtime_error(msg) {}
};

// A named Hopf/C* axiom failed with the given max residual.
class AxiomViolation : public HopfError {
public:
    AxiomViolation(const std::string& axiom, double residual)
        : HopfError("axiom violation: " + axiom +
                    " (max residual " + std::to_string(residual) + ")"),
          axiom_name(axiom), max_residual(residual) {}
    std::string axiom_name;
    double max_residual;
};

// Tensor/vector shapes disagree with the algebra dimension.
class DimensionMismatch : public HopfError {
public:
    explicit DimensionMismatch(const std::string& what)
        : HopfError("dimension mismatch: " + what) {}
};

// The two-sided-integral constraint system has an empty nullspace.
class NoIntegral : public HopfError {
public:
    explicit NoIntegral(const std::string& what)
        : HopfError("no Haar integral: " + what) {}
};

// The two-sided-integral nullspace has dimension > 1 (non-semisimple or
// corrupted input).
class NonUniqueIntegral : public HopfError {
public:
    explicit NonUniqueIntegral(const std::string& what)
        : HopfError("non-unique Haar integral: " + what) {}
};

// Irrep list does not satisfy sum d^2 = dim.
class DecompositionIncomplete : public HopfError {
public:
    explicit DecompositionIncomplete(const std::string& what)
        : HopfError("irrep decomposition incomplete: " + what) {}
};

// A fusion multiplicity failed the integer-rounding test.
class NonIntegerMultiplicity : public HopfError {
public:
    explicit NonIntegerMultiplicity(const std::string& what)
        : HopfError("non-integer fusion multiplicity: " + what) {}
};

// Fusion-basis Gram matrix deviates from the identity.
class GramDefect : public HopfError {
public:
    explicit GramDefect(double deviation)
        : HopfError("fusion basis Gram defect: max deviation " +
                    std::to_string(deviation)),
          max_deviation(deviation) {}
    double max_deviation;
};

// An operator was aimed at a site whose dimension does not match.
class SiteMismatch : public HopfError {
public:
    explicit SiteMismatch(const std::string& what)
        : HopfError("site mismatch: " + what) {}
};

// A three-site chain term was centered on a site of the wrong parity.
class SiteParity : public HopfError {
public:
    explicit SiteParity(const std::string& what)
        : HopfError("site parity: " + what) {}
};

// Requested state exceeds the configured amplitude budget.
class MemoryBudgetExceeded : public HopfError {
public:
    MemoryBudgetExceeded(std::size_t requested, std::size_t budget)
        : HopfError("memory budget exceeded: " + std::to_string(requested) +
                    " amplitudes requested, budget " + std::to_string(budget)),
          requested_amps(requested), budget_amps(budget) {}
    std::size_t requested_amps;
    std::size_t budget_amps;
};

// Tensor-network contraction would materialize an intermediate over budget.
class ContractionBudgetExceeded : public MemoryBudgetExceeded {
public:
    using MemoryBudgetExceeded::MemoryBudgetExceeded;
};

// Cluster-graph edge joins two vertices of the same parity class.
class NotBipartite : public HopfError {
public:
    explicit NotBipartite(const std::string& what)
        : HopfError("not bipartite: " + what) {}
};

// Chain/lattice size parameters are invalid (e.g. periodic with L < 2).
class InvalidSize : public HopfError {
public:
    explicit InvalidSize(const std::string& what)
        : HopfError("invalid size: " + what) {}
};

// Vertex id not present in the graph.
class UnknownVertex : public HopfError {
public:
    explicit UnknownVertex(const std::string& what)
        : HopfError("unknown vertex: " + what) {}
};

// Hyperedge functional arity does not match the hyperedge size.
class ArityMismatch : public HopfError {
public:
    explicit ArityMismatch(const std::string& what)
        : HopfError("arity mismatch: " + what) {}
};

// Undirected hyperedge carries a non-symmetric functional.
class AsymmetricFunctional : public HopfError {
public:
    explicit AsymmetricFunctional(const std::string& what)
        : HopfError("asymmetric functional on undirected hyperedge: " + what) {}
};

// Multiplication table fails the group axioms.
class NotAGroup : public HopfError {
public:
    explicit NotAGroup(const std::string& what)
        : HopfError("not a group: " + what) {}
};

// File could not be parsed into the expected document shape.
class ParseError : public HopfError {
public:
    explicit ParseError(const std::string& what)
        : HopfError("parse error: " + what) {}
};

}  // namespace hopfstate
