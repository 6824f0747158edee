#pragma once

#include <stdexcept>
#include <string>

namespace bundle_arith {

/// Input outside an operation's domain (mismatched Chern data, odd c1 where
/// an even one is required, infeasible identity, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// The extendable-bundle alpha formula does not cover the given class.
/// Kept apart from DomainError: the input is a valid class, the formula just
/// has nothing to say about it.
class FormulaNotApplicable : public std::domain_error {
public:
    explicit FormulaNotApplicable(const std::string& what) : std::domain_error(what) {}
};

/// A computed result contradicts a structural claim the library relies on
/// (e.g. the feasible c3 values do not form a truncated subgroup).
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Caller misuse independent of the mathematics (mismatched series caps, ...).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bundle_arith
