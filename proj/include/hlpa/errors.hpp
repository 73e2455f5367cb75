#pragma once

#include <stdexcept>
#include <string>

namespace hlpa {

/// Input or domain error (bad file, bad expression, invariant violation).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error with position information.
class ParseError : public DomainError {
public:
    ParseError(const std::string& what, int line, int column)
        : DomainError("line " + std::to_string(line) + ", col " + std::to_string(column) +
                      ": " + what),
          line(line), column(column) {}
    int line;
    int column;
};

/// Thrown when a rewrite/search exceeds its step budget (HLPA_MAX_STEPS).
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("budget exhausted") {}
};

/// Step budget shared by the rewrite engine and the search procedures.
/// The default limit is read from the HLPA_MAX_STEPS environment variable
/// (1e7 when unset).
class Budget {
public:
    Budget();
    explicit Budget(unsigned long long limit) : limit_(limit) {}

    void tick(unsigned long long n = 1) {
        used_ += n;
        if (used_ > limit_) throw BudgetExhausted();
    }
    unsigned long long used() const { return used_; }
    unsigned long long limit() const { return limit_; }

private:
    unsigned long long limit_;
    unsigned long long used_ = 0;
};

}  // namespace hlpa
