#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qpw {

using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy.  Everything the library throws derives from Error so the
// CLI can map failures to exit code 1 uniformly.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByNonUnit : Error {
    explicit DivisionByNonUnit(const std::string& m) : Error("division by non-unit: " + m) {}
};
struct NonSquareConstantTerm : Error {
    explicit NonSquareConstantTerm(const std::string& m) : Error("non-square constant term: " + m) {}
};
struct SingularLift : Error {
    explicit SingularLift(const std::string& m) : Error("singular lift: " + m) {}
};
struct FactorizationModTFailed : Error {
    explicit FactorizationModTFailed(const std::string& m) : Error("factorization mod t failed: " + m) {}
};
struct SeriesOrderError : Error {
    explicit SeriesOrderError(const std::string& m) : Error("series order violation: " + m) {}
};
struct SpanExceeded : Error {
    explicit SpanExceeded(const std::string& m) : Error("Laurent span exceeded: " + m) {}
};
struct UnknownModel : Error {
    explicit UnknownModel(const std::string& m) : Error("unknown model: " + m) {}
};
struct GroupOrderExceedsCap : Error {
    explicit GroupOrderExceedsCap(const std::string& m) : Error("group closure cap exceeded: " + m) {}
};
struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& m) : Error("identity violation: " + m) {}
};
struct SpecializationSingular : Error {
    explicit SpecializationSingular(const std::string& m) : Error("singular specialization: " + m) {}
};
struct NonCancellingPole : Error {
    explicit NonCancellingPole(const std::string& m) : Error("non-cancelling pole in t: " + m) {}
};
struct BranchSelectionFailed : Error {
    explicit BranchSelectionFailed(const std::string& m) : Error("branch selection failed: " + m) {}
};
struct ExpansionDirectionInvalid : Error {
    explicit ExpansionDirectionInvalid(const std::string& m) : Error("invalid expansion direction: " + m) {}
};
struct InsufficientData : Error {
    explicit InsufficientData(const std::string& m) : Error("insufficient series data: " + m) {}
};

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

// Parse "p/q" or "p" into a canonical rational.  Throws Error on malformed
// input or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("malformed rational literal: " + s);
    if (sgn(q.get_den()) == 0) throw Error("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Exact integer square root; returns false if x is not a perfect square.
inline bool exact_sqrt(const Int& x, Int& root) {
    if (sgn(x) < 0) return false;
    mpz_class r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
    if (sgn(rem) != 0) return false;
    root = r;
    return true;
}

// Exact rational square root; throws NonSquareConstantTerm if x is not the
// square of a rational.
inline Rat exact_sqrt(const Rat& x) {
    Int n, d;
    if (!exact_sqrt(Int(x.get_num()), n) || !exact_sqrt(Int(x.get_den()), d))
        throw NonSquareConstantTerm(to_string(x));
    Rat r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace qpw
