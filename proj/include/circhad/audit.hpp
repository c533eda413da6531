// Mechanical replay of the identity chain that links a circulant Hadamard
// matrix H of order n = 4h^2 to the doubly stochastic S = (H+J)/(n+sqrt(n)):
//
//   acheS   H  = 2h(2h+1) S  - J
//   acheStar H* = 2h(2h+1) S* - J
//   defH    n I = H H*
//   SJ      S J  = J          SstarJ   S* J = J          JJ   J^2 = n J
//   C1      4h^2 I = 4h^2(2h+1)^2 S S* - 2h(2h+1)(S+S*) J + 4h^2 J
//   C2      4h I   = 4h(2h+1)^2 S S*   - 4(2h+1) J       + 4h J
//   C3      entrywise reduction of C2 modulo h, split into an integrality
//           precondition on 4h(2h+1)^2 S S* and the congruence 0 = -4J (mod h)
//   C4      h | 4
//   C5      h = 1
//
// Every check is an exact rational computation on a concrete instance; the
// auditor records per-step verdicts and never claims anything beyond them.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circhad/circulant.hpp"
#include "circhad/sign_vector.hpp"

namespace circhad {

enum class AuditStepId {
    AcheS,
    AcheStar,
    DefH,
    SJ,
    SstarJ,
    JJ,
    C1,
    C2,
    C3Integrality,
    C3Congruence,
    C4,
    C5,
};

enum class AuditVerdict {
    HoldsExactly,
    IntegralitySatisfied,
    IntegralityViolated,
    Fails,
};

// Reduction of a rational matrix modulo h is only literally defined for
// integer entries (Strict). Extended additionally interprets p/q mod h as
// p * q^{-1} mod h when gcd(q, h) = 1.
enum class CongruenceMode { Strict, Extended };

struct AuditStep {
    AuditStepId id;
    AuditVerdict verdict;
    // First violating entry (position and both values); present exactly when
    // the verdict is Fails or IntegralityViolated.
    std::optional<std::string> witness;
};

struct AuditReport {
    SignVector input_row;  // empty for synthetic audits
    std::uint32_t h = 1;
    CongruenceMode mode = CongruenceMode::Strict;
    std::vector<AuditStep> steps;  // in derivation order
    std::string conclusion;
    // Set for synthetic audits: the supplied S' first row.
    std::optional<std::vector<Rational>> synthetic_s;
};

const char* to_string(AuditStepId id);
const char* to_string(AuditVerdict v);

// Verifies acheS (and its transposed form acheStar) for a normalized
// Hadamard row. Returns the acheS step; a failure in either form fails it.
AuditStep check_reconstruction(const SignVector& row);

// Verifies C1 as an exact identity.
AuditStep check_c1(const SignVector& row);

// Verifies C2 as an exact identity.
AuditStep check_c2(const SignVector& row);

// Returns the C3-integrality, C3-congruence, C4 and C5 steps.
std::vector<AuditStep> check_modular_step(const SignVector& row,
                                          CongruenceMode mode = CongruenceMode::Strict);

// Runs the whole chain in derivation order, short-circuiting nothing.
// Requires is_hadamard(normalize_sign(row)); throws PreconditionError
// otherwise.
AuditReport full_audit(const SignVector& row, CongruenceMode mode = CongruenceMode::Strict);

// What-if audit: runs the same chain on a supplied rational circulant S'
// with a declared h, defining H' := 2h(2h+1) S' - J. Only h = 1 instances
// exist among genuine Hadamard rows, so this is how the modular-reduction
// paths get exercised at h > 1.
AuditReport full_audit_synthetic(const CirculantMatrix& s, std::uint32_t h,
                                 CongruenceMode mode = CongruenceMode::Strict);

}  // namespace circhad
