#pragma once

#include <stdexcept>
#include <string>

namespace gsp4 {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input violates a documented invariant (non-prime modulus, illegal flag, bad level, ...).
struct validation_error : error {
    using error::error;
};

/// Lattice or Harish-Chandra parity constraint violated (a+b = c mod 2, m1+m2 = w+1 mod 2).
struct parity_error : validation_error {
    using validation_error::validation_error;
};

/// Character/twist pair falls outside the closed-form dimension tables;
/// the caller must use the peu/tres or unramified/ramified branches instead.
struct exceptional_case : error {
    using error::error;
};

/// Torsion order requested for the trivial twist (the invariants degenerate to E/O).
struct infinite_torsion : error {
    using error::error;
};

/// Weight lies outside the validated reduction range (upper alcoves, walls).
struct unsupported_weight : error {
    using error::error;
};

/// Search window exhausted without a witness.
struct window_too_small : error {
    using error::error;
};

/// Input document could not be parsed; carries a 1-based line number when known.
struct parse_error : error {
    explicit parse_error(const std::string& msg, int line_no = 0)
        : error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line;
};

}  // namespace gsp4
