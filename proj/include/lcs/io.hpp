#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lcs/decomposition.hpp"
#include "lcs/equivalence.hpp"
#include "lcs/system.hpp"

namespace lcs {

// Token-level failure; carries the 1-based source position.
struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
          line(line_), col(col_) {}
};

// Structurally well-formed input with impossible dimensions (n < 1, m < 0,
// or cross-object shape conflicts).
struct DimensionError : Error {
    using Error::Error;
};

struct ParseOptions {
    // When set, decimal literals are converted exactly (d.ddd -> p/10^k) and
    // rejected if the reduced denominator exceeds this bound; when unset any
    // decimal literal is a parse error.
    std::optional<long> rationalize_max_den;
};

// System file: "n <int>", "m <int>", "A" followed by n*n rational entries,
// then "B" and n*m entries (the B section may be omitted when m is 0).
// '#' starts a comment; whitespace and newlines are interchangeable.
ControlSystem parse_system(const std::string& text, const ParseOptions& opts = {});
std::string serialize_system(const ControlSystem& sys);

// Witness file: "n", "m", then O (n*n), Q (m*m), L (m*n).
FeedbackWitness parse_witness(const std::string& text, const ParseOptions& opts = {});
std::string serialize_witness(const FeedbackWitness& w);

// Canonical-form file: n, m, k, p (m integers), C, D, M, then the witness
// sections O, Q, L.
struct CanonicalFile {
    int n = 0;
    int m = 0;
    CanonicalForm form;
};
CanonicalFile parse_canonical(const std::string& text, const ParseOptions& opts = {});
std::string serialize_canonical(const CanonicalForm& cf, int n, int m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Deterministic report bodies (byte-identical for identical inputs).
std::string format_poly_list(const std::vector<RationalPoly>& polys);
std::string format_int_seq(const std::vector<int>& xs);
std::string classify_report(const SystemInvariants& inv);
std::string verdict_line(const EquivalenceVerdict& v);

}  // namespace lcs
