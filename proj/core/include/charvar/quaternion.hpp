#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/character_variety.hpp"
#include "charvar/cyclo.hpp"

namespace charvar {

/// Unit quaternion a + b i + c j + d k over CycloReal, modeling an SU(2)
/// element in the standard 2x2 matrix identification.
struct Quaternion {
  CycloReal a, b, c, d;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion q_mul(const Quaternion& p, const Quaternion& q);
Quaternion q_inv(const Quaternion& q);  // conjugate; inverse for unit norm
CycloReal q_trace(const Quaternion& q); // 2a, the matrix trace
CycloReal q_norm_sq(const Quaternion& q);

Quaternion q_one();

/// Exact generators: <T,U> is the binary octahedral group C (order 48),
/// <A,B> the binary icosahedral group D (order 120), with
/// r = (sqrt5 + 1)/4 and s = (sqrt5 - 1)/4.
struct Generators {
  Quaternion T, U, A, B;
  CycloReal r, s;
};
const Generators& generators();

/// A finite subgroup enumerated by exact closure.
struct GroupTable {
  std::vector<Quaternion> elements;
  std::int64_t conductor;  // common field of all components
};

/// Breadth-first closure under multiplication with exact canonical-form
/// hashing. Throws if more than `cap` elements appear.
GroupTable group_closure(const std::vector<Quaternion>& gens, std::size_t cap);

/// Evaluates words over {A,B,T,U}: juxtaposed letters, `^` integer exponents,
/// parenthesized groups, e.g. "A^3 B^8", "ABAA", "(AABA)^-1".
Quaternion word_eval(std::string_view word);

/// Global coordinates of the pair (g, h): (tr g, tr h, tr gh).
ExactPoint rep_triple(const Quaternion& g, const Quaternion& h);

struct Table1Row {
  std::string x_word, y_word;
  ExactPoint triple;
  CycloReal k;
};

/// The nine published C / D representation classes with their defining words.
const std::vector<Table1Row>& table1_rows();

/// S-canonical forms (with sign changes; -I lies in both C and D) of the
/// Table 1 triples.
const std::vector<ExactPoint>& table1_canonical_classes();

struct Table1Report {
  struct Row {
    std::string x_word, y_word;
    ExactPoint computed;
    bool triple_matches;  // up to S-equivalence
    bool k_matches;       // exact
  };
  std::vector<Row> rows;
  bool all_pass;
};

/// Evaluates every row's words and checks triple (up to S-equivalence) and k.
Table1Report verify_table1();

/// All rep_triple(g, h) over ordered pairs of the table, S-canonicalized and
/// deduplicated.
std::vector<ExactPoint> enumerate_rep_classes(const GroupTable& table);

}  // namespace charvar
