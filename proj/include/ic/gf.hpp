#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ic/sets.hpp"

namespace ic {

// Element of a prime field GF(p). Carries its modulus so that mixing fields
// faults loudly instead of silently producing garbage. p must be prime and
// fit in 63 bits; primality is the constructor caller's responsibility
// (checked where elements enter from the outside world).
struct FpElem {
  uint64_t val = 0;
  uint64_t mod = 2;

  FpElem() = default;
  FpElem(uint64_t v, uint64_t p);

  FpElem operator+(FpElem o) const;
  FpElem operator-(FpElem o) const;
  FpElem operator*(FpElem o) const;
  FpElem operator/(FpElem o) const;
  FpElem operator-() const;
  FpElem inv() const;  // multiplicative inverse; val must be nonzero
  bool operator==(const FpElem& o) const = default;
  bool is_zero() const { return val == 0; }
};

// Dense matrix over GF(q), q prime. Rows and columns are addressed 1-based,
// matching every other index in this library. Immutable-by-convention:
// algorithms build a matrix and then only read it.
class FieldMatrix {
 public:
  FieldMatrix(int rows, int cols, uint64_t q);  // zero-filled
  static FieldMatrix from_rows(uint64_t q, const std::vector<std::vector<uint64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint64_t modulus() const { return q_; }

  uint64_t get(int k, int i) const;
  FpElem at(int k, int i) const;
  void set(int k, int i, uint64_t v);

  // Submatrix by explicit row/column id sets (ascending, 1-based). Empty sets
  // yield 0-dimensional matrices, which rank() handles (rank 0).
  FieldMatrix submatrix(const IndexSet& row_set, const IndexSet& col_set) const;
  FieldMatrix columns(const IndexSet& col_set) const;  // all rows
  FieldMatrix row_prefix(int k) const;                 // rows 1..k
  FieldMatrix transpose() const;

  bool operator==(const FieldMatrix& o) const = default;

  // Text format: header "q=<p> r=<r> m=<m>", then r lines of m integers.
  std::string to_text() const;
  static FieldMatrix parse_text(std::istream& in);
  static FieldMatrix parse_text(const std::string& text);

 private:
  int rows_ = 0;
  int cols_ = 0;
  uint64_t q_ = 2;
  std::vector<uint64_t> vals_;  // row-major
};

struct RrefResult {
  FieldMatrix mat;
  IndexSet pivots;  // pivot column ids, strictly increasing
};

// Reduced row echelon form. Deterministic: pivots are chosen in column order,
// taking the first row with a nonzero entry (no magnitude heuristics; they
// mean nothing over GF(p)).
RrefResult rref(const FieldMatrix& a);

int rank(const FieldMatrix& a);

// Solves basis_cols * f = target for f, where basis_cols is n x s and target
// is n x 1. Returns nullopt when the system is inconsistent (target is
// independent of the given columns). Throws Error when the solution is not
// unique: callers use this on circuits, where f is unique with all entries
// nonzero, so multiple solutions mean the caller's set was not a circuit.
std::optional<std::vector<FpElem>> solve_dependency(const FieldMatrix& basis_cols,
                                                    const FieldMatrix& target);

bool is_prime(uint64_t n);
uint64_t next_prime_at_least(uint64_t n);

}  // namespace ic
