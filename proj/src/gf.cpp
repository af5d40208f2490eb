#include "ic/gf.hpp"

#include <cassert>
#include <cstdio>
#include <sstream>

#include "ic/error.hpp"

namespace ic {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

FpElem::FpElem(uint64_t v, uint64_t p) : val(v % p), mod(p) {
  assert(p >= 2);
}

FpElem FpElem::operator+(FpElem o) const {
  assert(mod == o.mod);
  uint64_t s = val + o.val;
  if (s >= mod) s -= mod;
  return {s, mod};
}

FpElem FpElem::operator-(FpElem o) const {
  assert(mod == o.mod);
  return {val >= o.val ? val - o.val : val + mod - o.val, mod};
}

FpElem FpElem::operator*(FpElem o) const {
  assert(mod == o.mod);
  return {mulmod(val, o.val, mod), mod};
}

FpElem FpElem::operator-() const {
  return {val == 0 ? 0 : mod - val, mod};
}

FpElem FpElem::inv() const {
  assert(val != 0);
  // p prime, so a^(p-2) is the inverse.
  return {powmod(val, mod - 2, mod), mod};
}

FpElem FpElem::operator/(FpElem o) const {
  assert(mod == o.mod);
  return *this * o.inv();
}

FieldMatrix::FieldMatrix(int rows, int cols, uint64_t q)
    : rows_(rows), cols_(cols), q_(q), vals_(static_cast<size_t>(rows) * cols, 0) {
  assert(rows >= 0 && cols >= 0 && q >= 2);
}

FieldMatrix FieldMatrix::from_rows(uint64_t q, const std::vector<std::vector<uint64_t>>& rows) {
  int r = static_cast<int>(rows.size());
  int m = r == 0 ? 0 : static_cast<int>(rows[0].size());
  FieldMatrix out(r, m, q);
  for (int k = 1; k <= r; ++k) {
    if (static_cast<int>(rows[k - 1].size()) != m)
      throw Error("from_rows: ragged row " + std::to_string(k));
    for (int i = 1; i <= m; ++i) out.set(k, i, rows[k - 1][i - 1]);
  }
  return out;
}

uint64_t FieldMatrix::get(int k, int i) const {
  assert(k >= 1 && k <= rows_ && i >= 1 && i <= cols_);
  return vals_[static_cast<size_t>(k - 1) * cols_ + (i - 1)];
}

FpElem FieldMatrix::at(int k, int i) const { return {get(k, i), q_}; }

void FieldMatrix::set(int k, int i, uint64_t v) {
  assert(k >= 1 && k <= rows_ && i >= 1 && i <= cols_);
  vals_[static_cast<size_t>(k - 1) * cols_ + (i - 1)] = v % q_;
}

FieldMatrix FieldMatrix::submatrix(const IndexSet& row_set, const IndexSet& col_set) const {
  FieldMatrix out(static_cast<int>(row_set.size()), static_cast<int>(col_set.size()), q_);
  for (size_t a = 0; a < row_set.size(); ++a)
    for (size_t b = 0; b < col_set.size(); ++b)
      out.set(static_cast<int>(a) + 1, static_cast<int>(b) + 1, get(row_set[a], col_set[b]));
  return out;
}

FieldMatrix FieldMatrix::columns(const IndexSet& col_set) const {
  return submatrix(range_set(rows_), col_set);
}

FieldMatrix FieldMatrix::row_prefix(int k) const {
  assert(k >= 0 && k <= rows_);
  return submatrix(range_set(k), range_set(cols_));
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(cols_, rows_, q_);
  for (int k = 1; k <= rows_; ++k)
    for (int i = 1; i <= cols_; ++i) out.set(i, k, get(k, i));
  return out;
}

std::string FieldMatrix::to_text() const {
  std::ostringstream out;
  out << "q=" << q_ << " r=" << rows_ << " m=" << cols_ << "\n";
  for (int k = 1; k <= rows_; ++k) {
    for (int i = 1; i <= cols_; ++i) {
      if (i > 1) out << ' ';
      out << get(k, i);
    }
    out << "\n";
  }
  return out.str();
}

FieldMatrix FieldMatrix::parse_text(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw Error("matrix parse: missing header");
  uint64_t q = 0;
  int r = -1, m = -1;
  if (std::sscanf(header.c_str(), "q=%lu r=%d m=%d", &q, &r, &m) != 3)
    throw Error("matrix parse: bad header '" + header + "' (want \"q=<p> r=<r> m=<m>\")");
  if (!is_prime(q)) throw Error("matrix parse: q=" + std::to_string(q) + " is not prime");
  if (r < 0 || m < 0) throw Error("matrix parse: negative dimensions");
  FieldMatrix out(r, m, q);
  for (int k = 1; k <= r; ++k) {
    std::string line;
    if (!std::getline(in, line)) throw Error("matrix parse: missing row " + std::to_string(k));
    std::istringstream ls(line);
    for (int i = 1; i <= m; ++i) {
      uint64_t v;
      if (!(ls >> v))
        throw Error("matrix parse: row " + std::to_string(k) + " has fewer than " +
                    std::to_string(m) + " entries");
      if (v >= q)
        throw Error("matrix parse: entry " + std::to_string(v) + " out of range for q=" +
                    std::to_string(q));
      out.set(k, i, v);
    }
    uint64_t extra;
    if (ls >> extra) throw Error("matrix parse: row " + std::to_string(k) + " has extra entries");
  }
  return out;
}

FieldMatrix FieldMatrix::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_text(in);
}

RrefResult rref(const FieldMatrix& a) {
  FieldMatrix m = a;
  IndexSet pivots;
  int pivot_row = 1;
  for (int col = 1; col <= m.cols() && pivot_row <= m.rows(); ++col) {
    int found = 0;
    for (int k = pivot_row; k <= m.rows(); ++k) {
      if (m.get(k, col) != 0) {
        found = k;
        break;
      }
    }
    if (!found) continue;
    if (found != pivot_row) {
      for (int i = 1; i <= m.cols(); ++i) {
        uint64_t t = m.get(pivot_row, i);
        m.set(pivot_row, i, m.get(found, i));
        m.set(found, i, t);
      }
    }
    FpElem scale = m.at(pivot_row, col).inv();
    for (int i = 1; i <= m.cols(); ++i) m.set(pivot_row, i, (m.at(pivot_row, i) * scale).val);
    for (int k = 1; k <= m.rows(); ++k) {
      if (k == pivot_row || m.get(k, col) == 0) continue;
      FpElem factor = m.at(k, col);
      for (int i = 1; i <= m.cols(); ++i)
        m.set(k, i, (m.at(k, i) - factor * m.at(pivot_row, i)).val);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const FieldMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return static_cast<int>(rref(a).pivots.size());
}

std::optional<std::vector<FpElem>> solve_dependency(const FieldMatrix& basis_cols,
                                                    const FieldMatrix& target) {
  assert(basis_cols.rows() == target.rows() && target.cols() == 1);
  assert(basis_cols.modulus() == target.modulus());
  int n = basis_cols.rows();
  int s = basis_cols.cols();
  FieldMatrix aug(n, s + 1, basis_cols.modulus());
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= s; ++i) aug.set(k, i, basis_cols.get(k, i));
    aug.set(k, s + 1, target.get(k, 1));
  }
  RrefResult rr = rref(aug);
  bool inconsistent = !rr.pivots.empty() && rr.pivots.back() == s + 1;
  if (inconsistent) return std::nullopt;
  int rank_a = static_cast<int>(rr.pivots.size());
  if (rank_a < s)
    throw Error("solve_dependency: multiple solutions (given columns are dependent; not a circuit)");
  // Columns independent and system consistent: read f off the rref.
  std::vector<FpElem> f(s, FpElem(0, basis_cols.modulus()));
  for (int row = 1; row <= rank_a; ++row) f[rr.pivots[row - 1] - 1] = rr.mat.at(row, s + 1);
  return f;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit with the standard 12-base set.
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t next_prime_at_least(uint64_t n) {
  if (n <= 2) return 2;
  uint64_t c = n | 1;  // primes past 2 are odd
  while (!is_prime(c)) c += 2;
  return c;
}

}  // namespace ic
