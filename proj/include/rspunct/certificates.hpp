#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rspunct/oracles.hpp"
#include "rspunct/rational.hpp"
#include "rspunct/rs_code.hpp"

namespace rspunct::certs {

// The index family of a bad-puncturing certificate: L+1 subsets of
// [l] x [n], stored 0-based and sorted. When the list matrix has distinct
// column entries, no two members of one set share a column index.
struct IndexFamily {
  std::vector<std::vector<std::pair<int, int>>> sets;

  void normalize();  // sorts each set
  // Sum of set sizes minus the size of the union (the left side of the
  // overlap inequality).
  std::int64_t overlap_excess() const;
  bool column_unique() const;  // the per-set invariant above
  bool operator==(const IndexFamily&) const = default;
};

// An l x n matrix of field symbols, row-major; columns are the candidate
// lists at each punctured coordinate.
struct ListMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint32_t> data;

  static ListMatrix zeros(int rows, int cols);
  std::uint32_t at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  std::uint32_t& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  bool column_distinct() const;
  bool operator==(const ListMatrix&) const = default;
};

// A bad-puncturing certificate: the puncturing tuple a, the index family,
// the list matrix S, the L+1 parent codewords gamma_k it refers to, and the
// constants (c, h) of the overlap inequality. Valid iff
//   (1) sum |I_k| - |union I_k| > c*h*L   (exact rational comparison),
//   (2) S has pairwise-distinct entries in every column,
//   (3) I_k = {(i,j) : gamma_k[a_j] = S_ij} for every k.
struct Certificate {
  std::vector<std::uint32_t> a;  // 1-based positions into the parent code
  IndexFamily family;
  ListMatrix S;
  std::vector<Codeword> gammas;  // parent-length codewords
  Rational c;
  std::int64_t h = 0;

  int l() const { return S.rows; }
  int L() const { return static_cast<int>(gammas.size()) - 1; }
};

// The exact family defined by the agreement rule (3) above. Requires
// consistent dimensions: S.cols == a.size(), every gamma as long as the
// parent, a entries in [1, parent length].
IndexFamily derive_family(const std::vector<std::uint32_t>& a, const ListMatrix& S,
                          const std::vector<Codeword>& gammas);

struct CheckResult {
  bool valid = false;
  int first_violated = 0;  // 1, 2, or 3; 0 when valid
};

// Validates conditions (1)-(3) in order and reports the first violation.
// Structural problems (wrong dimensions, gammas not codewords of `parent`,
// duplicate gammas, h inconsistent with the parent's distance defect) are
// errors (std::invalid_argument), distinct from "certificate invalid".
CheckResult check_certificate_detailed(const Certificate& cert, const RSCode& parent);
bool check_certificate(const Certificate& cert, const RSCode& parent);

// The translate of a certificate by a parent codeword v: v's punctured
// values are added to every row of S and v to every gamma; the family is
// unchanged. The result is valid iff the input is.
Certificate shift_certificate(const Certificate& cert, const Codeword& v, const RSCode& parent);

// The column-wise agreement-maximizing list matrix for a fixed puncturing
// and offender set: per column, the l most frequent symbols among
// {gamma_k[a_j]} (ties broken toward smaller symbols), padded with the
// smallest unused symbols. Maximizes the overlap-excess left side over all
// column-distinct matrices.
ListMatrix canonical_matrix(const PrimeField& field, const std::vector<std::uint32_t>& a,
                            const std::vector<const Codeword*>& gammas, int l);

struct CountResult {
  std::uint64_t bad_count = 0;
  std::uint64_t tuples = 0;               // distinct n-tuples scanned
  std::optional<double> theorem_bound;    // 2^((L+1)*l*n) * q^(-alpha*h) * m^n
  std::vector<std::string> regime_notes;  // why the bound is absent / caveats
};

// Exhaustively counts the n-tuples a (ordered, distinct entries over the
// parent coordinates) that admit any valid certificate with the given
// (l, L, c), using the canonical matrix per (tuple, offender subset). h is
// taken from the parent (length minus brute-force minimum distance).
CountResult count_bad_puncturings(const RSCode& parent, std::uint32_t n, int l, int L,
                                  const Rational& c,
                                  const oracles::SearchOptions& opts = {});

}  // namespace rspunct::certs
