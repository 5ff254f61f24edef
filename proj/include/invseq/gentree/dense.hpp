#pragma once

// Array forms of the succession rules. Each counter keeps the census of one
// level as a dense table indexed by the label parameters and applies the rule
// with prefix and suffix sums, so a level costs O(n^2) big-integer additions
// rather than one expansion per label. They must agree with the generic
// census engine, which the tests check.

#include <vector>

#include "invseq/combinat.hpp"
#include "invseq/gentree/class_id.hpp"
#include "invseq/numeric.hpp"

namespace invseq::gentree::dense {

using Vec = std::vector<Integer>;
using Grid = std::vector<Vec>;

inline Grid grid(std::size_t n) { return Grid(n, Vec(n, 0)); }

inline Integer sum(const Vec& v) {
  Integer s = 0;
  for (const auto& x : v) s += x;
  return s;
}

enum class RightVariant { plain, dagger, star };

// a[h]: (n,h)_a. b, c, d, e indexed by the committed value.
inline std::vector<Integer> count_right_family(RightVariant v, int n_max) {
  std::vector<Integer> out{1};
  Vec A{1}, B{0}, C{0}, D{0}, E{0};
  for (int n = 0; n < n_max; ++n) {
    const auto sz = static_cast<std::size_t>(n + 1);
    Vec pre(sz), sufA(sz, 0), sufD(sz, 0), sufE(sz, 0);
    Integer run = 0;
    for (std::size_t i = 0; i < sz; ++i) pre[i] = (run += A[i]);
    for (std::size_t i = sz - 1; i-- > 0;) {
      sufA[i] = sufA[i + 1] + A[i + 1];
      sufD[i] = sufD[i + 1] + D[i + 1];
      sufE[i] = sufE[i + 1] + E[i + 1];
    }
    Vec A2(sz + 1, 0), B2(sz + 1, 0), C2(sz + 1, 0), D2(sz + 1, 0), E2(sz + 1, 0);
    for (std::size_t i = 0; i < sz; ++i) {
      A2[i] = pre[i];
      B2[i] = B[i] + static_cast<long>(n - static_cast<int>(i)) * pre[i];
      switch (v) {
        case RightVariant::plain:
          C2[i] = B[i];
          D2[i] = D[i] + C[i];
          E2[i] = sufA[i] + sufD[i] + sufE[i];
          break;
        case RightVariant::dagger:
          C2[i] = B[i] + C[i];
          D2[i] = 2 * D[i] + C[i];
          E2[i] = sufA[i] + E[i];
          break;
        case RightVariant::star:
          C2[i] = B[i];
          D2[i] = D[i] + C[i];
          E2[i] = sufA[i];
          break;
      }
    }
    A = std::move(A2), B = std::move(B2), C = std::move(C2), D = std::move(D2), E = std::move(E2);
    out.push_back(sum(A) + sum(D) + sum(E));
  }
  return out;
}

// Zeroes the leading sz x sz block; limb storage is kept for reuse.
inline void clear(Grid& g, std::size_t sz) {
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) g[i][j] = 0;
}

// S[h][k], T[h][k] for labels (n,h,k).
inline std::vector<Integer> count_830(int n_max) {
  std::vector<Integer> out{1};
  const auto cap = static_cast<std::size_t>(n_max + 2);
  Grid S = grid(cap), T = grid(cap), S2 = grid(cap), T2 = grid(cap);
  S[0][0] = 1;
  Integer both, row, preS, preT;
  for (int n = 0; n < n_max; ++n) {
    const auto sz = static_cast<std::size_t>(n + 1);
    clear(S2, sz + 1);
    clear(T2, sz + 1);
    for (std::size_t h = 0; h < sz; ++h) {
      row = 0, preS = 0, preT = 0;
      for (std::size_t k = 0; k < sz; ++k) {
        both = S[h][k] + T[h][k];
        S2[h][k] += both;
        row += both;
      }
      // Children t(n+1,h,i): from s with k < i, from t with k <= i; i < h.
      for (std::size_t i = 0; i < h; ++i) {
        preT += T[h][i];
        T2[h][i] = preS + preT;
        preS += S[h][i];
      }
      // Children s(n+1,i,h) for h < i <= n.
      for (std::size_t i = h + 1; i < sz; ++i) S2[i][h] += row;
    }
    std::swap(S, S2), std::swap(T, T2);
    Integer total = 0;
    for (std::size_t h = 0; h <= sz; ++h)
      for (std::size_t k = 0; k <= sz; ++k) total += S[h][k] + T[h][k];
    out.push_back(total);
  }
  return out;
}

// P[h][k], Q[h][k] for labels (n,h,k).
inline std::vector<Integer> count_2106(int n_max) {
  std::vector<Integer> out{1};
  const auto cap = static_cast<std::size_t>(n_max + 2);
  Grid P = grid(cap), Q = grid(cap), P2 = grid(cap), Q2 = grid(cap), DP = grid(cap), DQ = grid(cap);
  P[0][0] = 1;
  Integer suffix;
  for (int n = 0; n < n_max; ++n) {
    const auto sz = static_cast<std::size_t>(n + 1);
    // Diagonal sums DP[i][m] = sum_j P[i-j][m-j], likewise DQ.
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t m = 0; m < sz; ++m) {
        if (i > 0 && m > 0) {
          DP[i][m] = P[i][m] + DP[i - 1][m - 1];
          DQ[i][m] = Q[i][m] + DQ[i - 1][m - 1];
        } else {
          DP[i][m] = P[i][m];
          DQ[i][m] = Q[i][m];
        }
      }
    }
    clear(P2, sz + 1);
    clear(Q2, sz + 1);
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t m = 0; m < sz; ++m) {
        if (i > 0)
          P2[i][m] = DP[i][m] + DQ[i - 1][m];
        else
          P2[i][m] = DP[i][m];
      }
    }
    // q(n+1,h,i) for i < k, from p and q alike.
    for (std::size_t h = 0; h < sz; ++h) {
      suffix = 0;
      for (std::size_t k = sz; k-- > 0;) {
        Q2[h][k] = suffix;
        suffix += P[h][k];
        suffix += Q[h][k];
      }
    }
    std::swap(P, P2), std::swap(Q, Q2);
    Integer total = 0;
    for (std::size_t h = 0; h <= sz; ++h)
      for (std::size_t k = 0; k <= sz; ++k) total += P[h][k] + Q[h][k];
    out.push_back(total);
  }
  return out;
}

// Left-grown classes with plain labels (p,s): X[p][s].
enum class LeftKind { c1833A, c733, c214, c1509, c1953A, c759, c247 };

inline Integer counted(LeftKind kind, const Grid& X, std::size_t sz) {
  Integer total = 0;
  for (std::size_t p = 0; p < sz; ++p) {
    switch (kind) {
      case LeftKind::c1833A:
      case LeftKind::c1953A:
        for (std::size_t s = 0; s < sz; ++s) total += X[p][s];
        break;
      case LeftKind::c733:
      case LeftKind::c759: total += X[p][0]; break;
      case LeftKind::c1509: total += X[p][0] + X[p][1]; break;
      case LeftKind::c214:
      case LeftKind::c247:
        if (p <= 2) total += X[p][0];
        break;
    }
  }
  return total;
}

inline std::vector<Integer> count_left(LeftKind kind, int n_max) {
  std::vector<Integer> out{1};
  // At depth n the labels have p, s <= n; the tables hold one spare row and column.
  const auto cap = static_cast<std::size_t>(n_max + 3);
  Grid X = grid(cap), Y = grid(cap), H = grid(cap);
  Vec R(cap), SR(cap + 1), catalans(cap);
  for (std::size_t b = 0; b < cap; ++b) catalans[b] = combinat::catalan(static_cast<long>(b));
  X[0][0] = 1;
  Integer run;
  for (int n = 0; n < n_max; ++n) {
    const auto sz = static_cast<std::size_t>(n + 2);  // p, s range over [0, sz)
    clear(Y, sz + 1);
    // Shift by a prepended zero.
    for (std::size_t p = 0; p < sz; ++p) {
      if (kind == LeftKind::c1953A) {
        run = 0;  // (p,s) -> (p+1,t) for every t <= s
        for (std::size_t s = sz; s-- > 0;) {
          run += X[p][s];
          Y[p + 1][s] += run;
        }
        continue;
      }
      for (std::size_t s = 0; s < sz; ++s) {
        const Integer& x = X[p][s];
        if (x == 0) continue;
        Y[p + 1][s] += x;
        if (s > 0) {
          if (kind == LeftKind::c1833A || kind == LeftKind::c733)
            Y[p + 1][0] += x;
          else
            Y[p + 1][s - 1] += x;
        }
      }
    }
    // Branching from the zero block: R[p] is the weight that branches.
    R[0] = 0;
    for (std::size_t p = 1; p < sz; ++p) {
      switch (kind) {
        case LeftKind::c1833A:
        case LeftKind::c1953A:
          R[p] = 0;
          for (std::size_t s = 0; s < sz; ++s) R[p] += X[p][s];
          break;
        case LeftKind::c1509: R[p] = X[p][0] + X[p][1]; break;
        default: R[p] = X[p][0]; break;
      }
    }
    SR[sz] = 0;  // SR[m] = sum_{p >= m} R[p]
    for (std::size_t m = sz; m-- > 0;) SR[m] = SR[m + 1] + R[m];
    switch (kind) {
      case LeftKind::c1833A:
      case LeftKind::c733:
      case LeftKind::c1509:
      case LeftKind::c1953A:
        for (std::size_t q = 1; q < sz; ++q)
          for (std::size_t k = 0; q + k < sz; ++k) Y[q][k] += SR[q + k];
        break;
      case LeftKind::c214:
        for (std::size_t p = 1; p < sz; ++p) {
          const Integer& x = R[p];
          if (x == 0) continue;
          for (std::size_t m = 0; m < p; ++m) Y[p - m][m] += x;
          for (std::size_t m = 0; m + 1 < p; ++m) Y[p - m - 1][m] += x;
        }
        break;
      case LeftKind::c759: {
        // H[q][b] = sum_{p >= q} R[p] C(p-q, b), built by Pascal's rule.
        for (std::size_t b = 0; b < sz; ++b) H[sz][b] = 0;
        for (std::size_t q = sz; q-- > 1;) {
          H[q][0] = H[q + 1][0] + R[q];
          for (std::size_t b = 1; b < sz; ++b) H[q][b] = H[q + 1][b] + H[q + 1][b - 1];
        }
        for (std::size_t q = 1; q < sz; ++q)
          for (std::size_t b = 0; q + b < sz; ++b) Y[q][b] += catalans[b] * H[q][b];
        break;
      }
      case LeftKind::c247: {
        // H[m][r] = sum_j C(m,j) R[r+j]; the branch to (q,b) weighs C_b H[b+1][q+b].
        for (std::size_t r = 0; r < sz; ++r) H[0][r] = R[r];
        H[0][sz] = 0;
        for (std::size_t m = 1; m <= sz; ++m) {
          for (std::size_t r = 0; r < sz; ++r) H[m][r] = H[m - 1][r] + H[m - 1][r + 1];
          H[m][sz] = 0;
        }
        for (std::size_t q = 1; q < sz; ++q)
          for (std::size_t b = 0; q + b < sz; ++b) Y[q][b] += catalans[b] * H[b + 1][q + b];
        break;
      }
    }
    std::swap(X, Y);
    out.push_back(counted(kind, X, sz + 1));
  }
  return out;
}

// a[p], b[p] for the two tagged left-grown classes. `b_from_b` selects the
// second class, where b-labels branch like a-labels.
inline std::vector<Integer> count_tagged_left(bool b_from_b, int n_max) {
  std::vector<Integer> out{1};
  Vec A{1, 0}, B{0, 0};
  for (int n = 0; n < n_max; ++n) {
    const std::size_t sz = A.size();
    Vec SR(sz + 1, 0);  // SR[m] = sum over p >= m of the branching weight
    for (std::size_t m = sz; m-- > 0;) SR[m] = SR[m + 1] + A[m] + (b_from_b ? B[m] : Integer(0));
    Vec A2(sz + 1, 0), B2(sz + 1, 0);
    // (p) branches to a(k) for 1 <= k <= p+1 and to b(k) for 1 <= k <= p-1.
    for (std::size_t k = 1; k <= sz; ++k) A2[k] = SR[k - 1];
    for (std::size_t k = 1; k < sz; ++k) B2[k] = SR[k + 1];
    for (std::size_t p = 0; p < sz; ++p) {
      if (!b_from_b) A2[p + 1] += B[p];
      B2[p + 1] += B[p];
    }
    A = std::move(A2), B = std::move(B2);
    out.push_back(b_from_b ? sum(A) + sum(B) : sum(A));
  }
  return out;
}

inline std::vector<Integer> count(ClassId id, int n_max) {
  if (n_max < 0) throw Error("length must be nonnegative");
  std::vector<Integer> out;
  switch (id) {
    case ClassId::c1176: out = count_right_family(RightVariant::plain, n_max); break;
    case ClassId::c1253: out = count_right_family(RightVariant::dagger, n_max); break;
    case ClassId::c1016: out = count_right_family(RightVariant::star, n_max); break;
    case ClassId::c830: out = count_830(n_max); break;
    case ClassId::c2106: out = count_2106(n_max); break;
    case ClassId::c663A: out = count_tagged_left(false, n_max); break;
    case ClassId::c1420: out = count_tagged_left(true, n_max); break;
    case ClassId::c1833A: out = count_left(LeftKind::c1833A, n_max); break;
    case ClassId::c733: out = count_left(LeftKind::c733, n_max); break;
    case ClassId::c214: out = count_left(LeftKind::c214, n_max); break;
    case ClassId::c1509: out = count_left(LeftKind::c1509, n_max); break;
    case ClassId::c1953A: out = count_left(LeftKind::c1953A, n_max); break;
    case ClassId::c759: out = count_left(LeftKind::c759, n_max); break;
    case ClassId::c247: out = count_left(LeftKind::c247, n_max); break;
  }
  return out;
}

}  // namespace invseq::gentree::dense
