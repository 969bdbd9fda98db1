#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopf/field.hpp"
#include "hopf/matrix.hpp"

namespace hopf {

/// Object of the diagonal braided category: a graded space with braiding
/// C(u (x) v) = q^(deg u * deg v) (v (x) u) on homogeneous vectors.
struct DiagObject {
  FieldPtr ctx;
  Scalar q;
  std::vector<long long> degrees;  // one per basis vector

  std::size_t dim() const { return degrees.size(); }
};

inline DiagObject diag_tensor(const DiagObject& a, const DiagObject& b) {
  DiagObject t{a.ctx, a.q, {}};
  t.degrees.reserve(a.dim() * b.dim());
  for (long long da : a.degrees)
    for (long long db : b.degrees) t.degrees.push_back(da + db);
  return t;
}

inline DiagObject diag_unit(const DiagObject& like) { return {like.ctx, like.q, {0}}; }

/// Dual object: degrees negate so that evaluation is degree-preserving.
inline DiagObject diag_dual(const DiagObject& a) {
  DiagObject d{a.ctx, a.q, a.degrees};
  for (auto& x : d.degrees) x = -x;
  return d;
}

inline Matrix diag_braiding(const DiagObject& a, const DiagObject& b) {
  Matrix c(a.ctx, b.dim() * a.dim(), a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      c.at(j * a.dim() + i, i * b.dim() + j) = a.q.pow(a.degrees[i] * b.degrees[j]);
  return c;
}

/// Morphisms are the degree-preserving linear maps.
inline std::optional<std::string> diag_morphism_witness(const Matrix& f, const DiagObject& a,
                                                        const DiagObject& b) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) return "shape mismatch";
  for (std::size_t p = 0; p < b.dim(); ++p)
    for (std::size_t m = 0; m < a.dim(); ++m)
      if (!f.at(p, m).is_zero() && a.degrees[m] != b.degrees[p])
        return "entry (" + std::to_string(p) + "," + std::to_string(m) + ") maps degree " +
               std::to_string(a.degrees[m]) + " to degree " + std::to_string(b.degrees[p]);
  return std::nullopt;
}

inline bool is_diag_morphism(const Matrix& f, const DiagObject& a, const DiagObject& b) {
  return !diag_morphism_witness(f, a, b).has_value();
}

}  // namespace hopf
