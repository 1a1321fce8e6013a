#pragma once

// Text formats: polynomial expressions in t and the generators u1, u2, ...,
// matrices as nested brackets, and line-oriented problem files
//
//   p = 5
//   epsilon = 1
//   n = 2
//   u1 = x^2 - 2
//   A = [[1, t], [-t, t^2 + 1]]
//
// Values may continue over several lines until the brackets balance; '#'
// starts a comment.

#include "hermform/polymat.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hermform {

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Integers are reduced mod p; generators must already exist in the active
/// tower. Products may be written by juxtaposition ("2t").
Poly parse_poly(std::string_view s, const std::string& var = "t");
PolyMatrix parse_matrix(std::string_view s);

struct Document {
  std::uint32_t p = 0;
  std::optional<FormKind> kind;
  std::optional<std::size_t> n;
  std::vector<std::string> generators;  ///< minimal polynomial of u_k in x, k = 1, 2, ...
  std::vector<std::pair<std::string, std::string>> values;  ///< other keys, raw text

  const std::string* find(const std::string& key) const;
};

Document parse_document(std::string_view text);

/// Appends the document's generator levels to a tower that has at most the
/// same levels; existing levels must agree.
void install_generators(Tower& tw, const Document& doc);

/// Parses the named matrix in the active tower and checks it against n and
/// epsilon when those are present.
PolyMatrix document_matrix(const Document& doc, const std::string& key);

/// One row per line.
std::string format_matrix(const PolyMatrix& a);

/// p, epsilon (when given), n and every generator of the active tower.
std::string format_header(std::optional<FormKind> kind, std::size_t n);

}  // namespace hermform
