#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankcover/qcombinatorics.hpp"
#include "rankcover/rank_space.hpp"

namespace rankcover {

/// Finite set of vectors of GF(q^m)^n, stored as sorted vector indices.
/// Linear codes also keep their generator (k rows over GF(q^m)).
class Code {
 public:
  static Code explicit_set(FieldPtr f, unsigned n, std::vector<Word> indices);
  static Code from_vectors(FieldPtr f, unsigned n, const std::vector<RankVector>& words);
  static Code linear(FieldPtr f, unsigned n, std::vector<std::vector<Word>> generator,
                     std::uint64_t cap = std::uint64_t(1) << 26);

  const FieldPtr& field() const { return f_; }
  unsigned q() const { return f_->q(); }
  unsigned m() const { return f_->m(); }
  unsigned n() const { return n_; }
  VectorSpace space() const { return VectorSpace(f_, n_); }

  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& indices() const { return words_; }
  std::vector<RankVector> codewords() const;
  bool contains(Word index) const;

  bool is_linear() const { return gen_.has_value(); }
  unsigned dimension() const { return gen_ ? static_cast<unsigned>(gen_->size()) : 0; }
  const std::vector<std::vector<Word>>& generator() const;

 private:
  Code(FieldPtr f, unsigned n) : f_(std::move(f)), n_(n) {}
  FieldPtr f_;
  unsigned n_;
  std::vector<Word> words_;
  std::optional<std::vector<std::vector<Word>>> gen_;
};

/// Gaussian elimination over GF(q^m); returns the reduced rows, pivots filled if given.
std::vector<std::vector<Word>> field_rref(const Field& f, std::vector<std::vector<Word>> rows,
                                          std::vector<unsigned>* pivots = nullptr);

/// Generalized Gabidulin code: rows (g_0^{[i]}, ..., g_{n-1}^{[i]}), [i] = q^{s i}.
/// Default s = 1 and g_j = a^j.
Code gabidulin_generator(const FieldPtr& f, unsigned n, unsigned k, unsigned s = 1,
                         std::optional<std::vector<Word>> g = std::nullopt);
/// MRD code of length n and minimum distance d over GF(q^m) (default field)
Code mrd_construct(unsigned q, unsigned m, unsigned n, unsigned d);
/// l-fold cartesian power of a linear code
Code cartesian_power(const Code& c, unsigned l);
/// codeword matrices transposed; result lives in GF(q^n)^m
Code transpose_code(const Code& c);
/// image under GF(q^m) -> GF(q^{m+u}) keeping coefficient vectors
Code field_embed(const Code& c, unsigned u);

struct RadiusOptions {
  EnumOptions enumeration;
  bool force_explicit = false;  // ignore the linear structure
};
unsigned covering_radius(const Code& c, const RadiusOptions& opt = {});
unsigned min_rank_distance(const Code& c);

Word vector_index(const RankVector& x);
RankVector index_vector(const FieldPtr& f, unsigned n, Word i);

/// run-length difference encoding: y_0 = x_0, y_i = x_i - x_{i-1} - 1, repeats written y^k
struct SkipRun {
  std::uint64_t value = 0;
  std::uint64_t count = 1;
};
struct SkipVector {
  std::vector<SkipRun> runs;
  std::string str() const;
  static SkipVector parse(std::string_view text);
  std::vector<std::uint64_t> decode_indices() const;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SkipVector skip_vector_encode(const Code& c);
Code skip_vector_decode(const SkipVector& sv, const FieldPtr& f, unsigned n);

/// file: header "# gf(q^m[;poly=...]) n=<n>" then skip-vector tokens
void write_skip_file(const std::string& path, const Code& c);
void write_skip_stream(std::ostream& os, const Code& c);
Code read_skip_file(const std::string& path);
Code read_skip_stream(std::istream& is);

}  // namespace rankcover
