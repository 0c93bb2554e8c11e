#include "rankcover/codes.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "rankcover/kernels.hpp"
#include "rankcover/parallel.hpp"

namespace rankcover {

namespace {

Word frobenius(const Field& f, Word x, unsigned times) {
  for (unsigned t = 0; t < times; ++t) x = f.pow(x, f.q());
  return x;
}

bool is_default_poly(const Field& f) {
  auto d = default_poly(f.q(), f.m());
  return d && *d == f.poly();
}

}  // namespace

std::vector<std::vector<Word>> field_rref(const Field& f, std::vector<std::vector<Word>> rows,
                                          std::vector<unsigned>* pivots) {
  if (pivots) pivots->clear();
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Word iv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, iv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Word fac = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(fac, rows[r][j]));
    }
    if (pivots) pivots->push_back(static_cast<unsigned>(c));
    ++r;
  }
  rows.resize(r);
  return rows;
}

Code Code::explicit_set(FieldPtr f, unsigned n, std::vector<Word> indices) {
  Code c(std::move(f), n);
  const BigCount size = space_size(c.q(), c.m(), n);
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw std::invalid_argument("code contains duplicate codewords");
  }
  if (!indices.empty() && BigCount(indices.back()) >= size) throw std::out_of_range("codeword index out of range");
  c.words_ = std::move(indices);
  return c;
}

Code Code::from_vectors(FieldPtr f, unsigned n, const std::vector<RankVector>& words) {
  VectorSpace sp(f, n);
  std::vector<Word> idx;
  idx.reserve(words.size());
  for (const auto& w : words) idx.push_back(sp.index_of(w));
  return explicit_set(std::move(f), n, std::move(idx));
}

Code Code::linear(FieldPtr f, unsigned n, std::vector<std::vector<Word>> generator, std::uint64_t cap) {
  for (const auto& row : generator) {
    if (row.size() != n) throw std::invalid_argument("generator row has wrong length");
    for (Word v : row) {
      if (v >= f->order()) throw std::invalid_argument("generator entry out of range");
    }
  }
  if (field_rref(*f, generator).size() != generator.size()) {
    throw std::invalid_argument("generator rows are linearly dependent");
  }
  const unsigned k = static_cast<unsigned>(generator.size());
  if (space_size(f->q(), f->m(), k) > cap) throw CapExceeded("linear code too large to materialize");
  Code c(f, n);
  VectorSpace sp(f, n);
  // per-row tables: index of y * G_i for every scalar y
  std::vector<std::vector<Word>> scaled(k, std::vector<Word>(f->order()));
  for (unsigned i = 0; i < k; ++i) {
    for (Word y = 0; y < f->order(); ++y) {
      std::vector<Word> w(n);
      for (unsigned j = 0; j < n; ++j) w[j] = f->mul(y, generator[i][j]);
      scaled[i][y] = sp.index_of(RankVector(f, w));
    }
  }
  std::vector<Word> y(k, 0);
  for (;;) {
    Word idx = 0;
    for (unsigned i = 0; i < k; ++i) idx = sp.add(idx, scaled[i][y[i]]);
    c.words_.push_back(idx);
    unsigned t = 0;
    while (t < k && ++y[t] == f->order()) y[t++] = 0;
    if (t == k) break;
  }
  std::sort(c.words_.begin(), c.words_.end());
  c.gen_ = std::move(generator);
  return c;
}

std::vector<RankVector> Code::codewords() const {
  VectorSpace sp(f_, n_);
  std::vector<RankVector> out;
  out.reserve(words_.size());
  for (Word w : words_) out.push_back(sp.vector_at(w));
  return out;
}

bool Code::contains(Word index) const { return std::binary_search(words_.begin(), words_.end(), index); }

const std::vector<std::vector<Word>>& Code::generator() const {
  if (!gen_) throw std::logic_error("code has no generator");
  return *gen_;
}

Code gabidulin_generator(const FieldPtr& f, unsigned n, unsigned k, unsigned s, std::optional<std::vector<Word>> g) {
  const unsigned m = f->m();
  if (n > m) throw std::invalid_argument("Gabidulin codes need n <= m");
  if (k > n) throw std::invalid_argument("dimension exceeds length");
  if (std::gcd(s, m) != 1) throw std::invalid_argument("gcd(s, m) must be 1");
  if (!g) {
    g = std::vector<Word>(n);
    for (unsigned j = 0; j < n; ++j) (*g)[j] = f->pow(f->alpha(), j);
  }
  if (g->size() != n) throw std::invalid_argument("need n evaluation points");
  if (rank_weight(RankVector(f, *g)) != n) throw std::invalid_argument("evaluation points are dependent over GF(q)");
  std::vector<std::vector<Word>> gen(k, std::vector<Word>(n));
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < n; ++j) gen[i][j] = frobenius(*f, (*g)[j], s * i);
  }
  return Code::linear(f, n, std::move(gen));
}

Code cartesian_power(const Code& c, unsigned l) {
  if (!c.is_linear()) throw std::invalid_argument("cartesian power needs a linear code");
  const unsigned n = c.n();
  std::vector<std::vector<Word>> gen;
  for (unsigned b = 0; b < l; ++b) {
    for (const auto& row : c.generator()) {
      std::vector<Word> r(n * l, 0);
      std::copy(row.begin(), row.end(), r.begin() + b * n);
      gen.push_back(r);
    }
  }
  return Code::linear(c.field(), n * l, gen);
}

Code mrd_construct(unsigned q, unsigned m, unsigned n, unsigned d) {
  if (d < 1) throw std::invalid_argument("minimum distance must be >= 1");
  FieldPtr f = default_field(q, m);
  if (d > std::min(m, n)) return Code::linear(f, n, {});
  if (n <= m) return gabidulin_generator(f, n, n - d + 1);
  if (n % m == 0) return cartesian_power(gabidulin_generator(f, m, m - d + 1), n / m);
  return transpose_code(gabidulin_generator(default_field(q, n), m, m - d + 1));
}

Code transpose_code(const Code& c) {
  const FieldPtr& f = c.field();
  const unsigned m = f->m(), n = c.n();
  FieldPtr g = default_field(f->q(), n);
  VectorSpace src(f, n), dst(g, m);
  std::vector<Word> out;
  out.reserve(c.size());
  for (Word w : c.indices()) {
    const GfMatrix a = src.vector_at(w).expansion();  // m x n
    std::vector<Word> y(m);
    for (unsigned i = 0; i < m; ++i) y[i] = g->from_coeffs(a[i]);
    out.push_back(dst.index_of(RankVector(g, y)));
  }
  return Code::explicit_set(g, m, std::move(out));
}

Code field_embed(const Code& c, unsigned u) {
  const FieldPtr& f = c.field();
  FieldPtr g = default_field(f->q(), f->m() + u);
  VectorSpace src(f, c.n()), dst(g, c.n());
  std::vector<Word> out;
  out.reserve(c.size());
  for (Word w : c.indices()) out.push_back(dst.index_of(RankVector(g, src.vector_at(w).coords())));
  return Code::explicit_set(g, c.n(), std::move(out));
}

namespace {

unsigned radius_linear(const Code& c, const EnumOptions& eo) {
  const FieldPtr& f = c.field();
  const unsigned n = c.n();
  VectorSpace sp(f, n);
  std::vector<unsigned> piv;
  auto rows = field_rref(*f, c.generator(), &piv);
  std::vector<unsigned> free;
  for (unsigned j = 0; j < n; ++j) {
    if (!std::binary_search(piv.begin(), piv.end(), j)) free.push_back(j);
  }
  const Word qm = f->order();
  Word ncosets = 1;
  for (std::size_t i = 0; i < free.size(); ++i) ncosets *= qm;
  const unsigned workers = resolve_threads(eo.threads);
  std::vector<std::vector<std::uint8_t>> minr(workers, std::vector<std::uint8_t>(ncosets, 255));
  const unsigned k = static_cast<unsigned>(piv.size());
  parallel_chunks(0, sp.size(), eo.threads, 1 << 14, [&](Word lo, Word hi, unsigned w) {
    std::vector<std::uint8_t> rk(hi - lo);
    if (sp.packed()) {
      kernels::rank_range({f->m(), n}, lo, rk.data(), rk.size());
    } else {
      for (Word x = lo; x < hi; ++x) rk[x - lo] = static_cast<std::uint8_t>(sp.rank(x));
    }
    auto& mr = minr[w];
    std::vector<Word> xc(n);
    for (Word x = lo; x < hi; ++x) {
      for (unsigned j = 0; j < n; ++j) xc[j] = sp.coord(x, j);
      Word s = 0;
      for (unsigned col : free) {
        Word v = xc[col];
        for (unsigned i = 0; i < k; ++i) {
          if (xc[piv[i]]) v = f->sub(v, f->mul(xc[piv[i]], rows[i][col]));
        }
        s = s * qm + v;
      }
      if (rk[x - lo] < mr[s]) mr[s] = rk[x - lo];
    }
  });
  unsigned radius = 0;
  for (Word s = 0; s < ncosets; ++s) {
    std::uint8_t best = 255;
    for (const auto& mr : minr) best = std::min(best, mr[s]);
    radius = std::max<unsigned>(radius, best);
  }
  return radius;
}

unsigned radius_explicit(const Code& c, const EnumOptions& eo) {
  const FieldPtr& f = c.field();
  VectorSpace sp(f, c.n());
  const auto& words = c.indices();
  std::atomic<unsigned> radius{0};
  parallel_chunks(0, sp.size(), eo.threads, 1 << 12, [&](Word lo, Word hi, unsigned) {
    unsigned local = radius.load();
    if (sp.packed()) {
      std::vector<Word> xs(hi - lo);
      std::iota(xs.begin(), xs.end(), lo);
      std::vector<std::uint8_t> out(xs.size());
      kernels::min_distance_batch({f->m(), c.n()}, xs.data(), xs.size(), words.data(), words.size(), local,
                                  out.data());
      for (auto d : out) local = std::max<unsigned>(local, d);
    } else {
      for (Word x = lo; x < hi; ++x) {
        unsigned best = 255;
        for (Word w : words) {
          best = std::min(best, sp.distance(x, w));
          if (best <= local) break;
        }
        local = std::max(local, best);
      }
    }
    unsigned cur = radius.load();
    while (local > cur && !radius.compare_exchange_weak(cur, local)) {
    }
  });
  return radius.load();
}

}  // namespace

unsigned covering_radius(const Code& c, const RadiusOptions& opt) {
  if (c.size() == 0) throw std::invalid_argument("empty code");
  check_cap(space_size(c.q(), c.m(), c.n()), opt.enumeration);
  if (c.is_linear() && !opt.force_explicit) return radius_linear(c, opt.enumeration);
  return radius_explicit(c, opt.enumeration);
}

unsigned min_rank_distance(const Code& c) {
  if (c.size() < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
  VectorSpace sp = c.space();
  const auto& w = c.indices();
  unsigned best = 255;
  if (c.is_linear()) {
    for (Word x : w) {
      if (x) best = std::min(best, sp.rank(x));
    }
    return best;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, sp.distance(w[i], w[j]));
  }
  return best;
}

Word vector_index(const RankVector& x) { return VectorSpace(x.field(), x.n()).index_of(x); }

RankVector index_vector(const FieldPtr& f, unsigned n, Word i) { return VectorSpace(f, n).vector_at(i); }

std::string SkipVector::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) os << ' ';
    os << runs[i].value;
    if (runs[i].count != 1) os << '^' << runs[i].count;
  }
  return os.str();
}

SkipVector SkipVector::parse(std::string_view text) {
  static const std::regex tok_re(R"((\d+)(?:\^(\d+))?)");
  SkipVector sv;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    std::smatch mt;
    if (!std::regex_match(tok, mt, tok_re)) throw ParseError("malformed skip-vector token '" + tok + "'");
    SkipRun r;
    try {
      r.value = std::stoull(mt[1].str());
      r.count = mt[2].matched ? std::stoull(mt[2].str()) : 1;
    } catch (const std::out_of_range&) {
      throw ParseError("skip-vector token out of range '" + tok + "'");
    }
    if (r.count == 0) throw ParseError("zero repeat count in '" + tok + "'");
    sv.runs.push_back(r);
  }
  return sv;
}

std::vector<std::uint64_t> SkipVector::decode_indices() const {
  std::vector<std::uint64_t> out;
  unsigned __int128 next = 0;  // smallest admissible next index
  for (const auto& r : runs) {
    for (std::uint64_t k = 0; k < r.count; ++k) {
      unsigned __int128 x = next + r.value;
      if (x >= (unsigned __int128)(~std::uint64_t(0))) throw ParseError("skip-vector index overflow");
      out.push_back(static_cast<std::uint64_t>(x));
      next = x + 1;
    }
  }
  return out;
}

SkipVector skip_vector_encode(const Code& c) {
  SkipVector sv;
  std::uint64_t next = 0;
  for (Word x : c.indices()) {
    std::uint64_t y = x - next;
    if (!sv.runs.empty() && sv.runs.back().value == y) {
      ++sv.runs.back().count;
    } else {
      sv.runs.push_back({y, 1});
    }
    next = x + 1;
  }
  return sv;
}

Code skip_vector_decode(const SkipVector& sv, const FieldPtr& f, unsigned n) {
  auto idx = sv.decode_indices();
  const BigCount size = space_size(f->q(), f->m(), n);
  if (!idx.empty() && BigCount(idx.back()) >= size) throw ParseError("skip-vector index exceeds q^{mn} - 1");
  return Code::explicit_set(f, n, std::vector<Word>(idx.begin(), idx.end()));
}

void write_skip_stream(std::ostream& os, const Code& c) {
  const Field& f = *c.field();
  os << "# gf(" << f.q() << '^' << f.m();
  if (!is_default_poly(f)) {
    std::string spec = f.spec();
    os << spec.substr(spec.find(';'), spec.size() - spec.find(';') - 1);
  }
  os << ") n=" << c.n() << '\n';
  const SkipVector sv = skip_vector_encode(c);
  for (std::size_t i = 0; i < sv.runs.size(); ++i) {
    os << sv.runs[i].value;
    if (sv.runs[i].count != 1) os << '^' << sv.runs[i].count;
    os << ((i + 1) % 16 == 0 || i + 1 == sv.runs.size() ? '\n' : ' ');
  }
}

void write_skip_file(const std::string& path, const Code& c) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_skip_stream(os, c);
}

Code read_skip_stream(std::istream& is) {
  static const std::regex head_re(R"(#\s*(gf\([^)]*\))\s+n\s*=\s*(\d+)\s*)", std::regex::icase);
  std::string line, body;
  FieldPtr f;
  unsigned n = 0;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::smatch mt;
      std::string h = line.substr(first);
      while (!h.empty() && (h.back() == '\r' || h.back() == ' ')) h.pop_back();
      if (!f && std::regex_match(h, mt, head_re)) {
        try {
          f = parse_field_spec(mt[1].str());
        } catch (const FieldError& e) {
          throw ParseError(e.what());
        }
        n = static_cast<unsigned>(std::stoul(mt[2].str()));
      }
      continue;
    }
    body += line;
    body += ' ';
  }
  if (!f) throw ParseError("missing header '# gf(q^m) n=<n>'");
  return skip_vector_decode(SkipVector::parse(body), f, n);
}

Code read_skip_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open " + path);
  return read_skip_stream(is);
}

}  // namespace rankcover
