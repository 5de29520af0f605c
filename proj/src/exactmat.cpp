#include "legatlas/exactmat.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace legatlas {

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  Rat norm = o.re * o.re + o.im * o.im;
  if (norm == 0) throw Error("division by zero Gaussian rational");
  GaussianRational conj{o.re, -o.im};
  GaussianRational num = *this * conj;
  Rat re_out = num.re / norm;
  Rat im_out = num.im / norm;
  re_out.canonicalize();
  im_out.canonicalize();
  return {re_out, im_out};
}

std::string GaussianRational::str() const {
  auto rat_str = [](const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
  };
  if (im == 0) return rat_str(re);
  std::string imag;
  if (im == 1) imag = "i";
  else if (im == -1) imag = "-i";
  else imag = rat_str(im) + "i";
  if (re == 0) return imag;
  if (im > 0 && imag[0] != '+') imag = "+" + imag;
  return rat_str(re) + imag;
}

namespace {

// Parse a rational [-]digits[/digits] starting at pos; advances pos.
Rat parse_rat(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits_start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits_start) throw ParseError("expected digits in entry '" + s + "'");
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_start) throw ParseError("expected denominator in entry '" + s + "'");
  }
  Rat q(s.substr(start, pos - start));
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational parse_entry(const std::string& text) {
  if (text.empty()) throw ParseError("empty matrix entry");
  size_t pos = 0;
  Rat re(0), im(0);

  auto parse_term = [&](bool first) {
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected sign in entry '" + text + "'");
    }
    Rat mag(1);
    bool have_digits =
        pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    if (have_digits) mag = parse_rat(text, pos);
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'I')) {
      ++pos;
      im += sign * mag;
    } else {
      if (!have_digits) throw ParseError("bad entry '" + text + "'");
      re += sign * mag;
    }
  };

  parse_term(true);
  if (pos < text.size()) parse_term(false);
  if (pos != text.size()) throw ParseError("trailing characters in entry '" + text + "'");
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (n_ != o.n_) throw Error("matrix size mismatch");
  ExactMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const GaussianRational& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + v * o.at(k, j);
      }
    }
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

int ExactMatrix::rank() const {
  ExactMatrix m = *this;
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int piv = -1;
    for (int row = rank; row < n_; ++row) {
      if (!m.at(row, col).is_zero()) { piv = row; break; }
    }
    if (piv < 0) continue;
    for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    GaussianRational lead = m.at(rank, col);
    for (int row = rank + 1; row < n_; ++row) {
      if (m.at(row, col).is_zero()) continue;
      GaussianRational factor = m.at(row, col) / lead;
      for (int j = col; j < n_; ++j)
        m.at(row, j) = m.at(row, j) - factor * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Partition ExactMatrix::jordan_type() const {
  // #{parts >= k} = rank(m^{k-1}) - rank(m^k).
  std::vector<int> ranks{n_};  // rank of m^0
  ExactMatrix power = *this;
  while (true) {
    int r = power.rank();
    ranks.push_back(r);
    if (r == 0) break;
    if (static_cast<int>(ranks.size()) > n_ + 1)
      throw NotNilpotent("matrix power sequence does not reach zero");
    power = power * *this;
  }
  Partition parts;
  for (size_t k = 1; k < ranks.size(); ++k) {
    long long count_ge_k = ranks[k - 1] - ranks[k];
    while (static_cast<long long>(parts.size()) < count_ge_k) parts.push_back(0);
    for (long long i = 0; i < count_ge_k; ++i) ++parts[i];
  }
  // Built column-wise, so the result is automatically weakly decreasing.
  return parts;
}

ExactMatrix parse_matrix(std::istream& in) {
  std::vector<std::vector<GaussianRational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<GaussianRational> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_entry(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  const size_t n = rows.size();
  for (const auto& row : rows)
    if (row.size() != n) throw ParseError("matrix is not square");
  ExactMatrix m(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

std::string format_matrix(const ExactMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) os << (j ? " " : "") << m.at(i, j).str();
    os << "\n";
  }
  return os.str();
}

ExactMatrix build_witness(WitnessKind kind, int param) {
  switch (kind) {
    case WitnessKind::SL_fold: {
      const int l = param;
      if (l < 2) throw Error("SL_fold witness needs l >= 2");
      ExactMatrix m(2 * l);
      m.at(0, 2 * l - 2) = GaussianRational(Rat(1));
      m.at(1, 2 * l - 1) = GaussianRational(Rat(1));
      return m;
    }
    case WitnessKind::SO_standard: {
      const int n = param;
      if (n < 2) throw Error("SO_standard witness needs n >= 2");
      ExactMatrix m(n + 1);
      // Last column (1, i, 0, ..., 0); last row its negative.
      m.at(0, n) = GaussianRational(Rat(1));
      m.at(1, n) = GaussianRational::i();
      m.at(n, 0) = GaussianRational(Rat(-1));
      m.at(n, 1) = -GaussianRational::i();
      return m;
    }
    case WitnessKind::B3_G2: {
      ExactMatrix m(7);
      const GaussianRational one{Rat(1)};
      const GaussianRational i = GaussianRational::i();
      m.at(0, 6) = one;
      m.at(1, 6) = -i;
      m.at(2, 4) = one;
      m.at(2, 5) = -i;
      m.at(3, 4) = -i;
      m.at(3, 5) = -one;
      m.at(4, 2) = -one;
      m.at(4, 3) = i;
      m.at(5, 2) = i;
      m.at(5, 3) = one;
      m.at(6, 0) = -one;
      m.at(6, 1) = i;
      return m;
    }
  }
  throw Error("unknown witness kind");
}

bool membership_check(MatrixAlgebra alg, const ExactMatrix& m) {
  const int n = m.size();
  switch (alg) {
    case MatrixAlgebra::sl: {
      GaussianRational tr;
      for (int i = 0; i < n; ++i) tr = tr + m.at(i, i);
      return tr.is_zero();
    }
    case MatrixAlgebra::so: {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!(m.at(i, j) == -m.at(j, i))) return false;
      return true;
    }
    case MatrixAlgebra::sp: {
      if (n % 2 != 0) return false;
      const int half = n / 2;
      // (m^T J + J m)[i][j] = sum_k m[k][i] J[k][j] + J[i][k] m[k][j]
      // with J[k][j] = +1 if j = k + half, -1 if j = k - half.
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          GaussianRational v;
          if (j >= half) v = v + m.at(j - half, i);
          else v = v - m.at(j + half, i);
          if (i < half) v = v + m.at(i + half, j);
          else v = v - m.at(i - half, j);
          if (!v.is_zero()) return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace legatlas
