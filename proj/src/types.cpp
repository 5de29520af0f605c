#include "legatlas/types.hpp"

#include <sstream>

namespace legatlas {

SimpleType::SimpleType(Family f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) {
    throw InvalidType("invalid simple type " + std::string(1, static_cast<char>(f)) +
                      std::to_string(r));
  }
}

long long SimpleType::dim() const {
  long long r = rank;
  switch (family) {
    case Family::A: return r * r + 2 * r;
    case Family::B: return 2 * r * r + r;
    case Family::C: return 2 * r * r + r;
    case Family::D: return 2 * r * r - r;
    case Family::E: return r == 6 ? 78 : (r == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;  // unreachable
}

long long SimpleType::num_positive_roots() const {
  long long r = rank;
  switch (family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B: return r * r;
    case Family::C: return r * r;
    case Family::D: return r * r - r;
    case Family::E: return r == 6 ? 36 : (r == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;  // unreachable
}

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

long long ReductiveType::dim() const {
  long long d = torus_rank;
  for (const auto& f : factors) d += f.dim();
  return d;
}

int ReductiveType::semisimple_rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

std::string ReductiveType::name() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << "+";
    os << f.name();
    first = false;
  }
  if (torus_rank > 0) {
    if (!first) os << "+";
    os << "T" << torus_rank;
  }
  if (first && torus_rank == 0) os << "0";
  return os.str();
}

ReductiveType so_type(long long n) {
  if (n < 1) throw InvalidType("so(n) needs n >= 1");
  ReductiveType t;
  if (n == 1) return t;                     // so(1) = 0
  if (n == 2) { t.torus_rank = 1; return t; }   // so(2): one-dimensional torus
  if (n == 3) { t.factors.push_back({Family::A, 1}); return t; }
  if (n == 4) {
    t.factors.push_back({Family::A, 1});
    t.factors.push_back({Family::A, 1});
    return t;
  }
  if (n % 2 == 1) {
    t.factors.push_back({Family::B, static_cast<int>((n - 1) / 2)});
  } else {
    t.factors.push_back({Family::D, static_cast<int>(n / 2)});
  }
  return t;
}

SimpleType sl_type(long long n) {
  if (n < 2) throw InvalidType("sl(n) needs n >= 2");
  return {Family::A, static_cast<int>(n - 1)};
}

SimpleType sp_type(long long two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw InvalidType("sp(2n) needs even argument >= 2");
  if (two_n == 2) return {Family::A, 1};
  return {Family::C, static_cast<int>(two_n / 2)};
}

}  // namespace legatlas
