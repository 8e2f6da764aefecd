#include "modrep/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace modrep::poly {

long twisted_degree(const Profile& prof, long p) {
  long r = 0, w = 1;
  for (int rj : prof) {
    r += rj * w;
    w *= p;
  }
  return r;
}

MultiPoly::MultiPoly(gf::FieldCtx ctx, Profile prof) : ctx_(ctx), prof_(std::move(prof)) {
  coef_.assign(profile_dim(prof_), 0);
}

MultiPoly MultiPoly::monomial(gf::FieldCtx ctx, Profile prof, std::span<const int> exps,
                              std::uint32_t coeff) {
  MultiPoly P(ctx, std::move(prof));
  P.coef_[P.flat_index(exps)] = coeff;
  return P;
}

long MultiPoly::flat_index(std::span<const int> exps) const {
  if (exps.size() != prof_.size()) fail(ErrorKind::ProfileMismatch, "exponent arity");
  long idx = 0, stride = 1;
  for (std::size_t j = 0; j < prof_.size(); ++j) {
    if (exps[j] < 0 || exps[j] > prof_[j]) fail(ErrorKind::IndexOutOfRange, "exponent out of profile");
    idx += exps[j] * stride;
    stride *= prof_[j] + 1;
  }
  return idx;
}

void MultiPoly::unflatten(long idx, std::span<int> exps) const {
  for (std::size_t j = 0; j < prof_.size(); ++j) {
    exps[j] = static_cast<int>(idx % (prof_[j] + 1));
    idx /= prof_[j] + 1;
  }
}

bool MultiPoly::is_zero() const {
  return std::all_of(coef_.begin(), coef_.end(), [](std::uint32_t c) { return c == 0; });
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (!(ctx_ == o.ctx_) || prof_ != o.prof_) fail(ErrorKind::ProfileMismatch, "add");
  MultiPoly r(ctx_, prof_);
  for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = ctx_.add(coef_[i], o.coef_[i]);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ctx_, prof_);
  for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = ctx_.neg(coef_[i]);
  return r;
}

MultiPoly MultiPoly::scale(std::uint32_t c) const {
  MultiPoly r(ctx_, prof_);
  for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = ctx_.mul(coef_[i], c);
  return r;
}

MultiPoly MultiPoly::multiply(const MultiPoly& o) const {
  if (!(ctx_ == o.ctx_)) fail(ErrorKind::LevelMismatch, "multiply");
  if (prof_.size() != o.prof_.size()) fail(ErrorKind::ProfileMismatch, "multiply");
  Profile rp(prof_.size());
  for (std::size_t j = 0; j < prof_.size(); ++j) rp[j] = prof_[j] + o.prof_[j];
  MultiPoly r(ctx_, rp);
  std::vector<int> ia(prof_.size()), ib(prof_.size()), ir(prof_.size());
  for (long a = 0; a < table_size(); ++a) {
    if (!coef_[a]) continue;
    unflatten(a, ia);
    for (long b = 0; b < o.table_size(); ++b) {
      if (!o.coef_[b]) continue;
      o.unflatten(b, ib);
      for (std::size_t j = 0; j < prof_.size(); ++j) ir[j] = ia[j] + ib[j];
      long ri = r.flat_index(ir);
      r.coef_[ri] = ctx_.add(r.coef_[ri], ctx_.mul(coef_[a], o.coef_[b]));
    }
  }
  return r;
}

MultiPoly MultiPoly::multiply_disjoint(const MultiPoly& o) const {
  if (!(ctx_ == o.ctx_)) fail(ErrorKind::LevelMismatch, "tensor");
  Profile rp = prof_;
  rp.insert(rp.end(), o.prof_.begin(), o.prof_.end());
  MultiPoly r(ctx_, rp);
  for (long b = 0; b < o.table_size(); ++b) {
    if (!o.coef_[b]) continue;
    for (long a = 0; a < table_size(); ++a) {
      if (!coef_[a]) continue;
      r.coeffs_mut()[b * table_size() + a] = ctx_.mul(coef_[a], o.coef_[b]);
    }
  }
  return r;
}

MultiPoly MultiPoly::derive(int slot, int var) const {
  if (slot < 0 || slot >= nslots()) fail(ErrorKind::SlotOutOfRange, "derive slot");
  if (prof_[slot] == 0) {
    Profile rp = prof_;
    return MultiPoly(ctx_, rp);  // derivative of a degree-0 slot is zero
  }
  Profile rp = prof_;
  rp[slot] -= 1;
  MultiPoly r(ctx_, rp);
  std::vector<int> I(prof_.size());
  for (long a = 0; a < table_size(); ++a) {
    if (!coef_[a]) continue;
    unflatten(a, I);
    int i = I[slot];
    // d/dX: exponent of X_j is r_j - i; coefficient multiplier (r_j - i), new i stays
    // d/dY: exponent of Y_j is i; multiplier i, new i drops by one
    long mult;
    if (var == 0) {
      mult = prof_[slot] - i;
      if (mult % ctx_.characteristic() == 0) continue;
    } else {
      mult = i;
      if (mult % ctx_.characteristic() == 0) continue;
      I[slot] = i - 1;
    }
    std::uint32_t c = ctx_.mul(coef_[a], ctx_.from_int(mult));
    long ri = r.flat_index(I);
    r.coeffs_mut()[ri] = ctx_.add(r.coeffs()[ri], c);
    I[slot] = i;
  }
  return r;
}

gf::FieldElem MultiPoly::evaluate(const EvalPoint& pt) const {
  if (!(pt.ctx == ctx_)) fail(ErrorKind::LevelMismatch, "evaluate point level");
  if (pt.xy.size() != prof_.size()) fail(ErrorKind::ProfileMismatch, "evaluate point arity");
  // precompute power tables per slot
  std::vector<std::vector<std::uint32_t>> xp(prof_.size()), yp(prof_.size());
  for (std::size_t j = 0; j < prof_.size(); ++j) {
    xp[j].resize(prof_[j] + 1);
    yp[j].resize(prof_[j] + 1);
    xp[j][0] = yp[j][0] = 1;
    for (int e = 1; e <= prof_[j]; ++e) {
      xp[j][e] = ctx_.mul(xp[j][e - 1], pt.xy[j].first);
      yp[j][e] = ctx_.mul(yp[j][e - 1], pt.xy[j].second);
    }
  }
  std::uint32_t acc = 0;
  std::vector<int> I(prof_.size());
  for (long a = 0; a < table_size(); ++a) {
    if (!coef_[a]) continue;
    unflatten(a, I);
    std::uint32_t t = coef_[a];
    for (std::size_t j = 0; j < prof_.size(); ++j) {
      t = ctx_.mul(t, xp[j][prof_[j] - I[j]]);
      t = ctx_.mul(t, yp[j][I[j]]);
    }
    acc = ctx_.add(acc, t);
  }
  return gf::FieldElem(ctx_, acc);
}

gf::FieldElem MultiPoly::eval_diff(const EvalPoint& a, const EvalPoint& b) const {
  return evaluate(b) - evaluate(a);
}

MultiPoly MultiPoly::embed_to(gf::FieldCtx target) const {
  if (target == ctx_) return *this;
  MultiPoly r(target, prof_);
  for (std::size_t i = 0; i < coef_.size(); ++i)
    r.coef_[i] = ctx_.tower->embed(ctx_.level, target.level, coef_[i]);
  return r;
}

namespace {

void print_factor(std::string& out, const char* var, int slot, int exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back() != '+' && out.back() != ' ') out += "*";
  out += var;
  out += std::to_string(slot);
  if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

std::string MultiPoly::to_string() const {
  std::string out;
  std::vector<int> I(prof_.size());
  bool any = false;
  for (long a = 0; a < table_size(); ++a) {
    if (!coef_[a]) continue;
    if (any) out += " + ";
    any = true;
    unflatten(a, I);
    std::string term;
    bool unit = (coef_[a] == 1);
    if (!unit) {
      if (ctx_.degree() == 1)
        term += std::to_string(coef_[a]);
      else
        term += ctx_.to_string(coef_[a]);
    }
    std::string vars;
    for (std::size_t j = 0; j < prof_.size(); ++j) {
      print_factor(vars, "X", static_cast<int>(j), prof_[j] - I[j]);
      print_factor(vars, "Y", static_cast<int>(j), I[j]);
    }
    if (vars.empty()) {
      if (unit) term = "1";
    } else {
      if (!term.empty()) term += "*";
      term += vars;
    }
    out += term;
  }
  return any ? out : "0";
}

namespace {

struct Term {
  std::uint32_t coeff;
  std::vector<std::pair<int, int>> xexp, yexp;  // (slot, exponent)
};

// grammar: terms joined by '+' (or '-' meaning negated term); each term is
// '*'-separated factors: an integer, a bracketed coordinate vector, or
// X<k>[^e] / Y<k>[^e]; unit coefficients and exponents may be omitted.
Term parse_term(gf::FieldCtx ctx, const std::string& s) {
  Term t;
  t.coeff = 1;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  bool first = true;
  while (i < s.size()) {
    skip_ws();
    if (i >= s.size()) break;
    if (!first) {
      if (s[i] != '*') fail(ErrorKind::ParseError, "expected '*' in term: " + s);
      ++i;
      skip_ws();
    }
    first = false;
    if (s[i] == 'X' || s[i] == 'Y') {
      char var = s[i++];
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) fail(ErrorKind::ParseError, "variable needs a slot index: " + s);
      int slot = std::stoi(s.substr(start, i - start));
      int exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail(ErrorKind::ParseError, "missing exponent: " + s);
        exp = std::stoi(s.substr(start, i - start));
      }
      (var == 'X' ? t.xexp : t.yexp).emplace_back(slot, exp);
    } else if (s[i] == '[') {
      ++i;
      std::vector<long> coords;
      while (true) {
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-')) ++i;
        if (start == i) fail(ErrorKind::ParseError, "bad coordinate vector: " + s);
        coords.push_back(std::stol(s.substr(start, i - start)));
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        if (i < s.size() && s[i] == ']') {
          ++i;
          break;
        }
        fail(ErrorKind::ParseError, "unterminated coordinate vector: " + s);
      }
      std::uint32_t idx = 0, mul = 1;
      auto p = static_cast<std::uint32_t>(ctx.characteristic());
      for (long c : coords) {
        idx += static_cast<std::uint32_t>(mod_residue(c, ctx.characteristic())) * mul;
        mul *= p;
      }
      if (idx >= ctx.size()) fail(ErrorKind::ParseError, "coefficient outside field");
      t.coeff = ctx.mul(t.coeff, idx);
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      t.coeff = ctx.mul(t.coeff, ctx.from_int(std::stoll(s.substr(start, i - start))));
    } else {
      fail(ErrorKind::ParseError, std::string("unexpected character '") + s[i] + "' in: " + s);
    }
    skip_ws();
  }
  return t;
}

}  // namespace

MultiPoly MultiPoly::parse(gf::FieldCtx ctx, const std::string& text) {
  // split into signed terms
  std::vector<std::pair<bool, std::string>> terms;  // (negated, text)
  std::string cur;
  bool neg = false;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!cur.empty()) terms.emplace_back(neg, cur);
      cur.clear();
      neg = (ch == '-');
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) terms.emplace_back(neg, cur);
  if (terms.empty()) fail(ErrorKind::ParseError, "empty polynomial");

  std::vector<Term> parsed;
  int nslots = 0;
  for (auto& [n, str] : terms) {
    Term t = parse_term(ctx, str);
    if (n) t.coeff = ctx.neg(t.coeff);
    for (auto& [slot, e] : t.xexp) nslots = std::max(nslots, slot + 1);
    for (auto& [slot, e] : t.yexp) nslots = std::max(nslots, slot + 1);
    parsed.push_back(std::move(t));
  }
  if (nslots == 0) nslots = 1;

  // infer the profile: all terms must have the same per-slot total degree
  Profile prof(nslots, 0);
  bool set = false;
  for (const auto& t : parsed) {
    Profile deg(nslots, 0);
    for (auto& [slot, e] : t.xexp) deg[slot] += e;
    for (auto& [slot, e] : t.yexp) deg[slot] += e;
    if (!set) {
      prof = deg;
      set = true;
    } else if (deg != prof) {
      fail(ErrorKind::ParseError, "terms are not multihomogeneous of one profile");
    }
  }

  MultiPoly P(ctx, prof);
  std::vector<int> I(nslots);
  for (const auto& t : parsed) {
    std::fill(I.begin(), I.end(), 0);
    for (auto& [slot, e] : t.yexp) I[slot] += e;
    long idx = P.flat_index(I);
    P.coef_[idx] = ctx.add(P.coef_[idx], t.coeff);
  }
  return P;
}

}  // namespace modrep::poly

namespace modrep::poly {

std::vector<std::uint32_t> subst_matrix(gf::FieldCtx ctx, int r, const grp::GroupElem& g,
                                        int twist) {
  const gf::FieldTower* tw = ctx.tower;
  gf::FieldCtx gc = g.ctx;
  // entries are twisted in F_q first, then embedded into ctx's level
  auto lift = [&](std::uint32_t x) {
    return tw->embed(gf::Level::mid_q, ctx.level, gc.frobenius(x, twist));
  };
  std::uint32_t u = lift(g.a), v = lift(g.b), w = lift(g.c), z = lift(g.d);

  std::vector<std::uint32_t> S(static_cast<std::size_t>(r + 1) * (r + 1), 0);
  // power tables
  std::vector<std::uint32_t> up(r + 1), vp(r + 1), wp(r + 1), zp(r + 1);
  up[0] = vp[0] = wp[0] = zp[0] = 1;
  for (int e = 1; e <= r; ++e) {
    up[e] = ctx.mul(up[e - 1], u);
    vp[e] = ctx.mul(vp[e - 1], v);
    wp[e] = ctx.mul(wp[e - 1], w);
    zp[e] = ctx.mul(zp[e - 1], z);
  }
  long p = ctx.characteristic();
  for (int i = 0; i <= r; ++i) {
    // (uX+wY)^{r-i} (vX+zY)^i
    for (int k = 0; k <= r - i; ++k) {
      std::uint32_t ak = ctx.mul(ctx.from_int(binom_mod(r - i, k, p)),
                                 ctx.mul(up[r - i - k], wp[k]));
      if (!ak) continue;
      for (int l = 0; l <= i; ++l) {
        std::uint32_t bl = ctx.mul(ctx.from_int(binom_mod(i, l, p)), ctx.mul(vp[i - l], zp[l]));
        if (!bl) continue;
        int ip = k + l;
        std::size_t at = static_cast<std::size_t>(i) * (r + 1) + ip;
        S[at] = ctx.add(S[at], ctx.mul(ak, bl));
      }
    }
  }
  return S;
}

void mode_apply(gf::FieldCtx ctx, std::span<std::uint32_t> data, std::span<const int> sizes,
                int axis, std::span<const std::uint32_t> S, bool transposed) {
  int n = sizes[axis];
  long inner = 1;
  for (int j = 0; j < axis; ++j) inner *= sizes[j];
  long total = 1;
  for (std::size_t j = 0; j < sizes.size(); ++j) total *= sizes[j];
  long outer = total / (inner * n);
  std::vector<std::uint32_t> line(n), res(n);
  for (long o = 0; o < outer; ++o) {
    for (long in = 0; in < inner; ++in) {
      long base = o * inner * n + in;
      for (int i = 0; i < n; ++i) line[i] = data[base + static_cast<long>(i) * inner];
      for (int i = 0; i < n; ++i) {
        std::uint32_t acc = 0;
        if (transposed) {
          for (int k = 0; k < n; ++k)
            acc = ctx.add(acc, ctx.mul(S[static_cast<std::size_t>(k) * n + i], line[k]));
        } else {
          for (int k = 0; k < n; ++k)
            acc = ctx.add(acc, ctx.mul(S[static_cast<std::size_t>(i) * n + k], line[k]));
        }
        res[i] = acc;
      }
      for (int i = 0; i < n; ++i) data[base + static_cast<long>(i) * inner] = res[i];
    }
  }
}

MultiPoly substitute_linear(const MultiPoly& P, const grp::GroupElem& g,
                            std::span<const int> twists) {
  if (twists.size() != static_cast<std::size_t>(P.nslots()))
    fail(ErrorKind::ProfileMismatch, "twist arity");
  MultiPoly Q = P;
  std::vector<int> sizes(P.nslots());
  for (int j = 0; j < P.nslots(); ++j) sizes[j] = P.profile()[j] + 1;
  for (int j = 0; j < P.nslots(); ++j) {
    auto S = subst_matrix(P.ctx(), P.profile()[j], g, twists[j]);
    mode_apply(P.ctx(), Q.coeffs_mut(), sizes, j, S, /*transposed=*/true);
  }
  return Q;
}

MultiPoly substitute_linear(const MultiPoly& P, const grp::GroupElem& g) {
  std::vector<int> twists(P.nslots());
  for (int j = 0; j < P.nslots(); ++j) twists[j] = j;
  return substitute_linear(P, g, twists);
}

}  // namespace modrep::poly
