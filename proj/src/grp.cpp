#include "modrep/grp.hpp"

#include <cctype>

namespace modrep::grp {

std::string GroupElem::to_string() const {
  return "[[" + ctx.to_string(a) + "," + ctx.to_string(b) + "],[" + ctx.to_string(c) + "," +
         ctx.to_string(d) + "]]";
}

GroupElem identity(const gf::TowerPtr& tower) {
  return GroupElem{tower->ctx(gf::Level::mid_q), 1, 0, 0, 1};
}

GroupElem weyl(const gf::TowerPtr& tower) {
  return GroupElem{tower->ctx(gf::Level::mid_q), 0, 1, 1, 0};
}

namespace {

std::uint32_t parse_entry(const gf::FieldCtx& ctx, const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size()) fail(ErrorKind::ParseError, "matrix entry missing");
  if (s[i] == '[') {
    ++i;
    std::uint32_t idx = 0, mul = 1;
    auto p = static_cast<std::uint32_t>(ctx.characteristic());
    while (true) {
      std::size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-')) ++i;
      if (start == i) fail(ErrorKind::ParseError, "bad coordinate in matrix");
      long c = std::stol(s.substr(start, i - start));
      idx += static_cast<std::uint32_t>(mod_residue(c, ctx.characteristic())) * mul;
      mul *= p;
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ']') {
        ++i;
        break;
      }
      fail(ErrorKind::ParseError, "unterminated coordinate vector");
    }
    if (idx >= ctx.size()) fail(ErrorKind::ParseError, "entry outside field");
    return idx;
  }
  std::size_t start = i;
  while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-')) ++i;
  if (start == i) fail(ErrorKind::ParseError, "bad matrix entry");
  return ctx.from_int(std::stoll(s.substr(start, i - start)));
}

void expect(const std::string& s, std::size_t& i, char ch) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size() || s[i] != ch)
    fail(ErrorKind::ParseError, std::string("expected '") + ch + "' in matrix");
  ++i;
}

}  // namespace

GroupElem parse_matrix(const gf::TowerPtr& tower, const std::string& text) {
  gf::FieldCtx ctx = tower->ctx(gf::Level::mid_q);
  std::size_t i = 0;
  expect(text, i, '[');
  expect(text, i, '[');
  std::uint32_t a = parse_entry(ctx, text, i);
  expect(text, i, ',');
  std::uint32_t b = parse_entry(ctx, text, i);
  expect(text, i, ']');
  expect(text, i, ',');
  expect(text, i, '[');
  std::uint32_t c = parse_entry(ctx, text, i);
  expect(text, i, ',');
  std::uint32_t d = parse_entry(ctx, text, i);
  expect(text, i, ']');
  expect(text, i, ']');
  GroupElem g{ctx, a, b, c, d};
  if (g.det() == 0) fail(ErrorKind::RangeError, "matrix is singular");
  return g;
}

std::vector<GroupElem> enumerate_group(const gf::TowerPtr& tower) {
  gf::FieldCtx ctx = tower->ctx(gf::Level::mid_q);
  const auto& order = tower->enumerate(gf::Level::mid_q);
  std::vector<GroupElem> out;
  out.reserve(static_cast<std::size_t>((tower->q() * tower->q() - 1) *
                                       (tower->q() * tower->q() - tower->q())));
  for (std::uint32_t a : order)
    for (std::uint32_t b : order)
      for (std::uint32_t c : order)
        for (std::uint32_t d : order) {
          GroupElem g{ctx, a, b, c, d};
          if (g.det() != 0) out.push_back(g);
        }
  return out;
}

std::vector<GroupElem> borel_coset_reps(const gf::TowerPtr& tower) {
  gf::FieldCtx ctx = tower->ctx(gf::Level::mid_q);
  std::vector<GroupElem> reps;
  for (std::uint32_t c : tower->enumerate(gf::Level::mid_q))
    reps.push_back(GroupElem{ctx, 1, 0, c, 1});
  reps.push_back(weyl(tower));
  return reps;
}

std::pair<GroupElem, int> factor_borel(const gf::TowerPtr& tower, const GroupElem& g) {
  gf::FieldCtx ctx = g.ctx;
  const auto& order = tower->enumerate(gf::Level::mid_q);
  if (g.d != 0) {
    std::uint32_t cc = ctx.div(g.c, g.d);
    GroupElem rep{ctx, 1, 0, cc, 1};
    GroupElem b = g.mul(rep.inverse());
    int k = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == cc) {
        k = static_cast<int>(i);
        break;
      }
    return {b, k};
  }
  GroupElem rep = weyl(tower);
  GroupElem b = g.mul(rep.inverse());
  return {b, static_cast<int>(order.size())};
}

GroupElem torus_embed(const gf::TowerPtr& tower, std::uint32_t x_q2) {
  if (x_q2 == 0) fail(ErrorKind::ZeroElement, "torus embedding of zero");
  auto [u, v] = tower->decompose_alpha(x_q2);
  gf::FieldCtx ctx = tower->ctx(gf::Level::mid_q);
  return GroupElem{ctx, u, ctx.mul(v, tower->alpha_sq_in_q()), v, u};
}

bool in_torus(const gf::TowerPtr& tower, const GroupElem& g) {
  if (g.a != g.d) return false;
  gf::FieldCtx ctx = g.ctx;
  if (g.b != ctx.mul(g.c, tower->alpha_sq_in_q())) return false;
  return g.a != 0 || g.c != 0;
}

TorusCosets::TorusCosets(const gf::TowerPtr& tower) : tower_(tower) {
  if (tower->p() % 2 == 0) fail(ErrorKind::EvenCharacteristic, "anisotropic torus needs odd p");
  auto all = enumerate_group(tower);
  table_.reserve(all.size());
  std::vector<std::uint32_t> units;
  for (std::uint32_t x = 1; x < tower->size(gf::Level::top_q2); ++x) units.push_back(x);
  for (const auto& g : all) {
    if (table_.count(g.key())) continue;
    int k = static_cast<int>(reps_.size());
    reps_.push_back(g);
    for (std::uint32_t x : units) {
      GroupElem tg = torus_embed(tower, x).mul(g);
      table_.emplace(tg.key(), std::make_pair(x, k));
    }
  }
}

std::pair<std::uint32_t, int> TorusCosets::factor(const GroupElem& g) const {
  auto it = table_.find(g.key());
  if (it == table_.end()) fail(ErrorKind::RangeError, "element not in the coset table");
  return it->second;
}

std::vector<GroupElem> torus_coset_reps(const gf::TowerPtr& tower) {
  return TorusCosets(tower).reps();
}

}  // namespace modrep::grp
