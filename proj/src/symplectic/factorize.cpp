#include "bilevel/random.hpp"
#include "bilevel/symplectic.hpp"

namespace bilevel {

namespace {

const SpMatrix& k_matrix() {
  static const SpMatrix k = nu6(builtin("J6"));
  return k;
}

// Generators of GAMMA_NAT(6): j1 of the two elementary generators of
// Gamma(6), the Heisenberg units and their J6-conjugates at level 6, with
// inverses.
const std::vector<SpMatrix>& nat_generators() {
  static const std::vector<SpMatrix> gens = [] {
    std::vector<SpMatrix> g;
    g.push_back(j1(Mat2{{{1, 6}, {0, 1}}}));
    g.push_back(j1(Mat2{{{1, 0}, {6, 1}}}));
    const SpMatrix J6 = builtin("J6"), J6inv = sp_inverse(J6);
    for (HeisenbergElt h : {HeisenbergElt{1, 0, 0}, HeisenbergElt{0, 1, 0}, HeisenbergElt{0, 0, 1}}) {
      g.push_back(heisenberg(h));
      g.push_back(sp_mul(sp_mul(J6, heisenberg(6 * h.m, 6 * h.n, 6 * h.k)), J6inv));
    }
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) g.push_back(sp_inverse(g[i]));
    return g;
  }();
  return gens;
}

const std::vector<SpMatrix>& tilde_generators() {
  static const std::vector<SpMatrix> gens = [] {
    std::vector<SpMatrix> g;
    for (const auto& m : nat_generators()) g.push_back(nu6(m));
    return g;
  }();
  return gens;
}

BigInt entry(const SpMatrix& m, int i, int k) { return m[i][k].as_rational().to_integer(); }

HeisenbergElt heis_inverse(const HeisenbergElt& h) { return *heisenberg_coords(sp_inverse(heisenberg(h))); }

bool is_trivial(const HeisenbergElt& h) { return h.m == 0 && h.n == 0 && h.k == 0; }

void push_heis(std::vector<FactorToken>& w, const HeisenbergElt& h) {
  if (!is_trivial(h)) w.push_back({FactorToken::Kind::HEIS, h, {}});
}

// K nu6(h) K^-1, with K^-1 = SIGN * K.
void push_conjugated_heis(std::vector<FactorToken>& w, const HeisenbergElt& h) {
  if (is_trivial(h)) return;
  w.push_back({FactorToken::Kind::J6TILDE, {}, {}});
  push_heis(w, h);
  w.push_back({FactorToken::Kind::SIGN, {}, {}});
  w.push_back({FactorToken::Kind::J6TILDE, {}, {}});
}

SpMatrix conjugated_heis(const HeisenbergElt& h) {
  return sp_mul(sp_mul(k_matrix(), nu6(heisenberg(h))), sp_inverse(k_matrix()));
}

}  // namespace

SpMatrix sample_group_element(const GroupId& g, int word_len, std::uint64_t seed) {
  using K = GroupId::Kind;
  const bool ok = g.kind == K::GAMMA_NAT_TILDE ||
                  ((g.kind == K::GAMMA_NAT || g.kind == K::GAMMA_BIL) && g.param == 6);
  if (!ok) throw Error(ErrorKind::InvalidQuery, "no sampler for " + g.str());
  const auto& gens = g.kind == K::GAMMA_NAT_TILDE ? tilde_generators() : nat_generators();
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    SpMatrix m = identity4<QuadNum>();
    for (int i = 0; i < word_len; ++i) {
      m = sp_mul(m, gens[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(gens.size()) - 1))]);
    }
    if (g.kind == K::GAMMA_BIL && rng.coin()) m = sp_mul(builtin("ZETA"), m);
    if (in_group(m, g)) return m;
  }
  throw Error(ErrorKind::SamplingExhausted, "no member of " + g.str() + " after 100 words");
}

SpMatrix FactorToken::matrix() const {
  switch (kind) {
    case Kind::J6TILDE: return k_matrix();
    case Kind::HEIS: return nu6(heisenberg(h));
    case Kind::GAMMA6: return nu6(j1(g));
    case Kind::SIGN: return sp_neg(identity4<QuadNum>());
  }
  return identity4<QuadNum>();
}

std::string FactorToken::str() const {
  switch (kind) {
    case Kind::J6TILDE: return "J6TILDE";
    case Kind::HEIS: return "HEIS(" + h.m.get_str() + "," + h.n.get_str() + "," + h.k.get_str() + ")";
    case Kind::GAMMA6:
      return "GAMMA6([[" + g[0][0].get_str() + "," + g[0][1].get_str() + "],[" + g[1][0].get_str() + "," +
             g[1][1].get_str() + "]])";
    case Kind::SIGN: return "SIGN";
  }
  return "?";
}

SpMatrix FactorWord::product() const {
  SpMatrix m = identity4<QuadNum>();
  for (const auto& t : tokens) m = sp_mul(m, t.matrix());
  return m;
}

std::string FactorWord::str() const {
  if (tokens.empty()) return "1";
  std::string s;
  for (const auto& t : tokens) s += (s.empty() ? "" : " * ") + t.str();
  return s;
}

FactorWord factorize_nat(const SpMatrix& input) {
  if (!in_group(input, GroupId{GroupId::Kind::GAMMA_NAT_TILDE, 6})) {
    throw Error(ErrorKind::NotInGroup, "matrix is not in nu6(GAMMA_NAT(6))");
  }
  const BigInt six(6);
  const SpMatrix& K = k_matrix();
  const SpMatrix Kinv = sp_inverse(K);

  // Invariant: input = cur * (product of tail).
  SpMatrix cur = input;
  std::vector<FactorToken> tail;
  auto peel = [&](const SpMatrix& x, std::vector<FactorToken> inverse_tokens) {
    cur = sp_mul(cur, x);
    tail.insert(tail.begin(), inverse_tokens.begin(), inverse_tokens.end());
  };
  auto conj_tokens = [](const HeisenbergElt& h) {
    std::vector<FactorToken> w;
    push_conjugated_heis(w, h);
    return w;
  };
  auto heis_tokens = [](const HeisenbergElt& h) {
    std::vector<FactorToken> w;
    push_heis(w, h);
    return w;
  };

  if (entry(cur, 1, 1) != 1) {
    // A zero (2,1) entry leaves nothing for the (lambda, mu) search to
    // work with, so first move part of the row into it.
    if (entry(cur, 1, 0) == 0) {
      if (entry(cur, 1, 2) == 0) peel(conjugated_heis({0, 1, 0}), conj_tokens(heis_inverse({0, 1, 0})));
      const Mat2 g{{{1, 6}, {0, 1}}}, ginv{{{1, -6}, {0, 1}}};
      peel(nu6(j1(g)), {{FactorToken::Kind::GAMMA6, {}, ginv}});
    }

    if (gcd(entry(cur, 1, 0), entry(cur, 1, 2)) != six) {
      bool found = false;
      long lambda = 0, mu = 0;
      for (long total = 1; total <= 2 * kFactorSearchBound && !found; ++total) {
        for (long m = -kFactorSearchBound; m <= kFactorSearchBound && !found; ++m) {
          const long rest = total - (m < 0 ? -m : m);
          if (rest < 0 || rest > kFactorSearchBound) continue;
          for (long l : {rest, -rest}) {
            SpMatrix e = sp_mul(sp_mul(nu6(heisenberg(m, 0, 0)), K), sp_mul(nu6(heisenberg(0, l, 0)), Kinv));
            SpMatrix cand = sp_mul(cur, e);
            if (gcd(entry(cand, 1, 0), entry(cand, 1, 2)) == six) {
              mu = m;
              lambda = l;
              found = true;
              break;
            }
            if (rest == 0) break;
          }
        }
      }
      if (!found) {
        throw Error(ErrorKind::SearchBudgetExceeded,
                    "no (lambda, mu) with |lambda|, |mu| <= " + std::to_string(kFactorSearchBound));
      }
      std::vector<FactorToken> inv = conj_tokens(heis_inverse({0, lambda, 0}));
      push_heis(inv, heis_inverse({mu, 0, 0}));
      peel(sp_mul(sp_mul(nu6(heisenberg(mu, 0, 0)), K), sp_mul(nu6(heisenberg(0, lambda, 0)), Kinv)), inv);
    }

    // Second row is (6x1, 6x2 + 1, 6x3, 6x4) with gcd(x1, x3) = 1.
    const BigInt x1 = entry(cur, 1, 0) / six, x2 = (entry(cur, 1, 1) - 1) / six, x3 = entry(cur, 1, 2) / six;
    const ExtendedGcd eg = extended_gcd(x1, x3);
    const HeisenbergElt p{-x2 * eg.x, -x2 * eg.y, 0};
    peel(nu6(heisenberg(p)), heis_tokens(heis_inverse(p)));
    if (entry(cur, 1, 1) != 1) throw Error(ErrorKind::ConstructionMismatch, "(2,2) entry not normalized");
  }

  const HeisenbergElt hb{-entry(cur, 1, 0) / six, -entry(cur, 1, 2) / six, -entry(cur, 1, 3) / six};
  peel(sp_inverse(conjugated_heis(hb)), conj_tokens(hb));

  const SpMatrix sigma = nu6_inv(cur);
  if (!in_group(sigma, GroupId{GroupId::Kind::J_GAMMA6_HEIS, 6})) {
    throw Error(ErrorKind::NotInGroup, "residue is not in j(Gamma(6) x H(Z))");
  }
  const Mat2 g{{{entry(sigma, 0, 0), entry(sigma, 2, 0)}, {entry(sigma, 0, 2), entry(sigma, 2, 2)}}};
  const HeisenbergElt h = *heisenberg_coords(sp_mul(sigma, sp_inverse(j1(g))));

  FactorWord w;
  push_heis(w.tokens, h);
  if (g != Mat2{{{1, 0}, {0, 1}}}) w.tokens.push_back({FactorToken::Kind::GAMMA6, {}, g});
  w.tokens.insert(w.tokens.end(), tail.begin(), tail.end());

  if (w.product() != input) throw Error(ErrorKind::ConstructionMismatch, "factor word does not reproduce input");
  return w;
}

}  // namespace bilevel
