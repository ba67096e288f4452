#include "invdec/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "invdec/errors.hpp"

namespace invdec {

namespace {

constexpr long kPairBudget = 100000;

// Exponent tuples of the given arity with total degree exactly `degree`,
// first variable's exponent descending.
void tuples_of_degree(unsigned arity, long degree,
                      MultiPoly::Exponents& prefix,
                      std::vector<MultiPoly::Exponents>& out) {
  if (prefix.size() + 1 == arity) {
    prefix.push_back(static_cast<unsigned>(degree));
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (long e = degree; e >= 0; --e) {
    prefix.push_back(static_cast<unsigned>(e));
    tuples_of_degree(arity, degree - e, prefix, out);
    prefix.pop_back();
  }
}

// All exponent tuples with total degree up to max_degree, in graded order
// (degree ascending, then first variable's exponent descending).
std::vector<MultiPoly::Exponents> monomial_ladder(unsigned arity,
                                                  long max_degree) {
  std::vector<MultiPoly::Exponents> out;
  MultiPoly::Exponents prefix;
  for (long t = 0; t <= max_degree; ++t)
    tuples_of_degree(arity, t, prefix, out);
  return out;
}

}  // namespace

std::vector<Rational> coefficient_grid(long height, bool integer_coeffs) {
  if (height < 1) throw DomainError("height must be at least 1");
  std::vector<Rational> grid;
  if (integer_coeffs) {
    for (long n = -height; n <= height; ++n) grid.emplace_back(n);
    return grid;
  }
  std::set<Rational> seen;
  for (long den = 1; den <= height; ++den)
    for (long num = -height; num <= height; ++num) {
      Rational q(num, den);
      q.canonicalize();
      seen.insert(q);
    }
  grid.assign(seen.begin(), seen.end());
  return grid;
}

std::vector<UniPoly> enumerate_uni(const Corpus& corpus) {
  if (corpus.arity != 1)
    throw DomainError("univariate enumeration needs arity 1");
  std::vector<UniPoly> out;
  if (corpus.max_degree < 0) return out;
  if (corpus.positive_at && corpus.positive_at->points.size() != 1)
    throw DomainError("positivity filter arity does not match the corpus");

  std::vector<Rational> grid =
      coefficient_grid(corpus.height, corpus.integer_coeffs);
  std::size_t n = static_cast<std::size_t>(corpus.max_degree) + 1;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<Rational> cs(n);
    for (std::size_t k = 0; k < n; ++k) cs[k] = grid[idx[k]];
    UniPoly p{cs};
    if (!corpus.positive_at ||
        sign_at(p, corpus.positive_at->points[0]) == Sign::plus)
      out.push_back(std::move(p));
    std::size_t k = 0;
    while (k < n && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

std::vector<MultiPoly> enumerate_multi(const Corpus& corpus) {
  std::vector<MultiPoly> out;
  if (corpus.max_degree < 0) return out;
  if (corpus.arity < 1) throw DomainError("arity must be at least 1");
  if (corpus.positive_at &&
      corpus.positive_at->points.size() != corpus.arity)
    throw DomainError("positivity filter arity does not match the corpus");

  std::vector<Rational> grid =
      coefficient_grid(corpus.height, corpus.integer_coeffs);
  std::vector<MultiPoly::Exponents> monos =
      monomial_ladder(corpus.arity, corpus.max_degree);
  std::vector<std::size_t> idx(monos.size(), 0);
  for (;;) {
    MultiPoly p{corpus.arity};
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (sign_of(grid[idx[k]]) != Sign::zero)
        p = p + MultiPoly::monomial(corpus.arity, monos[k], grid[idx[k]]);
    if (!corpus.positive_at ||
        sign_at_tuple(MultiRationalFunction(p), *corpus.positive_at) == Sign::plus)
      out.push_back(std::move(p));
    std::size_t k = 0;
    while (k < monos.size() && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == monos.size()) break;
  }
  return out;
}

Report verify_closure(const RealPoint& alpha, const Corpus& corpus,
                      const SignOptions& opt) {
  Report rep;
  rep.suite = "closure";
  std::vector<std::pair<UniPoly, Piece>> kept;
  for (UniPoly& p : enumerate_uni(corpus)) {
    if (sign_at(p, alpha, opt) != Sign::plus) continue;
    PieceResult pr = classify3_traced(RationalFunction(p), alpha, opt);
    rep.max_bits_used = std::max(rep.max_bits_used, pr.bits_used);
    kept.emplace_back(std::move(p), pr.piece);
  }

  long total = 0;
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i; j < kept.size(); ++j)
      if (kept[i].second == kept[j].second) ++total;
  long stride = 1;
  if (total > kPairBudget) {
    stride = (total + kPairBudget - 1) / kPairBudget;
    rep.mode = "sampled(stride=" + std::to_string(stride) + ")";
  }

  long index = 0;
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i; j < kept.size(); ++j) {
      if (kept[i].second != kept[j].second) continue;
      if (index++ % stride != 0) continue;
      ++rep.cases;
      Piece piece = kept[i].second;
      for (const char* op : {"sum", "product"}) {
        UniPoly combined = op[0] == 's' ? kept[i].first + kept[j].first
                                        : kept[i].first * kept[j].first;
        PieceResult pr =
            classify3_traced(RationalFunction(combined), alpha, opt);
        rep.max_bits_used = std::max(rep.max_bits_used, pr.bits_used);
        if (pr.piece != piece)
          rep.violations.push_back(
              {kept[i].first.to_string() + " ; " + kept[j].first.to_string() +
                   " (" + op + ")",
               to_cstring(piece), to_cstring(pr.piece)});
      }
    }
  return rep;
}

Report verify_translation(const RealPoint& alpha, const Corpus& corpus,
                          const std::vector<Rational>& shifts,
                          const SignOptions& opt) {
  Report rep;
  rep.suite = "translation";
  for (const UniPoly& p : enumerate_uni(corpus)) {
    if (sign_at(p, alpha, opt) != Sign::plus) continue;
    PieceResult base = classify3_traced(RationalFunction(p), alpha, opt);
    rep.max_bits_used = std::max(rep.max_bits_used, base.bits_used);
    for (const Rational& q : shifts) {
      UniPoly shifted = p + UniPoly(q);
      if (sign_at(shifted, alpha, opt) != Sign::plus) continue;
      ++rep.cases;
      PieceResult moved =
          classify3_traced(RationalFunction(shifted), alpha, opt);
      rep.max_bits_used = std::max(rep.max_bits_used, moved.bits_used);
      if (moved.piece != base.piece)
        rep.violations.push_back({p.to_string() + " shifted by " + to_string(q),
                                  to_cstring(base.piece),
                                  to_cstring(moved.piece)});
    }
  }

  // the square-completion identity behind translation invariance, checked
  // once as an exact identity in two formal variables
  MultiPoly a = MultiPoly::variable(2, 0);
  MultiPoly r = MultiPoly::variable(2, 1);
  MultiPoly lhs = (a + r.scaled(Rational(2))) * (a + r.scaled(Rational(2)));
  MultiPoly rhs = a * a + ((a + r) * r).scaled(Rational(4));
  ++rep.cases;
  if (!(lhs == rhs))
    rep.violations.push_back(
        {"(a+2r)^2 against a^2+4(a+r)r", "identical polynomials", "different"});
  return rep;
}

Report verify_lift_agreement(const RealPoint& alpha, long samples,
                             unsigned long seed, const SignOptions& opt) {
  Report rep;
  rep.suite = "lift-agreement";
  std::mt19937 gen(static_cast<std::uint32_t>(seed));
  std::uniform_int_distribution<int> degree_dist(0, 4);
  std::uniform_int_distribution<long> coeff_dist(-5, 5);
  auto random_poly = [&]() {
    int d = degree_dist(gen);
    std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
    for (auto& c : cs) c = Rational(coeff_dist(gen));
    return UniPoly{cs};
  };

  long done = 0;
  while (done < samples) {
    UniPoly p1 = random_poly();
    UniPoly p2 = random_poly();
    if (p1.is_zero() || p2.is_zero()) continue;
    if (gcd(p1, p2).degree() != 0) continue;
    if (sign_at(p1, alpha, opt) != Sign::plus) continue;
    if (sign_at(p2, alpha, opt) != Sign::plus) continue;
    ++done;
    for (TwoPolicy policy :
         {TwoPolicy::zero_with_plus, TwoPolicy::zero_with_minus}) {
      ++rep.cases;
      TwoClass lifted = lift_classify(p1, p2, alpha, policy, opt);
      TwoClass direct =
          classify2(RationalFunction(p1, p2), alpha, policy, opt);
      if (lifted != direct)
        rep.violations.push_back(
            {p1.to_string() + " over " + p2.to_string() + " under " +
                 to_cstring(policy),
             to_cstring(direct), to_cstring(lifted)});
    }
  }
  return rep;
}

Report verify_recursion(const std::vector<HyperplaneKind>& kinds, unsigned K) {
  if (K < 3) throw DomainError("the prefix must reach at least index 3");
  Report rep;
  rep.suite = "recursion";
  for (const HyperplaneKind& kind : kinds) {
    LambdaSeq lam = lambda_prefix(kind, K);
    const QuadExt& l2 = lam[2];
    const QuadExt& l3 = lam[3];
    for (unsigned j = 1; j + 2 <= K; ++j) {
      ++rep.cases;
      QuadExt residue =
          l2 * l2 * lam[j] - l2 * lam[j + 1] - l3 * lam[j] + lam[j + 2];
      if (!(residue == QuadExt()))
        rep.violations.push_back({kind.to_string() + " at index " +
                                      std::to_string(j + 2),
                                  "residue 0", residue.to_string()});
    }
    if (l2.is_rational() && l3.is_rational()) {
      ++rep.cases;
      HyperplaneKind back =
          classify_params(l2.rational_value(), l3.rational_value());
      bool match = back.family() == kind.family();
      if (match) switch (kind.family()) {
          case Family::two_point:
            match = back.beta() == kind.beta() && back.gamma() == kind.gamma();
            break;
          case Family::derivation:
            match = kind.has_exact_delta() && back.delta() == kind.delta();
            break;
          case Family::complex_pair:
            match = back.u() == kind.u() && back.v() == kind.v();
            break;
        }
      if (!match)
        rep.violations.push_back(
            {kind.to_string(), "recovered by its second and third entries",
             back.to_string()});
    }
  }
  return rep;
}

}  // namespace invdec
