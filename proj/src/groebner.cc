#include "fermat/groebner.hh"

#include <algorithm>
#include <mutex>
#include <optional>

#include "fermat/deadline.hh"
#include "fermat/errors.hh"
#include "fermat/hilbert.hh"

namespace fermat {

struct Ideal::BasisCell {
  std::once_flag flag;
  std::vector<Polynomial> basis;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cell_(std::make_shared<BasisCell>()) {
  generators_.reserve(generators.size());
  for (Polynomial& g : generators) {
    if (g.is_zero()) continue;
    if (g.ring() != ring_) {
      if (!g.ring()->compatible_with(*ring_))
        throw StructuralError("generator does not live in the ideal's ring");
      g = transplant(g, ring_);
    }
    generators_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cell_->flag,
                 [this] { cell_->basis = buchberger(generators_, ring_->order()); });
  return cell_->basis;
}

Ideal Ideal::plus(std::vector<Polynomial> extra) const {
  std::vector<Polynomial> gens = generators_;
  for (Polynomial& g : extra) gens.push_back(std::move(g));
  return Ideal(ring_, std::move(gens));
}

namespace {

// Division step working directly on term vectors to avoid re-copying the
// untouched prefix of the intermediate polynomial.
struct Reducer {
  const RingPtr& ring;
  std::span<const Polynomial> basis;
  std::vector<PrimeField::Element> lead_inverse;

  explicit Reducer(const RingPtr& r, std::span<const Polynomial> b) : ring(r), basis(b) {
    lead_inverse.reserve(basis.size());
    for (const Polynomial& g : basis)
      lead_inverse.push_back(g.is_zero() ? 0 : r->field().inv(g.lead_term().coeff));
  }

  Polynomial normal_form(const Polynomial& f) const {
    const PrimeField& F = ring->field();
    std::vector<Term> result;
    Polynomial work = f;
    std::size_t start = 0;
    while (start < work.terms().size()) {
      check_deadline();
      const Term& lead = work.terms()[start];
      const Polynomial* reducer = nullptr;
      PrimeField::Element scale = 0;
      for (std::size_t gi = 0; gi < basis.size(); ++gi) {
        const Polynomial& g = basis[gi];
        if (!g.is_zero() && g.lead_term().mono.divides(lead.mono)) {
          reducer = &g;
          scale = F.mul(lead.coeff, lead_inverse[gi]);
          break;
        }
      }
      if (reducer == nullptr) {
        result.push_back(lead);
        ++start;
        continue;
      }
      Monomial shift = lead.mono.quotient_by(reducer->lead_term().mono);
      std::vector<Term> rest(work.terms().begin() + static_cast<std::ptrdiff_t>(start),
                             work.terms().end());
      work = Polynomial::from_terms(ring, std::move(rest)).subtract_scaled(scale, shift, *reducer);
      start = 0;
    }
    return Polynomial::from_terms(ring, std::move(result));
  }
};

struct SPair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t degree;
};

bool pair_less(const SPair& a, const SPair& b, const MonomialOrder& ord) {
  if (a.degree != b.degree) return a.degree < b.degree;
  auto c = compare_monomials(a.lcm, b.lcm, ord);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// Gebauer-Moller update: prune the pending pair set against the new basis
// element and generate the surviving new pairs.
void update_pairs(std::vector<SPair>& pairs, const std::vector<Polynomial>& basis,
                  std::size_t t) {
  const Monomial& lt_t = basis[t].lead_term().mono;

  std::erase_if(pairs, [&](const SPair& p) {
    if (!lt_t.divides(p.lcm)) return false;
    Monomial lit = Monomial::lcm(basis[p.i].lead_term().mono, lt_t);
    Monomial ljt = Monomial::lcm(basis[p.j].lead_term().mono, lt_t);
    return !(lit == p.lcm) && !(ljt == p.lcm);
  });

  struct Candidate {
    std::size_t i;
    Monomial lcm;
    bool coprime;
    bool dead = false;
  };
  std::vector<Candidate> cands;
  cands.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    const Monomial& lt_i = basis[i].lead_term().mono;
    cands.push_back({i, Monomial::lcm(lt_i, lt_t), lt_i.coprime_to(lt_t)});
  }

  // M criterion: drop candidates whose lcm is a proper multiple of another's.
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (cands[a].dead) continue;
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (a == b || cands[b].dead) continue;
      if (cands[b].lcm.divides(cands[a].lcm) && !(cands[b].lcm == cands[a].lcm)) {
        cands[a].dead = true;
        break;
      }
    }
  }
  // F criterion: keep one candidate per lcm, preferring a coprime one.
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (cands[a].dead) continue;
    for (std::size_t b = a + 1; b < cands.size(); ++b) {
      if (cands[b].dead || !(cands[a].lcm == cands[b].lcm)) continue;
      if (cands[b].coprime && !cands[a].coprime) {
        cands[a].dead = true;
        break;
      }
      cands[b].dead = true;
    }
  }
  // B1 (product criterion): coprime heads reduce to zero.
  for (const Candidate& c : cands) {
    if (c.dead || c.coprime) continue;
    pairs.push_back({c.i, t, c.lcm, c.lcm.total_degree()});
  }
}

std::vector<Polynomial> reduced_form(std::vector<Polynomial> basis, const RingPtr& ring) {
  // Minimal heads only.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool keep = true;
    for (std::size_t b = 0; b < basis.size() && keep; ++b) {
      if (a == b) continue;
      const Monomial& la = basis[a].lead_term().mono;
      const Monomial& lb = basis[b].lead_term().mono;
      if (lb.divides(la) && (!(la == lb) || b < a)) keep = false;
    }
    if (keep) minimal.push_back(basis[a]);
  }
  // Fully reduce each tail against the others, make monic.
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    Reducer red(ring, others);
    Polynomial nf = red.normal_form(minimal[a]);
    if (!nf.is_zero()) reduced.push_back(nf.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
    return compare_monomials(x.lead_term().mono, y.lead_term().mono, ring->order()) ==
           std::strong_ordering::less;
  });
  return reduced;
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const Polynomial& g : basis)
    if (!g.is_zero()) require_same_ring(f, g);
  Reducer red(f.ring(), basis);
  return red.normal_form(f);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw StructuralError("s_polynomial requires nonzero inputs");
  require_same_ring(f, g);
  Polynomial fm = f.monic();
  Polynomial gm = g.monic();
  Monomial l = Monomial::lcm(fm.lead_term().mono, gm.lead_term().mono);
  Monomial u = l.quotient_by(fm.lead_term().mono);
  Monomial v = l.quotient_by(gm.lead_term().mono);
  return fm.times_term(1, u).subtract_scaled(1, v, gm);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const MonomialOrder& ord) {
  std::vector<Polynomial> input;
  RingPtr ring;
  for (const Polynomial& g : generators) {
    if (g.is_zero()) continue;
    if (!ring) {
      ring = g.ring();
      if (!(ring->order() == ord))
        ring = make_ring(ring->field().modulus(), ring->var_names(), ord);
    }
    input.push_back(g.ring() == ring ? g : transplant(g, ring));
  }
  if (input.empty()) return {};

  std::vector<Polynomial> basis;
  std::vector<SPair> pairs;
  auto incorporate = [&](const Polynomial& candidate) {
    Reducer red(ring, basis);
    Polynomial nf = red.normal_form(candidate);
    if (nf.is_zero()) return;
    basis.push_back(nf.monic());
    update_pairs(pairs, basis, basis.size() - 1);
  };

  for (const Polynomial& g : input) incorporate(g);

  while (!pairs.empty()) {
    check_deadline();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pair_less(pairs[k], pairs[best], ring->order())) best = k;
    SPair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    incorporate(s_polynomial(basis[p.i], basis[p.j]));
  }

  return reduced_form(std::move(basis), ring);
}

namespace {

// Shared by eliminate/saturate/colon: prepend an auxiliary variable as the
// dominant elimination block.
RingPtr aux_ring(const RingPtr& base, const std::string& aux_name) {
  std::vector<std::string> names;
  names.reserve(base->var_count() + 1);
  names.push_back(aux_name);
  for (const std::string& n : base->var_names()) names.push_back(n);
  return make_ring(base->field().modulus(), std::move(names),
                   MonomialOrder::block_elimination(1));
}

Polynomial lift(const Polynomial& f, const RingPtr& target, std::uint32_t aux_power) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const Term& t : f.terms()) {
    std::vector<std::uint32_t> e;
    e.reserve(t.mono.var_count() + 1);
    e.push_back(aux_power);
    e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// Keep the basis elements free of the first `drop` variables and re-express
// them in `target` (which has the remaining variables).
std::vector<Polynomial> contract(const std::vector<Polynomial>& basis, std::size_t drop,
                                 const RingPtr& target) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : basis) {
    bool free = true;
    for (const Term& t : g.terms()) {
      for (std::size_t v = 0; v < drop && free; ++v)
        if (t.mono.exponent(v) != 0) free = false;
      if (!free) break;
    }
    if (!free) continue;
    std::vector<Term> terms;
    terms.reserve(g.term_count());
    for (const Term& t : g.terms()) {
      std::vector<std::uint32_t> e(t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(drop),
                                   t.mono.exponents().end());
      terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    out.push_back(Polynomial::from_terms(target, std::move(terms)));
  }
  return out;
}

// Quotient g / f, which must be exact.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
  const PrimeField& F = g.ring()->field();
  PrimeField::Element f_inv = F.inv(f.lead_term().coeff);
  std::vector<Term> quotient;
  Polynomial rest = g;
  while (!rest.is_zero()) {
    const Term& lead = rest.lead_term();
    if (!f.lead_term().mono.divides(lead.mono))
      throw StructuralError("inexact polynomial division");
    PrimeField::Element c = F.mul(lead.coeff, f_inv);
    Monomial m = lead.mono.quotient_by(f.lead_term().mono);
    quotient.push_back({m, c});
    rest = rest.subtract_scaled(c, m, f);
  }
  return Polynomial::from_terms(g.ring(), std::move(quotient));
}

}  // namespace

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  const RingPtr& ring = ideal.ring();
  if (k >= ring->var_count())
    throw StructuralError("cannot eliminate every variable of the ring");
  if (k == 0) return ideal;
  RingPtr block = make_ring(ring->field().modulus(), ring->var_names(),
                            MonomialOrder::block_elimination(static_cast<std::uint32_t>(k)));
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Polynomial& g : ideal.generators()) gens.push_back(transplant(g, block));
  std::vector<Polynomial> basis = buchberger(gens, block->order());
  RingPtr target = make_ring(
      ring->field().modulus(),
      std::vector<std::string>(ring->var_names().begin() + static_cast<std::ptrdiff_t>(k),
                               ring->var_names().end()),
      MonomialOrder::grevlex());
  return Ideal(target, contract(basis, k, target));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw StructuralError("cannot saturate by the zero polynomial");
  const RingPtr& ring = ideal.ring();
  require_same_ring(f, Polynomial::zero(ring));
  RingPtr aux = aux_ring(ring, "t");
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const Polynomial& g : ideal.generators()) gens.push_back(lift(g, aux, 0));
  gens.push_back(lift(f, aux, 1) - Polynomial::constant(aux, 1));
  std::vector<Polynomial> basis = buchberger(gens, aux->order());
  return Ideal(ring, contract(basis, 1, ring));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw StructuralError("cannot take a colon by the zero polynomial");
  const RingPtr& ring = ideal.ring();
  require_same_ring(f, Polynomial::zero(ring));
  if (ideal.generators().empty()) return Ideal(ring, {});
  // I ∩ (f) via the tag variable: (t*I, (1-t)*f) ∩ k[x].
  RingPtr aux = aux_ring(ring, "t");
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const Polynomial& g : ideal.generators()) gens.push_back(lift(g, aux, 1));
  gens.push_back(lift(f, aux, 0) - lift(f, aux, 1));
  std::vector<Polynomial> basis = buchberger(gens, aux->order());
  std::vector<Polynomial> quotients;
  for (const Polynomial& g : contract(basis, 1, ring)) quotients.push_back(divide_exact(g, f));
  return Ideal(ring, std::move(quotients));
}

std::uint64_t degree_projective(const Ideal& ideal) {
  const std::vector<Polynomial>& basis = ideal.groebner_basis();
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const Polynomial& g : basis) leads.push_back(g.lead_term().mono);
  HilbertSummary s = analyze_hilbert_numerator(
      hilbert_numerator(std::move(leads), ideal.ring()->var_count()),
      ideal.ring()->var_count());
  if (s.empty || s.cone_dimension == 0) return 0;
  if (s.cone_dimension == 1) return s.degree;
  throw DimensionError("projective scheme has dimension " +
                       std::to_string(s.cone_dimension - 1) + ", expected 0");
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  if (a.ring()->field() != b.ring()->field() ||
      a.ring()->var_count() != b.ring()->var_count())
    throw StructuralError("ideal comparison across different rings");
  const std::vector<Polynomial>& ga = a.groebner_basis();
  std::vector<Polynomial> gb;
  if (a.ring()->order() == b.ring()->order()) {
    gb = b.groebner_basis();
  } else {
    gb = buchberger(b.generators(), a.ring()->order());
  }
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (ga[i].term_count() != gb[i].term_count()) return false;
    for (std::size_t t = 0; t < ga[i].term_count(); ++t) {
      if (ga[i].terms()[t].coeff != gb[i].terms()[t].coeff ||
          !(ga[i].terms()[t].mono == gb[i].terms()[t].mono))
        return false;
    }
  }
  return true;
}

}  // namespace fermat
