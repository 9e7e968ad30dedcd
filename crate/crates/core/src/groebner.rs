//! Buchberger's algorithm, normal forms, and the ideal operations built on
//! reduced Gröbner bases: equality, sum, intersection and saturation.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::gf::FieldElement;
use crate::mpoly::{Monomial, MonomialOrder, Polynomial, Ring, Term};

/// Full normal form of `f` modulo `basis`. Every element of `basis` must be monic.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = Arc::clone(f.ring());
    let field = *ring.field();
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.leading_term() {
        let divisor = basis.iter().find_map(|g| {
            let lm = g.leading_monomial()?;
            lm.divide_into(&lt.monomial).map(|q| (g, q))
        });
        match divisor {
            Some((g, q)) => {
                debug_assert_eq!(g.leading_coeff(), FieldElement::ONE);
                let c = field.neg(lt.coeff);
                p = p.add_scaled(c, &q, g);
            }
            None => rem.push(p.pop_leading().expect("nonzero")),
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let lcm = lf.lcm(lg);
    let qf = lf.divide_into(&lcm).expect("divides lcm");
    let qg = lg.divide_into(&lcm).expect("divides lcm");
    let minus_one = f.ring().field().neg(FieldElement::ONE);
    f.mul_term(FieldElement::ONE, &qf).add_scaled(minus_one, &qg, g)
}

/// A reduced, monic Gröbner basis sorted by leading monomial, descending.
///
/// The zero ideal has no elements and prints as `[0]`; the unit ideal is `[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.polys.iter().filter_map(|g| g.leading_monomial())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.polys)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Buchberger criterion audit: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let n = self.polys.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.normal_form(&s_polynomial(&self.polys[i], &self.polys[j])).is_zero()))
    }

    /// Monic, and no term of any member is divisible by another member's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.polys.iter().enumerate().all(|(i, g)| {
            g.leading_coeff() == FieldElement::ONE
                && g.terms().iter().all(|t| {
                    self.polys
                        .iter()
                        .enumerate()
                        .all(|(j, h)| j == i || !h.leading_monomial().expect("nonzero").divides(&t.monomial))
                })
        })
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.polys.is_empty() {
            return write!(f, "[0]");
        }
        let parts: Vec<String> = self.polys.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn add_to_basis(
    g: Polynomial,
    basis: &mut Vec<Polynomial>,
    pairs: &mut Vec<Pair>,
    pending: &mut HashSet<(usize, usize)>,
) {
    let k = basis.len();
    let lk = g.leading_monomial().expect("nonzero").clone();
    for (i, h) in basis.iter().enumerate() {
        let lcm = h.leading_monomial().expect("nonzero").lcm(&lk);
        pairs.push(Pair { i, j: k, lcm });
        pending.insert((i, k));
    }
    basis.push(g);
}

/// Reduced Gröbner basis of the ideal generated by `gens` under the ring's order.
///
/// Buchberger with the coprime-leading-monomial and chain criteria, selecting
/// the pair with the smallest lcm first.
pub fn buchberger(ring: &Arc<Ring>, gens: &[Polynomial]) -> GroebnerBasis {
    let unit = || GroebnerBasis { ring: Arc::clone(ring), polys: vec![ring.one()] };
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    for g in gens {
        debug_assert!(Arc::ptr_eq(g.ring(), ring) || **g.ring() == **ring);
        let g = reduce(g, &basis);
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return unit();
        }
        add_to_basis(g.monic(), &mut basis, &mut pairs, &mut pending);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                ring.cmp_monomials(&pairs[a].lcm, &pairs[b].lcm)
                    .then((pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        pending.remove(&(pair.i, pair.j));

        let li = basis[pair.i].leading_monomial().expect("nonzero");
        let lj = basis[pair.j].leading_monomial().expect("nonzero");
        if li.is_coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading_monomial().expect("nonzero").divides(&pair.lcm)
                && !pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let r = reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return unit();
        }
        add_to_basis(r.monic(), &mut basis, &mut pairs, &mut pending);
    }

    GroebnerBasis { ring: Arc::clone(ring), polys: interreduce(basis) }
}

/// Minimalizes and fully inter-reduces a Gröbner basis, then sorts it.
fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let lms: Vec<&Monomial> = basis.iter().map(|g| g.leading_monomial().expect("nonzero")).collect();
    let minimal: Vec<Polynomial> = basis
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            !lms.iter().enumerate().any(|(j, lj)| j != i && lj.divides(lms[i]) && (lj != &lms[i] || j < i))
        })
        .map(|(_, g)| g.clone())
        .collect();
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            // the leading term survives since no other leading monomial divides it
            let lead = minimal[i].leading_term().expect("nonzero").clone();
            let ring = minimal[i].ring();
            let tail = minimal[i].sub(&ring.term(lead.coeff, lead.monomial.clone()));
            ring.term(lead.coeff, lead.monomial).add(&reduce(&tail, &others))
        })
        .collect();
    if let Some(ring) = reduced.first().map(|g| Arc::clone(g.ring())) {
        reduced.sort_by(|a, b| {
            ring.cmp_monomials(b.leading_monomial().expect("nonzero"), a.leading_monomial().expect("nonzero"))
        });
    }
    reduced
}

/// An ideal given by generators, with its reduced Gröbner basis computed on demand.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// The zero ideal is represented by the single generator `0`.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Ideal {
        let generators = if generators.is_empty() { vec![ring.zero()] } else { generators };
        Ideal { ring: Arc::clone(ring), generators, gb: OnceLock::new() }
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<Ring>, gens: &[S]) -> crate::Result<Ideal> {
        let gens = gens.iter().map(|s| ring.parse(s.as_ref())).collect::<crate::Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn from_groebner(gb: GroebnerBasis) -> Ideal {
        let ring = Arc::clone(gb.ring());
        let generators = if gb.polys.is_empty() { vec![ring.zero()] } else { gb.polys.clone() };
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        Ideal { ring, generators, gb: cell }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger(&self.ring, &self.generators))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    /// Equality as ideals, under the ring's own order.
    pub fn same_as(&self, other: &Ideal) -> bool {
        self.groebner() == other.groebner()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// The same generators in a ring that differs only in its order.
    pub fn with_order(&self, order: &MonomialOrder) -> Ideal {
        if self.ring.order() == order {
            return self.clone();
        }
        let ring = self.ring.with_order(order.clone());
        Ideal::new(&ring, self.generators.iter().map(|g| g.reorder(&ring)).collect())
    }
}

/// True iff the reduced Gröbner bases under `order` coincide.
pub fn ideal_equal(a: &Ideal, b: &Ideal, order: &MonomialOrder) -> bool {
    let a = a.with_order(order);
    let b = b.with_order(order);
    a.groebner().polys == b.groebner().polys
}

/// Members of `gb` free of the leading variable, moved back into `ring`.
fn eliminate_leading(gb: &GroebnerBasis, ring: &Arc<Ring>) -> Vec<Polynomial> {
    gb.polys
        .iter()
        .filter(|g| g.degree_in(0) == Some(0))
        .map(|g| {
            ring.from_terms(
                g.terms().iter().map(|t| (t.coeff, Monomial::new(t.monomial.exponents()[1..].to_vec()))).collect(),
            )
        })
        .collect()
}

fn shifted(ring: &Ring) -> Vec<usize> {
    (1..=ring.nvars()).collect()
}

/// `a ∩ b` via `⟨t·a, (1 − t)·b⟩ ∩ F_p[x]` with `t` greatest under lex.
pub fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    let ring = a.ring();
    let ext = ring.with_leading_variable("t");
    let map = shifted(ring);
    let t = ext.var(0);
    let one_minus_t = ext.one().sub(&t);
    let mut gens: Vec<Polynomial> = a.generators.iter().map(|g| t.mul(&g.embed(&ext, &map))).collect();
    gens.extend(b.generators.iter().map(|g| one_minus_t.mul(&g.embed(&ext, &map))));
    let gb = buchberger(&ext, &gens);
    Ideal::new(ring, eliminate_leading(&gb, ring))
}

/// Gröbner basis of `gens(i) ∪ {1 − u·g}` in `F_p[u, x]`, pure lex with `u` greatest.
pub fn saturation_basis(i: &Ideal, g: &Polynomial) -> GroebnerBasis {
    let ring = i.ring();
    let ext = ring.with_leading_variable("u");
    let map = shifted(ring);
    let u = ext.var(0);
    let mut gens: Vec<Polynomial> = i.generators.iter().map(|f| f.embed(&ext, &map)).collect();
    gens.push(ext.one().sub(&u.mul(&g.embed(&ext, &map))));
    buchberger(&ext, &gens)
}

/// `i : ⟨g⟩^∞`, the elimination ideal of [`saturation_basis`].
pub fn saturate(i: &Ideal, g: &Polynomial) -> Ideal {
    let gb = saturation_basis(i, g);
    Ideal::new(i.ring(), eliminate_leading(&gb, i.ring()))
}
