//! Buchberger-based Groebner engine and the ideal calculus built on it:
//! sum, product, intersection, colon, containment, canonical equality.
//!
//! Every ideal caches its reduced Groebner basis. The reduced basis is
//! unique for a fixed term order, so equality of ideals is equality of
//! reduced bases and all reports built from them are canonical.

use std::cmp::Ordering;
use std::sync::Arc;

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingCtx};

/// Resource caps for a single Buchberger run. Breaching a cap is a
/// structured error, never a silent truncation.
#[derive(Debug, Clone, Copy)]
pub struct GbCaps {
    /// Maximum number of S-pairs processed.
    pub max_pairs: u64,
    /// Maximum number of single reduction steps across the run.
    pub max_reductions: u64,
}

impl Default for GbCaps {
    fn default() -> Self {
        GbCaps {
            max_pairs: 200_000,
            max_reductions: 20_000_000,
        }
    }
}

/// A reduced Groebner basis: monic, auto-reduced, sorted ascending by
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
}

/// An ideal of F_p[x_1..x_d], held as a generator list with a cached
/// reduced Groebner basis. Immutable after construction; the cache is
/// write-once and race-benign because the reduced basis is canonical.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<RingCtx>,
    gens: Vec<Polynomial>,
    gb: OnceCell<GroebnerBasis>,
}

impl Ideal {
    pub fn new(ring: &Arc<RingCtx>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            same_ring(ring, g.ring())?;
        }
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceCell::new(),
        })
    }

    pub fn zero(ring: &Arc<RingCtx>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceCell::new(),
        }
    }

    pub fn unit(ring: &Arc<RingCtx>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            gb: OnceCell::new(),
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    #[inline]
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The reduced Groebner basis, computed on first use with default caps.
    pub fn gb(&self) -> Result<&GroebnerBasis> {
        self.gb_with(GbCaps::default())
    }

    pub fn gb_with(&self, caps: GbCaps) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let computed = buchberger(&self.ring, &self.gens, caps)?;
        Ok(self.gb.get_or_init(|| computed))
    }

    /// Canonical generators: the reduced Groebner basis, leading terms last
    /// to first is descending; stored ascending, exposed as-is.
    pub fn canonical_gens(&self) -> Result<&[Polynomial]> {
        Ok(self.gb()?.polys())
    }

    /// Canonical string form, one generator per entry, descending by
    /// leading monomial (largest first).
    pub fn canonical_strings(&self) -> Result<Vec<String>> {
        let mut v: Vec<String> = self.gb()?.polys().iter().map(|p| p.to_string()).collect();
        v.reverse();
        Ok(v)
    }

    /// Unique remainder of `f` modulo the reduced basis; zero iff `f` lies
    /// in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, f.ring())?;
        let gb = self.gb()?;
        reduce_full(f, gb.polys(), &mut Budget::unbounded())
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Does `self` contain `other` (every generator of `other` reduces to
    /// zero against `self`)?
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        same_ring(&self.ring, &other.ring)?;
        for g in &other.gens {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mathematical equality: equality of reduced Groebner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        same_ring(&self.ring, &other.ring)?;
        Ok(self.gb()? == other.gb()?)
    }

    pub fn is_zero_ideal(&self) -> Result<bool> {
        Ok(self.gb()?.is_zero())
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn is_proper(&self) -> Result<bool> {
        Ok(!self.is_unit_ideal()?)
    }

    /// Build an ideal whose generators are already known to be its reduced
    /// Groebner basis: monic, auto-reduced, ascending by leading monomial.
    /// Callers carry the mathematical justification.
    pub(crate) fn from_reduced_basis(ring: &Arc<RingCtx>, basis: Vec<Polynomial>) -> Ideal {
        let out = Ideal {
            ring: ring.clone(),
            gens: basis.clone(),
            gb: OnceCell::new(),
        };
        let _ = out.gb.set(GroebnerBasis { basis });
        out
    }

    /// Replace the generator list by the reduced basis.
    pub fn canonicalized(&self) -> Result<Ideal> {
        let gb = self.gb()?.clone();
        let out = Ideal {
            ring: self.ring.clone(),
            gens: gb.polys().to_vec(),
            gb: OnceCell::new(),
        };
        let _ = out.gb.set(gb);
        Ok(out)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        same_ring(&self.ring, &other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)?.canonicalized()
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        same_ring(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)?.canonicalized()
    }

    /// Intersection via a single auxiliary variable:
    /// I cap J = (t*I + (1-t)*J) cap S under an order eliminating t.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        same_ring(&self.ring, &other.ring)?;
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ideal::zero(&self.ring).canonicalized();
        }
        let (ext, _) = self.ring.with_aux_var();
        // variable i of the base ring sits at position i + 1
        let shift: Vec<usize> = (0..self.ring.num_vars()).map(|i| i + 1).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(t.mul(&g.map_vars(&ext, &shift))?);
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.map_vars(&ext, &shift))?);
        }
        let lifted = Ideal::new(&ext, gens)?;
        let gb = lifted.gb()?;
        let back: Vec<usize> = (0..self.ring.num_vars()).collect();
        let kept: Vec<Polynomial> = gb
            .polys()
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
            .map(|p| {
                let stripped = p
                    .terms()
                    .iter()
                    .map(|(m, c)| (Monomial::new(m.exponents()[1..].to_vec()), *c))
                    .collect::<Vec<_>>();
                Polynomial::from_terms(&self.ring, stripped)
            })
            .map(|p| p.map_vars(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, kept)?.canonicalized()
    }

    /// Colon ideal (self : other) = { s : s*other in self }, computed per
    /// generator f of `other` through (1/f) * (self cap (f)).
    ///
    /// Generators the accumulated result already multiplies into `self`
    /// are skipped; the accumulator only shrinks, so skipped generators
    /// stay satisfied and the final value is the full intersection.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        same_ring(&self.ring, &other.ring)?;
        let mut nonzero: Vec<&Polynomial> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroColon);
        }
        nonzero.sort_by_key(|g| (g.total_degree(), g.terms().len()));
        let mut acc: Option<Ideal> = None;
        for f in nonzero {
            if let Some(cur) = &acc {
                let mut satisfied = true;
                for a in cur.gens() {
                    if !self.contains_poly(&a.mul(f)?)? {
                        satisfied = false;
                        break;
                    }
                }
                if satisfied {
                    continue;
                }
            }
            let principal = Ideal::new(&self.ring, vec![f.clone()])?;
            let meet = self.intersect(&principal)?;
            let quotient_gens = meet
                .gens()
                .iter()
                .map(|g| g.exact_div(f))
                .collect::<Result<Vec<_>>>()?;
            let part = Ideal::new(&self.ring, quotient_gens)?.canonicalized()?;
            acc = Some(match acc {
                None => part,
                Some(cur) => cur.intersect(&part)?,
            });
        }
        acc.unwrap().canonicalized()
    }
}

// ---------------------------------------------------------------------------
// Division and Buchberger internals
// ---------------------------------------------------------------------------

/// Reduction-step budget for a Buchberger run.
struct Budget {
    remaining: u64,
    cap: u64,
}

impl Budget {
    fn new(cap: u64) -> Self {
        Budget { remaining: cap, cap }
    }

    fn unbounded() -> Self {
        Budget {
            remaining: u64::MAX,
            cap: u64::MAX,
        }
    }

    fn charge(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::ResourceExhausted {
                what: "reduction steps",
                cap: self.cap,
            });
        }
        self.remaining -= 1;
        Ok(())
    }
}

/// Full reduction: the unique remainder of `f` against `basis` (every term
/// of the remainder is reducible by no basis leading term).
fn reduce_full(f: &Polynomial, basis: &[Polynomial], budget: &mut Budget) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let mut work = f.clone();
    let mut rem: Vec<(Monomial, u64)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c)) {
        for g in basis {
            let glm = match g.leading_monomial() {
                Some(m) => m,
                None => continue,
            };
            if let Some(qm) = lm.div(glm) {
                budget.charge()?;
                // basis elements are monic throughout
                work = work.sub(&g.mul_term(&qm, lc)?)?;
                continue 'outer;
            }
        }
        rem.push((lm, lc));
        work = Polynomial::from_terms(&ring, work.terms()[1..].to_vec());
    }
    // terms were peeled in descending order
    Ok(Polynomial::from_terms(&ring, rem))
}

/// Top-reduction with sugar tracking: cancel the leading term while it is
/// reducible and stop at the first irreducible one, leaving the tail
/// untouched. Tails are cleaned up once at the end of the run.
fn reduce_top(
    f: Polynomial,
    sugar: u64,
    basis: &[Polynomial],
    sugars: &[u64],
    budget: &mut Budget,
) -> Result<(Polynomial, u64)> {
    let mut work = f;
    let mut sugar = sugar;
    'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c)) {
        for (g, &gs) in basis.iter().zip(sugars) {
            let glm = match g.leading_monomial() {
                Some(m) => m,
                None => continue,
            };
            if let Some(qm) = lm.div(glm) {
                budget.charge()?;
                sugar = sugar.max(gs + qm.total_degree());
                work = work.sub(&g.mul_term(&qm, lc)?)?;
                continue 'outer;
            }
        }
        break;
    }
    Ok((work, sugar))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (fm, _) = f.leading().unwrap();
    let (gm, _) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), 1)?;
    let b = g.mul_term(&l.div(gm).unwrap(), 1)?;
    a.sub(&b)
}

#[derive(Debug, Clone)]
struct Pair {
    lcm: Monomial,
    sugar: u64,
    i: usize,
    j: usize,
}

fn make_pair(basis: &[Polynomial], sugars: &[u64], i: usize, j: usize) -> Pair {
    let mi = basis[i].leading_monomial().unwrap();
    let mj = basis[j].leading_monomial().unwrap();
    let lcm = mi.lcm(mj);
    let si = sugars[i] + lcm.div(mi).unwrap().total_degree();
    let sj = sugars[j] + lcm.div(mj).unwrap().total_degree();
    Pair {
        lcm,
        sugar: si.max(sj),
        i,
        j,
    }
}

/// Gebauer-Moeller queue update for a newly appended basis element `t`:
/// prune superseded old pairs, then admit the surviving new pairs.
fn gm_update(pairs: &mut Vec<Pair>, basis: &[Polynomial], sugars: &[u64], t: usize) {
    let m_t = basis[t].leading_monomial().unwrap().clone();

    // drop old pairs strictly refined by the new leading term
    pairs.retain(|p| {
        if !m_t.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].leading_monomial().unwrap().lcm(&m_t);
        let lj = basis[p.j].leading_monomial().unwrap().lcm(&m_t);
        li == p.lcm || lj == p.lcm
    });

    let candidates: Vec<Pair> = (0..t)
        .map(|k| make_pair(basis, sugars, k, t))
        .collect();
    // M criterion: drop a candidate whose lcm is a proper multiple of
    // another candidate's lcm
    let keep_m: Vec<bool> = candidates
        .iter()
        .map(|p| {
            !candidates
                .iter()
                .any(|q| q.lcm != p.lcm && q.lcm.divides(&p.lcm))
        })
        .collect();
    // F criterion: one representative per lcm class, unless some member of
    // the class has coprime leading terms (then the whole class drops)
    let mut kept: Vec<Pair> = Vec::new();
    for (idx, p) in candidates.iter().enumerate() {
        if !keep_m[idx] {
            continue;
        }
        let class: Vec<usize> = candidates
            .iter()
            .enumerate()
            .filter(|(_, q)| q.lcm == p.lcm)
            .map(|(k, _)| k)
            .collect();
        if class[0] != idx {
            continue; // deterministic representative: first of the class
        }
        let coprime = class.iter().any(|&k| {
            basis[candidates[k].i]
                .leading_monomial()
                .unwrap()
                .coprime(&m_t)
        });
        if !coprime {
            kept.push(p.clone());
        }
    }
    pairs.extend(kept);
}

/// Buchberger with the Gebauer-Moeller pair criteria and sugar selection,
/// followed by auto-reduction to the unique reduced basis.
fn buchberger(ring: &Arc<RingCtx>, gens: &[Polynomial], caps: GbCaps) -> Result<GroebnerBasis> {
    let order = ring.order();
    let mut budget = Budget::new(caps.max_reductions);

    let mut seed: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            seed.push(g.monic()?);
        }
    }
    // deterministic starting order
    seed.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugars: Vec<u64> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in seed {
        let sugar = g.total_degree();
        basis.push(g);
        sugars.push(sugar);
        gm_update(&mut pairs, &basis, &sugars, basis.len() - 1);
    }

    let mut processed: u64 = 0;
    while !pairs.is_empty() {
        processed += 1;
        if processed > caps.max_pairs {
            return Err(Error::ResourceExhausted {
                what: "S-pair queue",
                cap: caps.max_pairs,
            });
        }
        // sugar strategy: lowest sugar, then smallest lcm, then index
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let cmp = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if cmp == Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j])?;
        let (r, sugar) = reduce_top(s, pair.sugar, &basis, &sugars, &mut budget)?;
        if !r.is_zero() {
            basis.push(r.monic()?);
            sugars.push(sugar);
            gm_update(&mut pairs, &basis, &sugars, basis.len() - 1);
        }
    }

    reduce_basis(ring, basis, &mut budget)
}

/// Minimalize and tail-reduce a Groebner basis into the reduced basis.
fn reduce_basis(
    ring: &Arc<RingCtx>,
    mut basis: Vec<Polynomial>,
    budget: &mut Budget,
) -> Result<GroebnerBasis> {
    let order = ring.order();
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    // minimal: keep an antichain of leading monomials (ascending scan works
    // because divisors precede multiples in any monomial order)
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }

    // tail-reduce to a fixed point
    loop {
        let mut changed = false;
        for idx in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != idx)
                .map(|(_, p)| p.clone())
                .collect();
            let r = reduce_full(&minimal[idx], &others, budget)?.monic()?;
            if r != minimal[idx] {
                minimal[idx] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    minimal.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(GroebnerBasis { basis: minimal })
}
