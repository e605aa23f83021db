//! The F-singularity layer on a presented local ring R = S/A with
//! S = F_p[x_1..x_d] localized at M = (x_1..x_d).
//!
//! F-purity is guarded by Fedder's colon criterion. Compatibility of an
//! ideal is decided by two independent routes that must agree:
//!
//! * colon route: (A^[p^e] : A) contained in (B^[p^e] : B) for e <= e_max;
//! * Cartier route: the p^e-th root of C_e * B contained in B.
//!
//! On top of the pointwise test sit the star closure, big test ideals and
//! their chains, the full compatible-ideal lattice, the splitting prime,
//! localization filtering and quotient verification. Every "for all n"
//! statement is checked up to a configured level bound which is carried in
//! the results.

use std::collections::BTreeMap;
use std::sync::Arc;

use once_cell::sync::OnceCell;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomp::{self, Capability, Primality};
use crate::error::{Error, Result};
use crate::frobenius::{bracket_power, pe_th_root, CartierData};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingCtx};

/// Level bound, iteration caps and the candidate-search seed.
#[derive(Debug, Clone, Copy)]
pub struct FsingConfig {
    /// All "for all n" conditions are checked for 1 <= e <= e_max.
    pub e_max: u32,
    /// Cap on star-closure iterations.
    pub max_iter: u32,
    /// Seed for the randomized part of the test-element candidate search.
    pub seed: u64,
    /// Number of extra random candidates to try.
    pub random_candidates: usize,
}

impl Default for FsingConfig {
    fn default() -> Self {
        FsingConfig {
            e_max: 2,
            max_iter: 64,
            seed: 0,
            random_candidates: 8,
        }
    }
}

/// The presented ring R = S/A. Immutable; the F-purity flag and the Cartier
/// multipliers are cached write-once.
#[derive(Debug)]
pub struct Presentation {
    ring: Arc<RingCtx>,
    a: Ideal,
    m: Ideal,
    fpure: OnceCell<bool>,
    cartier: CartierData,
}

impl Presentation {
    /// Validates that A is contained in M = (x_1..x_d); A is then proper.
    pub fn new(ring: &Arc<RingCtx>, a: Ideal) -> Result<Self> {
        same_ring(ring, a.ring())?;
        for g in a.gens() {
            if g.constant_term() != 0 {
                return Err(Error::InvalidPresentation(format!(
                    "generator `{g}` has a nonzero constant term; the presenting ideal must lie in the maximal ideal"
                )));
            }
        }
        let a = a.canonicalized()?;
        let m = Ideal::new(
            ring,
            (0..ring.num_vars())
                .map(|i| Polynomial::var(ring, i))
                .collect(),
        )?
        .canonicalized()?;
        Ok(Presentation {
            ring: ring.clone(),
            cartier: CartierData::new(a.clone()),
            a,
            m,
            fpure: OnceCell::new(),
        })
    }

    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    /// The presenting ideal A.
    pub fn ideal_a(&self) -> &Ideal {
        &self.a
    }

    /// The irrelevant maximal ideal M = (x_1..x_d).
    pub fn ideal_m(&self) -> &Ideal {
        &self.m
    }

    /// C_e = (A^[p^e] : A), cached per level.
    pub fn cartier_level(&self, e: u32) -> Result<Ideal> {
        self.cartier.level(e)
    }

    /// The S-ideal B + A representing the R-ideal generated by B.
    pub fn full_ideal(&self, b: &Ideal) -> Result<Ideal> {
        same_ring(&self.ring, b.ring())?;
        self.a.sum(b)
    }

    pub fn f_pure_cached(&self) -> Option<bool> {
        self.fpure.get().copied()
    }
}

// ---------------------------------------------------------------------------
// Fedder guard
// ---------------------------------------------------------------------------

/// Fedder's criterion: R is F-pure iff C_1 = (A^[p] : A) is not contained
/// in M^[p]. Cached on the presentation.
pub fn fedder_is_f_pure(pres: &Presentation) -> Result<bool> {
    if let Some(&b) = pres.fpure.get() {
        return Ok(b);
    }
    let c1 = pres.cartier_level(1)?;
    let m_bracket = bracket_power(&pres.m, 1)?;
    let fpure = !m_bracket.contains_ideal(&c1)?;
    Ok(*pres.fpure.get_or_init(|| fpure))
}

/// A generator of C_1 outside M^[p], when R is F-pure; the certificate that
/// Fedder's criterion succeeds.
pub fn fedder_witness(pres: &Presentation) -> Result<Option<Polynomial>> {
    let c1 = pres.cartier_level(1)?;
    let m_bracket = bracket_power(&pres.m, 1)?;
    for g in c1.canonical_gens()? {
        if !m_bracket.contains_poly(g)? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

fn require_f_pure(pres: &Presentation) -> Result<()> {
    if fedder_is_f_pure(pres)? {
        Ok(())
    } else {
        Err(Error::NotFPure)
    }
}

// ---------------------------------------------------------------------------
// the two compatibility routes
// ---------------------------------------------------------------------------

/// Does C_e land in (B^[p^e] : B)? Tested generator by generator through
/// c * B inside B^[p^e], which is pure division; the colon ideal itself is
/// never materialized. For B = 0 the colon is S by the (0 : 0) convention.
fn colon_route_level(pres: &Presentation, bfull: &Ideal, e: u32) -> Result<bool> {
    if bfull.is_zero_ideal()? {
        return Ok(true);
    }
    let ce = pres.cartier_level(e)?;
    let bq = bracket_power(bfull, e)?;
    for c in ce.canonical_gens()? {
        for b in bfull.gens() {
            if !bq.contains_poly(&c.mul(b)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn cartier_route_level(pres: &Presentation, bfull: &Ideal, e: u32) -> Result<bool> {
    let ce = pres.cartier_level(e)?;
    let root = pe_th_root(&ce.product(bfull)?, e)?;
    bfull.contains_ideal(&root)
}

/// Colon-criterion route: (A^[p^e] : A) contained in (B^[p^e] : B) for all
/// e <= e_max, where B is replaced by B + A.
pub fn is_compatible(pres: &Presentation, b: &Ideal, e_max: u32) -> Result<bool> {
    require_f_pure(pres)?;
    let bfull = pres.full_ideal(b)?;
    for e in 1..=e_max {
        if !colon_route_level(pres, &bfull, e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cartier-operator route: the p^e-th root of C_e * B is contained in B for
/// all e <= e_max.
pub fn is_compatible_cartier(pres: &Presentation, b: &Ideal, e_max: u32) -> Result<bool> {
    require_f_pure(pres)?;
    let bfull = pres.full_ideal(b)?;
    for e in 1..=e_max {
        if !cartier_route_level(pres, &bfull, e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs both routes level by level and errors on any disagreement; the
/// agreement is a theorem, so a mismatch is an implementation fault.
pub fn check_compatible(pres: &Presentation, b: &Ideal, e_max: u32) -> Result<bool> {
    require_f_pure(pres)?;
    let bfull = pres.full_ideal(b)?;
    for e in 1..=e_max {
        let colon = colon_route_level(pres, &bfull, e)?;
        let cartier = cartier_route_level(pres, &bfull, e)?;
        if colon != cartier {
            return Err(Error::RouteDisagreement {
                ideal: display_ideal(&bfull)?,
                level: e,
                colon,
                cartier,
            });
        }
        if !colon {
            return Ok(false);
        }
    }
    Ok(true)
}

fn display_ideal(i: &Ideal) -> Result<String> {
    let s = i.canonical_strings()?;
    if s.is_empty() {
        Ok("(0)".to_string())
    } else {
        Ok(format!("({})", s.join(", ")))
    }
}

// ---------------------------------------------------------------------------
// star closure and test ideals
// ---------------------------------------------------------------------------

/// Smallest ideal containing `seed` + A that is closed under the level
/// <= e_max root operators J -> root_e(C_e * J). Ascending, so it
/// terminates; the iteration cap is a hard error, not a truncation.
pub fn star_closure(pres: &Presentation, seed: &Ideal, cfg: &FsingConfig) -> Result<Ideal> {
    require_f_pure(pres)?;
    let mut j = pres.full_ideal(seed)?;
    for _ in 0..cfg.max_iter {
        let mut next = j.clone();
        for e in 1..=cfg.e_max {
            let ce = pres.cartier_level(e)?;
            next = next.sum(&pe_th_root(&ce.product(&j)?, e)?)?;
        }
        if next.equals(&j)? {
            return Ok(j);
        }
        j = next;
    }
    Err(Error::IterationCap(cfg.max_iter))
}

/// Formal Jacobian ideal: all partial derivatives of the canonical
/// generators.
fn jacobian_ideal(a: &Ideal) -> Result<Ideal> {
    let ring = a.ring();
    let mut gens = Vec::new();
    for g in a.canonical_gens()? {
        for v in 0..ring.num_vars() {
            let d = g.derivative(v);
            if !d.is_zero() {
                gens.push(d);
            }
        }
    }
    Ideal::new(ring, gens)?.canonicalized()
}

fn avoids_all(c: &Polynomial, primes: &[Ideal]) -> Result<bool> {
    for p in primes {
        if p.contains_poly(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact minimal primes of A, or a structured capability failure naming the
/// stage.
fn exact_minimal_primes(a: &Ideal, stage: &str) -> Result<Vec<Ideal>> {
    let mp = decomp::minimal_primes(a)?;
    if mp.capability != Capability::Exact {
        return Err(Error::CapabilityFailure {
            stage: format!("{stage} {}", display_ideal(a)?),
        });
    }
    Ok(mp.primes)
}

/// Candidates for big test elements: Jacobian generators avoiding every
/// minimal prime, then pair sums, then seeded random combinations, plus a
/// few seeded random low-degree elements of the ambient ring.
fn test_element_candidates(
    pres: &Presentation,
    min_primes: &[Ideal],
    cfg: &FsingConfig,
) -> Result<Vec<Polynomial>> {
    let ring = &pres.ring;
    let jac = jacobian_ideal(&pres.a)?;
    let jac_gens = jac.canonical_gens()?.to_vec();
    let mut out: Vec<Polynomial> = Vec::new();

    for g in &jac_gens {
        if avoids_all(g, min_primes)? {
            out.push(g.clone());
        }
    }
    if out.is_empty() {
        for i in 0..jac_gens.len() {
            for j in (i + 1)..jac_gens.len() {
                let s = jac_gens[i].add(&jac_gens[j])?;
                if !s.is_zero() && avoids_all(&s, min_primes)? {
                    out.push(s);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    if out.is_empty() && !jac_gens.is_empty() {
        for _ in 0..cfg.random_candidates * 16 {
            let mut s = Polynomial::zero(ring);
            for g in &jac_gens {
                s = s.add(&g.scale(rng.gen_range(0..ring.p())))?;
            }
            if !s.is_zero() && avoids_all(&s, min_primes)? {
                out.push(s);
                break;
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NoTestElement);
    }

    // extra random low-degree elements sharpen the intersection
    let monomials = monomials_up_to_degree(ring, 2);
    let mut extra = 0usize;
    for _ in 0..cfg.random_candidates * 8 {
        if extra >= cfg.random_candidates {
            break;
        }
        let terms: Vec<(Monomial, u64)> = monomials
            .iter()
            .map(|m| (m.clone(), rng.gen_range(0..ring.p())))
            .collect();
        let c = Polynomial::from_terms(ring, terms);
        if !c.is_zero() && avoids_all(&c, min_primes)? {
            out.push(c);
            extra += 1;
        }
    }
    Ok(out)
}

fn monomials_up_to_degree(ring: &Arc<RingCtx>, deg: u32) -> Vec<Monomial> {
    let d = ring.num_vars();
    let mut out = Vec::new();
    let mut cur = vec![0u32; d];
    'enumerate: loop {
        if cur.iter().map(|&e| e as u64).sum::<u64>() <= deg as u64 {
            out.push(Monomial::new(cur.clone()));
        }
        for v in 0..d {
            cur[v] += 1;
            if cur[v] <= deg {
                continue 'enumerate;
            }
            cur[v] = 0;
        }
        break;
    }
    out.sort();
    out
}

/// The S-ideal T with T/A the big test ideal of R: the intersection of the
/// star closures of all test-element candidates, post-verified compatible
/// and meeting the complement of the minimal primes.
pub fn big_test_ideal(pres: &Presentation, cfg: &FsingConfig) -> Result<Ideal> {
    require_f_pure(pres)?;
    if pres.a.is_zero_ideal()? {
        // regular ring: the big test ideal is the whole ring
        return Ideal::unit(&pres.ring).canonicalized();
    }
    let min_primes = exact_minimal_primes(&pres.a, "presenting ideal")?;
    let candidates = test_element_candidates(pres, &min_primes, cfg)?;
    let mut tau: Option<Ideal> = None;
    for c in &candidates {
        let closure = star_closure(pres, &Ideal::new(&pres.ring, vec![c.clone()])?, cfg)?;
        tau = Some(match tau {
            None => closure,
            Some(t) => t.intersect(&closure)?,
        });
    }
    let tau = tau.expect("candidate list is nonempty").canonicalized()?;
    if !check_compatible(pres, &tau, cfg.e_max)? {
        return Err(Error::InvariantBreach(format!(
            "big test ideal {} failed the compatibility check",
            display_ideal(&tau)?
        )));
    }
    for p in &min_primes {
        if p.contains_ideal(&tau)? {
            return Err(Error::InvariantBreach(format!(
                "big test ideal {} does not meet the complement of {}",
                display_ideal(&tau)?,
                display_ideal(p)?
            )));
        }
    }
    Ok(tau)
}

/// The S-test ideal for S = R minus the union of the avoided primes: the
/// intersection of the minimal lattice primes not contained in any avoided
/// prime; the unit ideal when no prime qualifies.
pub fn s_test_ideal(
    pres: &Presentation,
    lattice: &CompatibleLattice,
    avoided: &[Ideal],
) -> Result<Ideal> {
    require_f_pure(pres)?;
    for av in avoided {
        if !av.contains_ideal(&pres.a)? {
            return Err(Error::Precondition(format!(
                "avoided ideal {} does not contain the presenting ideal",
                display_ideal(av)?
            )));
        }
        match decomp::is_prime_desk(av)? {
            Primality::Yes => {}
            _ => {
                return Err(Error::Precondition(format!(
                    "avoided ideal {} is not certified prime",
                    display_ideal(av)?
                )))
            }
        }
    }
    // q not contained in the union of primes iff q escapes each one
    let mut qualifying: Vec<&Ideal> = Vec::new();
    'primes: for q in &lattice.primes {
        for av in avoided {
            if av.contains_ideal(q)? {
                continue 'primes;
            }
        }
        qualifying.push(q);
    }
    let mut minimal: Vec<&Ideal> = Vec::new();
    'outer: for (i, q) in qualifying.iter().enumerate() {
        for (j, r) in qualifying.iter().enumerate() {
            if i != j && q.contains_ideal(r)? && !q.equals(r)? {
                continue 'outer;
            }
        }
        minimal.push(q);
    }
    let mut acc: Option<Ideal> = None;
    for q in minimal {
        acc = Some(match acc {
            None => (*q).clone(),
            Some(t) => t.intersect(q)?,
        });
    }
    match acc {
        Some(t) => t.canonicalized(),
        None => Ideal::unit(&pres.ring).canonicalized(),
    }
}

// ---------------------------------------------------------------------------
// big-test-ideal chain
// ---------------------------------------------------------------------------

/// One stage of the big-test-ideal chain with its F-purity certificate.
#[derive(Debug, Clone)]
pub struct ChainStage {
    pub ideal: Ideal,
    pub f_pure: bool,
    pub fedder_witness: Option<Polynomial>,
}

/// The strictly ascending chain A = T_0 < T_1 < ... < T_w < S where
/// T_{i+1}/T_i is the big test ideal of S/T_i and every quotient is F-pure.
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub stages: Vec<ChainStage>,
}

impl ChainReport {
    /// The big test ideal of the ring itself: the second stage, or the unit
    /// ideal when the chain ends immediately.
    pub fn big_test_ideal(&self, ring: &Arc<RingCtx>) -> Result<Ideal> {
        match self.stages.get(1) {
            Some(s) => Ok(s.ideal.clone()),
            None => Ideal::unit(ring).canonicalized(),
        }
    }
}

pub fn big_test_chain(pres: &Presentation, cfg: &FsingConfig) -> Result<ChainReport> {
    require_f_pure(pres)?;
    let mut stages: Vec<ChainStage> = Vec::new();
    let mut t = pres.a.clone();
    loop {
        let stage_pres = Presentation::new(&pres.ring, t.clone())?;
        let f_pure = fedder_is_f_pure(&stage_pres)?;
        if !f_pure {
            // quotients by compatible ideals of an F-pure ring stay F-pure
            return Err(Error::InvariantBreach(format!(
                "chain stage {} is not F-pure",
                display_ideal(&t)?
            )));
        }
        stages.push(ChainStage {
            ideal: t.clone(),
            f_pure,
            fedder_witness: fedder_witness(&stage_pres)?,
        });
        let tau = big_test_ideal(&stage_pres, cfg)?;
        if tau.is_unit_ideal()? {
            return Ok(ChainReport { stages });
        }
        if !(tau.contains_ideal(&t)? && !tau.equals(&t)?) {
            return Err(Error::InvariantBreach(format!(
                "chain failed to ascend strictly at {}",
                display_ideal(&t)?
            )));
        }
        t = tau;
    }
}

// ---------------------------------------------------------------------------
// compatible primes, lattice, splitting prime
// ---------------------------------------------------------------------------

/// The finite set of compatible ideals: prime members with their discovery
/// stage, all members (intersections of primes plus the unit ideal), and
/// the chain that drove the recursion.
#[derive(Debug, Clone)]
pub struct CompatibleLattice {
    pub primes: Vec<Ideal>,
    /// Chain stage at which each prime was discovered.
    pub provenance: Vec<usize>,
    /// All members, unit ideal included, canonically sorted.
    pub members: Vec<Ideal>,
    pub chain: ChainReport,
    pub e_max: u32,
}

impl CompatibleLattice {
    pub fn proper_members(&self) -> Result<Vec<&Ideal>> {
        let mut out = Vec::new();
        for m in &self.members {
            if !m.is_unit_ideal()? {
                out.push(m);
            }
        }
        Ok(out)
    }

    pub fn big_test_ideal(&self, ring: &Arc<RingCtx>) -> Result<Ideal> {
        self.chain.big_test_ideal(ring)
    }
}

/// Complete duplicate-free list of compatible primes: minimal primes of
/// every chain stage, each post-verified by both routes.
pub fn compatible_primes(pres: &Presentation, cfg: &FsingConfig) -> Result<Vec<(Ideal, usize)>> {
    require_f_pure(pres)?;
    let chain = big_test_chain(pres, cfg)?;
    compatible_primes_from_chain(pres, &chain, cfg)
}

fn compatible_primes_from_chain(
    pres: &Presentation,
    chain: &ChainReport,
    cfg: &FsingConfig,
) -> Result<Vec<(Ideal, usize)>> {
    let mut found: BTreeMap<Vec<String>, (Ideal, usize)> = BTreeMap::new();
    for (idx, stage) in chain.stages.iter().enumerate() {
        let primes = exact_minimal_primes(&stage.ideal, &format!("chain stage {idx}"))?;
        for p in primes {
            let key = p.canonical_strings()?;
            found.entry(key).or_insert((p, idx));
        }
    }
    for (p, _) in found.values() {
        if !check_compatible(pres, p, cfg.e_max)? {
            return Err(Error::InvariantBreach(format!(
                "recursion produced the incompatible prime {}",
                display_ideal(p)?
            )));
        }
    }
    Ok(found.into_values().collect())
}

/// The full lattice: all intersections of the prime members plus the unit
/// ideal, with every closure invariant verified before returning.
pub fn compatible_ideals(pres: &Presentation, cfg: &FsingConfig) -> Result<CompatibleLattice> {
    require_f_pure(pres)?;
    let chain = big_test_chain(pres, cfg)?;
    let primed = compatible_primes_from_chain(pres, &chain, cfg)?;
    let primes: Vec<Ideal> = primed.iter().map(|(p, _)| p.clone()).collect();
    let provenance: Vec<usize> = primed.iter().map(|(_, s)| *s).collect();

    let mut members: BTreeMap<Vec<String>, Ideal> = BTreeMap::new();
    let unit = Ideal::unit(&pres.ring).canonicalized()?;
    members.insert(unit.canonical_strings()?, unit);
    for p in &primes {
        members.insert(p.canonical_strings()?, p.clone());
    }
    // close under pairwise intersection
    loop {
        let snapshot: Vec<Ideal> = members.values().cloned().collect();
        let mut grew = false;
        for i in 0..snapshot.len() {
            for j in (i + 1)..snapshot.len() {
                let meet = snapshot[i].intersect(&snapshot[j])?;
                let key = meet.canonical_strings()?;
                if !members.contains_key(&key) {
                    members.insert(key, meet);
                    grew = true;
                }
            }
        }
        if members.len() > 4096 {
            return Err(Error::ResourceExhausted {
                what: "lattice member enumeration",
                cap: 4096,
            });
        }
        if !grew {
            break;
        }
    }
    let lattice = CompatibleLattice {
        primes,
        provenance,
        members: members.into_values().collect(),
        chain,
        e_max: cfg.e_max,
    };
    verify_lattice(pres, &lattice, cfg)?;
    Ok(lattice)
}

/// The lattice closure invariants; a breach is a hard failure.
fn verify_lattice(pres: &Presentation, lat: &CompatibleLattice, cfg: &FsingConfig) -> Result<()> {
    let keys: Vec<Vec<String>> = lat
        .members
        .iter()
        .map(|m| m.canonical_strings())
        .collect::<Result<_>>()?;
    let has = |key: &Vec<String>| keys.iter().any(|k| k == key);

    // every member passes both routes at every level
    for m in &lat.members {
        if !check_compatible(pres, m, cfg.e_max)? {
            return Err(Error::InvariantBreach(format!(
                "lattice member {} is not compatible",
                display_ideal(m)?
            )));
        }
    }
    // closed under sums and intersections
    for i in 0..lat.members.len() {
        for j in (i + 1)..lat.members.len() {
            let s = lat.members[i].sum(&lat.members[j])?;
            if !has(&s.canonical_strings()?) {
                return Err(Error::InvariantBreach(format!(
                    "sum {} of members escapes the lattice",
                    display_ideal(&s)?
                )));
            }
            let m = lat.members[i].intersect(&lat.members[j])?;
            if !has(&m.canonical_strings()?) {
                return Err(Error::InvariantBreach(format!(
                    "intersection {} of members escapes the lattice",
                    display_ideal(&m)?
                )));
            }
        }
    }
    // prime-decomposition closure: minimal primes of members are members,
    // and each member is the intersection of its primes
    let prime_keys: Vec<Vec<String>> = lat
        .primes
        .iter()
        .map(|p| p.canonical_strings())
        .collect::<Result<_>>()?;
    for m in &lat.members {
        if m.is_unit_ideal()? {
            continue;
        }
        let mp = exact_minimal_primes(m, "lattice member")?;
        let mut meet: Option<Ideal> = None;
        for p in &mp {
            let pk = p.canonical_strings()?;
            if !prime_keys.iter().any(|k| *k == pk) {
                return Err(Error::InvariantBreach(format!(
                    "minimal prime {} of member {} is not a lattice prime",
                    display_ideal(p)?,
                    display_ideal(m)?
                )));
            }
            meet = Some(match meet {
                None => p.clone(),
                Some(t) => t.intersect(p)?,
            });
        }
        if let Some(meet) = meet {
            if !meet.equals(m)? {
                return Err(Error::InvariantBreach(format!(
                    "member {} is not the intersection of its minimal primes",
                    display_ideal(m)?
                )));
            }
        }
    }
    // unique maximal proper member, and it is prime
    let maximal = maximal_proper_members(lat)?;
    if maximal.len() != 1 {
        return Err(Error::InvariantBreach(format!(
            "expected a unique maximal proper member, found {}",
            maximal.len()
        )));
    }
    if decomp::is_prime_desk(&maximal[0])? != Primality::Yes {
        return Err(Error::InvariantBreach(format!(
            "maximal proper member {} is not certified prime",
            display_ideal(&maximal[0])?
        )));
    }
    // the big test ideal is the intersection of the positive-height primes
    let tau = lat.big_test_ideal(&pres.ring)?;
    let min_primes_a = exact_minimal_primes(&pres.a, "presenting ideal")?;
    let mut meet: Option<Ideal> = None;
    for q in &lat.primes {
        let is_min = {
            let mut found = false;
            for mp in &min_primes_a {
                if mp.equals(q)? {
                    found = true;
                    break;
                }
            }
            found
        };
        if !is_min {
            meet = Some(match meet {
                None => q.clone(),
                Some(t) => t.intersect(q)?,
            });
        }
    }
    let expected = match meet {
        Some(t) => t.canonicalized()?,
        None => Ideal::unit(&pres.ring).canonicalized()?,
    };
    if !expected.equals(&tau)? {
        return Err(Error::InvariantBreach(format!(
            "big test ideal {} differs from the intersection {} of positive-height primes",
            display_ideal(&tau)?,
            display_ideal(&expected)?
        )));
    }
    Ok(())
}

fn maximal_proper_members(lat: &CompatibleLattice) -> Result<Vec<Ideal>> {
    let proper = lat.proper_members()?;
    let mut out = Vec::new();
    'outer: for (i, m) in proper.iter().enumerate() {
        for (j, n) in proper.iter().enumerate() {
            if i != j && n.contains_ideal(m)? && !n.equals(m)? {
                continue 'outer;
            }
        }
        out.push((*m).clone());
    }
    Ok(out)
}

/// The unique maximal proper member of the lattice, post-verified: prime,
/// compatible by both routes, and inside the Fedder-type level sets
/// (M^[p^e] : C_e) for every e <= e_max.
pub fn splitting_prime(
    pres: &Presentation,
    lat: &CompatibleLattice,
    cfg: &FsingConfig,
) -> Result<Ideal> {
    require_f_pure(pres)?;
    let maximal = maximal_proper_members(lat)?;
    if maximal.len() != 1 {
        return Err(Error::InvariantBreach(format!(
            "lattice has {} maximal proper members; expected exactly one",
            maximal.len()
        )));
    }
    let p = maximal.into_iter().next().unwrap();
    if decomp::is_prime_desk(&p)? != Primality::Yes {
        return Err(Error::InvariantBreach(format!(
            "splitting prime candidate {} is not certified prime",
            display_ideal(&p)?
        )));
    }
    if !check_compatible(pres, &p, cfg.e_max)? {
        return Err(Error::InvariantBreach(format!(
            "splitting prime candidate {} is not compatible",
            display_ideal(&p)?
        )));
    }
    for e in 1..=cfg.e_max {
        // containment in (M^[p^e] : C_e) via multiplication into M^[p^e]
        let mq = bracket_power(&pres.m, e)?;
        let ce = pres.cartier_level(e)?;
        for a in p.canonical_gens()? {
            for c in ce.canonical_gens()? {
                if !mq.contains_poly(&a.mul(c)?)? {
                    return Err(Error::InvariantBreach(format!(
                        "splitting prime candidate {} escapes the level-{e} Fedder-type set",
                        display_ideal(&p)?
                    )));
                }
            }
        }
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// localization and quotient verification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct LocalizationReport {
    /// Lattice primes contained in the localizing prime.
    pub primes: Vec<Ideal>,
    /// Intersection of the returned primes of positive height in the
    /// localization; unit when none.
    pub local_big_test: Ideal,
    /// Whether the filter-based value agrees with extending the global big
    /// test ideal.
    pub extension_consistent: bool,
}

pub fn localize_compatible(
    pres: &Presentation,
    lat: &CompatibleLattice,
    p_ideal: &Ideal,
) -> Result<LocalizationReport> {
    require_f_pure(pres)?;
    let mut is_lattice_prime = false;
    for q in &lat.primes {
        if q.equals(p_ideal)? {
            is_lattice_prime = true;
            break;
        }
    }
    if !is_lattice_prime {
        return Err(Error::Precondition(format!(
            "{} is not a prime member of the lattice",
            display_ideal(p_ideal)?
        )));
    }
    let mut filtered = Vec::new();
    for q in &lat.primes {
        if p_ideal.contains_ideal(q)? {
            filtered.push(q.clone());
        }
    }
    let min_primes_a = exact_minimal_primes(&pres.a, "presenting ideal")?;
    let is_min = |q: &Ideal| -> Result<bool> {
        for mp in &min_primes_a {
            if mp.equals(q)? {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let mut meet: Option<Ideal> = None;
    for q in &filtered {
        if !is_min(q)? {
            meet = Some(match meet {
                None => q.clone(),
                Some(t) => t.intersect(q)?,
            });
        }
    }
    let local_big_test = match meet {
        Some(t) => t.canonicalized()?,
        None => Ideal::unit(&pres.ring).canonicalized()?,
    };

    // extension route: minimal primes of the global big test ideal that
    // survive the localization
    let tau = lat.big_test_ideal(&pres.ring)?;
    let extension = if tau.is_unit_ideal()? {
        Ideal::unit(&pres.ring).canonicalized()?
    } else {
        let tau_primes = exact_minimal_primes(&tau, "big test ideal")?;
        let mut meet: Option<Ideal> = None;
        for q in &tau_primes {
            if p_ideal.contains_ideal(q)? {
                meet = Some(match meet {
                    None => q.clone(),
                    Some(t) => t.intersect(q)?,
                });
            }
        }
        match meet {
            Some(t) => t.canonicalized()?,
            None => Ideal::unit(&pres.ring).canonicalized()?,
        }
    };
    let extension_consistent = local_big_test.equals(&extension)?;
    Ok(LocalizationReport {
        primes: filtered,
        local_big_test,
        extension_consistent,
    })
}

#[derive(Debug, Clone)]
pub struct QuotientReport {
    /// S/c passes the Fedder guard.
    pub f_pure: bool,
    /// Every compatible prime of the quotient is a lattice prime
    /// containing c.
    pub primes_ok: bool,
    /// The lifted big test ideal of the quotient is a lattice member.
    pub big_test_ok: bool,
    /// A witness ideal for the first failed assertion, canonically printed.
    pub witness: Option<String>,
}

impl QuotientReport {
    pub fn all_ok(&self) -> bool {
        self.f_pure && self.primes_ok && self.big_test_ok
    }
}

/// Verify the quotient statements for a proper lattice member c.
pub fn verify_quotient(
    pres: &Presentation,
    lat: &CompatibleLattice,
    c: &Ideal,
    cfg: &FsingConfig,
) -> Result<QuotientReport> {
    require_f_pure(pres)?;
    let mut is_member = false;
    for m in &lat.members {
        if m.equals(c)? {
            is_member = true;
            break;
        }
    }
    if !is_member || c.is_unit_ideal()? {
        return Err(Error::Precondition(format!(
            "{} is not a proper lattice member",
            display_ideal(c)?
        )));
    }
    let pres_q = Presentation::new(&pres.ring, c.clone())?;
    let f_pure = fedder_is_f_pure(&pres_q)?;
    if !f_pure {
        return Ok(QuotientReport {
            f_pure,
            primes_ok: false,
            big_test_ok: false,
            witness: Some(display_ideal(c)?),
        });
    }
    let lat_q = compatible_ideals(&pres_q, cfg)?;
    let mut primes_ok = true;
    let mut witness = None;
    'quot: for q in &lat_q.primes {
        if !q.contains_ideal(c)? {
            primes_ok = false;
            witness = Some(display_ideal(q)?);
            break;
        }
        for p in &lat.primes {
            if p.equals(q)? {
                continue 'quot;
            }
        }
        primes_ok = false;
        witness = Some(display_ideal(q)?);
        break;
    }
    let tau_q = lat_q.big_test_ideal(&pres.ring)?;
    let mut big_test_ok = false;
    for m in &lat.members {
        if m.equals(&tau_q)? {
            big_test_ok = true;
            break;
        }
    }
    if !big_test_ok && witness.is_none() {
        witness = Some(display_ideal(&tau_q)?);
    }
    Ok(QuotientReport {
        f_pure,
        primes_ok,
        big_test_ok,
        witness,
    })
}
