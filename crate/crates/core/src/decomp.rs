//! Minimal primes of the radical ideals arising in the compatible-ideal
//! recursion.
//!
//! Exact paths cover the corpus classes: monomial ideals (minimal vertex
//! covers), zero-dimensional ideals (Seidenberg radical plus splitting by
//! the Frobenius fixed space of the quotient algebra), and principal
//! effectively-univariate ideals (Berlekamp). Everything else goes through
//! a bounded splitting search whose result is reported as
//! heuristic-verified, or failed when no certificate is found. The
//! capability is always reported, never silently downgraded.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::factor::{berlekamp_factor, squarefree_part};
use crate::groebner::Ideal;
use crate::linalg::kernel_basis;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingCtx;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Capability {
    Exact,
    HeuristicVerified,
    Failed,
}

#[derive(Debug, Clone)]
pub struct MinimalPrimesResult {
    pub primes: Vec<Ideal>,
    pub capability: Capability,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primality {
    Yes,
    No {
        witness: Option<(Polynomial, Polynomial)>,
    },
    Unknown,
}

const MAX_SPLIT_DEPTH: u32 = 16;
const MAX_QUOTIENT_DIM: usize = 4096;
const MAX_LINEAR_POOL: u64 = 4096;

/// Minimal primes of a proper ideal. See the module docs for the exact
/// capability classes.
pub fn minimal_primes(i: &Ideal) -> Result<MinimalPrimesResult> {
    if i.is_unit_ideal()? {
        return Err(Error::UnitIdeal);
    }
    minimal_primes_inner(i, 0, true)
}

/// Exact paths only: the bounded splitting search is skipped and inputs it
/// would have handled report Failed. Cheap, for callers that only act on
/// exact results.
pub fn minimal_primes_exact_only(i: &Ideal) -> Result<MinimalPrimesResult> {
    if i.is_unit_ideal()? {
        return Err(Error::UnitIdeal);
    }
    minimal_primes_inner(i, 0, false)
}

fn minimal_primes_inner(i: &Ideal, depth: u32, allow_search: bool) -> Result<MinimalPrimesResult> {
    let i = i.canonicalized()?;
    if i.is_zero_ideal()? {
        // the polynomial ring is a domain
        return Ok(MinimalPrimesResult {
            primes: vec![i],
            capability: Capability::Exact,
        });
    }
    let gb_monomial = i
        .canonical_gens()?
        .iter()
        .all(|g| g.terms().len() == 1);
    if gb_monomial {
        return Ok(MinimalPrimesResult {
            primes: monomial_minimal_primes(&i)?,
            capability: Capability::Exact,
        });
    }
    // linear forms present a polynomial ring, hence a prime ideal
    if i.canonical_gens()?.iter().all(|g| g.total_degree() <= 1) {
        return Ok(MinimalPrimesResult {
            primes: vec![i],
            capability: Capability::Exact,
        });
    }
    if is_zero_dimensional(&i)? {
        return match zero_dimensional_primes(&i) {
            Ok(primes) => Ok(MinimalPrimesResult {
                primes,
                capability: Capability::Exact,
            }),
            Err(Error::ResourceExhausted { .. }) => Ok(MinimalPrimesResult {
                primes: Vec::new(),
                capability: Capability::Failed,
            }),
            Err(e) => Err(e),
        };
    }
    if i.canonical_gens()?.len() == 1 {
        let g = &i.canonical_gens()?[0];
        if g.support_vars().len() == 1 {
            let primes = berlekamp_factor(&squarefree_part(g)?)?
                .into_iter()
                .map(|q| Ideal::new(i.ring(), vec![q])?.canonicalized())
                .collect::<Result<Vec<_>>>()?;
            return Ok(MinimalPrimesResult {
                primes: sorted_antichain(primes)?,
                capability: Capability::Exact,
            });
        }
    }
    if !allow_search {
        return Ok(MinimalPrimesResult {
            primes: Vec::new(),
            capability: Capability::Failed,
        });
    }
    splitting_search(&i, depth)
}

/// Three-valued primality: exact decompositions certify, splittings refute,
/// capability failures stay unknown.
pub fn is_prime_desk(i: &Ideal) -> Result<Primality> {
    if i.is_unit_ideal()? {
        return Err(Error::UnitIdeal);
    }
    let r = minimal_primes(i)?;
    match r.capability {
        Capability::Failed => Ok(Primality::Unknown),
        Capability::Exact | Capability::HeuristicVerified => {
            if r.primes.len() == 1 && r.primes[0].equals(i)? {
                if r.capability == Capability::Exact {
                    Ok(Primality::Yes)
                } else {
                    Ok(Primality::Unknown)
                }
            } else {
                Ok(Primality::No {
                    witness: zero_divisor_witness(i, &r.primes)?,
                })
            }
        }
    }
}

fn zero_divisor_witness(
    i: &Ideal,
    primes: &[Ideal],
) -> Result<Option<(Polynomial, Polynomial)>> {
    if primes.len() >= 2 {
        for a in primes[0].canonical_gens()? {
            for b in primes[1].canonical_gens()? {
                if !i.contains_poly(a)? && !i.contains_poly(b)? {
                    let prod = a.mul(b)?;
                    if i.contains_poly(&prod)? {
                        return Ok(Some((a.clone(), b.clone())));
                    }
                }
            }
        }
        return Ok(None);
    }
    // single prime strictly above i: some generator is nilpotent mod i
    if let Some(p) = primes.first() {
        for g in p.canonical_gens()? {
            if i.contains_poly(g)? {
                continue;
            }
            let mut power = g.clone();
            for _ in 0..64 {
                let prev = power.clone();
                power = power.mul(g)?;
                if i.contains_poly(&power)? {
                    return Ok(Some((g.clone(), prev)));
                }
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// monomial ideals: minimal vertex covers of the support hypergraph
// ---------------------------------------------------------------------------

fn monomial_minimal_primes(i: &Ideal) -> Result<Vec<Ideal>> {
    let ring = i.ring().clone();
    let edges: Vec<BTreeSet<usize>> = i
        .canonical_gens()?
        .iter()
        .map(|g| g.support_vars().into_iter().collect())
        .collect();
    let covers = minimal_covers(&edges);
    let primes = covers
        .into_iter()
        .map(|vars| {
            let gens = vars.iter().map(|&v| Polynomial::var(&ring, v)).collect();
            Ideal::new(&ring, gens)?.canonicalized()
        })
        .collect::<Result<Vec<_>>>()?;
    sorted_antichain(primes)
}

fn minimal_covers(edges: &[BTreeSet<usize>]) -> Vec<BTreeSet<usize>> {
    let mut covers: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for edge in edges {
        let mut next: Vec<BTreeSet<usize>> = Vec::new();
        for cover in &covers {
            if edge.iter().any(|v| cover.contains(v)) {
                next.push(cover.clone());
            } else {
                for &v in edge {
                    let mut c = cover.clone();
                    c.insert(v);
                    next.push(c);
                }
            }
        }
        // prune non-minimal covers as we go
        next.sort();
        next.dedup();
        let filtered: Vec<BTreeSet<usize>> = next
            .iter()
            .filter(|c| !next.iter().any(|d| d.len() < c.len() && d.is_subset(c)))
            .cloned()
            .collect();
        covers = filtered;
    }
    covers
        .iter()
        .filter(|c| !covers.iter().any(|d| *d != **c && d.is_subset(c)))
        .cloned()
        .collect()
}

// ---------------------------------------------------------------------------
// zero-dimensional ideals
// ---------------------------------------------------------------------------

/// Zero-dimensional iff every variable has a pure power among the leading
/// monomials of the reduced basis.
fn is_zero_dimensional(i: &Ideal) -> Result<bool> {
    let d = i.ring().num_vars();
    let gb = i.canonical_gens()?;
    for v in 0..d {
        let has = gb.iter().any(|g| {
            let e = g.leading_monomial().unwrap().exponents();
            e[v] > 0 && e.iter().enumerate().all(|(k, &x)| k == v || x == 0)
        });
        if !has {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monomials of S/I not divisible by any leading monomial of the basis.
fn standard_monomials(i: &Ideal) -> Result<Vec<Monomial>> {
    let d = i.ring().num_vars();
    let gb = i.canonical_gens()?;
    let mut bound = vec![0u32; d];
    for v in 0..d {
        for g in gb {
            let e = g.leading_monomial().unwrap().exponents();
            if e[v] > 0 && e.iter().enumerate().all(|(k, &x)| k == v || x == 0) {
                bound[v] = e[v];
            }
        }
    }
    bound
        .iter()
        .try_fold(1usize, |acc, &b| {
            acc.checked_mul(b as usize)
                .filter(|&v| v <= MAX_QUOTIENT_DIM)
        })
        .ok_or(Error::ResourceExhausted {
            what: "quotient algebra dimension",
            cap: MAX_QUOTIENT_DIM as u64,
        })?;
    let mut out = Vec::new();
    let mut cur = vec![0u32; d];
    'enumerate: loop {
        let m = Monomial::new(cur.clone());
        if !gb
            .iter()
            .any(|g| g.leading_monomial().unwrap().divides(&m))
        {
            out.push(m);
        }
        for v in 0..d {
            cur[v] += 1;
            if cur[v] < bound[v] {
                continue 'enumerate;
            }
            cur[v] = 0;
        }
        break;
    }
    out.sort();
    Ok(out)
}

/// Radicalize a zero-dimensional ideal: adjoin the squarefree part of the
/// minimal polynomial of each variable (Seidenberg).
fn radical_zero_dimensional(i: &Ideal) -> Result<Ideal> {
    let ring = i.ring().clone();
    let d = ring.num_vars();
    let mut gens = i.gens().to_vec();
    for v in 0..d {
        let m = minimal_polynomial_of_var(i, v)?;
        gens.push(squarefree_part(&m)?);
    }
    Ideal::new(&ring, gens)?.canonicalized()
}

/// Minimal polynomial of x_v in S/I by linear dependence of normal forms of
/// its powers.
fn minimal_polynomial_of_var(i: &Ideal, v: usize) -> Result<Polynomial> {
    let ring = i.ring().clone();
    let field = *ring.field();
    let basis = standard_monomials(i)?;
    let dim = basis.len();
    let index = |m: &Monomial| basis.binary_search(m).expect("standard monomial");
    let x = Polynomial::var(&ring, v);

    // rows: normal forms of 1, x, x^2, ...
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut power = Polynomial::one(&ring);
    for k in 0..=dim {
        let nf = i.normal_form(&power)?;
        let mut row = vec![0u64; dim];
        for (m, c) in nf.terms() {
            row[index(m)] = *c;
        }
        rows.push(row);
        if k < dim {
            power = power.mul(&x)?;
        }
    }
    // find the least k with x^k dependent on earlier powers
    for k in 1..=dim {
        // solve sum_{j<k} c_j row_j = row_k
        let mut mat: Vec<Vec<u64>> = Vec::with_capacity(dim);
        for col in 0..dim {
            let mut r: Vec<u64> = (0..k).map(|j| rows[j][col]).collect();
            r.push(rows[k][col]);
            mat.push(r);
        }
        // kernel over k+1 unknowns with last coordinate forced nonzero
        let kern = kernel_basis(mat, k + 1, &field);
        if let Some(sol) = kern.iter().find(|s| s[k] != 0) {
            // sum_j sol_j x^j lies in the ideal; normalize monic in x^k
            let scale = field.inv(sol[k])?;
            let mut terms = Vec::new();
            let mut e = vec![0u32; ring.num_vars()];
            e[v] = k as u32;
            terms.push((Monomial::new(e), 1u64));
            for (j, &c) in sol[..k].iter().enumerate() {
                if c != 0 {
                    let mut e = vec![0u32; ring.num_vars()];
                    e[v] = j as u32;
                    terms.push((Monomial::new(e), field.mul(c, scale)));
                }
            }
            return Ok(Polynomial::from_terms(&ring, terms));
        }
    }
    Err(Error::Precondition(
        "no minimal polynomial found; ideal is not zero-dimensional".into(),
    ))
}

/// Minimal (= maximal) primes of a zero-dimensional ideal, by splitting
/// along the Frobenius fixed space of the quotient algebra.
fn zero_dimensional_primes(i: &Ideal) -> Result<Vec<Ideal>> {
    let radical = radical_zero_dimensional(i)?;
    let mut out = Vec::new();
    split_semisimple(&radical, &mut out)?;
    sorted_antichain(out)
}

fn split_semisimple(j: &Ideal, out: &mut Vec<Ideal>) -> Result<()> {
    let ring = j.ring().clone();
    let field = *ring.field();
    let p = ring.p();
    let basis = standard_monomials(j)?;
    let dim = basis.len();
    let index = |m: &Monomial| basis.binary_search(m).expect("standard monomial");

    // Frobenius matrix columns: NF(m^p) for each standard monomial m
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(dim);
    for m in &basis {
        let mp = Polynomial::term(&ring, m.pow_scale(p)?, 1);
        let nf = j.normal_form(&mp)?;
        let mut col = vec![0u64; dim];
        for (t, c) in nf.terms() {
            col[index(t)] = *c;
        }
        cols.push(col);
    }
    // fixed space: (F - id) v = 0 where F acts on coordinates
    let mut mat = vec![vec![0u64; dim]; dim];
    for (c, col) in cols.iter().enumerate() {
        for (r, &val) in col.iter().enumerate() {
            mat[r][c] = val;
        }
    }
    for k in 0..dim {
        mat[k][k] = field.sub(mat[k][k], 1);
    }
    let fixed = kernel_basis(mat, dim, &field);
    if fixed.len() <= 1 {
        out.push(j.clone());
        return Ok(());
    }

    // choose the first non-constant fixed vector as the splitting element
    let h = fixed
        .iter()
        .map(|v| {
            let terms = v
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c != 0)
                .map(|(k, &c)| (basis[k].clone(), c))
                .collect::<Vec<_>>();
            Polynomial::from_terms(&ring, terms)
        })
        .find(|h| !h.is_constant())
        .ok_or_else(|| {
            Error::Precondition("fixed space has no non-constant element".into())
        })?;

    for s in 0..p {
        let piece = h.sub(&Polynomial::constant(&ring, s))?;
        let refined = j.sum(&Ideal::new(&ring, vec![piece])?)?;
        if refined.is_unit_ideal()? {
            continue;
        }
        split_semisimple(&refined, out)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// bounded splitting search
// ---------------------------------------------------------------------------

fn linear_pool(ring: &Arc<RingCtx>) -> Result<Vec<Polynomial>> {
    let p = ring.p();
    let d = ring.num_vars();
    let count = (p as u64).checked_pow(d as u32 + 1).unwrap_or(u64::MAX);
    if count > MAX_LINEAR_POOL {
        return Ok(Vec::new());
    }
    let mut pool = Vec::new();
    let mut coeffs = vec![0u64; d + 1]; // [constant, x_1 .. x_d]
    loop {
        // monic in the first nonzero variable coefficient
        if let Some(first) = (1..=d).find(|&k| coeffs[k] != 0) {
            if coeffs[first] == 1 {
                let mut terms = Vec::new();
                if coeffs[0] != 0 {
                    terms.push((Monomial::one(d), coeffs[0]));
                }
                for v in 0..d {
                    if coeffs[v + 1] != 0 {
                        terms.push((Monomial::var(d, v), coeffs[v + 1]));
                    }
                }
                pool.push(Polynomial::from_terms(ring, terms));
            }
        }
        let mut k = 0;
        loop {
            coeffs[k] += 1;
            if coeffs[k] < p {
                break;
            }
            coeffs[k] = 0;
            k += 1;
            if k > d {
                return Ok(pool);
            }
        }
    }
}

fn splitting_search(i: &Ideal, depth: u32) -> Result<MinimalPrimesResult> {
    if depth >= MAX_SPLIT_DEPTH {
        return Ok(MinimalPrimesResult {
            primes: Vec::new(),
            capability: Capability::Failed,
        });
    }
    let ring = i.ring().clone();
    let mut pool = linear_pool(&ring)?;
    // irreducible factors of effectively-univariate generators
    for g in i.canonical_gens()? {
        if g.support_vars().len() == 1 {
            pool.extend(berlekamp_factor(&squarefree_part(g)?)?);
        }
    }

    for f in &pool {
        if i.contains_poly(f)? {
            continue;
        }
        let colon = i.colon(&Ideal::new(&ring, vec![f.clone()])?)?;
        let Some(g) = colon
            .canonical_gens()?
            .iter()
            .find(|g| !i.contains_poly(g).unwrap_or(true))
        else {
            continue;
        };
        // f*g lies in i while neither factor does: a genuine splitting
        let branch_f = i.sum(&Ideal::new(&ring, vec![f.clone()])?)?;
        let branch_g = i.sum(&Ideal::new(&ring, vec![g.clone()])?)?;
        let left = minimal_primes_inner(&branch_f, depth + 1, true)?;
        let right = minimal_primes_inner(&branch_g, depth + 1, true)?;
        if left.capability == Capability::Failed || right.capability == Capability::Failed {
            return Ok(MinimalPrimesResult {
                primes: Vec::new(),
                capability: Capability::Failed,
            });
        }
        let mut primes = left.primes;
        primes.extend(right.primes);
        let primes = sorted_antichain(primes)?;
        // post-verification: every reported prime contains the input
        for pr in &primes {
            if !pr.contains_ideal(i)? {
                return Ok(MinimalPrimesResult {
                    primes: Vec::new(),
                    capability: Capability::Failed,
                });
            }
        }
        return Ok(MinimalPrimesResult {
            primes,
            capability: Capability::HeuristicVerified,
        });
    }
    Ok(MinimalPrimesResult {
        primes: Vec::new(),
        capability: Capability::Failed,
    })
}

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

/// Deduplicate, drop non-minimal members, sort canonically.
pub(crate) fn sorted_antichain(primes: Vec<Ideal>) -> Result<Vec<Ideal>> {
    let mut canonical: Vec<(Vec<String>, Ideal)> = Vec::new();
    for p in primes {
        let p = p.canonicalized()?;
        let key = p.canonical_strings()?;
        if !canonical.iter().any(|(k, _)| *k == key) {
            canonical.push((key, p));
        }
    }
    let mut keep = Vec::new();
    'outer: for idx in 0..canonical.len() {
        for jdx in 0..canonical.len() {
            if idx != jdx
                && canonical[idx].1.contains_ideal(&canonical[jdx].1)?
                && canonical[idx].0 != canonical[jdx].0
            {
                // a strictly smaller member exists
                continue 'outer;
            }
        }
        keep.push(canonical[idx].clone());
    }
    keep.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keep.into_iter().map(|(_, p)| p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::TermOrder;
    use crate::parse::parse_polynomial;

    fn ring(p: u64, vars: &[&str]) -> Arc<RingCtx> {
        RingCtx::new(
            p,
            vars.iter().map(|s| s.to_string()).collect(),
            TermOrder::GrevLex,
        )
        .unwrap()
    }

    fn ideal(r: &Arc<RingCtx>, gens: &[&str]) -> Ideal {
        Ideal::new(
            r,
            gens.iter()
                .map(|s| parse_polynomial(s, r).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn prime_strings(r: &MinimalPrimesResult) -> Vec<Vec<String>> {
        r.primes
            .iter()
            .map(|p| p.canonical_strings().unwrap())
            .collect()
    }

    #[test]
    fn node_has_two_primes() {
        let r = ring(2, &["x", "y"]);
        let res = minimal_primes(&ideal(&r, &["x*y"])).unwrap();
        assert_eq!(res.capability, Capability::Exact);
        assert_eq!(prime_strings(&res), vec![vec!["x"], vec!["y"]]);
    }

    #[test]
    fn stanley_reisner_covers() {
        let r = ring(2, &["x", "y", "z"]);
        let res = minimal_primes(&ideal(&r, &["x*y", "x*z"])).unwrap();
        assert_eq!(res.capability, Capability::Exact);
        assert_eq!(prime_strings(&res), vec![vec!["x"], vec!["y", "z"]]);
    }

    #[test]
    fn maximal_ideal_is_its_own_prime() {
        let r = ring(2, &["x", "y"]);
        let res = minimal_primes(&ideal(&r, &["x", "y"])).unwrap();
        assert_eq!(res.capability, Capability::Exact);
        assert_eq!(prime_strings(&res), vec![vec!["x", "y"]]);
    }

    #[test]
    fn zero_ideal_is_prime() {
        let r = ring(3, &["x", "y"]);
        let res = minimal_primes(&Ideal::zero(&r)).unwrap();
        assert_eq!(res.capability, Capability::Exact);
        assert!(res.primes[0].is_zero_ideal().unwrap());
        assert_eq!(is_prime_desk(&Ideal::zero(&r)).unwrap(), Primality::Yes);
    }

    #[test]
    fn unit_ideal_rejected() {
        let r = ring(3, &["x"]);
        assert!(matches!(
            minimal_primes(&Ideal::unit(&r)),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn univariate_principal_splits() {
        let r = ring(3, &["x"]);
        // x^2 + 2x = x(x+2)
        let res = minimal_primes(&ideal(&r, &["x^2 + 2*x"])).unwrap();
        assert_eq!(res.capability, Capability::Exact);
        assert_eq!(prime_strings(&res), vec![vec!["x"], vec!["x + 2"]]);
    }

    #[test]
    fn zero_dimensional_with_extension_point() {
        let r = ring(3, &["x", "y"]);
        // x^2 + 1 irreducible over F_3; (x^2 + 1, y) is maximal
        let i = ideal(&r, &["x^2 + 1", "y"]);
        let res = minimal_primes(&i).unwrap();
        assert_eq!(res.capability, Capability::Exact);
        assert_eq!(res.primes.len(), 1);
        assert!(res.primes[0].equals(&i).unwrap());
        assert_eq!(is_prime_desk(&i).unwrap(), Primality::Yes);
    }

    #[test]
    fn zero_dimensional_split_points() {
        let r = ring(3, &["x", "y"]);
        // (x^2 - 1, y) = (x+1, y) cap (x+2, y)
        let i = ideal(&r, &["x^2 + 2", "y"]);
        let res = minimal_primes(&i).unwrap();
        assert_eq!(res.capability, Capability::Exact);
        assert_eq!(res.primes.len(), 2);
        let inter = res.primes[0].intersect(&res.primes[1]).unwrap();
        assert!(inter.equals(&i).unwrap());
    }

    #[test]
    fn non_radical_zero_dimensional() {
        let r = ring(2, &["x"]);
        let i = ideal(&r, &["x^2"]);
        let res = minimal_primes(&i).unwrap();
        assert_eq!(res.capability, Capability::Exact);
        assert_eq!(prime_strings(&res), vec![vec!["x"]]);
        match is_prime_desk(&i).unwrap() {
            Primality::No { witness } => {
                let (a, b) = witness.expect("nilpotent witness");
                assert!(!i.contains_poly(&a).unwrap());
                assert!(!i.contains_poly(&b).unwrap());
                assert!(i.contains_poly(&a.mul(&b).unwrap()).unwrap());
            }
            other => panic!("expected No, got {other:?}"),
        }
    }

    #[test]
    fn primality_answers() {
        let r = ring(2, &["x", "y", "z"]);
        assert_eq!(
            is_prime_desk(&ideal(&r, &["x", "y"])).unwrap(),
            Primality::Yes
        );
        assert_eq!(
            is_prime_desk(&ideal(&r, &["y", "z"])).unwrap(),
            Primality::Yes
        );
        match is_prime_desk(&ideal(&r, &["x*y"])).unwrap() {
            Primality::No { witness } => {
                let (a, b) = witness.expect("witness for the node");
                assert_eq!(a.to_string(), "x");
                assert_eq!(b.to_string(), "y");
            }
            other => panic!("expected No, got {other:?}"),
        }
    }

    #[test]
    fn splitting_search_on_product_of_linear_forms() {
        let r = ring(2, &["x", "y"]);
        // (x(x+y)) is not monomial, not zero-dimensional, not univariate
        let i = ideal(&r, &["x^2 + x*y"]);
        let res = minimal_primes(&i).unwrap();
        assert_eq!(res.capability, Capability::HeuristicVerified);
        assert_eq!(prime_strings(&res), vec![vec!["x"], vec!["x + y"]]);
        let inter = res.primes[0].intersect(&res.primes[1]).unwrap();
        assert!(inter.equals(&i).unwrap());
    }

    #[test]
    fn antichain_property() {
        let r = ring(2, &["x", "y", "z"]);
        let res = minimal_primes(&ideal(&r, &["x*y", "x*z", "y*z"])).unwrap();
        for a in &res.primes {
            for b in &res.primes {
                if !a.equals(b).unwrap() {
                    assert!(!a.contains_ideal(b).unwrap());
                }
            }
        }
        // covers of the triangle: {x,y}, {x,z}, {y,z}
        assert_eq!(res.primes.len(), 3);
    }
}
