//! Characteristic-p operators on ideals: bracket powers I^[p^e], Frobenius
//! (p^e-th) roots, and the Cartier multiplier ideals C_e = (A^[p^e] : A).

use std::collections::BTreeMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// I^[p^e], generated by the p^e-th powers of any generating set.
///
/// The canonical basis is raised termwise: by flatness of Frobenius over S
/// the powers of a reduced Groebner basis are again one (leading terms,
/// monicity, divisibility of tails and S-pair reductions all scale with
/// the exponents), so no Buchberger run is needed.
pub fn bracket_power(i: &Ideal, e: u32) -> Result<Ideal> {
    if e == 0 {
        return Err(Error::Precondition("bracket power needs e >= 1".into()));
    }
    let gens = i
        .canonical_gens()?
        .iter()
        .map(|g| g.frobenius_power(e))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::from_reduced_basis(i.ring(), gens))
}

/// The p^e-th Frobenius root: the smallest ideal I with J contained in
/// I^[p^e]. Each generator is decomposed over the free basis
/// { x^alpha : 0 <= alpha_i < p^e } of S over S^(p^e); the root is generated
/// by all component polynomials.
pub fn pe_th_root(j: &Ideal, e: u32) -> Result<Ideal> {
    if e == 0 {
        return Err(Error::Precondition("Frobenius root needs e >= 1".into()));
    }
    let ring = j.ring();
    let q = ring.p_power(e)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in j.gens() {
        let mut buckets: BTreeMap<Vec<u32>, Vec<(Monomial, u64)>> = BTreeMap::new();
        for (m, c) in g.terms() {
            let mut residue = Vec::with_capacity(m.num_vars());
            let mut quotient = Vec::with_capacity(m.num_vars());
            for &exp in m.exponents() {
                residue.push((exp as u64 % q) as u32);
                quotient.push((exp as u64 / q) as u32);
            }
            // coefficients are their own p^e-th roots over the prime field
            buckets
                .entry(residue)
                .or_default()
                .push((Monomial::new(quotient), *c));
        }
        for (_, terms) in buckets {
            gens.push(Polynomial::from_terms(ring, terms));
        }
    }
    Ideal::new(ring, gens)?.canonicalized()
}

/// Per-level cache of the Cartier multipliers C_e = (A^[p^e] : A) of a
/// presenting ideal A. Write-once per level.
#[derive(Debug)]
pub struct CartierData {
    a: Ideal,
    levels: Mutex<BTreeMap<u32, Ideal>>,
}

impl CartierData {
    pub fn new(a: Ideal) -> Self {
        CartierData {
            a,
            levels: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn presenting_ideal(&self) -> &Ideal {
        &self.a
    }

    /// C_e, computed once and cached. For A = 0 this is the unit ideal.
    pub fn level(&self, e: u32) -> Result<Ideal> {
        if e == 0 {
            return Err(Error::Precondition("Cartier level needs e >= 1".into()));
        }
        if let Some(c) = self.levels.lock().unwrap().get(&e) {
            return Ok(c.clone());
        }
        let c = cartier_multiplier(&self.a, e)?;
        let mut map = self.levels.lock().unwrap();
        Ok(map.entry(e).or_insert(c).clone())
    }
}

/// C_e = (A^[p^e] : A); the unit ideal when A = 0.
pub fn cartier_multiplier(a: &Ideal, e: u32) -> Result<Ideal> {
    if a.is_zero_ideal()? {
        return Ideal::unit(a.ring()).canonicalized();
    }
    bracket_power(a, e)?.colon(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::TermOrder;
    use crate::parse::parse_polynomial;
    use crate::ring::RingCtx;
    use std::sync::Arc;

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

    #[test]
    fn bracket_of_principal() {
        let r = ring(2, &["x", "y"]);
        let i = ideal(&r, &["x + y"]);
        let b = bracket_power(&i, 1).unwrap();
        assert!(b.equals(&ideal(&r, &["x^2 + y^2"])).unwrap());
    }

    #[test]
    fn bracket_commutes_with_intersection() {
        let r = ring(2, &["x", "y"]);
        let x = ideal(&r, &["x"]);
        let y = ideal(&r, &["y"]);
        let lhs = bracket_power(&x.intersect(&y).unwrap(), 1).unwrap();
        let rhs = bracket_power(&x, 1)
            .unwrap()
            .intersect(&bracket_power(&y, 1).unwrap())
            .unwrap();
        assert!(lhs.equals(&rhs).unwrap());
        assert!(lhs.equals(&ideal(&r, &["x^2*y^2"])).unwrap());
    }

    #[test]
    fn bracket_commutes_with_colon() {
        let r = ring(2, &["x", "y"]);
        let sq = ideal(&r, &["x^2", "y^2"]);
        let m = ideal(&r, &["x", "y"]);
        let q = sq.colon(&m).unwrap();
        let lhs = bracket_power(&q, 1).unwrap();
        assert!(lhs.equals(&ideal(&r, &["x^4", "x^2*y^2", "y^4"])).unwrap());
        let rhs = bracket_power(&sq, 1)
            .unwrap()
            .colon(&bracket_power(&m, 1).unwrap())
            .unwrap();
        assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn bracket_independent_of_generators() {
        let r = ring(3, &["x", "y"]);
        let a = ideal(&r, &["x + y", "y"]);
        let b = ideal(&r, &["x", "y", "x + 2*y"]);
        assert!(a.equals(&b).unwrap());
        assert!(bracket_power(&a, 1)
            .unwrap()
            .equals(&bracket_power(&b, 1).unwrap())
            .unwrap());
    }

    #[test]
    fn root_examples() {
        let r1 = ring(2, &["x"]);
        let i = ideal(&r1, &["x^3"]);
        assert!(pe_th_root(&i, 1).unwrap().equals(&ideal(&r1, &["x"])).unwrap());

        let r = ring(2, &["x", "y"]);
        let xy = ideal(&r, &["x*y"]);
        assert!(pe_th_root(&xy, 1).unwrap().is_unit_ideal().unwrap());

        let sq = ideal(&r, &["x^2*y^2"]);
        assert!(pe_th_root(&sq, 1).unwrap().equals(&xy).unwrap());
    }

    #[test]
    fn root_of_bracket_recovers_ideal() {
        let r = ring(3, &["x", "y"]);
        for gens in [&["x + y", "x*y"][..], &["x^2 + 2*y"][..], &["x", "y^2"][..]] {
            let i = ideal(&r, gens).canonicalized().unwrap();
            for e in 1..=2 {
                let back = pe_th_root(&bracket_power(&i, e).unwrap(), e).unwrap();
                assert!(back.equals(&i).unwrap());
            }
        }
    }

    #[test]
    fn cartier_levels() {
        let r = ring(2, &["x", "y"]);
        let a = ideal(&r, &["x*y"]);
        let c = CartierData::new(a.clone());
        assert!(c.level(1).unwrap().equals(&a).unwrap());

        let zero = CartierData::new(Ideal::zero(&r));
        assert!(zero.level(1).unwrap().is_unit_ideal().unwrap());

        let r1 = ring(2, &["x"]);
        let x2 = ideal(&r1, &["x^2"]);
        assert!(cartier_multiplier(&x2, 1)
            .unwrap()
            .equals(&x2)
            .unwrap());
    }
}
