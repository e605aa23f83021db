//! Sparse multivariate polynomials over F_p.
//!
//! Terms are kept in strictly descending term order with no zero
//! coefficients, so structural equality is mathematical equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::monomial::Monomial;
use crate::ring::{same_ring, RingCtx};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<RingCtx>,
    /// (monomial, coefficient) pairs, descending in the ring's term order.
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingCtx>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<RingCtx>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<RingCtx>, c: u64) -> Self {
        let c = ring.field().reduce(c);
        let mut terms = Vec::new();
        if c != 0 {
            terms.push((Monomial::one(ring.num_vars()), c));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<RingCtx>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.num_vars(), i), 1)],
        }
    }

    pub fn term(ring: &Arc<RingCtx>, m: Monomial, c: u64) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Build from arbitrary (monomial, coefficient) pairs: reduces mod p,
    /// merges duplicates, drops zeros, sorts descending.
    pub fn from_terms(ring: &Arc<RingCtx>, raw: Vec<(Monomial, u64)>) -> Self {
        let order = ring.order();
        let field = *ring.field();
        let mut terms: Vec<(Monomial, u64)> = raw
            .into_iter()
            .map(|(m, c)| (m, field.reduce(c)))
            .filter(|&(_, c)| c != 0)
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        Polynomial {
            ring: ring.clone(),
            terms: merged,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> u64 {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map_or(0, |&(_, c)| c)
    }

    pub fn leading(&self) -> Option<(&Monomial, u64)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Indices of variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let d = self.ring.num_vars();
        let mut used = vec![false; d];
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..d).filter(|&i| used[i]).collect()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            let cb = if negate { field.neg(*cb) } else { *cb };
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(*ca, cb);
                    if c != 0 {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| {
            let c = if negate { field.neg(*c) } else { *c };
            (m.clone(), c)
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(*c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let field = self.ring.field();
        let c = field.reduce(c);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(*k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term c * m.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Result<Polynomial> {
        let field = self.ring.field();
        let c = field.reduce(c);
        if c == 0 {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| Ok((tm.mul(m)?, field.mul(*tc, c))))
            .collect::<Result<Vec<_>>>()?;
        // multiplying by a fixed monomial preserves the descending order
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, &other.ring)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb)?, self.ring.field().mul(*ca, *cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, raw))
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial> {
        match self.leading() {
            None => Ok(self.clone()),
            Some((_, c)) if c == 1 => Ok(self.clone()),
            Some((_, c)) => {
                let inv = self.ring.field().inv(c)?;
                Ok(self.scale(inv))
            }
        }
    }

    /// f^(p^e): exponents scale by p^e and coefficients are fixed by
    /// Frobenius, so the term count is preserved.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        let q = self.ring.p_power(e)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.pow_scale(q)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        // scaling exponents uniformly preserves every term order we use
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = *self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[var] > 0)
            .map(|(m, c)| {
                let e = m.exponents()[var];
                let mut exps = m.exponents().to_vec();
                exps[var] = e - 1;
                (Monomial::new(exps), field.mul(*c, field.reduce(e as u64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// General power by repeated multiplication.
    pub fn pow(&self, e: u64) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exact division by `divisor`; the remainder must vanish.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, &divisor.ring)?;
        if divisor.is_zero() {
            return Err(crate::error::Error::ZeroPolynomial);
        }
        let field = self.ring.field();
        let (dlm, dlc) = divisor.leading().unwrap();
        let dlc_inv = field.inv(dlc)?;
        let mut rem = self.clone();
        let mut quot_terms: Vec<(Monomial, u64)> = Vec::new();
        while let Some((lm, lc)) = rem.leading() {
            let qm = lm.div(dlm).ok_or_else(|| {
                crate::error::Error::Precondition("exact division failed".into())
            })?;
            let qc = field.mul(lc, dlc_inv);
            quot_terms.push((qm.clone(), qc));
            rem = rem.sub(&divisor.mul_term(&qm, qc)?)?;
        }
        Ok(Polynomial::from_terms(&self.ring, quot_terms))
    }

    /// Map into another ring: `index_map[i]` is the variable index in the
    /// target ring for variable `i` here. Unmapped target variables get
    /// exponent zero.
    pub fn map_vars(&self, target: &Arc<RingCtx>, index_map: &[usize]) -> Polynomial {
        let d = target.num_vars();
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; d];
                for (i, &exp) in m.exponents().iter().enumerate() {
                    e[index_map[i]] = exp;
                }
                (Monomial::new(e), *c)
            })
            .collect();
        Polynomial::from_terms(target, raw)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].clone()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::TermOrder;

    fn ring2(p: u64) -> Arc<RingCtx> {
        RingCtx::new(p, vec!["x".into(), "y".into()], TermOrder::GrevLex).unwrap()
    }

    fn xy(ring: &Arc<RingCtx>) -> (Polynomial, Polynomial) {
        (Polynomial::var(ring, 0), Polynomial::var(ring, 1))
    }

    #[test]
    fn freshman_dream_char2() {
        let r = ring2(2);
        let (x, y) = xy(&r);
        let s = x.add(&y).unwrap();
        let sq = s.mul(&s).unwrap();
        let expect = x.mul(&x).unwrap().add(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn sub_self_is_zero() {
        let r = ring2(2);
        let (x, y) = xy(&r);
        let s = x.add(&y).unwrap();
        assert!(s.sub(&s).unwrap().is_zero());
    }

    #[test]
    fn char3_product() {
        // (x+1)(x+2) = x^2 + 2 over F_3
        let r = RingCtx::new(3, vec!["x".into()], TermOrder::GrevLex).unwrap();
        let x = Polynomial::var(&r, 0);
        let a = x.add(&Polynomial::constant(&r, 1)).unwrap();
        let b = x.add(&Polynomial::constant(&r, 2)).unwrap();
        let prod = a.mul(&b).unwrap();
        let expect = x
            .mul(&x)
            .unwrap()
            .add(&Polynomial::constant(&r, 2))
            .unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn frobenius_power_examples() {
        let r = ring2(2);
        let (x, y) = xy(&r);
        let f = x.add(&y).unwrap();
        assert_eq!(f.frobenius_power(1).unwrap(), f.mul(&f).unwrap());
        let m = x.mul(&y).unwrap();
        let m4 = m.frobenius_power(2).unwrap();
        assert_eq!(m4, m.pow(4).unwrap());
        assert_eq!(m4.terms().len(), 1);

        let r3 = RingCtx::new(3, vec!["x".into()], TermOrder::GrevLex).unwrap();
        let x3 = Polynomial::var(&r3, 0);
        let g = x3.add(&Polynomial::constant(&r3, 1)).unwrap();
        assert_eq!(g.frobenius_power(1).unwrap(), g.pow(3).unwrap());
    }

    #[test]
    fn frobenius_is_multiplicative_and_additive() {
        let r = ring2(3);
        let (x, y) = xy(&r);
        let f = x.add(&y.scale(2)).unwrap();
        let g = x.mul(&y).unwrap().add(&Polynomial::constant(&r, 1)).unwrap();
        for e in 1..=2u32 {
            let lhs = f.mul(&g).unwrap().frobenius_power(e).unwrap();
            let rhs = f
                .frobenius_power(e)
                .unwrap()
                .mul(&g.frobenius_power(e).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            let lhs = f.add(&g).unwrap().frobenius_power(e).unwrap();
            let rhs = f
                .frobenius_power(e)
                .unwrap()
                .add(&g.frobenius_power(e).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exact_division() {
        let r = ring2(2);
        let (x, y) = xy(&r);
        let f = x.add(&y).unwrap();
        let g = x.mul(&x).unwrap().add(&y.mul(&y).unwrap()).unwrap(); // (x+y)^2
        assert_eq!(g.exact_div(&f).unwrap(), f);
        assert!(x.exact_div(&y).is_err());
    }

    #[test]
    fn ring_mismatch_rejected() {
        let r2 = ring2(2);
        let r3 = ring2(3);
        let a = Polynomial::var(&r2, 0);
        let b = Polynomial::var(&r3, 0);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn display_canonical() {
        let r = ring2(3);
        let (x, y) = xy(&r);
        let f = x
            .mul(&x)
            .unwrap()
            .add(&y.scale(2))
            .unwrap()
            .add(&Polynomial::constant(&r, 1))
            .unwrap();
        assert_eq!(f.to_string(), "x^2 + 2*y + 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(x.mul(&y).unwrap().to_string(), "x*y");
    }
}
