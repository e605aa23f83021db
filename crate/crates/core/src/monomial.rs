//! Monomials (exponent vectors) and term orders.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A monomial as an exponent vector of fixed length (the ambient ring's
/// variable count). Exponents are 32-bit; all arithmetic is checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    /// The monomial x_i.
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .ok_or_else(|| Error::ExponentOverflow(format!("{a} + {b}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial(exps))
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial(exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// True when the supports are disjoint, i.e. lcm = product.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a.min(b) == 0)
    }

    /// Scale every exponent by `k` (used for Frobenius powers).
    pub fn pow_scale(&self, k: u64) -> Result<Monomial> {
        let exps = self
            .0
            .iter()
            .map(|&a| {
                let v = (a as u64).checked_mul(k).filter(|&v| v <= u32::MAX as u64);
                v.map(|v| v as u32)
                    .ok_or_else(|| Error::ExponentOverflow(format!("{a} * {k}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial(exps))
    }
}

/// Total multiplicative well-orders on monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    GrevLex,
    /// Elimination order: the first `first` variables form a block that is
    /// compared (by grevlex) before the remaining variables. Any monomial
    /// involving a block variable exceeds every monomial that avoids them.
    Block {
        first: usize,
    },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (&x, &y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller trailing exponent wins under grevlex
            return if x < y { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(&y);
        }
    }
    Ordering::Equal
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            TermOrder::Lex => lex(a, b),
            TermOrder::GrevLex => grevlex(a, b),
            TermOrder::Block { first } => {
                let k = first.min(a.len());
                match grevlex(&a[..k], &b[..k]) {
                    Ordering::Equal => grevlex(&a[k..], &b[k..]),
                    o => o,
                }
            }
        }
    }
}
