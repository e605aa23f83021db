//! Univariate factorization over F_p: char-p squarefree decomposition and
//! deterministic Berlekamp splitting.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::kernel_basis;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingCtx;

/// Complete factorization of a univariate polynomial: unit times the
/// product of monic irreducible factors with multiplicities.
#[derive(Debug, Clone)]
pub struct UnivariateFactorization {
    pub input: Polynomial,
    pub unit: u64,
    pub factors: Vec<(Polynomial, u32)>,
}

// ---------------------------------------------------------------------------
// dense univariate arithmetic (internal)
// ---------------------------------------------------------------------------

/// Coefficients ascending by degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Uni {
    f: PrimeField,
    c: Vec<u64>,
}

impl Uni {
    fn zero(f: PrimeField) -> Self {
        Uni { f, c: Vec::new() }
    }

    fn one(f: PrimeField) -> Self {
        Uni { f, c: vec![1] }
    }

    fn x(f: PrimeField) -> Self {
        Uni { f, c: vec![0, 1] }
    }

    fn constant(f: PrimeField, v: u64) -> Self {
        let v = f.reduce(v);
        Uni {
            f,
            c: if v == 0 { vec![] } else { vec![v] },
        }
    }

    fn trim(mut self) -> Self {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    fn sub(&self, o: &Uni) -> Uni {
        let n = self.c.len().max(o.c.len());
        let mut c = vec![0; n];
        for (i, v) in c.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = o.c.get(i).copied().unwrap_or(0);
            *v = self.f.sub(a, b);
        }
        Uni { f: self.f, c }.trim()
    }

    fn mul(&self, o: &Uni) -> Uni {
        if self.is_zero() || o.is_zero() {
            return Uni::zero(self.f);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = self.f.add(c[i + j], self.f.mul(a, b));
            }
        }
        Uni { f: self.f, c }.trim()
    }

    fn scale(&self, k: u64) -> Uni {
        Uni {
            f: self.f,
            c: self.c.iter().map(|&a| self.f.mul(a, k)).collect(),
        }
        .trim()
    }

    fn divrem(&self, d: &Uni) -> (Uni, Uni) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.degree() < d.degree() || self.is_zero() {
            return (Uni::zero(self.f), self.clone());
        }
        let inv = self.f.inv(d.lead()).expect("leading coefficient invertible");
        let mut rem = self.c.clone();
        let mut quot = vec![0u64; self.degree() - d.degree() + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + d.degree()];
            if top == 0 {
                continue;
            }
            let q = self.f.mul(top, inv);
            quot[i] = q;
            for (j, &dc) in d.c.iter().enumerate() {
                rem[i + j] = self.f.sub(rem[i + j], self.f.mul(q, dc));
            }
        }
        (
            Uni { f: self.f, c: quot }.trim(),
            Uni { f: self.f, c: rem }.trim(),
        )
    }

    fn rem(&self, d: &Uni) -> Uni {
        self.divrem(d).1
    }

    fn monic(&self) -> Uni {
        if self.is_zero() || self.lead() == 1 {
            return self.clone();
        }
        self.scale(self.f.inv(self.lead()).unwrap())
    }

    fn gcd(&self, o: &Uni) -> Uni {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Uni {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| self.f.mul(self.f.reduce(i as u64), a))
            .collect();
        Uni { f: self.f, c }.trim()
    }

    fn pow_mod(&self, mut e: u64, m: &Uni) -> Uni {
        let mut acc = Uni::one(self.f);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// p-th root of a polynomial supported on exponents divisible by p
    /// (coefficients are Frobenius-fixed over the prime field).
    fn pth_root(&self) -> Uni {
        let p = self.f.modulus() as usize;
        let c = self.c.iter().step_by(p).copied().collect();
        Uni { f: self.f, c }.trim()
    }
}

// ---------------------------------------------------------------------------
// conversions
// ---------------------------------------------------------------------------

/// The single variable index a univariate polynomial uses; constants pick 0.
fn univariate_index(f: &Polynomial) -> Result<usize> {
    let support = f.support_vars();
    match support.len() {
        0 => Ok(0),
        1 => Ok(support[0]),
        _ => Err(Error::NotUnivariate),
    }
}

fn to_dense(f: &Polynomial, var: usize) -> Uni {
    let field = *f.ring().field();
    let mut c = vec![0u64; f.total_degree() as usize + 1];
    for (m, coeff) in f.terms() {
        c[m.exponents()[var] as usize] = *coeff;
    }
    Uni { f: field, c }.trim()
}

fn from_dense(ring: &Arc<RingCtx>, var: usize, u: &Uni) -> Polynomial {
    let d = ring.num_vars();
    let terms = u
        .c
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| {
            let mut e = vec![0u32; d];
            e[var] = i as u32;
            (Monomial::new(e), c)
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// Monic product of the distinct irreducible factors of `f`.
///
/// Char-p aware: when f' = 0 the polynomial is a p-th power and the root is
/// taken on exponents before recursing.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = univariate_index(f)?;
    let u = to_dense(f, var).monic();
    let sf = squarefree_dense(&u);
    Ok(from_dense(f.ring(), var, &sf))
}

fn squarefree_dense(u: &Uni) -> Uni {
    if u.degree() == 0 {
        return Uni::one(u.f);
    }
    let du = u.derivative();
    if du.is_zero() {
        return squarefree_dense(&u.pth_root());
    }
    let c = u.gcd(&du);
    // w carries each irreducible whose multiplicity is not divisible by p
    let w = u.divrem(&c).0.monic();
    // strip the w-part from c, leaving the factors with multiplicity in pZ
    let mut rest = c;
    loop {
        let g = rest.gcd(&w);
        if g.degree() == 0 {
            break;
        }
        rest = rest.divrem(&g).0;
    }
    if rest.degree() == 0 {
        return w;
    }
    // rest is a p-th power with factors coprime to w
    w.mul(&squarefree_dense(&rest.pth_root())).monic()
}

/// Berlekamp factorization of a monic squarefree univariate polynomial into
/// monic irreducibles, sorted canonically. Deterministic: splits scan the
/// fixed-space basis and the field elements in order.
pub fn berlekamp_factor(f: &Polynomial) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = univariate_index(f)?;
    let u = to_dense(f, var);
    if u.degree() < 1 {
        return Err(Error::Precondition("degree must be at least 1".into()));
    }
    if u.lead() != 1 {
        return Err(Error::Precondition("input must be monic".into()));
    }
    let sf = squarefree_dense(&u);
    if sf.degree() != u.degree() {
        return Err(Error::Precondition("input must be squarefree".into()));
    }
    let mut parts = berlekamp_dense(&u)?;
    parts.sort_by(|a, b| (a.degree(), &a.c).cmp(&(b.degree(), &b.c)));
    Ok(parts
        .iter()
        .map(|p| from_dense(f.ring(), var, p))
        .collect())
}

fn berlekamp_dense(u: &Uni) -> Result<Vec<Uni>> {
    let field = u.f;
    let p = field.modulus();
    let n = u.degree();
    if n == 1 {
        return Ok(vec![u.clone()]);
    }

    // Q[i] = coefficients of x^(i*p) mod u
    let xp = Uni::x(field).pow_mod(p, u);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = Uni::one(field);
    for i in 0..n {
        let mut row = vec![0u64; n];
        for (j, &c) in cur.c.iter().enumerate() {
            row[j] = c;
        }
        rows.push(row);
        if i + 1 < n {
            cur = cur.mul(&xp).rem(u);
        }
    }
    // fixed space of Frobenius: v (Q - I) = 0, i.e. kernel of (Q - I)^T
    let mut mt = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = if i == j {
                field.sub(rows[i][j], 1)
            } else {
                rows[i][j]
            };
            mt[j][i] = v;
        }
    }
    let nullspace = kernel_basis(mt, n, &field);
    let r = nullspace.len();
    if r == 1 {
        return Ok(vec![u.clone()]);
    }

    if p > 1 << 16 {
        return Err(Error::ResourceExhausted {
            what: "Berlekamp splitting scan over F_p",
            cap: 1 << 16,
        });
    }

    let mut factors = vec![u.clone()];
    'split: for v in &nullspace {
        let h = Uni {
            f: field,
            c: v.clone(),
        }
        .trim();
        if h.degree() == 0 {
            continue;
        }
        for s in 0..p {
            let hs = h.sub(&Uni::constant(field, s));
            let mut next = Vec::with_capacity(factors.len());
            for g in factors {
                if g.degree() <= 1 {
                    next.push(g);
                    continue;
                }
                let d = g.gcd(&hs);
                if d.degree() > 0 && d.degree() < g.degree() {
                    let q = g.divrem(&d).0.monic();
                    next.push(d);
                    next.push(q);
                } else {
                    next.push(g);
                }
            }
            factors = next;
            if factors.len() == r {
                break 'split;
            }
        }
    }
    Ok(factors)
}

/// Full factorization: squarefree part, Berlekamp, then multiplicities by
/// trial division.
pub fn factor_univariate(f: &Polynomial) -> Result<UnivariateFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = univariate_index(f)?;
    let dense = to_dense(f, var);
    let unit = dense.lead();
    let monic = dense.monic();
    if monic.degree() == 0 {
        return Ok(UnivariateFactorization {
            input: f.clone(),
            unit,
            factors: Vec::new(),
        });
    }
    let sf = squarefree_dense(&monic);
    let irreducibles = berlekamp_dense(&sf)?;
    let mut factors = Vec::new();
    for q in irreducibles {
        let mut rest = monic.clone();
        let mut mult = 0u32;
        loop {
            let (quot, rem) = rest.divrem(&q);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            mult += 1;
        }
        factors.push((q, mult));
    }
    factors.sort_by(|a, b| (a.0.degree(), &a.0.c).cmp(&(b.0.degree(), &b.0.c)));
    Ok(UnivariateFactorization {
        input: f.clone(),
        unit,
        factors: factors
            .into_iter()
            .map(|(q, m)| (from_dense(f.ring(), var, &q), m))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::TermOrder;
    use crate::parse::parse_polynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(p: u64) -> Arc<RingCtx> {
        RingCtx::new(p, vec!["x".into()], TermOrder::GrevLex).unwrap()
    }

    fn poly(p: u64, s: &str) -> Polynomial {
        parse_polynomial(s, &ring(p)).unwrap()
    }

    #[test]
    fn squarefree_part_examples() {
        assert_eq!(squarefree_part(&poly(2, "x^2")).unwrap(), poly(2, "x"));
        // x^3 + x = x(x+1)^2 over F_2
        assert_eq!(
            squarefree_part(&poly(2, "x^3 + x")).unwrap(),
            poly(2, "x^2 + x")
        );
        assert_eq!(squarefree_part(&poly(3, "x")).unwrap(), poly(3, "x"));
        // pure p-th power
        assert_eq!(squarefree_part(&poly(3, "x^9")).unwrap(), poly(3, "x"));
        assert!(squarefree_part(&Polynomial::zero(&ring(2))).is_err());
    }

    #[test]
    fn berlekamp_examples() {
        let fs = berlekamp_factor(&poly(2, "x^2 + x")).unwrap();
        assert_eq!(fs, vec![poly(2, "x"), poly(2, "x + 1")]);

        // x^2 + 1 irreducible over F_3
        let fs = berlekamp_factor(&poly(3, "x^2 + 1")).unwrap();
        assert_eq!(fs, vec![poly(3, "x^2 + 1")]);

        // x^2 + 1 = (x+1)^2 over F_2: precondition error
        assert!(matches!(
            berlekamp_factor(&poly(2, "x^2 + 1")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn multivariate_rejected() {
        let r = RingCtx::new(2, vec!["x".into(), "y".into()], TermOrder::GrevLex).unwrap();
        let f = parse_polynomial("x*y + x", &r).unwrap();
        assert!(matches!(squarefree_part(&f), Err(Error::NotUnivariate)));
    }

    #[test]
    fn refactoring_product_equals_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &p in &[2u64, 3, 5] {
            let r = ring(p);
            for _ in 0..120 {
                let deg = rng.gen_range(1..=8usize);
                let mut text = format!("x^{deg}");
                for i in 0..deg {
                    let c = rng.gen_range(0..p);
                    if c != 0 {
                        text.push_str(&format!(" + {c}*x^{i}"));
                    }
                }
                let f = parse_polynomial(&text, &r).unwrap();
                let fac = factor_univariate(&f).unwrap();
                let mut prod = Polynomial::constant(&r, fac.unit);
                for (q, m) in &fac.factors {
                    prod = prod.mul(&q.pow(*m as u64).unwrap()).unwrap();
                }
                assert_eq!(prod, f, "refactoring failed for {f} over F_{p}");
            }
        }
    }

    #[test]
    fn irreducibles_divide_frobenius_probe() {
        // every irreducible of degree k divides x^(p^k) - x
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &p in &[2u64, 3, 5] {
            let field = PrimeField::new(p).unwrap();
            for _ in 0..40 {
                let deg = rng.gen_range(1..=6usize);
                let mut c: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
                c.push(1);
                let u = (Uni { f: field, c }).trim();
                let sf = squarefree_dense(&u);
                if sf.degree() < 1 {
                    continue;
                }
                for q in berlekamp_dense(&sf).unwrap() {
                    let k = q.degree() as u32;
                    let probe = Uni::x(field).pow_mod(field.modulus().pow(k), &q);
                    // x^(p^k) = x mod q
                    assert_eq!(probe, Uni::x(field).rem(&q));
                }
            }
        }
    }
}
