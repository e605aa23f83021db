//! Shared oracle helpers for the integration tests. Everything here is an
//! independent route: brute-force linear algebra and exhaustive searches
//! that never touch the Groebner engine internals they are checking.

use std::sync::Arc;

use frobsplit::{Ideal, Monomial, Polynomial, RingCtx};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// All monomials of total degree <= `deg` in the ring.
pub fn monomials_up_to(ring: &Arc<RingCtx>, deg: u32) -> Vec<Monomial> {
    let d = ring.num_vars();
    let mut out = Vec::new();
    let mut cur = vec![0u32; d];
    'walk: loop {
        if cur.iter().map(|&e| e as u64).sum::<u64>() <= deg as u64 {
            out.push(Monomial::new(cur.clone()));
        }
        for v in 0..d {
            cur[v] += 1;
            if cur[v] <= deg {
                continue 'walk;
            }
            cur[v] = 0;
        }
        break;
    }
    out.sort();
    out
}

/// Random polynomial of total degree <= `deg` with terms kept sparse.
pub fn random_poly(ring: &Arc<RingCtx>, deg: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let monos = monomials_up_to(ring, deg);
    let mut terms: Vec<(Monomial, u64)> = Vec::new();
    for m in monos {
        if rng.gen_bool(0.4) {
            terms.push((m, rng.gen_range(0..ring.p())));
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// Brute-force ideal membership: search for cofactors c_i of total degree
/// <= `cofactor_deg` with sum c_i g_i = f, by dense Gaussian elimination
/// over F_p. Completely independent of the division/Buchberger route.
pub fn membership_oracle(
    f: &Polynomial,
    gens: &[Polynomial],
    cofactor_deg: u32,
) -> bool {
    let ring = f.ring().clone();
    let p = ring.p();
    if f.is_zero() {
        return true;
    }
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return false;
    }
    let max_gen_deg = gens.iter().map(|g| g.total_degree()).max().unwrap() as u32;
    let row_deg = cofactor_deg + max_gen_deg;
    let rows_monos = monomials_up_to(&ring, row_deg);
    let row_of = |m: &Monomial| rows_monos.binary_search(m).expect("row monomial");
    let cof_monos = monomials_up_to(&ring, cofactor_deg);

    // unknowns: one coefficient per (generator, cofactor monomial)
    let cols = gens.len() * cof_monos.len();
    let mut mat = vec![vec![0u64; cols + 1]; rows_monos.len()];
    for (gi, g) in gens.iter().enumerate() {
        for (ci, cm) in cof_monos.iter().enumerate() {
            let col = gi * cof_monos.len() + ci;
            let shifted = match g.mul_term(cm, 1) {
                Ok(s) => s,
                Err(_) => return false,
            };
            for (m, c) in shifted.terms() {
                mat[row_of(m)][col] = (mat[row_of(m)][col] + c) % p;
            }
        }
    }
    for (m, c) in f.terms() {
        mat[row_of(m)][cols] = *c;
    }
    solve_consistent(&mut mat, cols, p)
}

/// Gaussian elimination on the augmented system; true iff consistent.
fn solve_consistent(mat: &mut [Vec<u64>], cols: usize, p: u64) -> bool {
    let inv = |a: u64| -> u64 {
        // Fermat inverse; p is prime and a is nonzero
        let mut acc = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let rows = mat.len();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| mat[i][c] != 0) else {
            continue;
        };
        mat.swap(r, pivot);
        let scale = inv(mat[r][c]);
        for x in mat[r].iter_mut() {
            *x = *x * scale % p;
        }
        for i in 0..rows {
            if i != r && mat[i][c] != 0 {
                let factor = mat[i][c];
                for j in 0..=cols {
                    let sub = factor * mat[r][j] % p;
                    mat[i][j] = (mat[i][j] + p - sub) % p;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    // inconsistent iff a row reads 0 = nonzero
    !mat.iter()
        .any(|row| row[..cols].iter().all(|&x| x == 0) && row[cols] != 0)
}

/// All nonempty squarefree monomials in the ring's variables.
pub fn squarefree_monomials(ring: &Arc<RingCtx>) -> Vec<Polynomial> {
    let d = ring.num_vars();
    let mut out = Vec::new();
    for mask in 1u32..(1 << d) {
        let exps: Vec<u32> = (0..d).map(|v| ((mask >> v) & 1) as u32).collect();
        out.push(Polynomial::term(ring, Monomial::new(exps), 1));
    }
    out
}

/// Every ideal generated by a subset of the squarefree monomials together
/// with `base`, deduplicated by canonical form.
pub fn squarefree_monomial_ideals_over(base: &Ideal) -> Vec<Ideal> {
    let ring = base.ring().clone();
    let monos = squarefree_monomials(&ring);
    let mut seen: Vec<(Vec<String>, Ideal)> = Vec::new();
    for mask in 0u32..(1 << monos.len()) {
        let mut gens: Vec<Polynomial> = base.gens().to_vec();
        for (i, m) in monos.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                gens.push(m.clone());
            }
        }
        let ideal = Ideal::new(&ring, gens).unwrap().canonicalized().unwrap();
        let key = ideal.canonical_strings().unwrap();
        if !seen.iter().any(|(k, _)| *k == key) {
            seen.push((key, ideal));
        }
    }
    seen.sort_by(|a, b| a.0.cmp(&b.0));
    seen.into_iter().map(|(_, i)| i).collect()
}
