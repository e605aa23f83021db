//! Dense linear algebra over F_p: row reduction, kernels, row spaces.

use crate::field::PrimeField;

/// Reduce `mat` in place to reduced row echelon form; returns pivot columns.
pub(crate) fn rref(mat: &mut [Vec<u64>], field: &PrimeField) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| mat[i][c] != 0) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = field.inv(mat[r][c]).expect("pivot nonzero");
        for x in mat[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && mat[i][c] != 0 {
                let factor = mat[i][c];
                for j in 0..cols {
                    let sub = field.mul(factor, mat[r][j]);
                    mat[i][j] = field.sub(mat[i][j], sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis of { v : M v = 0 }, canonical (one vector per free column,
/// ascending). Rows of `mat` are constraints on a `cols`-dimensional space.
pub(crate) fn kernel_basis(mut mat: Vec<Vec<u64>>, cols: usize, field: &PrimeField) -> Vec<Vec<u64>> {
    mat.retain(|row| row.iter().any(|&x| x != 0));
    if mat.is_empty() {
        // identity basis
        return (0..cols)
            .map(|i| {
                let mut v = vec![0; cols];
                v[i] = 1;
                v
            })
            .collect();
    }
    let pivots = rref(&mut mat, field);
    let pivot_set: Vec<Option<usize>> = {
        let mut m = vec![None; cols];
        for (row, &c) in pivots.iter().enumerate() {
            m[c] = Some(row);
        }
        m
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for c in 0..cols {
            if let Some(row) = pivot_set[c] {
                // v[c] = -mat[row][free]
                v[c] = field.neg(mat[row][free]);
            }
        }
        basis.push(v);
    }
    basis
}

/// An incrementally maintained row space in RREF, for rank and span
/// comparisons.
#[derive(Debug, Clone)]
pub(crate) struct RowSpace {
    field: PrimeField,
    cols: usize,
    /// rows in echelon form, each with a recorded pivot column
    rows: Vec<(usize, Vec<u64>)>,
}

impl RowSpace {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        RowSpace {
            field,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows; the residue is zero iff `v`
    /// lies in the span.
    fn residue(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (pc, row) in &self.rows {
            if v[*pc] != 0 {
                let factor = v[*pc];
                for j in 0..self.cols {
                    let sub = self.field.mul(factor, row[j]);
                    v[j] = self.field.sub(v[j], sub);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.residue(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Insert a vector; returns true when it increased the rank.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut r = self.residue(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(r[pc]).expect("nonzero");
        for x in r.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        // back-substitute into existing rows to stay fully reduced
        for (_, row) in self.rows.iter_mut() {
            if row[pc] != 0 {
                let factor = row[pc];
                for j in 0..self.cols {
                    let sub = self.field.mul(factor, r[j]);
                    row[j] = self.field.sub(row[j], sub);
                }
            }
        }
        self.rows.push((pc, r));
        self.rows.sort_by_key(|(pc, _)| *pc);
        true
    }

    #[cfg(test)]
    pub fn same_span(&self, other: &RowSpace) -> bool {
        self.rank() == other.rank() && self.rows.iter().all(|(_, r)| other.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn kernel_of_simple_system() {
        // x + y = 0 over F_2 -> kernel {(1,1)}
        let k = kernel_basis(vec![vec![1, 1]], 2, &f(2));
        assert_eq!(k, vec![vec![1, 1]]);
    }

    #[test]
    fn kernel_full_space_when_no_constraints() {
        let k = kernel_basis(vec![vec![0, 0]], 2, &f(3));
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn rowspace_rank_and_span() {
        let field = f(5);
        let mut a = RowSpace::new(field, 3);
        assert!(a.insert(vec![1, 2, 3]));
        assert!(a.insert(vec![0, 1, 1]));
        assert!(!a.insert(vec![1, 3, 4])); // dependent
        assert_eq!(a.rank(), 2);
        let mut b = RowSpace::new(field, 3);
        b.insert(vec![2, 4, 6]);
        b.insert(vec![0, 2, 2]);
        assert!(a.same_span(&b));
        assert!(a.contains(&[1, 0, 1]));
        assert!(!a.contains(&[0, 0, 1]));
    }

    #[test]
    fn kernel_vectors_satisfy_system() {
        let field = f(7);
        let mat = vec![vec![1, 2, 3, 4], vec![0, 1, 6, 2]];
        let k = kernel_basis(mat.clone(), 4, &field);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &mat {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| field.add(acc, field.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }
}
