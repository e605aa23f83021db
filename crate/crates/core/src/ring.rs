//! Ring descriptors: F_p[x_1..x_d] with a fixed term order.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::TermOrder;

/// Descriptor of a polynomial ring F_p[vars] with a term order. Polynomials
/// carry an `Arc<RingCtx>` as their ring tag; two tags agree when the
/// contents agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCtx {
    field: PrimeField,
    vars: Vec<String>,
    order: TermOrder,
}

impl RingCtx {
    pub fn new(p: u64, vars: Vec<String>, order: TermOrder) -> Result<Arc<Self>> {
        let field = PrimeField::new(p)?;
        if vars.is_empty() {
            return Err(Error::InvalidPresentation("no variables".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::InvalidPresentation(format!(
                    "invalid variable name `{v}`"
                )));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate variable `{v}`"
                )));
            }
        }
        Ok(Arc::new(RingCtx { field, vars, order }))
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.field.modulus()
    }

    #[inline]
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    #[inline]
    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// p^e as u64, checked.
    pub fn p_power(&self, e: u32) -> Result<u64> {
        self.p()
            .checked_pow(e)
            .ok_or_else(|| Error::ExponentOverflow(format!("p^{e}")))
    }

    /// Extension ring [aux, vars...] under an elimination order for `aux`.
    /// The auxiliary name is chosen to avoid the existing variables.
    pub fn with_aux_var(self: &Arc<Self>) -> (Arc<RingCtx>, String) {
        let mut name = "t".to_string();
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name.clone());
        vars.extend(self.vars.iter().cloned());
        let ring = Arc::new(RingCtx {
            field: self.field,
            vars,
            order: TermOrder::Block { first: 1 },
        });
        (ring, name)
    }

    /// Ring with the same variables permuted (`perm[i]` = old index placed
    /// at new position `i`) and the given order. Used for elimination.
    pub fn permuted(self: &Arc<Self>, perm: &[usize], order: TermOrder) -> Arc<RingCtx> {
        let vars = perm.iter().map(|&i| self.vars[i].clone()).collect();
        Arc::new(RingCtx {
            field: self.field,
            vars,
            order,
        })
    }
}

/// Checks that two ring tags agree.
pub fn same_ring(a: &Arc<RingCtx>, b: &Arc<RingCtx>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_validates() {
        let r = RingCtx::new(3, vec!["x".into(), "y".into()], TermOrder::GrevLex).unwrap();
        assert_eq!(r.p(), 3);
        assert_eq!(r.var_index("y"), Some(1));
        assert!(RingCtx::new(4, vec!["x".into()], TermOrder::Lex).is_err());
        assert!(RingCtx::new(3, vec!["x".into(), "x".into()], TermOrder::Lex).is_err());
    }

    #[test]
    fn aux_var_avoids_clashes() {
        let r = RingCtx::new(2, vec!["t".into(), "x".into()], TermOrder::GrevLex).unwrap();
        let (ext, name) = r.with_aux_var();
        assert_eq!(name, "t_");
        assert_eq!(ext.vars()[0], "t_");
        assert_eq!(ext.order(), TermOrder::Block { first: 1 });
    }
}
