//! Brute-force quotient dimensions by dense linear algebra.
//!
//! Independent of the standard-basis engine: the ideal is spanned degree by
//! degree inside the space of polynomials truncated at degree `D`, and the
//! codimension of that span is `dim O / (I + m^{D+1})`. It equals the local
//! quotient dimension once `m^{D+1} ⊆ I`, which holds for `D` at least the
//! largest staircase degree.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::poly::{Coefficient, Monomial, Polynomial};

/// All monomials in `n` variables of total degree at most `bound`.
pub fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    out
}

/// `dim O / (gens + m^{D+1})` for `D = degree_bound`.
pub fn truncated_codimension(gens: &[Polynomial], degree_bound: u32) -> Result<usize> {
    let first = gens.first().ok_or(Error::EmptyGenerators)?;
    if gens.iter().any(|g| !g.same_ring(first)) {
        return Err(Error::RingMismatch("generators differ in ring".into()));
    }
    let n = first.nvars();
    let columns = monomials_up_to(n, degree_bound);
    let index: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut span = EchelonBasis::new();
    for g in gens {
        let Some(low) = g.order() else { continue };
        if low > degree_bound {
            continue;
        }
        for m in monomials_up_to(n, degree_bound - low) {
            let mut row = vec![Coefficient::zero(); columns.len()];
            for (t, c) in g.mul_monomial(&m).terms() {
                if let Some(&j) = index.get(t) {
                    row[j] = c.clone();
                }
            }
            span.insert(row);
        }
    }
    Ok(columns.len() - span.rank())
}

/// Milnor number estimate from the truncated Jacobian ideal.
pub fn milnor_oracle(f: &Polynomial, degree_bound: u32) -> Result<usize> {
    truncated_codimension(&f.gradient(), degree_bound)
}

/// Tjurina number estimate from the truncated ideal `(f, ∂f)`.
pub fn tjurina_oracle(f: &Polynomial, degree_bound: u32) -> Result<usize> {
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    truncated_codimension(&gens, degree_bound)
}
