//! Shared helpers for the integration suites: the brute-force spanning
//! oracle for graded ideal dimensions (independent of the rewriting
//! engine), deterministic random scalars and matrices, and catalog
//! shortcuts.
#![allow(dead_code)] // each test target uses a different subset

use std::sync::Arc;

use skewcy_core::free::{GeneratorTable, NcPolynomial, Word};
use skewcy_core::matrix::Matrix;
use skewcy_core::rng::SplitMix;
use skewcy_core::{FieldSpec, GradedAlgebra, Scalar};

/// All words of the free algebra with the given total degree, in
/// enumeration order.
pub fn free_words(table: &Arc<GeneratorTable>, degree: i64) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        table: &Arc<GeneratorTable>,
        current: &mut Vec<u32>,
        acc: i64,
        target: i64,
        out: &mut Vec<Word>,
    ) {
        if acc == target {
            out.push(Word::from_letters(current.clone()));
            return;
        }
        for g in 0..table.len() as u32 {
            let d = table.total_degree(g);
            if acc + d <= target {
                current.push(g);
                rec(table, current, acc + d, target, out);
                current.pop();
            }
        }
    }
    rec(table, &mut current, 0, degree, &mut out);
    out
}

/// Dimension of the degree-n piece of the two-sided ideal generated by the
/// relations, computed by spanning: rank of { a * r * b } over all free
/// words a, b and relations r with matching degree. Works entirely in the
/// free algebra; the rewriting engine is never consulted.
pub fn spanning_ideal_dimension(a: &GradedAlgebra, degree: i64) -> usize {
    let table = a.table();
    let field = a.field();
    let basis = free_words(table, degree);
    let col_of = |w: &Word| basis.iter().position(|b| b == w).expect("degree matches");
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for r in a.relations() {
        if r.is_zero() {
            continue;
        }
        let rdeg = r.max_total_degree();
        for left_deg in 0..=(degree - rdeg) {
            let right_deg = degree - rdeg - left_deg;
            for aw in free_words(table, left_deg) {
                for bw in free_words(table, right_deg) {
                    let am = NcPolynomial::monomial(table, aw.clone(), Scalar::one(field));
                    let bm = NcPolynomial::monomial(table, bw.clone(), Scalar::one(field));
                    let prod = am.mul(r).unwrap().mul(&bm).unwrap();
                    let mut row = vec![Scalar::zero(field); basis.len()];
                    for (w, c) in prod.terms() {
                        row[col_of(w)] = c.clone();
                    }
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows, field).unwrap().rank().unwrap()
}

/// Oracle check that the rewriting engine and the spanning computation
/// agree: dim(free_n) = dim(ideal_n) + h_n for all n up to `max_degree`.
pub fn dimensions_agree(a: &GradedAlgebra, max_degree: i64) -> bool {
    for n in 0..=max_degree {
        let free_dim = free_words(a.table(), n).len();
        let ideal_dim = spanning_ideal_dimension(a, n);
        let normal_dim = a.dimension(n).unwrap();
        if free_dim != ideal_dim + normal_dim {
            eprintln!(
                "degree {n}: free {free_dim} != ideal {ideal_dim} + normal {normal_dim}"
            );
            return false;
        }
    }
    true
}

/// Deterministic nonzero scalar stream.
pub fn random_nonzero(rng: &mut SplitMix, field: &FieldSpec) -> Scalar {
    loop {
        let s = match field {
            FieldSpec::PrimeField(p) => {
                Scalar::from_integer((rng.next_u64() % p) as i64, field)
            }
            _ => {
                let num = (rng.next_u64() % 19) as i64 - 9;
                let den = (rng.next_u64() % 9) as i64 + 1;
                Scalar::from_ratio(num, den, field).unwrap()
            }
        };
        if !s.is_zero() {
            return s;
        }
    }
}

/// Deterministic invertible matrix stream.
pub fn random_invertible(rng: &mut SplitMix, n: usize, field: &FieldSpec) -> Matrix {
    loop {
        let mut m = Matrix::new(n, n, field);
        for i in 0..n {
            for j in 0..n {
                let entry = match field {
                    FieldSpec::PrimeField(p) => {
                        Scalar::from_integer((rng.next_u64() % p) as i64, field)
                    }
                    _ => Scalar::from_integer((rng.next_u64() % 7) as i64 - 3, field),
                };
                m.set(i, j, entry);
            }
        }
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

/// k_q[x, y] with the given parameter.
pub fn quantum_plane(q: &Scalar, bound: i64) -> GradedAlgebra {
    skewcy_core::catalog::quantum_plane(q, bound).unwrap().algebra
}

/// Skew polynomial ring on w variables with given parameters p_ij (i < j,
/// row-major).
pub fn skew_ring(w: usize, params: &[Scalar], field: &FieldSpec, bound: i64) -> GradedAlgebra {
    skewcy_core::catalog::skewpoly(w, params, field, bound)
        .unwrap()
        .algebra
}

/// The expected skew-ring Nakayama eigenvalue of x_s:
/// prod_(a<s) p_as * prod_(b>s) p_sb^-1, with p indexed row-major for i < j.
pub fn skew_nakayama_eigenvalue(w: usize, params: &[Scalar], s: usize) -> Scalar {
    let field = params[0].field();
    let index = |i: usize, j: usize| -> usize {
        // position of p_ij (i < j) in row-major order
        let mut k = 0;
        for a in 0..w {
            for b in (a + 1)..w {
                if (a, b) == (i, j) {
                    return k;
                }
                k += 1;
            }
        }
        unreachable!()
    };
    let mut acc = Scalar::one(&field);
    for a in 0..s {
        acc = acc.mul(&params[index(a, s)]).unwrap();
    }
    for b in (s + 1)..w {
        acc = acc.mul(&params[index(s, b)].inv().unwrap()).unwrap();
    }
    acc
}
