//! Words and exact-coefficient noncommutative polynomials over graded
//! generators, with multidegrees in Z^w and the total degree obtained by
//! summing coordinates.
//!
//! The monomial order is deglex: first by total degree, then left
//! lexicographically by generator index (earlier-declared generators are
//! smaller). Polynomials are kept canonical: terms deglex-descending, no
//! zero coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};

pub type Multidegree = Vec<i64>;

/// Ordered generators with their Z^w multidegrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorTable {
    names: Vec<String>,
    degrees: Vec<Multidegree>,
    rank: usize,
}

impl GeneratorTable {
    pub fn new(names: Vec<String>, degrees: Vec<Multidegree>, rank: usize) -> Result<Arc<Self>> {
        if names.len() != degrees.len() {
            return Err(Error::DimensionMismatch(names.len(), 1, degrees.len(), 1));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        for (name, d) in names.iter().zip(&degrees) {
            if d.len() != rank {
                return Err(Error::DegreeMismatch(format!(
                    "generator {name} has multidegree of rank {}, expected {rank}",
                    d.len()
                )));
            }
            if d.iter().sum::<i64>() < 1 {
                return Err(Error::ZeroDegreeGenerator(name.clone()));
            }
        }
        Ok(Arc::new(GeneratorTable {
            names,
            degrees,
            rank,
        }))
    }

    /// Convenience constructor: every generator in degree 1 of a Z-grading.
    pub fn standard(names: &[&str]) -> Arc<Self> {
        GeneratorTable::new(
            names.iter().map(|s| s.to_string()).collect(),
            names.iter().map(|_| vec![1]).collect(),
            1,
        )
        .expect("standard table is valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self, i: u32) -> &str {
        &self.names[i as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn multidegree(&self, i: u32) -> &Multidegree {
        &self.degrees[i as usize]
    }

    pub fn total_degree(&self, i: u32) -> i64 {
        self.degrees[i as usize].iter().sum()
    }

    pub fn word_total_degree(&self, w: &Word) -> i64 {
        w.letters().iter().map(|&g| self.total_degree(g)).sum()
    }

    pub fn word_multidegree(&self, w: &Word) -> Multidegree {
        let mut acc = vec![0; self.rank];
        for &g in w.letters() {
            for (a, b) in acc.iter_mut().zip(self.multidegree(g)) {
                *a += b;
            }
        }
        acc
    }
}

/// A monomial of the free algebra: a sequence of generator indices. The
/// empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn single(g: u32) -> Word {
        Word(vec![g])
    }

    pub fn from_letters(letters: Vec<u32>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Leftmost occurrence of `factor` as a contiguous subword.
    pub fn find_factor(&self, factor: &Word) -> Option<usize> {
        if factor.len() > self.len() {
            return None;
        }
        (0..=self.len() - factor.len()).find(|&i| self.0[i..i + factor.len()] == factor.0)
    }

    pub fn render(&self, table: &GeneratorTable) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.len() {
            let g = self.0[i];
            let mut run = 1;
            while i + run < self.len() && self.0[i + run] == g {
                run += 1;
            }
            if run == 1 {
                parts.push(table.name(g).to_string());
            } else {
                parts.push(format!("{}^{}", table.name(g), run));
            }
            i += run;
        }
        parts.join("*")
    }
}

/// Deglex: total degree first, then left-lexicographic by generator index.
/// Compatible with concatenation on words of equal degree.
pub fn deglex_compare(table: &GeneratorTable, u: &Word, v: &Word) -> Ordering {
    table
        .word_total_degree(u)
        .cmp(&table.word_total_degree(v))
        .then_with(|| u.letters().cmp(v.letters()))
}

/// Homogeneity status of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(Multidegree),
    Mixed,
}

/// A noncommutative polynomial: finitely many words with nonzero exact
/// coefficients, stored deglex-descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPolynomial {
    table: Arc<GeneratorTable>,
    field: FieldSpec,
    terms: Vec<(Word, Scalar)>,
}

impl NcPolynomial {
    pub fn zero(table: &Arc<GeneratorTable>, field: &FieldSpec) -> NcPolynomial {
        NcPolynomial {
            table: Arc::clone(table),
            field: field.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(table: &Arc<GeneratorTable>, field: &FieldSpec) -> NcPolynomial {
        NcPolynomial::monomial(table, Word::empty(), Scalar::one(field))
    }

    pub fn generator(table: &Arc<GeneratorTable>, field: &FieldSpec, g: u32) -> NcPolynomial {
        NcPolynomial::monomial(table, Word::single(g), Scalar::one(field))
    }

    pub fn monomial(table: &Arc<GeneratorTable>, word: Word, coeff: Scalar) -> NcPolynomial {
        let field = coeff.field();
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![(word, coeff)]
        };
        NcPolynomial {
            table: Arc::clone(table),
            field,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (word, coefficient) pairs,
    /// collecting duplicates and dropping zeros.
    pub fn from_terms(
        table: &Arc<GeneratorTable>,
        field: &FieldSpec,
        pairs: Vec<(Word, Scalar)>,
    ) -> Result<NcPolynomial> {
        let mut poly = NcPolynomial::zero(table, field);
        for (w, c) in pairs {
            if c.field() != *field {
                return Err(Error::FieldMismatch(c.field(), field.clone()));
            }
            poly.accumulate(w, c)?;
        }
        Ok(poly)
    }

    fn accumulate(&mut self, word: Word, coeff: Scalar) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        // Terms are deglex-descending; binary search by the ascending key.
        let table = Arc::clone(&self.table);
        let pos = self
            .terms
            .binary_search_by(|(w, _)| deglex_compare(&table, &word, w));
        match pos {
            Ok(i) => {
                let merged = self.terms[i].1.add(&coeff)?;
                if merged.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = merged;
                }
            }
            Err(i) => {
                self.terms.insert(i, (word, coeff));
            }
        }
        Ok(())
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn terms(&self) -> &[(Word, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading (deglex-greatest) term.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.first().map(|(w, c)| (w, c))
    }

    pub fn coefficient(&self, word: &Word) -> Option<&Scalar> {
        self.terms.iter().find(|(w, _)| w == word).map(|(_, c)| c)
    }

    fn check_compatible(&self, other: &NcPolynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.clone(), other.field.clone()));
        }
        if !Arc::ptr_eq(&self.table, &other.table) && *self.table != *other.table {
            return Err(Error::GeneratorMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &NcPolynomial) -> Result<NcPolynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcPolynomial) -> Result<NcPolynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NcPolynomial {
        NcPolynomial {
            table: Arc::clone(&self.table),
            field: self.field.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<NcPolynomial> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(c.field(), self.field.clone()));
        }
        if c.is_zero() {
            return Ok(NcPolynomial::zero(&self.table, &self.field));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (w, v) in &self.terms {
            terms.push((w.clone(), v.mul(c)?));
        }
        Ok(NcPolynomial {
            table: Arc::clone(&self.table),
            field: self.field.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &NcPolynomial) -> Result<NcPolynomial> {
        self.check_compatible(other)?;
        let mut out = NcPolynomial::zero(&self.table, &self.field);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.accumulate(wa.concat(wb), ca.mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<NcPolynomial> {
        let mut acc = NcPolynomial::one(&self.table, &self.field);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let Some((first, _)) = self.terms.first() else {
            return Homogeneity::Zero;
        };
        let deg = self.table.word_multidegree(first);
        for (w, _) in &self.terms[1..] {
            if self.table.word_multidegree(w) != deg {
                return Homogeneity::Mixed;
            }
        }
        Homogeneity::Homogeneous(deg)
    }

    pub fn max_total_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(w, _)| self.table.word_total_degree(w))
            .max()
            .unwrap_or(0)
    }

    /// Rescales so the leading coefficient is 1.
    pub fn monic(&self) -> Result<NcPolynomial> {
        match self.leading() {
            None => Ok(self.clone()),
            Some((_, c)) => self.scale(&c.inv()?),
        }
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let coeff_str = c.render();
            let (neg, mag) = match coeff_str.strip_prefix('-') {
                // A bare leading minus only comes from a negative rational;
                // cyclotomic sums keep their own internal signs.
                Some(rest) if !coeff_str.contains(' ') => (true, rest.to_string()),
                _ => (false, coeff_str),
            };
            let needs_parens = mag.contains(' ');
            let body = if w.is_empty() {
                if needs_parens {
                    format!("({mag})")
                } else {
                    mag
                }
            } else if mag == "1" {
                w.render(&self.table)
            } else if needs_parens {
                format!("({})*{}", mag, w.render(&self.table))
            } else {
                format!("{}*{}", mag, w.render(&self.table))
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
                out.push_str(&body);
            } else if neg {
                out.push_str(" - ");
                out.push_str(&body);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
        out
    }
}

impl fmt::Display for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Checks that a generator-space matrix only mixes generators of equal
/// multidegree (so it preserves the Z^w grading).
pub fn check_degree_preserving(table: &GeneratorTable, m: &Matrix) -> Result<()> {
    let n = table.len();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(m.rows(), m.cols(), n, n));
    }
    for i in 0..n {
        for j in 0..n {
            if !m.get(i, j).is_zero() && table.multidegree(i as u32) != table.multidegree(j as u32)
            {
                return Err(Error::DegreeNotPreserved(
                    table.name(j as u32).to_string(),
                    table.name(i as u32).to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// Image of a single generator under a generator-space matrix, as a linear
/// polynomial. Column j of the matrix is the image of generator j.
pub fn generator_image(
    table: &Arc<GeneratorTable>,
    field: &FieldSpec,
    m: &Matrix,
    g: u32,
) -> Result<NcPolynomial> {
    let mut pairs = Vec::new();
    for i in 0..m.rows() {
        let c = m.get(i, g as usize);
        if !c.is_zero() {
            pairs.push((Word::single(i as u32), c.clone()));
        }
    }
    NcPolynomial::from_terms(table, field, pairs)
}

/// Applies a word-dependent slot action: for each term's word, `slot_map`
/// supplies the linear action for every slot, and the word is replaced by
/// the expanded product of slot images. Each supplied matrix must be
/// degree-preserving.
pub fn apply_per_slot<F>(f: &NcPolynomial, slot_map: F) -> Result<NcPolynomial>
where
    F: Fn(&Word, usize) -> Matrix,
{
    let table = f.table();
    let field = f.field();
    let mut out = NcPolynomial::zero(table, field);
    for (word, coeff) in f.terms() {
        let mut expanded = NcPolynomial::monomial(table, Word::empty(), coeff.clone());
        for (slot, &g) in word.letters().iter().enumerate() {
            let m = slot_map(word, slot);
            check_degree_preserving(table, &m)?;
            let image = generator_image(table, field, &m, g)?;
            expanded = expanded.mul(&image)?;
        }
        out = out.add(&expanded)?;
    }
    Ok(out)
}

/// Applies one degree-preserving linear action in every slot; for a valid
/// automorphism matrix this is the induced algebra endomorphism.
pub fn apply_all_slots(m: &Matrix, f: &NcPolynomial) -> Result<NcPolynomial> {
    check_degree_preserving(f.table(), m)?;
    apply_per_slot(f, |_, _| m.clone())
}

/// Applies a fixed per-slot list of actions; every word of `f` must have
/// exactly that many letters.
pub fn apply_fixed_slots(maps: &[Matrix], f: &NcPolynomial) -> Result<NcPolynomial> {
    for (w, _) in f.terms() {
        if w.len() != maps.len() {
            return Err(Error::DegreeMismatch(format!(
                "word {} has {} slots, {} actions supplied",
                w.render(f.table()),
                w.len(),
                maps.len()
            )));
        }
    }
    apply_per_slot(f, |_, slot| maps[slot].clone())
}
