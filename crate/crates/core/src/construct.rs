//! Builders that produce new graded algebras from old ones (graded twists,
//! Ore extensions, tensor products, quotients by normal elements, smash
//! products with finite automorphism groups), together with the
//! inner-automorphism witness search on the smash product.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{GradedAlgebra, GradedAutomorphism};
use crate::error::{Error, Result};
use crate::free::{apply_per_slot, GeneratorTable, Multidegree, NcPolynomial, Word};
use crate::matrix::Matrix;
use crate::rng::SplitMix;
use crate::scalar::{root_of_unity_solve, FieldSpec, Scalar};

/// Left graded twist by a commuting family sigma_1..sigma_w of validated
/// automorphisms (one per grading slot). The twisted algebra has the same
/// generators; each relation is transported by the slot map sending slot j
/// to sigma^-(sum of the multidegrees of the letters to its right), the
/// inverse of the expansion of the twisted product.
pub fn graded_twist(
    a: &GradedAlgebra,
    family: &[GradedAutomorphism],
) -> Result<GradedAlgebra> {
    let rank = a.table().rank();
    if family.len() != rank {
        return Err(Error::DimensionMismatch(family.len(), 1, rank, 1));
    }
    for f in family {
        if f.algebra() != a {
            return Err(Error::AlgebraMismatch);
        }
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if !family[i].commutes_with(&family[j])? {
                return Err(Error::NonCommutingFamily(i, j));
            }
        }
    }

    // sigma^v for a multidegree vector v.
    let family_power = |v: &Multidegree| -> Result<Matrix> {
        let mut m = Matrix::identity(a.table().len(), a.field());
        for (s, e) in v.iter().enumerate() {
            if *e != 0 {
                m = m.mul(&family[s].matrix().pow(*e)?)?;
            }
        }
        Ok(m)
    };

    let table = a.table();
    let mut twisted = Vec::new();
    for r in a.relations() {
        let image = apply_per_slot(r, |word, slot| {
            let mut suffix = vec![0i64; rank];
            for &g in &word.letters()[slot + 1..] {
                for (acc, d) in suffix.iter_mut().zip(table.multidegree(g)) {
                    *acc += d;
                }
            }
            let neg: Multidegree = suffix.iter().map(|x| -x).collect();
            family_power(&neg).expect("validated family powers")
        })?;
        twisted.push(image);
    }
    GradedAlgebra::new(
        Arc::clone(table),
        a.field().clone(),
        twisted,
        a.complete_to(),
    )
}

/// Ore extension A[t; phi] with the convention t * a = phi(a) * t. The
/// grading is extended by one slot, with t of multidegree (0,...,0, d); for
/// d = 1 the extension of a quadratic algebra stays quadratic.
pub fn ore_extension(
    a: &GradedAlgebra,
    phi: &GradedAutomorphism,
    t_degree: i64,
) -> Result<GradedAlgebra> {
    if phi.algebra() != a {
        return Err(Error::AlgebraMismatch);
    }
    if t_degree < 1 {
        return Err(Error::ZeroDegreeGenerator("t".into()));
    }
    let table = a.table();
    let rank = table.rank();
    let mut names: Vec<String> = table.names().to_vec();
    let t_name = fresh_name("t", &names);
    names.push(t_name);
    let mut degrees: Vec<Multidegree> = (0..table.len() as u32)
        .map(|g| {
            let mut d = table.multidegree(g).clone();
            d.push(0);
            d
        })
        .collect();
    let mut t_deg = vec![0i64; rank];
    t_deg.push(t_degree);
    degrees.push(t_deg);
    let ext_table = GeneratorTable::new(names, degrees, rank + 1)?;

    let field = a.field();
    let lift = |p: &NcPolynomial| -> Result<NcPolynomial> {
        let terms = p
            .terms()
            .iter()
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        NcPolynomial::from_terms(&ext_table, field, terms)
    };

    let mut relations: Vec<NcPolynomial> = a
        .relations()
        .iter()
        .map(&lift)
        .collect::<Result<_>>()?;
    let t_index = table.len() as u32;
    let t = NcPolynomial::generator(&ext_table, field, t_index);
    for g in 0..table.len() as u32 {
        let x = NcPolynomial::generator(&ext_table, field, g);
        let phi_x = lift(&crate::free::generator_image(
            a.table(),
            field,
            phi.matrix(),
            g,
        )?)?;
        relations.push(t.mul(&x)?.sub(&phi_x.mul(&t)?)?);
    }
    GradedAlgebra::new(ext_table, field.clone(), relations, a.complete_to())
}

fn fresh_name(base: &str, taken: &[String]) -> String {
    if !taken.iter().any(|n| n == base) {
        return base.to_string();
    }
    let mut k = 0;
    loop {
        let candidate = format!("{base}{k}");
        if !taken.iter().any(|n| n == &candidate) {
            return candidate;
        }
        k += 1;
    }
}

/// Tensor product A (x) B: disjoint generators, union of relations, plus
/// commutators between the two sides; the grading is the concatenation
/// into Z^(w_A + w_B).
pub fn tensor_product(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().clone(), b.field().clone()));
    }
    let (ta, tb) = (a.table(), b.table());
    let mut names: Vec<String> = ta.names().to_vec();
    for n in tb.names() {
        if names.contains(n) {
            return Err(Error::DuplicateGenerator(n.clone()));
        }
        names.push(n.clone());
    }
    let rank = ta.rank() + tb.rank();
    let mut degrees: Vec<Multidegree> = Vec::new();
    for g in 0..ta.len() as u32 {
        let mut d = ta.multidegree(g).clone();
        d.extend(std::iter::repeat_n(0, tb.rank()));
        degrees.push(d);
    }
    for g in 0..tb.len() as u32 {
        let mut d = vec![0i64; ta.rank()];
        d.extend_from_slice(tb.multidegree(g));
        degrees.push(d);
    }
    let table = GeneratorTable::new(names, degrees, rank)?;
    let field = a.field();

    let lift_a = |p: &NcPolynomial| -> Result<NcPolynomial> {
        let terms = p.terms().iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        NcPolynomial::from_terms(&table, field, terms)
    };
    let offset = ta.len() as u32;
    let lift_b = |p: &NcPolynomial| -> Result<NcPolynomial> {
        let terms = p
            .terms()
            .iter()
            .map(|(w, c)| {
                let letters = w.letters().iter().map(|&g| g + offset).collect();
                (Word::from_letters(letters), c.clone())
            })
            .collect();
        NcPolynomial::from_terms(&table, field, terms)
    };

    let mut relations: Vec<NcPolynomial> = Vec::new();
    for r in a.relations() {
        relations.push(lift_a(r)?);
    }
    for r in b.relations() {
        relations.push(lift_b(r)?);
    }
    for i in 0..ta.len() as u32 {
        for j in 0..tb.len() as u32 {
            let x = NcPolynomial::generator(&table, field, i);
            let y = NcPolynomial::generator(&table, field, j + offset);
            relations.push(x.mul(&y)?.sub(&y.mul(&x)?)?);
        }
    }
    let bound = a.complete_to().min(b.complete_to());
    GradedAlgebra::new(table, field.clone(), relations, bound)
}

/// Block-diagonal automorphism sigma (x) tau of a tensor product built by
/// [`tensor_product`].
pub fn tensor_automorphism(
    product: &GradedAlgebra,
    sigma: &GradedAutomorphism,
    tau: &GradedAutomorphism,
) -> Result<GradedAutomorphism> {
    let na = sigma.algebra().table().len();
    let nb = tau.algebra().table().len();
    let field = product.field();
    let mut m = Matrix::new(na + nb, na + nb, field);
    for i in 0..na {
        for j in 0..na {
            m.set(i, j, sigma.matrix().get(i, j).clone());
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            m.set(na + i, na + j, tau.matrix().get(i, j).clone());
        }
    }
    product.check_automorphism(m)
}

/// The witness that z is a normal element: the automorphism tau with
/// z * a = tau(a) * z, fixing z.
#[derive(Debug, Clone)]
pub struct NormalityWitness {
    pub tau: GradedAutomorphism,
    pub z_normal_form: NcPolynomial,
}

/// Solves z * x_i = tau(x_i) * z for a linear degree-preserving tau, then
/// validates tau as an automorphism with tau(z) = z. NotNormal names the
/// first generator with no solution; a non-unique solution (possible only
/// when z is a zero divisor within the bound) is reported as ambiguous.
pub fn normality_witness(a: &GradedAlgebra, z: &NcPolynomial) -> Result<NormalityWitness> {
    let z_nf = a.rewrite().normal_form(z)?;
    if z_nf.is_zero() {
        return Err(Error::ZeroInput);
    }
    let z_deg = z_nf.max_total_degree();
    let table = a.table();
    let field = a.field();
    let n = table.len();
    let mut m = Matrix::new(n, n, field);

    for i in 0..n as u32 {
        let xi = NcPolynomial::generator(table, field, i);
        let needed = z_deg + table.total_degree(i);
        if needed > a.complete_to() {
            return Err(Error::DegreeBoundExceeded {
                needed,
                complete_to: a.complete_to(),
            });
        }
        let target = a.rewrite().normal_form(&z_nf.mul(&xi)?)?;
        // Columns: candidate generators x_j of the same multidegree, via
        // nf(x_j * z); rows: the monomial basis in that degree.
        let candidates: Vec<u32> = (0..n as u32)
            .filter(|&j| table.multidegree(j) == table.multidegree(i))
            .collect();
        let basis = a.rewrite().monomial_basis_total(needed)?;
        let mut rows = vec![vec![Scalar::zero(field); candidates.len()]; basis.len()];
        for (c, &j) in candidates.iter().enumerate() {
            let xj = NcPolynomial::generator(table, field, j);
            let prod = a.rewrite().normal_form(&xj.mul(&z_nf)?)?;
            for (w, coeff) in prod.terms() {
                let r = basis.iter().position(|b| b == w).expect("normal word");
                rows[r][c] = coeff.clone();
            }
        }
        let mut rhs = vec![Scalar::zero(field); basis.len()];
        for (w, coeff) in target.terms() {
            let r = basis.iter().position(|b| b == w).expect("normal word");
            rhs[r] = coeff.clone();
        }
        let system = Matrix::from_rows(rows, field)?;
        let solution = system.solve(&rhs)?.ok_or(Error::NotNormal {
            generator: table.name(i).to_string(),
        })?;
        if system.rank()? != candidates.len() {
            return Err(Error::AmbiguousWitness {
                generator: table.name(i).to_string(),
            });
        }
        for (c, &j) in candidates.iter().enumerate() {
            m.set(j as usize, i as usize, solution[c].clone());
        }
    }

    let tau = a
        .check_automorphism(m)
        .map_err(|e| Error::AutomorphismValidationFailed(e.to_string()))?;
    // tau(z) = z.
    let tz = a.rewrite().normal_form(&tau.apply(&z_nf)?)?;
    if tz != z_nf {
        return Err(Error::NotNormal {
            generator: "tau does not fix z".to_string(),
        });
    }
    Ok(NormalityWitness {
        tau,
        z_normal_form: z_nf,
    })
}

/// Eigenvalue of z under sigma when z is an eigenvector: sigma(z) = c * z.
pub fn eigenvalue_on(
    a: &GradedAlgebra,
    sigma: &GradedAutomorphism,
    z: &NcPolynomial,
) -> Result<Option<Scalar>> {
    let z_nf = a.rewrite().normal_form(z)?;
    if z_nf.is_zero() {
        return Err(Error::ZeroInput);
    }
    let image = a.rewrite().normal_form(&sigma.apply(&z_nf)?)?;
    let (lead_word, lead_coeff) = z_nf.leading().expect("nonzero");
    let Some(c_lead) = image.coefficient(lead_word) else {
        return Ok(None);
    };
    let c = c_lead.div(lead_coeff)?;
    if image == z_nf.scale(&c)? {
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

/// Quotient A/(z): the same generators with z adjoined to the relations.
/// When z is a scalar multiple of a single generator, that generator is
/// eliminated instead, so the quotient presentation stays usable by the
/// quadratic machinery.
pub fn quotient_by_normal(a: &GradedAlgebra, z: &NcPolynomial) -> Result<GradedAlgebra> {
    let z_nf = a.rewrite().normal_form(z)?;
    if z_nf.is_zero() {
        return Err(Error::ZeroInput);
    }
    if let Some(g) = single_generator_of(&z_nf) {
        return eliminate_generator(a, g);
    }
    let mut relations = a.relations().to_vec();
    relations.push(z_nf);
    GradedAlgebra::new(
        Arc::clone(a.table()),
        a.field().clone(),
        relations,
        a.complete_to(),
    )
}

fn single_generator_of(z: &NcPolynomial) -> Option<u32> {
    match z.terms() {
        [(w, _)] if w.len() == 1 => Some(w.letters()[0]),
        _ => None,
    }
}

/// Presentation of A with one generator set to zero: the generator is
/// dropped and relations are rewritten with it erased.
fn eliminate_generator(a: &GradedAlgebra, g: u32) -> Result<GradedAlgebra> {
    let table = a.table();
    let names: Vec<String> = table
        .names()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != g as usize)
        .map(|(_, n)| n.clone())
        .collect();
    let degrees: Vec<Multidegree> = (0..table.len() as u32)
        .filter(|&i| i != g)
        .map(|i| table.multidegree(i).clone())
        .collect();
    let new_table = GeneratorTable::new(names, degrees, table.rank())?;
    let remap = |old: u32| -> Option<u32> {
        match old.cmp(&g) {
            std::cmp::Ordering::Less => Some(old),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(old - 1),
        }
    };
    let field = a.field();
    let mut relations = Vec::new();
    for r in a.relations() {
        let mut terms = Vec::new();
        for (w, c) in r.terms() {
            let letters: Option<Vec<u32>> = w.letters().iter().map(|&l| remap(l)).collect();
            if let Some(letters) = letters {
                terms.push((Word::from_letters(letters), c.clone()));
            }
        }
        let poly = NcPolynomial::from_terms(&new_table, field, terms)?;
        if !poly.is_zero() {
            relations.push(poly);
        }
    }
    GradedAlgebra::new(new_table, field.clone(), relations, a.complete_to())
}

/// Restricts an automorphism matrix of A to the quotient produced by
/// [`quotient_by_normal`]. With a generator eliminated the row/column is
/// dropped; otherwise the matrix is reused as-is. The result is validated
/// against the quotient's relations.
pub fn restrict_to_quotient(
    quotient: &GradedAlgebra,
    source: &GradedAlgebra,
    m: &Matrix,
) -> Result<GradedAutomorphism> {
    let sn = source.table().len();
    let qn = quotient.table().len();
    if qn == sn {
        return quotient.check_automorphism(m.clone());
    }
    // Identify the eliminated generator by name.
    let kept: Vec<usize> = source
        .table()
        .names()
        .iter()
        .enumerate()
        .filter(|(_, n)| quotient.table().index_of(n).is_some())
        .map(|(i, _)| i)
        .collect();
    let mut out = Matrix::new(qn, qn, quotient.field());
    for (r, &i) in kept.iter().enumerate() {
        for (c, &j) in kept.iter().enumerate() {
            out.set(r, c, m.get(i, j).clone());
        }
    }
    quotient.check_automorphism(out)
}

/// Candidate Nakayama automorphism of A/(z): (mu_A compose tau) restricted
/// to the surviving generators. The source-level precondition that z is a
/// mu_A-eigenvector is checked here.
pub fn nakayama_of_quotient(
    a: &GradedAlgebra,
    quotient: &GradedAlgebra,
    mu: &GradedAutomorphism,
    witness: &NormalityWitness,
) -> Result<GradedAutomorphism> {
    if eigenvalue_on(a, mu, &witness.z_normal_form)?.is_none() {
        return Err(Error::NotEigenvector);
    }
    let composed = mu.matrix().mul(witness.tau.matrix())?;
    restrict_to_quotient(quotient, a, &composed)
}

/// Re-presents an algebra by the degree-two part of its rewriting system
/// when the higher-degree relations are redundant, verified by comparing
/// Hilbert prefixes to the completion bound. Used for quotients like the
/// cubic down-up presentation of a commutative plane.
pub fn quadratic_presentation(a: &GradedAlgebra) -> Result<Option<GradedAlgebra>> {
    let quadratic: Vec<NcPolynomial> = a
        .rewrite()
        .rules()
        .iter()
        .filter(|r| r.max_total_degree() <= 2)
        .cloned()
        .collect();
    if quadratic.len() == a.relations().len()
        && a.relations().iter().all(|r| r.max_total_degree() <= 2)
    {
        return Ok(Some(a.clone()));
    }
    let candidate = GradedAlgebra::new(
        Arc::clone(a.table()),
        a.field().clone(),
        quadratic,
        a.complete_to(),
    )?;
    if candidate.hilbert_prefix() == a.hilbert_prefix() {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

/// The smash product A # kG for a finite group G of validated graded
/// automorphisms: basis pairs (normal word of A, g) with multiplication
/// (a # g)(b # h) = a * g(b) # gh.
#[derive(Debug, Clone)]
pub struct SmashAlgebra {
    base: GradedAlgebra,
    elements: Vec<GradedAutomorphism>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

pub const DEFAULT_GROUP_CAP: usize = 64;

impl SmashAlgebra {
    pub fn base(&self) -> &GradedAlgebra {
        &self.base
    }

    pub fn group(&self) -> &[GradedAutomorphism] {
        &self.elements
    }

    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn group_mul(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn group_inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn index_of(&self, g: &GradedAutomorphism) -> Option<usize> {
        self.elements.iter().position(|e| e.matrix() == g.matrix())
    }

    /// Embeds a # g for a base element a.
    pub fn embed(&self, a: &NcPolynomial, g: usize) -> Result<SmashElement> {
        let nf = self.base.rewrite().normal_form(a)?;
        let mut terms = BTreeMap::new();
        for (w, c) in nf.terms() {
            terms.insert((w.clone(), g), c.clone());
        }
        Ok(SmashElement { terms })
    }

    pub fn one(&self) -> SmashElement {
        let mut terms = BTreeMap::new();
        terms.insert(
            (Word::empty(), self.identity),
            Scalar::one(self.base.field()),
        );
        SmashElement { terms }
    }

    pub fn mul(&self, lhs: &SmashElement, rhs: &SmashElement) -> Result<SmashElement> {
        let field = self.base.field();
        let table = self.base.table();
        let mut out: BTreeMap<(Word, usize), Scalar> = BTreeMap::new();
        for ((wa, g), ca) in &lhs.terms {
            for ((wb, h), cb) in &rhs.terms {
                // a * g(b) # gh
                let b_poly = NcPolynomial::monomial(table, wb.clone(), cb.clone());
                let gb = self.elements[*g].apply(&b_poly)?;
                let a_poly = NcPolynomial::monomial(table, wa.clone(), ca.clone());
                let prod = self.base.rewrite().normal_form(&a_poly.mul(&gb)?)?;
                let gh = self.mult[*g][*h];
                for (w, c) in prod.terms() {
                    let entry = out
                        .entry((w.clone(), gh))
                        .or_insert_with(|| Scalar::zero(field));
                    *entry = entry.add(c)?;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(SmashElement { terms: out })
    }

    /// Basis of the total-degree-n piece: (normal word, group element).
    pub fn basis(&self, degree: i64) -> Result<Vec<(Word, usize)>> {
        let words = self.base.rewrite().monomial_basis_total(degree)?;
        let mut out = Vec::new();
        for w in words {
            for g in 0..self.elements.len() {
                out.push((w.clone(), g));
            }
        }
        Ok(out)
    }

    pub fn render_element(&self, e: &SmashElement) -> String {
        if e.terms.is_empty() {
            return "0".to_string();
        }
        let table = self.base.table();
        let parts: Vec<String> = e
            .terms
            .iter()
            .map(|((w, g), c)| format!("{}*{} # g{}", c.render(), w.render(table), g))
            .collect();
        parts.join(" + ")
    }
}

/// An element of the smash product in the (normal word, group index) basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmashElement {
    pub terms: BTreeMap<(Word, usize), Scalar>,
}

impl SmashElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &SmashElement) -> Result<SmashElement> {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let field = c.field();
            let entry = terms.entry(k.clone()).or_insert_with(|| Scalar::zero(&field));
            *entry = entry.sub(c)?;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SmashElement { terms })
    }
}

/// Closes the generating automorphisms into a finite group (cap enforced),
/// builds the multiplication table, and spot-checks associativity of the
/// smash multiplication on a seeded deterministic sample of basis triples
/// per degree.
pub fn smash_product(
    a: &GradedAlgebra,
    generators: &[GradedAutomorphism],
    cap: usize,
    sample_per_degree: usize,
    seed: u64,
) -> Result<SmashAlgebra> {
    for g in generators {
        if g.algebra() != a {
            return Err(Error::AlgebraMismatch);
        }
    }
    let id = a.identity_automorphism();
    let mut elements: Vec<GradedAutomorphism> = vec![id];
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for g in generators {
            let next = g.compose(&elements[i])?;
            if !elements.iter().any(|e| e.matrix() == next.matrix()) {
                elements.push(next);
                frontier.push(elements.len() - 1);
                if elements.len() > cap {
                    return Err(Error::GroupClosureExceeded(cap));
                }
            }
        }
    }
    // Close under inverses as well (finite closure under products of
    // generators needs them when a generator has infinite order; with the
    // cap in place this simply fails fast).
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..elements.len() {
            let inv = elements[i].inverse()?;
            if !elements.iter().any(|e| e.matrix() == inv.matrix()) {
                elements.push(inv);
                changed = true;
                if elements.len() > cap {
                    return Err(Error::GroupClosureExceeded(cap));
                }
            }
        }
        for i in 0..elements.len() {
            for j in 0..elements.len() {
                let prod = elements[i].compose(&elements[j])?;
                if !elements.iter().any(|e| e.matrix() == prod.matrix()) {
                    elements.push(prod);
                    changed = true;
                    if elements.len() > cap {
                        return Err(Error::GroupClosureExceeded(cap));
                    }
                }
            }
        }
    }

    let n = elements.len();
    let mut mult = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = elements[i].compose(&elements[j])?;
            mult[i][j] = elements
                .iter()
                .position(|e| e.matrix() == prod.matrix())
                .expect("closed under products");
        }
    }
    let identity = elements
        .iter()
        .position(|e| e.is_identity())
        .expect("identity in closure");
    let mut inverse = vec![0usize; n];
    for i in 0..n {
        inverse[i] = (0..n)
            .find(|&j| mult[i][j] == identity && mult[j][i] == identity)
            .expect("closed under inverses");
    }

    let smash = SmashAlgebra {
        base: a.clone(),
        elements,
        mult,
        inverse,
        identity,
    };

    // Associativity spot-check on sampled basis triples.
    let mut rng = SplitMix::new(seed);
    let max_deg = a.complete_to() / 3;
    for d in 0..=max_deg {
        let basis = smash.basis(d)?;
        if basis.is_empty() {
            continue;
        }
        for _ in 0..sample_per_degree {
            let pick = |rng: &mut SplitMix| basis[(rng.next_u64() % basis.len() as u64) as usize].clone();
            let (wa, ga) = pick(&mut rng);
            let (wb, gb) = pick(&mut rng);
            let (wc, gc) = pick(&mut rng);
            let ea = smash.embed(
                &NcPolynomial::monomial(a.table(), wa, Scalar::one(a.field())),
                ga,
            )?;
            let eb = smash.embed(
                &NcPolynomial::monomial(a.table(), wb, Scalar::one(a.field())),
                gb,
            )?;
            let ec = smash.embed(
                &NcPolynomial::monomial(a.table(), wc, Scalar::one(a.field())),
                gc,
            )?;
            let lhs = smash.mul(&smash.mul(&ea, &eb)?, &ec)?;
            let rhs = smash.mul(&ea, &smash.mul(&eb, &ec)?)?;
            if lhs != rhs {
                return Err(Error::NotMultiplicative(
                    smash.render_element(&ea),
                    smash.render_element(&eb),
                ));
            }
        }
    }
    Ok(smash)
}

/// A candidate automorphism of the smash product of the shape
/// (a # g) -> mu(a) # chi(g) * perm(g).
#[derive(Debug, Clone)]
pub struct SmashAutomorphismCandidate {
    pub base_matrix: Matrix,
    pub group_scalar: Vec<Scalar>,
    pub group_perm: Vec<usize>,
}

impl SmashAutomorphismCandidate {
    pub fn apply(&self, smash: &SmashAlgebra, e: &SmashElement) -> Result<SmashElement> {
        let table = smash.base().table();
        let field = smash.base().field();
        let mut out: BTreeMap<(Word, usize), Scalar> = BTreeMap::new();
        for ((w, g), c) in &e.terms {
            let poly = NcPolynomial::monomial(table, w.clone(), c.clone());
            let image = smash
                .base()
                .rewrite()
                .normal_form(&crate::free::apply_all_slots(&self.base_matrix, &poly)?)?;
            let scaled = image.scale(&self.group_scalar[*g])?;
            let target_g = self.group_perm[*g];
            for (wi, ci) in scaled.terms() {
                let entry = out
                    .entry((wi.clone(), target_g))
                    .or_insert_with(|| Scalar::zero(field));
                *entry = entry.add(ci)?;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(SmashElement { terms: out })
    }
}

/// Builds the candidate rho(a # g) = mu(a) # hdet(g) * g (the winding part
/// acts by the homological determinant character, the group part is fixed)
/// and verifies multiplicativity on all pairs drawn from the generators
/// {x_i # 1} and {1 # g}, in both orders, plus a seeded sample of basis
/// pairs. Failure reports the violating pair; it is the computable detector
/// for mu failing to commute with the group action.
pub fn hi1_candidate(
    smash: &SmashAlgebra,
    mu: &GradedAutomorphism,
    hdet_values: &[Scalar],
    sample_pairs: usize,
    seed: u64,
) -> Result<SmashAutomorphismCandidate> {
    if mu.algebra() != smash.base() {
        return Err(Error::AlgebraMismatch);
    }
    if hdet_values.len() != smash.group_order() {
        return Err(Error::DimensionMismatch(hdet_values.len(), 1, smash.group_order(), 1));
    }
    // hdet must be multiplicative on the group.
    for g in 0..smash.group_order() {
        for h in 0..smash.group_order() {
            let prod = hdet_values[g].mul(&hdet_values[h])?;
            if prod != hdet_values[smash.group_mul(g, h)] {
                return Err(Error::NotMultiplicative(
                    format!("hdet(g{g})"),
                    format!("hdet(g{h})"),
                ));
            }
        }
    }
    let candidate = SmashAutomorphismCandidate {
        base_matrix: mu.matrix().clone(),
        group_scalar: hdet_values.to_vec(),
        group_perm: (0..smash.group_order()).collect(),
    };

    let a = smash.base();
    let mut probes: Vec<SmashElement> = Vec::new();
    for i in 0..a.table().len() as u32 {
        let x = NcPolynomial::generator(a.table(), a.field(), i);
        probes.push(smash.embed(&x, smash.identity_index())?);
    }
    for g in 0..smash.group_order() {
        let one = NcPolynomial::one(a.table(), a.field());
        probes.push(smash.embed(&one, g)?);
    }
    let check_pair = |p: &SmashElement, q: &SmashElement| -> Result<()> {
        let lhs = candidate.apply(smash, &smash.mul(p, q)?)?;
        let rhs = smash.mul(&candidate.apply(smash, p)?, &candidate.apply(smash, q)?)?;
        if lhs != rhs {
            return Err(Error::NotMultiplicative(
                smash.render_element(p),
                smash.render_element(q),
            ));
        }
        Ok(())
    };
    for p in &probes {
        for q in &probes {
            check_pair(p, q)?;
        }
    }
    // Seeded sample of basis pairs across degrees.
    let mut rng = SplitMix::new(seed);
    let max_deg = a.complete_to() / 2;
    for d in 1..=max_deg {
        let basis = smash.basis(d)?;
        if basis.is_empty() {
            continue;
        }
        for _ in 0..sample_pairs {
            let pick = |rng: &mut SplitMix| basis[(rng.next_u64() % basis.len() as u64) as usize].clone();
            let (wa, ga) = pick(&mut rng);
            let (wb, gb) = pick(&mut rng);
            let p = smash.embed(
                &NcPolynomial::monomial(a.table(), wa, Scalar::one(a.field())),
                ga,
            )?;
            let q = smash.embed(
                &NcPolynomial::monomial(a.table(), wb, Scalar::one(a.field())),
                gb,
            )?;
            check_pair(&p, &q)?;
        }
    }
    Ok(candidate)
}

/// Searches for a degree-zero unit u in B_0 = kG with rho(b) * u = u * b
/// for b over the generating set; by multiplicativity of rho the identity
/// then extends to the whole algebra. None means no degree-zero witness
/// exists; higher-degree units are not searched (graded connected algebras
/// have none except in degree zero).
pub fn inner_witness(
    smash: &SmashAlgebra,
    rho: &SmashAutomorphismCandidate,
) -> Result<Option<SmashElement>> {
    let a = smash.base();
    let field = a.field();
    let n = smash.group_order();

    // Unknowns: coefficients c_g of u = sum c_g (1 # g). Build the linear
    // system from rho(b) u - u b = 0.
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut basis_units: Vec<SmashElement> = Vec::new();
    for g in 0..n {
        basis_units.push(smash.embed(&NcPolynomial::one(a.table(), field), g)?);
    }
    let mut probes: Vec<SmashElement> = Vec::new();
    for i in 0..a.table().len() as u32 {
        let x = NcPolynomial::generator(a.table(), field, i);
        probes.push(smash.embed(&x, smash.identity_index())?);
    }
    probes.extend(basis_units.iter().cloned());

    for b in &probes {
        let rho_b = rho.apply(smash, b)?;
        // Row block: for each unknown g, the element rho(b)(1#g) - (1#g)b.
        let columns: Vec<SmashElement> = (0..n)
            .map(|g| {
                let left = smash.mul(&rho_b, &basis_units[g])?;
                let right = smash.mul(&basis_units[g], b)?;
                left.sub(&right)
            })
            .collect::<Result<_>>()?;
        // Collect all (word, group) keys appearing in this block.
        let mut keys: Vec<(Word, usize)> = Vec::new();
        for col in &columns {
            for k in col.terms.keys() {
                if !keys.contains(k) {
                    keys.push(k.clone());
                }
            }
        }
        keys.sort();
        for k in keys {
            let row: Vec<Scalar> = columns
                .iter()
                .map(|col| col.terms.get(&k).cloned().unwrap_or_else(|| Scalar::zero(field)))
                .collect();
            rows.push(row);
        }
    }
    if rows.is_empty() {
        rows.push(vec![Scalar::zero(field); n]);
    }
    let system = Matrix::from_rows(rows, field)?;
    let nullspace = system.nullspace()?;
    if nullspace.is_empty() {
        return Ok(None);
    }

    // Search the solution space for an invertible element of kG
    // (left-multiplication matrix nonsingular). Solution spaces here are
    // tiny; small integer combinations of the basis vectors are exhaustive
    // enough up to scaling.
    let left_mult_invertible = |coeffs: &[Scalar]| -> Result<bool> {
        let mut m = Matrix::new(n, n, field);
        for (g, coeff) in coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for h in 0..n {
                let gh = smash.group_mul(g, h);
                let v = m.get(gh, h).add(coeff)?;
                m.set(gh, h, v);
            }
        }
        Ok(m.inverse().is_ok())
    };
    let dim = nullspace.len();
    let grid: i64 = (n as i64) + 1;
    let mut counters = vec![0i64; dim];
    loop {
        // Candidate = sum counters[k] * nullspace[k], skipping zero.
        if counters.iter().any(|&c| c != 0) {
            let mut coeffs = vec![Scalar::zero(field); n];
            for (k, &c) in counters.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let s = Scalar::from_integer(c, field);
                for g in 0..n {
                    coeffs[g] = coeffs[g].add(&nullspace[k][g].mul(&s)?)?;
                }
            }
            if coeffs.iter().any(|c| !c.is_zero()) && left_mult_invertible(&coeffs)? {
                let mut terms = BTreeMap::new();
                for (g, c) in coeffs.into_iter().enumerate() {
                    if !c.is_zero() {
                        terms.insert((Word::empty(), g), c);
                    }
                }
                return Ok(Some(SmashElement { terms }));
            }
        }
        // Advance the counter grid.
        let mut k = 0;
        loop {
            if k == dim {
                return Ok(None);
            }
            counters[k] += 1;
            if counters[k] < grid {
                break;
            }
            counters[k] = 0;
            k += 1;
        }
    }
}

/// Diagonal rectification: given a diagonal Nakayama automorphism whose
/// entries are roots of unity and a nonzero AS index l, finds delta with
/// delta_i^(-l) = a_i (enlarging the cyclotomic field as needed), twists by
/// the resulting diagonal automorphism, and returns (sigma, twist). The
/// twist's Nakayama automorphism is then of scalar type.
pub fn rectify_diagonal(
    a: &GradedAlgebra,
    mu: &GradedAutomorphism,
    as_index: i64,
) -> Result<(GradedAutomorphism, GradedAlgebra)> {
    if as_index == 0 {
        return Err(Error::ZeroASIndex);
    }
    if mu.algebra() != a {
        return Err(Error::AlgebraMismatch);
    }
    if !mu.matrix().is_diagonal() {
        return Err(Error::NotRepresentable("Nakayama matrix is not diagonal".into()));
    }
    if a.table().rank() != 1 {
        return Err(Error::NotRepresentable(
            "diagonal rectification is implemented for Z-graded algebras".into(),
        ));
    }
    let n = a.table().len();
    // Solve delta_i^(-l) = a_i for each eigenvalue and take the largest
    // field needed.
    let mut solved: Vec<Scalar> = Vec::new();
    let mut target_field = a.field().clone();
    for i in 0..n {
        let eigenvalue = mu.matrix().get(i, i).clone();
        let sol = root_of_unity_solve(&eigenvalue, -as_index)?;
        match (&sol.field, &target_field) {
            (FieldSpec::Cyclotomic(new_n), FieldSpec::Cyclotomic(old_n)) => {
                if old_n % new_n == 0 {
                    // already large enough
                } else {
                    let lcm = num_integer::Integer::lcm(&(*new_n as u64), &(*old_n as u64));
                    target_field = FieldSpec::Cyclotomic(lcm as u32);
                }
            }
            (FieldSpec::Cyclotomic(_), FieldSpec::Rationals) => {
                target_field = sol.field.clone();
            }
            _ => {}
        }
        solved.push(sol.value);
    }
    let enlarged = if *a.field() == target_field {
        a.clone()
    } else {
        a.embed(&target_field)?
    };
    let mut m = Matrix::new(n, n, &target_field);
    for (i, d) in solved.iter().enumerate() {
        m.set(i, i, d.embed(&target_field)?);
    }
    let sigma = enlarged
        .check_automorphism(m)
        .map_err(|e| Error::AutomorphismValidationFailed(e.to_string()))?;
    let twist = graded_twist(&enlarged, std::slice::from_ref(&sigma))?;
    Ok((sigma, twist))
}
