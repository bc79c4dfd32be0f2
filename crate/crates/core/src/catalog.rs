//! Built-in catalog of the bench algebras: commutative polynomial rings,
//! skew polynomial rings, the quantum and (-1)-planes, and the cubic
//! down-up algebra A(0,1,0), each with its named automorphisms and registry
//! facts. The selftest re-derives every computable registry fact and
//! consistency-checks the rest.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{GradedAlgebra, GradedAutomorphism, HdetRule, KnownData, Provenance};
use crate::construct::{
    hi1_candidate, inner_witness, normality_witness, quadratic_presentation, quotient_by_normal,
    smash_product, DEFAULT_GROUP_CAP,
};
use crate::error::{Error, Result};
use crate::free::{GeneratorTable, NcPolynomial};
use crate::koszul::{certify_koszul_as_regular, hdet_koszul, hdet_lookup, nakayama_koszul};
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::verify::hi2_rhs_matrix;

pub const DEFAULT_DEGREE_BOUND: i64 = 8;

/// A built catalog entry: the algebra plus its named automorphisms and
/// groups (lists of automorphism names generating the group).
pub struct Built {
    pub name: String,
    pub algebra: GradedAlgebra,
    pub automorphisms: BTreeMap<String, GradedAutomorphism>,
    pub groups: BTreeMap<String, Vec<String>>,
    pub facts: Vec<String>,
}

/// Descriptor for `catalog list`.
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameters: &'static str,
    pub summary: &'static str,
}

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "polynomial",
            parameters: "(n)",
            summary: "commutative polynomial ring on n degree-1 generators; hdet = det",
        },
        CatalogEntry {
            name: "skewpoly",
            parameters: "(w, p_12, p_13, ..., p_(w-1)w)",
            summary: "skew polynomial ring x_j x_i = p_ij x_i x_j for i < j",
        },
        CatalogEntry {
            name: "quantum_plane",
            parameters: "(q)",
            summary: "k_q[x, y] with y x = q x y",
        },
        CatalogEntry {
            name: "kminus1_plane",
            parameters: "",
            summary: "k_{-1}[x, y] with the swap automorphism",
        },
        CatalogEntry {
            name: "downup_010",
            parameters: "",
            summary: "cubic down-up algebra A(0,1,0) over QQ(zeta_4), registry-backed",
        },
    ]
}

fn skew_relations(
    table: &Arc<GeneratorTable>,
    field: &FieldSpec,
    params: &[Scalar],
) -> Result<Vec<NcPolynomial>> {
    let w = table.len();
    let mut rels = Vec::new();
    let mut k = 0;
    for i in 0..w as u32 {
        for j in (i + 1)..w as u32 {
            let p = &params[k];
            k += 1;
            let xi = NcPolynomial::generator(table, field, i);
            let xj = NcPolynomial::generator(table, field, j);
            rels.push(xj.mul(&xi)?.sub(&xi.mul(&xj)?.scale(p)?)?);
        }
    }
    Ok(rels)
}

pub fn polynomial(n: usize, field: &FieldSpec, bound: i64) -> Result<Built> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let table = GeneratorTable::new(names, vec![vec![1]; n], 1)?;
    let ones = vec![Scalar::one(field); n * (n - 1) / 2];
    let relations = skew_relations(&table, field, &ones)?;
    let algebra = GradedAlgebra::new(table.clone(), field.clone(), relations, bound)?
        .with_known_data(KnownData {
            nakayama: None,
            as_index: None,
            hdet_rule: Some((
                HdetRule::Determinant,
                Provenance::PaperRegistry(
                    "classical hdet rule: det on degree one, commutative polynomial rings".into(),
                ),
            )),
        });
    let mut automorphisms = BTreeMap::new();
    if n == 2 {
        let mut m = Matrix::new(2, 2, field);
        m.set(0, 1, Scalar::one(field));
        m.set(1, 0, Scalar::one(field));
        automorphisms.insert("swap".to_string(), algebra.check_automorphism(m)?);
    }
    Ok(Built {
        name: format!("polynomial({n})"),
        algebra,
        automorphisms,
        groups: BTreeMap::new(),
        facts: vec![
            "nakayama = identity (Calabi-Yau)".into(),
            format!("as_index = {n}"),
            "hdet_rule = det".into(),
        ],
    })
}

pub fn skewpoly(w: usize, params: &[Scalar], field: &FieldSpec, bound: i64) -> Result<Built> {
    if params.len() != w * (w - 1) / 2 {
        return Err(Error::MissingData(format!(
            "skewpoly({w}) needs {} parameters, got {}",
            w * (w - 1) / 2,
            params.len()
        )));
    }
    let names: Vec<String> = (1..=w).map(|i| format!("x{i}")).collect();
    let table = GeneratorTable::new(names, vec![vec![1]; w], 1)?;
    let relations = skew_relations(&table, field, params)?;
    let algebra = GradedAlgebra::new(table, field.clone(), relations, bound)?;
    Ok(Built {
        name: format!("skewpoly({w})"),
        algebra,
        automorphisms: BTreeMap::new(),
        groups: BTreeMap::new(),
        facts: vec![
            "nakayama: x_s -> (prod_(a<s) p_as * prod_(b>s) p_sb^-1) x_s".into(),
            format!("as_index = {w}"),
        ],
    })
}

pub fn quantum_plane(q: &Scalar, bound: i64) -> Result<Built> {
    let field = q.field();
    if q.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let table = GeneratorTable::standard(&["x", "y"]);
    let relations = skew_relations(&table, &field, std::slice::from_ref(q))?;
    let algebra = GradedAlgebra::new(table, field, relations, bound)?;
    Ok(Built {
        name: format!("quantum_plane({})", q.render()),
        algebra,
        automorphisms: BTreeMap::new(),
        groups: BTreeMap::new(),
        facts: vec![
            "nakayama: x -> q^-1 x, y -> q y".into(),
            "as_index = 2".into(),
        ],
    })
}

pub fn kminus1_plane(field: &FieldSpec, bound: i64) -> Result<Built> {
    let minus_one = Scalar::from_integer(-1, field);
    let mut built = quantum_plane(&minus_one, bound)?;
    built.name = "kminus1_plane".to_string();
    let mut m = Matrix::new(2, 2, field);
    m.set(0, 1, Scalar::one(field));
    m.set(1, 0, Scalar::one(field));
    built
        .automorphisms
        .insert("swap".to_string(), built.algebra.check_automorphism(m)?);
    built.facts.push("hdet(swap) = 1".into());
    Ok(built)
}

/// Down-up algebra A(0,1,0): x^2 y = y x^2, y^2 x = x y^2, over QQ(zeta_4)
/// so the order-4 diagonal automorphism is available. Non-quadratic, so the
/// Nakayama data is registry-backed; the selftest re-derives it through the
/// quotient rule.
pub fn downup_010(bound: i64) -> Result<Built> {
    let field = FieldSpec::Cyclotomic(4);
    let table = GeneratorTable::standard(&["x", "y"]);
    let x = NcPolynomial::generator(&table, &field, 0);
    let y = NcPolynomial::generator(&table, &field, 1);
    let r1 = x.pow(2)?.mul(&y)?.sub(&y.mul(&x.pow(2)?)?)?;
    let r2 = y.pow(2)?.mul(&x)?.sub(&x.mul(&y.pow(2)?)?)?;
    let algebra = GradedAlgebra::new(table.clone(), field.clone(), vec![r1, r2], bound)?;

    let minus_one = Scalar::from_integer(-1, &field);
    let parity = algebra.scalar_scaling(&minus_one)?;
    let known = KnownData {
        nakayama: Some((
            parity.matrix().clone(),
            Provenance::PaperRegistry(
                "down-up A(0,1,0) is (-1)-Nakayama; re-derived by the quotient rule in catalog selftest".into(),
            ),
        )),
        as_index: Some((
            vec![4],
            Provenance::PaperRegistry(
                "AS index 4 for cubic Artin-Schelter regular algebras of type S_1".into(),
            ),
        )),
        hdet_rule: Some((
            HdetRule::DeterminantSquared,
            Provenance::PaperRegistry(
                "classical hdet rule: square of det on degree one, graded down-up algebras".into(),
            ),
        )),
    };
    let algebra = algebra.with_known_data(known);
    let parity = algebra.scalar_scaling(&minus_one)?;
    let mut sigma_m = Matrix::identity(2, &field);
    sigma_m.set(1, 1, Scalar::zeta(4));
    let sigma = algebra.check_automorphism(sigma_m)?;

    let mut automorphisms = BTreeMap::new();
    automorphisms.insert("parity".to_string(), parity);
    automorphisms.insert("sigma".to_string(), sigma);
    let mut groups = BTreeMap::new();
    groups.insert("nakayama_group".to_string(), vec!["parity".to_string()]);
    Ok(Built {
        name: "downup_010".to_string(),
        algebra,
        automorphisms,
        groups,
        facts: vec![
            "nakayama = parity (x -> -x, y -> -y), registry".into(),
            "as_index = 4, registry".into(),
            "hdet_rule = det_squared, registry".into(),
            "hdet(sigma) = -1".into(),
        ],
    })
}

/// Builds a catalog entry by name with optional scalar parameters parsed by
/// the caller. Unknown names are reported with the available list. Every
/// entry carries an `identity` automorphism for convenience.
pub fn build(name: &str, params: &[Scalar], field: &FieldSpec, bound: i64) -> Result<Built> {
    let mut built = match name {
        "polynomial" => {
            let n = integer_param(params.first(), "polynomial(n)")?;
            polynomial(n as usize, field, bound)
        }
        "skewpoly" => {
            let w = integer_param(params.first(), "skewpoly(w, p_ij...)")?;
            skewpoly(w as usize, &params[1..], field, bound)
        }
        "quantum_plane" => {
            let q = params
                .first()
                .ok_or_else(|| Error::MissingData("quantum_plane(q) needs q".into()))?;
            quantum_plane(q, bound)
        }
        "kminus1_plane" => kminus1_plane(field, bound),
        "downup_010" => downup_010(bound),
        other => Err(Error::MissingData(format!(
            "unknown catalog entry {other}; available: {}",
            entries()
                .iter()
                .map(|e| e.name)
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }?;
    built
        .automorphisms
        .entry("identity".to_string())
        .or_insert_with(|| built.algebra.identity_automorphism());
    Ok(built)
}

fn integer_param(s: Option<&Scalar>, what: &str) -> Result<i64> {
    let Some(Scalar::Rational(r)) = s else {
        return Err(Error::MissingData(format!("{what} needs an integer parameter")));
    };
    if !num_traits::One::is_one(r.denom()) {
        return Err(Error::MissingData(format!("{what} needs an integer parameter")));
    }
    i64::try_from(r.numer().clone())
        .map_err(|_| Error::MissingData(format!("{what} parameter too large")))
}

/// One selftest outcome: check name, pass flag, detail line.
pub struct SelftestResult {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

/// Re-derives every computable registry fact and consistency-checks the
/// registry-backed ones.
pub fn selftest(seed: u64) -> Result<Vec<SelftestResult>> {
    let field = FieldSpec::Rationals;
    let bound = DEFAULT_DEGREE_BOUND;
    let mut out = Vec::new();
    let mut push = |check: &str, pass: bool, detail: String| {
        out.push(SelftestResult {
            check: check.to_string(),
            pass,
            detail,
        });
    };

    // polynomial(n): mu = id, as_index = n, hdet rule matches the dual route.
    for n in 2..=3usize {
        let built = polynomial(n, &field, bound)?;
        let cert = certify_koszul_as_regular(&built.algebra)?;
        let mu = nakayama_koszul(&cert)?;
        push(
            &format!("polynomial({n}).nakayama"),
            mu.is_identity(),
            format!("mu = {}", mu.render()),
        );
        push(
            &format!("polynomial({n}).as_index"),
            cert.as_index_total() == n as i64,
            format!("l = {}", cert.as_index_total()),
        );
        // det rule vs the dual route on a sample automorphism.
        let mut m = Matrix::identity(n, &field);
        m.set(0, 0, Scalar::from_integer(3, &field));
        if n > 1 {
            m.set(0, 1, Scalar::from_integer(1, &field));
        }
        let sigma = built.algebra.check_automorphism(m)?;
        let (lookup, _) = hdet_lookup(&built.algebra, &sigma)?;
        let dual_route = hdet_koszul(&cert, &sigma)?;
        push(
            &format!("polynomial({n}).hdet_rule"),
            lookup == dual_route,
            format!("det rule {} vs dual route {}", lookup.render(), dual_route.render()),
        );
    }

    // skewpoly(3): closed-form Nakayama formula.
    {
        let p = [
            Scalar::from_integer(2, &field),
            Scalar::from_integer(3, &field),
            Scalar::from_integer(5, &field),
        ];
        let built = skewpoly(3, &p, &field, bound)?;
        let cert = certify_koszul_as_regular(&built.algebra)?;
        let mu = nakayama_koszul(&cert)?;
        let expected = [
            p[0].inv()?.mul(&p[1].inv()?)?,
            p[0].mul(&p[2].inv()?)?,
            p[1].mul(&p[2])?,
        ];
        let ok = (0..3).all(|s| mu.matrix().get(s, s) == &expected[s]);
        push("skewpoly(3).nakayama_formula", ok, format!("mu = {}", mu.render()));
        let hdet_mu = hdet_koszul(&cert, &mu)?;
        push(
            "skewpoly(3).hdet_of_nakayama",
            hdet_mu.is_one(),
            format!("hdet(mu) = {}", hdet_mu.render()),
        );
    }

    // quantum_plane(q).
    {
        let q = Scalar::from_integer(7, &field);
        let built = quantum_plane(&q, bound)?;
        let cert = certify_koszul_as_regular(&built.algebra)?;
        let mu = nakayama_koszul(&cert)?;
        let ok = *mu.matrix().get(0, 0) == q.inv()? && *mu.matrix().get(1, 1) == q;
        push("quantum_plane.nakayama", ok, format!("mu = {}", mu.render()));
    }

    // kminus1_plane: hdet(swap) = 1 by the dual route.
    {
        let built = kminus1_plane(&field, bound)?;
        let cert = certify_koszul_as_regular(&built.algebra)?;
        let swap = &built.automorphisms["swap"];
        let h = hdet_koszul(&cert, swap)?;
        push("kminus1_plane.hdet_swap", h.is_one(), format!("hdet(swap) = {}", h.render()));
    }

    // downup_010: registry facts re-derived.
    {
        let built = downup_010(bound)?;
        let a = &built.algebra;
        let f4 = a.field().clone();
        let x = NcPolynomial::generator(a.table(), &f4, 0);
        let y = NcPolynomial::generator(a.table(), &f4, 1);
        let z = x.mul(&y)?.sub(&y.mul(&x)?)?;

        // Normality witness tau = parity.
        let witness = normality_witness(a, &z)?;
        let parity = &built.automorphisms["parity"];
        push(
            "downup_010.z_normal_with_parity_witness",
            witness.tau.matrix() == parity.matrix(),
            format!("tau = {}", witness.tau.render()),
        );

        // Quotient rule consistency: mu(quotient) = id forces
        // mu_A = tau^-1 = parity on generators.
        let quotient = quotient_by_normal(a, &z)?;
        let quad = quadratic_presentation(&quotient)?
            .ok_or_else(|| Error::MissingData("down-up quotient not quadratic".into()))?;
        let qcert = certify_koszul_as_regular(&quad)?;
        let mu_quotient = nakayama_koszul(&qcert)?;
        let derived_mu = mu_quotient.matrix().mul(&witness.tau.matrix().inverse()?)?;
        let registry_mu = &a.known().nakayama.as_ref().unwrap().0;
        push(
            "downup_010.nakayama_from_quotient_rule",
            derived_mu == *registry_mu && mu_quotient.is_identity(),
            format!(
                "mu(A/(z)) = {}, derived mu_A diag = [{}, {}]",
                mu_quotient.render(),
                derived_mu.get(0, 0).render(),
                derived_mu.get(1, 1).render()
            ),
        );

        // hdet(sigma) = -1 via the registry rule.
        let sigma = &built.automorphisms["sigma"];
        let (h, _) = hdet_lookup(a, sigma)?;
        push(
            "downup_010.hdet_sigma",
            h == Scalar::from_integer(-1, &f4),
            format!("hdet(sigma) = {}", h.render()),
        );

        // hdet(parity) = 1 both by the square rule and by the scaling rule
        // with the registry AS index.
        let (hp, _) = hdet_lookup(a, parity)?;
        push(
            "downup_010.hdet_parity",
            hp.is_one(),
            format!("hdet(parity) = {}", hp.render()),
        );

        // HI2 right side with sigma: parity . sigma^4 . scaling(hdet sigma)^-1
        // must be the identity (the twist is Calabi-Yau).
        let registry = a.known();
        let mu_matrix = registry.nakayama.as_ref().unwrap().0.clone();
        let as_index = registry.as_index.as_ref().unwrap().0.clone();
        let rhs = hi2_rhs_matrix(a, std::slice::from_ref(sigma), &mu_matrix, &as_index, &[h])?;
        push(
            "downup_010.twist_rhs_identity",
            rhs.is_identity(),
            format!("rhs = {}", rhs.render()),
        );

        // Smash with <parity> is Calabi-Yau: witness 1 # parity.
        let smash = smash_product(a, std::slice::from_ref(parity), DEFAULT_GROUP_CAP, 20, seed)?;
        let hdets = vec![Scalar::one(&f4); smash.group_order()];
        let rho = hi1_candidate(&smash, parity, &hdets, 20, seed)?;
        let witness_u = inner_witness(&smash, &rho)?;
        push(
            "downup_010.smash_cy_witness",
            witness_u.is_some(),
            match &witness_u {
                Some(u) => format!("u = {}", smash.render_element(u)),
                None => "no degree-0 witness".to_string(),
            },
        );
    }

    Ok(out)
}
