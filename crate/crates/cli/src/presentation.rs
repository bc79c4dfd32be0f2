//! The presentation file format: a line-oriented description of a graded
//! algebra with named automorphisms, groups, options, and registry facts.
//!
//! Sections are headed by `[field]`, `[grading]`, `[generators]`,
//! `[relations]`, `[automorphism NAME]`, `[group NAME]`, `[options]`,
//! `[known]`. Unknown sections or keys are errors (strict mode). `#` starts
//! a comment. Parsing and serialization round-trip exactly; building
//! produces the algebra and validated automorphism/group tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use skewcy_core::algebra::{HdetRule, KnownData, Provenance};
use skewcy_core::error::{Error, Result};
use skewcy_core::expr::ExprParser;
use skewcy_core::free::{GeneratorTable, Multidegree, NcPolynomial};
use skewcy_core::matrix::Matrix;
use skewcy_core::{FieldSpec, GradedAlgebra, GradedAutomorphism};

pub const DEFAULT_DEGREE_BOUND: i64 = 8;
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KnownSection {
    pub nakayama: Option<(String, String)>,
    pub as_index: Option<(Vec<i64>, String)>,
    pub hdet_rule: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PresentationFile {
    pub field: FieldSpec,
    pub rank: usize,
    pub generators: Vec<(String, Multidegree)>,
    pub relations: Vec<String>,
    pub automorphisms: Vec<(String, Vec<(String, String)>)>,
    pub groups: Vec<(String, Vec<String>)>,
    pub degree_bound: i64,
    pub seed: u64,
    pub known: KnownSection,
}

pub struct BuiltPresentation {
    pub algebra: GradedAlgebra,
    pub automorphisms: BTreeMap<String, GradedAutomorphism>,
    pub groups: BTreeMap<String, Vec<String>>,
    pub seed: u64,
}

fn err_at(line: usize, msg: impl Into<String>) -> Error {
    Error::SyntaxError {
        line,
        col: 1,
        msg: msg.into(),
    }
}

fn with_line(e: Error, line: usize) -> Error {
    match e {
        Error::SyntaxError { col, msg, .. } => Error::SyntaxError { line, col, msg },
        other => err_at(line, other.to_string()),
    }
}

pub fn parse_presentation(text: &str) -> Result<PresentationFile> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Field,
        Grading,
        Generators,
        Relations,
        Automorphism(String),
        Group(String),
        Options,
        Known,
    }

    let mut field: Option<FieldSpec> = None;
    let mut rank: usize = 1;
    let mut rank_seen = false;
    let mut generators: Vec<(String, Multidegree)> = Vec::new();
    let mut relations: Vec<String> = Vec::new();
    let mut automorphisms: Vec<(String, Vec<(String, String)>)> = Vec::new();
    let mut groups: Vec<(String, Vec<String>)> = Vec::new();
    let mut degree_bound = DEFAULT_DEGREE_BOUND;
    let mut seed = DEFAULT_SEED;
    let mut known = KnownSection::default();
    let mut section = Section::None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('[') {
            let header = header
                .strip_suffix(']')
                .ok_or_else(|| err_at(lineno, "unterminated section header"))?
                .trim();
            section = match header {
                "field" => Section::Field,
                "grading" => Section::Grading,
                "generators" => Section::Generators,
                "relations" => Section::Relations,
                "options" => Section::Options,
                "known" => Section::Known,
                other => {
                    if let Some(name) = other.strip_prefix("automorphism ") {
                        let name = name.trim().to_string();
                        if automorphisms.iter().any(|(n, _)| *n == name) {
                            return Err(err_at(lineno, format!("duplicate automorphism {name}")));
                        }
                        automorphisms.push((name.clone(), Vec::new()));
                        Section::Automorphism(name)
                    } else if let Some(name) = other.strip_prefix("group ") {
                        let name = name.trim().to_string();
                        if groups.iter().any(|(n, _)| *n == name) {
                            return Err(err_at(lineno, format!("duplicate group {name}")));
                        }
                        groups.push((name.clone(), Vec::new()));
                        Section::Group(name)
                    } else {
                        return Err(err_at(lineno, format!("unknown section [{other}]")));
                    }
                }
            };
            continue;
        }
        match &section {
            Section::None => {
                return Err(err_at(lineno, "content before the first section header"));
            }
            Section::Field => {
                if field.is_some() {
                    return Err(err_at(lineno, "field specified twice"));
                }
                field = Some(parse_field_line(line, lineno)?);
            }
            Section::Grading => {
                let rest = line
                    .strip_prefix("rank")
                    .ok_or_else(|| err_at(lineno, "expected `rank w`"))?
                    .trim();
                rank = rest
                    .parse::<usize>()
                    .map_err(|_| err_at(lineno, "grading rank must be a positive integer"))?;
                if rank == 0 {
                    return Err(err_at(lineno, "grading rank must be at least 1"));
                }
                rank_seen = true;
            }
            Section::Generators => {
                let (name, rhs) = split_assignment(line, lineno)?;
                let degree = parse_degree_tuple(rhs, lineno)?;
                generators.push((name.to_string(), degree));
            }
            Section::Relations => {
                relations.push(line.to_string());
            }
            Section::Automorphism(_) => {
                let (name, rhs) = split_assignment(line, lineno)?;
                if let Some((_, lines)) = automorphisms.last_mut() {
                    lines.push((name.to_string(), rhs.to_string()));
                }
            }
            Section::Group(_) => {
                let rest = line
                    .strip_prefix("members")
                    .and_then(|r| r.trim_start().strip_prefix('='))
                    .ok_or_else(|| err_at(lineno, "expected `members = name, ...`"))?;
                let members: Vec<String> = rest
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect();
                if let Some((_, m)) = groups.last_mut() {
                    *m = members;
                }
            }
            Section::Options => {
                let (key, value) = split_assignment(line, lineno)?;
                match key {
                    "degree_bound" => {
                        degree_bound = value
                            .parse::<i64>()
                            .map_err(|_| err_at(lineno, "degree_bound must be an integer"))?;
                    }
                    "seed" => {
                        seed = value
                            .parse::<u64>()
                            .map_err(|_| err_at(lineno, "seed must be a nonnegative integer"))?;
                    }
                    other => {
                        return Err(err_at(lineno, format!("unknown option {other}")));
                    }
                }
            }
            Section::Known => {
                let (key, value) = split_assignment(line, lineno)?;
                let (body, prov) = split_provenance(value, lineno)?;
                match key {
                    "nakayama" => {
                        known.nakayama = Some((body.to_string(), prov));
                    }
                    "as_index" => {
                        let idx = if body.starts_with('(') {
                            parse_degree_tuple(body, lineno)?
                        } else {
                            vec![body
                                .parse::<i64>()
                                .map_err(|_| err_at(lineno, "as_index must be an integer or tuple"))?]
                        };
                        known.as_index = Some((idx, prov));
                    }
                    "hdet_rule" => {
                        if body != "det" && body != "det_squared" {
                            return Err(err_at(
                                lineno,
                                "hdet_rule must be `det` or `det_squared`",
                            ));
                        }
                        known.hdet_rule = Some((body.to_string(), prov));
                    }
                    other => {
                        return Err(err_at(lineno, format!("unknown known-data key {other}")));
                    }
                }
            }
        }
    }

    let field = field.ok_or_else(|| err_at(1, "missing [field] section"))?;
    if generators.is_empty() {
        return Err(err_at(1, "missing [generators] section"));
    }
    let _ = rank_seen;
    Ok(PresentationFile {
        field,
        rank,
        generators,
        relations,
        automorphisms,
        groups,
        degree_bound,
        seed,
        known,
    })
}

fn parse_field_line(line: &str, lineno: usize) -> Result<FieldSpec> {
    let mut parts = line.split_whitespace();
    let head = parts.next().unwrap_or("");
    let spec = match head {
        "rationals" => FieldSpec::Rationals,
        "prime" => {
            let p = parts
                .next()
                .and_then(|s| s.parse::<u64>().ok())
                .ok_or_else(|| err_at(lineno, "expected `prime p`"))?;
            FieldSpec::PrimeField(p)
        }
        "cyclotomic" => {
            let n = parts
                .next()
                .and_then(|s| s.parse::<u32>().ok())
                .ok_or_else(|| err_at(lineno, "expected `cyclotomic n`"))?;
            FieldSpec::Cyclotomic(n)
        }
        other => {
            return Err(err_at(
                lineno,
                format!("unknown field {other}; expected rationals, prime p, or cyclotomic n"),
            ));
        }
    };
    if parts.next().is_some() {
        return Err(err_at(lineno, "trailing input after field"));
    }
    spec.validate().map_err(|e| with_line(e, lineno))?;
    Ok(spec)
}

fn split_assignment(line: &str, lineno: usize) -> Result<(&str, &str)> {
    let eq = line
        .find('=')
        .ok_or_else(|| err_at(lineno, "expected `name = value`"))?;
    Ok((line[..eq].trim(), line[eq + 1..].trim()))
}

fn split_provenance(value: &str, lineno: usize) -> Result<(&str, String)> {
    match value.find("provenance") {
        Some(p) => {
            let body = value[..p].trim();
            let quoted = value[p + "provenance".len()..].trim();
            let inner = quoted
                .strip_prefix('"')
                .and_then(|s| s.strip_suffix('"'))
                .ok_or_else(|| err_at(lineno, "provenance must be a quoted string"))?;
            Ok((body, inner.to_string()))
        }
        None => Ok((value, "unspecified".to_string())),
    }
}

fn parse_degree_tuple(text: &str, lineno: usize) -> Result<Multidegree> {
    let inner = text
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err_at(lineno, "expected a degree tuple like (1,0)"))?;
    inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| err_at(lineno, "degree entries must be integers"))
        })
        .collect()
}

/// Canonical serialization; `parse_presentation` of the output returns an
/// equal value.
pub fn serialize_presentation(pf: &PresentationFile) -> String {
    let mut out = String::new();
    out.push_str("[field]\n");
    match &pf.field {
        FieldSpec::Rationals => out.push_str("rationals\n"),
        FieldSpec::PrimeField(p) => out.push_str(&format!("prime {p}\n")),
        FieldSpec::Cyclotomic(n) => out.push_str(&format!("cyclotomic {n}\n")),
    }
    out.push_str("\n[grading]\n");
    out.push_str(&format!("rank {}\n", pf.rank));
    out.push_str("\n[generators]\n");
    for (name, degree) in &pf.generators {
        let entries: Vec<String> = degree.iter().map(|d| d.to_string()).collect();
        out.push_str(&format!("{name} = ({})\n", entries.join(",")));
    }
    out.push_str("\n[relations]\n");
    for r in &pf.relations {
        out.push_str(r);
        out.push('\n');
    }
    for (name, lines) in &pf.automorphisms {
        out.push_str(&format!("\n[automorphism {name}]\n"));
        for (gen, expr) in lines {
            out.push_str(&format!("{gen} = {expr}\n"));
        }
    }
    for (name, members) in &pf.groups {
        out.push_str(&format!("\n[group {name}]\n"));
        out.push_str(&format!("members = {}\n", members.join(", ")));
    }
    out.push_str("\n[options]\n");
    out.push_str(&format!("degree_bound = {}\n", pf.degree_bound));
    out.push_str(&format!("seed = {}\n", pf.seed));
    let k = &pf.known;
    if k.nakayama.is_some() || k.as_index.is_some() || k.hdet_rule.is_some() {
        out.push_str("\n[known]\n");
        if let Some((name, prov)) = &k.nakayama {
            out.push_str(&format!("nakayama = {name} provenance \"{prov}\"\n"));
        }
        if let Some((idx, prov)) = &k.as_index {
            let entries: Vec<String> = idx.iter().map(|d| d.to_string()).collect();
            out.push_str(&format!(
                "as_index = ({}) provenance \"{prov}\"\n",
                entries.join(",")
            ));
        }
        if let Some((rule, prov)) = &k.hdet_rule {
            out.push_str(&format!("hdet_rule = {rule} provenance \"{prov}\"\n"));
        }
    }
    out
}

impl PresentationFile {
    /// Builds the algebra, named automorphisms, and group tables; all
    /// validation happens here, with errors tagged by meaning rather than
    /// file position.
    pub fn build(&self) -> Result<BuiltPresentation> {
        if let FieldSpec::Cyclotomic(_) = self.field {
            if self.generators.iter().any(|(n, _)| n == "z") {
                return Err(Error::SyntaxError {
                    line: 0,
                    col: 0,
                    msg: "generator name z is reserved over cyclotomic fields".into(),
                });
            }
        }
        let names: Vec<String> = self.generators.iter().map(|(n, _)| n.clone()).collect();
        let degrees: Vec<Multidegree> = self.generators.iter().map(|(_, d)| d.clone()).collect();
        let table = GeneratorTable::new(names, degrees, self.rank)?;
        let parser = ExprParser::new(&table, &self.field);
        let mut relations = Vec::new();
        for r in &self.relations {
            relations.push(parser.parse(r)?);
        }
        let algebra = GradedAlgebra::new(
            Arc::clone(&table),
            self.field.clone(),
            relations,
            self.degree_bound,
        )?;

        let mut automorphisms = BTreeMap::new();
        for (name, lines) in &self.automorphisms {
            let m = build_automorphism_matrix(&table, &self.field, lines)?;
            let auto = algebra.check_automorphism(m)?;
            automorphisms.insert(name.clone(), auto);
        }

        let mut groups = BTreeMap::new();
        for (name, members) in &self.groups {
            for m in members {
                if !automorphisms.contains_key(m) {
                    return Err(Error::MissingData(format!(
                        "group {name} references unknown automorphism {m}"
                    )));
                }
            }
            groups.insert(name.clone(), members.clone());
        }

        // Registry facts.
        let mut known = KnownData::default();
        if let Some((auto_name, prov)) = &self.known.nakayama {
            let auto = automorphisms.get(auto_name).ok_or_else(|| {
                Error::MissingData(format!(
                    "known nakayama references unknown automorphism {auto_name}"
                ))
            })?;
            known.nakayama = Some((
                auto.matrix().clone(),
                Provenance::PaperRegistry(prov.clone()),
            ));
        }
        if let Some((idx, prov)) = &self.known.as_index {
            known.as_index = Some((idx.clone(), Provenance::PaperRegistry(prov.clone())));
        }
        if let Some((rule, prov)) = &self.known.hdet_rule {
            let rule = match rule.as_str() {
                "det" => HdetRule::Determinant,
                _ => HdetRule::DeterminantSquared,
            };
            known.hdet_rule = Some((rule, Provenance::PaperRegistry(prov.clone())));
        }
        let algebra = algebra.with_known_data(known);
        // Re-validate the automorphisms against the final value so they
        // reference the algebra carrying the registry.
        let mut rebound = BTreeMap::new();
        for (name, auto) in automorphisms {
            rebound.insert(name, algebra.check_automorphism(auto.matrix().clone())?);
        }

        Ok(BuiltPresentation {
            algebra,
            automorphisms: rebound,
            groups,
            seed: self.seed,
        })
    }
}

/// Interprets `gen = linear expression` lines as the columns of a matrix on
/// the generator space. Every generator must appear exactly once; images
/// must be homogeneous linear of the same multidegree.
fn build_automorphism_matrix(
    table: &Arc<GeneratorTable>,
    field: &FieldSpec,
    lines: &[(String, String)],
) -> Result<Matrix> {
    let n = table.len();
    let parser = ExprParser::new(table, field);
    let mut seen = vec![false; n];
    let mut m = Matrix::new(n, n, field);
    for (gen, expr) in lines {
        let col = table
            .index_of(gen)
            .ok_or_else(|| Error::UnknownGenerator(gen.clone()))? as usize;
        if seen[col] {
            return Err(Error::DuplicateGenerator(gen.clone()));
        }
        seen[col] = true;
        let image = parser.parse(expr)?;
        for (w, c) in image.terms() {
            if w.len() != 1 {
                return Err(Error::DegreeMismatch(format!(
                    "image of {gen} must be linear in the generators, got {}",
                    image.render()
                )));
            }
            let row = w.letters()[0] as usize;
            if table.multidegree(row as u32) != table.multidegree(col as u32) {
                return Err(Error::DegreeMismatch(format!(
                    "image of {gen} mixes multidegrees ({} vs {})",
                    table.name(row as u32),
                    gen
                )));
            }
            m.set(row, col, c.clone());
        }
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::MissingData(format!(
            "automorphism does not define the image of {}",
            table.name(missing as u32)
        )));
    }
    Ok(m)
}

/// Renders a catalog entry as canonical presentation text.
pub fn presentation_of_catalog(built: &skewcy_core::catalog::Built) -> PresentationFile {
    let a = &built.algebra;
    let table = a.table();
    let generators: Vec<(String, Multidegree)> = (0..table.len() as u32)
        .map(|g| (table.name(g).to_string(), table.multidegree(g).clone()))
        .collect();
    let relations: Vec<String> = a.relations().iter().map(NcPolynomial::render).collect();
    let automorphisms: Vec<(String, Vec<(String, String)>)> = built
        .automorphisms
        .iter()
        .map(|(name, auto)| {
            let lines = (0..table.len() as u32)
                .map(|g| {
                    let image = skewcy_core::free::generator_image(
                        table,
                        a.field(),
                        auto.matrix(),
                        g,
                    )
                    .expect("validated matrix");
                    (table.name(g).to_string(), image.render())
                })
                .collect();
            (name.clone(), lines)
        })
        .collect();
    let groups: Vec<(String, Vec<String>)> = built
        .groups
        .iter()
        .map(|(n, m)| (n.clone(), m.clone()))
        .collect();
    let known = KnownSection {
        nakayama: a.known().nakayama.as_ref().map(|(m, p)| {
            // Point at a named automorphism with the same matrix if there
            // is one; otherwise synthesize a name.
            let name = built
                .automorphisms
                .iter()
                .find(|(_, auto)| auto.matrix() == m)
                .map(|(n, _)| n.clone())
                .unwrap_or_else(|| "nakayama".to_string());
            (name, provenance_text(p))
        }),
        as_index: a
            .known()
            .as_index
            .as_ref()
            .map(|(idx, p)| (idx.clone(), provenance_text(p))),
        hdet_rule: a
            .known()
            .hdet_rule
            .as_ref()
            .map(|(r, p)| (r.name().to_string(), provenance_text(p))),
    };
    PresentationFile {
        field: a.field().clone(),
        rank: table.rank(),
        generators,
        relations,
        automorphisms,
        groups,
        degree_bound: a.complete_to(),
        seed: DEFAULT_SEED,
        known,
    }
}

fn provenance_text(p: &Provenance) -> String {
    match p {
        Provenance::PaperRegistry(s) => s.clone(),
        Provenance::Computed(s) => format!("computed-{s}"),
    }
}
