//! Command dispatch for job files and deterministic reports.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::cobar::{self, Cobar, GradedAlgebra, Grading, K2Verdict};
use crate::error::{Error, Result};
use crate::facecomplex::{self, SimplicialComplex, VertexOrdering, DEFAULT_SEARCH_CAP};
use crate::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use crate::grassoc;
use crate::groebner::{self, EssentialVerdict, Presentation};
use crate::parse::{parse_job, FieldSpec, JobFile};

/// Default largest cohomological degree.
pub const DEFAULT_NMAX: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Gb,
    Gr,
    Hilbert,
    Essential,
    Ext,
    K2,
    Lift,
    Face,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Gb,
        Command::Gr,
        Command::Hilbert,
        Command::Essential,
        Command::Ext,
        Command::K2,
        Command::Lift,
        Command::Face,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Gr => "gr",
            Command::Hilbert => "hilbert",
            Command::Essential => "essential",
            Command::Ext => "ext",
            Command::K2 => "k2",
            Command::Lift => "lift",
            Command::Face => "face",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Command(s.to_string()))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub bound: Option<usize>,
    pub nmax: Option<usize>,
    pub field: Option<FieldSpec>,
    pub search_orderings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Decided,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: Command,
    pub input_hash: String,
    pub field: String,
    pub status: Status,
    pub verdict: String,
    pub tables: Vec<(String, Table)>,
    pub caveats: Vec<String>,
}

impl Report {
    fn new(command: Command, input_hash: String, field: String) -> Self {
        Self {
            command,
            input_hash,
            field,
            status: Status::Decided,
            verdict: String::new(),
            tables: Vec::new(),
            caveats: Vec::new(),
        }
    }

    fn table(&mut self, name: &str, t: Table) {
        self.tables.push((name.to_string(), t));
    }

    /// 0 for decided, 2 for inconclusive at the bound.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Decided => 0,
            Status::Inconclusive => 2,
        }
    }

    pub fn to_json(&self) -> String {
        let tables: serde_json::Map<String, serde_json::Value> = self
            .tables
            .iter()
            .map(|(n, t)| (n.clone(), json!({ "columns": t.columns, "rows": t.rows })))
            .collect();
        let v = json!({
            "command": self.command.name(),
            "input_hash": self.input_hash,
            "verdict": { "status": self.status, "summary": self.verdict, "field": self.field },
            "tables": tables,
            "caveats": self.caveats,
        });
        serde_json::to_string_pretty(&v).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = match self.status {
            Status::Decided => "decided",
            Status::Inconclusive => "inconclusive at bound",
        };
        writeln!(s, "command: {}", self.command.name()).unwrap();
        writeln!(s, "input:   sha256 {}", self.input_hash).unwrap();
        writeln!(s, "field:   {}", self.field).unwrap();
        writeln!(s, "status:  {status}").unwrap();
        writeln!(s, "verdict: {}", self.verdict).unwrap();
        for (name, t) in &self.tables {
            writeln!(s, "\n{name}:").unwrap();
            let mut widths: Vec<usize> = t.columns.iter().map(|c| c.chars().count()).collect();
            for r in &t.rows {
                for (i, c) in r.iter().enumerate() {
                    widths[i] = widths[i].max(c.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let parts: Vec<String> = cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{c:<w$}", w = widths[i]))
                    .collect();
                format!("  {}", parts.join("  ").trim_end())
            };
            writeln!(s, "{}", line(&t.columns)).unwrap();
            for r in &t.rows {
                writeln!(s, "{}", line(r)).unwrap();
            }
        }
        if !self.caveats.is_empty() {
            writeln!(s, "\ncaveats:").unwrap();
            for c in &self.caveats {
                writeln!(s, "  - {c}").unwrap();
            }
        }
        s
    }
}

pub fn input_hash(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Parses `text` and runs `command` on it.
pub fn run(command: Command, text: &str, opts: &RunOptions) -> Result<Report> {
    let job = parse_job(text)?;
    let spec = opts
        .field
        .or(job.field)
        .unwrap_or(FieldSpec::Prime(DEFAULT_PRIME));
    let hash = input_hash(text);
    match spec {
        FieldSpec::Prime(p) => run_with(PrimeField::new(p)?, command, &job, hash, opts),
        FieldSpec::Rationals => run_with(Rationals, command, &job, hash, opts),
    }
}

fn run_with<F: Field>(
    field: F,
    command: Command,
    job: &JobFile,
    hash: String,
    opts: &RunOptions,
) -> Result<Report> {
    let mut r = Report::new(command, hash, field.name());
    let nmax = opts.nmax.or(job.nmax).unwrap_or(DEFAULT_NMAX);
    if command == Command::Face {
        face(&mut r, field, job, opts, nmax)?;
        return Ok(r);
    }
    let p = job.presentation(field, opts.bound)?;
    match command {
        Command::Gb => gb(&mut r, &p),
        Command::Gr => gr(&mut r, &p),
        Command::Hilbert => hilbert(&mut r, &p),
        Command::Essential => essential(&mut r, &p)?,
        Command::Ext => ext(&mut r, &p, nmax)?,
        Command::K2 => k2(&mut r, &p, nmax)?,
        Command::Lift => lift(&mut r, &p)?,
        Command::Face => unreachable!(),
    }
    Ok(r)
}

fn words_cell(vars: &crate::freealg::VariableSet, ws: &[crate::freealg::Word]) -> String {
    ws.iter().map(|w| w.display(vars).to_string()).collect::<Vec<_>>().join(", ")
}

fn truncation_caveats<F: Field>(r: &mut Report, g: &groebner::GroebnerBasis<F>) {
    for n in g.notices() {
        r.caveats.push(n.clone());
    }
    if !g.is_complete() {
        r.caveats.push(format!(
            "{} ambiguities above degree {} do not resolve; the basis is certified through degree {}",
            g.pending().len(),
            g.bound(),
            g.complete_below()
        ));
    }
}

fn gb<F: Field>(r: &mut Report, p: &Presentation<F>) {
    let g = groebner::complete(p);
    let mut t = Table::new(&["leading word", "element"]);
    for e in g.elements() {
        t.row(vec![
            e.leading_word().expect("nonzero").display(p.vars()).to_string(),
            e.display(p.field(), p.vars()).to_string(),
        ]);
    }
    r.table("basis", t);
    if !g.pending().is_empty() {
        let mut t = Table::new(&["ambient word", "remainder degree"]);
        for a in g.pending() {
            t.row(vec![a.ambient.display(p.vars()).to_string(), a.remainder_degree.to_string()]);
        }
        r.table("pending ambiguities", t);
    }
    truncation_caveats(r, &g);
    if g.is_complete() {
        r.verdict = format!("complete Groebner basis with {} elements", g.elements().len());
    } else {
        r.status = Status::Inconclusive;
        r.verdict = format!(
            "basis truncated at degree {}; certified through degree {}",
            g.bound(),
            g.complete_below()
        );
    }
}

fn gr<F: Field>(r: &mut Report, p: &Presentation<F>) {
    let g = groebner::complete(p);
    let m = grassoc::associated_graded(&g);
    let mut t = Table::new(&["degree", "minimal generators"]);
    let top = m.max_generator_degree();
    for d in 1..=top {
        let ws: Vec<_> = m.mingens().iter().filter(|w| w.degree() == d).cloned().collect();
        if !ws.is_empty() {
            t.row(vec![d.to_string(), words_cell(p.vars(), &ws)]);
        }
    }
    r.table("associated monomial algebra", t);
    truncation_caveats(r, &g);
    if g.is_complete() {
        r.verdict = format!("associated graded algebra has {} minimal generators", m.mingens().len());
    } else {
        r.status = Status::Inconclusive;
        r.verdict = format!(
            "{} minimal generators found through degree {}; more may exist above",
            m.mingens().len(),
            g.complete_below()
        );
    }
}

fn hilbert<F: Field>(r: &mut Report, p: &Presentation<F>) {
    let g = groebner::complete(p);
    let m = grassoc::associated_graded(&g);
    let h = grassoc::hilbert_coeffs(&m);
    let mut t = Table::new(&["degree", "dimension"]);
    for (d, x) in h.iter().enumerate() {
        t.row(vec![d.to_string(), x.to_string()]);
    }
    r.table("hilbert coefficients", t);
    truncation_caveats(r, &g);
    r.verdict = format!(
        "Hilbert coefficients through degree {}: {}",
        m.bound(),
        h.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    );
}

fn essential<F: Field>(r: &mut Report, p: &Presentation<F>) -> Result<()> {
    let cert = groebner::essential_groebner_test(p)?;
    let mut t = Table::new(&["degree", "essential relations", "leading words"]);
    for (m, e, j) in &cert.table {
        t.row(vec![m.to_string(), e.to_string(), j.to_string()]);
    }
    r.table("essential relations against minimal leading words", t);
    let mut t = Table::new(&["leading words"]);
    t.row(vec![words_cell(p.vars(), &cert.leading_words)]);
    r.table("groebner basis", t);
    let g = groebner::complete(p);
    truncation_caveats(r, &g);
    r.verdict = match cert.verdict {
        EssentialVerdict::Yes => "Yes: the reduced Groebner basis is an essential generating set".into(),
        EssentialVerdict::No {
            degree,
            essential,
            monomial,
        } => format!(
            "No: in degree {degree}, dim(I/I') = {essential} but there are {monomial} minimal leading words"
        ),
        EssentialVerdict::InconclusiveAtBound { bound } => {
            r.status = Status::Inconclusive;
            format!("inconclusive: counts agree through degree {bound} but the basis is not complete")
        }
    };
    Ok(())
}

fn ext_table<E>(name: &str, t: &cobar::ExtTable<E>) -> (String, Table) {
    let mut tab = Table::new(&["n", "j", "dim"]);
    for ((n, j), d) in t.nonzero() {
        tab.row(vec![n.to_string(), j.to_string(), d.to_string()]);
    }
    (name.to_string(), tab)
}

fn ext<F: Field>(r: &mut Report, p: &Presentation<F>, nmax: usize) -> Result<()> {
    let g = groebner::complete(p);
    truncation_caveats(r, &g);
    let bound = g.complete_below();
    let gr_alg = GradedAlgebra::monomial(p.field().clone(), grassoc::associated_graded(&g));
    let graded = Cobar::new(&gr_alg, Grading::ByWord, nmax, bound)?.table();
    if p.is_homogeneous() {
        let alg = GradedAlgebra::quotient(g);
        let algebra = Cobar::auto(&alg, nmax, bound)?.table();
        let (name, t) = ext_table("ext of the algebra", &algebra);
        r.table(&name, t);
        let (name, t) = ext_table("ext of the associated monomial algebra", &graded);
        r.table(&name, t);
        let mut violations = 0;
        for n in 0..=nmax {
            for j in 0..=bound {
                if algebra.dim(n, j) > graded.dim(n, j) {
                    violations += 1;
                }
            }
        }
        r.verdict = format!(
            "Ext computed for n <= {nmax}, j <= {bound}; dimension inequality against the monomial algebra {}",
            if violations == 0 { "holds" } else { "FAILS" }
        );
    } else {
        let (name, t) = ext_table("ext of the associated monomial algebra", &graded);
        r.table(&name, t);
        let mut t = Table::new(&["n", "upper bound on dim Ext^n"]);
        for n in 0..=nmax {
            t.row(vec![n.to_string(), graded.total(n).to_string()]);
        }
        r.table("ungraded ext upper bounds", t);
        r.caveats.push(
            "inhomogeneous presentation: Ext of the algebra itself is not computed; totals of the monomial side bound it from above".into(),
        );
        r.verdict = format!("monomial-side Ext computed for n <= {nmax}, j <= {bound}");
    }
    Ok(())
}

fn k2_verdict_rows(v: &K2Verdict) -> Table {
    let mut t = Table::new(&["n", "j", "dim Ext", "dim generated"]);
    if let K2Verdict::CertifiedNotK2 { deficient, .. } = v {
        for d in deficient {
            t.row(vec![
                d.n.to_string(),
                d.degree.to_string(),
                d.ext_dim.to_string(),
                d.generated_dim.to_string(),
            ]);
        }
    }
    t
}

fn k2_summary(v: &K2Verdict) -> String {
    match v {
        K2Verdict::CertifiedNotK2 { witness, .. } => format!(
            "CertifiedNotK2: at (n, j) = ({}, {}) Ext has dimension {} but degrees 1 and 2 generate only {}",
            witness.n, witness.degree, witness.ext_dim, witness.generated_dim
        ),
        K2Verdict::EvidenceK2UpTo { nmax, bound } => format!(
            "EvidenceK2UpTo(nmax = {nmax}, D = {bound}): degrees 1 and 2 generate Ext in every computed bidegree"
        ),
    }
}

fn k2<F: Field>(r: &mut Report, p: &Presentation<F>, nmax: usize) -> Result<()> {
    let g = groebner::complete(p);
    truncation_caveats(r, &g);
    let bound = g.complete_below();
    let homogeneous = p.is_homogeneous();
    let alg = if homogeneous {
        GradedAlgebra::quotient(g)
    } else {
        GradedAlgebra::monomial(p.field().clone(), grassoc::associated_graded(&g))
    };
    let c = Cobar::auto(&alg, nmax, bound)?;
    let v = c.k2_verdict();
    let (name, t) = ext_table(
        if homogeneous { "ext of the algebra" } else { "ext of the associated monomial algebra" },
        &c.table(),
    );
    r.table(&name, t);
    r.table("deficient bidegrees", k2_verdict_rows(&v));
    r.verdict = k2_summary(&v);
    if !homogeneous {
        r.status = Status::Inconclusive;
        r.caveats.push(
            "inhomogeneous presentation: the verdict concerns the associated monomial algebra; combine with `lift` for the algebra itself".into(),
        );
    } else if !v.is_certified_not_k2() {
        r.status = Status::Inconclusive;
        r.caveats.push("a positive K2 answer is bounded evidence, not a proof".into());
    }
    Ok(())
}

fn lift<F: Field>(r: &mut Report, p: &Presentation<F>) -> Result<()> {
    let bound = p.bound();
    let mut all = true;
    let mut exact = true;
    for n in [1, 2] {
        let rep = cobar::lambda_surjectivity_evidence(p, n, bound)?;
        let mut t = Table::new(&["word", "class", "lifted"]);
        for c in &rep.classes {
            t.row(vec![
                c.word.display(p.vars()).to_string(),
                c.index.to_string(),
                if c.lifted { "yes" } else { "no" }.to_string(),
            ]);
        }
        r.table(&format!("classes in cohomological degree {n}"), t);
        all &= rep.all_lifted();
        exact &= rep.exact;
        for c in rep.caveats {
            if !r.caveats.contains(&c) {
                r.caveats.push(c);
            }
        }
    }
    r.verdict = if all {
        "every class in cohomological degrees 1 and 2 lifts".into()
    } else {
        "some classes in cohomological degrees 1 and 2 do not lift".into()
    };
    if !exact {
        r.status = Status::Inconclusive;
    }
    Ok(())
}

fn complex_from_job(job: &JobFile) -> Result<SimplicialComplex> {
    let vertices = job
        .vertices
        .clone()
        .ok_or_else(|| Error::Complex("missing `vertices` line".into()))?;
    match (job.facets.is_empty(), job.missing.is_empty()) {
        (false, false) => Err(Error::Complex("use either `facet` or `missing` lines, not both".into())),
        (_, true) => SimplicialComplex::from_facets(vertices, &job.facets),
        (true, false) => SimplicialComplex::from_missing(vertices, &job.missing),
    }
}

fn face<F: Field>(r: &mut Report, field: F, job: &JobFile, opts: &RunOptions, nmax: usize) -> Result<()> {
    let c = complex_from_job(job)?;
    let mut t = Table::new(&["minimally missing face"]);
    for m in c.minimally_missing_faces() {
        t.row(vec![c.display_face(&m.0)]);
    }
    r.table("minimally missing faces", t);
    let ordering = if opts.search_orderings {
        let s = facecomplex::find_good_ordering(&c, DEFAULT_SEARCH_CAP)?;
        let mut t = Table::new(&["orderings checked", "result"]);
        t.row(vec![
            s.checks.to_string(),
            s.ordering
                .as_ref()
                .map_or("none".to_string(), |o| o.names(&c).join(" < ")),
        ]);
        r.table("ordering search", t);
        match s.ordering {
            Some(o) => o,
            None => {
                r.verdict = format!(
                    "no ordering of the {} vertices satisfies the missing-face condition ({} orderings checked)",
                    c.len(),
                    s.checks
                );
                return Ok(());
            }
        }
    } else {
        VertexOrdering::identity(c.len())
    };
    let (ok, witness) = facecomplex::betweenness_check(&c, &ordering)?;
    let p = facecomplex::face_algebra_presentation(field, &c, &ordering, opts.bound)?;
    let cert = groebner::essential_groebner_test(&p)?;
    let order_text = ordering.names(&c).join(" < ");
    let mut t = Table::new(&["ordering", "missing-face condition", "essential Groebner basis"]);
    t.row(vec![
        order_text.clone(),
        if ok { "holds".into() } else { "fails".into() },
        match &cert.verdict {
            EssentialVerdict::Yes => "yes".into(),
            EssentialVerdict::No { degree, .. } => format!("no (degree {degree})"),
            EssentialVerdict::InconclusiveAtBound { bound } => format!("inconclusive at {bound}"),
        },
    ]);
    r.table("ordering check", t);
    if let Some(w) = &witness {
        r.caveats.push(format!(
            "missing face {} fails with vertex {}",
            c.display_face(&w.missing),
            c.vertices()[w.vertex]
        ));
    }
    match cert.verdict {
        EssentialVerdict::Yes => {
            let g = groebner::complete(&p);
            let gr = GradedAlgebra::monomial(p.field().clone(), grassoc::associated_graded(&g));
            let v = cobar::k2_test(&gr, nmax, g.complete_below())?;
            r.table("deficient bidegrees of the monomial algebra", k2_verdict_rows(&v));
            r.verdict = format!(
                "ordering {order_text} gives an essential Groebner basis; monomial algebra: {}",
                k2_summary(&v)
            );
            if !v.is_certified_not_k2() {
                r.caveats.push("a positive K2 answer is bounded evidence, not a proof".into());
            }
        }
        EssentialVerdict::No { .. } => {
            r.verdict = format!("ordering {order_text} does not give an essential Groebner basis");
        }
        EssentialVerdict::InconclusiveAtBound { .. } => {
            r.status = Status::Inconclusive;
            r.verdict = format!("ordering {order_text}: essential test inconclusive at the bound");
        }
    }
    Ok(())
}
