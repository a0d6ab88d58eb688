//! Report types shared by the human and JSON renderings.

use std::fmt::Write;

use lencat::itext::DeformationData;
use lencat::species::UcViolation;
use lencat::weylcat::{CatalogKey, ExtEntry, VerifyReport};
use serde::{Deserialize, Serialize};

pub const REPORT_TAG: &str = "%lencat-report 1";
pub const FORMAT: &str = "lencat-report 1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub grading: String,
    pub twist: String,
    pub window: Option<(i64, i64)>,
    pub margin: Option<i64>,
}

impl Conventions {
    pub fn new(window: Option<(i64, i64)>, margin: Option<i64>) -> Self {
        Conventions {
            grading: "deg t = +1, deg d = -1, E = t*d has degree 0".into(),
            twist: "M[s]_w = M_(w+s); the generator of M[s] sits in weight -s".into(),
            window,
            margin,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format: String,
    pub conventions: Conventions,
    pub body: Body,
}

impl Report {
    pub fn new(conventions: Conventions, body: Body) -> Self {
        Report {
            format: FORMAT.into(),
            conventions,
            body,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Body {
    CheckUc(UcReport),
    Classify(ClassifyReport),
    ExtTable(ExtTableReport),
    WeylModule(ModuleReport),
    VerifyWeyl(VerifyReport),
    Deform(DeformReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UcReport {
    pub labels: Vec<String>,
    pub uniserial: bool,
    pub violation: Option<UcViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub backend: String,
    pub n: usize,
    pub start: Option<String>,
    /// Label sequences following arrows of the species.
    pub admissible: Vec<Vec<String>>,
    /// One entry per isomorphism class; empty for a bare species file.
    pub objects: Vec<ClassifiedObject>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedObject {
    pub vector: Vec<String>,
    pub realizability: String,
    /// `(rank, target dim, source dim)` of each restriction map.
    pub restriction_ranks: Vec<(usize, usize, usize)>,
    pub end_dim: usize,
    pub end_radical_dim: usize,
    pub indecomposable: bool,
    pub uniserial_factors: Option<Vec<String>>,
    pub certified: bool,
    pub object: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtTableReport {
    pub max_offset: i64,
    pub entries: Vec<ExtEntry>,
    pub deviations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleReport {
    pub key: CatalogKey,
    /// Integer shift applied to bring `alpha` into J*, already in the key.
    pub normalized_shift: i64,
    pub dims: Vec<usize>,
    pub module: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformReport {
    pub input: String,
    pub order: Vec<String>,
    pub deformation: DeformationData,
    pub trivial: bool,
    pub flat: bool,
    pub nilpotent: bool,
    pub order_preserved: bool,
    /// `None` when the object decomposes and only the invariants were compared.
    pub isomorphic: Option<bool>,
    pub round_trip: bool,
}

fn conventions_lines(c: &Conventions, out: &mut String) {
    let _ = writeln!(out, "# grading: {}", c.grading);
    let _ = writeln!(out, "# twist: {}", c.twist);
    if let Some((lo, hi)) = c.window {
        let _ = writeln!(out, "# window: [{}, {}]", lo, hi);
    }
    if let Some(m) = c.margin {
        let _ = writeln!(out, "# margin: {}", m);
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Human rendering. Every line before the payload is a `#` comment, so a
/// `weyl-module` report is itself a graded-rep file.
pub fn render_human(r: &Report) -> String {
    let mut out = String::new();
    if !matches!(r.body, Body::WeylModule(_)) {
        let _ = writeln!(out, "{}", REPORT_TAG);
    }
    conventions_lines(&r.conventions, &mut out);
    match &r.body {
        Body::CheckUc(u) => {
            let _ = writeln!(out, "check-uc: {} labels", u.labels.len());
            match &u.violation {
                None => out.push_str("uniserial: yes\n"),
                Some(v) => {
                    let _ = writeln!(out, "uniserial: no\nviolation: {}", v);
                }
            }
        }
        Body::Classify(c) => {
            let _ = writeln!(out, "classify: backend {}, n = {}", c.backend, c.n);
            if let Some(s) = &c.start {
                let _ = writeln!(out, "start: {}", s);
            }
            let _ = writeln!(out, "admissible vectors: {}", c.admissible.len());
            for v in &c.admissible {
                let _ = writeln!(out, "  {}", v.join(" -> "));
            }
            let _ = writeln!(out, "isomorphism classes: {}", c.objects.len());
            for (i, o) in c.objects.iter().enumerate() {
                let _ = writeln!(out, "\n[{}] {}", i + 1, o.vector.join(" -> "));
                let _ = writeln!(out, "realizability: {}", o.realizability);
                let _ = writeln!(out, "restriction ranks: {:?}", o.restriction_ranks);
                let _ = writeln!(
                    out,
                    "End: dim {}, radical {}; indecomposable: {}",
                    o.end_dim,
                    o.end_radical_dim,
                    yes(o.indecomposable)
                );
                match &o.uniserial_factors {
                    Some(f) => {
                        let _ = writeln!(out, "uniserial, factors (top first): {}", f.join(", "));
                    }
                    None => out.push_str("not uniserial\n"),
                }
                let _ = writeln!(out, "certified: {}", yes(o.certified));
                out.push_str(&o.object);
            }
        }
        Body::ExtTable(t) => {
            let _ = writeln!(out, "ext-table: offsets |dw| <= {}", t.max_offset);
            for e in &t.entries {
                let flag = if e.deviates() { "  DEVIATION" } else { "" };
                let _ = writeln!(
                    out,
                    "Ext1({}, {}) = {} (predicted {}){}",
                    e.source, e.target, e.dim, e.predicted, flag
                );
            }
            let _ = writeln!(out, "deviations: {}", t.deviations);
        }
        Body::WeylModule(m) => {
            let _ = writeln!(out, "# key: {}", m.key);
            if m.normalized_shift != 0 {
                let _ = writeln!(out, "# normalized: alpha shifted by {}", m.normalized_shift);
            }
            let _ = writeln!(out, "# dims: {:?}", m.dims);
            out.push_str(&m.module);
        }
        Body::VerifyWeyl(v) => {
            let _ = writeln!(out, "verify-weyl: n <= {}, margin {}", v.n_max, v.margin);
            for e in &v.entries {
                let status = if e.passed() { "PASS" } else { "FAIL" };
                let factors: Vec<String> = e.factors.iter().map(|f| f.to_string()).collect();
                let _ = writeln!(
                    out,
                    "{} {} on [{}, {}]: classes {}, isomorphic {}, uniserial {}, factors {}{}",
                    status,
                    e.key,
                    e.window.0,
                    e.window.1,
                    e.classes,
                    yes(e.isomorphic),
                    yes(e.uniserial),
                    factors.join(", "),
                    match e.nonsplit {
                        Some(b) => format!(", nonsplit {}", yes(b)),
                        None => String::new(),
                    }
                );
                for f in &e.failures {
                    let _ = writeln!(out, "    {}", f);
                }
            }
            let _ = writeln!(out, "verdict: {}", if v.passed() { "pass" } else { "fail" });
        }
        Body::Deform(d) => {
            let g = &d.deformation;
            let _ = writeln!(out, "deform: {}", d.input);
            let _ = writeln!(out, "order: {}", d.order.join(", "));
            let _ = writeln!(out, "extension type nodes: {}", g.extension_type.nodes.join(", "));
            let edges: Vec<String> = g
                .extension_type
                .edges()
                .iter()
                .enumerate()
                .map(|(i, (a, b))| format!("g{}{}: {} -> {}", i + 1, i + 2, a + 1, b + 1))
                .collect();
            let _ = writeln!(out, "edges: {}", if edges.is_empty() { "none".into() } else { edges.join("; ") });
            let _ = writeln!(out, "path algebra basis: {}", g.basis.join(", "));
            out.push_str("structure constants (row * column):\n");
            for (i, row) in g.structure_constants.iter().enumerate() {
                let cells: Vec<&str> = row
                    .iter()
                    .map(|c| c.map_or("0", |k| g.basis[k].as_str()))
                    .collect();
                let _ = writeln!(out, "  {}: {}", g.basis[i], cells.join(" "));
            }
            let _ = writeln!(out, "radical power dims: {:?}", g.radical_power_dims);
            for p in &g.psi {
                let _ = writeln!(out, "psi({},{}) {}: {}", p.from, p.to, p.arrow, p.matrix);
            }
            let _ = writeln!(out, "flatness (actual, expected): {:?}", g.flatness);
            let _ = writeln!(out, "trivial: {}", yes(d.trivial));
            let iso = match d.isomorphic {
                Some(b) => yes(b),
                None => "not decided (decomposable)",
            };
            let _ = writeln!(
                out,
                "flat: {}, nilpotent: {}, order preserved: {}, isomorphic: {}",
                yes(d.flat),
                yes(d.nilpotent),
                yes(d.order_preserved),
                iso
            );
            let _ = writeln!(out, "round trip: {}", if d.round_trip { "pass" } else { "fail" });
        }
    }
    out
}
