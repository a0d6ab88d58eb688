//! Species of a simple family, the uniseriality criterion, and the
//! constructive classification of indecomposables by order vectors.
//!
//! The species records `d(a, b) = dim Ext¹(S_a, S_b)`, drawn as `d(a, b)`
//! arrows `a -> b`. The criterion (UC) asks every row and column sum of
//! this table to be at most 1.
//!
//! # Species file
//!
//! ```text
//! %lencat-species 1
//! label A            one line per simple, in order
//! ext A B 2          d(A, B); omitted pairs are 0
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abcat::{
    are_isomorphic, ext1, hom_dim, is_indecomposable, is_uniserial, pullback_extension_in, realize_extension,
    EndCertificate, ExtClass, Morphism, SimpleFamily,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiverrep::{content_lines, BackendKind, QuiverRep};

pub const SPECIES_TAG: &str = "%lencat-species 1";

/// Labels with the table `d(a, b) = dim Ext¹(S_a, S_b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Species {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl Species {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("species table must be square over the labels".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains(char::is_whitespace) || labels[..i].contains(l) {
                return Err(Error::Parse(format!("bad or duplicate label `{}`", l)));
            }
        }
        Ok(Species { labels, table })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn dim(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", SPECIES_TAG);
        for l in &self.labels {
            out.push_str(&format!("label {}\n", l));
        }
        for (a, row) in self.table.iter().enumerate() {
            for (b, &d) in row.iter().enumerate() {
                if d > 0 {
                    out.push_str(&format!("ext {} {} {}\n", self.labels[a], self.labels[b], d));
                }
            }
        }
        out
    }
}

impl FromStr for Species {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut entries = Vec::new();
        for line in content_lines(text, SPECIES_TAG)? {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts[..] {
                ["label", l] => {
                    if labels.iter().any(|x| x == l) {
                        return Err(Error::Parse(format!("duplicate label `{}`", l)));
                    }
                    labels.push(l.to_string());
                }
                ["ext", a, b, d] => {
                    let d: usize = d
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad dimension in `{}`", line)))?;
                    entries.push((a.to_string(), b.to_string(), d));
                }
                _ => return Err(Error::Parse(format!("unexpected line `{}`", line))),
            }
        }
        let n = labels.len();
        let mut table = vec![vec![0; n]; n];
        for (a, b, d) in entries {
            let find = |l: &str| {
                labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Error::Parse(format!("unknown label `{}`", l)))
            };
            table[find(&a)?][find(&b)?] = d;
        }
        Species::new(labels, table)
    }
}

/// The species of a family of simples, after checking that the family
/// consists of pairwise orthogonal k-rational points.
pub fn species_of(family: &SimpleFamily) -> Result<Species> {
    let n = family.len();
    let labels: Vec<String> = (0..n).map(|i| family.tag(i).to_string()).collect();
    for i in 0..n {
        for j in 0..n {
            let h = hom_dim(family.object(i), family.object(j))?;
            if i == j && h != 1 {
                return Err(Error::NotKRationalPoint(labels[i].clone()));
            }
            if i != j && h != 0 {
                return Err(Error::NonOrthogonal(labels[i].clone(), labels[j].clone()));
            }
        }
    }
    let mut table = vec![vec![0; n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, d) in row.iter_mut().enumerate() {
            *d = ext1(family.object(i), family.object(j))?.dim();
        }
    }
    Species::new(labels, table)
}

/// The three minimal shapes excluded by (UC).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UcPattern {
    DoubleArrow,
    FanOut,
    FanIn,
}

impl fmt::Display for UcPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            UcPattern::DoubleArrow => "double arrow",
            UcPattern::FanOut => "fan-out",
            UcPattern::FanIn => "fan-in",
        };
        write!(f, "{}", s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UcViolation {
    pub pattern: UcPattern,
    /// Double arrow `[a, b]`; fan-out `[a, b, c]` with `a -> b`, `a -> c`;
    /// fan-in `[a, b, c]` with `a -> c`, `b -> c`.
    pub labels: Vec<String>,
}

impl fmt::Display for UcViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.labels;
        match self.pattern {
            UcPattern::DoubleArrow => write!(f, "double arrow {} => {}", l[0], l[1]),
            UcPattern::FanOut => write!(f, "fan-out {} -> {}, {} -> {}", l[0], l[1], l[0], l[2]),
            UcPattern::FanIn => write!(f, "fan-in {} -> {}, {} -> {}", l[0], l[2], l[1], l[2]),
        }
    }
}

/// `None` when (UC) holds; otherwise one witnessed forbidden shape, looked
/// for in the order double arrow, fan-out, fan-in.
pub fn uc_check(s: &Species) -> Option<UcViolation> {
    let n = s.len();
    let l = |i: usize| s.labels[i].clone();
    for a in 0..n {
        for b in 0..n {
            if s.table[a][b] >= 2 {
                return Some(UcViolation {
                    pattern: UcPattern::DoubleArrow,
                    labels: vec![l(a), l(b)],
                });
            }
        }
    }
    for a in 0..n {
        let targets: Vec<usize> = (0..n).filter(|&b| s.table[a][b] > 0).collect();
        if targets.len() >= 2 {
            return Some(UcViolation {
                pattern: UcPattern::FanOut,
                labels: vec![l(a), l(targets[0]), l(targets[1])],
            });
        }
    }
    for c in 0..n {
        let sources: Vec<usize> = (0..n).filter(|&a| s.table[a][c] > 0).collect();
        if sources.len() >= 2 {
            return Some(UcViolation {
                pattern: UcPattern::FanIn,
                labels: vec![l(sources[0]), l(sources[1]), l(c)],
            });
        }
    }
    None
}

fn require_uc(s: &Species) -> Result<()> {
    match uc_check(s) {
        Some(v) => Err(Error::UcViolated(v.to_string())),
        None => Ok(()),
    }
}

/// All label sequences of length `n` following arrows of the species.
pub fn admissible_paths(s: &Species, n: usize) -> Result<Vec<Vec<usize>>> {
    require_uc(s)?;
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let mut paths: Vec<Vec<usize>> = (0..s.len()).map(|a| vec![a]).collect();
    for _ in 1..n {
        paths = paths
            .into_iter()
            .flat_map(|p| {
                let last = *p.last().unwrap();
                (0..s.len())
                    .filter(move |&b| s.table[last][b] > 0)
                    .map(move |b| {
                        let mut q = p.clone();
                        q.push(b);
                        q
                    })
            })
            .collect();
    }
    Ok(paths)
}

/// How realizability of a path was established.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Realizability {
    /// The category has no `Ext²` (a path quiver without relations, or
    /// graded modules over the Weyl algebra), so no obstruction can occur.
    Hereditary,
    /// Each step was checked by the restriction of Ext classes.
    Checked,
}

pub fn realizability_of(pres_kind: BackendKind, has_relations: bool) -> Realizability {
    match pres_kind {
        BackendKind::WeylWindow { .. } => Realizability::Hereditary,
        BackendKind::Quiver if !has_relations => Realizability::Hereditary,
        BackendKind::Quiver => Realizability::Checked,
    }
}

/// An object built step by step along an order vector.
#[derive(Clone, Debug)]
pub struct Realization {
    /// Family indices `alpha(1), ..., alpha(n)`.
    pub vector: Vec<usize>,
    /// `C_0 = 0, C_1, ..., C_n`.
    pub stages: Vec<QuiverRep>,
    /// `f_i: C_i -> C_{i-1}` at index `i - 1`.
    pub maps: Vec<Morphism>,
    /// `S_{alpha(i)} -> C_i` onto `ker f_i`, at index `i - 1`.
    pub kernels: Vec<Morphism>,
    /// `xi_i` and `tau_i` for `i = 2..n`.
    pub xis: Vec<ExtClass>,
    pub taus: Vec<ExtClass>,
    /// Rank and size of each restriction map `Ext¹(C_{i-1}, K_i) -> Ext¹(K_{i-1}, K_i)`.
    pub restriction_ranks: Vec<(usize, usize, usize)>,
    pub realizability: Realizability,
}

impl Realization {
    pub fn object(&self) -> &QuiverRep {
        self.stages.last().expect("n >= 1")
    }
}

/// The matrix of `xi -> pullback(xi)` from `Ext¹(c, k)` to `Ext¹(k', k)`.
pub fn restriction_matrix(
    source: &std::sync::Arc<crate::abcat::ExtSpace>,
    target: &std::sync::Arc<crate::abcat::ExtSpace>,
    mono: &Morphism,
) -> Result<Matrix> {
    let columns: Vec<Vec<crate::Scalar>> = source
        .basis_classes()
        .iter()
        .map(|xi| Ok(pullback_extension_in(target, xi, mono)?.coordinates()))
        .collect::<Result<_>>()?;
    Ok(Matrix::from_columns(target.dim(), &columns))
}

/// Builds `C_1, ..., C_n` along `v`, extending at each step by the first
/// Ext basis class whose restriction to the previous kernel is nonzero
/// (scaled so that the restriction has leading coordinate 1). `None` when
/// some step admits no such class.
pub fn realize_vector(v: &[usize], species: &Species, family: &SimpleFamily) -> Result<Option<Realization>> {
    if v.is_empty() {
        return Err(Error::ZeroLength);
    }
    for i in 1..v.len() {
        if species.dim(v[i - 1], v[i]) == 0 {
            return Err(Error::NotAPath(i + 1));
        }
    }
    let first = family.object(v[0]).clone();
    let pres = first.presentation().clone();
    let realizability = realizability_of(pres.kind(), !pres.relations().is_empty());
    let mut stages = vec![QuiverRep::zero(pres), first.clone()];
    let mut maps = vec![Morphism::zero(&first, &stages[0])?];
    let mut kernels = vec![Morphism::identity(&first)];
    let (mut xis, mut taus, mut ranks) = (Vec::new(), Vec::new(), Vec::new());
    for i in 1..v.len() {
        let k = family.object(v[i]);
        let c_prev = stages.last().unwrap().clone();
        let space = ext1(&c_prev, k)?;
        let prev_kernel = kernels.last().unwrap();
        let restricted = ext1(prev_kernel.source(), k)?;
        let r = restriction_matrix(&space, &restricted, prev_kernel)?;
        ranks.push((r.rank(), restricted.dim(), space.dim()));
        let mut chosen = None;
        for (j, xi) in space.basis_classes().into_iter().enumerate() {
            let col = r.column(j);
            if let Some(lead) = col.iter().find(|c| !c.is_zero()) {
                chosen = Some(xi.scale(&lead.inv().expect("nonzero")));
                break;
            }
        }
        let Some(xi) = chosen else {
            return Ok(None);
        };
        let tau = pullback_extension_in(&restricted, &xi, prev_kernel)?;
        let ses = realize_extension(&xi)?;
        stages.push(ses.middle);
        maps.push(ses.surj);
        kernels.push(ses.inj);
        xis.push(xi);
        taus.push(tau);
    }
    Ok(Some(Realization {
        vector: v.to_vec(),
        stages,
        maps,
        kernels,
        xis,
        taus,
        restriction_ranks: ranks,
        realizability,
    }))
}

/// A classified indecomposable with its certificates.
#[derive(Clone, Debug)]
pub struct Classified {
    pub realization: Realization,
    pub end: EndCertificate,
    pub indecomposable: bool,
    /// Factors of the unique composition series (top first), if uniserial.
    pub uniserial_factors: Option<Vec<usize>>,
}

impl Classified {
    pub fn object(&self) -> &QuiverRep {
        self.realization.object()
    }

    pub fn vector(&self) -> &[usize] {
        &self.realization.vector
    }

    /// Indecomposable, uniserial, and the series reads back the vector.
    pub fn certified(&self) -> bool {
        self.indecomposable && self.uniserial_factors.as_deref() == Some(self.vector())
    }
}

/// Indecomposables of length `n`, one per realizable admissible vector
/// (optionally only those starting at `start`), without repeated
/// isomorphism classes.
pub fn classify(
    species: &Species,
    family: &SimpleFamily,
    n: usize,
    start: Option<usize>,
) -> Result<Vec<Classified>> {
    if species.len() != family.len() {
        return Err(Error::DimensionMismatch("species and family differ in size".into()));
    }
    let mut out: Vec<Classified> = Vec::new();
    for v in admissible_paths(species, n)? {
        if start.is_some_and(|s| v[0] != s) {
            continue;
        }
        let Some(realization) = realize_vector(&v, species, family)? else {
            continue;
        };
        let (indecomposable, end) = is_indecomposable(realization.object())?;
        let uniserial_factors = is_uniserial(realization.object(), family)?.map(|s| s.factors);
        let candidate = Classified {
            realization,
            end,
            indecomposable,
            uniserial_factors,
        };
        let mut duplicate = false;
        if candidate.indecomposable {
            for c in out.iter().filter(|c| c.indecomposable) {
                if are_isomorphic(c.object(), candidate.object())? {
                    duplicate = true;
                    break;
                }
            }
        }
        if !duplicate {
            out.push(candidate);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverrep::QuiverPresentation;
    use std::sync::Arc;

    fn species(labels: &[&str], table: Vec<Vec<usize>>) -> Species {
        Species::new(labels.iter().map(|s| s.to_string()).collect(), table).unwrap()
    }

    #[test]
    fn uc_patterns() {
        let kron = species(&["1", "2"], vec![vec![0, 2], vec![0, 0]]);
        assert_eq!(uc_check(&kron).unwrap().pattern, UcPattern::DoubleArrow);
        let out = species(&["u", "s", "t"], vec![vec![0, 1, 1], vec![0, 0, 0], vec![0, 0, 0]]);
        assert_eq!(uc_check(&out).unwrap().pattern, UcPattern::FanOut);
        let fan_in = species(&["s", "t", "u"], vec![vec![0, 0, 1], vec![0, 0, 1], vec![0, 0, 0]]);
        let v = uc_check(&fan_in).unwrap();
        assert_eq!(v.pattern, UcPattern::FanIn);
        assert_eq!(v.labels, vec!["s", "t", "u"]);
        let loop2 = species(&["a"], vec![vec![2]]);
        assert_eq!(uc_check(&loop2).unwrap().pattern, UcPattern::DoubleArrow);
        assert!(uc_check(&species(&["a", "b"], vec![vec![0, 1], vec![1, 0]])).is_none());
    }

    #[test]
    fn paths() {
        let s = species(&["a", "b"], vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(admissible_paths(&s, 3).unwrap(), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        assert_eq!(admissible_paths(&s, 1).unwrap().len(), 2);
        let none = species(&["a", "b"], vec![vec![0, 0], vec![0, 0]]);
        assert!(admissible_paths(&none, 2).unwrap().is_empty());
        let kron = species(&["1", "2"], vec![vec![0, 2], vec![0, 0]]);
        assert!(matches!(admissible_paths(&kron, 2), Err(Error::UcViolated(_))));
    }

    #[test]
    fn species_file_round_trip() {
        let s = species(&["1", "2"], vec![vec![0, 2], vec![1, 0]]);
        let back: Species = s.to_text().parse().unwrap();
        assert_eq!(back, s);
        assert!("%lencat-species 1\nlabel a\next a b 1\n".parse::<Species>().is_err());
        assert!("label a\n".parse::<Species>().is_err());
    }

    #[test]
    fn linear_quiver_classification() {
        let pres = Arc::new(QuiverPresentation::linear(2));
        let fam = SimpleFamily::nodes(&pres);
        let s = species_of(&fam).unwrap();
        assert_eq!(s.table(), &[vec![0, 1], vec![0, 0]]);
        let out = classify(&s, &fam, 2, None).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].certified());
        assert_eq!(out[0].realization.realizability, Realizability::Hereditary);
    }

    #[test]
    fn truncated_loops() {
        for (k, expect) in [(2usize, false), (3, true)] {
            let pres = Arc::new(QuiverPresentation::truncated_loop(k));
            let fam = SimpleFamily::nodes(&pres);
            let s = species_of(&fam).unwrap();
            assert_eq!(s.table(), &[vec![1]]);
            let r = realize_vector(&[0, 0, 0], &s, &fam).unwrap();
            assert_eq!(r.is_some(), expect, "x^{} = 0", k);
            let r2 = realize_vector(&[0, 0], &s, &fam).unwrap().unwrap();
            assert_eq!(r2.realizability, Realizability::Checked);
        }
    }
}
