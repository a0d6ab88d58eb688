//! Finite-dimensional representations of quivers with relations.
//!
//! # Text formats
//!
//! A presentation file:
//!
//! ```text
//! %lencat-quiver 1
//! # comment
//! node 1
//! node 2
//! arrow a 1 2
//! arrow b 1 2
//! relation a.b - 2*c
//! ```
//!
//! ```text
//! line      := "node" NAME | "arrow" NAME NAME NAME | "relation" sum
//! sum       := ["-"] term ((" + " | " - ") term)*
//! term      := [coef "*"] path
//! coef      := scalar literal, parenthesized when it contains + or *
//! path      := NAME ("." NAME)*        arrows in the order they are applied
//!            | "e:" NAME              the trivial path at a node
//! NAME      := any run of characters other than whitespace . * : ( ) #
//! ```
//!
//! Binary `+` and `-` in a relation must be surrounded by spaces so that
//! names may contain `-`. A representation file repeats the presentation
//! under the tag `%lencat-quiver-rep 1` and adds
//!
//! ```text
//! dim NODE N
//! map ARROW RxC: a b ; c d
//! ```
//!
//! Missing `dim` lines mean 0, missing `map` lines mean the zero matrix.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

pub const QUIVER_TAG: &str = "%lencat-quiver 1";
pub const QUIVER_REP_TAG: &str = "%lencat-quiver-rep 1";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path starting at `start`, arrows listed in the order they are applied.
/// An empty arrow list is the trivial path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(node: usize) -> Self {
        Path {
            start: node,
            arrows: Vec::new(),
        }
    }
}

/// A formal linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

/// Which category a presentation models. Weyl windows come from
/// [`crate::gradedrep`] and carry the window bounds.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum BackendKind {
    Quiver,
    WeylWindow { lo: i64, hi: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverPresentation {
    nodes: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
    kind: BackendKind,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '.' | '*' | ':' | '(' | ')' | '#'))
}

impl QuiverPresentation {
    /// Builds a presentation from node names, `(name, source, target)`
    /// arrow triples and relations over node/arrow indices.
    pub fn new(
        nodes: Vec<String>,
        arrows: Vec<(String, String, String)>,
        relations: Vec<Relation>,
    ) -> Result<Self> {
        let mut pres = QuiverPresentation {
            nodes,
            arrows: Vec::new(),
            relations: Vec::new(),
            kind: BackendKind::Quiver,
        };
        for (i, n) in pres.nodes.iter().enumerate() {
            if !valid_name(n) || pres.nodes[..i].contains(n) {
                return Err(Error::Parse(format!("bad or duplicate node name `{}`", n)));
            }
        }
        for (name, s, t) in arrows {
            if !valid_name(&name) || pres.arrow_index(&name).is_some() {
                return Err(Error::Parse(format!("bad or duplicate arrow name `{}`", name)));
            }
            let source = pres.node_index(&s).ok_or_else(|| Error::UnknownNode(s.clone()))?;
            let target = pres.node_index(&t).ok_or_else(|| Error::UnknownNode(t.clone()))?;
            pres.arrows.push(Arrow {
                name,
                source,
                target,
            });
        }
        for r in relations {
            pres.add_relation(r)?;
        }
        Ok(pres)
    }

    pub(crate) fn with_kind(mut self, kind: BackendKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn add_relation(&mut self, r: Relation) -> Result<()> {
        let mut ends = None;
        for (_, p) in &r.terms {
            let e = (p.start, self.path_target(p)?);
            if *ends.get_or_insert(e) != e {
                return Err(Error::MalformedPath("relation paths are not parallel".into()));
            }
        }
        self.relations.push(r);
        Ok(())
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn kind(&self) -> BackendKind {
        self.kind
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// End node of a path, checking composability.
    pub fn path_target(&self, p: &Path) -> Result<usize> {
        if p.start >= self.nodes.len() {
            return Err(Error::UnknownNode(p.start.to_string()));
        }
        let mut at = p.start;
        for &a in &p.arrows {
            let arrow = self.arrows.get(a).ok_or_else(|| Error::UnknownArrow(a.to_string()))?;
            if arrow.source != at {
                return Err(Error::MalformedPath(format!("arrow {} does not start where the path is", arrow.name)));
            }
            at = arrow.target;
        }
        Ok(at)
    }

    /// Two nodes, two parallel arrows `a, b: 1 -> 2`.
    pub fn kronecker() -> Self {
        QuiverPresentation::new(
            vec!["1".into(), "2".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "1".into(), "2".into()),
            ],
            vec![],
        )
        .expect("valid")
    }

    /// Linearly oriented `A_n`: nodes `1..n`, arrows `a_i: i -> i+1`.
    pub fn linear(n: usize) -> Self {
        let nodes = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| (format!("a{}", i), i.to_string(), (i + 1).to_string()))
            .collect();
        QuiverPresentation::new(nodes, arrows, vec![]).expect("valid")
    }

    /// Nodes `u, s, t` with arrows `p: u -> s`, `q: u -> t`.
    pub fn fan_out() -> Self {
        QuiverPresentation::new(
            vec!["u".into(), "s".into(), "t".into()],
            vec![("p".into(), "u".into(), "s".into()), ("q".into(), "u".into(), "t".into())],
            vec![],
        )
        .expect("valid")
    }

    /// Nodes `s, t, u` with arrows `p: s -> u`, `q: t -> u`.
    pub fn fan_in() -> Self {
        QuiverPresentation::new(
            vec!["s".into(), "t".into(), "u".into()],
            vec![("p".into(), "s".into(), "u".into()), ("q".into(), "t".into(), "u".into())],
            vec![],
        )
        .expect("valid")
    }

    /// One node with a loop `x` subject to `x^k = 0`.
    pub fn truncated_loop(k: usize) -> Self {
        let rel = Relation {
            terms: vec![(
                Scalar::one(),
                Path {
                    start: 0,
                    arrows: vec![0; k],
                },
            )],
        };
        QuiverPresentation::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
            vec![rel],
        )
        .expect("valid")
    }

    pub fn path_to_string(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e:{}", self.nodes[p.start])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    pub fn relation_to_string(&self, r: &Relation) -> String {
        let mut out = String::new();
        for (k, (c, p)) in r.terms.iter().enumerate() {
            let negative = c.is_real() && c.re() < &num_rational::BigRational::from_integer(0.into());
            let shown = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !shown.is_one() {
                if shown.is_real() {
                    out.push_str(&format!("{}*", shown));
                } else {
                    out.push_str(&format!("({})*", shown));
                }
            }
            out.push_str(&self.path_to_string(p));
        }
        out
    }

    fn parse_path(&self, s: &str) -> Result<Path> {
        if let Some(node) = s.strip_prefix("e:") {
            let n = self
                .node_index(node)
                .ok_or_else(|| Error::Parse(format!("unknown node `{}`", node)))?;
            return Ok(Path::trivial(n));
        }
        let arrows: Vec<usize> = s
            .split('.')
            .map(|a| {
                self.arrow_index(a)
                    .ok_or_else(|| Error::Parse(format!("unknown arrow `{}`", a)))
            })
            .collect::<Result<_>>()?;
        let start = self.arrows[arrows[0]].source;
        let p = Path { start, arrows };
        self.path_target(&p)
            .map_err(|_| Error::Parse(format!("arrows in `{}` do not compose", s)))?;
        Ok(p)
    }

    /// Parses the right-hand side of a `relation` line.
    pub fn parse_relation(&self, s: &str) -> Result<Relation> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let mut terms = Vec::new();
        let mut sign = Scalar::one();
        let mut expect_term = true;
        for tok in tokens {
            match (expect_term, tok) {
                (false, "+") => {
                    sign = Scalar::one();
                    expect_term = true;
                }
                (false, "-") => {
                    sign = Scalar::from_int(-1);
                    expect_term = true;
                }
                (true, t) => {
                    let (neg, body) = match t.strip_prefix('-') {
                        Some(rest) if terms.is_empty() => (true, rest),
                        _ => (false, t),
                    };
                    let (coef, path) = match body.rfind('*') {
                        Some(k) => {
                            let lit = body[..k].trim_start_matches('(').trim_end_matches(')');
                            (lit.parse::<Scalar>()?, &body[k + 1..])
                        }
                        None => (Scalar::one(), body),
                    };
                    let coef = if neg { -&coef } else { coef };
                    terms.push((&sign * &coef, self.parse_path(path)?));
                    expect_term = false;
                }
                (false, t) => {
                    return Err(Error::Parse(format!("expected + or - before `{}`", t)));
                }
            }
        }
        if expect_term {
            return Err(Error::Parse(format!("incomplete relation `{}`", s)));
        }
        Ok(Relation { terms })
    }

    fn write_lines(&self, out: &mut String) {
        for n in &self.nodes {
            out.push_str(&format!("node {}\n", n));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "arrow {} {} {}\n",
                a.name, self.nodes[a.source], self.nodes[a.target]
            ));
        }
        for r in &self.relations {
            out.push_str(&format!("relation {}\n", self.relation_to_string(r)));
        }
    }

    /// Consumes `node`/`arrow`/`relation` lines; returns the other lines.
    fn parse_lines<'a>(lines: impl Iterator<Item = &'a str>) -> Result<(Self, Vec<&'a str>)> {
        let mut pres = QuiverPresentation::new(vec![], vec![], vec![])?;
        let mut rest = Vec::new();
        for line in lines {
            let (head, tail) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match head {
                "node" => {
                    let name = tail.trim();
                    if !valid_name(name) || pres.node_index(name).is_some() {
                        return Err(Error::Parse(format!("bad node line `{}`", line)));
                    }
                    pres.nodes.push(name.to_string());
                }
                "arrow" => {
                    let parts: Vec<&str> = tail.split_whitespace().collect();
                    let [name, s, t] = parts[..] else {
                        return Err(Error::Parse(format!("bad arrow line `{}`", line)));
                    };
                    if !valid_name(name) || pres.arrow_index(name).is_some() {
                        return Err(Error::Parse(format!("bad arrow name in `{}`", line)));
                    }
                    let node = |n: &str| {
                        pres.node_index(n)
                            .ok_or_else(|| Error::Parse(format!("unknown node `{}`", n)))
                    };
                    let arrow = Arrow {
                        name: name.to_string(),
                        source: node(s)?,
                        target: node(t)?,
                    };
                    pres.arrows.push(arrow);
                }
                "relation" => {
                    let r = pres.parse_relation(tail)?;
                    pres.add_relation(r)
                        .map_err(|_| Error::Parse(format!("relation paths not parallel: `{}`", line)))?;
                }
                _ => rest.push(line),
            }
        }
        Ok((pres, rest))
    }
}

/// Lines of a text file with comments and blanks removed, after checking
/// the tag on the first line.
pub(crate) fn content_lines<'a>(text: &'a str, tag: &str) -> Result<Vec<&'a str>> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    match lines.next() {
        Some(first) if first == tag => Ok(lines.collect()),
        Some(first) => Err(Error::Parse(format!("expected tag `{}`, found `{}`", tag, first))),
        None => Err(Error::Parse("empty input".into())),
    }
}

impl fmt::Display for QuiverPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = format!("{}\n", QUIVER_TAG);
        self.write_lines(&mut out);
        write!(f, "{}", out)
    }
}

impl FromStr for QuiverPresentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (pres, rest) = QuiverPresentation::parse_lines(content_lines(s, QUIVER_TAG)?.into_iter())?;
        if let Some(line) = rest.first() {
            return Err(Error::Parse(format!("unexpected line `{}`", line)));
        }
        Ok(pres)
    }
}

/// A representation: a vector space `k^{dims[v]}` per node and a
/// `dims[target] x dims[source]` matrix per arrow, satisfying the relations.
#[derive(Clone, Debug)]
pub struct QuiverRep {
    pres: Arc<QuiverPresentation>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for QuiverRep {
    fn eq(&self, other: &Self) -> bool {
        self.same_presentation(other) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for QuiverRep {}

impl QuiverRep {
    /// Validated constructor: checks shapes and every relation.
    pub fn new(pres: Arc<QuiverPresentation>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != pres.nodes.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} nodes",
                dims.len(),
                pres.nodes.len()
            )));
        }
        if maps.len() != pres.arrows.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                maps.len(),
                pres.arrows.len()
            )));
        }
        for (a, m) in pres.arrows.iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = QuiverRep { pres, dims, maps };
        if let Some(r) = rep.first_violated_relation() {
            return Err(Error::RelationViolated(rep.pres.relation_to_string(r)));
        }
        Ok(rep)
    }

    pub fn zero(pres: Arc<QuiverPresentation>) -> Self {
        let dims = vec![0; pres.nodes.len()];
        let maps = vec![Matrix::zeros(0, 0); pres.arrows.len()];
        QuiverRep { pres, dims, maps }
    }

    /// The simple representation at a node: `k` there, zero elsewhere.
    pub fn simple_at(pres: Arc<QuiverPresentation>, node: &str) -> Result<Self> {
        let v = pres.node_index(node).ok_or_else(|| Error::UnknownNode(node.to_string()))?;
        QuiverRep::simple_at_index(pres, v)
    }

    pub fn simple_at_index(pres: Arc<QuiverPresentation>, v: usize) -> Result<Self> {
        if v >= pres.nodes.len() {
            return Err(Error::UnknownNode(v.to_string()));
        }
        let mut dims = vec![0; pres.nodes.len()];
        dims[v] = 1;
        let maps = pres
            .arrows
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        QuiverRep::new(pres, dims, maps)
    }

    pub fn presentation(&self) -> &Arc<QuiverPresentation> {
        &self.pres
    }

    pub fn same_presentation(&self, other: &QuiverRep) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) || self.pres == other.pres
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Start of each node's block in the concatenated vector space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    pub fn eval_path(&self, p: &Path) -> Matrix {
        p.arrows
            .iter()
            .fold(Matrix::identity(self.dims[p.start]), |acc, &a| {
                self.maps[a].mul(&acc).expect("composable path")
            })
    }

    pub fn eval_relation(&self, r: &Relation) -> Matrix {
        let (s, t) = match r.terms.first() {
            Some((_, p)) => (p.start, self.pres.path_target(p).expect("validated")),
            None => return Matrix::zeros(0, 0),
        };
        r.terms
            .iter()
            .fold(Matrix::zeros(self.dims[t], self.dims[s]), |acc, (c, p)| {
                acc.add(&self.eval_path(p).scale(c)).expect("parallel paths")
            })
    }

    fn first_violated_relation(&self) -> Option<&Relation> {
        self.pres
            .relations
            .iter()
            .find(|r| !self.eval_relation(r).is_zero())
    }

    /// Direct sum, with the summands' bases concatenated node by node.
    pub fn direct_sum(&self, other: &QuiverRep) -> Result<QuiverRep> {
        if !self.same_presentation(other) {
            return Err(Error::BackendMismatch);
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| Matrix::block_diag(a, b))
            .collect();
        Ok(QuiverRep {
            pres: self.pres.clone(),
            dims,
            maps,
        })
    }

    /// Same node spaces after the change of basis `g_v` at each node
    /// (new coordinates = `g_v` times old ones).
    pub fn change_basis(&self, g: &[Matrix]) -> Result<QuiverRep> {
        let inverses: Vec<Matrix> = g
            .iter()
            .map(|m| m.inverse().ok_or(Error::NotAMorphism("singular base change".into())))
            .collect::<Result<_>>()?;
        let maps = self
            .pres
            .arrows
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| g[a.target].mul(m)?.mul(&inverses[a.source]))
            .collect::<Result<_>>()?;
        QuiverRep::new(self.pres.clone(), self.dims.clone(), maps)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", QUIVER_REP_TAG);
        self.pres.write_lines(&mut out);
        for (n, d) in self.pres.nodes.iter().zip(&self.dims) {
            out.push_str(&format!("dim {} {}\n", n, d));
        }
        for (a, m) in self.pres.arrows.iter().zip(&self.maps) {
            out.push_str(&format!("map {} {}\n", a.name, m.to_line()));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<QuiverRep> {
        let (pres, rest) = QuiverPresentation::parse_lines(content_lines(text, QUIVER_REP_TAG)?.into_iter())?;
        let mut dims = vec![0; pres.nodes.len()];
        let mut given: Vec<Option<Matrix>> = vec![None; pres.arrows.len()];
        for line in rest {
            let (head, tail) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let tail = tail.trim();
            match head {
                "dim" => {
                    let (node, n) = tail
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| Error::Parse(format!("bad dim line `{}`", line)))?;
                    let v = pres
                        .node_index(node)
                        .ok_or_else(|| Error::Parse(format!("unknown node `{}`", node)))?;
                    dims[v] = n
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad dimension in `{}`", line)))?;
                }
                "map" => {
                    let (name, m) = tail
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| Error::Parse(format!("bad map line `{}`", line)))?;
                    let a = pres
                        .arrow_index(name)
                        .ok_or_else(|| Error::Parse(format!("unknown arrow `{}`", name)))?;
                    given[a] = Some(Matrix::parse_line(m)?);
                }
                _ => return Err(Error::Parse(format!("unexpected line `{}`", line))),
            }
        }
        let maps = pres
            .arrows
            .iter()
            .zip(given)
            .map(|(a, m)| m.unwrap_or_else(|| Matrix::zeros(dims[a.target], dims[a.source])))
            .collect();
        QuiverRep::new(Arc::new(pres), dims, maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_reps() {
        let k = Arc::new(QuiverPresentation::kronecker());
        let z = QuiverRep::new(k.clone(), vec![2, 3], vec![Matrix::zeros(3, 2), Matrix::zeros(3, 2)]);
        assert!(z.is_ok());
        let r = QuiverRep::new(k.clone(), vec![1, 1], vec![Matrix::from_ints(&[&[1]]), Matrix::from_ints(&[&[0]])]);
        assert!(r.is_ok());
        let bad = QuiverRep::new(k.clone(), vec![1, 1], vec![Matrix::zeros(1, 2), Matrix::zeros(1, 1)]);
        assert!(matches!(bad, Err(Error::DimensionMismatch(_))));
        assert_eq!(QuiverRep::simple_at(k.clone(), "1").unwrap().dims(), &[1, 0]);
        assert_eq!(QuiverRep::simple_at(k.clone(), "2").unwrap().dims(), &[0, 1]);
        assert_eq!(QuiverRep::simple_at(k, "3"), Err(Error::UnknownNode("3".into())));
    }

    #[test]
    fn nilpotent_loop_relation() {
        let l = Arc::new(QuiverPresentation::truncated_loop(2));
        assert!(QuiverRep::new(l.clone(), vec![2], vec![Matrix::from_ints(&[&[0, 1], &[0, 0]])]).is_ok());
        let err = QuiverRep::new(l, vec![2], vec![Matrix::identity(2)]).unwrap_err();
        assert_eq!(err, Error::RelationViolated("x.x".into()));
    }

    #[test]
    fn presentation_text_round_trip() {
        let text = "%lencat-quiver 1\n# a square\nnode u\nnode v\nnode w\narrow a u v\narrow b v w\narrow c u w\nrelation a.b - (1/2+i)*c + 3*c\n";
        let p: QuiverPresentation = text.parse().unwrap();
        assert_eq!(p.relations()[0].terms.len(), 3);
        let again: QuiverPresentation = p.to_string().parse().unwrap();
        assert_eq!(p, again);
        assert!("%lencat-quiver 1\nnode u\narrow a u v\n".parse::<QuiverPresentation>().is_err());
        assert!("node u\n".parse::<QuiverPresentation>().is_err());
        assert!("%lencat-quiver 1\nnode u\nnode v\narrow a u v\nrelation a.a\n"
            .parse::<QuiverPresentation>()
            .is_err());
    }

    #[test]
    fn idempotent_terms() {
        let text = "%lencat-quiver 1\nnode 0\nnode 1\narrow t 0 1\narrow d 1 0\nrelation t.d - e:0\n";
        let p = Arc::new(text.parse::<QuiverPresentation>().unwrap());
        let one = Matrix::from_ints(&[&[1]]);
        assert!(QuiverRep::new(p.clone(), vec![1, 1], vec![one.clone(), one.clone()]).is_ok());
        assert!(QuiverRep::new(p, vec![1, 1], vec![one.scale(&Scalar::from_int(2)), one]).is_err());
    }

    #[test]
    fn rep_text_round_trip() {
        let k = Arc::new(QuiverPresentation::kronecker());
        let r = QuiverRep::new(
            k,
            vec![2, 1],
            vec![Matrix::from_ints(&[&[1, 0]]), Matrix::from_ints(&[&[0, 1]])],
        )
        .unwrap();
        let text = r.to_text();
        assert_eq!(QuiverRep::from_text(&text).unwrap(), r);
        assert_eq!(QuiverRep::from_text(&text).unwrap().to_text(), text);
    }
}
