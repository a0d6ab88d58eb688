//! Graded `D`-modules truncated to a window of weights.
//!
//! A [`GradedRep`] on the window `[lo, hi]` stores a space per weight, the
//! action of `t` as raising maps `T_w: M_w -> M_{w+1}` and of `d` as lowering
//! maps `P_w: M_w -> M_{w-1}`. Maps leaving the window are absent. At every
//! interior weight `P_{w+1} T_w - T_{w-1} P_w = 1`.
//!
//! Twist convention: `M[s]_w = M_{w+s}`. The simple modules `M_alpha`,
//! `M_0 = D/Dd` and `M_inf = D/Dt` have their generator `1` at weight 0, so
//! in `M[s]` the generator sits at weight `-s`. Under this convention
//! `Ext^1(M_0[w], M_inf[w+1])` and `Ext^1(M_inf[w], M_0[w-1])` are the
//! nonzero boundary extensions.
//!
//! # Text format
//!
//! ```text
//! %lencat-graded-rep 1
//! window LO HI
//! dim W N            one line per weight; missing weights have dimension 0
//! T W RxC: ...       t acting on weight W (W < HI)
//! P W RxC: ...       d acting on weight W (W > LO)
//! ```

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::quiverrep::{content_lines, BackendKind, Path, QuiverPresentation, QuiverRep, Relation};
use crate::weyl::{theta_product, Boundary, EulerPolynomial, WeylElement};

pub const GRADED_REP_TAG: &str = "%lencat-graded-rep 1";

/// The default distance from the window edges below which windowed
/// computations are not trusted.
pub const DEFAULT_MARGIN: i64 = 2;

/// `0 <= Re(alpha) < 1` and `alpha != 0`.
pub fn in_j_star(alpha: &Scalar) -> bool {
    use num_traits::{One, Signed};
    !alpha.is_zero() && !alpha.re().is_negative() && alpha.re() < &num_rational::BigRational::one()
}

/// Labels of the simple graded modules, up to twist.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeylLabel {
    Alpha(Scalar),
    Zero,
    Infinity,
}

impl WeylLabel {
    pub fn alpha(alpha: Scalar) -> Result<Self> {
        if in_j_star(&alpha) {
            Ok(WeylLabel::Alpha(alpha))
        } else {
            Err(Error::NotInJStar(alpha.to_string()))
        }
    }
}

impl From<Boundary> for WeylLabel {
    fn from(b: Boundary) -> Self {
        match b {
            Boundary::Zero => WeylLabel::Zero,
            Boundary::Infinity => WeylLabel::Infinity,
        }
    }
}

impl fmt::Display for WeylLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylLabel::Alpha(a) => write!(f, "{}", a),
            WeylLabel::Zero => write!(f, "0"),
            WeylLabel::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for WeylLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0" => Ok(WeylLabel::Zero),
            "inf" | "infinity" | "∞" => Ok(WeylLabel::Infinity),
            other => WeylLabel::alpha(other.parse()?),
        }
    }
}

/// A simple graded module `M_label[twist]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedSimple {
    pub label: WeylLabel,
    pub twist: i64,
}

impl TwistedSimple {
    pub fn new(label: WeylLabel, twist: i64) -> Self {
        TwistedSimple { label, twist }
    }
}

impl fmt::Display for TwistedSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            WeylLabel::Alpha(a) => write!(f, "M_{{{}}}[{}]", a, self.twist),
            other => write!(f, "M_{}[{}]", other, self.twist),
        }
    }
}

impl FromStr for TwistedSimple {
    type Err = Error;

    /// Parses `M_{1/2}[0]`, `M_0[1]`, `M_inf[-1]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{}` is not of the form M_label[twist]", s));
        let body = s.trim().strip_prefix("M_").ok_or_else(bad)?;
        let open = body.rfind('[').ok_or_else(bad)?;
        let twist = body[open + 1..]
            .strip_suffix(']')
            .ok_or_else(bad)?
            .trim()
            .parse::<i64>()
            .map_err(|_| bad())?;
        let label = body[..open].trim_start_matches('{').trim_end_matches('}');
        Ok(TwistedSimple::new(label.parse()?, twist))
    }
}

impl Serialize for TwistedSimple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TwistedSimple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A graded module restricted to the weights `lo..=hi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedRep {
    lo: i64,
    hi: i64,
    dims: Vec<usize>,
    /// `raise[k]` is `T_{lo+k}`, for weights `lo..hi`.
    raise: Vec<Matrix>,
    /// `lower[k]` is `P_{lo+k+1}`, for weights `lo+1..=hi`.
    lower: Vec<Matrix>,
}

/// A problem found by [`GradedRep::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape { weight: i64, map: char },
    WeylRelation { weight: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_window(lo: i64, hi: i64) -> Result<()> {
    if lo > hi {
        return Err(Error::DegenerateWindow { lo, hi });
    }
    Ok(())
}

fn scalar_matrix(rows: usize, cols: usize, s: Scalar) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| s.clone())
}

impl GradedRep {
    /// Assembles a representation, checking only matrix shapes; the Weyl
    /// relation is reported by [`GradedRep::validate`].
    pub fn new(lo: i64, hi: i64, dims: Vec<usize>, raise: Vec<Matrix>, lower: Vec<Matrix>) -> Result<Self> {
        check_window(lo, hi)?;
        let n = (hi - lo) as usize;
        if dims.len() != n + 1 || raise.len() != n || lower.len() != n {
            return Err(Error::DimensionMismatch("graded data does not cover the window".into()));
        }
        let rep = GradedRep { lo, hi, dims, raise, lower };
        if let Some(v) = rep.shape_violations().into_iter().next() {
            return Err(Error::DimensionMismatch(format!("{:?}", v)));
        }
        Ok(rep)
    }

    pub fn zero(lo: i64, hi: i64) -> Result<Self> {
        check_window(lo, hi)?;
        let n = (hi - lo) as usize;
        Ok(GradedRep {
            lo,
            hi,
            dims: vec![0; n + 1],
            raise: vec![Matrix::zeros(0, 0); n],
            lower: vec![Matrix::zeros(0, 0); n],
        })
    }

    fn from_closed_form(
        lo: i64,
        hi: i64,
        dim: impl Fn(i64) -> usize,
        t: impl Fn(i64) -> Scalar,
        d: impl Fn(i64) -> Scalar,
    ) -> Result<Self> {
        check_window(lo, hi)?;
        let dims: Vec<usize> = (lo..=hi).map(&dim).collect();
        let raise = (lo..hi)
            .map(|w| scalar_matrix(dim(w + 1), dim(w), t(w)))
            .collect();
        let lower = (lo + 1..=hi)
            .map(|w| scalar_matrix(dim(w - 1), dim(w), d(w)))
            .collect();
        Ok(GradedRep { lo, hi, dims, raise, lower })
    }

    /// `M_label[twist]` on the window, in the basis given by the images of
    /// `theta_u` (`u = w + twist`).
    pub fn simple(label: &WeylLabel, twist: i64, lo: i64, hi: i64) -> Result<Self> {
        let int = |u: i64| Scalar::from_int(u);
        match label {
            WeylLabel::Alpha(alpha) => {
                if !in_j_star(alpha) {
                    return Err(Error::NotInJStar(alpha.to_string()));
                }
                let a = alpha.clone();
                let b = alpha.clone();
                GradedRep::from_closed_form(
                    lo,
                    hi,
                    |_| 1,
                    move |w| {
                        let u = w + twist;
                        if u >= 0 { Scalar::one() } else { &a + &int(u + 1) }
                    },
                    move |w| {
                        let u = w + twist;
                        if u <= 0 { Scalar::one() } else { &b + &int(u) }
                    },
                )
            }
            WeylLabel::Zero => GradedRep::from_closed_form(
                lo,
                hi,
                |w| usize::from(w + twist >= 0),
                |_| Scalar::one(),
                |w| int(w + twist),
            ),
            WeylLabel::Infinity => GradedRep::from_closed_form(
                lo,
                hi,
                |w| usize::from(w + twist <= 0),
                |w| int(w + twist),
                |_| Scalar::one(),
            ),
        }
    }

    pub fn simple_of(s: &TwistedSimple, lo: i64, hi: i64) -> Result<Self> {
        GradedRep::simple(&s.label, s.twist, lo, hi)
    }

    /// `D/Dp` for a nonzero homogeneous `p`, generator at weight 0.
    ///
    /// Writing `p = theta_e g(E)` and `theta_{w-e} theta_e = theta_w c_w(E)`,
    /// the weight `w` piece is `k[E]/(c_w g)` with basis the residues of
    /// `theta_w E^j`.
    pub fn ideal_quotient(p: &WeylElement, lo: i64, hi: i64) -> Result<Self> {
        check_window(lo, hi)?;
        if p.is_zero() {
            return Err(Error::ZeroElement);
        }
        let (e, g) = p.to_theta_form()?;
        let moduli: Vec<EulerPolynomial> = (lo..=hi + 1)
            .map(|w| theta_product(w - e, e).mul(&g))
            .collect();
        let modulus = |w: i64| &moduli[(w - lo) as usize];
        let dim = |w: i64| modulus(w).degree().expect("nonzero");
        let dims: Vec<usize> = (lo..=hi).map(dim).collect();

        // column j of the action of theta_{step} on weight w
        let action = |w: i64, step: i64| -> Matrix {
            let target = w + step;
            let c = theta_product(step, w);
            let rows = dim(target);
            let columns: Vec<Vec<Scalar>> = (0..dim(w))
                .map(|j| {
                    let mut coeffs = vec![Scalar::zero(); j];
                    coeffs.push(Scalar::one());
                    let r = c.mul(&EulerPolynomial::new(coeffs)).rem(modulus(target));
                    let mut col = r.coefficients().to_vec();
                    col.resize(rows, Scalar::zero());
                    col
                })
                .collect();
            Matrix::from_columns(rows, &columns)
        };
        let raise = (lo..hi).map(|w| action(w, 1)).collect();
        let lower = (lo + 1..=hi).map(|w| action(w, -1)).collect();
        Ok(GradedRep { lo, hi, dims, raise, lower })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn dim(&self, w: i64) -> usize {
        if w < self.lo || w > self.hi {
            0
        } else {
            self.dims[(w - self.lo) as usize]
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `T_w`, absent at the top of the window.
    pub fn t_map(&self, w: i64) -> Option<&Matrix> {
        (w >= self.lo && w < self.hi).then(|| &self.raise[(w - self.lo) as usize])
    }

    /// `P_w`, absent at the bottom of the window.
    pub fn d_map(&self, w: i64) -> Option<&Matrix> {
        (w > self.lo && w <= self.hi).then(|| &self.lower[(w - self.lo - 1) as usize])
    }

    pub fn t_map_mut(&mut self, w: i64) -> Option<&mut Matrix> {
        (w >= self.lo && w < self.hi).then(|| &mut self.raise[(w - self.lo) as usize])
    }

    pub fn d_map_mut(&mut self, w: i64) -> Option<&mut Matrix> {
        (w > self.lo && w <= self.hi).then(|| &mut self.lower[(w - self.lo - 1) as usize])
    }

    /// `E = t d` acting on weight `w` as `T_{w-1} P_w`; absent at the bottom.
    pub fn euler_action(&self, w: i64) -> Option<Matrix> {
        let p = self.d_map(w)?;
        let t = self.t_map(w - 1)?;
        Some(t.mul(p).expect("shapes checked"))
    }

    /// `M[s]`: the piece at new weight `w` is the old piece at `w + s`.
    pub fn twist(&self, s: i64) -> GradedRep {
        GradedRep {
            lo: self.lo - s,
            hi: self.hi - s,
            ..self.clone()
        }
    }

    /// Restriction to a sub-window (zero-padded where it extends beyond).
    pub fn reframe(&self, lo: i64, hi: i64) -> Result<GradedRep> {
        check_window(lo, hi)?;
        let dim = |w: i64| self.dim(w);
        let raise = (lo..hi)
            .map(|w| {
                self.t_map(w)
                    .cloned()
                    .unwrap_or_else(|| Matrix::zeros(dim(w + 1), dim(w)))
            })
            .collect();
        let lower = (lo + 1..=hi)
            .map(|w| {
                self.d_map(w)
                    .cloned()
                    .unwrap_or_else(|| Matrix::zeros(dim(w - 1), dim(w)))
            })
            .collect();
        GradedRep::new(lo, hi, (lo..=hi).map(dim).collect(), raise, lower)
    }

    fn shape_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for w in self.lo..=self.hi {
            if let Some(t) = self.t_map(w) {
                if t.shape() != (self.dim(w + 1), self.dim(w)) {
                    out.push(Violation::Shape { weight: w, map: 'T' });
                }
            }
            if let Some(p) = self.d_map(w) {
                if p.shape() != (self.dim(w - 1), self.dim(w)) {
                    out.push(Violation::Shape { weight: w, map: 'P' });
                }
            }
        }
        out
    }

    /// Shapes and the Weyl relation at interior weights.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = self.shape_violations();
        if violations.is_empty() {
            for w in self.lo + 1..self.hi {
                let up_down = self.d_map(w + 1).unwrap().mul(self.t_map(w).unwrap()).unwrap();
                let down_up = self.t_map(w - 1).unwrap().mul(self.d_map(w).unwrap()).unwrap();
                let comm = up_down.sub(&down_up).unwrap();
                if comm != Matrix::identity(self.dim(w)) {
                    violations.push(Violation::WeylRelation { weight: w });
                }
            }
        }
        ValidationReport { violations }
    }

    /// The same data as a representation of the window quiver.
    pub fn to_quiver_rep(&self) -> Result<QuiverRep> {
        let pres = window_presentation(self.lo, self.hi)?;
        let maps = self.raise.iter().chain(&self.lower).cloned().collect();
        QuiverRep::new(pres, self.dims.clone(), maps)
    }

    /// Inverse of [`GradedRep::to_quiver_rep`].
    pub fn from_quiver_rep(rep: &QuiverRep) -> Result<GradedRep> {
        let BackendKind::WeylWindow { lo, hi } = rep.presentation().kind() else {
            return Err(Error::BackendMismatch);
        };
        let n = (hi - lo) as usize;
        let maps = rep.maps();
        GradedRep::new(
            lo,
            hi,
            rep.dims().to_vec(),
            maps[..n].to_vec(),
            maps[n..].to_vec(),
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\nwindow {} {}\n", GRADED_REP_TAG, self.lo, self.hi);
        for w in self.lo..=self.hi {
            out.push_str(&format!("dim {} {}\n", w, self.dim(w)));
        }
        for w in self.lo..self.hi {
            out.push_str(&format!("T {} {}\n", w, self.t_map(w).unwrap().to_line()));
        }
        for w in self.lo + 1..=self.hi {
            out.push_str(&format!("P {} {}\n", w, self.d_map(w).unwrap().to_line()));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<GradedRep> {
        let lines = content_lines(text, GRADED_REP_TAG)?;
        let mut lines = lines.into_iter();
        let window = lines
            .next()
            .ok_or_else(|| Error::Parse("missing window line".into()))?;
        let parts: Vec<&str> = window.split_whitespace().collect();
        let (lo, hi) = match parts[..] {
            ["window", lo, hi] => (
                lo.parse::<i64>().map_err(|_| Error::Parse(format!("bad window `{}`", window)))?,
                hi.parse::<i64>().map_err(|_| Error::Parse(format!("bad window `{}`", window)))?,
            ),
            _ => return Err(Error::Parse(format!("expected `window LO HI`, found `{}`", window))),
        };
        check_window(lo, hi)?;
        let mut dims: HashMap<i64, usize> = HashMap::new();
        let mut t: HashMap<i64, Matrix> = HashMap::new();
        let mut p: HashMap<i64, Matrix> = HashMap::new();
        for line in lines {
            let mut it = line.splitn(3, char::is_whitespace);
            let (head, w, rest) = (it.next().unwrap_or(""), it.next().unwrap_or(""), it.next().unwrap_or(""));
            let w: i64 = w
                .parse()
                .map_err(|_| Error::Parse(format!("bad weight in `{}`", line)))?;
            if w < lo || w > hi {
                return Err(Error::Parse(format!("weight {} outside the window", w)));
            }
            match head {
                "dim" => {
                    let n = rest
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad dimension in `{}`", line)))?;
                    dims.insert(w, n);
                }
                "T" if w < hi => {
                    t.insert(w, Matrix::parse_line(rest)?);
                }
                "P" if w > lo => {
                    p.insert(w, Matrix::parse_line(rest)?);
                }
                _ => return Err(Error::Parse(format!("unexpected line `{}`", line))),
            }
        }
        let dim = |w: i64| dims.get(&w).copied().unwrap_or(0);
        let raise = (lo..hi)
            .map(|w| t.remove(&w).unwrap_or_else(|| Matrix::zeros(dim(w + 1), dim(w))))
            .collect();
        let lower = (lo + 1..=hi)
            .map(|w| p.remove(&w).unwrap_or_else(|| Matrix::zeros(dim(w - 1), dim(w))))
            .collect();
        GradedRep::new(lo, hi, (lo..=hi).map(dim).collect(), raise, lower)
    }
}

/// The quiver of the window `[lo, hi]`: a node per weight, arrows
/// `t[w]: w -> w+1` and `d[w]: w -> w-1`, and at each interior weight the
/// relation `t[w].d[w+1] - d[w].t[w-1] - e:w`. Presentations are shared.
pub fn window_presentation(lo: i64, hi: i64) -> Result<Arc<QuiverPresentation>> {
    check_window(lo, hi)?;
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), Arc<QuiverPresentation>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().expect("presentation cache");
    if let Some(p) = guard.get(&(lo, hi)) {
        return Ok(p.clone());
    }
    let node = |w: i64| (w - lo) as usize;
    let n = (hi - lo) as usize;
    let nodes = (lo..=hi).map(|w| w.to_string()).collect();
    let arrows = (lo..hi)
        .map(|w| (format!("t[{}]", w), w.to_string(), (w + 1).to_string()))
        .chain((lo + 1..=hi).map(|w| (format!("d[{}]", w), w.to_string(), (w - 1).to_string())))
        .collect();
    let t_arrow = |w: i64| (w - lo) as usize;
    let d_arrow = |w: i64| n + (w - lo - 1) as usize;
    let relations = (lo + 1..hi)
        .map(|w| Relation {
            terms: vec![
                (
                    Scalar::one(),
                    Path {
                        start: node(w),
                        arrows: vec![t_arrow(w), d_arrow(w + 1)],
                    },
                ),
                (
                    Scalar::from_int(-1),
                    Path {
                        start: node(w),
                        arrows: vec![d_arrow(w), t_arrow(w - 1)],
                    },
                ),
                (Scalar::from_int(-1), Path::trivial(node(w))),
            ],
        })
        .collect();
    let pres = Arc::new(
        QuiverPresentation::new(nodes, arrows, relations)?.with_kind(BackendKind::WeylWindow { lo, hi }),
    );
    guard.insert((lo, hi), pres.clone());
    Ok(pres)
}
