//! The catalog of indecomposable graded D-modules of finite length and an
//! end-to-end check of the classification against it.
//!
//! `M(alpha, n) = D/D(E - alpha)^n` for `alpha` in J*, and
//! `M(beta, n) = D/D w(beta, n)` for the alternating word of length `n`
//! ending in `d` (`beta = 0`) or `t` (`beta = inf`), twisted by `[s]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abcat::{
    are_isomorphic, composition_series, ext1, extension_class_of, hom_basis, is_uniserial, ExtClass, Morphism,
    SimpleFamily, SimpleTag,
};
use crate::error::{Error, Result};
use crate::gradedrep::{GradedRep, TwistedSimple, WeylLabel, DEFAULT_MARGIN};
use crate::linalg::Scalar;
use crate::species::{classify, species_of, Species};
use crate::weyl::{alternating_word, euler_power, Boundary};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogKind {
    Euler(Scalar),
    Word(Boundary),
}

/// Identifies `M(label, n)[twist]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CatalogKey {
    pub kind: CatalogKind,
    pub n: u32,
    pub twist: i64,
}

impl CatalogKey {
    pub fn new(label: &WeylLabel, n: u32, twist: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let kind = match label {
            WeylLabel::Alpha(a) => {
                WeylLabel::alpha(a.clone())?;
                CatalogKind::Euler(a.clone())
            }
            WeylLabel::Zero => CatalogKind::Word(Boundary::Zero),
            WeylLabel::Infinity => CatalogKind::Word(Boundary::Infinity),
        };
        Ok(CatalogKey { kind, n, twist })
    }

    pub fn label(&self) -> WeylLabel {
        match &self.kind {
            CatalogKind::Euler(a) => WeylLabel::Alpha(a.clone()),
            CatalogKind::Word(b) => (*b).into(),
        }
    }

    /// The window `[lo, hi]` must reach `n + margin` past the generator
    /// weight `-twist` on both sides.
    pub fn required_window(&self, margin: i64) -> (i64, i64) {
        let g = -self.twist;
        let reach = self.n as i64 + margin;
        (g - reach, g + reach)
    }

    /// `[-(n+4), n+4]` around the generator.
    pub fn default_window(&self) -> (i64, i64) {
        self.required_window(DEFAULT_MARGIN + 2)
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})[{}]", self.label(), self.n, self.twist)
    }
}

/// Splits `M(label,n)[twist]` into its parts, the twist suffix optional.
fn split_key(s: &str) -> Result<(&str, u32, i64)> {
    let bad = || Error::Parse(format!("expected M(label,n)[twist], got `{}`", s));
    let s = s.trim();
    let body = s.strip_prefix("M(").ok_or_else(bad)?;
    let close = body.rfind(')').ok_or_else(bad)?;
    let (inner, rest) = (&body[..close], &body[close + 1..]);
    let comma = inner.rfind(',').ok_or_else(bad)?;
    let n: u32 = inner[comma + 1..].trim().parse().map_err(|_| bad())?;
    let twist = if rest.is_empty() {
        0
    } else {
        rest.strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?
    };
    Ok((inner[..comma].trim(), n, twist))
}

impl CatalogKey {
    /// Like `parse`, but an `alpha` outside J* is moved into it with
    /// [`normalize_alpha`]; the integer shift is returned and already
    /// added to the twist.
    pub fn parse_normalized(s: &str) -> Result<(CatalogKey, i64)> {
        let (label, n, twist) = split_key(s)?;
        match label.parse::<WeylLabel>() {
            Ok(l) => Ok((CatalogKey::new(&l, n, twist)?, 0)),
            Err(Error::NotInJStar(_)) => {
                let (alpha, m) = normalize_alpha(&label.parse()?)?;
                Ok((CatalogKey::new(&WeylLabel::Alpha(alpha), n, twist + m)?, m))
            }
            Err(e) => Err(e),
        }
    }
}

impl FromStr for CatalogKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (label, n, twist) = split_key(s)?;
        CatalogKey::new(&label.parse()?, n, twist)
    }
}

impl Serialize for CatalogKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CatalogKey {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Moves `alpha` into J* by an integer shift `m`, returning `(alpha - m, m)`
/// with `D/D(E - alpha)^n` isomorphic to `M(alpha - m, n)[m]`. Integer
/// `alpha` has no Euler-type normal form and is refused.
pub fn normalize_alpha(alpha: &Scalar) -> Result<(Scalar, i64)> {
    use num_traits::ToPrimitive;
    if alpha.is_real() && alpha.as_integer().is_some() {
        return Err(Error::NotInJStar(alpha.to_string()));
    }
    let m = alpha
        .re()
        .floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Parse(format!("{} is out of range", alpha)))?;
    let shifted = alpha - &Scalar::from_int(m);
    Ok((shifted, m))
}

/// The catalog module on `[lo, hi]`.
pub fn catalog_module(key: &CatalogKey, lo: i64, hi: i64, margin: i64) -> Result<GradedRep> {
    let (need_lo, need_hi) = key.required_window(margin);
    if lo > need_lo || hi < need_hi {
        return Err(Error::WindowTooSmall {
            lo,
            hi,
            need_lo,
            need_hi,
        });
    }
    let p = match &key.kind {
        CatalogKind::Euler(a) => euler_power(a, key.n)?,
        CatalogKind::Word(b) => alternating_word(*b, key.n)?,
    };
    Ok(GradedRep::ideal_quotient(&p, lo + key.twist, hi + key.twist)?.twist(key.twist))
}

/// Composition factors of the catalog module, top first.
pub fn expected_factors(key: &CatalogKey) -> Vec<TwistedSimple> {
    let w = key.twist;
    (1..=key.n)
        .map(|i| {
            let odd = i % 2 == 1;
            match &key.kind {
                CatalogKind::Euler(a) => TwistedSimple::new(WeylLabel::Alpha(a.clone()), w),
                CatalogKind::Word(Boundary::Zero) if odd => TwistedSimple::new(WeylLabel::Zero, w),
                CatalogKind::Word(Boundary::Zero) => TwistedSimple::new(WeylLabel::Infinity, w + 1),
                CatalogKind::Word(Boundary::Infinity) if odd => TwistedSimple::new(WeylLabel::Infinity, w),
                CatalogKind::Word(Boundary::Infinity) => TwistedSimple::new(WeylLabel::Zero, w - 1),
            }
        })
        .collect()
}

/// The simples `M_label[s]` for `s` in `-1, 0, 1`, which contain every
/// factor of a catalog module of twist 0.
pub fn weyl_family(labels: &[WeylLabel], lo: i64, hi: i64) -> Result<SimpleFamily> {
    SimpleFamily::weyl_twists(labels, &[-1, 0, 1], lo, hi)
}

/// Predicted `dim Ext^1(M_a, M_b[dw])`. Under the twist convention the
/// generator of `M_b[dw]` sits at weight `-dw`, which puts the `(0, inf)`
/// extension at `dw = +1` and its mirror at `dw = -1`.
pub fn predicted_ext(a: &WeylLabel, b: &WeylLabel, dw: i64) -> usize {
    match (a, b) {
        (WeylLabel::Alpha(x), WeylLabel::Alpha(y)) => usize::from(x == y && dw == 0),
        (WeylLabel::Zero, WeylLabel::Infinity) => usize::from(dw == 1),
        (WeylLabel::Infinity, WeylLabel::Zero) => usize::from(dw == -1),
        _ => 0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtEntry {
    pub source: TwistedSimple,
    pub target: TwistedSimple,
    pub dim: usize,
    pub predicted: usize,
}

impl ExtEntry {
    pub fn deviates(&self) -> bool {
        self.dim != self.predicted
    }
}

/// `dim Ext^1(M_a[0], M_b[dw])` for all label pairs and `|dw| <= max_offset`
/// on `[lo, hi]`, which must leave `margin` weights beyond the offsets.
pub fn ext_table(labels: &[WeylLabel], max_offset: i64, lo: i64, hi: i64, margin: i64) -> Result<Vec<ExtEntry>> {
    let reach = max_offset.abs() + margin;
    if lo > -reach || hi < reach {
        return Err(Error::WindowTooSmall {
            lo,
            hi,
            need_lo: -reach,
            need_hi: reach,
        });
    }
    let mut out = Vec::new();
    for a in labels {
        let x = GradedRep::simple(a, 0, lo, hi)?.to_quiver_rep()?;
        for b in labels {
            for dw in -max_offset.abs()..=max_offset.abs() {
                let y = GradedRep::simple(b, dw, lo, hi)?.to_quiver_rep()?;
                out.push(ExtEntry {
                    source: TwistedSimple::new(a.clone(), 0),
                    target: TwistedSimple::new(b.clone(), dw),
                    dim: ext1(&x, &y)?.dim(),
                    predicted: predicted_ext(a, b, dw),
                });
            }
        }
    }
    Ok(out)
}

/// The class of `0 -> M_alpha -> M(alpha, n) -> M(alpha, n-1) -> 0`,
/// built from a surjection between the catalog modules. Returns the class
/// and the kernel's tag in `family`.
pub fn euler_sequence_class(
    alpha: &Scalar,
    n: u32,
    lo: i64,
    hi: i64,
    family: &SimpleFamily,
) -> Result<(ExtClass, SimpleTag)> {
    if n < 2 {
        return Err(Error::ZeroLength);
    }
    let label = WeylLabel::alpha(alpha.clone())?;
    let big = catalog_module(&CatalogKey::new(&label, n, 0)?, lo, hi, DEFAULT_MARGIN)?.to_quiver_rep()?;
    let small = catalog_module(&CatalogKey::new(&label, n - 1, 0)?, lo, hi, DEFAULT_MARGIN)?.to_quiver_rep()?;
    let homs = hom_basis(&big, &small)?;
    let mut candidates = homs.clone();
    if homs.len() > 1 {
        let mut total = homs[0].clone();
        for h in &homs[1..] {
            total = total.add(h)?;
        }
        candidates.push(total);
    }
    let surj: Morphism = candidates
        .into_iter()
        .find(Morphism::is_surjective)
        .ok_or(Error::NotSurjective)?;
    let (k, inc) = surj.kernel()?;
    let idx = family
        .identify(&k)?
        .ok_or_else(|| Error::NotExact("kernel is not a simple of the family".into()))?;
    Ok((extension_class_of(&inc, &surj)?, family.tag(idx).clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub key: CatalogKey,
    pub window: (i64, i64),
    /// Isomorphism classes produced by the classifier from the start simple.
    pub classes: usize,
    pub isomorphic: bool,
    pub uniserial: bool,
    pub factors: Vec<TwistedSimple>,
    pub expected: Vec<TwistedSimple>,
    /// Only for `M(alpha, n)` with `n >= 2`.
    pub nonsplit: Option<bool>,
    pub failures: Vec<String>,
}

impl VerifyEntry {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n_max: u32,
    pub margin: i64,
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(VerifyEntry::passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.entries
            .iter()
            .flat_map(|e| e.failures.iter().map(move |f| format!("{}: {}", e.key, f)))
            .collect()
    }
}

/// Everything needed to check keys of one length on one window.
pub struct WeylSetting {
    pub lo: i64,
    pub hi: i64,
    pub family: SimpleFamily,
    pub species: Species,
}

impl WeylSetting {
    pub fn new(labels: &[WeylLabel], lo: i64, hi: i64) -> Result<Self> {
        let family = weyl_family(labels, lo, hi)?;
        let species = species_of(&family)?;
        Ok(WeylSetting { lo, hi, family, species })
    }
}

fn tags_of(tags: Vec<&SimpleTag>) -> Vec<TwistedSimple> {
    tags.into_iter()
        .filter_map(|t| match t {
            SimpleTag::Weyl(s) => Some(s.clone()),
            SimpleTag::Node(_) => None,
        })
        .collect()
}

/// Checks one key against a given catalog module (normally
/// [`catalog_module`]; a modified one must be reported as a mismatch).
pub fn verify_entry(key: &CatalogKey, catalog: &GradedRep, setting: &WeylSetting) -> Result<VerifyEntry> {
    let mut failures = Vec::new();
    let expected = expected_factors(key);
    let start_tag = SimpleTag::Weyl(TwistedSimple::new(key.label(), key.twist));
    let start = setting
        .family
        .index_of(&start_tag)
        .ok_or_else(|| Error::UnknownNode(start_tag.to_string()))?;
    let classified = classify(&setting.species, &setting.family, key.n as usize, Some(start))?;
    let classes = classified.len();
    if classes != 1 {
        failures.push(format!("classifier produced {} classes", classes));
    }
    for c in &classified {
        if !c.certified() {
            failures.push("classifier output is not certified uniserial".into());
        }
        let got: Vec<TwistedSimple> =
            tags_of(c.vector().iter().map(|&i| setting.family.tag(i)).collect());
        if got != expected {
            failures.push("classifier order vector differs from the expected factors".into());
        }
    }
    let mut isomorphic = false;
    let mut uniserial = false;
    let mut factors = Vec::new();
    match catalog.to_quiver_rep() {
        Err(e) => failures.push(format!("catalog module is not a valid module: {}", e)),
        Ok(rep) => {
            if let Some(c) = classified.first() {
                isomorphic = are_isomorphic(c.object(), &rep).unwrap_or(false);
            }
            if !isomorphic {
                failures.push("classifier output is not isomorphic to the catalog module".into());
            }
            match is_uniserial(&rep, &setting.family) {
                Ok(Some(s)) => {
                    uniserial = true;
                    factors = tags_of(s.factor_tags(&setting.family));
                }
                Ok(None) => failures.push("catalog module is not uniserial".into()),
                Err(e) => failures.push(format!("composition series failed: {}", e)),
            }
            if !uniserial {
                if let Ok(s) = composition_series(&rep, &setting.family) {
                    factors = tags_of(s.factor_tags(&setting.family));
                }
            }
            if factors != expected {
                failures.push("composition factors differ from the expected factors".into());
            }
        }
    }
    let nonsplit = match &key.kind {
        CatalogKind::Euler(a) if key.n >= 2 && key.twist == 0 => {
            let ok = match euler_sequence_class(a, key.n, setting.lo, setting.hi, &setting.family) {
                Ok((xi, tag)) => !xi.is_zero() && tag == SimpleTag::Weyl(TwistedSimple::new(key.label(), 0)),
                Err(_) => false,
            };
            if !ok {
                failures.push("the sequence with kernel M_alpha splits".into());
            }
            Some(ok)
        }
        _ => None,
    };
    Ok(VerifyEntry {
        key: key.clone(),
        window: (setting.lo, setting.hi),
        classes,
        isomorphic,
        uniserial,
        factors,
        expected,
        nonsplit,
        failures,
    })
}

/// For `n = 1..=n_max` and each start label at twist 0: classifier output,
/// catalog isomorphism, composition factors, and non-splitness. Windows
/// default to `[-(n+4), n+4]`; `enlarge` widens them on both sides, and a
/// fixed `window` must satisfy the margin for `n_max`.
pub fn verify_theorem(
    n_max: u32,
    alphas: &[Scalar],
    window: Option<(i64, i64)>,
    margin: i64,
    enlarge: i64,
) -> Result<VerifyReport> {
    let mut labels: Vec<WeylLabel> = alphas
        .iter()
        .map(|a| WeylLabel::alpha(a.clone()))
        .collect::<Result<_>>()?;
    labels.push(WeylLabel::Zero);
    labels.push(WeylLabel::Infinity);
    let mut entries = Vec::new();
    for n in 1..=n_max {
        let keys: Vec<CatalogKey> = labels
            .iter()
            .map(|l| CatalogKey::new(l, n, 0))
            .collect::<Result<_>>()?;
        let (lo, hi) = match window {
            Some((lo, hi)) => {
                let (need_lo, need_hi) = keys[0].required_window(margin);
                if lo > need_lo || hi < need_hi {
                    return Err(Error::WindowTooSmall {
                        lo,
                        hi,
                        need_lo,
                        need_hi,
                    });
                }
                (lo, hi)
            }
            None => {
                let (lo, hi) = keys[0].default_window();
                (lo - enlarge, hi + enlarge)
            }
        };
        let setting = WeylSetting::new(&labels, lo, hi)?;
        for key in &keys {
            let catalog = catalog_module(key, lo, hi, margin)?;
            entries.push(verify_entry(key, &catalog, &setting)?);
        }
    }
    Ok(VerifyReport {
        n_max,
        margin,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abcat::{is_indecomposable, realize_extension};

    fn half() -> Scalar {
        Scalar::ratio(1, 2)
    }

    #[test]
    fn keys_parse_and_print() {
        let k: CatalogKey = "M(1/2,3)[-1]".parse().unwrap();
        assert_eq!(k.to_string(), "M(1/2,3)[-1]");
        assert_eq!("M(inf,2)".parse::<CatalogKey>().unwrap().to_string(), "M(inf,2)[0]");
        assert!("M(3/2,2)".parse::<CatalogKey>().is_err());
        assert!("M(0,0)".parse::<CatalogKey>().is_err());
    }

    #[test]
    fn normalization_matches_the_raw_quotient() {
        let (lo, hi) = (-9, 9);
        for alpha in [Scalar::ratio(3, 2), Scalar::gaussian(-5, 3, 1, 2)] {
            let (a, s) = normalize_alpha(&alpha).unwrap();
            assert!(crate::gradedrep::in_j_star(&a));
            let raw = GradedRep::ideal_quotient(&euler_power(&alpha, 2).unwrap(), lo, hi).unwrap();
            let key = CatalogKey::new(&WeylLabel::Alpha(a), 2, s).unwrap();
            let cat = catalog_module(&key, lo, hi, 2).unwrap();
            let (x, y) = (raw.to_quiver_rep().unwrap(), cat.to_quiver_rep().unwrap());
            assert!(are_isomorphic(&x, &y).unwrap(), "{} -> {}", alpha, key);
        }
        assert!(normalize_alpha(&Scalar::from_int(2)).is_err());
        let (k, m) = CatalogKey::parse_normalized("M(3/2,2)[1]").unwrap();
        assert_eq!((k.to_string(), m), ("M(1/2,2)[2]".to_string(), 1));
    }

    #[test]
    fn ext_table_refuses_a_thin_window() {
        let labels = [WeylLabel::Zero, WeylLabel::Infinity];
        assert!(matches!(ext_table(&labels, 2, -3, 3, 2), Err(Error::WindowTooSmall { .. })));
        let t = ext_table(&labels, 1, -4, 4, 2).unwrap();
        assert_eq!(t.len(), 12);
        assert!(t.iter().all(|e| !e.deviates()));
    }

    #[test]
    fn expected_factor_shapes() {
        let z = CatalogKey::new(&WeylLabel::Zero, 2, 3).unwrap();
        assert_eq!(
            expected_factors(&z),
            vec![TwistedSimple::new(WeylLabel::Zero, 3), TwistedSimple::new(WeylLabel::Infinity, 4)]
        );
        let i = CatalogKey::new(&WeylLabel::Infinity, 2, 0).unwrap();
        assert_eq!(
            expected_factors(&i),
            vec![TwistedSimple::new(WeylLabel::Infinity, 0), TwistedSimple::new(WeylLabel::Zero, -1)]
        );
    }

    #[test]
    fn catalog_basics() {
        let a = WeylLabel::alpha(half()).unwrap();
        let k1 = CatalogKey::new(&a, 1, 0).unwrap();
        let (lo, hi) = k1.default_window();
        let m = catalog_module(&k1, lo, hi, 2).unwrap();
        assert_eq!(m, GradedRep::simple(&a, 0, lo, hi).unwrap());
        let m0 = catalog_module(&CatalogKey::new(&WeylLabel::Zero, 1, 0).unwrap(), lo, hi, 2).unwrap();
        assert_eq!(m0, GradedRep::simple(&WeylLabel::Zero, 0, lo, hi).unwrap());
        assert!(matches!(catalog_module(&k1, -2, 2, 2), Err(Error::WindowTooSmall { .. })));

        let k3 = CatalogKey::new(&a, 3, 0).unwrap();
        let (lo, hi) = k3.default_window();
        let m3 = catalog_module(&k3, lo, hi, 2).unwrap();
        assert!(m3.dims().iter().all(|&d| d == 3));
    }

    #[test]
    fn self_extension_is_m2() {
        let a = WeylLabel::alpha(half()).unwrap();
        let k2 = CatalogKey::new(&a, 2, 0).unwrap();
        let (lo, hi) = k2.default_window();
        let s = GradedRep::simple(&a, 0, lo, hi).unwrap().to_quiver_rep().unwrap();
        let xi = ext1(&s, &s).unwrap().basis_classes()[0].clone();
        let z = realize_extension(&xi).unwrap().middle;
        let m2 = catalog_module(&k2, lo, hi, 2).unwrap().to_quiver_rep().unwrap();
        assert!(is_indecomposable(&m2).unwrap().0);
        assert!(are_isomorphic(&z, &m2).unwrap());
    }

    #[test]
    fn theorem_small() {
        let report = verify_theorem(2, &[half()], None, 2, 0).unwrap();
        assert!(report.passed(), "{:?}", report.failures());
        assert_eq!(report.entries.len(), 6);
        assert!(matches!(
            verify_theorem(3, &[half()], Some((-3, 3)), 2, 0),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn corrupted_catalog_is_reported() {
        let a = WeylLabel::alpha(half()).unwrap();
        let key = CatalogKey::new(&a, 2, 0).unwrap();
        let (lo, hi) = key.default_window();
        let setting = WeylSetting::new(&[a], lo, hi).unwrap();
        let mut bad = catalog_module(&key, lo, hi, 2).unwrap();
        let t = bad.t_map_mut(0).unwrap();
        t[(0, 0)] += &Scalar::one();
        let entry = verify_entry(&key, &bad, &setting).unwrap();
        assert!(!entry.passed());
    }
}
