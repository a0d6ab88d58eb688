//! Iterated extensions, their extension types and ordered path algebras,
//! and the correspondence with deformations over those path algebras.
//!
//! An iterated extension of length `n` is a cofiltration
//! `0 = C_0 <- C_1 <- ... <- C_n = X` by surjections `f_i` with simple
//! kernels `K_i`. Nodes of the extension type are the distinct labels in
//! order of first occurrence, so the base node `s` is always node 0.
//!
//! Positions `i = 1..n` are stored 0-based throughout (`K_1` at 0).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::abcat::{
    extension_class_of, hom_basis, pullback_extension, quotient, right_inverse, subobject, ExtClass, Morphism,
    CompositionSeries, SimpleFamily,
};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::quiverrep::QuiverRep;
use crate::species::Realization;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidIteratedExtension(msg.into())
}

/// An iso from the family simple onto the kernel of `f`, composed into
/// the source of `f`.
fn kernel_inclusion(f: &Morphism, family: &SimpleFamily) -> Result<(usize, Morphism)> {
    let (k, inc) = f.kernel()?;
    let idx = family
        .identify(&k)?
        .ok_or_else(|| invalid("kernel is not a simple of the family"))?;
    let iso = hom_basis(family.object(idx), &k)?
        .into_iter()
        .next()
        .expect("identified simple has a nonzero map");
    Ok((idx, iso.then(&inc)?))
}

#[derive(Clone, Debug)]
pub struct IteratedExtension {
    stages: Vec<QuiverRep>,
    maps: Vec<Morphism>,
    kernels: Vec<Morphism>,
    order: Vec<usize>,
}

impl IteratedExtension {
    /// Validates a cofiltration: `C_0 = 0`, each `f_i: C_i -> C_{i-1}`
    /// surjective with kernel isomorphic to a member of `family`.
    pub fn new(family: &SimpleFamily, stages: Vec<QuiverRep>, maps: Vec<Morphism>) -> Result<Self> {
        if stages.len() < 2 {
            return Err(Error::ZeroLength);
        }
        if maps.len() + 1 != stages.len() {
            return Err(invalid("need one map per nonzero stage"));
        }
        if !stages[0].is_zero() {
            return Err(invalid("C_0 must be zero"));
        }
        let mut kernels = Vec::new();
        let mut order = Vec::new();
        for (i, f) in maps.iter().enumerate() {
            if f.source() != &stages[i + 1] || f.target() != &stages[i] {
                return Err(invalid(format!("f_{} does not map C_{} to C_{}", i + 1, i + 1, i)));
            }
            if !f.is_surjective() {
                return Err(invalid(format!("f_{} is not surjective", i + 1)));
            }
            let (idx, inc) = kernel_inclusion(f, family)?;
            order.push(idx);
            kernels.push(inc);
        }
        Ok(IteratedExtension {
            stages,
            maps,
            kernels,
            order,
        })
    }

    pub fn from_series(series: &CompositionSeries, family: &SimpleFamily) -> Result<Self> {
        IteratedExtension::new(family, series.stages.clone(), series.maps.clone())
    }

    pub fn from_realization(r: &Realization) -> Self {
        IteratedExtension {
            stages: r.stages.clone(),
            maps: r.maps.clone(),
            kernels: r.kernels.clone(),
            order: r.vector.clone(),
        }
    }

    pub fn object(&self) -> &QuiverRep {
        self.stages.last().expect("length >= 1")
    }

    pub fn length(&self) -> usize {
        self.order.len()
    }

    /// Family indices `alpha(1), ..., alpha(n)`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn stages(&self) -> &[QuiverRep] {
        &self.stages
    }

    pub fn maps(&self) -> &[Morphism] {
        &self.maps
    }

    /// `S_{alpha(i)} -> C_i` onto `K_i`.
    pub fn kernels(&self) -> &[Morphism] {
        &self.kernels
    }
}

/// A decreasing chain `X = F_0 ⊇ F_1 ⊇ ... ⊇ F_n = 0` of subobjects, as
/// node subspaces of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub object: QuiverRep,
    pub levels: Vec<Vec<Subspace>>,
}

/// `F_i = ker(X -> C_i)`.
pub fn filtration_of(e: &IteratedExtension) -> Result<Filtration> {
    let x = e.object().clone();
    let n = e.length();
    let mut to_stage = Morphism::identity(&x);
    let mut levels = vec![to_stage.kernel_spaces()];
    for i in (1..=n).rev() {
        to_stage = to_stage.then(&e.maps[i - 1])?;
        levels.push(to_stage.kernel_spaces());
    }
    levels.reverse();
    Ok(Filtration { object: x, levels })
}

/// The cofiltration `C_i = X / F_i` of a filtration.
pub fn from_filtration(family: &SimpleFamily, f: &Filtration) -> Result<IteratedExtension> {
    let x = &f.object;
    let n = f.levels.len().checked_sub(1).ok_or(Error::ZeroLength)?;
    let full: Vec<Subspace> = x.dims().iter().map(|&d| Subspace::full(d)).collect();
    let zero: Vec<Subspace> = x.dims().iter().map(|&d| Subspace::zero(d)).collect();
    if f.levels[0] != full || f.levels[n] != zero {
        return Err(invalid("filtration must run from X down to 0"));
    }
    for i in 1..=n {
        for (a, b) in f.levels[i - 1].iter().zip(&f.levels[i]) {
            if !a.contains_subspace(b) {
                return Err(invalid(format!("F_{} is not contained in F_{}", i, i - 1)));
            }
        }
    }
    let quotients: Vec<(QuiverRep, Morphism)> =
        f.levels.iter().map(|l| quotient(x, l)).collect::<Result<_>>()?;
    let mut maps = Vec::new();
    for i in 1..=n {
        let (ci, pi) = &quotients[i];
        let (cp, pp) = &quotients[i - 1];
        let blocks = pi
            .blocks()
            .iter()
            .zip(pp.blocks())
            .map(|(p, q)| q.mul(&right_inverse(p)?))
            .collect::<Result<Vec<_>>>()?;
        maps.push(Morphism::new(ci.clone(), cp.clone(), blocks)?);
    }
    let stages = quotients.into_iter().map(|(q, _)| q).collect();
    IteratedExtension::new(family, stages, maps)
}

/// The iterated extension on the middle of `0 -> X' -> X -> X'' -> 0`
/// whose factors are those of `e2` (on `X''`) followed by those of `e1`
/// (on `X'`).
pub fn splice(
    family: &SimpleFamily,
    e1: &IteratedExtension,
    e2: &IteratedExtension,
    inj: &Morphism,
    surj: &Morphism,
) -> Result<IteratedExtension> {
    crate::abcat::check_short_exact(inj, surj)?;
    if inj.source() != e1.object() || surj.target() != e2.object() {
        return Err(Error::BackendMismatch);
    }
    let f1 = filtration_of(e1)?;
    let f2 = filtration_of(e2)?;
    let mut levels = Vec::new();
    for l in &f2.levels {
        levels.push(
            l.iter()
                .zip(surj.blocks())
                .map(|(s, g)| s.preimage(g))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    for l in &f1.levels[1..] {
        levels.push(
            l.iter()
                .zip(inj.blocks())
                .map(|(s, g)| s.image(g))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    from_filtration(
        family,
        &Filtration {
            object: inj.target().clone(),
            levels,
        },
    )
}

/// `(xi_2..xi_n, tau_2..tau_n)`: `xi_i` is the class of
/// `0 -> K_i -> C_i -> C_{i-1} -> 0` and `tau_i` its pullback along
/// `K_{i-1} -> C_{i-1}`.
pub fn extension_classes(e: &IteratedExtension) -> Result<(Vec<ExtClass>, Vec<ExtClass>)> {
    let mut xis = Vec::new();
    let mut taus = Vec::new();
    for i in 1..e.length() {
        let xi = extension_class_of(&e.kernels[i], &e.maps[i])?;
        taus.push(pullback_extension(&xi, &e.kernels[i - 1])?);
        xis.push(xi);
    }
    Ok((xis, taus))
}

/// The ordered quiver of an order vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionType {
    /// Distinct labels in order of first occurrence.
    pub nodes: Vec<String>,
    /// Node of each position; edge `i` runs from `positions[i]` to
    /// `positions[i + 1]` and edges are ordered by `i`.
    pub positions: Vec<usize>,
}

impl ExtensionType {
    pub fn from_labels(labels: &[String]) -> Self {
        let mut nodes: Vec<String> = Vec::new();
        let positions = labels
            .iter()
            .map(|l| match nodes.iter().position(|n| n == l) {
                Some(i) => i,
                None => {
                    nodes.push(l.clone());
                    nodes.len() - 1
                }
            })
            .collect();
        ExtensionType { nodes, positions }
    }

    pub fn length(&self) -> usize {
        self.positions.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.positions.windows(2).map(|w| (w[0], w[1])).collect()
    }

    /// The node `s` carrying the top factor.
    pub fn base(&self) -> usize {
        self.positions[0]
    }
}

pub fn extension_type(e: &IteratedExtension, family: &SimpleFamily) -> ExtensionType {
    let labels: Vec<String> = e.order.iter().map(|&i| family.tag(i).to_string()).collect();
    ExtensionType::from_labels(&labels)
}

/// Basis elements of `k[Γ]`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PathBasis {
    Idempotent(usize),
    /// `γ_{i,i+1} ⋯ γ_{j-1,j}` for positions `i < j`.
    Run(usize, usize),
}

/// The path algebra of an extension type: paths compose by juxtaposition
/// of consecutive edge runs, everything else multiplies to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathAlgebra {
    pub gamma: ExtensionType,
    pub basis: Vec<PathBasis>,
}

impl PathAlgebra {
    pub fn new(gamma: &ExtensionType) -> Self {
        let n = gamma.length();
        let mut basis: Vec<PathBasis> = (0..gamma.nodes.len()).map(PathBasis::Idempotent).collect();
        for i in 0..n {
            for j in i + 1..n {
                basis.push(PathBasis::Run(i, j));
            }
        }
        PathAlgebra {
            gamma: gamma.clone(),
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn source(&self, b: PathBasis) -> usize {
        match b {
            PathBasis::Idempotent(u) => u,
            PathBasis::Run(i, _) => self.gamma.positions[i],
        }
    }

    pub fn target(&self, b: PathBasis) -> usize {
        match b {
            PathBasis::Idempotent(u) => u,
            PathBasis::Run(_, j) => self.gamma.positions[j],
        }
    }

    pub fn index(&self, b: PathBasis) -> usize {
        self.basis.iter().position(|&x| x == b).expect("basis element")
    }

    /// Product `x · y` (first `x`, then `y`).
    pub fn mul(&self, x: PathBasis, y: PathBasis) -> Option<PathBasis> {
        use PathBasis::*;
        match (x, y) {
            (Idempotent(u), Idempotent(v)) => (u == v).then_some(x),
            (Idempotent(u), Run(..)) => (self.source(y) == u).then_some(y),
            (Run(..), Idempotent(v)) => (self.target(x) == v).then_some(x),
            (Run(i, j), Run(k, l)) => (j == k).then_some(Run(i, l)),
        }
    }

    /// `table[a][b]` is the index of `basis[a] · basis[b]`, if nonzero.
    pub fn structure_constants(&self) -> Vec<Vec<Option<usize>>> {
        self.basis
            .iter()
            .map(|&x| {
                self.basis
                    .iter()
                    .map(|&y| self.mul(x, y).map(|z| self.index(z)))
                    .collect()
            })
            .collect()
    }

    /// Dimensions of `I, I^2, ..., I^n` for the ideal `I` spanned by runs,
    /// computed by multiplying out products of basis runs.
    pub fn radical_power_dims(&self) -> Vec<usize> {
        let runs: Vec<PathBasis> = self
            .basis
            .iter()
            .copied()
            .filter(|b| matches!(b, PathBasis::Run(..)))
            .collect();
        let mut power = runs.clone();
        let mut dims = vec![power.len()];
        for _ in 1..self.gamma.length().max(1) {
            let mut next: Vec<PathBasis> = Vec::new();
            for &x in &power {
                for &y in &runs {
                    if let Some(z) = self.mul(x, y) {
                        if !next.contains(&z) {
                            next.push(z);
                        }
                    }
                }
            }
            power = next;
            dims.push(power.len());
        }
        dims
    }
}

/// `X_Γ = (k[Γ]_{uj} ⊗ X_j)` with right action corrected by `ψ`.
#[derive(Clone, Debug)]
pub struct DeformationModule {
    pub algebra: PathAlgebra,
    /// Family index of the simple `X_j` at each node of Γ.
    pub members: Vec<usize>,
    pub simples: Vec<QuiverRep>,
    /// `ψ^{il}_a: K_i -> K_l` per arrow `a`, for positions `i < l`.
    pub psi: BTreeMap<(usize, usize), Vec<Matrix>>,
    /// Basis paths starting at each node, in block order.
    pub paths: Vec<Vec<PathBasis>>,
    /// `X_Γ(u) = e_u X_Γ` for each node `u`.
    pub components: Vec<QuiverRep>,
}

impl DeformationModule {
    /// Assembles the components and checks the backend relations on each.
    pub fn new(
        algebra: PathAlgebra,
        members: Vec<usize>,
        family: &SimpleFamily,
        psi: BTreeMap<(usize, usize), Vec<Matrix>>,
    ) -> Result<Self> {
        let simples: Vec<QuiverRep> = members.iter().map(|&m| family.object(m).clone()).collect();
        if simples.len() != algebra.gamma.nodes.len() {
            return Err(invalid("one simple per node of the extension type"));
        }
        let pres = simples[0].presentation().clone();
        let mut paths = Vec::new();
        let mut components = Vec::new();
        for u in 0..simples.len() {
            let from_u: Vec<PathBasis> = algebra
                .basis
                .iter()
                .copied()
                .filter(|&b| algebra.source(b) == u)
                .collect();
            let nv = pres.nodes().len();
            let mut offsets = vec![Vec::new(); nv];
            let mut dims = vec![0; nv];
            for &p in &from_u {
                let x = &simples[algebra.target(p)];
                for v in 0..nv {
                    offsets[v].push(dims[v]);
                    dims[v] += x.dims()[v];
                }
            }
            let mut maps = Vec::new();
            for (a, arrow) in pres.arrows().iter().enumerate() {
                let (s, t) = (arrow.source, arrow.target);
                let mut m = Matrix::zeros(dims[t], dims[s]);
                let mut place = |row: usize, col: usize, block: &Matrix| {
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m[(row + r, col + c)] += &block[(r, c)];
                        }
                    }
                };
                for (pi, &p) in from_u.iter().enumerate() {
                    place(offsets[t][pi], offsets[s][pi], simples[algebra.target(p)].map(a));
                    for (&(i, l), blocks) in &psi {
                        if let Some(q) = algebra.mul(p, PathBasis::Run(i, l)) {
                            let qi = from_u.iter().position(|&b| b == q).expect("path from u");
                            if blocks[a].shape() != (simples[algebra.target(q)].dims()[t], simples[algebra.target(p)].dims()[s]) {
                                return Err(Error::DimensionMismatch(format!("psi ({}, {}) has the wrong shape", i, l)));
                            }
                            place(offsets[t][qi], offsets[s][pi], &blocks[a]);
                        }
                    }
                }
                maps.push(m);
            }
            components.push(QuiverRep::new(pres.clone(), dims, maps)?);
            paths.push(from_u);
        }
        Ok(DeformationModule {
            algebra,
            members,
            simples,
            psi,
            paths,
            components,
        })
    }

    pub fn base(&self) -> usize {
        self.algebra.gamma.base()
    }

    /// Per node `u`: the component's total dimension and
    /// `Σ_j dim k[Γ]_{uj} · dim X_j` counted from the path algebra.
    pub fn flatness(&self) -> Vec<(usize, usize)> {
        let r = self.simples.len();
        (0..r)
            .map(|u| {
                let expected = (0..r)
                    .map(|j| {
                        let kij = self
                            .algebra
                            .basis
                            .iter()
                            .filter(|&&b| self.algebra.source(b) == u && self.algebra.target(b) == j)
                            .count();
                        kij * self.simples[j].total_dim()
                    })
                    .sum();
                (self.components[u].total_dim(), expected)
            })
            .collect()
    }

    pub fn is_flat(&self) -> bool {
        self.flatness().iter().all(|(a, b)| a == b)
    }

    /// True when every correction map vanishes.
    pub fn is_trivial(&self) -> bool {
        self.psi.values().all(|bs| bs.iter().all(Matrix::is_zero))
    }
}

/// Splits `X ≅ K_1 ⊕ ... ⊕ K_n` along the filtration and reads the
/// off-diagonal blocks of the structure maps as `ψ`.
pub fn to_deformation(e: &IteratedExtension, family: &SimpleFamily) -> Result<DeformationModule> {
    let gamma = extension_type(e, family);
    let filt = filtration_of(e)?;
    let x = &filt.object;
    let n = e.length();
    let nv = x.dims().len();
    // lifts[i][v]: columns spanning a complement of F_{i+1} in F_i, matched
    // with the basis of S_{alpha(i+1)}
    let mut lifts: Vec<Vec<Matrix>> = Vec::new();
    for i in 0..n {
        let (a, inc_a) = subobject(x, &filt.levels[i])?;
        let inner: Vec<Subspace> = filt.levels[i + 1]
            .iter()
            .zip(inc_a.blocks())
            .map(|(s, b)| s.preimage(b))
            .collect::<Result<_>>()?;
        let (q, pi) = quotient(&a, &inner)?;
        let s = family.object(e.order[i]);
        let iso = hom_basis(s, &q)?
            .into_iter()
            .find(Morphism::is_isomorphism)
            .ok_or_else(|| invalid(format!("factor {} is not the expected simple", i + 1)))?;
        let mut per_node = Vec::new();
        for v in 0..nv {
            per_node.push(inc_a.block(v).mul(&right_inverse(pi.block(v))?)?.mul(iso.block(v))?);
        }
        lifts.push(per_node);
    }
    let mut to_split = Vec::new();
    let mut offsets = vec![vec![0; n + 1]; nv];
    for v in 0..nv {
        let mut p = Matrix::zeros(x.dims()[v], 0);
        for i in 0..n {
            offsets[v][i + 1] = offsets[v][i] + lifts[i][v].cols();
            p = p.hstack(&lifts[i][v])?;
        }
        to_split.push(p.inverse().ok_or_else(|| invalid("lifts do not form a basis"))?);
    }
    let split = x.change_basis(&to_split)?;
    let pres = x.presentation();
    let mut psi: BTreeMap<(usize, usize), Vec<Matrix>> = BTreeMap::new();
    for (a, arrow) in pres.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let m = split.map(a);
        for i in 0..n {
            for l in 0..n {
                let block = m.submatrix(offsets[t][l]..offsets[t][l + 1], offsets[s][i]..offsets[s][i + 1]);
                if l < i && !block.is_zero() {
                    return Err(invalid("structure map leaves the filtration"));
                }
                if l == i && &block != family.object(e.order[i]).map(a) {
                    return Err(invalid("diagonal block differs from the simple"));
                }
                if l > i {
                    psi.entry((i, l)).or_default().push(block);
                }
            }
        }
    }
    let mut members = vec![0; gamma.nodes.len()];
    for (pos, &node) in gamma.positions.iter().enumerate() {
        members[node] = e.order[pos];
    }
    DeformationModule::new(PathAlgebra::new(&gamma), members, family, psi)
}

/// `X = X_Γ(s) / X_Γ^{NL}(s)` with `F_j` spanned by the leading paths of
/// positions after `j`.
pub fn from_deformation(d: &DeformationModule, family: &SimpleFamily) -> Result<IteratedExtension> {
    let s = d.base();
    let comp = &d.components[s];
    let paths = &d.paths[s];
    let n = d.algebra.gamma.length();
    let leading_pos = |p: PathBasis| match p {
        PathBasis::Idempotent(_) => Some(0),
        PathBasis::Run(0, j) => Some(j),
        _ => None,
    };
    let nv = comp.dims().len();
    let block_vectors = |v: usize, keep: &dyn Fn(PathBasis) -> bool| -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        let mut off = 0;
        for &p in paths {
            let dim = d.simples[d.algebra.target(p)].dims()[v];
            if keep(p) {
                for k in 0..dim {
                    let mut e = vec![Scalar::zero(); comp.dims()[v]];
                    e[off + k] = Scalar::one();
                    out.push(e);
                }
            }
            off += dim;
        }
        out
    };
    let nl: Vec<Subspace> = (0..nv)
        .map(|v| Subspace::span_vectors(comp.dims()[v], &block_vectors(v, &|p| leading_pos(p).is_none())))
        .collect();
    let (x, proj) = quotient(comp, &nl)?;
    let mut levels = Vec::new();
    for j in 0..=n {
        let level = (0..nv)
            .map(|v| {
                let span = Subspace::span_vectors(
                    comp.dims()[v],
                    &block_vectors(v, &|p| leading_pos(p).is_some_and(|q| q >= j)),
                );
                span.image(proj.block(v))
            })
            .collect::<Result<Vec<_>>>()?;
        levels.push(level);
    }
    from_filtration(family, &Filtration { object: x, levels })
}

/// Serializable form of a deformation: path algebra, ψ table and
/// component dimensions. Positions are 1-based here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationData {
    pub extension_type: ExtensionType,
    pub basis: Vec<String>,
    pub structure_constants: Vec<Vec<Option<usize>>>,
    pub radical_power_dims: Vec<usize>,
    pub psi: Vec<PsiEntry>,
    pub flatness: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiEntry {
    pub from: usize,
    pub to: usize,
    pub arrow: String,
    pub matrix: String,
}

pub fn basis_name(b: PathBasis) -> String {
    match b {
        PathBasis::Idempotent(u) => format!("e{}", u + 1),
        PathBasis::Run(i, j) => (i + 1..=j).map(|k| format!("g{}{}", k, k + 1)).collect::<Vec<_>>().join("*"),
    }
}

impl DeformationModule {
    pub fn data(&self) -> DeformationData {
        let pres = self.simples[0].presentation();
        let psi = self
            .psi
            .iter()
            .flat_map(|(&(i, l), blocks)| {
                blocks.iter().enumerate().filter(|(_, m)| !m.is_zero()).map(move |(a, m)| PsiEntry {
                    from: i + 1,
                    to: l + 1,
                    arrow: pres.arrows()[a].name.clone(),
                    matrix: m.to_line(),
                })
            })
            .collect();
        DeformationData {
            extension_type: self.algebra.gamma.clone(),
            basis: self.algebra.basis.iter().map(|&b| basis_name(b)).collect(),
            structure_constants: self.algebra.structure_constants(),
            radical_power_dims: self.algebra.radical_power_dims(),
            psi,
            flatness: self.flatness(),
        }
    }
}
