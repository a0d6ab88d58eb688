//! Hom, Ext¹ and the structure of finite-length objects.
//!
//! Every object is a [`QuiverRep`]; graded modules enter through the window
//! presentation of [`crate::gradedrep`]. Morphisms are node-wise matrices
//! intertwining the arrow actions.
//!
//! `Ext¹(X, Y)` is computed from extensions `0 -> Y -> Z -> X -> 0` written
//! as `Z_a = [[Y_a, c_a], [0, X_a]]`. The relations make the blocks `c_a`
//! satisfy linear equations (cocycles) and changing the splitting by node
//! maps `h_v: X_v -> Y_v` adds `Y_a h_s - h_t X_a` (coboundaries).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gradedrep::{GradedRep, TwistedSimple, WeylLabel};
use crate::linalg::{
    algebra_radical_coefficients, independent_columns, sparse_from_dense, sparse_kernel, Echelon, Matrix,
    Scalar, SparseRow, Subspace,
};
use crate::quiverrep::{QuiverPresentation, QuiverRep};

/// Objects of the category: validated representations over a presentation.
pub type BackendObject = QuiverRep;

/// A node-wise linear map commuting with every arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: QuiverRep,
    target: QuiverRep,
    blocks: Vec<Matrix>,
}

fn check_same(x: &QuiverRep, y: &QuiverRep) -> Result<()> {
    if x.same_presentation(y) {
        Ok(())
    } else {
        Err(Error::BackendMismatch)
    }
}

/// `L` with `L m = 1` for `m` of full column rank.
pub(crate) fn left_inverse(m: &Matrix) -> Result<Matrix> {
    let rows = independent_columns(&m.transpose());
    if rows.len() != m.cols() {
        return Err(Error::NotInjective);
    }
    let inv = m.select_rows(&rows).inverse().expect("independent rows");
    let mut out = Matrix::zeros(m.cols(), m.rows());
    for (k, &r) in rows.iter().enumerate() {
        for i in 0..m.cols() {
            out[(i, r)] = inv[(i, k)].clone();
        }
    }
    Ok(out)
}

/// `R` with `m R = 1` for `m` of full row rank.
pub(crate) fn right_inverse(m: &Matrix) -> Result<Matrix> {
    let cols = independent_columns(m);
    if cols.len() != m.rows() {
        return Err(Error::NotSurjective);
    }
    let inv = m.select_columns(&cols).inverse().expect("independent columns");
    let mut out = Matrix::zeros(m.cols(), m.rows());
    for (k, &c) in cols.iter().enumerate() {
        for j in 0..m.rows() {
            out[(c, j)] = inv[(k, j)].clone();
        }
    }
    Ok(out)
}

impl Morphism {
    /// Checks shapes and `Y_a phi_s = phi_t X_a` for every arrow.
    pub fn new(source: QuiverRep, target: QuiverRep, blocks: Vec<Matrix>) -> Result<Self> {
        check_same(&source, &target)?;
        if blocks.len() != source.dims().len() {
            return Err(Error::NotAMorphism("one block per node expected".into()));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.shape() != (target.dims()[v], source.dims()[v]) {
                return Err(Error::NotAMorphism(format!("block {} has the wrong shape", v)));
            }
        }
        for (a, arrow) in source.presentation().arrows().iter().enumerate() {
            let lhs = target.map(a).mul(&blocks[arrow.source])?;
            let rhs = blocks[arrow.target].mul(source.map(a))?;
            if lhs != rhs {
                return Err(Error::NotAMorphism(format!("does not commute with {}", arrow.name)));
            }
        }
        Ok(Morphism { source, target, blocks })
    }

    pub fn identity(x: &QuiverRep) -> Self {
        Morphism {
            source: x.clone(),
            target: x.clone(),
            blocks: x.dims().iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn zero(x: &QuiverRep, y: &QuiverRep) -> Result<Self> {
        check_same(x, y)?;
        Ok(Morphism {
            source: x.clone(),
            target: y.clone(),
            blocks: x.dims().iter().zip(y.dims()).map(|(&s, &t)| Matrix::zeros(t, s)).collect(),
        })
    }

    pub fn source(&self) -> &QuiverRep {
        &self.source
    }

    pub fn target(&self) -> &QuiverRep {
        &self.target
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    /// `g . self`.
    pub fn then(&self, g: &Morphism) -> Result<Morphism> {
        if self.target != g.source {
            return Err(Error::NotAMorphism("composition of non-composable maps".into()));
        }
        let blocks = g
            .blocks
            .iter()
            .zip(&self.blocks)
            .map(|(b, a)| b.mul(a))
            .collect::<Result<_>>()?;
        Ok(Morphism {
            source: self.source.clone(),
            target: g.target.clone(),
            blocks,
        })
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::NotAMorphism("sum of maps between different objects".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Morphism { blocks, ..self.clone() })
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn kernel_spaces(&self) -> Vec<Subspace> {
        self.blocks
            .iter()
            .map(|b| Subspace::zero(b.rows()).preimage(b).expect("shapes agree"))
            .collect()
    }

    pub fn image_spaces(&self) -> Vec<Subspace> {
        self.blocks.iter().map(Subspace::span).collect()
    }

    /// The kernel with its inclusion into the source.
    pub fn kernel(&self) -> Result<(QuiverRep, Morphism)> {
        subobject(&self.source, &self.kernel_spaces())
    }

    /// The image with its inclusion into the target.
    pub fn image(&self) -> Result<(QuiverRep, Morphism)> {
        subobject(&self.target, &self.image_spaces())
    }

    /// The cokernel with the projection from the target.
    pub fn cokernel(&self) -> Result<(QuiverRep, Morphism)> {
        quotient(&self.target, &self.image_spaces())
    }

    /// The inverse of an isomorphism.
    pub fn inverse(&self) -> Result<Morphism> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.inverse().ok_or(Error::NotAMorphism("not invertible".into())))
            .collect::<Result<_>>()?;
        Ok(Morphism {
            source: self.target.clone(),
            target: self.source.clone(),
            blocks,
        })
    }
}

/// The subrepresentation on node subspaces (which must be invariant), in
/// the canonical bases of the subspaces, with its inclusion.
pub fn subobject(x: &QuiverRep, spaces: &[Subspace]) -> Result<(QuiverRep, Morphism)> {
    let bases: Vec<&Matrix> = spaces.iter().map(Subspace::basis).collect();
    let lefts: Vec<Matrix> = bases.iter().map(|b| left_inverse(b)).collect::<Result<_>>()?;
    let pres = x.presentation();
    let mut maps = Vec::with_capacity(pres.arrows().len());
    for (a, arrow) in pres.arrows().iter().enumerate() {
        let moved = x.map(a).mul(bases[arrow.source])?;
        let m = lefts[arrow.target].mul(&moved)?;
        if bases[arrow.target].mul(&m)? != moved {
            return Err(Error::NotAMorphism(format!("subspaces not invariant under {}", arrow.name)));
        }
        maps.push(m);
    }
    let dims = spaces.iter().map(Subspace::dim).collect();
    let sub = QuiverRep::new(pres.clone(), dims, maps)?;
    let inclusion = Morphism {
        source: sub.clone(),
        target: x.clone(),
        blocks: bases.into_iter().cloned().collect(),
    };
    Ok((sub, inclusion))
}

/// The quotient by invariant node subspaces, with the projection. The
/// quotient basis is the image of the standard complement of each subspace.
pub fn quotient(x: &QuiverRep, spaces: &[Subspace]) -> Result<(QuiverRep, Morphism)> {
    let pres = x.presentation();
    let mut complements = Vec::new();
    let mut projections = Vec::new();
    for s in spaces {
        let c = s.complement();
        let full = s.basis().hstack(&c)?;
        let inv = full.inverse().expect("basis plus complement");
        projections.push(inv.submatrix(s.dim()..s.ambient(), 0..s.ambient()));
        complements.push(c);
    }
    let mut maps = Vec::new();
    for (a, arrow) in pres.arrows().iter().enumerate() {
        let killed = projections[arrow.target].mul(&x.map(a).mul(spaces[arrow.source].basis())?)?;
        if !killed.is_zero() {
            return Err(Error::NotAMorphism(format!("subspaces not invariant under {}", arrow.name)));
        }
        maps.push(projections[arrow.target].mul(&x.map(a).mul(&complements[arrow.source])?)?);
    }
    let dims = complements.iter().map(Matrix::cols).collect();
    let q = QuiverRep::new(pres.clone(), dims, maps)?;
    let projection = Morphism {
        source: x.clone(),
        target: q.clone(),
        blocks: projections,
    };
    Ok((q, projection))
}

/// `x ⊕ y` with the two inclusions and two projections.
pub struct DirectSum {
    pub object: QuiverRep,
    pub inclusions: [Morphism; 2],
    pub projections: [Morphism; 2],
}

pub fn direct_sum(x: &QuiverRep, y: &QuiverRep) -> Result<DirectSum> {
    let s = x.direct_sum(y)?;
    let inc = |first: bool, part: &QuiverRep| -> Morphism {
        let blocks = x
            .dims()
            .iter()
            .zip(y.dims())
            .map(|(&dx, &dy)| {
                let d = if first { dx } else { dy };
                Matrix::from_fn(dx + dy, d, |r, c| {
                    let shift = if first { 0 } else { dx };
                    if r == c + shift { Scalar::one() } else { Scalar::zero() }
                })
            })
            .collect();
        Morphism {
            source: part.clone(),
            target: s.clone(),
            blocks,
        }
    };
    let proj = |m: &Morphism| Morphism {
        source: s.clone(),
        target: m.source.clone(),
        blocks: m.blocks.iter().map(Matrix::transpose).collect(),
    };
    let i1 = inc(true, x);
    let i2 = inc(false, y);
    let projections = [proj(&i1), proj(&i2)];
    Ok(DirectSum {
        object: s,
        inclusions: [i1, i2],
        projections,
    })
}

/// A basis of `Hom(x, y)`.
pub fn hom_basis(x: &QuiverRep, y: &QuiverRep) -> Result<Vec<Morphism>> {
    check_same(x, y)?;
    let (dx, dy) = (x.dims(), y.dims());
    let mut offsets = Vec::with_capacity(dx.len());
    let mut total = 0;
    for v in 0..dx.len() {
        offsets.push(total);
        total += dx[v] * dy[v];
    }
    if total == 0 {
        return Ok(Vec::new());
    }
    let var = |v: usize, i: usize, j: usize| offsets[v] + i * dx[v] + j;
    let arrows = x.presentation().arrows();
    let mut order: Vec<usize> = (0..arrows.len()).collect();
    // equations of neighbouring nodes together keep the elimination local
    order.sort_by_key(|&a| (arrows[a].source.min(arrows[a].target), a));
    let mut rows = Vec::new();
    for a in order {
        let arrow = &arrows[a];
        let (s, t) = (arrow.source, arrow.target);
        let (ym, xm) = (y.map(a), x.map(a));
        for r in 0..dy[t] {
            for c in 0..dx[s] {
                let mut row = SparseRow::new();
                for p in 0..dy[s] {
                    let f = &ym[(r, p)];
                    if !f.is_zero() {
                        *row.entry(var(s, p, c)).or_insert_with(Scalar::zero) += f;
                    }
                }
                for q in 0..dx[t] {
                    let f = &xm[(q, c)];
                    if !f.is_zero() {
                        *row.entry(var(t, r, q)).or_insert_with(Scalar::zero) -= f;
                    }
                }
                row.retain(|_, v| !v.is_zero());
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    Ok(sparse_kernel(total, rows)
        .into_iter()
        .map(|k| Morphism {
            source: x.clone(),
            target: y.clone(),
            blocks: (0..dx.len())
                .map(|v| Matrix::from_fn(dy[v], dx[v], |i, j| k[var(v, i, j)].clone()))
                .collect(),
        })
        .collect())
}

pub fn hom_dim(x: &QuiverRep, y: &QuiverRep) -> Result<usize> {
    Ok(hom_basis(x, y)?.len())
}

/// Position of each arrow's correction block in a cocycle vector.
#[derive(Clone, Debug)]
struct CocycleLayout {
    offsets: Vec<usize>,
    shapes: Vec<(usize, usize)>,
    total: usize,
}

impl CocycleLayout {
    fn new(x: &QuiverRep, y: &QuiverRep) -> Self {
        let arrows = x.presentation().arrows();
        let mut order: Vec<usize> = (0..arrows.len()).collect();
        // neighbouring arrows next to each other keeps elimination banded
        order.sort_by_key(|&a| (arrows[a].source.min(arrows[a].target), a));
        let shapes: Vec<(usize, usize)> = arrows
            .iter()
            .map(|ar| (y.dims()[ar.target], x.dims()[ar.source]))
            .collect();
        let mut offsets = vec![0; arrows.len()];
        let mut total = 0;
        for a in order {
            offsets[a] = total;
            total += shapes[a].0 * shapes[a].1;
        }
        CocycleLayout { offsets, shapes, total }
    }

    fn var(&self, a: usize, i: usize, j: usize) -> usize {
        self.offsets[a] + i * self.shapes[a].1 + j
    }

    fn to_vector(&self, blocks: &[Matrix]) -> SparseRow {
        let mut row = SparseRow::new();
        for (a, b) in blocks.iter().enumerate() {
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    if !b[(i, j)].is_zero() {
                        row.insert(self.var(a, i, j), b[(i, j)].clone());
                    }
                }
            }
        }
        row
    }

    fn to_blocks(&self, v: &[Scalar]) -> Vec<Matrix> {
        self.shapes
            .iter()
            .enumerate()
            .map(|(a, &(r, c))| Matrix::from_fn(r, c, |i, j| v[self.var(a, i, j)].clone()))
            .collect()
    }
}

/// `Ext¹(x, y)`: cocycles modulo coboundaries, with a fixed basis.
#[derive(Debug)]
pub struct ExtSpace {
    x: QuiverRep,
    y: QuiverRep,
    layout: CocycleLayout,
    constraints: Vec<SparseRow>,
    reducer: Echelon,
    basis: Vec<Vec<Matrix>>,
}

/// An element of `Ext¹(x, y)` given by a cocycle.
#[derive(Clone, Debug)]
pub struct ExtClass {
    space: Arc<ExtSpace>,
    cocycle: Vec<Matrix>,
}

impl PartialEq for ExtClass {
    /// Equal as classes: same pair of objects and cohomologous cocycles.
    fn eq(&self, other: &Self) -> bool {
        self.space.x == other.space.x
            && self.space.y == other.space.y
            && self.coordinates() == other.coordinates()
    }
}

pub fn ext1(x: &QuiverRep, y: &QuiverRep) -> Result<Arc<ExtSpace>> {
    check_same(x, y)?;
    let pres = x.presentation();
    let layout = CocycleLayout::new(x, y);
    let (dx, dy) = (x.dims(), y.dims());

    // Top-right block of the path in Z is sum_j Y(after a_j) c_{a_j} X(before a_j).
    let mut constraints = Vec::new();
    for rel in pres.relations() {
        let Some((_, first)) = rel.terms.first() else { continue };
        let (s0, t0) = (first.start, pres.path_target(first)?);
        let mut acc: Vec<SparseRow> = vec![SparseRow::new(); dy[t0] * dx[s0]];
        for (coef, path) in &rel.terms {
            let k = path.arrows.len();
            let mut before = vec![Matrix::identity(dx[path.start])];
            for &a in &path.arrows {
                before.push(x.map(a).mul(before.last().unwrap())?);
            }
            let mut after = vec![Matrix::identity(dy[t0]); k];
            for j in (0..k.saturating_sub(1)).rev() {
                after[j] = after[j + 1].mul(y.map(path.arrows[j + 1]))?;
            }
            for (j, &a) in path.arrows.iter().enumerate() {
                let (l, r) = (&after[j], &before[j]);
                for rr in 0..dy[t0] {
                    for ss in 0..dx[s0] {
                        let row = &mut acc[rr * dx[s0] + ss];
                        for p in 0..l.cols() {
                            let lp = &l[(rr, p)];
                            if lp.is_zero() {
                                continue;
                            }
                            for q in 0..r.rows() {
                                let rq = &r[(q, ss)];
                                if rq.is_zero() {
                                    continue;
                                }
                                let f = &(coef * lp) * rq;
                                *row.entry(layout.var(a, p, q)).or_insert_with(Scalar::zero) += &f;
                            }
                        }
                    }
                }
            }
        }
        for mut row in acc {
            row.retain(|_, v| !v.is_zero());
            if !row.is_empty() {
                constraints.push(row);
            }
        }
    }
    let cocycles = sparse_kernel(layout.total, constraints.clone());

    let mut reducer = Echelon::new(layout.total);
    for (v, _) in dx.iter().enumerate() {
        for p in 0..dy[v] {
            for q in 0..dx[v] {
                let mut row = SparseRow::new();
                for (a, arrow) in pres.arrows().iter().enumerate() {
                    if arrow.source == v {
                        let ym = y.map(a);
                        for r in 0..ym.rows() {
                            if !ym[(r, p)].is_zero() {
                                *row.entry(layout.var(a, r, q)).or_insert_with(Scalar::zero) += &ym[(r, p)];
                            }
                        }
                    }
                    if arrow.target == v {
                        let xm = x.map(a);
                        for c in 0..xm.cols() {
                            if !xm[(q, c)].is_zero() {
                                *row.entry(layout.var(a, p, c)).or_insert_with(Scalar::zero) -= &xm[(q, c)];
                            }
                        }
                    }
                }
                row.retain(|_, v| !v.is_zero());
                reducer.insert(row);
            }
        }
    }
    let mut basis = Vec::new();
    for z in cocycles {
        let mut tag = SparseRow::new();
        tag.insert(basis.len(), Scalar::one());
        if reducer.insert_tagged(sparse_from_dense(&z), tag) {
            basis.push(layout.to_blocks(&z));
        }
    }
    Ok(Arc::new(ExtSpace {
        x: x.clone(),
        y: y.clone(),
        layout,
        constraints,
        reducer,
        basis,
    }))
}

pub fn ext1_basis(x: &QuiverRep, y: &QuiverRep) -> Result<Vec<ExtClass>> {
    Ok(ext1(x, y)?.basis_classes())
}

pub fn ext1_dim(x: &QuiverRep, y: &QuiverRep) -> Result<usize> {
    Ok(ext1(x, y)?.dim())
}

impl ExtSpace {
    pub fn x(&self) -> &QuiverRep {
        &self.x
    }

    pub fn y(&self) -> &QuiverRep {
        &self.y
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_classes(self: &Arc<Self>) -> Vec<ExtClass> {
        self.basis
            .iter()
            .map(|c| ExtClass {
                space: self.clone(),
                cocycle: c.clone(),
            })
            .collect()
    }

    pub fn zero_class(self: &Arc<Self>) -> ExtClass {
        ExtClass {
            space: self.clone(),
            cocycle: self.layout.to_blocks(&vec![Scalar::zero(); self.layout.total]),
        }
    }

    /// The class of a cocycle, checking the cocycle conditions.
    pub fn class(self: &Arc<Self>, cocycle: Vec<Matrix>) -> Result<ExtClass> {
        if cocycle.len() != self.layout.shapes.len()
            || cocycle.iter().zip(&self.layout.shapes).any(|(m, &s)| m.shape() != s)
        {
            return Err(Error::DimensionMismatch("cocycle blocks do not fit".into()));
        }
        let v = self.layout.to_vector(&cocycle);
        for row in &self.constraints {
            let mut dot = Scalar::zero();
            for (k, f) in row {
                if let Some(x) = v.get(k) {
                    dot += &(f * x);
                }
            }
            if !dot.is_zero() {
                return Err(Error::RelationViolated("cocycle condition".into()));
            }
        }
        Ok(ExtClass {
            space: self.clone(),
            cocycle,
        })
    }

    /// Coordinates of a cocycle's class in the basis of this space.
    fn coordinates_of(&self, cocycle: &[Matrix]) -> Vec<Scalar> {
        let (rest, tag) = self
            .reducer
            .reduce_tagged(self.layout.to_vector(cocycle), SparseRow::new());
        debug_assert!(rest.is_empty(), "cocycle outside the cocycle space");
        (0..self.dim())
            .map(|k| tag.get(&k).map(|x| -x).unwrap_or_else(Scalar::zero))
            .collect()
    }

    /// The class with the given coordinates.
    pub fn from_coordinates(self: &Arc<Self>, coords: &[Scalar]) -> Result<ExtClass> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch("coordinate count".into()));
        }
        let mut c = self.zero_class();
        for (b, s) in self.basis_classes().iter().zip(coords) {
            if !s.is_zero() {
                c = c.add(&b.scale(s))?;
            }
        }
        Ok(c)
    }
}

impl ExtClass {
    pub fn space(&self) -> &Arc<ExtSpace> {
        &self.space
    }

    /// The quotient object `X` of the extensions in this class.
    pub fn x(&self) -> &QuiverRep {
        &self.space.x
    }

    /// The subobject `Y` of the extensions in this class.
    pub fn y(&self) -> &QuiverRep {
        &self.space.y
    }

    pub fn cocycle(&self) -> &[Matrix] {
        &self.cocycle
    }

    pub fn coordinates(&self) -> Vec<Scalar> {
        self.space.coordinates_of(&self.cocycle)
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates().iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &ExtClass) -> Result<ExtClass> {
        if self.space.x != other.space.x || self.space.y != other.space.y {
            return Err(Error::BackendMismatch);
        }
        let cocycle = self
            .cocycle
            .iter()
            .zip(&other.cocycle)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(ExtClass {
            space: self.space.clone(),
            cocycle,
        })
    }

    pub fn scale(&self, s: &Scalar) -> ExtClass {
        ExtClass {
            space: self.space.clone(),
            cocycle: self.cocycle.iter().map(|m| m.scale(s)).collect(),
        }
    }
}

impl fmt::Display for ExtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coordinates().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", coords.join(", "))
    }
}

/// `0 -> sub --inj--> middle --surj--> quotient -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub middle: QuiverRep,
    pub inj: Morphism,
    pub surj: Morphism,
}

/// The middle term `[[Y_a, c_a], [0, X_a]]` of a class with its maps.
pub fn realize_extension(xi: &ExtClass) -> Result<ShortExact> {
    let (x, y) = (xi.x(), xi.y());
    let maps = x
        .maps()
        .iter()
        .zip(y.maps())
        .zip(&xi.cocycle)
        .map(|((xm, ym), c)| Matrix::block2(ym, c, &Matrix::zeros(xm.rows(), ym.cols()), xm))
        .collect::<Result<Vec<_>>>()?;
    let dims: Vec<usize> = x.dims().iter().zip(y.dims()).map(|(a, b)| a + b).collect();
    let middle = QuiverRep::new(x.presentation().clone(), dims, maps)?;
    let inj = Morphism {
        source: y.clone(),
        target: middle.clone(),
        blocks: x
            .dims()
            .iter()
            .zip(y.dims())
            .map(|(&dx, &dy)| Matrix::from_fn(dy + dx, dy, |r, c| if r == c { Scalar::one() } else { Scalar::zero() }))
            .collect(),
    };
    let surj = Morphism {
        source: middle.clone(),
        target: x.clone(),
        blocks: x
            .dims()
            .iter()
            .zip(y.dims())
            .map(|(&dx, &dy)| Matrix::from_fn(dx, dy + dx, |r, c| if c == r + dy { Scalar::one() } else { Scalar::zero() }))
            .collect(),
    };
    Ok(ShortExact { middle, inj, surj })
}

/// Checks that `0 -> Y -> Z -> X -> 0` is short exact.
pub fn check_short_exact(inj: &Morphism, surj: &Morphism) -> Result<()> {
    if inj.target != surj.source {
        return Err(Error::NotExact("maps do not meet in one object".into()));
    }
    if !inj.is_injective() {
        return Err(Error::NotExact("first map not injective".into()));
    }
    if !surj.is_surjective() {
        return Err(Error::NotExact("second map not surjective".into()));
    }
    if !inj.then(surj)?.is_zero() {
        return Err(Error::NotExact("composite is nonzero".into()));
    }
    if inj.source.total_dim() + surj.target.total_dim() != inj.target.total_dim() {
        return Err(Error::NotExact("not exact in the middle".into()));
    }
    Ok(())
}

/// The class of a short exact sequence, read off through a node-wise
/// linear section `s` of `surj`: `c_a = inj^{-1}(Z_a s - s X_a)`.
pub fn extension_class_of(inj: &Morphism, surj: &Morphism) -> Result<ExtClass> {
    check_short_exact(inj, surj)?;
    extension_class_in(&ext1(&surj.target, &inj.source)?, inj, surj)
}

/// As [`extension_class_of`], in an already computed space.
pub fn extension_class_in(space: &Arc<ExtSpace>, inj: &Morphism, surj: &Morphism) -> Result<ExtClass> {
    if space.x != surj.target || space.y != inj.source {
        return Err(Error::BackendMismatch);
    }
    let z = &inj.target;
    let sections: Vec<Matrix> = surj.blocks.iter().map(right_inverse).collect::<Result<_>>()?;
    let lefts: Vec<Matrix> = inj.blocks.iter().map(left_inverse).collect::<Result<_>>()?;
    let mut cocycle = Vec::new();
    for (a, arrow) in z.presentation().arrows().iter().enumerate() {
        let defect = z
            .map(a)
            .mul(&sections[arrow.source])?
            .sub(&sections[arrow.target].mul(space.x.map(a))?)?;
        cocycle.push(lefts[arrow.target].mul(&defect)?);
    }
    space.class(cocycle)
}

/// Pulls `xi in Ext¹(C, K)` back along an injection `K' -> C`.
pub fn pullback_extension(xi: &ExtClass, mono: &Morphism) -> Result<ExtClass> {
    let space = ext1(&mono.source, xi.y())?;
    pullback_extension_in(&space, xi, mono)
}

pub fn pullback_extension_in(space: &Arc<ExtSpace>, xi: &ExtClass, mono: &Morphism) -> Result<ExtClass> {
    if mono.target != *xi.x() || space.x != mono.source || space.y != *xi.y() {
        return Err(Error::BackendMismatch);
    }
    if !mono.is_injective() {
        return Err(Error::NotInjective);
    }
    let arrows = mono.source.presentation().arrows();
    let cocycle = xi
        .cocycle
        .iter()
        .zip(arrows)
        .map(|(c, arrow)| c.mul(&mono.blocks[arrow.source]))
        .collect::<Result<_>>()?;
    space.class(cocycle)
}

/// Pushes `xi in Ext¹(X, Y)` forward along `Y -> Y'`.
pub fn pushforward_extension(xi: &ExtClass, g: &Morphism) -> Result<ExtClass> {
    if g.source != *xi.y() {
        return Err(Error::BackendMismatch);
    }
    let space = ext1(xi.x(), &g.target)?;
    let arrows = g.source.presentation().arrows();
    let cocycle = xi
        .cocycle
        .iter()
        .zip(arrows)
        .map(|(c, arrow)| g.blocks[arrow.target].mul(c))
        .collect::<Result<_>>()?;
    space.class(cocycle)
}

/// `{(a, b) : g1 a = g2 b}` inside `e1 ⊕ e2`, with both projections.
pub fn fiber_product(g1: &Morphism, g2: &Morphism) -> Result<(QuiverRep, Morphism, Morphism)> {
    if g1.target != g2.target {
        return Err(Error::BackendMismatch);
    }
    let sum = direct_sum(&g1.source, &g2.source)?;
    let diff = sum.projections[0].then(g1)?.add(&sum.projections[1].then(g2)?.scale(&Scalar::from_int(-1)))?;
    let (p, inc) = diff.kernel()?;
    let p1 = inc.then(&sum.projections[0])?;
    let p2 = inc.then(&sum.projections[1])?;
    Ok((p, p1, p2))
}

/// `(e1 ⊕ e2) / {(f1 u, -f2 u)}` for injective `f1, f2`, with both maps in.
pub fn amalgamated_sum(f1: &Morphism, f2: &Morphism) -> Result<(QuiverRep, Morphism, Morphism)> {
    if f1.source != f2.source {
        return Err(Error::BackendMismatch);
    }
    if !f1.is_injective() || !f2.is_injective() {
        return Err(Error::NotInjective);
    }
    let sum = direct_sum(&f1.target, &f2.target)?;
    let anti = f1
        .then(&sum.inclusions[0])?
        .add(&f2.then(&sum.inclusions[1])?.scale(&Scalar::from_int(-1)))?;
    let (q, proj) = anti.cokernel()?;
    let i1 = sum.inclusions[0].then(&proj)?;
    let i2 = sum.inclusions[1].then(&proj)?;
    Ok((q, i1, i2))
}

/// Identifies a member of a simple family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SimpleTag {
    Node(String),
    Weyl(TwistedSimple),
}

impl fmt::Display for SimpleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleTag::Node(n) => write!(f, "S_{}", n),
            SimpleTag::Weyl(s) => write!(f, "{}", s),
        }
    }
}

/// The simple objects socles and composition series are measured against.
#[derive(Clone, Debug)]
pub struct SimpleFamily {
    members: Vec<(SimpleTag, QuiverRep)>,
}

impl SimpleFamily {
    pub fn from_members(members: Vec<(SimpleTag, QuiverRep)>) -> Self {
        SimpleFamily { members }
    }

    /// The simple representations at the nodes of a presentation.
    pub fn nodes(pres: &Arc<QuiverPresentation>) -> Self {
        let members = pres
            .nodes()
            .iter()
            .enumerate()
            .map(|(v, n)| {
                let s = QuiverRep::simple_at_index(pres.clone(), v).expect("node exists");
                (SimpleTag::Node(n.clone()), s)
            })
            .collect();
        SimpleFamily { members }
    }

    /// `M_label[s]` for each label and each twist whose generator weight
    /// `-s` lies at distance at least `margin` from the window edges.
    pub fn weyl(labels: &[WeylLabel], lo: i64, hi: i64, margin: i64) -> Result<Self> {
        let mut members = Vec::new();
        for label in labels {
            for g in lo + margin..=hi - margin {
                let tag = TwistedSimple::new(label.clone(), -g);
                let rep = GradedRep::simple_of(&tag, lo, hi)?.to_quiver_rep()?;
                members.push((SimpleTag::Weyl(tag), rep));
            }
        }
        Ok(SimpleFamily { members })
    }

    /// `M_label[s]` for the listed twists, all on the window `[lo, hi]`.
    pub fn weyl_twists(labels: &[WeylLabel], twists: &[i64], lo: i64, hi: i64) -> Result<Self> {
        let mut members = Vec::new();
        for label in labels {
            for &s in twists {
                let tag = TwistedSimple::new(label.clone(), s);
                let rep = GradedRep::simple_of(&tag, lo, hi)?.to_quiver_rep()?;
                members.push((SimpleTag::Weyl(tag), rep));
            }
        }
        Ok(SimpleFamily { members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn tag(&self, i: usize) -> &SimpleTag {
        &self.members[i].0
    }

    pub fn object(&self, i: usize) -> &QuiverRep {
        &self.members[i].1
    }

    pub fn members(&self) -> &[(SimpleTag, QuiverRep)] {
        &self.members
    }

    pub fn index_of(&self, tag: &SimpleTag) -> Option<usize> {
        self.members.iter().position(|(t, _)| t == tag)
    }

    /// The member isomorphic to a simple object `s`.
    pub fn identify(&self, s: &QuiverRep) -> Result<Option<usize>> {
        for (i, (_, m)) in self.members.iter().enumerate() {
            if m.dims() == s.dims() && hom_dim(m, s)? > 0 {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// The socle: the sum of the images of all maps from the family.
#[derive(Clone, Debug)]
pub struct Socle {
    pub object: QuiverRep,
    pub inclusion: Morphism,
    /// `dim Hom(S_i, x)` per family member.
    pub multiplicities: Vec<usize>,
}

impl Socle {
    pub fn length(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.length() == 1
    }
}

pub fn socle(x: &QuiverRep, family: &SimpleFamily) -> Result<Socle> {
    let mut spaces: Vec<Subspace> = x.dims().iter().map(|&d| Subspace::zero(d)).collect();
    let mut multiplicities = Vec::with_capacity(family.len());
    for (_, s) in &family.members {
        let homs = hom_basis(s, x)?;
        multiplicities.push(homs.len());
        for h in homs {
            for (v, img) in h.image_spaces().iter().enumerate() {
                spaces[v] = spaces[v].sum(img)?;
            }
        }
    }
    let (object, inclusion) = subobject(x, &spaces)?;
    Ok(Socle {
        object,
        inclusion,
        multiplicities,
    })
}

/// A cofiltration `0 = C_0 <- C_1 <- ... <- C_n = X` with simple kernels.
#[derive(Clone, Debug)]
pub struct CompositionSeries {
    /// `C_0, ..., C_n`.
    pub stages: Vec<QuiverRep>,
    /// `f_i: C_i -> C_{i-1}` at index `i - 1`.
    pub maps: Vec<Morphism>,
    /// Family index of `K_i = ker f_i` at index `i - 1`; `K_1` is the top.
    pub factors: Vec<usize>,
}

impl CompositionSeries {
    pub fn length(&self) -> usize {
        self.factors.len()
    }

    pub fn factor_tags<'a>(&self, family: &'a SimpleFamily) -> Vec<&'a SimpleTag> {
        self.factors.iter().map(|&i| family.tag(i)).collect()
    }
}

/// Peels simple subobjects off the bottom. With `uniserial_only`, returns
/// `None` as soon as a quotient has a non-simple socle.
fn peel(x: &QuiverRep, family: &SimpleFamily, uniserial_only: bool) -> Result<Option<CompositionSeries>> {
    let mut quotients = vec![x.clone()];
    let mut projections = Vec::new();
    let mut bottom_up = Vec::new();
    loop {
        let q = quotients.last().unwrap().clone();
        if q.is_zero() {
            break;
        }
        let mut found = None;
        let mut total = 0;
        for (i, (_, s)) in family.members.iter().enumerate() {
            let homs = hom_basis(s, &q)?;
            total += homs.len();
            if found.is_none() {
                if let Some(h) = homs.into_iter().next() {
                    found = Some((i, h));
                }
            }
            if !uniserial_only && found.is_some() {
                break;
            }
            if uniserial_only && total > 1 {
                return Ok(None);
            }
        }
        let Some((i, h)) = found else {
            return Err(Error::NotFiniteLength);
        };
        let (next, proj) = quotient(&q, &h.image_spaces())?;
        bottom_up.push(i);
        projections.push(proj);
        quotients.push(next);
    }
    quotients.reverse();
    projections.reverse();
    bottom_up.reverse();
    Ok(Some(CompositionSeries {
        stages: quotients,
        maps: projections,
        factors: bottom_up,
    }))
}

/// A composition series by iterated socle quotients.
pub fn composition_series(x: &QuiverRep, family: &SimpleFamily) -> Result<CompositionSeries> {
    Ok(peel(x, family, false)?.expect("always produced"))
}

/// The unique composition series when `x` is uniserial, `None` otherwise.
pub fn is_uniserial(x: &QuiverRep, family: &SimpleFamily) -> Result<Option<CompositionSeries>> {
    peel(x, family, true)
}

/// One composition series as a chain of subobjects of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesChain {
    /// Factor family indices, top first.
    pub factors: Vec<usize>,
    /// Node subspaces of the proper nonzero subobjects, smallest first.
    pub subobjects: Vec<Vec<Subspace>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesEnumeration {
    Finite(Vec<SeriesChain>),
    /// Some quotient has an isotypic socle of length at least 2, so there
    /// are infinitely many simple subobjects.
    Infinite,
}

/// All composition series of `x`.
pub fn enumerate_composition_series(x: &QuiverRep, family: &SimpleFamily) -> Result<SeriesEnumeration> {
    fn rec(
        q: &QuiverRep,
        from_x: &Morphism,
        family: &SimpleFamily,
    ) -> Result<Option<Vec<(Vec<usize>, Vec<Vec<Subspace>>)>>> {
        if q.is_zero() {
            return Ok(Some(vec![(Vec::new(), Vec::new())]));
        }
        let mut out = Vec::new();
        let mut any = false;
        for (i, (_, s)) in family.members().iter().enumerate() {
            let homs = hom_basis(s, q)?;
            match homs.len() {
                0 => continue,
                1 => {}
                _ => return Ok(None),
            }
            any = true;
            let (next, proj) = quotient(q, &homs[0].image_spaces())?;
            let to_next = from_x.then(&proj)?;
            let sub = to_next.kernel_spaces();
            let Some(tails) = rec(&next, &to_next, family)? else {
                return Ok(None);
            };
            for (mut factors, mut subs) in tails {
                factors.push(i);
                subs.insert(0, sub.clone());
                out.push((factors, subs));
            }
        }
        if !any {
            return Err(Error::NotFiniteLength);
        }
        Ok(Some(out))
    }
    match rec(x, &Morphism::identity(x), family)? {
        None => Ok(SeriesEnumeration::Infinite),
        Some(list) => Ok(SeriesEnumeration::Finite(
            list.into_iter()
                .map(|(factors, mut subobjects)| {
                    subobjects.pop(); // the whole object
                    SeriesChain { factors, subobjects }
                })
                .collect(),
        )),
    }
}

/// Dimensions of `End(x)` and of its radical.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EndCertificate {
    pub end_dim: usize,
    pub radical_dim: usize,
}

impl EndCertificate {
    pub fn semisimple_dim(&self) -> usize {
        self.end_dim - self.radical_dim
    }
}

fn radical_dim(basis: &[Vec<Matrix>]) -> Result<usize> {
    Ok(algebra_radical_coefficients(basis)?.len())
}

pub fn endomorphisms(x: &QuiverRep) -> Result<EndCertificate> {
    let basis: Vec<Vec<Matrix>> = hom_basis(x, x)?.into_iter().map(|m| m.blocks).collect();
    Ok(EndCertificate {
        end_dim: basis.len(),
        radical_dim: radical_dim(&basis)?,
    })
}

/// Indecomposable iff `End(x)/rad` is one-dimensional.
pub fn is_indecomposable(x: &QuiverRep) -> Result<(bool, EndCertificate)> {
    if x.is_zero() {
        return Err(Error::ZeroObject);
    }
    let cert = endomorphisms(x)?;
    Ok((cert.semisimple_dim() == 1, cert))
}

/// For indecomposable `x, y`: `End(x ⊕ y)/rad` is `M_2(k)` exactly when
/// they are isomorphic and `k × k` otherwise.
pub fn are_isomorphic(x: &QuiverRep, y: &QuiverRep) -> Result<bool> {
    check_same(x, y)?;
    for z in [x, y] {
        if !is_indecomposable(z)?.0 {
            return Err(Error::NotIndecomposable);
        }
    }
    let (dx, dy) = (x.dims(), y.dims());
    let embed = |m: &Morphism, row_off: bool, col_off: bool| -> Vec<Matrix> {
        m.blocks
            .iter()
            .enumerate()
            .map(|(v, b)| {
                let n = dx[v] + dy[v];
                let (r0, c0) = (if row_off { dx[v] } else { 0 }, if col_off { dx[v] } else { 0 });
                Matrix::from_fn(n, n, |r, c| {
                    if r >= r0 && r < r0 + b.rows() && c >= c0 && c < c0 + b.cols() {
                        b[(r - r0, c - c0)].clone()
                    } else {
                        Scalar::zero()
                    }
                })
            })
            .collect()
    };
    let mut basis = Vec::new();
    for m in hom_basis(x, x)? {
        basis.push(embed(&m, false, false));
    }
    for m in hom_basis(y, x)? {
        basis.push(embed(&m, false, true));
    }
    for m in hom_basis(x, y)? {
        basis.push(embed(&m, true, false));
    }
    for m in hom_basis(y, y)? {
        basis.push(embed(&m, true, true));
    }
    let quotient_dim = basis.len() - radical_dim(&basis)?;
    match quotient_dim {
        4 => Ok(true),
        2 => Ok(false),
        d => Err(Error::NotKRational(d)),
    }
}

/// The three configurations excluded by (UC), each carrying an
/// indecomposable object that is not uniserial.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub pattern: &'static str,
    pub simples: SimpleFamily,
    pub object: QuiverRep,
}

fn two_extensions(x: &QuiverRep, y: &QuiverRep) -> Result<(ShortExact, ShortExact)> {
    let basis = ext1_basis(x, y)?;
    if basis.len() < 2 {
        return Err(Error::DimensionMismatch("need two independent classes".into()));
    }
    Ok((realize_extension(&basis[0])?, realize_extension(&basis[1])?))
}

/// Kronecker quiver, `S = S_1`, `T = S_2`: the push-out of `T -> U` and
/// `T -> V` for two independent extensions `U`, `V` of `S` by `T`.
pub fn counterexample_double_arrow() -> Result<Counterexample> {
    let pres = Arc::new(QuiverPresentation::kronecker());
    let simples = SimpleFamily::nodes(&pres);
    let (u, v) = two_extensions(simples.object(0), simples.object(1))?;
    let (object, _, _) = amalgamated_sum(&u.inj, &v.inj)?;
    Ok(Counterexample {
        pattern: "double arrow",
        simples,
        object,
    })
}

/// `u -> s`, `u -> t`: the fiber product of `E_1 -> U` and `E_2 -> U`
/// where `E_1` extends `U` by `S` and `E_2` extends `U` by `T`.
pub fn counterexample_fan_out() -> Result<Counterexample> {
    let pres = Arc::new(QuiverPresentation::fan_out());
    let simples = SimpleFamily::nodes(&pres);
    let (u, s, t) = (simples.object(0), simples.object(1), simples.object(2));
    let e1 = realize_extension(&ext1_basis(u, s)?[0])?;
    let e2 = realize_extension(&ext1_basis(u, t)?[0])?;
    let (object, _, _) = fiber_product(&e1.surj, &e2.surj)?;
    Ok(Counterexample {
        pattern: "fan-out",
        simples,
        object,
    })
}

/// `s -> u`, `t -> u`: the push-out of `U -> E_1` and `U -> E_2` where
/// `E_1` extends `S` by `U` and `E_2` extends `T` by `U`.
pub fn counterexample_fan_in() -> Result<Counterexample> {
    let pres = Arc::new(QuiverPresentation::fan_in());
    let simples = SimpleFamily::nodes(&pres);
    let (s, t, u) = (simples.object(0), simples.object(1), simples.object(2));
    let e1 = realize_extension(&ext1_basis(s, u)?[0])?;
    let e2 = realize_extension(&ext1_basis(t, u)?[0])?;
    let (object, _, _) = amalgamated_sum(&e1.inj, &e2.inj)?;
    Ok(Counterexample {
        pattern: "fan-in",
        simples,
        object,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kron() -> Arc<QuiverPresentation> {
        Arc::new(QuiverPresentation::kronecker())
    }

    #[test]
    fn hom_examples() {
        let k = kron();
        let s1 = QuiverRep::simple_at(k.clone(), "1").unwrap();
        let s2 = QuiverRep::simple_at(k.clone(), "2").unwrap();
        assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
        let ss = s1.direct_sum(&s1).unwrap();
        assert_eq!(hom_dim(&ss, &s1).unwrap(), 2);
    }

    #[test]
    fn kronecker_ext() {
        let k = kron();
        let s1 = QuiverRep::simple_at(k.clone(), "1").unwrap();
        let s2 = QuiverRep::simple_at(k.clone(), "2").unwrap();
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 2);
        assert_eq!(ext1_dim(&s2, &s1).unwrap(), 0);
        assert_eq!(ext1_dim(&s1, &s1).unwrap(), 0);
    }

    #[test]
    fn realize_and_extract() {
        let k = kron();
        let s1 = QuiverRep::simple_at(k.clone(), "1").unwrap();
        let s2 = QuiverRep::simple_at(k.clone(), "2").unwrap();
        let space = ext1(&s1, &s2).unwrap();
        let xi = space.basis_classes()[0].add(&space.basis_classes()[1].scale(&Scalar::from_int(3))).unwrap();
        let ses = realize_extension(&xi).unwrap();
        let back = extension_class_of(&ses.inj, &ses.surj).unwrap();
        assert_eq!(back, xi);
        assert_eq!(back.coordinates(), vec![Scalar::one(), Scalar::from_int(3)]);
        let split = realize_extension(&space.zero_class()).unwrap();
        assert!(!is_indecomposable(&split.middle).unwrap().0);
        assert!(is_indecomposable(&ses.middle).unwrap().0);
    }

    #[test]
    fn indecomposability_and_isomorphism() {
        let k = kron();
        let s1 = QuiverRep::simple_at(k.clone(), "1").unwrap();
        let s2 = QuiverRep::simple_at(k.clone(), "2").unwrap();
        let (ind, cert) = is_indecomposable(&s1.direct_sum(&s1).unwrap()).unwrap();
        assert!(!ind);
        assert_eq!(cert.semisimple_dim(), 4);
        assert!(are_isomorphic(&s1, &s1).unwrap());
        assert!(!are_isomorphic(&s1, &s2).unwrap());
        let basis = ext1_basis(&s1, &s2).unwrap();
        let u = realize_extension(&basis[0]).unwrap().middle;
        let v = realize_extension(&basis[1]).unwrap().middle;
        assert!(!are_isomorphic(&u, &v).unwrap());
        let u2 = realize_extension(&basis[0].scale(&Scalar::from_int(5))).unwrap().middle;
        assert!(are_isomorphic(&u, &u2).unwrap());
    }

    #[test]
    fn socles_and_series() {
        let k = kron();
        let fam = SimpleFamily::nodes(&k);
        let s1 = QuiverRep::simple_at(k.clone(), "1").unwrap();
        let s2 = QuiverRep::simple_at(k.clone(), "2").unwrap();
        assert!(socle(&s1, &fam).unwrap().is_simple());
        assert_eq!(socle(&s1.direct_sum(&s2).unwrap(), &fam).unwrap().multiplicities, vec![1, 1]);
        let u = realize_extension(&ext1_basis(&s1, &s2).unwrap()[0]).unwrap().middle;
        let soc = socle(&u, &fam).unwrap();
        assert_eq!(soc.multiplicities, vec![0, 1]);
        let series = is_uniserial(&u, &fam).unwrap().unwrap();
        assert_eq!(series.factors, vec![0, 1]);
        assert_eq!(series.stages.len(), 3);
        assert!(is_uniserial(&s1.direct_sum(&s2).unwrap(), &fam).unwrap().is_none());
        let all = enumerate_composition_series(&s1.direct_sum(&s2).unwrap(), &fam).unwrap();
        let SeriesEnumeration::Finite(chains) = all else { panic!() };
        assert_eq!(chains.len(), 2);
        assert_eq!(
            enumerate_composition_series(&s1.direct_sum(&s1).unwrap(), &fam).unwrap(),
            SeriesEnumeration::Infinite
        );
    }

    #[test]
    fn pullback_examples() {
        let k = Arc::new(QuiverPresentation::linear(3));
        let s: Vec<QuiverRep> = ["1", "2", "3"]
            .iter()
            .map(|n| QuiverRep::simple_at(k.clone(), n).unwrap())
            .collect();
        // E: S1 on top of S2; extending E by S3 restricts nontrivially to S2
        let e = realize_extension(&ext1_basis(&s[0], &s[1]).unwrap()[0]).unwrap();
        let space = ext1(&e.middle, &s[2]).unwrap();
        assert_eq!(space.dim(), 1);
        let tau = pullback_extension(&space.basis_classes()[0], &e.inj).unwrap();
        assert!(!tau.is_zero());
        assert_eq!(
            pullback_extension(&space.basis_classes()[0], &Morphism::zero(&s[1], &e.middle).unwrap()),
            Err(Error::NotInjective)
        );
        assert_eq!(ext1_dim(&e.middle, &s[0]).unwrap(), 0);
        let xi = ext1_basis(&s[1], &s[2]).unwrap()[0].clone();
        let id = Morphism::identity(&s[1]);
        assert_eq!(pullback_extension(&xi, &id).unwrap(), xi);
        let zero = ext1(&s[1], &s[2]).unwrap().zero_class();
        assert!(pullback_extension(&zero, &id).unwrap().is_zero());
    }

    #[test]
    fn fiber_products_and_pushouts() {
        let k = kron();
        let s1 = QuiverRep::simple_at(k.clone(), "1").unwrap();
        let id = Morphism::identity(&s1);
        let (p, _, _) = fiber_product(&id, &id).unwrap();
        assert!(are_isomorphic(&p, &s1).unwrap());
        let z = Morphism::zero(&s1, &s1).unwrap();
        let (p, _, _) = fiber_product(&z, &z).unwrap();
        assert_eq!(p.total_dim(), 2);
        let (q, _, _) = amalgamated_sum(&id, &id).unwrap();
        assert!(are_isomorphic(&q, &s1).unwrap());
        assert_eq!(amalgamated_sum(&z, &z).unwrap_err(), Error::NotInjective);
    }

    #[test]
    fn counterexamples() {
        let ce1 = counterexample_double_arrow().unwrap();
        assert_eq!(ce1.object.dims(), &[2, 1]);
        assert!(is_indecomposable(&ce1.object).unwrap().0);
        assert!(is_uniserial(&ce1.object, &ce1.simples).unwrap().is_none());
        assert!(socle(&ce1.object, &ce1.simples).unwrap().is_simple());

        let ce2 = counterexample_fan_out().unwrap();
        assert_eq!(ce2.object.total_dim(), 3);
        assert!(is_indecomposable(&ce2.object).unwrap().0);
        assert_eq!(socle(&ce2.object, &ce2.simples).unwrap().multiplicities, vec![0, 1, 1]);

        let ce3 = counterexample_fan_in().unwrap();
        assert!(is_indecomposable(&ce3.object).unwrap().0);
        assert!(is_uniserial(&ce3.object, &ce3.simples).unwrap().is_none());
        match enumerate_composition_series(&ce3.object, &ce3.simples).unwrap() {
            SeriesEnumeration::Finite(chains) => assert_eq!(chains.len(), 2),
            SeriesEnumeration::Infinite => panic!("finite lattice expected"),
        }
    }
}
