use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{quotient_data, Matrix, RowSpace};
use crate::field::Field;
use crate::quivalg::Algebra;

/// A finite-dimensional module given as a quiver representation: arrow
/// `a: i -> j` acts by a `dims[j] x dims[i]` matrix.
#[derive(Clone, Debug)]
pub struct Representation<F: Field> {
    algebra: Algebra<F>,
    dims: Vec<usize>,
    maps: Arc<Vec<Matrix<F>>>,
}

/// A module homomorphism, one matrix per vertex.
#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field> {
    pub source: Representation<F>,
    pub target: Representation<F>,
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    /// Build a representation, checking shapes and that every relation acts by zero.
    pub fn new(algebra: &Algebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.num_arrows() {
            return Err(Error::InvalidParameter("representation shape does not match the quiver".into()));
        }
        for (a, m) in maps.iter().enumerate() {
            let arr = q.arrow(a);
            if m.rows() != dims[arr.target] || m.cols() != dims[arr.source] {
                return Err(Error::InvalidParameter(format!("matrix for arrow `{}` has the wrong shape", arr.label)));
            }
        }
        let rep = Self::from_parts(algebra, dims, maps);
        for rel in algebra.relations() {
            let (s, t) = rel.endpoints().unwrap_or((0, 0));
            let mut acc = Matrix::zeros(algebra.field(), rep.dims[t], rep.dims[s]);
            for (p, c) in &rel.terms {
                acc.add_scaled(&rep.path_matrix(&p.arrows, p.start), c);
            }
            if !acc.is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "relation `{}` does not vanish",
                    rel.format(algebra.field(), q)
                )));
            }
        }
        Ok(rep)
    }

    /// Build without checking relations; callers guarantee validity.
    pub(crate) fn from_parts(algebra: &Algebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        Representation { algebra: algebra.clone(), dims, maps: Arc::new(maps) }
    }

    pub fn zero(algebra: &Algebra<F>) -> Self {
        let f = algebra.field();
        let q = algebra.quiver();
        let maps = q.arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Self::from_parts(algebra, vec![0; q.num_vertices()], maps)
    }

    pub fn simple(algebra: &Algebra<F>, v: usize) -> Self {
        let f = algebra.field();
        let q = algebra.quiver();
        let dims: Vec<usize> = (0..q.num_vertices()).map(|u| usize::from(u == v)).collect();
        let maps = q.arrows().iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
        Self::from_parts(algebra, dims, maps)
    }

    /// `e_v A`: basis = paths starting at `v`, grouped by end vertex.
    pub fn projective(algebra: &Algebra<F>, v: usize) -> Self {
        let f = algebra.field();
        let q = algebra.quiver();
        let n = q.num_vertices();
        let dims: Vec<usize> = (0..n).map(|w| algebra.block(v, w).len()).collect();
        let maps = (0..q.num_arrows())
            .map(|a| {
                let arr = q.arrow(a);
                let src = algebra.block(v, arr.source);
                let tgt = algebra.block(v, arr.target);
                let ab = algebra.arrow_basis_index(a);
                let mut m = Matrix::zeros(f, tgt.len(), src.len());
                for (c, &p) in src.iter().enumerate() {
                    for (k, x) in algebra.mult_basis(p, ab) {
                        let r = tgt.iter().position(|t| t == k).expect("product stays in the block");
                        m.set(r, c, x.clone());
                    }
                }
                m
            })
            .collect();
        Self::from_parts(algebra, dims, maps)
    }

    /// `D(A e_v)`, the dual of the projective of the opposite algebra.
    pub fn injective(algebra: &Algebra<F>, v: usize) -> Self {
        Representation::projective(&algebra.opposite(), v).dual()
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn map(&self, a: usize) -> &Matrix<F> {
        &self.maps[a]
    }
    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// Offset of vertex `v` in the total space `⊕ M_v`.
    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }

    /// The dual module over the opposite algebra.
    pub fn dual(&self) -> Self {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Self::from_parts(&self.algebra.opposite(), self.dims.clone(), maps)
    }

    /// Matrix of the path with the given arrows from `start`, `M_start -> M_end`.
    pub fn path_matrix(&self, arrows: &[usize], start: usize) -> Matrix<F> {
        let mut m = Matrix::identity(self.field(), self.dims[start]);
        for &a in arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of an algebra element on the total space (right action `m -> m x`).
    pub fn element_action(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = self.field();
        let n = self.dim();
        let mut out = Matrix::zeros(f, n, n);
        for (i, c) in x.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let p = &self.algebra.basis()[i];
            let pm = self.path_matrix(&p.arrows, p.start).scale(c);
            let mut blk = out.block(self.offset(p.end), self.offset(p.start), pm.rows(), pm.cols());
            blk = blk.add(&pm);
            out.set_block(self.offset(p.end), self.offset(p.start), &blk);
        }
        out
    }

    /// Images `m p` of `m ∈ M_v` under every basis path `p` starting at `v`,
    /// in the order of `algebra.paths_from(v)`.
    pub fn orbit(&self, v: usize, m: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let a = &self.algebra;
        let from = a.paths_from(v);
        let mut imgs: Vec<Vec<F::Elem>> = Vec::with_capacity(from.len());
        let mut pos: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        for (k, &i) in from.iter().enumerate() {
            let p = &a.basis()[i];
            let img = match p.arrows.split_last() {
                None => m.to_vec(),
                Some((&last, rest)) => {
                    let prefix = crate::quivalg::Path {
                        start: p.start,
                        end: a.quiver().arrow(last).source,
                        arrows: rest.to_vec(),
                    };
                    let pi = a.path_index(&prefix).expect("path bases are prefix closed");
                    self.maps[last].mul_vec(&imgs[pos[&pi]][..])
                }
            };
            pos.insert(i, k);
            imgs.push(img);
        }
        imgs
    }

    pub fn direct_sum(mods: &[Self]) -> Self {
        assert!(!mods.is_empty(), "direct sum of an empty list needs an algebra; use zero()");
        let a = mods[0].algebra.clone();
        let f = a.field().clone();
        let n = a.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| mods.iter().map(|m| m.dims[v]).sum()).collect();
        let maps = (0..a.quiver().num_arrows())
            .map(|x| {
                let mut m = Matrix::zeros(&f, 0, 0);
                for md in mods {
                    m = m.direct_sum(&md.maps[x]);
                }
                m
            })
            .collect();
        Self::from_parts(&a, dims, maps)
    }

    /// Submodule spanned by given per-vertex bases (columns), assumed
    /// closed under the arrows; returns it with the inclusion.
    pub fn restrict(&self, bases: &[Matrix<F>]) -> (Self, ModuleMap<F>) {
        let q = self.algebra.quiver();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let maps = (0..q.num_arrows())
            .map(|a| {
                let arr = q.arrow(a);
                let img = self.maps[a].mul(&bases[arr.source]);
                bases[arr.target].solve(&img).expect("subspace is not closed under the arrows")
            })
            .collect();
        let sub = Self::from_parts(&self.algebra, dims, maps);
        let inc = ModuleMap { source: sub.clone(), target: self.clone(), blocks: bases.to_vec() };
        (sub, inc)
    }

    /// Submodule generated by vectors of the total space.
    pub fn generated_submodule(&self, gens: &[(usize, Vec<F::Elem>)]) -> (Self, ModuleMap<F>) {
        let f = self.field();
        let n = self.algebra.num_vertices();
        let mut spaces: Vec<RowSpace<F>> = (0..n).map(|v| RowSpace::new(f, self.dims[v])).collect();
        for (v, m) in gens {
            for (k, img) in self.orbit(*v, m).into_iter().enumerate() {
                let p = &self.algebra.basis()[self.algebra.paths_from(*v)[k]];
                spaces[p.end].insert(img);
            }
        }
        let bases: Vec<Matrix<F>> = spaces.iter().map(RowSpace::as_columns).collect();
        self.restrict(&bases)
    }

    /// Quotient by a submodule given by per-vertex column bases.
    pub fn quotient(&self, sub: &[Matrix<F>]) -> (Self, ModuleMap<F>) {
        let f = self.field().clone();
        let q = self.algebra.quiver();
        let data: Vec<_> = (0..q.num_vertices()).map(|v| quotient_data(&f, self.dims[v], &sub[v])).collect();
        let dims: Vec<usize> = data.iter().map(|d| d.complement.cols()).collect();
        let maps = (0..q.num_arrows())
            .map(|a| {
                let arr = q.arrow(a);
                data[arr.target].projection.mul(&self.maps[a]).mul(&data[arr.source].complement)
            })
            .collect();
        let quo = Self::from_parts(&self.algebra, dims, maps);
        let proj = ModuleMap { source: self.clone(), target: quo.clone(), blocks: data.into_iter().map(|d| d.projection).collect() };
        (quo, proj)
    }

    /// Same module with its relations re-verified; used by tests.
    pub fn is_valid(&self) -> bool {
        Self::new(&self.algebra, self.dims.clone(), self.maps.to_vec()).is_ok()
    }
}

impl<F: Field> ModuleMap<F> {
    pub fn zero(source: &Representation<F>, target: &Representation<F>) -> Self {
        let f = source.field();
        let blocks = (0..source.dims.len()).map(|v| Matrix::zeros(f, target.dims[v], source.dims[v])).collect();
        ModuleMap { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn identity(m: &Representation<F>) -> Self {
        let f = m.field();
        let blocks = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap { source: m.clone(), target: m.clone(), blocks }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect();
        ModuleMap { source: other.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn add(&self, other: &Self) -> Self {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// Block-diagonal total matrix.
    pub fn total_matrix(&self) -> Matrix<F> {
        let f = self.source.field();
        let mut m = Matrix::zeros(f, self.target.dim(), self.source.dim());
        for v in 0..self.blocks.len() {
            m.set_block(self.target.offset(v), self.source.offset(v), &self.blocks[v]);
        }
        m
    }

    pub fn from_total_matrix(source: &Representation<F>, target: &Representation<F>, m: &Matrix<F>) -> Self {
        let blocks = (0..source.dims.len())
            .map(|v| m.block(target.offset(v), source.offset(v), target.dims[v], source.dims[v]))
            .collect();
        ModuleMap { source: source.clone(), target: target.clone(), blocks }
    }

    /// Commutes with every arrow.
    pub fn is_homomorphism(&self) -> bool {
        let q = self.source.algebra.quiver();
        (0..q.num_arrows()).all(|a| {
            let arr = q.arrow(a);
            self.target.map(a).mul(&self.blocks[arr.source]) == self.blocks[arr.target].mul(self.source.map(a))
        })
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    pub fn kernel(&self) -> (Representation<F>, ModuleMap<F>) {
        let bases: Vec<Matrix<F>> = self.blocks.iter().map(Matrix::null_space).collect();
        self.source.restrict(&bases)
    }

    pub fn image(&self) -> (Representation<F>, ModuleMap<F>) {
        let bases: Vec<Matrix<F>> = self.blocks.iter().map(Matrix::column_space).collect();
        self.target.restrict(&bases)
    }

    pub fn cokernel(&self) -> (Representation<F>, ModuleMap<F>) {
        let bases: Vec<Matrix<F>> = self.blocks.iter().map(Matrix::column_space).collect();
        self.target.quotient(&bases)
    }

    /// The dual map `D N -> D M` over the opposite algebra.
    pub fn dual(&self) -> Self {
        ModuleMap {
            source: self.target.dual(),
            target: self.source.dual(),
            blocks: self.blocks.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Same matrices with new endpoints (which must have matching dims).
    pub fn retarget(&self, source: &Representation<F>, target: &Representation<F>) -> Self {
        ModuleMap { source: source.clone(), target: target.clone(), blocks: self.blocks.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::algebra_from_strings;

    fn a2() -> Algebra<Rationals> {
        algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap()
    }

    fn a3_rel() -> Algebra<Rationals> {
        algebra_from_strings(&Rationals, &["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")], &["a1*a2"]).unwrap()
    }

    #[test]
    fn projective_and_injective_dims() {
        let a = a2();
        assert_eq!(Representation::projective(&a, 0).dims(), &[1, 1]);
        assert_eq!(Representation::projective(&a, 1).dims(), &[0, 1]);
        assert_eq!(Representation::injective(&a, 0).dims(), &[1, 0]);
        assert_eq!(Representation::injective(&a, 1).dims(), &[1, 1]);
        assert_eq!(Representation::projective(&a3_rel(), 0).dims(), &[1, 1, 0]);
        assert!(Representation::projective(&a3_rel(), 0).is_valid());
    }

    #[test]
    fn injective_lives_over_the_algebra() {
        let a = a3_rel();
        let i = Representation::injective(&a, 2);
        assert!(Arc::ptr_eq(i.algebra(), &a));
        assert_eq!(i.dims(), &[0, 1, 1]);
        assert!(i.is_valid());
    }

    #[test]
    fn relation_check() {
        let a = a3_rel();
        let one = Matrix::identity(&Rationals, 1);
        assert!(Representation::new(&a, vec![1, 1, 1], vec![one.clone(), one]).is_err());
    }
}
