use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;
use crate::quivalg::Algebra;
use crate::repmod::{check_same, ModuleMap, Representation};

/// A bounded cochain complex of modules: `terms[k]` sits in degree `lo + k`
/// and `differentials[k]: terms[k] -> terms[k + 1]`.
#[derive(Clone, Debug)]
pub struct ComplexOfModules<F: Field> {
    algebra: Algebra<F>,
    pub lo: i64,
    pub terms: Vec<Representation<F>>,
    pub differentials: Vec<ModuleMap<F>>,
}

impl<F: Field> ComplexOfModules<F> {
    pub fn new(
        algebra: &Algebra<F>,
        lo: i64,
        terms: Vec<Representation<F>>,
        differentials: Vec<ModuleMap<F>>,
    ) -> Result<Self> {
        if differentials.len() + 1 != terms.len().max(1) {
            return Err(Error::InvalidParameter("a complex needs one differential between consecutive terms".into()));
        }
        for t in &terms {
            if !t.algebra().same_as(algebra) {
                return Err(Error::AlgebraMismatch);
            }
        }
        for (k, d) in differentials.iter().enumerate() {
            check_same(&d.source, &terms[k])?;
            if d.source.dims() != terms[k].dims() || d.target.dims() != terms[k + 1].dims() {
                return Err(Error::InvalidParameter(format!("differential {k} has the wrong shape")));
            }
        }
        let c = ComplexOfModules { algebra: algebra.clone(), lo, terms, differentials };
        if !c.is_complex() {
            return Err(Error::InvalidParameter("d∘d ≠ 0".into()));
        }
        Ok(c)
    }

    pub(crate) fn from_parts(
        algebra: &Algebra<F>,
        lo: i64,
        terms: Vec<Representation<F>>,
        differentials: Vec<ModuleMap<F>>,
    ) -> Self {
        debug_assert_eq!(differentials.len() + 1, terms.len().max(1));
        ComplexOfModules { algebra: algebra.clone(), lo, terms, differentials }
    }

    pub fn zero(algebra: &Algebra<F>) -> Self {
        ComplexOfModules { algebra: algebra.clone(), lo: 0, terms: Vec::new(), differentials: Vec::new() }
    }

    /// `M` placed in a single degree.
    pub fn concentrated(m: &Representation<F>, degree: i64) -> Self {
        ComplexOfModules { algebra: m.algebra().clone(), lo: degree, terms: vec![m.clone()], differentials: Vec::new() }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    /// Top degree; `lo - 1` for the empty complex.
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn term(&self, i: i64) -> Representation<F> {
        if i < self.lo || i > self.hi() {
            Representation::zero(&self.algebra)
        } else {
            self.terms[(i - self.lo) as usize].clone()
        }
    }

    /// `d^i: X^i -> X^{i+1}`, zero outside the stored range.
    pub fn differential(&self, i: i64) -> ModuleMap<F> {
        if i >= self.lo && i < self.hi() {
            self.differentials[(i - self.lo) as usize].clone()
        } else {
            ModuleMap::zero(&self.term(i), &self.term(i + 1))
        }
    }

    pub fn total_dim(&self) -> usize {
        self.terms.iter().map(Representation::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Representation::is_zero)
    }

    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].compose(&w[0]).is_zero())
    }

    /// `X[j]`: `X[j]^i = X^{i+j}`, differentials negated for odd `j`.
    pub fn shift(&self, j: i64) -> Self {
        let f = self.algebra.field();
        let minus = f.neg(&f.one());
        let differentials = if j % 2 == 0 {
            self.differentials.clone()
        } else {
            self.differentials.iter().map(|d| d.scale(&minus)).collect()
        };
        ComplexOfModules { algebra: self.algebra.clone(), lo: self.lo - j, terms: self.terms.clone(), differentials }
    }

    /// Drop zero terms at both ends.
    pub fn trim(&self) -> Self {
        let first = self.terms.iter().position(|t| !t.is_zero());
        let Some(first) = first else {
            return Self::zero(&self.algebra);
        };
        let last = self.terms.iter().rposition(|t| !t.is_zero()).unwrap();
        ComplexOfModules {
            algebra: self.algebra.clone(),
            lo: self.lo + first as i64,
            terms: self.terms[first..=last].to_vec(),
            differentials: self.differentials[first..last].to_vec(),
        }
    }

    /// `H^i`, as the quotient of the cycles by the boundaries.
    pub fn cohomology(&self, i: i64) -> Representation<F> {
        let (k, inc) = self.differential(i).kernel();
        if k.is_zero() {
            return k;
        }
        let d = self.differential(i - 1);
        let sub: Vec<Matrix<F>> = (0..k.dims().len())
            .map(|v| inc.blocks[v].solve(&d.blocks[v]).expect("boundaries are cycles"))
            .collect();
        k.quotient(&sub).0
    }

    /// `dim H^i` at every vertex, for all degrees with nonzero cohomology.
    pub fn cohomology_dims(&self) -> Vec<(i64, Vec<usize>)> {
        (self.lo..=self.hi())
            .filter_map(|i| {
                let d = self.cohomology_dim_vector(i);
                d.iter().any(|&x| x > 0).then_some((i, d))
            })
            .collect()
    }

    /// Dimension vector of `H^i` from ranks alone.
    pub fn cohomology_dim_vector(&self, i: i64) -> Vec<usize> {
        let out = self.differential(i);
        let inc = self.differential(i - 1);
        let x = self.term(i);
        (0..x.dims().len()).map(|v| x.dims()[v] - out.blocks[v].rank() - inc.blocks[v].rank()).collect()
    }

    /// Smallest and largest degree with nonzero cohomology.
    pub fn cohomology_support(&self) -> Option<(i64, i64)> {
        let degs: Vec<i64> = self.cohomology_dims().into_iter().map(|(i, _)| i).collect();
        Some((*degs.first()?, *degs.last()?))
    }

    pub fn is_acyclic(&self) -> bool {
        self.cohomology_support().is_none()
    }

    /// `D X` over the opposite algebra: `(DX)^i = D(X^{-i})`.
    pub fn dual(&self) -> Self {
        let op = self.algebra.opposite();
        if self.terms.is_empty() {
            return Self::zero(&op);
        }
        let terms = self.terms.iter().rev().map(Representation::dual).collect();
        let differentials = self.differentials.iter().rev().map(ModuleMap::dual).collect();
        ComplexOfModules { algebra: op, lo: -self.hi(), terms, differentials }
    }

    /// The mapping cone of a chain map `f: X -> Y`, given by its components
    /// `f^i` for `i` in `X.lo ..= X.hi`: `C^i = X^{i+1} ⊕ Y^i` with
    /// `d(x, y) = (-d x, f x + d y)`.
    pub fn cone(x: &Self, y: &Self, f: &[ModuleMap<F>]) -> Self {
        let a = &x.algebra;
        let fld = a.field();
        let minus = fld.neg(&fld.one());
        if x.terms.is_empty() && y.terms.is_empty() {
            return Self::zero(a);
        }
        let lo = (x.lo - 1).min(y.lo);
        let hi = (x.hi() - 1).max(y.hi());
        let comp = |i: i64| -> ModuleMap<F> {
            if i >= x.lo && i <= x.hi() {
                f[(i - x.lo) as usize].clone()
            } else {
                ModuleMap::zero(&x.term(i), &y.term(i))
            }
        };
        let sum = |i: i64| -> Representation<F> {
            let parts = [x.term(i + 1), y.term(i)];
            Representation::direct_sum(&parts)
        };
        let terms: Vec<Representation<F>> = (lo..=hi).map(sum).collect();
        let differentials = (lo..hi)
            .map(|i| {
                let src = &terms[(i - lo) as usize];
                let tgt = &terms[(i + 1 - lo) as usize];
                let dx = x.differential(i + 1).scale(&minus);
                let fi = comp(i + 1);
                let dy = y.differential(i);
                let blocks = (0..src.dims().len())
                    .map(|v| {
                        let top = dx.blocks[v].hstack(&Matrix::zeros(fld, dx.blocks[v].rows(), dy.blocks[v].cols()));
                        let bottom = fi.blocks[v].hstack(&dy.blocks[v]);
                        top.vstack(&bottom)
                    })
                    .collect();
                ModuleMap { source: src.clone(), target: tgt.clone(), blocks }
            })
            .collect();
        ComplexOfModules { algebra: a.clone(), lo, terms, differentials }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::algebra_from_strings;
    use crate::repmod::projective_cover;

    #[test]
    fn cohomology_of_a_presentation() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let s1 = Representation::simple(&a, 0);
        let c = projective_cover(&s1);
        let (k, inc) = c.map.kernel();
        let x = ComplexOfModules::new(&a, -1, vec![k, c.map.source.clone()], vec![inc]).unwrap();
        assert_eq!(x.cohomology_dims(), vec![(0, vec![1, 0])]);
        assert_eq!(x.cohomology(0).dims(), &[1, 0]);
        assert_eq!(x.shift(1).cohomology_support(), Some((-1, -1)));
        let d = x.dual();
        assert_eq!(d.lo, 0);
        assert_eq!(d.cohomology_support(), Some((0, 0)));
        assert!(ComplexOfModules::zero(&a).is_acyclic());
    }
}
