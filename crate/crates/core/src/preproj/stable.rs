use crate::error::Result;
use crate::exactla::{quotient_data, Matrix, QuotientData};
use crate::field::Field;
use crate::preproj::module::{basic, preprojective_module};
use crate::quivalg::{quiver_presentation, FinDimAlgebra};
use crate::repmod::{endomorphism_algebra, hom_coordinates, hom_dim, hom_space, projective_cover, ModuleMap, Representation};

/// `Hom̲(M, N)`: a basis of `Hom(M, N)` together with the quotient by the
/// maps factoring through a projective.
#[derive(Clone, Debug)]
pub struct StableHom<F: Field> {
    pub hom_basis: Vec<ModuleMap<F>>,
    pub quotient: QuotientData<F>,
}

impl<F: Field> StableHom<F> {
    pub fn dim(&self) -> usize {
        self.quotient.complement.cols()
    }

    /// Maps whose classes form a basis of the stable Hom space.
    pub fn representatives(&self) -> Vec<ModuleMap<F>> {
        let c = &self.quotient.complement;
        (0..c.cols())
            .map(|k| {
                let mut acc = ModuleMap::zero(&self.hom_basis[0].source, &self.hom_basis[0].target);
                for (i, b) in self.hom_basis.iter().enumerate() {
                    acc = acc.add(&b.scale(c.get(i, k)));
                }
                acc
            })
            .collect()
    }

    /// Coordinates of the class of `g` in the basis of [`representatives`](Self::representatives).
    pub fn coordinates(&self, g: &ModuleMap<F>) -> Option<Vec<F::Elem>> {
        if self.hom_basis.is_empty() {
            return Some(Vec::new());
        }
        let c = hom_coordinates(&self.hom_basis, g)?;
        Some(self.quotient.projection.mul_vec(&c))
    }
}

/// Any map to `N` through a projective factors through the projective cover
/// of `N`, so the projectively trivial maps are `π∘Hom(M, P(N))`.
pub fn stable_hom<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<StableHom<F>> {
    let f = m.field();
    let hom_basis = hom_space(m, n)?;
    let cover = projective_cover(n);
    let through: Vec<Vec<F::Elem>> = if cover.vertices.is_empty() {
        Vec::new()
    } else {
        hom_space(m, &cover.map.source)?
            .iter()
            .map(|g| hom_coordinates(&hom_basis, &cover.map.compose(g)).expect("composite lies in Hom(M, N)"))
            .collect()
    };
    let sub = Matrix::from_columns(f, hom_basis.len(), &through);
    let quotient = quotient_data(f, hom_basis.len(), &sub);
    Ok(StableHom { hom_basis, quotient })
}

/// `End̲(⊕ M_i)` of pairwise non-isomorphic non-projective indecomposables,
/// with `f·g = f∘g` as for [`endomorphism_algebra`].
pub fn stable_endomorphism_algebra<F: Field>(field: &F, mods: &[Representation<F>]) -> Result<FinDimAlgebra<F>> {
    let f = field;
    let r = mods.len();
    let mut blocks: Vec<Vec<StableHom<F>>> = Vec::with_capacity(r);
    for i in 0..r {
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            row.push(stable_hom(&mods[j], &mods[i])?);
        }
        blocks.push(row);
    }
    let mut basis = Vec::new();
    let mut start = vec![vec![0; r]; r];
    for i in 0..r {
        for j in 0..r {
            start[i][j] = basis.len();
            for g in blocks[i][j].representatives() {
                basis.push((i, j, g));
            }
        }
    }
    let dim = basis.len();
    let labels = basis.iter().enumerate().map(|(k, (i, j, _))| format!("s{}_{}_{}", i + 1, j + 1, k)).collect();
    let idempotents = (0..r)
        .map(|i| {
            let c = blocks[i][i].coordinates(&ModuleMap::identity(&mods[i])).expect("identity lies in End");
            let mut v = vec![f.zero(); dim];
            for (k, x) in c.into_iter().enumerate() {
                v[start[i][i] + k] = x;
            }
            v
        })
        .collect();
    let mut mult = Vec::with_capacity(dim * dim);
    for (i, j, a) in &basis {
        for (k, l, b) in &basis {
            if j != k {
                mult.push(Vec::new());
                continue;
            }
            let c = blocks[*i][*l].coordinates(&a.compose(b)).expect("composite lies in the Hom block");
            mult.push(c.into_iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(t, x)| (start[*i][*l] + t, x)).collect());
        }
    }
    Ok(FinDimAlgebra::new(f, labels, mult, idempotents, None))
}

/// `Γ = End̲(Λ̃)`, computed on the basic non-projective summands.
#[derive(Clone, Debug)]
pub struct StableAuslander<F: Field> {
    pub algebra: FinDimAlgebra<F>,
    pub summands: Vec<Representation<F>>,
    /// Whether `Hom(Λ̃_P, Λ) = 0`.
    pub p_free_hom_vanishes: bool,
    /// `End(Λ̃_P)`, computed when `Hom(Λ̃_P, Λ) = 0`.
    pub p_free_endomorphisms: Option<FinDimAlgebra<F>>,
}

impl<F: Field> StableAuslander<F> {
    /// When `End(Λ̃_P)` is available, both algebras have the same dimension
    /// and isomorphic quiver presentations.
    pub fn identification_holds(&self) -> Result<Option<bool>> {
        let Some(e) = &self.p_free_endomorphisms else {
            return Ok(None);
        };
        if e.dim() != self.algebra.dim() {
            return Ok(Some(false));
        }
        if e.dim() == 0 {
            return Ok(Some(true));
        }
        let p = quiver_presentation(&self.algebra)?;
        let q = quiver_presentation(e)?;
        Ok(Some(
            p.algebra.quiver().is_isomorphic(q.algebra.quiver())
                && p.algebra.relations().len() == q.algebra.relations().len(),
        ))
    }
}

pub fn stable_endomorphism<F: Field>(a: &crate::quivalg::Algebra<F>, n: usize, cap: usize) -> Result<StableAuslander<F>> {
    let split = preprojective_module(a, n, cap)?;
    let summands = basic(&split.p_free_summands())?;
    let algebra = stable_endomorphism_algebra(a.field(), &summands)?;
    let mut vanishes = true;
    for s in &summands {
        for v in 0..a.num_vertices() {
            if hom_dim(s, &Representation::projective(a, v))? > 0 {
                vanishes = false;
            }
        }
    }
    let p_free_endomorphisms = if vanishes && !summands.is_empty() {
        Some(endomorphism_algebra(&summands)?.algebra)
    } else if vanishes {
        Some(algebra.clone())
    } else {
        None
    };
    Ok(StableAuslander { algebra, summands, p_free_hom_vanishes: vanishes, p_free_endomorphisms })
}
