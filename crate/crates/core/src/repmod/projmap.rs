//! Direct sums of indecomposable projectives and the maps between them,
//! recorded as matrices of algebra elements.

use crate::exactla::Matrix;
use crate::field::Field;
use crate::quivalg::Algebra;
use crate::repmod::rep::{ModuleMap, Representation};

/// `⊕_h P_{vertices[h]}`. At vertex `w` the basis is the concatenation over
/// `h` of the paths `vertices[h] -> w`.
pub fn projective_sum<F: Field>(algebra: &Algebra<F>, vertices: &[usize]) -> Representation<F> {
    if vertices.is_empty() {
        return Representation::zero(algebra);
    }
    let parts: Vec<Representation<F>> = vertices.iter().map(|&v| Representation::projective(algebra, v)).collect();
    Representation::direct_sum(&parts)
}

/// Position of basis path `i` (from `vertices[h]` to `w`) in the total space
/// of `projective_sum(vertices)`.
pub fn projective_sum_index<F: Field>(algebra: &Algebra<F>, vertices: &[usize], h: usize, i: usize) -> usize {
    let p = &algebra.basis()[i];
    let w = p.end;
    let mut off = 0;
    for u in 0..w {
        off += vertices.iter().map(|&v| algebra.block(v, u).len()).sum::<usize>();
    }
    off += vertices[..h].iter().map(|&v| algebra.block(v, w).len()).sum::<usize>();
    off + algebra.block(vertices[h], w).iter().position(|&k| k == i).expect("path starts at the component vertex")
}

/// The map `⊕_g P_{vertices[g]} -> M` sending the `g`-th generator to
/// `images[g] ∈ M_{vertices[g]}`.
pub fn map_from_projectives<F: Field>(
    algebra: &Algebra<F>,
    vertices: &[usize],
    target: &Representation<F>,
    images: &[Vec<F::Elem>],
) -> ModuleMap<F> {
    let f = algebra.field();
    let source = projective_sum(algebra, vertices);
    let n = algebra.num_vertices();
    let orbits: Vec<Vec<Vec<F::Elem>>> = vertices.iter().zip(images).map(|(&v, m)| target.orbit(v, m)).collect();
    let blocks = (0..n)
        .map(|w| {
            let mut cols = Vec::new();
            for (g, &v) in vertices.iter().enumerate() {
                let from = algebra.paths_from(v);
                for &i in algebra.block(v, w) {
                    let k = from.iter().position(|&x| x == i).unwrap();
                    cols.push(orbits[g][k].clone());
                }
            }
            Matrix::from_columns(f, target.dims()[w], &cols)
        })
        .collect();
    ModuleMap { source, target: target.clone(), blocks }
}

/// Column of the `g`-th generator inside vertex `vertices[g]` of `projective_sum(vertices)`.
pub fn generator_column<F: Field>(algebra: &Algebra<F>, vertices: &[usize], g: usize) -> usize {
    let v = vertices[g];
    vertices[..g].iter().map(|&u| algebra.block(u, v).len()).sum::<usize>()
        + algebra.block(v, v).iter().position(|&k| k == v).expect("trivial path is a basis element")
}

/// Lift `g: P -> N` through `s: Q -> N` for `P = projective_sum(vertices)`,
/// assuming the image of `g` lies in the image of `s`.
pub fn lift_through<F: Field>(algebra: &Algebra<F>, vertices: &[usize], g: &ModuleMap<F>, s: &ModuleMap<F>) -> ModuleMap<F> {
    let images: Vec<Vec<F::Elem>> = (0..vertices.len())
        .map(|k| {
            let v = vertices[k];
            let y = g.blocks[v].column(generator_column(algebra, vertices, k));
            s.blocks[v].solve_vec(&y).expect("image of g lies in the image of s")
        })
        .collect();
    let mut out = map_from_projectives(algebra, vertices, &s.source, &images);
    out.source = g.source.clone();
    out
}

/// A map `⊕_g P_{source[g]} -> ⊕_h P_{target[h]}`; `entries[h][g]` is the
/// image of the `g`-th generator in component `h`, an element of
/// `e_{target[h]} A e_{source[g]}` in full basis coordinates.
#[derive(Clone, Debug)]
pub struct ProjMap<F: Field> {
    pub algebra: Algebra<F>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub entries: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> ProjMap<F> {
    pub fn zero(algebra: &Algebra<F>, source: Vec<usize>, target: Vec<usize>) -> Self {
        let z = vec![algebra.field().zero(); algebra.dim()];
        let entries = vec![vec![z; source.len()]; target.len()];
        ProjMap { algebra: algebra.clone(), source, target, entries }
    }

    pub fn is_zero(&self) -> bool {
        let f = self.algebra.field();
        self.entries.iter().flatten().flatten().all(|c| f.is_zero(c))
    }

    /// Image of generator `g` as a vector in the total space of the target sum.
    pub fn generator_image(&self, g: usize) -> Vec<F::Elem> {
        let a = &self.algebra;
        let f = a.field();
        let tgt_dim: usize = self.target.iter().map(|&v| a.paths_from(v).len()).sum();
        let mut out = vec![f.zero(); tgt_dim];
        for h in 0..self.target.len() {
            for (i, c) in self.entries[h][g].iter().enumerate() {
                if !f.is_zero(c) {
                    out[projective_sum_index(a, &self.target, h, i)] = c.clone();
                }
            }
        }
        out
    }

    pub fn to_module_map(&self) -> ModuleMap<F> {
        let target = projective_sum(&self.algebra, &self.target);
        let images: Vec<Vec<F::Elem>> = (0..self.source.len())
            .map(|g| {
                let full = self.generator_image(g);
                let v = self.source[g];
                let off = target.offset(v);
                full[off..off + target.dims()[v]].to_vec()
            })
            .collect();
        map_from_projectives(&self.algebra, &self.source, &target, &images)
    }

    /// Read off a projective map from a module map between projective sums.
    pub fn from_module_map(algebra: &Algebra<F>, source: &[usize], target: &[usize], m: &ModuleMap<F>) -> Self {
        let f = algebra.field();
        let tgt = &m.target;
        let mut entries = vec![vec![vec![f.zero(); algebra.dim()]; source.len()]; target.len()];
        for (g, &v) in source.iter().enumerate() {
            let col = generator_column(algebra, source, g);
            let img = m.blocks[v].column(col);
            let mut off = 0;
            for (h, &t) in target.iter().enumerate() {
                for (k, &i) in algebra.block(t, v).iter().enumerate() {
                    entries[h][g][i] = img[off + k].clone();
                }
                off += algebra.block(t, v).len();
            }
            debug_assert_eq!(off, tgt.dims()[v]);
        }
        ProjMap { algebra: algebra.clone(), source: source.to_vec(), target: target.to_vec(), entries }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let a = &self.algebra;
        let f = a.field();
        let mut out = Self::zero(a, other.source.clone(), self.target.clone());
        for k in 0..self.target.len() {
            for g in 0..other.source.len() {
                let mut acc = vec![f.zero(); a.dim()];
                for h in 0..self.source.len() {
                    let p = a.multiply(&self.entries[k][h], &other.entries[h][g]);
                    for (x, y) in acc.iter_mut().zip(p) {
                        *x = f.add(x, &y);
                    }
                }
                out.entries[k][g] = acc;
            }
        }
        out
    }

    /// `Hom_A(-, A)` of this map, a map of projectives over the opposite algebra.
    pub fn transpose(&self) -> Self {
        let op = self.algebra.opposite();
        let entries = (0..self.source.len())
            .map(|g| (0..self.target.len()).map(|h| self.entries[h][g].clone()).collect())
            .collect();
        ProjMap { algebra: op, source: self.target.clone(), target: self.source.clone(), entries }
    }

    /// Whether every entry lies in the radical (no trivial-path component).
    pub fn is_radical(&self) -> bool {
        let a = &self.algebra;
        let f = a.field();
        self.entries.iter().flatten().all(|e| (0..a.num_vertices()).all(|v| f.is_zero(&e[v])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::algebra_from_strings;

    #[test]
    fn roundtrip_and_composition() {
        let a = algebra_from_strings(&Rationals, &["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")], &[]).unwrap();
        // P2 -> P1 by left multiplication with a1, P3 -> P2 with a2
        let mut d1 = ProjMap::zero(&a, vec![1], vec![0]);
        d1.entries[0][0] = a.unit_vector(a.arrow_basis_index(0));
        let mut d2 = ProjMap::zero(&a, vec![2], vec![1]);
        d2.entries[0][0] = a.unit_vector(a.arrow_basis_index(1));
        let m1 = d1.to_module_map();
        assert!(m1.is_homomorphism());
        assert!(m1.is_injective());
        let back = ProjMap::from_module_map(&a, &[1], &[0], &m1);
        assert_eq!(back.entries, d1.entries);
        let c = d1.compose(&d2);
        let mc = m1.compose(&d2.to_module_map());
        assert_eq!(c.to_module_map().blocks, mc.blocks);
        assert!(!c.is_zero());
        assert!(c.is_radical());
        let t = d1.transpose();
        assert!(t.to_module_map().is_homomorphism());
    }
}
