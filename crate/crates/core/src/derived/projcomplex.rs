use crate::derived::complex::ComplexOfModules;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;
use crate::quivalg::Algebra;
use crate::repmod::{projective_sum, ProjMap, Representation};

/// A bounded complex of projectives `⊕_g P_{vertices[k][g]}` in degree
/// `lo + k`, with differentials recorded as matrices of algebra elements.
#[derive(Clone, Debug)]
pub struct ProjComplex<F: Field> {
    algebra: Algebra<F>,
    pub lo: i64,
    pub vertices: Vec<Vec<usize>>,
    pub differentials: Vec<ProjMap<F>>,
}

/// Inverse of a unit of the local algebra `e_v A e_v`.
fn local_inverse<F: Field>(a: &Algebra<F>, v: usize, x: &[F::Elem]) -> Vec<F::Elem> {
    let f = a.field();
    let blk = a.block(v, v);
    let cols: Vec<Vec<F::Elem>> = blk
        .iter()
        .map(|&j| {
            let p = a.multiply(x, &a.unit_vector(j));
            blk.iter().map(|&i| p[i].clone()).collect()
        })
        .collect();
    let m = Matrix::from_columns(f, blk.len(), &cols);
    let e: Vec<F::Elem> = blk.iter().map(|&i| if i == a.vertex_basis_index(v) { f.one() } else { f.zero() }).collect();
    let y = m.solve_vec(&e).expect("entry with a trivial-path component is a unit");
    let mut out = vec![f.zero(); a.dim()];
    for (k, &i) in blk.iter().enumerate() {
        out[i] = y[k].clone();
    }
    out
}

fn sub_elems<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    x.iter().zip(y).map(|(a, b)| f.sub(a, b)).collect()
}

impl<F: Field> ProjComplex<F> {
    pub fn new(algebra: &Algebra<F>, lo: i64, vertices: Vec<Vec<usize>>, differentials: Vec<ProjMap<F>>) -> Result<Self> {
        if differentials.len() + 1 != vertices.len().max(1) {
            return Err(Error::InvalidParameter("a complex needs one differential between consecutive terms".into()));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.source != vertices[k] || d.target != vertices[k + 1] {
                return Err(Error::InvalidParameter(format!("differential {k} has the wrong shape")));
            }
        }
        let c = ProjComplex { algebra: algebra.clone(), lo, vertices, differentials };
        if !c.is_complex() {
            return Err(Error::InvalidParameter("d∘d ≠ 0".into()));
        }
        Ok(c)
    }

    pub fn zero(algebra: &Algebra<F>) -> Self {
        ProjComplex { algebra: algebra.clone(), lo: 0, vertices: Vec::new(), differentials: Vec::new() }
    }

    /// `P_v` in degree 0.
    pub fn indecomposable_projective(algebra: &Algebra<F>, v: usize) -> Self {
        ProjComplex { algebra: algebra.clone(), lo: 0, vertices: vec![vec![v]], differentials: Vec::new() }
    }

    /// `Λ = ⊕_v P_v` in degree 0.
    pub fn regular(algebra: &Algebra<F>) -> Self {
        let vs = (0..algebra.num_vertices()).collect();
        ProjComplex { algebra: algebra.clone(), lo: 0, vertices: vec![vs], differentials: Vec::new() }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.vertices.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.vertices.iter().all(Vec::is_empty)
    }

    /// Number of indecomposable projective summands over all degrees.
    pub fn rank(&self) -> usize {
        self.vertices.iter().map(Vec::len).sum()
    }

    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].compose(&w[0]).is_zero())
    }

    /// All differentials lie in the radical.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(ProjMap::is_radical)
    }

    pub fn shift(&self, j: i64) -> Self {
        let f = self.algebra.field();
        let mut out = self.clone();
        out.lo -= j;
        if j % 2 != 0 {
            for d in &mut out.differentials {
                for e in d.entries.iter_mut().flatten() {
                    for c in e.iter_mut() {
                        *c = f.neg(c);
                    }
                }
            }
        }
        out
    }

    pub fn trim(&self) -> Self {
        let Some(first) = self.vertices.iter().position(|v| !v.is_empty()) else {
            return Self::zero(&self.algebra);
        };
        let last = self.vertices.iter().rposition(|v| !v.is_empty()).unwrap();
        ProjComplex {
            algebra: self.algebra.clone(),
            lo: self.lo + first as i64,
            vertices: self.vertices[first..=last].to_vec(),
            differentials: self.differentials[first..last].to_vec(),
        }
    }

    pub fn to_complex(&self) -> ComplexOfModules<F> {
        let terms: Vec<Representation<F>> = self.vertices.iter().map(|vs| projective_sum(&self.algebra, vs)).collect();
        let differentials = self
            .differentials
            .iter()
            .enumerate()
            .map(|(k, d)| d.to_module_map().retarget(&terms[k], &terms[k + 1]))
            .collect();
        ComplexOfModules::from_parts(&self.algebra, self.lo, terms, differentials)
    }

    /// `Hom_A(P, A)` over the opposite algebra, with `Hom(P^{-i}, A)` in degree `i`.
    pub fn transpose(&self) -> Self {
        let op = self.algebra.opposite();
        if self.vertices.is_empty() {
            return Self::zero(&op);
        }
        ProjComplex {
            algebra: op,
            lo: -self.hi(),
            vertices: self.vertices.iter().rev().cloned().collect(),
            differentials: self.differentials.iter().rev().map(ProjMap::transpose).collect(),
        }
    }

    /// Cancel contractible summands `P_v --unit--> P_v` by Gaussian
    /// elimination until every differential is radical.
    pub fn reduce(&self) -> Self {
        let a = &self.algebra;
        let f = a.field();
        let mut c = self.clone();
        'outer: loop {
            for k in 0..c.differentials.len() {
                let d = &c.differentials[k];
                for (h, &t) in d.target.iter().enumerate() {
                    for (g, &s) in d.source.iter().enumerate() {
                        if s == t && !f.is_zero(&d.entries[h][g][a.vertex_basis_index(s)]) {
                            c = c.cancel(k, h, g);
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        c.trim()
    }

    /// Remove the pair (component `g` of degree `lo+k`, component `h` of
    /// degree `lo+k+1`) joined by a unit entry of `d^k`.
    fn cancel(&self, k: usize, h: usize, g: usize) -> Self {
        let a = &self.algebra;
        let f = a.field();
        let d = &self.differentials[k];
        let inv = local_inverse(a, d.source[g], &d.entries[h][g]);
        let keep_src: Vec<usize> = (0..d.source.len()).filter(|&x| x != g).collect();
        let keep_tgt: Vec<usize> = (0..d.target.len()).filter(|&x| x != h).collect();
        let mut nd = ProjMap::zero(
            a,
            keep_src.iter().map(|&x| d.source[x]).collect(),
            keep_tgt.iter().map(|&x| d.target[x]).collect(),
        );
        for (r, &hh) in keep_tgt.iter().enumerate() {
            let left = a.multiply(&d.entries[hh][g], &inv);
            for (cidx, &gg) in keep_src.iter().enumerate() {
                let corr = a.multiply(&left, &d.entries[h][gg]);
                nd.entries[r][cidx] = sub_elems(f, &d.entries[hh][gg], &corr);
            }
        }
        let mut out = self.clone();
        out.vertices[k] = nd.source.clone();
        out.vertices[k + 1] = nd.target.clone();
        out.differentials[k] = nd;
        if k > 0 {
            let p = &mut out.differentials[k - 1];
            p.entries.remove(g);
            p.target.remove(g);
        }
        if k + 1 < out.differentials.len() {
            let n = &mut out.differentials[k + 1];
            for row in n.entries.iter_mut() {
                row.remove(h);
            }
            n.source.remove(h);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::algebra_from_strings;

    #[test]
    fn cancels_identity_component() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        // P2 -> P2 ⊕ P1 by (id, a) reduces to P1 in degree 1
        let mut d = ProjMap::zero(&a, vec![1], vec![1, 0]);
        d.entries[0][0] = a.unit_vector(a.vertex_basis_index(1));
        d.entries[1][0] = a.unit_vector(a.arrow_basis_index(0));
        let c = ProjComplex::new(&a, 0, vec![vec![1], vec![1, 0]], vec![d]).unwrap();
        let r = c.reduce();
        assert_eq!(r.vertices, vec![vec![0]]);
        assert_eq!(r.lo, 1);
        assert!(r.is_minimal());
        assert_eq!(r.to_complex().cohomology_dims(), c.to_complex().cohomology_dims());
        let t = c.transpose();
        assert_eq!((t.lo, t.hi()), (-1, 0));
        assert!(t.is_complex());
    }
}
