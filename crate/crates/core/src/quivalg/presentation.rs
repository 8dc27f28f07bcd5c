//! Gabriel quiver and minimal relations of a split basic algebra.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{poly, Matrix, RowSpace};
use crate::field::Field;
use crate::quivalg::algebra::{Algebra, BoundQuiverAlgebra};
use crate::quivalg::findim::FinDimAlgebra;
use crate::quivalg::quiver::{Arrow, Path, PathElement, Quiver};

/// A bound quiver presentation of an abstract algebra together with the
/// elements the arrows were lifted to.
#[derive(Debug, Clone)]
pub struct Presentation<F: Field> {
    pub algebra: Algebra<F>,
    /// Coordinates in the source algebra of each arrow.
    pub arrow_elements: Vec<Vec<F::Elem>>,
    /// Number of minimal relations in each `(source, target)` block.
    pub relation_counts: Vec<Vec<usize>>,
}

impl<F: Field> Presentation<F> {
    /// Matrix sending the path basis of the presentation into the source algebra.
    pub fn basis_map(&self, b: &FinDimAlgebra<F>) -> Matrix<F> {
        let a = &self.algebra;
        let cols: Vec<Vec<F::Elem>> = a
            .basis()
            .iter()
            .map(|p| {
                let mut acc = b.idempotents()[p.start].clone();
                for &x in &p.arrows {
                    acc = b.multiply(&acc, &self.arrow_elements[x]);
                }
                acc
            })
            .collect();
        Matrix::from_columns(a.field(), b.dim(), &cols)
    }
}

fn span_products<F: Field>(b: &FinDimAlgebra<F>, xs: &[Vec<F::Elem>], ys: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let mut s = RowSpace::new(b.field(), b.dim());
    for x in xs {
        for y in ys {
            s.insert(b.multiply(x, y));
        }
    }
    s.basis().to_vec()
}

/// Recover a quiver with relations from an algebra whose idempotents are
/// primitive and whose simple modules are one-dimensional.
pub fn quiver_presentation<F: Field>(b: &FinDimAlgebra<F>) -> Result<Presentation<F>> {
    let f = b.field().clone();
    let dim = b.dim();
    let es = b.idempotents();
    let m = es.len();

    // Peirce blocks e_i B e_j
    let mut blocks: Vec<Vec<Vec<Vec<F::Elem>>>> = vec![vec![Vec::new(); m]; m];
    let mut total = 0;
    for i in 0..m {
        let li = b.left_mult_matrix(&es[i]);
        for j in 0..m {
            let rj = b.right_mult_matrix(&es[j]);
            let img = li.mul(&rj).column_space();
            blocks[i][j] = img.column_vectors();
            total += blocks[i][j].len();
        }
    }
    if total != dim {
        return Err(Error::NotBasic("idempotents do not decompose the algebra".into()));
    }

    // radical: off-diagonal blocks plus the kernel of the residue character
    // on each local corner algebra
    let mut rad: Vec<Vec<Vec<Vec<F::Elem>>>> = blocks.clone();
    for i in 0..m {
        let corner = RowSpace::spanned_by(&f, dim, blocks[i][i].iter().cloned());
        let d = corner.dim();
        let cb = corner.basis().to_vec();
        let mut rad_i = RowSpace::new(&f, dim);
        for x in &cb {
            // matrix of left multiplication by x on the corner
            let cols: Vec<Vec<F::Elem>> =
                cb.iter().map(|y| corner.coordinates(&b.multiply(x, y)).expect("corner is a subalgebra")).collect();
            let lx = Matrix::from_columns(&f, d, &cols);
            let roots = f.roots(&poly::charpoly(&lx));
            let lambda = match roots.len() {
                0 => return Err(Error::NotSplit(format!("corner algebra at vertex {} has no eigenvalue", i + 1))),
                1 => roots[0].clone(),
                _ => return Err(Error::NotBasic(format!("idempotent {} is not primitive", i + 1))),
            };
            let r: Vec<F::Elem> = x.iter().zip(&es[i]).map(|(a, e)| f.sub(a, &f.mul(&lambda, e))).collect();
            rad_i.insert(r);
        }
        if rad_i.dim() + 1 != d {
            return Err(Error::NotBasic(format!("corner algebra at vertex {} is not local", i + 1)));
        }
        rad[i][i] = rad_i.basis().to_vec();
    }

    // rad^2 and the arrows as a complement
    let mut arrows = Vec::new();
    let mut arrow_elements = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let mut sq = RowSpace::new(&f, dim);
            for k in 0..m {
                for v in span_products(b, &rad[i][k], &rad[k][j]) {
                    sq.insert(v);
                }
            }
            for r in &rad[i][j] {
                if sq.insert(r.clone()) {
                    arrows.push(Arrow { label: format!("a{}", arrows.len() + 1), source: i, target: j });
                    arrow_elements.push(r.clone());
                }
            }
        }
    }
    let quiver = Quiver::new((1..=m).map(|i| i.to_string()).collect(), arrows)?;

    // nilpotency index of the radical
    let mut power = rad.clone();
    let mut nil = 1;
    while power.iter().flatten().any(|blk| !blk.is_empty()) {
        nil += 1;
        if nil > dim + 1 {
            return Err(Error::NotBasic("radical is not nilpotent".into()));
        }
        let mut next = vec![vec![Vec::new(); m]; m];
        for i in 0..m {
            for j in 0..m {
                let mut s = RowSpace::new(&f, dim);
                for k in 0..m {
                    for v in span_products(b, &power[i][k], &rad[k][j]) {
                        s.insert(v);
                    }
                }
                next[i][j] = s.basis().to_vec();
            }
        }
        power = next;
    }
    // paths of length 1..=nil with their images
    let mut paths: Vec<Vec<Vec<(Vec<usize>, Vec<F::Elem>)>>> = vec![vec![Vec::new(); m]; m];
    let mut frontier: Vec<(Vec<usize>, Vec<F::Elem>)> =
        (0..quiver.num_arrows()).map(|a| (vec![a], arrow_elements[a].clone())).collect();
    for len in 1..=nil {
        let mut next = Vec::new();
        for (w, img) in frontier {
            let s = quiver.arrow(w[0]).source;
            let t = quiver.arrow(*w.last().unwrap()).target;
            if len < nil {
                for a in quiver.arrows_from(t) {
                    let mut w2 = w.clone();
                    w2.push(a);
                    next.push((w2, b.multiply(&img, &arrow_elements[a])));
                }
            }
            paths[s][t].push((w, img));
        }
        frontier = next;
    }

    // kernel of the path map in each block, then a complement of (JI + IJ)
    let mut kernels: Vec<Vec<Vec<Vec<F::Elem>>>> = vec![vec![Vec::new(); m]; m];
    let mut coords: Vec<Vec<HashMap<Vec<usize>, usize>>> = vec![vec![HashMap::new(); m]; m];
    for u in 0..m {
        for v in 0..m {
            let ps = &paths[u][v];
            // columns ordered by length descending so that echelon rows with
            // late pivots only involve short paths
            let mut order: Vec<usize> = (0..ps.len()).collect();
            order.sort_by(|&x, &y| ps[y].0.len().cmp(&ps[x].0.len()).then(x.cmp(&y)));
            let sorted: Vec<(Vec<usize>, Vec<F::Elem>)> = order.iter().map(|&k| ps[k].clone()).collect();
            paths[u][v] = sorted;
            let ps = &paths[u][v];
            coords[u][v] = ps.iter().enumerate().map(|(k, (w, _))| (w.clone(), k)).collect();
            let img = Matrix::from_columns(&f, dim, &ps.iter().map(|(_, x)| x.clone()).collect::<Vec<_>>());
            let mut k = img.kernel();
            k.rref_in_place();
            kernels[u][v] = k.row_vectors().into_iter().filter(|r| r.iter().any(|c| !f.is_zero(c))).collect();
        }
    }
    let mut relations = Vec::new();
    let mut relation_counts = vec![vec![0; m]; m];
    for u in 0..m {
        for v in 0..m {
            let n_uv = paths[u][v].len();
            let mut gen = RowSpace::new(&f, n_uv);
            let idx = &coords[u][v];
            // a * k for arrows a: u -> w, k in I(w, v)
            for a in quiver.arrows_from(u) {
                let w = quiver.arrow(a).target;
                for k in &kernels[w][v] {
                    let mut vec = vec![f.zero(); n_uv];
                    for (c, (p, _)) in k.iter().zip(&paths[w][v]) {
                        if f.is_zero(c) {
                            continue;
                        }
                        let mut q = vec![a];
                        q.extend_from_slice(p);
                        if let Some(&ix) = idx.get(&q) {
                            vec[ix] = f.add(&vec[ix], c);
                        }
                    }
                    gen.insert(vec);
                }
            }
            for a in quiver.arrows_to(v) {
                let w = quiver.arrow(a).source;
                for k in &kernels[u][w] {
                    let mut vec = vec![f.zero(); n_uv];
                    for (c, (p, _)) in k.iter().zip(&paths[u][w]) {
                        if f.is_zero(c) {
                            continue;
                        }
                        let mut q = p.clone();
                        q.push(a);
                        if let Some(&ix) = idx.get(&q) {
                            vec[ix] = f.add(&vec[ix], c);
                        }
                    }
                    gen.insert(vec);
                }
            }
            for k in kernels[u][v].iter().rev() {
                if gen.insert(k.clone()) {
                    let terms = k
                        .iter()
                        .zip(&paths[u][v])
                        .filter(|(c, _)| !f.is_zero(c))
                        .map(|(c, (p, _))| Ok((Path::from_arrows(&quiver, p.clone())?, c.clone())))
                        .collect::<Result<Vec<_>>>()?;
                    relations.push(PathElement::new(terms));
                    relation_counts[u][v] += 1;
                }
            }
        }
    }
    let algebra = BoundQuiverAlgebra::with_cap(&f, quiver, relations, nil.max(2) + 1)?;
    if algebra.dim() != dim {
        return Err(Error::NotBasic(format!(
            "presentation has dimension {} but the algebra has dimension {dim}",
            algebra.dim()
        )));
    }
    Ok(Presentation { algebra, arrow_elements, relation_counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::quivalg::algebra::algebra_from_strings;

    #[test]
    fn semisimple_two_points() {
        let f = Rationals;
        let e = |i: usize| -> Vec<_> { (0..2).map(|k| if k == i { f.one() } else { f.zero() }).collect() };
        let b = FinDimAlgebra::from_product(&f, vec!["e1".into(), "e2".into()], vec![e(0), e(1)], None, |i, j| {
            if i == j {
                e(i)
            } else {
                vec![f.zero(); 2]
            }
        });
        let p = quiver_presentation(&b).unwrap();
        assert_eq!(p.algebra.quiver().num_vertices(), 2);
        assert_eq!(p.algebra.quiver().num_arrows(), 0);
    }

    #[test]
    fn roundtrip_keeps_dimension_and_quiver() {
        let f = PrimeField::default();
        let a = algebra_from_strings(
            &f,
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
            &["a*b - c*d"],
        )
        .unwrap();
        let p = quiver_presentation(&a.to_findim()).unwrap();
        assert_eq!(p.algebra.dim(), a.dim());
        assert!(p.algebra.quiver().is_isomorphic(a.quiver()));
        assert_eq!(p.algebra.relations().len(), 1);
        let zero = algebra_from_strings(&f, &["1", "2", "3"], &[("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")], &["x*y", "y*z", "z*x"]).unwrap();
        let p = quiver_presentation(&zero.to_findim()).unwrap();
        assert_eq!(p.algebra.dim(), 6);
        assert_eq!(p.algebra.relations().len(), 3);
    }

    #[test]
    fn non_split_corner_is_refused() {
        // Q(i) as a one-vertex algebra: basis 1, i with i^2 = -1
        let f = Rationals;
        let b = FinDimAlgebra::from_product(&f, vec!["1".into(), "i".into()], vec![vec![f.one(), f.zero()]], None, |x, y| {
            match (x, y) {
                (0, k) | (k, 0) => (0..2).map(|t| if t == k { f.one() } else { f.zero() }).collect(),
                _ => vec![f.from_i64(-1), f.zero()],
            }
        });
        assert!(matches!(quiver_presentation(&b), Err(Error::NotSplit(_))));
    }
}
