use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;
use crate::repmod::rep::{ModuleMap, Representation};

pub(crate) fn check_same<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<()> {
    if m.algebra().same_as(n.algebra()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// The linear system whose solutions are the homomorphisms `M -> N`, with
/// the unknowns laid out vertex by vertex, each block row-major.
fn intertwiner_system<F: Field>(m: &Representation<F>, n: &Representation<F>) -> (Matrix<F>, Vec<usize>) {
    let f = m.field();
    let q = m.algebra().quiver();
    let nv = q.num_vertices();
    let mut offs = Vec::with_capacity(nv + 1);
    let mut acc = 0;
    for v in 0..nv {
        offs.push(acc);
        acc += m.dims()[v] * n.dims()[v];
    }
    offs.push(acc);
    let neq: usize = q.arrows().iter().map(|a| n.dims()[a.target] * m.dims()[a.source]).sum();
    let mut sys = Matrix::zeros(f, neq, acc);
    let mut row = 0;
    for (ai, arr) in q.arrows().iter().enumerate() {
        let (u, v) = (arr.source, arr.target);
        let (mu, mv, nu, nv_) = (m.dims()[u], m.dims()[v], n.dims()[u], n.dims()[v]);
        let na = n.map(ai);
        let ma = m.map(ai);
        for r in 0..nv_ {
            for c in 0..mu {
                // (N(a) f_u)[r][c] - (f_v M(a))[r][c]
                for k in 0..nu {
                    let x = na.get(r, k);
                    if !f.is_zero(x) {
                        let col = offs[u] + k * mu + c;
                        let cur = f.add(sys.get(row, col), x);
                        sys.set(row, col, cur);
                    }
                }
                for k in 0..mv {
                    let x = ma.get(k, c);
                    if !f.is_zero(x) {
                        let col = offs[v] + r * mv + k;
                        let cur = f.sub(sys.get(row, col), x);
                        sys.set(row, col, cur);
                    }
                }
                row += 1;
            }
        }
    }
    (sys, offs)
}

/// A basis of `Hom(M, N)`.
pub fn hom_space<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<Vec<ModuleMap<F>>> {
    check_same(m, n)?;
    let f = m.field();
    let (sys, offs) = intertwiner_system(m, n);
    let ns = sys.null_space();
    let nv = m.dims().len();
    Ok((0..ns.cols())
        .map(|k| {
            let blocks = (0..nv)
                .map(|v| {
                    let (r, c) = (n.dims()[v], m.dims()[v]);
                    Matrix::from_fn(f, r, c, |i, j| ns.get(offs[v] + i * c + j, k).clone())
                })
                .collect();
            ModuleMap { source: m.clone(), target: n.clone(), blocks }
        })
        .collect())
}

pub fn hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
    check_same(m, n)?;
    let (sys, _) = intertwiner_system(m, n);
    Ok(sys.cols() - sys.rank())
}

/// Coordinates of a homomorphism with respect to a basis from [`hom_space`].
pub fn hom_coordinates<F: Field>(basis: &[ModuleMap<F>], g: &ModuleMap<F>) -> Option<Vec<F::Elem>> {
    let f = g.source.field();
    let flat = |h: &ModuleMap<F>| -> Vec<F::Elem> { h.blocks.iter().flat_map(|b| b.data().to_vec()).collect() };
    let len = flat(g).len();
    let cols: Vec<Vec<F::Elem>> = basis.iter().map(flat).collect();
    let m = Matrix::from_columns(f, len, &cols);
    m.solve_vec(&flat(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::algebra_from_strings;

    #[test]
    fn small_hom_spaces() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let p1 = Representation::projective(&a, 0);
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&p1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&s1, &p1).unwrap(), 0);
        assert_eq!(hom_dim(&s2, &p1).unwrap(), 1);
        for h in hom_space(&p1, &s1).unwrap() {
            assert!(h.is_homomorphism());
        }
        let c = algebra_from_strings(&Rationals, &["1", "2"], &[("b", "2", "1")], &[]).unwrap();
        assert_eq!(hom_dim(&s1, &Representation::simple(&c, 0)), Err(Error::AlgebraMismatch));
    }
}
