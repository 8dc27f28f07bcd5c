use crate::error::Result;
use crate::field::Field;
use crate::quivalg::FinDimAlgebra;
use crate::repmod::hom::{hom_coordinates, hom_space};
use crate::repmod::rep::{ModuleMap, Representation};

/// `End(⊕ M_i)` for pairwise non-isomorphic indecomposables, with product
/// `f·g = f∘g`. The basis of `e_i End e_j` is a basis of `Hom(M_j, M_i)`,
/// and `basis[k]` records `(i, j, map)`.
#[derive(Clone, Debug)]
pub struct EndAlgebra<F: Field> {
    pub algebra: FinDimAlgebra<F>,
    pub basis: Vec<(usize, usize, ModuleMap<F>)>,
    pub summands: Vec<Representation<F>>,
}

/// Hom-space bases between every ordered pair of summands.
fn hom_blocks<F: Field>(mods: &[Representation<F>]) -> Result<Vec<Vec<Vec<ModuleMap<F>>>>> {
    let r = mods.len();
    let mut out = vec![vec![Vec::new(); r]; r];
    for i in 0..r {
        for j in 0..r {
            out[i][j] = hom_space(&mods[j], &mods[i])?;
        }
    }
    Ok(out)
}

pub fn endomorphism_algebra<F: Field>(mods: &[Representation<F>]) -> Result<EndAlgebra<F>> {
    let blocks = hom_blocks(mods)?;
    endomorphism_from_blocks(mods, blocks)
}

fn endomorphism_from_blocks<F: Field>(
    mods: &[Representation<F>],
    blocks: Vec<Vec<Vec<ModuleMap<F>>>>,
) -> Result<EndAlgebra<F>> {
    let f = mods[0].field().clone();
    let r = mods.len();
    let mut basis = Vec::new();
    let mut start = vec![vec![0; r]; r];
    for (i, row) in blocks.iter().enumerate() {
        for (j, maps) in row.iter().enumerate() {
            start[i][j] = basis.len();
            for m in maps {
                basis.push((i, j, m.clone()));
            }
        }
    }
    let dim = basis.len();
    let labels = basis.iter().enumerate().map(|(k, (i, j, _))| format!("h{}_{}_{}", i + 1, j + 1, k)).collect();
    let idempotents = (0..r)
        .map(|i| {
            let id = ModuleMap::identity(&mods[i]);
            let c = hom_coordinates(&blocks[i][i], &id).expect("identity lies in End");
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
            let c = hom_coordinates(&blocks[*i][*l], &a.compose(b)).expect("composite lies in the Hom block");
            mult.push(c.into_iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(t, x)| (start[*i][*l] + t, x)).collect());
        }
    }
    let algebra = FinDimAlgebra::new(&f, labels, mult, idempotents, None);
    Ok(EndAlgebra { algebra, basis, summands: mods.to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::{algebra_from_strings, quiver_presentation};

    #[test]
    fn end_of_regular_module_is_opposite_quiver() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let e = endomorphism_algebra(&[Representation::projective(&a, 0), Representation::projective(&a, 1)]).unwrap();
        assert_eq!(e.algebra.dim(), 3);
        assert!(e.algebra.check_axioms());
        let p = quiver_presentation(&e.algebra).unwrap();
        let arr = &p.algebra.quiver().arrows()[0];
        // the map P2 -> P1 is an arrow 1 -> 2 under f·g = f∘g
        assert_eq!((arr.source, arr.target), (0, 1));
    }
}
