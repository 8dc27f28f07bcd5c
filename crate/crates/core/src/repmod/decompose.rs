use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{poly, Matrix, RowSpace};
use crate::field::Field;
use crate::repmod::hom::{check_same, hom_space};
use crate::repmod::rep::{ModuleMap, Representation};

/// Random trials before falling back to deterministic arguments.
pub const RANDOM_TRIALS: usize = 32;

/// Default seed for randomized searches.
pub const DEFAULT_SEED: u64 = 0x1a2b_3c4d;

fn random_combination<F: Field>(basis: &[ModuleMap<F>], rng: &mut ChaCha8Rng) -> ModuleMap<F> {
    let f = basis[0].source.field();
    let mut acc = basis[0].scale(&f.random(rng));
    for b in &basis[1..] {
        acc = acc.add(&b.scale(&f.random(rng)));
    }
    acc
}

/// Fitting split along eigenvalue `lambda` of `g`: the generalized
/// eigenspace and the image of a high power of `g - lambda`.
fn fitting_split<F: Field>(m: &Representation<F>, g: &ModuleMap<F>, lambda: &F::Elem) -> (Representation<F>, Representation<F>) {
    let f = m.field();
    let d = m.dim() as u64;
    let shifted: Vec<Matrix<F>> = g
        .blocks
        .iter()
        .map(|b| b.sub(&Matrix::identity(f, b.rows()).scale(lambda)).pow(d))
        .collect();
    let ker: Vec<Matrix<F>> = shifted.iter().map(Matrix::null_space).collect();
    let img: Vec<Matrix<F>> = shifted.iter().map(Matrix::column_space).collect();
    (m.restrict(&ker).0, m.restrict(&img).0)
}

/// Try to split `m` using endomorphism `g`. `Ok(None)` when `g` has a single
/// eigenvalue.
fn try_split<F: Field>(m: &Representation<F>, g: &ModuleMap<F>) -> Result<Option<(Representation<F>, Representation<F>)>> {
    let total = g.total_matrix();
    let cp = poly::charpoly(&total);
    let roots = m.field().roots(&cp);
    let Some(lambda) = roots.first() else {
        return Err(Error::NonSplitEndo);
    };
    let (a, b) = fitting_split(m, g, lambda);
    if a.dim() == m.dim() {
        Ok(None)
    } else {
        Ok(Some((a, b)))
    }
}

/// Whether `End(M)` is local, decided deterministically: the span `N` of
/// `f - λ_f` over a basis must be nilpotent.
fn end_is_local<F: Field>(m: &Representation<F>, basis: &[ModuleMap<F>]) -> Result<bool> {
    let f = m.field();
    let n = m.dim();
    let mut nil: Vec<Matrix<F>> = Vec::new();
    for b in basis {
        let t = b.total_matrix();
        let roots = f.roots(&poly::charpoly(&t));
        match roots.len() {
            0 => return Err(Error::NonSplitEndo),
            1 => nil.push(t.sub(&Matrix::identity(f, n).scale(&roots[0]))),
            _ => return Ok(false),
        }
    }
    let flat = |x: &Matrix<F>| x.data().to_vec();
    let mut power = RowSpace::spanned_by(f, n * n, nil.iter().map(flat));
    let gens = power.clone();
    let to_mats = |s: &RowSpace<F>| -> Vec<Matrix<F>> {
        s.basis().iter().map(|v| Matrix::from_fn(f, n, n, |r, c| v[r * n + c].clone())).collect()
    };
    for _ in 0..=n {
        if power.dim() == 0 {
            return Ok(true);
        }
        let mut next = RowSpace::new(f, n * n);
        for x in to_mats(&power) {
            for y in to_mats(&gens) {
                next.insert(flat(&x.mul(&y)));
            }
        }
        power = next;
    }
    Ok(power.dim() == 0)
}

fn split_indecomposables<F: Field>(m: &Representation<F>, rng: &mut ChaCha8Rng, out: &mut Vec<Representation<F>>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let basis = hom_space(m, m)?;
    if basis.len() == 1 {
        out.push(m.clone());
        return Ok(());
    }
    for g in &basis {
        if let Some((a, b)) = try_split(m, g)? {
            split_indecomposables(&a, rng, out)?;
            return split_indecomposables(&b, rng, out);
        }
    }
    for _ in 0..RANDOM_TRIALS {
        let g = random_combination(&basis, rng);
        if let Some((a, b)) = try_split(m, &g)? {
            split_indecomposables(&a, rng, out)?;
            return split_indecomposables(&b, rng, out);
        }
    }
    if end_is_local(m, &basis)? {
        out.push(m.clone());
        Ok(())
    } else {
        // a non-local endomorphism ring whose elements all have a single
        // eigenvalue: the semisimple quotient is not split over k
        Err(Error::NonSplitEndo)
    }
}

/// Isomorphism test for indecomposable modules: some basis element of
/// `Hom(M, N)` is invertible iff `M ≅ N`.
pub fn is_isomorphic_indecomposable<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<bool> {
    check_same(m, n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    Ok(hom_space(m, n)?.iter().any(ModuleMap::is_iso))
}

/// Decomposition into indecomposables with multiplicities.
pub fn decompose<F: Field>(m: &Representation<F>) -> Result<Vec<(Representation<F>, usize)>> {
    decompose_seeded(m, DEFAULT_SEED)
}

pub fn decompose_seeded<F: Field>(m: &Representation<F>, seed: u64) -> Result<Vec<(Representation<F>, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts = Vec::new();
    split_indecomposables(m, &mut rng, &mut parts)?;
    let mut groups: Vec<(Representation<F>, usize)> = Vec::new();
    'outer: for p in parts {
        for (rep, mult) in groups.iter_mut() {
            if is_isomorphic_indecomposable(rep, &p)? {
                *mult += 1;
                continue 'outer;
            }
        }
        groups.push((p, 1));
    }
    Ok(groups)
}

/// Indecomposable summands listed with repetition.
pub fn indecomposable_summands<F: Field>(m: &Representation<F>) -> Result<Vec<Representation<F>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut parts = Vec::new();
    split_indecomposables(m, &mut rng, &mut parts)?;
    Ok(parts)
}

pub fn is_isomorphic<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<bool> {
    is_isomorphic_seeded(m, n, DEFAULT_SEED)
}

/// Dimension vectors, then random invertible elements of `Hom(M, N)`, then a
/// comparison of decompositions.
pub fn is_isomorphic_seeded<F: Field>(m: &Representation<F>, n: &Representation<F>, seed: u64) -> Result<bool> {
    check_same(m, n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    if basis.iter().any(ModuleMap::is_iso) {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        if random_combination(&basis, &mut rng).is_iso() {
            return Ok(true);
        }
    }
    let dm = decompose_seeded(m, seed)?;
    let dn = decompose_seeded(n, seed)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for (x, k) in &dm {
        let mut found = false;
        for (j, (y, l)) in dn.iter().enumerate() {
            if !used[j] && k == l && is_isomorphic_indecomposable(x, y)? {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Remove summands isomorphic to one in `forbidden` (e.g. projectives).
pub fn strip_summands<F: Field>(m: &Representation<F>, forbidden: &[Representation<F>]) -> Result<Representation<F>> {
    if m.is_zero() {
        return Ok(m.clone());
    }
    let mut keep = Vec::new();
    for part in indecomposable_summands(m)? {
        let mut bad = false;
        for p in forbidden {
            if is_isomorphic_indecomposable(&part, p)? {
                bad = true;
                break;
            }
        }
        if !bad {
            keep.push(part);
        }
    }
    Ok(if keep.is_empty() { crate::repmod::rep::Representation::zero(m.algebra()) } else { Representation::direct_sum(&keep) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::quivalg::algebra_from_strings;

    #[test]
    fn decompose_small() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let p1 = Representation::projective(&a, 0);
        let d = decompose(&p1).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 1);
        let d = decompose(&Representation::direct_sum(&[p1.clone(), p1.clone()])).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(is_isomorphic(&d[0].0, &p1).unwrap());
    }

    #[test]
    fn isomorphism_examples() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let p1 = Representation::projective(&a, 0);
        let i2 = Representation::injective(&a, 1);
        assert!(is_isomorphic(&p1, &p1).unwrap());
        assert!(is_isomorphic(&p1, &i2).unwrap());
        assert!(!is_isomorphic(&Representation::simple(&a, 0), &Representation::simple(&a, 1)).unwrap());
    }

    #[test]
    fn regular_module_of_kronecker_like_quiver() {
        // two arrows 1 -> 2: P1 has dims (1, 2), regular module = P1 + P2
        let f = PrimeField::default();
        let a = algebra_from_strings(&f, &["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]).unwrap();
        let reg = Representation::direct_sum(&[Representation::projective(&a, 0), Representation::projective(&a, 1)]);
        let d = decompose(&reg).unwrap();
        assert_eq!(d.len(), 2);
        let mut dims: Vec<Vec<usize>> = d.iter().map(|(r, _)| r.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 2]]);
    }
}
