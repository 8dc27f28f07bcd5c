use crate::derived::complex::ComplexOfModules;
use crate::derived::projcomplex::ProjComplex;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;
use crate::homolog::{hom_differential, DEFAULT_RESOLUTION_CAP};
use crate::repmod::{
    is_injective_module, is_projective_module, lift_through, projective_cover, ModuleMap, ProjMap, Representation,
};

/// A complex of projectives `P` with a quasi-isomorphism `f: P -> X`;
/// `comparison[k]` is the component in degree `complex.lo + k`.
#[derive(Clone, Debug)]
pub struct ProjectiveReplacement<F: Field> {
    pub complex: ProjComplex<F>,
    pub comparison: Vec<ModuleMap<F>>,
}

impl<F: Field> ProjectiveReplacement<F> {
    /// The cone of the comparison map is acyclic.
    pub fn is_quasi_isomorphism(&self, x: &ComplexOfModules<F>) -> bool {
        let p = self.complex.to_complex();
        let f: Vec<ModuleMap<F>> = self
            .comparison
            .iter()
            .enumerate()
            .map(|(k, m)| m.retarget(&p.terms[k], &x.term(p.lo + k as i64)))
            .collect();
        p.is_complex() && ComplexOfModules::cone(&p, x, &f).is_acyclic()
    }
}

/// Build `P -> X` degree by degree from the top: `P^j` covers the cocycles
/// of the cone in degree `j` modulo the part already hit from `X^{j-1}`.
pub fn proj_resolve_complex_with_map<F: Field>(x: &ComplexOfModules<F>, cap: usize) -> Result<ProjectiveReplacement<F>> {
    let a = x.algebra();
    let f = a.field();
    let nv = a.num_vertices();
    let minus = f.neg(&f.one());
    let x = x.trim();
    if x.terms.is_empty() {
        return Ok(ProjectiveReplacement { complex: ProjComplex::zero(a), comparison: Vec::new() });
    }
    // built from the top down; index 0 is the highest degree
    let mut verts: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<Representation<F>> = Vec::new();
    let mut dps: Vec<ModuleMap<F>> = Vec::new();
    let mut fs: Vec<ModuleMap<F>> = Vec::new();
    let zero = Representation::zero(a);
    let mut j = x.hi();
    loop {
        if x.lo - j > cap as i64 {
            return Err(Error::AboveCap { cap });
        }
        // P^{j+1}, P^{j+2} and the maps out of them
        let p1 = reps.last().cloned().unwrap_or_else(|| zero.clone());
        let p2 = if reps.len() >= 2 { reps[reps.len() - 2].clone() } else { zero.clone() };
        let dp1 = dps.last().cloned().unwrap_or_else(|| ModuleMap::zero(&p1, &p2));
        let f1 = fs.last().cloned().unwrap_or_else(|| ModuleMap::zero(&p1, &x.term(j + 1)));
        let dx = x.differential(j);
        let cone_j = Representation::direct_sum(&[p1.clone(), x.term(j)]);
        let cone_j1 = Representation::direct_sum(&[p2.clone(), x.term(j + 1)]);
        let big = ModuleMap {
            source: cone_j.clone(),
            target: cone_j1,
            blocks: (0..nv)
                .map(|v| {
                    let top = dp1.blocks[v].scale(&minus).hstack(&Matrix::zeros(f, p2.dims()[v], x.term(j).dims()[v]));
                    let bottom = f1.blocks[v].hstack(&dx.blocks[v]);
                    top.vstack(&bottom)
                })
                .collect(),
        };
        let (z, inc) = big.kernel();
        if j < x.lo && z.is_zero() {
            break;
        }
        let dprev = x.differential(j - 1);
        let sub: Vec<Matrix<F>> = (0..nv)
            .map(|v| {
                let img = Matrix::zeros(f, p1.dims()[v], dprev.blocks[v].cols()).vstack(&dprev.blocks[v]);
                inc.blocks[v].solve(&img).expect("image of X^{j-1} consists of cocycles")
            })
            .collect();
        let (q, proj) = z.quotient(&sub);
        let cover = projective_cover(&q);
        let (pj, dp, fj) = if cover.vertices.is_empty() {
            (zero.clone(), ModuleMap::zero(&zero, &p1), ModuleMap::zero(&zero, &x.term(j)))
        } else {
            let lift = lift_through(a, &cover.vertices, &cover.map, &proj);
            let into = inc.compose(&lift);
            let pj = cover.map.source.clone();
            let mut dp = ModuleMap::zero(&pj, &p1);
            let mut fj = ModuleMap::zero(&pj, &x.term(j));
            for v in 0..nv {
                let rows = into.blocks[v].rows();
                let cols = into.blocks[v].cols();
                let np = p1.dims()[v];
                dp.blocks[v] = into.blocks[v].block(0, 0, np, cols).scale(&minus);
                fj.blocks[v] = into.blocks[v].block(np, 0, rows - np, cols);
            }
            (pj, dp, fj)
        };
        verts.push(cover.vertices);
        reps.push(pj);
        dps.push(dp);
        fs.push(fj);
        j -= 1;
    }
    // reverse into increasing degree; degree of index 0 after reversal is j + 1
    verts.reverse();
    reps.reverse();
    dps.reverse();
    fs.reverse();
    let lo = j + 1;
    let differentials: Vec<ProjMap<F>> = (0..verts.len().saturating_sub(1))
        .map(|k| ProjMap::from_module_map(a, &verts[k], &verts[k + 1], &dps[k]))
        .collect();
    let complex = ProjComplex::new(a, lo, verts, differentials)?;
    let first = complex.vertices.iter().position(|v| !v.is_empty()).unwrap_or(complex.vertices.len());
    let last = complex.vertices.iter().rposition(|v| !v.is_empty()).map_or(0, |l| l + 1);
    let comparison = if first < last { fs[first..last].to_vec() } else { Vec::new() };
    Ok(ProjectiveReplacement { complex: complex.trim(), comparison })
}

/// A bounded complex of projectives quasi-isomorphic to `X`, with
/// contractible summands cancelled.
pub fn proj_resolve_complex<F: Field>(x: &ComplexOfModules<F>) -> Result<ProjComplex<F>> {
    Ok(proj_resolve_complex_with_map(x, DEFAULT_RESOLUTION_CAP)?.complex.reduce())
}

/// A bounded complex of injectives quasi-isomorphic to `X`, returned as the
/// projective complex `Q` over the opposite algebra with `D Q ≃ X`.
pub fn inj_resolve_complex_dual<F: Field>(x: &ComplexOfModules<F>) -> Result<ProjComplex<F>> {
    proj_resolve_complex(&x.dual())
}

/// `Hom^•(P, Y)` as matrices: `hom_layout` gives the blocks of `Hom^k`.
fn hom_layout<F: Field>(p: &ProjComplex<F>, y: &ComplexOfModules<F>, k: i64) -> Vec<(i64, usize, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for i in p.lo..=p.hi() {
        let t = y.term(i + k);
        let size: usize = p.vertices[(i - p.lo) as usize].iter().map(|&v| t.dims()[v]).sum();
        if size > 0 {
            out.push((i, off, size));
            off += size;
        }
    }
    out
}

fn hom_complex_differential<F: Field>(p: &ProjComplex<F>, y: &ComplexOfModules<F>, k: i64) -> Matrix<F> {
    let f = p.algebra().field();
    let src = hom_layout(p, y, k);
    let tgt = hom_layout(p, y, k + 1);
    let rows = tgt.last().map_or(0, |(_, o, s)| o + s);
    let cols = src.last().map_or(0, |(_, o, s)| o + s);
    let mut out = Matrix::zeros(f, rows, cols);
    let sign = if k % 2 == 0 { f.neg(&f.one()) } else { f.one() };
    for &(i, roff, rsize) in &tgt {
        let vs = &p.vertices[(i - p.lo) as usize];
        // d_Y ∘ φ^i
        if let Some(&(_, coff, _)) = src.iter().find(|(ii, _, _)| *ii == i) {
            let dy = y.differential(i + k);
            let yt = y.term(i + k);
            let yt1 = y.term(i + k + 1);
            let (mut r0, mut c0) = (roff, coff);
            for &v in vs {
                out.set_block(r0, c0, &dy.blocks[v]);
                r0 += yt1.dims()[v];
                c0 += yt.dims()[v];
            }
        }
        // -(-1)^k φ^{i+1} ∘ d_P^i
        if i < p.hi() {
            if let Some(&(_, coff, csize)) = src.iter().find(|(ii, _, _)| *ii == i + 1) {
                let pm = &p.differentials[(i - p.lo) as usize];
                let m = hom_differential(pm, &y.term(i + k + 1)).scale(&sign);
                debug_assert_eq!((m.rows(), m.cols()), (rsize, csize));
                let cur = out.block(roff, coff, rsize, csize).add(&m);
                out.set_block(roff, coff, &cur);
            }
        }
    }
    out
}

/// `dim H^k Hom^•(P, Y)` for a complex of projectives `P`.
pub fn hom_from_projective<F: Field>(p: &ProjComplex<F>, y: &ComplexOfModules<F>, k: i64) -> usize {
    let dim: usize = hom_layout(p, y, k).iter().map(|(_, _, s)| s).sum();
    if dim == 0 {
        return 0;
    }
    dim - hom_complex_differential(p, y, k).rank() - hom_complex_differential(p, y, k - 1).rank()
}

/// `dim Hom_D(X, Y[j])`.
pub fn hom_d<F: Field>(x: &ComplexOfModules<F>, y: &ComplexOfModules<F>, j: i64) -> Result<usize> {
    if !x.algebra().same_as(y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let p = proj_resolve_complex(x)?;
    Ok(hom_from_projective(&p, y, j))
}

/// `ν P = D Hom(P, A)`, a complex of injectives.
pub fn nakayama_proj<F: Field>(p: &ProjComplex<F>) -> ComplexOfModules<F> {
    p.transpose().to_complex().dual()
}

/// `ν` on a complex whose terms are projective modules.
pub fn nakayama<F: Field>(x: &ComplexOfModules<F>) -> Result<ComplexOfModules<F>> {
    for (k, t) in x.terms.iter().enumerate() {
        if !is_projective_module(t) {
            return Err(Error::TermNotProjective(x.lo + k as i64));
        }
    }
    Ok(nakayama_proj(&proj_resolve_complex(x)?))
}

/// `ν⁻ = Hom(DA, -)` on a complex whose terms are injective modules.
pub fn nakayama_inv<F: Field>(x: &ComplexOfModules<F>) -> Result<ComplexOfModules<F>> {
    for (k, t) in x.terms.iter().enumerate() {
        if !is_injective_module(t) {
            return Err(Error::TermNotInjective(x.lo + k as i64));
        }
    }
    Ok(inj_resolve_complex_dual(x)?.transpose().to_complex())
}

/// One step of `𝕊_n = ν[-n]` on a projective model.
pub fn serre_n_step<F: Field>(p: &ProjComplex<F>, n: usize) -> Result<ProjComplex<F>> {
    proj_resolve_complex(&nakayama_proj(p).shift(-(n as i64)))
}

/// One step of `𝕊_n⁻ = ν⁻[n]`, returning a projective model.
pub fn serre_n_inv_step<F: Field>(x: &ComplexOfModules<F>, n: usize) -> Result<ProjComplex<F>> {
    Ok(inj_resolve_complex_dual(x)?.transpose().shift(n as i64))
}

/// Projective model of `𝕊_n^e X`.
pub fn serre_n_power_proj<F: Field>(x: &ComplexOfModules<F>, n: usize, e: i64) -> Result<ProjComplex<F>> {
    let mut p = proj_resolve_complex(x)?;
    if e >= 0 {
        for _ in 0..e {
            p = serre_n_step(&p, n)?;
        }
    } else {
        for _ in 0..-e {
            p = serre_n_inv_step(&p.to_complex(), n)?;
        }
    }
    Ok(p)
}

/// `𝕊_n^e X`: for `e > 0` a minimal complex of injectives, for `e < 0` a
/// minimal complex of projectives, and `X` itself for `e = 0`.
pub fn serre_n_power<F: Field>(x: &ComplexOfModules<F>, n: usize, e: i64) -> Result<ComplexOfModules<F>> {
    match e {
        0 => Ok(x.clone()),
        e if e > 0 => {
            let p = serre_n_power_proj(x, n, e - 1)?;
            Ok(nakayama_proj(&p).shift(-(n as i64)).trim())
        }
        e => Ok(serre_n_power_proj(x, n, e)?.to_complex()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::homolog::ext;
    use crate::quivalg::{algebra_from_strings, Algebra};
    use crate::repmod::is_isomorphic;

    fn a2() -> Algebra<Rationals> {
        algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap()
    }

    fn a3_rel() -> Algebra<Rationals> {
        algebra_from_strings(&Rationals, &["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")], &["a1*a2"]).unwrap()
    }

    #[test]
    fn resolve_simple_over_a2() {
        let a = a2();
        let x = ComplexOfModules::concentrated(&Representation::simple(&a, 0), 0);
        let r = proj_resolve_complex_with_map(&x, 8).unwrap();
        assert!(r.is_quasi_isomorphism(&x));
        let p = r.complex.reduce();
        assert_eq!((p.lo, p.vertices.clone()), (-1, vec![vec![1], vec![0]]));
        let q = proj_resolve_complex(&ComplexOfModules::concentrated(&Representation::projective(&a, 0), 0)).unwrap();
        assert_eq!((q.lo, q.vertices.clone()), (0, vec![vec![0]]));
    }

    #[test]
    fn acyclic_complex_resolves_to_zero() {
        let a = a2();
        let p = Representation::projective(&a, 0);
        let id = ModuleMap::identity(&p);
        let x = ComplexOfModules::new(&a, 0, vec![p.clone(), p], vec![id]).unwrap();
        assert!(proj_resolve_complex(&x).unwrap().is_zero());
        let l = ComplexOfModules::concentrated(&Representation::projective(&a, 1), 0);
        for j in -2..3 {
            assert_eq!(hom_d(&l, &x, j).unwrap(), 0);
        }
    }

    #[test]
    fn derived_hom_matches_ext() {
        let a = a3_rel();
        let s: Vec<_> = (0..3).map(|v| ComplexOfModules::concentrated(&Representation::simple(&a, v), 0)).collect();
        assert_eq!(hom_d(&s[0], &s[2], 2).unwrap(), 1);
        assert_eq!(hom_d(&s[0], &s[1], -1).unwrap(), 0);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let m = s[i].terms[0].clone();
                    let n = s[j].terms[0].clone();
                    assert_eq!(hom_d(&s[i], &s[j], k).unwrap(), ext(&m, &n, k as usize).unwrap());
                }
            }
        }
        let p = ComplexOfModules::concentrated(&Representation::projective(&a, 0), 0);
        let m = Representation::injective(&a, 1);
        assert_eq!(hom_d(&p, &ComplexOfModules::concentrated(&m, 0), 0).unwrap(), m.dims()[0]);
    }

    #[test]
    fn nakayama_on_projectives() {
        let a = a2();
        let p = ComplexOfModules::concentrated(&Representation::projective(&a, 0), 0);
        let n = nakayama(&p).unwrap();
        assert!(is_isomorphic(&n.terms[0], &Representation::injective(&a, 0)).unwrap());
        let back = nakayama_inv(&n).unwrap();
        assert!(is_isomorphic(&back.cohomology(0), &Representation::projective(&a, 0)).unwrap());
        let s = ComplexOfModules::concentrated(&Representation::simple(&a, 0), 0);
        assert_eq!(nakayama(&s).unwrap_err(), Error::TermNotProjective(0));
        // ν(P2 -> P1) = (I2 -> I1)
        let r = proj_resolve_complex(&s).unwrap();
        let nu = nakayama_proj(&r);
        assert!(is_isomorphic(&nu.term(-1), &Representation::injective(&a, 1)).unwrap());
        assert!(is_isomorphic(&nu.term(0), &Representation::injective(&a, 0)).unwrap());
    }

    #[test]
    fn serre_functor_examples() {
        let a = a3_rel();
        let lam = ComplexOfModules::concentrated(&Representation::direct_sum(&(0..3).map(|v| Representation::projective(&a, v)).collect::<Vec<_>>()), 0);
        let s = serre_n_power(&lam, 2, 1).unwrap();
        assert_eq!(s.cohomology_support(), Some((2, 2)));
        let d = Representation::direct_sum(&(0..3).map(|v| Representation::injective(&a, v)).collect::<Vec<_>>());
        assert!(is_isomorphic(&s.cohomology(2), &d).unwrap());
        let p3 = ComplexOfModules::concentrated(&Representation::projective(&a, 2), 0);
        let t = serre_n_power(&p3, 2, -1).unwrap();
        assert!(is_isomorphic(&t.cohomology(0), &Representation::simple(&a, 0)).unwrap());
        assert_eq!(serre_n_power(&p3, 2, 0).unwrap().terms.len(), 1);
        let back = serre_n_power(&t, 2, 1).unwrap();
        assert_eq!(back.cohomology_support(), Some((0, 0)));
        assert!(is_isomorphic(&back.cohomology(0), &p3.terms[0]).unwrap());
    }
}
